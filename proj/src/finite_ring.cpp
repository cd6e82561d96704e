#include "ringlab/finite_ring.hpp"

#include <algorithm>

namespace ringlab {

namespace {

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
}

void check_table(const std::vector<int32_t>& t, int n, const char* which) {
    if (t.size() != static_cast<std::size_t>(n) * n)
        throw ValidationError(std::string(which) + " table has wrong shape");
    for (int32_t v : t)
        if (v < 0 || v >= n)
            throw ValidationError(std::string(which) + " table entry out of range");
}

}  // namespace

RingPtr FiniteRing::create(int order,
                           std::vector<int32_t> add,
                           std::vector<int32_t> mul,
                           int zero,
                           int one,
                           std::vector<std::string> labels,
                           std::string provenance) {
    if (order < 1) throw ValidationError("ring order must be positive");
    check_table(add, order, "add");
    check_table(mul, order, "mul");
    if (zero < 0 || zero >= order || one < 0 || one >= order)
        throw ValidationError("zero/one index out of range");
    if (order >= 2 && zero == one)
        throw ValidationError("zero and one must differ for order >= 2");

    auto r = std::shared_ptr<FiniteRing>(new FiniteRing());
    r->n_ = order;
    r->zero_ = zero;
    r->one_ = one;
    r->add_ = std::move(add);
    r->mul_ = std::move(mul);
    r->labels_ = labels.empty() ? default_labels(order) : std::move(labels);
    if (r->labels_.size() != static_cast<std::size_t>(order))
        throw ValidationError("label count does not match order");
    r->provenance_ = std::move(provenance);

    // Identity rows and negatives; cheap sanity that catches most
    // constructor bugs without the O(n^3) axiom scan.
    r->neg_.assign(order, -1);
    for (int a = 0; a < order; ++a) {
        if (r->add(zero, a) != a || r->add(a, zero) != a)
            throw ValidationError("zero is not an additive identity");
        if (r->mul(one, a) != a || r->mul(a, one) != a)
            throw ValidationError("one is not a multiplicative identity");
        for (int b = 0; b < order; ++b) {
            if (r->add(a, b) == zero) {
                r->neg_[a] = b;
                break;
            }
        }
        if (r->neg_[a] < 0)
            throw ValidationError("element without additive inverse");
    }

    r->commutative_ = true;
    for (int a = 0; a < order && r->commutative_; ++a)
        for (int b = a + 1; b < order; ++b)
            if (r->mul(a, b) != r->mul(b, a)) {
                r->commutative_ = false;
                break;
            }

    return r;
}

int FiniteRing::pow(int a, int k) const {
    int acc = one_;
    for (int i = 0; i < k; ++i) acc = mul(acc, a);
    return acc;
}

int FiniteRing::additive_order(int a) const {
    int acc = a;
    int k = 1;
    while (acc != zero_) {
        acc = add(acc, a);
        ++k;
    }
    return k;
}

bool FiniteRing::same_tables(const FiniteRing& other) const {
    return n_ == other.n_ && zero_ == other.zero_ && one_ == other.one_ &&
           add_ == other.add_ && mul_ == other.mul_;
}

GroupPtr FiniteGroup::create(int order,
                             std::vector<int32_t> cayley,
                             int identity,
                             std::vector<std::string> labels,
                             std::string name) {
    if (order < 1) throw ValidationError("group order must be positive");
    check_table(cayley, order, "cayley");
    if (identity < 0 || identity >= order)
        throw ValidationError("identity index out of range");

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->n_ = order;
    g->identity_ = identity;
    g->cayley_ = std::move(cayley);
    g->labels_ = labels.empty() ? default_labels(order) : std::move(labels);
    if (g->labels_.size() != static_cast<std::size_t>(order))
        throw ValidationError("label count does not match order");
    g->name_ = std::move(name);

    for (int a = 0; a < order; ++a)
        if (g->op(identity, a) != a || g->op(a, identity) != a)
            throw ValidationError("group identity law fails");
    g->inv_.assign(order, -1);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b)
            if (g->op(a, b) == identity && g->op(b, a) == identity) {
                g->inv_[a] = b;
                break;
            }
        if (g->inv_[a] < 0) throw ValidationError("group element without inverse");
    }
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (g->op(g->op(a, b), c) != g->op(a, g->op(b, c)))
                    throw ValidationError("group operation not associative");

    return g;
}

RingMap RingMap::create(RingPtr source,
                        RingPtr target,
                        std::vector<int32_t> image,
                        bool require_bijective) {
    if (!source || !target) throw ValidationError("ring map needs source and target");
    const int n = source->order();
    if (image.size() != static_cast<std::size_t>(n))
        throw ValidationError("ring map image has wrong size");
    for (int32_t v : image)
        if (v < 0 || v >= target->order())
            throw ValidationError("ring map image entry out of range");

    if (image[source->zero()] != target->zero())
        throw ValidationError("ring map does not preserve zero");
    if (image[source->one()] != target->one())
        throw ValidationError("ring map does not preserve one");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (image[source->add(a, b)] != target->add(image[a], image[b]))
                throw ValidationError("ring map does not preserve addition");
            if (image[source->mul(a, b)] != target->mul(image[a], image[b]))
                throw ValidationError("ring map does not preserve multiplication");
        }

    bool bijective = false;
    if (source->order() == target->order()) {
        std::vector<char> seen(target->order(), 0);
        bijective = true;
        for (int32_t v : image) {
            if (seen[v]) {
                bijective = false;
                break;
            }
            seen[v] = 1;
        }
    }
    if (require_bijective && !bijective)
        throw ValidationError("ring map is not a bijection");

    RingMap m;
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.image_ = std::move(image);
    m.bijective_ = bijective;
    return m;
}

}  // namespace ringlab
