#include "ringlab/structure.hpp"

#include <algorithm>
#include <atomic>

#include "ringlab/classes.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/iso.hpp"

namespace ringlab {

namespace {

std::atomic<std::uint64_t> g_classify_probes{0};

bool all_idempotent(const FiniteRing& r) {
    for (int x = 0; x < r.order(); ++x)
        if (r.mul(x, x) != x) return false;
    return true;
}

bool is_field(const FiniteRing& r) {
    if (r.trivial() || !r.commutative()) return false;
    for (int x = 0; x < r.order(); ++x) {
        if (x == r.zero()) continue;
        bool unit = false;
        for (int y = 0; y < r.order(); ++y)
            if (r.mul(x, y) == r.one()) {
                unit = true;
                break;
            }
        if (!unit) return false;
    }
    return true;
}

bool corner_is_z3(const RingPtr& corner) {
    if (corner->order() != 3) return false;
    static const RingPtr z3 = make_zn(3);
    return find_isomorphism(corner, z3).has_value();
}

}  // namespace

std::uint64_t classify_probe_count() {
    return g_classify_probes.load(std::memory_order_relaxed);
}

const char* structure_tag_name(StructureTag t) {
    switch (t) {
        case StructureTag::Field: return "field";
        case StructureTag::Boolean: return "boolean";
        case StructureTag::Z3: return "z3";
        case StructureTag::Z3xBoolean: return "z3_x_boolean";
        case StructureTag::Z3xZ3: return "z3_x_z3";
        case StructureTag::Z3xZ3xBoolean: return "z3_x_z3_x_boolean";
        case StructureTag::DRing: return "d_ring";
        case StructureTag::Other: return "other";
    }
    return "?";
}

std::vector<std::string> StructureClass::tag_names() const {
    std::vector<std::string> out;
    for (StructureTag t : tags) out.push_back(structure_tag_name(t));
    return out;
}

std::vector<int> central_idempotents(const FiniteRing& r, Exec exec) {
    ElementSet idem = compute_class(r, ClassRole::Idempotents, exec);
    ElementSet center = compute_class(r, ClassRole::Center, exec);
    std::vector<int> out;
    for (int e : idem.members)
        if (e != r.zero() && e != r.one() && center.contains(e)) out.push_back(e);
    return out;
}

PeirceSplit peirce_split(const RingPtr& r, int f) {
    if (f < 0 || f >= r->order()) throw ValidationError("peirce_split: element out of range");
    if (r->mul(f, f) != f) throw ValidationError("peirce_split: element is not idempotent");
    if (f == r->zero() || f == r->one())
        throw ValidationError("peirce_split: idempotent must be nontrivial");
    for (int a = 0; a < r->order(); ++a)
        if (r->mul(f, a) != r->mul(a, f))
            throw ValidationError("peirce_split: idempotent is not central");

    const int g = r->sub(r->one(), f);  // complementary idempotent

    auto build_corner = [&](int e) {
        std::vector<int> members;
        std::vector<char> seen(r->order(), 0);
        for (int x = 0; x < r->order(); ++x) {
            const int ex = r->mul(e, x);
            if (!seen[ex]) {
                seen[ex] = 1;
                members.push_back(ex);
            }
        }
        std::sort(members.begin(), members.end());
        const int m = static_cast<int>(members.size());
        std::vector<int> pos(r->order(), -1);
        for (int i = 0; i < m; ++i) pos[members[i]] = i;

        std::vector<int32_t> add(static_cast<std::size_t>(m) * m);
        std::vector<int32_t> mul(static_cast<std::size_t>(m) * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                add[static_cast<std::size_t>(i) * m + j] = pos[r->add(members[i], members[j])];
                mul[static_cast<std::size_t>(i) * m + j] = pos[r->mul(members[i], members[j])];
            }
        std::vector<std::string> labels(m);
        for (int i = 0; i < m; ++i) labels[i] = r->label(members[i]);
        auto ring = FiniteRing::create(m, std::move(add), std::move(mul), pos[r->zero()],
                                       pos[e], std::move(labels),
                                       "corner(" + r->provenance() + ", e=" + std::to_string(e) + ")");
        return std::make_pair(ring, pos);
    };

    auto [corner, pos_f] = build_corner(f);
    auto [co_corner, pos_g] = build_corner(g);

    if (static_cast<std::int64_t>(corner->order()) * co_corner->order() != r->order())
        throw ValidationError("peirce_split: corner sizes do not multiply to the ring order");

    PeirceSplit split;
    split.idempotent = f;
    split.corner = corner;
    split.co_corner = co_corner;
    split.corner_of.resize(r->order());
    split.co_corner_of.resize(r->order());
    for (int x = 0; x < r->order(); ++x) {
        split.corner_of[x] = pos_f[r->mul(f, x)];
        split.co_corner_of[x] = pos_g[r->mul(g, x)];
    }

    // Verify the pairing x -> (fx, (1-f)x) as a ring isomorphism onto the
    // direct product of the corners.
    auto product = direct_product(corner, co_corner, r->order());
    std::vector<int32_t> image(r->order());
    for (int x = 0; x < r->order(); ++x)
        image[x] = split.corner_of[x] * co_corner->order() + split.co_corner_of[x];
    RingMap::create(r, product, std::move(image), true);

    return split;
}

namespace {

// Recursion depth 1 is enough: corners are strictly smaller and the only
// recursive tag (z3_x_z3_x_boolean) peels one Z3 factor per step.
StructureClass classify_impl(const RingPtr& r, Exec exec, int depth) {
    if (r->trivial()) throw ValidationError("classify rejects the trivial ring");
    g_classify_probes.fetch_add(1, std::memory_order_relaxed);

    StructureClass out;

    if (is_field(*r)) {
        out.tags.insert(StructureTag::Field);
        out.field_order = r->order();
        if (r->order() == 3) out.tags.insert(StructureTag::Z3);
    }
    if (all_idempotent(*r)) out.tags.insert(StructureTag::Boolean);

    {
        ElementSet nil = compute_class(*r, ClassRole::Nilpotents, exec);
        ElementSet zd = compute_class(*r, ClassRole::ZeroDivisors, exec);
        if (std::includes(nil.members.begin(), nil.members.end(), zd.members.begin(),
                          zd.members.end()))
            out.tags.insert(StructureTag::DRing);
    }

    for (int f : central_idempotents(*r, exec)) {
        const bool have_all = out.has(StructureTag::Z3xBoolean) && out.has(StructureTag::Z3xZ3) &&
                              out.has(StructureTag::Z3xZ3xBoolean);
        if (have_all) break;
        PeirceSplit split = peirce_split(r, f);
        if (!corner_is_z3(split.corner)) continue;
        if (!out.has(StructureTag::Z3xBoolean) && all_idempotent(*split.co_corner)) {
            out.tags.insert(StructureTag::Z3xBoolean);
            out.split_witness[StructureTag::Z3xBoolean] = f;
        }
        if (!out.has(StructureTag::Z3xZ3) && corner_is_z3(split.co_corner)) {
            out.tags.insert(StructureTag::Z3xZ3);
            out.split_witness[StructureTag::Z3xZ3] = f;
        }
        if (!out.has(StructureTag::Z3xZ3xBoolean) && depth == 0 && !split.co_corner->trivial() &&
            classify_impl(split.co_corner, exec, depth + 1).has(StructureTag::Z3xBoolean)) {
            out.tags.insert(StructureTag::Z3xZ3xBoolean);
            out.split_witness[StructureTag::Z3xZ3xBoolean] = f;
        }
    }

    if (out.tags.empty()) out.tags.insert(StructureTag::Other);
    return out;
}

}  // namespace

StructureClass classify(const RingPtr& r, Exec exec) { return classify_impl(r, exec, 0); }

StructureClass classify_mod_j(const RingPtr& r, Exec exec) {
    ElementSet j = jacobson_radical(*r, exec);
    auto q = quotient(r, j.members);
    return classify(q.ring, exec);
}

}  // namespace ringlab
