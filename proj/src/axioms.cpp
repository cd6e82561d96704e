#include "ringlab/axioms.hpp"

#include <cstdio>

namespace ringlab {

namespace {

struct Tables {
    int n;
    std::span<const int32_t> add;
    std::span<const int32_t> mul;
    int zero;
    int one;

    int a(int x, int y) const { return add[static_cast<std::size_t>(x) * n + y]; }
    int m(int x, int y) const { return mul[static_cast<std::size_t>(x) * n + y]; }
};

using Triple = std::array<int, 3>;
constexpr Triple kNone{-1, -1, -1};

// Per-row scan over (b, c) returning the first failing pair for a fixed a,
// so the outer loop can be parallelized over a while keeping the global
// lexicographic minimum. `check` returns true when the triple is fine.
template <typename Check>
Triple first_failure(const Tables& t, Exec exec, Check check) {
    const int n = t.n;

#ifdef _OPENMP
    if (exec == Exec::Parallel) {
        std::vector<Triple> row(n, kNone);
#pragma omp parallel for schedule(dynamic, 1)
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                for (int c = 0; c < n; ++c) {
                    if (!check(a, b, c)) {
                        row[a] = {a, b, c};
                        b = n;  // break both loops
                        break;
                    }
                }
            }
        }
        for (int a = 0; a < n; ++a)
            if (row[a] != kNone) return row[a];
        return kNone;
    }
#else
    (void)exec;
#endif

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (!check(a, b, c)) return {a, b, c};
    return kNone;
}

template <typename Check>
Triple first_failure_2d(const Tables& t, Exec exec, Check check) {
    const int n = t.n;

#ifdef _OPENMP
    if (exec == Exec::Parallel) {
        std::vector<Triple> row(n, kNone);
#pragma omp parallel for schedule(static)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!check(a, b)) {
                    row[a] = {a, b, -1};
                    break;
                }
        for (int a = 0; a < n; ++a)
            if (row[a] != kNone) return row[a];
        return kNone;
    }
#else
    (void)exec;
#endif

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!check(a, b)) return {a, b, -1};
    return kNone;
}

std::string describe(const Tables& t, Axiom ax, const Triple& w) {
    char buf[160];
    switch (ax) {
        case Axiom::AddCommutative:
            std::snprintf(buf, sizeof buf, "add(%d,%d) != add(%d,%d)", w[0], w[1], w[1], w[0]);
            break;
        case Axiom::AddAssociative:
            std::snprintf(buf, sizeof buf, "(%d+%d)+%d != %d+(%d+%d)", w[0], w[1], w[2], w[0], w[1], w[2]);
            break;
        case Axiom::ZeroIdentity:
            std::snprintf(buf, sizeof buf, "zero fails as additive identity at %d", w[0]);
            break;
        case Axiom::AdditiveInverse:
            std::snprintf(buf, sizeof buf, "element %d has no additive inverse", w[0]);
            break;
        case Axiom::OneIdentity:
            std::snprintf(buf, sizeof buf, "one fails as multiplicative identity at %d", w[0]);
            break;
        case Axiom::MulAssociative:
            std::snprintf(buf, sizeof buf, "(%d*%d)*%d != %d*(%d*%d)", w[0], w[1], w[2], w[0], w[1], w[2]);
            break;
        case Axiom::LeftDistributive:
            std::snprintf(buf, sizeof buf, "%d*(%d+%d) != %d*%d + %d*%d", w[0], w[1], w[2], w[0], w[1], w[0], w[2]);
            break;
        case Axiom::RightDistributive:
            std::snprintf(buf, sizeof buf, "(%d+%d)*%d != %d*%d + %d*%d", w[0], w[1], w[2], w[0], w[2], w[1], w[2]);
            break;
        default:
            buf[0] = '\0';
            break;
    }
    (void)t;
    return buf;
}

}  // namespace

const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::TableShape: return "table_shape";
        case Axiom::ZeroOneDistinct: return "zero_one_distinct";
        case Axiom::AddCommutative: return "add_commutative";
        case Axiom::AddAssociative: return "add_associative";
        case Axiom::ZeroIdentity: return "zero_identity";
        case Axiom::AdditiveInverse: return "additive_inverse";
        case Axiom::OneIdentity: return "one_identity";
        case Axiom::MulAssociative: return "mul_associative";
        case Axiom::LeftDistributive: return "left_distributive";
        case Axiom::RightDistributive: return "right_distributive";
    }
    return "?";
}

AxiomReport validate_axioms(int order,
                            std::span<const int32_t> add,
                            std::span<const int32_t> mul,
                            int zero,
                            int one,
                            Exec exec) {
    auto fail = [](Axiom ax, Triple w, std::string msg) {
        AxiomReport r;
        r.ok = false;
        r.violation = AxiomViolation{ax, w, std::move(msg)};
        return r;
    };

    if (order < 1)
        return fail(Axiom::TableShape, kNone, "order must be positive");
    const std::size_t want = static_cast<std::size_t>(order) * order;
    if (add.size() != want || mul.size() != want)
        return fail(Axiom::TableShape, kNone, "tables must be order x order");
    for (std::size_t i = 0; i < want; ++i)
        if (add[i] < 0 || add[i] >= order || mul[i] < 0 || mul[i] >= order)
            return fail(Axiom::TableShape, {static_cast<int>(i / order), static_cast<int>(i % order), -1},
                        "table entry out of range");
    if (zero < 0 || zero >= order || one < 0 || one >= order)
        return fail(Axiom::TableShape, kNone, "zero/one index out of range");
    if (order >= 2 && zero == one)
        return fail(Axiom::ZeroOneDistinct, {zero, one, -1}, "zero equals one in a ring of order >= 2");

    Tables t{order, add, mul, zero, one};

    Triple w = first_failure_2d(t, exec, [&](int a, int b) {
        return t.a(a, b) == t.a(b, a);
    });
    if (w != kNone) return fail(Axiom::AddCommutative, w, describe(t, Axiom::AddCommutative, w));

    w = first_failure(t, exec, [&](int a, int b, int c) {
        return t.a(t.a(a, b), c) == t.a(a, t.a(b, c));
    });
    if (w != kNone) return fail(Axiom::AddAssociative, w, describe(t, Axiom::AddAssociative, w));

    for (int a = 0; a < order; ++a)
        if (t.a(zero, a) != a || t.a(a, zero) != a)
            return fail(Axiom::ZeroIdentity, {a, -1, -1}, describe(t, Axiom::ZeroIdentity, {a, -1, -1}));

    for (int a = 0; a < order; ++a) {
        bool found = false;
        for (int b = 0; b < order; ++b)
            if (t.a(a, b) == zero) {
                found = true;
                break;
            }
        if (!found)
            return fail(Axiom::AdditiveInverse, {a, -1, -1}, describe(t, Axiom::AdditiveInverse, {a, -1, -1}));
    }

    for (int a = 0; a < order; ++a)
        if (t.m(one, a) != a || t.m(a, one) != a)
            return fail(Axiom::OneIdentity, {a, -1, -1}, describe(t, Axiom::OneIdentity, {a, -1, -1}));

    w = first_failure(t, exec, [&](int a, int b, int c) {
        return t.m(t.m(a, b), c) == t.m(a, t.m(b, c));
    });
    if (w != kNone) return fail(Axiom::MulAssociative, w, describe(t, Axiom::MulAssociative, w));

    w = first_failure(t, exec, [&](int a, int b, int c) {
        return t.m(a, t.a(b, c)) == t.a(t.m(a, b), t.m(a, c));
    });
    if (w != kNone) return fail(Axiom::LeftDistributive, w, describe(t, Axiom::LeftDistributive, w));

    w = first_failure(t, exec, [&](int a, int b, int c) {
        return t.m(t.a(a, b), c) == t.a(t.m(a, c), t.m(b, c));
    });
    if (w != kNone) return fail(Axiom::RightDistributive, w, describe(t, Axiom::RightDistributive, w));

    AxiomReport ok;
    ok.ok = true;
    return ok;
}

AxiomReport validate_axioms(const FiniteRing& r, Exec exec) {
    return validate_axioms(r.order(), r.add_table(), r.mul_table(), r.zero(), r.one(), exec);
}

}  // namespace ringlab
