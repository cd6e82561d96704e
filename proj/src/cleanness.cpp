#include "ringlab/cleanness.hpp"

#include <atomic>

namespace ringlab {

namespace {

std::atomic<std::uint64_t> g_decomposition_probes{0};

}  // namespace

std::uint64_t decomposition_probe_count() {
    return g_decomposition_probes.load(std::memory_order_relaxed);
}

const char* ring_mode_name(RingMode m) {
    switch (m) {
        case RingMode::NilClean: return "nil_clean";
        case RingMode::WeaklyNilClean: return "weakly_nil_clean";
        case RingMode::UniquelyNilClean: return "uniquely_nil_clean";
        case RingMode::UniquelyWeaklyNilClean: return "uniquely_weakly_nil_clean";
        case RingMode::UniquelyWeaklyDNilClean: return "uniquely_weakly_D_nil_clean";
        case RingMode::UniquelyDNilClean: return "uniquely_D_nil_clean";
        case RingMode::ZeroDivVeryIdemOrNilpotent: return "zerodiv_very_idem_or_nilpotent";
    }
    return "?";
}

std::optional<RingMode> ring_mode_from_name(const std::string& name) {
    for (RingMode m : {RingMode::NilClean, RingMode::WeaklyNilClean, RingMode::UniquelyNilClean,
                       RingMode::UniquelyWeaklyNilClean, RingMode::UniquelyWeaklyDNilClean,
                       RingMode::UniquelyDNilClean, RingMode::ZeroDivVeryIdemOrNilpotent})
        if (name == ring_mode_name(m)) return m;
    return std::nullopt;
}

std::vector<Decomposition> decompositions(const ClassContext& ctx, int a, CleanFlavor flavor) {
    g_decomposition_probes.fetch_add(1, std::memory_order_relaxed);
    const FiniteRing& r = *ctx.ring;
    // Scanning the (small) very-idempotent set and testing a - e for
    // nilpotence beats pairing nilpotents with idempotents.
    const ElementSet& candidates =
        flavor == CleanFlavor::NilClean ? ctx.idempotents : ctx.very_idempotents;

    std::vector<Decomposition> out;
    for (int e : candidates.members) {
        const int w = r.sub(a, e);
        if (!ctx.is_nilpotent[w]) continue;
        const int sq = r.mul(e, e);
        const bool plus = sq == e;
        const bool minus = sq == r.neg(e);
        Sign sign = plus && minus ? Sign::Both : (plus ? Sign::Plus : Sign::Minus);
        out.push_back(Decomposition{a, e, sign, w, ctx.nil_index[w]});
    }
    // Candidates ascend, and w is determined by e, so `out` is sorted by
    // (e, w) already.
    return out;
}

std::vector<Decomposition> decompositions(const FiniteRing& r, int a, CleanFlavor flavor) {
    return decompositions(ClassContext::build(r), a, flavor);
}

ElementVerdict element_verdict(const ClassContext& ctx, int a, ElementMode mode) {
    const FiniteRing& r = *ctx.ring;
    const bool weak =
        mode == ElementMode::WeaklyNilClean || mode == ElementMode::UniquelyWeaklyNilClean;
    const bool unique =
        mode == ElementMode::UniquelyNilClean || mode == ElementMode::UniquelyWeaklyNilClean;

    ElementVerdict v;
    v.element = a;
    v.mode = mode;
    v.decompositions =
        decompositions(ctx, a, weak ? CleanFlavor::WeaklyNilClean : CleanFlavor::NilClean);

    if (v.decompositions.empty()) {
        v.holds = false;
        return v;
    }
    if (!unique) {
        v.holds = true;
        return v;
    }
    v.holds = true;
    const auto& first = v.decompositions.front();
    for (std::size_t i = 1; i < v.decompositions.size(); ++i) {
        const auto& d = v.decompositions[i];
        const bool same = weak ? r.mul(d.very_idempotent, d.very_idempotent) ==
                                     r.mul(first.very_idempotent, first.very_idempotent)
                               : d.very_idempotent == first.very_idempotent;
        if (!same) {
            v.holds = false;
            v.uniqueness_witness = std::make_pair(first, d);
            break;
        }
    }
    return v;
}

ElementVerdict element_verdict(const FiniteRing& r, int a, ElementMode mode) {
    return element_verdict(ClassContext::build(r), a, mode);
}

namespace {

// Quantifies `ok(x)` over `domain`, returning the smallest failing index.
template <typename Ok>
RingVerdict quantify(const std::vector<int>& domain, Exec exec, Ok ok) {
    const int m = static_cast<int>(domain.size());
    int bad = -1;

#ifdef _OPENMP
    if (exec == Exec::Parallel) {
        std::vector<char> fail(m, 0);
#pragma omp parallel for schedule(dynamic, 8)
        for (int i = 0; i < m; ++i) fail[i] = ok(domain[i]) ? 0 : 1;
        for (int i = 0; i < m; ++i)
            if (fail[i]) {
                bad = domain[i];
                break;
            }
    } else
#endif
    {
        (void)exec;
        for (int i = 0; i < m; ++i)
            if (!ok(domain[i])) {
                bad = domain[i];
                break;
            }
    }

    RingVerdict v;
    v.holds = bad < 0;
    v.counterexample = bad;
    return v;
}

}  // namespace

RingVerdict ring_predicate(const ClassContext& ctx, RingMode mode, Exec exec) {
    const FiniteRing& r = *ctx.ring;
    if (r.trivial()) throw ValidationError("ring_predicate rejects the trivial ring");

    std::vector<int> all;
    const std::vector<int>* domain = nullptr;
    ElementMode em = ElementMode::NilClean;
    switch (mode) {
        case RingMode::NilClean:
            em = ElementMode::NilClean;
            break;
        case RingMode::WeaklyNilClean:
            em = ElementMode::WeaklyNilClean;
            break;
        case RingMode::UniquelyNilClean:
            em = ElementMode::UniquelyNilClean;
            break;
        case RingMode::UniquelyWeaklyNilClean:
            em = ElementMode::UniquelyWeaklyNilClean;
            break;
        case RingMode::UniquelyWeaklyDNilClean:
            em = ElementMode::UniquelyWeaklyNilClean;
            domain = &ctx.zero_divisors.members;
            break;
        case RingMode::UniquelyDNilClean:
            em = ElementMode::UniquelyNilClean;
            domain = &ctx.zero_divisors.members;
            break;
        case RingMode::ZeroDivVeryIdemOrNilpotent:
            return quantify(ctx.zero_divisors.members, exec, [&](int a) {
                return ctx.very_idempotents.contains(a) || ctx.is_nilpotent[a];
            });
    }
    if (!domain) {
        all.resize(r.order());
        for (int i = 0; i < r.order(); ++i) all[i] = i;
        domain = &all;
    }
    return quantify(*domain, exec, [&](int a) { return element_verdict(ctx, a, em).holds; });
}

RingVerdict ring_predicate(const FiniteRing& r, RingMode mode, Exec exec) {
    return ring_predicate(ClassContext::build(r, exec), mode, exec);
}

UnitFormReport unit_form_check(const ClassContext& ctx) {
    const FiniteRing& r = *ctx.ring;
    if (r.trivial()) throw ValidationError("unit_form_check rejects the trivial ring");

    std::vector<char> form(r.order(), 0);
    for (int x : ctx.nilpotents.members) {
        form[r.add(x, r.one())] = 1;
        form[r.sub(x, r.one())] = 1;
    }
    std::vector<char> is_unit(r.order(), 0);
    for (int u : ctx.units.members) is_unit[u] = 1;

    UnitFormReport rep;
    rep.holds = true;
    for (int u : ctx.units.members)
        if (!form[u]) {
            rep.holds = false;
            rep.bad_unit = u;
            break;
        }
    for (int x = 0; x < r.order() && rep.bad_form_element < 0; ++x)
        if (form[x] && !is_unit[x]) {
            rep.holds = false;
            rep.bad_form_element = x;
        }
    return rep;
}

UnitFormReport unit_form_check(const FiniteRing& r, Exec exec) {
    return unit_form_check(ClassContext::build(r, exec));
}

}  // namespace ringlab
