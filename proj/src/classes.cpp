#include "ringlab/classes.hpp"

#include <algorithm>

#include "ringlab/construct.hpp"

namespace ringlab {

const char* class_role_name(ClassRole r) {
    switch (r) {
        case ClassRole::Idempotents: return "idempotents";
        case ClassRole::NegIdempotents: return "neg_idempotents";
        case ClassRole::VeryIdempotents: return "very_idempotents";
        case ClassRole::Nilpotents: return "nilpotents";
        case ClassRole::Units: return "units";
        case ClassRole::ZeroDivisors: return "zero_divisors";
        case ClassRole::Center: return "center";
        case ClassRole::Jacobson: return "jacobson";
        case ClassRole::PrimeRadical: return "prime_radical";
        case ClassRole::Custom: return "custom";
    }
    return "?";
}

std::optional<ClassRole> class_role_from_name(const std::string& name) {
    for (ClassRole r : {ClassRole::Idempotents, ClassRole::NegIdempotents,
                        ClassRole::VeryIdempotents, ClassRole::Nilpotents, ClassRole::Units,
                        ClassRole::ZeroDivisors, ClassRole::Center, ClassRole::Jacobson,
                        ClassRole::PrimeRadical})
        if (name == class_role_name(r)) return r;
    return std::nullopt;
}

bool ElementSet::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

int ElementSet::aux_for(int x) const {
    auto it = std::lower_bound(members.begin(), members.end(), x);
    if (it == members.end() || *it != x || aux.empty()) return -1;
    return aux[static_cast<std::size_t>(it - members.begin())];
}

int nilpotency_index(const FiniteRing& r, int x) {
    int acc = x;
    for (int k = 1; k <= r.order(); ++k) {
        if (acc == r.zero()) return k;
        acc = r.mul(acc, x);
    }
    return 0;
}

namespace {

// Evaluates `probe(x)` for every element, in parallel when requested, and
// assembles the ascending member list. probe returns the aux payload + 1,
// or 0 for non-members (so payloads can carry 0 naturally).
template <typename Probe>
ElementSet scan_elements(const FiniteRing& r, ClassRole role, bool keep_aux, Exec exec,
                         Probe probe) {
    const int n = r.order();
    std::vector<int> verdict(n, 0);

#ifdef _OPENMP
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (int x = 0; x < n; ++x) verdict[x] = probe(x);
    } else
#endif
    {
        (void)exec;
        for (int x = 0; x < n; ++x) verdict[x] = probe(x);
    }

    ElementSet out;
    out.role = role;
    for (int x = 0; x < n; ++x)
        if (verdict[x] != 0) {
            out.members.push_back(x);
            if (keep_aux) out.aux.push_back(verdict[x] - 1);
        }
    return out;
}

ElementSet units_class(const FiniteRing& r, Exec exec) {
    return scan_elements(r, ClassRole::Units, true, exec, [&](int x) {
        for (int y = 0; y < r.order(); ++y)
            if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) return y + 1;
        return 0;
    });
}

}  // namespace

ElementSet compute_class(const FiniteRing& r, ClassRole role, Exec exec) {
    const int n = r.order();
    switch (role) {
        case ClassRole::Idempotents:
            return scan_elements(r, role, false, exec,
                                 [&](int e) { return r.mul(e, e) == e ? 1 : 0; });
        case ClassRole::NegIdempotents:
            return scan_elements(r, role, false, exec,
                                 [&](int e) { return r.mul(e, e) == r.neg(e) ? 1 : 0; });
        case ClassRole::VeryIdempotents:
            return scan_elements(r, role, false, exec, [&](int e) {
                return (r.mul(e, e) == e || r.mul(e, e) == r.neg(e)) ? 1 : 0;
            });
        case ClassRole::Nilpotents:
            return scan_elements(r, role, true, exec, [&](int x) {
                const int k = nilpotency_index(r, x);
                return k == 0 ? 0 : k + 1;
            });
        case ClassRole::Units:
            return units_class(r, exec);
        case ClassRole::ZeroDivisors:
            return scan_elements(r, role, false, exec, [&](int a) {
                bool right = false, left = false;
                for (int b = 0; b < n && !right; ++b)
                    if (b != r.zero() && r.mul(a, b) == r.zero()) right = true;
                for (int c = 0; c < n && !left; ++c)
                    if (c != r.zero() && r.mul(c, a) == r.zero()) left = true;
                return (right && left) ? 1 : 0;
            });
        case ClassRole::Center:
            return scan_elements(r, role, false, exec, [&](int x) {
                for (int a = 0; a < n; ++a)
                    if (r.mul(x, a) != r.mul(a, x)) return 0;
                return 1;
            });
        case ClassRole::Jacobson:
            return jacobson_radical(r, exec);
        case ClassRole::PrimeRadical:
            return prime_radical(r, exec);
        case ClassRole::Custom:
            break;
    }
    throw Error("compute_class: unsupported role");
}

ElementSet jacobson_radical(const FiniteRing& r, Exec exec) {
    const int n = r.order();
    ElementSet units = units_class(r, exec);
    std::vector<char> is_unit(n, 0);
    for (int u : units.members) is_unit[u] = 1;

    ElementSet out = scan_elements(r, ClassRole::Jacobson, false, exec, [&](int x) {
        for (int a = 0; a < n; ++a)
            if (!is_unit[r.sub(r.one(), r.mul(a, x))]) return 0;
        return 1;
    });

    if (check_ideal(r, out.members))
        throw Error("internal error: computed Jacobson radical is not an ideal");
    return out;
}

ElementSet prime_radical(const FiniteRing& r, Exec exec) {
    const int n = r.order();

    // Successor sets of the graph x -> x*r*x, deduplicated and sorted.
    std::vector<std::vector<int>> succ(n);
#ifdef _OPENMP
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (int x = 0; x < n; ++x) {
            std::vector<char> seen(n, 0);
            for (int a = 0; a < n; ++a) seen[r.mul(r.mul(x, a), x)] = 1;
            for (int y = 0; y < n; ++y)
                if (seen[y]) succ[x].push_back(y);
        }
    } else
#endif
    {
        std::vector<char> seen(n);
        for (int x = 0; x < n; ++x) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int a = 0; a < n; ++a) seen[r.mul(r.mul(x, a), x)] = 1;
            for (int y = 0; y < n; ++y)
                if (seen[y]) succ[x].push_back(y);
        }
    }

    // Iterative Tarjan SCC.
    std::vector<int> comp(n, -1), low(n, 0), disc(n, -1), stack_mem;
    std::vector<char> on_stack(n, 0);
    int timer = 0, ncomp = 0;
    struct Frame {
        int v;
        std::size_t child;
    };
    std::vector<Frame> frames;
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            auto& f = frames.back();
            const int v = f.v;
            if (f.child == 0) {
                disc[v] = low[v] = timer++;
                stack_mem.push_back(v);
                on_stack[v] = 1;
            }
            if (f.child < succ[v].size()) {
                const int w = succ[v][f.child++];
                if (disc[w] < 0) {
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                if (low[v] == disc[v]) {
                    while (true) {
                        const int w = stack_mem.back();
                        stack_mem.pop_back();
                        on_stack[w] = 0;
                        comp[w] = ncomp;
                        if (w == v) break;
                    }
                    ++ncomp;
                }
                frames.pop_back();
                if (!frames.empty()) {
                    const int parent = frames.back().v;
                    low[parent] = std::min(low[parent], low[v]);
                }
            }
        }
    }

    // Tarjan numbers components in reverse topological order, so successors
    // of a component always carry a smaller component id.
    std::vector<int> comp_size(ncomp, 0);
    for (int v = 0; v < n; ++v) ++comp_size[comp[v]];
    std::vector<char> bad(ncomp, 0);
    for (int v = 0; v < n; ++v) {
        const int c = comp[v];
        if (bad[c]) continue;
        const bool self_loop = std::binary_search(succ[v].begin(), succ[v].end(), v);
        if ((comp_size[c] > 1 || self_loop) && !(comp_size[c] == 1 && v == r.zero()))
            bad[c] = 1;
    }
    for (int c = 0; c < ncomp; ++c) {
        if (bad[c]) continue;
        for (int v = 0; v < n && !bad[c]; ++v) {
            if (comp[v] != c) continue;
            for (int w : succ[v])
                if (bad[comp[w]]) {
                    bad[c] = 1;
                    break;
                }
        }
    }

    ElementSet out;
    out.role = ClassRole::PrimeRadical;
    for (int v = 0; v < n; ++v)
        if (!bad[comp[v]]) out.members.push_back(v);

    if (check_ideal(r, out.members))
        throw Error("internal error: computed prime radical is not an ideal");
    ElementSet jac = jacobson_radical(r, exec);
    for (int v : out.members)
        if (!jac.contains(v))
            throw Error("internal error: prime radical not contained in Jacobson radical");
    return out;
}

BasicProfile basic_profile(const FiniteRing& r, Exec exec) {
    if (r.trivial()) throw ValidationError("basic_profile rejects the trivial ring");
    const int n = r.order();

    BasicProfile p;
    ElementSet idem = compute_class(r, ClassRole::Idempotents, exec);
    ElementSet center = compute_class(r, ClassRole::Center, exec);
    ElementSet nil = compute_class(r, ClassRole::Nilpotents, exec);
    ElementSet units = compute_class(r, ClassRole::Units, exec);
    ElementSet zd = compute_class(r, ClassRole::ZeroDivisors, exec);

    p.abelian = std::includes(center.members.begin(), center.members.end(),
                              idem.members.begin(), idem.members.end());
    p.boolean_ring = idem.members.size() == static_cast<std::size_t>(n);
    p.field = r.commutative() && units.members.size() == static_cast<std::size_t>(n - 1);
    p.d_ring = std::includes(nil.members.begin(), nil.members.end(),
                             zd.members.begin(), zd.members.end());
    p.two_nilpotent = nil.contains(r.add(r.one(), r.one()));

    std::vector<int> non_units;
    std::vector<char> is_unit(n, 0);
    for (int u : units.members) is_unit[u] = 1;
    for (int x = 0; x < n; ++x)
        if (!is_unit[x]) non_units.push_back(x);
    p.local = !check_ideal(r, non_units).has_value();

    p.periodic_witnesses.resize(n);
    std::vector<int> when(n);
    for (int x = 0; x < n; ++x) {
        std::fill(when.begin(), when.end(), 0);
        int acc = x;
        for (int m = 1;; ++m) {
            if (when[acc] != 0) {
                p.periodic_witnesses[x] = {m, when[acc]};
                break;
            }
            when[acc] = m;
            acc = r.mul(acc, x);
        }
    }
    return p;
}

ClassContext ClassContext::build(const RingPtr& r, Exec exec) {
    ClassContext c = build(*r, exec);
    c.owner = r;
    return c;
}

ClassContext ClassContext::build(const FiniteRing& r, Exec exec) {
    ClassContext c;
    c.ring = &r;
    c.idempotents = compute_class(r, ClassRole::Idempotents, exec);
    c.neg_idempotents = compute_class(r, ClassRole::NegIdempotents, exec);
    c.very_idempotents = compute_class(r, ClassRole::VeryIdempotents, exec);
    c.nilpotents = compute_class(r, ClassRole::Nilpotents, exec);
    c.units = compute_class(r, ClassRole::Units, exec);
    c.zero_divisors = compute_class(r, ClassRole::ZeroDivisors, exec);
    c.center = compute_class(r, ClassRole::Center, exec);
    c.is_nilpotent.assign(r.order(), 0);
    c.nil_index.assign(r.order(), 0);
    for (std::size_t i = 0; i < c.nilpotents.members.size(); ++i) {
        c.is_nilpotent[c.nilpotents.members[i]] = 1;
        c.nil_index[c.nilpotents.members[i]] = c.nilpotents.aux[i];
    }
    return c;
}

}  // namespace ringlab
