#include "ringlab/iso.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

#include "ringlab/classes.hpp"

namespace ringlab {

namespace {

struct Profile {
    int add_order;
    bool idempotent;
    bool nilpotent;

    bool operator==(const Profile&) const = default;
    auto key() const { return std::make_tuple(add_order, idempotent, nilpotent); }
};

std::vector<Profile> profiles(const FiniteRing& r) {
    std::vector<Profile> out(r.order());
    for (int x = 0; x < r.order(); ++x)
        out[x] = Profile{r.additive_order(x), r.mul(x, x) == x, nilpotency_index(r, x) != 0};
    return out;
}

struct Search {
    const FiniteRing& r;
    const FiniteRing& s;
    const std::vector<Profile>& pr;
    const std::vector<Profile>& ps;
    std::vector<int> gens;                 // additive generating sequence of r
    std::vector<std::vector<int>> spans;   // span after assigning gens[0..i-1]
    std::vector<int32_t> phi;              // partial map, -1 unassigned
    std::vector<char> used;                // images already taken

    bool extend(std::size_t gi, int image);
    bool run(std::size_t gi);
};

// Extends phi over the additive span of the next generator; returns false on
// conflict (and leaves phi/used dirty — caller snapshots).
bool Search::extend(std::size_t gi, int image) {
    const int g = gens[gi];
    if (phi[g] >= 0) return phi[g] == image;
    // Walk u + j*g for every u already assigned.
    for (int u : spans[gi]) {
        int from = u, to = phi[u];
        while (true) {
            const int nfrom = r.add(from, g);
            const int nto = s.add(to, image);
            if (phi[nfrom] >= 0) {
                if (phi[nfrom] != nto) return false;
                break;  // cycled back into assigned territory
            }
            if (used[nto]) return false;
            phi[nfrom] = nto;
            used[nto] = 1;
            from = nfrom;
            to = nto;
        }
    }
    return true;
}

bool Search::run(std::size_t gi) {
    if (gi == gens.size()) {
        // phi is total; verify multiplication and one. Addition holds by
        // construction but the caller re-verifies everything anyway.
        if (phi[r.one()] != s.one()) return false;
        for (int a = 0; a < r.order(); ++a)
            for (int b = 0; b < r.order(); ++b)
                if (phi[r.mul(a, b)] != s.mul(phi[a], phi[b])) return false;
        return true;
    }
    const int g = gens[gi];
    auto phi_snapshot = phi;
    auto used_snapshot = used;
    for (int y = 0; y < s.order(); ++y) {
        if (used[y] || !(pr[g] == ps[y])) continue;
        if (extend(gi, y) && run(gi + 1)) return true;
        phi = phi_snapshot;
        used = used_snapshot;
    }
    return false;
}

}  // namespace

std::optional<RingMap> find_isomorphism(const RingPtr& r, const RingPtr& s, int cap) {
    if (r->order() > cap || s->order() > cap)
        throw CapError("isomorphism search capped at order " + std::to_string(cap));
    if (r->order() != s->order()) return std::nullopt;
    const int n = r->order();

    auto pr = profiles(*r);
    auto ps = profiles(*s);
    {
        auto keys = [](const std::vector<Profile>& p) {
            std::vector<std::tuple<int, bool, bool>> k;
            k.reserve(p.size());
            for (const auto& x : p) k.push_back(x.key());
            std::sort(k.begin(), k.end());
            return k;
        };
        if (keys(pr) != keys(ps)) return std::nullopt;
    }
    if (!(pr[r->zero()] == ps[s->zero()]) || !(pr[r->one()] == ps[s->one()]))
        return std::nullopt;

    // Greedy minimal additive generating sequence; phi(0)=0 is the seed.
    Search search{*r, *s, pr, ps, {}, {}, std::vector<int32_t>(n, -1), std::vector<char>(n, 0)};
    search.phi[r->zero()] = s->zero();
    search.used[s->zero()] = 1;
    {
        std::vector<char> in_span(n, 0);
        std::vector<int> span{r->zero()};
        in_span[r->zero()] = 1;
        for (int x = 0; x < n; ++x) {
            if (in_span[x]) continue;
            search.gens.push_back(x);
            search.spans.push_back(span);
            // Close the span under adding multiples of x.
            std::vector<int> grown = span;
            for (int u : span) {
                int v = u;
                while (true) {
                    v = r->add(v, x);
                    if (in_span[v]) break;
                    in_span[v] = 1;
                    grown.push_back(v);
                }
            }
            span = std::move(grown);
        }
    }

    if (!search.run(0)) return std::nullopt;
    // Full verification happens inside RingMap::create.
    return RingMap::create(r, s, std::move(search.phi), true);
}

}  // namespace ringlab
