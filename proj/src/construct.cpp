#include "ringlab/construct.hpp"

#include <algorithm>
#include <cstdint>

namespace ringlab {

namespace {

void require_cap(std::int64_t order, int cap, const std::string& what) {
    if (order > cap)
        throw CapError(what + " would have order " + std::to_string(order) +
                       ", exceeding the cap of " + std::to_string(cap));
}

// |base|^exp, saturating far above any usable cap instead of overflowing.
std::int64_t power_saturating(std::int64_t base, int exp) {
    constexpr std::int64_t kHuge = std::int64_t{1} << 50;
    std::int64_t v = 1;
    for (int i = 0; i < exp; ++i) {
        if (base > 1 && v > kHuge / base) return kHuge;
        v *= base;
    }
    return v;
}

std::string wrap_product_operand(const std::string& p) {
    return p.find(" x ") != std::string::npos ? "(" + p + ")" : p;
}

}  // namespace

RingPtr make_zn(int n, int cap) {
    if (n < 1) throw ValidationError("Zn requires n >= 1");
    require_cap(n, cap, "Z" + std::to_string(n));
    std::vector<int32_t> add(static_cast<std::size_t>(n) * n);
    std::vector<int32_t> mul(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
            mul[static_cast<std::size_t>(a) * n + b] = static_cast<int32_t>((static_cast<std::int64_t>(a) * b) % n);
        }
    return FiniteRing::create(n, std::move(add), std::move(mul), 0, n == 1 ? 0 : 1, {},
                              "Z" + std::to_string(n));
}

RingPtr boolean_ring(int atoms, int cap) {
    if (atoms < 0) throw ValidationError("Bool requires a nonnegative atom count");
    if (atoms > 30) throw CapError("Bool(" + std::to_string(atoms) + ") is far beyond any cap");
    const std::int64_t n64 = std::int64_t{1} << atoms;
    require_cap(n64, cap, "Bool(" + std::to_string(atoms) + ")");
    const int n = static_cast<int>(n64);
    std::vector<int32_t> add(static_cast<std::size_t>(n) * n);
    std::vector<int32_t> mul(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[static_cast<std::size_t>(a) * n + b] = a ^ b;
            mul[static_cast<std::size_t>(a) * n + b] = a & b;
        }
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        std::string s = "{";
        for (int i = 0; i < atoms; ++i)
            if (a & (1 << i)) {
                if (s.size() > 1) s += ",";
                s += std::to_string(i + 1);
            }
        labels[a] = s + "}";
    }
    return FiniteRing::create(n, std::move(add), std::move(mul), 0, n - 1, std::move(labels),
                              "Bool(" + std::to_string(atoms) + ")");
}

RingPtr direct_product(const RingPtr& r, const RingPtr& s, int cap) {
    const std::int64_t n64 = static_cast<std::int64_t>(r->order()) * s->order();
    require_cap(n64, cap, "product of " + r->provenance() + " and " + s->provenance());
    const int n = static_cast<int>(n64);
    const int m = s->order();
    auto enc = [m](int a, int b) { return a * m + b; };

    std::vector<int32_t> add(static_cast<std::size_t>(n) * n);
    std::vector<int32_t> mul(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const int a1 = i / m, b1 = i % m;
        for (int j = 0; j < n; ++j) {
            const int a2 = j / m, b2 = j % m;
            add[static_cast<std::size_t>(i) * n + j] = enc(r->add(a1, a2), s->add(b1, b2));
            mul[static_cast<std::size_t>(i) * n + j] = enc(r->mul(a1, a2), s->mul(b1, b2));
        }
    }
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i)
        labels[i] = "(" + r->label(i / m) + "," + s->label(i % m) + ")";
    return FiniteRing::create(n, std::move(add), std::move(mul),
                              enc(r->zero(), s->zero()), enc(r->one(), s->one()),
                              std::move(labels),
                              wrap_product_operand(r->provenance()) + " x " +
                                  wrap_product_operand(s->provenance()));
}

RingPtr matrix_ring(const RingPtr& r, int k, MatrixShape shape, int cap) {
    if (k < 1) throw ValidationError("matrix dimension must be >= 1");
    const int q = r->order();
    std::vector<std::pair<int, int>> slots;  // stored (row, col) positions
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (shape == MatrixShape::Full || j >= i) slots.emplace_back(i, j);

    const std::string prov = (shape == MatrixShape::Full ? "M" : "T") + std::to_string(k) +
                             "(" + r->provenance() + ")";
    const std::int64_t n64 = power_saturating(q, static_cast<int>(slots.size()));
    require_cap(n64, cap, prov);
    const int n = static_cast<int>(n64);

    std::vector<int> slot_of(static_cast<std::size_t>(k) * k, -1);
    for (std::size_t s = 0; s < slots.size(); ++s)
        slot_of[static_cast<std::size_t>(slots[s].first) * k + slots[s].second] = static_cast<int>(s);

    auto decode = [&](int idx, std::vector<int>& entries) {
        for (std::size_t s = 0; s < slots.size(); ++s) {
            entries[s] = idx % q;
            idx /= q;
        }
    };
    auto encode = [&](const std::vector<int>& entries) {
        int idx = 0;
        for (std::size_t s = slots.size(); s-- > 0;) idx = idx * q + entries[s];
        return idx;
    };
    auto at = [&](const std::vector<int>& e, int i, int j) {
        const int s = slot_of[static_cast<std::size_t>(i) * k + j];
        return s < 0 ? r->zero() : e[s];
    };

    std::vector<int32_t> add(static_cast<std::size_t>(n) * n);
    std::vector<int32_t> mul(static_cast<std::size_t>(n) * n);
    std::vector<int> ea(slots.size()), eb(slots.size()), ec(slots.size());
    for (int i = 0; i < n; ++i) {
        decode(i, ea);
        for (int j = 0; j < n; ++j) {
            decode(j, eb);
            for (std::size_t s = 0; s < slots.size(); ++s) ec[s] = r->add(ea[s], eb[s]);
            add[static_cast<std::size_t>(i) * n + j] = encode(ec);
            for (std::size_t s = 0; s < slots.size(); ++s) {
                const auto [row, col] = slots[s];
                int acc = r->zero();
                for (int l = 0; l < k; ++l)
                    acc = r->add(acc, r->mul(at(ea, row, l), at(eb, l, col)));
                ec[s] = acc;
            }
            mul[static_cast<std::size_t>(i) * n + j] = encode(ec);
        }
    }

    std::vector<int> e(slots.size(), r->zero());
    const int zero_idx = encode(e);
    for (int i = 0; i < k; ++i) e[slot_of[static_cast<std::size_t>(i) * k + i]] = r->one();
    const int one_idx = encode(e);

    std::vector<std::string> labels(n);
    std::vector<int> ent(slots.size());
    for (int i = 0; i < n; ++i) {
        decode(i, ent);
        std::string s = "[";
        for (int row = 0; row < k; ++row) {
            s += "[";
            for (int col = 0; col < k; ++col) {
                s += r->label(at(ent, row, col));
                if (col + 1 < k) s += ",";
            }
            s += "]";
            if (row + 1 < k) s += ",";
        }
        labels[i] = s + "]";
    }

    return FiniteRing::create(n, std::move(add), std::move(mul), zero_idx, one_idx,
                              std::move(labels), prov);
}

GroupRingResult group_ring(const RingPtr& r, const GroupPtr& g, int cap) {
    const int q = r->order();
    const int m = g->order();
    const std::string prov = "GR(" + r->provenance() + ", " + g->name() + ")";
    const std::int64_t n64 = power_saturating(q, m);
    require_cap(n64, cap, prov);
    const int n = static_cast<int>(n64);

    auto decode = [&](int idx, std::vector<int>& coeff) {
        for (int i = 0; i < m; ++i) {
            coeff[i] = idx % q;
            idx /= q;
        }
    };
    auto encode = [&](const std::vector<int>& coeff) {
        int idx = 0;
        for (int i = m; i-- > 0;) idx = idx * q + coeff[i];
        return idx;
    };

    std::vector<int32_t> add(static_cast<std::size_t>(n) * n);
    std::vector<int32_t> mul(static_cast<std::size_t>(n) * n);
    std::vector<int> ca(m), cb(m), cc(m);
    for (int i = 0; i < n; ++i) {
        decode(i, ca);
        for (int j = 0; j < n; ++j) {
            decode(j, cb);
            for (int x = 0; x < m; ++x) cc[x] = r->add(ca[x], cb[x]);
            add[static_cast<std::size_t>(i) * n + j] = encode(cc);
            std::fill(cc.begin(), cc.end(), r->zero());
            for (int x = 0; x < m; ++x) {
                if (ca[x] == r->zero()) continue;
                for (int y = 0; y < m; ++y) {
                    const int target = g->op(x, y);
                    cc[target] = r->add(cc[target], r->mul(ca[x], cb[y]));
                }
            }
            mul[static_cast<std::size_t>(i) * n + j] = encode(cc);
        }
    }

    std::vector<int> coeff(m, r->zero());
    const int zero_idx = encode(coeff);
    coeff[g->identity()] = r->one();
    const int one_idx = encode(coeff);

    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        decode(i, coeff);
        std::string s;
        for (int x = 0; x < m; ++x) {
            if (coeff[x] == r->zero()) continue;
            if (!s.empty()) s += " + ";
            if (x == g->identity())
                s += r->label(coeff[x]);
            else if (coeff[x] == r->one())
                s += g->label(x);
            else
                s += r->label(coeff[x]) + "*" + g->label(x);
        }
        labels[i] = s.empty() ? r->label(r->zero()) : s;
    }

    auto ring = FiniteRing::create(n, std::move(add), std::move(mul), zero_idx, one_idx,
                                   std::move(labels), prov);

    std::vector<int32_t> omega(n);
    for (int i = 0; i < n; ++i) {
        decode(i, coeff);
        int acc = r->zero();
        for (int x = 0; x < m; ++x) acc = r->add(acc, coeff[x]);
        omega[i] = acc;
    }
    // Surjectivity: every base element is hit by its constant embedding.
    std::vector<char> hit(q, 0);
    for (int i = 0; i < n; ++i) hit[omega[i]] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
        throw ValidationError("augmentation map is not surjective");

    RingMap aug = RingMap::create(ring, r, std::move(omega));
    return GroupRingResult{ring, std::move(aug)};
}

int group_ring_embed(const RingPtr& base, const GroupPtr& g, const RingPtr& rg, int r) {
    (void)rg;
    const int q = base->order();
    std::int64_t idx = r;
    for (int i = 0; i < g->identity(); ++i) idx *= q;  // shift to the identity slot
    return static_cast<int>(idx);
}

std::optional<IdealWitness> check_ideal(const FiniteRing& r, const std::vector<int>& members) {
    std::vector<char> in(r.order(), 0);
    for (int x : members) in[x] = 1;
    if (!in[r.zero()])
        return IdealWitness{IdealWitness::Reason::MissingZero};
    for (int x : members)
        for (int y : members)
            if (!in[r.add(x, y)])
                return IdealWitness{IdealWitness::Reason::NotAddClosed, x, y};
    for (int a = 0; a < r.order(); ++a)
        for (int x : members) {
            if (!in[r.mul(a, x)])
                return IdealWitness{IdealWitness::Reason::NotLeftAbsorbing, a, x};
            if (!in[r.mul(x, a)])
                return IdealWitness{IdealWitness::Reason::NotRightAbsorbing, a, x};
        }
    return std::nullopt;
}

QuotientResult quotient(const RingPtr& r, const std::vector<int>& ideal_members) {
    if (auto w = check_ideal(*r, ideal_members)) {
        std::string what;
        switch (w->reason) {
            case IdealWitness::Reason::MissingZero: what = "does not contain zero"; break;
            case IdealWitness::Reason::NotAddClosed:
                what = "not closed under addition at (" + std::to_string(w->a) + "," + std::to_string(w->b) + ")";
                break;
            case IdealWitness::Reason::NotLeftAbsorbing:
                what = "not left absorbing at (" + std::to_string(w->a) + "," + std::to_string(w->b) + ")";
                break;
            case IdealWitness::Reason::NotRightAbsorbing:
                what = "not right absorbing at (" + std::to_string(w->a) + "," + std::to_string(w->b) + ")";
                break;
        }
        throw ValidationError("quotient requires a two-sided ideal: " + what);
    }

    const int n = r->order();
    std::vector<int> rep(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (rep[x] >= 0) continue;
        reps.push_back(x);  // ascending scan makes x the coset minimum
        for (int i : ideal_members) rep[r->add(x, i)] = x;
    }

    const int m = static_cast<int>(reps.size());
    std::vector<int> index_of(n, -1);
    for (int i = 0; i < m; ++i) index_of[reps[i]] = i;

    std::vector<int32_t> add(static_cast<std::size_t>(m) * m);
    std::vector<int32_t> mul(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            add[static_cast<std::size_t>(i) * m + j] = index_of[rep[r->add(reps[i], reps[j])]];
            mul[static_cast<std::size_t>(i) * m + j] = index_of[rep[r->mul(reps[i], reps[j])]];
        }
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) labels[i] = "[" + r->label(reps[i]) + "]";

    auto q = FiniteRing::create(m, std::move(add), std::move(mul),
                                index_of[rep[r->zero()]], index_of[rep[r->one()]],
                                std::move(labels),
                                "quot(" + r->provenance() + ", " +
                                    std::to_string(ideal_members.size()) + ")");

    std::vector<int32_t> proj(n);
    for (int x = 0; x < n; ++x) proj[x] = index_of[rep[x]];
    RingMap p = RingMap::create(r, q, std::move(proj));
    return QuotientResult{q, std::move(p)};
}

GroupPtr make_cyclic(int n) {
    if (n < 1) throw ValidationError("cyclic group order must be >= 1");
    std::vector<int32_t> cayley(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            cayley[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    std::vector<std::string> labels(n);
    labels[0] = "e";
    for (int a = 1; a < n; ++a)
        labels[a] = a == 1 ? "g" : "g^" + std::to_string(a);
    return FiniteGroup::create(n, std::move(cayley), 0, std::move(labels),
                               "C" + std::to_string(n));
}

GroupPtr group_product(const GroupPtr& g, const GroupPtr& h) {
    const int n = g->order() * h->order();
    const int m = h->order();
    std::vector<int32_t> cayley(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            cayley[static_cast<std::size_t>(i) * n + j] =
                g->op(i / m, j / m) * m + h->op(i % m, j % m);
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i)
        labels[i] = "(" + g->label(i / m) + "," + h->label(i % m) + ")";
    auto wrap = [](const std::string& s) {
        return s.find(" x ") != std::string::npos ? "(" + s + ")" : s;
    };
    return FiniteGroup::create(n, std::move(cayley), g->identity() * m + h->identity(),
                               std::move(labels), wrap(g->name()) + " x " + wrap(h->name()));
}

GroupPtr make_s3() {
    // Permutations of {0,1,2}: identity, rotations, then transpositions.
    const int perms[6][3] = {
        {0, 1, 2},  // e
        {1, 2, 0},  // r
        {2, 0, 1},  // r^2
        {1, 0, 2},  // s
        {2, 1, 0},  // rs
        {0, 2, 1},  // r^2 s
    };
    auto find = [&](const int p[3]) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        return -1;
    };
    std::vector<int32_t> cayley(36);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int comp[3];
            for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
            cayley[static_cast<std::size_t>(a) * 6 + b] = find(comp);
        }
    return FiniteGroup::create(6, std::move(cayley), 0,
                               {"e", "r", "r^2", "s", "rs", "r^2s"}, "S3");
}

}  // namespace ringlab
