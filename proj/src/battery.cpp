#include "ringlab/battery.hpp"

#include <algorithm>
#include <sstream>

#include "ringlab/classes.hpp"
#include "ringlab/cleanness.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/iso.hpp"
#include "ringlab/structure.hpp"

namespace ringlab {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Catalog

struct ResultInfo {
    const char* id;
    ResultKind kind;
    bool group_ring;
};

// Statement catalog. Two statements are checked as implications although
// their sources read one-directionally anyway (lem-2.6, lem-3.1, lem-3.5,
// lem-4.1, thm-3.2, and the two remark entries); cor-4.9 is checked as the
// forward implication only because its reverse direction is refuted by Z6
// (see the unit tests pinning that separation).
const ResultInfo kCatalog[] = {
    {"lem-2.1", ResultKind::Iff, false},
    {"thm-2.2", ResultKind::Iff, false},
    {"cor-2.3", ResultKind::Iff, false},
    {"cor-2.4", ResultKind::Iff, false},
    {"prop-2.5", ResultKind::Iff, false},
    {"lem-2.6", ResultKind::Implication, true},
    {"thm-2.7", ResultKind::Iff, true},
    {"cor-2.8", ResultKind::Iff, true},
    {"rem-local", ResultKind::Iff, false},
    {"lem-3.1", ResultKind::Implication, false},
    {"thm-3.2", ResultKind::Implication, false},
    {"lem-3.3", ResultKind::Iff, false},
    {"thm-3.4", ResultKind::Iff, false},
    {"lem-3.5", ResultKind::Implication, false},
    {"lem-3.6", ResultKind::Iff, false},
    {"thm-3.7", ResultKind::Iff, false},
    {"cor-3.8", ResultKind::Iff, false},
    {"rem-t2z2", ResultKind::Implication, false},
    {"lem-4.1", ResultKind::Implication, false},
    {"prop-4.2", ResultKind::Iff, false},
    {"lem-4.3", ResultKind::Iff, false},
    {"thm-4.4", ResultKind::Iff, false},
    {"lem-4.5", ResultKind::Iff, false},
    {"thm-4.6", ResultKind::Iff, false},
    {"cor-4.7", ResultKind::Iff, false},
    {"cor-4.8", ResultKind::Iff, true},
    {"cor-4.9", ResultKind::Implication, false},
    {"rem-z3g", ResultKind::Implication, true},
};

const ResultInfo& info_of(const std::string& id) {
    for (const auto& r : kCatalog)
        if (id == r.id) return r;
    throw Error("unknown result id: " + id);
}

// ---------------------------------------------------------------------------
// Shared per-ring evaluation context

struct Ctx {
    BuiltRing built;
    std::string expr;
    RingPtr R;
    ClassContext cls;
    BasicProfile profile;
    ElementSet jac;
    bool nilpotents_form_ideal = false;

    // Group-ring extras (set when the expression is GR(base, G)).
    std::shared_ptr<ClassContext> base_cls;
    ElementSet base_jac;
    std::vector<int> aug_kernel;
    bool kernel_nil = false;

    static Ctx build(const StatementInput& in) {
        Ctx c;
        c.built = in.built;
        c.expr = in.expr;
        c.R = in.built.ring;
        if (c.R->trivial()) return c;  // every statement skips trivial rings
        c.cls = ClassContext::build(*c.R);
        c.profile = basic_profile(*c.R);
        c.jac = jacobson_radical(*c.R);
        c.nilpotents_form_ideal = !check_ideal(*c.R, c.cls.nilpotents.members).has_value();
        if (c.built.base && !c.built.base->trivial()) {
            c.base_cls = std::make_shared<ClassContext>(ClassContext::build(*c.built.base));
            c.base_jac = jacobson_radical(*c.built.base);
            for (int x = 0; x < c.R->order(); ++x)
                if (c.built.augmentation->apply(x) == c.built.base->zero())
                    c.aug_kernel.push_back(x);
            c.kernel_nil = true;
            for (int x : c.aug_kernel)
                if (!c.cls.is_nilpotent[x]) {
                    c.kernel_nil = false;
                    break;
                }
        }
        return c;
    }
};

// ---------------------------------------------------------------------------
// Small predicate helpers

bool holds(const Ctx& c, RingMode m) { return ring_predicate(c.cls, m).holds; }

int first_failing(const Ctx& c, RingMode m) { return ring_predicate(c.cls, m).counterexample; }

bool all_very_idempotent(const Ctx& c) {
    return c.cls.very_idempotents.size() == static_cast<std::size_t>(c.R->order());
}

// R = N u Id u -Id (with -Id realized as the negated-idempotent class).
bool covered_by(const Ctx& c, bool use_jacobson) {
    const FiniteRing& r = *c.R;
    std::vector<char> hit(r.order(), 0);
    const auto& nil_like = use_jacobson ? c.jac.members : c.cls.nilpotents.members;
    for (int x : nil_like) hit[x] = 1;
    for (int e : c.cls.idempotents.members) {
        hit[e] = 1;
        hit[r.neg(e)] = 1;
    }
    return std::find(hit.begin(), hit.end(), 0) == hit.end();
}

int first_uncovered(const Ctx& c, bool use_jacobson) {
    const FiniteRing& r = *c.R;
    std::vector<char> hit(r.order(), 0);
    const auto& nil_like = use_jacobson ? c.jac.members : c.cls.nilpotents.members;
    for (int x : nil_like) hit[x] = 1;
    for (int e : c.cls.idempotents.members) {
        hit[e] = 1;
        hit[r.neg(e)] = 1;
    }
    for (int x = 0; x < r.order(); ++x)
        if (!hit[x]) return x;
    return -1;
}

// Every zero-divisor lies in `pool` (or is nilpotent when with_nilpotents).
bool zd_subset(const Ctx& c, const ElementSet& pool, bool with_nilpotents) {
    for (int a : c.cls.zero_divisors.members) {
        if (pool.contains(a)) continue;
        if (with_nilpotents && c.cls.is_nilpotent[a]) continue;
        return false;
    }
    return true;
}

// Setwise nilpotence of J: iterate S <- S*J until {0}; returns step count,
// 0 when the bound n is exceeded (cannot happen for an actual radical).
int jacobson_setwise_nil_steps(const Ctx& c) {
    const FiniteRing& r = *c.R;
    std::vector<char> cur(r.order(), 0);
    for (int x : c.jac.members) cur[x] = 1;
    for (int k = 1; k <= r.order(); ++k) {
        bool only_zero = true;
        for (int x = 0; x < r.order(); ++x)
            if (cur[x] && x != r.zero()) {
                only_zero = false;
                break;
            }
        if (only_zero) return k;
        std::vector<char> next(r.order(), 0);
        for (int x = 0; x < r.order(); ++x) {
            if (!cur[x]) continue;
            for (int j : c.jac.members) next[r.mul(x, j)] = 1;
        }
        cur = std::move(next);
    }
    return 0;
}

bool quotient_mod_j_isomorphic_to(const Ctx& c, int modulus) {
    auto q = quotient(c.R, c.jac.members);
    if (q.ring->order() != modulus) return false;
    return find_isomorphism(q.ring, make_zn(modulus)).has_value();
}

RingVerdict predicate_on_quotient_mod(const Ctx& c, const ElementSet& ideal, RingMode mode) {
    auto q = quotient(c.R, ideal.members);
    return ring_predicate(*q.ring, mode);
}

bool classify_has_any(const StructureClass& sc, std::initializer_list<StructureTag> tags) {
    for (StructureTag t : tags)
        if (sc.has(t)) return true;
    return false;
}

int periodic_exponent_max(const Ctx& c) {
    int m = 0;
    for (const auto& [a, b] : c.profile.periodic_witnesses) m = std::max(m, a);
    return m;
}

// Existence of a central idempotent e with a - e nilpotent, for every
// zero-divisor a; returns the smallest failing a or -1.
int central_idem_decomp_gap(const Ctx& c) {
    const FiniteRing& r = *c.R;
    std::vector<int> central_idems;
    for (int e : c.cls.idempotents.members)
        if (c.cls.center.contains(e)) central_idems.push_back(e);
    for (int a : c.cls.zero_divisors.members) {
        bool found = false;
        for (int e : central_idems)
            if (c.cls.is_nilpotent[r.sub(a, e)]) {
                found = true;
                break;
            }
        if (!found) return a;
    }
    return -1;
}

// Some nontrivial central idempotent splits R into two corners that both
// satisfy `mode`; returns the witness idempotent or -1.
int product_split_witness(const Ctx& c, RingMode mode) {
    for (int f : central_idempotents(*c.R)) {
        PeirceSplit split = peirce_split(c.R, f);
        if (ring_predicate(*split.corner, mode).holds &&
            ring_predicate(*split.co_corner, mode).holds)
            return f;
    }
    return -1;
}

bool is_prime_power(int n, int p) {
    if (n < 1) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

std::vector<int> primes_up_to(int n) {
    std::vector<int> out;
    for (int p = 2; p <= n; ++p) {
        bool prime = true;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(p);
    }
    return out;
}

// A prime p with p*1 in J(base) such that |G| is a power of p.
std::optional<int> group_ring_prime(const Ctx& c) {
    const FiniteRing& base = *c.built.base;
    const int m = c.built.group->order();
    auto p_times_one_in_j = [&](int p) {
        int acc = base.zero();
        for (int i = 0; i < p; ++i) acc = base.add(acc, base.one());
        return c.base_jac.contains(acc);
    };
    if (m == 1) {
        for (int p : primes_up_to(std::max(2, base.characteristic())))
            if (p_times_one_in_j(p)) return p;
        return std::nullopt;
    }
    for (int p : primes_up_to(m))
        if (m % p == 0) {
            if (is_prime_power(m, p) && p_times_one_in_j(p)) return p;
            return std::nullopt;  // |G| has this prime factor; no other prime can work
        }
    return std::nullopt;
}

json element_json(const FiniteRing& r, int x) {
    if (x < 0) return nullptr;
    return json{{"index", x}, {"label", r.label(x)}};
}

json decomposition_json(const FiniteRing& r, const Decomposition& d) {
    return json{{"e", d.very_idempotent},
                {"e_label", r.label(d.very_idempotent)},
                {"e_squared", r.mul(d.very_idempotent, d.very_idempotent)},
                {"w", d.nilpotent},
                {"w_label", r.label(d.nilpotent)},
                {"nil_index", d.nil_index}};
}

// ---------------------------------------------------------------------------
// Applicability

std::optional<std::string> inapplicable(const ResultInfo& info, const Ctx& c) {
    if (c.R->trivial()) return "trivial ring";
    if (info.group_ring && !c.built.base) return "input is not a group-ring expression";

    const std::string id = info.id;
    if (id == "thm-2.7") {
        if (!c.kernel_nil) return "augmentation ideal is not nil";
    } else if (id == "cor-2.8") {
        if (!group_ring_prime(c))
            return "no prime p with p*1 in J(base) and |G| a power of p";
    } else if (id == "rem-z3g") {
        if (c.built.base->order() != 3 ||
            !find_isomorphism(c.built.base, make_zn(3)).has_value())
            return "base ring is not Z3";
        if (!is_prime_power(c.built.group->order(), 3)) return "|G| is not a power of 3";
    } else if (id == "rem-local") {
        if (!c.profile.local) return "ring is not local";
    } else if (id == "rem-t2z2") {
        static const RingPtr t2z2 = matrix_ring(make_zn(2), 2, MatrixShape::UpperTriangular);
        if (c.R->order() != 8 || !find_isomorphism(c.R, t2z2).has_value())
            return "ring is not isomorphic to T2(Z2)";
    } else if (id == "cor-4.9") {
        if (c.profile.two_nilpotent) return "1+1 is nilpotent";
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Left sides: direct brute-force predicates (never touch the classifier).

bool lhs_impl(const std::string& id, const Ctx& c) {
    if (id == "lem-2.1") return all_very_idempotent(c);
    if (id == "thm-2.2" || id == "cor-2.3" || id == "cor-2.4" || id == "prop-2.5")
        return holds(c, RingMode::UniquelyWeaklyNilClean);
    if (id == "lem-2.6" || id == "thm-2.7" || id == "cor-2.8" || id == "rem-z3g")
        return holds(c, RingMode::UniquelyWeaklyNilClean);  // on the group ring itself
    if (id == "rem-local") return holds(c, RingMode::UniquelyWeaklyNilClean);
    if (id == "lem-3.1" || id == "thm-3.2" || id == "thm-3.4")
        return holds(c, RingMode::UniquelyWeaklyDNilClean);
    if (id == "lem-3.3") return zd_subset(c, c.cls.very_idempotents, false);
    if (id == "lem-3.5") {
        for (int x = 0; x < c.R->order(); ++x)
            if (!c.cls.very_idempotents.contains(x) && !c.cls.is_nilpotent[x]) return false;
        return true;
    }
    if (id == "lem-3.6") return covered_by(c, false);
    if (id == "thm-3.7")
        return c.profile.abelian && holds(c, RingMode::ZeroDivVeryIdemOrNilpotent);
    if (id == "cor-3.8") return c.profile.abelian && zd_subset(c, c.cls.idempotents, true);
    if (id == "rem-t2z2") return zd_subset(c, c.cls.idempotents, true);
    if (id == "lem-4.1" || id == "prop-4.2" || id == "lem-4.3" || id == "thm-4.4" ||
        id == "cor-4.9")
        return holds(c, RingMode::UniquelyDNilClean);
    if (id == "lem-4.5" || id == "thm-4.6" || id == "cor-4.7" || id == "cor-4.8")
        return holds(c, RingMode::UniquelyNilClean);
    throw Error("unknown result id: " + id);
}

// ---------------------------------------------------------------------------
// Right sides: the statements' own conditions, computed independently.

bool rhs_impl(const std::string& id, const Ctx& c) {
    if (id == "lem-2.1")
        return classify_has_any(classify(c.R),
                                {StructureTag::Z3, StructureTag::Boolean, StructureTag::Z3xBoolean});
    if (id == "thm-2.2") {
        if (!c.profile.abelian) return false;
        if (periodic_exponent_max(c) <= 0) return false;  // witnesses are total
        return classify_has_any(classify_mod_j(c.R),
                                {StructureTag::Z3, StructureTag::Boolean, StructureTag::Z3xBoolean});
    }
    if (id == "cor-2.3") {
        if (!c.profile.abelian) return false;
        if (jacobson_setwise_nil_steps(c) == 0) return false;
        return classify_has_any(classify_mod_j(c.R),
                                {StructureTag::Z3, StructureTag::Boolean, StructureTag::Z3xBoolean});
    }
    if (id == "cor-2.4")
        return periodic_exponent_max(c) > 0 && holds(c, RingMode::UniquelyWeaklyDNilClean) &&
               unit_form_check(c.cls).holds;
    if (id == "prop-2.5") {
        if (!c.profile.abelian) return false;
        ElementSet p = prime_radical(*c.R);
        return predicate_on_quotient_mod(c, p, RingMode::UniquelyWeaklyNilClean).holds;
    }
    if (id == "lem-2.6" || id == "thm-2.7" || id == "cor-2.8")
        return ring_predicate(*c.base_cls, RingMode::UniquelyWeaklyNilClean).holds;
    if (id == "rem-local")
        return jacobson_setwise_nil_steps(c) > 0 &&
               (quotient_mod_j_isomorphic_to(c, 2) || quotient_mod_j_isomorphic_to(c, 3));
    if (id == "lem-3.1" || id == "lem-3.5" || id == "lem-4.1") return c.profile.abelian;
    if (id == "thm-3.2")
        return c.profile.d_ring ||
               product_split_witness(c, RingMode::UniquelyWeaklyNilClean) >= 0;
    if (id == "lem-3.3")
        return classify_has_any(classify(c.R), {StructureTag::Field, StructureTag::Z3xZ3,
                                                StructureTag::Z3xBoolean, StructureTag::Boolean});
    if (id == "thm-3.4") {
        if (c.profile.d_ring) return true;
        if (!c.profile.abelian || periodic_exponent_max(c) <= 0) return false;
        return classify_has_any(classify_mod_j(c.R),
                                {StructureTag::Field, StructureTag::Z3xZ3,
                                 StructureTag::Z3xBoolean, StructureTag::Boolean});
    }
    if (id == "lem-3.6") {
        if (!covered_by(c, true)) return false;
        auto sc = classify(c.R);
        if (classify_has_any(sc, {StructureTag::Z3, StructureTag::Boolean, StructureTag::Z3xBoolean}))
            return true;
        return c.R->order() == 4 && find_isomorphism(c.R, make_zn(4)).has_value();
    }
    if (id == "thm-3.7")
        return classify_has_any(classify(c.R), {StructureTag::DRing, StructureTag::Boolean,
                                                StructureTag::Z3xZ3, StructureTag::Z3xBoolean});
    if (id == "cor-3.8")
        return classify_has_any(classify(c.R), {StructureTag::DRing, StructureTag::Boolean});
    if (id == "rem-t2z2") {
        auto sc = classify(c.R);
        return !sc.has(StructureTag::Boolean) && !sc.has(StructureTag::DRing);
    }
    if (id == "prop-4.2") return central_idem_decomp_gap(c) < 0;
    if (id == "lem-4.3")
        return c.profile.d_ring || holds(c, RingMode::UniquelyNilClean);
    if (id == "thm-4.4") {
        if (c.profile.d_ring) return true;
        if (!c.profile.abelian || periodic_exponent_max(c) <= 0) return false;
        return classify_mod_j(c.R).has(StructureTag::Boolean);
    }
    if (id == "lem-4.5")
        return c.profile.abelian && jacobson_setwise_nil_steps(c) > 0 &&
               classify_mod_j(c.R).has(StructureTag::Boolean);
    if (id == "thm-4.6")
        return c.profile.two_nilpotent && holds(c, RingMode::UniquelyWeaklyNilClean);
    if (id == "cor-4.7") {
        if (!c.profile.abelian) return false;
        ElementSet p = prime_radical(*c.R);
        return predicate_on_quotient_mod(c, p, RingMode::UniquelyNilClean).holds;
    }
    if (id == "cor-4.8")
        return ring_predicate(*c.base_cls, RingMode::UniquelyNilClean).holds && c.kernel_nil;
    if (id == "cor-4.9") return holds(c, RingMode::UniquelyWeaklyDNilClean);
    if (id == "rem-z3g") return !holds(c, RingMode::UniquelyNilClean);
    throw Error("unknown result id: " + id);
}

// ---------------------------------------------------------------------------
// Witness evidence

json witnesses_for(const std::string& id, const Ctx& c, bool lhs, bool rhs) {
    json w = json::object();
    const FiniteRing& r = *c.R;

    auto lhs_cex = [&](RingMode m) {
        if (!lhs) {
            const int x = first_failing(c, m);
            if (x >= 0) {
                w["lhs_counterexample"] = element_json(r, x);
                auto vd = element_verdict(c.cls, x,
                                          m == RingMode::UniquelyDNilClean ||
                                                  m == RingMode::UniquelyNilClean
                                              ? ElementMode::UniquelyNilClean
                                              : ElementMode::UniquelyWeaklyNilClean);
                if (vd.uniqueness_witness) {
                    w["conflicting_decompositions"] =
                        json::array({decomposition_json(r, vd.uniqueness_witness->first),
                                     decomposition_json(r, vd.uniqueness_witness->second)});
                }
            }
        }
    };

    if (id == "thm-2.2" || id == "cor-2.4" || id == "cor-2.3" || id == "prop-2.5" ||
        id == "rem-local")
        lhs_cex(RingMode::UniquelyWeaklyNilClean);
    if (id == "lem-3.1" || id == "thm-3.2" || id == "thm-3.4" || id == "cor-4.9")
        lhs_cex(RingMode::UniquelyWeaklyDNilClean);
    if (id == "lem-4.1" || id == "prop-4.2" || id == "lem-4.3" || id == "thm-4.4")
        lhs_cex(RingMode::UniquelyDNilClean);
    if (id == "lem-4.5" || id == "thm-4.6" || id == "cor-4.7")
        lhs_cex(RingMode::UniquelyNilClean);

    if (id == "lem-3.1" || id == "lem-3.5" || id == "lem-4.1") w["abelian"] = c.profile.abelian;
    if (id == "lem-2.1" || id == "lem-3.3" || id == "thm-3.7" || id == "cor-3.8" ||
        id == "lem-3.6" || id == "rem-t2z2")
        w["classification"] = classify(c.R).tag_names();
    if (id == "thm-2.2" || id == "cor-2.3" || id == "thm-3.4" || id == "thm-4.4" ||
        id == "lem-4.5")
        w["classification_mod_j"] = classify_mod_j(c.R).tag_names();

    if (id == "thm-2.2" || id == "thm-3.4" || id == "thm-4.4" || id == "cor-2.4")
        w["periodic_exponent_max"] = periodic_exponent_max(c);
    if (id == "cor-2.3" || id == "lem-4.5" || id == "rem-local") {
        w["jacobson_size"] = c.jac.members.size();
        w["jacobson_nil_steps"] = jacobson_setwise_nil_steps(c);
    }
    if (id == "thm-3.4" || id == "thm-4.4")
        w["nilpotents_form_ideal"] = c.nilpotents_form_ideal;
    if (id == "thm-3.2") {
        const int f = c.profile.d_ring ? -1 : product_split_witness(c, RingMode::UniquelyWeaklyNilClean);
        w["d_ring"] = c.profile.d_ring;
        if (f >= 0) w["split_idempotent"] = element_json(r, f);
    }
    if (id == "lem-3.6") {
        w["covered_by_nilpotents_union_very_idempotents"] = lhs;
        w["covered_by_jacobson_union_very_idempotents"] = covered_by(c, true);
        if (!lhs) w["uncovered_element"] = element_json(r, first_uncovered(c, false));
    }
    if (id == "cor-2.4" && !rhs) {
        auto uf = unit_form_check(c.cls);
        if (!uf.holds) {
            if (uf.bad_unit >= 0) w["unit_not_of_nilpotent_form"] = element_json(r, uf.bad_unit);
            if (uf.bad_form_element >= 0)
                w["nilpotent_form_non_unit"] = element_json(r, uf.bad_form_element);
        }
    }
    if (id == "prop-4.2" && !rhs)
        w["rhs_counterexample"] = element_json(r, central_idem_decomp_gap(c));
    if (id == "thm-2.7" || id == "cor-4.8" || id == "cor-2.8" || id == "lem-2.6" ||
        id == "rem-z3g") {
        w["augmentation_kernel_size"] = c.aug_kernel.size();
        w["augmentation_kernel_nil"] = c.kernel_nil;
    }
    if (id == "cor-4.9") {
        w["d_ring"] = c.profile.d_ring;
        w["rhs_uniquely_weakly_D_nil_clean"] = rhs;
        w["checked_direction"] = "forward implication only";
    }
    return w;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public surface

const std::vector<std::string>& all_result_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& r : kCatalog) v.emplace_back(r.id);
        return v;
    }();
    return ids;
}

bool known_result_id(const std::string& id) {
    for (const auto& r : kCatalog)
        if (id == r.id) return true;
    return false;
}

bool is_group_ring_result(const std::string& id) { return info_of(id).group_ring; }

ResultKind result_kind(const std::string& id) { return info_of(id).kind; }

namespace {

TheoremVerdict check_with_ctx(const std::string& id, const Ctx& c) {
    const ResultInfo& info = info_of(id);
    TheoremVerdict v;
    v.result_id = id;
    v.ring = c.expr;
    v.kind = info.kind;

    if (auto reason = inapplicable(info, c)) {
        v.applicable = false;
        v.skip_reason = *reason;
        return v;
    }
    v.applicable = true;
    v.lhs = lhs_impl(id, c);
    v.rhs = rhs_impl(id, c);
    v.consistent = info.kind == ResultKind::Iff ? v.lhs == v.rhs : (!v.lhs || v.rhs);
    v.witnesses = witnesses_for(id, c, v.lhs, v.rhs);
    return v;
}

}  // namespace

TheoremVerdict check_result(const std::string& id, const StatementInput& in) {
    return check_with_ctx(id, Ctx::build(in));
}

bool eval_result_lhs(const std::string& id, const StatementInput& in) {
    if (in.built.ring->trivial()) throw ValidationError("statement sides reject the trivial ring");
    return lhs_impl(id, Ctx::build(in));
}

bool eval_result_rhs(const std::string& id, const StatementInput& in) {
    if (in.built.ring->trivial()) throw ValidationError("statement sides reject the trivial ring");
    return rhs_impl(id, Ctx::build(in));
}

std::optional<std::string> result_inapplicable_reason(const std::string& id,
                                                      const StatementInput& in) {
    return inapplicable(info_of(id), Ctx::build(in));
}

std::vector<std::string> default_corpus() {
    std::vector<std::string> corpus;
    for (int n = 2; n <= 12; ++n) corpus.push_back("Z" + std::to_string(n));
    corpus.push_back("Z16");
    corpus.push_back("Z3 x Z3");
    corpus.push_back("Z3 x Bool(1)");
    corpus.push_back("Z3 x Bool(2)");
    for (int k = 1; k <= 4; ++k) corpus.push_back("Bool(" + std::to_string(k) + ")");
    corpus.push_back("Z3 x Z4");
    corpus.push_back("Z2 x Z4");
    corpus.push_back("Z4 x Z4");
    corpus.push_back("T2(Z2)");
    corpus.push_back("T2(Z3)");
    corpus.push_back("M2(Z2)");
    corpus.push_back("GR(Z2, C2)");
    corpus.push_back("GR(Z3, C3)");
    corpus.push_back("GR(Z4, C2)");
    corpus.push_back("GR(Z2, C2 x C2)");
    return corpus;
}

std::vector<std::string> parse_corpus(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(b, e - b + 1));
    }
    return lines;
}

BatteryReport run_battery(const std::vector<std::string>& corpus_lines,
                          const BatteryOptions& opts) {
    std::vector<std::string> ids = opts.results.empty() ? all_result_ids() : opts.results;
    for (const auto& id : ids)
        if (!known_result_id(id)) throw Error("unknown result id: " + id);

    BatteryReport report;

    // Build every corpus entry (and its shared class context) up front; bad
    // lines are reported and skipped.
    std::vector<std::shared_ptr<const Ctx>> entries;
    for (const auto& line : corpus_lines) {
        try {
            auto ast = parse_expr(line);
            BuiltRing built = eval_expr(*ast, EvalOptions{opts.cap, Exec::Serial});
            StatementInput input{built, built.ring->provenance()};
            entries.push_back(std::make_shared<Ctx>(Ctx::build(input)));
        } catch (const Error& e) {
            report.line_errors.push_back(line + ": " + e.what());
        }
    }
    report.rings_built = static_cast<int>(entries.size());

    const std::size_t cells = entries.size() * ids.size();
    report.verdicts.resize(cells);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, opts.jobs))
#endif
    for (std::ptrdiff_t cell = 0; cell < static_cast<std::ptrdiff_t>(cells); ++cell) {
        const std::size_t ei = static_cast<std::size_t>(cell) / ids.size();
        const std::size_t ri = static_cast<std::size_t>(cell) % ids.size();
        report.verdicts[cell] = check_with_ctx(ids[ri], *entries[ei]);
    }

    for (const auto& v : report.verdicts) {
        if (!v.applicable)
            ++report.skipped;
        else if (v.consistent)
            ++report.consistent;
        else
            ++report.inconsistent;
    }
    return report;
}

json verdict_to_json(const TheoremVerdict& v) {
    json j;
    j["result_id"] = v.result_id;
    j["ring"] = v.ring;
    j["kind"] = v.kind == ResultKind::Iff ? "iff" : "implication";
    if (!v.applicable) {
        j["skipped"] = true;
        j["reason"] = v.skip_reason;
        return j;
    }
    j["lhs"] = v.lhs;
    j["rhs"] = v.rhs;
    j["consistent"] = v.consistent;
    j["witnesses"] = v.witnesses;
    return j;
}

std::string verdict_to_text(const TheoremVerdict& v) {
    std::ostringstream out;
    out << std::boolalpha;
    out << v.result_id << "  " << v.ring << "  ";
    if (!v.applicable) {
        out << "skipped (" << v.skip_reason << ")";
        return out.str();
    }
    out << (v.kind == ResultKind::Iff ? "iff" : "implication") << "  lhs=" << v.lhs
        << " rhs=" << v.rhs << "  " << (v.consistent ? "consistent" : "INCONSISTENT");
    if (!v.consistent) out << "  witnesses=" << v.witnesses.dump();
    return out.str();
}

std::string report_to_jsonl(const BatteryReport& r) {
    std::ostringstream out;
    for (const auto& v : r.verdicts) out << verdict_to_json(v).dump() << "\n";
    json summary;
    summary["summary"] = json{{"rings", r.rings_built},
                              {"consistent", r.consistent},
                              {"inconsistent", r.inconsistent},
                              {"skipped", r.skipped},
                              {"line_errors", r.line_errors.size()}};
    out << summary.dump() << "\n";
    return out.str();
}

std::string report_to_text(const BatteryReport& r) {
    std::ostringstream out;
    for (const auto& v : r.verdicts) out << verdict_to_text(v) << "\n";
    out << "rings=" << r.rings_built << " consistent=" << r.consistent
        << " inconsistent=" << r.inconsistent << " skipped=" << r.skipped;
    if (!r.line_errors.empty()) out << " line_errors=" << r.line_errors.size();
    out << "\n";
    return out.str();
}

}  // namespace ringlab
