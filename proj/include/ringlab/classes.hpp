#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ringlab/exec.hpp"
#include "ringlab/finite_ring.hpp"

namespace ringlab {

enum class ClassRole {
    Idempotents,
    NegIdempotents,
    VeryIdempotents,
    Nilpotents,
    Units,
    ZeroDivisors,
    Center,
    Jacobson,
    PrimeRadical,
    Custom,
};

const char* class_role_name(ClassRole r);
std::optional<ClassRole> class_role_from_name(const std::string& name);

/// A tagged subset of a ring's elements, canonically ordered.
struct ElementSet {
    ClassRole role = ClassRole::Custom;
    std::vector<int> members;  // strictly ascending
    std::vector<int> aux;      // per-member payload: nil index for nilpotents,
                               // inverse for units; empty otherwise

    bool contains(int x) const;
    int aux_for(int x) const;  // -1 when absent
    std::size_t size() const { return members.size(); }
};

/// Direct brute-force computation of one element class:
///   idempotents      e^2 = e
///   neg_idempotents  e^2 = -e
///   very_idempotents union of the two
///   nilpotents       x^k = 0 for some k <= n (minimal k recorded)
///   units            exists y with xy = yx = 1 (y recorded)
///   zero_divisors    two-sided: some nonzero b with ab = 0 and some nonzero
///                    c with ca = 0 (zero qualifies whenever n >= 2)
///   center           xr = rx for all r
ElementSet compute_class(const FiniteRing& r, ClassRole role, Exec exec = Exec::Serial);

/// J(R) = {x : 1 - a*x is a unit for every a}, then verified to be a
/// two-sided ideal (a failure here is an internal bug and throws).
ElementSet jacobson_radical(const FiniteRing& r, Exec exec = Exec::Serial);

/// P(R) = strongly nilpotent elements, computed on the successor graph
/// x -> x*r*x: an element belongs to P(R) iff no nonzero cycle is reachable
/// from it (SCC condensation + reachability). Verified to be an ideal
/// contained in J(R).
ElementSet prime_radical(const FiniteRing& r, Exec exec = Exec::Serial);

struct BasicProfile {
    bool abelian = false;        // all idempotents central
    bool boolean_ring = false;   // every element idempotent
    bool field = false;          // commutative, every nonzero element a unit
    bool local = false;          // non-units form a two-sided ideal
    bool d_ring = false;         // every zero-divisor nilpotent
    bool two_nilpotent = false;  // 1+1 nilpotent
    // First repeat (m, n) in the power sequence of each element: m > n >= 1
    // and x^m = x^n. Always exists in a finite ring.
    std::vector<std::pair<int, int>> periodic_witnesses;
};

/// Rejects the trivial ring.
BasicProfile basic_profile(const FiniteRing& r, Exec exec = Exec::Serial);

/// Precomputed per-ring class data shared by the cleanness machinery and the
/// verification harness. Plain value; build once per ring and pass around.
struct ClassContext {
    const FiniteRing* ring = nullptr;
    RingPtr owner;  // set by the RingPtr overload; keeps `ring` alive
    ElementSet idempotents, neg_idempotents, very_idempotents, nilpotents;
    ElementSet units, zero_divisors, center;
    std::vector<char> is_nilpotent;  // indexed by element
    std::vector<int> nil_index;      // 0 when not nilpotent

    /// The caller guarantees `r` outlives the context.
    static ClassContext build(const FiniteRing& r, Exec exec = Exec::Serial);
    /// Shares ownership of the ring.
    static ClassContext build(const RingPtr& r, Exec exec = Exec::Serial);
};

/// Smallest k with x^k = 0, or 0 if x is not nilpotent (search stops at n).
int nilpotency_index(const FiniteRing& r, int x);

}  // namespace ringlab
