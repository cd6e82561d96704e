#pragma once

#include <optional>
#include <vector>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

// Default size cap for constructed rings: two dense tables of at most
// ~16.8M small-integer entries each.
inline constexpr int kDefaultCap = 4096;

/// Integers mod n; index i represents residue i, zero=0, one=1.
RingPtr make_zn(int n, int cap = kDefaultCap);

/// Power set of `atoms` generators: symmetric difference / intersection.
/// Every element is idempotent; atoms = 0 yields the trivial ring.
RingPtr boolean_ring(int atoms, int cap = kDefaultCap);

/// Componentwise operations on pairs; index = row-major pair encoding
/// (r, s) -> r*|S| + s. Labels render as "(r,s)".
RingPtr direct_product(const RingPtr& r, const RingPtr& s, int cap = kDefaultCap);

enum class MatrixShape { Full, UpperTriangular };

/// k x k matrices over R; UpperTriangular stores only entries on or above
/// the diagonal. Element index is mixed-radix over the stored slots in
/// row-major order, least significant slot first.
RingPtr matrix_ring(const RingPtr& r, int k, MatrixShape shape, int cap = kDefaultCap);

struct GroupRingResult {
    RingPtr ring;
    RingMap augmentation;  // coefficient-sum homomorphism onto the base ring
};

/// Group ring R[G]: coefficient vectors G -> R with convolution product.
/// Index is mixed-radix base |R| over group positions, identity coefficient
/// least significant. Also returns the augmentation map, verified to be a
/// surjective ring homomorphism.
GroupRingResult group_ring(const RingPtr& r, const GroupPtr& g, int cap = kDefaultCap);

/// Image of r under the canonical embedding R -> R[G] (r at the group
/// identity, zero elsewhere).
int group_ring_embed(const RingPtr& base, const GroupPtr& g, const RingPtr& rg, int r);

struct IdealWitness {
    enum class Reason { MissingZero, NotAddClosed, NotLeftAbsorbing, NotRightAbsorbing };
    Reason reason;
    int a = -1, b = -1;  // offending pair: (x, y) for closure, (r, x) for absorption
};

/// Verifies that `members` (ascending element indices) is a two-sided ideal.
std::optional<IdealWitness> check_ideal(const FiniteRing& r, const std::vector<int>& members);

struct QuotientResult {
    RingPtr ring;
    RingMap projection;
};

/// Quotient by a verified two-sided ideal. Canonical coset representative is
/// the minimum element index per coset; quotient elements are the ascending
/// representatives, re-indexed.
QuotientResult quotient(const RingPtr& r, const std::vector<int>& ideal_members);

GroupPtr make_cyclic(int n);
GroupPtr group_product(const GroupPtr& g, const GroupPtr& h);
GroupPtr make_s3();

}  // namespace ringlab
