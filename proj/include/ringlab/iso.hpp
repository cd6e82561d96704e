#pragma once

#include <optional>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

inline constexpr int kDefaultIsoCap = 64;

/// Brute-force ring isomorphism search. Fixes zero -> zero and one -> one,
/// prunes candidates by per-element profile (additive order, idempotency,
/// nilpotency), assigns images to a minimal additive generating set and
/// extends by additive closure. Any candidate found is re-verified on both
/// full tables before being returned.
///
/// Throws CapError when either order exceeds `cap` (callers should fall back
/// to structural classification instead).
std::optional<RingMap> find_isomorphism(const RingPtr& r, const RingPtr& s,
                                        int cap = kDefaultIsoCap);

}  // namespace ringlab
