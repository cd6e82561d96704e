#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ringlab/exec.hpp"
#include "ringlab/finite_ring.hpp"

namespace ringlab {

enum class StructureTag {
    Field,          // finite field of order field_order
    Boolean,        // every element idempotent
    Z3,             // the 3-element field
    Z3xBoolean,     // Z3 x B with B a nontrivial Boolean ring
    Z3xZ3,
    Z3xZ3xBoolean,
    DRing,          // every zero-divisor nilpotent
    Other,          // nothing above matched
};

const char* structure_tag_name(StructureTag t);

/// Classification verdict: the set of satisfied class tags. Tags are not
/// mutually exclusive (Z3 is both a field and z3; Z2 is a field, Boolean and
/// a D-ring). `split_witness` records a central idempotent realizing each
/// product tag.
struct StructureClass {
    std::set<StructureTag> tags;
    int field_order = 0;
    std::map<StructureTag, int> split_witness;

    bool has(StructureTag t) const { return tags.count(t) != 0; }
    std::vector<std::string> tag_names() const;
};

/// Splitting along a central idempotent f: R ~ fR x (1-f)R. The returned
/// corner rings carry f (resp. 1-f) as their identity; the product pairing
/// x -> (fx, (1-f)x) is verified to be a ring isomorphism on construction.
struct PeirceSplit {
    int idempotent = -1;
    RingPtr corner;     // fR
    RingPtr co_corner;  // (1-f)R
    // corner-index of f*x and (1-f)*x for every parent element
    std::vector<int32_t> corner_of;
    std::vector<int32_t> co_corner_of;
};

/// Requires f central, idempotent, and nontrivial (not 0 or 1).
PeirceSplit peirce_split(const RingPtr& r, int f);

/// Nontrivial central idempotents of r, ascending (0 and 1 excluded).
std::vector<int> central_idempotents(const FiniteRing& r, Exec exec = Exec::Serial);

/// Structural classification against the tag list above. Product tags are
/// decided by central-idempotent splits (isomorphism search is used only to
/// certify 3-element corners), so classification works above the iso cap.
/// Rejects the trivial ring.
StructureClass classify(const RingPtr& r, Exec exec = Exec::Serial);

/// classify(R / J(R)).
StructureClass classify_mod_j(const RingPtr& r, Exec exec = Exec::Serial);

/// Number of classifications performed so far (process-wide); used by tests
/// to pin which code paths a computation exercised.
std::uint64_t classify_probe_count();

}  // namespace ringlab
