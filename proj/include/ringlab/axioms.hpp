#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>

#include "ringlab/exec.hpp"
#include "ringlab/finite_ring.hpp"

namespace ringlab {

// Checks run in this fixed order; the reported violation is the first
// failing check, with the lexicographically smallest witness triple. The
// parallel kernel reproduces the serial answer exactly.
enum class Axiom {
    TableShape,
    ZeroOneDistinct,
    AddCommutative,
    AddAssociative,
    ZeroIdentity,
    AdditiveInverse,
    OneIdentity,
    MulAssociative,
    LeftDistributive,
    RightDistributive,
};

const char* axiom_name(Axiom a);

struct AxiomViolation {
    Axiom axiom;
    std::array<int, 3> witness;  // offending elements; unused slots are -1
    std::string message;
};

struct AxiomReport {
    bool ok = false;
    std::optional<AxiomViolation> violation;
};

/// Full O(n^3) check of the unital ring axioms on raw tables.
AxiomReport validate_axioms(int order,
                            std::span<const int32_t> add,
                            std::span<const int32_t> mul,
                            int zero,
                            int one,
                            Exec exec = Exec::Serial);

AxiomReport validate_axioms(const FiniteRing& r, Exec exec = Exec::Serial);

}  // namespace ringlab
