#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/classes.hpp"
#include "ringlab/exec.hpp"
#include "ringlab/finite_ring.hpp"

namespace ringlab {

enum class CleanFlavor { NilClean, WeaklyNilClean };

enum class Sign { Plus, Minus, Both };  // which of e / -e is the idempotent

/// One witness a = e + w with e a very idempotent and w nilpotent.
/// No commutation between e and w is required.
struct Decomposition {
    int element;
    int very_idempotent;
    Sign sign;
    int nilpotent;
    int nil_index;  // minimal k with w^k = 0
};

enum class ElementMode {
    NilClean,
    UniquelyNilClean,
    WeaklyNilClean,
    UniquelyWeaklyNilClean,
};

struct ElementVerdict {
    int element = -1;
    ElementMode mode = ElementMode::NilClean;
    std::vector<Decomposition> decompositions;
    bool holds = false;
    // For a failed unique-mode with at least two decompositions: a pair
    // violating the uniqueness rule (distinct e for plain, distinct e^2 for
    // weak).
    std::optional<std::pair<Decomposition, Decomposition>> uniqueness_witness;
};

enum class RingMode {
    NilClean,
    WeaklyNilClean,
    UniquelyNilClean,
    UniquelyWeaklyNilClean,
    UniquelyWeaklyDNilClean,  // every zero-divisor uniquely weakly nil-clean
    UniquelyDNilClean,        // every zero-divisor uniquely nil-clean
    ZeroDivVeryIdemOrNilpotent,
};

const char* ring_mode_name(RingMode m);
std::optional<RingMode> ring_mode_from_name(const std::string& name);

struct RingVerdict {
    bool holds = false;
    int counterexample = -1;  // smallest failing element index
};

/// All decompositions of `a`, sorted by (e, w). NilClean restricts e to
/// idempotents; WeaklyNilClean allows any very idempotent.
std::vector<Decomposition> decompositions(const FiniteRing& r, int a, CleanFlavor flavor);
std::vector<Decomposition> decompositions(const ClassContext& ctx, int a, CleanFlavor flavor);

/// Element-level predicate. Unique modes require a nonempty decomposition
/// list; weak uniqueness compares the squares e^2, plain uniqueness the
/// idempotents themselves.
ElementVerdict element_verdict(const FiniteRing& r, int a, ElementMode mode);
ElementVerdict element_verdict(const ClassContext& ctx, int a, ElementMode mode);

/// Ring-level predicate: quantifies the element verdict over all elements
/// (plain modes) or over the zero-divisors (D-modes). Rejects the trivial
/// ring. The counterexample is the smallest failing index.
RingVerdict ring_predicate(const FiniteRing& r, RingMode mode, Exec exec = Exec::Serial);
RingVerdict ring_predicate(const ClassContext& ctx, RingMode mode, Exec exec = Exec::Serial);

struct UnitFormReport {
    bool holds = false;
    int bad_unit = -1;          // a unit not of the form x +- 1 with x nilpotent
    int bad_form_element = -1;  // an x +- 1 (x nilpotent) that is not a unit
};

/// Checks U(R) = {x + 1 : x nilpotent} union {x - 1 : x nilpotent}.
UnitFormReport unit_form_check(const FiniteRing& r, Exec exec = Exec::Serial);
UnitFormReport unit_form_check(const ClassContext& ctx);

/// Number of decomposition enumerations performed so far (process-wide);
/// used by tests to pin which code paths a computation exercised.
std::uint64_t decomposition_probe_count();

}  // namespace ringlab
