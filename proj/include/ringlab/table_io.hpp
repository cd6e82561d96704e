#pragma once

#include <string>

#include "ringlab/construct.hpp"
#include "ringlab/exec.hpp"
#include "ringlab/finite_ring.hpp"

namespace ringlab {

// Text table format:
//   ring <n>
//   zero <i>
//   one <i>
//   <n rows of n space-separated indices>   (addition)
//   <n rows of n space-separated indices>   (multiplication)
// '#' starts a comment anywhere in a line; blank lines are skipped.
// save(load(f)) reproduces f up to comments and whitespace.

std::string save_ring(const FiniteRing& r);

/// Parses and fully validates the ring axioms (externally supplied tables
/// are never trusted). Throws ValidationError / CapError.
RingPtr load_ring(const std::string& text, int cap = kDefaultCap, Exec exec = Exec::Serial);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

RingPtr load_ring_file(const std::string& path, int cap = kDefaultCap, Exec exec = Exec::Serial);

}  // namespace ringlab
