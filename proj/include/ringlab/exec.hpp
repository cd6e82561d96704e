#pragma once

namespace ringlab {

// Execution mode for table-scanning kernels. Serial is the reference
// implementation; Parallel uses OpenMP when compiled in and falls back to
// the serial path otherwise. Both produce identical results, including
// witness selection (lexicographically smallest).
enum class Exec { Serial, Parallel };

int max_threads();
void set_threads(int n);

}  // namespace ringlab
