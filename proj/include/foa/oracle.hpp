#pragma once

#include "foa/pairing.hpp"

namespace foa {

enum class SearchSpace {
  AllOverlapping,  // n! bijections of left cameras onto right cameras
  AllPairings      // (2n-1)!! perfect pairings of all 2n cameras
};

struct OracleCaps {
  int max_n_overlapping = 8;
  int max_n_all_pairings = 6;
};

struct OracleResult {
  Assignment best;
  long long pairings_examined = 0;
  Objective objective = Objective::SumAngles;
};

// Exhaustive ground-truth solver for small instances.  Restricting the
// search to all-overlapping pairings loses nothing (some optimal pairing
// is all-overlapping), which AllPairings mode verifies end to end.
// Throws InstanceTooLarge above the configured cap.
OracleResult solve_exact(const Instance& inst, Objective objective,
                         SearchSpace space, OracleCaps caps = {});

}  // namespace foa
