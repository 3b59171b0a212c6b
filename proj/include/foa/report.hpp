#pragma once

#include <optional>
#include <string>

#include "foa/pairing.hpp"

namespace foa {

struct SolveCounters {
  long long candidates = 0;  // enumerated candidate tuples / guess combos
  long long evaluated = 0;   // distinct pairings actually costed
  int recursion_depth = 0;   // deepest recursive call (ratio solver)
  double wall_ms = 0.0;      // not part of the deterministic payload
};

// Common result envelope for every solver.  `certified` is false when an
// enumeration budget was hit (the value is still feasible, just without
// the approximation guarantee) and always false for heuristics.
struct SolveReport {
  std::string algorithm;  // "exact" | "qptas" | "heuristic"
  Objective objective = Objective::SumAngles;
  std::optional<double> epsilon;
  double value = 0.0;
  Assignment assignment;
  bool certified = false;
  SolveCounters counters;
};

}  // namespace foa
