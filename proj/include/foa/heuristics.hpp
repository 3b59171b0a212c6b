#pragma once

#include "foa/report.hpp"

namespace foa {

// Pairs c_i with c_{2n+1-i}: maximally nested baselines.
CameraPairing nested_pairing(const Instance& inst);

// Pairs c_i with c_{n+i}: parallel shift.  Both canonical pairings are
// all-overlapping for every n.
CameraPairing shift_pairing(const Instance& inst);

// Evaluates both canonical pairings with the objective's optimal
// association and returns the better one.  Carries no approximation
// certificate.
SolveReport best_heuristic(const Instance& inst, Objective objective);

}  // namespace foa
