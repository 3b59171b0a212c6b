#pragma once

#include <vector>

#include "foa/geometry.hpp"

namespace foa {

enum class Objective { SumAngles, SumRatios };

// One camera pair, as 0-based indices into Instance::cameras.
struct CameraPair {
  int left = -1;
  int right = -1;
  friend bool operator==(const CameraPair&, const CameraPair&) = default;
};

// A perfect pairing of the 2n cameras into n pairs.  The dummy pairing is
// the infinite-cost sentinel returned by infeasible solver branches.
struct CameraPairing {
  std::vector<CameraPair> pairs;
  bool dummy = false;

  static CameraPairing make_dummy() {
    CameraPairing p;
    p.dummy = true;
    return p;
  }

  int size() const { return static_cast<int>(pairs.size()); }

  // left < right within each pair, pairs sorted by left index.
  void canonicalize();

  // Every index in [0, camera_count) appears exactly once.
  bool is_perfect(int camera_count) const;
};

bool operator==(const CameraPairing& a, const CameraPairing& b);

// Canonical lexicographic order used for deterministic tie-breaking;
// the dummy pairing sorts after everything else.
bool pairing_less(const CameraPairing& a, const CameraPairing& b);

// A pairing plus a bijection from pair slots to targets.
// target_of_pair[i] is the 0-based target assigned to pairing.pairs[i].
struct Assignment {
  CameraPairing pairing;
  std::vector<int> target_of_pair;
  Objective objective = Objective::SumAngles;
  double value = 0.0;
};

// True iff every pair straddles the midpoint M: left camera among the n
// leftmost, right camera among the n rightmost.  For pairings of distinct
// collinear cameras this is equivalent to all baselines pairwise
// intersecting.
bool is_all_overlapping(const CameraPairing& pairing, const Instance& inst);

// Repeatedly replaces two disjoint baselines (c_i,c_j), (c_i',c_j') with
// c_i < c_j < c_i' < c_j' by the overlapping (c_i,c_i'), (c_j,c_j').  Each
// exchange strictly grows the total baseline length, so this terminates in
// an all-overlapping pairing.  Neither objective gets worse: each new
// baseline interval contains the one it replaces.
CameraPairing uncross(const CameraPairing& pairing, const Instance& inst);

// Optimal pair-to-target bijection maximizing the sum of tracking angles,
// via an exact assignment solver on the n x n angle matrix.  Among equal
// optima the lexicographically smallest target vector is returned.
Assignment assign_angles(const CameraPairing& pairing, const Instance& inst);

// Optimal bijection minimizing the sum of aspect ratios: sort baselines
// ascending, depths ascending, match rank to rank.
Assignment assign_ratios(const CameraPairing& pairing, const Instance& inst);

// Recomputes the objective value from scratch.  Dummy pairing -> +inf;
// empty assignment -> 0.
double evaluate(const Assignment& assignment, const Instance& inst);

// Sum-of-ratios cost of a pairing against a subset of targets (rank-sorted
// matching).  +inf for the dummy pairing.  |target_subset| must equal the
// number of pairs.
double ratio_cost(const CameraPairing& pairing, const Instance& inst,
                  const std::vector<int>& target_subset);

// Max-angle-sum value of a pairing over all bijections (value only; no
// tie-break refinement).  Used by search loops that only compare values.
double angle_sum_value(const CameraPairing& pairing, const Instance& inst);

}  // namespace foa
