#pragma once

#include <tuple>

#include "foa/report.hpp"

namespace foa {

struct RatioEnumLimits {
  long long max_combos = 10'000'000;
};

// Instrumentation for one recursive call.  parent_scale is the baseline
// guess active in the parent when this call was spawned (0 at the root).
struct RatioTraceCall {
  int id = -1;
  int parent = -1;
  double parent_scale = 0.0;
  int depth = 0;
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> scales_tried;
};

struct RecursionTrace {
  std::vector<RatioTraceCall> calls;
  int max_depth = 0;
};

// One guess of the per-bucket count maps: how many medium pairs each
// (left bucket, right bucket) cell contributes and how many cameras per
// bucket are endpoints of short baselines.  Zero-count entries may be
// omitted.  Bucket indices refer to the two BucketSets passed alongside.
struct RatioGuess {
  std::vector<std::tuple<int, int, int>> mid;       // (left, right, count)
  std::vector<std::pair<int, int>> short_left;      // (left bucket, count)
  std::vector<std::pair<int, int>> short_right;     // (right bucket, count)
};

struct ClassSplit {
  std::vector<int> cams_short;  // ascending camera indices
  std::vector<int> cams_mid;
  std::vector<int> cams_long;
  CameraPairing pairs_mid;
};

// Splits `cams` into the three baseline classes for one guess: per cell the
// requested number of closest-to-M cameras on each side are paired into
// pairs_mid; per bucket the requested number of the remaining
// farthest-from-M cameras go short; everything else, including cameras
// outside the bucketed region, goes long.  Throws ConstraintViolated when
// the guess exceeds a bucket's population or its two short sums differ.
ClassSplit assign_cameras_to_classes(const Instance& inst,
                                     const std::vector<int>& cams, double M,
                                     const BucketSet& left_buckets,
                                     const BucketSet& right_buckets,
                                     const RatioGuess& guess);

// A (sub)problem: an even camera subset balanced around the global M and
// half as many targets, with bounds on admissible baselines.
struct RatioCall {
  std::vector<int> cameras;  // ascending global camera indices
  std::vector<int> targets;  // global target indices
  double lower = 0.0;
  double upper = 0.0;
  int depth = 0;
};

// Recursive search for the cheapest pairing of the call's cameras using
// baselines in [lower, upper] (upper stretches slightly with depth).  For
// every candidate scale (a cross-M baseline within bounds) and every
// feasible guess, the medium pairs are fixed, the short and long leftovers
// recurse with tightened bounds, and the best rank-matched cost wins.
// Returns the dummy pairing when no guess is feasible.
CameraPairing min_ratio_pair(const RatioCall& call, const Instance& inst,
                             double eps_internal,
                             RecursionTrace* trace = nullptr,
                             RatioEnumLimits limits = {});

// (1+epsilon)-approximation for the minimum sum of aspect ratios.  Runs
// the recursion at epsilon/10, which absorbs the per-level baseline
// shrinkage and yields the user-facing factor.  Throws ValidationError on
// instances failing validate_for_ratios, InvalidRange for epsilon outside
// (0, 1).
SolveReport solve_min_sum_ratios(const Instance& inst, double epsilon,
                                 RatioEnumLimits limits = {},
                                 RecursionTrace* trace = nullptr);

}  // namespace foa
