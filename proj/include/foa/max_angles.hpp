#pragma once

#include <functional>

#include "foa/report.hpp"

namespace foa {

struct EnumerationLimits {
  long long max_candidates = 10'000'000;
};

// Bucket structure for the angle scheme.  Index 0 on each side is the
// narrow bucket adjacent to M; higher indices move away from M.  Cameras
// beyond M + a/eps^2 on the right fall in no bucket.
struct AngleBuckets {
  std::vector<Bucket> left;
  std::vector<Bucket> right;
  double M = 0.0;
  double eps_internal = 0.0;
};

// Builds the two bucket ladders for an instance with a <= d, where
// a = M - c_1 and d = c_2n - M (mirror the instance first otherwise):
// a sliver of width eps*a/(100 n^2) on each side of M, a conforming
// partition of the rest of the left span, and a conforming partition of
// the right span out to M + a/eps^2.
AngleBuckets build_angle_buckets(const Instance& inst, double eps_internal);

// Streams every candidate pairing of the scheme: one per combination of
// the per-bucket count maps (leftmost-in-bucket pairs, rightmost-in-bucket
// pairs, bucket-to-bucket pairs) and the final split point, with all
// "arbitrary" choices resolved order-preservingly.  Stops early when
// `emit` returns false.  Returns the number of candidates emitted.
long long enumerate_candidates(
    const Instance& inst, double eps_internal,
    const std::function<bool(const CameraPairing&)>& emit);

// (1-epsilon)-approximation for the maximum sum of tracking angles:
// evaluates every enumerated candidate with the exact assignment solver
// and keeps the best.  Internally runs the enumeration at epsilon/4,
// which is what the approximation argument needs to deliver the
// user-facing factor.  Throws ValidationError if the instance fails
// validate_for_angles, InvalidRange for epsilon outside (0, 1).
SolveReport solve_max_sum_angles(const Instance& inst, double epsilon,
                                 EnumerationLimits limits = {});

}  // namespace foa
