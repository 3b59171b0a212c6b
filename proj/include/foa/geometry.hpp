#pragma once

#include <string>
#include <utility>
#include <vector>

#include "foa/errors.hpp"

namespace foa {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// A problem instance: 2n cameras on the x-axis (strictly increasing
// positions) and n targets in the plane.  After normalization via
// project_targets() every target has y >= 0.
struct Instance {
  std::vector<double> cameras;
  std::vector<Point> targets;

  int n() const { return static_cast<int>(targets.size()); }
  int camera_count() const { return static_cast<int>(cameras.size()); }

  // Midpoint M of the segment between the n-th and (n+1)-th cameras.
  // Every all-overlapping pairing straddles this point.
  double midpoint() const;
};

enum class Side { LeftOfM, RightOfM };

// A sub-interval of the camera line, lying entirely on one side of M.
struct Bucket {
  double lo = 0.0;
  double hi = 0.0;
  Side side = Side::LeftOfM;

  double length() const { return hi - lo; }
  // Distance from the bucket endpoint nearer to M to M itself.
  double near_distance(double m) const {
    return side == Side::LeftOfM ? m - hi : lo - m;
  }
};

using BucketSet = std::vector<Bucket>;

// Buckets tiling [M+gamma1, M+gamma2] (or its mirror image) such that each
// bucket's distance to M is at least 1/epsilon^2 times its length.
struct ConformingPartition {
  BucketSet buckets;  // ascending by lo
  double epsilon = 0.0;
  double M = 0.0;
};

struct Validation {
  bool ok = true;
  std::vector<int> offending_targets;  // 0-based target indices
  std::vector<std::string> errors;
};

struct SplitPoints {
  Point z;        // hit of the ray rotated off t->x, nearer to x
  Point z_prime;  // hit of the ray rotated off t->y, nearer to y
  double ratio;   // |x z'| / |x z|
};

// Interior angle at the target between the rays to the two cameras, in
// radians, in (0, pi).  Symmetric in cam_a/cam_b.  Throws
// DegenerateGeometry when the cameras coincide or the target sits on the
// camera line.
double tracking_angle(double cam_a, double cam_b, const Point& target);

// |target.y| / |cam_b - cam_a|.  Symmetric in cam_a/cam_b, always >= 0.
double aspect_ratio(double cam_a, double cam_b, const Point& target);

// Reflects below-line targets to the upper half plane.  Neither objective
// changes for any assignment, so solvers work on the projected instance.
Instance project_targets(const Instance& in);

// Accepts iff cameras are strictly increasing, |C| = 2|T|, every target has
// y > 0 and lies strictly outside the circle whose diameter is [c_1, c_2n].
// That circle contains the circle-with-diameter of every camera pair, so
// acceptance guarantees all tracking angles are below a right angle.
// Targets exactly on the boundary circle are rejected.
Validation validate_for_angles(const Instance& in);

// Weaker gate for the ratio objective: strictly increasing cameras,
// |C| = 2|T|, target y >= 0.  No circle condition.
Validation validate_for_ratios(const Instance& in);

// Conforming partition of [M+gamma1, M+gamma2] (RightOfM) or
// [M-gamma2, M-gamma1] (LeftOfM): each doubling interval
// [M+2^i*gamma1, M+2^{i+1}*gamma1] is cut into ceil(1/epsilon^2) equal
// buckets, the last interval clamped at gamma2.  Requires
// 0 < gamma1 < gamma2 and epsilon in (0, 1].
ConformingPartition conforming_partition(double M, double gamma1,
                                         double gamma2, double epsilon,
                                         Side side);

// Bucket cover of [M-2n*beta, M] and [M, M+2n*beta] used by the ratio
// solver.  Sweeping from M outward, interval i has length 2^i*beta/n
// (i = -1, 0, 1, ...), clamped at the region boundary, and is cut into
// ceil(2/epsilon) equal buckets.  Returns (left set, right set), each
// sorted ascending by lo and tiling its region exactly.
std::pair<BucketSet, BucketSet> ratio_discretization(double M, double beta,
                                                     int n, double epsilon);

// For non-collinear x, y, t with theta = angle(x,t,y), finds z and z' on
// segment xy with angle(x,t,z) = angle(y,t,z') = epsilon*theta and returns
// them with the ratio |xz'|/|xz|.  The ratio is at most 1/epsilon^2 for
// epsilon in (0, 1/2].
SplitPoints split_ratio(const Point& x, const Point& y, const Point& t,
                        double epsilon);

}  // namespace foa
