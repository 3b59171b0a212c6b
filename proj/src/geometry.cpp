#include "foa/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace foa {

namespace {

struct Vec {
  double x, y;
};

double cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }
double dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }

Vec rotate(const Vec& v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

bool strictly_increasing(const std::vector<double>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i - 1] < xs[i])) return false;
  }
  return true;
}

}  // namespace

double Instance::midpoint() const {
  const int half = n();
  return 0.5 * (cameras.at(half - 1) + cameras.at(half));
}

double tracking_angle(double cam_a, double cam_b, const Point& target) {
  if (cam_a == cam_b) {
    throw DegenerateGeometry("tracking_angle: cameras coincide");
  }
  if (target.y == 0.0) {
    throw DegenerateGeometry("tracking_angle: target on the camera line");
  }
  const Vec va{cam_a - target.x, -target.y};
  const Vec vb{cam_b - target.x, -target.y};
  // atan2 of |cross| and dot is stable for both tiny and near-pi angles,
  // unlike the law-of-cosines route which cancels for small angles.
  return std::atan2(std::abs(cross(va, vb)), dot(va, vb));
}

double aspect_ratio(double cam_a, double cam_b, const Point& target) {
  if (cam_a == cam_b) {
    throw DegenerateGeometry("aspect_ratio: cameras coincide");
  }
  return std::abs(target.y) / std::abs(cam_b - cam_a);
}

Instance project_targets(const Instance& in) {
  Instance out = in;
  for (Point& t : out.targets) t.y = std::abs(t.y);
  return out;
}

Validation validate_for_angles(const Instance& in) {
  Validation v;
  if (in.cameras.size() != 2 * in.targets.size() || in.targets.empty()) {
    v.ok = false;
    v.errors.push_back("camera count must be exactly twice the target count");
  }
  if (!strictly_increasing(in.cameras)) {
    v.ok = false;
    v.errors.push_back("camera positions must be strictly increasing");
  }
  if (!v.ok) return v;

  const double cx = 0.5 * (in.cameras.front() + in.cameras.back());
  const double radius = 0.5 * (in.cameras.back() - in.cameras.front());
  for (int i = 0; i < in.n(); ++i) {
    const Point& t = in.targets[i];
    if (!(t.y > 0.0)) {
      v.ok = false;
      v.offending_targets.push_back(i);
      v.errors.push_back("target " + std::to_string(i + 1) +
                         " is not strictly above the camera line");
      continue;
    }
    const double dx = t.x - cx;
    // Strict: a target exactly on the circle sees the extreme pair at a
    // right angle and is rejected.
    if (!(dx * dx + t.y * t.y > radius * radius)) {
      v.ok = false;
      v.offending_targets.push_back(i);
      v.errors.push_back("target " + std::to_string(i + 1) +
                         " lies on or inside the circle spanned by the "
                         "outermost cameras");
    }
  }
  return v;
}

Validation validate_for_ratios(const Instance& in) {
  Validation v;
  if (in.cameras.size() != 2 * in.targets.size() || in.targets.empty()) {
    v.ok = false;
    v.errors.push_back("camera count must be exactly twice the target count");
  }
  if (!strictly_increasing(in.cameras)) {
    v.ok = false;
    v.errors.push_back("camera positions must be strictly increasing");
  }
  for (int i = 0; i < in.n(); ++i) {
    if (in.targets[i].y < 0.0) {
      v.ok = false;
      v.offending_targets.push_back(i);
      v.errors.push_back("target " + std::to_string(i + 1) +
                         " has negative depth; normalize first");
    }
  }
  return v;
}

namespace {

int buckets_per_interval(double epsilon, double exponent_inverse) {
  // exponent_inverse is 1/eps^2 or 2/eps; the small downward nudge keeps
  // exactly-representable values (eps = 0.5 -> 4) from rounding up.
  (void)epsilon;
  const double q = std::ceil(exponent_inverse - 1e-9);
  return std::max(1, static_cast<int>(q));
}

}  // namespace

ConformingPartition conforming_partition(double M, double gamma1,
                                         double gamma2, double epsilon,
                                         Side side) {
  if (!(gamma1 > 0.0) || !(gamma2 > gamma1)) {
    throw InvalidRange("conforming_partition: need 0 < gamma1 < gamma2");
  }
  if (!(epsilon > 0.0) || epsilon > 1.0) {
    throw InvalidRange("conforming_partition: epsilon must be in (0, 1]");
  }
  const int q = buckets_per_interval(epsilon, 1.0 / (epsilon * epsilon));

  ConformingPartition part;
  part.epsilon = epsilon;
  part.M = M;

  // Offsets from M: double from gamma1 until gamma2, clamping the last
  // interval.  Each interval is cut into q equal buckets, so every bucket
  // length is at most (interval start)/q <= eps^2 * (distance to M).
  double start = gamma1;
  while (start < gamma2) {
    const double end = std::min(2.0 * start, gamma2);
    for (int t = 0; t < q; ++t) {
      const double d0 = start + (end - start) * t / q;
      const double d1 = (t + 1 == q) ? end : start + (end - start) * (t + 1) / q;
      if (side == Side::RightOfM) {
        part.buckets.push_back({M + d0, M + d1, side});
      } else {
        part.buckets.push_back({M - d1, M - d0, side});
      }
    }
    start = end;
  }
  if (side == Side::LeftOfM) {
    std::reverse(part.buckets.begin(), part.buckets.end());
  }
  return part;
}

std::pair<BucketSet, BucketSet> ratio_discretization(double M, double beta,
                                                     int n, double epsilon) {
  if (!(beta > 0.0)) {
    throw InvalidRange("ratio_discretization: beta must be positive");
  }
  if (n < 1) {
    throw InvalidRange("ratio_discretization: n must be at least 1");
  }
  if (!(epsilon > 0.0) || epsilon > 1.0) {
    throw InvalidRange("ratio_discretization: epsilon must be in (0, 1]");
  }
  const int q = buckets_per_interval(epsilon, 2.0 / epsilon);
  const double reach = 2.0 * n * beta;

  // Sweep from M outward; interval i has length 2^i*beta/n starting at
  // i = -1, clamped at the region boundary.  Intervals are collected
  // outward then emitted in ascending order so the tiling is contiguous.
  std::vector<std::pair<double, double>> spans;  // offsets (near, far), near < far
  double near = 0.0;
  double step = beta / (2.0 * n);
  while (near < reach) {
    double far = near + step;
    if (far > reach) far = reach;
    if (far <= near) {  // step underflowed below representable progress
      step *= 2.0;
      continue;
    }
    spans.emplace_back(near, far);
    near = far;
    step *= 2.0;
  }

  BucketSet left, right;
  for (auto it = spans.rbegin(); it != spans.rend(); ++it) {
    const auto [d_near, d_far] = *it;
    for (int t = q; t-- > 0;) {
      const double d0 = d_near + (d_far - d_near) * t / q;
      const double d1 =
          (t + 1 == q) ? d_far : d_near + (d_far - d_near) * (t + 1) / q;
      left.push_back({M - d1, M - d0, Side::LeftOfM});
    }
  }
  for (const auto& [d_near, d_far] : spans) {
    for (int t = 0; t < q; ++t) {
      const double d0 = d_near + (d_far - d_near) * t / q;
      const double d1 =
          (t + 1 == q) ? d_far : d_near + (d_far - d_near) * (t + 1) / q;
      right.push_back({M + d0, M + d1, Side::RightOfM});
    }
  }
  return {std::move(left), std::move(right)};
}

SplitPoints split_ratio(const Point& x, const Point& y, const Point& t,
                        double epsilon) {
  if (!(epsilon > 0.0) || epsilon > 0.5) {
    throw InvalidRange("split_ratio: epsilon must be in (0, 1/2]");
  }
  const Vec tx{x.x - t.x, x.y - t.y};
  const Vec ty{y.x - t.x, y.y - t.y};
  const double cr = cross(tx, ty);
  if (cr == 0.0) {
    throw DegenerateGeometry("split_ratio: points are collinear");
  }
  const double theta = std::atan2(std::abs(cr), dot(tx, ty));
  const double turn = (cr > 0.0 ? 1.0 : -1.0) * epsilon * theta;

  const Vec seg{y.x - x.x, y.y - x.y};
  auto hit_segment_line = [&](const Vec& dir) -> Point {
    // Solve t + a*dir = x + b*seg for b; the rotated ray stays inside the
    // triangle so the denominator cannot vanish.
    const double denom = cross(seg, dir);
    const Vec tx_from_x{t.x - x.x, t.y - x.y};
    const double b = cross(tx_from_x, dir) / denom;
    return {x.x + b * seg.x, x.y + b * seg.y};
  };

  SplitPoints out;
  out.z = hit_segment_line(rotate(tx, turn));
  out.z_prime = hit_segment_line(rotate(ty, -turn));
  out.ratio = std::hypot(out.z_prime.x - x.x, out.z_prime.y - x.y) /
              std::hypot(out.z.x - x.x, out.z.y - x.y);
  return out;
}

}  // namespace foa
