#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "foa/io.hpp"
#include "foa/max_angles.hpp"
#include "foa/oracle.hpp"

using namespace foa;

TEST_CASE("bucket ladders: sliver width, conforming bound, right reach") {
  // n = 1, a = 1 (cameras at M-1 and M+2 give a <= d).
  const Instance inst{{-1.0, 2.0}, {{0.0, 10.0}}};
  const double M = inst.midpoint();
  CHECK(M == 0.5);
  const double eps = 0.1;
  const AngleBuckets b = build_angle_buckets(inst, eps);

  // Sliver buckets adjacent to M on both sides, width eps*a/(100 n^2).
  const double a = M - inst.cameras.front();
  CHECK(a == 1.5);
  const double sliver = eps * a / 100.0;
  CHECK(b.left[0].hi == M);
  CHECK(b.left[0].lo == doctest::Approx(M - sliver).epsilon(1e-15));
  CHECK(b.right[0].lo == M);
  CHECK(b.right[0].hi == doctest::Approx(M + sliver).epsilon(1e-15));

  // Every non-sliver bucket satisfies the conforming bound; the right
  // ladder stops at M + a/eps^2 even though no camera lives out there.
  const double inv = 1.0 / (eps * eps);
  for (std::size_t i = 1; i < b.left.size(); ++i) {
    const Bucket& k = b.left[i];
    CHECK(k.near_distance(M) + 1e-9 >= inv * k.length());
  }
  for (std::size_t i = 1; i < b.right.size(); ++i) {
    const Bucket& k = b.right[i];
    CHECK(k.near_distance(M) + 1e-9 >= inv * k.length());
  }
  double right_reach = 0.0;
  for (const Bucket& k : b.right) right_reach = std::max(right_reach, k.hi);
  CHECK(right_reach == doctest::Approx(M + a * inv));
  // Left ladder covers [M-a, M] exactly.
  double left_reach = M;
  for (const Bucket& k : b.left) left_reach = std::min(left_reach, k.lo);
  CHECK(left_reach == doctest::Approx(M - a));
}

TEST_CASE("sliver width for the unit half-span case") {
  // Cameras at -1 and 1: M = 0, a = 1, so the sliver is eps/100.
  const Instance inst{{-1.0, 1.0}, {{0.0, 10.0}}};
  const AngleBuckets b = build_angle_buckets(inst, 0.1);
  CHECK(b.left[0].lo == doctest::Approx(-0.001).epsilon(1e-15));
  CHECK(b.left[0].hi == 0.0);
}

TEST_CASE("the all-zero guess emits the order-preserving fallback pairing") {
  GenerateOptions opt;
  opt.n = 4;
  opt.seed = 321;
  Instance inst = generate_instance(opt);
  const double M = inst.midpoint();
  if (M - inst.cameras.front() > inst.cameras.back() - M) {
    Instance mirrored;
    for (int i = 2 * opt.n - 1; i >= 0; --i) {
      mirrored.cameras.push_back(2.0 * M - inst.cameras[i]);
    }
    for (const Point& t : inst.targets) {
      mirrored.targets.push_back({2.0 * M - t.x, t.y});
    }
    inst = mirrored;
  }
  // With every count map at zero, everything is paired by the final
  // order-preserving rule: camera i with camera n+i.
  CameraPairing fallback;
  for (int i = 0; i < opt.n; ++i) fallback.pairs.push_back({i, opt.n + i});
  bool seen = false;
  enumerate_candidates(inst, 0.2, [&](const CameraPairing& p) {
    if (p == fallback) seen = true;
    return true;
  });
  CHECK(seen);
}

TEST_CASE("every candidate for n = 1 is the unique pairing") {
  const Instance inst{{-1.0, 2.0}, {{0.0, 10.0}}};
  long long count = enumerate_candidates(
      inst, 0.2, [&](const CameraPairing& p) {
        REQUIRE(p.size() == 1);
        CHECK(p.pairs[0] == CameraPair{0, 1});
        return true;
      });
  CHECK(count >= 1);
}

TEST_CASE("candidates are perfect all-overlapping pairings") {
  for (int seed : {1, 2, 3}) {
    GenerateOptions opt;
    opt.n = 3;
    opt.seed = 100 + seed;
    opt.profile = seed == 3 ? Profile::GeometricGaps : Profile::UniformCameras;
    Instance inst = generate_instance(opt);
    // Enumeration preconditions want a <= d; mirror by hand otherwise.
    const double M = inst.midpoint();
    if (M - inst.cameras.front() > inst.cameras.back() - M) {
      Instance mirrored;
      for (int i = 2 * opt.n - 1; i >= 0; --i) {
        mirrored.cameras.push_back(2.0 * M - inst.cameras[i]);
      }
      for (const Point& t : inst.targets) {
        mirrored.targets.push_back({2.0 * M - t.x, t.y});
      }
      inst = mirrored;
    }
    long long emitted = enumerate_candidates(
        inst, 0.2, [&](const CameraPairing& p) {
          CHECK(p.is_perfect(2 * opt.n));
          CHECK(is_all_overlapping(p, inst));
          return true;
        });
    CHECK(emitted > 0);
  }
}

TEST_CASE("solver achieves the guarantee against the oracle") {
  int idx = 0;
  for (double epsilon : {0.8, 0.6}) {
    for (int n : {2, 3}) {
      for (int rep = 0; rep < 2; ++rep, ++idx) {
        GenerateOptions opt;
        opt.n = n;
        opt.seed = 4000 + idx;
        opt.profile =
            idx % 3 == 0 ? Profile::GeometricGaps : Profile::UniformCameras;
        const Instance inst = generate_instance(opt);
        const double opt_value =
            solve_exact(inst, Objective::SumAngles,
                        SearchSpace::AllOverlapping)
                .best.value;
        const SolveReport r = solve_max_sum_angles(inst, epsilon);
        CHECK(r.certified);
        CHECK(r.value <= opt_value + 1e-9);
        CHECK(r.value >= (1.0 - epsilon) * opt_value - 1e-9);
        CHECK(r.assignment.pairing.is_perfect(2 * n));
        CHECK(evaluate(r.assignment, inst) ==
              doctest::Approx(r.value).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("n = 1 is solved exactly for any epsilon") {
  const Instance inst{{-1.0, 2.0}, {{0.3, 11.0}}};
  for (double epsilon : {0.9, 0.5, 0.1}) {
    const SolveReport r = solve_max_sum_angles(inst, epsilon);
    CHECK(r.value ==
          doctest::Approx(tracking_angle(-1.0, 2.0, {0.3, 11.0})));
  }
}

TEST_CASE("a > d instances are handled via mirroring") {
  // Heavily left-leaning camera set: a = M - c_1 far exceeds d.
  const Instance inst{{-30.0, -1.0, 0.0, 1.0}, {{-3.0, 40.0}, {0.5, 35.0}}};
  REQUIRE(validate_for_angles(inst).ok);
  const double opt_value =
      solve_exact(inst, Objective::SumAngles, SearchSpace::AllOverlapping)
          .best.value;
  const SolveReport r = solve_max_sum_angles(inst, 0.5);
  CHECK(r.value <= opt_value + 1e-9);
  CHECK(r.value >= 0.5 * opt_value - 1e-9);
  CHECK(r.assignment.pairing.is_perfect(4));
  CHECK(evaluate(r.assignment, inst) == doctest::Approx(r.value).epsilon(1e-9));
}

TEST_CASE("invalid inputs are rejected up front") {
  const Instance bad{{-1.0, 1.0}, {{0.0, 0.5}}};  // inside the circle
  CHECK_THROWS_AS(solve_max_sum_angles(bad, 0.5), ValidationError);
  const Instance good{{-1.0, 1.0}, {{0.0, 5.0}}};
  CHECK_THROWS_AS(solve_max_sum_angles(good, 0.0), InvalidRange);
  CHECK_THROWS_AS(solve_max_sum_angles(good, 1.0), InvalidRange);
}

TEST_CASE("identical runs produce identical reports") {
  GenerateOptions opt;
  opt.n = 3;
  opt.seed = 77;
  const Instance inst = generate_instance(opt);
  const SolveReport r1 = solve_max_sum_angles(inst, 0.7);
  const SolveReport r2 = solve_max_sum_angles(inst, 0.7);
  CHECK(r1.value == r2.value);
  CHECK(r1.assignment.pairing == r2.assignment.pairing);
  CHECK(r1.assignment.target_of_pair == r2.assignment.target_of_pair);
  CHECK(r1.counters.candidates == r2.counters.candidates);
  CHECK(r1.counters.evaluated == r2.counters.evaluated);
}

TEST_CASE("tiny budgets yield a usable non-certified report") {
  GenerateOptions opt;
  opt.n = 3;
  opt.seed = 78;
  const Instance inst = generate_instance(opt);
  EnumerationLimits limits;
  limits.max_candidates = 2;
  const SolveReport r = solve_max_sum_angles(inst, 0.6, limits);
  CHECK_FALSE(r.certified);
  CHECK(r.counters.candidates >= 2);
  CHECK(r.assignment.pairing.is_perfect(6));
  CHECK(r.value > 0.0);
}

TEST_CASE("tightening epsilon keeps the value within the bound ladder") {
  GenerateOptions opt;
  opt.n = 3;
  opt.seed = 79;
  const Instance inst = generate_instance(opt);
  const double opt_value =
      solve_exact(inst, Objective::SumAngles, SearchSpace::AllOverlapping)
          .best.value;
  for (double epsilon : {0.9, 0.7, 0.5, 0.3}) {
    const SolveReport r = solve_max_sum_angles(inst, epsilon);
    CHECK(r.value >= (1.0 - epsilon) * opt_value - 1e-9);
    CHECK(r.value <= opt_value + 1e-9);
  }
}
