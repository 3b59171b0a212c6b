#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "foa/pairing.hpp"
#include "foa/rng.hpp"

using namespace foa;

namespace {

// Exhaustive optimum over all bijections, used as the matching oracle.
// best = true maximizes, false minimizes.
double exhaustive_bijection_value(const std::vector<std::vector<double>>& m,
                                  bool maximize) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = maximize ? -std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += m[i][perm[i]];
    best = maximize ? std::max(best, total) : std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Instance random_instance(Rng& rng, int n, bool angle_valid) {
  Instance inst;
  double x = rng.uniform(-20.0, 0.0);
  for (int i = 0; i < 2 * n; ++i) {
    x += rng.uniform(0.2, 5.0);
    inst.cameras.push_back(x);
  }
  const double radius = 0.5 * (inst.cameras.back() - inst.cameras.front());
  for (int i = 0; i < n; ++i) {
    const double depth = angle_valid
                             ? radius * rng.uniform(1.05, 3.0)
                             : rng.uniform(0.2, 30.0);
    inst.targets.push_back(
        {rng.uniform(inst.cameras.front(), inst.cameras.back()), depth});
  }
  return inst;
}

CameraPairing random_perfect_pairing(Rng& rng, int n) {
  std::vector<int> cams(2 * n);
  std::iota(cams.begin(), cams.end(), 0);
  for (int i = 2 * n - 1; i > 0; --i) {
    std::swap(cams[i], cams[rng.uniform_int(0, i)]);
  }
  CameraPairing p;
  for (int i = 0; i < n; ++i) p.pairs.push_back({cams[2 * i], cams[2 * i + 1]});
  p.canonicalize();
  return p;
}

std::vector<std::vector<double>> ratio_matrix(const CameraPairing& p,
                                              const Instance& inst) {
  const int n = p.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[i][j] = aspect_ratio(inst.cameras[p.pairs[i].left],
                             inst.cameras[p.pairs[i].right], inst.targets[j]);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("canonicalize orders pairs and is_perfect detects misuse") {
  CameraPairing p;
  p.pairs = {{3, 1}, {0, 2}};
  p.canonicalize();
  CHECK(p.pairs[0].left == 0);
  CHECK(p.pairs[0].right == 2);
  CHECK(p.pairs[1].left == 1);
  CHECK(p.pairs[1].right == 3);
  CHECK(p.is_perfect(4));
  CHECK_FALSE(p.is_perfect(6));

  CameraPairing twice;
  twice.pairs = {{0, 1}, {1, 2}};
  CHECK_FALSE(twice.is_perfect(4));
  CHECK_FALSE(CameraPairing::make_dummy().is_perfect(0));
}

TEST_CASE("is_all_overlapping is the straddling-index test") {
  const Instance inst{{0.0, 1.0, 2.0, 3.0}, {{1.5, 10.0}, {1.5, 12.0}}};
  CameraPairing good;
  good.pairs = {{0, 2}, {1, 3}};
  CHECK(is_all_overlapping(good, inst));

  CameraPairing disjoint;
  disjoint.pairs = {{0, 1}, {2, 3}};
  CHECK_FALSE(is_all_overlapping(disjoint, inst));

  const Instance single{{0.0, 1.0}, {{0.5, 10.0}}};
  CameraPairing one;
  one.pairs = {{0, 1}};
  CHECK(is_all_overlapping(one, single));
}

TEST_CASE("uncross resolves disjoint baselines") {
  const Instance inst4{{0.0, 1.0, 2.0, 3.0}, {{1.5, 10.0}, {1.5, 12.0}}};
  CameraPairing disjoint;
  disjoint.pairs = {{0, 1}, {2, 3}};
  const CameraPairing fixed = uncross(disjoint, inst4);
  CHECK(fixed.pairs[0] == CameraPair{0, 2});
  CHECK(fixed.pairs[1] == CameraPair{1, 3});

  CameraPairing already;
  already.pairs = {{0, 2}, {1, 3}};
  CHECK(uncross(already, inst4) == already);

  // Three pairs with two cascading exchanges.
  const Instance inst6{{0, 1, 2, 3, 4, 5},
                       {{0.5, 20.0}, {1.5, 20.0}, {2.5, 20.0}}};
  CameraPairing tangled;
  tangled.pairs = {{0, 1}, {2, 5}, {3, 4}};
  const CameraPairing out = uncross(tangled, inst6);
  CHECK(out.pairs[0] == CameraPair{0, 3});
  CHECK(out.pairs[1] == CameraPair{1, 5});
  CHECK(out.pairs[2] == CameraPair{2, 4});
  CHECK(is_all_overlapping(out, inst6));
}

TEST_CASE("exchange widens both baselines and never hurts either metric") {
  Rng rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    double c[4];
    c[0] = rng.uniform(-20.0, 20.0);
    for (int i = 1; i < 4; ++i) c[i] = c[i - 1] + rng.uniform(0.1, 8.0);
    const double radius = 0.5 * (c[3] - c[0]);
    const double cx = 0.5 * (c[0] + c[3]);
    Point t[2];
    for (Point& p : t) {
      p = {rng.uniform(c[0], c[3]), radius * rng.uniform(1.05, 3.0)};
      REQUIRE((p.x - cx) * (p.x - cx) + p.y * p.y > radius * radius);
    }
    // Old disjoint pairs (c0,c1), (c2,c3); new (c0,c2), (c1,c3).
    CHECK(c[2] - c[0] > c[1] - c[0]);
    CHECK(c[3] - c[1] > c[3] - c[2]);
    for (const Point& p : t) {
      CHECK(tracking_angle(c[0], c[2], p) >= tracking_angle(c[0], c[1], p));
      CHECK(tracking_angle(c[1], c[3], p) >= tracking_angle(c[2], c[3], p));
      CHECK(aspect_ratio(c[0], c[2], p) <= aspect_ratio(c[0], c[1], p));
      CHECK(aspect_ratio(c[1], c[3], p) <= aspect_ratio(c[2], c[3], p));
    }
  }
}

TEST_CASE("uncross never worsens either objective") {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform_int(2, 5);
    const Instance inst = random_instance(rng, n, true);
    const CameraPairing before = random_perfect_pairing(rng, n);
    const CameraPairing after = uncross(before, inst);
    CHECK(is_all_overlapping(after, inst));
    CHECK(after.is_perfect(2 * n));
    CHECK(assign_angles(after, inst).value >=
          assign_angles(before, inst).value - 1e-9);
    CHECK(assign_ratios(after, inst).value <=
          assign_ratios(before, inst).value + 1e-9);
  }
}

TEST_CASE("assign_angles picks the best bijection on the worked example") {
  const Instance inst{{-2.0, -1.0, 1.0, 2.0}, {{0.0, 3.0}, {0.0, 5.0}}};
  CameraPairing p;
  p.pairs = {{0, 3}, {1, 2}};  // wide pair A, narrow pair B
  const Assignment a = assign_angles(p, inst);
  // A <-> (0,3), B <-> (0,5): 2*atan(2/3) + 2*atan(1/5), a 90-degree total,
  // beats the crossed bijection's 2*atan(2/5) + 2*atan(1/3).
  const double expected = 2.0 * std::atan(2.0 / 3.0) + 2.0 * std::atan(0.2);
  const double crossed = 2.0 * std::atan(0.4) + 2.0 * std::atan(1.0 / 3.0);
  CHECK(a.value == doctest::Approx(expected).epsilon(1e-12));
  CHECK(a.value > crossed);
  CHECK(a.target_of_pair == std::vector<int>{0, 1});
  CHECK(evaluate(a, inst) == doctest::Approx(a.value).epsilon(1e-12));
}

TEST_CASE("assign_angles is exhaustively optimal up to n = 5") {
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.uniform_int(1, 5);
    const Instance inst = random_instance(rng, n, true);
    const CameraPairing p = random_perfect_pairing(rng, n);
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    CameraPairing canon = p;
    canon.canonicalize();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        m[i][j] =
            tracking_angle(inst.cameras[canon.pairs[i].left],
                           inst.cameras[canon.pairs[i].right], inst.targets[j]);
      }
    }
    const double best = exhaustive_bijection_value(m, true);
    CHECK(assign_angles(p, inst).value == doctest::Approx(best).epsilon(1e-9));
  }
}

TEST_CASE("assign_angles breaks ties lexicographically") {
  // Identical targets make every bijection equal in value.
  const Instance inst{{-1.0, 0.0, 1.0, 2.0}, {{0.5, 9.0}, {0.5, 9.0}}};
  CameraPairing p;
  p.pairs = {{0, 2}, {1, 3}};
  const Assignment a = assign_angles(p, inst);
  CHECK(a.target_of_pair == std::vector<int>{0, 1});

  const Instance inst3{{-1.0, 0.0, 1.0, 2.0, 3.0, 4.0},
                       {{1.5, 20.0}, {1.5, 20.0}, {1.5, 20.0}}};
  CameraPairing q;
  q.pairs = {{0, 3}, {1, 4}, {2, 5}};
  CHECK(assign_angles(q, inst3).target_of_pair == std::vector<int>{0, 1, 2});
}

TEST_CASE("assign_ratios matches ranks on the worked example") {
  // Baselines 1 and 2, depths 3 and 4: 3/1 + 4/2 = 5, not 4/1 + 3/2 = 5.5.
  const Instance inst{{0.0, 1.0, 3.0, 5.0}, {{0.0, 3.0}, {0.0, 4.0}}};
  CameraPairing p;
  p.pairs = {{0, 1}, {2, 3}};
  const Assignment a = assign_ratios(p, inst);
  CHECK(a.value == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(a.target_of_pair == std::vector<int>{0, 1});
  CHECK(evaluate(a, inst) == doctest::Approx(5.0).epsilon(1e-12));

  const Instance single{{0.0, 2.0}, {{1.0, 4.0}}};
  CameraPairing one;
  one.pairs = {{0, 1}};
  CHECK(assign_ratios(one, single).value == doctest::Approx(2.0));

  // Equal baselines: any matching gives the same value.
  const Instance equal{{0.0, 1.0, 2.0, 3.0}, {{0.5, 2.0}, {2.5, 6.0}}};
  CameraPairing eq;
  eq.pairs = {{0, 2}, {1, 3}};
  CHECK(assign_ratios(eq, equal).value == doctest::Approx(2.0 / 2 + 6.0 / 2));
}

TEST_CASE("rank-sorted assignment equals the matching optimum") {
  Rng rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform_int(1, 6);
    const Instance inst = random_instance(rng, n, false);
    const CameraPairing p = random_perfect_pairing(rng, n);
    const double sorted_value = assign_ratios(p, inst).value;
    CameraPairing canon = p;
    canon.canonicalize();
    const double matching_value =
        exhaustive_bijection_value(ratio_matrix(canon, inst), false);
    CHECK(sorted_value == doctest::Approx(matching_value).epsilon(1e-9));
  }
}

TEST_CASE("evaluate recomputes values and handles sentinels") {
  Rng rng(25);
  const Instance inst = random_instance(rng, 3, true);
  const CameraPairing p = random_perfect_pairing(rng, 3);
  const Assignment angles = assign_angles(p, inst);
  CHECK(evaluate(angles, inst) == doctest::Approx(angles.value).epsilon(1e-12));
  const Assignment ratios = assign_ratios(p, inst);
  CHECK(evaluate(ratios, inst) == doctest::Approx(ratios.value).epsilon(1e-12));

  Assignment dummy;
  dummy.pairing = CameraPairing::make_dummy();
  CHECK(std::isinf(evaluate(dummy, inst)));

  const Instance empty{{}, {}};
  Assignment none;
  CHECK(evaluate(none, empty) == 0.0);
}

TEST_CASE("ratio_cost agrees with assign_ratios on full target sets") {
  Rng rng(26);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.uniform_int(1, 5);
    const Instance inst = random_instance(rng, n, false);
    const CameraPairing p = random_perfect_pairing(rng, n);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    CHECK(ratio_cost(p, inst, all) ==
          doctest::Approx(assign_ratios(p, inst).value).epsilon(1e-12));
  }
  CHECK(std::isinf(ratio_cost(CameraPairing::make_dummy(), Instance{}, {})));
}
