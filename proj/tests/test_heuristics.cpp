#include <doctest.h>

#include "foa/heuristics.hpp"

using namespace foa;

TEST_CASE("canonical pairings have the expected shape") {
  const Instance inst{{0.0, 1.0, 2.0, 3.0}, {{1.5, 10.0}, {1.5, 12.0}}};
  const CameraPairing nested = nested_pairing(inst);
  CHECK(nested.pairs[0] == CameraPair{0, 3});
  CHECK(nested.pairs[1] == CameraPair{1, 2});
  const CameraPairing shift = shift_pairing(inst);
  CHECK(shift.pairs[0] == CameraPair{0, 2});
  CHECK(shift.pairs[1] == CameraPair{1, 3});

  const Instance single{{0.0, 1.0}, {{0.5, 10.0}}};
  CHECK(nested_pairing(single).pairs[0] == CameraPair{0, 1});
  CHECK(shift_pairing(single).pairs[0] == CameraPair{0, 1});
}

TEST_CASE("both canonical pairings are all-overlapping for every n") {
  for (int n = 1; n <= 12; ++n) {
    Instance inst;
    for (int i = 0; i < 2 * n; ++i) inst.cameras.push_back(i);
    for (int i = 0; i < n; ++i) inst.targets.push_back({n - 0.5, 10.0 * n});
    CHECK(is_all_overlapping(nested_pairing(inst), inst));
    CHECK(is_all_overlapping(shift_pairing(inst), inst));
    CHECK(nested_pairing(inst).is_perfect(2 * n));
    CHECK(shift_pairing(inst).is_perfect(2 * n));
  }
}

TEST_CASE("best_heuristic picks the cheaper pairing on the ratio example") {
  const Instance inst{{0.0, 1.0, 2.0, 3.0}, {{1.5, 4.0}, {1.5, 8.0}}};
  const SolveReport r = best_heuristic(inst, Objective::SumRatios);
  // shift: 4/2 + 8/2 = 6; nested: 4/1 + 8/3 ~ 6.667.
  CHECK(r.value == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(r.assignment.pairing.pairs[0] == CameraPair{0, 2});
  CHECK_FALSE(r.certified);
  CHECK(r.algorithm == "heuristic");
  CHECK(r.counters.evaluated == 2);
}

TEST_CASE("best_heuristic is exact for n = 1") {
  const Instance inst{{-3.0, 2.0}, {{0.0, 9.0}}};
  const SolveReport angles = best_heuristic(inst, Objective::SumAngles);
  CHECK(angles.value == doctest::Approx(tracking_angle(-3.0, 2.0, {0.0, 9.0})));
  const SolveReport ratios = best_heuristic(inst, Objective::SumRatios);
  CHECK(ratios.value == doctest::Approx(9.0 / 5.0));
}
