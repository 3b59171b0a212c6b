#include <doctest.h>

#include <cmath>

#include "foa/heuristics.hpp"
#include "foa/io.hpp"
#include "foa/oracle.hpp"

using namespace foa;

TEST_CASE("oracle on n = 1 returns the unique pairing in both modes") {
  const Instance inst{{-1.0, 1.0}, {{0.3, 5.0}}};
  for (SearchSpace space :
       {SearchSpace::AllOverlapping, SearchSpace::AllPairings}) {
    const OracleResult r = solve_exact(inst, Objective::SumAngles, space);
    CHECK(r.pairings_examined == 1);
    REQUIRE(r.best.pairing.size() == 1);
    CHECK(r.best.pairing.pairs[0] == CameraPair{0, 1});
    CHECK(r.best.value ==
          doctest::Approx(tracking_angle(-1.0, 1.0, {0.3, 5.0})));
  }
}

TEST_CASE("oracle finds the balanced pairing on the ratio example") {
  const Instance inst{{0.0, 1.0, 2.0, 3.0}, {{1.5, 4.0}, {1.5, 8.0}}};
  const OracleResult r =
      solve_exact(inst, Objective::SumRatios, SearchSpace::AllOverlapping);
  CHECK(r.pairings_examined == 2);
  CHECK(r.best.value == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(r.best.pairing.pairs[0] == CameraPair{0, 2});
  CHECK(r.best.pairing.pairs[1] == CameraPair{1, 3});
  // The alternative pairing costs 4/1 + 8/3.
  CHECK(r.best.value < 4.0 + 8.0 / 3.0);
}

TEST_CASE("pairing counts match the two search spaces") {
  const Instance inst{{0.0, 1.0, 2.0, 3.0, 4.0, 5.0},
                      {{2.5, 20.0}, {2.5, 21.0}, {2.5, 22.0}}};
  CHECK(solve_exact(inst, Objective::SumRatios, SearchSpace::AllOverlapping)
            .pairings_examined == 6);  // 3!
  CHECK(solve_exact(inst, Objective::SumRatios, SearchSpace::AllPairings)
            .pairings_examined == 15);  // 5!!
}

TEST_CASE("restricting to all-overlapping pairings loses nothing") {
  for (int seed = 0; seed < 100; ++seed) {
    GenerateOptions opt;
    opt.n = 1 + seed % 4;
    opt.seed = 9000 + seed;
    opt.profile = seed % 5 == 0 ? Profile::GeometricGaps
                                : Profile::UniformCameras;
    const Instance inst = generate_instance(opt);
    for (Objective objective : {Objective::SumAngles, Objective::SumRatios}) {
      const OracleResult overlapping =
          solve_exact(inst, objective, SearchSpace::AllOverlapping);
      const OracleResult all =
          solve_exact(inst, objective, SearchSpace::AllPairings);
      CHECK(overlapping.best.value ==
            doctest::Approx(all.best.value).epsilon(1e-9));
      CHECK(is_all_overlapping(overlapping.best.pairing, inst));
    }
  }
}

TEST_CASE("oracle rejects instances beyond the cap") {
  Instance big;
  for (int i = 0; i < 20; ++i) big.cameras.push_back(i);
  for (int i = 0; i < 10; ++i) {
    big.targets.push_back({5.0, 40.0 + i});
  }
  CHECK_THROWS_AS(
      solve_exact(big, Objective::SumRatios, SearchSpace::AllOverlapping),
      InstanceTooLarge);
  CHECK_THROWS_AS(
      solve_exact(big, Objective::SumRatios, SearchSpace::AllPairings),
      InstanceTooLarge);
  OracleCaps raised;
  raised.max_n_overlapping = 10;
  CHECK_NOTHROW(solve_exact(big, Objective::SumRatios,
                            SearchSpace::AllOverlapping, raised));
}

TEST_CASE("heuristics never beat the oracle") {
  for (int seed = 0; seed < 30; ++seed) {
    GenerateOptions opt;
    opt.n = 1 + seed % 5;
    opt.seed = 500 + seed;
    const Instance inst = generate_instance(opt);
    const double exact_angles =
        solve_exact(inst, Objective::SumAngles, SearchSpace::AllOverlapping)
            .best.value;
    const double exact_ratios =
        solve_exact(inst, Objective::SumRatios, SearchSpace::AllOverlapping)
            .best.value;
    CHECK(best_heuristic(inst, Objective::SumAngles).value <=
          exact_angles + 1e-9);
    CHECK(best_heuristic(inst, Objective::SumRatios).value >=
          exact_ratios - 1e-9);
  }
}
