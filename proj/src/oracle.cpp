#include "foa/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace foa {

namespace {

struct Search {
  const Instance& inst;
  Objective objective;
  long long examined = 0;
  double best_value;
  CameraPairing best_pairing;
  bool maximize;

  Search(const Instance& i, Objective o)
      : inst(i),
        objective(o),
        best_pairing(CameraPairing::make_dummy()),
        maximize(o == Objective::SumAngles) {
    best_value = maximize ? -std::numeric_limits<double>::infinity()
                          : std::numeric_limits<double>::infinity();
  }

  void consider(CameraPairing pairing) {
    ++examined;
    pairing.canonicalize();
    double value;
    if (objective == Objective::SumAngles) {
      value = angle_sum_value(pairing, inst);
    } else {
      std::vector<int> all(inst.n());
      std::iota(all.begin(), all.end(), 0);
      value = ratio_cost(pairing, inst, all);
    }
    const bool better = maximize ? value > best_value : value < best_value;
    if (better ||
        (value == best_value && pairing_less(pairing, best_pairing))) {
      best_value = value;
      best_pairing = std::move(pairing);
    }
  }
};

void enumerate_all_pairings(std::vector<int>& free_cams,
                            std::vector<CameraPair>& partial, Search& search) {
  if (free_cams.empty()) {
    CameraPairing p;
    p.pairs = partial;
    search.consider(std::move(p));
    return;
  }
  const int first = free_cams.front();
  for (std::size_t k = 1; k < free_cams.size(); ++k) {
    const int mate = free_cams[k];
    std::vector<int> rest;
    rest.reserve(free_cams.size() - 2);
    for (std::size_t j = 1; j < free_cams.size(); ++j) {
      if (j != k) rest.push_back(free_cams[j]);
    }
    partial.push_back({first, mate});
    enumerate_all_pairings(rest, partial, search);
    partial.pop_back();
  }
}

}  // namespace

OracleResult solve_exact(const Instance& inst, Objective objective,
                         SearchSpace space, OracleCaps caps) {
  const int n = inst.n();
  const int cap = space == SearchSpace::AllOverlapping
                      ? caps.max_n_overlapping
                      : caps.max_n_all_pairings;
  if (n > cap) {
    throw InstanceTooLarge("solve_exact: n = " + std::to_string(n) +
                           " exceeds the cap of " + std::to_string(cap));
  }

  Search search(inst, objective);
  if (space == SearchSpace::AllOverlapping) {
    std::vector<int> right(n);
    std::iota(right.begin(), right.end(), n);
    do {
      CameraPairing p;
      p.pairs.reserve(n);
      for (int i = 0; i < n; ++i) p.pairs.push_back({i, right[i]});
      search.consider(std::move(p));
    } while (std::next_permutation(right.begin(), right.end()));
  } else {
    std::vector<int> all(2 * n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<CameraPair> partial;
    enumerate_all_pairings(all, partial, search);
  }

  OracleResult result;
  result.objective = objective;
  result.pairings_examined = search.examined;
  result.best = objective == Objective::SumAngles
                    ? assign_angles(search.best_pairing, inst)
                    : assign_ratios(search.best_pairing, inst);
  return result;
}

}  // namespace foa
