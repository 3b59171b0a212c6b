#include "foa/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "foa/hungarian.hpp"

namespace foa {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void CameraPairing::canonicalize() {
  for (CameraPair& p : pairs) {
    if (p.left > p.right) std::swap(p.left, p.right);
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const CameraPair& a, const CameraPair& b) {
              return a.left < b.left;
            });
}

bool CameraPairing::is_perfect(int camera_count) const {
  if (dummy) return false;
  if (static_cast<int>(pairs.size()) * 2 != camera_count) return false;
  std::vector<char> seen(camera_count, 0);
  for (const CameraPair& p : pairs) {
    if (p.left < 0 || p.left >= camera_count || p.right < 0 ||
        p.right >= camera_count || p.left == p.right) {
      return false;
    }
    if (seen[p.left] || seen[p.right]) return false;
    seen[p.left] = seen[p.right] = 1;
  }
  return true;
}

bool operator==(const CameraPairing& a, const CameraPairing& b) {
  return a.dummy == b.dummy && a.pairs == b.pairs;
}

bool pairing_less(const CameraPairing& a, const CameraPairing& b) {
  if (a.dummy != b.dummy) return !a.dummy;
  return std::lexicographical_compare(
      a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end(),
      [](const CameraPair& x, const CameraPair& y) {
        if (x.left != y.left) return x.left < y.left;
        return x.right < y.right;
      });
}

bool is_all_overlapping(const CameraPairing& pairing, const Instance& inst) {
  const int n = inst.n();
  for (const CameraPair& p : pairing.pairs) {
    const int lo = std::min(p.left, p.right);
    const int hi = std::max(p.left, p.right);
    if (lo >= n || hi < n) return false;
  }
  return true;
}

CameraPairing uncross(const CameraPairing& pairing, const Instance& inst) {
  (void)inst;  // positions are monotone in index, so indices suffice
  CameraPairing out = pairing;
  out.canonicalize();
  bool changed = true;
  while (changed) {
    changed = false;
    const int m = out.size();
    for (int p = 0; p < m && !changed; ++p) {
      for (int q = p + 1; q < m; ++q) {
        if (out.pairs[p].right < out.pairs[q].left) {
          const CameraPair a = out.pairs[p];
          const CameraPair b = out.pairs[q];
          out.pairs[p] = {a.left, b.left};
          out.pairs[q] = {a.right, b.right};
          out.canonicalize();
          changed = true;
          break;
        }
      }
    }
  }
  return out;
}

namespace {

std::vector<std::vector<double>> negated_angle_matrix(
    const CameraPairing& pairing, const Instance& inst) {
  const int n = pairing.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    const CameraPair& p = pairing.pairs[i];
    for (int j = 0; j < n; ++j) {
      m[i][j] = -tracking_angle(inst.cameras[p.left], inst.cameras[p.right],
                                inst.targets[j]);
    }
  }
  return m;
}

}  // namespace

Assignment assign_angles(const CameraPairing& pairing, const Instance& inst) {
  Assignment a;
  a.pairing = pairing;
  a.objective = Objective::SumAngles;
  if (pairing.dummy) {
    a.value = kInf;
    return a;
  }
  a.pairing.canonicalize();
  if (a.pairing.pairs.empty()) return a;
  const auto matrix = negated_angle_matrix(a.pairing, inst);
  a.target_of_pair = detail::lex_min_optimal_assignment(matrix);
  a.value = 0.0;
  for (int i = 0; i < a.pairing.size(); ++i) {
    a.value -= matrix[i][a.target_of_pair[i]];
  }
  return a;
}

Assignment assign_ratios(const CameraPairing& pairing, const Instance& inst) {
  Assignment a;
  a.pairing = pairing;
  a.objective = Objective::SumRatios;
  if (pairing.dummy) {
    a.value = kInf;
    return a;
  }
  a.pairing.canonicalize();
  const int n = a.pairing.size();
  a.target_of_pair.assign(n, -1);

  std::vector<int> slot_by_baseline(n), target_by_depth(n);
  std::iota(slot_by_baseline.begin(), slot_by_baseline.end(), 0);
  std::iota(target_by_depth.begin(), target_by_depth.end(), 0);
  auto baseline = [&](int slot) {
    const CameraPair& p = a.pairing.pairs[slot];
    return inst.cameras[p.right] - inst.cameras[p.left];
  };
  std::stable_sort(slot_by_baseline.begin(), slot_by_baseline.end(),
                   [&](int s, int t) { return baseline(s) < baseline(t); });
  std::stable_sort(target_by_depth.begin(), target_by_depth.end(),
                   [&](int s, int t) {
                     return std::abs(inst.targets[s].y) <
                            std::abs(inst.targets[t].y);
                   });

  a.value = 0.0;
  for (int r = 0; r < n; ++r) {
    const int slot = slot_by_baseline[r];
    const int tgt = target_by_depth[r];
    a.target_of_pair[slot] = tgt;
    a.value += std::abs(inst.targets[tgt].y) / baseline(slot);
  }
  return a;
}

double evaluate(const Assignment& assignment, const Instance& inst) {
  if (assignment.pairing.dummy) return kInf;
  double total = 0.0;
  for (int i = 0; i < assignment.pairing.size(); ++i) {
    const CameraPair& p = assignment.pairing.pairs[i];
    const Point& t = inst.targets[assignment.target_of_pair[i]];
    if (assignment.objective == Objective::SumAngles) {
      total += tracking_angle(inst.cameras[p.left], inst.cameras[p.right], t);
    } else {
      total += aspect_ratio(inst.cameras[p.left], inst.cameras[p.right], t);
    }
  }
  return total;
}

double ratio_cost(const CameraPairing& pairing, const Instance& inst,
                  const std::vector<int>& target_subset) {
  if (pairing.dummy) return kInf;
  std::vector<double> baselines;
  baselines.reserve(pairing.pairs.size());
  for (const CameraPair& p : pairing.pairs) {
    baselines.push_back(std::abs(inst.cameras[p.right] -
                                 inst.cameras[p.left]));
  }
  std::vector<double> depths;
  depths.reserve(target_subset.size());
  for (int t : target_subset) depths.push_back(std::abs(inst.targets[t].y));
  std::sort(baselines.begin(), baselines.end());
  std::sort(depths.begin(), depths.end());
  double total = 0.0;
  for (std::size_t i = 0; i < baselines.size(); ++i) {
    total += depths[i] / baselines[i];
  }
  return total;
}

double angle_sum_value(const CameraPairing& pairing, const Instance& inst) {
  if (pairing.dummy) return -kInf;
  if (pairing.pairs.empty()) return 0.0;
  const auto matrix = negated_angle_matrix(pairing, inst);
  return -detail::min_cost_assignment(matrix).total;
}

}  // namespace foa
