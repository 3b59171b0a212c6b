#include "foa/hungarian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace foa::detail {

AssignmentSolution min_cost_assignment(
    const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  const double inf = std::numeric_limits<double>::infinity();

  // 1-based arrays; p[j] is the row matched to column j.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);

  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }

  AssignmentSolution out;
  out.row_to_col.assign(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (p[j]) out.row_to_col[p[j] - 1] = j - 1;
  }
  out.total = 0.0;
  for (int i = 0; i < n; ++i) out.total += cost[i][out.row_to_col[i]];
  out.u.assign(n, 0.0);
  out.v.assign(n, 0.0);
  for (int i = 0; i < n; ++i) out.u[i] = u[i + 1];
  for (int j = 0; j < n; ++j) out.v[j] = v[j + 1];
  return out;
}

namespace {

// Does the tight-edge graph admit a perfect matching of `rows` into unused
// columns?  Plain Kuhn augmentation.
bool perfect_matching_exists(const std::vector<std::vector<int>>& adj,
                             const std::vector<int>& rows,
                             std::vector<int>& col_owner) {
  std::vector<int> local_owner = col_owner;
  const int n = static_cast<int>(adj.size());
  std::vector<char> visited(n, 0);

  std::function<bool(int)> augment = [&](int row) -> bool {
    for (int c : adj[row]) {
      if (visited[c]) continue;
      visited[c] = 1;
      if (local_owner[c] < 0 || augment(local_owner[c])) {
        local_owner[c] = row;
        return true;
      }
    }
    return false;
  };

  for (int r : rows) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(r)) return false;
  }
  col_owner = local_owner;
  return true;
}

}  // namespace

std::vector<int> lex_min_optimal_assignment(
    const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) return {};
  const AssignmentSolution base = min_cost_assignment(cost);

  double scale = 1.0;
  for (const auto& row : cost) {
    for (double c : row) scale = std::max(scale, std::abs(c));
  }
  const double tol = 1e-10 * scale;

  // Every perfect matching on tight edges attains the optimum, and every
  // optimum uses only tight edges, so lexicographic refinement can search
  // this graph alone.  The base matching's own edges are kept regardless
  // of rounding so feasibility can never be lost.
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (cost[i][j] - base.u[i] - base.v[j] <= tol ||
          j == base.row_to_col[i]) {
        adj[i].push_back(j);
      }
    }
  }

  std::vector<int> result(n, -1);
  std::vector<char> col_used(n, 0);
  for (int i = 0; i < n; ++i) {
    std::vector<int> rest;
    for (int r = i + 1; r < n; ++r) rest.push_back(r);
    bool pinned = false;
    for (int j : adj[i]) {
      if (col_used[j]) continue;
      std::vector<int> owner(n, -1);
      for (int r = 0; r < i; ++r) owner[result[r]] = r;
      owner[j] = i;
      std::vector<std::vector<int>> masked = adj;
      for (auto& row : masked) {
        row.erase(std::remove_if(row.begin(), row.end(),
                                 [&](int c) { return owner[c] >= 0; }),
                  row.end());
      }
      if (perfect_matching_exists(masked, rest, owner)) {
        result[i] = j;
        col_used[j] = 1;
        pinned = true;
        break;
      }
    }
    if (!pinned) {
      // Rounding starved the candidate list; fall back to the base edge.
      const int j = base.row_to_col[i];
      result[i] = j;
      col_used[j] = 1;
    }
  }
  return result;
}

}  // namespace foa::detail
