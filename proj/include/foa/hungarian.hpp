#pragma once

#include <vector>

namespace foa::detail {

struct AssignmentSolution {
  std::vector<int> row_to_col;
  double total = 0.0;
  // Dual potentials; an edge is tight when cost[i][j] - u[i] - v[j] ~ 0.
  std::vector<double> u, v;
};

// Minimum-cost perfect assignment on a dense square cost matrix via the
// O(n^3) shortest-augmenting-path method with potentials.
AssignmentSolution min_cost_assignment(
    const std::vector<std::vector<double>>& cost);

// Among all minimum-cost assignments, the one whose column sequence
// (row 0 first) is lexicographically smallest.  Ties are resolved on the
// tight-edge graph, so the result stays optimal.
std::vector<int> lex_min_optimal_assignment(
    const std::vector<std::vector<double>>& cost);

}  // namespace foa::detail
