#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace niep {

/// Minimum-total-cost perfect assignment on a square cost matrix
/// (row-major, n*n), via shortest augmenting paths. Returns row -> column.
std::vector<std::size_t> min_cost_assignment(const std::vector<double>& cost, std::size_t n);

/// Perfect matching in a bipartite graph with n vertices on each side,
/// given as adjacency lists (left -> admissible rights). Returns
/// left -> right, or nullopt when no perfect matching exists. Deterministic:
/// augmenting paths scan adjacency in the given order.
std::optional<std::vector<std::size_t>> perfect_matching(
    const std::vector<std::vector<std::size_t>>& adjacency);

}  // namespace niep
