#include "niep/assignment.hpp"

#include <limits>

namespace niep {

// Shortest augmenting path assignment (Jonker-Volgenant flavor) with dual
// potentials u, v; O(n^3). Indices are shifted by one so that 0 can act as
// the sentinel column.
std::vector<std::size_t> min_cost_assignment(const std::vector<double>& cost, std::size_t n) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);

    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
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
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<std::size_t> row_to_col(n, 0);
    for (std::size_t j = 1; j <= n; ++j)
        if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

namespace {

bool try_augment(std::size_t left, const std::vector<std::vector<std::size_t>>& adjacency,
                 std::vector<char>& visited, std::vector<std::ptrdiff_t>& match_right) {
    for (std::size_t right : adjacency[left]) {
        if (visited[right]) continue;
        visited[right] = 1;
        if (match_right[right] < 0 ||
            try_augment(static_cast<std::size_t>(match_right[right]), adjacency, visited,
                        match_right)) {
            match_right[right] = static_cast<std::ptrdiff_t>(left);
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> perfect_matching(
    const std::vector<std::vector<std::size_t>>& adjacency) {
    const std::size_t n = adjacency.size();
    std::vector<std::ptrdiff_t> match_right(n, -1);
    for (std::size_t left = 0; left < n; ++left) {
        std::vector<char> visited(n, 0);
        if (!try_augment(left, adjacency, visited, match_right)) return std::nullopt;
    }
    std::vector<std::size_t> match_left(n, 0);
    for (std::size_t right = 0; right < n; ++right)
        match_left[static_cast<std::size_t>(match_right[right])] = right;
    return match_left;
}

}  // namespace niep
