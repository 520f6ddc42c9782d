#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace tricub {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  std::int64_t weight = 0;
};

/// Maximum-weight matching in a general graph (Edmonds' blossom algorithm with
/// dual variables, O(n^3)). With max_cardinality set, only maximum-cardinality
/// matchings are considered. Returns mate[v] (the matched vertex or -1).
/// Parallel input edges are allowed; the heavier one wins.
std::vector<int> max_weight_matching(int vertex_count, const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality);

/// Minimum-weight perfect matching; absent when no perfect matching exists.
/// Returns indices into `edges`.
std::optional<std::vector<int>> min_weight_perfect_matching(int vertex_count,
                                                            const std::vector<WeightedEdge>& edges);

}  // namespace tricub
