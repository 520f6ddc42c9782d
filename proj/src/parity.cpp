#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>

#include "tricub/matching.hpp"
#include "tricub/weighted_matching.hpp"

namespace tricub {
namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max();

// Unit-length BFS distances from s, ignoring removed edges.
std::vector<int> bfs(const Multigraph& g, VertexId s, const std::vector<bool>& removed) {
  std::vector<int> dist(static_cast<size_t>(g.vertex_count()), kUnreachable);
  std::deque<VertexId> queue{s};
  dist[static_cast<size_t>(s)] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(v)) {
      if (removed[static_cast<size_t>(e)]) continue;
      const VertexId w = g.other_end(e, v);
      if (dist[static_cast<size_t>(w)] != kUnreachable) continue;
      dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

ParitySubgraph oracle_min_parity(const Multigraph& g) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  if (m > kOracleEdgeCap) {
    throw Error(ErrorCode::cap_exceeded, "min_parity_subgraph: oracle backend limited to " +
                                             std::to_string(kOracleEdgeCap) + " edges, got " +
                                             std::to_string(m));
  }
  if (n > 64) throw Error(ErrorCode::cap_exceeded, "min_parity_subgraph: oracle backend limited to 64 vertices");
  std::vector<std::uint64_t> flip(static_cast<size_t>(m));
  for (EdgeId e = 0; e < m; ++e) {
    flip[static_cast<size_t>(e)] = (std::uint64_t{1} << g.edge(e).u) | (std::uint64_t{1} << g.edge(e).v);
  }
  std::uint64_t target = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) % 2 != 0) target |= std::uint64_t{1} << v;
  }
  // Gray-code walk: one edge toggles per step, so the parity vector is
  // maintained incrementally.
  std::uint64_t parity = 0;
  std::uint32_t subset = 0;
  int best_size = std::numeric_limits<int>::max();
  EdgeSet best;
  auto consider = [&](std::uint32_t mask) {
    const int size = std::popcount(mask);
    if (size > best_size) return;
    EdgeSet cand;
    for (EdgeId e = 0; e < m; ++e) {
      if (mask >> e & 1u) cand.push_back(e);
    }
    if (size < best_size || cand < best) {
      best_size = size;
      best = std::move(cand);
    }
  };
  if (parity == target) consider(subset);
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int e = std::countr_zero(i);
    subset ^= 1u << e;
    parity ^= flip[static_cast<size_t>(e)];
    if (parity == target) consider(subset);
  }
  if (best_size == std::numeric_limits<int>::max()) {
    throw Error(ErrorCode::invalid_argument, "min_parity_subgraph: graph has no parity subgraph");
  }
  return make_parity_subgraph(g, best);
}

ParitySubgraph matching_min_parity(const Multigraph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<bool> t(static_cast<size_t>(n));
  for (VertexId v = 0; v < n; ++v) t[static_cast<size_t>(v)] = g.degree(v) % 2 != 0;
  std::vector<bool> removed(static_cast<size_t>(m), false);
  const auto optimum = min_t_join_size(g, t, removed);
  if (!optimum) throw Error(ErrorCode::invalid_argument, "min_parity_subgraph: graph has no parity subgraph");
  // Lexicographic tie-break: decide edges in ascending order, keeping an
  // edge whenever some optimal join still contains every kept edge.
  EdgeSet chosen;
  std::vector<bool> odd = t;
  for (EdgeId e = 0; e < m; ++e) {
    removed[static_cast<size_t>(e)] = true;
    std::vector<bool> trial = odd;
    const Edge& ed = g.edge(e);
    trial[static_cast<size_t>(ed.u)] = !trial[static_cast<size_t>(ed.u)];
    trial[static_cast<size_t>(ed.v)] = !trial[static_cast<size_t>(ed.v)];
    const auto rest = min_t_join_size(g, trial, removed);
    if (rest && static_cast<int>(chosen.size()) + 1 + *rest == *optimum) {
      chosen.push_back(e);
      odd = std::move(trial);
    }
  }
  return make_parity_subgraph(g, chosen);
}

}  // namespace

const char* to_string(ParityBackend b) { return b == ParityBackend::oracle ? "oracle" : "matching"; }

std::optional<int> min_t_join_size(const Multigraph& g, const std::vector<bool>& t,
                                   const std::vector<bool>& removed) {
  std::vector<VertexId> terminals;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (t[static_cast<size_t>(v)]) terminals.push_back(v);
  }
  if (terminals.size() % 2 != 0) return std::nullopt;
  if (terminals.empty()) return 0;
  const int k = static_cast<int>(terminals.size());
  std::vector<WeightedEdge> closure;
  for (int i = 0; i < k; ++i) {
    const auto dist = bfs(g, terminals[static_cast<size_t>(i)], removed);
    for (int j = i + 1; j < k; ++j) {
      const int d = dist[static_cast<size_t>(terminals[static_cast<size_t>(j)])];
      if (d != kUnreachable) closure.push_back({i, j, d});
    }
  }
  const auto pm = min_weight_perfect_matching(k, closure);
  if (!pm) return std::nullopt;
  std::int64_t total = 0;
  for (int idx : *pm) total += closure[static_cast<size_t>(idx)].weight;
  return static_cast<int>(total);
}

ParitySubgraph min_parity_subgraph(const Multigraph& g, ParityBackend backend) {
  require_cubic(g, "min_parity_subgraph");
  require_connected(g, "min_parity_subgraph");
  return backend == ParityBackend::oracle ? oracle_min_parity(g) : matching_min_parity(g);
}

EvenSubgraph max_even_subgraph(const Multigraph& g, ParityBackend backend) {
  return EvenSubgraph{complement(g, min_parity_subgraph(g, backend).edges)};
}

}  // namespace tricub
