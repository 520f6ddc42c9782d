#include "tricub/matching.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "tricub/generators.hpp"
#include "tricub/weighted_matching.hpp"

namespace tricub {
namespace {

// Maximum-cardinality matching on the underlying simple graph of the edges
// not in `removed`; each vertex pair is represented by its smallest edge id.
std::optional<EdgeSet> perfect_matching_without(const Multigraph& g, const std::vector<bool>& removed) {
  const int n = g.vertex_count();
  if (n % 2 != 0) return std::nullopt;
  if (n == 0) return EdgeSet{};
  std::map<std::pair<int, int>, EdgeId> representative;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (removed[static_cast<size_t>(e)]) continue;
    const Edge& ed = g.edge(e);
    representative.emplace(std::minmax(ed.u, ed.v), e);
  }
  std::vector<WeightedEdge> pairs;
  for (const auto& [key, e] : representative) pairs.push_back({key.first, key.second, 1});
  const auto mate = max_weight_matching(n, pairs, true);
  EdgeSet result;
  for (VertexId v = 0; v < n; ++v) {
    const int w = mate[static_cast<size_t>(v)];
    if (w < 0) return std::nullopt;
    if (v < w) result.push_back(representative.at({v, w}));
  }
  return normalize(std::move(result));
}

}  // namespace

bool is_matching(const Multigraph& g, const EdgeSet& edges) {
  std::vector<bool> used(static_cast<size_t>(g.vertex_count()), false);
  EdgeId prev = -1;
  for (EdgeId e : edges) {
    if (e <= prev || e >= g.edge_count()) return false;
    prev = e;
    const Edge& ed = g.edge(e);
    if (used[static_cast<size_t>(ed.u)] || used[static_cast<size_t>(ed.v)]) return false;
    used[static_cast<size_t>(ed.u)] = used[static_cast<size_t>(ed.v)] = true;
  }
  return true;
}

bool is_perfect_matching(const Multigraph& g, const EdgeSet& edges) {
  return 2 * static_cast<int>(edges.size()) == g.vertex_count() && is_matching(g, edges);
}

std::optional<EdgeSet> find_perfect_matching(const Multigraph& g) {
  return perfect_matching_without(g, std::vector<bool>(static_cast<size_t>(g.edge_count()), false));
}

MatchingEnumeration enumerate_perfect_matchings(const Multigraph& g, std::size_t limit) {
  MatchingEnumeration out;
  const int n = g.vertex_count();
  if (n % 2 != 0) {
    out.complete = true;
    return out;
  }
  std::vector<bool> matched(static_cast<size_t>(n), false);
  EdgeSet current;
  bool stopped = false;
  // Branch on the lowest unmatched vertex; incident edges ascend, so the
  // matchings come out in lexicographic order of their sorted edge sets
  // only after the final sort below.
  auto recurse = [&](auto&& self, VertexId from) -> void {
    if (stopped) return;
    VertexId v = from;
    while (v < n && matched[static_cast<size_t>(v)]) ++v;
    if (v == n) {
      if (out.matchings.size() >= limit) {
        stopped = true;
        return;
      }
      out.matchings.push_back(normalize(current));
      return;
    }
    matched[static_cast<size_t>(v)] = true;
    for (EdgeId e : g.incident(v)) {
      const VertexId w = g.other_end(e, v);
      if (matched[static_cast<size_t>(w)]) continue;
      matched[static_cast<size_t>(w)] = true;
      current.push_back(e);
      self(self, v + 1);
      current.pop_back();
      matched[static_cast<size_t>(w)] = false;
      if (stopped) break;
    }
    matched[static_cast<size_t>(v)] = false;
  };
  recurse(recurse, 0);
  std::sort(out.matchings.begin(), out.matchings.end());
  out.complete = !stopped;
  return out;
}

std::optional<EdgeSet> matching_avoiding(const Multigraph& g, EdgeId e1, EdgeId e2) {
  if (e1 < 0 || e2 < 0 || e1 >= g.edge_count() || e2 >= g.edge_count()) {
    throw Error(ErrorCode::invalid_argument, "matching_avoiding: edge id out of range");
  }
  std::vector<bool> removed(static_cast<size_t>(g.edge_count()), false);
  removed[static_cast<size_t>(e1)] = removed[static_cast<size_t>(e2)] = true;
  return perfect_matching_without(g, removed);
}

std::optional<EdgeSet> two_factor(const Multigraph& g) {
  const int n = g.vertex_count();
  VertexId exceptional = -1;
  for (VertexId v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d == 3) continue;
    if (d == 2 && exceptional == -1) {
      exceptional = v;
      continue;
    }
    throw Error(ErrorCode::invalid_argument,
                "two_factor: vertex " + std::to_string(v) + " has degree " + std::to_string(d));
  }
  if (exceptional == -1) {
    auto m = find_perfect_matching(g);
    if (!m) return std::nullopt;
    return complement(g, *m);
  }
  // Cubic closure: the degree-2 vertex is joined to the degree-2 vertex of a
  // fresh W, whose vertices follow the original ones.
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const Multigraph w = gadget_graph(Gadget::W);
  edges.push_back({exceptional, n});
  for (const Edge& e : w.edges()) edges.push_back({e.u + n, e.v + n});
  const Multigraph closure(n + w.vertex_count(), std::move(edges));
  auto m = find_perfect_matching(closure);
  if (!m) return std::nullopt;
  EdgeSet result;
  for (EdgeId e : complement(closure, *m)) {
    if (e < g.edge_count()) result.push_back(e);
  }
  return result;
}

bool is_even_subgraph(const Multigraph& g, const EdgeSet& edges) {
  if (!std::is_sorted(edges.begin(), edges.end()) ||
      std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    return false;
  }
  if (!edges.empty() && (edges.front() < 0 || edges.back() >= g.edge_count())) return false;
  for (int d : degrees_in(g, edges)) {
    if (d % 2 != 0) return false;
  }
  return true;
}

bool is_parity_subgraph(const Multigraph& g, const EdgeSet& edges) {
  if (!std::is_sorted(edges.begin(), edges.end()) ||
      std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    return false;
  }
  if (!edges.empty() && (edges.front() < 0 || edges.back() >= g.edge_count())) return false;
  const auto deg = degrees_in(g, edges);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (deg[static_cast<size_t>(v)] % 2 != g.degree(v) % 2) return false;
  }
  return true;
}

ParitySubgraph make_parity_subgraph(const Multigraph& g, EdgeSet edges) {
  edges = normalize(std::move(edges));
  if (!is_parity_subgraph(g, edges)) {
    throw Error(ErrorCode::verification_failed, "edge set is not a parity subgraph");
  }
  ParitySubgraph j;
  const auto deg = degrees_in(g, edges);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (deg[static_cast<size_t>(v)] == 1) j.v1.push_back(v);
    if (deg[static_cast<size_t>(v)] == 3) j.v3.push_back(v);
  }
  j.edges = std::move(edges);
  return j;
}

EdgeSet lift_parity_subgraph(const Multigraph& g, const ExpansionResult& expansion,
                             const ParitySubgraph& j) {
  EdgeSet lifted = j.edges;
  const auto deg = degrees_in(g, j.edges);
  for (VertexId v : j.v3) {
    if (!std::binary_search(expansion.expanded.begin(), expansion.expanded.end(), v)) {
      throw Error(ErrorCode::invalid_argument,
                  "lift_parity_subgraph: degree-3 vertex " + std::to_string(v) + " is not expanded");
    }
  }
  for (const ExpandedTriangle& t : expansion.triangles) {
    if (deg[static_cast<size_t>(t.source)] != 1) continue;
    auto inc = g.incident(t.source);
    for (int k = 0; k < 3; ++k) {
      if (std::binary_search(j.edges.begin(), j.edges.end(), inc[static_cast<size_t>(k)])) {
        lifted.push_back(triangle_edge_opposite(t, k));
        break;
      }
    }
  }
  return normalize(std::move(lifted));
}

TransferResult transfer_matching(const Multigraph& g, const AttachResult& attach, const EdgeSet& m) {
  if (!is_perfect_matching(g, m)) {
    throw Error(ErrorCode::invalid_argument, "transfer_matching: not a perfect matching of the source");
  }
  // Perfect matching of each gadget minus its degree-2 vertex, as indices
  // into the gadget's edge list.
  const std::vector<int> inner = attach.gadget == Gadget::W ? std::vector<int>{2} : std::vector<int>{2, 5};
  TransferResult r;
  EdgeSet n;
  for (EdgeId e : m) {
    if (!attach.attachment_of(e)) n.push_back(e);
  }
  for (const Attachment& a : attach.attachments) {
    n.push_back(a.bridge);
    for (int idx : inner) n.push_back(a.gadget_edges[static_cast<size_t>(idx)]);
    if (std::binary_search(m.begin(), m.end(), a.source_edge)) {
      r.u.push_back(a.root);
      n.push_back(a.source_edge);
      n.push_back(a.split_edge);
    }
  }
  r.u = normalize(std::move(r.u));
  r.expansion = expand_vertices(attach.graph, r.u);
  r.matching = normalize(std::move(n));
  if (!is_perfect_matching(r.expansion.graph, r.matching)) {
    throw Error(ErrorCode::verification_failed, "transfer_matching: constructed set is not a perfect matching");
  }
  return r;
}

}  // namespace tricub
