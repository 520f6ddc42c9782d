#include "tricub/generators.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "tricub/structure.hpp"

namespace tricub {

const char* to_string(Gadget g) { return g == Gadget::W ? "W" : "Wprime"; }

Gadget parse_gadget(std::string_view name) {
  if (name == "W") return Gadget::W;
  if (name == "Wprime" || name == "W'") return Gadget::Wprime;
  throw Error(ErrorCode::unknown_name, "unknown gadget '" + std::string(name) + "'");
}

int gadget_order(Gadget g) { return g == Gadget::W ? 3 : 5; }

Multigraph gadget_graph(Gadget g) {
  if (g == Gadget::W) {
    return Multigraph(3, {{0, 1}, {0, 2}, {1, 2}, {1, 2}});
  }
  return Multigraph(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

DegreeTree::DegreeTree(Multigraph tree) : tree_(std::move(tree)) {
  const int n = tree_.vertex_count();
  if (n < 2 || tree_.edge_count() != n - 1 || !is_connected(tree_)) {
    throw Error(ErrorCode::invalid_argument, "degree tree: not a tree on at least 2 vertices");
  }
  for (VertexId v = 0; v < n; ++v) {
    const int d = tree_.degree(v);
    if (d == 1) {
      ++k1_;
    } else if (d == 3) {
      ++k3_;
    } else {
      throw Error(ErrorCode::invalid_argument,
                  "degree tree: vertex " + std::to_string(v) + " has degree " + std::to_string(d));
    }
  }
}

DegreeTree DegreeTree::caterpillar(int n) {
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorCode::invalid_argument, "degree tree: n must be even and at least 2");
  }
  if (n == 2) return DegreeTree(Multigraph(2, {{0, 1}}));
  const int spine = n / 2 - 1;
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < spine; ++i) edges.push_back({i, i + 1});
  int next = spine;
  for (int i = 0; i < spine; ++i) {
    int spine_degree = (i > 0 ? 1 : 0) + (i + 1 < spine ? 1 : 0);
    for (int k = spine_degree; k < 3; ++k) edges.push_back({i, next++});
  }
  return DegreeTree(Multigraph(n, std::move(edges)));
}

Multigraph generate_from_tree(const DegreeTree& tree, Gadget gadget) {
  const Multigraph& t = tree.tree();
  const Multigraph gad = gadget_graph(gadget);
  std::vector<Edge> edges(t.edges().begin(), t.edges().end());
  int next = t.vertex_count();
  for (VertexId leaf = 0; leaf < t.vertex_count(); ++leaf) {
    if (t.degree(leaf) != 1) continue;
    std::vector<VertexId> local(static_cast<size_t>(gad.vertex_count()));
    local[0] = leaf;
    for (size_t i = 1; i < local.size(); ++i) local[i] = next++;
    for (const Edge& e : gad.edges()) {
      edges.push_back({local[static_cast<size_t>(e.u)], local[static_cast<size_t>(e.v)]});
    }
  }
  return Multigraph(next, std::move(edges));
}

Multigraph generate(std::string_view name) {
  if (name == "W") return gadget_graph(Gadget::W);
  if (name == "Wprime") return gadget_graph(Gadget::Wprime);
  if (name == "theta") return Multigraph(2, {{0, 1}, {0, 1}, {0, 1}});
  if (name == "K4") return Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "K33") {
    std::vector<Edge> e;
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) e.push_back({i, j});
    return Multigraph(6, std::move(e));
  }
  if (name == "prism") {
    return Multigraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  }
  if (name == "P10") {
    // Outer 5-cycle 0..4, spokes i-(i+5), inner pentagram on 5..9.
    return Multigraph(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                           {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
  }
  if (name == "P12") return expand_vertices(generate("P10"), {0}).graph;
  if (name == "S10") return generate_from_tree(DegreeTree::caterpillar(4), Gadget::W);
  if (name == "S16") return generate_from_tree(DegreeTree::caterpillar(4), Gadget::Wprime);
  throw Error(ErrorCode::unknown_name, "unknown graph name '" + std::string(name) + "'");
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"W", "Wprime", "theta", "K4", "K33", "prism",
                                                 "P10", "P12", "S10", "S16"};
  return names;
}

namespace {

// Uniform in [0, bound) using only the standardized engine output.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

}  // namespace

Multigraph random_cubic(int n, bool simple, std::uint64_t seed) {
  if (n % 2 != 0) throw Error(ErrorCode::invalid_argument, "random_cubic: odd order " + std::to_string(n));
  if (n < 2 || (simple && n < 4)) {
    throw Error(ErrorCode::invalid_argument, "random_cubic: order " + std::to_string(n) + " too small");
  }
  constexpr int kMaxAttempts = 1000000;
  std::vector<int> points(static_cast<size_t>(3 * n));
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(attempt)};
    std::mt19937_64 rng(seq);
    for (int i = 0; i < 3 * n; ++i) points[static_cast<size_t>(i)] = i;
    for (size_t i = points.size() - 1; i > 0; --i) {
      std::swap(points[i], points[static_cast<size_t>(draw(rng, i + 1))]);
    }
    std::vector<Edge> edges;
    bool ok = true;
    for (size_t i = 0; i < points.size() && ok; i += 2) {
      int u = points[i] / 3;
      int v = points[i + 1] / 3;
      if (u == v) ok = false;
      edges.push_back({std::min(u, v), std::max(u, v)});
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    if (simple && std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    Multigraph g(n, std::move(edges));
    if (!is_connected(g)) continue;
    return g;
  }
  throw Error(ErrorCode::cap_exceeded, "random_cubic: no acceptable pairing found");
}

}  // namespace tricub
