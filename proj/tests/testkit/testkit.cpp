#include "testkit.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "tricub/generators.hpp"

namespace testkit {
namespace {

using tricub::Edge;

// Multiplicity matrix, row-major.
std::vector<int> multiplicities(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> mult(static_cast<size_t>(n * n), 0);
  for (const Edge& e : g.edges()) {
    ++mult[static_cast<size_t>(e.u * n + e.v)];
    ++mult[static_cast<size_t>(e.v * n + e.u)];
  }
  return mult;
}

std::vector<std::vector<int>> neighbour_lists(const Multigraph& g) {
  std::vector<std::vector<int>> nb(static_cast<size_t>(g.vertex_count()));
  for (const Edge& e : g.edges()) {
    nb[static_cast<size_t>(e.u)].push_back(e.v);
    nb[static_cast<size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : nb) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return nb;
}

bool connected(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    return x;
  };
  int parts = n;
  for (const Edge& e : edges) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      parent[static_cast<size_t>(a)] = b;
      --parts;
    }
  }
  return parts <= 1;
}

std::vector<int> degrees_of_mask(const Multigraph& g, std::uint64_t mask) {
  std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if ((mask >> e) & 1U) {
      ++deg[static_cast<size_t>(g.edge(e).u)];
      ++deg[static_cast<size_t>(g.edge(e).v)];
    }
  }
  return deg;
}

void require_small(const Multigraph& g, int cap) {
  if (g.edge_count() > cap) throw std::invalid_argument("oracle: graph too large");
}

}  // namespace

bool isomorphic(const Multigraph& a, const Multigraph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (n == 0) return true;
  const auto ma = multiplicities(a);
  const auto mb = multiplicities(b);
  const auto na = neighbour_lists(a);
  const auto nb = neighbour_lists(b);
  // BFS order of a from vertex 0 with the parent of each vertex.
  std::vector<int> order{0};
  std::vector<int> parent(static_cast<size_t>(n), -1);
  std::vector<bool> seen(static_cast<size_t>(n), false);
  seen[0] = true;
  for (size_t i = 0; i < order.size(); ++i) {
    for (int w : na[static_cast<size_t>(order[i])]) {
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        parent[static_cast<size_t>(w)] = order[i];
        order.push_back(w);
      }
    }
  }
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("isomorphic: disconnected input");
  std::vector<int> image(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);
  std::function<bool(size_t)> extend = [&](size_t i) -> bool {
    if (i == order.size()) return true;
    const int v = order[i];
    std::vector<int> candidates;
    if (i == 0) {
      for (int c = 0; c < n; ++c) candidates.push_back(c);
    } else {
      candidates = nb[static_cast<size_t>(image[static_cast<size_t>(parent[static_cast<size_t>(v)])])];
    }
    for (int c : candidates) {
      if (used[static_cast<size_t>(c)]) continue;
      bool ok = ma[static_cast<size_t>(v * n + v)] == mb[static_cast<size_t>(c * n + c)];
      for (size_t j = 0; j < i && ok; ++j) {
        const int w = order[j];
        ok = ma[static_cast<size_t>(v * n + w)] == mb[static_cast<size_t>(c * n + image[static_cast<size_t>(w)])];
      }
      if (!ok) continue;
      image[static_cast<size_t>(v)] = c;
      used[static_cast<size_t>(c)] = true;
      if (extend(i + 1)) return true;
      used[static_cast<size_t>(c)] = false;
      image[static_cast<size_t>(v)] = -1;
    }
    return false;
  };
  return extend(0);
}

std::vector<Multigraph> simple_cubic_graphs(int n) {
  std::vector<Multigraph> found;
  std::vector<int> deg(static_cast<size_t>(n), 0);
  std::vector<std::vector<bool>> adj(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
  std::vector<Edge> edges;
  // Vertices never touched so far are interchangeable: only the smallest
  // untouched label may receive a new edge.
  std::function<void()> fill = [&]() {
    int v = 0;
    while (v < n && deg[static_cast<size_t>(v)] == 3) ++v;
    if (v == n) {
      if (!connected(n, edges)) return;
      Multigraph g(n, edges);
      for (const auto& h : found) {
        if (isomorphic(g, h)) return;
      }
      found.push_back(std::move(g));
      return;
    }
    int first_untouched = n;
    for (int w = 0; w < n; ++w) {
      if (deg[static_cast<size_t>(w)] == 0 && w != v) {
        first_untouched = w;
        break;
      }
    }
    // Neighbours of v are added in increasing order to avoid repeats.
    int last = v;
    for (const Edge& e : edges) {
      if (e.u == v && e.v > v) last = std::max(last, e.v);
    }
    for (int w = last + 1; w < n; ++w) {
      if (deg[static_cast<size_t>(w)] >= 3 || adj[static_cast<size_t>(v)][static_cast<size_t>(w)]) continue;
      if (deg[static_cast<size_t>(w)] == 0 && w != first_untouched) continue;
      adj[static_cast<size_t>(v)][static_cast<size_t>(w)] = adj[static_cast<size_t>(w)][static_cast<size_t>(v)] = true;
      ++deg[static_cast<size_t>(v)];
      ++deg[static_cast<size_t>(w)];
      edges.push_back({v, w});
      fill();
      edges.pop_back();
      --deg[static_cast<size_t>(v)];
      --deg[static_cast<size_t>(w)];
      adj[static_cast<size_t>(v)][static_cast<size_t>(w)] = adj[static_cast<size_t>(w)][static_cast<size_t>(v)] = false;
    }
  };
  fill();
  return found;
}

const std::vector<CorpusEntry>& corpus(int random_count) {
  static std::map<int, std::vector<CorpusEntry>> cache;
  auto it = cache.find(random_count);
  if (it != cache.end()) return it->second;
  std::vector<CorpusEntry> out;
  for (int n = 4; n <= 10; n += 2) {
    const auto graphs = simple_cubic_graphs(n);
    for (size_t i = 0; i < graphs.size(); ++i) {
      out.push_back({"simple" + std::to_string(n) + "_" + std::to_string(i), graphs[i]});
    }
  }
  for (int seed = 0; seed < random_count; ++seed) {
    const int n = 4 + 2 * (seed % 5);
    out.push_back({"random" + std::to_string(seed), tricub::random_cubic(n, false, static_cast<std::uint64_t>(seed))});
  }
  return cache.emplace(random_count, std::move(out)).first->second;
}

Multigraph naive_expand(const Multigraph& g, const VertexSet& u) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  int n = g.vertex_count();
  for (int v : u) {
    // Each incident edge end at v (parallel edges counted separately) moves
    // to its own corner.
    std::vector<int> corners{v, n, n + 1};
    n += 2;
    int k = 0;
    for (Edge& e : edges) {
      if (e.u == v && k < 3) {
        e.u = corners[static_cast<size_t>(k++)];
      } else if (e.v == v && k < 3) {
        e.v = corners[static_cast<size_t>(k++)];
      }
    }
    edges.push_back({corners[0], corners[1]});
    edges.push_back({corners[1], corners[2]});
    edges.push_back({corners[0], corners[2]});
  }
  return Multigraph(n, edges);
}

std::vector<EdgeSet> brute_perfect_matchings(const Multigraph& g) {
  std::vector<EdgeSet> out;
  std::vector<bool> covered(static_cast<size_t>(g.vertex_count()), false);
  EdgeSet current;
  std::function<void()> rec = [&]() {
    int v = 0;
    while (v < g.vertex_count() && covered[static_cast<size_t>(v)]) ++v;
    if (v == g.vertex_count()) {
      EdgeSet m = current;
      std::sort(m.begin(), m.end());
      out.push_back(m);
      return;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      if (ed.u != v && ed.v != v) continue;
      const int w = ed.u == v ? ed.v : ed.u;
      if (covered[static_cast<size_t>(w)]) continue;
      covered[static_cast<size_t>(v)] = covered[static_cast<size_t>(w)] = true;
      current.push_back(e);
      rec();
      current.pop_back();
      covered[static_cast<size_t>(v)] = covered[static_cast<size_t>(w)] = false;
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

bool brute_has_perfect_matching(const Multigraph& g) { return !brute_perfect_matchings(g).empty(); }

int brute_min_parity_size(const Multigraph& g) {
  require_small(g, 24);
  int best = std::numeric_limits<int>::max();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
    const int size = std::popcount(mask);
    if (size >= best) continue;
    const auto deg = degrees_of_mask(g, mask);
    if (std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 1; })) best = size;
  }
  return best;
}

std::vector<std::uint32_t> brute_even_masks(const Multigraph& g) {
  require_small(g, 24);
  std::vector<std::uint32_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
    const auto deg = degrees_of_mask(g, mask);
    if (std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; })) {
      out.push_back(static_cast<std::uint32_t>(mask));
    }
  }
  return out;
}

int brute_max_even_size(const Multigraph& g) {
  int best = 0;
  for (std::uint32_t m : brute_even_masks(g)) best = std::max(best, std::popcount(m));
  return best;
}

int brute_t(const Multigraph& g) {
  const int n = g.vertex_count();
  for (int k = 0; k <= n; ++k) {
    // Lexicographic k-subsets of {0..n-1}.
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
      if (brute_has_perfect_matching(naive_expand(g, idx))) return k;
      int i = k - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return -1;
}

bool brute_four_coverable(const Multigraph& g) {
  require_small(g, 63);
  const auto pms = brute_perfect_matchings(g);
  std::vector<std::uint64_t> masks;
  for (const auto& m : pms) {
    std::uint64_t mask = 0;
    for (int e : m) mask |= std::uint64_t{1} << e;
    masks.push_back(mask);
  }
  const std::uint64_t all = (std::uint64_t{1} << g.edge_count()) - 1;
  const size_t p = masks.size();
  for (size_t a = 0; a < p; ++a) {
    for (size_t b = a; b < p; ++b) {
      for (size_t c = b; c < p; ++c) {
        for (size_t d = c; d < p; ++d) {
          if ((masks[a] | masks[b] | masks[c] | masks[d]) == all) return true;
        }
      }
    }
  }
  return false;
}

int brute_scc(const Multigraph& g) {
  require_small(g, 20);
  const int m = g.edge_count();
  const std::uint32_t all = m == 32 ? 0xffffffffU : ((std::uint32_t{1} << m) - 1);
  std::vector<std::uint32_t> even;
  std::uint32_t reach = 0;
  for (std::uint32_t s : brute_even_masks(g)) {
    if (s != 0) even.push_back(s);
    reach |= s;
  }
  if (reach != all) return -1;
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> dp(static_cast<size_t>(all) + 1, kInf);
  dp[0] = 0;
  for (std::uint32_t mask = 0; mask <= all; ++mask) {
    if (dp[mask] == kInf) continue;
    if (mask == all) break;
    // Cover the lowest uncovered edge next.
    const int low = std::countr_zero(~mask);
    for (std::uint32_t s : even) {
      if (!((s >> low) & 1U)) continue;
      const std::uint32_t next = mask | s;
      dp[next] = std::min(dp[next], dp[mask] + std::popcount(s));
    }
  }
  return dp[all];
}

EdgeSet brute_bridges(const Multigraph& g) {
  EdgeSet out;
  for (int e = 0; e < g.edge_count(); ++e) {
    std::vector<Edge> rest;
    for (int f = 0; f < g.edge_count(); ++f) {
      if (f != e) rest.push_back(g.edge(f));
    }
    if (!connected(g.vertex_count(), rest)) out.push_back(e);
  }
  return out;
}

const std::vector<Sparse6Reference>& sparse6_references() {
  static const std::vector<Sparse6Reference> refs = {
      {"W", ":BcH"},
      {"Wprime", ":DaHIQN"},
      {"K4", ":CcKI"},
      {"K33", ":Ek@I@I@J"},
      {"prism", ":Ea@aRgs"},
      {"P10", ":I`ES@obGkqegW~"},
      {"P12", ":K`ESz@cUXRSK]@GDT"},
      {"S10", ":I`ACWcHIPbRe`F"},
      {"S16", ":O`ACWsJOhhQofATRfpnEm"},
      {"theta", ":A_"},
  };
  return refs;
}

}  // namespace testkit
