#include "tricub/covers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace tricub {
namespace {

using Mask = std::uint64_t;

Mask to_mask(const EdgeSet& s) {
  Mask m = 0;
  for (EdgeId e : s) m |= Mask{1} << e;
  return m;
}

EdgeSet from_mask(Mask m) {
  EdgeSet s;
  while (m) {
    s.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return s;
}

Mask full_mask(int m) { return m == 64 ? ~Mask{0} : (Mask{1} << m) - 1; }

void require_search_size(const Multigraph& g, const char* who) {
  if (g.edge_count() > kMaxSearchEdges) {
    throw Error(ErrorCode::cap_exceeded, std::string(who) + ": at most " + std::to_string(kMaxSearchEdges) +
                                             " edges supported, got " + std::to_string(g.edge_count()));
  }
}

void require_bridgeless(const Multigraph& g, const char* who) {
  require_connected(g, who);
  if (!bridges(g).empty()) throw Error(ErrorCode::has_bridge, std::string(who) + ": graph has a bridge");
}

bool lex_less_by_size(const EdgeSet& a, const EdgeSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Fundamental cycles of a BFS spanning forest, one per non-tree edge, as
// word bitsets.
std::vector<std::vector<std::uint64_t>> cycle_basis(const Multigraph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const size_t words = static_cast<size_t>((m + 63) / 64);
  std::vector<EdgeId> parent_edge(static_cast<size_t>(n), -1);
  std::vector<int> depth(static_cast<size_t>(n), -1);
  std::vector<bool> tree(static_cast<size_t>(m), false);
  for (VertexId s = 0; s < n; ++s) {
    if (depth[static_cast<size_t>(s)] != -1) continue;
    depth[static_cast<size_t>(s)] = 0;
    std::vector<VertexId> queue{s};
    for (size_t i = 0; i < queue.size(); ++i) {
      const VertexId v = queue[i];
      for (EdgeId e : g.incident(v)) {
        const VertexId w = g.other_end(e, v);
        if (depth[static_cast<size_t>(w)] != -1) continue;
        depth[static_cast<size_t>(w)] = depth[static_cast<size_t>(v)] + 1;
        parent_edge[static_cast<size_t>(w)] = e;
        tree[static_cast<size_t>(e)] = true;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::vector<std::uint64_t>> basis;
  for (EdgeId e = 0; e < m; ++e) {
    if (tree[static_cast<size_t>(e)]) continue;
    std::vector<std::uint64_t> c(words, 0);
    auto toggle = [&c](EdgeId x) { c[static_cast<size_t>(x / 64)] ^= std::uint64_t{1} << (x % 64); };
    toggle(e);
    VertexId a = g.edge(e).u;
    VertexId b = g.edge(e).v;
    while (a != b) {
      if (depth[static_cast<size_t>(a)] < depth[static_cast<size_t>(b)]) std::swap(a, b);
      const EdgeId pe = parent_edge[static_cast<size_t>(a)];
      toggle(pe);
      a = g.other_end(pe, a);
    }
    basis.push_back(std::move(c));
  }
  return basis;
}

// Enumerated even subgraphs as masks, with per-edge membership lists.
struct EvenSpace {
  std::vector<Mask> sets;
  std::vector<int> sizes;
  std::vector<std::vector<int>> containing;
};

EvenSpace build_even_space(const Multigraph& g) {
  EvenSpace sp;
  for (const EdgeSet& s : enumerate_even_subgraphs(g)) {
    sp.sets.push_back(to_mask(s));
    sp.sizes.push_back(static_cast<int>(s.size()));
  }
  sp.containing.assign(static_cast<size_t>(g.edge_count()), {});
  for (size_t i = 0; i < sp.sets.size(); ++i) {
    Mask s = sp.sets[i];
    while (s) {
      sp.containing[static_cast<size_t>(std::countr_zero(s))].push_back(static_cast<int>(i));
      s &= s - 1;
    }
  }
  return sp;
}

struct PairHash {
  std::size_t operator()(const std::pair<Mask, Mask>& p) const noexcept {
    return std::hash<Mask>()(p.first * 0x9E3779B97F4A7C15ull ^ p.second);
  }
};

constexpr std::size_t kMemoCap = 4000000;

}  // namespace

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

int cycle_space_dimension(const Multigraph& g) {
  const auto labels = component_labels(g);
  const int components = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  return g.edge_count() - g.vertex_count() + components;
}

std::vector<EdgeSet> enumerate_even_subgraphs(const Multigraph& g) {
  const int dim = cycle_space_dimension(g);
  if (dim > kMaxCycleSpaceDim) {
    throw Error(ErrorCode::cap_exceeded, "enumerate_even_subgraphs: cycle space dimension " + std::to_string(dim) +
                                             " exceeds " + std::to_string(kMaxCycleSpaceDim));
  }
  const auto basis = cycle_basis(g);
  const size_t words = static_cast<size_t>((g.edge_count() + 63) / 64);
  std::vector<std::uint64_t> cur(words, 0);
  auto materialize = [&cur]() {
    EdgeSet s;
    for (size_t w = 0; w < cur.size(); ++w) {
      std::uint64_t x = cur[w];
      while (x) {
        s.push_back(static_cast<EdgeId>(w * 64) + std::countr_zero(x));
        x &= x - 1;
      }
    }
    return s;
  };
  std::vector<EdgeSet> out;
  out.reserve(std::size_t{1} << dim);
  out.push_back(materialize());
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << dim); ++i) {
    const auto& b = basis[static_cast<size_t>(std::countr_zero(i))];
    for (size_t w = 0; w < words; ++w) cur[w] ^= b[w];
    out.push_back(materialize());
  }
  std::sort(out.begin(), out.end(), lex_less_by_size);
  return out;
}

int max_even_subgraph_size(const Multigraph& g) {
  const int dim = cycle_space_dimension(g);
  if (dim > kMaxCycleSpaceDim) {
    throw Error(ErrorCode::cap_exceeded, "max_even_subgraph_size: cycle space dimension " + std::to_string(dim) +
                                             " exceeds " + std::to_string(kMaxCycleSpaceDim));
  }
  const auto basis = cycle_basis(g);
  const size_t words = static_cast<size_t>((g.edge_count() + 63) / 64);
  std::vector<std::uint64_t> cur(words, 0);
  int best = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << dim); ++i) {
    const auto& b = basis[static_cast<size_t>(std::countr_zero(i))];
    int size = 0;
    for (size_t w = 0; w < words; ++w) {
      cur[w] ^= b[w];
      size += std::popcount(cur[w]);
    }
    best = std::max(best, size);
  }
  return best;
}

int CycleCover::length() const {
  int total = 0;
  for (const auto& m : members) total += static_cast<int>(m.size());
  return total;
}

std::vector<int> CycleCover::depths(const Multigraph& g) const {
  std::vector<int> d(static_cast<size_t>(g.edge_count()), 0);
  for (const auto& m : members) {
    for (EdgeId e : m) {
      if (e >= 0 && e < g.edge_count()) ++d[static_cast<size_t>(e)];
    }
  }
  return d;
}

int CycleCover::depth(const Multigraph& g) const {
  const auto d = depths(g);
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

// ---------------------------------------------------------------------------

FourCoverResult four_pm_cover(const Multigraph& g, const FourCoverOptions& options) {
  require_cubic(g, "four_pm_cover");
  require_search_size(g, "four_pm_cover");
  FourCoverResult r;
  const auto en = enumerate_perfect_matchings(g, options.matching_limit);
  r.matching_count = en.matchings.size();
  r.enumeration_complete = en.complete;
  const int m = g.edge_count();
  const Mask full = full_mask(m);
  std::vector<Mask> pms;
  Mask reach = 0;
  for (const auto& pm : en.matchings) {
    pms.push_back(to_mask(pm));
    reach |= pms.back();
  }
  const SearchStatus miss = en.complete ? SearchStatus::none : SearchStatus::inconclusive;
  if (reach != full) {
    r.status = miss;
    return r;
  }
  std::vector<std::vector<int>> containing(static_cast<size_t>(m));
  for (size_t i = 0; i < pms.size(); ++i) {
    for (EdgeId e : from_mask(pms[i])) containing[static_cast<size_t>(e)].push_back(static_cast<int>(i));
  }
  const int per = g.vertex_count() / 2;
  std::vector<int> chosen;
  std::unordered_set<std::pair<Mask, Mask>, PairHash> failed;
  auto dfs = [&](auto&& self, Mask covered) -> bool {
    if (covered == full) return true;
    const int depth = static_cast<int>(chosen.size());
    if (depth == 4) return false;
    if (std::popcount(full & ~covered) > (4 - depth) * per) return false;
    const std::pair<Mask, Mask> key{covered, static_cast<Mask>(depth)};
    if (!options.distinct && failed.count(key)) return false;
    EdgeId pick = -1;
    size_t fewest = SIZE_MAX;
    for (Mask u = full & ~covered; u; u &= u - 1) {
      const EdgeId e = std::countr_zero(u);
      if (containing[static_cast<size_t>(e)].size() < fewest) {
        fewest = containing[static_cast<size_t>(e)].size();
        pick = e;
      }
    }
    for (int idx : containing[static_cast<size_t>(pick)]) {
      if (options.distinct && std::find(chosen.begin(), chosen.end(), idx) != chosen.end()) continue;
      chosen.push_back(idx);
      if (self(self, covered | pms[static_cast<size_t>(idx)])) return true;
      chosen.pop_back();
    }
    if (!options.distinct && failed.size() < kMemoCap) failed.insert(key);
    return false;
  };
  if (!dfs(dfs, 0)) {
    r.status = miss;
    return r;
  }
  if (options.distinct) {
    for (int i = 0; i < static_cast<int>(pms.size()) && chosen.size() < 4; ++i) {
      if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) chosen.push_back(i);
    }
    if (chosen.size() < 4) {
      r.status = miss;
      return r;
    }
  }
  while (chosen.size() < 4) chosen.push_back(chosen.back());
  for (int idx : chosen) r.matchings.push_back(en.matchings[static_cast<size_t>(idx)]);
  r.status = SearchStatus::found;
  return r;
}

// ---------------------------------------------------------------------------

int scc_lower_bound(const Multigraph& g) { return (4 * g.edge_count() + 2) / 3; }

SccResult scc_exact(const Multigraph& g, const SccOptions& options) {
  require_cubic(g, "scc_exact");
  require_bridgeless(g, "scc_exact");
  require_search_size(g, "scc_exact");
  if (options.max_depth == 1) {
    throw Error(ErrorCode::invalid_argument, "scc_exact: max_depth must be 0 or at least 2");
  }
  const EvenSpace sp = build_even_space(g);
  const int m = g.edge_count();
  const Mask full = full_mask(m);
  const int lower = scc_lower_bound(g);
  const bool bounded_depth = options.max_depth > 0;

  SccResult r;
  int best = std::numeric_limits<int>::max();
  std::vector<int> best_members;
  std::vector<int> members;
  bool budget_hit = false;
  bool optimal = false;
  // Coverage state: covered (depth >= 1) and, under a depth limit, the
  // edges already at the limit. Depth limits above 2 are tracked through
  // per-edge counters.
  std::vector<int> depth(static_cast<size_t>(m), 0);
  // Best cost seen per state, one table per member count when members are
  // limited. With depth limits above 2 the state is not captured by two
  // masks, so memoization is off.
  const bool memo = options.max_depth <= 2;
  std::vector<std::unordered_map<std::pair<Mask, Mask>, int, PairHash>> seen(
      static_cast<size_t>(options.max_members > 0 ? options.max_members + 1 : 1));

  auto saturated = [&]() {
    Mask s = 0;
    if (!bounded_depth) return s;
    for (EdgeId e = 0; e < m; ++e) {
      if (depth[static_cast<size_t>(e)] >= options.max_depth) s |= Mask{1} << e;
    }
    return s;
  };

  // Fractional lower bound: each member's size is spread over the edges it
  // newly covers; an uncovered edge pays at least the best such ratio.
  auto remaining_bound = [&](Mask uncovered, Mask blocked) -> int {
    const int plain = std::popcount(uncovered);
    if (sp.sets.size() > 4096) return plain;
    double total = 0.0;
    for (Mask u = uncovered; u; u &= u - 1) {
      const EdgeId e = std::countr_zero(u);
      double ratio = std::numeric_limits<double>::infinity();
      for (int idx : sp.containing[static_cast<size_t>(e)]) {
        const Mask s = sp.sets[static_cast<size_t>(idx)];
        if (s & blocked) continue;
        ratio = std::min(ratio, static_cast<double>(sp.sizes[static_cast<size_t>(idx)]) /
                                    std::popcount(s & uncovered));
      }
      if (std::isinf(ratio)) return std::numeric_limits<int>::max() / 2;
      total += ratio;
    }
    return std::max(plain, static_cast<int>(std::ceil(total - 1e-9)));
  };

  auto dfs = [&](auto&& self, Mask covered, int cost) -> void {
    if (optimal || budget_hit) return;
    if (++r.nodes > options.node_budget) {
      budget_hit = true;
      return;
    }
    if (covered == full) {
      if (cost < best) {
        best = cost;
        best_members = members;
        if (best == lower) optimal = true;
      }
      return;
    }
    if (options.max_members > 0 && static_cast<int>(members.size()) >= options.max_members) return;
    const Mask blocked = saturated();
    const Mask uncovered = full & ~covered;
    if (cost + remaining_bound(uncovered, blocked) >= best) return;
    if (memo) {
      auto& table = seen[options.max_members > 0 ? members.size() : 0];
      const std::pair<Mask, Mask> key{covered, blocked};
      if (auto it = table.find(key); it != table.end() && it->second <= cost) return;
      if (table.size() < kMemoCap) table[key] = cost;
    }
    const EdgeId e = std::countr_zero(uncovered);
    std::vector<std::pair<double, int>> order;
    for (int idx : sp.containing[static_cast<size_t>(e)]) {
      const Mask s = sp.sets[static_cast<size_t>(idx)];
      if (s & blocked) continue;
      order.push_back({static_cast<double>(sp.sizes[static_cast<size_t>(idx)]) / std::popcount(s & uncovered), idx});
    }
    std::sort(order.begin(), order.end());
    for (const auto& [ratio, idx] : order) {
      const Mask s = sp.sets[static_cast<size_t>(idx)];
      members.push_back(idx);
      for (Mask x = s; x; x &= x - 1) ++depth[static_cast<size_t>(std::countr_zero(x))];
      self(self, covered | s, cost + sp.sizes[static_cast<size_t>(idx)]);
      for (Mask x = s; x; x &= x - 1) --depth[static_cast<size_t>(std::countr_zero(x))];
      members.pop_back();
      if (optimal || budget_hit) return;
    }
  };
  dfs(dfs, 0, 0);

  r.exhausted = !budget_hit;
  if (best == std::numeric_limits<int>::max()) {
    r.status = budget_hit ? SearchStatus::inconclusive : SearchStatus::none;
    return r;
  }
  r.status = SearchStatus::found;
  r.length = best;
  for (int idx : best_members) r.cover.members.push_back(from_mask(sp.sets[static_cast<size_t>(idx)]));
  r.exact = best == lower || (r.exhausted && options.max_members == 0 && options.max_depth == 0);
  return r;
}

// ---------------------------------------------------------------------------

std::size_t largest_member(const std::vector<EdgeSet>& members) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < members.size(); ++i) {
    const auto& a = members[i];
    const auto& b = members[best];
    if (a.size() > b.size() || (a.size() == b.size() && a < b)) best = i;
  }
  return best;
}

FiveCdcResult five_cdc(const Multigraph& g, const FiveCdcOptions& options) {
  require_cubic(g, "five_cdc");
  require_connected(g, "five_cdc");
  require_search_size(g, "five_cdc");
  FiveCdcResult r;
  if (!bridges(g).empty()) {
    r.status = SearchStatus::none;
    return r;
  }
  const EvenSpace sp = build_even_space(g);
  const int m = g.edge_count();
  const Mask full = full_mask(m);
  int max_size = 0;
  for (int s : sp.sizes) max_size = std::max(max_size, s);

  bool budget_hit = false;
  std::vector<int> fill;
  std::set<std::tuple<Mask, Mask, int>> failed;
  // need1: edges still short of depth 2; need2: edges still at depth 0.
  auto dfs = [&](auto&& self, Mask need1, Mask need2, int slots) -> bool {
    if (need1 == 0) return true;
    if (slots == 0 || budget_hit) return false;
    if (++r.nodes > options.node_budget) {
      budget_hit = true;
      return false;
    }
    if (need2 != 0 && slots < 2) return false;
    if (std::popcount(need1) + std::popcount(need2) > slots * max_size) return false;
    const auto key = std::make_tuple(need1, need2, slots);
    if (failed.count(key)) return false;
    const EdgeId e = std::countr_zero(need2 != 0 ? need2 : need1);
    for (int idx : sp.containing[static_cast<size_t>(e)]) {
      const Mask s = sp.sets[static_cast<size_t>(idx)];
      if (s & ~need1) continue;
      fill.push_back(idx);
      if (self(self, need2 | (need1 & ~s), need2 & ~s, slots - 1)) return true;
      fill.pop_back();
      if (budget_hit) return false;
    }
    if (failed.size() < kMemoCap) failed.insert(key);
    return false;
  };

  std::vector<int> order(sp.sets.size());
  std::iota(order.begin(), order.end(), 0);
  if (options.maximize_c0) {
    // Largest first; the even-space order is (size, lexicographic).
    std::stable_sort(order.begin(), order.end(), [&sp](int a, int b) {
      return sp.sizes[static_cast<size_t>(a)] > sp.sizes[static_cast<size_t>(b)];
    });
  }
  if (options.required_member) {
    const Mask want = to_mask(*options.required_member);
    order.erase(std::remove_if(order.begin(), order.end(),
                               [&sp, want](int i) { return sp.sets[static_cast<size_t>(i)] != want; }),
                order.end());
  }
  for (int c0 : order) {
    if (sp.sizes[static_cast<size_t>(c0)] == 0) continue;
    fill.clear();
    const Mask c = sp.sets[static_cast<size_t>(c0)];
    if (dfs(dfs, full, full & ~c, 4)) {
      std::vector<EdgeSet> members{from_mask(c)};
      for (int idx : fill) members.push_back(from_mask(sp.sets[static_cast<size_t>(idx)]));
      while (members.size() < 5) members.push_back({});
      const std::size_t lead = options.required_member ? 0 : largest_member(members);
      std::rotate(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(lead),
                  members.begin() + static_cast<std::ptrdiff_t>(lead) + 1);
      r.members = std::move(members);
      r.empty_members = static_cast<int>(std::count_if(r.members.begin(), r.members.end(),
                                                       [](const EdgeSet& s) { return s.empty(); }));
      r.status = SearchStatus::found;
      return r;
    }
    if (budget_hit) break;
  }
  r.status = budget_hit ? SearchStatus::inconclusive : SearchStatus::none;
  return r;
}

ParityFamily cdc_to_parity_family(const Multigraph& g, const std::vector<EdgeSet>& cdc) {
  const auto check = verify_five_cdc(g, cdc);
  if (!check.valid) throw Error(ErrorCode::verification_failed, "cdc_to_parity_family: " + check.message);
  const std::size_t lead = largest_member(cdc);
  const EdgeSet& c0 = cdc[lead];
  ParityFamily fam;
  fam.multiplicity.assign(static_cast<size_t>(g.edge_count()), 0);
  int slot = 0;
  for (std::size_t i = 0; i < cdc.size(); ++i) {
    if (i == lead) continue;
    EdgeSet diff;
    std::set_symmetric_difference(c0.begin(), c0.end(), cdc[i].begin(), cdc[i].end(), std::back_inserter(diff));
    fam.members[static_cast<size_t>(slot)] = make_parity_subgraph(g, complement(g, diff));
    for (EdgeId e : fam.members[static_cast<size_t>(slot)].edges) ++fam.multiplicity[static_cast<size_t>(e)];
    ++slot;
  }
  fam.max_edge_multiplicity = *std::max_element(fam.multiplicity.begin(), fam.multiplicity.end());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const bool in_c0 = std::binary_search(c0.begin(), c0.end(), e);
    if (fam.multiplicity[static_cast<size_t>(e)] != (in_c0 ? 1 : 2)) {
      throw Error(ErrorCode::verification_failed,
                  "cdc_to_parity_family: edge " + std::to_string(e) + " has multiplicity " +
                      std::to_string(fam.multiplicity[static_cast<size_t>(e)]));
    }
  }
  return fam;
}

CdcExpansion cdc_to_expansion_set(const Multigraph& g, const std::vector<EdgeSet>& cdc) {
  CdcExpansion r;
  r.family = cdc_to_parity_family(g, cdc);
  for (const auto& j : r.family.members) r.u.insert(r.u.end(), j.v3.begin(), j.v3.end());
  r.u = normalize(std::move(r.u));
  r.expansion = expand_vertices(g, r.u);
  for (const auto& j : r.family.members) r.matchings.push_back(lift_parity_subgraph(g, r.expansion, j));
  const auto check = verify_four_cover(r.expansion.graph, r.matchings);
  if (!check.valid) throw Error(ErrorCode::verification_failed, "cdc_to_expansion_set: " + check.message);
  return r;
}

Depth2Expansion depth2_scc_to_expansion(const Multigraph& g, const CycleCover& cover) {
  require_cubic(g, "depth2_scc_to_expansion");
  const auto d = cover.depths(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (d[static_cast<size_t>(e)] == 0 || d[static_cast<size_t>(e)] > 2) {
      throw Error(ErrorCode::invalid_argument, "depth2_scc_to_expansion: edge " + std::to_string(e) +
                                                   " has depth " + std::to_string(d[static_cast<size_t>(e)]));
    }
  }
  Depth2Expansion r;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident(v);
    if (std::all_of(inc.begin(), inc.end(), [&d](EdgeId e) { return d[static_cast<size_t>(e)] == 2; })) {
      r.u.push_back(v);
    }
  }
  r.expansion = expand_vertices(g, r.u);
  for (const EdgeSet& member : cover.members) {
    EdgeSet lifted = member;
    for (const ExpandedTriangle& t : r.expansion.triangles) {
      auto inc = g.incident(t.source);
      std::vector<int> used;
      for (int k = 0; k < 3; ++k) {
        if (std::binary_search(member.begin(), member.end(), inc[static_cast<size_t>(k)])) used.push_back(k);
      }
      if (used.size() == 2) lifted.push_back(triangle_edge_between(t, used[0], used[1]));
    }
    r.lifted.members.push_back(normalize(std::move(lifted)));
  }
  const Multigraph& h = r.expansion.graph;
  r.length_matches_bound = 3 * r.lifted.length() == 4 * h.edge_count();
  const auto dh = r.lifted.depths(h);
  EdgeSet twice;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (dh[static_cast<size_t>(e)] == 2) twice.push_back(e);
  }
  r.double_cover_is_perfect_matching = is_perfect_matching(h, twice);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::string check_member_ids(const Multigraph& g, const std::vector<EdgeSet>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& s = members[i];
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] < 0 || s[k] >= g.edge_count()) {
        return "member " + std::to_string(i) + ": edge id " + std::to_string(s[k]) + " out of range";
      }
      if (k > 0 && s[k] <= s[k - 1]) return "member " + std::to_string(i) + ": edge ids not strictly ascending";
    }
  }
  return {};
}

CoverReport depth_report(const Multigraph& g, const std::vector<EdgeSet>& members) {
  CoverReport rep;
  CycleCover c{members};
  rep.length = c.length();
  rep.depth = c.depth(g);
  const auto d = c.depths(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (d[static_cast<size_t>(e)] == 0) {
      rep.message = "edge " + std::to_string(e) + " is uncovered";
      return rep;
    }
  }
  rep.valid = true;
  return rep;
}

}  // namespace

CoverReport verify_cycle_cover(const Multigraph& g, const std::vector<EdgeSet>& members) {
  if (auto msg = check_member_ids(g, members); !msg.empty()) return {false, msg, 0, 0};
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!is_even_subgraph(g, members[i])) {
      return {false, "member " + std::to_string(i) + " is not an even subgraph", 0, 0};
    }
  }
  return depth_report(g, members);
}

CoverReport verify_five_cdc(const Multigraph& g, const std::vector<EdgeSet>& members) {
  if (members.size() != 5) return {false, "expected 5 members, got " + std::to_string(members.size()), 0, 0};
  auto rep = verify_cycle_cover(g, members);
  if (!rep.valid) return rep;
  const auto d = CycleCover{members}.depths(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (d[static_cast<size_t>(e)] != 2) {
      rep.valid = false;
      rep.message = "edge " + std::to_string(e) + " has depth " + std::to_string(d[static_cast<size_t>(e)]);
      return rep;
    }
  }
  return rep;
}

CoverReport verify_four_cover(const Multigraph& g, const std::vector<EdgeSet>& matchings) {
  if (matchings.size() != 4) return {false, "expected 4 matchings, got " + std::to_string(matchings.size()), 0, 0};
  if (auto msg = check_member_ids(g, matchings); !msg.empty()) return {false, msg, 0, 0};
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    if (!is_perfect_matching(g, matchings[i])) {
      return {false, "member " + std::to_string(i) + " is not a perfect matching", 0, 0};
    }
  }
  return depth_report(g, matchings);
}

CoverReport verify_parity_family(const Multigraph& g, const std::vector<EdgeSet>& members) {
  if (members.size() != 4) return {false, "expected 4 members, got " + std::to_string(members.size()), 0, 0};
  if (auto msg = check_member_ids(g, members); !msg.empty()) return {false, msg, 0, 0};
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!is_parity_subgraph(g, members[i])) {
      return {false, "member " + std::to_string(i) + " is not a parity subgraph", 0, 0};
    }
  }
  auto rep = depth_report(g, members);
  if (rep.valid && rep.depth > 2) {
    rep.valid = false;
    rep.message = "an edge is covered " + std::to_string(rep.depth) + " times";
  }
  return rep;
}

}  // namespace tricub
