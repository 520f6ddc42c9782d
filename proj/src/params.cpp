#include "tricub/params.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

#include "tricub/structure.hpp"

namespace tricub {
namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

// The index-th k-subset of {0..n-1} in lexicographic order.
VertexSet unrank_subset(int n, int k, std::uint64_t index) {
  VertexSet out;
  int c = 0;
  for (int j = 0; j < k; ++j) {
    while (true) {
      const std::uint64_t count = binomial(n - 1 - c, k - 1 - j);
      if (index < count) break;
      index -= count;
      ++c;
    }
    out.push_back(c++);
  }
  return out;
}

}  // namespace

const char* to_string(ParamKind k) { return k == ParamKind::t ? "t" : "T"; }

ParamCertificate t_exact(const Multigraph& g) {
  const ParitySubgraph j = min_parity_subgraph(g, ParityBackend::matching);
  ParamCertificate c;
  c.kind = ParamKind::t;
  c.host_hash = graph_hash(g);
  c.witness_u = j.v3;
  const auto expansion = expand_vertices(g, c.witness_u);
  c.witness.push_back(lift_parity_subgraph(g, expansion, j));
  if (!is_perfect_matching(expansion.graph, c.witness[0])) {
    throw Error(ErrorCode::verification_failed, "t_exact: lifted parity subgraph is not a perfect matching");
  }
  c.value = static_cast<int>(c.witness_u.size());
  c.lower_bound = c.value;
  c.exact = true;
  return c;
}

ParamCertificate T_exact(const Multigraph& g, const TOptions& options) {
  require_cubic(g, "T_exact");
  require_connected(g, "T_exact");
  if (!bridges(g).empty()) throw Error(ErrorCode::has_bridge, "T_exact: T is defined for bridgeless graphs only");
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto expired = [&] {
    return options.timeout_seconds > 0 &&
           std::chrono::duration<double>(Clock::now() - start).count() > options.timeout_seconds;
  };
  const int n = g.vertex_count();
  int threads = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(threads, 1);

  ParamCertificate cert;
  cert.kind = ParamKind::T;
  cert.host_hash = graph_hash(g);
  bool refuting = true;
  bool timed_out = false;
  for (int k = 0; k <= std::min(options.budget, n) && !timed_out; ++k) {
    const std::uint64_t total = binomial(n, k);
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> found{std::numeric_limits<std::uint64_t>::max()};
    std::atomic<bool> stop_time{false};
    std::atomic<bool> unsure{false};
    std::mutex mu;
    std::vector<EdgeSet> found_cover;
    auto worker = [&] {
      while (true) {
        const std::uint64_t i = next.fetch_add(1);
        if (i >= total || i > found.load()) return;
        if (expired()) {
          stop_time = true;
          return;
        }
        const VertexSet u = unrank_subset(n, k, i);
        const Multigraph h = expand_vertices(g, u).graph;
        if (h.edge_count() > kMaxSearchEdges) {
          unsure = true;
          continue;
        }
        const auto res = four_pm_cover(h, options.cover);
        if (res.status == SearchStatus::inconclusive) unsure = true;
        if (res.status != SearchStatus::found) continue;
        std::lock_guard<std::mutex> lock(mu);
        if (i < found.load()) {
          found = i;
          found_cover = res.matchings;
        }
      }
    };
    if (threads == 1 || total == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    if (found.load() != std::numeric_limits<std::uint64_t>::max()) {
      cert.value = k;
      cert.witness_u = unrank_subset(n, k, found.load());
      cert.witness = found_cover;
      break;
    }
    if (stop_time) timed_out = true;
    if (unsure || stop_time) refuting = false;
    if (refuting) cert.lower_bound = k + 1;
  }
  if (cert.value < 0 || cert.value > cert.lower_bound) {
    // Fall back on the constructive 5-CDC bound for an upper bound.
    try {
      FiveCdcOptions opt;
      opt.node_budget = 2000000;
      const auto cdc = five_cdc(g, opt);
      if (cdc.status == SearchStatus::found) {
        auto exp = cdc_to_expansion_set(g, cdc.members);
        if (cert.value < 0 || static_cast<int>(exp.u.size()) < cert.value) {
          cert.value = static_cast<int>(exp.u.size());
          cert.witness_u = exp.u;
          cert.witness = exp.matchings;
        }
      }
    } catch (const Error&) {
      // Too large for the 5-CDC search; keep what the direct search found.
    }
  }
  cert.exact = cert.value >= 0 && cert.value == cert.lower_bound;
  return cert;
}

CertificateCheck verify_param_certificate(const Multigraph& g, const ParamCertificate& cert) {
  CertificateCheck out;
  if (!cert.host_hash.empty() && cert.host_hash != graph_hash(g)) {
    out.message = "host hash mismatch";
    return out;
  }
  if (cert.value < 0) {
    out.message = "certificate carries no witness";
    return out;
  }
  if (normalize(cert.witness_u) != cert.witness_u || static_cast<int>(cert.witness_u.size()) != cert.value) {
    out.message = "witness set is not a sorted set of size value";
    return out;
  }
  for (VertexId v : cert.witness_u) {
    if (v < 0 || v >= g.vertex_count()) {
      out.message = "witness vertex out of range";
      return out;
    }
  }
  const auto h = expand_vertices(g, cert.witness_u).graph;
  if (cert.kind == ParamKind::t) {
    if (cert.witness.size() != 1 || !is_perfect_matching(h, cert.witness[0])) {
      out.message = "witness is not a perfect matching of the expanded graph";
      return out;
    }
  } else {
    const auto rep = verify_four_cover(h, cert.witness);
    if (!rep.valid) {
      out.message = rep.message;
      return out;
    }
  }
  if (cert.exact && cert.lower_bound != cert.value) {
    out.message = "exact certificate with lower bound below value";
    return out;
  }
  out.valid = true;
  return out;
}

GallaiReport check_gallai(const Multigraph& g) {
  GallaiReport r;
  r.vertices = g.vertex_count();
  const ParitySubgraph j = min_parity_subgraph(g, ParityBackend::matching);
  r.t = static_cast<int>(j.v3.size());
  r.identity_holds = 2 * static_cast<int>(j.edges.size()) == r.vertices + 2 * r.t;
  if (cycle_space_dimension(g) <= kMaxCycleSpaceDim) {
    r.ell = max_even_subgraph_size(g);
    r.ell_independent = true;
  } else {
    r.ell = g.edge_count() - static_cast<int>(j.edges.size());
  }
  r.holds = r.t + r.ell == r.vertices;
  return r;
}

std::vector<FamilyRow> family_table(Gadget gadget, const std::vector<int>& n_values) {
  std::vector<FamilyRow> rows;
  for (int n : n_values) {
    const DegreeTree tree = DegreeTree::caterpillar(n);
    const Multigraph g = generate_from_tree(tree, gadget);
    const auto rep = check_gallai(g);
    rows.push_back({n, tree.k1(), g.vertex_count(), rep.ell, rep.t, rep.holds});
  }
  return rows;
}

bool is_three_edge_connected(const Multigraph& g) {
  if (!is_connected(g) || g.vertex_count() < 2) return false;
  const int m = g.edge_count();
  std::vector<bool> removed(static_cast<size_t>(m), false);
  auto connected_without = [&] {
    const auto labels = component_labels(g, &removed);
    return std::all_of(labels.begin(), labels.end(), [](int l) { return l == 0; });
  };
  for (EdgeId e = 0; e < m; ++e) {
    removed[static_cast<size_t>(e)] = true;
    if (!connected_without()) return false;
    for (EdgeId f = e + 1; f < m; ++f) {
      removed[static_cast<size_t>(f)] = true;
      const bool ok = connected_without();
      removed[static_cast<size_t>(f)] = false;
      if (!ok) return false;
    }
    removed[static_cast<size_t>(e)] = false;
  }
  return true;
}

bool is_claw_free(const Multigraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::set<VertexId> nb;
    for (EdgeId e : g.incident(v)) nb.insert(g.other_end(e, v));
    if (nb.size() < 3) continue;
    bool adjacent_pair = false;
    for (VertexId a : nb) {
      for (EdgeId e : g.incident(a)) {
        const VertexId b = g.other_end(e, a);
        if (b != v && nb.count(b)) adjacent_pair = true;
      }
    }
    if (!adjacent_pair) return false;
  }
  return true;
}

}  // namespace tricub
