#include "tricub/hcoloring.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <mutex>

#include <json.hpp>

#include "tricub/generators.hpp"
#include "tricub/io.hpp"

namespace tricub {
namespace {

using Star = std::array<EdgeId, 3>;

std::vector<Star> stars_of(const Multigraph& h) {
  std::vector<Star> stars;
  for (VertexId w = 0; w < h.vertex_count(); ++w) {
    auto inc = h.incident(w);
    stars.push_back({inc[0], inc[1], inc[2]});
  }
  return stars;
}

bool in_star(const Star& s, EdgeId c) { return s[0] == c || s[1] == c || s[2] == c; }

}  // namespace

HColoringReport verify_hcoloring(const Multigraph& g, const Multigraph& h, const EdgeMap& phi) {
  HColoringReport rep;
  if (!is_cubic(g) || !is_cubic(h)) {
    rep.message = "both graphs must be cubic";
    return rep;
  }
  if (static_cast<int>(phi.size()) != g.edge_count()) {
    rep.message = "map has " + std::to_string(phi.size()) + " entries for " + std::to_string(g.edge_count()) + " edges";
    return rep;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (phi[static_cast<size_t>(e)] < 0 || phi[static_cast<size_t>(e)] >= h.edge_count()) {
      rep.message = "edge " + std::to_string(e) + " maps outside the target";
      return rep;
    }
  }
  std::map<Star, VertexId> star_owner;
  for (VertexId w = 0; w < h.vertex_count(); ++w) {
    auto inc = h.incident(w);
    star_owner.emplace(Star{inc[0], inc[1], inc[2]}, w);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident(v);
    Star image{phi[static_cast<size_t>(inc[0])], phi[static_cast<size_t>(inc[1])], phi[static_cast<size_t>(inc[2])]};
    std::sort(image.begin(), image.end());
    auto it = star_owner.find(image);
    if (it == star_owner.end()) {
      rep.bad_vertex = v;
      rep.message = "vertex " + std::to_string(v) + " is not mapped onto a vertex star";
      rep.vertex_image.clear();
      return rep;
    }
    rep.vertex_image.push_back(it->second);
  }
  rep.valid = true;
  return rep;
}

HColoringSearch find_hcoloring(const Multigraph& g, const Multigraph& h, std::uint64_t node_budget) {
  require_cubic(g, "find_hcoloring");
  require_cubic(h, "find_hcoloring");
  HColoringSearch r;
  const int m = g.edge_count();
  const auto stars = stars_of(h);

  // Static most-constrained-first order.
  std::vector<EdgeId> order;
  std::vector<bool> placed(static_cast<size_t>(m), false);
  std::vector<int> touched(static_cast<size_t>(g.vertex_count()), 0);
  for (int step = 0; step < m; ++step) {
    EdgeId best = -1;
    int best_score = -1;
    for (EdgeId e = 0; e < m; ++e) {
      if (placed[static_cast<size_t>(e)]) continue;
      const int score = touched[static_cast<size_t>(g.edge(e).u)] + touched[static_cast<size_t>(g.edge(e).v)];
      if (score > best_score) {
        best_score = score;
        best = e;
      }
    }
    placed[static_cast<size_t>(best)] = true;
    ++touched[static_cast<size_t>(g.edge(best).u)];
    ++touched[static_cast<size_t>(g.edge(best).v)];
    order.push_back(best);
  }

  EdgeMap phi(static_cast<size_t>(m), -1);
  // A vertex's coloured edges must be distinct and lie in a common star.
  auto consistent = [&](VertexId v) {
    Star have{};
    int k = 0;
    for (EdgeId e : g.incident(v)) {
      const EdgeId c = phi[static_cast<size_t>(e)];
      if (c < 0) continue;
      for (int i = 0; i < k; ++i) {
        if (have[static_cast<size_t>(i)] == c) return false;
      }
      have[static_cast<size_t>(k++)] = c;
    }
    if (k == 0) return true;
    for (const Star& s : stars) {
      bool all = true;
      for (int i = 0; i < k && all; ++i) all = in_star(s, have[static_cast<size_t>(i)]);
      if (all) return true;
    }
    return false;
  };
  bool budget_hit = false;
  auto dfs = [&](auto&& self, int pos) -> bool {
    if (pos == m) return true;
    if (++r.nodes > node_budget) {
      budget_hit = true;
      return false;
    }
    const EdgeId e = order[static_cast<size_t>(pos)];
    for (EdgeId c = 0; c < h.edge_count(); ++c) {
      phi[static_cast<size_t>(e)] = c;
      if (consistent(g.edge(e).u) && consistent(g.edge(e).v) && self(self, pos + 1)) return true;
      if (budget_hit) break;
    }
    phi[static_cast<size_t>(e)] = -1;
    return false;
  };
  if (dfs(dfs, 0)) {
    r.status = SearchStatus::found;
    r.phi = std::move(phi);
    if (!verify_hcoloring(g, h, r.phi).valid) {
      throw Error(ErrorCode::verification_failed, "find_hcoloring: search produced an invalid colouring");
    }
  } else {
    r.status = budget_hit ? SearchStatus::inconclusive : SearchStatus::none;
  }
  return r;
}

EdgeMap compose(const EdgeMap& phi_gh, const EdgeMap& phi_hk) {
  EdgeMap out;
  out.reserve(phi_gh.size());
  for (EdgeId e : phi_gh) {
    if (e < 0 || e >= static_cast<EdgeId>(phi_hk.size())) {
      throw Error(ErrorCode::invalid_argument, "compose: maps do not chain");
    }
    out.push_back(phi_hk[static_cast<size_t>(e)]);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

const Multigraph& petersen() {
  static const Multigraph p = generate("P10");
  return p;
}

void verify_fixture(const PetersenCdcFixture& f) {
  const Multigraph& p = petersen();
  const auto deg = degrees_in(p, f.circuit);
  bool ok = f.circuit.size() == 9 && deg[static_cast<size_t>(f.z)] == 0 && is_even_subgraph(p, f.circuit);
  ok = ok && !f.cdc.empty() && f.cdc[0] == f.circuit && verify_five_cdc(p, f.cdc).valid;
  if (!ok) {
    throw Error(ErrorCode::verification_failed,
                "P10 fixture for vertex " + std::to_string(f.z) + " is not a 5-CDC led by a 9-circuit avoiding it");
  }
}

PetersenCdcFixture search_fixture(VertexId z) {
  const Multigraph& p = petersen();
  PetersenCdcFixture f;
  f.z = z;
  // The smallest 9-edge even subgraph missing z: a circuit, since P10 - z
  // has no two disjoint cycles covering its nine vertices.
  for (const EdgeSet& s : enumerate_even_subgraphs(p)) {
    if (s.size() != 9) continue;
    if (degrees_in(p, s)[static_cast<size_t>(z)] != 0) continue;
    f.circuit = s;
    break;
  }
  FiveCdcOptions opt;
  opt.required_member = f.circuit;
  const auto res = five_cdc(p, opt);
  if (res.status != SearchStatus::found) {
    throw Error(ErrorCode::verification_failed, "no 5-CDC of P10 contains the chosen 9-circuit");
  }
  f.cdc = res.members;
  verify_fixture(f);
  return f;
}

std::vector<PetersenCdcFixture> load_fixture_file(const std::string& path) {
  std::string file = path;
  if (std::filesystem::is_directory(file)) file = (std::filesystem::path(file) / "p10_cdc.json").string();
  const auto doc = nlohmann::json::parse(read_text_file(file));
  std::vector<PetersenCdcFixture> out(10);
  std::vector<bool> seen(10, false);
  for (const auto& entry : doc.at("fixtures")) {
    PetersenCdcFixture f;
    f.z = entry.at("z").get<int>();
    if (f.z < 0 || f.z >= 10) throw Error(ErrorCode::parse, "fixture vertex out of range");
    f.circuit = entry.at("circuit").get<EdgeSet>();
    f.cdc = entry.at("cdc").get<std::vector<EdgeSet>>();
    verify_fixture(f);
    seen[static_cast<size_t>(f.z)] = true;
    out[static_cast<size_t>(f.z)] = std::move(f);
  }
  for (int z = 0; z < 10; ++z) {
    if (!seen[static_cast<size_t>(z)]) {
      throw Error(ErrorCode::parse, "fixture file " + file + " lacks vertex " + std::to_string(z));
    }
  }
  return out;
}

const std::vector<PetersenCdcFixture>& all_fixtures() {
  static std::once_flag once;
  static std::vector<PetersenCdcFixture> fixtures;
  std::call_once(once, [] {
    if (const char* env = std::getenv("TRICUB_FIXTURES"); env != nullptr && *env != '\0') {
      fixtures = load_fixture_file(env);
      return;
    }
    for (VertexId z = 0; z < 10; ++z) fixtures.push_back(search_fixture(z));
  });
  return fixtures;
}

}  // namespace

const PetersenCdcFixture& petersen_cdc_fixture(VertexId z) {
  if (z < 0 || z >= 10) throw Error(ErrorCode::invalid_argument, "P10 vertex out of range");
  return all_fixtures()[static_cast<size_t>(z)];
}

std::string petersen_cdc_fixtures_json() {
  nlohmann::json doc;
  doc["graph_hash"] = graph_hash(petersen());
  doc["fixtures"] = nlohmann::json::array();
  for (const auto& f : all_fixtures()) {
    doc["fixtures"].push_back({{"z", f.z}, {"circuit", f.circuit}, {"cdc", f.cdc}});
  }
  return doc.dump(2) + "\n";
}

PetersenCdc petersen_coloring_to_cdc(const Multigraph& g, const EdgeMap& phi) {
  const Multigraph& p = petersen();
  const auto rep = verify_hcoloring(g, p, phi);
  if (!rep.valid) throw Error(ErrorCode::verification_failed, "petersen_coloring_to_cdc: " + rep.message);
  std::vector<int> count(10, 0);
  for (VertexId w : rep.vertex_image) ++count[static_cast<size_t>(w)];
  PetersenCdc out;
  out.z = static_cast<VertexId>(std::min_element(count.begin(), count.end()) - count.begin());
  out.z_preimages = count[static_cast<size_t>(out.z)];
  const auto& fixture = petersen_cdc_fixture(out.z);
  for (const EdgeSet& s : fixture.cdc) {
    EdgeSet pulled;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (std::binary_search(s.begin(), s.end(), phi[static_cast<size_t>(e)])) pulled.push_back(e);
    }
    out.members.push_back(std::move(pulled));
  }
  const auto check = verify_five_cdc(g, out.members);
  if (!check.valid) throw Error(ErrorCode::verification_failed, "petersen_coloring_to_cdc: pullback " + check.message);
  return out;
}

}  // namespace tricub
