#include <doctest.h>

#include <algorithm>
#include <bit>

#include "testkit/testkit.hpp"
#include "tricub/covers.hpp"
#include "tricub/generators.hpp"
#include "tricub/matching.hpp"
#include "tricub/params.hpp"
#include "tricub/structure.hpp"

using namespace tricub;

namespace {

bool bridgeless(const Multigraph& g) { return bridges(g).empty(); }

}  // namespace

TEST_SUITE("covers") {
  TEST_CASE("even subgraph enumeration") {
    const auto k4 = enumerate_even_subgraphs(generate("K4"));
    CHECK(k4.size() == 8);
    CHECK(std::count_if(k4.begin(), k4.end(), [](const EdgeSet& s) { return s.size() == 3; }) == 4);
    CHECK(std::count_if(k4.begin(), k4.end(), [](const EdgeSet& s) { return s.size() == 4; }) == 3);
    CHECK(enumerate_even_subgraphs(generate("theta")).size() == 4);
    CHECK(enumerate_even_subgraphs(generate("P10")).size() == 64);
    for (const auto& entry : testkit::corpus(40)) {
      const auto mine = enumerate_even_subgraphs(entry.graph);
      CHECK(mine.size() == testkit::brute_even_masks(entry.graph).size());
      CHECK(max_even_subgraph_size(entry.graph) == testkit::brute_max_even_size(entry.graph));
      for (const auto& s : mine) CHECK(is_even_subgraph(entry.graph, s));
    }
  }

  TEST_CASE("four_pm_cover on catalog graphs") {
    const auto p12 = four_pm_cover(generate("P12"));
    REQUIRE(p12.status == SearchStatus::found);
    CHECK(verify_four_cover(generate("P12"), p12.matchings).valid);
    const auto p10 = four_pm_cover(generate("P10"));
    CHECK(p10.status == SearchStatus::none);
    CHECK(p10.enumeration_complete);
    CHECK(p10.matching_count == 6);
    const auto k4 = four_pm_cover(generate("K4"));
    REQUIRE(k4.status == SearchStatus::found);
    CHECK(verify_four_cover(generate("K4"), k4.matchings).valid);
    FourCoverOptions distinct;
    distinct.distinct = true;
    // K4 has only three perfect matchings, so four distinct ones do not exist.
    CHECK(four_pm_cover(generate("K4"), distinct).status == SearchStatus::none);
    FourCoverOptions tiny;
    tiny.matching_limit = 3;
    CHECK(four_pm_cover(generate("P10"), tiny).status == SearchStatus::inconclusive);
  }

  TEST_CASE("four_pm_cover agrees with brute force") {
    for (const auto& entry : testkit::corpus()) {
      if (!bridgeless(entry.graph)) continue;
      CAPTURE(entry.name);
      const auto r = four_pm_cover(entry.graph);
      CHECK(r.status != SearchStatus::inconclusive);
      CHECK((r.status == SearchStatus::found) == testkit::brute_four_coverable(entry.graph));
      if (r.status == SearchStatus::found) CHECK(verify_four_cover(entry.graph, r.matchings).valid);
    }
  }

  TEST_CASE("shortest cycle cover: catalog values") {
    SccOptions unlimited;
    unlimited.max_members = 0;
    const auto k4 = scc_exact(generate("K4"), unlimited);
    CHECK(k4.length == 8);
    CHECK(k4.exact);
    const auto p10 = scc_exact(generate("P10"), unlimited);
    CHECK(p10.length == 21);
    CHECK(p10.exact);
    const auto theta = scc_exact(generate("theta"), unlimited);
    CHECK(theta.length == 4);
    CHECK(testkit::brute_scc(generate("K4")) == 8);
    CHECK(testkit::brute_scc(generate("P10")) == 21);
    CHECK(testkit::brute_scc(generate("theta")) == 4);
    const auto p10_default = scc_exact(generate("P10"));
    CHECK(p10_default.length == 21);
    CHECK(verify_cycle_cover(generate("P10"), p10.cover.members).valid);
    CHECK(scc_lower_bound(generate("P10")) == 20);
    CHECK_THROWS_AS(scc_exact(generate("S10")), Error);
  }

  TEST_CASE("shortest cycle cover agrees with brute force") {
    SccOptions unlimited;
    unlimited.max_members = 0;
    for (const auto& entry : testkit::corpus()) {
      if (!bridgeless(entry.graph)) continue;
      CAPTURE(entry.name);
      const auto r = scc_exact(entry.graph, unlimited);
      REQUIRE(r.status == SearchStatus::found);
      const auto rep = verify_cycle_cover(entry.graph, r.cover.members);
      CHECK(rep.valid);
      CHECK(rep.length == r.length);
      CHECK(3 * r.length >= 4 * entry.graph.edge_count());
      const int brute = testkit::brute_scc(entry.graph);
      if (r.exact) {
        CHECK(r.length == brute);
      } else {
        CHECK(r.length >= brute);
      }
    }
  }

  TEST_CASE("five_cdc") {
    FiveCdcOptions opt;
    const Multigraph p10 = generate("P10");
    const auto r = five_cdc(p10, opt);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.members.size() == 5);
    CHECK(r.members[0].size() == 9);
    CHECK(verify_five_cdc(p10, r.members).valid);
    const auto k4 = five_cdc(generate("K4"), opt);
    REQUIRE(k4.status == SearchStatus::found);
    CHECK(verify_five_cdc(generate("K4"), k4.members).valid);
    CHECK(k4.empty_members == 2);
    CHECK(five_cdc(generate("S10"), opt).status == SearchStatus::none);
    for (const auto& entry : testkit::corpus()) {
      if (!bridgeless(entry.graph)) continue;
      const auto c = five_cdc(entry.graph, opt);
      REQUIRE(c.status == SearchStatus::found);
      const auto rep = verify_five_cdc(entry.graph, c.members);
      CHECK(rep.valid);
      int total = 0;
      for (const auto& m : c.members) total += static_cast<int>(m.size());
      CHECK(total == 2 * entry.graph.edge_count());
      // C0 is the largest member.
      CHECK(largest_member(c.members) == 0);
    }
  }

  TEST_CASE("cover verification reports violations") {
    const Multigraph p10 = generate("P10");
    auto bad = enumerate_perfect_matchings(p10, 10).matchings;
    bad.resize(4);
    const auto rep = verify_four_cover(p10, bad);
    CHECK_FALSE(rep.valid);
    CHECK(rep.message.find("uncovered") != std::string::npos);
    const auto k4 = five_cdc(generate("K4")).members;
    auto depth3 = k4;
    depth3[4] = depth3[0];
    CHECK_FALSE(verify_five_cdc(generate("K4"), depth3).valid);
    CHECK_FALSE(verify_cycle_cover(p10, {{0, 1, 2}}).valid);
  }

  TEST_CASE("5-CDC to parity family and expansion set") {
    const Multigraph p10 = generate("P10");
    const auto cdc = five_cdc(p10).members;
    const auto fam = cdc_to_parity_family(p10, cdc);
    CHECK(fam.max_edge_multiplicity <= 2);
    for (EdgeId e = 0; e < p10.edge_count(); ++e) {
      const bool in_c0 = std::binary_search(cdc[0].begin(), cdc[0].end(), e);
      CHECK(fam.multiplicity[static_cast<size_t>(e)] == (in_c0 ? 1 : 2));
    }
    const auto exp = cdc_to_expansion_set(p10, cdc);
    CHECK(exp.u.size() <= 1);
    CHECK(four_pm_cover(expand_vertices(p10, exp.u).graph).status == SearchStatus::found);
    CHECK(verify_four_cover(exp.expansion.graph, exp.matchings).valid);

    const Multigraph k4 = generate("K4");
    const auto kc = five_cdc(k4).members;
    const auto kf = cdc_to_parity_family(k4, kc);
    for (const auto& j : kf.members) {
      CHECK(is_parity_subgraph(k4, j.edges));
      CHECK(j.edges.size() >= 2);
    }
    CHECK(cdc_to_expansion_set(k4, kc).u.empty());

    for (const auto& entry : testkit::corpus()) {
      const Multigraph& g = entry.graph;
      if (!bridgeless(g)) continue;
      CAPTURE(entry.name);
      const auto c = five_cdc(g).members;
      const auto f = cdc_to_parity_family(g, c);
      CHECK(f.max_edge_multiplicity <= 2);
      for (const auto& j : f.members) CHECK(is_parity_subgraph(g, j.edges));
      // Depth-1 edges are exactly C0.
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const bool in_c0 = std::binary_search(c[0].begin(), c[0].end(), e);
        CHECK((f.multiplicity[static_cast<size_t>(e)] == 1) == in_c0);
      }
      const auto x = cdc_to_expansion_set(g, c);
      CHECK(static_cast<int>(x.u.size()) <= g.vertex_count() - static_cast<int>(c[0].size()));
      CHECK(5 * static_cast<int>(x.u.size()) <= 2 * g.vertex_count());
      CHECK(verify_four_cover(x.expansion.graph, x.matchings).valid);
    }
  }

  TEST_CASE("depth-2 cover transform") {
    SccOptions depth2;
    depth2.max_members = 0;
    depth2.max_depth = 2;
    const Multigraph k4 = generate("K4");
    const auto kc = scc_exact(k4, depth2);
    const auto kx = depth2_scc_to_expansion(k4, kc.cover);
    CHECK(kx.u.empty());
    CHECK(kx.lifted.length() == 8);

    const Multigraph p10 = generate("P10");
    const auto pc = scc_exact(p10, depth2);
    REQUIRE(pc.length == 21);
    CHECK(pc.cover.depth(p10) <= 2);
    const auto px = depth2_scc_to_expansion(p10, pc.cover);
    CHECK(px.u.size() == 1);
    CHECK(px.expansion.graph.vertex_count() == 12);
    CHECK(px.lifted.length() == 24);
    CHECK(verify_cycle_cover(px.expansion.graph, px.lifted.members).valid);
    CHECK(px.length_matches_bound);
    CHECK(px.double_cover_is_perfect_matching);
    CHECK(testkit::isomorphic(px.expansion.graph, generate("P12")));

    CycleCover deep;
    deep.members = {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
    CHECK_THROWS_AS(depth2_scc_to_expansion(generate("theta"), deep), Error);
  }
}
