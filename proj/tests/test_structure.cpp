#include <doctest.h>

#include <algorithm>
#include <random>

#include "testkit/testkit.hpp"
#include "tricub/generators.hpp"
#include "tricub/matching.hpp"
#include "tricub/structure.hpp"

using namespace tricub;

TEST_SUITE("structure") {
  TEST_CASE("bridges") {
    CHECK(bridges(generate("P10")).empty());
    CHECK(bridges(generate("theta")).empty());
    const Multigraph s10 = generate("S10");
    const EdgeSet b = bridges(s10);
    CHECK(b.size() == 3);
    // All three meet one vertex.
    std::vector<int> hits(static_cast<size_t>(s10.vertex_count()), 0);
    for (EdgeId e : b) {
      ++hits[static_cast<size_t>(s10.edge(e).u)];
      ++hits[static_cast<size_t>(s10.edge(e).v)];
    }
    CHECK(*std::max_element(hits.begin(), hits.end()) == 3);
    CHECK_THROWS_AS(bridges(Multigraph(4, {{0, 1}, {2, 3}})), Error);
    for (const auto& entry : testkit::corpus()) {
      CAPTURE(entry.name);
      CHECK(bridges(entry.graph) == testkit::brute_bridges(entry.graph));
    }
    for (int n : {4, 8, 12}) {
      const Multigraph g = generate_from_tree(DegreeTree::caterpillar(n), Gadget::W);
      CHECK(bridges(g) == testkit::brute_bridges(g));
    }
  }

  TEST_CASE("block decomposition") {
    const auto s10 = decompose(generate("S10"));
    CHECK(s10.end_blocks.size() == 3);
    for (const auto& eb : s10.end_blocks) CHECK(eb.root == s10.end_blocks[0].root);
    const Multigraph s16g = generate("S16");
    const auto s16 = decompose(s16g);
    CHECK(s16.end_blocks.size() == 3);
    for (const auto& eb : s16.end_blocks) {
      CHECK(testkit::isomorphic(induced_by_edges(s16g, s16.blocks[static_cast<size_t>(eb.block)]),
                                generate("Wprime")));
    }
    const auto p10 = decompose(generate("P10"));
    CHECK(p10.blocks.size() == 1);
    CHECK(p10.cut_vertices.empty());
    CHECK(p10.end_blocks.empty());
    for (const auto& entry : testkit::corpus()) {
      const auto d = decompose(entry.graph);
      // Blocks partition the edge set.
      EdgeSet all;
      for (const auto& blk : d.blocks) all.insert(all.end(), blk.begin(), blk.end());
      std::sort(all.begin(), all.end());
      EdgeSet expected(static_cast<size_t>(entry.graph.edge_count()));
      for (int e = 0; e < entry.graph.edge_count(); ++e) expected[static_cast<size_t>(e)] = e;
      CHECK(all == expected);
      if (bridges(entry.graph).empty()) CHECK(d.blocks.size() == 1);
    }
  }

  TEST_CASE("trivial bridges") {
    const Multigraph s10 = generate("S10");
    const Multigraph s16 = generate("S16");
    for (EdgeId e : bridges(s10)) CHECK(is_trivial_bridge(s10, e, 3));
    for (EdgeId e : bridges(s16)) {
      CHECK(is_trivial_bridge(s16, e, 5));
      CHECK_FALSE(is_trivial_bridge(s16, e, 3));
    }
    CHECK_THROWS_AS(is_trivial_bridge(generate("P10"), 0, 3), Error);
    CHECK_THROWS_AS(is_trivial_bridge(s10, bridges(s10)[0], 4), Error);
  }

  TEST_CASE("triangle expansion") {
    const Multigraph p10 = generate("P10");
    const auto p12 = expand_vertices(p10, {0});
    CHECK(p12.graph == generate("P12"));
    CHECK(testkit::isomorphic(p12.graph, testkit::naive_expand(p10, {0})));

    const auto same = expand_vertices(p10, {});
    CHECK(same.graph == p10);
    for (EdgeId e = 0; e < p10.edge_count(); ++e) CHECK(same.edge_lift[static_cast<size_t>(e)] == e);

    const Multigraph k4 = generate("K4");
    const auto k4x = expand_vertices(k4, {0, 1, 2, 3});
    CHECK(k4x.graph.vertex_count() == 12);
    CHECK(is_cubic(k4x.graph));
    EdgeSet non_triangle;
    for (EdgeId e = 0; e < k4.edge_count(); ++e) non_triangle.push_back(k4x.edge_lift[static_cast<size_t>(e)]);
    CHECK(is_perfect_matching(k4x.graph, non_triangle));

    // Corner k receives the k-th incident edge by ascending id.
    for (const auto& t : p12.triangles) {
      const auto inc = p10.incident(t.source);
      for (int k = 0; k < 3; ++k) {
        const Edge& e = p12.graph.edge(inc[static_cast<size_t>(k)]);
        CHECK((e.u == t.corners[static_cast<size_t>(k)] || e.v == t.corners[static_cast<size_t>(k)]));
      }
      for (int k = 0; k < 3; ++k) {
        const Edge& opp = p12.graph.edge(triangle_edge_opposite(t, k));
        CHECK(opp.u != t.corners[static_cast<size_t>(k)]);
        CHECK(opp.v != t.corners[static_cast<size_t>(k)]);
      }
    }
    CHECK_THROWS_AS(expand_vertices(generate("W"), {0}), Error);
  }

  TEST_CASE("triangle contraction") {
    const auto p12 = expand_vertices(generate("P10"), {0});
    CHECK(contract_triangle(p12.graph, p12.triangles[0].edges) == generate("P10"));
    const Multigraph k4 = generate("K4");
    // Facial triangle 0-1-2: edges 0 (01), 3 (12), 1 (02).
    const Multigraph theta_like = contract_triangle(k4, {0, 3, 1});
    CHECK(theta_like.vertex_count() == 2);
    CHECK(theta_like.edge_count() == 3);
    CHECK(testkit::isomorphic(theta_like, generate("theta")));
    CHECK_THROWS_AS(contract_triangle(k4, {0, 1, 2}), Error);
  }

  TEST_CASE("expansion invariants on random inputs") {
    std::mt19937_64 rng(7);
    for (const auto& entry : testkit::corpus(40)) {
      const Multigraph& g = entry.graph;
      VertexSet u;
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (rng() % 3 == 0) u.push_back(v);
      }
      const auto x = expand_vertices(g, u);
      CAPTURE(entry.name);
      CHECK(x.graph.vertex_count() - g.vertex_count() == 2 * static_cast<int>(u.size()));
      CHECK(x.graph.edge_count() - g.edge_count() == 3 * static_cast<int>(u.size()));
      CHECK(is_cubic(x.graph));
      CHECK(testkit::isomorphic(x.graph, testkit::naive_expand(g, u)));
      // Contract the recorded triangles, last first so ids stay valid.
      Multigraph back = x.graph;
      bool contractible = true;
      for (size_t i = x.triangles.size(); i-- > 0;) {
        try {
          back = contract_triangle(back, x.triangles[i].edges);
        } catch (const Error&) {
          contractible = false;  // would create a loop (parallel edge into the triangle)
          break;
        }
      }
      if (contractible) CHECK(back == g);
    }
  }

  TEST_CASE("subdivide and attach") {
    const Multigraph theta = generate("theta");
    const auto h = subdivide_attach(theta, {0, 1, 2}, Gadget::W);
    CHECK(h.graph.vertex_count() == 2 + 4 * 3);
    CHECK(h.graph.edge_count() == 3 + 6 * 3);
    CHECK(is_cubic(h.graph));
    CHECK(h.attachments.size() == 3);
    const auto d = decompose(h.graph);
    CHECK(d.end_blocks.size() == 3);
    for (const auto& a : h.attachments) {
      const bool rooted = std::any_of(d.end_blocks.begin(), d.end_blocks.end(),
                                      [&a](const EndBlock& eb) { return eb.root == a.root; });
      CHECK(rooted);
    }
    CHECK(subdivide_attach(theta, {}, Gadget::W).graph == theta);

    const auto k4w = subdivide_attach(generate("K4"), {0}, Gadget::Wprime);
    CHECK(k4w.graph.vertex_count() == 10);
    CHECK(is_simple(k4w.graph));
    CHECK(is_cubic(k4w.graph));
    CHECK(bridges(k4w.graph).size() == 1);
  }
}
