#include <doctest.h>

#include <algorithm>

#include "testkit/testkit.hpp"
#include "tricub/covers.hpp"
#include "tricub/generators.hpp"
#include "tricub/hcoloring.hpp"
#include "tricub/matching.hpp"

using namespace tricub;

namespace {

// K4 with vertices A..D and edges a1=AB, a2=BC, a3=CD, a4=DA, a5=AC, a6=DB.
Multigraph k4_lettered() { return Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {3, 1}}); }

// K33 on p,q,r,s,u,v (0..5) with its K4-coloring given as a map to a1..a6.
Multigraph k33_figure() {
  return Multigraph(6, {{0, 3}, {1, 4}, {0, 2}, {1, 2}, {3, 5}, {4, 5}, {2, 5}, {0, 4}, {3, 1}});
}
const EdgeMap kFigureColoring{0, 1, 3, 2, 3, 2, 5, 4, 4};

EdgeMap identity(const Multigraph& g) {
  EdgeMap phi(static_cast<size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) phi[static_cast<size_t>(e)] = e;
  return phi;
}

}  // namespace

TEST_SUITE("hcoloring") {
  TEST_CASE("verification") {
    const auto rep = verify_hcoloring(k33_figure(), k4_lettered(), kFigureColoring);
    CHECK(rep.valid);
    CHECK(rep.vertex_image.size() == 6);
    const Multigraph p10 = generate("P10");
    CHECK(verify_hcoloring(p10, p10, identity(p10)).valid);
    const EdgeMap constant(9, 0);
    const auto bad = verify_hcoloring(k33_figure(), k4_lettered(), constant);
    CHECK_FALSE(bad.valid);
    REQUIRE(bad.bad_vertex.has_value());
    CHECK(*bad.bad_vertex == 0);
    CHECK_FALSE(verify_hcoloring(k33_figure(), k4_lettered(), EdgeMap{0, 1}).valid);
  }

  TEST_CASE("search") {
    const auto k33 = find_hcoloring(generate("K33"), generate("K4"));
    REQUIRE(k33.status == SearchStatus::found);
    CHECK(verify_hcoloring(generate("K33"), generate("K4"), k33.phi).valid);
    const Multigraph p10 = generate("P10");
    const auto pp = find_hcoloring(p10, p10);
    REQUIRE(pp.status == SearchStatus::found);
    CHECK(verify_hcoloring(p10, p10, pp.phi).valid);
    const auto k4 = find_hcoloring(generate("K4"), p10);
    REQUIRE(k4.status == SearchStatus::found);
    CHECK(verify_hcoloring(generate("K4"), p10, k4.phi).valid);
    // P10 is not 3-edge-colorable, i.e. has no K4-coloring: the search
    // space is exhausted.
    CHECK(find_hcoloring(p10, generate("K4")).status == SearchStatus::none);
    CHECK(find_hcoloring(p10, generate("K4"), 3).status == SearchStatus::inconclusive);
  }

  TEST_CASE("search agrees with 3-edge-colorability on the corpus") {
    // A K4-coloring exists iff the graph is 3-edge-colorable iff some
    // perfect matching has a complement made of even cycles only.
    for (const auto& entry : testkit::corpus(40)) {
      const Multigraph& g = entry.graph;
      bool colorable = false;
      for (const auto& m : testkit::brute_perfect_matchings(g)) {
        // The complement 2-factor splits into two matchings iff every cycle
        // is even; test by 2-colouring the complement's edges along cycles.
        const EdgeSet rest = complement(g, m);
        std::vector<int> color(static_cast<size_t>(g.edge_count()), -1);
        bool ok = true;
        for (EdgeId start : rest) {
          if (color[static_cast<size_t>(start)] >= 0) continue;
          EdgeId e = start;
          VertexId v = g.edge(start).u;
          int c = 0;
          while (color[static_cast<size_t>(e)] < 0) {
            color[static_cast<size_t>(e)] = c;
            c ^= 1;
            v = g.other_end(e, v);
            EdgeId next = -1;
            for (EdgeId f : g.incident(v)) {
              if (f != e && std::binary_search(rest.begin(), rest.end(), f)) next = f;
            }
            e = next;
          }
          if (color[static_cast<size_t>(e)] != c) ok = false;  // odd cycle closed
        }
        if (ok) {
          colorable = true;
          break;
        }
      }
      const auto r = find_hcoloring(g, generate("K4"));
      CAPTURE(entry.name);
      CHECK(r.status != SearchStatus::inconclusive);
      CHECK((r.status == SearchStatus::found) == colorable);
    }
  }

  TEST_CASE("composition") {
    // K33 -> K4 (figure) and K4 -> P10 (search) compose to K33 -> P10.
    const Multigraph p10 = generate("P10");
    const auto k4p = find_hcoloring(k4_lettered(), p10);
    REQUIRE(k4p.status == SearchStatus::found);
    const EdgeMap composed = compose(kFigureColoring, k4p.phi);
    CHECK(verify_hcoloring(k33_figure(), p10, composed).valid);
    CHECK_THROWS_AS(compose(EdgeMap{7}, EdgeMap{0, 1}), Error);
  }

  TEST_CASE("P10 fixtures") {
    const Multigraph p10 = generate("P10");
    for (VertexId z = 0; z < 10; ++z) {
      const auto& f = petersen_cdc_fixture(z);
      CHECK(f.z == z);
      CHECK(f.circuit.size() == 9);
      CHECK(degrees_in(p10, f.circuit)[static_cast<size_t>(z)] == 0);
      CHECK(f.cdc[0] == f.circuit);
      CHECK(verify_five_cdc(p10, f.cdc).valid);
    }
    CHECK_THROWS_AS(petersen_cdc_fixture(10), Error);
  }

  TEST_CASE("Petersen coloring to 5-CDC") {
    const Multigraph p10 = generate("P10");
    const auto id = petersen_coloring_to_cdc(p10, identity(p10));
    CHECK(id.z == 0);
    CHECK(id.z_preimages == 1);
    CHECK(id.members[0].size() == 9);
    CHECK(verify_five_cdc(p10, id.members).valid);

    for (const char* name : {"K33", "K4", "prism", "P12"}) {
      CAPTURE(name);
      const Multigraph g = generate(name);
      const auto phi = find_hcoloring(g, p10);
      REQUIRE(phi.status == SearchStatus::found);
      const auto cdc = petersen_coloring_to_cdc(g, phi.phi);
      CHECK(verify_five_cdc(g, cdc.members).valid);
      CHECK(5 * static_cast<int>(cdc.members[0].size()) >= 3 * g.edge_count());
      // Pullback closure over all 64 even subgraphs of P10.
      for (const EdgeSet& s : enumerate_even_subgraphs(p10)) {
        EdgeSet pulled;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
          if (std::binary_search(s.begin(), s.end(), phi.phi[static_cast<size_t>(e)])) pulled.push_back(e);
        }
        CHECK(is_even_subgraph(g, pulled));
      }
    }
    CHECK_THROWS_AS(petersen_coloring_to_cdc(p10, EdgeMap(15, 0)), Error);
  }
}
