#include <doctest.h>

#include <algorithm>
#include <random>

#include "testkit/testkit.hpp"
#include "tricub/analysis.hpp"
#include "tricub/certificates.hpp"
#include "tricub/generators.hpp"
#include "tricub/matching.hpp"
#include "tricub/params.hpp"
#include "tricub/structure.hpp"

using namespace tricub;

namespace {

const ReportRow* find_row(const AnalysisReport& r, const std::string& id) {
  for (const auto& row : r.rows) {
    if (row.id == id) return &row;
  }
  return nullptr;
}

}  // namespace

TEST_SUITE("params") {
  TEST_CASE("t agrees with the expansion oracle") {
    CHECK(t_exact(generate("K4")).value == 0);
    CHECK(t_exact(generate("S10")).value == 1);
    CHECK(t_exact(generate("S16")).value == 1);
    for (const auto& entry : testkit::corpus(60)) {
      CAPTURE(entry.name);
      const auto c = t_exact(entry.graph);
      CHECK(c.exact);
      CHECK(c.value == testkit::brute_t(entry.graph));
      CHECK(verify_param_certificate(entry.graph, c).valid);
    }
  }

  TEST_CASE("T on catalog graphs") {
    const Multigraph p10 = generate("P10");
    const auto c = T_exact(p10);
    CHECK(c.value == 1);
    CHECK(c.exact);
    CHECK(c.witness_u.size() == 1);
    CHECK(c.witness.size() == 4);
    CHECK(verify_param_certificate(p10, c).valid);
    CHECK(T_exact(generate("K4")).value == 0);
    CHECK(T_exact(generate("K33")).value == 0);
    try {
      T_exact(generate("S10"));
      FAIL("bridged graph accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::has_bridge);
    }
    TOptions none;
    none.budget = 0;
    // Size 0 is refuted and a 5-CDC supplies the upper bound 1: the bounds meet.
    const auto met = T_exact(p10, none);
    CHECK(met.exact);
    CHECK(met.value == 1);
    CHECK(met.lower_bound == 1);
    // With matching enumeration cut short nothing is refuted.
    TOptions starved;
    starved.cover.matching_limit = 1;
    const auto partial = T_exact(p10, starved);
    CHECK_FALSE(partial.exact);
    CHECK(partial.lower_bound == 0);
    CHECK(partial.value == 1);
    CHECK(verify_param_certificate(p10, partial).valid);

    // A tampered witness fails replay.
    auto bad = c;
    bad.witness[0] = bad.witness[1];
    bad.witness[2] = bad.witness[1];
    bad.witness[3] = bad.witness[1];
    CHECK_FALSE(verify_param_certificate(p10, bad).valid);
  }

  TEST_CASE("Gallai identity and family tables") {
    for (const char* name : {"S10", "S16", "K4", "P10", "W"}) {
      CAPTURE(name);
      const Multigraph g = generate(name);
      if (!is_cubic(g)) continue;
      const auto rep = check_gallai(g);
      CHECK(rep.holds);
      CHECK(rep.identity_holds);
      CHECK(rep.t + rep.ell == g.vertex_count());
    }
    CHECK(check_gallai(generate("S10")).ell == 9);
    CHECK(check_gallai(generate("S16")).ell == 15);

    for (const auto& row : family_table(Gadget::W, {4, 6, 8, 10})) {
      CAPTURE(row.n);
      CHECK(row.vertices == 2 * row.n + 2);
      CHECK(row.ell == 3 * row.k1);
      CHECK(row.t == row.k1 - 2);
      CHECK(row.gallai_holds);
    }
    for (const auto& row : family_table(Gadget::Wprime, {4, 6, 8})) {
      CAPTURE(row.n);
      CHECK(row.vertices == 3 * row.n + 4);
      CHECK(row.ell == 5 * row.k1);
      CHECK(row.gallai_holds);
    }
  }

  TEST_CASE("connectivity predicates") {
    CHECK(is_three_edge_connected(generate("P10")));
    CHECK(is_three_edge_connected(generate("K4")));
    CHECK(is_three_edge_connected(generate("prism")));
    CHECK_FALSE(is_three_edge_connected(generate("S10")));
    CHECK(is_claw_free(generate("K4")));
    CHECK(is_claw_free(generate("prism")));
    CHECK_FALSE(is_claw_free(generate("P10")));
  }

  TEST_CASE("subdivide-and-attach bounds") {
    const Multigraph theta = generate("theta");
    const auto h = subdivide_attach(theta, {0, 1, 2}, Gadget::W);
    CHECK(t_exact(h.graph).value == 1);
    int best = 1 << 30;
    for (const auto& m : testkit::brute_perfect_matchings(theta)) best = std::min(best, static_cast<int>(m.size()));
    CHECK(best == 1);

    std::mt19937_64 rng(2024);
    int instances = 0;
    for (const auto& entry : testkit::corpus()) {
      if (instances >= 50) break;
      const Multigraph& g = entry.graph;
      if (g.vertex_count() > 10 || !bridges(g).empty()) continue;
      EdgeSet e0;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (rng() % 3 == 0) e0.push_back(e);
      }
      if (e0.size() < 2) continue;
      ++instances;
      const auto att = subdivide_attach(g, e0, Gadget::W);
      const int t = testkit::brute_t(att.graph);
      int min_overlap = 1 << 30;
      for (const auto& m : testkit::brute_perfect_matchings(g)) {
        int overlap = 0;
        for (EdgeId e : m) overlap += std::binary_search(e0.begin(), e0.end(), e);
        min_overlap = std::min(min_overlap, overlap);
      }
      CAPTURE(entry.name);
      CHECK(t <= min_overlap);
      CHECK(t <= static_cast<int>(e0.size()) - 2);
    }
    CHECK(instances == 50);
  }

  TEST_CASE("analysis rows and exit codes") {
    AnalyzeOptions opt;
    opt.checks = {"t", "gallai", "bounds"};
    const auto p10 = analyze(generate("P10"), opt);
    CHECK(p10.exit_code == kExitPass);
    REQUIRE(find_row(p10, "gallai") != nullptr);
    CHECK(find_row(p10, "gallai")->outcome == Outcome::pass);
    CHECK(p10.values["t"] == 0);

    opt.checks = {"T", "scc"};
    const auto p10T = analyze(generate("P10"), opt);
    CHECK(p10T.values["T"] == 1);
    CHECK(p10T.values["scc"] == 21);
    CHECK(find_row(p10T, "steffen")->outcome == Outcome::pass);
    // T(P10) = 1 <= |V|/10 and scc = 21 <= 7|E|/5, so nothing fails.
    CHECK(p10T.exit_code == kExitPass);

    opt.checks = {"T"};
    try {
      analyze(generate("S10"), opt);
      FAIL("bridged graph accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::has_bridge);
    }
    opt.checks = {"cdc", "hcolor", "bounds"};
    const auto s10 = analyze(generate("S10"), opt);
    CHECK(find_row(s10, "5cdc.exists")->outcome == Outcome::skipped);
    CHECK(s10.exit_code == kExitPass);

    opt.checks = {"nope"};
    CHECK_THROWS_AS(analyze(generate("K4"), opt), Error);
    CHECK_THROWS_AS(analyze(Multigraph(4, {{0, 1}, {2, 3}}), AnalyzeOptions{}), Error);

    std::vector<ReportRow> rows(3);
    rows[0].outcome = Outcome::pass;
    rows[1].outcome = Outcome::inconclusive;
    rows[2].outcome = Outcome::pass;
    CHECK(exit_code_for(rows) == kExitInconclusive);
    rows[2].kind = RowKind::conjecture;
    rows[2].outcome = Outcome::fail;
    CHECK(exit_code_for(rows) == kExitConjectureViolation);
    rows[0].outcome = Outcome::fail;
    CHECK(exit_code_for(rows) == kExitTheoremViolation);
  }

  TEST_CASE("certificates replay from JSON") {
    AnalyzeOptions opt;
    opt.checks = {"t", "T", "scc", "cdc", "hcolor"};
    for (const char* name : {"K4", "P10", "prism"}) {
      CAPTURE(name);
      const Multigraph g = generate(name);
      const auto r = analyze(g, opt);
      CHECK(r.exit_code != kExitTheoremViolation);
      const auto j = report_to_json(r);
      CHECK(nlohmann::json::parse(j.dump()) == j);
      CHECK(report_json_to_text(j) == report_to_text(r));
      for (const auto& [key, cert] : r.certificates.items()) {
        CAPTURE(key);
        CHECK(verify_certificate(g, cert).valid);
      }
    }
    const Multigraph k4 = generate("K4");
    const auto tc = param_certificate(t_exact(k4));
    CHECK(param_certificate(param_certificate_from_json(tc)) == tc);
    auto wrong = edge_set_certificate("perfect_matching", k4, {0, 1});
    CHECK_FALSE(verify_certificate(k4, wrong).valid);
    CHECK_FALSE(verify_certificate(generate("P10"), edge_set_certificate("perfect_matching", k4, {0, 5})).valid);
    CHECK_FALSE(verify_certificate(k4, nlohmann::json{{"type", "bogus"}}).valid);
    CHECK_FALSE(verify_certificate(k4, nlohmann::json::array()).valid);
  }
}
