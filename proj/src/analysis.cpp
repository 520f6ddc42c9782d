#include "tricub/analysis.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "tricub/certificates.hpp"
#include "tricub/covers.hpp"
#include "tricub/generators.hpp"
#include "tricub/hcoloring.hpp"
#include "tricub/matching.hpp"
#include "tricub/params.hpp"
#include "tricub/structure.hpp"

namespace tricub {

const char* to_string(RowKind k) { return k == RowKind::theorem ? "THEOREM" : "CONJECTURE"; }

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::inconclusive: return "inconclusive";
    case Outcome::skipped: return "skipped";
  }
  return "?";
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> checks = {"t", "T", "scc", "cdc", "hcolor", "gallai", "bounds"};
  return checks;
}

int exit_code_for(const std::vector<ReportRow>& rows) {
  auto any = [&rows](RowKind k, Outcome o) {
    return std::any_of(rows.begin(), rows.end(), [k, o](const ReportRow& r) { return r.kind == k && r.outcome == o; });
  };
  if (any(RowKind::theorem, Outcome::fail)) return kExitTheoremViolation;
  if (any(RowKind::conjecture, Outcome::fail)) return kExitConjectureViolation;
  if (std::any_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.outcome == Outcome::inconclusive; })) {
    return kExitInconclusive;
  }
  return kExitPass;
}

namespace {

Outcome pass_if(bool ok) { return ok ? Outcome::pass : Outcome::fail; }

std::string frac(int num, int den) {
  if (num % den == 0) return std::to_string(num / den);
  return std::to_string(num) + "/" + std::to_string(den);
}

class Analyzer {
 public:
  Analyzer(const Multigraph& g, const AnalyzeOptions& o) : g_(g), opt_(o) {
    r_.graph_hash = graph_hash(g);
    r_.vertices = g.vertex_count();
    r_.edges = g.edge_count();
    r_.simple = is_simple(g);
    r_.connected = is_connected(g);
    r_.bridgeless = r_.connected && bridges(g).empty();
  }

  AnalysisReport run() {
    for (const std::string& c : opt_.checks) {
      if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end()) {
        throw Error(ErrorCode::unknown_name, "unknown check '" + c + "'");
      }
    }
    auto wants = [this](const char* c) {
      return std::find(opt_.checks.begin(), opt_.checks.end(), c) != opt_.checks.end();
    };
    if ((wants("T") || wants("scc")) && !r_.bridgeless) {
      throw Error(ErrorCode::has_bridge, "input has bridges; T and scc are defined for bridgeless graphs only");
    }
    if (wants("t")) check_t();
    if (wants("gallai")) check_gallai_rows();
    if (wants("T")) check_T();
    if (wants("scc")) check_scc();
    if (wants("cdc")) check_cdc();
    if (wants("hcolor")) check_hcolor();
    if (wants("bounds")) check_bounds();
    r_.exit_code = exit_code_for(r_.rows);
    return std::move(r_);
  }

 private:
  const Multigraph& g_;
  AnalyzeOptions opt_;
  AnalysisReport r_;

  std::optional<ParamCertificate> t_;
  std::optional<ParamCertificate> T_;
  std::optional<SccResult> scc_;
  std::optional<SccResult> scc2_;
  std::optional<FourCoverResult> four_;
  std::optional<FiveCdcResult> cdc_;
  std::optional<bool> three_ec_;

  int n() const { return g_.vertex_count(); }
  int m() const { return g_.edge_count(); }

  bool has_row(const std::string& id) const {
    return std::any_of(r_.rows.begin(), r_.rows.end(), [&id](const ReportRow& r) { return r.id == id; });
  }

  // Adds a row unless one with the same id exists; capacity errors turn
  // into inconclusive rows.
  void row(const std::string& id, RowKind kind, const std::string& statement,
           const std::function<void(ReportRow&)>& fill) {
    if (has_row(id)) return;
    ReportRow row{id, kind, statement, "", "", Outcome::skipped, ""};
    try {
      fill(row);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::cap_exceeded) throw;
      row.outcome = Outcome::inconclusive;
      row.note = e.what();
    }
    r_.rows.push_back(std::move(row));
  }

  void skip(const std::string& id, RowKind kind, const std::string& statement, const std::string& why) {
    row(id, kind, statement, [&why](ReportRow& r) {
      r.outcome = Outcome::skipped;
      r.note = why;
    });
  }

  const ParamCertificate& t_cert() {
    if (!t_) {
      t_ = t_exact(g_);
      r_.values["t"] = t_->value;
      r_.certificates["t"] = param_certificate(*t_);
    }
    return *t_;
  }

  const ParamCertificate& T_cert() {
    if (!T_) {
      TOptions o;
      o.budget = opt_.budget;
      o.timeout_seconds = opt_.timeout_seconds;
      o.threads = opt_.threads;
      T_ = T_exact(g_, o);
      r_.values["T"] = T_->value;
      r_.values["T_exact"] = T_->exact;
      r_.values["T_lower_bound"] = T_->lower_bound;
      if (T_->value >= 0) r_.certificates["T"] = param_certificate(*T_);
    }
    return *T_;
  }

  const SccResult& scc() {
    if (!scc_) {
      SccOptions o;
      o.max_members = 0;
      o.node_budget = opt_.node_budget;
      scc_ = scc_exact(g_, o);
      if (scc_->status == SearchStatus::found) {
        r_.values["scc"] = scc_->length;
        r_.values["scc_exact"] = scc_->exact;
        r_.certificates["scc"] = members_certificate("cycle_cover", g_, scc_->cover.members);
      }
    }
    return *scc_;
  }

  const SccResult& scc_depth2() {
    if (!scc2_) {
      SccOptions o;
      o.max_members = 0;
      o.max_depth = 2;
      o.node_budget = opt_.node_budget;
      scc2_ = scc_exact(g_, o);
    }
    return *scc2_;
  }

  const FourCoverResult& four() {
    if (!four_) {
      four_ = four_pm_cover(g_);
      r_.values["four_pm_cover"] = to_string(four_->status);
      if (four_->status == SearchStatus::found) {
        r_.certificates["four_pm_cover"] = members_certificate("four_pm_cover", g_, four_->matchings);
      }
    }
    return *four_;
  }

  const FiveCdcResult& cdc() {
    if (!cdc_) {
      FiveCdcOptions o;
      o.node_budget = opt_.node_budget;
      cdc_ = five_cdc(g_, o);
      r_.values["five_cdc"] = to_string(cdc_->status);
      if (cdc_->status == SearchStatus::found) {
        r_.values["c0"] = cdc_->members[0].size();
        r_.certificates["five_cdc"] = members_certificate("five_cdc", g_, cdc_->members);
      }
    }
    return *cdc_;
  }

  bool three_edge_connected() {
    if (!three_ec_) three_ec_ = is_three_edge_connected(g_);
    return *three_ec_;
  }

  // -------------------------------------------------------------------------

  void check_t() {
    row("t.certificate", RowKind::theorem, "t(G) witness: G_U has the recorded perfect matching", [this](ReportRow& r) {
      const auto& c = t_cert();
      const auto check = verify_param_certificate(g_, c);
      r.lhs = "t=" + std::to_string(c.value);
      r.rhs = "|U|=" + std::to_string(c.witness_u.size());
      r.outcome = pass_if(check.valid);
      r.note = check.message;
    });
  }

  void check_gallai_rows() {
    const GallaiReport rep = check_gallai(g_);
    r_.values["ell"] = rep.ell;
    if (!r_.values.contains("t")) r_.values["t"] = rep.t;
    row("gallai", RowKind::theorem, "|V| = t + l", [&rep](ReportRow& r) {
      r.lhs = std::to_string(rep.vertices);
      r.rhs = std::to_string(rep.t) + "+" + std::to_string(rep.ell);
      r.outcome = pass_if(rep.holds);
      r.note = rep.ell_independent ? "l by cycle-space enumeration" : "l as |E| - min|J|";
    });
    row("parity.identity", RowKind::theorem, "2|E(J)| = |V| + 2|V3(J)|", [&rep](ReportRow& r) {
      r.lhs = "2|E(J)|";
      r.rhs = std::to_string(rep.vertices) + "+2*" + std::to_string(rep.t);
      r.outcome = pass_if(rep.identity_holds);
    });
  }

  void T_conjecture_row() {
    row("T<=|V|/10", RowKind::conjecture, "T(G) <= |V|/10", [this](ReportRow& r) {
      const auto& c = T_cert();
      r.lhs = c.value >= 0 ? "T=" + std::to_string(c.value) : "T>=" + std::to_string(c.lower_bound);
      r.rhs = frac(n(), 10);
      if (c.value >= 0 && 10 * c.value <= n()) {
        r.outcome = Outcome::pass;
      } else if (10 * c.lower_bound > n()) {
        r.outcome = Outcome::fail;
      } else {
        r.outcome = Outcome::inconclusive;
      }
      if (!c.exact) r.note = "T search incomplete; lower bound " + std::to_string(c.lower_bound);
    });
  }

  void check_T() {
    row("T.certificate", RowKind::theorem, "T(G) witness: G_U has the recorded four-matching cover",
        [this](ReportRow& r) {
          const auto& c = T_cert();
          r.lhs = c.value >= 0 ? "T=" + std::to_string(c.value) : "T unknown";
          r.rhs = "lower bound " + std::to_string(c.lower_bound);
          if (c.value < 0) {
            r.outcome = Outcome::inconclusive;
            r.note = "no witness within budget " + std::to_string(opt_.budget);
            return;
          }
          const auto check = verify_param_certificate(g_, c);
          r.outcome = !check.valid ? Outcome::fail : (c.exact ? Outcome::pass : Outcome::inconclusive);
          r.note = check.valid ? (c.exact ? "" : "value is an upper bound") : check.message;
        });
    T_conjecture_row();
  }

  void check_scc() {
    row("scc.cover", RowKind::theorem, "shortest cover verifies and has length >= 4/3|E|", [this](ReportRow& r) {
      const auto& s = scc();
      r.rhs = frac(4 * m(), 3);
      if (s.status != SearchStatus::found) {
        r.outcome = Outcome::inconclusive;
        r.note = "no cover within the node budget";
        return;
      }
      r.lhs = "scc=" + std::to_string(s.length);
      const auto rep = verify_cycle_cover(g_, s.cover.members);
      r.outcome = pass_if(rep.valid && rep.length == s.length && 3 * s.length >= 4 * m());
      r.note = rep.valid ? (s.exact ? "exact" : "upper bound") : rep.message;
    });
    row("steffen", RowKind::theorem, "scc = 4/3|E| iff four perfect matchings cover E", [this](ReportRow& r) {
      const auto& s = scc();
      const auto& f = four();
      r.lhs = s.status == SearchStatus::found ? "scc=" + std::to_string(s.length) : "scc unknown";
      r.rhs = std::string("four_pm_cover=") + to_string(f.status);
      if (s.status != SearchStatus::found || f.status == SearchStatus::inconclusive) {
        r.outcome = Outcome::inconclusive;
        return;
      }
      const bool tight = 3 * s.length == 4 * m();
      const bool coverable = f.status == SearchStatus::found;
      if (tight || s.exact) {
        r.outcome = pass_if(tight == coverable);
      } else {
        // Not tight and not proven optimal: only a cover contradicts nothing.
        r.outcome = coverable ? Outcome::inconclusive : Outcome::pass;
        if (coverable) r.note = "scc search incomplete";
      }
    });
    row("scc<=7|E|/5", RowKind::conjecture, "scc(G) <= 7/5|E|", [this](ReportRow& r) {
      const auto& s = scc();
      r.rhs = frac(7 * m(), 5);
      if (s.status != SearchStatus::found) {
        r.outcome = Outcome::inconclusive;
        return;
      }
      r.lhs = "scc=" + std::to_string(s.length);
      if (5 * s.length <= 7 * m()) {
        r.outcome = Outcome::pass;
      } else {
        r.outcome = s.exact ? Outcome::fail : Outcome::inconclusive;
      }
    });
  }

  void check_cdc() {
    const std::string bridged = "graph has a bridge";
    if (!r_.bridgeless) {
      skip("5cdc.exists", RowKind::conjecture, "G has a 5-CDC", bridged);
      skip("5cdc.c0>=3|E|/5", RowKind::conjecture, "some 5-CDC has |C0| >= 3/5|E|", bridged);
      skip("cdc.pipeline", RowKind::theorem, "5-CDC gives parity family and four-cover of G_U", bridged);
      return;
    }
    row("5cdc.exists", RowKind::conjecture, "G has a 5-CDC", [this](ReportRow& r) {
      const auto& c = cdc();
      r.lhs = to_string(c.status);
      r.outcome = c.status == SearchStatus::found ? Outcome::pass
                  : c.status == SearchStatus::none ? Outcome::fail
                                                   : Outcome::inconclusive;
      if (c.status == SearchStatus::found && c.empty_members > 0) {
        r.note = std::to_string(c.empty_members) + " empty member(s)";
      }
    });
    row("5cdc.c0>=3|E|/5", RowKind::conjecture, "some 5-CDC has |C0| >= 3/5|E|", [this](ReportRow& r) {
      const auto& c = cdc();
      r.rhs = frac(3 * m(), 5);
      if (c.status != SearchStatus::found) {
        r.outcome = c.status == SearchStatus::none ? Outcome::fail : Outcome::inconclusive;
        return;
      }
      const int c0 = static_cast<int>(c.members[0].size());
      r.lhs = "|C0|=" + std::to_string(c0);
      r.outcome = pass_if(5 * c0 >= 3 * m());
    });
    row("cdc.pipeline", RowKind::theorem,
        "5-CDC gives parity family (multiplicity <= 2) and |U| <= |V|-|C0| with G_U four-coverable",
        [this](ReportRow& r) {
          const auto& c = cdc();
          if (c.status != SearchStatus::found) {
            r.outcome = Outcome::skipped;
            r.note = "no 5-CDC";
            return;
          }
          const auto exp = cdc_to_expansion_set(g_, c.members);
          const int c0 = static_cast<int>(c.members[0].size());
          const int u = static_cast<int>(exp.u.size());
          r_.values["cdc_u"] = u;
          r_.certificates["parity_family"] = members_certificate(
              "parity_family", g_,
              {exp.family.members[0].edges, exp.family.members[1].edges, exp.family.members[2].edges,
               exp.family.members[3].edges});
          // Recorded as a (non-exact) T witness so it replays against G itself.
          ParamCertificate bound;
          bound.kind = ParamKind::T;
          bound.value = u;
          bound.witness_u = exp.u;
          bound.witness = exp.matchings;
          bound.host_hash = r_.graph_hash;
          r_.certificates["cdc_expansion_cover"] = param_certificate(bound);
          r.lhs = "|U|=" + std::to_string(u);
          r.rhs = "|V|-|C0|=" + std::to_string(n() - c0);
          const bool ok = exp.family.max_edge_multiplicity <= 2 && u <= n() - c0 && 5 * u <= 2 * n();
          r.outcome = pass_if(ok);
        });
  }

  void check_hcolor() {
    const std::string bridged = "graph has a bridge";
    if (!r_.bridgeless) {
      skip("petersen.coloring", RowKind::conjecture, "G has a Petersen coloring", bridged);
      skip("petersen.cdc", RowKind::theorem, "Petersen coloring pulls back to a 5-CDC with |C0| >= 3/5|E|", bridged);
      return;
    }
    const Multigraph p10 = generate("P10");
    const auto search = find_hcoloring(g_, p10, opt_.node_budget);
    r_.values["petersen_coloring"] = to_string(search.status);
    row("petersen.coloring", RowKind::conjecture, "G has a Petersen coloring", [&search](ReportRow& r) {
      r.lhs = to_string(search.status);
      r.outcome = search.status == SearchStatus::found  ? Outcome::pass
                  : search.status == SearchStatus::none ? Outcome::fail
                                                        : Outcome::inconclusive;
    });
    row("petersen.cdc", RowKind::theorem, "Petersen coloring pulls back to a 5-CDC with |C0| >= 3/5|E|",
        [&](ReportRow& r) {
          if (search.status != SearchStatus::found) {
            r.outcome = Outcome::skipped;
            r.note = "no Petersen coloring";
            return;
          }
          r_.certificates["hcoloring"] = hcoloring_certificate(g_, p10, search.phi, "P10");
          const auto out = petersen_coloring_to_cdc(g_, search.phi);
          r_.certificates["petersen_cdc"] = members_certificate("five_cdc", g_, out.members);
          const int c0 = static_cast<int>(out.members[0].size());
          r.lhs = "|C0|=" + std::to_string(c0);
          r.rhs = frac(3 * m(), 5);
          r.outcome = pass_if(verify_five_cdc(g_, out.members).valid && 5 * c0 >= 3 * m());
          r.note = "z=" + std::to_string(out.z);
        });
  }

  void check_bounds() {
    row("t<|V|/4", RowKind::theorem, "t(G) < |V|/4", [this](ReportRow& r) {
      const int t = t_cert().value;
      r.lhs = "t=" + std::to_string(t);
      r.rhs = frac(n(), 4);
      r.outcome = pass_if(4 * t < n());
    });
    if (r_.simple) {
      row("t<|V|/6", RowKind::theorem, "t(G) < |V|/6 for simple G", [this](ReportRow& r) {
        const int t = t_cert().value;
        r.lhs = "t=" + std::to_string(t);
        r.rhs = frac(n(), 6);
        r.outcome = pass_if(6 * t < n());
      });
    } else {
      skip("t<|V|/6", RowKind::theorem, "t(G) < |V|/6 for simple G", "graph is not simple");
    }
    const std::string bridged = "graph has a bridge";
    if (!r_.bridgeless) {
      skip("scc<=4|E|/3+T", RowKind::theorem, "scc(G) <= 4/3|E| + T(G)", bridged);
      skip("T<=|V|/10", RowKind::conjecture, "T(G) <= |V|/10", bridged);
      skip("scc=4|E|/3+T", RowKind::conjecture, "scc(G) = 4/3|E| + T(G) for 3-edge-connected G", bridged);
      skip("depth2.shortest", RowKind::conjecture, "3-edge-connected G has a shortest cover of depth 2", bridged);
      skip("claw-free.4-coverable", RowKind::conjecture, "claw-free G is four-coverable", bridged);
      return;
    }
    row("scc<=4|E|/3+T", RowKind::theorem, "scc(G) <= 4/3|E| + T(G)", [this](ReportRow& r) {
      const auto& s = scc();
      const auto& c = T_cert();
      if (s.status != SearchStatus::found) {
        r.outcome = Outcome::inconclusive;
        return;
      }
      r.lhs = "scc=" + std::to_string(s.length);
      r.rhs = frac(4 * m(), 3) + "+" + (c.value >= 0 ? std::to_string(c.value) : "?");
      if (3 * s.length <= 4 * m() + 3 * c.lower_bound) {
        r.outcome = Outcome::pass;
      } else if (s.exact && c.exact) {
        r.outcome = Outcome::fail;
      } else {
        r.outcome = Outcome::inconclusive;
      }
      if (r.outcome == Outcome::pass && c.exact && s.exact && 3 * s.length == 4 * m() + 3 * c.value) {
        r.note = "equality";
      }
    });
    T_conjecture_row();
    if (three_edge_connected()) {
      row("scc=4|E|/3+T", RowKind::conjecture, "scc(G) = 4/3|E| + T(G) for 3-edge-connected G", [this](ReportRow& r) {
        const auto& s = scc();
        const auto& c = T_cert();
        if (s.status != SearchStatus::found || !s.exact || !c.exact) {
          r.outcome = Outcome::inconclusive;
          return;
        }
        r.lhs = "scc=" + std::to_string(s.length);
        r.rhs = frac(4 * m(), 3) + "+" + std::to_string(c.value);
        r.outcome = pass_if(3 * s.length == 4 * m() + 3 * c.value);
      });
      row("depth2.shortest", RowKind::conjecture, "3-edge-connected G has a shortest cover of depth 2",
          [this](ReportRow& r) {
            const auto& s = scc();
            const auto& d = scc_depth2();
            if (s.status != SearchStatus::found || !s.exact) {
              r.outcome = Outcome::inconclusive;
              return;
            }
            r.rhs = "scc=" + std::to_string(s.length);
            if (d.status == SearchStatus::found && d.length == s.length) {
              r.lhs = "depth-2 length " + std::to_string(d.length);
              r.outcome = Outcome::pass;
            } else if (d.exhausted) {
              r.lhs = d.status == SearchStatus::found ? "depth-2 length " + std::to_string(d.length) : "no depth-2 cover";
              r.outcome = Outcome::fail;
            } else {
              r.outcome = Outcome::inconclusive;
            }
          });
      row("depth2.transform", RowKind::theorem,
          "shortest depth-2 cover lifts to a cover of G_U of length 4/3|E(G_U)|", [this](ReportRow& r) {
            const auto& s = scc();
            const auto& d = scc_depth2();
            if (s.status != SearchStatus::found || d.status != SearchStatus::found || d.length != s.length) {
              r.outcome = Outcome::skipped;
              r.note = "no shortest depth-2 cover";
              return;
            }
            const auto lifted = depth2_scc_to_expansion(g_, d.cover);
            r.lhs = "|U|=" + std::to_string(lifted.u.size());
            r.rhs = "scc-4/3|E|=" + frac(3 * s.length - 4 * m(), 3);
            r.outcome = pass_if(lifted.length_matches_bound && lifted.double_cover_is_perfect_matching &&
                                3 * s.length == 4 * m() + 3 * static_cast<int>(lifted.u.size()));
          });
    } else {
      const std::string why = "graph is not 3-edge-connected";
      skip("scc=4|E|/3+T", RowKind::conjecture, "scc(G) = 4/3|E| + T(G) for 3-edge-connected G", why);
      skip("depth2.shortest", RowKind::conjecture, "3-edge-connected G has a shortest cover of depth 2", why);
    }
    if (is_claw_free(g_)) {
      row("claw-free.4-coverable", RowKind::conjecture, "claw-free G is four-coverable", [this](ReportRow& r) {
        const auto& f = four();
        r.lhs = std::string("four_pm_cover=") + to_string(f.status);
        r.outcome = f.status == SearchStatus::found  ? Outcome::pass
                    : f.status == SearchStatus::none ? Outcome::fail
                                                     : Outcome::inconclusive;
      });
    } else {
      skip("claw-free.4-coverable", RowKind::conjecture, "claw-free G is four-coverable", "graph has a claw");
    }
  }
};

}  // namespace

AnalysisReport analyze(const Multigraph& g, const AnalyzeOptions& options) {
  require_cubic(g, "analyze");
  require_connected(g, "analyze");
  return Analyzer(g, options).run();
}

nlohmann::json report_to_json(const AnalysisReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ReportRow& row : r.rows) {
    rows.push_back({{"id", row.id},
                    {"kind", to_string(row.kind)},
                    {"statement", row.statement},
                    {"lhs", row.lhs},
                    {"rhs", row.rhs},
                    {"outcome", to_string(row.outcome)},
                    {"note", row.note}});
  }
  return {{"graph",
           {{"hash", r.graph_hash},
            {"vertices", r.vertices},
            {"edges", r.edges},
            {"simple", r.simple},
            {"connected", r.connected},
            {"bridgeless", r.bridgeless}}},
          {"values", r.values},
          {"rows", rows},
          {"certificates", r.certificates},
          {"exit_code", r.exit_code}};
}

std::string report_json_to_text(const nlohmann::json& j) {
  std::ostringstream out;
  const auto& gr = j.at("graph");
  out << "graph " << gr.at("hash").get<std::string>() << "  |V|=" << gr.at("vertices").get<int>()
      << " |E|=" << gr.at("edges").get<int>() << "  simple=" << (gr.at("simple").get<bool>() ? "yes" : "no")
      << " bridgeless=" << (gr.at("bridgeless").get<bool>() ? "yes" : "no") << "\n";
  if (!j.at("values").empty()) {
    out << "values";
    for (const auto& [k, v] : j.at("values").items()) out << "  " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
    out << "\n";
  }
  std::vector<std::array<std::string, 6>> table{{"KIND", "ID", "OUTCOME", "LHS", "RHS", "NOTE"}};
  for (const auto& row : j.at("rows")) {
    table.push_back({row.at("kind").get<std::string>(), row.at("id").get<std::string>(),
                     row.at("outcome").get<std::string>(), row.at("lhs").get<std::string>(),
                     row.at("rhs").get<std::string>(), row.at("note").get<std::string>()});
  }
  std::array<size_t, 6> width{};
  for (const auto& t : table) {
    for (size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], t[c].size());
  }
  for (const auto& t : table) {
    std::string line;
    for (size_t c = 0; c < 6; ++c) {
      line += t[c];
      if (c + 1 < 6) line += std::string(width[c] - t[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  out << "exit " << j.at("exit_code").get<int>() << "\n";
  return out.str();
}

std::string report_to_text(const AnalysisReport& r) { return report_json_to_text(report_to_json(r)); }

}  // namespace tricub
