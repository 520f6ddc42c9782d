#include "tricub/certificates.hpp"

#include "tricub/covers.hpp"
#include "tricub/generators.hpp"
#include "tricub/matching.hpp"

namespace tricub {

nlohmann::json edge_set_certificate(const std::string& type, const Multigraph& g, const EdgeSet& edges) {
  return {{"type", type}, {"host_hash", graph_hash(g)}, {"edges", edges}};
}

nlohmann::json members_certificate(const std::string& type, const Multigraph& g,
                                   const std::vector<EdgeSet>& members) {
  return {{"type", type}, {"host_hash", graph_hash(g)}, {"members", members}};
}

nlohmann::json hcoloring_certificate(const Multigraph& g, const Multigraph& h, const EdgeMap& phi,
                                     const std::string& target_name) {
  nlohmann::json map = nlohmann::json::object();
  for (size_t e = 0; e < phi.size(); ++e) map[std::to_string(e)] = phi[e];
  nlohmann::json j = {{"type", "hcoloring"},
                      {"source_hash", graph_hash(g)},
                      {"target_hash", graph_hash(h)},
                      {"phi", map}};
  if (!target_name.empty()) j["target"] = target_name;
  return j;
}

nlohmann::json param_certificate(const ParamCertificate& c) {
  return {{"type", "param"},       {"kind", to_string(c.kind)},   {"value", c.value},
          {"exact", c.exact},      {"lower_bound", c.lower_bound}, {"witness_u", c.witness_u},
          {"witness", c.witness},  {"host_hash", c.host_hash}};
}

ParamCertificate param_certificate_from_json(const nlohmann::json& j) {
  ParamCertificate c;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "t") {
    c.kind = ParamKind::t;
  } else if (kind == "T") {
    c.kind = ParamKind::T;
  } else {
    throw Error(ErrorCode::parse, "unknown parameter kind '" + kind + "'");
  }
  c.value = j.at("value").get<int>();
  c.exact = j.at("exact").get<bool>();
  c.lower_bound = j.value("lower_bound", 0);
  c.witness_u = j.at("witness_u").get<VertexSet>();
  c.witness = j.at("witness").get<std::vector<EdgeSet>>();
  c.host_hash = j.value("host_hash", std::string());
  return c;
}

namespace {

CertificateCheck fail(std::string msg) { return {false, std::move(msg)}; }

CertificateCheck from_cover(const CoverReport& r) { return {r.valid, r.valid ? std::string() : r.message}; }

CertificateCheck verify_impl(const Multigraph& g, const nlohmann::json& cert, const Multigraph* target) {
  const std::string type = cert.at("type").get<std::string>();
  if (type == "hcoloring") {
    if (cert.at("source_hash").get<std::string>() != graph_hash(g)) return fail("source hash mismatch");
    Multigraph named;
    if (target == nullptr) {
      if (!cert.contains("target")) return fail("certificate names no target graph; supply one");
      named = generate(cert.at("target").get<std::string>());
      target = &named;
    }
    if (cert.at("target_hash").get<std::string>() != graph_hash(*target)) return fail("target hash mismatch");
    EdgeMap phi(static_cast<size_t>(g.edge_count()), -1);
    for (const auto& [key, value] : cert.at("phi").items()) {
      const int e = std::stoi(key);
      if (e < 0 || e >= g.edge_count()) return fail("map key " + key + " out of range");
      phi[static_cast<size_t>(e)] = value.get<int>();
    }
    const auto rep = verify_hcoloring(g, *target, phi);
    return {rep.valid, rep.message};
  }
  if (cert.at("host_hash").get<std::string>() != graph_hash(g)) return fail("host hash mismatch");
  if (type == "param") return verify_param_certificate(g, param_certificate_from_json(cert));
  if (type == "perfect_matching" || type == "parity_subgraph" || type == "even_subgraph") {
    const auto edges = cert.at("edges").get<EdgeSet>();
    bool ok = false;
    if (type == "perfect_matching") ok = is_perfect_matching(g, edges);
    if (type == "parity_subgraph") ok = is_parity_subgraph(g, edges);
    if (type == "even_subgraph") ok = is_even_subgraph(g, edges);
    return ok ? CertificateCheck{true, {}} : fail("edge set is not a valid " + type);
  }
  const auto members = cert.at("members").get<std::vector<EdgeSet>>();
  if (type == "cycle_cover") return from_cover(verify_cycle_cover(g, members));
  if (type == "five_cdc") return from_cover(verify_five_cdc(g, members));
  if (type == "four_pm_cover") return from_cover(verify_four_cover(g, members));
  if (type == "parity_family") return from_cover(verify_parity_family(g, members));
  return fail("unknown certificate type '" + type + "'");
}

}  // namespace

CertificateCheck verify_certificate(const Multigraph& g, const nlohmann::json& cert, const Multigraph* target) {
  try {
    return verify_impl(g, cert, target);
  } catch (const nlohmann::json::exception& e) {
    return fail(std::string("malformed certificate: ") + e.what());
  } catch (const std::invalid_argument&) {
    return fail("malformed certificate: bad map key");
  } catch (const Error& e) {
    return fail(e.what());
  }
}

}  // namespace tricub
