#pragma once

// JSON forms of certificates and their replay.
//
//   edge-set types   {"type", "host_hash", "edges": [...]}
//                    type: perfect_matching | parity_subgraph | even_subgraph
//   member types     {"type", "host_hash", "members": [[...], ...]}
//                    type: cycle_cover | five_cdc | four_pm_cover | parity_family
//   H-coloring       {"type": "hcoloring", "source_hash", "target_hash",
//                     "target": "P10" (optional), "phi": {"<edge>": <edge>, ...}}
//   parameter        {"type": "param", "kind": "t"|"T", "value", "exact",
//                     "lower_bound", "witness_u", "witness", "host_hash"}

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tricub/hcoloring.hpp"
#include "tricub/params.hpp"

namespace tricub {

nlohmann::json edge_set_certificate(const std::string& type, const Multigraph& g, const EdgeSet& edges);
nlohmann::json members_certificate(const std::string& type, const Multigraph& g,
                                   const std::vector<EdgeSet>& members);
/// `target_name` is recorded when the target is a catalog graph, so the
/// certificate can be replayed without supplying the target.
nlohmann::json hcoloring_certificate(const Multigraph& g, const Multigraph& h, const EdgeMap& phi,
                                     const std::string& target_name);
nlohmann::json param_certificate(const ParamCertificate& cert);
ParamCertificate param_certificate_from_json(const nlohmann::json& j);

/// Replays any certificate above against its host. For H-colorings the
/// target is `target` when given, otherwise the catalog graph named in the
/// certificate. Malformed documents are reported as invalid, not thrown.
CertificateCheck verify_certificate(const Multigraph& g, const nlohmann::json& cert,
                                    const Multigraph* target = nullptr);

}  // namespace tricub
