#pragma once

// t(G) and T(G) with certificates, and the identity/inequality checkers.

#include <cstdint>
#include <string>
#include <vector>

#include "tricub/covers.hpp"
#include "tricub/generators.hpp"
#include "tricub/graph.hpp"
#include "tricub/matching.hpp"

namespace tricub {

enum class ParamKind { t, T };
const char* to_string(ParamKind k);

struct ParamCertificate {
  ParamKind kind = ParamKind::t;
  /// |witness_u|; -1 when no witness was found at all.
  int value = -1;
  bool exact = false;
  /// No set smaller than this works (every smaller size was refuted).
  int lower_bound = 0;
  VertexSet witness_u;
  /// One perfect matching of G_U for t; four covering matchings for T.
  std::vector<EdgeSet> witness;
  std::string host_hash;
};

/// t(G) = min |V3(J)| over parity subgraphs J, with witness U = V3(J_min)
/// and the lifted J_min as perfect matching of G_U. Requires a connected
/// cubic graph; always exact.
ParamCertificate t_exact(const Multigraph& g);

struct TOptions {
  /// Largest |U| tried.
  int budget = 3;
  /// Wall-clock limit in seconds; 0 disables it.
  double timeout_seconds = 0.0;
  /// Worker threads for one subset size; 0 picks the hardware concurrency.
  int threads = 0;
  FourCoverOptions cover;
};

/// Smallest U (lexicographically first among those of minimum size) such
/// that G_U has a four-perfect-matching cover. When the search stops early
/// the certificate is not exact: value is an upper bound (from a later size
/// or from a 5-CDC) or -1, and lower_bound says which sizes were refuted.
/// Throws Error{has_bridge} for graphs with bridges.
ParamCertificate T_exact(const Multigraph& g, const TOptions& options = {});

struct CertificateCheck {
  bool valid = false;
  std::string message;
};

/// Replays a certificate from scratch: expands U and checks the witness.
CertificateCheck verify_param_certificate(const Multigraph& g, const ParamCertificate& cert);

struct GallaiReport {
  int vertices = 0;
  int t = 0;
  int ell = 0;
  /// ell was computed by cycle-space enumeration rather than as a
  /// complement of the parity optimum.
  bool ell_independent = false;
  bool holds = false;
  /// 2|E(J)| = |V| + 2|V3(J)| for the minimum parity subgraph used for t.
  bool identity_holds = false;
};

/// t via the matching backend, l via the largest even subgraph.
GallaiReport check_gallai(const Multigraph& g);

struct FamilyRow {
  int n = 0;
  int k1 = 0;
  int vertices = 0;
  int ell = 0;
  int t = 0;
  bool gallai_holds = false;
};

/// Rows for generate_from_tree(caterpillar(n), gadget).
std::vector<FamilyRow> family_table(Gadget gadget, const std::vector<int>& n_values);

/// True when no single edge and no pair of edges disconnects g.
bool is_three_edge_connected(const Multigraph& g);
/// Every vertex lies in a triangle (the claw-free cubic graphs, when simple).
bool is_claw_free(const Multigraph& g);

}  // namespace tricub
