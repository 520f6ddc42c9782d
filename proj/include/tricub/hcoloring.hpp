#pragma once

// H-colorings: edge maps sending every vertex star of G onto a vertex star
// of H. Specialised helpers for Petersen colorings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tricub/covers.hpp"
#include "tricub/graph.hpp"

namespace tricub {

/// phi[e] is the image in H of edge e of G.
using EdgeMap = std::vector<EdgeId>;

struct HColoringReport {
  bool valid = false;
  std::string message;
  /// First vertex of G whose colour triple is not a star of H.
  std::optional<VertexId> bad_vertex;
  /// For a valid colouring: the vertex of H whose star each vertex of G maps onto.
  std::vector<VertexId> vertex_image;
};

HColoringReport verify_hcoloring(const Multigraph& g, const Multigraph& h, const EdgeMap& phi);

struct HColoringSearch {
  /// none means the search space was exhausted without success.
  SearchStatus status = SearchStatus::inconclusive;
  EdgeMap phi;
  std::uint64_t nodes = 0;
};

/// Backtracking over the edges of G in a most-constrained-first order (each
/// next edge has the most already-coloured edges at its endpoints; ties go
/// to the smallest id), colours tried in ascending id. Both graphs must be
/// cubic.
HColoringSearch find_hcoloring(const Multigraph& g, const Multigraph& h, std::uint64_t node_budget = 10000000);

/// phi_gk[e] = phi_hk[phi_gh[e]].
EdgeMap compose(const EdgeMap& phi_gh, const EdgeMap& phi_hk);

/// A 9-circuit of P10 avoiding z together with a 5-CDC of P10 having it as
/// first member.
struct PetersenCdcFixture {
  VertexId z = -1;
  EdgeSet circuit;
  std::vector<EdgeSet> cdc;
};

/// The fixture for vertex z of generate("P10"). Loaded from the JSON file
/// named by TRICUB_FIXTURES (a file, or a directory holding p10_cdc.json)
/// when set, otherwise computed by search; cached either way. Every entry
/// is verified before use.
const PetersenCdcFixture& petersen_cdc_fixture(VertexId z);

/// All ten fixtures as a JSON document (the format read via TRICUB_FIXTURES).
std::string petersen_cdc_fixtures_json();

struct PetersenCdc {
  /// Vertex of P10 with the fewest preimages (smallest index on ties).
  VertexId z = -1;
  int z_preimages = 0;
  /// Pullbacks of the fixture's 5-CDC members; members[0] = f^-1(circuit).
  std::vector<EdgeSet> members;
};

/// Pulls a 5-CDC of P10 back through a Petersen colouring of g.
/// Throws Error{verification_failed} when phi is not a valid colouring or
/// the pullback is not a 5-CDC.
PetersenCdc petersen_coloring_to_cdc(const Multigraph& g, const EdgeMap& phi);

}  // namespace tricub
