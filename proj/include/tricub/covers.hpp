#pragma once

// Cycle covers: even-subgraph enumeration, four-perfect-matching covers,
// shortest cycle covers, 5-CDCs and the transforms between them.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tricub/graph.hpp"
#include "tricub/matching.hpp"
#include "tricub/structure.hpp"

namespace tricub {

/// Search kernels represent edge sets as 64-bit masks.
inline constexpr int kMaxSearchEdges = 64;
/// Cycle-space dimension limit for enumerate_even_subgraphs.
inline constexpr int kMaxCycleSpaceDim = 24;

enum class SearchStatus { found, none, inconclusive };
const char* to_string(SearchStatus s);

/// |E| - |V| + number of components.
int cycle_space_dimension(const Multigraph& g);

/// Every even subgraph (2^dim of them, including the empty one), sorted by
/// size and then lexicographically. Throws Error{cap_exceeded} beyond
/// kMaxCycleSpaceDim.
std::vector<EdgeSet> enumerate_even_subgraphs(const Multigraph& g);

struct CycleCover {
  std::vector<EdgeSet> members;

  int length() const;
  /// Multiplicity of every edge of the host.
  std::vector<int> depths(const Multigraph& g) const;
  int depth(const Multigraph& g) const;
};

// ---------------------------------------------------------------------------
// Four perfect matchings

struct FourCoverOptions {
  /// Perfect matchings enumerated before the search gives up (inconclusive).
  std::size_t matching_limit = 200000;
  /// Require four pairwise distinct matchings.
  bool distinct = false;
};

struct FourCoverResult {
  SearchStatus status = SearchStatus::inconclusive;
  /// Four perfect matchings whose union is E(G) when status == found.
  std::vector<EdgeSet> matchings;
  std::size_t matching_count = 0;
  bool enumeration_complete = false;
};

/// Decides whether four perfect matchings cover E(g). Requires a cubic graph.
FourCoverResult four_pm_cover(const Multigraph& g, const FourCoverOptions& options = {});

// ---------------------------------------------------------------------------
// Shortest cycle cover

struct SccOptions {
  /// Largest number of members tried; 0 means no limit.
  int max_members = 4;
  /// Largest allowed edge depth; 0 means no limit.
  int max_depth = 0;
  std::uint64_t node_budget = 20000000;
};

struct SccResult {
  SearchStatus status = SearchStatus::inconclusive;
  /// Length of the best cover found (meaningful unless status == none).
  int length = 0;
  CycleCover cover;
  /// The length is scc(G): either it meets ceil(4|E|/3), or a search with
  /// no member limit and no depth limit ran to completion.
  bool exact = false;
  /// The search finished within its budget (optimal under the given limits).
  bool exhausted = false;
  std::uint64_t nodes = 0;
};

/// ceil(4|E|/3).
int scc_lower_bound(const Multigraph& g);

/// Branch and bound over even subgraphs. Requires a bridgeless cubic graph
/// with at most kMaxSearchEdges edges.
SccResult scc_exact(const Multigraph& g, const SccOptions& options = {});

// ---------------------------------------------------------------------------
// 5-CDC

struct FiveCdcOptions {
  bool maximize_c0 = true;
  std::uint64_t node_budget = 20000000;
  /// When set, only 5-CDCs having this even subgraph as C0 are searched.
  std::optional<EdgeSet> required_member;
};

struct FiveCdcResult {
  SearchStatus status = SearchStatus::inconclusive;
  /// Five even subgraphs (possibly empty), largest first.
  std::vector<EdgeSet> members;
  /// Members that are empty; reported so strict counts are recoverable.
  int empty_members = 0;
  std::uint64_t nodes = 0;
};

/// Searches for five even subgraphs covering every edge exactly twice. With
/// maximize_c0 the first member is as large as any 5-CDC allows.
FiveCdcResult five_cdc(const Multigraph& g, const FiveCdcOptions& options = {});

/// Largest size of an even subgraph, by cycle-space enumeration.
int max_even_subgraph_size(const Multigraph& g);

/// Index of the largest member, ties broken by the lexicographically
/// smallest edge set.
std::size_t largest_member(const std::vector<EdgeSet>& members);

struct ParityFamily {
  std::array<ParitySubgraph, 4> members;
  /// How many members contain each edge.
  std::vector<int> multiplicity;
  int max_edge_multiplicity = 0;
};

/// J_i = complement of (C0 Δ C_i), i = 1..4, with C0 the largest member.
/// Throws Error{verification_failed} when the input is not a 5-CDC or the
/// family misses its invariants.
ParityFamily cdc_to_parity_family(const Multigraph& g, const std::vector<EdgeSet>& cdc);

struct CdcExpansion {
  ParityFamily family;
  /// Union of the degree-3 vertex sets of the family.
  VertexSet u;
  ExpansionResult expansion;
  /// The four members lifted into G_U: perfect matchings covering E(G_U).
  std::vector<EdgeSet> matchings;
};

/// Builds U from a 5-CDC and the constructive four-matching cover of G_U.
/// Throws Error{verification_failed} if any lifted object fails its check.
CdcExpansion cdc_to_expansion_set(const Multigraph& g, const std::vector<EdgeSet>& cdc);

struct Depth2Expansion {
  VertexSet u;
  ExpansionResult expansion;
  CycleCover lifted;
  /// lifted.length() == 4/3 |E(G_U)|.
  bool length_matches_bound = false;
  /// The edges covered twice by `lifted` form a perfect matching of G_U.
  bool double_cover_is_perfect_matching = false;
};

/// U = vertices whose three edges all have depth 2; each member through
/// such a vertex is closed by the triangle edge between the two corners it
/// uses. Throws Error{invalid_argument} for depth above 2 or an uncovered edge.
Depth2Expansion depth2_scc_to_expansion(const Multigraph& g, const CycleCover& cover);

// ---------------------------------------------------------------------------
// Verification

struct CoverReport {
  bool valid = false;
  std::string message;
  int length = 0;
  int depth = 0;
};

CoverReport verify_cycle_cover(const Multigraph& g, const std::vector<EdgeSet>& members);
CoverReport verify_five_cdc(const Multigraph& g, const std::vector<EdgeSet>& members);
CoverReport verify_four_cover(const Multigraph& g, const std::vector<EdgeSet>& matchings);
/// Four parity subgraphs with every edge covered at least once and at most
/// twice.
CoverReport verify_parity_family(const Multigraph& g, const std::vector<EdgeSet>& members);

}  // namespace tricub
