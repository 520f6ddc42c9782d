#pragma once

// Perfect matchings, 2-factors, parity subgraphs and even subgraphs.

#include <cstddef>
#include <optional>
#include <vector>

#include "tricub/graph.hpp"
#include "tricub/structure.hpp"

namespace tricub {

bool is_matching(const Multigraph& g, const EdgeSet& edges);
bool is_perfect_matching(const Multigraph& g, const EdgeSet& edges);

/// A perfect matching when one exists. Deterministic: among parallel copies
/// the smallest edge id is used.
std::optional<EdgeSet> find_perfect_matching(const Multigraph& g);

struct MatchingEnumeration {
  /// Each matching is sorted; the list is in lexicographic order.
  std::vector<EdgeSet> matchings;
  /// True when the enumeration finished below the limit.
  bool complete = false;
};

/// All perfect matchings, stopping once `limit` have been collected.
MatchingEnumeration enumerate_perfect_matchings(const Multigraph& g, std::size_t limit);

/// A perfect matching containing neither e1 nor e2 (which may coincide).
std::optional<EdgeSet> matching_avoiding(const Multigraph& g, EdgeId e1, EdgeId e2);

/// A spanning subgraph in which every vertex has degree 2. The input must be
/// cubic, or cubic except for exactly one vertex of degree 2; the latter is
/// handled by hanging a temporary W gadget from that vertex.
/// Throws Error{invalid_argument} for other degree profiles.
std::optional<EdgeSet> two_factor(const Multigraph& g);

/// Complement of an even subgraph; in a cubic host every degree is 1 or 3.
struct ParitySubgraph {
  EdgeSet edges;
  VertexSet v1;
  VertexSet v3;
};

/// Spanning subgraph with every degree even.
struct EvenSubgraph {
  EdgeSet edges;
};

bool is_even_subgraph(const Multigraph& g, const EdgeSet& edges);
bool is_parity_subgraph(const Multigraph& g, const EdgeSet& edges);

/// Validates and fills v1/v3. Throws Error{verification_failed}.
ParitySubgraph make_parity_subgraph(const Multigraph& g, EdgeSet edges);

enum class ParityBackend {
  /// Exhaustive over all edge subsets; refuses beyond 24 edges.
  oracle,
  /// Minimum T-join with T = V(G): metric closure plus minimum-weight
  /// perfect matching.
  matching,
};

const char* to_string(ParityBackend b);

/// Upper limit on |E| for the oracle backend (2^24 subsets).
inline constexpr int kOracleEdgeCap = 24;

/// Minimum-size parity subgraph; ties go to the lexicographically smallest
/// edge-id set, so both backends return the same set.
/// Requires a connected cubic graph.
ParitySubgraph min_parity_subgraph(const Multigraph& g,
                                   ParityBackend backend = ParityBackend::matching);

/// Complement of the minimum parity subgraph; its size is l(G).
EvenSubgraph max_even_subgraph(const Multigraph& g,
                               ParityBackend backend = ParityBackend::matching);

/// Minimum size of a T-join in g restricted to the edges not in `removed`.
/// Absent when some component meets T an odd number of times.
std::optional<int> min_t_join_size(const Multigraph& g, const std::vector<bool>& t,
                                   const std::vector<bool>& removed);

/// Maps a parity subgraph J of g into G_U, where `expansion` was built from g
/// with U containing V3(J). Each degree-1 vertex u in U gains the triangle
/// edge opposite the corner carrying J's edge. The result is a perfect
/// matching of G_U. Throws Error{invalid_argument} if V3(J) is not inside U.
EdgeSet lift_parity_subgraph(const Multigraph& g, const ExpansionResult& expansion,
                             const ParitySubgraph& j);

struct TransferResult {
  /// Roots w_e of the matched subdivided edges.
  VertexSet u;
  /// H_U.
  ExpansionResult expansion;
  /// A perfect matching of H_U.
  EdgeSet matching;
};

/// Builds a perfect matching of H_U from a perfect matching m of g, where H
/// came from subdivide_attach(g, E0, gadget). U is the set of roots of the
/// edges in E0 that m uses, so |U| = |E0 ∩ m| bounds t(H).
/// Throws Error{invalid_argument} when m is not a perfect matching of g.
TransferResult transfer_matching(const Multigraph& g, const AttachResult& attach,
                                 const EdgeSet& m);

}  // namespace tricub
