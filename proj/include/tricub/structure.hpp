#pragma once

#include <array>
#include <vector>

#include "tricub/generators.hpp"
#include "tricub/graph.hpp"

namespace tricub {

/// Edges whose removal disconnects a connected graph. Parallel edges are never
/// bridges. Throws Error{disconnected}.
EdgeSet bridges(const Multigraph& g);

struct EndBlock {
  int block = -1;
  /// The block's only cut vertex.
  VertexId cut_vertex = -1;
  /// The unique outside neighbour of the cut vertex, or -1 when the cut
  /// vertex has several outside neighbours (never in a cubic graph).
  VertexId root = -1;
};

struct BlockDecomposition {
  /// Partition of the edge set; a bridge is a one-edge block.
  std::vector<EdgeSet> blocks;
  VertexSet cut_vertices;
  /// Blocks containing exactly one cut vertex. Empty iff the graph is
  /// 2-connected (or edgeless).
  std::vector<EndBlock> end_blocks;
};

BlockDecomposition decompose(const Multigraph& g);
VertexSet block_vertices(const Multigraph& g, const EdgeSet& block);
/// The subgraph spanned by an edge subset, relabelled in ascending vertex
/// order; edges keep their relative order.
Multigraph induced_by_edges(const Multigraph& g, const EdgeSet& edges);

/// True iff the smaller side of g - e has exactly `threshold` vertices.
/// threshold is 3 for the W regime and 5 for the W' regime.
/// Throws Error{invalid_argument} when e is not a bridge or threshold is not 3/5.
bool is_trivial_bridge(const Multigraph& g, EdgeId e, int threshold);

struct ExpandedTriangle {
  VertexId source = -1;
  /// corners[k] receives the k-th incident edge of `source` (ascending id).
  /// corners[0] reuses the source vertex index.
  std::array<VertexId, 3> corners{};
  /// Triangle edges in the order c0c1, c1c2, c0c2.
  std::array<EdgeId, 3> edges{};
};

/// Triangle edge not touching corner k.
EdgeId triangle_edge_opposite(const ExpandedTriangle& t, int corner);
/// Triangle edge joining corners a and b.
EdgeId triangle_edge_between(const ExpandedTriangle& t, int a, int b);

struct ExpansionResult {
  Multigraph graph;
  VertexSet expanded;
  /// One entry per expanded vertex, in the order of `expanded`.
  std::vector<ExpandedTriangle> triangles;
  /// Source edge id -> image edge id. Source edges keep their ids, so this
  /// is the identity; it is kept explicit for consumers.
  std::vector<EdgeId> edge_lift;
  /// Image vertex -> source vertex it came from.
  std::vector<VertexId> vertex_origin;

  const ExpandedTriangle* triangle_of(VertexId source) const;
};

/// G_U. New corner vertices are appended two per expanded vertex (ascending
/// source order); triangle edges are appended three per expanded vertex.
ExpansionResult expand_vertices(const Multigraph& g, const VertexSet& u);

/// Merges the triangle's three vertices into the smallest of them; the two
/// other vertices are removed (later indices shift down), the three triangle
/// edges are removed (later ids shift down).
/// Throws Error{invalid_argument} if t is not a triangle on distinct vertices
/// or if contraction would create a loop.
Multigraph contract_triangle(const Multigraph& g, const std::array<EdgeId, 3>& t);

struct Attachment {
  EdgeId source_edge = -1;
  /// w_e, the subdividing vertex and root of the gadget end-block.
  VertexId root = -1;
  /// The source edge keeps its id and now joins u to w_e; this is w_e-v.
  EdgeId split_edge = -1;
  EdgeId bridge = -1;
  /// gadget_vertices[0] is the gadget's former degree-2 vertex.
  std::vector<VertexId> gadget_vertices;
  std::vector<EdgeId> gadget_edges;
};

struct AttachResult {
  Multigraph graph;
  Gadget gadget = Gadget::W;
  EdgeSet subdivided;
  /// One entry per subdivided edge, ascending source edge order.
  std::vector<Attachment> attachments;

  const Attachment* attachment_of(EdgeId source_edge) const;
};

/// Subdivides every edge of e0 with a new root w_e and hangs a gadget from it.
AttachResult subdivide_attach(const Multigraph& g, const EdgeSet& e0, Gadget gadget);

}  // namespace tricub
