#pragma once

// Loop-free undirected multigraphs with positional edge identity.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tricub {

using VertexId = int;
using EdgeId = int;

/// Sorted ascending, duplicate free.
using EdgeSet = std::vector<EdgeId>;
/// Sorted ascending, duplicate free.
using VertexSet = std::vector<VertexId>;

enum class ErrorCode {
  invalid_argument,
  parse,
  not_cubic,
  disconnected,
  has_bridge,
  cap_exceeded,
  verification_failed,
  unknown_name,
  io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  bool operator==(const Edge&) const = default;
};

/// Immutable after construction. Edge ids are the positions in `edges()`.
/// Incident edge lists are sorted by edge id; a vertex with a parallel pair
/// sees both ids.
class Multigraph {
 public:
  Multigraph() = default;
  /// Throws Error{invalid_argument} on loops or out-of-range endpoints.
  Multigraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<size_t>(e)); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const EdgeId> incident(VertexId v) const;
  int degree(VertexId v) const;
  VertexId other_end(EdgeId e, VertexId v) const;

  bool operator==(const Multigraph& rhs) const {
    return vertex_count_ == rhs.vertex_count_ && edges_ == rhs.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<EdgeId> incidence_;
};

/// Result of `classify`. Non-cubic graphs are reported, not rejected with an
/// exception.
struct CubicCertificate {
  Multigraph graph;
  std::optional<VertexId> non_cubic_vertex;
  bool simple = false;
  bool connected = false;
  bool bridgeless = false;

  bool cubic() const noexcept { return !non_cubic_vertex.has_value(); }
};

CubicCertificate classify(const Multigraph& g);

bool is_connected(const Multigraph& g);
bool is_simple(const Multigraph& g);
bool is_cubic(const Multigraph& g);

/// Component index per vertex, optionally ignoring a set of edges (by mask).
std::vector<int> component_labels(const Multigraph& g,
                                  const std::vector<bool>* removed = nullptr);

/// Throws Error{not_cubic} naming the first offending vertex.
void require_cubic(const Multigraph& g, std::string_view who);
void require_connected(const Multigraph& g, std::string_view who);

/// Stable 64-bit FNV-1a digest of the edge-list serialization, as 16 hex digits.
std::string graph_hash(const Multigraph& g);

EdgeSet normalize(EdgeSet s);
VertexSet endpoints_of(const Multigraph& g, const EdgeSet& edges);
/// Per-vertex degree within an edge subset.
std::vector<int> degrees_in(const Multigraph& g, const EdgeSet& edges);
EdgeSet complement(const Multigraph& g, const EdgeSet& edges);

}  // namespace tricub
