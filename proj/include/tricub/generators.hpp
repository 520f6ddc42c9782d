#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tricub/graph.hpp"

namespace tricub {

/// End-block gadgets. W is a triangle with one doubled edge (3 vertices,
/// 4 edges); W' is K4 with one edge subdivided once (5 vertices, 7 edges).
/// In both, local vertex 0 is the unique degree-2 vertex.
enum class Gadget { W, Wprime };

const char* to_string(Gadget g);
Gadget parse_gadget(std::string_view name);
int gadget_order(Gadget g);
Multigraph gadget_graph(Gadget g);

/// Named graphs with frozen labelings (see fixtures/catalog.txt):
/// W, Wprime, K4, K33, prism, P10, P12, S10, S16, theta.
Multigraph generate(std::string_view name);
const std::vector<std::string>& catalog_names();

/// A tree whose vertex degrees are all 1 or 3.
class DegreeTree {
 public:
  /// Throws Error{invalid_argument} when the tree invariants fail.
  explicit DegreeTree(Multigraph tree);

  /// A caterpillar: a path of n/2-1 degree-3 vertices with leaves hung on it.
  /// n = 2 gives the single edge K2.
  static DegreeTree caterpillar(int n);

  const Multigraph& tree() const noexcept { return tree_; }
  int n() const noexcept { return tree_.vertex_count(); }
  int k1() const noexcept { return k1_; }
  int k3() const noexcept { return k3_; }

 private:
  Multigraph tree_;
  int k1_ = 0;
  int k3_ = 0;
};

/// Attaches a gadget at every leaf: the leaf becomes the gadget's degree-2
/// vertex. Tree vertices keep their indices; gadget vertices follow in leaf
/// order. Order is 2n+2 for W and 3n+4 for W'.
Multigraph generate_from_tree(const DegreeTree& tree, Gadget gadget);

/// Pairing-model cubic multigraph, connected and loop free (simple when
/// requested). Deterministic for a fixed seed on every platform.
Multigraph random_cubic(int n, bool simple, std::uint64_t seed);

}  // namespace tricub
