#include "tricub/structure.hpp"

#include <algorithm>
#include <utility>

namespace tricub {
namespace {

struct Lowlink {
  std::vector<int> disc;
  std::vector<int> low;
  EdgeSet bridges;
  std::vector<EdgeSet> blocks;
  std::vector<bool> is_cut;
};

// Iterative Tarjan over edge ids; parallel edges act as back edges because
// only the tree edge itself is skipped.
Lowlink run_lowlink(const Multigraph& g) {
  const int n = g.vertex_count();
  Lowlink r;
  r.disc.assign(static_cast<size_t>(n), -1);
  r.low.assign(static_cast<size_t>(n), 0);
  r.is_cut.assign(static_cast<size_t>(n), false);
  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    size_t next;
  };
  std::vector<Frame> stack;
  std::vector<EdgeId> edge_stack;
  int clock = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (r.disc[static_cast<size_t>(s)] != -1) continue;
    r.disc[static_cast<size_t>(s)] = r.low[static_cast<size_t>(s)] = clock++;
    stack.push_back({s, -1, 0});
    int root_children = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        EdgeId e = inc[f.next++];
        if (e == f.parent_edge) continue;
        VertexId w = g.other_end(e, f.v);
        auto wi = static_cast<size_t>(w);
        auto vi = static_cast<size_t>(f.v);
        if (r.disc[wi] == -1) {
          edge_stack.push_back(e);
          r.disc[wi] = r.low[wi] = clock++;
          if (f.v == s) ++root_children;
          stack.push_back({w, e, 0});
        } else if (r.disc[wi] < r.disc[vi]) {
          r.low[vi] = std::min(r.low[vi], r.disc[wi]);
          edge_stack.push_back(e);
        }
        continue;
      }
      const VertexId v = f.v;
      const EdgeId pe = f.parent_edge;
      stack.pop_back();
      if (stack.empty()) break;
      const VertexId p = stack.back().v;
      auto vi = static_cast<size_t>(v);
      auto pi = static_cast<size_t>(p);
      r.low[pi] = std::min(r.low[pi], r.low[vi]);
      if (r.low[vi] > r.disc[pi]) r.bridges.push_back(pe);
      if (r.low[vi] >= r.disc[pi]) {
        if (p != s) r.is_cut[pi] = true;
        EdgeSet block;
        while (true) {
          EdgeId top = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(top);
          if (top == pe) break;
        }
        r.blocks.push_back(normalize(std::move(block)));
      }
    }
    if (root_children >= 2) r.is_cut[static_cast<size_t>(s)] = true;
  }
  r.bridges = normalize(std::move(r.bridges));
  return r;
}

}  // namespace

EdgeSet bridges(const Multigraph& g) {
  require_connected(g, "bridges");
  return run_lowlink(g).bridges;
}

VertexSet block_vertices(const Multigraph& g, const EdgeSet& block) {
  return endpoints_of(g, block);
}

Multigraph induced_by_edges(const Multigraph& g, const EdgeSet& edges) {
  VertexSet vs = endpoints_of(g, edges);
  std::vector<int> index(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < vs.size(); ++i) index[static_cast<size_t>(vs[i])] = static_cast<int>(i);
  std::vector<Edge> out;
  for (EdgeId e : edges) {
    out.push_back({index[static_cast<size_t>(g.edge(e).u)], index[static_cast<size_t>(g.edge(e).v)]});
  }
  return Multigraph(static_cast<int>(vs.size()), std::move(out));
}

BlockDecomposition decompose(const Multigraph& g) {
  require_connected(g, "decompose");
  Lowlink r = run_lowlink(g);
  BlockDecomposition d;
  std::sort(r.blocks.begin(), r.blocks.end());
  d.blocks = std::move(r.blocks);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (r.is_cut[static_cast<size_t>(v)]) d.cut_vertices.push_back(v);
  }
  if (d.blocks.size() < 2) return d;
  for (size_t b = 0; b < d.blocks.size(); ++b) {
    VertexSet vs = block_vertices(g, d.blocks[b]);
    std::vector<VertexId> cuts;
    for (VertexId v : vs) {
      if (r.is_cut[static_cast<size_t>(v)]) cuts.push_back(v);
    }
    if (cuts.size() != 1) continue;
    EndBlock eb;
    eb.block = static_cast<int>(b);
    eb.cut_vertex = cuts.front();
    std::vector<EdgeId> outside;
    for (EdgeId e : g.incident(eb.cut_vertex)) {
      if (!std::binary_search(d.blocks[b].begin(), d.blocks[b].end(), e)) outside.push_back(e);
    }
    if (outside.size() == 1) eb.root = g.other_end(outside.front(), eb.cut_vertex);
    d.end_blocks.push_back(eb);
  }
  return d;
}

bool is_trivial_bridge(const Multigraph& g, EdgeId e, int threshold) {
  if (threshold != 3 && threshold != 5) {
    throw Error(ErrorCode::invalid_argument, "trivial bridge threshold must be 3 or 5");
  }
  EdgeSet bs = bridges(g);
  if (!std::binary_search(bs.begin(), bs.end(), e)) {
    throw Error(ErrorCode::invalid_argument, "edge " + std::to_string(e) + " is not a bridge");
  }
  std::vector<bool> removed(static_cast<size_t>(g.edge_count()), false);
  removed[static_cast<size_t>(e)] = true;
  auto comp = component_labels(g, &removed);
  const auto side = comp[static_cast<size_t>(g.edge(e).u)];
  const auto count = static_cast<int>(std::count(comp.begin(), comp.end(), side));
  return std::min(count, g.vertex_count() - count) == threshold;
}

EdgeId triangle_edge_opposite(const ExpandedTriangle& t, int corner) {
  switch (corner) {
    case 0: return t.edges[1];
    case 1: return t.edges[2];
    case 2: return t.edges[0];
    default: throw Error(ErrorCode::invalid_argument, "corner must be 0, 1 or 2");
  }
}

EdgeId triangle_edge_between(const ExpandedTriangle& t, int a, int b) {
  if (a == b) throw Error(ErrorCode::invalid_argument, "corners must differ");
  return triangle_edge_opposite(t, 3 - a - b);
}

const ExpandedTriangle* ExpansionResult::triangle_of(VertexId source) const {
  auto it = std::lower_bound(expanded.begin(), expanded.end(), source);
  if (it == expanded.end() || *it != source) return nullptr;
  return &triangles[static_cast<size_t>(it - expanded.begin())];
}

ExpansionResult expand_vertices(const Multigraph& g, const VertexSet& u) {
  require_cubic(g, "expand_vertices");
  ExpansionResult r;
  r.expanded = normalize(u);
  for (VertexId v : r.expanded) {
    if (v < 0 || v >= g.vertex_count()) {
      throw Error(ErrorCode::invalid_argument, "expand_vertices: vertex out of range");
    }
  }
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  r.vertex_origin.resize(static_cast<size_t>(n + 2 * static_cast<int>(r.expanded.size())));
  for (VertexId v = 0; v < n; ++v) r.vertex_origin[static_cast<size_t>(v)] = v;
  int next_vertex = n;
  int next_edge = m;
  for (VertexId v : r.expanded) {
    ExpandedTriangle t;
    t.source = v;
    t.corners = {v, next_vertex, next_vertex + 1};
    r.vertex_origin[static_cast<size_t>(next_vertex)] = v;
    r.vertex_origin[static_cast<size_t>(next_vertex + 1)] = v;
    next_vertex += 2;
    auto inc = g.incident(v);
    for (size_t k = 0; k < 3; ++k) {
      Edge& e = edges[static_cast<size_t>(inc[k])];
      // g.edge() still has the original endpoints even if the other end was
      // already rewired.
      if (g.edge(inc[k]).u == v) {
        e.u = t.corners[k];
      } else {
        e.v = t.corners[k];
      }
    }
    t.edges = {next_edge, next_edge + 1, next_edge + 2};
    next_edge += 3;
    r.triangles.push_back(t);
  }
  for (const ExpandedTriangle& t : r.triangles) {
    edges.push_back({t.corners[0], t.corners[1]});
    edges.push_back({t.corners[1], t.corners[2]});
    edges.push_back({t.corners[0], t.corners[2]});
  }
  r.graph = Multigraph(next_vertex, std::move(edges));
  r.edge_lift.resize(static_cast<size_t>(m));
  for (EdgeId e = 0; e < m; ++e) r.edge_lift[static_cast<size_t>(e)] = e;
  return r;
}

Multigraph contract_triangle(const Multigraph& g, const std::array<EdgeId, 3>& t) {
  for (EdgeId e : t) {
    if (e < 0 || e >= g.edge_count()) {
      throw Error(ErrorCode::invalid_argument, "contract_triangle: edge id out of range");
    }
  }
  if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
    throw Error(ErrorCode::invalid_argument, "contract_triangle: repeated edge");
  }
  std::vector<VertexId> ends;
  for (EdgeId e : t) {
    ends.push_back(g.edge(e).u);
    ends.push_back(g.edge(e).v);
  }
  std::sort(ends.begin(), ends.end());
  // A triangle touches each of its three vertices exactly twice.
  if (!(ends[0] == ends[1] && ends[2] == ends[3] && ends[4] == ends[5] &&
        ends[1] != ends[2] && ends[3] != ends[4])) {
    throw Error(ErrorCode::invalid_argument, "contract_triangle: edges do not form a triangle");
  }
  const std::array<VertexId, 3> tri = {ends[0], ends[2], ends[4]};
  auto in_tri = [&tri](VertexId v) { return v == tri[0] || v == tri[1] || v == tri[2]; };
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e == t[0] || e == t[1] || e == t[2]) continue;
    const Edge& ed = g.edge(e);
    if (in_tri(ed.u) && in_tri(ed.v)) {
      throw Error(ErrorCode::invalid_argument,
                  "contract_triangle: edge " + std::to_string(e) + " would become a loop");
    }
    edges.push_back(ed);
  }
  // tri[0] survives; tri[1] and tri[2] disappear.
  auto remap = [&tri](VertexId v) {
    if (v == tri[1] || v == tri[2]) return tri[0];
    return v - (v > tri[1] ? 1 : 0) - (v > tri[2] ? 1 : 0);
  };
  for (Edge& e : edges) {
    e.u = remap(e.u);
    e.v = remap(e.v);
  }
  return Multigraph(g.vertex_count() - 2, std::move(edges));
}

const Attachment* AttachResult::attachment_of(EdgeId source_edge) const {
  for (const Attachment& a : attachments) {
    if (a.source_edge == source_edge) return &a;
  }
  return nullptr;
}

AttachResult subdivide_attach(const Multigraph& g, const EdgeSet& e0, Gadget gadget) {
  require_cubic(g, "subdivide_attach");
  AttachResult r;
  r.gadget = gadget;
  r.subdivided = normalize(e0);
  for (EdgeId e : r.subdivided) {
    if (e < 0 || e >= g.edge_count()) {
      throw Error(ErrorCode::invalid_argument, "subdivide_attach: edge id out of range");
    }
  }
  const Multigraph gad = gadget_graph(gadget);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  int next = g.vertex_count();
  for (EdgeId e : r.subdivided) {
    Attachment a;
    a.source_edge = e;
    a.root = next++;
    const Edge original = g.edge(e);
    edges[static_cast<size_t>(e)] = {original.u, a.root};
    a.split_edge = static_cast<EdgeId>(edges.size());
    edges.push_back({a.root, original.v});
    for (int i = 0; i < gad.vertex_count(); ++i) a.gadget_vertices.push_back(next++);
    a.bridge = static_cast<EdgeId>(edges.size());
    edges.push_back({a.root, a.gadget_vertices[0]});
    for (const Edge& ge : gad.edges()) {
      a.gadget_edges.push_back(static_cast<EdgeId>(edges.size()));
      edges.push_back({a.gadget_vertices[static_cast<size_t>(ge.u)],
                       a.gadget_vertices[static_cast<size_t>(ge.v)]});
    }
    r.attachments.push_back(std::move(a));
  }
  r.graph = Multigraph(next, std::move(edges));
  return r;
}

}  // namespace tricub
