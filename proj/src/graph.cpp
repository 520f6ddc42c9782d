#include "tricub/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>
#include <utility>

#include "tricub/io.hpp"
#include "tricub/structure.hpp"

namespace tricub {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse: return "parse";
    case ErrorCode::not_cubic: return "not_cubic";
    case ErrorCode::disconnected: return "disconnected";
    case ErrorCode::has_bridge: return "has_bridge";
    case ErrorCode::cap_exceeded: return "cap_exceeded";
    case ErrorCode::verification_failed: return "verification_failed";
    case ErrorCode::unknown_name: return "unknown_name";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) {
    throw Error(ErrorCode::invalid_argument, "negative vertex count");
  }
  offsets_.assign(static_cast<size_t>(vertex_count_) + 1, 0);
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw Error(ErrorCode::invalid_argument,
                  "edge " + std::to_string(i) + " has an endpoint out of range");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::invalid_argument,
                  "edge " + std::to_string(i) + " is a loop");
    }
    ++offsets_[static_cast<size_t>(e.u) + 1];
    ++offsets_[static_cast<size_t>(e.v) + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  incidence_.resize(edges_.size() * 2);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  // Ascending edge order gives sorted incidence lists for free.
  for (size_t i = 0; i < edges_.size(); ++i) {
    incidence_[static_cast<size_t>(fill[static_cast<size_t>(edges_[i].u)]++)] = static_cast<EdgeId>(i);
    incidence_[static_cast<size_t>(fill[static_cast<size_t>(edges_[i].v)]++)] = static_cast<EdgeId>(i);
  }
}

std::span<const EdgeId> Multigraph::incident(VertexId v) const {
  if (v < 0 || v >= vertex_count_) {
    throw Error(ErrorCode::invalid_argument, "vertex out of range");
  }
  const auto b = static_cast<size_t>(offsets_[static_cast<size_t>(v)]);
  const auto e = static_cast<size_t>(offsets_[static_cast<size_t>(v) + 1]);
  return std::span<const EdgeId>(incidence_).subspan(b, e - b);
}

int Multigraph::degree(VertexId v) const {
  return static_cast<int>(incident(v).size());
}

VertexId Multigraph::other_end(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  return ed.u == v ? ed.v : ed.u;
}

std::vector<int> component_labels(const Multigraph& g,
                                  const std::vector<bool>* removed) {
  std::vector<int> comp(static_cast<size_t>(g.vertex_count()), -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (comp[static_cast<size_t>(s)] != -1) continue;
    comp[static_cast<size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        if (removed && (*removed)[static_cast<size_t>(e)]) continue;
        VertexId w = g.other_end(e, v);
        if (comp[static_cast<size_t>(w)] == -1) {
          comp[static_cast<size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Multigraph& g) {
  if (g.vertex_count() == 0) return true;
  auto comp = component_labels(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool is_simple(const Multigraph& g) {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges()) {
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) return false;
  }
  return true;
}

bool is_cubic(const Multigraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

void require_cubic(const Multigraph& g, std::string_view who) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) {
      throw Error(ErrorCode::not_cubic,
                  std::string(who) + ": vertex " + std::to_string(v) +
                      " has degree " + std::to_string(g.degree(v)));
    }
  }
}

void require_connected(const Multigraph& g, std::string_view who) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::disconnected, std::string(who) + ": graph is disconnected");
  }
}

CubicCertificate classify(const Multigraph& g) {
  CubicCertificate c;
  c.graph = g;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) {
      c.non_cubic_vertex = v;
      break;
    }
  }
  c.simple = is_simple(g);
  c.connected = is_connected(g);
  if (c.connected) {
    c.bridgeless = bridges(g).empty();
  } else {
    std::vector<bool> none(static_cast<size_t>(g.edge_count()), false);
    c.bridgeless = true;
    // A bridge disconnects its own component; test each edge directly.
    auto base = component_labels(g);
    int base_count = base.empty() ? 0 : *std::max_element(base.begin(), base.end()) + 1;
    for (EdgeId e = 0; e < g.edge_count() && c.bridgeless; ++e) {
      none[static_cast<size_t>(e)] = true;
      auto comp = component_labels(g, &none);
      int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
      if (count > base_count) c.bridgeless = false;
      none[static_cast<size_t>(e)] = false;
    }
  }
  return c;
}

std::string graph_hash(const Multigraph& g) {
  const std::string text = to_edge_list(g);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

EdgeSet normalize(EdgeSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

VertexSet endpoints_of(const Multigraph& g, const EdgeSet& edges) {
  VertexSet out;
  for (EdgeId e : edges) {
    out.push_back(g.edge(e).u);
    out.push_back(g.edge(e).v);
  }
  return normalize(std::move(out));
}

std::vector<int> degrees_in(const Multigraph& g, const EdgeSet& edges) {
  std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
  for (EdgeId e : edges) {
    ++deg[static_cast<size_t>(g.edge(e).u)];
    ++deg[static_cast<size_t>(g.edge(e).v)];
  }
  return deg;
}

EdgeSet complement(const Multigraph& g, const EdgeSet& edges) {
  std::vector<bool> in(static_cast<size_t>(g.edge_count()), false);
  for (EdgeId e : edges) in.at(static_cast<size_t>(e)) = true;
  EdgeSet out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!in[static_cast<size_t>(e)]) out.push_back(e);
  }
  return out;
}

}  // namespace tricub
