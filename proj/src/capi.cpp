#include "tricub/tricub.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "tricub/analysis.hpp"
#include "tricub/certificates.hpp"
#include "tricub/generators.hpp"
#include "tricub/hcoloring.hpp"
#include "tricub/io.hpp"
#include "tricub/structure.hpp"

struct tricub_graph {
  tricub::Multigraph graph;
};

namespace {

thread_local std::string last_error;

tricub_status status_of(tricub::ErrorCode code) {
  using tricub::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return TRICUB_INVALID_ARGUMENT;
    case ErrorCode::parse: return TRICUB_PARSE;
    case ErrorCode::not_cubic: return TRICUB_NOT_CUBIC;
    case ErrorCode::disconnected: return TRICUB_DISCONNECTED;
    case ErrorCode::has_bridge: return TRICUB_HAS_BRIDGE;
    case ErrorCode::cap_exceeded: return TRICUB_CAP_EXCEEDED;
    case ErrorCode::verification_failed: return TRICUB_VERIFICATION;
    case ErrorCode::unknown_name: return TRICUB_UNKNOWN_NAME;
    case ErrorCode::io: return TRICUB_IO;
  }
  return TRICUB_INTERNAL;
}

tricub_status fail(tricub_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs body, translating exceptions into status codes.
template <typename F>
tricub_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return TRICUB_OK;
  } catch (const tricub::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(TRICUB_PARSE, std::string("json: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(TRICUB_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TRICUB_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tricub_graph* wrap(tricub::Multigraph g) { return new tricub_graph{std::move(g)}; }

void require(bool ok, const char* what) {
  if (!ok) throw tricub::Error(tricub::ErrorCode::invalid_argument, what);
}

}  // namespace

extern "C" {

const char* tricub_version(void) { return "0.1.0"; }

const char* tricub_status_name(tricub_status status) {
  switch (status) {
    case TRICUB_OK: return "ok";
    case TRICUB_INVALID_ARGUMENT: return "invalid_argument";
    case TRICUB_PARSE: return "parse";
    case TRICUB_NOT_CUBIC: return "not_cubic";
    case TRICUB_DISCONNECTED: return "disconnected";
    case TRICUB_HAS_BRIDGE: return "has_bridge";
    case TRICUB_CAP_EXCEEDED: return "cap_exceeded";
    case TRICUB_VERIFICATION: return "verification_failed";
    case TRICUB_UNKNOWN_NAME: return "unknown_name";
    case TRICUB_IO: return "io";
    case TRICUB_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* tricub_last_error(void) { return last_error.c_str(); }

void tricub_string_free(char* s) { std::free(s); }

tricub_status tricub_graph_parse(const char* text, tricub_graph** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = wrap(tricub::parse_graph(text));
  });
}

tricub_status tricub_graph_read_file(const char* path, tricub_graph** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = wrap(tricub::read_graph_file(path));
  });
}

tricub_status tricub_graph_generate(const char* name, tricub_graph** out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    *out = wrap(tricub::generate(name));
  });
}

tricub_status tricub_graph_family(const char* gadget, int n, tricub_graph** out) {
  return guarded([&] {
    require(gadget != nullptr && out != nullptr, "null argument");
    const auto kind = tricub::parse_gadget(gadget);
    *out = wrap(tricub::generate_from_tree(tricub::DegreeTree::caterpillar(n), kind));
  });
}

tricub_status tricub_graph_random(int n, int simple, uint64_t seed, tricub_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = wrap(tricub::random_cubic(n, simple != 0, seed));
  });
}

tricub_status tricub_graph_expand(const tricub_graph* g, const int* u, size_t count, tricub_graph** out,
                                  char** sidecar_json) {
  return guarded([&] {
    require(g != nullptr && out != nullptr && (u != nullptr || count == 0), "null argument");
    tricub::VertexSet set(u, u + count);
    const auto res = tricub::expand_vertices(g->graph, tricub::normalize(set));
    if (sidecar_json != nullptr) {
      nlohmann::json triangles = nlohmann::json::array();
      for (const auto& t : res.triangles) {
        triangles.push_back({{"source", t.source}, {"corners", t.corners}, {"edges", t.edges}});
      }
      const nlohmann::json side = {{"source_hash", tricub::graph_hash(g->graph)},
                                   {"expanded", res.expanded},
                                   {"triangles", triangles},
                                   {"edge_lift", res.edge_lift},
                                   {"vertex_origin", res.vertex_origin}};
      *sidecar_json = dup_string(side.dump(2) + "\n");
    }
    *out = wrap(res.graph);
  });
}

void tricub_graph_free(tricub_graph* g) { delete g; }

int tricub_graph_vertex_count(const tricub_graph* g) { return g == nullptr ? -1 : g->graph.vertex_count(); }

int tricub_graph_edge_count(const tricub_graph* g) { return g == nullptr ? -1 : g->graph.edge_count(); }

tricub_status tricub_graph_edge(const tricub_graph* g, int edge, int* u, int* v) {
  return guarded([&] {
    require(g != nullptr && u != nullptr && v != nullptr, "null argument");
    require(edge >= 0 && edge < g->graph.edge_count(), "edge id out of range");
    const auto& e = g->graph.edge(edge);
    *u = e.u;
    *v = e.v;
  });
}

tricub_status tricub_graph_serialize(const tricub_graph* g, tricub_format format, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    const auto f = format == TRICUB_FORMAT_SPARSE6 ? tricub::Format::sparse6 : tricub::Format::edge_list;
    *out = dup_string(tricub::serialize(g->graph, f));
  });
}

tricub_status tricub_graph_hash(const tricub_graph* g, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = dup_string(tricub::graph_hash(g->graph));
  });
}

tricub_status tricub_analyze(const tricub_graph* g, const char* options_json, char** report_json, int* exit_code) {
  return guarded([&] {
    require(g != nullptr && report_json != nullptr && exit_code != nullptr, "null argument");
    tricub::AnalyzeOptions opt;
    if (options_json != nullptr && *options_json != '\0') {
      const auto j = nlohmann::json::parse(options_json);
      if (j.contains("checks")) opt.checks = j.at("checks").get<std::vector<std::string>>();
      opt.budget = j.value("budget", opt.budget);
      opt.timeout_seconds = j.value("timeout", opt.timeout_seconds);
      opt.threads = j.value("threads", opt.threads);
      opt.node_budget = j.value("node_budget", opt.node_budget);
    }
    const auto report = tricub::analyze(g->graph, opt);
    *report_json = dup_string(tricub::report_to_json(report).dump(2) + "\n");
    *exit_code = report.exit_code;
  });
}

tricub_status tricub_report_to_text(const char* report_json, char** out) {
  return guarded([&] {
    require(report_json != nullptr && out != nullptr, "null argument");
    *out = dup_string(tricub::report_json_to_text(nlohmann::json::parse(report_json)));
  });
}

tricub_status tricub_verify_certificate(const tricub_graph* g, const char* certificate_json,
                                        const tricub_graph* target, int* valid, char** message) {
  return guarded([&] {
    require(g != nullptr && certificate_json != nullptr && valid != nullptr, "null argument");
    const auto cert = nlohmann::json::parse(certificate_json);
    const auto check = tricub::verify_certificate(g->graph, cert, target == nullptr ? nullptr : &target->graph);
    *valid = check.valid ? 1 : 0;
    if (message != nullptr) *message = dup_string(check.message);
  });
}

tricub_status tricub_p10_fixtures(char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    *out_json = dup_string(tricub::petersen_cdc_fixtures_json());
  });
}

}  // extern "C"
