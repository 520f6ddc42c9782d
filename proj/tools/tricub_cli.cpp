// tricub command-line front end. Talks to the library only through the C API.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tricub/tricub.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kCsvVersion = "tricub-batch-csv v1";

struct GraphDeleter {
  void operator()(tricub_graph* g) const { tricub_graph_free(g); }
};
using GraphPtr = std::unique_ptr<tricub_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { tricub_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

// A failed C call, carrying the library status and message.
struct CallError {
  tricub_status status;
  std::string message;
};

void check(tricub_status s) {
  if (s != TRICUB_OK) throw CallError{s, std::string(tricub_status_name(s)) + ": " + tricub_last_error()};
}

std::string take(char* s) {
  CString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

GraphPtr read_graph(const std::string& path) {
  tricub_graph* g = nullptr;
  check(tricub_graph_read_file(path.c_str(), &g));
  return GraphPtr(g);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CallError{TRICUB_IO, "cannot write " + path};
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CallError{TRICUB_IO, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

tricub_format parse_format(const std::string& f) {
  return f == "sparse6" ? TRICUB_FORMAT_SPARSE6 : TRICUB_FORMAT_EDGE_LIST;
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string name;
  std::string gadget = "W";
  int n = 0;
  std::uint64_t seed = 1;
  bool simple = false;
  std::string output;
  std::string format = "edgelist";
  std::string expand;
};

int run_gen(const GenArgs& a) {
  tricub_graph* raw = nullptr;
  if (a.name == "family") {
    check(tricub_graph_family(a.gadget.c_str(), a.n, &raw));
  } else if (a.name == "random") {
    check(tricub_graph_random(a.n, a.simple ? 1 : 0, a.seed, &raw));
  } else {
    check(tricub_graph_generate(a.name.c_str(), &raw));
  }
  GraphPtr g(raw);
  std::string sidecar;
  if (!a.expand.empty()) {
    std::vector<int> u;
    for (const auto& item : split_list(a.expand)) u.push_back(std::stoi(item));
    char* side = nullptr;
    tricub_graph* expanded = nullptr;
    check(tricub_graph_expand(g.get(), u.data(), u.size(), &expanded, &side));
    g.reset(expanded);
    sidecar = take(side);
  }
  char* text = nullptr;
  check(tricub_graph_serialize(g.get(), parse_format(a.format), &text));
  const std::string body = take(text);
  if (a.output.empty() || a.output == "-") {
    std::cout << body;
  } else {
    write_file(a.output, body);
    if (!sidecar.empty()) write_file(a.output + ".json", sidecar);
  }
  return TRICUB_EXIT_PASS;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
  std::string input;
  std::string checks = "t,gallai,bounds";
  int budget = 3;
  double timeout = 0;
  int threads = 0;
  std::uint64_t node_budget = 20000000;
  bool json_out = false;
  std::string cert_out;
};

json options_json(const std::vector<std::string>& checks, int budget, double timeout, int threads,
                  std::uint64_t node_budget) {
  return {{"checks", checks}, {"budget", budget}, {"timeout", timeout}, {"threads", threads},
          {"node_budget", node_budget}};
}

int run_analyze(const AnalyzeArgs& a) {
  GraphPtr g = read_graph(a.input);
  const std::string opts =
      options_json(split_list(a.checks), a.budget, a.timeout, a.threads, a.node_budget).dump();
  char* report = nullptr;
  int code = 0;
  check(tricub_analyze(g.get(), opts.c_str(), &report, &code));
  const std::string report_json = take(report);
  if (!a.cert_out.empty()) {
    write_file(a.cert_out, json::parse(report_json).at("certificates").dump(2) + "\n");
  }
  if (a.json_out) {
    std::cout << report_json;
  } else {
    char* text = nullptr;
    check(tricub_report_to_text(report_json.c_str(), &text));
    std::cout << take(text);
  }
  return code;
}

// ---------------------------------------------------------------------------
// batch

struct BatchArgs {
  std::string input;
  std::string checks = "bounds";
  int jobs = 1;
  int budget = 3;
  double timeout = 0;
  std::uint64_t node_budget = 20000000;
  std::string output;
  std::string format = "csv";
  bool no_timing = false;
};

struct Record {
  std::string source;
  std::string graph_id;
  int vertices = -1;
  int edges = -1;
  int exit_code = TRICUB_EXIT_INPUT_ERROR;
  json outcomes = json::object();
  json values = json::object();
  double wall_ms = 0;
  std::string error;
};

std::vector<std::string> batch_inputs(const std::string& input) {
  std::vector<std::string> paths;
  if (fs::is_directory(input)) {
    for (const auto& entry : fs::directory_iterator(input)) {
      if (entry.is_regular_file()) paths.push_back(entry.path().string());
    }
    std::sort(paths.begin(), paths.end());
    return paths;
  }
  std::istringstream lines(read_file(input));
  const fs::path base = fs::path(input).parent_path();
  std::string line;
  while (std::getline(lines, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const fs::path p(line);
    paths.push_back(p.is_absolute() ? line : (base / p).string());
  }
  return paths;
}

Record run_one(const std::string& path, const std::string& opts) {
  Record r;
  r.source = path;
  const auto start = std::chrono::steady_clock::now();
  try {
    GraphPtr g = read_graph(path);
    r.vertices = tricub_graph_vertex_count(g.get());
    r.edges = tricub_graph_edge_count(g.get());
    char* hash = nullptr;
    check(tricub_graph_hash(g.get(), &hash));
    r.graph_id = take(hash);
    char* report = nullptr;
    check(tricub_analyze(g.get(), opts.c_str(), &report, &r.exit_code));
    const json j = json::parse(take(report));
    for (const auto& row : j.at("rows")) r.outcomes[row.at("id").get<std::string>()] = row.at("outcome");
    r.values = j.at("values");
  } catch (const CallError& e) {
    r.exit_code = TRICUB_EXIT_INPUT_ERROR;
    r.error = e.message;
  } catch (const std::exception& e) {
    r.exit_code = TRICUB_EXIT_INPUT_ERROR;
    r.error = e.what();
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_map(const json& m) {
  std::string out;
  for (const auto& [k, v] : m.items()) {
    if (!out.empty()) out += ';';
    out += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return out;
}

// Batch exit code: theorem violation > conjecture violation > input error >
// inconclusive > pass.
int batch_exit_code(const std::vector<Record>& records) {
  const int priority[] = {4, 0, 1, 3, 2};  // rank of exit codes 0..4, lower is worse
  int best = TRICUB_EXIT_PASS;
  for (const auto& r : records) {
    if (priority[r.exit_code] < priority[best]) best = r.exit_code;
  }
  return best;
}

int run_batch(const BatchArgs& a) {
  const auto paths = batch_inputs(a.input);
  const auto checks = split_list(a.checks);
  const json config = options_json(checks, a.budget, a.timeout, 1, a.node_budget);
  const std::string opts = config.dump();

  std::vector<Record> records(paths.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < paths.size(); i = next.fetch_add(1)) records[i] = run_one(paths[i], opts);
  };
  const int jobs = std::max(1, a.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::ostringstream out;
  if (a.format == "jsonl") {
    for (const auto& r : records) {
      json j = {{"source", r.source},          {"graph_id", r.graph_id}, {"vertices", r.vertices},
                {"edges", r.edges},            {"exit_code", r.exit_code}, {"results", r.outcomes},
                {"values", r.values},          {"solver_config", config}, {"error", r.error}};
      if (!a.no_timing) j["wall_time_ms"] = r.wall_ms;
      out << j.dump() << "\n";
    }
  } else {
    out << "# " << kCsvVersion << " checks=" << a.checks << " budget=" << a.budget << "\n";
    out << "source,graph_id,vertices,edges,exit_code,results,values,error";
    if (!a.no_timing) out << ",wall_time_ms";
    out << "\n";
    for (const auto& r : records) {
      out << csv_field(r.source) << ',' << r.graph_id << ',' << r.vertices << ',' << r.edges << ',' << r.exit_code
          << ',' << csv_field(join_map(r.outcomes)) << ',' << csv_field(join_map(r.values)) << ','
          << csv_field(r.error);
      if (!a.no_timing) out << ',' << static_cast<long long>(r.wall_ms);
      out << "\n";
    }
  }
  if (a.output.empty() || a.output == "-") {
    std::cout << out.str();
  } else {
    write_file(a.output, out.str());
  }
  for (const auto& r : records) {
    if (!r.error.empty()) std::cerr << "failed: " << r.source << ": " << r.error << "\n";
  }
  return batch_exit_code(records);
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string graph;
  std::string certificate;
  std::string target;
};

int run_verify(const VerifyArgs& a) {
  GraphPtr g = read_graph(a.graph);
  GraphPtr target;
  if (!a.target.empty()) target = read_graph(a.target);
  const json doc = json::parse(read_file(a.certificate));
  // Either one certificate, or an object of named certificates (as written
  // by `analyze --cert-out`).
  std::vector<std::pair<std::string, json>> certs;
  if (doc.contains("type")) {
    certs.emplace_back(a.certificate, doc);
  } else {
    for (const auto& [name, cert] : doc.items()) certs.emplace_back(name, cert);
  }
  bool all_valid = true;
  for (const auto& [name, cert] : certs) {
    int valid = 0;
    char* msg = nullptr;
    check(tricub_verify_certificate(g.get(), cert.dump().c_str(), target.get(), &valid, &msg));
    const std::string message = take(msg);
    std::cout << name << ": " << (valid ? "valid" : "INVALID") << (message.empty() ? "" : " (" + message + ")")
              << "\n";
    all_valid = all_valid && valid;
  }
  return all_valid ? TRICUB_EXIT_PASS : TRICUB_EXIT_THEOREM_VIOLATION;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact triangle-expansion parameters of cubic multigraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tricub_version()));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a catalog graph, a tree family member or a random cubic graph");
  gen_cmd->add_option("name", gen.name, "Catalog name, 'family' or 'random'")->required();
  gen_cmd->add_option("--gadget", gen.gadget, "Gadget for 'family': W or Wprime");
  gen_cmd->add_option("--n", gen.n, "Tree order for 'family', vertex count for 'random'");
  gen_cmd->add_option("--seed", gen.seed, "Seed for 'random'");
  gen_cmd->add_flag("--simple", gen.simple, "Require a simple graph for 'random'");
  gen_cmd->add_option("--expand", gen.expand, "Comma-separated vertices to expand to triangles");
  gen_cmd->add_option("-o,--output", gen.output, "Output path (stdout when omitted)");
  gen_cmd->add_option("--format", gen.format, "Output format")->check(CLI::IsMember({"edgelist", "sparse6"}));

  AnalyzeArgs an;
  auto* an_cmd = app.add_subcommand("analyze", "Run checks on one graph and print a report");
  an_cmd->add_option("input", an.input, "Edge-list or sparse6 file")->required();
  an_cmd->add_option("--checks", an.checks, "Comma-separated: t,T,scc,cdc,hcolor,gallai,bounds");
  an_cmd->add_option("--budget", an.budget, "Largest expansion set tried for T");
  an_cmd->add_option("--timeout", an.timeout, "Seconds allowed for the T search (0 = none)");
  an_cmd->add_option("--threads", an.threads, "Threads for the T search (0 = hardware)");
  an_cmd->add_option("--node-budget", an.node_budget, "Node budget per search kernel");
  an_cmd->add_flag("--json", an.json_out, "Print the report as JSON");
  an_cmd->add_option("--cert-out", an.cert_out, "Write certificates to this JSON file");

  BatchArgs ba;
  auto* ba_cmd = app.add_subcommand("batch", "Analyze every graph in a directory or list file");
  ba_cmd->add_option("input", ba.input, "Directory or file listing one graph path per line")->required();
  ba_cmd->add_option("--checks", ba.checks, "Comma-separated checks");
  ba_cmd->add_option("--jobs", ba.jobs, "Graphs analyzed concurrently");
  ba_cmd->add_option("--budget", ba.budget, "Largest expansion set tried for T");
  ba_cmd->add_option("--timeout", ba.timeout, "Seconds allowed per T search (0 = none)");
  ba_cmd->add_option("--node-budget", ba.node_budget, "Node budget per search kernel");
  ba_cmd->add_option("-o,--output", ba.output, "Output path (stdout when omitted)");
  ba_cmd->add_option("--format", ba.format, "Record format")->check(CLI::IsMember({"csv", "jsonl"}));
  ba_cmd->add_flag("--no-timing", ba.no_timing, "Omit wall-clock times for byte-stable output");

  VerifyArgs ve;
  auto* ve_cmd = app.add_subcommand("verify", "Replay a certificate against its host graph");
  ve_cmd->add_option("graph", ve.graph, "Host graph file")->required();
  ve_cmd->add_option("certificate", ve.certificate, "Certificate JSON file")->required();
  ve_cmd->add_option("--target", ve.target, "Target graph for H-colorings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : TRICUB_EXIT_INPUT_ERROR;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*an_cmd) return run_analyze(an);
    if (*ba_cmd) return run_batch(ba);
    if (*ve_cmd) return run_verify(ve);
  } catch (const CallError& e) {
    std::cerr << "error: " << e.message << "\n";
    if (e.status == TRICUB_HAS_BRIDGE) std::cerr << "rejected: input has bridges\n";
    return TRICUB_EXIT_INPUT_ERROR;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return TRICUB_EXIT_INPUT_ERROR;
  }
  return TRICUB_EXIT_INPUT_ERROR;
}
