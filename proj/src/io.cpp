#include "tricub/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace tricub {
namespace {

Error parse_error(int line, const std::string& msg) {
  return Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Two non-negative integers separated by whitespace, nothing else.
bool parse_pair(std::string_view line, long long& a, long long& b) {
  auto read = [&line](long long& out) {
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty()) return false;
    auto [p, ec] = std::from_chars(line.data(), line.data() + line.size(), out);
    if (ec != std::errc() || out < 0) return false;
    line.remove_prefix(static_cast<size_t>(p - line.data()));
    return true;
  };
  if (!read(a) || !read(b)) return false;
  return trim(line).empty();
}

}  // namespace

Multigraph parse_edge_list(std::string_view text) {
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    long long a = 0, b = 0;
    if (!parse_pair(line, a, b)) {
      throw parse_error(line_no, "expected two non-negative integers, got '" + std::string(line) + "'");
    }
    if (n < 0) {
      n = a;
      m = b;
      if (n > (1 << 24) || m > (1 << 26)) throw parse_error(line_no, "graph too large");
      edges.reserve(static_cast<size_t>(m));
      continue;
    }
    if (static_cast<long long>(edges.size()) >= m) {
      throw parse_error(line_no, "more edge lines than the declared " + std::to_string(m));
    }
    if (a >= n || b >= n) {
      throw parse_error(line_no, "vertex index out of range [0, " + std::to_string(n) + ")");
    }
    if (a == b) throw parse_error(line_no, "loop at vertex " + std::to_string(a));
    edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
  }
  if (n < 0) throw parse_error(line_no, "missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw parse_error(line_no, "declared " + std::to_string(m) + " edges, found " +
                                   std::to_string(edges.size()));
  }
  return Multigraph(static_cast<int>(n), std::move(edges));
}

std::string to_edge_list(const Multigraph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

namespace {

constexpr std::string_view kSparse6Header = ">>sparse6<<";

int bits_for(int n) {
  int k = 0;
  for (int x = n - 1; x > 0; x >>= 1) ++k;
  return k;
}

class BitWriter {
 public:
  void put(unsigned long long value, int width) {
    for (int i = width - 1; i >= 0; --i) bits_.push_back(((value >> i) & 1ULL) != 0);
  }
  size_t size() const { return bits_.size(); }
  std::string finish() const {
    std::string out;
    for (size_t i = 0; i < bits_.size(); i += 6) {
      int byte = 0;
      for (size_t j = 0; j < 6; ++j) byte = (byte << 1) | (bits_[i + j] ? 1 : 0);
      out.push_back(static_cast<char>(byte + 63));
    }
    return out;
  }

 private:
  std::vector<bool> bits_;
};

std::string encode_size(int n) {
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  return out;
}

}  // namespace

std::string to_sparse6(const Multigraph& g) {
  const int n = g.vertex_count();
  const int k = bits_for(n);
  std::vector<std::pair<int, int>> pairs;  // (larger, smaller)
  pairs.reserve(static_cast<size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) pairs.emplace_back(std::max(e.u, e.v), std::min(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());

  BitWriter w;
  int current = 0;
  for (auto [hi, lo] : pairs) {
    if (hi == current) {
      w.put(0, 1);
      w.put(static_cast<unsigned>(lo), k);
    } else if (hi == current + 1) {
      w.put(1, 1);
      w.put(static_cast<unsigned>(lo), k);
      current = hi;
    } else {
      w.put(1, 1);
      w.put(static_cast<unsigned>(hi), k);
      w.put(0, 1);
      w.put(static_cast<unsigned>(lo), k);
      current = hi;
    }
  }
  const size_t pad = (6 - w.size() % 6) % 6;
  if (pad > 0) {
    // A 0-bit stops a trailing all-ones x from being read as an edge to n-1.
    const bool special = (k >= 1 && k <= 4 && n == (1 << k) && current == n - 2 &&
                          static_cast<int>(pad) >= k + 1);
    if (special) {
      w.put(0, 1);
      w.put((1ULL << (pad - 1)) - 1, static_cast<int>(pad - 1));
    } else {
      w.put((1ULL << pad) - 1, static_cast<int>(pad));
    }
  }
  return ":" + encode_size(n) + w.finish();
}

Multigraph parse_sparse6(std::string_view text) {
  std::string_view s = trim(text);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.substr(0, kSparse6Header.size()) == kSparse6Header) s.remove_prefix(kSparse6Header.size());
  if (s.empty() || s.front() != ':') {
    throw Error(ErrorCode::parse, "sparse6: missing ':' prefix");
  }
  s.remove_prefix(1);
  for (char c : s) {
    if (c < 63 || c > 126) throw Error(ErrorCode::parse, "sparse6: byte out of range");
  }
  if (s.empty()) throw Error(ErrorCode::parse, "sparse6: missing vertex count");
  size_t idx = 0;
  long long n = 0;
  if (s[0] != 126) {
    n = s[0] - 63;
    idx = 1;
  } else if (s.size() >= 2 && s[1] != 126) {
    if (s.size() < 4) throw Error(ErrorCode::parse, "sparse6: truncated vertex count");
    for (size_t i = 1; i < 4; ++i) n = (n << 6) | (s[i] - 63);
    idx = 4;
  } else {
    if (s.size() < 8) throw Error(ErrorCode::parse, "sparse6: truncated vertex count");
    for (size_t i = 2; i < 8; ++i) n = (n << 6) | (s[i] - 63);
    idx = 8;
  }
  if (n > (1 << 24)) throw Error(ErrorCode::parse, "sparse6: graph too large");
  const int k = bits_for(static_cast<int>(n));

  std::vector<bool> bits;
  for (size_t i = idx; i < s.size(); ++i) {
    int byte = s[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back(((byte >> b) & 1) != 0);
  }
  std::vector<Edge> edges;
  long long v = 0;
  size_t p = 0;
  while (p + 1 + static_cast<size_t>(k) <= bits.size()) {
    bool b = bits[p++];
    long long x = 0;
    for (int i = 0; i < k; ++i) x = (x << 1) | (bits[p++] ? 1 : 0);
    if (b) ++v;
    if (v >= n) break;
    if (x > v) {
      v = x;
    } else {
      if (x == v) throw Error(ErrorCode::parse, "sparse6: loop at vertex " + std::to_string(v));
      edges.push_back({static_cast<VertexId>(x), static_cast<VertexId>(v)});
    }
  }
  if (n > 1 && k == 0) throw Error(ErrorCode::parse, "sparse6: inconsistent size");
  return Multigraph(static_cast<int>(n), std::move(edges));
}

Multigraph parse_graph(std::string_view text) {
  std::string_view s = trim(text);
  while (!s.empty() && (s.front() == '\n' || s.front() == '\r' || s.front() == ' ')) s.remove_prefix(1);
  if (!s.empty() && (s.front() == ':' || s.substr(0, kSparse6Header.size()) == kSparse6Header)) {
    return parse_sparse6(s);
  }
  return parse_edge_list(text);
}

std::string serialize(const Multigraph& g, Format format) {
  return format == Format::sparse6 ? to_sparse6(g) + "\n" : to_edge_list(g);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot write '" + path + "'");
  out << content;
  if (!out) throw Error(ErrorCode::io, "write failed for '" + path + "'");
}

Multigraph read_graph_file(const std::string& path) {
  return parse_graph(read_text_file(path));
}

}  // namespace tricub
