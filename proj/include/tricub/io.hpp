#pragma once

#include <string>
#include <string_view>

#include "tricub/graph.hpp"

namespace tricub {

enum class Format { edge_list, sparse6 };

/// Edge-list text: "n m" header, then m lines "u v". Lines starting with '#'
/// and blank lines are skipped. Errors carry the 1-based line number.
Multigraph parse_edge_list(std::string_view text);
std::string to_edge_list(const Multigraph& g);

/// Standard sparse6 (multigraph capable). The ">>sparse6<<" header is
/// optional; a trailing newline is ignored.
Multigraph parse_sparse6(std::string_view text);
/// Encodes without the header and without a trailing newline.
std::string to_sparse6(const Multigraph& g);

/// Sparse6 when the first non-blank character is ':' or the header is
/// present, edge list otherwise.
Multigraph parse_graph(std::string_view text);
std::string serialize(const Multigraph& g, Format format);

Multigraph read_graph_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);
std::string read_text_file(const std::string& path);

}  // namespace tricub
