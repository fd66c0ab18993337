#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "cosetforge/additive_code.hpp"
#include "cosetforge/binary_code.hpp"
#include "cosetforge/graph.hpp"

namespace cosetforge::io {

/// "F4 n=<n> rows=<r>" followed by one row per line over 0 1 w W.
/// Rows are the code's generators in their stored order.
std::string write_code_text(const AdditiveCode& code);
AdditiveCode read_code_text(std::string_view text);

/// "F2 n=<n> rows=<r>" followed by the generator rows over 0 1.
std::string write_code_text(const BinaryLinearCode& code);
BinaryLinearCode read_binary_code_text(std::string_view text);

/// One "u v" line per edge, u < v, sorted.
std::string write_edge_list(const Graph& g);
/// Blank lines and lines starting with '#' are skipped. Without an explicit
/// vertex count the graph has max label + 1 vertices.
Graph read_edge_list(std::string_view text, std::optional<std::size_t> vertex_count = std::nullopt);

std::string write_dot(const Graph& g, std::string_view name = "G");

/// Throws Error if the file cannot be written or read.
void write_file(const std::string& path, std::string_view contents);
std::string read_file(const std::string& path);

}  // namespace cosetforge::io
