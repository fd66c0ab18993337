#include "cosetforge/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "cosetforge/error.hpp"

namespace cosetforge::io {

namespace {

struct Header {
  std::size_t n = 0;
  std::size_t rows = 0;
};

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::size_t parse_count(std::string_view field, std::string_view key) {
  if (field.substr(0, key.size()) != key) throw ParseError("expected '" + std::string(key) + "' in header");
  field.remove_prefix(key.size());
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) throw ParseError("bad number in header");
  return value;
}

Header parse_header(const std::vector<std::string>& lines, std::string_view tag) {
  if (lines.empty()) throw ParseError("empty code file");
  std::istringstream in(lines.front());
  std::string t, n, rows, extra;
  if (!(in >> t >> n >> rows) || (in >> extra) || t != tag) {
    throw ParseError("expected header '" + std::string(tag) + " n=<n> rows=<r>'");
  }
  Header h{parse_count(n, "n="), parse_count(rows, "rows=")};
  if (lines.size() != h.rows + 1) {
    throw ParseError("header announces " + std::to_string(h.rows) + " rows, file has " + std::to_string(lines.size() - 1));
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != h.n) throw ParseError("row " + std::to_string(i) + " has wrong length");
  }
  return h;
}

std::string header(std::string_view tag, std::size_t n, std::size_t rows) {
  return std::string(tag) + " n=" + std::to_string(n) + " rows=" + std::to_string(rows) + "\n";
}

}  // namespace

std::string write_code_text(const AdditiveCode& code) {
  std::string out = header("F4", code.length(), code.generators().size());
  for (const auto& g : code.generators()) out += g.to_string() + "\n";
  return out;
}

AdditiveCode read_code_text(std::string_view text) {
  const auto lines = lines_of(text);
  const auto h = parse_header(lines, "F4");
  std::vector<Gf4Vec> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) rows.push_back(Gf4Vec::from_string(lines[i]));
  return AdditiveCode::from_generators(h.n, rows);
}

std::string write_code_text(const BinaryLinearCode& code) {
  std::string out = header("F2", code.length(), code.generators().size());
  for (const auto& g : code.generators()) out += g.to_string() + "\n";
  return out;
}

BinaryLinearCode read_binary_code_text(std::string_view text) {
  const auto lines = lines_of(text);
  const auto h = parse_header(lines, "F2");
  std::vector<BitVec> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) rows.push_back(BitVec::from_string(lines[i]));
  return BinaryLinearCode::from_generators(h.n, rows);
}

std::string write_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph read_edge_list(std::string_view text, std::optional<std::size_t> vertex_count) {
  std::vector<Edge> edges;
  std::size_t max_label = 0;
  std::size_t line_no = 0;
  for (const auto& line : lines_of(text)) {
    ++line_no;
    if (line.front() == '#') continue;
    std::istringstream in(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(in >> u >> v) || (in >> extra) || u < 0 || v < 0) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two vertex labels");
    }
    edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    max_label = std::max({max_label, static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
  }
  const std::size_t n = vertex_count.value_or(edges.empty() ? 0 : max_label + 1);
  return Graph::from_edges(n, edges);
}

std::string write_dot(const Graph& g, std::string_view name) {
  std::string out = "graph " + std::string(name) + " {\n";
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out += "  " + std::to_string(v) + ";\n";
  }
  for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  return out + "}\n";
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace cosetforge::io
