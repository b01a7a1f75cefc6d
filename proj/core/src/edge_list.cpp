#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <utility>

#include "beba/error.hpp"
#include "beba/graph.hpp"

namespace beba {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

NodeId parse_id(std::string_view tok, std::size_t line) {
  NodeId value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("invalid node id '" + std::string(tok) + "'", line);
  }
  return value;
}

double parse_weight(std::string_view tok, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("invalid weight '" + std::string(tok) + "'", line);
  }
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ParseError("edge weight must be positive, got '" + std::string(tok) + "'", line);
  }
  return value;
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::set<std::pair<NodeId, NodeId>> seen;
  NodeId max_id = 0;
  std::string raw;
  std::size_t line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;

    const auto tokens = split_ws(line);
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError("expected 'u v' or 'u v w'", line_no);
    }
    NodeId u = parse_id(tokens[0], line_no);
    NodeId v = parse_id(tokens[1], line_no);
    const double w = tokens.size() == 3 ? parse_weight(tokens[2], line_no) : 1.0;
    if (u == v) throw ParseError("self-loop on node " + std::to_string(u), line_no);
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) {
      throw ParseError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")", line_no);
    }
    max_id = std::max(max_id, v);
    edges.push_back({u, v, w});
  }

  if (edges.empty()) throw ParseError("edge list contains no edges");
  Graph g(max_id + 1, std::move(edges));
  if (!g.is_connected()) {
    throw ParseError("graph is disconnected (node ids must be dense 0.." + std::to_string(max_id) +
                     " and form one component)");
  }
  return g;
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge list '" + path.string() + "'");
  try {
    return parse_edge_list(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g, std::span<const std::string_view> header) {
  for (std::string_view line : header) out << "# " << line << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (e.weight != 1.0) out << ' ' << format_double(e.weight);
    out << '\n';
  }
}

void save_edge_list(const std::filesystem::path& path, const Graph& g,
                    std::span<const std::string_view> header) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path.string() + "'");
  write_edge_list(out, g, header);
  if (!out) throw InvalidArgument("failed writing '" + path.string() + "'");
}

}  // namespace beba
