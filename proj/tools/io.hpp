#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "beba/analysis.hpp"
#include "beba/graph.hpp"
#include "beba/models.hpp"
#include "json.hpp"

namespace beba::cli {

inline constexpr std::string_view kToolName = "beba";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Shortest decimal that round-trips to the same double.
std::string format_number(double v);

/// Where a graph comes from: an edge-list path, the built-in karate club, or
/// a generator spec "er:N:RHO[:SEED]", "ws:N:K[:SEED]", "ba:N:M0:M[:SEED]".
struct GraphSource {
  std::string text;
  std::optional<std::filesystem::path> path;
  bool builtin_karate = false;
  std::optional<GeneratorSpec> generator;
  std::optional<std::uint64_t> seed;
};

GraphSource parse_graph_source(std::string_view text);

/// Materializes the source. Generator specs need an explicit seed unless
/// `fallback_seed` is given.
Graph load_graph(const GraphSource& source, std::optional<std::uint64_t> fallback_seed = std::nullopt);

/// Opinion input: a "node,opinion" CSV file, "uniform:SEED", or
/// "uniform:batch:COUNT:SEED".
struct OpinionSource {
  std::string text;
  std::optional<std::filesystem::path> path;
  std::optional<std::uint64_t> seed;
  std::size_t batch = 0;  // 0 = single vector
};

OpinionSource parse_opinion_source(std::string_view text);

/// Raw values for every vector described by `source` on an n-node graph.
/// Synthesized vectors are uniform on [-1, 1]; batch vector k uses
/// vector_seed(seed, k).
std::vector<std::vector<double>> load_opinions(const OpinionSource& source, std::size_t n);

/// Reads a "node,value" CSV with one row per node 0..n-1 (optional header).
std::vector<double> read_node_values(const std::filesystem::path& path, std::size_t n,
                                     std::string_view what);

/// A scalar given on the command line or a per-node "node,value" file.
std::vector<double> scalar_or_file(std::string_view text, std::size_t n, std::string_view what);

/// Parses "lo:hi" or "lo:hi:step".
std::vector<double> parse_colon_numbers(std::string_view text, std::size_t expected,
                                        std::string_view what);
std::vector<double> parse_number_list(std::string_view text, std::string_view what);

/// Minimal CSV writer; the caller provides the header first.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  CsvWriter& row(std::initializer_list<std::string> cells);
  CsvWriter& row(const std::vector<std::string>& cells);

 private:
  std::ostream& out_;
};

std::string cell(double v);
std::string cell(std::optional<double> v);
std::string cell(std::size_t v);

void write_text_file(const std::filesystem::path& path, std::string_view contents);

nlohmann::ordered_json graph_summary(const Graph& g, std::string_view source);
nlohmann::ordered_json to_json(const Outcome& outcome);
nlohmann::ordered_json to_json(const BetaPResult& result);
nlohmann::ordered_json to_json(const BetaPSummary& summary);
nlohmann::ordered_json to_json(const BetaSummary& summary);

/// Trajectory as long-format CSV "t,node,opinion".
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
nlohmann::ordered_json trajectory_json(const Trajectory& traj);

}  // namespace beba::cli
