#include "io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "beba/error.hpp"

namespace beba::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <typename T>
std::optional<T> parse_as(std::string_view text) {
  text = trim(text);
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

template <typename T>
T require(std::string_view text, std::string_view what) {
  auto v = parse_as<T>(text);
  if (!v) throw InvalidArgument("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return *v;
}

}  // namespace

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

GraphSource parse_graph_source(std::string_view text) {
  GraphSource src;
  src.text = std::string(text);
  if (text == "karate") {
    src.builtin_karate = true;
    return src;
  }
  const auto parts = split(text, ':');
  const std::string_view kind = parts[0];
  auto take_seed = [&](std::size_t required) {
    if (parts.size() == required + 1) {
      src.seed = require<std::uint64_t>(parts[required], "graph seed");
    } else if (parts.size() != required) {
      throw InvalidArgument("malformed graph spec '" + std::string(text) + "'");
    }
  };
  if (kind == "er" && parts.size() >= 3) {
    src.generator = ErSpec{require<std::size_t>(parts[1], "ER n"), require<double>(parts[2], "ER rho")};
    take_seed(3);
  } else if (kind == "ws" && parts.size() >= 3) {
    src.generator = WsSpec{require<std::size_t>(parts[1], "WS n"), require<std::size_t>(parts[2], "WS K")};
    take_seed(3);
  } else if (kind == "ba" && parts.size() >= 4) {
    src.generator = BaSpec{require<std::size_t>(parts[1], "BA n"), require<std::size_t>(parts[2], "BA M0"),
                           require<std::size_t>(parts[3], "BA M")};
    take_seed(4);
  } else {
    src.path = std::filesystem::path(std::string(text));
  }
  return src;
}

Graph load_graph(const GraphSource& source, std::optional<std::uint64_t> fallback_seed) {
  if (source.builtin_karate) return karate();
  if (source.generator) {
    const auto seed = source.seed ? source.seed : fallback_seed;
    if (!seed) {
      throw InvalidArgument("graph spec '" + source.text + "' needs an explicit seed (append :SEED)");
    }
    return generate(*source.generator, *seed);
  }
  return load_edge_list(*source.path);
}

OpinionSource parse_opinion_source(std::string_view text) {
  OpinionSource src;
  src.text = std::string(text);
  if (text.starts_with("uniform:")) {
    const auto parts = split(text, ':');
    if (parts.size() == 2) {
      src.seed = require<std::uint64_t>(parts[1], "opinion seed");
    } else if (parts.size() == 4 && parts[1] == "batch") {
      src.batch = require<std::size_t>(parts[2], "batch size");
      if (src.batch == 0) throw InvalidArgument("batch size must be positive");
      src.seed = require<std::uint64_t>(parts[3], "opinion seed");
    } else {
      throw InvalidArgument("expected uniform:SEED or uniform:batch:COUNT:SEED, got '" +
                            std::string(text) + "'");
    }
    return src;
  }
  src.path = std::filesystem::path(std::string(text));
  return src;
}

std::vector<std::vector<double>> load_opinions(const OpinionSource& source, std::size_t n) {
  if (source.path) return {read_node_values(*source.path, n, "opinion")};
  if (source.batch == 0) return {sample_opinions(n, *source.seed).vector()};
  std::vector<std::vector<double>> out;
  out.reserve(source.batch);
  for (std::size_t k = 0; k < source.batch; ++k) {
    out.push_back(sample_opinions(n, vector_seed(*source.seed, k)).vector());
  }
  return out;
}

std::vector<double> read_node_values(const std::filesystem::path& path, std::size_t n,
                                     std::string_view what) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + std::string(what) + " file '" + path.string() + "'");
  std::vector<std::optional<double>> values(n);
  std::string raw;
  std::size_t line = 0;
  bool first_data = true;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view row = trim(raw);
    if (row.empty() || row.front() == '#') continue;
    const auto parts = split(row, ',');
    if (parts.size() != 2) throw ParseError(path.string() + ": expected 'node,value'", line);
    const auto node = parse_as<std::size_t>(parts[0]);
    const auto value = parse_as<double>(parts[1]);
    if (!node || !value) {
      if (first_data) {  // header row
        first_data = false;
        continue;
      }
      throw ParseError(path.string() + ": expected 'node,value'", line);
    }
    first_data = false;
    if (*node >= n) {
      throw ParseError(path.string() + ": node " + std::to_string(*node) + " outside the graph", line);
    }
    if (values[*node]) {
      throw ParseError(path.string() + ": node " + std::to_string(*node) + " listed twice", line);
    }
    values[*node] = *value;
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!values[i]) {
      throw ParseError(path.string() + ": missing " + std::string(what) + " for node " + std::to_string(i));
    }
    out[i] = *values[i];
  }
  return out;
}

std::vector<double> scalar_or_file(std::string_view text, std::size_t n, std::string_view what) {
  if (auto v = parse_as<double>(text)) return std::vector<double>(n, *v);
  return read_node_values(std::filesystem::path(std::string(text)), n, what);
}

std::vector<double> parse_colon_numbers(std::string_view text, std::size_t expected,
                                        std::string_view what) {
  const auto parts = split(text, ':');
  if (parts.size() != expected) {
    throw InvalidArgument("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  std::vector<double> out;
  for (auto p : parts) out.push_back(require<double>(p, what));
  return out;
}

std::vector<double> parse_number_list(std::string_view text, std::string_view what) {
  std::vector<double> out;
  for (auto p : split(text, ',')) out.push_back(require<double>(p, what));
  return out;
}

CsvWriter& CsvWriter::row(std::initializer_list<std::string> cells) {
  return row(std::vector<std::string>(cells));
}

CsvWriter& CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
  return *this;
}

std::string cell(double v) { return format_number(v); }
std::string cell(std::optional<double> v) { return v ? format_number(*v) : std::string(); }
std::string cell(std::size_t v) { return std::to_string(v); }

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path.string() + "'");
  out << contents;
  if (!out) throw InvalidArgument("failed writing '" + path.string() + "'");
}

nlohmann::ordered_json graph_summary(const Graph& g, std::string_view source) {
  return {{"source", source}, {"n", g.node_count()}, {"m", g.edge_count()}};
}

namespace {

nlohmann::ordered_json optional_number(std::optional<double> v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

nlohmann::ordered_json to_json(const Outcome& o) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(o.kind);
  j["consensus_value"] = optional_number(o.consensus_value());
  j["mean_polarized_opinion"] = optional_number(o.mean_polarized_opinion());
  j["mean"] = o.mean;
  j["variance"] = o.variance;
  j["iters"] = o.iters;
  j["last_movement"] = o.last_movement;
  j["pattern"] = o.pattern.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(o.pattern);
  j["final_opinions"] = o.final_opinions;
  return j;
}

nlohmann::ordered_json to_json(const BetaPResult& r) {
  nlohmann::ordered_json j;
  j["beta_p"] = optional_number(r.beta_p);
  j["first_polarized"] = optional_number(r.first_polarized);
  j["no_polarization"] = r.no_polarization();
  j["polarized_at_lo"] = r.polarized_at_lo;
  j["scan"] = r.scan;
  j["runs"] = r.runs;
  return j;
}

nlohmann::ordered_json to_json(const BetaPSummary& s) {
  nlohmann::ordered_json j;
  j["finite"] = s.finite;
  j["no_polarization"] = s.no_polarization;
  j["scan_fallbacks"] = s.scan_fallbacks;
  j["mean"] = s.finite ? nlohmann::ordered_json(s.mean) : nlohmann::ordered_json(nullptr);
  j["stddev"] = s.finite ? nlohmann::ordered_json(s.stddev) : nlohmann::ordered_json(nullptr);
  j["min"] = s.finite ? nlohmann::ordered_json(s.min) : nlohmann::ordered_json(nullptr);
  j["max"] = s.finite ? nlohmann::ordered_json(s.max) : nlohmann::ordered_json(nullptr);
  return j;
}

nlohmann::ordered_json to_json(const BetaSummary& s) {
  nlohmann::ordered_json j;
  j["beta"] = s.beta;
  j["consensus"] = s.consensus;
  j["polarized"] = s.polarized;
  j["persistent_disagreement"] = s.persistent_disagreement;
  j["not_converged"] = s.not_converged;
  j["consensus_correlation"] = optional_number(s.consensus_correlation);
  j["polarized_correlation"] = optional_number(s.polarized_correlation);
  return j;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  CsvWriter csv(out);
  csv.row({"t", "node", "opinion"});
  for (const Snapshot& s : traj.snapshots) {
    for (std::size_t i = 0; i < s.values.size(); ++i) {
      csv.row({cell(s.t), cell(i), cell(s.values[i])});
    }
  }
}

nlohmann::ordered_json trajectory_json(const Trajectory& traj) {
  nlohmann::ordered_json snaps = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < traj.snapshots.size(); ++k) {
    snaps.push_back({{"t", traj.snapshots[k].t},
                     {"variance", traj.variances[k]},
                     {"opinions", traj.snapshots[k].values}});
  }
  nlohmann::ordered_json guards = nlohmann::ordered_json::array();
  for (const GuardEvent& e : traj.guard_events) guards.push_back({{"t", e.t}, {"node", e.node}});
  return {{"snapshots", std::move(snaps)}, {"guard_events", std::move(guards)}};
}

}  // namespace beba::cli
