#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "jgbtda/cycles.hpp"
#include "jgbtda/error.hpp"
#include "jgbtda/homology.hpp"
#include "jgbtda/network.hpp"
#include "jgbtda/notation.hpp"
#include "jgbtda/overlap.hpp"

namespace jgbtda::pipeline {

inline constexpr int kSchemaVersion = 1;

enum class Format { Json, Csv, Svg, Text };

inline std::string_view to_string(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Svg: return "svg";
    case Format::Text: return "text";
  }
  return "?";
}

inline Format format_from_string(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "svg") return Format::Svg;
  if (s == "text") return Format::Text;
  throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

struct AnalysisConfig {
  network::MetricMode metric_mode = network::MetricMode::MinHop;
  int max_dim = 3;
  double max_filtration = 2.0;
  int overlap_scale = 4;
  Duration ingeojil_short = notation::kDefaultIngeojilShort;
  overlap::SimultaneityMode ns_mode = overlap::SimultaneityMode::RunPairs;
  overlap::MatchMode match_mode = overlap::MatchMode::Strict;
  std::string output_dir = "jgbtda-out";
  std::set<Format> formats{Format::Json, Format::Csv, Format::Svg, Format::Text};

  void validate() const {
    if (max_dim < 0 || max_dim > homology::kMaxDimension) throw std::invalid_argument("max_dim must be in [0, 3]");
    if (!(max_filtration > 0)) throw std::invalid_argument("max_filtration must be positive");
    if (overlap_scale < 1) throw std::invalid_argument("overlap scale must be at least 1");
    if (ingeojil_short <= 0) throw std::invalid_argument("ingeojil short note must be positive");
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["metric_mode"] = network::to_string(metric_mode);
    j["max_dim"] = max_dim;
    if (std::isinf(max_filtration)) {
      j["max_filtration"] = "inf";
    } else {
      j["max_filtration"] = max_filtration;
    }
    j["overlap_scale"] = overlap_scale;
    j["ingeojil_short"] = jgbtda::to_string(ingeojil_short);
    j["ns_mode"] = overlap::to_string(ns_mode);
    j["match_mode"] = match_mode == overlap::MatchMode::Strict ? "strict" : "loose";
    auto fmts = nlohmann::ordered_json::array();
    for (auto f : formats) fmts.push_back(to_string(f));
    j["formats"] = fmts;
    return j;
  }

  /// Keys absent from `j` keep their current values; unknown keys are rejected.
  void merge_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (key == "metric_mode") {
        metric_mode = network::metric_mode_from_string(value.get<std::string>());
      } else if (key == "max_dim") {
        max_dim = value.get<int>();
      } else if (key == "max_filtration") {
        max_filtration = value.is_string() && value.get<std::string>() == "inf" ? homology::kInfinity
                                                                                 : value.get<double>();
      } else if (key == "overlap_scale") {
        overlap_scale = value.get<int>();
      } else if (key == "ingeojil_short") {
        ingeojil_short = parse_duration(value.get<std::string>());
      } else if (key == "ns_mode") {
        ns_mode = overlap::simultaneity_mode_from_string(value.get<std::string>());
      } else if (key == "match_mode") {
        auto m = value.get<std::string>();
        if (m != "strict" && m != "loose") throw std::invalid_argument("match_mode must be strict or loose");
        match_mode = m == "strict" ? overlap::MatchMode::Strict : overlap::MatchMode::Loose;
      } else if (key == "output_dir") {
        output_dir = value.get<std::string>();
      } else if (key == "formats") {
        formats.clear();
        for (const auto& f : value) formats.insert(format_from_string(f.get<std::string>()));
      } else if (key != "schema_version") {
        throw std::invalid_argument("unknown config key '" + key + "'");
      }
    }
    validate();
  }

  static AnalysisConfig from_json(const nlohmann::json& j) {
    AnalysisConfig c;
    c.merge_json(j);
    return c;
  }
};

/// One row of the cross-piece comparison table.
struct ComparisonRow {
  std::string piece;
  std::size_t cycle_count = 0;
  double average_node_number = 0.0;
  double average_weight = 0.0;
  double occurrence_per_cycle = 0.0;
  double denseness = 0.0;
  double overlap_percent = 0.0;
};

inline const std::vector<std::string>& comparison_header() {
  static const std::vector<std::string> header{"Piece",           "# of cycles", "Average node #", "Average weight",
                                               "Occurrence/Cycle", "Denseness",   "Overlap (%)"};
  return header;
}

struct ScoreAnalysis {
  std::string piece;
  notation::Score score;
  network::MusicGraph graph;
  network::DissimilarityMatrix distances;
  network::FrequencyTable frequencies;
  std::vector<std::size_t> simplex_counts;  // per dimension
  homology::PersistenceResult persistence;
  std::vector<cycles::Cycle> cycles;
  std::vector<std::vector<int>> cycles_per_node;
  std::vector<overlap::OccurrenceEvent> occurrences;
  overlap::OverlapMatrix overlap;
  overlap::OverlapStats overlap_stats;
  ComparisonRow comparison;
};

struct MatrixAnalysis {
  std::string piece;
  homology::DistanceTable table;
  std::vector<std::size_t> simplex_counts;
  homology::PersistenceResult persistence;
};

inline std::vector<std::size_t> simplex_counts(const homology::Filtration& f) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(f.max_dim + 1), 0);
  for (const auto& s : f.simplices) ++counts[static_cast<std::size_t>(s.dim)];
  return counts;
}

inline ComparisonRow comparison_row(const std::string& piece, std::span<const cycles::Cycle> cycle_list,
                                    std::size_t occurrence_count, const overlap::OverlapStats& stats,
                                    overlap::SimultaneityMode mode) {
  ComparisonRow row;
  row.piece = piece;
  row.cycle_count = cycle_list.size();
  if (!cycle_list.empty()) {
    auto summary = cycles::summarize_cycles(cycle_list);
    row.average_node_number = summary.average_node_number;
    row.average_weight = summary.average_weight;
    row.occurrence_per_cycle = static_cast<double>(occurrence_count) / static_cast<double>(cycle_list.size());
  }
  row.denseness = stats.denseness;
  row.overlap_percent = stats.overlap_percent(mode);
  return row;
}

/// parse -> network -> distances -> persistence -> cycles -> overlap.
inline ScoreAnalysis analyze_score(const notation::Score& score, const AnalysisConfig& config, std::string piece) {
  config.validate();
  ScoreAnalysis a;
  a.piece = piece.empty() ? score.title : std::move(piece);
  a.score = score;
  a.graph = network::build_network(score);
  a.distances = network::distance_matrix(a.graph, config.metric_mode);
  a.frequencies = network::frequency_table(a.graph);

  auto filtration = homology::build_filtration(homology::DistanceTable(a.distances.size(), a.distances.to_doubles()),
                                               config.max_dim, config.max_filtration);
  a.simplex_counts = simplex_counts(filtration);
  a.persistence = homology::compute_persistence(filtration);

  auto h1 = a.persistence.barcode(1);
  a.cycles = cycles::extract_cycles(h1, a.graph, a.distances);
  a.cycles_per_node = network::cycles_per_node(a.graph, a.cycles);
  a.occurrences = overlap::occurrence_timeline(a.cycles, a.graph.sequence(), config.match_mode);
  a.overlap = overlap::overlap_matrix(a.cycles, a.graph.sequence(), config.overlap_scale);
  a.overlap_stats = overlap::overlap_stats(a.overlap);
  a.comparison = comparison_row(a.piece, a.cycles, a.occurrences.size(), a.overlap_stats, config.ns_mode);
  return a;
}

inline MatrixAnalysis analyze_matrix(const homology::DistanceTable& table, const AnalysisConfig& config,
                                     std::string piece) {
  config.validate();
  MatrixAnalysis a;
  a.piece = std::move(piece);
  a.table = table;
  auto filtration = homology::build_filtration(table, config.max_dim, config.max_filtration);
  a.simplex_counts = simplex_counts(filtration);
  a.persistence = homology::compute_persistence(filtration);
  return a;
}

/// Comma- or whitespace-separated square matrix; '#' starts a comment line.
inline homology::DistanceTable read_matrix(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    for (char& ch : line)
      if (ch == ',' || ch == ';' || ch == '\t' || ch == '\r') ch = ' ';
    std::istringstream cells(line);
    std::vector<double> row;
    std::string cell;
    while (cells >> cell) {
      double v = 0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw ParseError(ParseError::Kind::Syntax, line_no, 1, "bad matrix entry '" + cell + "'");
      }
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  std::vector<double> values;
  values.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw ParseError(ParseError::Kind::Syntax, 0, 0, "matrix is not square");
    values.insert(values.end(), r.begin(), r.end());
  }
  return homology::DistanceTable(n, std::move(values));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace jgbtda::pipeline
