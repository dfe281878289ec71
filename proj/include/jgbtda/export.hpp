#pragma once

// Text renderings of analysis results. Every writer is a pure function of its
// inputs; numbers go through format_real / format_fixed so output bytes are
// stable across runs.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "jgbtda/pipeline.hpp"

namespace jgbtda::exporters {

using nlohmann::ordered_json;
using pipeline::ScoreAnalysis;

// ---------------------------------------------------------------------------
// Scores and nodes

inline std::string score_dump(const notation::Score& score, const network::MusicGraph& graph) {
  std::ostringstream out;
  out << "title: " << (score.title.empty() ? "(untitled)" : score.title) << "\n";
  out << "jeonggan-per-column: " << score.jeonggan_per_column << "\n";
  out << "events: " << score.events.size() << "\n";
  out << "total duration: " << to_string(notation::total_duration(score)) << "\n\n";
  out << "#\tname\tpitch\tlength\tonset\n";
  for (std::size_t i = 0; i < score.events.size(); ++i) {
    const auto& e = score.events[i];
    out << i << "\t" << e.pitch.name() << "\t" << e.pitch.scientific() << "\t" << to_string(e.duration) << "\t"
        << to_string(e.onset) << "\n";
  }
  out << "\nnode\tname\tpitch\tlength\n";
  for (std::size_t v = 0; v < graph.nodes().size(); ++v) {
    const auto& n = graph.nodes()[v];
    out << network::node_label(v) << "\t" << n.pitch.name() << "\t" << n.pitch.scientific() << "\t"
        << to_string(n.length) << "\n";
  }
  return out.str();
}

inline ordered_json node_catalog_json(const network::MusicGraph& graph) {
  auto arr = ordered_json::array();
  for (std::size_t v = 0; v < graph.nodes().size(); ++v) {
    const auto& n = graph.nodes()[v];
    arr.push_back({{"id", v},
                   {"label", network::node_label(v)},
                   {"name", n.pitch.name()},
                   {"pitch", n.pitch.scientific()},
                   {"length", to_string(n.length)}});
  }
  return arr;
}

inline std::string node_catalog_csv(const network::MusicGraph& graph) {
  std::string out = "node,name,pitch,length\n";
  for (std::size_t v = 0; v < graph.nodes().size(); ++v) {
    const auto& n = graph.nodes()[v];
    out += network::node_label(v) + "," + std::string(n.pitch.name()) + "," + std::string(n.pitch.scientific()) + "," +
           to_string(n.length) + "\n";
  }
  return out;
}

inline std::string frequency_csv(const network::FrequencyTable& t) {
  std::string out = "rank,node,count,log10_count\n";
  for (const auto& r : t.rows) {
    out += std::to_string(r.rank) + "," + network::node_label(r.node) + "," + std::to_string(r.count) + "," +
           format_real(std::log10(static_cast<double>(r.count))) + "\n";
  }
  return out;
}

inline ordered_json frequency_json(const network::FrequencyTable& t) {
  auto arr = ordered_json::array();
  for (const auto& r : t.rows) {
    arr.push_back({{"rank", r.rank},
                   {"node", r.node},
                   {"count", r.count},
                   {"log10_count", std::log10(static_cast<double>(r.count))}});
  }
  return arr;
}

inline std::string distance_csv(const network::DissimilarityMatrix& d) {
  std::string out = "node";
  for (std::size_t j = 0; j < d.size(); ++j) out += "," + network::node_label(j);
  out += "\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    out += network::node_label(i);
    for (std::size_t j = 0; j < d.size(); ++j) out += "," + format_real(d.value(i, j));
    out += "\n";
  }
  return out;
}

inline ordered_json distance_json(const network::DissimilarityMatrix& d, network::MetricMode mode) {
  auto values = ordered_json::array();
  auto exact = ordered_json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto row = ordered_json::array();
    auto row_exact = ordered_json::array();
    for (std::size_t j = 0; j < d.size(); ++j) {
      row.push_back(d.value(i, j));
      row_exact.push_back(to_string(d.at(i, j)));
    }
    values.push_back(std::move(row));
    exact.push_back(std::move(row_exact));
  }
  return {{"schema_version", pipeline::kSchemaVersion},
          {"metric_mode", network::to_string(mode)},
          {"size", d.size()},
          {"values", std::move(values)},
          {"exact", std::move(exact)}};
}

// ---------------------------------------------------------------------------
// Barcodes

/// `dim birth death` per interval, `inf` for classes that never die.
inline std::string barcode_text(const homology::PersistenceResult& r) {
  std::string out;
  for (const auto& p : r.barcode())
    out += std::to_string(p.dim) + " " + format_real(p.birth) + " " + format_real(p.death) + "\n";
  return out;
}

inline std::string diagram_csv(const homology::PersistenceResult& r) {
  std::string out = "dim,birth,death\n";
  for (const auto& p : r.barcode())
    out += std::to_string(p.dim) + "," + format_real(p.birth) + "," + format_real(p.death) + "\n";
  return out;
}

inline ordered_json simplex_json(const homology::Simplex& s) {
  auto v = ordered_json::array();
  for (auto x : s.vertex_span()) v.push_back(x);
  return v;
}

inline ordered_json barcode_json(const homology::PersistenceResult& r) {
  auto arr = ordered_json::array();
  for (const auto& p : r.barcode()) {
    ordered_json item{{"dim", p.dim}, {"birth", p.birth}};
    item["death"] = p.essential() ? ordered_json(nullptr) : ordered_json(p.death);
    item["essential"] = p.essential();
    item["persistence"] = p.essential() ? ordered_json(nullptr) : ordered_json(p.persistence());
    if (!p.representative.empty()) {
      auto rep = ordered_json::array();
      for (const auto& s : p.representative) rep.push_back(simplex_json(s));
      item["representative"] = std::move(rep);
    }
    arr.push_back(std::move(item));
  }
  return arr;
}

namespace svg {

inline constexpr double kWidth = 800.0;
inline constexpr double kMarginLeft = 70.0;
inline constexpr double kMarginRight = 30.0;
inline constexpr double kBandHeight = 6.0;
inline constexpr double kBandGap = 3.0;
inline constexpr double kPanelGap = 40.0;
inline constexpr double kAxisHeight = 30.0;
inline constexpr int kTicks = 5;

inline std::string header(double width, double height) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_fixed(width) + "\" height=\"" +
         format_fixed(height) + "\" viewBox=\"0 0 " + format_fixed(width) + " " + format_fixed(height) +
         "\" font-family=\"sans-serif\" font-size=\"11\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

inline std::string rect(double x, double y, double w, double h, std::string_view fill) {
  return "<rect x=\"" + format_fixed(x) + "\" y=\"" + format_fixed(y) + "\" width=\"" + format_fixed(w) +
         "\" height=\"" + format_fixed(h) + "\" fill=\"" + std::string(fill) + "\"/>\n";
}

inline std::string line(double x1, double y1, double x2, double y2) {
  return "<line x1=\"" + format_fixed(x1) + "\" y1=\"" + format_fixed(y1) + "\" x2=\"" + format_fixed(x2) +
         "\" y2=\"" + format_fixed(y2) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
}

inline std::string text(double x, double y, const std::string& s, std::string_view anchor = "start") {
  return "<text x=\"" + format_fixed(x) + "\" y=\"" + format_fixed(y) + "\" text-anchor=\"" + std::string(anchor) +
         "\">" + s + "</text>\n";
}

}  // namespace svg

/// One panel per reported dimension, one band per interval, tau on the x axis.
inline std::string barcode_svg(const homology::PersistenceResult& r) {
  auto bars = r.barcode();
  double tau_max = 0.0;
  for (const auto& p : bars) {
    tau_max = std::max(tau_max, p.birth);
    if (!p.essential()) tau_max = std::max(tau_max, p.death);
  }
  if (tau_max <= 0.0) tau_max = 1.0;
  tau_max *= 1.1;  // room for essential bars
  const double plot_width = svg::kWidth - svg::kMarginLeft - svg::kMarginRight;
  auto x_of = [&](double tau) { return svg::kMarginLeft + plot_width * std::min(tau, tau_max) / tau_max; };

  std::string body;
  double y = 20.0;
  for (int dim = 0; dim <= r.top_reported_dim(); ++dim) {
    std::vector<const homology::PersistenceInterval*> panel;
    for (const auto& p : bars)
      if (p.dim == dim) panel.push_back(&p);
    body += svg::text(10.0, y + 12.0, "H" + std::to_string(dim));
    y += 18.0;
    for (const auto* p : panel) {
      double x1 = x_of(p->birth);
      double x2 = p->essential() ? x_of(tau_max) : x_of(p->death);
      body += svg::rect(x1, y, std::max(x2 - x1, 1.0), svg::kBandHeight, p->essential() ? "#b03030" : "#2050a0");
      y += svg::kBandHeight + svg::kBandGap;
    }
    if (panel.empty()) y += svg::kBandHeight + svg::kBandGap;
    y += svg::kPanelGap / 2;
  }
  const double axis_y = y;
  body += svg::line(svg::kMarginLeft, axis_y, svg::kMarginLeft + plot_width, axis_y);
  for (int t = 0; t <= svg::kTicks; ++t) {
    double tau = tau_max * t / svg::kTicks;
    double x = x_of(tau);
    body += svg::line(x, axis_y, x, axis_y + 4.0);
    body += svg::text(x, axis_y + 16.0, format_fixed(tau), "middle");
  }
  body += svg::text(svg::kMarginLeft + plot_width / 2, axis_y + svg::kAxisHeight, "tau", "middle");
  return svg::header(svg::kWidth, axis_y + svg::kAxisHeight + 10.0) + body + "</svg>\n";
}

// ---------------------------------------------------------------------------
// Cycles, occurrences, overlap

inline ordered_json node_ref_json(const network::MusicGraph& graph, network::NodeId v) {
  ordered_json j{{"id", v}, {"label", network::node_label(v)}};
  if (v < graph.nodes().size()) {
    const auto& n = graph.nodes()[v];
    j["name"] = n.pitch.name();
    j["pitch"] = n.pitch.scientific();
    j["length"] = to_string(n.length);
  }
  return j;
}

inline ordered_json cycles_json(const std::vector<cycles::Cycle>& list, const network::MusicGraph& graph) {
  auto arr = ordered_json::array();
  for (const auto& c : list) {
    auto loop = ordered_json::array();
    for (auto v : c.node_loop) loop.push_back(node_ref_json(graph, v));
    auto edges = ordered_json::array();
    for (const auto& e : c.edges) {
      ordered_json item{{"from", e.a}, {"to", e.b}, {"weight", e.weight}};
      item["inverse_weight"] = e.weight > 0 ? ordered_json(1.0 / e.weight) : ordered_json(nullptr);
      item["distance"] = to_double(e.distance);
      item["distance_exact"] = to_string(e.distance);
      edges.push_back(std::move(item));
    }
    ordered_json item{{"number", c.number}, {"birth", c.birth}};
    item["death"] = std::isinf(c.death) ? ordered_json(nullptr) : ordered_json(c.death);
    item["node_count"] = c.node_count;
    item["average_weight"] = c.average_weight;
    item["node_loop"] = std::move(loop);
    item["edges"] = std::move(edges);
    auto discarded = ordered_json::array();
    for (const auto& d : c.discarded_loops) discarded.push_back(d);
    item["discarded_loops"] = std::move(discarded);
    arr.push_back(std::move(item));
  }
  return arr;
}

inline ordered_json cycle_summary_json(const std::vector<cycles::Cycle>& list) {
  if (list.empty()) return {{"cycle_count", 0}, {"average_node_number", nullptr}, {"average_weight", nullptr}};
  auto s = cycles::summarize_cycles(list);
  return {{"cycle_count", s.cycle_count},
          {"average_node_number", s.average_node_number},
          {"average_weight", s.average_weight}};
}

inline std::string occurrences_csv(const std::vector<overlap::OccurrenceEvent>& events) {
  std::string out = "cycle,start,length,kind\n";
  for (const auto& e : events) {
    out += std::to_string(e.cycle_number) + "," + std::to_string(e.start_position) + "," + std::to_string(e.length) +
           "," + std::string(overlap::to_string(e.kind)) + "\n";
  }
  return out;
}

inline ordered_json occurrences_json(const std::vector<overlap::OccurrenceEvent>& events) {
  auto arr = ordered_json::array();
  for (const auto& e : events) {
    arr.push_back({{"cycle", e.cycle_number},
                   {"start", e.start_position},
                   {"length", e.length},
                   {"kind", overlap::to_string(e.kind)}});
  }
  return arr;
}

/// Cycle rows against time; `blocks` are (row, first, last) position ranges.
inline std::string strip_chart_svg(std::size_t rows, std::size_t positions,
                                   const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>& blocks,
                                   std::string_view fill) {
  constexpr double kRowHeight = 14.0;
  const double plot_width = svg::kWidth - svg::kMarginLeft - svg::kMarginRight;
  const double unit = positions == 0 ? 0.0 : plot_width / static_cast<double>(positions);
  const double top = 10.0;
  std::string body;
  for (std::size_t r = 0; r < rows; ++r)
    body += svg::text(10.0, top + kRowHeight * static_cast<double>(r) + 10.0, "Cycle " + std::to_string(r + 1));
  for (const auto& [row, first, last] : blocks) {
    body += svg::rect(svg::kMarginLeft + unit * static_cast<double>(first),
                      top + kRowHeight * static_cast<double>(row) + 2.0,
                      unit * static_cast<double>(last - first + 1), kRowHeight - 4.0, fill);
  }
  const double axis_y = top + kRowHeight * static_cast<double>(rows) + 4.0;
  body += svg::line(svg::kMarginLeft, axis_y, svg::kMarginLeft + plot_width, axis_y);
  for (int t = 0; t <= svg::kTicks; ++t) {
    double pos = static_cast<double>(positions) * t / svg::kTicks;
    double x = svg::kMarginLeft + unit * pos;
    body += svg::line(x, axis_y, x, axis_y + 4.0);
    body += svg::text(x, axis_y + 16.0, std::to_string(static_cast<long long>(std::lround(pos))), "middle");
  }
  body += svg::text(svg::kMarginLeft + plot_width / 2, axis_y + svg::kAxisHeight, "note position", "middle");
  return svg::header(svg::kWidth, axis_y + svg::kAxisHeight + 10.0) + body + "</svg>\n";
}

inline std::string timeline_svg(const std::vector<overlap::OccurrenceEvent>& events, std::size_t cycle_count,
                                std::size_t positions) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> blocks;
  for (const auto& e : events)
    blocks.emplace_back(static_cast<std::size_t>(e.cycle_number - 1), e.start_position,
                        e.start_position + e.length - 1);
  return strip_chart_svg(cycle_count, positions, blocks, "#2050a0");
}

inline std::string overlap_svg(const overlap::OverlapMatrix& m) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& run : m.runs(i)) blocks.emplace_back(i, run.first, run.last);
  return strip_chart_svg(m.rows(), m.cols(), blocks, "#208040");
}

inline std::string overlap_csv(const overlap::OverlapMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ",";
      out += m.at(i, j) ? "1" : "0";
    }
    out += "\n";
  }
  return out;
}

inline ordered_json overlap_stats_json(const overlap::OverlapMatrix& m, const overlap::OverlapStats& st,
                                       overlap::SimultaneityMode mode) {
  using overlap::SimultaneityMode;
  return {{"schema_version", pipeline::kSchemaVersion},
          {"scale", m.scale()},
          {"rows", m.rows()},
          {"cols", m.cols()},
          {"A_c", st.occupied_area},
          {"A_f", st.full_area},
          {"denseness", st.denseness},
          {"N_c", st.run_count},
          {"N_s", {{"run-pairs", st.simultaneous_run_pairs}, {"column-intervals", st.simultaneous_column_intervals}}},
          {"overlap_percent",
           {{"run-pairs", st.overlap_percent(SimultaneityMode::RunPairs)},
            {"column-intervals", st.overlap_percent(SimultaneityMode::ColumnIntervals)}}},
          {"ns_mode", overlap::to_string(mode)}};
}

// ---------------------------------------------------------------------------
// Comparison table

inline std::vector<std::string> comparison_cells(const pipeline::ComparisonRow& r) {
  return {r.piece,
          std::to_string(r.cycle_count),
          format_real(r.average_node_number),
          format_real(r.average_weight),
          format_real(r.occurrence_per_cycle),
          format_real(r.denseness),
          format_real(r.overlap_percent)};
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string comparison_csv(const std::vector<pipeline::ComparisonRow>& rows) {
  std::string out;
  const auto& header = pipeline::comparison_header();
  for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + csv_escape(header[i]);
  out += "\n";
  for (const auto& r : rows) {
    auto cells = comparison_cells(r);
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_escape(cells[i]);
    out += "\n";
  }
  return out;
}

inline std::string comparison_text(const std::vector<pipeline::ComparisonRow>& rows) {
  std::vector<std::vector<std::string>> table{pipeline::comparison_header()};
  for (const auto& r : rows) table.push_back(comparison_cells(r));
  std::vector<std::size_t> width(table.front().size(), 0);
  for (const auto& row : table)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::string out;
  for (const auto& row : table) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) line += "  ";
      if (i == 0) {
        line += row[i] + std::string(width[i] - row[i].size(), ' ');
      } else {
        line += std::string(width[i] - row[i].size(), ' ') + row[i];
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

inline ordered_json comparison_json(const pipeline::ComparisonRow& r) {
  return {{"piece", r.piece},
          {"# of cycles", r.cycle_count},
          {"Average node #", r.average_node_number},
          {"Average weight", r.average_weight},
          {"Occurrence/Cycle", r.occurrence_per_cycle},
          {"Denseness", r.denseness},
          {"Overlap (%)", r.overlap_percent}};
}

// ---------------------------------------------------------------------------
// Whole reports

inline ordered_json score_report_json(const ScoreAnalysis& a, const pipeline::AnalysisConfig& config) {
  ordered_json j;
  j["schema_version"] = pipeline::kSchemaVersion;
  j["kind"] = "score";
  j["config"] = config.to_json();
  j["score"] = {{"piece", a.piece},
                {"title", a.score.title},
                {"jeonggan_per_column", a.score.jeonggan_per_column},
                {"event_count", a.score.events.size()},
                {"total_duration", to_string(notation::total_duration(a.score))}};
  j["nodes"] = node_catalog_json(a.graph);
  auto edges = ordered_json::array();
  for (const auto& e : a.graph.edges()) edges.push_back({{"a", e.a}, {"b", e.b}, {"weight", e.weight}});
  j["edges"] = std::move(edges);
  j["node_sequence"] = a.graph.sequence();
  j["frequency"] = frequency_json(a.frequencies);
  j["distances"] = distance_json(a.distances, config.metric_mode);
  j["persistence"] = {{"max_dim", a.persistence.max_dim},
                      {"max_filtration", config.to_json()["max_filtration"]},
                      {"simplex_counts", a.simplex_counts},
                      {"barcode", barcode_json(a.persistence)}};
  j["cycles"] = cycles_json(a.cycles, a.graph);
  j["cycle_summary"] = cycle_summary_json(a.cycles);
  auto per_node = ordered_json::array();
  for (std::size_t v = 0; v < a.cycles_per_node.size(); ++v)
    per_node.push_back({{"node", v}, {"count", a.cycles_per_node[v].size()}, {"cycles", a.cycles_per_node[v]}});
  j["cycles_per_node"] = std::move(per_node);
  j["occurrences"] = occurrences_json(a.occurrences);
  auto rows = ordered_json::array();
  for (std::size_t i = 0; i < a.overlap.rows(); ++i) {
    std::string row;
    for (std::size_t c = 0; c < a.overlap.cols(); ++c) row += a.overlap.at(i, c) ? '1' : '0';
    rows.push_back(std::move(row));
  }
  j["overlap"] = {{"matrix", std::move(rows)}, {"stats", overlap_stats_json(a.overlap, a.overlap_stats, config.ns_mode)}};
  j["comparison"] = comparison_json(a.comparison);
  return j;
}

inline ordered_json matrix_report_json(const pipeline::MatrixAnalysis& a, const pipeline::AnalysisConfig& config) {
  ordered_json j;
  j["schema_version"] = pipeline::kSchemaVersion;
  j["kind"] = "matrix";
  j["config"] = config.to_json();
  j["matrix"] = {{"piece", a.piece}, {"size", a.table.size()}};
  j["persistence"] = {{"max_dim", a.persistence.max_dim},
                      {"max_filtration", config.to_json()["max_filtration"]},
                      {"simplex_counts", a.simplex_counts},
                      {"barcode", barcode_json(a.persistence)}};
  return j;
}

/// Output file name -> contents, for the formats selected in `config`.
using FileSet = std::vector<std::pair<std::string, std::string>>;

inline bool wants(const pipeline::AnalysisConfig& c, pipeline::Format f) { return c.formats.contains(f); }

inline FileSet score_files(const ScoreAnalysis& a, const pipeline::AnalysisConfig& config) {
  using pipeline::Format;
  FileSet files;
  if (wants(config, Format::Json)) {
    files.emplace_back("report.json", score_report_json(a, config).dump(2) + "\n");
    files.emplace_back("config.json", config.to_json().dump(2) + "\n");
    files.emplace_back("nodes.json", node_catalog_json(a.graph).dump(2) + "\n");
    files.emplace_back("distance.json", distance_json(a.distances, config.metric_mode).dump(2) + "\n");
    files.emplace_back("cycles.json", cycles_json(a.cycles, a.graph).dump(2) + "\n");
    files.emplace_back("overlap_stats.json",
                       overlap_stats_json(a.overlap, a.overlap_stats, config.ns_mode).dump(2) + "\n");
  }
  if (wants(config, Format::Csv)) {
    files.emplace_back("nodes.csv", node_catalog_csv(a.graph));
    files.emplace_back("frequency.csv", frequency_csv(a.frequencies));
    files.emplace_back("distance.csv", distance_csv(a.distances));
    files.emplace_back("diagram.csv", diagram_csv(a.persistence));
    files.emplace_back("occurrences.csv", occurrences_csv(a.occurrences));
    files.emplace_back("overlap.csv", overlap_csv(a.overlap));
    files.emplace_back("comparison.csv", comparison_csv({a.comparison}));
  }
  if (wants(config, Format::Svg)) {
    files.emplace_back("barcode.svg", barcode_svg(a.persistence));
    files.emplace_back("timeline.svg", timeline_svg(a.occurrences, a.cycles.size(), a.graph.sequence().size()));
    files.emplace_back("overlap.svg", overlap_svg(a.overlap));
  }
  if (wants(config, Format::Text)) {
    files.emplace_back("barcode.txt", barcode_text(a.persistence));
    files.emplace_back("score.txt", score_dump(a.score, a.graph));
    files.emplace_back("comparison.txt", comparison_text({a.comparison}));
  }
  return files;
}

inline FileSet matrix_files(const pipeline::MatrixAnalysis& a, const pipeline::AnalysisConfig& config) {
  using pipeline::Format;
  FileSet files;
  if (wants(config, Format::Json)) {
    files.emplace_back("report.json", matrix_report_json(a, config).dump(2) + "\n");
    files.emplace_back("config.json", config.to_json().dump(2) + "\n");
  }
  if (wants(config, Format::Csv)) files.emplace_back("diagram.csv", diagram_csv(a.persistence));
  if (wants(config, Format::Svg)) files.emplace_back("barcode.svg", barcode_svg(a.persistence));
  if (wants(config, Format::Text)) files.emplace_back("barcode.txt", barcode_text(a.persistence));
  return files;
}

inline std::vector<std::filesystem::path> write_files(const FileSet& files, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const auto& [name, contents] : files) {
    auto path = dir / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << contents;
    written.push_back(path);
  }
  return written;
}

}  // namespace jgbtda::exporters
