#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jgbtda/export.hpp"
#include "jgbtda/pipeline.hpp"

namespace jgbtda::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kParseFailure = 2, kAnalysisFailure = 3 };

namespace detail {

/// Values of the shared analysis flags; applied only when given on the command line.
struct ConfigFlags {
  std::string config_path;
  std::string metric;
  int max_dim = 3;
  double max_filtration = 2.0;
  int scale = 4;
  std::string ingeojil;
  std::string ns_mode;
  bool loose = false;
  std::string out_dir;
  std::vector<std::string> formats;

  CLI::Option* metric_opt = nullptr;
  CLI::Option* max_dim_opt = nullptr;
  CLI::Option* max_filtration_opt = nullptr;
  CLI::Option* scale_opt = nullptr;
  CLI::Option* ingeojil_opt = nullptr;
  CLI::Option* ns_opt = nullptr;
  CLI::Option* loose_opt = nullptr;
  CLI::Option* out_opt = nullptr;
  CLI::Option* formats_opt = nullptr;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "JSON analysis config")->check(CLI::ExistingFile);
    metric_opt = app->add_option("--metric", metric, "path metric: min-hop or min-cost")
                     ->check(CLI::IsMember({"min-hop", "min-cost"}));
    max_dim_opt = app->add_option("--max-dim", max_dim, "largest simplex dimension (0-3)")->check(CLI::Range(0, 3));
    max_filtration_opt = app->add_option("--max-filtration", max_filtration, "filtration cap");
    scale_opt = app->add_option("--s", scale, "overlap matrix scale s")->check(CLI::PositiveNumber);
    ingeojil_opt = app->add_option("--ingeojil", ingeojil, "ingeojil short-note length, e.g. 1/6");
    ns_opt = app->add_option("--ns-mode", ns_mode, "simultaneity count: run-pairs or column-intervals")
                 ->check(CLI::IsMember({"run-pairs", "column-intervals"}));
    loose_opt = app->add_flag("--loose", loose, "also report node-set occurrences in any order");
    out_opt = app->add_option("--out", out_dir, "output directory");
    formats_opt = app->add_option("--formats", formats, "subset of json,csv,svg,text")->delimiter(',');
  }

  pipeline::AnalysisConfig resolve() const {
    pipeline::AnalysisConfig c;
    if (!config_path.empty()) c.merge_json(nlohmann::json::parse(pipeline::read_file(config_path)));
    if (metric_opt->count()) c.metric_mode = network::metric_mode_from_string(metric);
    if (max_dim_opt->count()) c.max_dim = max_dim;
    if (max_filtration_opt->count()) c.max_filtration = max_filtration;
    if (scale_opt->count()) c.overlap_scale = scale;
    if (ingeojil_opt->count()) c.ingeojil_short = parse_duration(ingeojil);
    if (ns_opt->count()) c.ns_mode = overlap::simultaneity_mode_from_string(ns_mode);
    if (loose_opt->count()) c.match_mode = overlap::MatchMode::Loose;
    if (out_opt->count()) c.output_dir = out_dir;
    if (formats_opt->count()) {
      c.formats.clear();
      for (const auto& f : formats) c.formats.insert(pipeline::format_from_string(f));
    }
    c.validate();
    return c;
  }
};

inline bool looks_like_matrix(const std::string& path) {
  auto ext = std::filesystem::path(path).extension().string();
  return ext == ".dist" || ext == ".csv";
}

inline std::string piece_name(const notation::Score& score, const std::string& path) {
  return score.title.empty() ? std::filesystem::path(path).stem().string() : score.title;
}

/// Runs `body`, mapping exceptions onto exit codes with a message on `err`.
template <class Body>
int guarded(std::ostream& err, const std::string& context, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << context << ": " << e.what() << "\n";
    return kParseFailure;
  } catch (const AnalysisError& e) {
    err << "error: " << context << ": " << e.what() << "\n";
    return kAnalysisFailure;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << context << ": bad config: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << context << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << context << ": " << e.what() << "\n";
    return kAnalysisFailure;
  }
}

inline notation::Score load_score(const std::string& path, const pipeline::AnalysisConfig& config) {
  std::string text;
  try {
    text = pipeline::read_file(path);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(e.what());
  }
  return notation::parse_score(text, {config.ingeojil_short});
}

inline homology::DistanceTable load_matrix(const std::string& path) {
  std::string text;
  try {
    text = pipeline::read_file(path);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(e.what());
  }
  return pipeline::read_matrix(text);
}

}  // namespace detail

/// Entry point of the `jgbtda` command. Returns the process exit status.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Persistent-homology analysis of Jeongganbo scores", "jgbtda"};
  app.require_subcommand(1);

  std::string parse_input, parse_ingeojil;
  auto* parse_cmd = app.add_subcommand("parse", "print the resolved note events and node catalog");
  parse_cmd->add_option("file", parse_input, "JGB-v1 score")->required();
  auto* parse_ingeojil_opt = parse_cmd->add_option("--ingeojil", parse_ingeojil, "ingeojil short-note length");

  std::string analyze_input;
  bool analyze_matrix = false;
  detail::ConfigFlags analyze_flags;
  auto* analyze_cmd = app.add_subcommand("analyze", "run the whole pipeline and write every report");
  analyze_cmd->add_option("file", analyze_input, "JGB-v1 score, or a matrix with --matrix")->required();
  analyze_cmd->add_flag("--matrix", analyze_matrix, "input is a CSV dissimilarity matrix");
  analyze_flags.attach(analyze_cmd);

  std::vector<std::string> compare_inputs;
  bool compare_csv = false;
  detail::ConfigFlags compare_flags;
  auto* compare_cmd = app.add_subcommand("compare", "one comparison row per piece");
  compare_cmd->add_option("files", compare_inputs, "JGB-v1 scores")->required();
  compare_cmd->add_flag("--csv", compare_csv, "print CSV instead of an aligned table");
  compare_flags.attach(compare_cmd);

  std::string barcode_input;
  bool barcode_matrix = false;
  detail::ConfigFlags barcode_flags;
  auto* barcode_cmd = app.add_subcommand("barcode", "print `dim birth death` lines");
  barcode_cmd->add_option("file", barcode_input, "JGB-v1 score or matrix (.dist/.csv)")->required();
  barcode_cmd->add_flag("--matrix", barcode_matrix, "input is a CSV dissimilarity matrix");
  barcode_flags.attach(barcode_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (parse_cmd->parsed()) {
    return detail::guarded(err, parse_input, [&] {
      pipeline::AnalysisConfig config;
      if (parse_ingeojil_opt->count()) config.ingeojil_short = parse_duration(parse_ingeojil);
      auto score = detail::load_score(parse_input, config);
      network::MusicGraph graph;
      if (!score.events.empty()) graph = network::build_network(score);
      out << exporters::score_dump(score, graph);
      return static_cast<int>(kOk);
    });
  }

  if (analyze_cmd->parsed()) {
    return detail::guarded(err, analyze_input, [&] {
      auto config = analyze_flags.resolve();
      exporters::FileSet files;
      std::string summary;
      if (analyze_matrix) {
        auto a = pipeline::analyze_matrix(detail::load_matrix(analyze_input), config,
                                          std::filesystem::path(analyze_input).stem().string());
        files = exporters::matrix_files(a, config);
        summary = exporters::barcode_text(a.persistence);
      } else {
        auto score = detail::load_score(analyze_input, config);
        auto a = pipeline::analyze_score(score, config, detail::piece_name(score, analyze_input));
        files = exporters::score_files(a, config);
        summary = exporters::comparison_text({a.comparison});
      }
      auto written = exporters::write_files(files, config.output_dir);
      out << summary;
      out << "wrote " << written.size() << " files to " << config.output_dir << "\n";
      return static_cast<int>(kOk);
    });
  }

  if (barcode_cmd->parsed()) {
    return detail::guarded(err, barcode_input, [&] {
      auto config = barcode_flags.resolve();
      if (barcode_matrix || detail::looks_like_matrix(barcode_input)) {
        auto a = pipeline::analyze_matrix(detail::load_matrix(barcode_input), config, barcode_input);
        out << exporters::barcode_text(a.persistence);
      } else {
        auto score = detail::load_score(barcode_input, config);
        auto a = pipeline::analyze_score(score, config, detail::piece_name(score, barcode_input));
        out << exporters::barcode_text(a.persistence);
      }
      return static_cast<int>(kOk);
    });
  }

  if (compare_cmd->parsed()) {
    pipeline::AnalysisConfig config;
    int status = detail::guarded(err, "compare", [&] {
      config = compare_flags.resolve();
      return static_cast<int>(kOk);
    });
    if (status != kOk) return status;
    std::vector<pipeline::ComparisonRow> rows;
    for (const auto& path : compare_inputs) {
      int code = detail::guarded(err, path, [&] {
        auto score = detail::load_score(path, config);
        rows.push_back(pipeline::analyze_score(score, config, detail::piece_name(score, path)).comparison);
        return static_cast<int>(kOk);
      });
      status = std::max(status, code);
    }
    out << (compare_csv ? exporters::comparison_csv(rows) : exporters::comparison_text(rows));
    if (compare_flags.out_opt->count()) {
      int code = detail::guarded(err, config.output_dir, [&] {
        exporters::write_files({{"comparison.csv", exporters::comparison_csv(rows)},
                                {"comparison.txt", exporters::comparison_text(rows)}},
                               config.output_dir);
        return static_cast<int>(kOk);
      });
      status = std::max(status, code);
    }
    return status;
  }
  return kUsage;
}

}  // namespace jgbtda::cli
