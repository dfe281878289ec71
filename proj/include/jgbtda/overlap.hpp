#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "jgbtda/cycles.hpp"
#include "jgbtda/error.hpp"
#include "jgbtda/network.hpp"

namespace jgbtda::overlap {

using cycles::Cycle;
using network::NodeId;

enum class OccurrenceKind {
  Closed,     // walks the whole loop and returns to the first note
  OpenChain,  // visits every loop node once along loop edges, without closing
  SetRun,     // loop's node set in some other order (loose matching only)
};

inline std::string_view to_string(OccurrenceKind k) {
  switch (k) {
    case OccurrenceKind::Closed: return "closed";
    case OccurrenceKind::OpenChain: return "open-chain";
    case OccurrenceKind::SetRun: return "set-run";
  }
  return "?";
}

enum class MatchMode { Strict, Loose };

struct OccurrenceEvent {
  int cycle_number;
  std::size_t start_position;  // index into the node sequence
  std::size_t length;
  OccurrenceKind kind;

  bool operator==(const OccurrenceEvent&) const = default;
};

/// Consecutive stretches of the piece that trace a cycle whole, in either
/// direction and from any starting node. A closed occurrence may share its
/// last note with the next one.
inline std::vector<OccurrenceEvent> find_full_occurrences(const Cycle& cycle, std::span<const NodeId> sequence,
                                                          MatchMode mode = MatchMode::Strict) {
  const std::size_t m = cycle.node_loop.size();
  std::vector<OccurrenceEvent> out;
  if (m < 3) return out;
  std::map<NodeId, std::size_t> slot;
  for (std::size_t i = 0; i < m; ++i) slot[cycle.node_loop[i]] = i;

  auto covers = [&](std::size_t p) {  // window of m distinct loop nodes
    if (p + m > sequence.size()) return false;
    std::vector<bool> seen(m, false);
    for (std::size_t k = p; k < p + m; ++k) {
      auto it = slot.find(sequence[k]);
      if (it == slot.end() || seen[it->second]) return false;
      seen[it->second] = true;
    }
    return true;
  };
  auto follows_edges = [&](std::size_t p) {
    for (std::size_t k = p; k + 1 < p + m; ++k) {
      std::size_t gap = (slot.at(sequence[k]) + m - slot.at(sequence[k + 1])) % m;
      if (gap != 1 && gap != m - 1) return false;
    }
    return true;
  };

  std::size_t p = 0;
  while (p < sequence.size()) {
    if (covers(p) && follows_edges(p)) {
      if (p + m < sequence.size() && sequence[p + m] == sequence[p]) {
        out.push_back({cycle.number, p, m + 1, OccurrenceKind::Closed});
        p += m;
      } else {
        out.push_back({cycle.number, p, m, OccurrenceKind::OpenChain});
        p += m - 1;
      }
      continue;
    }
    if (mode == MatchMode::Loose && covers(p)) {
      out.push_back({cycle.number, p, m, OccurrenceKind::SetRun});
      p += m - 1;
      continue;
    }
    ++p;
  }
  return out;
}

inline std::vector<OccurrenceEvent> find_full_occurrences(const Cycle& cycle, const network::MusicGraph& graph,
                                                          MatchMode mode = MatchMode::Strict) {
  return find_full_occurrences(cycle, graph.sequence(), mode);
}

/// Occurrences of every cycle, ordered by start position then cycle number.
inline std::vector<OccurrenceEvent> occurrence_timeline(std::span<const Cycle> cycles, std::span<const NodeId> sequence,
                                                        MatchMode mode = MatchMode::Strict) {
  std::vector<OccurrenceEvent> all;
  for (const auto& c : cycles) {
    auto found = find_full_occurrences(c, sequence, mode);
    all.insert(all.end(), found.begin(), found.end());
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.start_position != b.start_position) return a.start_position < b.start_position;
    return a.cycle_number < b.cycle_number;
  });
  return all;
}

struct Run {
  std::size_t first;
  std::size_t last;  // inclusive
};

/// Binary cycle x position matrix on s-scale.
class OverlapMatrix {
 public:
  OverlapMatrix() = default;
  OverlapMatrix(int scale, std::size_t rows, std::size_t cols)
      : scale_(scale), rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

  int scale() const { return scale_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { cells_[i * cols_ + j] = v ? 1 : 0; }

  /// Maximal runs of ones in row i.
  std::vector<Run> runs(std::size_t i) const {
    std::vector<Run> out;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!at(i, j)) continue;
      if (!out.empty() && out.back().last + 1 == j) {
        out.back().last = j;
      } else {
        out.push_back({j, j});
      }
    }
    return out;
  }

 private:
  int scale_ = 1;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// m_ij = 1 iff position j sits in a stretch of at least s consecutive notes
/// that all belong to cycle i.
inline OverlapMatrix overlap_matrix(std::span<const Cycle> cycles, std::span<const NodeId> sequence, int s) {
  if (s < 1) throw AnalysisError("overlap", "scale s must be at least 1");
  OverlapMatrix m(s, cycles.size(), sequence.size());
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& loop = cycles[i].node_loop;
    std::size_t j = 0;
    while (j < sequence.size()) {
      if (std::find(loop.begin(), loop.end(), sequence[j]) == loop.end()) {
        ++j;
        continue;
      }
      std::size_t end = j;
      while (end < sequence.size() && std::find(loop.begin(), loop.end(), sequence[end]) != loop.end()) ++end;
      if (end - j >= static_cast<std::size_t>(s))
        for (std::size_t k = j; k < end; ++k) m.set(i, k, true);
      j = end;
    }
  }
  return m;
}

inline OverlapMatrix overlap_matrix(std::span<const Cycle> cycles, const network::MusicGraph& graph, int s) {
  return overlap_matrix(cycles, graph.sequence(), s);
}

/// How "times at least two cycles occurred simultaneously" is counted.
enum class SimultaneityMode {
  RunPairs,         // unordered pairs of intersecting runs from different rows
  ColumnIntervals,  // maximal column stretches where two or more rows are 1
};

inline std::string_view to_string(SimultaneityMode m) {
  return m == SimultaneityMode::RunPairs ? "run-pairs" : "column-intervals";
}

inline SimultaneityMode simultaneity_mode_from_string(std::string_view s) {
  if (s == "run-pairs") return SimultaneityMode::RunPairs;
  if (s == "column-intervals") return SimultaneityMode::ColumnIntervals;
  throw std::invalid_argument("unknown N_s mode '" + std::string(s) + "'");
}

struct OverlapStats {
  std::size_t occupied_area = 0;  // A_c
  std::size_t full_area = 0;      // A_f
  double denseness = 0.0;
  std::size_t run_count = 0;  // N_c
  std::size_t simultaneous_run_pairs = 0;
  std::size_t simultaneous_column_intervals = 0;

  std::size_t simultaneous(SimultaneityMode mode) const {
    return mode == SimultaneityMode::RunPairs ? simultaneous_run_pairs : simultaneous_column_intervals;
  }
  double overlap_percent(SimultaneityMode mode) const {
    if (run_count == 0) return 0.0;
    return 100.0 * static_cast<double>(simultaneous(mode)) / static_cast<double>(run_count);
  }
};

inline OverlapStats overlap_stats(const OverlapMatrix& m) {
  OverlapStats st;
  st.full_area = m.rows() * m.cols();
  std::vector<std::vector<Run>> runs(m.rows());
  std::vector<std::size_t> column_sum(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    runs[i] = m.runs(i);
    st.run_count += runs[i].size();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j)) continue;
      ++st.occupied_area;
      ++column_sum[j];
    }
  }
  st.denseness = st.full_area == 0 ? 0.0 : static_cast<double>(st.occupied_area) / static_cast<double>(st.full_area);

  for (std::size_t a = 0; a < runs.size(); ++a)
    for (std::size_t b = a + 1; b < runs.size(); ++b)
      for (const auto& x : runs[a])
        for (const auto& y : runs[b])
          if (x.first <= y.last && y.first <= x.last) ++st.simultaneous_run_pairs;

  for (std::size_t j = 0; j < m.cols(); ++j)
    if (column_sum[j] >= 2 && (j == 0 || column_sum[j - 1] < 2)) ++st.simultaneous_column_intervals;
  return st;
}

}  // namespace jgbtda::overlap
