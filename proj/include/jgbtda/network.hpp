#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <optional>
#include <queue>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "jgbtda/error.hpp"
#include "jgbtda/notation.hpp"
#include "jgbtda/rational.hpp"

namespace jgbtda::network {

using notation::Pitch;
using NodeId = std::size_t;

/// A (pitch, length) pair. Ordered by pitch, then by length.
struct Node {
  Pitch pitch;
  Duration length{1};

  bool operator==(const Node& o) const { return pitch == o.pitch && length == o.length; }
  bool operator<(const Node& o) const {
    if (pitch != o.pitch) return pitch < o.pitch;
    return length < o.length;
  }
};

inline std::string node_label(NodeId id) { return "n" + std::to_string(id); }

struct Edge {
  NodeId a;  // a < b
  NodeId b;
  int weight;
};

/// Undirected network of notes adjacent in time. Weights count adjacencies.
class MusicGraph {
 public:
  MusicGraph() = default;
  explicit MusicGraph(std::size_t node_count) : count_(node_count), weights_(node_count * node_count, 0) {}

  std::size_t size() const { return count_; }

  int weight(NodeId a, NodeId b) const { return weights_[a * count_ + b]; }

  void add_adjacency(NodeId a, NodeId b, int times = 1) { set_weight(a, b, weight(a, b) + times); }

  void set_weight(NodeId a, NodeId b, int w) {
    if (a >= count_ || b >= count_) throw std::out_of_range("node id out of range");
    if (a == b) throw std::invalid_argument("self-loops are not edges of the music network");
    weights_[a * count_ + b] = w;
    weights_[b * count_ + a] = w;
  }

  std::vector<NodeId> neighbors(NodeId v) const {
    std::vector<NodeId> out;
    for (NodeId u = 0; u < count_; ++u)
      if (weight(v, u) > 0) out.push_back(u);
    return out;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (NodeId a = 0; a < count_; ++a)
      for (NodeId b = a + 1; b < count_; ++b)
        if (int w = weight(a, b); w > 0) out.push_back({a, b, w});
    return out;
  }

  /// Node catalog; empty for graphs built directly from weights.
  const std::vector<Node>& nodes() const { return nodes_; }
  /// The piece as NodeIds in temporal order.
  const std::vector<NodeId>& sequence() const { return sequence_; }

  void set_nodes(std::vector<Node> nodes) { nodes_ = std::move(nodes); }
  void set_sequence(std::vector<NodeId> seq) { sequence_ = std::move(seq); }

 private:
  std::size_t count_ = 0;
  std::vector<int> weights_;
  std::vector<Node> nodes_;
  std::vector<NodeId> sequence_;
};

/// Builds the network from the notes in playing order. Consecutive identical
/// nodes add no edge.
inline MusicGraph build_network(std::span<const Node> played) {
  if (played.empty()) throw AnalysisError("network", "score has no notes");
  std::vector<Node> catalog(played.begin(), played.end());
  std::sort(catalog.begin(), catalog.end());
  catalog.erase(std::unique(catalog.begin(), catalog.end()), catalog.end());

  std::vector<NodeId> seq;
  seq.reserve(played.size());
  for (const auto& n : played) {
    auto it = std::lower_bound(catalog.begin(), catalog.end(), n);
    seq.push_back(static_cast<NodeId>(it - catalog.begin()));
  }

  MusicGraph g(catalog.size());
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i - 1] != seq[i]) g.add_adjacency(seq[i - 1], seq[i]);
  g.set_nodes(std::move(catalog));
  g.set_sequence(std::move(seq));
  return g;
}

inline MusicGraph build_network(const notation::Score& score) {
  std::vector<Node> played;
  played.reserve(score.events.size());
  for (const auto& e : score.events) played.push_back({e.pitch, e.duration});
  return build_network(played);
}

/// How the path p_ij is chosen before summing 1/w along it.
enum class MetricMode {
  MinHop,   // fewest edges, then smallest sum of 1/w
  MinCost,  // smallest sum of 1/w (Dijkstra on 1/w)
};

inline std::string_view to_string(MetricMode m) { return m == MetricMode::MinHop ? "min-hop" : "min-cost"; }

inline MetricMode metric_mode_from_string(std::string_view s) {
  if (s == "min-hop") return MetricMode::MinHop;
  if (s == "min-cost") return MetricMode::MinCost;
  throw std::invalid_argument("unknown metric mode '" + std::string(s) + "'");
}

/// Symmetric, zero-diagonal, exact. Not necessarily a metric.
class DissimilarityMatrix {
 public:
  DissimilarityMatrix() = default;
  explicit DissimilarityMatrix(std::size_t n) : n_(n), values_(n * n) {}

  std::size_t size() const { return n_; }
  const Exact& at(NodeId i, NodeId j) const { return values_[i * n_ + j]; }
  void set(NodeId i, NodeId j, const Exact& v) {
    values_[i * n_ + j] = v;
    values_[j * n_ + i] = v;
  }
  double value(NodeId i, NodeId j) const { return to_double(at(i, j)); }

  /// Row-major doubles, the form the persistence engine consumes.
  std::vector<double> to_doubles() const {
    std::vector<double> out;
    out.reserve(values_.size());
    for (const auto& v : values_) out.push_back(to_double(v));
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Exact> values_;
};

namespace detail {

inline Exact inverse_weight(int w) { return Exact(1, w); }

inline constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

inline std::vector<std::size_t> hop_counts(const MusicGraph& g, NodeId source) {
  std::vector<std::size_t> hops(g.size(), kUnreached);
  std::queue<NodeId> frontier;
  hops[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    NodeId v = frontier.front();
    frontier.pop();
    for (NodeId u : g.neighbors(v)) {
      if (hops[u] != kUnreached) continue;
      hops[u] = hops[v] + 1;
      frontier.push(u);
    }
  }
  return hops;
}

/// Smallest sum of 1/w over min-hop paths from `source`, for every target.
inline std::vector<std::optional<Exact>> min_hop_costs(const MusicGraph& g, NodeId source) {
  auto hops = hop_counts(g, source);
  std::vector<NodeId> order(g.size());
  for (NodeId v = 0; v < g.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return hops[a] < hops[b]; });

  std::vector<std::optional<Exact>> cost(g.size());
  cost[source] = Exact(0);
  for (NodeId v : order) {
    if (v == source || hops[v] == kUnreached) continue;
    for (NodeId u : g.neighbors(v)) {
      if (hops[u] + 1 != hops[v]) continue;
      Exact c = *cost[u] + inverse_weight(g.weight(u, v));
      if (!cost[v] || c < *cost[v]) cost[v] = c;
    }
  }
  return cost;
}

inline std::vector<std::optional<Exact>> min_costs(const MusicGraph& g, NodeId source) {
  std::vector<std::optional<Exact>> cost(g.size());
  std::vector<bool> done(g.size(), false);
  cost[source] = Exact(0);
  for (std::size_t round = 0; round < g.size(); ++round) {
    std::optional<NodeId> best;
    for (NodeId v = 0; v < g.size(); ++v)
      if (!done[v] && cost[v] && (!best || *cost[v] < *cost[*best])) best = v;
    if (!best) break;
    done[*best] = true;
    for (NodeId u : g.neighbors(*best)) {
      Exact c = *cost[*best] + inverse_weight(g.weight(*best, u));
      if (!cost[u] || c < *cost[u]) cost[u] = c;
    }
  }
  return cost;
}

inline std::vector<std::optional<Exact>> costs_from(const MusicGraph& g, NodeId source, MetricMode mode) {
  return mode == MetricMode::MinHop ? min_hop_costs(g, source) : min_costs(g, source);
}

}  // namespace detail

/// d_ij = sum of 1/w along the chosen path p_ij; d_ii = 0.
/// Throws AnalysisError if the graph is disconnected.
inline DissimilarityMatrix distance_matrix(const MusicGraph& g, MetricMode mode = MetricMode::MinHop) {
  DissimilarityMatrix d(g.size());
  for (NodeId i = 0; i < g.size(); ++i) {
    auto cost = detail::costs_from(g, i, mode);
    for (NodeId j = i + 1; j < g.size(); ++j) {
      if (!cost[j]) {
        throw AnalysisError("network", "nodes " + node_label(i) + " and " + node_label(j) + " are not connected");
      }
      d.set(i, j, *cost[j]);
    }
  }
  return d;
}

/// The path p_ij itself. Ties in the objective go to the lexicographically
/// smallest node sequence starting at `from`.
inline std::vector<NodeId> path(const MusicGraph& g, NodeId from, NodeId to, MetricMode mode = MetricMode::MinHop) {
  if (from == to) return {from};
  // Remaining cost from every node to `to`, plus hop counts in min-hop mode.
  auto remaining = detail::costs_from(g, to, mode);
  if (!remaining[from]) throw AnalysisError("network", "nodes are not connected");
  std::vector<std::size_t> hops_to = detail::hop_counts(g, to);

  std::vector<NodeId> out{from};
  NodeId v = from;
  while (v != to) {
    std::optional<NodeId> next;
    for (NodeId u : g.neighbors(v)) {
      if (!remaining[u]) continue;
      if (mode == MetricMode::MinHop && hops_to[u] + 1 != hops_to[v]) continue;
      if (detail::inverse_weight(g.weight(v, u)) + *remaining[u] != *remaining[v]) continue;
      if (mode == MetricMode::MinCost && std::find(out.begin(), out.end(), u) != out.end()) continue;
      next = u;
      break;
    }
    if (!next) throw AnalysisError("network", "path reconstruction failed");
    v = *next;
    out.push_back(v);
  }
  return out;
}

struct FrequencyRow {
  std::size_t rank;  // 1-based
  NodeId node;
  std::size_t count;
};

/// Node occurrence counts, descending; equal counts by ascending node id.
struct FrequencyTable {
  std::vector<FrequencyRow> rows;

  /// (rank, log10 count) points for a semi-log plot.
  std::vector<std::pair<std::size_t, double>> log_points() const {
    std::vector<std::pair<std::size_t, double>> out;
    for (const auto& r : rows) out.emplace_back(r.rank, std::log10(static_cast<double>(r.count)));
    return out;
  }
};

inline FrequencyTable frequency_table(const MusicGraph& g) {
  std::vector<std::size_t> counts(g.size(), 0);
  for (NodeId v : g.sequence()) ++counts.at(v);
  std::vector<NodeId> order;
  for (NodeId v = 0; v < g.size(); ++v)
    if (counts[v] > 0) order.push_back(v);
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return counts[a] > counts[b]; });
  FrequencyTable t;
  for (std::size_t r = 0; r < order.size(); ++r) t.rows.push_back({r + 1, order[r], counts[order[r]]});
  return t;
}

/// For each node, the sorted numbers of the cycles whose loop passes through it.
template <class CycleRange>
  requires requires(const std::ranges::range_value_t<CycleRange>& c) {
    { c.number } -> std::convertible_to<int>;
    c.node_loop.begin();
  }
std::vector<std::vector<int>> cycles_per_node(const MusicGraph& g, const CycleRange& cycles) {
  std::vector<std::vector<int>> out(g.size());
  for (const auto& c : cycles) {
    for (NodeId v : c.node_loop) {
      auto& list = out.at(v);
      if (std::find(list.begin(), list.end(), c.number) == list.end()) list.push_back(c.number);
    }
  }
  for (auto& list : out) std::sort(list.begin(), list.end());
  return out;
}

}  // namespace jgbtda::network
