#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <span>
#include <vector>

#include "jgbtda/error.hpp"
#include "jgbtda/homology.hpp"
#include "jgbtda/network.hpp"

namespace jgbtda::cycles {

using network::NodeId;

struct CycleEdge {
  NodeId a;
  NodeId b;
  int weight;      // adjacency count in the piece, 0 if the notes never meet
  Exact distance;  // network distance d_ab
};

struct Cycle {
  int number = 0;
  double birth = 0.0;
  double death = 0.0;
  std::vector<NodeId> node_loop;  // starts at the smallest node; loop closes back to the front
  std::vector<CycleEdge> edges;   // (node_loop[i], node_loop[i+1]) cyclically
  double average_weight = 0.0;
  std::size_t node_count = 0;
  /// Other closed loops of the representative, dropped to keep one loop per interval.
  std::vector<std::vector<NodeId>> discarded_loops;
};

struct CycleSetSummary {
  std::size_t cycle_count = 0;
  double average_node_number = 0.0;
  double average_weight = 0.0;
};

namespace detail {

using EdgeSet = std::map<std::pair<NodeId, NodeId>, bool>;  // (min, max) -> still present

inline std::pair<NodeId, NodeId> ordered(NodeId a, NodeId b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

/// Shortest path from `from` to `to` over present edges, smallest ids first.
inline std::vector<NodeId> find_path(const EdgeSet& edges, NodeId from, NodeId to) {
  std::map<NodeId, std::vector<NodeId>> adj;
  for (const auto& [e, present] : edges) {
    if (!present) continue;
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  for (auto& [v, list] : adj) std::sort(list.begin(), list.end());
  std::map<NodeId, NodeId> parent{{from, from}};
  std::queue<NodeId> frontier;
  frontier.push(from);
  while (!frontier.empty() && !parent.contains(to)) {
    NodeId v = frontier.front();
    frontier.pop();
    for (NodeId u : adj[v]) {
      if (parent.contains(u)) continue;
      parent[u] = v;
      frontier.push(u);
    }
  }
  if (!parent.contains(to)) return {};
  std::vector<NodeId> out{to};
  while (out.back() != from) out.push_back(parent[out.back()]);
  std::reverse(out.begin(), out.end());
  return out;
}

/// Removes a loop through edge (a, b) from `edges` and returns its vertices,
/// starting at a and ending at b (the closing edge b-a is implied).
inline std::vector<NodeId> take_loop(EdgeSet& edges, NodeId a, NodeId b) {
  edges[ordered(a, b)] = false;
  auto loop = find_path(edges, b, a);
  if (loop.empty()) throw AnalysisError("cycles", "representative edge set is not a closed loop");
  std::reverse(loop.begin(), loop.end());
  for (std::size_t i = 0; i + 1 < loop.size(); ++i) edges[ordered(loop[i], loop[i + 1])] = false;
  return loop;
}

inline std::vector<NodeId> canonical_loop(std::vector<NodeId> loop) {
  auto smallest = std::min_element(loop.begin(), loop.end());
  std::rotate(loop.begin(), smallest, loop.end());
  if (loop.size() > 2 && loop[1] > loop.back()) std::reverse(loop.begin() + 1, loop.end());
  return loop;
}

}  // namespace detail

/// Turns dimension-1 intervals with representatives into numbered cycles.
/// Numbering follows death, then birth, then the node loop.
inline std::vector<Cycle> extract_cycles(std::span<const homology::PersistenceInterval> intervals,
                                         const network::MusicGraph& graph,
                                         const network::DissimilarityMatrix& distances) {
  std::vector<Cycle> out;
  for (const auto& interval : intervals) {
    if (interval.dim != 1 || interval.persistence() <= 0 || interval.representative.empty()) continue;

    detail::EdgeSet edges;
    std::map<NodeId, int> degree;
    for (const auto& s : interval.representative) {
      NodeId a = s.vertices[0], b = s.vertices[1];
      if (a >= graph.size() || b >= graph.size()) throw AnalysisError("cycles", "representative names unknown node");
      edges[detail::ordered(a, b)] = true;
      ++degree[a];
      ++degree[b];
    }
    for (const auto& [v, deg] : degree)
      if (deg % 2 != 0) throw AnalysisError("cycles", "representative is not a mod-2 cycle");

    // The creating edge comes last in filtration order.
    const auto& birth_edge = interval.representative.back();
    Cycle c;
    c.birth = interval.birth;
    c.death = interval.death;
    c.node_loop = detail::canonical_loop(detail::take_loop(edges, birth_edge.vertices[0], birth_edge.vertices[1]));
    while (true) {
      auto next = std::find_if(edges.begin(), edges.end(), [](const auto& e) { return e.second; });
      if (next == edges.end()) break;
      c.discarded_loops.push_back(
          detail::canonical_loop(detail::take_loop(edges, next->first.first, next->first.second)));
    }

    c.node_count = c.node_loop.size();
    double weight_sum = 0.0;
    for (std::size_t i = 0; i < c.node_count; ++i) {
      NodeId a = c.node_loop[i], b = c.node_loop[(i + 1) % c.node_count];
      int w = graph.weight(a, b);
      c.edges.push_back({a, b, w, distances.at(a, b)});
      weight_sum += w;
    }
    c.average_weight = weight_sum / static_cast<double>(c.node_count);
    out.push_back(std::move(c));
  }

  std::sort(out.begin(), out.end(), [](const Cycle& x, const Cycle& y) {
    if (x.death != y.death) return x.death < y.death;
    if (x.birth != y.birth) return x.birth < y.birth;
    return x.node_loop < y.node_loop;
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].number = static_cast<int>(i + 1);
  return out;
}

inline CycleSetSummary summarize_cycles(std::span<const Cycle> cycles) {
  if (cycles.empty()) throw AnalysisError("cycles", "no cycles to summarize");
  CycleSetSummary s;
  s.cycle_count = cycles.size();
  double nodes = 0.0, weights = 0.0;
  for (const auto& c : cycles) {
    nodes += static_cast<double>(c.node_count);
    weights += c.average_weight;
  }
  s.average_node_number = nodes / static_cast<double>(cycles.size());
  s.average_weight = weights / static_cast<double>(cycles.size());
  return s;
}

}  // namespace jgbtda::cycles
