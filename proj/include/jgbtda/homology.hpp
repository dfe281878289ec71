#pragma once

// Vietoris-Rips persistent homology over an explicit dissimilarity table.
//
// Simplices are ordered by (diameter, dimension, vertex tuple) and the boundary
// matrix is reduced column by column over GF(2), highest dimension first so
// that columns known to be positive can be cleared without reduction.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "jgbtda/error.hpp"

namespace jgbtda::homology {

inline constexpr int kMaxDimension = 3;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

using Vertex = std::uint32_t;

/// Square table of pairwise dissimilarities, row-major.
class DistanceTable {
 public:
  DistanceTable() = default;
  DistanceTable(std::size_t n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    if (values_.size() != n * n) throw AnalysisError("homology", "distance table is not square");
  }

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

struct Simplex {
  std::array<Vertex, kMaxDimension + 1> vertices{};  // strictly increasing, first dim+1 entries
  int dim = 0;
  double value = 0.0;

  std::span<const Vertex> vertex_span() const {
    return {vertices.data(), static_cast<std::size_t>(dim + 1)};
  }
  bool operator==(const Simplex& o) const { return dim == o.dim && vertices == o.vertices && value == o.value; }
};

inline bool filtration_less(const Simplex& a, const Simplex& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.vertices < b.vertices;
}

struct Filtration {
  std::size_t vertex_count = 0;
  int max_dim = kMaxDimension;
  double max_filtration = kInfinity;
  std::vector<Simplex> simplices;

  std::size_t count(int dim) const {
    return static_cast<std::size_t>(
        std::count_if(simplices.begin(), simplices.end(), [&](const Simplex& s) { return s.dim == dim; }));
  }
};

/// All simplices of dimension <= max_dim with diameter <= max_filtration.
inline Filtration build_filtration(const DistanceTable& d, int max_dim = kMaxDimension,
                                   double max_filtration = kInfinity) {
  if (max_dim < 0 || max_dim > kMaxDimension) {
    throw AnalysisError("homology", "max_dim must lie in [0, " + std::to_string(kMaxDimension) + "]");
  }
  if (!(max_filtration > 0)) throw AnalysisError("homology", "max_filtration must be positive");
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) != 0) throw AnalysisError("homology", "distance table has a nonzero diagonal entry");
    for (std::size_t j = 0; j < n; ++j) {
      if (!(d(i, j) >= 0)) throw AnalysisError("homology", "distance table has a negative or NaN entry");
      if (d(i, j) != d(j, i)) throw AnalysisError("homology", "distance table is not symmetric");
    }
  }

  Filtration f;
  f.vertex_count = n;
  f.max_dim = max_dim;
  f.max_filtration = max_filtration;

  Simplex current;
  auto extend = [&](auto&& self, int dim, double diameter) -> void {
    current.dim = dim;
    current.value = diameter;
    f.simplices.push_back(current);
    if (dim == max_dim) return;
    for (Vertex v = current.vertices[static_cast<std::size_t>(dim)] + 1; v < n; ++v) {
      double reach = diameter;
      bool fits = true;
      for (int k = 0; k <= dim && fits; ++k) {
        double dv = d(current.vertices[static_cast<std::size_t>(k)], v);
        fits = dv <= max_filtration;
        reach = std::max(reach, dv);
      }
      if (!fits) continue;
      current.vertices[static_cast<std::size_t>(dim + 1)] = v;
      self(self, dim + 1, reach);
      current.vertices[static_cast<std::size_t>(dim + 1)] = 0;
      current.dim = dim;
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    current = Simplex{};
    current.vertices[0] = v;
    extend(extend, 0, 0.0);
  }
  std::sort(f.simplices.begin(), f.simplices.end(), filtration_less);
  return f;
}

struct PersistenceInterval {
  int dim = 0;
  double birth = 0.0;
  double death = kInfinity;
  std::size_t birth_index = 0;               // position of the creating simplex in the filtration
  std::optional<std::size_t> death_index;    // position of the killing simplex
  std::vector<Simplex> representative;       // dimension-1 cycle, edges in filtration order

  double persistence() const { return death - birth; }
  bool essential() const { return std::isinf(death); }
};

/// Every pair produced by the reduction, including zero-length ones and the
/// top dimension of the skeleton. barcode() is what gets reported.
struct PersistenceResult {
  int max_dim = kMaxDimension;
  std::vector<PersistenceInterval> pairs;

  /// Highest dimension whose homology the skeleton determines.
  int top_reported_dim() const { return std::max(0, max_dim - 1); }

  std::vector<PersistenceInterval> barcode() const {
    std::vector<PersistenceInterval> out;
    for (const auto& p : pairs)
      if (p.dim <= top_reported_dim() && p.persistence() > 0) out.push_back(p);
    return out;
  }

  std::vector<PersistenceInterval> barcode(int dim) const {
    std::vector<PersistenceInterval> out;
    for (auto& p : barcode())
      if (p.dim == dim) out.push_back(std::move(p));
    return out;
  }
};

namespace detail {

using Column = std::vector<std::uint32_t>;

inline void add_column(Column& target, const Column& source, Column& scratch) {
  scratch.clear();
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                std::back_inserter(scratch));
  target.swap(scratch);
}

/// Combinatorial-number-system key of a sorted vertex tuple.
class SimplexIndex {
 public:
  explicit SimplexIndex(const Filtration& f) : binom_(f.vertex_count + 1) {
    for (std::size_t n = 0; n <= f.vertex_count; ++n) {
      binom_[n][0] = 1;
      for (std::size_t k = 1; k <= kMaxDimension + 1; ++k)
        binom_[n][k] = n == 0 ? 0 : binom_[n - 1][k - 1] + binom_[n - 1][k];
    }
    for (std::size_t i = 0; i < f.simplices.size(); ++i) {
      const auto& s = f.simplices[i];
      auto [it, fresh] = maps_[static_cast<std::size_t>(s.dim)].emplace(key(s.vertex_span()), i);
      if (!fresh) throw AnalysisError("homology", "duplicate simplex in filtration");
    }
  }

  std::optional<std::size_t> find(std::span<const Vertex> vertices) const {
    const auto& m = maps_[vertices.size() - 1];
    auto it = m.find(key(vertices));
    if (it == m.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::uint64_t key(std::span<const Vertex> vertices) const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) k += binom_[vertices[i]][i + 1];
    return k;
  }

  std::vector<std::array<std::uint64_t, kMaxDimension + 2>> binom_;
  std::array<std::unordered_map<std::uint64_t, std::size_t>, kMaxDimension + 1> maps_;
};

inline Column boundary(const Filtration& f, const SimplexIndex& index, std::size_t j) {
  const Simplex& s = f.simplices[j];
  Column col;
  if (s.dim == 0) return col;
  std::array<Vertex, kMaxDimension> face{};
  for (int skip = 0; skip <= s.dim; ++skip) {
    std::size_t w = 0;
    for (int k = 0; k <= s.dim; ++k)
      if (k != skip) face[w++] = s.vertices[static_cast<std::size_t>(k)];
    auto found = index.find({face.data(), w});
    if (!found) throw AnalysisError("homology", "filtration is not closed under faces");
    if (*found >= j) throw AnalysisError("homology", "filtration order violation: a face follows its coface");
    col.push_back(static_cast<std::uint32_t>(*found));
  }
  std::sort(col.begin(), col.end());
  return col;
}

inline std::vector<Simplex> simplices_of(const Filtration& f, const Column& col) {
  std::vector<Simplex> out;
  out.reserve(col.size());
  for (auto i : col) out.push_back(f.simplices[i]);
  return out;
}

}  // namespace detail

/// Persistence pairs by GF(2) column reduction. Dimension-1 pairs carry a
/// representative cycle: the reduced boundary of the killing triangle, or the
/// accumulated edge chain for classes that never die.
inline PersistenceResult compute_persistence(const Filtration& f) {
  const std::size_t total = f.simplices.size();
  if (total > std::numeric_limits<std::uint32_t>::max()) throw AnalysisError("homology", "filtration too large");
  detail::SimplexIndex index(f);

  std::vector<detail::Column> reduced(total);
  std::vector<detail::Column> edge_chains(total);  // V columns, dimension 1 only
  std::vector<std::int64_t> pivot_owner(total, -1);
  std::vector<bool> cleared(total, false);
  detail::Column scratch;

  for (int dim = f.max_dim; dim >= 1; --dim) {
    for (std::size_t j = 0; j < total; ++j) {
      if (f.simplices[j].dim != dim || cleared[j]) continue;
      detail::Column col = detail::boundary(f, index, j);
      detail::Column chain;
      if (dim == 1) chain.push_back(static_cast<std::uint32_t>(j));
      while (!col.empty()) {
        auto owner = pivot_owner[col.back()];
        if (owner < 0) break;
        detail::add_column(col, reduced[static_cast<std::size_t>(owner)], scratch);
        if (dim == 1) detail::add_column(chain, edge_chains[static_cast<std::size_t>(owner)], scratch);
      }
      if (!col.empty()) {
        pivot_owner[col.back()] = static_cast<std::int64_t>(j);
        cleared[col.back()] = true;
        reduced[j] = std::move(col);
      }
      if (dim == 1) edge_chains[j] = std::move(chain);
    }
  }

  PersistenceResult result;
  result.max_dim = f.max_dim;
  for (std::size_t j = 0; j < total; ++j) {
    const Simplex& s = f.simplices[j];
    if (!reduced[j].empty()) {
      std::size_t low = reduced[j].back();
      const Simplex& creator = f.simplices[low];
      PersistenceInterval p{creator.dim, creator.value, s.value, low, j, {}};
      if (creator.dim == 1) p.representative = detail::simplices_of(f, reduced[j]);
      result.pairs.push_back(std::move(p));
    } else if (pivot_owner[j] < 0) {
      PersistenceInterval p{s.dim, s.value, kInfinity, j, std::nullopt, {}};
      if (s.dim == 1) p.representative = detail::simplices_of(f, edge_chains[j]);
      result.pairs.push_back(std::move(p));
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end(), [](const auto& a, const auto& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.death != b.death) return a.death < b.death;
    return a.birth_index < b.birth_index;
  });
  return result;
}

/// Number of intervals of `dim` alive at tau (birth <= tau < death).
inline int betti_number(std::span<const PersistenceInterval> intervals, int dim, double tau) {
  int beta = 0;
  for (const auto& p : intervals)
    if (p.dim == dim && p.birth <= tau && tau < p.death) ++beta;
  return beta;
}

struct BettiCurve {
  int dim = 0;
  std::vector<std::pair<double, int>> samples;
};

inline BettiCurve betti_curve(std::span<const PersistenceInterval> intervals, int dim, std::span<const double> taus) {
  BettiCurve curve{dim, {}};
  for (double tau : taus) curve.samples.emplace_back(tau, betti_number(intervals, dim, tau));
  return curve;
}

/// Euler characteristic of the complex at tau computed two ways: alternating
/// simplex counts and alternating Betti numbers. Needs every pair of the
/// result, including the skeleton's top dimension.
inline bool euler_characteristic_check(const Filtration& f, const PersistenceResult& result, double tau) {
  long long by_simplices = 0;
  for (const auto& s : f.simplices)
    if (s.value <= tau) by_simplices += (s.dim % 2 == 0) ? 1 : -1;
  long long by_betti = 0;
  for (int dim = 0; dim <= f.max_dim; ++dim) {
    int beta = betti_number(result.pairs, dim, tau);
    by_betti += (dim % 2 == 0) ? beta : -beta;
  }
  return by_simplices == by_betti;
}

}  // namespace jgbtda::homology
