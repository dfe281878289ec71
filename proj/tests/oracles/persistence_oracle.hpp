#pragma once

// Barcodes from persistent Betti numbers, each obtained as ranks of signed
// boundary matrices over Q. Quadratic in the number of critical values, so
// only meant for a handful of points.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>
#include <vector>

#include "rank.hpp"

namespace oracle {

struct Bar {
  int dim;
  double birth;
  double death;  // +inf for classes that never die
  auto operator<=>(const Bar&) const = default;
};

class RipsOracle {
 public:
  /// `d` is a full n x n table, row-major.
  RipsOracle(std::size_t n, std::vector<double> d, int max_dim, double cap)
      : n_(n), d_(std::move(d)), max_dim_(max_dim) {
    by_dim_.resize(static_cast<std::size_t>(max_dim + 1));
    std::vector<std::size_t> cur;
    enumerate(0, cur, cap);
    for (auto& list : by_dim_) std::sort(list.begin(), list.end());
    for (const auto& list : by_dim_)
      for (const auto& [verts, value] : list) values_.push_back(value);
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  }

  /// Rank of H_k(K_a) -> H_k(K_b) for a <= b. Cycles at a, modulo boundaries at b.
  std::size_t persistent_betti(int k, double a, double b) const {
    auto rows_a = members(k, a);
    if (rows_a.empty()) return 0;
    std::size_t z = rows_a.size() - (k == 0 ? 0 : boundary_rank(k, a, members(k - 1, a)));
    if (k + 1 > max_dim_) return z;
    // dim(Z_a ∩ B_b) = rank ∂_{k+1}(K_b) - rank of those columns restricted to rows outside K_a.
    auto rows_b = members(k, b);
    std::vector<std::size_t> outside;
    for (std::size_t r : rows_b)
      if (std::find(rows_a.begin(), rows_a.end(), r) == rows_a.end()) outside.push_back(r);
    std::size_t full = boundary_rank(k + 1, b, rows_b);
    std::size_t restricted = outside.empty() ? 0 : boundary_rank(k + 1, b, outside);
    return z - (full - restricted);
  }

  std::size_t betti(int k, double t) const { return persistent_betti(k, t, t); }

  /// Interval decomposition for dims 0..max(0, max_dim - 1).
  std::vector<Bar> barcode() const {
    std::vector<Bar> out;
    const int top = std::max(0, max_dim_ - 1);
    const std::size_t m = values_.size();
    for (int k = 0; k <= top; ++k) {
      // beta[i][j] for 1 <= i <= j <= m, index 0 is the empty complex.
      std::vector<std::vector<std::size_t>> beta(m + 1, std::vector<std::size_t>(m + 1, 0));
      for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = i; j <= m; ++j) beta[i][j] = persistent_betti(k, values_[i - 1], values_[j - 1]);
      auto at = [&](std::size_t i, std::size_t j) -> long { return i == 0 ? 0 : static_cast<long>(beta[i][j]); };
      for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = i + 1; j <= m; ++j) {
          long mu = at(i, j - 1) - at(i - 1, j - 1) - at(i, j) + at(i - 1, j);
          for (long c = 0; c < mu; ++c) out.push_back({k, values_[i - 1], values_[j - 1]});
        }
        long mu = at(i, m) - at(i - 1, m);
        for (long c = 0; c < mu; ++c) out.push_back({k, values_[i - 1], std::numeric_limits<double>::infinity()});
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const std::vector<double>& critical_values() const { return values_; }
  std::size_t simplex_count(int k) const { return by_dim_[static_cast<std::size_t>(k)].size(); }

 private:
  using Entry = std::pair<std::vector<std::size_t>, double>;

  void enumerate(std::size_t start, std::vector<std::size_t>& cur, double cap) {
    for (std::size_t v = start; v < n_; ++v) {
      cur.push_back(v);
      double diam = 0;
      for (std::size_t a = 0; a < cur.size(); ++a)
        for (std::size_t b = a + 1; b < cur.size(); ++b) diam = std::max(diam, d_[cur[a] * n_ + cur[b]]);
      if (diam <= cap) {
        by_dim_[cur.size() - 1].push_back({cur, diam});
        if (static_cast<int>(cur.size()) <= max_dim_) enumerate(v + 1, cur, cap);
      }
      cur.pop_back();
    }
  }

  /// Indices (into by_dim_[k]) of k-simplices present at t.
  std::vector<std::size_t> members(int k, double t) const {
    std::vector<std::size_t> out;
    if (k < 0 || k > max_dim_) return out;
    const auto& list = by_dim_[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < list.size(); ++i)
      if (list[i].second <= t) out.push_back(i);
    return out;
  }

  /// Rank of ∂_k restricted to k-simplices present at t and the given rows.
  std::size_t boundary_rank(int k, double t, const std::vector<std::size_t>& rows) const {
    auto cols = members(k, t);
    if (cols.empty() || rows.empty()) return 0;
    const auto& faces = by_dim_[static_cast<std::size_t>(k - 1)];
    std::map<std::vector<std::size_t>, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[faces[rows[r]].first] = r;
    IntMatrix m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& verts = by_dim_[static_cast<std::size_t>(k)][cols[c]].first;
      for (std::size_t skip = 0; skip < verts.size(); ++skip) {
        std::vector<std::size_t> face;
        for (std::size_t q = 0; q < verts.size(); ++q)
          if (q != skip) face.push_back(verts[q]);
        auto it = row_of.find(face);
        if (it != row_of.end()) m[it->second][c] = skip % 2 == 0 ? 1 : -1;
      }
    }
    return rank(m);
  }

  std::size_t n_;
  std::vector<double> d_;
  int max_dim_;
  std::vector<std::vector<Entry>> by_dim_;
  std::vector<double> values_;
};

}  // namespace oracle
