#pragma once

#include <cmath>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hollow/graph.hpp"
#include "hollow/jacobi.hpp"

namespace hollow {

/// Real symmetric matrix with exactly zero diagonal whose off-diagonal
/// support equals the edge set of a pattern graph.  Structural zeros are
/// exact doubles, never a tolerance question.
class HollowMatrix {
 public:
  static HollowMatrix from_edge_weights(Graph pattern,
                                        std::span<const double> w) {
    if (w.size() != pattern.edges().size())
      throw PatternViolation("one weight per pattern edge required");
    int n = pattern.order();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] == 0.0)
        throw PatternViolation("zero weight on a pattern edge");
      auto [u, v] = pattern.edges()[k];
      a[static_cast<std::size_t>(u) * n + v] = w[k];
      a[static_cast<std::size_t>(v) * n + u] = w[k];
    }
    return HollowMatrix(std::move(pattern), std::move(a));
  }

  static HollowMatrix from_weight_map(
      Graph pattern, const std::map<VertexPair, double>& weights) {
    std::vector<double> w(pattern.edges().size(), 0.0);
    for (auto [uv, value] : weights) {
      auto [u, v] = uv;
      if (u > v) std::swap(u, v);
      int k = pattern.edge_index(u, v);
      if (k < 0)
        throw PatternViolation("weight given for a non-edge {" +
                               std::to_string(u) + "," + std::to_string(v) +
                               "}");
      w[k] = value;
    }
    return from_edge_weights(std::move(pattern), w);
  }

  /// Validates a dense row-major array against the pattern: zero diagonal,
  /// exact symmetry, exact zeros off the support, nonzeros on every edge.
  static HollowMatrix from_dense(Graph pattern, std::span<const double> a) {
    int n = pattern.order();
    if (a.size() != static_cast<std::size_t>(n) * n)
      throw PatternViolation("dense array has wrong size");
    for (int i = 0; i < n; ++i) {
      if (a[static_cast<std::size_t>(i) * n + i] != 0.0)
        throw PatternViolation("diagonal entry is not exactly zero");
      for (int j = i + 1; j < n; ++j) {
        double x = a[static_cast<std::size_t>(i) * n + j];
        if (x != a[static_cast<std::size_t>(j) * n + i])
          throw PatternViolation("matrix is not exactly symmetric");
        bool edge = pattern.has_edge(i, j);
        if (edge && x == 0.0)
          throw PatternViolation("zero entry on a pattern edge");
        if (!edge && x != 0.0)
          throw PatternViolation("nonzero entry off the pattern support");
      }
    }
    return HollowMatrix(std::move(pattern),
                        std::vector<double>(a.begin(), a.end()));
  }

  /// Weighted adjacency with unit weights.
  static HollowMatrix adjacency(Graph pattern) {
    std::vector<double> w(pattern.edges().size(), 1.0);
    return from_edge_weights(std::move(pattern), w);
  }

  int order() const { return pattern_.order(); }
  const Graph& pattern() const { return pattern_; }
  const std::vector<double>& entries() const { return a_; }
  double operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * order() + j];
  }
  double edge_weight(int k) const {
    auto [u, v] = pattern_.edges()[k];
    return (*this)(u, v);
  }
  std::vector<double> edge_weights() const {
    std::vector<double> w(pattern_.edges().size());
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = edge_weight(static_cast<int>(k));
    return w;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double x : a_) s += x * x;
    return std::sqrt(s);
  }
  double max_abs() const {
    double m = 0.0;
    for (double x : a_) m = std::max(m, std::abs(x));
    return m;
  }

  friend HollowMatrix operator*(double c, const HollowMatrix& m) {
    if (c == 0.0) throw PatternViolation("scaling a hollow matrix by zero");
    std::vector<double> a = m.a_;
    for (double& x : a) x *= c;
    return HollowMatrix(m.pattern_, std::move(a));
  }
  HollowMatrix operator-() const { return -1.0 * *this; }

 private:
  HollowMatrix(Graph pattern, std::vector<double> a)
      : pattern_(std::move(pattern)), a_(std::move(a)) {}

  Graph pattern_;
  std::vector<double> a_;
};

/// Ascending eigenvalues via the cyclic Jacobi solver.
inline std::vector<double> eigensolve(const HollowMatrix& m,
                                      int max_sweeps = 64) {
  return jacobi_eigenvalues(m.entries(), m.order(), max_sweeps);
}

inline SymmetricEigen eigensolve_full(const HollowMatrix& m,
                                      int max_sweeps = 64) {
  return jacobi_eigen(m.entries(), m.order(), max_sweeps);
}

}  // namespace hollow
