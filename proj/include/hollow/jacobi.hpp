#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "hollow/errors.hpp"

namespace hollow {

/// Eigendecomposition of a dense symmetric matrix.  vectors is column
/// major: vectors[i + n*j] is component i of the eigenvector for values[j].
struct SymmetricEigen {
  int n = 0;
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // orthonormal columns

  double vec(int i, int j) const { return vectors[i + static_cast<std::size_t>(n) * j]; }
};

/// Cyclic Jacobi.  Sweeps rotate away every off-diagonal pair in fixed
/// (p,q) order until the off-diagonal Frobenius norm falls below
/// rel_tol * ||A||_F.  Deterministic; throws NumericError if max_sweeps
/// sweeps do not converge.
inline SymmetricEigen jacobi_eigen(const std::vector<double>& a_in, int n,
                                   int max_sweeps = 64,
                                   double rel_tol = 1e-13) {
  if (n <= 0 || a_in.size() != static_cast<std::size_t>(n) * n)
    throw ParameterError("jacobi_eigen: bad dimensions");
  std::vector<double> a = a_in;
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i + static_cast<std::size_t>(n) * i] = 1.0;
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  double norm2 = 0.0;
  for (double x : a) norm2 += x * x;
  const double thresh2 = std::max(rel_tol * rel_tol * norm2, 1e-300);

  auto off2 = [&] {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += 2.0 * at(p, q) * at(p, q);
    return s;
  };

  int sweep = 0;
  while (off2() > thresh2) {
    if (++sweep > max_sweeps)
      throw NumericError("jacobi_eigen: no convergence after " +
                         std::to_string(max_sweeps) + " sweeps");
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (apq == 0.0) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);

        double app = at(p, p), aqq = at(q, q);
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r != p && r != q) {
            double arp = at(r, p), arq = at(r, q);
            at(r, p) = at(p, r) = arp - s * (arq + tau * arp);
            at(r, q) = at(q, r) = arq + s * (arp - tau * arq);
          }
          double vrp = v[r + static_cast<std::size_t>(n) * p];
          double vrq = v[r + static_cast<std::size_t>(n) * q];
          v[r + static_cast<std::size_t>(n) * p] = vrp - s * (vrq + tau * vrp);
          v[r + static_cast<std::size_t>(n) * q] = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  SymmetricEigen out;
  out.n = n;
  out.values.resize(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = at(i, i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return diag[x] < diag[y]; });
  out.vectors.resize(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = diag[order[j]];
    for (int i = 0; i < n; ++i)
      out.vectors[i + static_cast<std::size_t>(n) * j] =
          v[i + static_cast<std::size_t>(n) * order[j]];
  }
  return out;
}

inline std::vector<double> jacobi_eigenvalues(const std::vector<double>& a,
                                              int n, int max_sweeps = 64) {
  return jacobi_eigen(a, n, max_sweeps).values;
}

}  // namespace hollow
