#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hollow/matrix.hpp"

namespace hollow {

/// Multiplicity signature (m1,...,mq) of a spectrum, listed in increasing
/// eigenvalue order.
struct OrderedMultiplicityList {
  std::vector<int> m;

  int length() const { return static_cast<int>(m.size()); }
  int total() const {
    int s = 0;
    for (int x : m) s += x;
    return s;
  }
  int max_entry() const { return *std::max_element(m.begin(), m.end()); }
  OrderedMultiplicityList reversed() const {
    return {std::vector<int>(m.rbegin(), m.rend())};
  }
  bool palindromic() const {
    return std::equal(m.begin(), m.end(), m.rbegin());
  }
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i)
      s += (i ? "," : "") + std::to_string(m[i]);
    return s + ")";
  }
  friend auto operator<=>(const OrderedMultiplicityList&,
                          const OrderedMultiplicityList&) = default;
};

/// Tolerance-clustered eigenvalue multiset.  Representatives are strictly
/// increasing with gaps > tol; multiplicities sum to the matrix order.
struct Spectrum {
  std::vector<std::pair<double, int>> values;  // (eigenvalue, multiplicity)
  double tol = 0.0;

  int total() const {
    int s = 0;
    for (auto& [v, m] : values) s += m;
    return s;
  }
  int distinct() const { return static_cast<int>(values.size()); }
  OrderedMultiplicityList oml() const {
    OrderedMultiplicityList l;
    for (auto& [v, m] : values) l.m.push_back(m);
    return l;
  }
  double multiplicity_of(double x, double within) const {
    for (auto& [v, m] : values)
      if (std::abs(v - x) <= within) return m;
    return 0;
  }
  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(values[i].first);
      if (values[i].second > 1)
        s += "^(" + std::to_string(values[i].second) + ")";
    }
    return s + "}";
  }
};

inline double spectral_radius(const std::vector<double>& eigs) {
  double r = 0.0;
  for (double x : eigs) r = std::max(r, std::abs(x));
  return r;
}

/// Default clustering tolerance: 1e-6 at unit scale, scaled by the
/// spectral radius above 1.
inline double default_cluster_tol(const std::vector<double>& eigs) {
  return 1e-6 * std::max(1.0, spectral_radius(eigs));
}

/// Greedy gap clustering of ascending eigenvalues: a new class starts when
/// the gap to the previous eigenvalue exceeds tol.  Representative of a
/// class is its arithmetic mean.
inline Spectrum cluster(const std::vector<double>& eigs, double tol) {
  if (tol <= 0.0) throw ParameterError("cluster tolerance must be positive");
  if (!std::is_sorted(eigs.begin(), eigs.end()))
    throw ParameterError("cluster expects ascending eigenvalues");
  Spectrum s;
  s.tol = tol;
  std::size_t i = 0;
  while (i < eigs.size()) {
    std::size_t j = i + 1;
    double sum = eigs[i];
    while (j < eigs.size() && eigs[j] - eigs[j - 1] <= tol) sum += eigs[j++];
    s.values.push_back({sum / static_cast<double>(j - i),
                        static_cast<int>(j - i)});
    i = j;
  }
  return s;
}

inline Spectrum cluster_default(const std::vector<double>& eigs) {
  return cluster(eigs, default_cluster_tol(eigs));
}

/// True iff the multiset equals its negation within tol: sorted values
/// paired against reversed negated values, multiplicities included.
inline bool spectrum_is_symmetric(const Spectrum& s, double tol) {
  std::size_t q = s.values.size();
  for (std::size_t i = 0; i < q; ++i) {
    const auto& [v, m] = s.values[i];
    const auto& [w, k] = s.values[q - 1 - i];
    if (m != k || std::abs(v + w) > tol) return false;
  }
  return true;
}

/// Count of eigenvalues with |lambda| > tol * max(1, spectral radius).
inline int numeric_rank(const HollowMatrix& a, double tol = 1e-8) {
  if (tol <= 0.0) throw ParameterError("rank tolerance must be positive");
  auto eigs = eigensolve(a);
  double cut = tol * std::max(1.0, spectral_radius(eigs));
  int r = 0;
  for (double x : eigs)
    if (std::abs(x) > cut) ++r;
  return r;
}

/// True iff ||A^T A - I||_max <= tol.
inline bool is_orthogonal(const HollowMatrix& a, double tol = 1e-9) {
  int n = a.order();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += a(k, i) * a(k, j);
      if (std::abs(s - (i == j ? 1.0 : 0.0)) > tol) return false;
    }
  return true;
}

inline Spectrum spectrum_of(const HollowMatrix& a) {
  return cluster_default(eigensolve(a));
}

inline OrderedMultiplicityList oml_of(const HollowMatrix& a) {
  return spectrum_of(a).oml();
}

}  // namespace hollow
