#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "hollow/gencyc.hpp"
#include "hollow/graph.hpp"
#include "hollow/matrix.hpp"
#include "hollow/spectrum.hpp"
#include "hollow/target.hpp"

namespace hollow {

/// Output of a constructive realization.  residual is the max distance
/// between the achieved and requested data: sorted-eigenvalue pairing when
/// values were requested, relative within-block spread when only a
/// multiplicity structure was requested.
struct RealizationResult {
  HollowMatrix matrix;
  Spectrum achieved;
  double residual = 0.0;
  long seed = 0;
};

namespace detail {

constexpr int kDefaultRetries = 32;
constexpr double kEntryFloor = 1e-8;  // nonzero threshold for random factors

inline std::mt19937_64 rng_for(long seed, long stream) {
  std::seed_seq seq{static_cast<unsigned long long>(seed),
                    static_cast<unsigned long long>(stream), 0x9e3779b97f4a7c15ULL};
  return std::mt19937_64(seq);
}

/// Random orthogonal n x n matrix (orthonormal columns, column major) via
/// Gaussian fill and modified Gram-Schmidt.
inline std::vector<double> random_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> q(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    while (true) {
      for (int i = 0; i < n; ++i) q[i + static_cast<std::size_t>(n) * j] = normal(rng);
      for (int p = 0; p < j; ++p) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i)
          dot += q[i + static_cast<std::size_t>(n) * p] * q[i + static_cast<std::size_t>(n) * j];
        for (int i = 0; i < n; ++i)
          q[i + static_cast<std::size_t>(n) * j] -= dot * q[i + static_cast<std::size_t>(n) * p];
      }
      double norm = 0.0;
      for (int i = 0; i < n; ++i) {
        double x = q[i + static_cast<std::size_t>(n) * j];
        norm += x * x;
      }
      norm = std::sqrt(norm);
      if (norm > 1e-6) {
        for (int i = 0; i < n; ++i) q[i + static_cast<std::size_t>(n) * j] /= norm;
        break;
      }
    }
  }
  return q;
}

inline double max_pair_distance(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

/// Relative within-block spread of ascending eigenvalues partitioned by
/// the multiplicities of an ordered list.
inline double block_spread(const std::vector<double>& eigs,
                           const OrderedMultiplicityList& oml) {
  double scale = 1.0 + spectral_radius(eigs);
  double worst = 0.0;
  std::size_t at = 0;
  for (int m : oml.m) {
    worst = std::max(worst, (eigs[at + m - 1] - eigs[at]) / scale);
    at += m;
  }
  return worst;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Paths

/// Hollow tridiagonal matrix with the requested spectrum.  Feasible targets
/// are exactly the multisets of n distinct reals symmetric about the
/// origin; the construction is a Lanczos reduction of diag(S) started from
/// the uniform unit vector, which fixes all normalizing weights to 1/n (a
/// symmetric choice), so the diagonal vanishes identically.
inline RealizationResult realize_path(const TargetSpectrum& s, int n) {
  if (s.total() != n)
    throw ParameterError("path target must have exactly n entries");
  if (s.distinct() != n)
    throw InfeasibleTarget(
        "path spectra have all multiplicities one; repeated entries are not "
        "realizable");
  if (!s.is_symmetric())
    throw InfeasibleTarget(
        "path spectra are symmetric about the origin; asymmetric targets are "
        "not realizable");
  auto lambda = s.expanded();

  // Lanczos on diag(lambda) with full reorthogonalization.
  std::vector<std::vector<double>> q;
  std::vector<double> beta;
  std::vector<double> cur(n, 1.0 / std::sqrt(static_cast<double>(n)));
  q.push_back(cur);
  for (int step = 0; step + 1 < n; ++step) {
    std::vector<double> r(n);
    for (int i = 0; i < n; ++i) r[i] = lambda[i] * q[step][i];
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& prev : q) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += prev[i] * r[i];
        for (int i = 0; i < n; ++i) r[i] -= dot * prev[i];
      }
    double b = 0.0;
    for (double x : r) b += x * x;
    b = std::sqrt(b);
    if (b < 1e-12 * (1.0 + s.max_abs()))
      throw NumericError("tridiagonal reduction broke down");
    beta.push_back(b);
    for (double& x : r) x /= b;
    q.push_back(std::move(r));
  }

  auto pattern = build_family({Family::path, {n}});
  auto matrix = HollowMatrix::from_edge_weights(pattern, beta);
  auto eigs = eigensolve(matrix);
  RealizationResult out{matrix, cluster_default(eigs),
                        detail::max_pair_distance(eigs, lambda), 0};
  return out;
}

// ---------------------------------------------------------------------------
// Complete bipartite graphs

/// B = [[0, A],[A^T, 0]] with A = W diag(positive part) U for seeded random
/// orthogonal W, U.  Feasible iff the target is symmetric about the origin
/// with an even nonzero count k, 2 <= k <= 2m.
inline RealizationResult realize_complete_bipartite(int m, int n,
                                                    const TargetSpectrum& s,
                                                    long seed = 0) {
  if (m < 1 || n < m)
    throw ParameterError("complete bipartite sides need 1 <= m <= n");
  if (s.total() != m + n)
    throw ParameterError("target must have m+n entries");
  if (!s.is_symmetric())
    throw InfeasibleTarget(
        "spectra of hollow matrices on bipartite graphs are symmetric about "
        "the origin");
  int k = s.nonzero_count();
  if (k < 2 || k > 2 * m)
    throw InfeasibleTarget(
        "the nonzero count of a complete bipartite spectrum lies between 2 "
        "and twice the smaller side; got " + std::to_string(k));

  std::vector<double> pos;
  for (auto& [v, mult] : s.values())
    if (v > 0)
      for (int i = 0; i < mult; ++i) pos.push_back(v);
  int ell = k / 2;

  auto pattern = build_family({Family::complete_bipartite, {m, n}});
  for (int attempt = 0; attempt < detail::kDefaultRetries; ++attempt) {
    auto rng = detail::rng_for(seed, attempt);
    auto w = detail::random_orthogonal(m, rng);
    auto u = detail::random_orthogonal(n, rng);
    // A = W Dhat U with Dhat = diag(pos) padded to m x n.
    // W has orthonormal columns; interpret rows of U as the basis.
    std::vector<double> a(static_cast<std::size_t>(m) * n, 0.0);
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = 0; j < n; ++j) {
        double x = 0.0;
        for (int t = 0; t < ell; ++t)
          x += w[i + static_cast<std::size_t>(m) * t] * pos[t] *
               u[j + static_cast<std::size_t>(n) * t];
        a[static_cast<std::size_t>(i) * n + j] = x;
        if (std::abs(x) <= detail::kEntryFloor) {
          ok = false;
          break;
        }
      }
    if (!ok) continue;
    std::vector<double> weights(pattern.edges().size());
    for (std::size_t e = 0; e < pattern.edges().size(); ++e) {
      auto [i, j] = pattern.edges()[e];  // i < m <= j
      weights[e] = a[static_cast<std::size_t>(i) * n + (j - m)];
    }
    auto matrix = HollowMatrix::from_edge_weights(pattern, weights);
    auto eigs = eigensolve(matrix);
    return {matrix, cluster_default(eigs),
            detail::max_pair_distance(eigs, s.expanded()), seed};
  }
  throw NumericError(
      "could not draw orthogonal factors with all entries nonzero");
}

// ---------------------------------------------------------------------------
// Balanced tripartite graphs

/// scale * (I - 3 P P^T) written on K_{r,r,r}: spectrum
/// {(-2 scale)^(r), scale^(2r)}.  V, W seeded orthogonal with V, W and
/// V W^T entrywise nonzero.
inline RealizationResult realize_tripartite_rrr(int r, double scale,
                                                long seed = 0) {
  if (r < 1) throw ParameterError("tripartite block size must be positive");
  if (scale == 0.0) throw ParameterError("scale must be nonzero");

  auto pattern = build_family({Family::complete_tripartite_balanced, {r}});
  for (int attempt = 0; attempt < detail::kDefaultRetries; ++attempt) {
    auto rng = detail::rng_for(seed, attempt);
    auto v = detail::random_orthogonal(r, rng);
    auto w = detail::random_orthogonal(r, rng);
    std::vector<double> vwt(static_cast<std::size_t>(r) * r, 0.0);
    double least = 1.0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        double x = 0.0;
        for (int t = 0; t < r; ++t)
          x += v[i + static_cast<std::size_t>(r) * t] * w[j + static_cast<std::size_t>(r) * t];
        vwt[static_cast<std::size_t>(i) * r + j] = x;
        least = std::min(least, std::abs(x));
      }
    for (double x : v) least = std::min(least, std::abs(x));
    for (double x : w) least = std::min(least, std::abs(x));
    if (least <= detail::kEntryFloor) continue;

    int n3 = 3 * r;
    std::vector<double> dense(static_cast<std::size_t>(n3) * n3, 0.0);
    auto put = [&](int i, int j, double x) {
      dense[static_cast<std::size_t>(i) * n3 + j] = scale * -x;
      dense[static_cast<std::size_t>(j) * n3 + i] = scale * -x;
    };
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        put(i, r + j, v[i + static_cast<std::size_t>(r) * j]);
        put(i, 2 * r + j, vwt[static_cast<std::size_t>(i) * r + j]);
        put(r + i, 2 * r + j, w[j + static_cast<std::size_t>(r) * i]);  // W^T
      }
    auto matrix = HollowMatrix::from_dense(pattern, dense);
    std::vector<double> expected;
    for (int i = 0; i < r; ++i) expected.push_back(-2.0 * scale);
    for (int i = 0; i < 2 * r; ++i) expected.push_back(scale);
    auto eigs = eigensolve(matrix);
    return {matrix, cluster_default(eigs),
            detail::max_pair_distance(eigs, expected), seed};
  }
  throw NumericError(
      "could not draw orthogonal factors with all entries nonzero");
}

// ---------------------------------------------------------------------------
// Two-eigenvalue spectra scale freely

/// For q(A) = 2 the trace constraint pins the spectrum shape, so scaling
/// reaches every admissible eigenvalue pair.
inline HollowMatrix scale_two_eigenvalue(const HollowMatrix& a,
                                         double target_mu1) {
  auto spec = spectrum_of(a);
  if (spec.distinct() != 2)
    throw PreconditionError("matrix does not have exactly two distinct "
                            "eigenvalues; q = " +
                            std::to_string(spec.distinct()));
  double mu1 = spec.values[0].first;
  if (target_mu1 == 0.0 || (target_mu1 < 0) != (mu1 < 0))
    throw PreconditionError(
        "target smallest eigenvalue must be nonzero with the sign of the "
        "current one");
  return (target_mu1 / mu1) * a;
}

// ---------------------------------------------------------------------------
// Lifts

/// B = [[A, I],[I, -A]] on G x K2.  Needs spec(A) = -spec(A); then
/// spec(B) pairs +-sqrt(mu^2+1) with doubled multiplicities and +-1 for
/// the zero class.
inline HollowMatrix cartesian_k2_lift(const HollowMatrix& a) {
  auto spec = spectrum_of(a);
  if (!spectrum_is_symmetric(spec, spec.tol))
    throw PreconditionError(
        "cartesian lift needs a spectrum symmetric about the origin");
  int n = a.order();
  auto pattern = combine(GraphOp::cartesian_k2, a.pattern());
  int n2 = 2 * n;
  std::vector<double> dense(static_cast<std::size_t>(n2) * n2, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      dense[static_cast<std::size_t>(i) * n2 + j] = a(i, j);
      dense[static_cast<std::size_t>(n + i) * n2 + (n + j)] = -a(i, j);
    }
  for (int i = 0; i < n; ++i) {
    dense[static_cast<std::size_t>(i) * n2 + (n + i)] = 1.0;
    dense[static_cast<std::size_t>(n + i) * n2 + i] = 1.0;
  }
  return HollowMatrix::from_dense(pattern, dense);
}

/// Expected spectrum of cartesian_k2_lift(a), sorted ascending: every
/// eigenvalue mu of A turns into the pair +-sqrt(mu^2+1).
inline std::vector<double> cartesian_k2_lift_expected(const HollowMatrix& a) {
  std::vector<double> e;
  for (double v : eigensolve(a)) {
    double s = std::sqrt(v * v + 1.0);
    e.push_back(-s);
    e.push_back(s);
  }
  std::sort(e.begin(), e.end());
  return e;
}

/// Gram-factor bordering that raises the multiplicity of the smallest
/// eigenvalue by one on G v K1: factor A - mu1 I = R^T R, append a random
/// column of the right norm with all inner products nonzero, subtract back.
inline HollowMatrix dominating_vertex_lift(const HollowMatrix& a,
                                           long seed = 0) {
  const Graph& g = a.pattern();
  if (has_isolated_vertex(g))
    throw PreconditionError("dominating-vertex lift needs no isolated "
                            "vertices");
  int n = a.order();
  auto eig = eigensolve_full(a);
  double mu1 = eig.values[0];
  if (!(mu1 < 0.0))
    throw PreconditionError("smallest eigenvalue must be negative");
  double mu = -mu1;
  int m1 = cluster_default(eig.values).values.front().second;
  int d = n - m1;  // rank of A - mu1 I

  // rows of R: sqrt(values - mu1) Q^T restricted to the d nonzero rows;
  // column i has squared norm mu.  The appended column must live in the
  // same d-dimensional space or the rank (hence the nullity) would move.
  std::vector<double> r(static_cast<std::size_t>(d) * n, 0.0);  // r[t, i]
  for (int t = 0; t < d; ++t) {
    double s = std::sqrt(std::max(0.0, eig.values[m1 + t] - mu1));
    for (int i = 0; i < n; ++i)
      r[static_cast<std::size_t>(t) * n + i] = s * eig.vec(i, m1 + t);
  }

  std::normal_distribution<double> normal(0.0, 1.0);
  for (int attempt = 0; attempt < detail::kDefaultRetries; ++attempt) {
    auto rng = detail::rng_for(seed, attempt);
    std::vector<double> extra(d);
    double norm2 = 0.0;
    for (double& x : extra) {
      x = normal(rng);
      norm2 += x * x;
    }
    double rescale = std::sqrt(mu / norm2);
    for (double& x : extra) x *= rescale;

    std::vector<double> border(n, 0.0);
    double least = 1e300;
    for (int i = 0; i < n; ++i) {
      double dot = 0.0;
      for (int t = 0; t < d; ++t) dot += r[static_cast<std::size_t>(t) * n + i] * extra[t];
      border[i] = dot;
      least = std::min(least, std::abs(dot));
    }
    if (least <= detail::kEntryFloor) continue;

    auto k1 = build_family({Family::complete, {1}});
    auto pattern = combine(GraphOp::join, g, k1);
    int n1 = n + 1;
    std::vector<double> dense(static_cast<std::size_t>(n1) * n1, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) dense[static_cast<std::size_t>(i) * n1 + j] = a(i, j);
    for (int i = 0; i < n; ++i) {
      dense[static_cast<std::size_t>(i) * n1 + n] = border[i];
      dense[static_cast<std::size_t>(n) * n1 + i] = border[i];
    }
    return HollowMatrix::from_dense(pattern, dense);
  }
  throw NumericError("no random column with all inner products nonzero");
}

/// Rank-preserving bordering on G v K1: needs a repeated nonzero
/// eigenvalue with an entrywise-nonzero eigenvector; the border vector is
/// A v with v^T A v = 0 by the trace identity.
inline HollowMatrix border_rank_preserving(const HollowMatrix& a,
                                           long seed = 0) {
  int n = a.order();
  auto eig = eigensolve_full(a);
  auto spec = cluster_default(eig.values);
  double zero_cut = spec.tol;

  bool any_repeated_nonzero = false;
  std::normal_distribution<double> normal(0.0, 1.0);
  auto rng = detail::rng_for(seed, 0);

  int base = 0;
  for (auto& [value, mult] : spec.values) {
    int lo = base;
    base += mult;
    if (mult < 2 || std::abs(value) <= zero_cut) continue;
    any_repeated_nonzero = true;

    // search the eigenspace for an entrywise-nonzero unit vector
    std::vector<double> u;
    for (int attempt = 0; attempt < detail::kDefaultRetries; ++attempt) {
      std::vector<double> c(mult);
      double norm2 = 0.0;
      for (double& x : c) {
        x = normal(rng);
        norm2 += x * x;
      }
      std::vector<double> w(n, 0.0);
      for (int t = 0; t < mult; ++t)
        for (int i = 0; i < n; ++i) w[i] += c[t] / std::sqrt(norm2) * eig.vec(i, lo + t);
      double least = 1e300;
      for (double x : w) least = std::min(least, std::abs(x));
      if (least > detail::kEntryFloor) {
        u = std::move(w);
        break;
      }
    }
    if (u.empty()) continue;

    // orthonormal basis: x1 = u, x2 in the eigenspace orthogonal to u,
    // then every eigenvector outside the cluster and the re-orthogonalized
    // remainder of the cluster
    std::vector<std::vector<double>> basis;
    basis.push_back(u);
    std::vector<std::vector<double>> cluster_rest;
    for (int t = 0; t < mult; ++t) {
      std::vector<double> x(n);
      for (int i = 0; i < n; ++i) x[i] = eig.vec(i, lo + t);
      for (const auto& b : basis) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += b[i] * x[i];
        for (int i = 0; i < n; ++i) x[i] -= dot * b[i];
      }
      for (const auto& b : cluster_rest) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += b[i] * x[i];
        for (int i = 0; i < n; ++i) x[i] -= dot * b[i];
      }
      double norm2 = 0.0;
      for (double v : x) norm2 += v * v;
      if (norm2 > 1e-16) {
        for (double& v : x) v /= std::sqrt(norm2);
        cluster_rest.push_back(std::move(x));
      }
    }
    if (cluster_rest.empty()) continue;  // could not split the eigenspace
    std::vector<double> x2 = cluster_rest.front();
    cluster_rest.erase(cluster_rest.begin());

    std::vector<std::vector<double>> others = cluster_rest;
    for (int t = 0; t < n; ++t) {
      if (t >= lo && t < lo + mult) continue;
      std::vector<double> x(n);
      for (int i = 0; i < n; ++i) x[i] = eig.vec(i, t);
      others.push_back(std::move(x));
    }

    std::uniform_real_distribution<double> coef(-1.2, 1.2);
    for (int attempt = 0; attempt < detail::kDefaultRetries; ++attempt) {
      double alpha = coef(rng);
      double beta = std::sqrt(2.0 - alpha * alpha);
      std::vector<double> v(n, 0.0);
      for (int i = 0; i < n; ++i) v[i] = alpha * u[i] + beta * x2[i];
      for (const auto& x : others)
        for (int i = 0; i < n; ++i) v[i] += x[i];

      std::vector<double> border(n, 0.0);
      double least = 1e300;
      for (int i = 0; i < n; ++i) {
        double dot = 0.0;
        for (int j = 0; j < n; ++j) dot += a(i, j) * v[j];
        border[i] = dot;
        least = std::min(least, std::abs(dot));
      }
      if (least <= detail::kEntryFloor) continue;

      auto k1 = build_family({Family::complete, {1}});
      auto pattern = combine(GraphOp::join, a.pattern(), k1);
      int n1 = n + 1;
      std::vector<double> dense(static_cast<std::size_t>(n1) * n1, 0.0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          dense[static_cast<std::size_t>(i) * n1 + j] = a(i, j);
      for (int i = 0; i < n; ++i) {
        dense[static_cast<std::size_t>(i) * n1 + n] = border[i];
        dense[static_cast<std::size_t>(n) * n1 + i] = border[i];
      }
      return HollowMatrix::from_dense(pattern, dense);
    }
  }

  throw PreconditionError(
      any_repeated_nonzero
          ? "no entrywise-nonzero eigenvector found in any repeated nonzero "
            "eigenspace"
          : "no nonzero eigenvalue of multiplicity at least two");
}

// ---------------------------------------------------------------------------
// Smallest-eigenvalue multiplicity via orthogonal representations

/// Positive semidefinite search: unit vectors per vertex in dimension
/// n - psd_nullity with zero inner products on non-edges and nonzero on
/// edges; B = Gram - I then has smallest eigenvalue -1 of the requested
/// multiplicity.
inline RealizationResult realize_m_plus(const Graph& g, int psd_nullity,
                                        long seed = 0) {
  int n = g.order();
  if (has_isolated_vertex(g))
    throw PreconditionError("orthogonal-representation search needs no "
                            "isolated vertices");
  if (psd_nullity < 1 || psd_nullity >= n)
    throw ParameterError("psd nullity must lie in [1, n-1]");
  int d = n - psd_nullity;

  std::vector<VertexPair> nonedges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.has_edge(i, j)) nonedges.push_back({i, j});

  std::normal_distribution<double> normal(0.0, 1.0);
  for (int attempt = 0; attempt < detail::kDefaultRetries; ++attempt) {
    auto rng = detail::rng_for(seed, attempt);
    std::vector<std::vector<double>> r(n, std::vector<double>(d));
    for (auto& v : r)
      for (double& x : v) x = normal(rng);

    // alternating projections onto the non-edge orthogonality constraints
    bool clean = false;
    for (int sweep = 0; sweep < 500 && !clean; ++sweep) {
      double worst = 0.0;
      for (auto [i, j] : nonedges) {
        int mover = (sweep % 2 == 0) ? j : i;
        int fixed = mover == j ? i : j;
        double nf = 0.0, dot = 0.0;
        for (int t = 0; t < d; ++t) {
          nf += r[fixed][t] * r[fixed][t];
          dot += r[fixed][t] * r[mover][t];
        }
        if (nf < 1e-24) continue;
        for (int t = 0; t < d; ++t) r[mover][t] -= dot / nf * r[fixed][t];
      }
      for (auto [i, j] : nonedges) {
        double ni = 0.0, nj = 0.0, dot = 0.0;
        for (int t = 0; t < d; ++t) {
          ni += r[i][t] * r[i][t];
          nj += r[j][t] * r[j][t];
          dot += r[i][t] * r[j][t];
        }
        worst = std::max(worst, std::abs(dot) / std::sqrt(std::max(ni * nj, 1e-300)));
      }
      clean = worst < 1e-14;
    }
    if (!clean) continue;

    // normalize and build the Gram matrix; snap non-edges to exact zero
    bool ok = true;
    for (auto& v : r) {
      double norm2 = 0.0;
      for (double x : v) norm2 += x * x;
      if (norm2 < 1e-16) {
        ok = false;
        break;
      }
      for (double& x : v) x /= std::sqrt(norm2);
    }
    if (!ok) continue;

    std::vector<double> dense(static_cast<std::size_t>(n) * n, 0.0);
    double least_edge = 1e300;
    for (auto [i, j] : g.edges()) {
      double dot = 0.0;
      for (int t = 0; t < d; ++t) dot += r[i][t] * r[j][t];
      least_edge = std::min(least_edge, std::abs(dot));
      dense[static_cast<std::size_t>(i) * n + j] = dot;
      dense[static_cast<std::size_t>(j) * n + i] = dot;
    }
    if (least_edge <= detail::kEntryFloor) continue;

    auto matrix = HollowMatrix::from_dense(g, dense);
    auto eigs = eigensolve(matrix);
    auto spec = cluster_default(eigs);
    if (spec.values.front().second != psd_nullity ||
        std::abs(spec.values.front().first + 1.0) > 1e-6)
      continue;  // representation degenerated to a smaller rank
    double residual = 0.0;
    for (int i = 0; i < psd_nullity; ++i)
      residual = std::max(residual, std::abs(eigs[i] + 1.0));
    return {matrix, spec, residual, seed};
  }
  throw NotFoundError(
      "orthogonal representation search exhausted its budget (inconclusive)");
}

// ---------------------------------------------------------------------------
// All nonzero eigenvalues simple

/// Matrix of maximum hollow rank whose nonzero eigenvalues are all simple:
/// a maximum generalized cycle is weighted componentwise (cycles as
/// perturbed paths, components scaled by square roots of distinct primes)
/// and the remaining edges enter with a vanishing perturbation.
inline RealizationResult realize_all_simple(const Graph& g, long seed = 0,
                                            int order_limit = 14) {
  int n = g.order();
  if (g.edge_count() == 0) {
    auto matrix = HollowMatrix::from_edge_weights(g, {});
    auto eigs = eigensolve(matrix);
    return {matrix, cluster_default(eigs), 0.0, seed};
  }
  int mr = max_hollow_rank(g, order_limit);
  GeneralizedCycle cover;
  for_each_generalized_cycle(g, mr, [&](const GeneralizedCycle& c) {
    cover = c;
    return false;
  }, order_limit);

  static const double primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                  31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

  // cycle as a weighted ring: unit path weights with a small closing
  // weight, which keeps the eigenvalues simple; odd rings are automatically
  // nonsingular and even ones stay nonsingular for small closures
  auto ring_eigs = [](int m, double alpha, double eps) {
    std::vector<double> t(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i) {
      int j = (i + 1) % m;
      double w = (j == 0) ? eps : 1.0;
      t[static_cast<std::size_t>(i) * m + j] = w * alpha;
      t[static_cast<std::size_t>(j) * m + i] = w * alpha;
    }
    return jacobi_eigenvalues(t, m);
  };
  auto simple_nonzero_all = [](const std::vector<double>& e) {
    double scale = 1.0 + spectral_radius(e);
    if (std::abs(e[0]) <= 1e-9 * scale) return false;
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
      if (e[i + 1] - e[i] <= 1e-9 * scale ||
          std::abs(e[i + 1]) <= 1e-9 * scale)
        return false;
    return true;
  };

  // weighted union of the cover components with pairwise-distinct spectra
  std::vector<double> weights(g.edges().size(), 0.0);
  std::vector<double> base_eigs;
  int prime_at = 0;
  for (const auto& comp : cover.components) {
    bool placed = false;
    for (int tries = 0; tries < 40 && !placed; ++tries) {
      double alpha = std::sqrt(primes[prime_at % 20]) *
                     std::pow(1.0009, 1 + prime_at / 20);
      ++prime_at;
      std::vector<double> comp_eigs;
      double eps_used = 0.0;
      if (!comp.is_cycle) {
        comp_eigs = {-alpha, alpha};
      } else {
        for (double eps = 0.25; eps > 1e-12; eps *= 0.5) {
          auto e = ring_eigs(comp.size(), alpha, eps);
          if (simple_nonzero_all(e)) {
            comp_eigs = std::move(e);
            eps_used = eps;
            break;
          }
        }
        if (comp_eigs.empty())
          throw NumericError("could not make a cycle component simple");
      }
      bool clash = false;
      for (double x : comp_eigs)
        for (double y : base_eigs)
          if (std::abs(x - y) < 1e-7 * (1.0 + std::abs(x))) clash = true;
      if (clash) continue;

      base_eigs.insert(base_eigs.end(), comp_eigs.begin(), comp_eigs.end());
      if (!comp.is_cycle) {
        weights[g.edge_index(comp.verts[0], comp.verts[1])] = alpha;
      } else {
        int m = comp.size();
        for (int i = 0; i < m; ++i) {
          int u = comp.verts[i], v = comp.verts[(i + 1) % m];
          weights[g.edge_index(u, v)] = (i + 1 == m ? eps_used : 1.0) * alpha;
        }
      }
      placed = true;
    }
    if (!placed) throw NumericError("could not separate component spectra");
  }

  std::sort(base_eigs.begin(), base_eigs.end());
  double min_gap = 1e300;
  for (double x : base_eigs) min_gap = std::min(min_gap, std::abs(x));
  for (std::size_t i = 0; i + 1 < base_eigs.size(); ++i)
    min_gap = std::min(min_gap, base_eigs[i + 1] - base_eigs[i]);

  // perturb the leftover edges until the spectrum is simple-nonzero of the
  // right rank
  double eps = 0.01 * min_gap;
  for (; eps > 1e-12; eps *= 0.5) {
    std::vector<double> w = weights;
    bool leftover = false;
    for (std::size_t e = 0; e < w.size(); ++e)
      if (w[e] == 0.0) {
        w[e] = eps;
        leftover = true;
      }
    auto matrix = HollowMatrix::from_edge_weights(g, w);
    auto eigs = eigensolve(matrix);
    auto spec = cluster_default(eigs);
    double cut = 1e-8 * std::max(1.0, spectral_radius(eigs));
    int zero_class = -1, simple_nonzero = 0;
    bool good = true;
    for (std::size_t c = 0; c < spec.values.size(); ++c) {
      if (std::abs(spec.values[c].first) <= cut) {
        zero_class = static_cast<int>(c);
      } else if (spec.values[c].second == 1) {
        ++simple_nonzero;
      } else {
        good = false;
      }
    }
    int zeros = zero_class >= 0 ? spec.values[zero_class].second : 0;
    if (good && simple_nonzero == mr && zeros == n - mr) {
      return {matrix, spec, detail::block_spread(eigs, spec.oml()), seed};
    }
    if (!leftover)
      throw NumericError("cover weighting did not produce simple spectrum");
  }
  throw NumericError("perturbation underflow before the spectrum was simple");
}

// ---------------------------------------------------------------------------
// Flipped cycles

/// Adjacency of C_n with one symmetric pair of ones negated.  The
/// multiplicity list is all twos for even n and (1,2,...,2) for odd n.
inline HollowMatrix flipped_cycle(int n) {
  if (n < 3) throw ParameterError("cycles need n >= 3");
  auto pattern = build_family({Family::cycle, {n}});
  std::vector<double> w(pattern.edges().size(), 1.0);
  int flip = pattern.edge_index(0, n - 1);
  w[flip] = -1.0;
  return HollowMatrix::from_edge_weights(pattern, w);
}

}  // namespace hollow
