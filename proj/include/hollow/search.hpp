#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hollow/obstructions.hpp"
#include "hollow/realizers.hpp"

namespace hollow {

struct SearchConfig {
  long seed = 0;
  int restarts = 64;
  int max_iters = 2000;          // coordinate sweeps per restart
  double accept_tol = 1e-7;      // relative residual for "realized"
  double step_tol = 1e-12;       // smallest coordinate step
  double weight_floor = 1e-6;    // |w| below this is penalized
  std::vector<double> grid = {1.0, -1.0, 2.0, -2.0, 0.5, -0.5};
  int oml_outer_iters = 10;      // representative refits for list targets
  int order_limit = 14;          // generalized-cycle enumeration bound
};

enum class SearchStatus { realized, refuted, not_found };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::realized: return "realized";
    case SearchStatus::refuted: return "refuted";
    case SearchStatus::not_found: return "not_found";
  }
  return "?";
}

struct SearchOutcome {
  SearchStatus status = SearchStatus::not_found;
  std::optional<RealizationResult> best;
  std::vector<ObstructionCertificate> bound_certificates;
  long evals = 0;  // objective evaluations; zero when a rule short-circuits
  int restarts_used = 0;
};

// ---------------------------------------------------------------------------
// Derivative-free weight fitting

namespace detail {

struct Descent {
  std::vector<double> weights;
  double objective = 1e300;
  long evals = 0;
};

/// Sum of squared sorted-eigenvalue deviations plus a barrier that keeps
/// every weight away from zero (pattern membership needs strict nonzeros).
inline double spectral_objective(const Graph& g, std::vector<double>& w,
                                 const std::vector<double>& target,
                                 double floor_penalty_scale, double floor) {
  double penalty = 0.0;
  for (double x : w) {
    double a = std::abs(x);
    if (a < floor) {
      double miss = (floor - a) / floor;
      penalty += floor_penalty_scale * miss * miss;
    }
  }
  std::vector<double> wl = w;
  for (double& x : wl)
    if (x == 0.0) x = floor;  // structural zeros are not representable
  auto m = HollowMatrix::from_edge_weights(g, wl);
  auto eigs = eigensolve(m);
  double f = penalty;
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    double d = eigs[i] - target[i];
    f += d * d;
  }
  return f;
}

/// Adaptive pattern search over edge weights, one coordinate at a time.
/// Deterministic for a given start; repeated eigenvalues make the target
/// set nonsmooth, which this tolerates at the cost of a linear rate.
inline Descent coordinate_descent(const Graph& g, std::vector<double> w,
                                  const std::vector<double>& target,
                                  const SearchConfig& cfg, double accept_f,
                                  long eval_budget = 200000) {
  Descent d;
  double scale = 1.0 + spectral_radius(target);
  double penalty_scale = 1e3 * scale * scale;
  auto f = [&](std::vector<double>& x) {
    ++d.evals;
    return spectral_objective(g, x, target, penalty_scale, cfg.weight_floor);
  };
  double cur = f(w);
  std::vector<double> steps(w.size());
  for (std::size_t e = 0; e < w.size(); ++e)
    steps[e] = 0.25 * (1.0 + std::abs(w[e]));

  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    if (cur <= accept_f || d.evals > eval_budget) break;
    double max_step = 0.0;
    for (std::size_t e = 0; e < w.size(); ++e) {
      bool improved = false;
      for (double dir : {+1.0, -1.0}) {
        double saved = w[e];
        w[e] = saved + dir * steps[e];
        double trial = f(w);
        if (trial < cur) {
          cur = trial;
          improved = true;
          break;
        }
        w[e] = saved;
      }
      steps[e] *= improved ? 1.6 : 0.5;
      max_step = std::max(max_step, steps[e]);
    }
    if (max_step < cfg.step_tol) break;
  }
  d.weights = std::move(w);
  d.objective = cur;
  return d;
}

inline std::vector<double> random_start(const Graph& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<double> w(g.edges().size());
  for (double& x : w) x = (sign(rng) ? 1.0 : -1.0) * mag(rng);
  return w;
}

inline RealizationResult result_from_weights(const Graph& g,
                                             const std::vector<double>& w,
                                             const std::vector<double>& target,
                                             long seed) {
  auto m = HollowMatrix::from_edge_weights(g, w);
  auto eigs = eigensolve(m);
  return {m, cluster_default(eigs), max_pair_distance(eigs, target), seed};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Spectrum search

/// Obstruction rules first; surviving targets go to multistart coordinate
/// descent over the edge weights.  not_found is inconclusive by design.
inline SearchOutcome search_spectrum(const Graph& g, const TargetSpectrum& s,
                                     const SearchConfig& cfg = {}) {
  if (s.total() != g.order())
    throw ParameterError("target size must equal the graph order");
  SearchOutcome out;
  out.bound_certificates = certify(g, s, cfg.order_limit);
  if (!out.bound_certificates.empty()) {
    out.status = SearchStatus::refuted;
    return out;
  }
  if (g.edge_count() == 0) {
    // the zero matrix is the only candidate; rules already vetted the target
    auto m = HollowMatrix::from_edge_weights(g, {});
    auto eigs = eigensolve(m);
    out.best = RealizationResult{m, cluster_default(eigs),
                                 detail::max_pair_distance(eigs, s.expanded()),
                                 cfg.seed};
    out.status = out.best->residual == 0.0 ? SearchStatus::realized
                                           : SearchStatus::not_found;
    return out;
  }

  auto target = s.expanded();
  double accept = cfg.accept_tol * (1.0 + s.max_abs());
  double accept_f = accept * accept / 4.0;

  std::optional<detail::Descent> best;
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    auto rng = detail::rng_for(cfg.seed, 1000003L * restart);
    auto d = detail::coordinate_descent(g, detail::random_start(g, rng),
                                        target, cfg, accept_f);
    out.evals += d.evals;
    out.restarts_used = restart + 1;
    if (!best || d.objective < best->objective) best = std::move(d);
    if (best->objective <= accept_f) break;
  }
  out.best = detail::result_from_weights(g, best->weights, target, cfg.seed);
  out.status = out.best->residual <= accept ? SearchStatus::realized
                                            : SearchStatus::not_found;
  return out;
}

// ---------------------------------------------------------------------------
// Candidate witnesses for list targets and parameter estimation

namespace detail {

inline void push_candidate(std::vector<std::pair<HollowMatrix, std::string>>& v,
                           const char* what,
                           const std::function<HollowMatrix()>& make) {
  try {
    v.push_back({make(), what});
  } catch (const Error&) {
    // candidate routes are best effort
  }
}

}  // namespace detail

/// Deterministic pool of constructively known matrices on G: adjacency and
/// its negative, flipped cycles, the all-simple weighting, Gram-based
/// smallest-eigenvalue witnesses, family realizers, dominating-vertex and
/// doubling lifts.  Used as warm candidates by the list search and as
/// witnesses by the parameter estimators.
inline std::vector<std::pair<HollowMatrix, std::string>> candidate_matrices(
    const Graph& g, long seed = 0, int order_limit = 14) {
  std::vector<std::pair<HollowMatrix, std::string>> out;
  using detail::push_candidate;
  if (g.edge_count() == 0) {
    push_candidate(out, "zero",
                   [&] { return HollowMatrix::from_edge_weights(g, {}); });
    return out;
  }
  push_candidate(out, "adjacency", [&] { return HollowMatrix::adjacency(g); });
  push_candidate(out, "negated adjacency",
                 [&] { return -HollowMatrix::adjacency(g); });

  auto families = recognize_families(g);
  auto has = [&](const char* key) {
    for (const auto& f : families)
      if (f.key == key) return true;
    return false;
  };
  auto params = [&](const char* key) {
    for (const auto& f : families)
      if (f.key == key) return f.params;
    return std::vector<int>{};
  };

  if (has("cycle")) {
    push_candidate(out, "flipped cycle",
                   [&] { return flipped_cycle(g.order()); });
    push_candidate(out, "negated flipped cycle",
                   [&] { return -flipped_cycle(g.order()); });
  }
  if (has("complete") && g.order() >= 3) {
    // the squared-difference matrix: hollow of rank three on any clique
    auto squared_difference = [&] {
      int n = g.order();
      std::vector<double> dense(static_cast<std::size_t>(n) * n, 0.0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          dense[static_cast<std::size_t>(i) * n + j] =
              static_cast<double>((i - j) * (i - j));
      return HollowMatrix::from_dense(g, dense);
    };
    push_candidate(out, "squared-difference matrix", squared_difference);
    push_candidate(out, "negated squared-difference matrix",
                   [&] { return -squared_difference(); });
  }
  if (g.order() <= order_limit)
    push_candidate(out, "all nonzero eigenvalues simple", [&] {
      return realize_all_simple(g, seed, order_limit).matrix;
    });
  if (auto mp = catalog_exact(g, "M_plus")) {
    push_candidate(out, "smallest eigenvalue of psd nullity multiplicity",
                   [&] { return realize_m_plus(g, *mp, seed).matrix; });
    push_candidate(out, "largest eigenvalue of psd nullity multiplicity",
                   [&] { return -realize_m_plus(g, *mp, seed).matrix; });
  }
  if (has("wheel")) {
    int n = params("wheel")[0];
    push_candidate(out, "dominating-vertex lift of a rim witness", [&] {
      auto rim = build_family({Family::cycle, {n - 1}});
      return dominating_vertex_lift(realize_m_plus(rim, 2, seed).matrix, seed);
    });
    push_candidate(out, "negated dominating-vertex lift of a rim witness", [&] {
      auto rim = build_family({Family::cycle, {n - 1}});
      return -dominating_vertex_lift(realize_m_plus(rim, 2, seed).matrix, seed);
    });
    push_candidate(out, "rank-preserving bordering of the rim adjacency", [&] {
      auto rim = build_family({Family::cycle, {n - 1}});
      return border_rank_preserving(HollowMatrix::adjacency(rim), seed);
    });
    push_candidate(out, "rank-preserving bordering of the flipped rim", [&] {
      return border_rank_preserving(flipped_cycle(n - 1), seed);
    });
    if (n == 5) {
      auto w5 = build_family({Family::wheel, {5}});
      double s2 = std::sqrt(2.0);
      double s6 = 1.0 / std::sqrt(6.0), s3 = 1.0 / std::sqrt(3.0);
      std::vector<std::map<VertexPair, double>> fixed = {
          {{{0, 1}, 1}, {{1, 2}, -1}, {{2, 3}, 1}, {{0, 3}, -1},
           {{0, 4}, 1}, {{1, 4}, 1}, {{2, 4}, 1}, {{3, 4}, 1}},
          {{{0, 1}, 1}, {{1, 2}, 1}, {{2, 3}, 1}, {{0, 3}, 1},
           {{0, 4}, s2}, {{1, 4}, s2}, {{2, 4}, s2}, {{3, 4}, s2}},
          {{{0, 1}, s6}, {{1, 2}, s6}, {{2, 3}, s3}, {{0, 3}, s3},
           {{0, 4}, std::sqrt(2.0 / 3.0)}, {{1, 4}, 1.0 / 6.0},
           {{2, 4}, s6}, {{3, 4}, 2.0 * s2 / 3.0}}};
      for (const auto& weights : fixed) {
        push_candidate(out, "five-wheel closed-form witness", [&] {
          return HollowMatrix::from_weight_map(w5, weights);
        });
        push_candidate(out, "negated five-wheel closed-form witness", [&] {
          return -HollowMatrix::from_weight_map(w5, weights);
        });
      }
    }
  }
  if (has("krrr")) {
    int r = params("krrr")[0];
    push_candidate(out, "tripartite orthogonal-block witness",
                   [&] { return realize_tripartite_rrr(r, 1.0, seed).matrix; });
    push_candidate(out, "negated tripartite orthogonal-block witness",
                   [&] { return realize_tripartite_rrr(r, -1.0, seed).matrix; });
  }
  if (has("kmn")) {
    auto p = params("kmn");
    int m = p[0], n = p[1];
    push_candidate(out, "rank-two bipartite witness", [&] {
      std::vector<std::pair<double, int>> vals{{-1.0, 1}, {1.0, 1}};
      if (m + n > 2) vals.insert(vals.begin() + 1, {0.0, m + n - 2});
      return realize_complete_bipartite(m, n, TargetSpectrum::from_pairs(vals),
                                        seed)
          .matrix;
    });
    if (m == n)
      push_candidate(out, "orthogonal bipartite witness", [&] {
        std::vector<std::pair<double, int>> vals{{-1.0, m}, {1.0, m}};
        return realize_complete_bipartite(
                   m, n, TargetSpectrum::from_pairs(vals), seed)
            .matrix;
      });
  }
  if (has("hypercube")) {
    int d = params("hypercube")[0];
    push_candidate(out, "iterated doubling of an edge", [&] {
      auto m = HollowMatrix::adjacency(build_family({Family::complete, {2}}));
      for (int i = 1; i < d; ++i) m = cartesian_k2_lift(m);
      return m;
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ordered-multiplicity-list search

namespace detail {

/// Trace-feasible representatives for a list target: symmetric ramp
/// projected onto the zero-trace hyperplane, scaled to unit radius.
inline std::vector<double> initial_representatives(
    const OrderedMultiplicityList& oml, int variant) {
  int q = oml.length();
  std::vector<double> mu(q);
  for (int j = 0; j < q; ++j)
    mu[j] = (j - (q - 1) / 2.0) * (1.0 + 0.15 * variant);
  if (variant % 2 == 1)
    for (int j = 0; j < q; ++j) mu[j] += 0.3;  // asymmetric start
  double mm = 0.0, mdot = 0.0;
  for (int j = 0; j < q; ++j) {
    mm += static_cast<double>(oml.m[j]) * oml.m[j];
    mdot += oml.m[j] * mu[j];
  }
  for (int j = 0; j < q; ++j) mu[j] -= mdot / mm * oml.m[j];
  return mu;
}

inline std::vector<double> expand_representatives(
    const OrderedMultiplicityList& oml, const std::vector<double>& mu) {
  std::vector<double> flat;
  for (int j = 0; j < oml.length(); ++j)
    for (int i = 0; i < oml.m[j]; ++i) flat.push_back(mu[j]);
  return flat;
}

}  // namespace detail

/// Realize an ordered multiplicity list: rules first, then constructive
/// candidates, then an alternating fit that re-centers the free
/// representative values between weight optimizations.
inline SearchOutcome search_oml(const Graph& g,
                                const OrderedMultiplicityList& target,
                                const SearchConfig& cfg = {}) {
  if (target.total() != g.order())
    throw ParameterError("multiplicities must sum to the graph order");
  SearchOutcome out;
  out.bound_certificates = certify(g, target, cfg.order_limit);
  if (!out.bound_certificates.empty()) {
    out.status = SearchStatus::refuted;
    return out;
  }

  auto accept_result = [&](const HollowMatrix& m,
                           const std::string&) -> bool {
    auto eigs = eigensolve(m);
    auto spec = cluster_default(eigs);
    if (spec.oml() != target) return false;
    double spread = detail::block_spread(eigs, target);
    if (spread > cfg.accept_tol) return false;
    out.best = RealizationResult{m, spec, spread, cfg.seed};
    out.status = SearchStatus::realized;
    return true;
  };

  for (const auto& [m, what] : candidate_matrices(g, cfg.seed, cfg.order_limit))
    if (accept_result(m, what)) return out;

  // hypercube doubling reaches the (2^k, ..., 2^k) lists
  for (const auto& fam : recognize_families(g)) {
    if (fam.key != "hypercube") continue;
    int d = fam.params[0];
    bool uniform = true;
    for (int m : target.m) uniform = uniform && m == target.m[0];
    int c = target.m[0];
    bool pow2 = c > 0 && (c & (c - 1)) == 0;
    if (!uniform || !pow2) continue;
    int k = 0;
    while ((1 << k) < c) ++k;
    if (k >= d || target.length() != (1 << (d - k))) continue;
    try {
      auto base = realize_all_simple(
          build_family({Family::hypercube, {d - k}}), cfg.seed,
          cfg.order_limit);
      HollowMatrix m = base.matrix;
      for (int i = 0; i < k; ++i) m = cartesian_k2_lift(m);
      if (accept_result(m, "iterated doubling")) return out;
    } catch (const Error&) {
    }
  }

  // complete bipartite patterns realize palindromic lists directly
  for (const auto& fam : recognize_families(g)) {
    if (fam.key != "kmn" || !target.palindromic()) continue;
    int m = fam.params[0], n = fam.params[1];
    int q = target.length();
    std::vector<std::pair<double, int>> vals;
    for (int j = 0; j < q; ++j) {
      double v = (q % 2 == 1) ? static_cast<double>(j - q / 2)
                              : (j < q / 2 ? j - q / 2 : j - q / 2 + 1);
      vals.push_back({v, target.m[j]});
    }
    try {
      auto res = realize_complete_bipartite(
          m, n, TargetSpectrum::from_pairs(vals), cfg.seed);
      if (accept_result(res.matrix, "bipartite factor construction"))
        return out;
    } catch (const Error&) {
    }
  }

  // alternating numeric fit
  std::optional<RealizationResult> best;
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    auto rng = detail::rng_for(cfg.seed, 7777L + restart);
    auto mu = detail::initial_representatives(target, restart % 5);
    auto w = detail::random_start(g, rng);
    for (int outer = 0; outer < cfg.oml_outer_iters; ++outer) {
      auto flat = detail::expand_representatives(target, mu);
      double accept = cfg.accept_tol * (1.0 + spectral_radius(flat));
      auto d = detail::coordinate_descent(g, w, flat, cfg, accept * accept / 4.0,
                                          40000);
      out.evals += d.evals;
      w = d.weights;
      auto m = HollowMatrix::from_edge_weights(g, w);
      auto eigs = eigensolve(m);
      // re-center representatives on the achieved blocks, keep zero trace
      std::size_t at = 0;
      for (int j = 0; j < target.length(); ++j) {
        double sum = 0.0;
        for (int i = 0; i < target.m[j]; ++i) sum += eigs[at + i];
        mu[j] = sum / target.m[j];
        at += target.m[j];
      }
      double mm = 0.0, mdot = 0.0;
      for (int j = 0; j < target.length(); ++j) {
        mm += static_cast<double>(target.m[j]) * target.m[j];
        mdot += target.m[j] * mu[j];
      }
      for (int j = 0; j < target.length(); ++j)
        mu[j] -= mdot / mm * target.m[j];

      auto spec = cluster_default(eigs);
      double spread = detail::block_spread(eigs, target);
      RealizationResult cand{m, spec, spread, cfg.seed};
      if (!best || cand.residual < best->residual) best = cand;
      if (spec.oml() == target && spread <= cfg.accept_tol) {
        out.best = cand;
        out.status = SearchStatus::realized;
        out.restarts_used = restart + 1;
        return out;
      }
    }
    out.restarts_used = restart + 1;
  }
  out.best = best;
  out.status = SearchStatus::not_found;
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive grid oracle

/// Every weighting from the grid, clustered; the returned set of lists is
/// realizable but the grid may miss lists.  Guarded to at most eight edges.
inline std::set<OrderedMultiplicityList> brute_force_oracle(
    const Graph& g, const SearchConfig& cfg = {}) {
  if (g.edge_count() > 8)
    throw ParameterError("grid oracle is limited to eight edges");
  for (double x : cfg.grid)
    if (x == 0.0) throw ParameterError("grid must exclude zero");
  std::set<OrderedMultiplicityList> out;
  std::size_t edges = g.edges().size();
  std::vector<std::size_t> idx(edges, 0);
  std::vector<double> w(edges);
  while (true) {
    for (std::size_t e = 0; e < edges; ++e) w[e] = cfg.grid[idx[e]];
    out.insert(oml_of(HollowMatrix::from_edge_weights(g, w)));
    std::size_t e = 0;
    for (; e < edges; ++e) {
      if (++idx[e] < cfg.grid.size()) break;
      idx[e] = 0;
    }
    if (e == edges) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parameter estimation with certified brackets and witnesses

struct ParameterEstimate {
  int lo = 0, hi = 0;
  std::optional<HollowMatrix> witness;
  std::string witness_what;
};

struct ExtremalEstimates {
  ParameterEstimate q0, M0, MM0;
  std::vector<std::pair<std::string, std::string>> facts;
};

/// Witness-side lower bounds (matrices found) against rule/catalog upper
/// bounds for q0, M0 and MM0.
inline ExtremalEstimates estimate_extremes(const Graph& g,
                                           const SearchConfig& cfg = {}) {
  ExtremalEstimates est;
  int n = g.order();

  auto q0b = q0_bounds(g, cfg.order_limit);
  est.facts = q0b.facts;
  est.q0.lo = q0b.lo;
  est.q0.hi = q0b.hi;

  int mr0_lo = fact_mr0_lower(g, cfg.order_limit);
  est.M0.lo = 0;
  est.M0.hi = n - mr0_lo;
  est.MM0.lo = g.edge_count() ? 1 : n;
  est.MM0.hi = fact_mm0_upper(g);
  if (auto c = catalog_exact(g, "M0")) {
    est.M0.lo = std::max(est.M0.lo, *c);
    est.M0.hi = std::min(est.M0.hi, *c);
  }
  if (auto c = catalog_exact(g, "MM0")) {
    est.MM0.lo = std::max(est.MM0.lo, *c);
    est.MM0.hi = std::min(est.MM0.hi, *c);
  }

  int best_q = est.q0.hi + 1, best_nullity = -1, best_mult = -1;
  for (const auto& [m, what] : candidate_matrices(g, cfg.seed, cfg.order_limit)) {
    auto spec = spectrum_of(m);
    int q = spec.distinct();
    if (q < best_q) {
      best_q = q;
      est.q0.witness = m;
      est.q0.witness_what = what;
      est.q0.hi = std::min(est.q0.hi, q);
    }
    int nullity = n - numeric_rank(m);
    if (nullity > best_nullity) {
      best_nullity = nullity;
      est.M0.witness = m;
      est.M0.witness_what = what;
      est.M0.lo = std::max(est.M0.lo, nullity);
    }
    int top = spec.oml().max_entry();
    if (top > best_mult) {
      best_mult = top;
      est.MM0.witness = m;
      est.MM0.witness_what = what;
      est.MM0.lo = std::max(est.MM0.lo, top);
    }
  }
  return est;
}

}  // namespace hollow
