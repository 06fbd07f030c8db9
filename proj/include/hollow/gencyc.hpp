#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "hollow/graph.hpp"
#include "hollow/matrix.hpp"

namespace hollow {

/// One component of a generalized cycle: a single edge (two vertices) or a
/// cycle of length >= 3.  Cycles are stored canonically: the anchor
/// verts[0] is the minimum, and verts[1] < verts.back() fixes one of the
/// two orientations.
struct CycleComponent {
  std::vector<int> verts;
  bool is_cycle = false;

  int size() const { return static_cast<int>(verts.size()); }
  bool even() const { return size() % 2 == 0; }
};

/// Vertex-disjoint union of edges and cycles covering a vertex subset.
struct GeneralizedCycle {
  std::vector<CycleComponent> components;

  int order() const {
    int s = 0;
    for (const auto& c : components) s += c.size();
    return s;
  }
  /// Number of cycle components of length >= 3.
  int nc() const {
    int s = 0;
    for (const auto& c : components) s += c.is_cycle ? 1 : 0;
    return s;
  }
  /// Number of even components (edges plus even cycles).
  int ne() const {
    int s = 0;
    for (const auto& c : components) s += c.even() ? 1 : 0;
    return s;
  }
  int sign() const { return ne() % 2 == 0 ? 1 : -1; }
};

namespace detail {

// Recursive packing of vertex-disjoint components.  Vertices are decided
// in increasing order: skipped, or made the anchor (minimum vertex) of a
// new edge/cycle component.  Anchoring plus the orientation rule
// second < last yields each cover exactly once, in a fixed order.
class GenCycEnumerator {
 public:
  GenCycEnumerator(const Graph& g, int k,
                   const std::function<bool(const GeneralizedCycle&)>& emit)
      : g_(g), k_(k), emit_(emit), used_(g.order(), 0) {}

  // returns false if the visitor stopped the enumeration
  bool run() {
    if (k_ == 0) return emit_(current_);
    return walk(0, 0);
  }

 private:
  bool walk(int v, int covered) {
    if (covered == k_) return emit_(current_);
    while (v < g_.order() && used_[v]) ++v;
    if (v == g_.order()) return true;
    if (covered + (g_.order() - v) < k_) return true;  // cannot reach k

    // v stays uncovered
    if (!walk(v + 1, covered)) return false;

    int room = k_ - covered;
    if (room >= 2) {
      used_[v] = 1;
      // edge components {v,u}, u > v
      for (int u : g_.neighbors(v)) {
        if (u < v || used_[u]) continue;
        used_[u] = 1;
        current_.components.push_back({{v, u}, false});
        bool go = walk(v + 1, covered + 2);
        current_.components.pop_back();
        used_[u] = 0;
        if (!go) return false;
      }
      // cycle components anchored at v
      if (room >= 3) {
        std::vector<int> path{v};
        if (!grow_cycle(v, covered, room, path)) return false;
      }
      used_[v] = 0;
    }
    return true;
  }

  // extend path (anchored at its first vertex, all others unused and
  // > anchor) one vertex at a time; close whenever the end is adjacent to
  // the anchor, the length is >= 3 and the orientation is canonical.
  bool grow_cycle(int anchor, int covered, int room, std::vector<int>& path) {
    int end = path.back();
    for (int u : g_.neighbors(end)) {
      if (u <= anchor || used_[u]) continue;
      used_[u] = 1;
      path.push_back(u);
      if (path.size() >= 3 && path[1] < path.back() &&
          g_.has_edge(u, anchor)) {
        current_.components.push_back({path, true});
        bool go = walk(anchor + 1, covered + static_cast<int>(path.size()));
        current_.components.pop_back();
        if (!go) return false;
      }
      if (static_cast<int>(path.size()) < room) {
        if (!grow_cycle(anchor, covered, room, path)) return false;
      }
      path.pop_back();
      used_[u] = 0;
    }
    return true;
  }

  const Graph& g_;
  int k_;
  const std::function<bool(const GeneralizedCycle&)>& emit_;
  std::vector<char> used_;
  GeneralizedCycle current_;
};

}  // namespace detail

/// Visits every generalized cycle of order exactly k, in a deterministic
/// canonical order.  The visitor returns false to stop early.
inline void for_each_generalized_cycle(
    const Graph& g, int k,
    const std::function<bool(const GeneralizedCycle&)>& visit,
    int order_limit = 14) {
  if (k < 0 || k > g.order())
    throw ParameterError("generalized cycle order out of range");
  if (k > order_limit)
    throw ParameterError(
        "generalized cycle order exceeds the enumeration limit (" +
        std::to_string(order_limit) + "); raise the limit explicitly");
  detail::GenCycEnumerator e(g, k, visit);
  e.run();
}

inline std::vector<GeneralizedCycle> enumerate_generalized_cycles(
    const Graph& g, int k, int order_limit = 14) {
  std::vector<GeneralizedCycle> out;
  for_each_generalized_cycle(
      g, k,
      [&](const GeneralizedCycle& c) {
        out.push_back(c);
        return true;
      },
      order_limit);
  return out;
}

inline bool has_generalized_cycle(const Graph& g, int k, int order_limit = 14) {
  bool found = false;
  for_each_generalized_cycle(
      g, k,
      [&](const GeneralizedCycle&) {
        found = true;
        return false;
      },
      order_limit);
  return found;
}

inline std::uint64_t count_generalized_cycles(const Graph& g, int k,
                                              int order_limit = 14) {
  std::uint64_t count = 0;
  for_each_generalized_cycle(
      g, k,
      [&](const GeneralizedCycle&) {
        ++count;
        return true;
      },
      order_limit);
  return count;
}

/// Maximum rank over the hollow matrices of G: the maximum order of a
/// generalized cycle.  0 for edgeless graphs.
inline int max_hollow_rank(const Graph& g, int order_limit = 14) {
  if (g.edge_count() == 0) return 0;
  if (g.order() > order_limit)
    throw ParameterError(
        "max_hollow_rank needs enumeration up to the graph order; raise "
        "order_limit (default 14)");
  for (int k = g.order(); k >= 2; --k)
    if (has_generalized_cycle(g, k, order_limit)) return k;
  return 0;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial coefficients

/// Coefficients S_k of p_A(x) = x^n - S_1 x^{n-1} + S_2 x^{n-2} - ... ;
/// S_k is the sum of all order-k principal minors.  For hollow A, S_1 = 0.
struct CharPolyCoefficients {
  int n = 0;
  std::vector<double> s;  // s[k-1] = S_k

  double S(int k) const {
    if (k < 1 || k > n) throw ParameterError("coefficient index out of range");
    return s[k - 1];
  }
  /// Dense polynomial x^n - S_1 x^{n-1} + ... +- S_n, highest degree first.
  std::vector<double> monic() const {
    std::vector<double> c(n + 1);
    c[0] = 1.0;
    double sign = -1.0;
    for (int k = 1; k <= n; ++k, sign = -sign) c[k] = sign * s[k - 1];
    return c;
  }
};

namespace detail {

inline bool integral_entries(const HollowMatrix& a) {
  for (double x : a.entries())
    if (x != std::floor(x) || std::abs(x) > 1e6) return false;
  return true;
}

// product of matrix entries along the permutation associated with one
// component; for an edge {u,v} that is a_uv * a_vu = a_uv^2, for a cycle
// one orientation's product (the caller supplies the 2^nc multiplier).
inline double component_product(const HollowMatrix& a,
                                const CycleComponent& c) {
  if (!c.is_cycle) {
    double w = a(c.verts[0], c.verts[1]);
    return w * w;
  }
  double p = 1.0;
  for (std::size_t i = 0; i < c.verts.size(); ++i)
    p *= a(c.verts[i], c.verts[(i + 1) % c.verts.size()]);
  return p;
}

}  // namespace detail

/// S_k via the generalized-cycle expansion: each cover of order k
/// contributes sign * 2^{nc} * (product of its entries, one orientation
/// per cycle).  Exact 64-bit integer accumulation when every entry is an
/// integer and nothing overflows; doubles otherwise.
inline CharPolyCoefficients charpoly_via_gencyc(const HollowMatrix& a,
                                                int order_limit = 14) {
  const int n = a.order();
  CharPolyCoefficients out;
  out.n = n;
  out.s.assign(n, 0.0);
  const bool integral = detail::integral_entries(a);

  for (int k = 2; k <= n; ++k) {
    double acc = 0.0;
    long long iacc = 0;
    bool exact = integral;
    for_each_generalized_cycle(
        a.pattern(), k,
        [&](const GeneralizedCycle& c) {
          double term = (c.ne() % 2 ? -1.0 : 1.0) *
                        std::ldexp(1.0, c.nc());
          for (const auto& comp : c.components)
            term *= detail::component_product(a, comp);
          if (exact) {
            long long t = std::llround(term);
            if (static_cast<double>(t) == term) {
              if (__builtin_add_overflow(iacc, t, &iacc)) exact = false;
            } else {
              exact = false;
            }
          }
          acc += term;
          return true;
        },
        order_limit);
    out.s[k - 1] = exact ? static_cast<double>(iacc) : acc;
  }
  return out;
}

/// Independent route: S_k as the elementary symmetric functions of the
/// eigenvalues returned by the Jacobi solver.
inline CharPolyCoefficients charpoly_direct(const HollowMatrix& a) {
  const int n = a.order();
  auto eigs = eigensolve(a);
  // expand prod (x - lambda_i) in long double
  std::vector<long double> c(n + 1, 0.0L);
  c[0] = 1.0L;
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k >= 1; --k) c[k] -= static_cast<long double>(eigs[i]) * c[k - 1];
  CharPolyCoefficients out;
  out.n = n;
  out.s.resize(n);
  long double sign = -1.0L;
  for (int k = 1; k <= n; ++k, sign = -sign)
    out.s[k - 1] = static_cast<double>(sign * c[k]);
  return out;
}

}  // namespace hollow
