#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "hollow/catalog.hpp"
#include "hollow/gencyc.hpp"
#include "hollow/graph6.hpp"
#include "hollow/rational.hpp"
#include "hollow/target.hpp"

namespace hollow {

/// A refutation with replayable evidence.  Every fact value is derivable
/// from the graph (plus the target's own data); pass/inconclusive targets
/// get no certificate.  A rule never asserts realizability.
struct ObstructionCertificate {
  std::string graph6;
  std::string target;  // "spectrum:..." or "oml:..."
  std::string rule;
  std::vector<std::pair<std::string, std::string>> facts;
};

using Verdict = std::optional<ObstructionCertificate>;

using Target = std::variant<TargetSpectrum, OrderedMultiplicityList>;

inline std::string target_str(const Target& t) {
  if (std::holds_alternative<TargetSpectrum>(t))
    return "spectrum:" + std::get<TargetSpectrum>(t).str();
  return "oml:" + print_oml_literal(std::get<OrderedMultiplicityList>(t));
}

// ---------------------------------------------------------------------------
// Certified graph facts

/// Certified lower bound on the minimum hollow rank: any edge forces rank
/// two, a triangle forces rank three (order-3 classification), a unique
/// maximum generalized cycle forces full maximum rank, and catalog values
/// apply where a family is recognized.
inline int fact_mr0_lower(const Graph& g, int order_limit = 14) {
  int lower = 0;
  if (g.edge_count() > 0) lower = 2;
  if (has_triangle(g)) lower = std::max(lower, 3);
  if (g.order() <= order_limit && g.edge_count() > 0) {
    int mr = max_hollow_rank(g, order_limit);
    if (count_generalized_cycles(g, mr, order_limit) == 1)
      lower = std::max(lower, mr);
  }
  if (auto c = catalog_bracket(g, "mr0").lo) lower = std::max(lower, *c);
  return lower;
}

/// Certified upper bound on the minimum hollow rank: the rank of any
/// witness (the adjacency matrix serves) and catalog values.
inline int fact_mr0_upper(const Graph& g) {
  if (g.edge_count() == 0) return 0;
  int upper = numeric_rank(HollowMatrix::adjacency(g));
  if (auto c = catalog_bracket(g, "mr0").hi) upper = std::min(upper, *c);
  return upper;
}

/// Certified upper bound on the maximum multiplicity over all hollow
/// matrices: eigenvalue interlacing gives MM0(G) <= MM0(G - v) + 1 for
/// every vertex, recursed a few levels onto catalog values; a nonzero
/// hollow matrix has eigenvalues of both signs, so MM0 <= n - 1 whenever
/// G has an edge.
inline int fact_mm0_upper(const Graph& g, int depth = 2) {
  int n = g.order();
  if (g.edge_count() == 0) return n;
  int upper = n - 1;
  if (auto c = catalog_bracket(g, "MM0").hi) upper = std::min(upper, *c);
  if (depth > 0 && n >= 2) {
    int best = n;
    for (int v = 0; v < n; ++v)
      best = std::min(best, fact_mm0_upper(delete_vertex(g, v), depth - 1));
    upper = std::min(upper, best + 1);
  }
  return upper;
}

// ---------------------------------------------------------------------------
// Rules.  Each returns a certificate iff the target is impossible.

/// Eigenvalues of a hollow matrix sum to zero.
inline Verdict check_trace(const TargetSpectrum& s) {
  if (s.trace_is_zero()) return std::nullopt;
  std::string sum;
  if (s.all_exact()) {
    Rat total;
    for (std::size_t i = 0; i < s.values().size(); ++i)
      total = total + *s.exact(i) * Rat(s.values()[i].second);
    sum = total.str();
  } else {
    double total = 0.0;
    for (auto& [v, m] : s.values()) total += v * m;
    sum = std::to_string(total);
  }
  return ObstructionCertificate{
      "", target_str(s), "trace", {{"eigenvalue_sum", sum}}};
}

namespace detail {

inline ObstructionCertificate certificate(
    const Graph& g, const Target& t, std::string rule,
    std::vector<std::pair<std::string, std::string>> facts) {
  return {graph6_encode(g), target_str(t), std::move(rule), std::move(facts)};
}

inline std::vector<std::pair<std::string, std::string>> bip_facts(
    const Bipartition& b) {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  return {{"bipartition_left", join(b.left)},
          {"bipartition_right", join(b.right)}};
}

}  // namespace detail

/// Spectra on bipartite graphs are symmetric about the origin; lists must
/// be palindromic with a parity-consistent central zero block.
inline Verdict check_bipartite_symmetry(const Graph& g, const Target& t) {
  auto bp = bipartition(g);
  if (!bp || g.edge_count() == 0) return std::nullopt;
  auto facts = detail::bip_facts(*bp);
  int n = g.order();

  if (std::holds_alternative<TargetSpectrum>(t)) {
    const auto& s = std::get<TargetSpectrum>(t);
    if (s.is_symmetric()) return std::nullopt;
    facts.push_back({"target_symmetric", "false"});
    return detail::certificate(g, t, "bipartite_symmetry", facts);
  }

  const auto& oml = std::get<OrderedMultiplicityList>(t);
  int q = oml.length();
  if (!oml.palindromic()) {
    facts.push_back({"target_palindromic", "false"});
    return detail::certificate(g, t, "bipartite_symmetry", facts);
  }
  if (q % 2 == 0 && n % 2 == 1) {
    facts.push_back({"order_parity", "odd"});
    facts.push_back({"list_length_parity", "even"});
    return detail::certificate(g, t, "bipartite_symmetry", facts);
  }
  if (q % 2 == 1) {
    // the central block is the zero eigenvalue; the paired blocks cover an
    // even count, so the central block must absorb the parity of n
    int central = oml.m[q / 2];
    if ((n - central) % 2 != 0) {
      facts.push_back({"central_entry", std::to_string(central)});
      facts.push_back({"order_parity", n % 2 ? "odd" : "even"});
      return detail::certificate(g, t, "bipartite_symmetry", facts);
    }
  }
  return std::nullopt;
}

/// Rank bounds around the zero eigenvalue: every hollow matrix has rank at
/// most MR0 (so nullity at least n - MR0) and rank at least the certified
/// minimum (so nullity at most n - mr0_lower).  A nonzero matrix also has
/// eigenvalues of both signs, which kills two-eigenvalue targets whenever
/// MR0 < n.
inline Verdict check_zero_multiplicity(const Graph& g, const Target& t,
                                       int order_limit = 14) {
  if (g.edge_count() == 0) return std::nullopt;
  int n = g.order();
  int mr0_max = max_hollow_rank(g, order_limit);
  int forced_nullity = n - mr0_max;

  if (std::holds_alternative<TargetSpectrum>(t)) {
    const auto& s = std::get<TargetSpectrum>(t);
    int z = s.zero_multiplicity();
    if (z < forced_nullity)
      return detail::certificate(
          g, t, "zero_multiplicity",
          {{"MR0", std::to_string(mr0_max)},
           {"zero_multiplicity_needed", std::to_string(forced_nullity)},
           {"target_zero_multiplicity", std::to_string(z)}});
    int mr0_lo = fact_mr0_lower(g, order_limit);
    if (z > n - mr0_lo)
      return detail::certificate(
          g, t, "zero_multiplicity",
          {{"mr0_lower", std::to_string(mr0_lo)},
           {"zero_multiplicity_allowed", std::to_string(n - mr0_lo)},
           {"target_zero_multiplicity", std::to_string(z)}});
    if (s.distinct() == 2 && forced_nullity > 0)
      return detail::certificate(
          g, t, "zero_multiplicity",
          {{"MR0", std::to_string(mr0_max)},
           {"note", "zero is an eigenvalue but a two-value spectrum with "
                    "both signs has no room for it"}});
    return std::nullopt;
  }

  const auto& oml = std::get<OrderedMultiplicityList>(t);
  if (forced_nullity <= 0) return std::nullopt;
  int q = oml.length();
  if (q <= 2)
    return detail::certificate(
        g, t, "zero_multiplicity",
        {{"MR0", std::to_string(mr0_max)},
         {"note", "zero is always an eigenvalue and interior, so at least "
                  "three distinct eigenvalues are needed"}});
  int best_interior = 0;
  for (int i = 1; i + 1 < q; ++i) best_interior = std::max(best_interior, oml.m[i]);
  if (best_interior < forced_nullity)
    return detail::certificate(
        g, t, "zero_multiplicity",
        {{"MR0", std::to_string(mr0_max)},
         {"zero_multiplicity_needed", std::to_string(forced_nullity)},
         {"max_interior_entry", std::to_string(best_interior)}});
  return std::nullopt;
}

/// Interlacing bound: no multiplicity exceeds the certified MM0 upper
/// bound.
inline Verdict check_max_multiplicity(const Graph& g, const Target& t) {
  int top = 0;
  if (std::holds_alternative<TargetSpectrum>(t)) {
    for (auto& [v, m] : std::get<TargetSpectrum>(t).values())
      top = std::max(top, m);
  } else {
    top = std::get<OrderedMultiplicityList>(t).max_entry();
  }
  int upper = fact_mm0_upper(g);
  if (top <= upper) return std::nullopt;
  return detail::certificate(g, t, "max_multiplicity",
                             {{"MM0_upper", std::to_string(upper)},
                              {"target_max_multiplicity", std::to_string(top)}});
}

/// Degenerate eigenvalue counts: one distinct value forces the zero
/// matrix, and an edgeless graph only carries the zero matrix.
inline Verdict check_single_value(const Graph& g, const Target& t) {
  int q = std::holds_alternative<TargetSpectrum>(t)
              ? std::get<TargetSpectrum>(t).distinct()
              : std::get<OrderedMultiplicityList>(t).length();
  if (q == 1 && g.edge_count() > 0)
    return detail::certificate(
        g, t, "single_eigenvalue",
        {{"edges", std::to_string(g.edge_count())},
         {"note", "a hollow matrix with one distinct eigenvalue is zero"}});
  if (q > 1 && g.edge_count() == 0)
    return detail::certificate(
        g, t, "single_eigenvalue",
        {{"edges", "0"},
         {"note", "an edgeless graph carries only the zero matrix"}});
  return std::nullopt;
}

/// Hollow multiplicity lists form a subset of the unrestricted ones, so a
/// catalog-certified unrestricted set refutes any list outside it.
inline Verdict check_unrestricted_lists(const Graph& g,
                                        const OrderedMultiplicityList& oml) {
  for (const auto& entry : catalog_lookup(g)) {
    if (entry.unrestricted_oml_set.empty()) continue;
    bool inside = false;
    for (const auto& l : entry.unrestricted_oml_set)
      if (l == oml) inside = true;
    if (inside) continue;
    std::string set;
    for (const auto& l : entry.unrestricted_oml_set) set += l.str();
    return detail::certificate(
        g, Target(oml), "unrestricted_lists",
        {{"unrestricted_oml_set", set}, {"catalog_entry", entry.name}});
  }
  return std::nullopt;
}

/// (r,r) targets need a hollow orthogonal matrix after scaling.  A vertex
/// pair with a unique common neighbor makes an off-diagonal entry of A^2
/// a single product, hence nonzero; the order-4 complete graph and the
/// diamond admit short algebraic eliminations with the same conclusion.
inline Verdict check_rr_orthogonality(const Graph& g,
                                      const OrderedMultiplicityList& oml) {
  int n = g.order();
  if (oml.length() != 2 || oml.m[0] != oml.m[1] || 2 * oml.m[0] != n)
    return std::nullopt;
  Target t = oml;
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) {
      int common = 0, witness = -1;
      for (int u : g.neighbors(v))
        if (g.has_edge(u, w)) {
          ++common;
          witness = u;
        }
      if (common == 1)
        return detail::certificate(
            g, t, "orthogonality",
            {{"vertex_pair", std::to_string(v) + "," + std::to_string(w)},
             {"unique_common_neighbor", std::to_string(witness)}});
    }
  for (const auto& fam : recognize_families(g)) {
    if (fam.key == "complete" && n == 4)
      return detail::certificate(
          g, t, "orthogonality",
          {{"graph", "complete:4"},
           {"note", "eliminating the off-diagonal of the square of a hollow "
                    "orthogonal matrix forces a nonzero entry"}});
    if (fam.key == "diamond")
      return detail::certificate(
          g, t, "orthogonality",
          {{"graph", "diamond"},
           {"note", "the two degree-two vertices have two common neighbors "
                    "but the square still has a forced nonzero entry"}});
  }
  return std::nullopt;
}

namespace detail {

/// Shared core of the balanced-central-block rules: deleting v with G - v
/// bipartite pins the central eigenvalue(s) of the principal submatrix at
/// zero by interlacing and spectral symmetry, so the central target value
/// is zero and the rank drops below the certified minimum.
inline Verdict central_block_rule(const Graph& g,
                                  const OrderedMultiplicityList& oml,
                                  int mr0_lower, bool even_order,
                                  const char* rule) {
  int n = g.order();
  if ((n % 2 == 0) != even_order) return std::nullopt;
  int q = oml.length();
  if (q < 3 || q % 2 == 0) return std::nullopt;
  int r = q / 2;
  int c = oml.m[r];
  if (even_order ? c != 2 : c < 3) return std::nullopt;
  int left = 0, right = 0;
  for (int i = 0; i < r; ++i) left += oml.m[i];
  for (int i = r + 1; i < q; ++i) right += oml.m[i];
  if (left != right || left != (n - c) / 2) return std::nullopt;
  if (n - c >= mr0_lower) return std::nullopt;
  for (int v = 0; v < n; ++v) {
    auto rest = delete_vertex(g, v);
    if (is_bipartite(rest))
      return certificate(
          g, Target(oml), rule,
          {{"bipartite(G-" + std::to_string(v) + ")", "true"},
           {"central_entry", std::to_string(c)},
           {"mr0_lower", std::to_string(mr0_lower)},
           {"forced_rank", std::to_string(n - c)}});
  }
  return std::nullopt;
}

}  // namespace detail

/// Even order, balanced flanks around a central 2, minimum rank at least
/// n-1: the central eigenvalue would be zero with multiplicity two.
inline Verdict check_middle_two(const Graph& g,
                                const OrderedMultiplicityList& oml,
                                int mr0_lower) {
  return detail::central_block_rule(g, oml, mr0_lower, true, "middle_two");
}

/// Odd order, balanced flanks around a central block of size >= 3: the
/// two middle positions of the deleted bipartite spectrum pin the central
/// value at zero.
inline Verdict check_central_zero_rank(const Graph& g,
                                       const OrderedMultiplicityList& oml,
                                       int mr0_lower) {
  return detail::central_block_rule(g, oml, mr0_lower, false,
                                    "central_zero_rank");
}

/// Two-eigenvalue targets force, after deleting any vertex, the spectrum
/// {(-(n-r)/r)^(r-1), (2r-n)/r, 1^(n-r-1)} up to scale (interlacing plus
/// the trace).  If some deleted graph is bipartite and that spectrum is
/// not symmetric, or its zero multiplicity is smaller than the deleted
/// graph's forced nullity, the target is impossible.
inline Verdict check_two_eigenvalue_deletion(const Graph& g,
                                             const OrderedMultiplicityList& oml,
                                             int order_limit = 14) {
  if (oml.length() != 2)
    throw ParameterError("rule needs a two-entry multiplicity list");
  int n = g.order();
  int r = oml.m[0];
  if (r < 2 || oml.m[1] < 2) return std::nullopt;  // hypothesis 2 <= r <= n-2

  // forced deleted spectrum, normalized so the top eigenvalue is 1
  std::vector<std::pair<Rat, int>> forced;
  forced.push_back({Rat(-(n - r), r), r - 1});
  forced.push_back({Rat(2 * r - n, r), 1});
  forced.push_back({Rat(1), n - r - 1});
  auto fs = TargetSpectrum::from_rationals(forced);

  std::string fs_str = fs.str();
  for (int v = 0; v < n; ++v) {
    auto rest = delete_vertex(g, v);
    if (is_bipartite(rest) && !fs.is_symmetric())
      return detail::certificate(
          g, Target(oml), "two_eigenvalue_deletion",
          {{"deleted_vertex", std::to_string(v)},
           {"bipartite(G-" + std::to_string(v) + ")", "true"},
           {"forced_deleted_spectrum", fs_str},
           {"symmetric", "false"}});
    if (rest.order() <= order_limit) {
      int mr = max_hollow_rank(rest, order_limit);
      int need = rest.order() - mr;
      if (fs.zero_multiplicity() < need)
        return detail::certificate(
            g, Target(oml), "two_eigenvalue_deletion",
            {{"deleted_vertex", std::to_string(v)},
             {"MR0(G-" + std::to_string(v) + ")", std::to_string(mr)},
             {"forced_deleted_spectrum", fs_str},
             {"zero_multiplicity_needed", std::to_string(need)}});
    }
  }
  return std::nullopt;
}

/// Two-eigenvalue targets on a disjoint union of complete graphs must
/// align the per-component eigenvalue ratios -mu1/mu2 = (r-k)/k.
inline Verdict check_union_alignment(const Graph& g,
                                     const OrderedMultiplicityList& oml) {
  if (oml.length() != 2) return std::nullopt;
  auto comps = components(g);
  if (comps.size() < 2) return std::nullopt;

  bool any_edge = g.edge_count() > 0;
  std::vector<int> sizes;
  for (const auto& c : comps) {
    auto sub = induced_subgraph(g, c);
    if (sub.order() == 1) {
      if (any_edge)
        return detail::certificate(
            g, Target(oml), "union_alignment",
            {{"isolated_vertex", std::to_string(c[0])},
             {"note", "an isolated vertex contributes zero, but a "
                      "two-value spectrum with both signs excludes zero"}});
      continue;
    }
    if (!detail::is_complete_graph(sub)) return std::nullopt;  // unsupported
    sizes.push_back(sub.order());
  }
  if (sizes.size() < 2) return std::nullopt;

  std::set<Rat> ratios;
  bool first = true;
  for (int r : sizes) {
    std::set<Rat> mine;
    for (int k = 1; k < r; ++k) mine.insert(Rat(r - k, k));
    if (first) {
      ratios = mine;
      first = false;
    } else {
      std::set<Rat> keep;
      for (const auto& x : ratios)
        if (mine.count(x)) keep.insert(x);
      ratios = keep;
    }
  }
  if (!ratios.empty()) return std::nullopt;
  std::string sz;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    sz += (i ? "," : "") + std::to_string(sizes[i]);
  return detail::certificate(
      g, Target(oml), "union_alignment",
      {{"component_sizes", sz},
       {"note", "no common value of -mu1/mu2 = (r-k)/k exists"}});
}

// ---------------------------------------------------------------------------
// Aggregate checker and q0 bounds

/// Runs every applicable rule; returns all certificates that fire.
inline std::vector<ObstructionCertificate> certify(const Graph& g,
                                                   const Target& t,
                                                   int order_limit = 14) {
  std::vector<ObstructionCertificate> out;
  auto add = [&](Verdict v) {
    if (v) {
      if (v->graph6.empty()) v->graph6 = graph6_encode(g);
      out.push_back(std::move(*v));
    }
  };

  if (std::holds_alternative<TargetSpectrum>(t)) {
    const auto& s = std::get<TargetSpectrum>(t);
    if (s.total() != g.order())
      throw ParameterError("target size must equal the graph order");
    add(check_trace(s));
  } else {
    const auto& oml = std::get<OrderedMultiplicityList>(t);
    if (oml.total() != g.order())
      throw ParameterError("multiplicities must sum to the graph order");
  }
  add(check_single_value(g, t));
  add(check_bipartite_symmetry(g, t));
  if (g.order() <= order_limit) add(check_zero_multiplicity(g, t, order_limit));
  add(check_max_multiplicity(g, t));

  OrderedMultiplicityList oml = std::holds_alternative<TargetSpectrum>(t)
                                    ? std::get<TargetSpectrum>(t).oml()
                                    : std::get<OrderedMultiplicityList>(t);
  add(check_unrestricted_lists(g, oml));
  add(check_rr_orthogonality(g, oml));
  int mr0_lo = fact_mr0_lower(g, order_limit);
  add(check_middle_two(g, oml, mr0_lo));
  add(check_central_zero_rank(g, oml, mr0_lo));
  if (oml.length() == 2) {
    add(check_two_eigenvalue_deletion(g, oml, order_limit));
    add(check_union_alignment(g, oml));
  }
  return out;
}

inline bool is_refuted(const Graph& g, const Target& t, int order_limit = 14) {
  return !certify(g, t, order_limit).empty();
}

struct Q0Bounds {
  int lo = 1, hi = 0;
  std::vector<std::pair<std::string, std::string>> facts;
};

/// Bounds on the minimum number of distinct eigenvalues from certified
/// facts only: edge count, MR0, bipartite parity, the MM0 upper bound, a
/// rule sweep over the two-value shapes, the mr0 upper bound and catalog.
inline Q0Bounds q0_bounds(const Graph& g, int order_limit = 14) {
  Q0Bounds b;
  int n = g.order();
  if (g.edge_count() == 0) {
    b.lo = b.hi = 1;
    b.facts.push_back({"edges", "0"});
    return b;
  }
  b.lo = 2;
  b.facts.push_back({"edges", std::to_string(g.edge_count())});

  int mm0_up = fact_mm0_upper(g);
  b.lo = std::max(b.lo, (n + mm0_up - 1) / mm0_up);
  b.facts.push_back({"MM0_upper", std::to_string(mm0_up)});

  if (n <= order_limit) {
    int mr0_max = max_hollow_rank(g, order_limit);
    b.facts.push_back({"MR0", std::to_string(mr0_max)});
    if (mr0_max < n) b.lo = std::max(b.lo, 3);
  }
  if (is_bipartite(g) && n % 2 == 1) {
    b.lo = std::max(b.lo, 3);
    b.facts.push_back({"bipartite_odd_order", "true"});
  }
  if (b.lo == 2 && n <= order_limit) {
    // two-value shapes are finitely many; if every one is refuted, q0 >= 3
    bool all_refuted = true;
    for (int r = 1; r < n && all_refuted; ++r) {
      OrderedMultiplicityList two{{r, n - r}};
      if (certify(g, two, order_limit).empty()) all_refuted = false;
    }
    if (all_refuted) {
      b.lo = 3;
      b.facts.push_back({"all_two_value_shapes_refuted", "true"});
    }
  }

  int mr0_up = fact_mr0_upper(g);
  b.hi = mr0_up + 1;
  b.facts.push_back({"mr0_upper", std::to_string(mr0_up)});
  if (auto c = catalog_bracket(g, "q0").hi) b.hi = std::min(b.hi, *c);
  if (auto c = catalog_bracket(g, "q0").lo) b.lo = std::max(b.lo, *c);
  if (b.lo > b.hi)
    throw Error("inconsistent q0 facts: lower " + std::to_string(b.lo) +
                " exceeds upper " + std::to_string(b.hi));
  return b;
}

// ---------------------------------------------------------------------------
// Fact replay: recompute a stored fact from the graph alone.

inline std::optional<std::string> replay_fact(const Graph& g,
                                              const std::string& name,
                                              int order_limit = 14) {
  auto int_str = [](int v) { return std::to_string(v); };
  if (name == "MR0") return int_str(max_hollow_rank(g, order_limit));
  if (name == "mr0_lower") return int_str(fact_mr0_lower(g, order_limit));
  if (name == "mr0_upper") return int_str(fact_mr0_upper(g));
  if (name == "MM0_upper") return int_str(fact_mm0_upper(g));
  if (name == "edges") return int_str(g.edge_count());
  if (name == "bipartition_left" || name == "bipartition_right") {
    auto bp = bipartition(g);
    if (!bp) return std::nullopt;
    const auto& side = name == "bipartition_left" ? bp->left : bp->right;
    std::string s;
    for (std::size_t i = 0; i < side.size(); ++i)
      s += (i ? "," : "") + std::to_string(side[i]);
    return s;
  }
  if (name.rfind("bipartite(G-", 0) == 0 && name.back() == ')') {
    int v = std::stoi(name.substr(12, name.size() - 13));
    return is_bipartite(delete_vertex(g, v)) ? "true" : "false";
  }
  if (name.rfind("MR0(G-", 0) == 0 && name.back() == ')') {
    int v = std::stoi(name.substr(6, name.size() - 7));
    return int_str(max_hollow_rank(delete_vertex(g, v), order_limit));
  }
  if (name == "bipartite_odd_order")
    return (is_bipartite(g) && g.order() % 2 == 1) ? "true" : "false";
  return std::nullopt;  // target-derived facts replay with the target
}

}  // namespace hollow
