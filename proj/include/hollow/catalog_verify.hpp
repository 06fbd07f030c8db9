#pragma once

#include <string>
#include <vector>

#include "hollow/search.hpp"

namespace hollow {

/// One audited sub-claim of a catalog entry.
struct VerifyCheck {
  std::string claim;
  bool pass = false;
  std::string detail;
};

struct CatalogVerifyReport {
  std::string entry;
  std::vector<VerifyCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

inline void add_check(CatalogVerifyReport& report, std::string claim,
                      bool pass, std::string detail = "") {
  report.checks.push_back({std::move(claim), pass, std::move(detail)});
}

}  // namespace detail

/// Regression harness for one resolved entry on one instance: witness-side
/// claims are confirmed by construction/search, refutation-side claims by
/// the rules, and enumeration-backed values by recomputation.  The report
/// never mutates anything; a failing check means the stored value and the
/// computation disagree.
inline CatalogVerifyReport verify_entry(const Graph& g, const CatalogEntry& e,
                                        const SearchConfig& cfg = {}) {
  CatalogVerifyReport report;
  report.entry = e.name;
  int n = g.order();

  auto candidates = candidate_matrices(g, cfg.seed, cfg.order_limit);
  int best_rank = n + 1, worst_rank = -1, best_q = n + 1, best_mult = 0;
  for (const auto& [m, what] : candidates) {
    int r = numeric_rank(m);
    best_rank = std::min(best_rank, r);
    worst_rank = std::max(worst_rank, r);
    auto spec = spectrum_of(m);
    best_q = std::min(best_q, spec.distinct());
    best_mult = std::max(best_mult, spec.oml().max_entry());
  }

  for (const auto& [field, bracket] : e.values) {
    if (field == "MR0" && bracket.exact() && n <= cfg.order_limit) {
      int mr = max_hollow_rank(g, cfg.order_limit);
      detail::add_check(report, "MR0 = " + std::to_string(*bracket.lo),
                        mr == *bracket.lo,
                        "maximum cover order " + std::to_string(mr));
    } else if (field == "mr0" && bracket.exact()) {
      detail::add_check(
          report, "mr0 = " + std::to_string(*bracket.lo) + " is achieved",
          best_rank == *bracket.lo,
          "least witness rank " + std::to_string(best_rank));
    } else if (field == "M0" && bracket.exact()) {
      detail::add_check(
          report, "M0 = " + std::to_string(*bracket.lo) + " is achieved",
          n - best_rank == *bracket.lo,
          "largest witness nullity " + std::to_string(n - best_rank));
    } else if (field == "MM0" && bracket.exact()) {
      detail::add_check(
          report, "MM0 = " + std::to_string(*bracket.lo) + " is achieved",
          best_mult == *bracket.lo,
          "largest witness multiplicity " + std::to_string(best_mult));
    } else if (field == "q0") {
      if (bracket.hi)
        detail::add_check(
            report, "q0 <= " + std::to_string(*bracket.hi) + " is witnessed",
            best_q <= *bracket.hi,
            "least witness distinct count " + std::to_string(best_q));
      if (bracket.lo && *bracket.lo >= 2 && n <= cfg.order_limit) {
        // refutation side: every shorter list dies under the rules
        bool all_refuted = true;
        std::function<void(OrderedMultiplicityList&, int, int)> walk =
            [&](OrderedMultiplicityList& prefix, int left, int slots) {
              if (!all_refuted) return;
              if (slots == 1) {
                prefix.m.push_back(left);
                if (certify(g, prefix, cfg.order_limit).empty())
                  all_refuted = false;
                prefix.m.pop_back();
                return;
              }
              for (int take = 1; take + slots - 1 <= left; ++take) {
                prefix.m.push_back(take);
                walk(prefix, left - take, slots - 1);
                prefix.m.pop_back();
              }
            };
        for (int q = 1; q < *bracket.lo && all_refuted; ++q) {
          OrderedMultiplicityList prefix;
          walk(prefix, n, q);
        }
        detail::add_check(report,
                          "q0 >= " + std::to_string(*bracket.lo) +
                              " via refuting all shorter lists",
                          all_refuted);
      }
    }
  }

  if (!e.oml_set.empty() && n <= 6) {
    bool members_ok = true, complement_ok = true;
    std::string miss;
    for (const auto& l : e.oml_set) {
      auto r = search_oml(g, l, cfg);
      if (r.status != SearchStatus::realized) {
        members_ok = false;
        miss = l.str();
        break;
      }
    }
    detail::add_check(report, "every stored list is realized", members_ok,
                      miss);
    if (e.oml_set_exact) {
      // walk all compositions of n; those outside the set must be refuted
      std::function<void(OrderedMultiplicityList&, int)> walk =
          [&](OrderedMultiplicityList& prefix, int left) {
            if (!complement_ok) return;
            if (left == 0) {
              bool inside = false;
              for (const auto& l : e.oml_set)
                if (l == prefix) inside = true;
              if (!inside && certify(g, prefix, cfg.order_limit).empty()) {
                complement_ok = false;
                miss = prefix.str();
              }
              return;
            }
            for (int take = 1; take <= left; ++take) {
              prefix.m.push_back(take);
              walk(prefix, left - take);
              prefix.m.pop_back();
            }
          };
      OrderedMultiplicityList prefix;
      walk(prefix, n);
      detail::add_check(report, "every list outside the set is refuted",
                        complement_ok, miss);
    }
  }

  return report;
}

/// Convenience: verify every entry the catalog holds for the graph.
inline std::vector<CatalogVerifyReport> verify_catalog(
    const Graph& g, const SearchConfig& cfg = {}) {
  std::vector<CatalogVerifyReport> out;
  for (const auto& e : catalog_lookup(g)) out.push_back(verify_entry(g, e, cfg));
  return out;
}

}  // namespace hollow
