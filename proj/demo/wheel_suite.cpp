// Walks the five-wheel: rank data, parameter brackets, a realization for
// every admissible multiplicity list, and the refutations for the rest.

#include <cstdio>

#include "hollow/hollow.hpp"

using namespace hollow;

int main() {
  auto w5 = build_family(parse_family("wheel:5"));
  std::printf("five-wheel %s, %d vertices, %d edges\n",
              graph6_encode(w5).c_str(), w5.order(), w5.edge_count());
  std::printf("maximum hollow rank: %d\n", max_hollow_rank(w5));

  auto est = estimate_extremes(w5);
  std::printf("q0 in [%d,%d], M0 in [%d,%d], MM0 in [%d,%d]\n", est.q0.lo,
              est.q0.hi, est.M0.lo, est.M0.hi, est.MM0.lo, est.MM0.hi);

  // every composition of 5 is either realized or refuted by a rule
  std::vector<OrderedMultiplicityList> lists;
  for (int mask = 0; mask < 16; ++mask) {
    OrderedMultiplicityList l;
    int run = 1;
    for (int b = 0; b < 4; ++b) {
      if (mask & (1 << b)) {
        l.m.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    l.m.push_back(run);
    lists.push_back(l);
  }

  SearchConfig cfg;
  for (const auto& l : lists) {
    auto r = search_oml(w5, l, cfg);
    if (r.status == SearchStatus::realized) {
      std::printf("%-12s realized   residual %.1e   spectrum %s\n",
                  l.str().c_str(), r.best->residual,
                  r.best->achieved.str().c_str());
    } else if (r.status == SearchStatus::refuted) {
      std::printf("%-12s refuted    rule %s\n", l.str().c_str(),
                  r.bound_certificates.front().rule.c_str());
    } else {
      std::printf("%-12s not found (inconclusive)\n", l.str().c_str());
    }
  }
  return 0;
}
