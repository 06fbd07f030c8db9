#include <catch2/catch_amalgamated.hpp>

#include "graph_enum.hpp"
#include "hollow/obstructions.hpp"
#include "hollow/search.hpp"

using namespace hollow;

namespace {
Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }
Graph diamond() { return Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

std::vector<OrderedMultiplicityList> compositions(int n) {
  std::vector<OrderedMultiplicityList> out;
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    OrderedMultiplicityList l;
    int run = 1;
    for (int b = 0; b < n - 1; ++b) {
      if (mask & (1 << b)) {
        l.m.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    l.m.push_back(run);
    out.push_back(l);
  }
  return out;
}
}  // namespace

TEST_CASE("trace rule", "[obstructions]") {
  CHECK_FALSE(check_trace(parse_spectrum_literal("-2^3,6")));
  CHECK(check_trace(parse_spectrum_literal("1^2,2")).has_value());
  // two-value shapes pass for every scale
  CHECK_FALSE(check_trace(parse_spectrum_literal("-3/2^2,3")));
  CHECK_FALSE(check_trace(parse_spectrum_literal("-0.5^4,2")));
}

TEST_CASE("bipartite symmetry rule", "[obstructions]") {
  auto spider = build_family(parse_family("spider:2,1,1"));
  CHECK(check_bipartite_symmetry(spider,
                                 OrderedMultiplicityList{{1, 2, 1, 1}})
            .has_value());
  CHECK(check_bipartite_symmetry(spider,
                                 OrderedMultiplicityList{{1, 1, 2, 1}})
            .has_value());
  CHECK_FALSE(check_bipartite_symmetry(
      spider, OrderedMultiplicityList{{1, 1, 1, 1, 1}}));

  auto c4 = build_family(parse_family("cycle:4"));
  CHECK_FALSE(
      check_bipartite_symmetry(c4, parse_spectrum_literal("-2,0^2,2")));
  CHECK(check_bipartite_symmetry(c4, parse_spectrum_literal("-2,0^2,3"))
            .has_value());

  // odd-order bipartite graphs refute every two-value list
  auto k23 = build_family(parse_family("kmn:2,3"));
  CHECK(check_bipartite_symmetry(k23, OrderedMultiplicityList{{2, 3}})
            .has_value());
  CHECK(check_bipartite_symmetry(k23, OrderedMultiplicityList{{1, 4}})
            .has_value());
  // non-bipartite graphs are out of scope for this rule
  auto k3 = build_family(parse_family("complete:3"));
  CHECK_FALSE(check_bipartite_symmetry(k3, OrderedMultiplicityList{{2, 1}}));
}

TEST_CASE("zero multiplicity rule", "[obstructions]") {
  auto star = build_family(parse_family("kmn:1,3"));
  CHECK(check_zero_multiplicity(star, parse_spectrum_literal("-1^2,1^2"))
            .has_value());
  CHECK_FALSE(
      check_zero_multiplicity(star, parse_spectrum_literal("-1,0^2,1")));

  auto k4 = build_family(parse_family("complete:4"));
  CHECK_FALSE(
      check_zero_multiplicity(k4, parse_spectrum_literal("-1^3,3")));

  // minimum-rank side: no zeros allowed on the triangle
  auto k3 = build_family(parse_family("complete:3"));
  auto v = check_zero_multiplicity(k3, parse_spectrum_literal("-1,0,1"));
  REQUIRE(v.has_value());
  CHECK(v->rule == "zero_multiplicity");

  // two-value shapes die whenever the maximum rank is deficient
  for (int n = 5; n <= 7; ++n) {
    auto split =
        build_family(parse_family("split:" + std::to_string(n - 2) + ",2"));
    CHECK(check_zero_multiplicity(split, OrderedMultiplicityList{{2, n - 2}})
              .has_value());
  }
}

TEST_CASE("orthogonality rule", "[obstructions]") {
  CHECK(check_rr_orthogonality(build_family(parse_family("complete:4")),
                               OrderedMultiplicityList{{2, 2}})
            .has_value());
  CHECK(check_rr_orthogonality(diamond(), OrderedMultiplicityList{{2, 2}})
            .has_value());
  auto v = check_rr_orthogonality(build_family(parse_family("kmn:1,3")),
                                  OrderedMultiplicityList{{2, 2}});
  REQUIRE(v.has_value());
  bool has_unique_neighbor_fact = false;
  for (auto& [name, value] : v->facts)
    if (name == "unique_common_neighbor") has_unique_neighbor_fact = true;
  CHECK(has_unique_neighbor_fact);
  // C4 is hollow potentially orthogonal, the rule must stay silent
  CHECK_FALSE(check_rr_orthogonality(build_family(parse_family("cycle:4")),
                                     OrderedMultiplicityList{{2, 2}}));
}

TEST_CASE("balanced central block rules", "[obstructions]") {
  CHECK(check_middle_two(diamond(), OrderedMultiplicityList{{1, 2, 1}}, 3)
            .has_value());
  CHECK(check_middle_two(paw(), OrderedMultiplicityList{{1, 2, 1}}, 4)
            .has_value());
  // hypothesis fails on the four-cycle: minimum rank there is only 2
  CHECK_FALSE(check_middle_two(build_family(parse_family("cycle:4")),
                               OrderedMultiplicityList{{1, 2, 1}}, 2));

  auto w5 = build_family(parse_family("wheel:5"));
  CHECK(check_central_zero_rank(w5, OrderedMultiplicityList{{1, 3, 1}}, 3)
            .has_value());
  CHECK_FALSE(
      check_central_zero_rank(w5, OrderedMultiplicityList{{2, 1, 2}}, 3));
}

TEST_CASE("two-eigenvalue deletion rule", "[obstructions]") {
  auto w5 = build_family(parse_family("wheel:5"));
  auto v = check_two_eigenvalue_deletion(w5, OrderedMultiplicityList{{3, 2}});
  REQUIRE(v.has_value());
  bool has_forced = false;
  for (auto& [name, value] : v->facts)
    if (name == "forced_deleted_spectrum") {
      has_forced = true;
      CHECK(value == "-2/3^2,1/3,1");
    }
  CHECK(has_forced);

  // the forced spectrum always balances exactly
  for (int n = 4; n <= 9; ++n)
    for (int r = 2; r <= n - 2; ++r) {
      std::vector<std::pair<Rat, int>> forced{{Rat(-(n - r), r), r - 1},
                                              {Rat(2 * r - n, r), 1},
                                              {Rat(1), n - r - 1}};
      auto fs = TargetSpectrum::from_rationals(forced);
      CHECK(fs.trace_is_zero());
    }

  // inapplicable on the complete graph: no deletion is bipartite
  CHECK_FALSE(check_two_eigenvalue_deletion(
      build_family(parse_family("complete:4")), OrderedMultiplicityList{{2, 2}}));
  CHECK_THROWS_AS(check_two_eigenvalue_deletion(
                      w5, OrderedMultiplicityList{{1, 2, 2}}),
                  ParameterError);
}

TEST_CASE("union alignment rule", "[obstructions]") {
  auto k3 = build_family(parse_family("complete:3"));
  auto join = [&](int r) {
    return combine(GraphOp::disjoint_union, k3,
                   build_family(parse_family("complete:" + std::to_string(r))));
  };
  CHECK(check_union_alignment(join(5), OrderedMultiplicityList{{3, 5}})
            .has_value());
  CHECK_FALSE(check_union_alignment(join(3), OrderedMultiplicityList{{2, 4}}));
  CHECK_FALSE(check_union_alignment(join(6), OrderedMultiplicityList{{3, 6}}));
  // non-complete components make the rule inconclusive
  auto mixed = combine(GraphOp::disjoint_union, k3,
                       build_family(parse_family("path:3")));
  CHECK_FALSE(check_union_alignment(mixed, OrderedMultiplicityList{{3, 3}}));
}

TEST_CASE("order-four classifications reproduce exactly", "[obstructions]") {
  auto k4 = build_family(parse_family("complete:4"));
  std::set<std::vector<int>> k4_in = {{3, 1},    {1, 3},    {2, 1, 1},
                                      {1, 1, 2}, {1, 2, 1}, {1, 1, 1, 1}};
  std::set<std::vector<int>> small_in = {{2, 1, 1}, {1, 1, 2}, {1, 1, 1, 1}};
  for (const auto& l : compositions(4)) {
    CHECK(certify(k4, l).empty() == (k4_in.count(l.m) > 0));
    CHECK(certify(diamond(), l).empty() == (small_in.count(l.m) > 0));
    CHECK(certify(paw(), l).empty() == (small_in.count(l.m) > 0));
  }
}

TEST_CASE("soundness: no refuted list is ever realized by the grid oracle",
          "[obstructions]") {
  SearchConfig cfg;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& g : hollow_test::all_graphs(n)) {
      if (g.edge_count() > 8) continue;
      auto reachable = brute_force_oracle(g, cfg);
      for (const auto& l : compositions(n)) {
        if (certify(g, l).empty()) continue;
        CHECK_FALSE(reachable.count(l));
      }
    }
  }
}

TEST_CASE("certificate facts replay from the graph", "[obstructions]") {
  auto w5 = build_family(parse_family("wheel:5"));
  std::vector<OrderedMultiplicityList> targets{{{1, 3, 1}}, {{3, 2}}, {{1, 4}}};
  for (const auto& t : targets) {
    for (const auto& cert : certify(w5, t)) {
      CHECK(cert.graph6 == graph6_encode(w5));
      for (const auto& [name, value] : cert.facts) {
        auto replayed = replay_fact(w5, name);
        if (replayed) CHECK(*replayed == value);
      }
    }
  }
}

TEST_CASE("q0 bounds on the named graphs", "[obstructions]") {
  auto b = q0_bounds(build_family(parse_family("empty:5")));
  CHECK(b.lo == 1);
  CHECK(b.hi == 1);

  auto w5 = q0_bounds(build_family(parse_family("wheel:5")));
  CHECK(w5.lo == 3);
  CHECK(w5.hi == 3);

  auto c7 = q0_bounds(build_family(parse_family("cycle:7")));
  CHECK(c7.lo == 4);  // ceil(7 / MM0) with MM0 = 2

  auto k4 = q0_bounds(build_family(parse_family("complete:4")));
  CHECK(k4.lo == 2);
  CHECK(k4.hi == 2);

  auto k23 = q0_bounds(build_family(parse_family("kmn:2,3")));
  CHECK(k23.lo == 3);
  CHECK(k23.hi == 3);
}

TEST_CASE("certified fact providers", "[obstructions]") {
  CHECK(fact_mr0_lower(paw()) == 4);       // unique maximum cover
  CHECK(fact_mr0_lower(diamond()) == 3);   // triangle
  CHECK(fact_mr0_upper(build_family(parse_family("wheel:5"))) == 3);
  CHECK(fact_mm0_upper(diamond()) == 2);   // deletion to a path
  CHECK(fact_mm0_upper(paw()) == 2);
  CHECK(fact_mm0_upper(build_family(parse_family("wheel:5"))) == 3);
  CHECK(fact_mm0_upper(build_family(parse_family("empty:4"))) == 4);
}
