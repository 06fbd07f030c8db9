#include <catch2/catch_amalgamated.hpp>

#include "graph_enum.hpp"
#include "hollow/search.hpp"
#include "hollow/serialize.hpp"

using namespace hollow;

TEST_CASE("spectrum search realizes and refutes the named triangle targets",
          "[search]") {
  SearchConfig cfg;
  auto k3 = build_family(parse_family("complete:3"));

  auto hit = search_spectrum(k3, parse_spectrum_literal("-3,1,2"), cfg);
  CHECK(hit.status == SearchStatus::realized);
  CHECK(hit.best->residual <= cfg.accept_tol * 4);

  auto refuted = search_spectrum(k3, parse_spectrum_literal("-1,0,1"), cfg);
  CHECK(refuted.status == SearchStatus::refuted);
  CHECK(refuted.evals == 0);  // rules fire before any optimizer work
  CHECK_FALSE(refuted.bound_certificates.empty());

  auto bad_trace = search_spectrum(k3, parse_spectrum_literal("1,2,3"), cfg);
  CHECK(bad_trace.status == SearchStatus::refuted);
  CHECK(bad_trace.bound_certificates.front().rule == "trace");
}

TEST_CASE("spectrum search on the complete split graph", "[search]") {
  SearchConfig cfg;
  auto split = build_family(parse_family("split:2,3"));
  auto res = search_spectrum(split, parse_spectrum_literal("-3,-1,0,1,3"), cfg);
  CHECK(res.status == SearchStatus::realized);
  CHECK(res.best->residual <= cfg.accept_tol * 4);
}

TEST_CASE("list search on the five-wheel realizes the full published set",
          "[search]") {
  SearchConfig cfg;
  auto w5 = build_family(parse_family("wheel:5"));
  std::vector<std::vector<int>> lists = {
      {3, 1, 1},    {1, 1, 3},    {2, 1, 2},    {2, 2, 1},    {1, 2, 2},
      {2, 1, 1, 1}, {1, 1, 1, 2}, {1, 2, 1, 1}, {1, 1, 2, 1}, {1, 1, 1, 1, 1}};
  for (const auto& m : lists) {
    auto r = search_oml(w5, OrderedMultiplicityList{m}, cfg);
    INFO("list " << OrderedMultiplicityList{m}.str());
    CHECK(r.status == SearchStatus::realized);
    CHECK(r.best->residual <= cfg.accept_tol);
    CHECK(r.best->achieved.oml().m == m);
  }

  auto r131 = search_oml(w5, OrderedMultiplicityList{{1, 3, 1}}, cfg);
  CHECK(r131.status == SearchStatus::refuted);
  CHECK(r131.evals == 0);
  auto r32 = search_oml(w5, OrderedMultiplicityList{{3, 2}}, cfg);
  CHECK(r32.status == SearchStatus::refuted);
}

TEST_CASE("list search realizes the order-four sets and refuses the rest",
          "[search]") {
  SearchConfig cfg;
  auto k4 = build_family(parse_family("complete:4"));
  for (auto m : std::vector<std::vector<int>>{
           {3, 1}, {1, 3}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}, {1, 1, 1, 1}}) {
    auto r = search_oml(k4, OrderedMultiplicityList{m}, cfg);
    INFO("K4 list " << OrderedMultiplicityList{m}.str());
    CHECK(r.status == SearchStatus::realized);
  }
  auto r22 = search_oml(k4, OrderedMultiplicityList{{2, 2}}, cfg);
  CHECK(r22.status == SearchStatus::refuted);
}

TEST_CASE("grid oracle on the smallest graphs", "[search]") {
  SearchConfig cfg;
  auto p3 = brute_force_oracle(build_family(parse_family("path:3")), cfg);
  REQUIRE(p3.size() == 1);
  CHECK(p3.begin()->m == std::vector<int>{1, 1, 1});

  auto k2 = brute_force_oracle(build_family(parse_family("complete:2")), cfg);
  REQUIRE(k2.size() == 1);
  CHECK(k2.begin()->m == std::vector<int>{1, 1});

  auto k3 = brute_force_oracle(build_family(parse_family("complete:3")), cfg);
  std::set<std::vector<int>> allowed{{2, 1}, {1, 2}, {1, 1, 1}};
  for (const auto& l : k3) CHECK(allowed.count(l.m));

  CHECK_THROWS_AS(
      brute_force_oracle(build_family(parse_family("complete:5")), cfg),
      ParameterError);
  SearchConfig zero_grid = cfg;
  zero_grid.grid = {0.0, 1.0};
  CHECK_THROWS_AS(
      brute_force_oracle(build_family(parse_family("path:3")), zero_grid),
      ParameterError);
}

TEST_CASE("oracle output stays inside the classified sets through order four",
          "[search]") {
  SearchConfig cfg;
  for (int n = 2; n <= 4; ++n) {
    for (const auto& g : hollow_test::connected_graphs(n)) {
      auto observed = brute_force_oracle(g, cfg);
      for (const auto& l : observed) {
        // every grid list must be realizable, so no rule may refute it
        CHECK(certify(g, l).empty());
        // and the full search must also realize it
        auto r = search_oml(g, l, cfg);
        INFO("graph " << graph6_encode(g) << " list " << l.str());
        CHECK(r.status == SearchStatus::realized);
      }
    }
  }
}

TEST_CASE("search outcomes are bit-for-bit deterministic", "[search]") {
  SearchConfig cfg;
  cfg.seed = 12345;
  auto k4 = build_family(parse_family("complete:4"));
  auto a = search_oml(k4, OrderedMultiplicityList{{2, 1, 1}}, cfg);
  auto b = search_oml(k4, OrderedMultiplicityList{{2, 1, 1}}, cfg);
  REQUIRE(a.status == b.status);
  CHECK(to_json(a).dump() == to_json(b).dump());

  auto s1 = search_spectrum(k4, parse_spectrum_literal("-2,-1,1,2"), cfg);
  auto s2 = search_spectrum(k4, parse_spectrum_literal("-2,-1,1,2"), cfg);
  CHECK(to_json(s1).dump() == to_json(s2).dump());
}

TEST_CASE("realized witnesses revalidate after a JSON round trip",
          "[search]") {
  SearchConfig cfg;
  auto w5 = build_family(parse_family("wheel:5"));
  auto r = search_oml(w5, OrderedMultiplicityList{{2, 1, 2}}, cfg);
  REQUIRE(r.status == SearchStatus::realized);
  auto j = to_json(*r.best);
  auto back = matrix_from_json(j["matrix"]);
  CHECK(back.pattern() == w5);
  CHECK(oml_of(back).m == std::vector<int>{2, 1, 2});
  CHECK(back.entries() == r.best->matrix.entries());
}

TEST_CASE("extremal estimates with witnesses", "[search]") {
  SearchConfig cfg;
  auto w5 = estimate_extremes(build_family(parse_family("wheel:5")), cfg);
  CHECK(w5.q0.lo == 3);
  CHECK(w5.q0.hi == 3);
  CHECK(w5.M0.lo == 2);
  CHECK(w5.M0.hi == 2);
  CHECK(w5.MM0.lo == 3);
  CHECK(w5.MM0.hi == 3);
  REQUIRE(w5.q0.witness.has_value());
  CHECK(spectrum_of(*w5.q0.witness).distinct() == 3);
  REQUIRE(w5.MM0.witness.has_value());
  CHECK(spectrum_of(*w5.MM0.witness).oml().max_entry() == 3);

  auto k23 = estimate_extremes(build_family(parse_family("kmn:2,3")), cfg);
  CHECK(k23.q0.lo == 3);
  CHECK(k23.q0.hi == 3);
  REQUIRE(k23.q0.witness.has_value());

  auto c6 = estimate_extremes(build_family(parse_family("cycle:6")), cfg);
  CHECK(c6.M0.lo == 2);
  CHECK(c6.M0.hi == 2);
  REQUIRE(c6.M0.witness.has_value());
  CHECK(numeric_rank(*c6.M0.witness) == 4);

  // outside the catalog: brackets must still be consistent and witnessed
  Graph odd(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
  auto est = estimate_extremes(odd, cfg);
  CHECK(est.q0.lo <= est.q0.hi);
  CHECK(est.M0.lo <= est.M0.hi);
  CHECK(est.MM0.lo <= est.MM0.hi);
  REQUIRE(est.q0.witness.has_value());
  CHECK_NOTHROW(HollowMatrix::from_dense(est.q0.witness->pattern(),
                                         est.q0.witness->entries()));
}

TEST_CASE("hypercube lists via iterated doubling", "[search]") {
  SearchConfig cfg;
  auto q3 = build_family(parse_family("hypercube:3"));
  auto r = search_oml(q3, OrderedMultiplicityList{{4, 4}}, cfg);
  CHECK(r.status == SearchStatus::realized);
  auto r2 = search_oml(q3, OrderedMultiplicityList{{2, 2, 2, 2}}, cfg);
  CHECK(r2.status == SearchStatus::realized);
}
