#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "hollow/graph6.hpp"
#include "graph_enum.hpp"
#include "hollow/realizers.hpp"

using namespace hollow;

namespace {

TargetSpectrum random_symmetric_distinct(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> gap(0.2, 1.4);
  std::vector<double> flat;
  double cur = 0.0;
  int pairs = n / 2;
  for (int i = 0; i < pairs; ++i) {
    cur += gap(rng);
    flat.push_back(cur);
    flat.push_back(-cur);
  }
  if (n % 2) flat.push_back(0.0);
  return TargetSpectrum::from_values(flat);
}

}  // namespace

TEST_CASE("path realization round-trips random symmetric spectra",
          "[realizers]") {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 10; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      auto target = random_symmetric_distinct(n, rng);
      auto res = realize_path(target, n);
      CHECK(res.matrix.pattern() ==
            build_family(parse_family("path:" + std::to_string(n))));
      CHECK(res.residual <= 1e-8 * (1.0 + target.max_abs()));
    }
  }
}

TEST_CASE("path realization refuses inadmissible targets", "[realizers]") {
  CHECK_THROWS_AS(realize_path(parse_spectrum_literal("-1,0,1,2"), 4),
                  InfeasibleTarget);
  CHECK_THROWS_AS(realize_path(parse_spectrum_literal("-2,-1,1,1"), 4),
                  InfeasibleTarget);
  CHECK_THROWS_AS(realize_path(parse_spectrum_literal("-1,1"), 3),
                  ParameterError);
  auto two = realize_path(parse_spectrum_literal("-1,1"), 2);
  CHECK(two.matrix(0, 1) == Catch::Approx(1.0));
}

TEST_CASE("complete bipartite realization hits admissible targets",
          "[realizers]") {
  auto res =
      realize_complete_bipartite(2, 2, parse_spectrum_literal("-3,-1,1,3"), 3);
  CHECK(res.residual <= 1e-8 * 4);
  CHECK(res.matrix.pattern() == build_family(parse_family("kmn:2,2")));

  auto res2 =
      realize_complete_bipartite(1, 2, parse_spectrum_literal("-2,0,2"), 3);
  CHECK(res2.residual <= 1e-8 * 3);

  // repeated nonzero values are fine as long as the count fits
  auto res3 = realize_complete_bipartite(
      2, 3, parse_spectrum_literal("-1^2,0,1^2"), 5);
  CHECK(res3.residual <= 1e-8 * 2);
  CHECK(res3.achieved.oml().m == std::vector<int>{2, 1, 2});
}

TEST_CASE("complete bipartite realization refuses inadmissible targets",
          "[realizers]") {
  // six nonzero entries on K_{2,4} exceed twice the smaller side
  CHECK_THROWS_AS(realize_complete_bipartite(
                      2, 4, parse_spectrum_literal("-3,-2,-1,1,2,3"), 0),
                  InfeasibleTarget);
  CHECK_THROWS_AS(realize_complete_bipartite(
                      2, 2, parse_spectrum_literal("-1,0,1,2"), 0),
                  InfeasibleTarget);
  CHECK_THROWS_AS(realize_complete_bipartite(
                      3, 2, parse_spectrum_literal("-1,-1,0,1,1"), 0),
                  ParameterError);
}

TEST_CASE("complete bipartite round-trip at every shape through order ten",
          "[realizers]") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> gap(0.3, 1.2);
  for (int m = 1; m <= 5; ++m)
    for (int n = m; m + n <= 10; ++n) {
      for (int trial = 0; trial < 6; ++trial) {
        int ell = 1 + static_cast<int>(rng() % m);
        std::vector<double> flat(m + n - 2 * ell, 0.0);
        double cur = 0.0;
        for (int i = 0; i < ell; ++i) {
          cur += gap(rng);
          flat.push_back(cur);
          flat.push_back(-cur);
        }
        auto target = TargetSpectrum::from_values(flat);
        auto res = realize_complete_bipartite(m, n, target,
                                              1000 * m + 10 * n + trial);
        CHECK(res.residual <= 1e-8 * (1.0 + target.max_abs()));
      }
    }
}

TEST_CASE("balanced tripartite construction", "[realizers]") {
  auto r1 = realize_tripartite_rrr(1, 1.0, 0);
  CHECK(r1.achieved.oml().m == std::vector<int>{1, 2});
  CHECK(r1.residual <= 1e-9);

  auto r2 = realize_tripartite_rrr(2, 1.0, 0);
  CHECK(r2.achieved.oml().m == std::vector<int>{2, 4});
  CHECK(r2.matrix.pattern() == build_family(parse_family("krrr:2")));

  auto r2n = realize_tripartite_rrr(2, -1.0, 0);
  CHECK(r2n.achieved.oml().m == std::vector<int>{4, 2});

  CHECK_THROWS_AS(realize_tripartite_rrr(0, 1.0, 0), ParameterError);
  CHECK_THROWS_AS(realize_tripartite_rrr(2, 0.0, 0), ParameterError);
}

TEST_CASE("two-eigenvalue matrices scale to any admissible pair",
          "[realizers]") {
  auto k4 = HollowMatrix::adjacency(build_family(parse_family("complete:4")));
  auto scaled = scale_two_eigenvalue(k4, -2.0);
  auto spec = spectrum_of(scaled);
  CHECK(spec.values[0].first == Catch::Approx(-2.0));
  CHECK(spec.values[0].second == 3);
  CHECK(spec.values[1].first == Catch::Approx(6.0));

  auto k2 = HollowMatrix::adjacency(build_family(parse_family("complete:2")));
  auto s2 = spectrum_of(scale_two_eigenvalue(k2, -5.0));
  CHECK(s2.values[0].first == Catch::Approx(-5.0));
  CHECK(s2.values[1].first == Catch::Approx(5.0));

  auto c5 = HollowMatrix::adjacency(build_family(parse_family("cycle:5")));
  CHECK_THROWS_AS(scale_two_eigenvalue(c5, -1.0), PreconditionError);
  CHECK_THROWS_AS(scale_two_eigenvalue(k4, 2.0), PreconditionError);
}

TEST_CASE("doubling lift matches its closed form", "[realizers]") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> mag(0.3, 2.0);
  // random symmetric-spectrum inputs: weighted bipartite patterns
  for (int trial = 0; trial < 20; ++trial) {
    int m = 1 + static_cast<int>(rng() % 3);
    int n = m + static_cast<int>(rng() % 3);
    auto g = build_family(parse_family("kmn:" + std::to_string(m) + "," +
                                       std::to_string(n)));
    std::vector<double> w(g.edges().size());
    for (double& x : w) x = (rng() % 2 ? 1.0 : -1.0) * mag(rng);
    auto a = HollowMatrix::from_edge_weights(g, w);
    auto lifted = cartesian_k2_lift(a);
    CHECK(lifted.pattern() == combine(GraphOp::cartesian_k2, g));
    auto expected = cartesian_k2_lift_expected(a);
    auto got = eigensolve(lifted);
    for (std::size_t i = 0; i < expected.size(); ++i)
      CHECK(std::abs(got[i] - expected[i]) <= 1e-9 * (1.0 + std::abs(expected[i])));
  }

  // K2 doubles into the four-cycle with eigenvalues +-sqrt(2)
  auto k2 = HollowMatrix::adjacency(build_family(parse_family("complete:2")));
  auto c4m = cartesian_k2_lift(k2);
  auto spec = spectrum_of(c4m);
  CHECK(spec.oml().m == std::vector<int>{2, 2});
  CHECK(spec.values[1].first == Catch::Approx(std::sqrt(2.0)));

  // asymmetric spectra are rejected
  auto k3 = HollowMatrix::adjacency(build_family(parse_family("complete:3")));
  CHECK_THROWS_AS(cartesian_k2_lift(k3), PreconditionError);
}

TEST_CASE("iterated doubling reaches two distinct eigenvalues on hypercubes",
          "[realizers]") {
  auto m = HollowMatrix::adjacency(build_family(parse_family("complete:2")));
  for (int d = 2; d <= 4; ++d) {
    m = cartesian_k2_lift(m);
    auto spec = spectrum_of(m);
    CHECK(spec.distinct() == 2);
    CHECK(m.order() == (1 << d));
  }
}

TEST_CASE("dominating-vertex lift raises the bottom multiplicity by one",
          "[realizers]") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> mag(0.4, 1.8);
  int done = 0;
  for (int trial = 0; done < 20 && trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<VertexPair> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2) edges.push_back({i, j});
    Graph g(n, edges);
    if (has_isolated_vertex(g) || g.edge_count() == 0) continue;
    std::vector<double> w(edges.size());
    for (double& x : w) x = (rng() % 2 ? 1.0 : -1.0) * mag(rng);
    auto a = HollowMatrix::from_edge_weights(g, w);
    int m1 = spectrum_of(a).values.front().second;

    auto lifted = dominating_vertex_lift(a, trial);
    CHECK(lifted.pattern() ==
          combine(GraphOp::join, g, build_family(parse_family("complete:1"))));
    auto spec = spectrum_of(lifted);
    CHECK(spec.values.front().second == m1 + 1);
    ++done;
  }
  CHECK(done == 20);

  Graph isolated(3, {{0, 1}});
  auto a = HollowMatrix::adjacency(Graph(2, {{0, 1}}));
  CHECK_THROWS_AS(
      dominating_vertex_lift(HollowMatrix::from_edge_weights(
                                 isolated, std::vector<double>{1.0}),
                             0),
      PreconditionError);
  (void)a;
}

TEST_CASE("rank-preserving bordering on odd and even rims", "[realizers]") {
  auto c5 = HollowMatrix::adjacency(build_family(parse_family("cycle:5")));
  auto w6 = border_rank_preserving(c5, 1);
  CHECK(w6.order() == 6);
  CHECK(w6.pattern() == build_family(parse_family("wheel:6")));
  CHECK(numeric_rank(w6) == numeric_rank(c5));
  CHECK(numeric_rank(w6) == 5);
  // the border row is entrywise nonzero off the corner
  for (int i = 0; i < 5; ++i) CHECK(std::abs(w6(i, 5)) > 1e-8);

  auto f6 = flipped_cycle(6);
  auto w7 = border_rank_preserving(f6, 1);
  CHECK(w7.pattern() == build_family(parse_family("wheel:7")));
  CHECK(numeric_rank(w7) == 4);

  auto k2 = HollowMatrix::adjacency(build_family(parse_family("complete:2")));
  CHECK_THROWS_AS(border_rank_preserving(k2, 0), PreconditionError);
}

TEST_CASE("orthogonal representation search pins the bottom eigenvalue",
          "[realizers]") {
  auto c4 = build_family(parse_family("cycle:4"));
  auto res = realize_m_plus(c4, 2, 1);
  CHECK(res.achieved.oml().m == std::vector<int>{2, 2});
  CHECK(res.achieved.values.front().first == Catch::Approx(-1.0).margin(1e-7));

  auto k4 = build_family(parse_family("complete:4"));
  auto res4 = realize_m_plus(k4, 3, 1);
  CHECK(res4.achieved.oml().m == std::vector<int>{3, 1});

  auto k23 = build_family(parse_family("kmn:2,3"));
  auto res23 = realize_m_plus(k23, 2, 1);
  CHECK(res23.achieved.oml().m == std::vector<int>{2, 1, 2});

  // an infeasible request exhausts its budget without refuting anything
  CHECK_THROWS_AS(realize_m_plus(k23, 3, 1), NotFoundError);
  CHECK_THROWS_AS(realize_m_plus(Graph(3, {{0, 1}}), 1, 0), PreconditionError);
}

TEST_CASE("all-simple weighting gives max rank with simple nonzero spectrum",
          "[realizers]") {
  auto star = build_family(parse_family("kmn:1,3"));
  auto res = realize_all_simple(star, 0);
  CHECK(res.achieved.oml().m == std::vector<int>{1, 2, 1});

  auto c5 = realize_all_simple(build_family(parse_family("cycle:5")), 0);
  CHECK(c5.achieved.oml().m == std::vector<int>(5, 1));
  CHECK(numeric_rank(c5.matrix) == 5);

  auto k4 = realize_all_simple(build_family(parse_family("complete:4")), 0);
  CHECK(k4.achieved.oml().m == std::vector<int>(4, 1));

  auto w5 = realize_all_simple(build_family(parse_family("wheel:5")), 0);
  CHECK(w5.achieved.distinct() == 5);
}

TEST_CASE("flipped cycles produce the doubled multiplicity lists",
          "[realizers]") {
  CHECK(oml_of(flipped_cycle(4)).m == std::vector<int>{2, 2});
  CHECK(oml_of(flipped_cycle(5)).m == std::vector<int>{1, 2, 2});
  CHECK(oml_of(flipped_cycle(6)).m == std::vector<int>{2, 2, 2});
  auto spec = spectrum_of(flipped_cycle(4));
  CHECK(spec.values[1].first == Catch::Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS(flipped_cycle(2), ParameterError);
}

TEST_CASE("every realizer output revalidates against its pattern",
          "[realizers]") {
  std::mt19937_64 rng(3);
  auto check_valid = [](const HollowMatrix& m) {
    CHECK_NOTHROW(HollowMatrix::from_dense(m.pattern(), m.entries()));
    double sum = 0.0;
    for (double v : eigensolve(m)) sum += v;
    CHECK(std::abs(sum) <=
          m.order() * 1e-8 * (1.0 + m.frobenius_norm()));
  };
  check_valid(realize_path(random_symmetric_distinct(7, rng), 7).matrix);
  check_valid(realize_complete_bipartite(
                  2, 3, parse_spectrum_literal("-2,-1,0,1,2"), 9)
                  .matrix);
  check_valid(realize_tripartite_rrr(3, 2.0, 5).matrix);
  check_valid(realize_m_plus(build_family(parse_family("cycle:4")), 2, 2).matrix);
  check_valid(realize_all_simple(build_family(parse_family("wheel:5")), 4).matrix);
  check_valid(flipped_cycle(7));
  check_valid(border_rank_preserving(
      HollowMatrix::adjacency(build_family(parse_family("cycle:5"))), 2));
  check_valid(dominating_vertex_lift(
      HollowMatrix::adjacency(build_family(parse_family("cycle:4"))), 2));
}

TEST_CASE("all-simple distinct count equals the maximum rank on every "
          "connected graph through order six",
          "[realizers]") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : hollow_test::connected_graphs(n)) {
      auto res = realize_all_simple(g, 1);
      int mr = max_hollow_rank(g);
      INFO("graph " << graph6_encode(g));
      int nonzero_simple = 0;
      bool all_simple_nonzero = true;
      double cut = 1e-8 * std::max(1.0, res.achieved.values.back().first -
                                            res.achieved.values.front().first);
      for (auto& [v, m] : res.achieved.values) {
        if (std::abs(v) <= cut) continue;
        if (m == 1) ++nonzero_simple;
        else all_simple_nonzero = false;
      }
      CHECK(all_simple_nonzero);
      CHECK(nonzero_simple == mr);
    }
  }
}

TEST_CASE("all-simple on sampled connected graphs of order seven",
          "[realizers]") {
  std::mt19937_64 rng(71);
  int done = 0;
  while (done < 40) {
    std::vector<VertexPair> edges;
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j)
        if (rng() % 2) edges.push_back({i, j});
    Graph g(7, edges);
    if (!is_connected(g)) continue;
    auto res = realize_all_simple(g, done);
    CHECK(numeric_rank(res.matrix) == max_hollow_rank(g));
    ++done;
  }
}
