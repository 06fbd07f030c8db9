// Command-line front end: analyze / realize / certify / charpoly / mr-max /
// catalog over graph6 or family-spec inputs, JSON on standard output.
//
// Exit codes: 0 success, 1 usage or input error, 2 provably refuted target,
// 3 search exhausted without a witness (inconclusive).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hollow/hollow.hpp"

namespace {

struct GraphInput {
  std::string graph6;
  std::string family;
};

hollow::Graph resolve_graph(const GraphInput& in) {
  if (in.graph6.empty() == in.family.empty())
    throw hollow::ParameterError(
        "give exactly one graph input: --graph6 or --family");
  if (!in.graph6.empty()) return hollow::graph6_decode(in.graph6);
  return hollow::build_family(hollow::parse_family(in.family));
}

void emit(const hollow::Json& j, const std::string& out_path) {
  std::string text = j.dump(2);
  std::cout << text << "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw hollow::Error("cannot write " + out_path);
    f << text << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hollow symmetric inverse eigenvalue toolbox"};
  app.require_subcommand(1);

  GraphInput gin;
  std::string spectrum_literal, oml_literal, out_path, grid_literal;
  hollow::SearchConfig cfg;
  double tol = 1e-7;

  auto add_common = [&](CLI::App* cmd, bool with_target) {
    cmd->add_option("--graph6", gin.graph6, "graph6 string");
    cmd->add_option("--family", gin.family,
                    "family spec, e.g. wheel:5 or kmn:2,3");
    cmd->add_option("--tol", tol, "acceptance tolerance (relative)");
    cmd->add_option("--seed", cfg.seed, "random seed");
    cmd->add_option("--restarts", cfg.restarts, "search restarts");
    cmd->add_option("--grid", grid_literal,
                    "comma-separated nonzero weights for the grid oracle");
    cmd->add_option("--out", out_path, "also write the JSON to this file");
    if (with_target) {
      cmd->add_option("--spectrum", spectrum_literal,
                      "target spectrum, e.g. \"-2,-1,1,2\" or \"-2^2,0,2^2\"");
      cmd->add_option("--oml", oml_literal,
                      "target ordered multiplicity list, e.g. \"1,3,1\"");
    }
  };

  auto* analyze = app.add_subcommand("analyze", "bounds, rank and catalog hits");
  add_common(analyze, false);
  auto* realize = app.add_subcommand("realize", "search for a realization");
  add_common(realize, true);
  auto* certify = app.add_subcommand("certify", "run the obstruction rules");
  add_common(certify, true);
  auto* charpoly = app.add_subcommand(
      "charpoly", "characteristic polynomial both ways");
  add_common(charpoly, false);
  std::string weights_literal;
  charpoly->add_option("--weights", weights_literal,
                       "comma-separated edge weights in canonical edge order "
                       "(default: all ones)");
  auto* mrmax = app.add_subcommand("mr-max", "maximum hollow rank");
  add_common(mrmax, false);
  auto* catalog = app.add_subcommand("catalog", "matching catalog entries");
  add_common(catalog, false);

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.accept_tol = tol;
    if (!grid_literal.empty()) {
      cfg.grid.clear();
      std::size_t pos = 0;
      while (pos <= grid_literal.size()) {
        auto comma = grid_literal.find(',', pos);
        if (comma == std::string::npos) comma = grid_literal.size();
        cfg.grid.push_back(
            std::stod(grid_literal.substr(pos, comma - pos)));
        pos = comma + 1;
        if (comma == grid_literal.size()) break;
      }
    }

    hollow::Graph g = resolve_graph(gin);

    if (*analyze) {
      hollow::Json j{{"graph6", hollow::graph6_encode(g)},
                     {"order", g.order()},
                     {"edges", g.edge_count()}};
      if (g.order() <= cfg.order_limit)
        j["MR0"] = hollow::max_hollow_rank(g, cfg.order_limit);
      auto est = hollow::estimate_extremes(g, cfg);
      j["estimates"] = hollow::to_json(est);
      hollow::Json entries = hollow::Json::array();
      for (const auto& e : hollow::catalog_lookup(g))
        entries.push_back(hollow::to_json(e));
      j["catalog"] = entries;
      emit(j, out_path);
      return 0;
    }

    if (*realize || *certify) {
      if (spectrum_literal.empty() == oml_literal.empty())
        throw hollow::ParameterError(
            "give exactly one target: --spectrum or --oml");
      hollow::Target target =
          !spectrum_literal.empty()
              ? hollow::Target(hollow::parse_spectrum_literal(spectrum_literal))
              : hollow::Target(hollow::parse_oml_literal(oml_literal));

      if (*certify) {
        auto certs = hollow::certify(g, target, cfg.order_limit);
        hollow::Json j;
        if (certs.empty()) {
          j = hollow::Json{{"verdict", "inconclusive"},
                           {"note", "no obstruction rule applies; this is "
                                    "not a realizability claim"}};
          emit(j, out_path);
          return 0;
        }
        hollow::Json arr = hollow::Json::array();
        for (const auto& c : certs) arr.push_back(hollow::to_json(c));
        j = hollow::Json{{"verdict", "refuted"}, {"certificates", arr}};
        emit(j, out_path);
        return 2;
      }

      hollow::SearchOutcome outcome =
          std::holds_alternative<hollow::TargetSpectrum>(target)
              ? hollow::search_spectrum(
                    g, std::get<hollow::TargetSpectrum>(target), cfg)
              : hollow::search_oml(
                    g, std::get<hollow::OrderedMultiplicityList>(target), cfg);
      emit(hollow::to_json(outcome), out_path);
      switch (outcome.status) {
        case hollow::SearchStatus::realized: return 0;
        case hollow::SearchStatus::refuted: return 2;
        case hollow::SearchStatus::not_found: return 3;
      }
    }

    if (*charpoly) {
      std::vector<double> w(g.edges().size(), 1.0);
      if (!weights_literal.empty()) {
        w.clear();
        std::size_t pos = 0;
        while (pos <= weights_literal.size()) {
          auto comma = weights_literal.find(',', pos);
          if (comma == std::string::npos) comma = weights_literal.size();
          w.push_back(std::stod(weights_literal.substr(pos, comma - pos)));
          pos = comma + 1;
          if (comma == weights_literal.size()) break;
        }
      }
      auto m = hollow::HollowMatrix::from_edge_weights(g, w);
      auto via_covers = hollow::charpoly_via_gencyc(m, cfg.order_limit);
      auto direct = hollow::charpoly_direct(m);
      double disc = 0.0, scale = 0.0;
      for (int k = 1; k <= m.order(); ++k) {
        disc = std::max(disc, std::abs(via_covers.S(k) - direct.S(k)));
        scale = std::max(scale, std::abs(direct.S(k)));
      }
      hollow::Json edges = hollow::Json::array();
      for (auto [u, v] : g.edges()) edges.push_back(hollow::Json::array({u, v}));
      emit(hollow::Json{{"graph6", hollow::graph6_encode(g)},
                        {"edges", edges},
                        {"weights", w},
                        {"S_via_generalized_cycles", via_covers.s},
                        {"S_direct", direct.s},
                        {"max_discrepancy", disc},
                        {"relative_discrepancy", disc / (1.0 + scale)}},
           out_path);
      return 0;
    }

    if (*mrmax) {
      emit(hollow::Json{{"graph6", hollow::graph6_encode(g)},
                        {"MR0", hollow::max_hollow_rank(g, cfg.order_limit)}},
           out_path);
      return 0;
    }

    if (*catalog) {
      hollow::Json entries = hollow::Json::array();
      for (const auto& e : hollow::catalog_lookup(g))
        entries.push_back(hollow::to_json(e));
      emit(hollow::Json{{"graph6", hollow::graph6_encode(g)},
                        {"entries", entries}},
           out_path);
      return 0;
    }
  } catch (const hollow::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const hollow::ParameterError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const hollow::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
