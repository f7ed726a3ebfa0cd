// Batch command-line front end: one subcommand per computation, JSON in and
// JSON (or TSV plot data) out.  Exit codes: 0 success, 1 domain error with a
// machine-readable object on stderr, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "solena/json_io.hpp"

using namespace solena;
using nlohmann::json;

namespace {

// Inputs may be inline JSON or "-" for standard input.
json read_json_arg(const std::string& arg) {
  std::string text = arg;
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("ParseError", e.what());
  }
}

std::vector<Int> parse_int_list(const std::string& csv) {
  std::vector<Int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_int(item));
  }
  return out;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for generic abelian groups: normal forms, "
               "group-table spaces, rational embeddings, torus geometry, "
               "solenoid classification, duality, and the table game"};
  app.require_subcommand(1);

  std::string matrix_arg, table_arg, mapping_arg, cert_arg, expr_arg, spec_arg;
  std::string h1_arg, h2_arg, transcript_arg, base_table = "q";
  std::string delta_arg = "1/2", mesh_arg = "1/64", meshes_arg, format = "json";
  std::string winding_arg = "1", primes_arg, jtuple_arg, divisor_arg = "1";
  std::size_t k_dim = 1, window_k = 3, generators = 1, rounds = 4;
  std::string n_arg = "3";
  std::uint64_t seed = 0, adversary_seed = 0;
  std::string adversary = "random";
  std::string relations_arg = "{\"rows\":0,\"cols\":0,\"entries\":[]}";

  auto* snf = app.add_subcommand("snf", "Smith normal form U*M*V = D");
  snf->add_option("--matrix", matrix_arg, "matrix JSON or '-'")->required();

  auto* hnf = app.add_subcommand("hnf", "row Hermite normal form U*M = H");
  hnf->add_option("--matrix", matrix_arg, "matrix JSON or '-'")->required();

  auto* sat = app.add_subcommand("saturate", "saturation of a row lattice");
  sat->add_option("--matrix", matrix_arg, "matrix JSON or '-'")->required();

  auto* check = app.add_subcommand("check-table", "group axioms on a window");
  check->add_option("--table", table_arg, "partial table JSON or '-'")->required();

  auto* supp_cmd = app.add_subcommand("supp", "support of a basic clopen set");
  supp_cmd->add_option("--table", table_arg, "partial table JSON or '-'")->required();

  auto* permute = app.add_subcommand(
      "permute", "transport a canonical table by a finite permutation");
  permute->add_option("--base", base_table, "canonical base table: z or q");
  permute->add_option("--mapping", mapping_arg, "permutation JSON or '-'")
      ->required();
  permute->add_option("--window", window_k, "emit the window {0..k}^2");

  auto* embed = app.add_subcommand("embed-fg",
                                   "embed a torsion-free f.g. presentation");
  embed->add_option("--generators", generators, "generator count")->required();
  embed->add_option("--relations", relations_arg, "relator matrix JSON or '-'");

  auto* realize = app.add_subcommand(
      "realize", "land a certificate inside the canonical rational table");
  realize->add_option("--certificate", cert_arg, "certificate JSON or '-'")
      ->required();
  realize->add_option("--divisor", divisor_arg,
                      "also report a divisibility witness for --n/--divisor");
  realize->add_option("--n", n_arg, "element index for the divisibility check");

  auto* dual_cmd = app.add_subcommand("dual", "Pontryagin dual of an expression");
  dual_cmd->add_option("--expr", expr_arg, "group expression JSON or '-'")
      ->required();

  auto* preds = app.add_subcommand("predicates", "predicate vector of an expression");
  preds->add_option("--expr", expr_arg, "group expression JSON or '-'")->required();

  auto* laws = app.add_subcommand("check-laws", "duality biconditionals");
  laws->add_option("--expr", expr_arg, "group expression JSON or '-'")->required();

  auto* classify = app.add_subcommand("classify-solenoid",
                                      "universal-solenoid characterization");
  classify->add_option("--expr", expr_arg, "group expression JSON or '-'")
      ->required();

  auto* stein = app.add_subcommand("steinitz", "Steinitz number of a prime sequence");
  stein->add_option("--spec", spec_arg, "sequence spec JSON or '-'")->required();

  auto* net = app.add_subcommand("circle-net", "winding-circle delta-net in S^1^k");
  net->add_option("--k", k_dim, "torus dimension")->required();
  net->add_option("--delta", delta_arg, "net radius, e.g. 1/2");
  net->add_option("--format", format, "json or tsv");

  auto* cube = app.add_subcommand("cube-witness", "grid-cube witness m*x");
  cube->add_option("--k", k_dim, "torus dimension")->required();
  cube->add_option("--n", n_arg, "grid refinement N");
  cube->add_option("--j", jtuple_arg, "comma-separated tuple, e.g. 2,1")->required();

  auto* haus = app.add_subcommand("hausdorff",
                                  "certified Hausdorff distance of two subgroups");
  haus->add_option("--h1", h1_arg, "subgroup JSON or '-'")->required();
  haus->add_option("--h2", h2_arg, "subgroup JSON or '-'")->required();
  haus->add_option("--mesh", mesh_arg, "sampling step, e.g. 1/64");
  haus->add_option("--meshes", meshes_arg, "comma-separated sweep of steps");
  haus->add_option("--format", format, "json or tsv");

  auto* sol = app.add_subcommand("solenoid-approx",
                                 "finite-level solenoid approximant");
  sol->add_option("--w", winding_arg, "base circle winding vector, e.g. 1 or 2,1");
  sol->add_option("--primes", primes_arg, "comma-separated bonding primes")
      ->required();

  auto* game = app.add_subcommand("play-game", "builder vs adversary table game");
  game->add_option("--rounds", rounds, "total moves")->required();
  game->add_option("--seed", seed, "game seed");
  game->add_option("--adversary", adversary, "random or builder");
  game->add_option("--adversary-seed", adversary_seed,
                   "extra seed for the random adversary");

  auto* audit_cmd = app.add_subcommand("audit", "re-verify a transcript");
  audit_cmd->add_option("--transcript", transcript_arg, "transcript JSON or '-'")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (snf->parsed()) {
      auto r = smith_normal_form(matrix_from_json(read_json_arg(matrix_arg)));
      emit({{"U", to_json(r.u)}, {"D", to_json(r.d)}, {"V", to_json(r.v)}});
    } else if (hnf->parsed()) {
      auto r = hermite_normal_form(matrix_from_json(read_json_arg(matrix_arg)));
      emit({{"H", to_json(r.h)}, {"U", to_json(r.u)}});
    } else if (sat->parsed()) {
      emit({{"saturation",
             to_json(saturate(matrix_from_json(read_json_arg(matrix_arg))))}});
    } else if (check->parsed()) {
      emit(to_json(check_axioms(table_from_json(read_json_arg(table_arg)))));
    } else if (supp_cmd->parsed()) {
      json s = json::array();
      for (const auto& v : supp(table_from_json(read_json_arg(table_arg))))
        s.push_back(int_to_json(v));
      emit({{"supp", std::move(s)}});
    } else if (permute->parsed()) {
      TablePtr base;
      if (base_table == "z")
        base = canonical_z_table();
      else if (base_table == "q")
        base = canonical_q_table();
      else
        throw Error("ParseError", "--base must be z or q");
      json m = read_json_arg(mapping_arg);
      auto nu = permutation_from_json(m.is_object() ? m : json{{"mapping", m}});
      auto permuted = apply_permutation(base, nu);
      emit({{"table", to_json(window(*permuted, window_k))}});
    } else if (embed->parsed()) {
      IntMatrix rel = matrix_from_json(read_json_arg(relations_arg));
      if (rel.rows() == 0) rel = IntMatrix(0, generators);
      auto r = embed_fg_group({generators, rel});
      json rows = json::array();
      for (std::size_t i = 0; i < r.map.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < r.map.cols(); ++c)
          row.push_back(rational_to_json(Rational(r.map.at(i, c))));
        rows.push_back(std::move(row));
      }
      emit({{"rank", r.rank}, {"map", std::move(rows)}});
    } else if (realize->parsed()) {
      Certificate c = certificate_from_json(read_json_arg(cert_arg));
      auto r = realize_patch(c);
      json out;
      out["permutation"] = to_json(r.nu);
      out["window"] = to_json(window(*r.oracle, c.table.k));
      Int divisor = parse_int(divisor_arg);
      if (divisor > 1) {
        auto w = divisibility_witness(*r.oracle, parse_int(n_arg), divisor,
                                      Nat(1) << 1000000);
        out["divisibility_witness"] = w ? int_to_json(*w) : json(nullptr);
      }
      emit(out);
    } else if (dual_cmd->parsed()) {
      GroupExpr e = expr_from_json(read_json_arg(expr_arg));
      GroupExpr d = dual(e);
      emit({{"dual", to_json(d)},
            {"predicates", to_json(predicates(e))},
            {"dual_predicates", to_json(predicates(d))}});
    } else if (preds->parsed()) {
      emit(to_json(predicates(expr_from_json(read_json_arg(expr_arg)))));
    } else if (laws->parsed()) {
      emit(to_json(check_duality_laws(expr_from_json(read_json_arg(expr_arg)))));
    } else if (classify->parsed()) {
      emit(to_json(
          characterize_universal_solenoid(expr_from_json(read_json_arg(expr_arg)))));
    } else if (stein->parsed()) {
      auto s = steinitz(seq_spec_from_json(read_json_arg(spec_arg)));
      emit({{"supernatural", to_json(s)}, {"universal", is_universal(s)}});
    } else if (net->parsed()) {
      auto r = circle_net(k_dim, parse_rational(delta_arg));
      if (format == "tsv") {
        // One net point per line: the multiple and its coordinates.
        Int order = pow_int(r.n, static_cast<unsigned long>(k_dim));
        for (Int i = 0; i < order; ++i) {
          std::cout << i.get_str();
          TorusPoint p = r.circle.point_at(make_rational(i, order));
          for (const auto& c : p.coords) std::cout << "\t" << c.get_str();
          std::cout << "\n";
        }
      } else {
        json x = json::array(), w = json::array();
        for (const auto& c : r.x.coords) x.push_back(rational_to_json(c));
        for (const auto& c : r.circle.w) w.push_back(int_to_json(c));
        emit({{"N", int_to_json(r.n)}, {"x", std::move(x)}, {"w", std::move(w)}});
      }
    } else if (cube->parsed()) {
      std::vector<Int> j = parse_int_list(jtuple_arg);
      auto r = grid_cube_witness(k_dim, parse_int(n_arg), j);
      json cube_box = json::array();
      for (const auto& ji : j)
        cube_box.push_back(json::array(
            {rational_to_json(make_rational(ji, parse_int(n_arg))),
             rational_to_json(make_rational(ji + 1, parse_int(n_arg)))}));
      emit({{"m", int_to_json(r.m)},
            {"point", to_json(r.point)},
            {"cube", std::move(cube_box)}});
    } else if (haus->parsed()) {
      auto g1 = subgroup_from_json(read_json_arg(h1_arg));
      auto g2 = subgroup_from_json(read_json_arg(h2_arg));
      std::vector<Rational> meshes;
      if (!meshes_arg.empty()) {
        std::stringstream ss(meshes_arg);
        std::string item;
        while (std::getline(ss, item, ',')) meshes.push_back(parse_rational(item));
      } else {
        meshes.push_back(parse_rational(mesh_arg));
      }
      if (format == "tsv") {
        for (const auto& m : meshes) {
          auto r = hausdorff_distance(g1, g2, m);
          std::cout << m.get_str() << "\t" << r.estimate.get_str() << "\t"
                    << r.error_bound.get_str() << "\n";
        }
      } else if (meshes.size() == 1) {
        auto r = hausdorff_distance(g1, g2, meshes.front());
        emit({{"estimate", rational_to_json(r.estimate)},
              {"error_bound", rational_to_json(r.error_bound)}});
      } else {
        json rows = json::array();
        for (const auto& m : meshes) {
          auto r = hausdorff_distance(g1, g2, m);
          rows.push_back({{"mesh", rational_to_json(m)},
                          {"estimate", rational_to_json(r.estimate)},
                          {"error_bound", rational_to_json(r.error_bound)}});
        }
        emit(rows);
      }
    } else if (sol->parsed()) {
      WindingCircle base(parse_int_list(winding_arg));
      auto primes = parse_int_list(primes_arg);
      auto h = solenoid_approximant(base, primes);
      json winding = json::array();
      for (const auto& v : solenoid_winding(base, primes))
        winding.push_back(int_to_json(v));
      json out = to_json(h);
      out["winding"] = std::move(winding);
      emit(out);
    } else if (game->parsed()) {
      Strategy b;
      if (adversary == "random")
        b = random_adversary(adversary_seed ? adversary_seed : seed);
      else if (adversary == "builder")
        b = builder_strategy();
      else
        throw Error("ParseError", "--adversary must be random or builder");
      Transcript t = play(builder_strategy(), b, rounds, seed);
      emit({{"transcript", to_json(t)}, {"audit", to_json(audit(t))}});
    } else if (audit_cmd->parsed()) {
      Transcript t = transcript_from_json(read_json_arg(transcript_arg));
      emit(to_json(audit(t)));
    }
  } catch (const Error& e) {
    std::cerr << json{{"error", {{"code", e.code()}, {"message", e.what()}}}}.dump()
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error",
                       {{"code", "Internal"}, {"message", e.what()}}}}.dump()
              << "\n";
    return 1;
  }
  return 0;
}
