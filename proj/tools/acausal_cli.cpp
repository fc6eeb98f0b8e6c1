// Command-line surface for the acausal library: polytope dimensions and
// vertex enumeration, consistency checking, deterministic-process
// classification, causal games, and diagonal process-matrix export.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "acausal/choi.hpp"
#include "acausal/classify.hpp"
#include "acausal/consistency.hpp"
#include "acausal/errors.hpp"
#include "acausal/games.hpp"
#include "acausal/lp.hpp"
#include "acausal/polytope.hpp"

namespace {

using nlohmann::json;
using namespace acausal;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternalCheck = 4;

struct GlobalOpts {
  int threads = 0;
  std::optional<double> budget_seconds;
  std::string format = "native";
};

std::string op_name(const DeterministicLocalOp& op) {
  if (op.d == 2) {
    if (op.table == std::vector<int>{0, 0}) return "const0";
    if (op.table == std::vector<int>{1, 1}) return "const1";
    if (op.table == std::vector<int>{0, 1}) return "id";
    if (op.table == std::vector<int>{1, 0}) return "flip";
  }
  std::string s = "[";
  for (std::size_t i = 0; i < op.table.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(op.table[i]);
  }
  return s + "]";
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw InvalidInputError("cannot open output file: " + path);
  return file;
}

int cmd_dim(const GlobalOpts& g, int n, int d) {
  HPolytope p = build_hrep(Scenario(n, d));
  std::size_t dim = polytope_dimension(p);
  if (g.format == "json") {
    json out{{"n", n}, {"d", d}, {"dimension", dim},
             {"facets", p.nonneg_count}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "dimension " << dim << ", facets " << p.nonneg_count << "\n";
  }
  return kExitOk;
}

int cmd_vertices(const GlobalOpts& g, int n, int d, bool det_only,
                 bool full_dd, const std::string& out_path) {
  Scenario sc(n, d);
  EnumOptions opts;
  opts.budget_seconds = g.budget_seconds;
  opts.threads = g.threads;

  std::vector<Vertex> vertices;
  if (det_only) {
    for (const auto& f : enumerate_deterministic_vertices(sc, opts)) {
      Vertex v;
      v.point = vectorize(det_function_to_process(f));
      v.deterministic = true;
      vertices.push_back(std::move(v));
    }
  } else {
    HPolytope p = build_hrep(sc);
    if (polytope_dimension(p) > 16 && !full_dd)
      throw BudgetExceededError(
          "full double description at this size runs for hours; pass "
          "--full-dd to attempt it or --deterministic-only for the 0-1 "
          "vertices");
    vertices = enumerate_vertices_dd(p, opts);
  }

  std::size_t det_count = 0;
  for (const auto& v : vertices)
    if (v.deterministic) ++det_count;

  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  if (g.format == "json") {
    json list = json::array();
    for (const auto& v : vertices) {
      json coords = json::array();
      for (const Rat& c : v.point) coords.push_back(to_string(c));
      list.push_back(json{{"coords", coords}, {"deterministic", v.deterministic}});
    }
    out << json{{"n", n}, {"d", d}, {"count", vertices.size()},
                {"deterministic_count", det_count}, {"vertices", list}}
               .dump()
        << "\n";
  } else if (g.format == "cdd") {
    write_cdd_vrep(out, vertices);
  } else {
    write_vertices(out, vertices);
    out << "# total " << vertices.size() << " vertices, " << det_count
        << " deterministic\n";
  }
  std::cerr << "vertices " << vertices.size() << " (deterministic "
            << det_count << ")\n";
  return kExitOk;
}

int cmd_check(const GlobalOpts& g, const std::string& path,
              const std::string& mode_name) {
  auto [sc, matrix] = read_candidate_file(path);
  CheckMode mode = mode_name == "all" ? CheckMode::kAllOps
                                      : CheckMode::kSufficientFamily;

  ConsistencyVerdict verdict = check_nonnegativity(matrix);
  if (verdict.consistent) {
    // Column sums must be 1 before the trace conditions even make sense.
    std::size_t dim = sc.joint_dim();
    for (std::size_t o = 0; o < dim; ++o) {
      Rat sum = 0;
      for (std::size_t i = 0; i < dim; ++i) sum += matrix(i, o);
      if (sum != 1)
        throw InvalidInputError("column " + std::to_string(o) + " sums to " +
                                to_string(sum) + ", not 1");
    }
    EnvironmentProcess env(sc, std::move(matrix));
    verdict = is_consistent(env, mode);
  }

  if (g.format == "json") {
    json out{{"consistent", verdict.consistent}};
    if (verdict.trace_witness) {
      json ops = json::array();
      for (const auto& op : verdict.trace_witness->ops)
        ops.push_back(op_name(op));
      out["trace_witness"] = json{{"ops", ops},
                                  {"trace", to_string(verdict.trace_witness->trace)}};
    }
    if (verdict.negative_witness)
      out["negative_witness"] =
          json{{"row", verdict.negative_witness->row},
               {"col", verdict.negative_witness->col},
               {"value", to_string(verdict.negative_witness->value)}};
    std::cout << out.dump() << "\n";
  } else if (verdict.consistent) {
    std::cout << "consistent\n";
  } else if (verdict.negative_witness) {
    std::cout << "inconsistent: entry (" << verdict.negative_witness->row
              << "," << verdict.negative_witness->col << ") < 0\n";
  } else {
    std::cout << "inconsistent: trace="
              << to_string(verdict.trace_witness->trace) << " at ops (";
    for (std::size_t j = 0; j < verdict.trace_witness->ops.size(); ++j) {
      if (j) std::cout << ",";
      std::cout << op_name(verdict.trace_witness->ops[j]);
    }
    std::cout << ")\n";
  }
  return kExitOk;
}

DeterministicFunction process_to_det_function(const EnvironmentProcess& env) {
  std::size_t dim = env.scenario.joint_dim();
  DeterministicFunction g{env.scenario, std::vector<JointIndex>(dim)};
  for (std::size_t o = 0; o < dim; ++o) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      const Rat& v = env.matrix(i, o);
      if (v == 1) {
        g.table[o] = i;
        ++ones;
      } else if (v != 0) {
        throw InvalidInputError("process is not deterministic (0-1)");
      }
    }
    if (ones != 1)
      throw InvalidInputError("process is not deterministic (0-1)");
  }
  return g;
}

int cmd_classify(const GlobalOpts& g, bool census, int n, int d,
                 const std::string& path) {
  if (census) {
    EnumOptions opts;
    opts.budget_seconds = g.budget_seconds;
    opts.threads = g.threads;
    auto dets = enumerate_deterministic_vertices(Scenario(n, d), opts);
    auto orbits = orbit_decompose(dets);
    TaxonomyReport report = taxonomy_census(orbits.canonical);
    if (g.format == "json") {
      json classes;
      for (const auto& [cls, count] : report.class_counts)
        classes[std::string(1, cls)] = count;
      std::cout << json{{"classes", classes},
                        {"orbits", report.orbit_count},
                        {"total", report.orbit_count * (std::size_t(1) << n)}}
                       .dump()
                << "\n";
    } else {
      std::cout << format_census(report) << "\n";
    }
    return kExitOk;
  }
  if (path.empty())
    throw InvalidInputError("classify needs a process file or --census");
  DeterministicFunction fn = process_to_det_function(read_process_file(path));
  JointIndex fp = canonical_fixed_point(fn);
  FlipPattern flips{joint_decode(fn.scenario, fp)};
  char cls = taxonomy_class(conjugate_by_flips(fn, flips));
  if (g.format == "json")
    std::cout << json{{"class", std::string(1, cls)}}.dump() << "\n";
  else
    std::cout << "class " << cls << "\n";
  return kExitOk;
}

std::vector<PartyProgram> pick_programs(const std::string& name,
                                        const Game& game) {
  if (name == "ex1") return ex1_noncausal_programs();
  if (name == "forward" || name.empty())
    return forward_programs(game.n, game.d, game.m_size);
  throw InvalidInputError("unknown program family: " + name);
}

json strategy_to_json(const CausalStrategy& s) {
  json out;
  out["model"] = s.model == OrderModel::kFixed ? "fixed" : "adaptive";
  if (s.model == OrderModel::kFixed)
    out["order"] = s.fixed_order;
  else {
    out["first_party"] = s.first_party;
    out["orders"] = s.adaptive_orders;
  }
  out["guesses"] = s.guesses;
  return out;
}

int cmd_game(const GlobalOpts& g, const std::string& builtin,
             const std::string& game_path, const std::string& action,
             const std::string& env_path, const std::string& programs_name,
             const std::string& model_name) {
  Game game;
  if (!builtin.empty()) {
    if (builtin == "ex1")
      game = builtin_ex1();
    else if (builtin == "ex2")
      game = builtin_ex2();
    else
      throw InvalidInputError("unknown builtin game: " + builtin);
  } else if (!game_path.empty()) {
    game = read_game_file(game_path);
  } else {
    throw InvalidInputError("game needs --builtin or a game file");
  }

  if (action == "eval") {
    if (env_path.empty())
      throw InvalidInputError("eval needs --env PROCESS_FILE");
    EnvironmentProcess env = read_process_file(env_path);
    std::string pname =
        programs_name.empty() ? (builtin == "ex1" ? "ex1" : "forward")
                              : programs_name;
    Rat value = eval_noncausal(game, env, pick_programs(pname, game));
    if (g.format == "json")
      std::cout << json{{"value", to_string(value)}, {"programs", pname}}.dump()
                << "\n";
    else
      std::cout << to_string(value) << "\n";
    return kExitOk;
  }

  if (action == "causal-max") {
    OrderModel model = model_name == "fixed" ? OrderModel::kFixed
                                             : OrderModel::kAdaptive;
    if (!model_name.empty() && model_name != "fixed" &&
        model_name != "adaptive")
      throw InvalidInputError("unknown order model: " + model_name);
    auto [value, strategy] = causal_max(game, model);
    if (strategy_value(game, strategy) != value)
      throw InternalCheckError("strategy witness does not certify the value");
    if (g.format == "json") {
      std::cout << json{{"value", to_string(value)},
                        {"strategy", strategy_to_json(strategy)}}
                       .dump()
                << "\n";
    } else {
      std::cout << to_string(value) << "\n";
      if (strategy.model == OrderModel::kFixed) {
        std::cout << "# fixed order:";
        for (int p : strategy.fixed_order) std::cout << " " << p;
        std::cout << "\n";
      } else {
        std::cout << "# adaptive, first party " << strategy.first_party
                  << "\n";
      }
    }
    return kExitOk;
  }

  if (action == "lp-max") {
    std::string pname =
        programs_name.empty() ? (builtin == "ex1" ? "ex1" : "forward")
                              : programs_name;
    LinearProgram lp{game_objective(game, pick_programs(pname, game)),
                     build_hrep(Scenario(game.n, game.d))};
    auto [value, vertex] = maximize(lp);
    if (g.format == "json") {
      json coords = json::array();
      for (const Rat& c : vertex.point) coords.push_back(to_string(c));
      std::cout << json{{"value", to_string(value)},
                        {"argmax", json{{"coords", coords},
                                        {"deterministic", vertex.deterministic}}}}
                       .dump()
                << "\n";
    } else {
      std::cout << to_string(value) << "\n";
      write_vertices(std::cout, {vertex});
    }
    return kExitOk;
  }

  throw InvalidInputError("game needs one of: eval, causal-max, lp-max");
}

int cmd_choi(const GlobalOpts& g, const std::string& path) {
  DiagonalProcessMatrix w = env_to_process_matrix(read_process_file(path));
  if (g.format == "json") {
    json triples = json::array();
    std::size_t dim = w.scenario.joint_dim();
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t m = 0; m < dim; ++m)
        if (w.at(k, m) != 0)
          triples.push_back(json{{"k", k}, {"m", m},
                                 {"value", to_string(w.at(k, m))}});
    std::cout << json{{"n", w.scenario.n}, {"d", w.scenario.d},
                      {"triples", triples}}
                     .dump()
              << "\n";
  } else {
    write_triples(std::cout, w);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of logically consistent classical processes "
               "without predefined causal order"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--threads", g.threads, "worker threads (0 = auto)")
      ->check(CLI::NonNegativeNumber);
  double budget = 0;
  auto* budget_opt =
      app.add_option("--budget", budget, "time budget in seconds");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"native", "cdd", "json"}));

  int n = 3, d = 2;
  auto add_scenario = [&](CLI::App* sub) {
    sub->add_option("-n,--parties", n, "number of parties");
    sub->add_option("-d,--alphabet", d, "local alphabet size");
  };

  auto* dim = app.add_subcommand("dim", "polytope dimension and facet count");
  add_scenario(dim);

  auto* vertices = app.add_subcommand("vertices", "enumerate polytope vertices");
  add_scenario(vertices);
  bool det_only = false, full_dd = false;
  std::string out_path;
  vertices->add_flag("--deterministic-only", det_only,
                     "only the 0-1 vertices (exhaustive search)");
  vertices->add_flag("--full-dd", full_dd,
                     "run the hours-scale double description at large sizes");
  vertices->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* check = app.add_subcommand("check", "consistency check of a process");
  std::string check_path, check_mode = "sufficient";
  check->add_option("file", check_path, "process file")->required();
  check->add_option("--mode", check_mode, "condition family")
      ->check(CLI::IsMember({"sufficient", "all"}));

  auto* classify = app.add_subcommand("classify",
                                      "signaling taxonomy of deterministic processes");
  add_scenario(classify);
  bool census = false;
  std::string classify_path;
  classify->add_flag("--census", census, "full census over all consistent functions");
  classify->add_option("file", classify_path, "process file to classify");

  auto* game = app.add_subcommand("game", "causal game values");
  std::string builtin, game_path, env_path, programs_name, model_name = "adaptive";
  game->add_option("--builtin", builtin, "ex1 or ex2");
  game->add_option("file", game_path, "game description file");
  auto* eval = game->add_subcommand("eval", "success through an environment");
  eval->add_option("--env", env_path, "process file")->required();
  eval->add_option("--programs", programs_name, "forward or ex1");
  auto* causal = game->add_subcommand("causal-max",
                                      "best predefined-order strategy");
  causal->add_option("--model", model_name, "fixed or adaptive")
      ->check(CLI::IsMember({"fixed", "adaptive"}));
  auto* lpmax = game->add_subcommand("lp-max", "LP optimum over the polytope");
  lpmax->add_option("--programs", programs_name, "forward or ex1");
  game->require_subcommand(1);

  auto* choi = app.add_subcommand("choi", "diagonal process-matrix triples");
  std::string choi_path;
  choi->add_option("file", choi_path, "process file")->required();

  CLI11_PARSE(app, argc, argv);

  if (budget_opt->count() > 0) {
    g.budget_seconds = budget;
  } else if (const char* env_budget = std::getenv("ACAUSAL_BUDGET_SECS")) {
    try {
      g.budget_seconds = std::stod(env_budget);
    } catch (const std::exception&) {
      std::cerr << "error: ACAUSAL_BUDGET_SECS is not a number\n";
      return kExitInvalidInput;
    }
  }

  try {
    if (dim->parsed()) return cmd_dim(g, n, d);
    if (vertices->parsed())
      return cmd_vertices(g, n, d, det_only, full_dd, out_path);
    if (check->parsed()) return cmd_check(g, check_path, check_mode);
    if (classify->parsed())
      return cmd_classify(g, census, n, d, classify_path);
    if (game->parsed()) {
      std::string action = eval->parsed()     ? "eval"
                           : causal->parsed() ? "causal-max"
                                              : "lp-max";
      return cmd_game(g, builtin, game_path, action, env_path, programs_name,
                      model_name);
    }
    if (choi->parsed()) return cmd_choi(g, choi_path);
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InternalCheckError& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitInternalCheck;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
