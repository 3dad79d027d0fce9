// mfl: fixed-point learning experiments from declarative JSON configs.
//
// mfl <subcommand> [--config file.json] [--seed N] [--out dir] [flags]
// Subcommands: solve, accelerate, bound, game, esc, satisfy,
// reproduce {table1,table2,table3,fig1,fig2,figtime-curve}.
// Exit codes: 0 success, 2 config error, 3 runtime error,
// 4 golden-comparison mismatch (reproduce only).

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mfl/errors.hpp"
#include "mfl/experiment.hpp"

namespace {

using nlohmann::json;

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw mfl::Error(mfl::ErrorCode::config_invalid,
                     "cannot open config file " + path);
  json config;
  try {
    in >> config;
  } catch (const json::parse_error& e) {
    throw mfl::Error(mfl::ErrorCode::config_invalid,
                     std::string("config parse error: ") + e.what());
  }
  return config;
}

struct CommonArgs {
  std::string config_path;
  std::string out_dir = "out";
  long long seed = -1;
  bool quiet = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "JSON experiment config");
  cmd->add_option("--out", args.out_dir, "output directory");
  cmd->add_option("--seed", args.seed, "seed override");
  cmd->add_flag("--quiet", args.quiet, "suppress the summary on stdout");
}

int execute(json config, const CommonArgs& args) {
  if (args.seed >= 0) config["seed"] = args.seed;
  const auto result = mfl::cli::run_config(config);
  mfl::cli::write_outputs(result, args.out_dir);
  if (!args.quiet) std::cout << result.summary.dump(2) << "\n";
  return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"mean-field learning and fixed-point acceleration runner"};
  app.require_subcommand(1);

  CommonArgs args;

  auto* solve = app.add_subcommand("solve", "fixed-point iteration");
  add_common(solve, args);

  auto* accelerate = app.add_subcommand("accelerate", "speedup methods");
  add_common(accelerate, args);

  auto* bound = app.add_subcommand("bound", "convergence-time planners");
  add_common(bound, args);
  std::string bound_kind;
  double eta0 = 0, c2 = 0, eta_star = 0, alpha1 = 0, d0 = 0, eta = 0, L = 0,
         k = 0;
  int order = 0;
  bound->add_option("--kind", bound_kind, "bound family");
  bound->add_option("--eta0", eta0, "initial error");
  bound->add_option("--c2", c2, "scheme constant");
  bound->add_option("--o", order, "speedup order");
  bound->add_option("--eta-star", eta_star, "target error");
  bound->add_option("--alpha1", alpha1, "contraction constant");
  bound->add_option("--d0", d0, "initial distance");
  bound->add_option("--eta", eta, "target accuracy");
  bound->add_option("--L", L, "Lipschitz constant");
  bound->add_option("--k", k, "pseudocontractivity constant");

  auto* game = app.add_subcommand("game", "n-player aggregative rounds");
  add_common(game, args);

  auto* esc = app.add_subcommand("esc", "payoff-measurement learning");
  add_common(esc, args);

  auto* satisfy = app.add_subcommand("satisfy", "target-satisfaction runs");
  add_common(satisfy, args);

  auto* reproduce =
      app.add_subcommand("reproduce", "bundled reference datasets");
  add_common(reproduce, args);
  std::string target;
  reproduce->add_option("target", target, "table1|table2|table3|fig1|fig2|figtime-curve")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    json config;
    if (!args.config_path.empty()) config = load_config(args.config_path);

    if (solve->parsed()) config["kind"] = "solve";
    if (accelerate->parsed()) config["kind"] = "accelerate";
    if (game->parsed()) config["kind"] = "game";
    if (esc->parsed()) config["kind"] = "esc";
    if (satisfy->parsed()) config["kind"] = "satisfy";
    if (bound->parsed()) {
      config["kind"] = "bound";
      if (!bound_kind.empty()) config["bound"] = bound_kind;
      if (bound->count("--eta0")) config["eta0"] = eta0;
      if (bound->count("--c2")) config["c2"] = c2;
      if (bound->count("--o")) config["o"] = order;
      if (bound->count("--eta-star")) config["eta_star"] = eta_star;
      if (bound->count("--alpha1")) config["alpha1"] = alpha1;
      if (bound->count("--d0")) config["d0"] = d0;
      if (bound->count("--eta")) config["eta"] = eta;
      if (bound->count("--L")) config["L"] = L;
      if (bound->count("--k")) config["k"] = k;
    }
    if (reproduce->parsed()) {
      config["kind"] = "reproduce";
      config["target"] = target;
    }

    return execute(std::move(config), args);
  } catch (const mfl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == mfl::ErrorCode::config_invalid
               ? mfl::cli::kExitConfigError
               : mfl::cli::kExitRuntimeError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return mfl::cli::kExitRuntimeError;
  }
}
