#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "nesto/cli.hpp"

using nesto::cli::Command;
using nesto::cli::Engine;
using nesto::cli::Format;

int main(int argc, char** argv) {
  CLI::App app{"Face numbers and gamma-vectors of nestohedra and graph-associahedra"};
  app.footer(nesto::cli::exit_code_help());
  app.require_subcommand(1);

  nesto::cli::RunConfig config;
  const std::map<std::string, Engine> engines{
      {"incremental", Engine::incremental}, {"oracle", Engine::oracle}, {"both", Engine::both}};
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"dot", Format::dot}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "text, json or dot (poset only)")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--jobs", config.jobs, "worker threads; 1 runs the serial reference path")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--override-cap", config.override_cap, "allow sizes beyond the default caps");
  };
  auto add_input = [&](CLI::App* sub, bool buildset) {
    auto* g = sub->add_option("--graph", config.graph_path, "graph file (\"n m\" then edge lines), - for stdin");
    if (buildset) {
      auto* b = sub->add_option("--buildset", config.buildset_path, "building set as JSON");
      g->excludes(b);
    } else {
      g->required();
    }
  };

  std::map<CLI::App*, Command> commands;
  auto* gamma = app.add_subcommand("gamma", "gamma-polynomial of B(G) or of a building set");
  add_input(gamma, true);
  gamma->add_option("--engine", config.engine, "incremental, oracle or both")
      ->transform(CLI::CheckedTransformer(engines, CLI::ignore_case));
  commands[gamma] = Command::gamma;

  auto* fvector = app.add_subcommand("fvector", "f, h and gamma from nested-set enumeration");
  add_input(fvector, true);
  commands[fvector] = Command::fvector;

  auto* buildset = app.add_subcommand("buildset", "print a building set and its basic properties");
  add_input(buildset, true);
  commands[buildset] = Command::buildset;

  auto* moves = app.add_subcommand("moves", "list tree shifts and flossing moves with the resulting gamma");
  add_input(moves, false);
  commands[moves] = Command::moves;

  auto* poset = app.add_subcommand("poset", "shift order on trees with n vertices");
  poset->add_option("--n", config.n, "number of vertices")->required();
  commands[poset] = Command::poset;

  auto* wiener = app.add_subcommand("wiener", "Wiener index of a connected graph");
  add_input(wiener, false);
  commands[wiener] = Command::wiener;

  auto* verify = app.add_subcommand("verify", "run the verification suites and print a pass/fail table");
  verify->add_option("--max-n", config.max_n, "largest tree order checked (default 8)");
  verify->add_option("--seed", config.seed, "seed for the randomized suites");
  commands[verify] = Command::verify;

  for (auto& [sub, cmd] : commands) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return nesto::cli::exit_code::usage;
  }
  for (auto& [sub, cmd] : commands)
    if (sub->parsed()) config.command = cmd;
  return nesto::cli::run(config, std::cout, std::cerr);
}
