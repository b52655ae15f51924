#include "pupper/cli.hpp"

#include "pupper/solver.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

namespace pupper {

void write_model (const Assignment &model, std::ostream &out, std::size_t width) {
  std::string line = "v";
  auto append = [&] (const std::string &token) {
    if (line.size () > 1 && line.size () + 1 + token.size () > width) {
      out << line << '\n';
      line = "v";
    }
    line += ' ';
    line += token;
  };
  for (Var v = 1; v <= model.size (); v++)
    append (std::to_string (model[v] ? std::int64_t (v) : -std::int64_t (v)));
  append ("0");
  out << line << '\n';
}

namespace {

struct CliArgs {
  std::string input_path;
  SolverConfig config;
  std::string policy = "high-to-low";
  bool no_reset = false;
  double timeout_secs = 0;
  std::string stats_json;
  bool verify = true;
  bool lenient = false;
};

void build (CLI::App &app, CliArgs &args) {
  app.add_option ("input", args.input_path, "DIMACS CNF file")->required ();
  app.add_option ("--max-iters", args.config.max_iterations,
                  "Reconstruction budget (total over copies)")
      ->check (CLI::Range (std::uint64_t (1), std::numeric_limits<std::uint64_t>::max ()))
      ->capture_default_str ();
  app.add_option ("--reset-freq", args.config.reset_frequency,
                  "Reset to the best assignment every this many iterations")
      ->check (CLI::Range (std::uint64_t (1), std::numeric_limits<std::uint64_t>::max ()))
      ->capture_default_str ();
  app.add_option ("--rho", args.config.rho, "EMA decay")
      ->check (CLI::Range (0.0, 1.0))
      ->capture_default_str ();
  app.add_option ("--copies", args.config.num_copies, "Independent search copies")
      ->check (CLI::Range (std::size_t (1), std::size_t (1) << 20))
      ->capture_default_str ();
  app.add_option ("--seed", args.config.seed, "Random seed")->capture_default_str ();
  app.add_option ("--policy", args.policy, "Variable ordering")
      ->check (CLI::IsMember ({"high-to-low", "low-to-high", "random"}))
      ->capture_default_str ();
  app.add_flag ("--no-reset", args.no_reset, "Disable periodic resetting");
  app.add_flag ("--best-update-first", args.config.best_update_first,
                "Update the best assignment before resetting");
  app.add_option ("--threads", args.config.threads, "Worker threads (at most --copies)")
      ->check (CLI::Range (std::size_t (1), std::size_t (1024)))
      ->capture_default_str ();
  app.add_option ("--timeout-secs", args.timeout_secs, "Wall clock limit, 0 for none")
      ->check (CLI::NonNegativeNumber);
  app.add_flag ("--budget-per-copy", args.config.budget_per_copy,
                "Give every copy the full --max-iters budget");
  app.add_option ("--stats-json", args.stats_json, "Write run statistics as JSON");
  app.add_flag ("--verify,!--no-verify", args.verify,
                "Check the model before printing it (default on)");
  app.add_flag ("--lenient", args.lenient,
                "Accept a clause count differing from the header");
}

const char *status_name (Status status) {
  return status == Status::satisfiable ? "SATISFIABLE" : "UNKNOWN";
}

} // namespace

int run_cli (const std::vector<std::string> &argv, std::ostream &out, std::ostream &err) {
  CLI::App app ("Incomplete SAT solver: prioritized unit propagation with periodic resetting",
                "pupper");
  CliArgs args;
  build (app, args);
  try {
    std::vector<std::string> reversed (argv.rbegin (), argv.rend ());
    app.parse (reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help ();
    return exit_unknown;
  } catch (const CLI::ParseError &e) {
    err << "pupper: " << e.what () << '\n';
    return exit_error;
  }

  SolverConfig &config = args.config;
  config.policy = *parse_policy (args.policy);
  config.resetting_enabled = !args.no_reset;
  if (args.timeout_secs > 0)
    config.wall_clock_limit = args.timeout_secs;
  if (config.threads > config.num_copies) {
    err << "pupper: --threads " << config.threads << " exceeds --copies "
        << config.num_copies << '\n';
    return exit_error;
  }

  CnfFormula formula;
  try {
    formula = parse_dimacs_file (args.input_path, {.lenient_clause_count = args.lenient});
  } catch (const std::exception &e) {
    err << "pupper: " << args.input_path << ": " << e.what () << '\n';
    return exit_error;
  }

  out << "c pupper incomplete SAT solver\n"
      << "c input " << args.input_path << '\n'
      << "c variables " << formula.num_vars () << " clauses " << formula.num_clauses ()
      << '\n'
      << "c max-iters " << config.max_iterations
      << (config.budget_per_copy ? " per copy" : " total") << '\n'
      << "c reset-freq " << config.reset_frequency
      << (config.resetting_enabled ? "" : " (resetting disabled)")
      << (config.best_update_first ? " (best update first)" : "") << '\n'
      << "c rho " << config.rho << '\n'
      << "c copies " << config.num_copies << " threads " << config.threads << '\n'
      << "c seed " << config.seed << '\n'
      << "c policy " << to_string (config.policy) << '\n';
  if (config.wall_clock_limit)
    out << "c timeout-secs " << *config.wall_clock_limit << '\n';

  SolveOutcome outcome;
  try {
    outcome = multi_copy_solve (formula, config);
  } catch (const std::exception &e) {
    err << "pupper: internal error: " << e.what () << '\n';
    return exit_error;
  }

  out << "c iterations " << outcome.iterations_used << '\n'
      << "c best-count " << outcome.best_count << " of " << formula.num_clauses ()
      << '\n';
  if (outcome.winning_copy)
    out << "c winning-copy " << *outcome.winning_copy << '\n';
  out << "c elapsed-seconds " << outcome.elapsed << '\n';

  if (outcome.status == Status::satisfiable && args.verify &&
      !evaluate (formula, outcome.assignment).satisfied) {
    err << "pupper: internal error: model does not satisfy the formula\n";
    return exit_error;
  }

  out << "s " << status_name (outcome.status) << '\n';
  if (outcome.status == Status::satisfiable)
    write_model (outcome.assignment, out);

  if (!args.stats_json.empty ()) {
    nlohmann::json stats = {{"schema_version", 1},
                            {"status", status_name (outcome.status)},
                            {"iterations_used", outcome.iterations_used},
                            {"best_count", outcome.best_count},
                            {"clause_count", formula.num_clauses ()},
                            {"elapsed_seconds", outcome.elapsed},
                            {"winning_copy", nullptr},
                            {"seed", config.seed}};
    if (outcome.winning_copy)
      stats["winning_copy"] = *outcome.winning_copy;
    std::ofstream file (args.stats_json);
    file << stats.dump () << '\n';
    if (!file) {
      err << "pupper: can not write '" << args.stats_json << "'\n";
      return exit_error;
    }
  }
  out.flush ();
  return outcome.status == Status::satisfiable ? exit_satisfiable : exit_unknown;
}

} // namespace pupper
