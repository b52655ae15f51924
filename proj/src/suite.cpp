#include "pupper/harness.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include <json.hpp>

namespace pupper {

SuiteAggregates aggregate (const std::vector<InstanceRecord> &records) {
  SuiteAggregates result;
  std::vector<double> times;
  for (const InstanceRecord &record : records) {
    if (record.status == "SATISFIABLE")
      times.push_back (record.elapsed);
    else if (record.status == "ERROR")
      result.error_count++;
  }
  result.solved_count = times.size ();
  if (times.empty ())
    return result;
  std::sort (times.begin (), times.end ());
  double sum = 0;
  for (const double t : times)
    sum += t;
  const std::size_t n = times.size ();
  result.average_time = sum / n;
  result.median_time = n % 2 ? times[n / 2] : (times[n / 2 - 1] + times[n / 2]) / 2;
  result.maximum_time = times.back ();
  return result;
}

std::uint64_t instance_seed (std::uint64_t suite_seed, const std::string &file_name) {
  return mix64 (suite_seed ^ fnv1a (file_name));
}

SuiteReport run_suite (const std::filesystem::path &directory,
                       const SolverConfig &config, std::optional<double> time_limit) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator (directory))
    if (entry.path ().extension () == ".cnf")
      files.push_back (entry.path ());
  std::sort (files.begin (), files.end ());

  SuiteReport report;
  for (const fs::path &file : files) {
    InstanceRecord record;
    record.path = file.string ();
    try {
      const CnfFormula formula = parse_dimacs_file (file.string ());
      SolverConfig instance_config = config;
      instance_config.seed = instance_seed (config.seed, file.filename ().string ());
      if (time_limit)
        instance_config.wall_clock_limit = time_limit;
      const SolveOutcome outcome = multi_copy_solve (formula, instance_config);
      record.status = outcome.status == Status::satisfiable ? "SATISFIABLE" : "UNKNOWN";
      record.iterations_used = outcome.iterations_used;
      record.elapsed = outcome.elapsed;
      record.best_count = outcome.best_count;
      record.clause_count = formula.num_clauses ();
    } catch (const std::exception &e) {
      record.status = "ERROR";
      record.error = e.what ();
    }
    report.records.push_back (std::move (record));
  }
  report.aggregates = aggregate (report.records);
  return report;
}

void write_report_json (const SuiteReport &report, std::ostream &out) {
  nlohmann::json records = nlohmann::json::array ();
  for (const InstanceRecord &r : report.records) {
    nlohmann::json j = {{"path", r.path},
                        {"status", r.status},
                        {"iterations_used", r.iterations_used},
                        {"elapsed_seconds", r.elapsed},
                        {"best_count", r.best_count},
                        {"clause_count", r.clause_count}};
    if (r.status == "ERROR")
      j["error"] = r.error;
    records.push_back (std::move (j));
  }
  const SuiteAggregates &a = report.aggregates;
  const nlohmann::json document = {
      {"schema_version", 1},
      {"records", std::move (records)},
      {"aggregates",
       {{"instances", report.records.size ()},
        {"solved_count", a.solved_count},
        {"error_count", a.error_count},
        {"average_time", a.average_time},
        {"median_time", a.median_time},
        {"maximum_time", a.maximum_time}}}};
  out << document.dump (2) << '\n';
}

namespace {

std::string csv_field (const std::string &text) {
  if (text.find_first_of (",\"\n") == std::string::npos)
    return text;
  std::string quoted = "\"";
  for (const char c : text) {
    if (c == '"')
      quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

} // namespace

void write_report_csv (const SuiteReport &report, std::ostream &out) {
  out << "path,status,iterations,elapsed_s,best_count,clauses\n";
  for (const InstanceRecord &r : report.records)
    out << csv_field (r.path) << ',' << r.status << ',' << r.iterations_used << ','
        << std::fixed << std::setprecision (6) << r.elapsed << std::defaultfloat << ','
        << r.best_count << ',' << r.clause_count << '\n';
}

} // namespace pupper
