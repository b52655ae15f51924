#ifndef PUPPER_HARNESS_HPP
#define PUPPER_HARNESS_HPP

#include "pupper/cnf.hpp"
#include "pupper/random.hpp"
#include "pupper/solver.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pupper {

// 'm' clauses over 'k' distinct variables each, uniformly chosen, each
// literal's sign a fair coin.  Throws std::invalid_argument if k > n.
CnfFormula generate_uniform_ksat (std::size_t n, std::size_t m, std::size_t k, Rng &);

// Draws a hidden assignment, then samples clauses as above and rejects those
// falsified by it.  The returned formula is satisfied by the returned
// assignment.
std::pair<CnfFormula, Assignment> generate_planted_ksat (std::size_t n, std::size_t m,
                                                         std::size_t k, Rng &);

/*------------------------------------------------------------------------*/

struct InstanceRecord {
  std::string path;
  std::string status; // "SATISFIABLE", "UNKNOWN" or "ERROR"
  std::uint64_t iterations_used = 0;
  double elapsed = 0;
  std::size_t best_count = 0;
  std::size_t clause_count = 0;
  std::string error; // only for "ERROR"
};

struct SuiteAggregates {
  std::size_t solved_count = 0;
  std::size_t error_count = 0;
  // Over solved instances only, zero if none was solved.
  double average_time = 0;
  double median_time = 0;
  double maximum_time = 0;
};

struct SuiteReport {
  std::vector<InstanceRecord> records;
  SuiteAggregates aggregates;
};

SuiteAggregates aggregate (const std::vector<InstanceRecord> &);

// Seed used for the instance named 'file_name' in a suite seeded with
// 'suite_seed'.
std::uint64_t instance_seed (std::uint64_t suite_seed, const std::string &file_name);

// Solves every '*.cnf' file of 'directory' (sorted by name) with
// multi_copy_solve, instance seeds from 'instance_seed' and 'time_limit'
// seconds of wall clock each (overriding the config's limit when given).
// Files that fail to load are recorded as errors.
SuiteReport run_suite (const std::filesystem::path &directory, const SolverConfig &,
                       std::optional<double> time_limit);

void write_report_json (const SuiteReport &, std::ostream &);
// Columns: path,status,iterations,elapsed_s,best_count,clauses
void write_report_csv (const SuiteReport &, std::ostream &);

} // namespace pupper

#endif
