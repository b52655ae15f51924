#ifndef PUPPER_SOLVER_HPP
#define PUPPER_SOLVER_HPP

#include "pupper/cnf.hpp"
#include "pupper/prioritizer.hpp"
#include "pupper/propagation.hpp"
#include "pupper/random.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pupper {

enum class PriorityPolicy {
  high_to_low,  // variance ranking, most volatile variables first
  low_to_high,  // reversed variance ranking (ablation)
  random_order, // fresh uniform permutation per reconstruction (ablation)
};

std::string to_string (PriorityPolicy);
// Accepts the names printed by 'to_string' with '-' or '_'.
std::optional<PriorityPolicy> parse_policy (std::string_view);

struct SolverConfig {
  // Budget of reconstructions.  Shared by all copies unless
  // 'budget_per_copy' is set, in which case every copy gets this many.
  std::uint64_t max_iterations = 1'000'000;
  std::uint64_t reset_frequency = 5;
  double rho = 0.9;
  std::size_t num_copies = 1;
  std::uint64_t seed = 0;
  PriorityPolicy policy = PriorityPolicy::high_to_low;
  bool resetting_enabled = true;
  // Update the best assignment before resetting instead of after.
  bool best_update_first = false;
  bool budget_per_copy = false;
  // 1 runs all copies round-robin on the calling thread.
  std::size_t threads = 1;
  std::optional<double> wall_clock_limit; // seconds

  // Throws std::invalid_argument on out-of-range values.
  void validate () const;
};

enum class Status { satisfiable, unknown };

struct SolveOutcome {
  Status status = Status::unknown;
  Assignment assignment; // model, or best assignment found
  std::size_t best_count = 0;
  std::uint64_t iterations_used = 0; // summed over copies
  std::vector<std::uint64_t> copy_iterations;
  std::optional<std::size_t> winning_copy;
  double elapsed = 0; // seconds

  // Everything except 'elapsed'.
  bool same_result (const SolveOutcome &other) const;
};

// Each variable true with probability 1/2, one generator output per
// variable.
Assignment random_init (std::size_t num_vars, Rng &);

/*------------------------------------------------------------------------*/

// Rebuilds a full assignment: starting from the propagated empty assignment,
// each variable in 'order' that is still unassigned is set to its value in
// 'alpha' and unit propagation runs.  Owns the per-copy propagation counters.
class Reconstructor {
public:
  explicit Reconstructor (const OccurrenceIndex &);

  void rebuild (std::span<const Var> order, const Assignment &alpha,
                Assignment &result);

  // One prioritized reconstruction: update 'ema' with 'alpha', rank the
  // variables according to 'policy' and rebuild.  'random_order' draws the
  // permutation from 'rng' (the EMA is still updated).
  void run (const Assignment &alpha, EmaState &ema, PriorityPolicy policy,
            Rng &rng, Assignment &result);

private:
  const OccurrenceIndex *index_;
  Propagator propagator_;
  std::vector<Var> order_;
  std::vector<double> scratch_;
};

Assignment rebuild_assignment (const CnfFormula &, const Assignment &alpha,
                               std::span<const Var> order);

// Throws std::invalid_argument on length mismatches.
Assignment prioritized_unit_prop (const CnfFormula &, const Assignment &alpha,
                                  EmaState &ema, PriorityPolicy, Rng &);

/*------------------------------------------------------------------------*/

// One independent search trajectory: random start, then repeated
// reconstruction with periodic resets to the best assignment seen.
class SearchCopy {
public:
  SearchCopy (const OccurrenceIndex &, const SolverConfig &, std::uint64_t seed);

  // One loop iteration: reconstruct, reset every 'reset_frequency'
  // iterations, then keep the assignment if it beats the best.
  void step ();

  bool solved () const { return best_count_ == index_->num_clauses (); }
  std::uint64_t iterations () const { return iteration_; }

  const Assignment &current () const { return alpha_; }
  std::size_t current_count () const { return alpha_count_; }
  const Assignment &best () const { return best_; }
  std::size_t best_count () const { return best_count_; }
  const EmaState &ema () const { return ema_; }

  // Throws std::logic_error if the cached counts disagree with 'evaluate'
  // or an EMA entry left [0, 1].
  void check_invariants () const;

private:
  const OccurrenceIndex *index_;
  const SolverConfig *config_;
  Rng rng_;
  Reconstructor reconstructor_;
  Assignment alpha_, best_, scratch_;
  EmaState ema_;
  std::size_t alpha_count_ = 0, best_count_ = 0;
  std::uint64_t iteration_ = 0;
};

// Single copy seeded directly with 'config.seed' ('num_copies' ignored).
SolveOutcome pupper_solve (const CnfFormula &, const SolverConfig &);

// 'num_copies' copies, copy i seeded with derive_seed (config.seed, i).
// Single-threaded it runs one iteration per copy per round and stops at
// the first copy to succeed, or when the budget or the time is used up.
SolveOutcome multi_copy_solve (const CnfFormula &, const SolverConfig &);

} // namespace pupper

#endif
