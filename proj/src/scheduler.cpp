#include "pupper/solver.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace pupper {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
public:
  Deadline (Clock::time_point start, std::optional<double> limit) {
    if (limit)
      end_ = start + std::chrono::duration_cast<Clock::duration> (
                         std::chrono::duration<double> (*limit));
  }
  bool expired () const { return end_ && Clock::now () >= *end_; }

private:
  std::optional<Clock::time_point> end_;
};

SolveOutcome collect (const CnfFormula &formula, const std::vector<SearchCopy> &copies,
                      std::optional<std::size_t> winner, Clock::time_point start) {
  SolveOutcome outcome;
  for (const SearchCopy &copy : copies) {
    outcome.copy_iterations.push_back (copy.iterations ());
    outcome.iterations_used += copy.iterations ();
  }
  std::size_t chosen = 0;
  if (winner)
    chosen = *winner;
  else
    for (std::size_t i = 1; i < copies.size (); i++)
      if (copies[i].best_count () > copies[chosen].best_count ())
        chosen = i;
  outcome.assignment = copies[chosen].best ();
  outcome.best_count = copies[chosen].best_count ();
  if (winner) {
    if (!evaluate (formula, outcome.assignment).satisfied)
      throw std::logic_error ("claimed model does not satisfy the formula");
    outcome.status = Status::satisfiable;
    outcome.winning_copy = winner;
  }
  outcome.elapsed = std::chrono::duration<double> (Clock::now () - start).count ();
  return outcome;
}

std::optional<std::size_t> run_round_robin (std::vector<SearchCopy> &copies,
                                            const SolverConfig &config,
                                            const Deadline &deadline) {
  for (std::size_t i = 0; i < copies.size (); i++)
    if (copies[i].solved ())
      return i;
  std::uint64_t total = 0;
  for (;;) {
    bool stepped = false;
    for (std::size_t i = 0; i < copies.size (); i++) {
      SearchCopy &copy = copies[i];
      if (config.budget_per_copy ? copy.iterations () >= config.max_iterations
                                 : total >= config.max_iterations)
        continue;
      if (deadline.expired ())
        return std::nullopt;
      copy.step ();
      total++;
      stepped = true;
      if (copy.solved ())
        return i;
    }
    if (!stepped)
      return std::nullopt;
  }
}

// Copies are dealt to workers round-robin (copy i to worker i % workers);
// each worker interleaves its own copies.
std::optional<std::size_t> run_threaded (std::vector<SearchCopy> &copies,
                                         const SolverConfig &config,
                                         const Deadline &deadline) {
  for (std::size_t i = 0; i < copies.size (); i++)
    if (copies[i].solved ())
      return i;
  const std::size_t workers = std::min (config.threads, copies.size ());
  std::atomic<bool> stop = false;
  std::atomic<std::uint64_t> taken = 0;
  std::atomic<std::size_t> winner = copies.size ();

  auto work = [&] (std::size_t w) {
    for (;;) {
      bool stepped = false;
      for (std::size_t i = w; i < copies.size (); i += workers) {
        if (stop.load (std::memory_order_relaxed))
          return;
        SearchCopy &copy = copies[i];
        if (config.budget_per_copy) {
          if (copy.iterations () >= config.max_iterations)
            continue;
        } else if (taken.fetch_add (1, std::memory_order_relaxed) >=
                   config.max_iterations) {
          return;
        }
        if (deadline.expired ()) {
          stop = true;
          return;
        }
        copy.step ();
        stepped = true;
        if (copy.solved ()) {
          std::size_t none = copies.size ();
          winner.compare_exchange_strong (none, i);
          stop = true;
          return;
        }
      }
      if (!stepped)
        return;
    }
  };

  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; w++)
      pool.emplace_back (work, w);
  }
  if (winner.load () == copies.size ())
    return std::nullopt;
  return winner.load ();
}

SolveOutcome solve_with_seeds (const CnfFormula &formula, const SolverConfig &config,
                               const std::vector<std::uint64_t> &seeds) {
  config.validate ();
  const auto start = Clock::now ();
  const Deadline deadline (start, config.wall_clock_limit);
  const OccurrenceIndex index (formula);
  std::vector<SearchCopy> copies;
  copies.reserve (seeds.size ());
  for (const std::uint64_t seed : seeds)
    copies.emplace_back (index, config, seed);
  const auto winner = config.threads > 1 && copies.size () > 1
                          ? run_threaded (copies, config, deadline)
                          : run_round_robin (copies, config, deadline);
  return collect (formula, copies, winner, start);
}

} // namespace

SolveOutcome pupper_solve (const CnfFormula &formula, const SolverConfig &config) {
  return solve_with_seeds (formula, config, {config.seed});
}

SolveOutcome multi_copy_solve (const CnfFormula &formula, const SolverConfig &config) {
  config.validate ();
  std::vector<std::uint64_t> seeds (config.num_copies);
  for (std::size_t i = 0; i < seeds.size (); i++)
    seeds[i] = derive_seed (config.seed, i);
  return solve_with_seeds (formula, config, seeds);
}

} // namespace pupper
