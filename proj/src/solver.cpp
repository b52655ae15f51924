#include "pupper/solver.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace pupper {

std::string to_string (PriorityPolicy policy) {
  switch (policy) {
  case PriorityPolicy::high_to_low:
    return "high-to-low";
  case PriorityPolicy::low_to_high:
    return "low-to-high";
  case PriorityPolicy::random_order:
    return "random";
  }
  return "?";
}

std::optional<PriorityPolicy> parse_policy (std::string_view name) {
  std::string normalized (name);
  for (char &c : normalized)
    if (c == '_')
      c = '-';
  if (normalized == "high-to-low")
    return PriorityPolicy::high_to_low;
  if (normalized == "low-to-high")
    return PriorityPolicy::low_to_high;
  if (normalized == "random" || normalized == "random-order")
    return PriorityPolicy::random_order;
  return std::nullopt;
}

void SolverConfig::validate () const {
  if (max_iterations < 1)
    throw std::invalid_argument ("max_iterations must be at least 1");
  if (reset_frequency < 1)
    throw std::invalid_argument ("reset_frequency must be at least 1");
  if (num_copies < 1)
    throw std::invalid_argument ("num_copies must be at least 1");
  if (threads < 1)
    throw std::invalid_argument ("threads must be at least 1");
  if (!(rho >= 0 && rho <= 1))
    throw std::invalid_argument ("rho must lie in [0, 1]");
  if (wall_clock_limit && !(*wall_clock_limit >= 0))
    throw std::invalid_argument ("wall clock limit must be non-negative");
}

bool SolveOutcome::same_result (const SolveOutcome &other) const {
  return status == other.status && assignment == other.assignment &&
         best_count == other.best_count &&
         iterations_used == other.iterations_used &&
         copy_iterations == other.copy_iterations &&
         winning_copy == other.winning_copy;
}

Assignment random_init (std::size_t num_vars, Rng &rng) {
  Assignment alpha (num_vars);
  for (Var v = 1; v <= num_vars; v++)
    alpha.set (v, rng.bit ());
  return alpha;
}

/*------------------------------------------------------------------------*/

Reconstructor::Reconstructor (const OccurrenceIndex &index)
    : index_ (&index), propagator_ (index) {}

void Reconstructor::rebuild (std::span<const Var> order, const Assignment &alpha,
                             Assignment &result) {
  assert (alpha.size () == index_->num_vars ());
  propagator_.reset ();
  propagator_.propagate (); // unit clauses of the formula itself
  for (const Var v : order) {
    if (propagator_.values ().assigned (v))
      continue;
    propagator_.assign (Literal (v, alpha[v]));
    propagator_.propagate ();
    if (propagator_.num_assigned () == index_->num_vars ())
      break;
  }
  result = propagator_.values ().to_assignment ();
}

void Reconstructor::run (const Assignment &alpha, EmaState &ema,
                         PriorityPolicy policy, Rng &rng, Assignment &result) {
  update_ema (ema, alpha);
  switch (policy) {
  case PriorityPolicy::high_to_low:
    variance_ranking (ema, RankingOrder::high_to_low, order_, scratch_);
    break;
  case PriorityPolicy::low_to_high:
    variance_ranking (ema, RankingOrder::low_to_high, order_, scratch_);
    break;
  case PriorityPolicy::random_order:
    order_.resize (alpha.size ());
    std::iota (order_.begin (), order_.end (), Var (1));
    rng.shuffle (std::span<Var> (order_));
    break;
  }
  rebuild (order_, alpha, result);
}

Assignment rebuild_assignment (const CnfFormula &formula, const Assignment &alpha,
                               std::span<const Var> order) {
  if (alpha.size () != formula.num_vars ())
    throw std::invalid_argument ("assignment length mismatch");
  const OccurrenceIndex index (formula);
  Reconstructor reconstructor (index);
  Assignment result;
  reconstructor.rebuild (order, alpha, result);
  return result;
}

Assignment prioritized_unit_prop (const CnfFormula &formula,
                                  const Assignment &alpha, EmaState &ema,
                                  PriorityPolicy policy, Rng &rng) {
  if (alpha.size () != formula.num_vars ())
    throw std::invalid_argument ("assignment length mismatch");
  const OccurrenceIndex index (formula);
  Reconstructor reconstructor (index);
  Assignment result;
  reconstructor.run (alpha, ema, policy, rng, result);
  return result;
}

/*------------------------------------------------------------------------*/

SearchCopy::SearchCopy (const OccurrenceIndex &index, const SolverConfig &config,
                        std::uint64_t seed)
    : index_ (&index), config_ (&config), rng_ (seed), reconstructor_ (index) {
  alpha_ = random_init (index.num_vars (), rng_);
  best_ = alpha_;
  ema_ = EmaState::from (alpha_, config.rho);
  alpha_count_ = best_count_ = evaluate (index.formula (), alpha_).satisfied_count;
}

void SearchCopy::step () {
  iteration_++;
  reconstructor_.run (alpha_, ema_, config_->policy, rng_, scratch_);
  std::swap (alpha_, scratch_);
  alpha_count_ = evaluate (index_->formula (), alpha_).satisfied_count;

  const bool reset = config_->resetting_enabled &&
                     iteration_ % config_->reset_frequency == 0;
  const std::size_t previous_best = best_count_;
  if (reset && !config_->best_update_first) {
    alpha_ = best_;
    alpha_count_ = best_count_;
  }
  if (alpha_count_ > best_count_) {
    best_ = alpha_;
    best_count_ = alpha_count_;
  }
  if (reset && config_->best_update_first) {
    alpha_ = best_;
    alpha_count_ = best_count_;
  }
  assert (best_count_ >= previous_best);
  (void) previous_best;
}

void SearchCopy::check_invariants () const {
  const CnfFormula &formula = index_->formula ();
  if (evaluate (formula, best_).satisfied_count != best_count_)
    throw std::logic_error ("cached best count out of date");
  if (evaluate (formula, alpha_).satisfied_count != alpha_count_)
    throw std::logic_error ("cached current count out of date");
  for (const double e : ema_.ema)
    if (!(e >= 0 && e <= 1))
      throw std::logic_error ("EMA entry outside [0, 1]");
}

} // namespace pupper
