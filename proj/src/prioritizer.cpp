#include "pupper/prioritizer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pupper {

EmaState EmaState::from (const Assignment &assignment, double decay) {
  std::vector<double> values (assignment.size ());
  for (Var v = 1; v <= assignment.size (); v++)
    values[v - 1] = assignment[v] ? 1.0 : 0.0;
  return EmaState (std::move (values), decay);
}

void update_ema (EmaState &state, const Assignment &assignment) {
  if (state.ema.size () != assignment.size ())
    throw std::invalid_argument ("EMA has " + std::to_string (state.ema.size ()) +
                                 " entries but assignment has " +
                                 std::to_string (assignment.size ()));
  const double rho = state.rho;
  for (Var v = 1; v <= assignment.size (); v++) {
    double &e = state.ema[v - 1];
    e = e * rho + (assignment[v] ? 1.0 : 0.0) * (1 - rho);
  }
}

void variance_ranking (const EmaState &state, RankingOrder direction,
                       std::vector<Var> &order, std::vector<double> &variance) {
  const std::size_t n = state.ema.size ();
  variance.resize (n);
  for (std::size_t i = 0; i < n; i++)
    variance[i] = state.ema[i] * (1 - state.ema[i]);
  order.resize (n);
  std::iota (order.begin (), order.end (), Var (1));
  // 'order' starts in index order, so a stable sort keeps ties by index.
  if (direction == RankingOrder::high_to_low)
    std::stable_sort (order.begin (), order.end (), [&] (Var a, Var b) {
      return variance[a - 1] > variance[b - 1];
    });
  else
    std::stable_sort (order.begin (), order.end (), [&] (Var a, Var b) {
      return variance[a - 1] < variance[b - 1];
    });
}

std::vector<Var> variance_ranking (const EmaState &state, RankingOrder direction) {
  std::vector<Var> order;
  std::vector<double> scratch;
  variance_ranking (state, direction, order, scratch);
  return order;
}

} // namespace pupper
