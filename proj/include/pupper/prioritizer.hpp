#ifndef PUPPER_PRIORITIZER_HPP
#define PUPPER_PRIORITIZER_HPP

#include "pupper/cnf.hpp"

#include <vector>

namespace pupper {

// Exponential moving average of each variable's 0/1 value across
// reconstructions.
struct EmaState {
  std::vector<double> ema; // ema[v - 1] for variable v
  double rho = 0.9;        // decay, weight of the history

  EmaState () = default;
  EmaState (std::vector<double> values, double decay)
      : ema (std::move (values)), rho (decay) {}

  // 'ema = assignment' as 0/1 reals.
  static EmaState from (const Assignment &, double decay);

  double variance (Var v) const {
    const double e = ema[v - 1];
    return e * (1 - e);
  }
};

// ema = ema * rho + assignment * (1 - rho), elementwise.
void update_ema (EmaState &, const Assignment &);

enum class RankingOrder {
  high_to_low, // largest variance first
  low_to_high, // ablation: smallest variance first
};

// Variables sorted by variance 'ema * (1 - ema)' in the given direction.
// Ties are broken by ascending variable index, in both directions.
std::vector<Var> variance_ranking (const EmaState &,
                                   RankingOrder = RankingOrder::high_to_low);

// Same, reusing 'order' and 'scratch' buffers.
void variance_ranking (const EmaState &, RankingOrder, std::vector<Var> &order,
                       std::vector<double> &scratch);

} // namespace pupper

#endif
