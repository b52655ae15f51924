#include "pupper/harness.hpp"

#include <algorithm>
#include <stdexcept>

namespace pupper {

namespace {

void check_width (std::size_t n, std::size_t k) {
  if (k > n)
    throw std::invalid_argument ("clause width " + std::to_string (k) +
                                 " exceeds variable count " + std::to_string (n));
}

// Partial Fisher-Yates over 'pool', which holds all variables.
Clause random_clause (std::vector<Var> &pool, std::size_t k, Rng &rng) {
  Clause clause;
  clause.reserve (k);
  for (std::size_t i = 0; i < k; i++) {
    const std::size_t j = i + rng.below (pool.size () - i);
    std::swap (pool[i], pool[j]);
    clause.emplace_back (pool[i], rng.bit ());
  }
  return clause;
}

std::vector<Var> all_variables (std::size_t n) {
  std::vector<Var> pool (n);
  for (std::size_t i = 0; i < n; i++)
    pool[i] = Var (i + 1);
  return pool;
}

} // namespace

CnfFormula generate_uniform_ksat (std::size_t n, std::size_t m, std::size_t k,
                                  Rng &rng) {
  check_width (n, k);
  std::vector<Var> pool = all_variables (n);
  std::vector<Clause> clauses;
  clauses.reserve (m);
  for (std::size_t i = 0; i < m; i++)
    clauses.push_back (random_clause (pool, k, rng));
  return CnfFormula (n, std::move (clauses));
}

std::pair<CnfFormula, Assignment> generate_planted_ksat (std::size_t n, std::size_t m,
                                                         std::size_t k, Rng &rng) {
  check_width (n, k);
  if (k == 0 && m > 0)
    throw std::invalid_argument ("empty clauses can not be satisfied");
  Assignment hidden (n);
  for (Var v = 1; v <= n; v++)
    hidden.set (v, rng.bit ());
  std::vector<Var> pool = all_variables (n);
  std::vector<Clause> clauses;
  clauses.reserve (m);
  while (clauses.size () < m) {
    Clause clause = random_clause (pool, k, rng);
    if (std::any_of (clause.begin (), clause.end (),
                     [&] (Literal lit) { return hidden.satisfies (lit); }))
      clauses.push_back (std::move (clause));
  }
  return {CnfFormula (n, std::move (clauses)), std::move (hidden)};
}

} // namespace pupper
