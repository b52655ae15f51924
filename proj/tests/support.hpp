#ifndef PUPPER_TESTS_SUPPORT_HPP
#define PUPPER_TESTS_SUPPORT_HPP

#include "pupper/cnf.hpp"
#include "pupper/random.hpp"

#include <string>
#include <vector>

namespace pupper::testing {

inline CnfFormula formula (std::size_t n, std::vector<std::vector<int>> clauses) {
  std::vector<Clause> result;
  for (const auto &c : clauses) {
    Clause clause;
    for (const int k : c)
      clause.push_back (Literal::from_dimacs (k));
    result.push_back (std::move (clause));
  }
  return CnfFormula (n, std::move (result));
}

// (x1 | x2 | -x3) & (x3 | -x1 | x4)
inline CnfFormula running_example () {
  return formula (4, {{1, 2, -3}, {3, -1, 4}});
}

inline Assignment assignment (std::initializer_list<bool> values) {
  Assignment a (values.size ());
  Var v = 1;
  for (const bool b : values)
    a.set (v++, b);
  return a;
}

// Random formula with clause widths in [1, max_width].  Literals are drawn
// with replacement, so duplicates and tautologies occur.
inline CnfFormula random_formula (Rng &rng, std::size_t n, std::size_t m,
                                  std::size_t max_width) {
  std::vector<Clause> clauses;
  for (std::size_t i = 0; i < m; i++) {
    Clause clause;
    const std::size_t width = 1 + rng.below (max_width);
    for (std::size_t j = 0; j < width; j++)
      clause.emplace_back (Var (1 + rng.below (n)), rng.bit ());
    clauses.push_back (std::move (clause));
  }
  return CnfFormula (n, std::move (clauses));
}

inline PartialAssignment random_partial (Rng &rng, std::size_t n) {
  PartialAssignment partial (n);
  for (Var v = 1; v <= n; v++)
    switch (rng.below (3)) {
    case 0: partial.set (v, false); break;
    case 1: partial.set (v, true); break;
    default: break;
    }
  return partial;
}

// Clause-by-clause evaluation written independently of 'evaluate'.
inline bool satisfies (const CnfFormula &f, const std::vector<int> &model_literals) {
  std::vector<int> value (f.num_vars () + 1, 0);
  for (const int lit : model_literals) {
    const int v = lit > 0 ? lit : -lit;
    if (v < 1 || v > int (f.num_vars ()) || value[v] != 0)
      return false;
    value[v] = lit > 0 ? 1 : -1;
  }
  for (Var v = 1; v <= f.num_vars (); v++)
    if (value[v] == 0)
      return false;
  for (const Clause &c : f.clauses ()) {
    bool sat = false;
    for (const Literal lit : c)
      sat = sat || (value[lit.var] > 0) == lit.positive;
    if (!sat)
      return false;
  }
  return true;
}

} // namespace pupper::testing

#endif
