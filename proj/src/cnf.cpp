#include "pupper/cnf.hpp"

#include <algorithm>
#include <cassert>

namespace pupper {

CnfFormula::CnfFormula (std::size_t num_vars, std::vector<Clause> clauses)
    : num_vars_ (num_vars), clauses_ (std::move (clauses)) {
  for (const Clause &clause : clauses_)
    for (const Literal lit : clause)
      if (lit.var == 0 || lit.var > num_vars_)
        throw std::invalid_argument ("literal " + std::to_string (lit.dimacs ()) +
                                     " outside of variable range 1.." +
                                     std::to_string (num_vars_));
}

PartialAssignment PartialAssignment::from (const Assignment &assignment) {
  PartialAssignment partial (assignment.size ());
  for (Var v = 1; v <= assignment.size (); v++)
    partial.set (v, assignment[v]);
  return partial;
}

std::size_t PartialAssignment::count_assigned () const {
  return std::count_if (values_.begin (), values_.end (),
                        [] (TriState t) { return t != TriState::Unassigned; });
}

Assignment PartialAssignment::to_assignment () const {
  assert (complete ());
  std::vector<std::uint8_t> values (values_.size ());
  for (std::size_t i = 0; i < values_.size (); i++)
    values[i] = values_[i] == TriState::True;
  return Assignment (std::move (values));
}

Evaluation evaluate (const CnfFormula &formula, const Assignment &assignment) {
  if (assignment.size () != formula.num_vars ())
    throw std::invalid_argument ("assignment has " +
                                 std::to_string (assignment.size ()) +
                                 " values but formula has " +
                                 std::to_string (formula.num_vars ()) +
                                 " variables");
  std::size_t count = 0;
  for (const Clause &clause : formula.clauses ())
    if (std::any_of (clause.begin (), clause.end (),
                     [&] (Literal lit) { return assignment.satisfies (lit); }))
      count++;
  return {count == formula.num_clauses (), count};
}

} // namespace pupper
