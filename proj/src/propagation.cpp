#include "pupper/propagation.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <optional>

namespace pupper {

namespace {

void check_length (const CnfFormula &formula, const PartialAssignment &partial) {
  if (partial.size () != formula.num_vars ())
    throw std::invalid_argument ("partial assignment has " +
                                 std::to_string (partial.size ()) +
                                 " values but formula has " +
                                 std::to_string (formula.num_vars ()) +
                                 " variables");
}

// Returns the forced literal if 'clause' is unit under 'values'.
std::optional<Literal> unit_literal (const Clause &clause,
                                     const PartialAssignment &values) {
  std::optional<Literal> candidate;
  for (const Literal lit : clause) {
    const TriState t = values.value (lit);
    if (t == TriState::True)
      return std::nullopt;
    if (t == TriState::False)
      continue;
    if (candidate && *candidate != lit)
      return std::nullopt;
    candidate = lit;
  }
  return candidate;
}

constexpr auto heap_order = std::greater<std::uint32_t> ();

} // namespace

PartialAssignment unit_propagate_naive (const CnfFormula &formula,
                                        PartialAssignment partial,
                                        PropagationTrace *trace) {
  check_length (formula, partial);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t i = 0; i < formula.num_clauses (); i++) {
      const auto forced = unit_literal (formula.clause (i), partial);
      if (!forced)
        continue;
      partial.assign (*forced);
      if (trace)
        trace->push_back ({i, *forced});
      changed = true;
    }
  }
  return partial;
}

PartialAssignment unit_propagate (const CnfFormula &formula,
                                  PartialAssignment partial,
                                  PropagationTrace *trace) {
  check_length (formula, partial);
  const OccurrenceIndex index (formula);
  Propagator propagator (index);
  propagator.reset (partial);
  propagator.propagate (trace);
  return propagator.values ();
}

/*------------------------------------------------------------------------*/

OccurrenceIndex::OccurrenceIndex (const CnfFormula &formula)
    : formula_ (&formula), occurrences_ (2 * formula.num_vars ()) {
  offsets_.reserve (formula.num_clauses () + 1);
  offsets_.push_back (0);
  for (std::uint32_t i = 0; i < formula.num_clauses (); i++) {
    const std::size_t begin = literals_.size ();
    for (const Literal lit : formula.clause (i)) {
      if (std::find (literals_.begin () + begin, literals_.end (), lit) !=
          literals_.end ())
        continue;
      literals_.push_back (lit);
      occurrences_[lit.code ()].push_back (i);
    }
    offsets_.push_back (literals_.size ());
  }
}

Propagator::Propagator (const OccurrenceIndex &index)
    : index_ (&index), values_ (index.num_vars ()),
      true_count_ (index.num_clauses ()), false_count_ (index.num_clauses ()) {}

bool Propagator::is_unit (std::uint32_t clause) const {
  return true_count_[clause] == 0 &&
         false_count_[clause] + 1 == index_->literals (clause).size ();
}

void Propagator::reset () {
  values_ = PartialAssignment (index_->num_vars ());
  num_assigned_ = 0;
  std::fill (true_count_.begin (), true_count_.end (), 0);
  std::fill (false_count_.begin (), false_count_.end (), 0);
  current_.clear ();
  next_.clear ();
  cursor_ = -1;
  // Clauses are visited in ascending order, which already is a valid
  // min-heap layout.
  for (std::uint32_t i = 0; i < index_->num_clauses (); i++)
    if (is_unit (i))
      current_.push_back (i);
}

void Propagator::reset (const PartialAssignment &partial) {
  if (partial.size () != index_->num_vars ())
    throw std::invalid_argument ("partial assignment length mismatch");
  values_ = partial;
  num_assigned_ = partial.count_assigned ();
  current_.clear ();
  next_.clear ();
  cursor_ = -1;
  for (std::uint32_t i = 0; i < index_->num_clauses (); i++) {
    std::uint32_t t = 0, f = 0;
    for (const Literal lit : index_->literals (i)) {
      const TriState value = values_.value (lit);
      t += value == TriState::True;
      f += value == TriState::False;
    }
    true_count_[i] = t;
    false_count_[i] = f;
    if (is_unit (i))
      current_.push_back (i);
  }
}

void Propagator::set_true (Literal lit) {
  assert (!values_.assigned (lit.var));
  values_.assign (lit);
  num_assigned_++;
  for (const std::uint32_t c : index_->occurrences (lit))
    true_count_[c]++;
  for (const std::uint32_t c : index_->occurrences (~lit)) {
    false_count_[c]++;
    if (!is_unit (c))
      continue;
    // Each clause becomes unit at most once since counters only grow.
    auto &heap = std::int64_t (c) > cursor_ ? current_ : next_;
    heap.push_back (c);
    std::push_heap (heap.begin (), heap.end (), heap_order);
  }
}

void Propagator::assign (Literal lit) {
  cursor_ = -1;
  set_true (lit);
}

void Propagator::propagate (PropagationTrace *trace) {
  cursor_ = -1;
  for (;;) {
    if (current_.empty ()) {
      if (next_.empty ())
        break;
      std::swap (current_, next_);
      cursor_ = -1;
    }
    std::pop_heap (current_.begin (), current_.end (), heap_order);
    const std::uint32_t clause = current_.back ();
    current_.pop_back ();
    cursor_ = clause;
    if (!is_unit (clause)) // satisfied or falsified since it was queued
      continue;
    for (const Literal lit : index_->literals (clause)) {
      if (values_.assigned (lit.var))
        continue;
      if (trace)
        trace->push_back ({clause, lit});
      set_true (lit);
      break;
    }
  }
  cursor_ = -1;
}

bool Propagator::consistent () const {
  for (std::uint32_t i = 0; i < index_->num_clauses (); i++) {
    std::uint32_t t = 0, f = 0;
    for (const Literal lit : index_->literals (i)) {
      const TriState value = values_.value (lit);
      t += value == TriState::True;
      f += value == TriState::False;
    }
    if (t != true_count_[i] || f != false_count_[i])
      return false;
  }
  return num_assigned_ == values_.count_assigned ();
}

} // namespace pupper
