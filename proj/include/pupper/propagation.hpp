#ifndef PUPPER_PROPAGATION_HPP
#define PUPPER_PROPAGATION_HPP

#include "pupper/cnf.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace pupper {

// Unit propagation to a fixpoint.
//
// A clause is unit if none of its literals is true and all of its non-false
// literals are the same literal (duplicates collapse, so '(x1 | x1)' is unit
// while the tautology '(x1 | -x1)' is not).  Propagation sweeps the clauses
// in ascending index order, applying each unit clause as it is reached, and
// repeats the sweep until a full pass changes nothing.  A clause that
// becomes unit behind the sweep position is picked up on the next pass.
// Conflicts are not special: once a variable is fixed the clause forcing the
// opposite value is simply falsified and ignored from then on.

// One forced assignment: 'literal' was made true by clause 'clause'.
struct Implication {
  std::uint32_t clause;
  Literal literal;
  friend bool operator== (const Implication &, const Implication &) = default;
};

using PropagationTrace = std::vector<Implication>;

// Reference implementation rescanning every clause on every pass.
PartialAssignment unit_propagate_naive (const CnfFormula &, PartialAssignment,
                                        PropagationTrace *trace = nullptr);

// Occurrence-indexed implementation.  Builds its counters from 'partial' on
// every call.
PartialAssignment unit_propagate (const CnfFormula &, PartialAssignment,
                                  PropagationTrace *trace = nullptr);

/*------------------------------------------------------------------------*/

// Static part of the index: for each clause its distinct literals, and for
// each literal the clauses containing it.  Immutable once built and shared
// by all propagators working on the same formula.
class OccurrenceIndex {
public:
  explicit OccurrenceIndex (const CnfFormula &);

  const CnfFormula &formula () const { return *formula_; }
  std::size_t num_vars () const { return formula_->num_vars (); }
  std::size_t num_clauses () const { return offsets_.size () - 1; }

  std::span<const Literal> literals (std::size_t clause) const {
    return {literals_.data () + offsets_[clause],
            offsets_[clause + 1] - offsets_[clause]};
  }
  std::span<const std::uint32_t> occurrences (Literal lit) const {
    return occurrences_[lit.code ()];
  }

private:
  const CnfFormula *formula_;
  std::vector<Literal> literals_;    // distinct literals, clause by clause
  std::vector<std::size_t> offsets_; // clause i spans [offsets_[i], offsets_[i+1])
  std::vector<std::vector<std::uint32_t>> occurrences_;
};

// Mutable counters over a shared index: per clause the number of true and
// false (distinct) literals.  Owned by exactly one search copy.
class Propagator {
public:
  explicit Propagator (const OccurrenceIndex &);

  // Rebuild all counters from 'partial'.
  void reset (const PartialAssignment &partial);
  // Same as 'reset' with every variable unassigned.
  void reset ();

  // Fix an unassigned variable without propagating.
  void assign (Literal);
  // Run unit propagation to the fixpoint.
  void propagate (PropagationTrace *trace = nullptr);

  const PartialAssignment &values () const { return values_; }
  std::size_t num_assigned () const { return num_assigned_; }

  // Compares the counters against a full rescan.
  bool consistent () const;

private:
  bool is_unit (std::uint32_t clause) const;
  void set_true (Literal);

  const OccurrenceIndex *index_;
  PartialAssignment values_;
  std::size_t num_assigned_ = 0;
  std::vector<std::uint32_t> true_count_;
  std::vector<std::uint32_t> false_count_;

  // Pending unit clauses as min-heaps, split at the sweep position:
  // 'current_' holds clauses ahead of the cursor, 'next_' those behind it.
  std::vector<std::uint32_t> current_, next_;
  std::int64_t cursor_ = -1;
};

} // namespace pupper

#endif
