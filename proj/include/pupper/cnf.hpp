#ifndef PUPPER_CNF_HPP
#define PUPPER_CNF_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pupper {

// Variables are 1-based everywhere in the public interface, exactly as in
// DIMACS.  Containers indexed by variable use 'var - 1' internally.

using Var = std::uint32_t;

struct Literal {
  Var var = 0;
  bool positive = true;

  constexpr Literal () = default;
  constexpr Literal (Var v, bool pos) : var (v), positive (pos) {}

  static constexpr Literal from_dimacs (std::int64_t k) {
    return k > 0 ? Literal (static_cast<Var> (k), true)
                 : Literal (static_cast<Var> (-k), false);
  }
  constexpr std::int64_t dimacs () const {
    return positive ? std::int64_t (var) : -std::int64_t (var);
  }
  constexpr Literal operator~ () const { return Literal (var, !positive); }

  // Dense code in [0, 2n): positive and negative literal of a variable are
  // adjacent.
  constexpr std::size_t code () const {
    return 2 * std::size_t (var - 1) + (positive ? 0 : 1);
  }

  friend constexpr bool operator== (Literal, Literal) = default;
};

using Clause = std::vector<Literal>;

class CnfFormula {
public:
  CnfFormula () = default;

  // Throws std::invalid_argument if a literal refers to variable 0 or to a
  // variable above 'num_vars'.
  CnfFormula (std::size_t num_vars, std::vector<Clause> clauses);

  std::size_t num_vars () const { return num_vars_; }
  std::size_t num_clauses () const { return clauses_.size (); }
  const std::vector<Clause> &clauses () const { return clauses_; }
  const Clause &clause (std::size_t i) const { return clauses_[i]; }

  friend bool operator== (const CnfFormula &, const CnfFormula &) = default;

private:
  std::size_t num_vars_ = 0;
  std::vector<Clause> clauses_;
};

// Full truth assignment.
class Assignment {
public:
  Assignment () = default;
  explicit Assignment (std::size_t num_vars, bool value = false)
      : values_ (num_vars, value) {}
  explicit Assignment (std::vector<std::uint8_t> values)
      : values_ (std::move (values)) {}

  std::size_t size () const { return values_.size (); }
  bool operator[] (Var v) const { return values_[v - 1] != 0; }
  void set (Var v, bool value) { values_[v - 1] = value; }
  bool satisfies (Literal lit) const { return (*this)[lit.var] == lit.positive; }
  const std::vector<std::uint8_t> &raw () const { return values_; }

  friend bool operator== (const Assignment &, const Assignment &) = default;

private:
  std::vector<std::uint8_t> values_;
};

enum class TriState : std::uint8_t { False = 0, True = 1, Unassigned = 2 };

class PartialAssignment {
public:
  PartialAssignment () = default;
  explicit PartialAssignment (std::size_t num_vars)
      : values_ (num_vars, TriState::Unassigned) {}

  static PartialAssignment from (const Assignment &);

  std::size_t size () const { return values_.size (); }
  TriState operator[] (Var v) const { return values_[v - 1]; }
  bool assigned (Var v) const { return values_[v - 1] != TriState::Unassigned; }
  void set (Var v, bool value) {
    values_[v - 1] = value ? TriState::True : TriState::False;
  }
  void assign (Literal lit) { set (lit.var, lit.positive); }
  void unassign (Var v) { values_[v - 1] = TriState::Unassigned; }

  TriState value (Literal lit) const {
    const TriState t = values_[lit.var - 1];
    if (t == TriState::Unassigned || lit.positive)
      return t;
    return t == TriState::True ? TriState::False : TriState::True;
  }

  std::size_t count_assigned () const;
  bool complete () const { return count_assigned () == size (); }

  // Requires complete ().
  Assignment to_assignment () const;

  friend bool operator== (const PartialAssignment &,
                          const PartialAssignment &) = default;

private:
  std::vector<TriState> values_;
};

struct Evaluation {
  bool satisfied = false;
  std::size_t satisfied_count = 0;
  friend bool operator== (const Evaluation &, const Evaluation &) = default;
};

// Counts clauses with at least one true literal.  Throws
// std::invalid_argument on a length mismatch.
Evaluation evaluate (const CnfFormula &, const Assignment &);

/*------------------------------------------------------------------------*/

// DIMACS parse error carrying the 1-based line number it was detected on.
class DimacsError : public std::runtime_error {
public:
  DimacsError (std::size_t line, const std::string &what);
  std::size_t line () const { return line_; }

private:
  std::size_t line_;
};

struct ParseOptions {
  // Accept a clause count differing from the 'p cnf' header.
  bool lenient_clause_count = false;
};

CnfFormula parse_dimacs (std::istream &, ParseOptions = {});
CnfFormula parse_dimacs (std::string_view text, ParseOptions = {});
CnfFormula parse_dimacs_file (const std::string &path, ParseOptions = {});

void write_dimacs (const CnfFormula &, std::ostream &);
std::string write_dimacs (const CnfFormula &);

} // namespace pupper

#endif
