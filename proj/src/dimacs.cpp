#include "pupper/cnf.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace pupper {

DimacsError::DimacsError (std::size_t line, const std::string &what)
    : std::runtime_error ("line " + std::to_string (line) + ": " + what),
      line_ (line) {}

namespace {

bool is_space (char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<std::string_view> split (std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size ()) {
    while (i < line.size () && is_space (line[i]))
      i++;
    std::size_t j = i;
    while (j < line.size () && !is_space (line[j]))
      j++;
    if (j > i)
      tokens.push_back (line.substr (i, j - i));
    i = j;
  }
  return tokens;
}

bool to_int (std::string_view token, std::int64_t &result) {
  const char *first = token.data (), *last = first + token.size ();
  if (first != last && *first == '+')
    first++;
  auto [ptr, ec] = std::from_chars (first, last, result);
  return ec == std::errc () && ptr == last && first != last;
}

} // namespace

CnfFormula parse_dimacs (std::istream &in, ParseOptions options) {
  bool header = false;
  std::int64_t num_vars = 0, expected = 0;
  std::vector<Clause> clauses;
  Clause clause;
  std::size_t lineno = 0, last_data_line = 0;
  std::string line;

  while (std::getline (in, line)) {
    lineno++;
    const auto tokens = split (line);
    if (tokens.empty ())
      continue;
    const std::string_view first = tokens.front ();
    if (first[0] == 'c')
      continue;
    if (first[0] == '%') // SATLIB trailer, ignore everything after it
      break;
    if (first == "p") {
      if (header)
        throw DimacsError (lineno, "duplicate 'p cnf' header");
      if (tokens.size () != 4 || tokens[1] != "cnf" ||
          !to_int (tokens[2], num_vars) || !to_int (tokens[3], expected) ||
          num_vars < 0 || expected < 0 || num_vars > std::int64_t (UINT32_MAX))
        throw DimacsError (lineno, "malformed header, expected 'p cnf <variables> <clauses>'");
      header = true;
      continue;
    }
    if (!header)
      throw DimacsError (lineno, "clause data before 'p cnf' header");
    last_data_line = lineno;
    for (const std::string_view token : tokens) {
      std::int64_t k;
      if (!to_int (token, k))
        throw DimacsError (lineno, "invalid token '" + std::string (token) + "'");
      if (k == 0) {
        if (clause.empty ())
          throw DimacsError (lineno, "empty clause");
        clauses.push_back (std::move (clause));
        clause.clear ();
        continue;
      }
      if (k > num_vars || -k > num_vars)
        throw DimacsError (lineno, "literal " + std::to_string (k) +
                                       " exceeds variable count " +
                                       std::to_string (num_vars));
      clause.push_back (Literal::from_dimacs (k));
    }
  }

  if (!header)
    throw DimacsError (lineno, "missing 'p cnf' header");
  if (!clause.empty ())
    throw DimacsError (last_data_line, "last clause not terminated by '0'");
  if (!options.lenient_clause_count && std::int64_t (clauses.size ()) != expected)
    throw DimacsError (lineno, "header announces " + std::to_string (expected) +
                                   " clauses but found " +
                                   std::to_string (clauses.size ()));
  return CnfFormula (std::size_t (num_vars), std::move (clauses));
}

CnfFormula parse_dimacs (std::string_view text, ParseOptions options) {
  std::istringstream in{std::string (text)};
  return parse_dimacs (in, options);
}

CnfFormula parse_dimacs_file (const std::string &path, ParseOptions options) {
  std::ifstream in (path);
  if (!in)
    throw std::runtime_error ("can not read '" + path + "'");
  return parse_dimacs (in, options);
}

void write_dimacs (const CnfFormula &formula, std::ostream &out) {
  out << "p cnf " << formula.num_vars () << ' ' << formula.num_clauses () << '\n';
  for (const Clause &clause : formula.clauses ()) {
    for (const Literal lit : clause)
      out << lit.dimacs () << ' ';
    out << "0\n";
  }
}

std::string write_dimacs (const CnfFormula &formula) {
  std::ostringstream out;
  write_dimacs (formula, out);
  return out.str ();
}

} // namespace pupper
