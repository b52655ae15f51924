#ifndef PUPPER_CLI_HPP
#define PUPPER_CLI_HPP

#include "pupper/cnf.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace pupper {

// Process exit codes in SAT competition convention.
enum ExitCode : int {
  exit_unknown = 0,
  exit_error = 1,
  exit_satisfiable = 10,
};

// Runs the solver front end on 'args' (without the program name), writing
// the solver output to 'out' and diagnostics to 'err'.  Returns the exit
// code.
int run_cli (const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// Writes 'model' as "v" lines of DIMACS literals terminated by "0", each line
// at most 'width' characters long.
void write_model (const Assignment &model, std::ostream &out, std::size_t width = 4096);

} // namespace pupper

#endif
