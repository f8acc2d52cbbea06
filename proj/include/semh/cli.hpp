// semh - homology of chain complexes of semimodules
//
// The command line surface. Exit codes: 0 every check passed, 1 a check
// failed (with a witness), 2 usage or parse error, 3 soundness alarm (the
// instance is written to the error stream).

#ifndef SEMH_CLI_HPP_
#define SEMH_CLI_HPP_

#include <ostream>  // for ostream
#include <string>   // for string
#include <vector>   // for vector

namespace semh {

  enum ExitCode { exit_ok = 0, exit_failed = 1, exit_usage = 2, exit_alarm = 3 };

  //! args excludes the program name.
  int run_command(std::vector<std::string> const& args,
                  std::ostream&                   out,
                  std::ostream&                   err);

}  // namespace semh

#endif  // SEMH_CLI_HPP_
