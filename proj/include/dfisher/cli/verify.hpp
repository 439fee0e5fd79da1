#ifndef DFISHER_CLI_VERIFY_HPP
#define DFISHER_CLI_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dfisher::cli {

struct SuiteResult {
  std::string name;
  long passed = 0;
  long failed = 0;
  /// Full inputs of the first failing case.
  std::string first_failure;
  /// Informational lines, e.g. per-point convergence flags.
  std::vector<std::string> notes;

  bool ok() const { return failed == 0 && passed > 0; }
};

const std::vector<std::string>& suite_names();

/// Throws UsageError for an unknown suite.
SuiteResult run_suite(const std::string& name);

/// Prints "suite: passed/failed" lines and the first failure of each
/// failing suite; returns kExitOk when everything passed.
int cmd_verify(const std::vector<std::string>& suites, bool show_notes, std::ostream& out);

}  // namespace dfisher::cli

#endif  // DFISHER_CLI_VERIFY_HPP
