#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cactus {

struct Check {
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerificationOutcome {
  std::string suite;
  std::vector<Check> checks;
  // Informational findings; never affect overall().
  std::vector<Check> diagnostics;

  bool overall() const;
};

/// Names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one named verification suite. Throws UnknownSuite for other names.
VerificationOutcome run_suite(std::string_view name);

}  // namespace cactus
