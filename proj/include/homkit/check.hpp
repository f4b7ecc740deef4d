#ifndef HOMKIT_CHECK_HPP
#define HOMKIT_CHECK_HPP

#include <string>
#include <utility>
#include <vector>

namespace homkit {

/// One named comparison in a report. A failed check keeps both sides.
struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

inline Check make_check(std::string name, std::string expected, std::string actual) {
  const bool pass = expected == actual;
  return {std::move(name), std::move(expected), std::move(actual), pass};
}

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

/// Checks plus non-fatal warnings.
struct Report {
  std::vector<Check> checks;
  std::vector<std::string> warnings;
  bool pass() const { return all_pass(checks); }
};

}  // namespace homkit

#endif  // HOMKIT_CHECK_HPP
