#include "disbessel/identities.hpp"

#include <cstdio>
#include <sstream>

namespace disbessel {

std::string format_check(const CheckResult& result) {
  std::ostringstream out;
  out << (result.passed ? "PASS " : "FAIL ") << result.name << " j=" << result.j;
  for (const auto& [key, value] : result.params) out << ' ' << key << '=' << value;
  char buf[64];
  std::snprintf(buf, sizeof buf, " residual=%.3e tol=%.3e", result.residual, result.tolerance);
  out << buf;
  return out.str();
}

}  // namespace disbessel
