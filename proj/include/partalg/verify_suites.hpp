#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace partalg {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // empty when passed
};

struct VerifySuite {
  std::string name;
  std::function<std::vector<CheckResult>(std::uint64_t seed)> run;
};

// Built-in self-check suites, each fast enough for interactive use.
const std::vector<VerifySuite>& verify_suites();

}  // namespace partalg
