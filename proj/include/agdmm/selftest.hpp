#pragma once

#include <string>
#include <vector>

namespace agdmm::selftest {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Deliberate corruption used to prove the suite catches regressions.
enum class Fault { None, Genus, Threshold };

/// Built-in checks: curve examples, threshold formulas and one end-to-end
/// simulated decode per scheme.
std::vector<Check> run(Fault fault = Fault::None);

}  // namespace agdmm::selftest
