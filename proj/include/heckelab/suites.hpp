#ifndef HECKELAB_SUITES_HPP
#define HECKELAB_SUITES_HPP

#include <string>
#include <vector>

#include "heckelab/report.hpp"

namespace heckelab {

struct SuiteResult {
  std::string name;
  int checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

/// Per-module invariant suites; names match the library modules.
std::vector<std::string> module_suite_names();
SuiteResult run_module_suite(const std::string& name, unsigned seed);

/// Acceptance criteria, ids "1".."11".
int acceptance_count();
SuiteResult run_acceptance(int id, unsigned seed);
std::string acceptance_title(int id);

}  // namespace heckelab

#endif
