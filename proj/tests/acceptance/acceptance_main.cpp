// One line per acceptance criterion. Exit status is 0 when the failing set
// equals the --expect-fail list (empty by default).
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <set>
#include <string>

#include "qgm/app/suite.hpp"

int main(int argc, char** argv) {
  qgm::app::RunConfig cfg;
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      expected.insert(std::atoi(argv[++i]));
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      cfg.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: acceptance [--seed N] [--expect-fail ID]...\n";
      return 2;
    }
  }
  std::set<int> failed;
  try {
    for (const auto& r : qgm::app::run_criteria(cfg)) {
      std::cout << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  ("
                << static_cast<long>(r.timing_ms) << " ms)";
      if (!r.pass) std::cout << "  " << r.detail.dump();
      std::cout << "\n";
      if (!r.pass) failed.insert(r.id);
    }
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << failed.size() << " failing";
  if (!expected.empty()) {
    std::cout << " (expected:";
    for (int id : expected) std::cout << " " << id;
    std::cout << ")";
  }
  std::cout << "\n";
  return failed == expected ? 0 : 1;
}
