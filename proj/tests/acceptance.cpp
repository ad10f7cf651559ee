#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include "ellcover/acceptance.hpp"

// Usage: acceptance [--criterion N] [--verbose]. Prints one PASS/FAIL line per criterion.
int main(int argc, char** argv) {
  int only = 0;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) only = std::atoi(argv[++i]);
    else if (!std::strcmp(argv[i], "--verbose")) verbose = true;
    else {
      std::cerr << "usage: acceptance [--criterion N] [--verbose]\n";
      return 2;
    }
  }
  bool all = true;
  for (int id = 1; id <= ellcover::kCriteriaCount; ++id) {
    if (only && id != only) continue;
    const auto r = ellcover::run_criterion(id);
    std::cout << r.summary() << "\n";
    if (verbose || !r.pass)
      for (const auto& line : r.detail) std::cout << "    " << line << "\n";
    std::cout.flush();
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
