#include <cstdio>

#include "gbl/verify.hpp"

int main() {
  std::printf("greedy-bases-lab acceptance suite\n");
  auto results = gbl::run_full_suite();
  return gbl::report_results(results);
}
