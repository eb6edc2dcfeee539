#include <cstdio>
#include <string>

#include "sposet/verify.hpp"

int main(int argc, char** argv) {
  int failed = 0;
  for (const std::string& name : sposet::invariant_suite_names()) {
    if (argc > 1 && name != argv[1]) continue;
    const sposet::SuiteResult r = sposet::run_invariant_suite(name);
    std::printf("%s %s: %s [%zu cases, %.2f s]\n", r.passed ? "PASS" : "FAIL", name.c_str(), r.title.c_str(), r.cases,
                r.seconds);
    for (const std::string& f : r.failures) std::printf("    failure: %s\n", f.c_str());
    for (const std::string& n : r.notes) std::printf("    note: %s\n", n.c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  return failed == 0 ? 0 : 1;
}
