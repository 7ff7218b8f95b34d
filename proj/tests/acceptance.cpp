#include <iostream>

#include "jlab/verify.hpp"

int main() {
  const bool ok = jlab::verify::run_checks(jlab::verify::acceptance_checks(), std::cout);
  std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: some criteria FAILED") << std::endl;
  return ok ? 0 : 1;
}
