// One line per acceptance criterion; nonzero exit when any fails.
#include <iostream>

#include "coxstrata/verify.hpp"

int main() {
  int failed = 0;
  for (int id : coxstrata::suite_criteria("all")) {
    const auto r = coxstrata::run_criterion(id);
    std::cout << r.line() << "\n";
    if (!r.pass) {
      ++failed;
      for (const auto& d : r.details) std::cout << "    " << d << "\n";
    }
  }
  std::cout << failed << " of 10 criteria failed\n";
  return failed ? 1 : 0;
}
