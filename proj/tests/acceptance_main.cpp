#include <cstdio>

#include "qv/selfcheck.hpp"

int main() {
  qv::SelfCheckReport report = qv::run_acceptance(7, 0);
  std::fputs(report.to_text().c_str(), stdout);
  int failed = 0;
  for (const qv::CriterionResult& c : report.criteria) {
    if (!c.passed) ++failed;
  }
  return failed;
}
