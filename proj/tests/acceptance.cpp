// Acceptance suite: one pass/fail line per criterion. Every tolerance is a
// hard zero; "inconclusive" join searches count against the run as well.

#include <cstdint>
#include <iostream>
#include <string>

#include "susp/properties.hpp"

using susp::props::SuiteResult;

namespace {

int failures = 0;

void report(int number, const std::string& title, const SuiteResult& result) {
  std::cout << (result.pass() ? "PASS" : "FAIL") << "  criterion " << number << ": " << title
            << "  (cases=" << result.cases << ", failures=" << result.failures
            << ", inconclusive=" << result.inconclusive << ")" << std::endl;
  if (!result.pass()) {
    ++failures;
    if (!result.first_failure.empty())
      std::cout << "      " << result.first_failure << std::endl;
  }
}

}  // namespace

int main() {
  const std::uint64_t seed = 20080317;
  using namespace susp::props;

  {
    SuiteResult grafting = run_preservation(seed, 10000, false);
    SuiteResult logical = run_preservation(seed, 10000, true);
    SuiteResult combined;
    combined.name = "preservation";
    combined.cases = grafting.cases + logical.cases;
    combined.failures = grafting.failures + logical.failures;
    combined.inconclusive = grafting.inconclusive + logical.inconclusive;
    combined.first_failure =
        grafting.first_failure.empty() ? logical.first_failure : grafting.first_failure;
    report(1, "well-formedness preservation", combined);
  }
  report(2, "rm termination with measure decrease", run_rm_termination(seed, 10000));
  report(3, "rm confluence", run_rm_confluence(seed, 10000));
  report(4, "grafting confluence", run_grafting_confluence(seed, 2000));
  report(5, "beta simulation", run_beta_simulation(seed, 5000));
  report(6, "similarity", run_similarity(seed, 2000));
  report(7, "parallel diamond", run_diamond(seed, 2000));
  report(8, "bridge retraction", run_bridge_retraction(seed, 10000));
  report(9, "lambda-s one-step correspondence", run_ls_onestep(seed, 2000));
  report(10, "lambda-sigma correspondences", run_lsig_correspondence(seed, 2000));
  report(11, "cross-calculus normal forms", run_cross_calculus());
  report(12, "self-capture regression", run_mellies());

  if (failures != 0) {
    std::cout << failures << " criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
