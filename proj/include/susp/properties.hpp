#ifndef SUSP_PROPERTIES_HPP
#define SUSP_PROPERTIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "susp/core.hpp"

// Seeded property suites shared by the fuzz command and the acceptance
// harness. Every suite is deterministic in its seed; failures carry the
// first counterexample found.

namespace susp::props {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t inconclusive = 0;
  std::string first_failure;

  bool pass() const { return failures == 0 && inconclusive == 0; }
};

// Well-formedness preservation over all one-step rmbeta successors
// (logical adds r7); includes the environment length/level claims.
SuiteResult run_preservation(std::uint64_t seed, std::size_t cases, bool logical);

// rm termination across leftmost-outermost, leftmost-innermost and five
// random strategies, plus the measure decrease of every observed step.
SuiteResult run_rm_termination(std::uint64_t seed, std::size_t cases);

// Strategy-independent rm normal forms and agreement of every one-step
// successor's normal form with its parent's.
SuiteResult run_rm_confluence(std::uint64_t seed, std::size_t cases);

// The meta-variable divergence fixture (joins with the merging rules,
// provably fails to join without them) plus random rmbeta peaks.
SuiteResult run_grafting_confluence(std::uint64_t seed, std::size_t cases);

// Oracle simulation: beta normal forms of SN de Bruijn terms equal the
// rmbeta leftmost-outermost results; includes the worked-trace golden.
SuiteResult run_beta_simulation(std::uint64_t seed, std::size_t cases);

// Similar pairs rewrite to identical terms / similar simple environments.
SuiteResult run_similarity(std::uint64_t seed, std::size_t cases);

// Diamond property of the parallel beta_s relation.
SuiteResult run_diamond(std::uint64_t seed, std::size_t cases);

// lambda-sigma retraction: lsig_to_susp after susp_to_lsig is the identity.
SuiteResult run_bridge_retraction(std::uint64_t seed, std::size_t cases);

// lambda-s one-step correspondence under r + beta_s + the derived lookup.
SuiteResult run_ls_onestep(std::uint64_t seed, std::size_t cases);

// lambda-sigma forward and backward rewrite correspondences.
SuiteResult run_lsig_correspondence(std::uint64_t seed, std::size_t cases);

// lambda-upsilon rule mapping onto single derived-reading steps.
SuiteResult run_lu_rule_mapping(std::uint64_t seed, std::size_t cases);

// Normal-form agreement of all calculi against the beta oracle on a fixed
// strongly normalizing corpus (Church arithmetic up to 5 included).
SuiteResult run_cross_calculus();

// The lambda-sigma self-capture fixture: the recorded reduction sequence
// replays exactly, and no suspension-side rm reduct puts an environment
// containing the marked redex over that same redex.
SuiteResult run_mellies();

std::string format_result(const SuiteResult& r);

}  // namespace susp::props

#endif
