#ifndef SUSP_REWRITE_HPP
#define SUSP_REWRITE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "susp/core.hpp"

// Rewrite rules of the suspension calculus: the beta-contraction rule, the
// reading rules r1-r7, the merging rules m1-m6, plus two derived rules used
// by calculus correspondences. Positioned single steps, strategy-driven
// normalization with fuel and tracing, and joinability testing.

namespace susp {

struct RewriteError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

enum class RuleId : std::uint8_t {
  BetaS,
  R1,
  R2,
  R3,
  R4,
  R5,
  R6,
  R7,
  M1,
  M2,
  M3,
  M4,
  M5,
  M6,
  R3Prime,
  LookupDerived,
};

inline constexpr RuleId kAllRules[] = {
    RuleId::BetaS, RuleId::R1, RuleId::R2, RuleId::R3,      RuleId::R4,
    RuleId::R5,    RuleId::R6, RuleId::R7, RuleId::M1,      RuleId::M2,
    RuleId::M3,    RuleId::M4, RuleId::M5, RuleId::M6,      RuleId::R3Prime,
    RuleId::LookupDerived,
};

const char* rule_name(RuleId r);
std::optional<RuleId> rule_from_name(const std::string& name);

class RuleSet {
 public:
  RuleSet() = default;

  static RuleSet empty() { return RuleSet(); }
  static RuleSet r();       // r1-r6
  static RuleSet rm();      // r1-r6, m1-m6
  static RuleSet rbeta();   // r + beta_s
  static RuleSet rmbeta();  // rm + beta_s

  RuleSet with(RuleId rule) const;
  RuleSet without(RuleId rule) const;
  RuleSet with_logical() const { return with(RuleId::R7); }

  bool contains(RuleId rule) const { return mask_ & bit(rule); }
  bool has_beta() const { return contains(RuleId::BetaS); }
  bool operator==(const RuleSet& o) const { return mask_ == o.mask_; }

 private:
  static std::uint32_t bit(RuleId r) { return 1u << static_cast<unsigned>(r); }
  std::uint32_t mask_ = 0;
};

// Applies the rule at the root of x, evaluating all arithmetic side
// conditions. Empty when the left-hand side does not match.
std::optional<Ptr> rule_apply(RuleId rule, const Ptr& x);
bool rule_matches(RuleId rule, const Ptr& x);

struct Redex {
  Path at;
  RuleId rule;
};

// Every position/rule pair where rule_apply succeeds on the addressed
// subexpression, in deterministic preorder (path lexicographic, RuleId order
// as tiebreak).
std::vector<Redex> redexes(const Ptr& x, RuleSet rules);

Ptr step_at(const Ptr& x, const Path& at, RuleId rule);

enum class StrategyKind : std::uint8_t {
  LeftmostOutermost,
  LeftmostInnermost,
  HeadFirst,
  RandomSeeded,
};

struct Strategy {
  StrategyKind kind = StrategyKind::LeftmostOutermost;
  std::uint64_t seed = 0;

  static Strategy lo() { return {StrategyKind::LeftmostOutermost, 0}; }
  static Strategy li() { return {StrategyKind::LeftmostInnermost, 0}; }
  static Strategy head_first() { return {StrategyKind::HeadFirst, 0}; }
  static Strategy random(std::uint64_t seed) { return {StrategyKind::RandomSeeded, seed}; }
};

enum class TraceStatus : std::uint8_t { NormalForm, FuelExhausted };

struct TraceStep {
  RuleId rule;
  Path at;
  Ptr result;
};

struct Trace {
  Ptr initial;
  std::vector<TraceStep> steps;
  TraceStatus status = TraceStatus::NormalForm;

  const Ptr& result() const { return steps.empty() ? initial : steps.back().result; }
  bool normal() const { return status == TraceStatus::NormalForm; }
};

inline constexpr Nat kDefaultRmFuel = 100000;

// Rejects rule sets that combine r3' with graftable meta variables in the
// input; r3' is admissible only without them (or under the logical mode).
void validate_ruleset(RuleSet rules, const Ptr& input);

Trace normalize(const Ptr& x, RuleSet rules, Strategy strategy, Nat fuel);

// rm-normal form under the default fuel; throws RewriteError on exhaustion.
Ptr rm_normal_form(const Ptr& x, Nat fuel = kDefaultRmFuel);

// Rewrites along the head spine only (under abstractions and into the
// function part of applications, plus the substitution work needed to expose
// the head) until the head is an index, constant or meta variable.
Trace head_normalize(const Ptr& t, Nat fuel);
std::optional<Redex> spine_redex(const Ptr& t, RuleSet rules);

struct JoinResult {
  bool joined = false;
  bool inconclusive = false;
};

inline constexpr std::size_t kDefaultFrontierCap = 10000;

// Leftmost-outermost normal forms first; if those differ, a bounded
// breadth-first search over the one-step reachability graphs of both sides.
JoinResult joinable(const Ptr& a, const Ptr& b, RuleSet rules, Nat fuel,
                    std::size_t frontier_cap = kDefaultFrontierCap);

struct ReachResult {
  std::vector<Ptr> states;  // includes the start expression
  bool complete = false;    // whole reachable set fits within the cap
};

ReachResult reachable(const Ptr& x, RuleSet rules, std::size_t cap);

}  // namespace susp

#endif
