#ifndef SUSP_BRIDGES_HPP
#define SUSP_BRIDGES_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "susp/core.hpp"

// The lambda-upsilon, lambda-s / lambda-s_e and lambda-sigma calculi
// (syntax plus rewrite rules) together with the translations relating them
// to suspension expressions.

namespace susp {

struct ConstraintError : Error {
  using Error::Error;
};

// An old embedding level, a new embedding level, and an environment; the
// target of the substitution-to-environment translations. Always satisfies
// len(env) = ol and lev(env) <= nl.
struct EnvTriple {
  Nat ol = 0;
  Nat nl = 0;
  Ptr env;
};

}  // namespace susp

// ---------------------------------------------------------------------------
// lambda-upsilon
// ---------------------------------------------------------------------------

namespace susp::lu {

enum class LuKind : std::uint8_t { Var, App, Abs, Clos, Slash, Lift, Shift };

struct LuExpr;
using LuPtr = std::shared_ptr<const LuExpr>;

struct LuExpr {
  LuKind kind;
  Nat n = 0;  // Var
  LuPtr c0, c1;
};

LuPtr u_var(Nat n);
LuPtr u_app(LuPtr a, LuPtr b);
LuPtr u_abs(LuPtr a);
LuPtr u_clos(LuPtr term, LuPtr subst);
LuPtr u_slash(LuPtr term);
LuPtr u_lift(LuPtr subst);
LuPtr u_shift();

bool lu_is_term(const LuPtr& x);
bool lu_equal(const LuPtr& a, const LuPtr& b);

enum class LuRule : std::uint8_t { B, App, Lambda, FVar, RVar, VarShift, FVarLift, RVarLift };
const char* lu_rule_name(LuRule r);

struct LuRedex {
  Path at;
  LuRule rule;
};

std::optional<LuPtr> lu_rule_apply(LuRule rule, const LuPtr& x);
std::vector<LuRedex> lu_redexes(const LuPtr& x, bool include_beta);
LuPtr lu_step_at(const LuPtr& x, const Path& at, LuRule rule);

struct LuTrace {
  LuPtr result;
  Nat steps = 0;
  bool normal = false;
};

LuTrace lu_normalize(const LuPtr& x, bool include_beta, Nat fuel);

Ptr lu_to_susp(const LuPtr& term);
EnvTriple lu_subst_to_triple(const LuPtr& subst);

}  // namespace susp::lu

// ---------------------------------------------------------------------------
// lambda-s and lambda-s_e
// ---------------------------------------------------------------------------

namespace susp::ls {

enum class LsKind : std::uint8_t { Var, App, Abs, Sigma, Phi };

struct LsExpr;
using LsPtr = std::shared_ptr<const LsExpr>;

struct LsExpr {
  LsKind kind;
  Nat n = 0;  // Var: the index; Sigma: i >= 1; Phi: i >= 1
  Nat k = 0;  // Phi: k >= 0
  LsPtr c0, c1;
};

LsPtr s_var(Nat n);
LsPtr s_app(LsPtr a, LsPtr b);
LsPtr s_abs(LsPtr a);
LsPtr s_sigma(Nat i, LsPtr body, LsPtr arg);  // a sigma^i b
LsPtr s_phi(Nat k, Nat i, LsPtr body);        // phi^i_k a

bool ls_equal(const LsPtr& a, const LsPtr& b);

enum class LsRule : std::uint8_t {
  SigmaGeneration,
  SigmaLambda,
  SigmaApp,
  SigmaDestruction,
  PhiLambda,
  PhiApp,
  PhiDestruction,
  // lambda-s_e permutation rules
  SigmaSigma,
  SigmaPhi1,
  SigmaPhi2,
  PhiSigma,
  PhiPhi1,
  PhiPhi2,
};
const char* ls_rule_name(LsRule r);

struct LsRedex {
  Path at;
  LsRule rule;
};

std::optional<LsPtr> ls_rule_apply(LsRule rule, const LsPtr& x);
std::vector<LsRedex> ls_redexes(const LsPtr& x, bool include_generation, bool include_se);
LsPtr ls_step_at(const LsPtr& x, const Path& at, LsRule rule);

struct LsTrace {
  LsPtr result;
  Nat steps = 0;
  bool normal = false;
};

LsTrace ls_normalize(const LsPtr& x, bool include_generation, bool include_se, Nat fuel);

Ptr ls_to_susp(const LsPtr& term);

}  // namespace susp::ls

// ---------------------------------------------------------------------------
// lambda-sigma
// ---------------------------------------------------------------------------

namespace susp::lsig {

enum class LsigKind : std::uint8_t { One, App, Abs, Clos, Id, Cons, Comp, Shift };

struct LsigExpr;
using LsigPtr = std::shared_ptr<const LsigExpr>;

struct LsigExpr {
  LsigKind kind;
  LsigPtr c0, c1;
};

LsigPtr g_one();
LsigPtr g_app(LsigPtr a, LsigPtr b);
LsigPtr g_abs(LsigPtr a);
LsigPtr g_clos(LsigPtr term, LsigPtr subst);
LsigPtr g_id();
LsigPtr g_cons(LsigPtr term, LsigPtr subst);
LsigPtr g_comp(LsigPtr s, LsigPtr t);
LsigPtr g_shift();
LsigPtr g_shift_pow(Nat n);  // right-nested; n = 0 gives id, n = 1 gives shift

bool lsig_is_term(const LsigPtr& x);
bool lsig_equal(const LsigPtr& a, const LsigPtr& b);
// Recognizes shift^n for n >= 1 (shift, or right-nested compositions of it).
std::optional<Nat> shift_power(const LsigPtr& subst);

enum class LsigRule : std::uint8_t {
  Beta,
  App,
  Abs,
  VarId,
  VarCons,
  Clos,
  Map,
  Ass,
  IdL,
  ShiftId,
  ShiftCons,
};
const char* lsig_rule_name(LsigRule r);
std::optional<LsigRule> lsig_rule_from_name(const std::string& name);

struct LsigRedex {
  Path at;
  LsigRule rule;
};

std::optional<LsigPtr> lsig_rule_apply(LsigRule rule, const LsigPtr& x);
std::vector<LsigRedex> lsig_redexes(const LsigPtr& x, bool include_beta);
LsigPtr lsig_step_at(const LsigPtr& x, const Path& at, LsigRule rule);

struct LsigTrace {
  LsigPtr result;
  Nat steps = 0;
  bool normal = false;
};

LsigTrace lsig_normalize(const LsigPtr& x, bool include_beta, Nat fuel);

// Suspension expressions into lambda-sigma. Terms must be meta-free and
// constant-free; env_to_lsig additionally requires lev(e) <= i.
LsigPtr susp_to_lsig(const Ptr& term);
LsigPtr env_to_lsig(const Ptr& env, Nat i);

// The reverse direction, total on lambda-sigma expressions.
Ptr lsig_to_susp(const LsigPtr& term);
EnvTriple lsig_subst_to_triple(const LsigPtr& subst);

}  // namespace susp::lsig

#endif
