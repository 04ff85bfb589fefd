#include "susp/bridges.hpp"

#include <algorithm>

#include "susp/rewrite.hpp"

namespace susp::lu {

namespace {

LuPtr make_u(LuKind k, Nat n, LuPtr c0, LuPtr c1) {
  auto e = std::make_shared<LuExpr>();
  e->kind = k;
  e->n = n;
  e->c0 = std::move(c0);
  e->c1 = std::move(c1);
  return e;
}

}  // namespace

LuPtr u_var(Nat n) {
  if (n < 1) throw Error("lambda-upsilon index must be >= 1");
  return make_u(LuKind::Var, n, nullptr, nullptr);
}
LuPtr u_app(LuPtr a, LuPtr b) { return make_u(LuKind::App, 0, std::move(a), std::move(b)); }
LuPtr u_abs(LuPtr a) { return make_u(LuKind::Abs, 0, std::move(a), nullptr); }
LuPtr u_clos(LuPtr term, LuPtr subst) { return make_u(LuKind::Clos, 0, std::move(term), std::move(subst)); }
LuPtr u_slash(LuPtr term) { return make_u(LuKind::Slash, 0, std::move(term), nullptr); }
LuPtr u_lift(LuPtr subst) { return make_u(LuKind::Lift, 0, std::move(subst), nullptr); }
LuPtr u_shift() {
  static const LuPtr s = make_u(LuKind::Shift, 0, nullptr, nullptr);
  return s;
}

bool lu_is_term(const LuPtr& x) {
  switch (x->kind) {
    case LuKind::Var:
    case LuKind::App:
    case LuKind::Abs:
    case LuKind::Clos:
      return true;
    default:
      return false;
  }
}

bool lu_equal(const LuPtr& a, const LuPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind || a->n != b->n) return false;
  if (a->c0 && !lu_equal(a->c0, b->c0)) return false;
  if (a->c1 && !lu_equal(a->c1, b->c1)) return false;
  return true;
}

const char* lu_rule_name(LuRule r) {
  switch (r) {
    case LuRule::B: return "B";
    case LuRule::App: return "App";
    case LuRule::Lambda: return "Lambda";
    case LuRule::FVar: return "FVar";
    case LuRule::RVar: return "RVar";
    case LuRule::VarShift: return "VarShift";
    case LuRule::FVarLift: return "FVarLift";
    case LuRule::RVarLift: return "RVarLift";
  }
  return "?";
}

std::optional<LuPtr> lu_rule_apply(LuRule rule, const LuPtr& x) {
  switch (rule) {
    case LuRule::B:
      if (x->kind == LuKind::App && x->c0->kind == LuKind::Abs)
        return u_clos(x->c0->c0, u_slash(x->c1));
      return std::nullopt;
    case LuRule::App:
      if (x->kind == LuKind::Clos && x->c0->kind == LuKind::App)
        return u_app(u_clos(x->c0->c0, x->c1), u_clos(x->c0->c1, x->c1));
      return std::nullopt;
    case LuRule::Lambda:
      if (x->kind == LuKind::Clos && x->c0->kind == LuKind::Abs)
        return u_abs(u_clos(x->c0->c0, u_lift(x->c1)));
      return std::nullopt;
    case LuRule::FVar:
      if (x->kind == LuKind::Clos && x->c0->kind == LuKind::Var && x->c0->n == 1 &&
          x->c1->kind == LuKind::Slash)
        return x->c1->c0;
      return std::nullopt;
    case LuRule::RVar:
      if (x->kind == LuKind::Clos && x->c0->kind == LuKind::Var && x->c0->n > 1 &&
          x->c1->kind == LuKind::Slash)
        return u_var(x->c0->n - 1);
      return std::nullopt;
    case LuRule::VarShift:
      if (x->kind == LuKind::Clos && x->c0->kind == LuKind::Var && x->c1->kind == LuKind::Shift)
        return u_var(checked_add(x->c0->n, 1));
      return std::nullopt;
    case LuRule::FVarLift:
      if (x->kind == LuKind::Clos && x->c0->kind == LuKind::Var && x->c0->n == 1 &&
          x->c1->kind == LuKind::Lift)
        return u_var(1);
      return std::nullopt;
    case LuRule::RVarLift:
      if (x->kind == LuKind::Clos && x->c0->kind == LuKind::Var && x->c0->n > 1 &&
          x->c1->kind == LuKind::Lift)
        return u_clos(u_clos(u_var(x->c0->n - 1), x->c1->c0), u_shift());
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

unsigned lu_children(const LuPtr& x) {
  switch (x->kind) {
    case LuKind::Var:
    case LuKind::Shift:
      return 0;
    case LuKind::Abs:
    case LuKind::Slash:
    case LuKind::Lift:
      return 1;
    default:
      return 2;
  }
}

LuPtr lu_child(const LuPtr& x, unsigned i) { return i == 0 ? x->c0 : x->c1; }

LuPtr lu_with(const LuPtr& x, unsigned i, LuPtr c) {
  auto e = std::make_shared<LuExpr>(*x);
  if (i == 0)
    e->c0 = std::move(c);
  else
    e->c1 = std::move(c);
  return e;
}

constexpr LuRule kLuRules[] = {LuRule::B,        LuRule::App,      LuRule::Lambda,
                               LuRule::FVar,     LuRule::RVar,     LuRule::VarShift,
                               LuRule::FVarLift, LuRule::RVarLift};

void lu_collect(const LuPtr& x, bool include_beta, Path& at, std::vector<LuRedex>& out) {
  for (LuRule r : kLuRules) {
    if (r == LuRule::B && !include_beta) continue;
    if (lu_rule_apply(r, x)) out.push_back({at, r});
  }
  unsigned n = lu_children(x);
  for (unsigned i = 0; i < n; ++i) {
    at.push_back(i);
    lu_collect(lu_child(x, i), include_beta, at, out);
    at.pop_back();
  }
}

}  // namespace

std::vector<LuRedex> lu_redexes(const LuPtr& x, bool include_beta) {
  std::vector<LuRedex> out;
  Path at;
  lu_collect(x, include_beta, at, out);
  return out;
}

namespace {

bool lu_find_first(const LuPtr& x, bool include_beta, Path& at, LuRule& rule) {
  for (LuRule r : kLuRules) {
    if (r == LuRule::B && !include_beta) continue;
    if (lu_rule_apply(r, x)) {
      rule = r;
      return true;
    }
  }
  unsigned n = lu_children(x);
  for (unsigned i = 0; i < n; ++i) {
    at.push_back(i);
    if (lu_find_first(lu_child(x, i), include_beta, at, rule)) return true;
    at.pop_back();
  }
  return false;
}

}  // namespace

LuPtr lu_step_at(const LuPtr& x, const Path& at, LuRule rule) {
  if (at.empty()) {
    auto r = lu_rule_apply(rule, x);
    if (!r) throw RewriteError(std::string("lambda-upsilon rule ") + lu_rule_name(rule) + " does not match");
    return *r;
  }
  Path rest(at.begin() + 1, at.end());
  if (at.front() >= lu_children(x)) throw IndexError("invalid lambda-upsilon path");
  return lu_with(x, at.front(), lu_step_at(lu_child(x, at.front()), rest, rule));
}

LuTrace lu_normalize(const LuPtr& x, bool include_beta, Nat fuel) {
  LuTrace tr;
  tr.result = x;
  for (;;) {
    Path at;
    LuRule rule;
    if (!lu_find_first(tr.result, include_beta, at, rule)) {
      tr.normal = true;
      return tr;
    }
    if (tr.steps >= fuel) return tr;
    tr.result = lu_step_at(tr.result, at, rule);
    ++tr.steps;
  }
}

Ptr lu_to_susp(const LuPtr& term) {
  switch (term->kind) {
    case LuKind::Var:
      return index(term->n);
    case LuKind::App:
      return app(lu_to_susp(term->c0), lu_to_susp(term->c1));
    case LuKind::Abs:
      return abs(lu_to_susp(term->c0));
    case LuKind::Clos: {
      EnvTriple t = lu_subst_to_triple(term->c1);
      return suspend(lu_to_susp(term->c0), t.ol, t.nl, t.env);
    }
    default:
      throw Error("lu_to_susp: term expected");
  }
}

EnvTriple lu_subst_to_triple(const LuPtr& subst) {
  switch (subst->kind) {
    case LuKind::Slash:
      return {1, 0, cons(lu_to_susp(subst->c0), 0, nil())};
    case LuKind::Shift:
      return {0, 1, nil()};
    case LuKind::Lift: {
      EnvTriple t = lu_subst_to_triple(subst->c0);
      Nat nl = checked_add(t.nl, 1);
      return {checked_add(t.ol, 1), nl, cons(index(1), nl, t.env)};
    }
    default:
      throw Error("lu_subst_to_triple: substitution expected");
  }
}

}  // namespace susp::lu

namespace susp::ls {

namespace {

LsPtr make_s(LsKind kind, Nat n, Nat k, LsPtr c0, LsPtr c1) {
  auto e = std::make_shared<LsExpr>();
  e->kind = kind;
  e->n = n;
  e->k = k;
  e->c0 = std::move(c0);
  e->c1 = std::move(c1);
  return e;
}

}  // namespace

LsPtr s_var(Nat n) {
  if (n < 1) throw Error("lambda-s index must be >= 1");
  return make_s(LsKind::Var, n, 0, nullptr, nullptr);
}
LsPtr s_app(LsPtr a, LsPtr b) { return make_s(LsKind::App, 0, 0, std::move(a), std::move(b)); }
LsPtr s_abs(LsPtr a) { return make_s(LsKind::Abs, 0, 0, std::move(a), nullptr); }

LsPtr s_sigma(Nat i, LsPtr body, LsPtr arg) {
  if (i < 1) throw Error("sigma superscript must be >= 1");
  return make_s(LsKind::Sigma, i, 0, std::move(body), std::move(arg));
}

LsPtr s_phi(Nat k, Nat i, LsPtr body) {
  if (i < 1) throw Error("phi superscript must be >= 1");
  return make_s(LsKind::Phi, i, k, std::move(body), nullptr);
}

bool ls_equal(const LsPtr& a, const LsPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind || a->n != b->n || a->k != b->k) return false;
  if (a->c0 && !ls_equal(a->c0, b->c0)) return false;
  if (a->c1 && !ls_equal(a->c1, b->c1)) return false;
  return true;
}

const char* ls_rule_name(LsRule r) {
  switch (r) {
    case LsRule::SigmaGeneration: return "sigma-generation";
    case LsRule::SigmaLambda: return "sigma-lambda-transition";
    case LsRule::SigmaApp: return "sigma-app-transition";
    case LsRule::SigmaDestruction: return "sigma-destruction";
    case LsRule::PhiLambda: return "phi-lambda-transition";
    case LsRule::PhiApp: return "phi-app-transition";
    case LsRule::PhiDestruction: return "phi-destruction";
    case LsRule::SigmaSigma: return "sigma-sigma-transition";
    case LsRule::SigmaPhi1: return "sigma-phi-transition-1";
    case LsRule::SigmaPhi2: return "sigma-phi-transition-2";
    case LsRule::PhiSigma: return "phi-sigma-transition";
    case LsRule::PhiPhi1: return "phi-phi-transition-1";
    case LsRule::PhiPhi2: return "phi-phi-transition-2";
  }
  return "?";
}

std::optional<LsPtr> ls_rule_apply(LsRule rule, const LsPtr& x) {
  switch (rule) {
    case LsRule::SigmaGeneration:
      if (x->kind == LsKind::App && x->c0->kind == LsKind::Abs)
        return s_sigma(1, x->c0->c0, x->c1);
      return std::nullopt;
    case LsRule::SigmaLambda:
      if (x->kind == LsKind::Sigma && x->c0->kind == LsKind::Abs)
        return s_abs(s_sigma(checked_add(x->n, 1), x->c0->c0, x->c1));
      return std::nullopt;
    case LsRule::SigmaApp:
      if (x->kind == LsKind::Sigma && x->c0->kind == LsKind::App)
        return s_app(s_sigma(x->n, x->c0->c0, x->c1), s_sigma(x->n, x->c0->c1, x->c1));
      return std::nullopt;
    case LsRule::SigmaDestruction:
      if (x->kind == LsKind::Sigma && x->c0->kind == LsKind::Var) {
        const Nat n = x->c0->n, i = x->n;
        if (n > i) return s_var(n - 1);
        if (n == i) return s_phi(0, i, x->c1);
        return x->c0;
      }
      return std::nullopt;
    case LsRule::PhiLambda:
      if (x->kind == LsKind::Phi && x->c0->kind == LsKind::Abs)
        return s_abs(s_phi(checked_add(x->k, 1), x->n, x->c0->c0));
      return std::nullopt;
    case LsRule::PhiApp:
      if (x->kind == LsKind::Phi && x->c0->kind == LsKind::App)
        return s_app(s_phi(x->k, x->n, x->c0->c0), s_phi(x->k, x->n, x->c0->c1));
      return std::nullopt;
    case LsRule::PhiDestruction:
      if (x->kind == LsKind::Phi && x->c0->kind == LsKind::Var) {
        const Nat n = x->c0->n, i = x->n, k = x->k;
        if (n > k) return s_var(checked_sub(checked_add(n, i), 1));
        return x->c0;
      }
      return std::nullopt;
    case LsRule::SigmaSigma:
      if (x->kind == LsKind::Sigma && x->c0->kind == LsKind::Sigma && x->c0->n <= x->n) {
        const Nat i = x->c0->n, j = x->n;
        return s_sigma(i, s_sigma(checked_add(j, 1), x->c0->c0, x->c1),
                       s_sigma(checked_sub(checked_add(j, 1), i), x->c0->c1, x->c1));
      }
      return std::nullopt;
    case LsRule::SigmaPhi1:
      if (x->kind == LsKind::Sigma && x->c0->kind == LsKind::Phi) {
        const Nat k = x->c0->k, i = x->c0->n, j = x->n;
        if (k < j && j < checked_add(k, i)) return s_phi(k, checked_sub(i, 1), x->c0->c0);
      }
      return std::nullopt;
    case LsRule::SigmaPhi2:
      if (x->kind == LsKind::Sigma && x->c0->kind == LsKind::Phi) {
        const Nat k = x->c0->k, i = x->c0->n, j = x->n;
        if (checked_add(k, i) <= j)
          return s_phi(k, i, s_sigma(checked_sub(checked_add(j, 1), i), x->c0->c0, x->c1));
      }
      return std::nullopt;
    case LsRule::PhiSigma:
      if (x->kind == LsKind::Phi && x->c0->kind == LsKind::Sigma) {
        const Nat k = x->k, i = x->n, j = x->c0->n;
        if (j <= checked_add(k, 1))
          return s_sigma(j, s_phi(checked_add(k, 1), i, x->c0->c0),
                         s_phi(checked_sub(checked_add(k, 1), j), i, x->c0->c1));
      }
      return std::nullopt;
    case LsRule::PhiPhi1:
      if (x->kind == LsKind::Phi && x->c0->kind == LsKind::Phi) {
        const Nat k = x->k, i = x->n, l = x->c0->k, j = x->c0->n;
        if (checked_add(l, j) <= k)
          return s_phi(l, j, s_phi(checked_sub(checked_add(k, 1), j), i, x->c0->c0));
      }
      return std::nullopt;
    case LsRule::PhiPhi2:
      if (x->kind == LsKind::Phi && x->c0->kind == LsKind::Phi) {
        const Nat k = x->k, i = x->n, l = x->c0->k, j = x->c0->n;
        if (l <= k && k < checked_add(l, j))
          return s_phi(l, checked_sub(checked_add(j, i), 1), x->c0->c0);
      }
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

unsigned ls_children(const LsPtr& x) {
  switch (x->kind) {
    case LsKind::Var:
      return 0;
    case LsKind::Abs:
    case LsKind::Phi:
      return 1;
    default:
      return 2;
  }
}

LsPtr ls_child(const LsPtr& x, unsigned i) { return i == 0 ? x->c0 : x->c1; }

LsPtr ls_with(const LsPtr& x, unsigned i, LsPtr c) {
  auto e = std::make_shared<LsExpr>(*x);
  if (i == 0)
    e->c0 = std::move(c);
  else
    e->c1 = std::move(c);
  return e;
}

constexpr LsRule kLsBase[] = {LsRule::SigmaGeneration, LsRule::SigmaLambda,
                              LsRule::SigmaApp,        LsRule::SigmaDestruction,
                              LsRule::PhiLambda,       LsRule::PhiApp,
                              LsRule::PhiDestruction};
constexpr LsRule kLsSe[] = {LsRule::SigmaSigma, LsRule::SigmaPhi1, LsRule::SigmaPhi2,
                            LsRule::PhiSigma,   LsRule::PhiPhi1,   LsRule::PhiPhi2};

void ls_collect(const LsPtr& x, bool gen, bool se, Path& at, std::vector<LsRedex>& out) {
  for (LsRule r : kLsBase) {
    if (r == LsRule::SigmaGeneration && !gen) continue;
    if (ls_rule_apply(r, x)) out.push_back({at, r});
  }
  if (se)
    for (LsRule r : kLsSe)
      if (ls_rule_apply(r, x)) out.push_back({at, r});
  unsigned n = ls_children(x);
  for (unsigned i = 0; i < n; ++i) {
    at.push_back(i);
    ls_collect(ls_child(x, i), gen, se, at, out);
    at.pop_back();
  }
}

}  // namespace

std::vector<LsRedex> ls_redexes(const LsPtr& x, bool include_generation, bool include_se) {
  std::vector<LsRedex> out;
  Path at;
  ls_collect(x, include_generation, include_se, at, out);
  return out;
}

namespace {

bool ls_find_first(const LsPtr& x, bool gen, bool se, Path& at, LsRule& rule) {
  for (LsRule r : kLsBase) {
    if (r == LsRule::SigmaGeneration && !gen) continue;
    if (ls_rule_apply(r, x)) {
      rule = r;
      return true;
    }
  }
  if (se)
    for (LsRule r : kLsSe)
      if (ls_rule_apply(r, x)) {
        rule = r;
        return true;
      }
  unsigned n = ls_children(x);
  for (unsigned i = 0; i < n; ++i) {
    at.push_back(i);
    if (ls_find_first(ls_child(x, i), gen, se, at, rule)) return true;
    at.pop_back();
  }
  return false;
}

}  // namespace

LsPtr ls_step_at(const LsPtr& x, const Path& at, LsRule rule) {
  if (at.empty()) {
    auto r = ls_rule_apply(rule, x);
    if (!r) throw RewriteError(std::string("lambda-s rule ") + ls_rule_name(rule) + " does not match");
    return *r;
  }
  Path rest(at.begin() + 1, at.end());
  if (at.front() >= ls_children(x)) throw IndexError("invalid lambda-s path");
  return ls_with(x, at.front(), ls_step_at(ls_child(x, at.front()), rest, rule));
}

LsTrace ls_normalize(const LsPtr& x, bool include_generation, bool include_se, Nat fuel) {
  LsTrace tr;
  tr.result = x;
  for (;;) {
    Path at;
    LsRule rule;
    if (!ls_find_first(tr.result, include_generation, include_se, at, rule)) {
      tr.normal = true;
      return tr;
    }
    if (tr.steps >= fuel) return tr;
    tr.result = ls_step_at(tr.result, at, rule);
    ++tr.steps;
  }
}

Ptr ls_to_susp(const LsPtr& term) {
  switch (term->kind) {
    case LsKind::Var:
      return index(term->n);
    case LsKind::App:
      return app(ls_to_susp(term->c0), ls_to_susp(term->c1));
    case LsKind::Abs:
      return abs(ls_to_susp(term->c0));
    case LsKind::Sigma: {
      const Nat i = term->n;
      Ptr env = cons(ls_to_susp(term->c1), 0, nil());
      for (Nat l = 1; l < i; ++l) env = cons(index(1), l, env);
      return suspend(ls_to_susp(term->c0), i, i - 1, env);
    }
    case LsKind::Phi: {
      const Nat k = term->k, i = term->n;
      Ptr env = nil();
      for (Nat l = i; l < checked_add(k, i); ++l) env = cons(index(1), l, env);
      return suspend(ls_to_susp(term->c0), k, checked_sub(checked_add(k, i), 1), env);
    }
  }
  throw Error("ls_to_susp: unreachable");
}

}  // namespace susp::ls

namespace susp::lsig {

namespace {

LsigPtr make_g(LsigKind k, LsigPtr c0, LsigPtr c1) {
  auto e = std::make_shared<LsigExpr>();
  e->kind = k;
  e->c0 = std::move(c0);
  e->c1 = std::move(c1);
  return e;
}

}  // namespace

LsigPtr g_one() {
  static const LsigPtr s = make_g(LsigKind::One, nullptr, nullptr);
  return s;
}
LsigPtr g_app(LsigPtr a, LsigPtr b) { return make_g(LsigKind::App, std::move(a), std::move(b)); }
LsigPtr g_abs(LsigPtr a) { return make_g(LsigKind::Abs, std::move(a), nullptr); }
LsigPtr g_clos(LsigPtr term, LsigPtr subst) { return make_g(LsigKind::Clos, std::move(term), std::move(subst)); }
LsigPtr g_id() {
  static const LsigPtr s = make_g(LsigKind::Id, nullptr, nullptr);
  return s;
}
LsigPtr g_cons(LsigPtr term, LsigPtr subst) { return make_g(LsigKind::Cons, std::move(term), std::move(subst)); }
LsigPtr g_comp(LsigPtr s, LsigPtr t) { return make_g(LsigKind::Comp, std::move(s), std::move(t)); }
LsigPtr g_shift() {
  static const LsigPtr s = make_g(LsigKind::Shift, nullptr, nullptr);
  return s;
}

LsigPtr g_shift_pow(Nat n) {
  if (n == 0) return g_id();
  LsigPtr acc = g_shift();
  for (Nat i = 1; i < n; ++i) acc = g_comp(g_shift(), acc);
  return acc;
}

bool lsig_is_term(const LsigPtr& x) {
  switch (x->kind) {
    case LsigKind::One:
    case LsigKind::App:
    case LsigKind::Abs:
    case LsigKind::Clos:
      return true;
    default:
      return false;
  }
}

bool lsig_equal(const LsigPtr& a, const LsigPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  if (a->c0 && !lsig_equal(a->c0, b->c0)) return false;
  if (a->c1 && !lsig_equal(a->c1, b->c1)) return false;
  return true;
}

std::optional<Nat> shift_power(const LsigPtr& subst) {
  Nat n = 0;
  LsigPtr cur = subst;
  while (cur->kind == LsigKind::Comp && cur->c0->kind == LsigKind::Shift) {
    ++n;
    cur = cur->c1;
  }
  if (cur->kind == LsigKind::Shift) return n + 1;
  return std::nullopt;
}

const char* lsig_rule_name(LsigRule r) {
  switch (r) {
    case LsigRule::Beta: return "Beta";
    case LsigRule::App: return "App";
    case LsigRule::Abs: return "Abs";
    case LsigRule::VarId: return "VarId";
    case LsigRule::VarCons: return "VarCons";
    case LsigRule::Clos: return "Clos";
    case LsigRule::Map: return "Map";
    case LsigRule::Ass: return "Ass";
    case LsigRule::IdL: return "IdL";
    case LsigRule::ShiftId: return "ShiftId";
    case LsigRule::ShiftCons: return "ShiftCons";
  }
  return "?";
}

std::optional<LsigRule> lsig_rule_from_name(const std::string& name) {
  for (LsigRule r :
       {LsigRule::Beta, LsigRule::App, LsigRule::Abs, LsigRule::VarId, LsigRule::VarCons,
        LsigRule::Clos, LsigRule::Map, LsigRule::Ass, LsigRule::IdL, LsigRule::ShiftId,
        LsigRule::ShiftCons})
    if (name == lsig_rule_name(r)) return r;
  return std::nullopt;
}

std::optional<LsigPtr> lsig_rule_apply(LsigRule rule, const LsigPtr& x) {
  switch (rule) {
    case LsigRule::Beta:
      if (x->kind == LsigKind::App && x->c0->kind == LsigKind::Abs)
        return g_clos(x->c0->c0, g_cons(x->c1, g_id()));
      return std::nullopt;
    case LsigRule::App:
      if (x->kind == LsigKind::Clos && x->c0->kind == LsigKind::App)
        return g_app(g_clos(x->c0->c0, x->c1), g_clos(x->c0->c1, x->c1));
      return std::nullopt;
    case LsigRule::Abs:
      if (x->kind == LsigKind::Clos && x->c0->kind == LsigKind::Abs)
        return g_abs(g_clos(x->c0->c0, g_cons(g_one(), g_comp(x->c1, g_shift()))));
      return std::nullopt;
    case LsigRule::VarId:
      if (x->kind == LsigKind::Clos && x->c0->kind == LsigKind::One && x->c1->kind == LsigKind::Id)
        return g_one();
      return std::nullopt;
    case LsigRule::VarCons:
      if (x->kind == LsigKind::Clos && x->c0->kind == LsigKind::One && x->c1->kind == LsigKind::Cons)
        return x->c1->c0;
      return std::nullopt;
    case LsigRule::Clos:
      if (x->kind == LsigKind::Clos && x->c0->kind == LsigKind::Clos)
        return g_clos(x->c0->c0, g_comp(x->c0->c1, x->c1));
      return std::nullopt;
    case LsigRule::Map:
      if (x->kind == LsigKind::Comp && x->c0->kind == LsigKind::Cons)
        return g_cons(g_clos(x->c0->c0, x->c1), g_comp(x->c0->c1, x->c1));
      return std::nullopt;
    case LsigRule::Ass:
      if (x->kind == LsigKind::Comp && x->c0->kind == LsigKind::Comp)
        return g_comp(x->c0->c0, g_comp(x->c0->c1, x->c1));
      return std::nullopt;
    case LsigRule::IdL:
      if (x->kind == LsigKind::Comp && x->c0->kind == LsigKind::Id) return x->c1;
      return std::nullopt;
    case LsigRule::ShiftId:
      if (x->kind == LsigKind::Comp && x->c0->kind == LsigKind::Shift && x->c1->kind == LsigKind::Id)
        return g_shift();
      return std::nullopt;
    case LsigRule::ShiftCons:
      if (x->kind == LsigKind::Comp && x->c0->kind == LsigKind::Shift && x->c1->kind == LsigKind::Cons)
        return x->c1->c1;
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

unsigned lsig_children(const LsigPtr& x) {
  switch (x->kind) {
    case LsigKind::One:
    case LsigKind::Id:
    case LsigKind::Shift:
      return 0;
    case LsigKind::Abs:
      return 1;
    default:
      return 2;
  }
}

LsigPtr lsig_child(const LsigPtr& x, unsigned i) { return i == 0 ? x->c0 : x->c1; }

LsigPtr lsig_with(const LsigPtr& x, unsigned i, LsigPtr c) {
  auto e = std::make_shared<LsigExpr>(*x);
  if (i == 0)
    e->c0 = std::move(c);
  else
    e->c1 = std::move(c);
  return e;
}

constexpr LsigRule kLsigRules[] = {LsigRule::Beta, LsigRule::App,     LsigRule::Abs,
                                   LsigRule::VarId, LsigRule::VarCons, LsigRule::Clos,
                                   LsigRule::Map,   LsigRule::Ass,     LsigRule::IdL,
                                   LsigRule::ShiftId, LsigRule::ShiftCons};

void lsig_collect(const LsigPtr& x, bool include_beta, Path& at, std::vector<LsigRedex>& out) {
  for (LsigRule r : kLsigRules) {
    if (r == LsigRule::Beta && !include_beta) continue;
    if (lsig_rule_apply(r, x)) out.push_back({at, r});
  }
  unsigned n = lsig_children(x);
  for (unsigned i = 0; i < n; ++i) {
    at.push_back(i);
    lsig_collect(lsig_child(x, i), include_beta, at, out);
    at.pop_back();
  }
}

}  // namespace

std::vector<LsigRedex> lsig_redexes(const LsigPtr& x, bool include_beta) {
  std::vector<LsigRedex> out;
  Path at;
  lsig_collect(x, include_beta, at, out);
  return out;
}

namespace {

bool lsig_find_first(const LsigPtr& x, bool include_beta, Path& at, LsigRule& rule) {
  for (LsigRule r : kLsigRules) {
    if (r == LsigRule::Beta && !include_beta) continue;
    if (lsig_rule_apply(r, x)) {
      rule = r;
      return true;
    }
  }
  unsigned n = lsig_children(x);
  for (unsigned i = 0; i < n; ++i) {
    at.push_back(i);
    if (lsig_find_first(lsig_child(x, i), include_beta, at, rule)) return true;
    at.pop_back();
  }
  return false;
}

}  // namespace

LsigPtr lsig_step_at(const LsigPtr& x, const Path& at, LsigRule rule) {
  if (at.empty()) {
    auto r = lsig_rule_apply(rule, x);
    if (!r)
      throw RewriteError(std::string("lambda-sigma rule ") + lsig_rule_name(rule) + " does not match");
    return *r;
  }
  Path rest(at.begin() + 1, at.end());
  if (at.front() >= lsig_children(x)) throw IndexError("invalid lambda-sigma path");
  return lsig_with(x, at.front(), lsig_step_at(lsig_child(x, at.front()), rest, rule));
}

LsigTrace lsig_normalize(const LsigPtr& x, bool include_beta, Nat fuel) {
  LsigTrace tr;
  tr.result = x;
  for (;;) {
    Path at;
    LsigRule rule;
    if (!lsig_find_first(tr.result, include_beta, at, rule)) {
      tr.normal = true;
      return tr;
    }
    if (tr.steps >= fuel) return tr;
    tr.result = lsig_step_at(tr.result, at, rule);
    ++tr.steps;
  }
}

LsigPtr susp_to_lsig(const Ptr& term) {
  switch (term->kind) {
    case Kind::Index:
      if (term->n0 == 1) return g_one();
      return g_clos(g_one(), g_shift_pow(term->n0 - 1));
    case Kind::App:
      return g_app(susp_to_lsig(term->c0), susp_to_lsig(term->c1));
    case Kind::Abs:
      return g_abs(susp_to_lsig(term->c0));
    case Kind::Susp:
      return g_clos(susp_to_lsig(term->c0), env_to_lsig(term->c1, term->n1));
    case Kind::Meta:
      throw ConstraintError("susp_to_lsig: meta variables are not translatable");
    case Kind::Const:
      throw ConstraintError("susp_to_lsig: constants are not part of the lambda-sigma syntax");
    default:
      throw Error("susp_to_lsig: term expected");
  }
}

LsigPtr env_to_lsig(const Ptr& env, Nat i) {
  if (lev(env) > i) throw ConstraintError("env_to_lsig: lev(e) exceeds the context level");
  switch (env->kind) {
    case Kind::Nil: {
      LsigPtr acc = g_id();
      for (Nat k = 0; k < i; ++k) acc = g_comp(acc, g_shift());
      return acc;
    }
    case Kind::Cons: {
      const Nat n = env->n0;
      LsigPtr acc = g_cons(susp_to_lsig(env->c0), env_to_lsig(env->c1, n));
      for (Nat k = n; k < i; ++k) acc = g_comp(acc, g_shift());
      return acc;
    }
    case Kind::Merge: {
      const Nat nl1 = env->n0, ol2 = env->n1;
      return g_comp(env_to_lsig(env->c0, nl1), env_to_lsig(env->c1, checked_sub(i, monus(nl1, ol2))));
    }
    default:
      throw Error("env_to_lsig: environment expected");
  }
}

Ptr lsig_to_susp(const LsigPtr& term) {
  switch (term->kind) {
    case LsigKind::One:
      return index(1);
    case LsigKind::App:
      return app(lsig_to_susp(term->c0), lsig_to_susp(term->c1));
    case LsigKind::Abs:
      return abs(lsig_to_susp(term->c0));
    case LsigKind::Clos: {
      if (term->c0->kind == LsigKind::One) {
        if (auto n = shift_power(term->c1)) return index(checked_add(*n, 1));
      }
      EnvTriple t = lsig_subst_to_triple(term->c1);
      return suspend(lsig_to_susp(term->c0), t.ol, t.nl, t.env);
    }
    default:
      throw Error("lsig_to_susp: term expected");
  }
}

EnvTriple lsig_subst_to_triple(const LsigPtr& subst) {
  switch (subst->kind) {
    case LsigKind::Id:
      return {0, 0, nil()};
    case LsigKind::Shift:
      return {0, 1, nil()};
    case LsigKind::Cons: {
      EnvTriple t = lsig_subst_to_triple(subst->c1);
      return {checked_add(t.ol, 1), t.nl, cons(lsig_to_susp(subst->c0), t.nl, t.env)};
    }
    case LsigKind::Comp: {
      EnvTriple a = lsig_subst_to_triple(subst->c0);
      if (subst->c1->kind == LsigKind::Shift) return {a.ol, checked_add(a.nl, 1), a.env};
      EnvTriple b = lsig_subst_to_triple(subst->c1);
      return {checked_add(a.ol, monus(b.ol, a.nl)), checked_add(b.nl, monus(a.nl, b.ol)),
              merge(a.env, a.nl, b.ol, b.env)};
    }
    default:
      throw Error("lsig_subst_to_triple: substitution expected");
  }
}

}  // namespace susp::lsig
