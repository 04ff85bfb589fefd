#include "susp/core.hpp"

#include <limits>
#include <sstream>

namespace susp {

Nat monus(Nat a, Nat b) { return a > b ? a - b : 0; }

Nat checked_add(Nat a, Nat b) {
  if (a > std::numeric_limits<Nat>::max() - b) throw ArithmeticError("natural overflow");
  return a + b;
}

Nat checked_sub(Nat a, Nat b) {
  if (a < b) {
    std::ostringstream os;
    os << "natural underflow: " << a << " - " << b;
    throw ArithmeticError(os.str());
  }
  return a - b;
}

namespace {

Ptr make(Kind k, std::string name, Nat n0, Nat n1, Ptr c0, Ptr c1) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->name = std::move(name);
  e->n0 = n0;
  e->n1 = n1;
  e->c0 = std::move(c0);
  e->c1 = std::move(c1);
  return e;
}

void require_term(const Ptr& x, const char* where) {
  if (!x || !is_term(x)) throw Error(std::string(where) + ": term expected");
}

void require_env(const Ptr& x, const char* where) {
  if (!x || !is_env(x)) throw Error(std::string(where) + ": environment expected");
}

}  // namespace

Ptr constant(std::string name) { return make(Kind::Const, std::move(name), 0, 0, nullptr, nullptr); }
Ptr metavar(std::string name) { return make(Kind::Meta, std::move(name), 0, 0, nullptr, nullptr); }

Ptr index(Nat i) {
  if (i < 1) throw Error("de Bruijn index must be >= 1");
  return make(Kind::Index, "", i, 0, nullptr, nullptr);
}

Ptr app(Ptr fn, Ptr arg) {
  require_term(fn, "app");
  require_term(arg, "app");
  return make(Kind::App, "", 0, 0, std::move(fn), std::move(arg));
}

Ptr abs(Ptr body) {
  require_term(body, "abs");
  return make(Kind::Abs, "", 0, 0, std::move(body), nullptr);
}

Ptr suspend(Ptr term, Nat ol, Nat nl, Ptr env) {
  require_term(term, "susp");
  require_env(env, "susp");
  return make(Kind::Susp, "", ol, nl, std::move(term), std::move(env));
}

Ptr nil() {
  static const Ptr n = make(Kind::Nil, "", 0, 0, nullptr, nullptr);
  return n;
}

Ptr cons(Ptr term, Nat level, Ptr rest) {
  require_term(term, "cons");
  require_env(rest, "cons");
  return make(Kind::Cons, "", level, 0, std::move(term), std::move(rest));
}

Ptr merge(Ptr e1, Nat nl1, Nat ol2, Ptr e2) {
  require_env(e1, "merge");
  require_env(e2, "merge");
  return make(Kind::Merge, "", nl1, ol2, std::move(e1), std::move(e2));
}

bool is_term(const Ptr& x) {
  switch (x->kind) {
    case Kind::Const:
    case Kind::Meta:
    case Kind::Index:
    case Kind::App:
    case Kind::Abs:
    case Kind::Susp:
      return true;
    default:
      return false;
  }
}

bool is_env(const Ptr& x) {
  switch (x->kind) {
    case Kind::Nil:
    case Kind::Cons:
    case Kind::Merge:
      return true;
    default:
      return false;
  }
}

bool equal(const Ptr& a, const Ptr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind || a->n0 != b->n0 || a->n1 != b->n1 || a->name != b->name) return false;
  unsigned n = child_count(a);
  for (unsigned i = 0; i < n; ++i)
    if (!equal(child(a, i), child(b, i))) return false;
  return true;
}

std::size_t hash_expr(const Ptr& x) {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::size_t>(x->kind));
  mix(static_cast<std::size_t>(x->n0));
  mix(static_cast<std::size_t>(x->n1));
  for (char c : x->name) mix(static_cast<unsigned char>(c));
  unsigned n = child_count(x);
  for (unsigned i = 0; i < n; ++i) mix(hash_expr(child(x, i)));
  return h;
}

bool contains_metavar(const Ptr& x) {
  if (x->kind == Kind::Meta) return true;
  unsigned n = child_count(x);
  for (unsigned i = 0; i < n; ++i)
    if (contains_metavar(child(x, i))) return true;
  return false;
}

bool contains_constant(const Ptr& x) {
  if (x->kind == Kind::Const) return true;
  unsigned n = child_count(x);
  for (unsigned i = 0; i < n; ++i)
    if (contains_constant(child(x, i))) return true;
  return false;
}

bool contains(const Ptr& x, const Ptr& sub) {
  if (equal(x, sub)) return true;
  unsigned n = child_count(x);
  for (unsigned i = 0; i < n; ++i)
    if (contains(child(x, i), sub)) return true;
  return false;
}

std::size_t node_count(const Ptr& x) {
  std::size_t n = 1;
  unsigned c = child_count(x);
  for (unsigned i = 0; i < c; ++i) n += node_count(child(x, i));
  return n;
}

Nat len(const Ptr& env) {
  switch (env->kind) {
    case Kind::Nil:
      return 0;
    case Kind::Cons:
      return checked_add(1, len(env->c1));
    case Kind::Merge:
      return checked_add(len(env->c0), monus(len(env->c1), env->n0));
    default:
      throw Error("len: environment expected");
  }
}

Nat lev(const Ptr& env) {
  switch (env->kind) {
    case Kind::Nil:
      return 0;
    case Kind::Cons:
      return env->n0;
    case Kind::Merge:
      return checked_add(lev(env->c1), monus(env->n0, env->n1));
    default:
      throw Error("lev: environment expected");
  }
}

Nat ind(const Ptr& env, Nat i) {
  switch (env->kind) {
    case Kind::Nil:
      return 0;
    case Kind::Cons:
      return i == 0 ? env->n0 : ind(env->c1, i - 1);
    case Kind::Merge: {
      const Nat nl = env->n0, ol = env->n1;
      const Nat m = monus(nl, ind(env->c0, i));
      const Nat l = len(env->c0);
      if (i < l && len(env->c1) > m) return checked_add(ind(env->c1, m), monus(nl, ol));
      if (i < l) return ind(env->c0, i);
      return ind(env->c1, checked_add(checked_sub(i, l), nl));
    }
    default:
      throw Error("ind: environment expected");
  }
}

unsigned child_count(const Ptr& x) {
  switch (x->kind) {
    case Kind::Const:
    case Kind::Meta:
    case Kind::Index:
    case Kind::Nil:
      return 0;
    case Kind::Abs:
      return 1;
    default:
      return 2;
  }
}

Ptr child(const Ptr& x, unsigned i) {
  if (i >= child_count(x)) throw IndexError("child selector out of range");
  return i == 0 ? x->c0 : x->c1;
}

Ptr subexpr(const Ptr& x, const Path& at) {
  Ptr cur = x;
  for (auto sel : at) cur = child(cur, sel);
  return cur;
}

Ptr replace(const Ptr& x, const Path& at, Ptr sub) {
  if (at.empty()) return sub;
  Path rest(at.begin() + 1, at.end());
  unsigned sel = at.front();
  if (sel >= child_count(x)) throw IndexError("child selector out of range");
  Ptr c0 = x->c0, c1 = x->c1;
  if (sel == 0)
    c0 = replace(x->c0, rest, std::move(sub));
  else
    c1 = replace(x->c1, rest, std::move(sub));
  auto e = std::make_shared<Expr>(*x);
  e->c0 = std::move(c0);
  e->c1 = std::move(c1);
  return e;
}

std::string path_to_string(const Path& at) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < at.size(); ++i) {
    if (i) os << ",";
    os << at[i];
  }
  os << "]";
  return os.str();
}

namespace {

void check_wf(const Ptr& x, Path& at, WfReport& report) {
  switch (x->kind) {
    case Kind::Susp: {
      const Nat l = len(x->c1), v = lev(x->c1);
      if (l != x->n0) {
        std::ostringstream os;
        os << "len(e) = " << l << " but ol = " << x->n0;
        report.violations.push_back({at, 1, os.str()});
      }
      if (v > x->n1) {
        std::ostringstream os;
        os << "lev(e) = " << v << " exceeds nl = " << x->n1;
        report.violations.push_back({at, 1, os.str()});
      }
      break;
    }
    case Kind::Cons: {
      const Nat v = lev(x->c1);
      if (x->n0 < v) {
        std::ostringstream os;
        os << "item index " << x->n0 << " below lev(rest) = " << v;
        report.violations.push_back({at, 2, os.str()});
      }
      break;
    }
    case Kind::Merge: {
      const Nat v = lev(x->c0), l = len(x->c1);
      if (v > x->n0) {
        std::ostringstream os;
        os << "lev(e1) = " << v << " exceeds nl1 = " << x->n0;
        report.violations.push_back({at, 3, os.str()});
      }
      if (l != x->n1) {
        std::ostringstream os;
        os << "len(e2) = " << l << " but ol2 = " << x->n1;
        report.violations.push_back({at, 3, os.str()});
      }
      break;
    }
    default:
      break;
  }
  unsigned n = child_count(x);
  for (unsigned i = 0; i < n; ++i) {
    at.push_back(i);
    check_wf(child(x, i), at, report);
    at.pop_back();
  }
}

}  // namespace

WfReport check_well_formed(const Ptr& x) {
  WfReport report;
  Path at;
  check_wf(x, at, report);
  return report;
}

EnvItem env_item_at(const Ptr& simple_env, Nat i) {
  Ptr cur = simple_env;
  for (;;) {
    if (cur->kind == Kind::Nil) throw IndexError("environment index out of range");
    if (cur->kind != Kind::Cons) throw Error("env_item_at: simple environment expected");
    if (i == 0) return {cur->c0, cur->n0};
    --i;
    cur = cur->c1;
  }
}

Ptr env_drop(const Ptr& simple_env, Nat i) {
  Ptr cur = simple_env;
  while (i > 0 && cur->kind == Kind::Cons) {
    cur = cur->c1;
    --i;
  }
  if (cur->kind == Kind::Merge) throw Error("env_drop: simple environment expected");
  return i == 0 ? cur : nil();
}

bool is_simple(const Ptr& env) {
  Ptr cur = env;
  while (cur->kind == Kind::Cons) cur = cur->c1;
  return cur->kind == Kind::Nil;
}

bool is_debruijn(const Ptr& term) {
  if (term->kind == Kind::Susp) return false;
  unsigned n = child_count(term);
  for (unsigned i = 0; i < n; ++i)
    if (!is_debruijn(child(term, i))) return false;
  return true;
}

}  // namespace susp
