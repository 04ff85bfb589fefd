#include "susp/oracle.hpp"

#include <deque>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace susp::db {

namespace {

DbPtr make_d(DbKind k, std::string name, Nat i, DbPtr c0, DbPtr c1) {
  auto t = std::make_shared<DbTerm>();
  t->kind = k;
  t->name = std::move(name);
  t->i = i;
  t->c0 = std::move(c0);
  t->c1 = std::move(c1);
  return t;
}

}  // namespace

DbPtr d_const(std::string name) { return make_d(DbKind::Const, std::move(name), 0, nullptr, nullptr); }

DbPtr d_index(Nat i) {
  if (i < 1) throw Error("de Bruijn index must be >= 1");
  return make_d(DbKind::Index, "", i, nullptr, nullptr);
}

DbPtr d_app(DbPtr fn, DbPtr arg) { return make_d(DbKind::App, "", 0, std::move(fn), std::move(arg)); }
DbPtr d_abs(DbPtr body) { return make_d(DbKind::Abs, "", 0, std::move(body), nullptr); }

bool db_equal(const DbPtr& a, const DbPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind || a->i != b->i || a->name != b->name) return false;
  if (a->c0 && !db_equal(a->c0, b->c0)) return false;
  if (a->c1 && !db_equal(a->c1, b->c1)) return false;
  return true;
}

std::string db_to_string(const DbPtr& t) {
  std::ostringstream os;
  switch (t->kind) {
    case DbKind::Const:
      os << t->name;
      break;
    case DbKind::Index:
      os << "#" << t->i;
      break;
    case DbKind::Abs:
      os << "\\ " << db_to_string(t->c0);
      break;
    case DbKind::App: {
      bool pf = t->c0->kind == DbKind::Abs;
      bool pa = t->c1->kind == DbKind::App || t->c1->kind == DbKind::Abs;
      os << (pf ? "(" : "") << db_to_string(t->c0) << (pf ? ")" : "") << " " << (pa ? "(" : "")
         << db_to_string(t->c1) << (pa ? ")" : "");
      break;
    }
  }
  return os.str();
}

namespace {

DbPtr subst_index(Nat i, const DbSubst& s) {
  if (i <= s.explicit_terms.size()) return s.explicit_terms[i - 1];
  std::int64_t j = static_cast<std::int64_t>(i - s.explicit_terms.size()) + s.tail_shift;
  if (j < 1) throw Error("substitution produced a non-positive index");
  return d_index(static_cast<Nat>(j));
}

// The shifted substitution used under an abstraction: #1 stays, every
// explicit entry is renumbered by (#2, #3, ...), the tail shift grows.
DbSubst lift(const DbSubst& s) {
  DbSubst up;
  up.tail_shift = 1;
  DbSubst lifted;
  lifted.explicit_terms.reserve(s.explicit_terms.size() + 1);
  lifted.explicit_terms.push_back(d_index(1));
  for (const DbPtr& t : s.explicit_terms) lifted.explicit_terms.push_back(db_subst(t, up));
  lifted.tail_shift = s.tail_shift + 1;
  return lifted;
}

}  // namespace

DbPtr db_subst(const DbPtr& t, const DbSubst& s) {
  switch (t->kind) {
    case DbKind::Const:
      return t;
    case DbKind::Index:
      return subst_index(t->i, s);
    case DbKind::App:
      return d_app(db_subst(t->c0, s), db_subst(t->c1, s));
    case DbKind::Abs:
      return d_abs(db_subst(t->c0, lift(s)));
  }
  return t;
}

namespace {

DbPtr contract(const DbPtr& redex) {
  if (redex->kind != DbKind::App || redex->c0->kind != DbKind::Abs)
    throw Error("db_beta_step: addressed subterm is not a beta redex");
  DbSubst s;
  s.explicit_terms.push_back(redex->c1);
  s.tail_shift = 0;
  return db_subst(redex->c0->c0, s);
}

DbPtr db_replace(const DbPtr& t, const Path& at, std::size_t k, const DbPtr& sub) {
  if (k == at.size()) return sub;
  unsigned sel = at[k];
  if (t->kind == DbKind::Abs && sel == 0) return d_abs(db_replace(t->c0, at, k + 1, sub));
  if (t->kind == DbKind::App && sel == 0) return d_app(db_replace(t->c0, at, k + 1, sub), t->c1);
  if (t->kind == DbKind::App && sel == 1) return d_app(t->c0, db_replace(t->c1, at, k + 1, sub));
  throw IndexError("invalid path into de Bruijn term");
}

DbPtr db_at(const DbPtr& t, const Path& at) {
  DbPtr cur = t;
  for (unsigned sel : at) {
    if (cur->kind == DbKind::Abs && sel == 0)
      cur = cur->c0;
    else if (cur->kind == DbKind::App && sel <= 1)
      cur = sel == 0 ? cur->c0 : cur->c1;
    else
      throw IndexError("invalid path into de Bruijn term");
  }
  return cur;
}

bool find_lo_redex(const DbPtr& t, Path& at) {
  if (t->kind == DbKind::App && t->c0->kind == DbKind::Abs) return true;
  if (t->kind == DbKind::Abs) {
    at.push_back(0);
    if (find_lo_redex(t->c0, at)) return true;
    at.pop_back();
    return false;
  }
  if (t->kind == DbKind::App) {
    at.push_back(0);
    if (find_lo_redex(t->c0, at)) return true;
    at.back() = 1;
    if (find_lo_redex(t->c1, at)) return true;
    at.pop_back();
  }
  return false;
}

}  // namespace

DbPtr db_beta_step(const DbPtr& t, const Path& at) { return db_replace(t, at, 0, contract(db_at(t, at))); }

DbResult db_normalize(const DbPtr& t, Nat fuel) {
  DbResult r;
  r.term = t;
  for (;;) {
    Path at;
    if (!find_lo_redex(r.term, at)) {
      r.status = DbStatus::NormalForm;
      return r;
    }
    if (r.steps >= fuel) {
      r.status = DbStatus::FuelExhausted;
      return r;
    }
    r.term = db_beta_step(r.term, at);
    ++r.steps;
  }
}

Ptr to_susp(const DbPtr& t) {
  switch (t->kind) {
    case DbKind::Const:
      return constant(t->name);
    case DbKind::Index:
      return index(t->i);
    case DbKind::App:
      return app(to_susp(t->c0), to_susp(t->c1));
    case DbKind::Abs:
      return abs(to_susp(t->c0));
  }
  throw Error("to_susp: unreachable");
}

DbPtr from_susp(const Ptr& t) {
  switch (t->kind) {
    case Kind::Const:
      return d_const(t->name);
    case Kind::Index:
      return d_index(t->n0);
    case Kind::App:
      return d_app(from_susp(t->c0), from_susp(t->c1));
    case Kind::Abs:
      return d_abs(from_susp(t->c0));
    default:
      throw Error("from_susp: term is not in de Bruijn form");
  }
}

std::vector<DbPtr> db_successors(const DbPtr& t) {
  std::vector<DbPtr> out;
  std::vector<std::pair<DbPtr, Path>> stack{{t, {}}};
  while (!stack.empty()) {
    auto [cur, at] = stack.back();
    stack.pop_back();
    if (cur->kind == DbKind::App && cur->c0->kind == DbKind::Abs)
      out.push_back(db_replace(t, at, 0, contract(cur)));
    if (cur->kind == DbKind::Abs || cur->kind == DbKind::App) {
      Path p0 = at;
      p0.push_back(0);
      stack.push_back({cur->c0, p0});
      if (cur->kind == DbKind::App) {
        Path p1 = at;
        p1.push_back(1);
        stack.push_back({cur->c1, p1});
      }
    }
  }
  return out;
}

bool db_reduces_to(const DbPtr& from, const DbPtr& to, std::size_t cap) {
  struct Hash {
    std::size_t operator()(const DbPtr& t) const { return std::hash<std::string>()(db_to_string(t)); }
  };
  struct Eq {
    bool operator()(const DbPtr& a, const DbPtr& b) const { return db_equal(a, b); }
  };
  std::unordered_set<DbPtr, Hash, Eq> seen{from};
  std::deque<DbPtr> frontier{from};
  while (!frontier.empty() && seen.size() < cap) {
    DbPtr cur = frontier.front();
    frontier.pop_front();
    if (db_equal(cur, to)) return true;
    for (const DbPtr& next : db_successors(cur)) {
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return false;
}

}  // namespace susp::db

namespace susp {

namespace {

// The special cons rule of the similarity relation: both items are
// suspensions with a common ol whose indices exceed their new embedding
// levels by the same amount.
bool similar_displaced_items(const Ptr& a, const Ptr& b);

bool sim(const Ptr& a, const Ptr& b) {
  if (equal(a, b)) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::App:
      return sim(a->c0, b->c0) && sim(a->c1, b->c1);
    case Kind::Abs:
      return sim(a->c0, b->c0);
    case Kind::Susp:
      return a->n0 == b->n0 && a->n1 == b->n1 && sim(a->c0, b->c0) && sim(a->c1, b->c1);
    case Kind::Merge:
      return a->n0 == b->n0 && a->n1 == b->n1 && sim(a->c0, b->c0) && sim(a->c1, b->c1);
    case Kind::Cons:
      if (similar_displaced_items(a, b) && sim(a->c1, b->c1)) return true;
      return a->n0 == b->n0 && sim(a->c0, b->c0) && sim(a->c1, b->c1);
    default:
      return false;  // distinct constants, meta variables or indices
  }
}

bool similar_displaced_items(const Ptr& a, const Ptr& b) {
  const Ptr& ta = a->c0;
  const Ptr& tb = b->c0;
  if (ta->kind != Kind::Susp || tb->kind != Kind::Susp) return false;
  if (ta->n0 != tb->n0) return false;            // common ol
  if (a->n0 < ta->n1 || b->n0 < tb->n1) return false;
  if (a->n0 - ta->n1 != b->n0 - tb->n1) return false;  // common k
  return sim(ta->c0, tb->c0) && sim(ta->c1, tb->c1);
}

}  // namespace

bool similar(const Ptr& a, const Ptr& b) {
  if (is_term(a) != is_term(b)) throw Error("similar: category mismatch");
  return sim(a, b);
}

namespace {

void product_into(std::vector<Ptr>& out, const std::vector<Ptr>& ls, const std::vector<Ptr>& rs,
                  const std::function<Ptr(const Ptr&, const Ptr&)>& mk) {
  for (const Ptr& l : ls)
    for (const Ptr& r : rs) out.push_back(mk(l, r));
}

std::vector<Ptr> par_succ(const Ptr& x) {
  std::vector<Ptr> out;
  switch (x->kind) {
    case Kind::Const:
    case Kind::Meta:
    case Kind::Index:
    case Kind::Nil:
      out.push_back(x);
      return out;
    case Kind::Abs:
      for (const Ptr& b : par_succ(x->c0)) out.push_back(abs(b));
      return out;
    case Kind::App: {
      auto fs = par_succ(x->c0);
      auto as = par_succ(x->c1);
      product_into(out, fs, as, [](const Ptr& f, const Ptr& a) { return app(f, a); });
      if (x->c0->kind == Kind::Abs) {
        auto bodies = par_succ(x->c0->c0);
        product_into(out, bodies, as,
                     [](const Ptr& b, const Ptr& a) { return suspend(b, 1, 0, cons(a, 0, nil())); });
      }
      return out;
    }
    case Kind::Susp: {
      auto ts = par_succ(x->c0);
      auto es = par_succ(x->c1);
      Nat ol = x->n0, nl = x->n1;
      product_into(out, ts, es, [ol, nl](const Ptr& t, const Ptr& e) { return suspend(t, ol, nl, e); });
      return out;
    }
    case Kind::Cons: {
      auto ts = par_succ(x->c0);
      auto es = par_succ(x->c1);
      Nat l = x->n0;
      product_into(out, ts, es, [l](const Ptr& t, const Ptr& e) { return cons(t, l, e); });
      return out;
    }
    case Kind::Merge: {
      auto as = par_succ(x->c0);
      auto bs = par_succ(x->c1);
      Nat nl1 = x->n0, ol2 = x->n1;
      product_into(out, as, bs,
                   [nl1, ol2](const Ptr& a, const Ptr& b) { return merge(a, nl1, ol2, b); });
      return out;
    }
  }
  return out;
}

bool par_rel(const Ptr& a, const Ptr& b) {
  if (equal(a, b)) return true;
  if (a->kind == b->kind) {
    switch (a->kind) {
      case Kind::Abs:
        return par_rel(a->c0, b->c0);
      case Kind::App:
        if (par_rel(a->c0, b->c0) && par_rel(a->c1, b->c1)) return true;
        break;
      case Kind::Susp:
      case Kind::Merge:
        if (a->n0 == b->n0 && a->n1 == b->n1 && par_rel(a->c0, b->c0) && par_rel(a->c1, b->c1))
          return true;
        break;
      case Kind::Cons:
        if (a->n0 == b->n0 && par_rel(a->c0, b->c0) && par_rel(a->c1, b->c1)) return true;
        break;
      default:
        break;
    }
  }
  // the contraction rule: (\ t1) t2 steps to [t1', 1, 0, (t2', 0) :: nil]
  if (a->kind == Kind::App && a->c0->kind == Kind::Abs && b->kind == Kind::Susp && b->n0 == 1 &&
      b->n1 == 0 && b->c1->kind == Kind::Cons && b->c1->n0 == 0 && b->c1->c1->kind == Kind::Nil) {
    return par_rel(a->c0->c0, b->c0) && par_rel(a->c1, b->c1->c0);
  }
  return false;
}

}  // namespace

std::vector<Ptr> par_successors(const Ptr& x) {
  std::vector<Ptr> all = par_succ(x);
  std::vector<Ptr> out;
  std::unordered_set<Ptr, ExprHash, ExprEq> seen;
  for (const Ptr& s : all)
    if (seen.insert(s).second) out.push_back(s);
  return out;
}

bool par_related(const Ptr& a, const Ptr& b) { return par_rel(a, b); }

Ptr full_development(const Ptr& x) {
  switch (x->kind) {
    case Kind::Const:
    case Kind::Meta:
    case Kind::Index:
    case Kind::Nil:
      return x;
    case Kind::Abs:
      return abs(full_development(x->c0));
    case Kind::App: {
      Ptr arg = full_development(x->c1);
      if (x->c0->kind == Kind::Abs)
        return suspend(full_development(x->c0->c0), 1, 0, cons(arg, 0, nil()));
      return app(full_development(x->c0), arg);
    }
    case Kind::Susp:
      return suspend(full_development(x->c0), x->n0, x->n1, full_development(x->c1));
    case Kind::Cons:
      return cons(full_development(x->c0), x->n0, full_development(x->c1));
    case Kind::Merge:
      return merge(full_development(x->c0), x->n0, x->n1, full_development(x->c1));
  }
  return x;
}

}  // namespace susp
