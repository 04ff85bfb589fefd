#include "susp/order.hpp"

#include <map>
#include <sstream>
#include <unordered_map>

namespace susp {

namespace {

MPtr make_m(MKind k, Nat i, MPtr a, MPtr b) {
  auto m = std::make_shared<MTerm>();
  m->kind = k;
  m->s_index = i;
  m->c0 = std::move(a);
  m->c1 = std::move(b);
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::size_t>(k));
  mix(static_cast<std::size_t>(i));
  if (m->c0) mix(m->c0->hash);
  if (m->c1) mix(m->c1->hash);
  m->hash = h;
  return m;
}

}  // namespace

MPtr m_star() {
  static const MPtr s = make_m(MKind::Star, 0, nullptr, nullptr);
  return s;
}
MPtr m_lam(MPtr a) { return make_m(MKind::Lam, 0, std::move(a), nullptr); }
MPtr m_app(MPtr a, MPtr b) { return make_m(MKind::App, 0, std::move(a), std::move(b)); }
MPtr m_cons(MPtr a, MPtr b) { return make_m(MKind::Cons, 0, std::move(a), std::move(b)); }

MPtr m_s(Nat i, MPtr a, MPtr b) {
  if (i < 1) throw Error("s_i subscript must be >= 1");
  return make_m(MKind::S, i, std::move(a), std::move(b));
}

bool mterm_equal(const MPtr& a, const MPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash) return false;
  if (a->kind != b->kind || a->s_index != b->s_index) return false;
  if ((a->c0 == nullptr) != (b->c0 == nullptr)) return false;
  if (a->c0 && !mterm_equal(a->c0, b->c0)) return false;
  if ((a->c1 == nullptr) != (b->c1 == nullptr)) return false;
  if (a->c1 && !mterm_equal(a->c1, b->c1)) return false;
  return true;
}

std::string mterm_to_string(const MPtr& x) {
  std::ostringstream os;
  switch (x->kind) {
    case MKind::Star:
      os << "*";
      break;
    case MKind::Lam:
      os << "lam(" << mterm_to_string(x->c0) << ")";
      break;
    case MKind::App:
      os << "app(" << mterm_to_string(x->c0) << ", " << mterm_to_string(x->c1) << ")";
      break;
    case MKind::Cons:
      os << "cons(" << mterm_to_string(x->c0) << ", " << mterm_to_string(x->c1) << ")";
      break;
    case MKind::S:
      os << "s_" << x->s_index << "(" << mterm_to_string(x->c0) << ", " << mterm_to_string(x->c1)
         << ")";
      break;
  }
  return os.str();
}

Nat mu(const Ptr& x) {
  switch (x->kind) {
    case Kind::Const:
    case Kind::Meta:
    case Kind::Index:
    case Kind::Nil:
      return 0;
    case Kind::Abs:
      return mu(x->c0);
    case Kind::App:
    case Kind::Cons:
      return std::max(mu(x->c0), mu(x->c1));
    case Kind::Susp:
    case Kind::Merge:
      return checked_add(checked_add(mu(x->c0), mu(x->c1)), 1);
  }
  return 0;
}

Nat eta(const Ptr& x, Nat i) {
  switch (x->kind) {
    case Kind::Const:
    case Kind::Meta:
    case Kind::Index:
      return 1;
    case Kind::Nil:
      return 1;
    case Kind::Abs:
      return checked_add(eta(x->c0, i), 1);
    case Kind::App:
      return checked_add(std::max(eta(x->c0, i), eta(x->c1, i)), 1);
    case Kind::Cons:
      return std::max(eta(x->c0, i), eta(x->c1, i));
    case Kind::Susp: {
      Nat left = eta(x->c0, checked_add(i, 1));
      Nat right = eta(x->c1, checked_add(checked_add(i, 1), mu(x->c0)));
      return checked_add(checked_add(left, right), 1);
    }
    case Kind::Merge: {
      Nat left = eta(x->c0, checked_add(i, 1));
      // a nil right part weighs nothing: pruning it away (rule m2) and
      // composing with it (rule m1) must both be oriented
      Nat right = x->c1->kind == Kind::Nil
                      ? 0
                      : eta(x->c1, checked_add(checked_add(i, 1), mu(x->c0)));
      return checked_add(checked_add(left, right), 1);
    }
  }
  return 0;
}

namespace {

// The eta measures do not depend on their subscript (every base clause is a
// constant), so a single cached value per node serves all of them.
struct MeasureCache {
  std::unordered_map<const Expr*, Nat> mu, eta;
};

Nat mu_cached(const Ptr& x, MeasureCache& cache) {
  auto it = cache.mu.find(x.get());
  if (it != cache.mu.end()) return it->second;
  Nat value;
  switch (x->kind) {
    case Kind::Const:
    case Kind::Meta:
    case Kind::Index:
    case Kind::Nil:
      value = 0;
      break;
    case Kind::Abs:
      value = mu_cached(x->c0, cache);
      break;
    case Kind::App:
    case Kind::Cons:
      value = std::max(mu_cached(x->c0, cache), mu_cached(x->c1, cache));
      break;
    default:
      value = checked_add(checked_add(mu_cached(x->c0, cache), mu_cached(x->c1, cache)), 1);
      break;
  }
  cache.mu.emplace(x.get(), value);
  return value;
}

Nat eta_cached(const Ptr& x, MeasureCache& cache) {
  auto it = cache.eta.find(x.get());
  if (it != cache.eta.end()) return it->second;
  Nat value;
  switch (x->kind) {
    case Kind::Const:
    case Kind::Meta:
    case Kind::Index:
    case Kind::Nil:
      value = 1;
      break;
    case Kind::Abs:
      value = checked_add(eta_cached(x->c0, cache), 1);
      break;
    case Kind::App:
      value = checked_add(std::max(eta_cached(x->c0, cache), eta_cached(x->c1, cache)), 1);
      break;
    case Kind::Cons:
      value = std::max(eta_cached(x->c0, cache), eta_cached(x->c1, cache));
      break;
    case Kind::Merge:
      value = checked_add(
          checked_add(eta_cached(x->c0, cache),
                      x->c1->kind == Kind::Nil ? 0 : eta_cached(x->c1, cache)),
          1);
      break;
    default:
      value = checked_add(checked_add(eta_cached(x->c0, cache), eta_cached(x->c1, cache)), 1);
      break;
  }
  cache.eta.emplace(x.get(), value);
  return value;
}

// The s subscript separates the three node classes: renumbering suspensions
// (nil environment, weakest), suspensions over real environments, and
// merged environments (strongest). Each reading or merging rule then either
// lowers the subscript or keeps it while descending lexicographically.
Nat essence_subscript(const Ptr& x, MeasureCache& cache) {
  Nat h = eta_cached(x, cache);
  Nat base = checked_add(checked_add(h, h), h);
  if (x->kind == Kind::Merge) return checked_add(base, 2);
  return x->c1->kind == Kind::Nil ? base : checked_add(base, 1);
}

MPtr essence_cached(const Ptr& x, MeasureCache& cache) {
  switch (x->kind) {
    case Kind::Const:
    case Kind::Meta:
    case Kind::Index:
    case Kind::Nil:
      return m_star();
    case Kind::Abs:
      return m_lam(essence_cached(x->c0, cache));
    case Kind::App:
      return m_app(essence_cached(x->c0, cache), essence_cached(x->c1, cache));
    case Kind::Cons:
      return m_cons(essence_cached(x->c0, cache), essence_cached(x->c1, cache));
    case Kind::Susp:
    case Kind::Merge:
      return m_s(essence_subscript(x, cache), essence_cached(x->c0, cache),
                 essence_cached(x->c1, cache));
  }
  return m_star();
}

}  // namespace

MPtr essence(const Ptr& x) {
  MeasureCache cache;
  return essence_cached(x, cache);
}

namespace {

// Head precedence: s_i above everything, s_i above s_j iff i > j; the
// remaining symbols are mutually incomparable.
bool head_gt(const MPtr& a, const MPtr& b) {
  if (a->kind == MKind::S) return b->kind != MKind::S || a->s_index > b->s_index;
  return false;
}

bool head_eq(const MPtr& a, const MPtr& b) {
  return a->kind == b->kind && (a->kind != MKind::S || a->s_index == b->s_index);
}

unsigned arity(const MPtr& x) {
  switch (x->kind) {
    case MKind::Star:
      return 0;
    case MKind::Lam:
      return 1;
    default:
      return 2;
  }
}

MPtr marg(const MPtr& x, unsigned i) { return i == 0 ? x->c0 : x->c1; }

struct PairHash {
  std::size_t operator()(const std::pair<const MTerm*, const MTerm*>& p) const {
    return std::hash<const MTerm*>()(p.first) * 31 ^ std::hash<const MTerm*>()(p.second);
  }
};

using Memo = std::unordered_map<std::pair<const MTerm*, const MTerm*>, bool, PairHash>;

bool gt(const MPtr& a, const MPtr& b, Memo& memo);

bool dominates_args(const MPtr& a, const MPtr& b, Memo& memo) {
  unsigned n = arity(b);
  for (unsigned i = 0; i < n; ++i)
    if (!gt(a, marg(b, i), memo)) return false;
  return true;
}

bool lex_gt(const MPtr& a, const MPtr& b, Memo& memo) {
  unsigned n = arity(a);
  for (unsigned i = 0; i < n; ++i) {
    const MPtr& x = marg(a, i);
    const MPtr& y = marg(b, i);
    if (mterm_equal(x, y)) continue;
    return gt(x, y, memo);
  }
  return false;
}

bool gt(const MPtr& a, const MPtr& b, Memo& memo) {
  auto key = std::make_pair(a.get(), b.get());
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool result = false;
  if (head_eq(a, b)) {
    result = lex_gt(a, b, memo) && dominates_args(a, b, memo);
  }
  if (!result && head_gt(a, b)) {
    result = dominates_args(a, b, memo);
  }
  if (!result) {
    unsigned n = arity(a);
    for (unsigned i = 0; i < n && !result; ++i) {
      const MPtr& sub = marg(a, i);
      result = mterm_equal(sub, b) || gt(sub, b, memo);
    }
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace

bool rpo_gt(const MPtr& a, const MPtr& b) {
  Memo memo;
  return gt(a, b, memo);
}

DecreaseReport check_step_decrease(const Ptr& before, const Ptr& after, Nat k) {
  DecreaseReport report;
  MeasureCache cache;
  report.essence_decreases =
      rpo_gt(essence_cached(before, cache), essence_cached(after, cache));
  report.mu_nonincreasing = mu_cached(before, cache) >= mu_cached(after, cache);
  // eta is uniform in its subscript; one comparison settles all of 0..k
  (void)k;
  report.eta_nonincreasing = eta_cached(before, cache) >= eta_cached(after, cache);
  return report;
}

}  // namespace susp
