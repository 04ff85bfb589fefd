#include "susp/generate.hpp"

#include <algorithm>
#include <vector>

namespace susp {

namespace {

const char* kConstNames[] = {"a", "b", "c", "d", "f", "g"};
const char* kMetaNames[] = {"X", "Y", "Z", "W"};

struct SuspGen {
  Rng& rng;
  const GenConfig& cfg;
  std::int64_t budget;

  Ptr leaf() {
    std::vector<int> kinds{0};  // index always available
    if (cfg.allow_constants) kinds.push_back(1);
    if (cfg.allow_metavars) kinds.push_back(2);
    switch (kinds[rng.below(kinds.size())]) {
      case 1:
        return constant(kConstNames[rng.below(std::size(kConstNames))]);
      case 2:
        return metavar(kMetaNames[rng.below(std::size(kMetaNames))]);
      default:
        return index(rng.range(1, std::max<Nat>(cfg.max_level, 1)));
    }
  }

  Nat size_cap(Nat divisor) const {
    return budget > 0 ? Nat(budget) / divisor : 0;
  }

  Ptr term() {
    --budget;
    if (budget <= 2) return leaf();
    switch (rng.below(9)) {
      case 0:
      case 1:
        return leaf();
      case 2:
      case 3:
      case 4:
        return app(term(), term());
      case 5:
      case 6:
        return abs(term());
      default: {
        Nat nl = rng.below(cfg.max_level + 1);
        Nat ol = rng.below(std::min<Nat>(cfg.max_level, size_cap(4)) + 1);
        Ptr e = env(ol, nl);
        return suspend(term(), ol, nl, e);
      }
    }
  }

  // Environment with len = target and lev <= max_lev.
  Ptr env(Nat target_len, Nat max_lev) {
    --budget;
    if (target_len == 0) {
      if (budget > 8 && rng.chance(1, 5)) {
        // zero-length merge: needs ol2 <= nl1 and nl1 - ol2 <= max_lev
        Nat nl1 = rng.below(cfg.max_level + 1);
        Nat lo = monus(nl1, max_lev);
        Nat hi = std::min(nl1, checked_add(lo, size_cap(3)));
        if (lo <= hi) {
          Nat ol2 = rng.range(lo, hi);
          return merge(env(0, nl1), nl1, ol2, env(ol2, monus(max_lev, monus(nl1, ol2))));
        }
      }
      return nil();
    }
    if (budget > 8 && rng.chance(1, 4)) {
      Nat nl1 = rng.below(cfg.max_level + 1);
      Nat lo = monus(nl1, max_lev);
      Nat hi = std::min<Nat>(checked_add(nl1, target_len), checked_add(lo, size_cap(3)));
      if (lo <= hi) {
        Nat ol2 = rng.range(lo, hi);
        Nat len1 = target_len - monus(ol2, nl1);
        return merge(env(len1, nl1), nl1, ol2, env(ol2, monus(max_lev, monus(nl1, ol2))));
      }
    }
    Nat l = rng.below(max_lev + 1);
    Ptr rest = env(target_len - 1, l);
    return cons(term(), l, rest);
  }
};

}  // namespace

namespace {

std::int64_t scaled_budget(Nat max_size) {
  return static_cast<std::int64_t>(max_size - max_size / 3 + 1);
}

}  // namespace

Ptr gen_susp_term(const GenConfig& cfg) {
  Ptr t;
  for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
    Rng rng(cfg.seed ^ (attempt * 0x9e3779b97f4a7c15ull));
    SuspGen g{rng, cfg, scaled_budget(cfg.max_size)};
    t = g.term();
    if (node_count(t) <= cfg.max_size) return t;
  }
  return t;
}

Ptr gen_susp_env(Rng& rng, const GenConfig& cfg, Nat target_len, Nat max_lev) {
  SuspGen g{rng, cfg, static_cast<std::int64_t>(cfg.max_size)};
  return g.env(target_len, max_lev);
}

// ---------------------------------------------------------------------------
// Simply-typed skeletons
// ---------------------------------------------------------------------------

namespace {

// Types iota | T -> T, encoded as a small tree in a vector-free way.
struct Ty {
  int arity;  // iota has arity 0; an arrow a->b is represented by its spine
  std::vector<int> spine;  // indices into a shared pool, see TyPool
};

// A tiny pool of monomorphic types: iota, iota->iota, (iota->iota)->iota,
// iota->iota->iota. Enough variety to exercise application and abstraction.
struct TyPool {
  // type 0: iota
  // type 1: iota -> iota
  // type 2: iota -> iota -> iota
  // type 3: (iota -> iota) -> iota
  static int result(int ty) {
    switch (ty) {
      case 1: return 0;
      case 2: return 1;
      case 3: return 0;
      default: return -1;
    }
  }
  static int argument(int ty) {
    switch (ty) {
      case 1: return 0;
      case 2: return 0;
      case 3: return 1;
      default: return -1;
    }
  }
  static bool is_arrow(int ty) { return ty != 0; }
};

struct TypedGen {
  Rng& rng;
  const GenConfig& cfg;
  std::int64_t budget;
  bool metas;

  db::DbPtr atom_of(int ty, const std::vector<int>& ctx) {
    // a variable of the right type if one exists
    std::vector<Nat> hits;
    for (std::size_t i = 0; i < ctx.size(); ++i)
      if (ctx[ctx.size() - 1 - i] == ty) hits.push_back(i + 1);
    if (!hits.empty() && rng.chance(3, 4)) return db::d_index(hits[rng.below(hits.size())]);
    if (ty == 0) {
      if (metas && cfg.allow_metavars && rng.chance(1, 2))
        return db::d_const(std::string("!") + kMetaNames[rng.below(std::size(kMetaNames))]);
      if (!hits.empty()) return db::d_index(hits[rng.below(hits.size())]);
      if (cfg.allow_constants) return db::d_const(kConstNames[rng.below(std::size(kConstNames))]);
      // no base-typed leaf available; still strongly normalizing
      return db::d_app(db::d_abs(db::d_index(1)), db::d_abs(db::d_index(1)));
    }
    // build an abstraction of the arrow type
    std::vector<int> ext = ctx;
    ext.push_back(TyPool::argument(ty));
    return db::d_abs(gen(TyPool::result(ty), ext));
  }

  db::DbPtr gen(int ty, const std::vector<int>& ctx) {
    --budget;
    if (budget <= 2) return atom_of(ty, ctx);
    switch (rng.below(8)) {
      case 0:
        return atom_of(ty, ctx);
      case 1:
      case 2:
      case 3: {
        if (!TyPool::is_arrow(ty)) {
          // application at base type: pick an argument type
          int arg_ty = static_cast<int>(rng.below(2));  // iota or iota->iota
          int fn_ty = arg_ty == 0 ? 1 : 3;
          return db::d_app(gen(fn_ty, ctx), gen(arg_ty, ctx));
        }
        std::vector<int> ext = ctx;
        ext.push_back(TyPool::argument(ty));
        return db::d_abs(gen(TyPool::result(ty), ext));
      }
      case 4:
      case 5:
      case 6: {
        int arg_ty = static_cast<int>(rng.below(2));
        int fn_ty;
        if (ty == 0)
          fn_ty = arg_ty == 0 ? 1 : 3;
        else if (ty == 1 && arg_ty == 0)
          fn_ty = 2;
        else {
          std::vector<int> ext = ctx;
          ext.push_back(TyPool::argument(ty));
          return db::d_abs(gen(TyPool::result(ty), ext));
        }
        return db::d_app(gen(fn_ty, ctx), gen(arg_ty, ctx));
      }
      default:
        if (TyPool::is_arrow(ty)) {
          std::vector<int> ext = ctx;
          ext.push_back(TyPool::argument(ty));
          return db::d_abs(gen(TyPool::result(ty), ext));
        }
        return atom_of(ty, ctx);
    }
  }
};

// Meta-variable leaves ride through the typed generator as marked constants
// and are swapped afterwards.
Ptr replace_meta_marks(const db::DbPtr& t) {
  switch (t->kind) {
    case db::DbKind::Const:
      if (!t->name.empty() && t->name[0] == '!') return metavar(t->name.substr(1));
      return constant(t->name);
    case db::DbKind::Index:
      return index(t->i);
    case db::DbKind::App:
      return app(replace_meta_marks(t->c0), replace_meta_marks(t->c1));
    case db::DbKind::Abs:
      return abs(replace_meta_marks(t->c0));
  }
  throw Error("unreachable");
}

}  // namespace

db::DbPtr gen_sn_db(const GenConfig& cfg) {
  db::DbPtr t;
  for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
    Rng rng(cfg.seed ^ (attempt * 0x9e3779b97f4a7c15ull));
    TypedGen g{rng, cfg, scaled_budget(cfg.max_size), false};
    // without constants, close over one base-typed variable so base leaves exist
    t = cfg.allow_constants ? g.gen(0, {}) : db::d_abs(g.gen(0, {0}));
    if (node_count(db::to_susp(t)) <= cfg.max_size) return t;
  }
  return t;
}

Ptr gen_sn_meta_term(const GenConfig& cfg) {
  Ptr t;
  for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
    Rng rng(cfg.seed ^ (attempt * 0x9e3779b97f4a7c15ull));
    TypedGen g{rng, cfg, scaled_budget(cfg.max_size), true};
    t = cfg.allow_constants ? replace_meta_marks(g.gen(0, {}))
                            : abs(replace_meta_marks(g.gen(0, {0})));
    if (node_count(t) <= cfg.max_size) return t;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Similar pairs
// ---------------------------------------------------------------------------

namespace {

struct SimGen {
  Rng& rng;
  const GenConfig& cfg;
  std::int64_t budget;
  bool displaced = false;

  Nat size_cap(Nat divisor) const {
    return budget > 0 ? Nat(budget) / divisor : 0;
  }

  std::pair<Ptr, Ptr> term() {
    --budget;
    if (budget <= 2) {
      Ptr l = leaf();
      return {l, l};
    }
    switch (rng.below(9)) {
      case 0:
      case 1: {
        Ptr l = leaf();
        return {l, l};
      }
      case 2:
      case 3:
      case 4: {
        auto [f1, f2] = term();
        auto [a1, a2] = term();
        return {app(f1, a1), app(f2, a2)};
      }
      case 5:
      case 6: {
        auto [b1, b2] = term();
        return {abs(b1), abs(b2)};
      }
      default: {
        Nat nl = rng.below(cfg.max_level + 1);
        Nat ol = rng.below(std::min<Nat>(cfg.max_level, size_cap(4)) + 1);
        auto [e1, e2] = env(ol, nl, nl);
        auto [t1, t2] = term();
        return {suspend(t1, ol, nl, e1), suspend(t2, ol, nl, e2)};
      }
    }
  }

  Ptr leaf() {
    SuspGen g{rng, cfg, 1};
    return g.leaf();
  }

  // Environments of the given length whose levels stay within (ml, mr) on
  // the two sides respectively.
  std::pair<Ptr, Ptr> env(Nat target_len, Nat ml, Nat mr) {
    --budget;
    if (target_len == 0) return {nil(), nil()};
    // displaced-pair rule at this cons cell
    if (budget > 6 && rng.chance(1, 3)) {
      Nat cap = std::min(ml, mr);
      if (cap >= 1) {
        Nat k = rng.below(std::min<Nat>(cap, 3));
        Nat nll = rng.range(0, ml - k);
        Nat nlr = rng.range(0, mr - k);
        Nat ol = rng.below(std::min<Nat>(cfg.max_level, 3) + 1);
        auto [r1, r2] = env(ol, nll, nlr);
        auto [t1, t2] = term();
        auto [rest1, rest2] = env(target_len - 1, checked_add(nll, k), checked_add(nlr, k));
        return {cons(suspend(t1, ol, nll, r1), checked_add(nll, k), rest1),
                cons(suspend(t2, ol, nlr, r2), checked_add(nlr, k), rest2)};
      }
    }
    Nat l = rng.below(std::min(ml, mr) + 1);
    auto [rest1, rest2] = env(target_len - 1, l, l);
    auto [t1, t2] = term();
    return {cons(t1, l, rest1), cons(t2, l, rest2)};
  }
};

}  // namespace

std::pair<Ptr, Ptr> gen_similar_terms(const GenConfig& cfg) {
  std::pair<Ptr, Ptr> out;
  for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
    Rng rng(cfg.seed ^ (attempt * 0x9e3779b97f4a7c15ull));
    SimGen g{rng, cfg, scaled_budget(cfg.max_size)};
    out = g.term();
    if (node_count(out.first) <= cfg.max_size && node_count(out.second) <= cfg.max_size)
      return out;
  }
  return out;
}

std::pair<Ptr, Ptr> gen_similar_envs(const GenConfig& cfg) {
  std::pair<Ptr, Ptr> out;
  for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
    Rng rng(cfg.seed ^ (attempt * 0x9e3779b97f4a7c15ull));
    SimGen g{rng, cfg, scaled_budget(cfg.max_size)};
    Nat len = rng.range(1, 4);
    Nat lev = rng.below(cfg.max_level + 1);
    out = g.env(len, lev, lev);
    if (node_count(out.first) <= cfg.max_size && node_count(out.second) <= cfg.max_size)
      return out;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bridge calculi
// ---------------------------------------------------------------------------

namespace {

struct LuGen {
  Rng& rng;
  std::int64_t budget;
  Nat max_index;

  lu::LuPtr term() {
    --budget;
    if (budget <= 1) return lu::u_var(rng.range(1, max_index));
    switch (rng.below(8)) {
      case 0:
      case 1:
        return lu::u_var(rng.range(1, max_index));
      case 2:
      case 3:
        return lu::u_app(term(), term());
      case 4:
      case 5:
        return lu::u_abs(term());
      default:
        return lu::u_clos(term(), subst());
    }
  }

  lu::LuPtr subst() {
    --budget;
    if (budget <= 1) return lu::u_shift();
    switch (rng.below(4)) {
      case 0:
        return lu::u_shift();
      case 1:
        return lu::u_lift(subst());
      default:
        return lu::u_slash(term());
    }
  }
};

struct LsGen {
  Rng& rng;
  std::int64_t budget;
  Nat max_index;

  ls::LsPtr term() {
    --budget;
    if (budget <= 1) return ls::s_var(rng.range(1, max_index));
    switch (rng.below(9)) {
      case 0:
      case 1:
        return ls::s_var(rng.range(1, max_index));
      case 2:
      case 3:
        return ls::s_app(term(), term());
      case 4:
      case 5:
        return ls::s_abs(term());
      case 6:
      case 7:
        return ls::s_sigma(rng.range(1, 4), term(), term());
      default:
        return ls::s_phi(rng.below(4), rng.range(1, 4), term());
    }
  }
};

struct LsigGen {
  Rng& rng;
  std::int64_t budget;

  lsig::LsigPtr term() {
    --budget;
    if (budget <= 1) return lsig::g_one();
    switch (rng.below(8)) {
      case 0:
      case 1:
        return lsig::g_one();
      case 2:
      case 3:
        return lsig::g_app(term(), term());
      case 4:
      case 5:
        return lsig::g_abs(term());
      default:
        return lsig::g_clos(term(), subst());
    }
  }

  lsig::LsigPtr subst() {
    --budget;
    if (budget <= 1) return rng.chance(1, 2) ? lsig::g_id() : lsig::g_shift();
    switch (rng.below(8)) {
      case 0:
        return lsig::g_id();
      case 1:
      case 2:
        return lsig::g_shift();
      case 3:
      case 4:
        return lsig::g_cons(term(), subst());
      default:
        return lsig::g_comp(subst(), subst());
    }
  }
};

}  // namespace

lu::LuPtr gen_lu_term(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  LuGen g{rng, static_cast<std::int64_t>(cfg.max_size), std::max<Nat>(cfg.max_level, 1)};
  return g.term();
}

ls::LsPtr gen_ls_term(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  LsGen g{rng, static_cast<std::int64_t>(cfg.max_size), std::max<Nat>(cfg.max_level, 1)};
  return g.term();
}

lsig::LsigPtr gen_lsig_term(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  LsigGen g{rng, static_cast<std::int64_t>(cfg.max_size)};
  return g.term();
}

lsig::LsigPtr gen_lsig_subst(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  LsigGen g{rng, static_cast<std::int64_t>(cfg.max_size)};
  return g.subst();
}

// ---------------------------------------------------------------------------
// Church numerals
// ---------------------------------------------------------------------------

db::DbPtr church_numeral(Nat n) {
  db::DbPtr body = db::d_index(1);
  for (Nat i = 0; i < n; ++i) body = db::d_app(db::d_index(2), body);
  return db::d_abs(db::d_abs(body));
}

db::DbPtr church_add() {
  // \m n f x. m f (n f x)
  using namespace db;
  return d_abs(d_abs(d_abs(d_abs(
      d_app(d_app(d_index(4), d_index(2)), d_app(d_app(d_index(3), d_index(2)), d_index(1)))))));
}

db::DbPtr church_mult() {
  // \m n f. m (n f)
  using namespace db;
  return d_abs(d_abs(d_abs(d_app(d_index(3), d_app(d_index(2), d_index(1))))));
}

}  // namespace susp
