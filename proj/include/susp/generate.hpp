#ifndef SUSP_GENERATE_HPP
#define SUSP_GENERATE_HPP

#include <cstdint>
#include <utility>

#include "susp/bridges.hpp"
#include "susp/core.hpp"
#include "susp/oracle.hpp"

// Deterministic seeded generators. Suspension mode builds environments
// bottom-up so the length/level constraints hold by construction; the
// SN de Bruijn mode draws from a simply-typed skeleton grammar so beta
// normalization is guaranteed to terminate.

namespace susp {

struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {  // inclusive
    return lo + below(hi - lo + 1);
  }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
};

enum class GenMode : std::uint8_t {
  WellFormedSusp,
  SNDeBruijn,
  LsigExpr,
  LuExpr,
  LsExpr,
};

struct GenConfig {
  std::uint64_t seed = 0;
  Nat max_size = 40;
  Nat max_level = 8;
  bool allow_metavars = false;
  // The bridge calculi carry no constants, so their suites disable them.
  bool allow_constants = true;
  GenMode mode = GenMode::WellFormedSusp;
};

// Well-formed suspension term (always passes check_well_formed).
Ptr gen_susp_term(const GenConfig& cfg);
// Well-formed environment with the given length and level bound.
Ptr gen_susp_env(Rng& rng, const GenConfig& cfg, Nat target_len, Nat max_lev);

// Simply-typed de Bruijn term; beta normalization terminates.
db::DbPtr gen_sn_db(const GenConfig& cfg);
// Simply-typed skeleton with meta-variable leaves, as a suspension term.
Ptr gen_sn_meta_term(const GenConfig& cfg);

// A pair of well-formed expressions related by the similarity relation,
// built by applying the displaced-pair rule at random cons cells.
std::pair<Ptr, Ptr> gen_similar_terms(const GenConfig& cfg);
std::pair<Ptr, Ptr> gen_similar_envs(const GenConfig& cfg);

lu::LuPtr gen_lu_term(const GenConfig& cfg);
ls::LsPtr gen_ls_term(const GenConfig& cfg);
lsig::LsigPtr gen_lsig_term(const GenConfig& cfg);
lsig::LsigPtr gen_lsig_subst(const GenConfig& cfg);

// Church numerals and arithmetic over them, for corpora.
db::DbPtr church_numeral(Nat n);
db::DbPtr church_add();
db::DbPtr church_mult();

}  // namespace susp

#endif
