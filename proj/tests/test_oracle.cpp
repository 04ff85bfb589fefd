#include <doctest.h>

#include <algorithm>

#include "susp/generate.hpp"
#include "susp/oracle.hpp"
#include "susp/rewrite.hpp"
#include "susp/syntax.hpp"

using namespace susp;
using namespace susp::db;

TEST_CASE("simultaneous substitution") {
  DbPtr c = d_const("c");
  DbSubst s;
  s.explicit_terms = {c};
  s.tail_shift = 0;

  CHECK(db_equal(db_subst(d_index(1), s), c));
  // under an abstraction the substitution is lifted
  CHECK(db_equal(db_subst(d_abs(d_index(2)), s), d_abs(c)));
  DbSubst id1;
  id1.explicit_terms = {d_index(1)};
  id1.tail_shift = 0;
  CHECK(db_equal(db_subst(d_abs(d_index(2)), id1), d_abs(d_index(2))));
}

TEST_CASE("beta contraction steps") {
  DbPtr c = d_const("c");
  CHECK(db_equal(db_beta_step(d_app(d_abs(d_index(1)), c), {}), c));
  CHECK(db_equal(db_beta_step(d_app(d_abs(d_abs(d_index(2))), c), {}), d_abs(c)));
  // the argument vanishes and the free index drops by one
  CHECK(db_equal(db_beta_step(d_app(d_abs(d_index(2)), c), {}), d_index(1)));
  CHECK_THROWS_AS(db_beta_step(d_app(c, c), {}), Error);
}

TEST_CASE("beta normalization") {
  DbPtr c = d_const("c");
  DbResult r0 = db_normalize(c, 10);
  CHECK(r0.normal());
  CHECK(r0.steps == 0);

  // ((\ (\ \ #1 #2 #3) t2) t3) with constants reduces to \ #1 t2 t3
  DbPtr b3 = d_app(d_app(d_index(1), d_index(2)), d_index(3));
  DbPtr start = d_app(d_abs(d_app(d_abs(d_abs(b3)), d_const("t2"))), d_const("t3"));
  DbResult r1 = db_normalize(start, 100);
  REQUIRE(r1.normal());
  CHECK(db_equal(r1.term, d_abs(d_app(d_app(d_index(1), d_const("t2")), d_const("t3")))));

  DbPtr omega_half = d_abs(d_app(d_index(1), d_index(1)));
  DbResult r2 = db_normalize(d_app(omega_half, omega_half), 50);
  CHECK_FALSE(r2.normal());
}

TEST_CASE("similarity basics") {
  Ptr c = constant("c");
  Ptr x = suspend(c, 0, 2, nil());
  CHECK(similar(x, x));
  CHECK_FALSE(similar(cons(c, 1, nil()), cons(c, 2, nil())));
  CHECK_THROWS_AS(similar(c, nil()), Error);

  // the displaced-pair rule with k = 1
  Ptr a = cons(suspend(c, 0, 2, nil()), 3, nil());
  Ptr b = cons(suspend(c, 0, 5, nil()), 6, nil());
  CHECK(similar(a, b));
  // mismatched displacement is rejected
  Ptr bad = cons(suspend(c, 0, 5, nil()), 7, nil());
  CHECK_FALSE(similar(a, bad));
  // and so is a differing ol
  Ptr bad2 = cons(suspend(c, 1, 5, cons(c, 0, nil())), 6, nil());
  CHECK_FALSE(similar(a, bad2));
}

TEST_CASE("similar expressions rewrite to matching normal forms") {
  Ptr c = constant("c");
  Ptr a = cons(suspend(c, 0, 2, nil()), 3, nil());
  Ptr b = cons(suspend(c, 0, 5, nil()), 6, nil());
  // the pair is itself a similar pair of simple environments; once the
  // item suspensions evaporate the trade-off is no longer visible to the
  // relation, so the guarantee is about reducts, not about normal forms
  CHECK(is_simple(a));
  CHECK(similar(a, b));
  CHECK_FALSE(similar(rm_normal_form(a), rm_normal_form(b)));

  // plugged into equal suspension contexts the two produce identical terms
  Ptr ta = suspend(index(1), 1, 7, a);
  Ptr tb = suspend(index(1), 1, 7, b);
  CHECK(similar(ta, tb));
  CHECK(equal(rm_normal_form(ta), rm_normal_form(tb)));

  // grafting meta variables keep the displacement visible in normal form
  Ptr a2 = cons(suspend(metavar("X"), 0, 2, nil()), 3, nil());
  Ptr b2 = cons(suspend(metavar("X"), 0, 5, nil()), 6, nil());
  CHECK(similar(a2, b2));
  CHECK(similar(rm_normal_form(a2), rm_normal_form(b2)));
}

TEST_CASE("parallel successors") {
  Ptr c = constant("c");
  auto s0 = par_successors(c);
  REQUIRE(s0.size() == 1);
  CHECK(equal(s0[0], c));

  Ptr redex = app(abs(index(1)), c);
  auto s1 = par_successors(redex);
  REQUIRE(s1.size() == 2);
  bool has_identity = false, has_contraction = false;
  for (const Ptr& y : s1) {
    if (equal(y, redex)) has_identity = true;
    if (equal(y, suspend(index(1), 1, 0, cons(c, 0, nil())))) has_contraction = true;
  }
  CHECK(has_identity);
  CHECK(has_contraction);

  // two disjoint redexes contract simultaneously
  Ptr two = app(redex, redex);
  auto s2 = par_successors(two);
  Ptr both = app(suspend(index(1), 1, 0, cons(c, 0, nil())), suspend(index(1), 1, 0, cons(c, 0, nil())));
  CHECK(s2.size() == 4);
  CHECK(std::any_of(s2.begin(), s2.end(), [&](const Ptr& y) { return equal(y, both); }));
  CHECK(equal(full_development(two), both));
  for (const Ptr& y : s2) CHECK(par_related(y, both));
}

TEST_CASE("diamond property on explicit intersections") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GenConfig cfg;
    cfg.seed = seed * 23 + 9;
    cfg.max_size = 14;
    cfg.allow_metavars = true;
    Ptr x = gen_susp_term(cfg);
    auto succ = par_successors(x);
    if (succ.size() > 16) continue;
    for (const Ptr& u : succ)
      for (const Ptr& v : succ) {
        auto su = par_successors(u);
        auto sv = par_successors(v);
        bool met = false;
        for (const Ptr& a : su) {
          for (const Ptr& b : sv)
            if (equal(a, b)) {
              met = true;
              break;
            }
          if (met) break;
        }
        CHECK(met);
      }
  }
}

TEST_CASE("soundness of beta_s against the oracle") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; checked < 300; ++seed) {
    GenConfig cfg;
    cfg.seed = seed * 5 + 13;
    cfg.max_size = 20;
    DbPtr t = gen_sn_db(cfg);
    Ptr ts = to_susp(t);
    auto betas = redexes(ts, RuleSet::empty().with(RuleId::BetaS));
    if (betas.empty()) continue;
    Ptr s = step_at(ts, betas.front().at, betas.front().rule);
    Ptr a = rm_normal_form(ts);
    Ptr b = rm_normal_form(s);
    // the rm-normal form of the contractum is one beta step along
    DbResult na = db_normalize(from_susp(a), 10000);
    DbResult nb = db_normalize(from_susp(b), 10000);
    REQUIRE(na.normal());
    REQUIRE(nb.normal());
    CHECK(db_equal(na.term, nb.term));
    CHECK(db_reduces_to(from_susp(a), from_susp(b), 2000));
    ++checked;
  }
}

TEST_CASE("simulation on strongly normalizing terms") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GenConfig cfg;
    cfg.seed = seed * 71 + 3;
    cfg.max_size = 25;
    DbPtr t = gen_sn_db(cfg);
    DbResult oracle = db_normalize(t, 100000);
    REQUIRE(oracle.normal());
    Trace tr = normalize(to_susp(t), RuleSet::rmbeta(), Strategy::lo(), 200000);
    REQUIRE(tr.normal());
    CHECK(equal(tr.result(), to_susp(oracle.term)));
  }
}
