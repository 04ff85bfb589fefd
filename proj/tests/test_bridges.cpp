#include <doctest.h>

#include <functional>

#include "susp/bridges.hpp"
#include "susp/generate.hpp"
#include "susp/oracle.hpp"
#include "susp/properties.hpp"
#include "susp/rewrite.hpp"
#include "susp/syntax.hpp"

using namespace susp;

TEST_CASE("lambda-upsilon rules") {
  using namespace susp::lu;
  LuPtr a = u_var(1);

  // (B) then (FVar): (\ 1_) a  ->  a[a/]-style closure  ->  a
  LuPtr redex = u_app(u_abs(u_var(1)), a);
  auto b = lu_rule_apply(LuRule::B, redex);
  REQUIRE(b);
  CHECK(lu_equal(*b, u_clos(u_var(1), u_slash(a))));
  CHECK(lu_equal(*lu_rule_apply(LuRule::FVar, *b), a));

  CHECK(lu_equal(*lu_rule_apply(LuRule::FVarLift, u_clos(u_var(1), u_lift(u_shift()))), u_var(1)));
  CHECK(lu_equal(*lu_rule_apply(LuRule::VarShift, u_clos(u_var(3), u_shift())), u_var(4)));
  CHECK(lu_equal(*lu_rule_apply(LuRule::RVar, u_clos(u_var(3), u_slash(a))), u_var(2)));
  CHECK(lu_equal(*lu_rule_apply(LuRule::RVarLift, u_clos(u_var(3), u_lift(u_shift()))),
                 u_clos(u_clos(u_var(2), u_shift()), u_shift())));

  LuTrace tr = lu_normalize(redex, true, 100);
  CHECK(tr.normal);
  CHECK(lu_equal(tr.result, a));
}

TEST_CASE("lambda-upsilon translation") {
  using namespace susp::lu;
  EnvTriple shift = lu_subst_to_triple(u_shift());
  CHECK(shift.ol == 0);
  CHECK(shift.nl == 1);
  CHECK(equal(shift.env, nil()));

  EnvTriple slash = lu_subst_to_triple(u_slash(u_var(1)));
  CHECK(slash.ol == 1);
  CHECK(slash.nl == 0);
  CHECK(equal(slash.env, cons(index(1), 0, nil())));

  Ptr image = lu_to_susp(u_clos(u_var(1), u_shift()));
  CHECK(equal(image, suspend(index(1), 0, 1, nil())));
  CHECK(equal(rm_normal_form(image), index(2)));

  EnvTriple lift = lu_subst_to_triple(u_lift(u_shift()));
  CHECK(lift.ol == 1);
  CHECK(lift.nl == 2);
  CHECK(equal(lift.env, cons(index(1), 2, nil())));
}

TEST_CASE("lambda-upsilon rule mapping samples") {
  auto r = props::run_lu_rule_mapping(11, 150);
  CHECK(r.failures == 0);
  CHECK(r.inconclusive == 0);
}

TEST_CASE("lambda-s rules") {
  using namespace susp::ls;
  LsPtr a = s_var(1);
  LsPtr b = s_var(2);

  CHECK(ls_equal(*ls_rule_apply(LsRule::SigmaGeneration, s_app(s_abs(a), b)), s_sigma(1, a, b)));
  CHECK(ls_equal(*ls_rule_apply(LsRule::SigmaLambda, s_sigma(2, s_abs(a), b)),
                 s_abs(s_sigma(3, a, b))));
  CHECK(ls_equal(*ls_rule_apply(LsRule::SigmaApp, s_sigma(2, s_app(a, b), b)),
                 s_app(s_sigma(2, a, b), s_sigma(2, b, b))));

  // sigma-destruction: above, at, and below the superscript
  CHECK(ls_equal(*ls_rule_apply(LsRule::SigmaDestruction, s_sigma(2, s_var(4), b)), s_var(3)));
  CHECK(ls_equal(*ls_rule_apply(LsRule::SigmaDestruction, s_sigma(2, s_var(2), b)),
                 s_phi(0, 2, b)));
  CHECK(ls_equal(*ls_rule_apply(LsRule::SigmaDestruction, s_sigma(2, s_var(1), b)), s_var(1)));

  CHECK(ls_equal(*ls_rule_apply(LsRule::PhiLambda, s_phi(0, 2, s_abs(a))),
                 s_abs(s_phi(1, 2, a))));
  CHECK(ls_equal(*ls_rule_apply(LsRule::PhiDestruction, s_phi(1, 3, s_var(4))), s_var(6)));
  CHECK(ls_equal(*ls_rule_apply(LsRule::PhiDestruction, s_phi(1, 3, s_var(1))), s_var(1)));

  // permutation rules of the extended system
  CHECK(ls_equal(*ls_rule_apply(LsRule::SigmaSigma, s_sigma(3, s_sigma(2, a, b), s_var(5))),
                 s_sigma(2, s_sigma(4, a, s_var(5)), s_sigma(2, b, s_var(5)))));
  CHECK_FALSE(ls_rule_apply(LsRule::SigmaSigma, s_sigma(1, s_sigma(2, a, b), s_var(5))));
  CHECK(ls_equal(*ls_rule_apply(LsRule::SigmaPhi1, s_sigma(2, s_phi(1, 3, a), b)),
                 s_phi(1, 2, a)));
  CHECK(ls_equal(*ls_rule_apply(LsRule::SigmaPhi2, s_sigma(4, s_phi(1, 3, a), b)),
                 s_phi(1, 3, s_sigma(2, a, b))));
  CHECK(ls_equal(*ls_rule_apply(LsRule::PhiSigma, s_phi(1, 2, s_sigma(1, a, b))),
                 s_sigma(1, s_phi(2, 2, a), s_phi(1, 2, b))));
  CHECK(ls_equal(*ls_rule_apply(LsRule::PhiPhi1, s_phi(3, 2, s_phi(1, 2, a))),
                 s_phi(1, 2, s_phi(2, 2, a))));
  // phi-phi-transition 2 with l = 0, j = 1, k = 0 collapses the updates
  CHECK(ls_equal(*ls_rule_apply(LsRule::PhiPhi2, s_phi(0, 2, s_phi(0, 1, a))), s_phi(0, 2, a)));

  LsTrace tr = ls_normalize(s_app(s_abs(s_var(1)), s_var(3)), true, false, 100);
  CHECK(tr.normal);
  CHECK(ls_equal(tr.result, s_var(3)));
}

TEST_CASE("lambda-s translation") {
  using namespace susp::ls;
  // a sigma^1 b has an empty renumbering prefix
  CHECK(equal(ls_to_susp(s_sigma(1, s_var(1), s_var(2))),
              suspend(index(1), 1, 0, cons(index(2), 0, nil()))));
  // phi^1_0 a has an empty environment
  CHECK(equal(ls_to_susp(s_phi(0, 1, s_var(1))), suspend(index(1), 0, 0, nil())));
  // phi^2_1 a carries one renumbering entry
  CHECK(equal(ls_to_susp(s_phi(1, 2, s_var(1))),
              suspend(index(1), 1, 2, cons(index(1), 2, nil()))));
  CHECK(equal(ls_to_susp(s_sigma(3, s_var(1), s_var(2))),
              suspend(index(1), 3, 2,
                   cons(index(1), 2, cons(index(1), 1, cons(index(2), 0, nil()))))));
}

TEST_CASE("lambda-s one-step correspondence samples") {
  auto r = props::run_ls_onestep(21, 200);
  CHECK(r.failures == 0);
}

TEST_CASE("lambda-sigma rules") {
  using namespace susp::lsig;
  LsigPtr a = g_one();
  LsigPtr s = g_cons(g_one(), g_id());

  CHECK(lsig_equal(*lsig_rule_apply(LsigRule::Beta, g_app(g_abs(a), a)),
                   g_clos(a, g_cons(a, g_id()))));
  CHECK(lsig_equal(*lsig_rule_apply(LsigRule::VarCons, g_clos(g_one(), g_cons(a, s))), a));
  CHECK(lsig_equal(*lsig_rule_apply(LsigRule::ShiftCons, g_comp(g_shift(), g_cons(a, s))), s));
  CHECK(lsig_equal(*lsig_rule_apply(LsigRule::VarId, g_clos(g_one(), g_id())), g_one()));
  CHECK(lsig_equal(*lsig_rule_apply(LsigRule::Abs, g_clos(g_abs(a), s)),
                   g_abs(g_clos(a, g_cons(g_one(), g_comp(s, g_shift()))))));
  CHECK(lsig_equal(*lsig_rule_apply(LsigRule::IdL, g_comp(g_id(), s)), s));
  CHECK(lsig_equal(*lsig_rule_apply(LsigRule::ShiftId, g_comp(g_shift(), g_id())), g_shift()));
  CHECK(lsig_equal(*lsig_rule_apply(LsigRule::Map, g_comp(g_cons(a, g_id()), s)),
                   g_cons(g_clos(a, s), g_comp(g_id(), s))));
  CHECK(lsig_equal(*lsig_rule_apply(LsigRule::Ass, g_comp(g_comp(s, g_shift()), g_id())),
                   g_comp(s, g_comp(g_shift(), g_id()))));
}

TEST_CASE("shift powers") {
  using namespace susp::lsig;
  CHECK(shift_power(g_shift()) == 1);
  CHECK(shift_power(g_comp(g_shift(), g_shift())) == 2);
  CHECK(shift_power(g_comp(g_shift(), g_comp(g_shift(), g_shift()))) == 3);
  CHECK_FALSE(shift_power(g_id()).has_value());
  CHECK_FALSE(shift_power(g_comp(g_id(), g_shift())).has_value());
  CHECK(lsig_equal(g_shift_pow(0), g_id()));
  CHECK(lsig_equal(g_shift_pow(3), g_comp(g_shift(), g_comp(g_shift(), g_shift()))));
}

TEST_CASE("suspension to lambda-sigma") {
  using namespace susp::lsig;
  CHECK(lsig_equal(susp_to_lsig(index(3)), g_clos(g_one(), g_shift_pow(2))));
  CHECK(lsig_equal(env_to_lsig(nil(), 0), g_id()));
  CHECK(lsig_equal(env_to_lsig(nil(), 2), g_comp(g_comp(g_id(), g_shift()), g_shift())));
  // a cons whose index matches the context level takes no trailing shifts
  Ptr e = cons(abs(index(1)), 0, nil());
  CHECK(lsig_equal(env_to_lsig(e, 0), g_cons(g_abs(g_one()), g_id())));
  CHECK_THROWS_AS(env_to_lsig(cons(index(1), 3, nil()), 2), ConstraintError);
  CHECK_THROWS_AS(susp_to_lsig(metavar("X")), ConstraintError);
  CHECK_THROWS_AS(susp_to_lsig(constant("c")), ConstraintError);
}

TEST_CASE("lambda-sigma to suspension") {
  using namespace susp::lsig;
  CHECK(equal(lsig_to_susp(g_clos(g_one(), g_shift_pow(2))), index(3)));

  EnvTriple id = lsig_subst_to_triple(g_id());
  CHECK(id.ol == 0);
  CHECK(id.nl == 0);
  CHECK(equal(id.env, nil()));

  // composing (1 . id) with itself merges the two environments
  LsigPtr cons_sub = g_cons(g_one(), g_id());
  EnvTriple comp = lsig_subst_to_triple(g_comp(cons_sub, cons_sub));
  CHECK(comp.ol == 2);
  CHECK(comp.nl == 0);
  CHECK(equal(comp.env,
              merge(cons(index(1), 0, nil()), 0, 1, cons(index(1), 0, nil()))));

  // 1[id] keeps its suspension form so that the retraction is exact
  CHECK(equal(lsig_to_susp(g_clos(g_one(), g_id())), suspend(index(1), 0, 0, nil())));
}

TEST_CASE("retraction on the tricky corner") {
  Ptr corner = suspend(index(1), 0, 0, nil());
  CHECK(equal(lsig::lsig_to_susp(lsig::susp_to_lsig(corner)), corner));
  auto r = props::run_bridge_retraction(31, 500);
  CHECK(r.failures == 0);
}

TEST_CASE("lambda-sigma correspondence samples") {
  auto r = props::run_lsig_correspondence(41, 150);
  CHECK(r.failures == 0);
  CHECK(r.inconclusive == 0);
}

TEST_CASE("substitution-only presets leave redexes alone") {
  using namespace susp::lu;
  LuPtr redex = u_app(u_abs(u_var(1)), u_var(2));
  LuTrace u_only = lu_normalize(u_clos(redex, u_shift()), false, 100);
  CHECK(u_only.normal);
  // the upsilon rules evaluate the closure but keep the beta redex
  CHECK(lu_equal(u_only.result, u_app(u_abs(u_var(1)), u_var(3))));

  using namespace susp::lsig;
  LsigTrace sigma_only = lsig_normalize(g_app(g_abs(g_one()), g_one()), false, 100);
  CHECK(sigma_only.normal);
  CHECK(lsig_equal(sigma_only.result, g_app(g_abs(g_one()), g_one())));
}

TEST_CASE("permutation rules preserve normal forms") {
  using namespace susp::ls;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenConfig cfg;
    cfg.seed = seed * 61 + 19;
    cfg.max_size = 20;
    cfg.allow_constants = false;
    db::DbPtr t = gen_sn_db(cfg);
    std::function<LsPtr(const db::DbPtr&)> enc = [&](const db::DbPtr& d) -> LsPtr {
      switch (d->kind) {
        case db::DbKind::Index: return s_var(d->i);
        case db::DbKind::App: return s_app(enc(d->c0), enc(d->c1));
        case db::DbKind::Abs: return s_abs(enc(d->c0));
        default: throw Error("unexpected constant");
      }
    };
    LsTrace plain = ls_normalize(enc(t), true, false, 100000);
    LsTrace extended = ls_normalize(enc(t), true, true, 100000);
    REQUIRE(plain.normal);
    REQUIRE(extended.normal);
    CHECK(ls_equal(plain.result, extended.result));
  }
}

TEST_CASE("self-capture fixture") {
  auto r = props::run_mellies();
  CHECK(r.failures == 0);
  CHECK(r.inconclusive == 0);
}

TEST_CASE("triple invariants") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenConfig cfg;
    cfg.seed = seed * 9 + 2;
    cfg.max_size = 18;
    auto s = gen_lsig_subst(cfg);
    EnvTriple t = lsig::lsig_subst_to_triple(s);
    CHECK(len(t.env) == t.ol);
    CHECK(lev(t.env) <= t.nl);
    CHECK(check_well_formed(suspend(index(1), t.ol, t.nl, t.env)).ok());
  }
}
