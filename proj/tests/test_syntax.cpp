#include <doctest.h>

#include "susp/generate.hpp"
#include "susp/rewrite.hpp"
#include "susp/syntax.hpp"

using namespace susp;

TEST_CASE("suspension parsing") {
  Ptr x = parse_susp_term("[#1, 1, 0, (c,0)::nil]");
  CHECK(equal(x, suspend(index(1), 1, 0, cons(constant("c"), 0, nil()))));
  CHECK(to_string(x) == "[#1, 1, 0, (c, 0) :: nil]");

  CHECK(equal(parse_susp_term("\\ #1 #2"), abs(app(index(1), index(2)))));
  CHECK(equal(parse_susp_term("(\\ #1) c"), app(abs(index(1)), constant("c"))));
  CHECK(equal(parse_susp_term("f X #3"), app(app(constant("f"), metavar("X")), index(3))));
  CHECK(equal(parse_susp_term("c \\ #1"), app(constant("c"), abs(index(1)))));

  Ptr e = parse_susp_env("{(c,0)::nil, 0, 1, (d,0)::nil}");
  CHECK(equal(e, merge(cons(constant("c"), 0, nil()), 0, 1, cons(constant("d"), 0, nil()))));

  // an expression is a term or, failing that, an environment
  CHECK(is_env(parse_susp_expr("(c, 0) :: nil")));
  CHECK(is_term(parse_susp_expr("(c)")));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_susp_term("[#1, 1, 0,\n (c,0)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column > 1);
  }
  CHECK_THROWS_AS(parse_susp_term("#0"), ParseError);
  CHECK_THROWS_AS(parse_susp_term("nil"), ParseError);
  CHECK_THROWS_AS(parse_susp_term("c )"), ParseError);
}

TEST_CASE("legacy dummy items") {
  CHECK_THROWS_AS(parse_susp_item("@3"), ParseError);
  EnvItem item = parse_susp_item("@3", true);
  CHECK(equal(item.term, index(1)));
  CHECK(item.level == 4);
  Ptr e = parse_susp_env("@3 :: nil", true);
  CHECK(equal(e, cons(index(1), 4, nil())));
}

TEST_CASE("lambda-sigma parsing") {
  using namespace susp::lsig;
  CHECK(lsig_equal(parse_lsig_term("1[^ o ^]"), g_clos(g_one(), g_comp(g_shift(), g_shift()))));
  CHECK(lsig_equal(parse_lsig_term("1[^2]"), g_clos(g_one(), g_comp(g_shift(), g_shift()))));
  CHECK(lsig_equal(parse_lsig_subst("^0"), g_id()));
  CHECK(lsig_equal(parse_lsig_subst("1 . id"), g_cons(g_one(), g_id())));
  CHECK(lsig_equal(parse_lsig_subst("1 . id o ^"), g_cons(g_one(), g_comp(g_id(), g_shift()))));
  CHECK(lsig_equal(parse_lsig_subst("(1 . id) o ^"), g_comp(g_cons(g_one(), g_id()), g_shift())));
  CHECK(lsig_equal(parse_lsig_term("(\\ 1) 1"), g_app(g_abs(g_one()), g_one())));
  CHECK(to_string(g_clos(g_one(), g_shift_pow(2))) == "1[^2]");
}

TEST_CASE("lambda-upsilon and lambda-s parsing") {
  using namespace susp::lu;
  CHECK(lu_equal(parse_lu_term("1_[shift]"), u_clos(u_var(1), u_shift())));
  CHECK(lu_equal(parse_lu_term("(\\ 1_) 2_"), u_app(u_abs(u_var(1)), u_var(2))));
  CHECK(lu_equal(parse_lu_subst("lift(1_/)"), u_lift(u_slash(u_var(1)))));
  CHECK(lu_equal(parse_lu_subst("(1_ 2_)/"), u_slash(u_app(u_var(1), u_var(2)))));

  using namespace susp::ls;
  CHECK(ls_equal(parse_ls_term("sig(2, 1, 2)"), s_sigma(2, s_var(1), s_var(2))));
  CHECK(ls_equal(parse_ls_term("phi(0, 1, \\ 1)"), s_phi(0, 1, s_abs(s_var(1)))));
  CHECK(ls_equal(parse_ls_term("1 2 3"), s_app(s_app(s_var(1), s_var(2)), s_var(3))));
}

TEST_CASE("round trips on generated expressions") {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    GenConfig cfg;
    cfg.seed = seed * 41 + 1;
    cfg.max_size = 25;
    cfg.allow_metavars = seed % 2 == 0;
    Ptr t = gen_susp_term(cfg);
    CHECK(equal(parse_susp_term(to_string(t)), t));

    Rng rng(cfg.seed + 1);
    Ptr e = gen_susp_env(rng, cfg, rng.range(0, 3), rng.below(9));
    CHECK(equal(parse_susp_env(to_string(e)), e));
  }
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    GenConfig cfg;
    cfg.seed = seed * 43 + 5;
    cfg.max_size = 20;
    auto lu_t = gen_lu_term(cfg);
    CHECK(lu::lu_equal(parse_lu_term(to_string(lu_t)), lu_t));
    auto ls_t = gen_ls_term(cfg);
    CHECK(ls::ls_equal(parse_ls_term(to_string(ls_t)), ls_t));
    auto lsig_t = gen_lsig_term(cfg);
    CHECK(lsig::lsig_equal(parse_lsig_term(to_string(lsig_t)), lsig_t));
    auto lsig_s = gen_lsig_subst(cfg);
    CHECK(lsig::lsig_equal(parse_lsig_subst(to_string(lsig_s)), lsig_s));
  }
}

TEST_CASE("trace serialization and replay") {
  Ptr b3 = app(app(index(1), index(2)), index(3));
  Ptr line1 = suspend(suspend(abs(b3), 1, 0, cons(constant("t2"), 0, nil())), 1, 0,
                   cons(constant("t3"), 0, nil()));
  Trace tr = normalize(line1, RuleSet::rm(), Strategy::lo(), 1000);
  REQUIRE(tr.normal());
  std::string json = trace_to_json(tr);
  CHECK_NOTHROW(replay_trace_json(json));

  // a corrupted step is caught
  std::string broken = json;
  std::size_t pos = broken.find("\"m1\"");
  if (pos == std::string::npos) pos = broken.find("\"r5\"");
  REQUIRE(pos != std::string::npos);
  broken.replace(pos, 4, "\"r1\"");
  CHECK_THROWS(replay_trace_json(broken));
}
