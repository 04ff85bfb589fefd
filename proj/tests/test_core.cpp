#include <doctest.h>

#include "susp/core.hpp"
#include "susp/generate.hpp"
#include "susp/rewrite.hpp"

using namespace susp;

namespace {

Ptr t() { return constant("t"); }
Ptr s() { return constant("s"); }

}  // namespace

TEST_CASE("natural arithmetic") {
  CHECK(monus(5, 3) == 2);
  CHECK(monus(3, 5) == 0);
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(~Nat(0), 1), ArithmeticError);
  CHECK(checked_sub(5, 5) == 0);
  CHECK_THROWS_AS(checked_sub(3, 5), ArithmeticError);
}

TEST_CASE("len") {
  CHECK(len(nil()) == 0);
  CHECK(len(cons(t(), 0, cons(s(), 0, nil()))) == 2);
  // {(t,0)::nil, 0, 1, (s,0)::nil} has length 1 + (1 - 0) = 2
  CHECK(len(merge(cons(t(), 0, nil()), 0, 1, cons(s(), 0, nil()))) == 2);
}

TEST_CASE("lev") {
  CHECK(lev(nil()) == 0);
  CHECK(lev(cons(t(), 3, cons(s(), 1, nil()))) == 3);
  // {nil, 2, 1, (s,0)::nil} has level 0 + (2 - 1) = 1
  CHECK(lev(merge(nil(), 2, 1, cons(s(), 0, nil()))) == 1);
}

TEST_CASE("ind") {
  CHECK(ind(nil(), 5) == 0);
  CHECK(ind(cons(t(), 2, cons(s(), 1, nil())), 1) == 1);
  CHECK(ind(cons(t(), 2, cons(s(), 1, nil())), 0) == 2);
  CHECK(ind(cons(t(), 2, nil()), 7) == 0);
}

TEST_CASE("ind agrees with the indices of the rewritten simple form") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GenConfig cfg;
    cfg.seed = seed * 77 + 5;
    cfg.max_size = 25;
    Rng rng(cfg.seed);
    Nat target = rng.range(0, 3);
    Nat max_lev = rng.below(cfg.max_level + 1);
    Ptr e = gen_susp_env(rng, cfg, target, max_lev);
    REQUIRE(check_well_formed(e).ok());
    CHECK(lev(e) >= ind(e, 0));
    // monotone: indices never increase along the environment
    for (Nat i = 0; i + 1 <= 8; ++i) CHECK(ind(e, i) >= ind(e, i + 1));
    Ptr simple = rm_normal_form(e);
    REQUIRE(is_simple(simple));
    Nat n = len(simple);
    for (Nat i = 0; i < n + 2; ++i) {
      Nat expected = i < n ? env_item_at(simple, i).level : 0;
      CHECK(ind(e, i) == expected);
    }
  }
}

TEST_CASE("well-formedness verdicts") {
  Ptr c = constant("c");
  CHECK(check_well_formed(suspend(index(1), 1, 0, cons(c, 0, nil()))).ok());

  WfReport r1 = check_well_formed(suspend(index(1), 2, 0, cons(c, 0, nil())));
  REQUIRE_FALSE(r1.ok());
  CHECK(r1.violations[0].clause == 1);
  CHECK(r1.violations[0].at.empty());

  WfReport r2 = check_well_formed(cons(t(), 0, cons(s(), 1, nil())));
  REQUIRE_FALSE(r2.ok());
  CHECK(r2.violations[0].clause == 2);
  CHECK(r2.violations[0].at.empty());

  WfReport r3 = check_well_formed(merge(cons(t(), 3, nil()), 2, 0, nil()));
  REQUIRE_FALSE(r3.ok());
  CHECK(r3.violations[0].clause == 3);

  // violations inside nested positions carry their path
  Ptr bad = abs(suspend(index(1), 2, 0, cons(c, 0, nil())));
  WfReport r4 = check_well_formed(bad);
  REQUIRE_FALSE(r4.ok());
  CHECK(r4.violations[0].at == Path{0});
}

TEST_CASE("simple environment accessors") {
  Ptr a = constant("a");
  Ptr b = constant("b");
  Ptr e = cons(a, 1, cons(b, 0, nil()));
  CHECK(equal(env_item_at(e, 1).term, b));
  CHECK(env_item_at(e, 1).level == 0);
  CHECK(equal(env_drop(e, 1), cons(b, 0, nil())));
  CHECK(equal(env_drop(cons(a, 1, nil()), 5), nil()));
  CHECK_THROWS_AS(env_item_at(e, 2), IndexError);
  CHECK_THROWS_AS(env_item_at(merge(nil(), 0, 0, nil()), 0), Error);
}

TEST_CASE("is_simple and is_debruijn") {
  CHECK(is_simple(nil()));
  CHECK(is_simple(cons(suspend(t(), 0, 0, nil()), 0, nil())));  // item terms unconstrained
  CHECK_FALSE(is_simple(merge(nil(), 0, 0, nil())));
  CHECK(is_debruijn(abs(app(index(1), index(2)))));
  CHECK_FALSE(is_debruijn(suspend(t(), 0, 0, nil())));
  CHECK_FALSE(is_debruijn(app(t(), suspend(t(), 0, 0, nil()))));
}

TEST_CASE("structural equality ignores sharing") {
  Ptr shared = app(index(1), index(2));
  Ptr x = app(shared, shared);
  Ptr y = app(app(index(1), index(2)), app(index(1), index(2)));
  CHECK(equal(x, y));
  CHECK(hash_expr(x) == hash_expr(y));
  CHECK_FALSE(equal(constant("a"), metavar("A")));
  CHECK_FALSE(equal(constant("a"), constant("b")));
}

TEST_CASE("paths address children and replace rebuilds the spine") {
  Ptr x = suspend(app(index(1), constant("c")), 0, 2, nil());
  CHECK(equal(subexpr(x, Path{0, 1}), constant("c")));
  Ptr y = replace(x, Path{0, 1}, constant("d"));
  CHECK(equal(y, suspend(app(index(1), constant("d")), 0, 2, nil())));
  CHECK(equal(x, suspend(app(index(1), constant("c")), 0, 2, nil())));  // original untouched
  CHECK_THROWS_AS(subexpr(x, Path{3}), IndexError);
  CHECK_THROWS_AS(child(nil(), 0), IndexError);
}

TEST_CASE("constructors enforce the pre-syntax") {
  CHECK_THROWS_AS(index(0), Error);
  CHECK_THROWS_AS(app(nil(), constant("c")), Error);
  CHECK_THROWS_AS(cons(nil(), 0, nil()), Error);
  CHECK_THROWS_AS(suspend(constant("c"), 0, 0, constant("d")), Error);
}
