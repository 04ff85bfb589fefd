#include <doctest.h>

#include "susp/generate.hpp"
#include "susp/order.hpp"
#include "susp/rewrite.hpp"

using namespace susp;

namespace {

Ptr c() { return constant("c"); }

}  // namespace

TEST_CASE("mu") {
  CHECK(mu(c()) == 0);
  CHECK(mu(suspend(c(), 0, 0, nil())) == 1);
  CHECK(mu(merge(nil(), 0, 0, nil())) == 1);
  CHECK(mu(abs(suspend(c(), 0, 0, nil()))) == 1);
  CHECK(mu(app(suspend(c(), 0, 0, nil()), suspend(suspend(c(), 0, 0, nil()), 0, 0, nil()))) == 2);
  CHECK(mu(cons(c(), 0, nil())) == 0);
}

TEST_CASE("eta") {
  CHECK(eta(index(3), 7) == 1);
  CHECK(eta(c(), 0) == 1);
  // a nil environment weighs 1: pushing a substitution under an abstraction
  // (rule r6) must never increase the measure
  CHECK(eta(nil(), 0) == 1);
  CHECK(eta(nil(), 5) == 1);
  CHECK(eta(suspend(c(), 0, 0, nil()), 0) == 3);
  CHECK(eta(abs(c()), 2) == 2);
  CHECK(eta(app(c(), c()), 0) == 2);
  CHECK(eta(cons(abs(c()), 1, nil()), 0) == 2);
  // a nil right part of a merged environment weighs nothing
  CHECK(eta(merge(nil(), 0, 0, nil()), 0) == 2);
  CHECK(eta(merge(nil(), 2, 1, cons(c(), 0, nil())), 0) == 3);
}

TEST_CASE("essence") {
  CHECK(mterm_equal(essence(app(index(1), index(2))), m_app(m_star(), m_star())));
  // eta is 3; the subscript keeps the renumbering class apart (3 * 3 + 0)
  CHECK(mterm_equal(essence(suspend(c(), 0, 0, nil())), m_s(9, m_star(), m_star())));
  CHECK(mterm_equal(essence(suspend(c(), 1, 0, cons(c(), 0, nil()))),
                    m_s(10, m_star(), m_cons(m_star(), m_star()))));
  CHECK(mterm_equal(essence(merge(nil(), 0, 0, nil())), m_s(8, m_star(), m_star())));
  // suspension-free terms have no s node
  Ptr b3 = app(app(index(1), index(2)), index(3));
  Ptr start = app(abs(app(abs(abs(b3)), constant("t2"))), constant("t3"));
  CHECK(mterm_to_string(essence(start)).find("s_") == std::string::npos);
}

TEST_CASE("recursive path ordering") {
  MPtr star = m_star();
  CHECK(rpo_gt(m_s(2, star, star), star));
  CHECK_FALSE(rpo_gt(star, star));
  CHECK(rpo_gt(m_s(3, star, star), m_s(2, star, star)));
  CHECK_FALSE(rpo_gt(m_s(2, star, star), m_s(3, star, star)));
  // same head, lexicographic descent on the first argument
  CHECK(rpo_gt(m_s(2, m_lam(star), star), m_s(2, star, star)));
  // subterm clause
  CHECK(rpo_gt(m_lam(m_s(2, star, star)), m_s(2, star, star)));
  // incomparable small symbols
  CHECK_FALSE(rpo_gt(m_lam(star), m_app(star, star)));
  CHECK_FALSE(rpo_gt(m_app(star, star), m_lam(star)));
}

TEST_CASE("rpo is irreflexive and transitive on samples") {
  std::vector<MPtr> pool;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenConfig cfg;
    cfg.seed = seed * 7 + 1;
    cfg.max_size = 12;
    pool.push_back(essence(gen_susp_term(cfg)));
  }
  for (const MPtr& a : pool) CHECK_FALSE(rpo_gt(a, a));
  for (const MPtr& a : pool)
    for (const MPtr& b : pool)
      for (const MPtr& x : pool)
        if (rpo_gt(a, b) && rpo_gt(b, x)) CHECK(rpo_gt(a, x));
}

TEST_CASE("rpo is monotonic in contexts") {
  // if x > y then c[x] > c[y] for the contexts the translation produces
  auto wrap = [](const MPtr& hole, int which) -> MPtr {
    switch (which) {
      case 0: return m_lam(hole);
      case 1: return m_app(hole, m_star());
      case 2: return m_cons(m_star(), hole);
      default: return m_s(4, hole, m_star());
    }
  };
  std::vector<std::pair<MPtr, MPtr>> pairs;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GenConfig cfg;
    cfg.seed = seed * 91 + 2;
    cfg.max_size = 12;
    Ptr x = gen_susp_term(cfg);
    auto rs = redexes(x, RuleSet::rm());
    if (rs.empty()) continue;
    Ptr y = step_at(x, rs.front().at, rs.front().rule);
    pairs.emplace_back(essence(x), essence(y));
  }
  for (const auto& [ex, ey] : pairs) {
    REQUIRE(rpo_gt(ex, ey));
    for (int which = 0; which < 4; ++which) CHECK(rpo_gt(wrap(ex, which), wrap(ey, which)));
  }
}

TEST_CASE("check_step_decrease") {
  DecreaseReport r = check_step_decrease(suspend(c(), 0, 0, nil()), c());
  CHECK(r.essence_decreases);
  CHECK(r.mu_nonincreasing);
  CHECK(r.eta_nonincreasing);

  // the worked-trace rm portion decreases at every step
  Ptr b3 = app(app(index(1), index(2)), index(3));
  Ptr line1 = suspend(suspend(abs(b3), 1, 0, cons(constant("t2"), 0, nil())), 1, 0,
                   cons(constant("t3"), 0, nil()));
  Trace tr = normalize(line1, RuleSet::rm(), Strategy::lo(), 1000);
  REQUIRE(tr.normal());
  Ptr prev = line1;
  for (const TraceStep& step : tr.steps) {
    DecreaseReport rep = check_step_decrease(prev, step.result);
    CHECK(rep.essence_decreases);
    CHECK(rep.mu_nonincreasing);
    CHECK(rep.eta_nonincreasing);
    prev = step.result;
  }

  // moving a substitution under an abstraction over an empty environment
  // is the tight case for the eta measure
  Ptr tight = suspend(abs(index(1)), 0, 0, nil());
  Ptr after = *rule_apply(RuleId::R6, tight);
  DecreaseReport rep = check_step_decrease(tight, after);
  CHECK(rep.essence_decreases);
  CHECK(rep.eta_nonincreasing);
}

TEST_CASE("fuzzed rm steps decrease the measures") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; checked < 2000; ++seed) {
    GenConfig cfg;
    cfg.seed = seed * 3 + 7;
    cfg.allow_metavars = true;
    cfg.max_size = 25;
    Ptr x = gen_susp_term(cfg);
    for (const Redex& rd : redexes(x, RuleSet::rm())) {
      Ptr y = step_at(x, rd.at, rd.rule);
      DecreaseReport rep = check_step_decrease(x, y);
      CHECK(rep.essence_decreases);
      CHECK(rep.mu_nonincreasing);
      CHECK(rep.eta_nonincreasing);
      ++checked;
    }
  }
}

TEST_CASE("s subscripts are positive") {
  CHECK_THROWS_AS(m_s(0, m_star(), m_star()), Error);
}
