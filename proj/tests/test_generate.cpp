#include <doctest.h>

#include "susp/generate.hpp"
#include "susp/oracle.hpp"
#include "susp/rewrite.hpp"
#include "susp/syntax.hpp"

using namespace susp;

TEST_CASE("generation is deterministic in the seed") {
  GenConfig cfg;
  cfg.seed = 1234;
  cfg.allow_metavars = true;
  CHECK(equal(gen_susp_term(cfg), gen_susp_term(cfg)));
  cfg.seed = 1235;
  CHECK_FALSE(to_string(gen_susp_term(cfg)) ==
              to_string([&] {
                GenConfig other = cfg;
                other.seed = 1236;
                return gen_susp_term(other);
              }()));
}

TEST_CASE("smallest terms are single leaves") {
  GenConfig cfg;
  cfg.seed = 0;
  cfg.max_size = 1;
  Ptr t = gen_susp_term(cfg);
  CHECK((t->kind == Kind::Const || t->kind == Kind::Index));
}

TEST_CASE("generated suspension expressions are well-formed") {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.allow_metavars = seed % 3 == 0;
    Ptr t = gen_susp_term(cfg);
    CHECK(check_well_formed(t).ok());
  }
}

TEST_CASE("generated expressions stay well-formed under rewriting") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GenConfig cfg;
    cfg.seed = seed * 3 + 1;
    cfg.allow_metavars = true;
    cfg.max_size = 25;
    Ptr t = gen_susp_term(cfg);
    Trace tr = normalize(t, RuleSet::rm(), Strategy::random(seed), kDefaultRmFuel);
    REQUIRE(tr.normal());
    for (const TraceStep& step : tr.steps) CHECK(check_well_formed(step.result).ok());
  }
}

TEST_CASE("typed skeletons normalize within fuel") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    GenConfig cfg;
    cfg.seed = seed * 17 + 11;
    cfg.max_size = 30;
    db::DbPtr t = gen_sn_db(cfg);
    CHECK(db::db_normalize(t, 100000).normal());
  }
  // the constant-free variant used by the bridge corpora
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenConfig cfg;
    cfg.seed = seed * 19 + 7;
    cfg.max_size = 30;
    cfg.allow_constants = false;
    db::DbPtr t = gen_sn_db(cfg);
    CHECK_FALSE(contains_constant(db::to_susp(t)));
    CHECK(db::db_normalize(t, 100000).normal());
  }
}

TEST_CASE("meta skeletons normalize under rmbeta") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenConfig cfg;
    cfg.seed = seed * 29 + 3;
    cfg.allow_metavars = true;
    cfg.max_size = 30;
    Ptr t = gen_sn_meta_term(cfg);
    CHECK(check_well_formed(t).ok());
    CHECK(normalize(t, RuleSet::rmbeta(), Strategy::lo(), kDefaultRmFuel).normal());
  }
}

TEST_CASE("similar pair generator agrees with the checker") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    GenConfig cfg;
    cfg.seed = seed * 37 + 5;
    cfg.allow_metavars = true;
    cfg.max_size = 25;
    auto [a, b] = gen_similar_terms(cfg);
    CHECK(check_well_formed(a).ok());
    CHECK(check_well_formed(b).ok());
    CHECK(similar(a, b));
    auto [e1, e2] = gen_similar_envs(cfg);
    CHECK(check_well_formed(e1).ok());
    CHECK(check_well_formed(e2).ok());
    CHECK(similar(e1, e2));
  }
}

TEST_CASE("church numerals") {
  CHECK(db::db_to_string(church_numeral(0)) == "\\ \\ #1");
  db::DbPtr three = db::db_normalize(
                        db::d_app(db::d_app(church_add(), church_numeral(1)), church_numeral(2)),
                        10000)
                        .term;
  CHECK(db::db_equal(three, church_numeral(3)));
  db::DbPtr six =
      db::db_normalize(db::d_app(db::d_app(church_mult(), church_numeral(2)), church_numeral(3)),
                       10000)
          .term;
  CHECK(db::db_equal(six, church_numeral(6)));
}
