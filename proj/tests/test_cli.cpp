#include <doctest.h>

#include <sstream>

#include "susp/cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = susp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check verdicts and exit codes") {
  CliRun ok = run_cli({"check", "--expr", "[#1, 1, 0, (c, 0) :: nil]"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "ok\n");

  CliRun bad = run_cli({"check", "--expr", "[#1, 2, 0, (c, 0) :: nil]"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("clause 1") != std::string::npos);

  CliRun parse = run_cli({"check", "--expr", "[#1, 2"});
  CHECK(parse.code == 2);

  CliRun legacy_off = run_cli({"check", "--expr", "@3 :: nil"});
  CHECK(legacy_off.code == 2);
  CliRun legacy_on = run_cli({"check", "--expr", "--legacy-dummies", "@3 :: nil"});
  CHECK(legacy_on.code == 0);
}

TEST_CASE("normalize") {
  CliRun rm = run_cli({"normalize", "--expr", "[c, 0, 0, nil]", "--rules", "rm"});
  CHECK(rm.code == 0);
  CHECK(rm.out == "c\n");

  // beta rule sets demand explicit fuel
  CliRun nofuel = run_cli({"normalize", "--expr", "(\\ #1) c", "--rules", "rmbeta"});
  CHECK(nofuel.code == 2);

  CliRun beta = run_cli({"normalize", "--expr", "(\\ #1) c", "--rules", "rmbeta", "--fuel", "100"});
  CHECK(beta.code == 0);
  CHECK(beta.out == "c\n");

  CliRun omega = run_cli({"normalize", "--expr", "(\\ #1 #1) (\\ #1 #1)", "--rules", "rmbeta",
                          "--fuel", "25"});
  CHECK(omega.code == 1);
  CHECK(omega.err.find("fuel_exhausted") != std::string::npos);

  CliRun lsig = run_cli({"normalize", "--expr", "1[^2][^3]", "--calc", "lsig", "--rules", "sigma"});
  CHECK(lsig.code == 0);
  CHECK(lsig.out == "1[^5]\n");
}

TEST_CASE("step and translate") {
  CliRun step = run_cli({"step", "--expr", "\\ [c, 0, 0, nil]", "--at", "0", "--rule", "r1"});
  CHECK(step.code == 0);
  CHECK(step.out == "\\ c\n");

  CliRun nomatch = run_cli({"step", "--expr", "c", "--at", "", "--rule", "r1"});
  CHECK(nomatch.code == 1);

  CliRun tr = run_cli({"translate", "--expr", "1[^ o ^]", "--from", "lsig", "--to", "susp"});
  CHECK(tr.code == 0);
  CHECK(tr.out == "#3\n");

  CliRun tr2 = run_cli({"translate", "--expr", "1_[shift]", "--from", "lu", "--to", "susp"});
  CHECK(tr2.code == 0);
  CHECK(tr2.out == "[#1, 0, 1, nil]\n");

  CliRun bad_dir = run_cli({"translate", "--expr", "1", "--from", "lsig", "--to", "lsig"});
  CHECK(bad_dir.code == 2);
}

TEST_CASE("measure and check-decrease") {
  CliRun meas = run_cli({"measure", "--expr", "[c, 0, 0, nil]", "--k", "2"});
  CHECK(meas.code == 0);
  CHECK(meas.out.find("mu: 1") != std::string::npos);
  CHECK(meas.out.find("eta_0: 3") != std::string::npos);
  CHECK(meas.out.find("essence: s_9(*, *)") != std::string::npos);

  CliRun dec = run_cli({"check-decrease", "--expr", "[c, 0, 0, nil]", "c"});
  CHECK(dec.code == 0);
  CliRun inc = run_cli({"check-decrease", "--expr", "c", "[c, 0, 0, nil]"});
  CHECK(inc.code == 1);
}

TEST_CASE("join") {
  CliRun same = run_cli({"join", "--expr", "[c, 0, 4, nil]", "[c, 0, 7, nil]", "--rules", "rm"});
  CHECK(same.code == 0);
  CHECK(same.out == "joinable\n");

  CliRun no = run_cli({"join", "--expr", "a", "b", "--rules", "rm"});
  CHECK(no.code == 1);
  CHECK(no.out == "not joinable\n");

  // the divergent meta-variable reducts join with the merging rules only
  std::string u = "[[X, 1, 0, (c, 0) :: nil], 1, 0, (d, 0) :: nil]";
  std::string v = "[[X, 2, 1, (#1, 1) :: (d, 0) :: nil], 1, 0, ([c, 1, 0, (d, 0) :: nil], 0) :: nil]";
  CHECK(run_cli({"join", "--expr", u, v, "--rules", "rm"}).code == 0);
  CHECK(run_cli({"join", "--expr", u, v, "--rules", "r"}).out == "not joinable\n");
}

TEST_CASE("worked-example lines through the command line") {
  std::string line1 = "[[\\ #1 #2 #3, 1, 0, (t2, 0) :: nil], 1, 0, (t3, 0) :: nil]";
  CliRun nf = run_cli({"normalize", "--expr", line1, "--rules", "rm"});
  CHECK(nf.code == 0);
  CHECK(nf.out == "\\ #1 t2 t3\n");

  CliRun merged = run_cli({"step", "--expr", line1, "--at", "", "--rule", "m1"});
  CHECK(merged.code == 0);
  CHECK(merged.out == "[\\ #1 #2 #3, 2, 0, {(t2, 0) :: nil, 0, 1, (t3, 0) :: nil}]\n");
}

TEST_CASE("trace files replay") {
  std::string path = "/tmp/suspcalc_trace_test.json";
  CliRun nf = run_cli({"normalize", "--expr", "[c f, 0, 2, nil]", "--rules", "rm", "--trace", path});
  CHECK(nf.code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK_NOTHROW(susp::replay_trace_json(buf.str()));
  std::remove(path.c_str());
}

TEST_CASE("fuzz smoke") {
  CliRun fz = run_cli({"fuzz", "--suite", "similarity", "--cases", "50", "--seed", "7"});
  CHECK(fz.code == 0);
  CHECK(fz.out.find("PASS") != std::string::npos);

  CliRun bad = run_cli({"fuzz", "--suite", "nonsense"});
  CHECK(bad.code == 2);
}

TEST_CASE("bench smoke") {
  CliRun bench = run_cli({"bench", "--corpus", "deep-redex", "--report", "csv"});
  CHECK(bench.code == 0);
  CHECK(bench.out.find("corpus,term_id,calculus,ruleset,strategy,steps,status") == 0);
  CHECK(bench.out.find("deep-redex,deep_1,db,beta,lo") != std::string::npos);
}

TEST_CASE("generate smoke") {
  CliRun g1 = run_cli({"generate", "--mode", "susp", "--seed", "5", "--size", "20"});
  CHECK(g1.code == 0);
  CliRun g2 = run_cli({"generate", "--mode", "susp", "--seed", "5", "--size", "20"});
  CHECK(g1.out == g2.out);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
}
