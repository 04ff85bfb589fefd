#include "susp/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "susp/bridges.hpp"
#include "susp/generate.hpp"
#include "susp/oracle.hpp"
#include "susp/order.hpp"
#include "susp/properties.hpp"
#include "susp/rewrite.hpp"
#include "susp/syntax.hpp"

namespace susp::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerdict = 1;
constexpr int kUsage = 2;

std::string read_input(const std::string& spec, bool literal) {
  if (literal) return spec;
  if (spec == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(spec);
  if (!in) throw Error("cannot open file: " + spec);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

Path parse_path(const std::string& text) {
  Path path;
  std::string t = trim(text);
  if (t.empty() || t == "root" || t == "[]") return path;
  std::istringstream is(t);
  std::string part;
  while (std::getline(is, part, ',')) {
    part = trim(part);
    if (part.empty()) throw Error("empty path component");
    path.push_back(static_cast<std::uint32_t>(std::stoul(part)));
  }
  return path;
}

RuleSet ruleset_from_name(const std::string& name, bool logical) {
  RuleSet rules;
  if (name == "rm")
    rules = RuleSet::rm();
  else if (name == "r")
    rules = RuleSet::r();
  else if (name == "rmbeta")
    rules = RuleSet::rmbeta();
  else if (name == "rbeta")
    rules = RuleSet::rbeta();
  else
    throw Error("unknown rule set: " + name);
  if (logical) rules = rules.with_logical();
  return rules;
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "lo") return Strategy::lo();
  if (name == "li") return Strategy::li();
  if (name == "head") return Strategy::head_first();
  if (name.rfind("rand:", 0) == 0) return Strategy::random(std::stoull(name.substr(5)));
  throw Error("unknown strategy: " + name);
}

struct NormalizeOptions {
  std::string input;
  bool literal = false;
  std::string calc = "susp";
  std::string rules = "rm";
  std::string strategy = "lo";
  std::optional<Nat> fuel;
  bool logical = false;
  bool legacy = false;
  std::string trace_file;
};

int cmd_normalize(const NormalizeOptions& opt, std::ostream& out, std::ostream& err) {
  std::string text = trim(read_input(opt.input, opt.literal));
  if (opt.calc == "susp") {
    RuleSet rules = ruleset_from_name(opt.rules, opt.logical);
    if (rules.has_beta() && !opt.fuel) {
      err << "a rule set containing beta_s requires an explicit --fuel" << std::endl;
      return kUsage;
    }
    Nat fuel = opt.fuel.value_or(kDefaultRmFuel);
    Ptr x = parse_susp_expr(text, opt.legacy);
    Trace tr = normalize(x, rules, strategy_from_name(opt.strategy), fuel);
    out << to_string(tr.result()) << std::endl;
    if (!opt.trace_file.empty()) {
      std::ofstream f(opt.trace_file);
      f << trace_to_json(tr) << std::endl;
    }
    if (!tr.normal()) {
      err << "status: fuel_exhausted after " << tr.steps.size() << " steps" << std::endl;
      return kVerdict;
    }
    return kOk;
  }
  Nat fuel = opt.fuel.value_or(kDefaultRmFuel);
  if (opt.calc == "lsig") {
    bool beta = opt.rules == "lambdasigma";
    if (!beta && opt.rules != "sigma") throw Error("lambda-sigma rule sets: sigma, lambdasigma");
    auto tr = lsig::lsig_normalize(parse_lsig_expr(text), beta, fuel);
    out << to_string(tr.result) << std::endl;
    if (!tr.normal) {
      err << "status: fuel_exhausted" << std::endl;
      return kVerdict;
    }
    return kOk;
  }
  if (opt.calc == "lu") {
    bool beta = opt.rules == "lambdaupsilon";
    if (!beta && opt.rules != "upsilon") throw Error("lambda-upsilon rule sets: upsilon, lambdaupsilon");
    auto tr = lu::lu_normalize(parse_lu_term(text), beta, fuel);
    out << to_string(tr.result) << std::endl;
    if (!tr.normal) {
      err << "status: fuel_exhausted" << std::endl;
      return kVerdict;
    }
    return kOk;
  }
  if (opt.calc == "ls") {
    bool gen = opt.rules == "lambdas" || opt.rules == "lambdase";
    bool se = opt.rules == "se" || opt.rules == "lambdase";
    if (!gen && !se && opt.rules != "s") throw Error("lambda-s rule sets: s, lambdas, se, lambdase");
    auto tr = ls::ls_normalize(parse_ls_term(text), gen, se, fuel);
    out << to_string(tr.result) << std::endl;
    if (!tr.normal) {
      err << "status: fuel_exhausted" << std::endl;
      return kVerdict;
    }
    return kOk;
  }
  throw Error("unknown calculus: " + opt.calc);
}

int cmd_bench(const std::string& corpus, std::ostream& out) {
  struct Entry {
    std::string id;
    db::DbPtr term;
  };
  std::vector<Entry> entries;
  if (corpus == "church") {
    for (Nat a = 0; a <= 5; ++a)
      for (Nat b = 0; b <= 5; ++b) {
        entries.push_back({"add_" + std::to_string(a) + "_" + std::to_string(b),
                           db::d_app(db::d_app(church_add(), church_numeral(a)), church_numeral(b))});
        entries.push_back({"mul_" + std::to_string(a) + "_" + std::to_string(b),
                           db::d_app(db::d_app(church_mult(), church_numeral(a)), church_numeral(b))});
      }
  } else if (corpus == "deep-redex") {
    for (Nat k = 1; k <= 10; ++k) {
      db::DbPtr body = db::d_index(1);
      for (Nat j = 2; j <= k; ++j) body = db::d_app(body, db::d_index(j));
      db::DbPtr t = body;
      for (Nat j = 0; j < k; ++j) t = db::d_abs(t);
      for (Nat j = 0; j < k; ++j) t = db::d_app(t, db::d_abs(db::d_index(1)));
      entries.push_back({"deep_" + std::to_string(k), t});
    }
  } else {
    throw Error("unknown corpus: " + corpus);
  }

  const Nat fuel = 2000000;
  out << "corpus,term_id,calculus,ruleset,strategy,steps,status" << std::endl;
  auto row = [&](const Entry& e, const std::string& calc, const std::string& rules,
                 const std::string& strat, Nat steps, bool normal) {
    out << corpus << "," << e.id << "," << calc << "," << rules << "," << strat << "," << steps
        << "," << (normal ? "normal_form" : "fuel_exhausted") << std::endl;
  };
  for (const Entry& e : entries) {
    db::DbResult oracle = db::db_normalize(e.term, fuel);
    row(e, "db", "beta", "lo", oracle.steps, oracle.normal());
    for (const char* strat : {"lo", "head"}) {
      Trace tr = normalize(db::to_susp(e.term), RuleSet::rmbeta(), strategy_from_name(strat), fuel);
      row(e, "susp", "rmbeta", strat, tr.steps.size(), tr.normal());
    }
    {
      std::function<lu::LuPtr(const db::DbPtr&)> enc = [&](const db::DbPtr& t) -> lu::LuPtr {
        switch (t->kind) {
          case db::DbKind::Index: return lu::u_var(t->i);
          case db::DbKind::App: return lu::u_app(enc(t->c0), enc(t->c1));
          case db::DbKind::Abs: return lu::u_abs(enc(t->c0));
          default: throw Error("constants in bench corpus");
        }
      };
      auto tr = lu::lu_normalize(enc(e.term), true, fuel);
      row(e, "lu", "lambdaupsilon", "lo", tr.steps, tr.normal);
    }
    {
      std::function<ls::LsPtr(const db::DbPtr&)> enc = [&](const db::DbPtr& t) -> ls::LsPtr {
        switch (t->kind) {
          case db::DbKind::Index: return ls::s_var(t->i);
          case db::DbKind::App: return ls::s_app(enc(t->c0), enc(t->c1));
          case db::DbKind::Abs: return ls::s_abs(enc(t->c0));
          default: throw Error("constants in bench corpus");
        }
      };
      auto tr = ls::ls_normalize(enc(e.term), true, false, fuel);
      row(e, "ls", "lambdas", "lo", tr.steps, tr.normal);
    }
    {
      auto tr = lsig::lsig_normalize(lsig::susp_to_lsig(db::to_susp(e.term)), true, fuel);
      row(e, "lsig", "lambdasigma", "lo", tr.steps, tr.normal);
    }
  }
  return kOk;
}

int cmd_fuzz(const std::string& suite, std::size_t cases, std::uint64_t seed, std::ostream& out) {
  std::vector<props::SuiteResult> results;
  if (suite == "termination") {
    results.push_back(props::run_rm_termination(seed, cases));
  } else if (suite == "confluence") {
    results.push_back(props::run_rm_confluence(seed, cases));
    results.push_back(props::run_grafting_confluence(seed, cases / 4 + 1));
    results.push_back(props::run_diamond(seed, cases / 4 + 1));
  } else if (suite == "simulation") {
    results.push_back(props::run_beta_simulation(seed, cases));
  } else if (suite == "similarity") {
    results.push_back(props::run_similarity(seed, cases));
  } else if (suite == "bridges") {
    results.push_back(props::run_bridge_retraction(seed, cases));
    results.push_back(props::run_ls_onestep(seed, cases / 2 + 1));
    results.push_back(props::run_lsig_correspondence(seed, cases / 2 + 1));
    results.push_back(props::run_lu_rule_mapping(seed, cases / 2 + 1));
  } else {
    throw Error("unknown suite: " + suite);
  }
  bool ok = true;
  for (const auto& r : results) {
    out << props::format_result(r) << std::endl;
    ok = ok && r.pass();
  }
  return ok ? kOk : kVerdict;
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"suspension calculus workbench"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "well-formedness verdict for an expression");
  std::string check_input;
  bool check_literal = false, check_legacy = false;
  check->add_option("input", check_input, "file, or '-' for stdin")->required();
  check->add_flag("--expr", check_literal, "treat the input as literal expression text");
  check->add_flag("--legacy-dummies", check_legacy, "accept '@n' items as (#1, n+1)");

  // normalize
  auto* norm = app.add_subcommand("normalize", "rewrite to normal form");
  NormalizeOptions nopt;
  norm->add_option("input", nopt.input, "file, or '-' for stdin")->required();
  norm->add_flag("--expr", nopt.literal, "treat the input as literal expression text");
  norm->add_option("--calc", nopt.calc, "susp | lsig | lu | ls");
  norm->add_option("--rules", nopt.rules,
                   "susp: rm r rmbeta rbeta; lsig: sigma lambdasigma; lu: upsilon lambdaupsilon; "
                   "ls: s lambdas se lambdase");
  norm->add_option("--strategy", nopt.strategy, "lo | li | head | rand:SEED");
  Nat norm_fuel = 0;
  auto* fuel_opt = norm->add_option("--fuel", norm_fuel, "maximum number of steps");
  norm->add_flag("--logical-mode", nopt.logical, "add rule r7 (logical meta variables)");
  norm->add_flag("--legacy-dummies", nopt.legacy, "accept '@n' items");
  norm->add_option("--trace", nopt.trace_file, "write the step trace as JSON");

  // step
  auto* step = app.add_subcommand("step", "one positioned rewrite step");
  std::string step_input, step_path, step_rule;
  bool step_literal = false, step_legacy = false;
  step->add_option("input", step_input)->required();
  step->add_flag("--expr", step_literal);
  step->add_option("--at", step_path, "comma-separated child selectors, empty for the root");
  step->add_option("--rule", step_rule, "rule name, e.g. beta_s, r1, m6")->required();
  step->add_flag("--legacy-dummies", step_legacy);

  // translate
  auto* trans = app.add_subcommand("translate", "translate between calculi");
  std::string trans_input, trans_from, trans_to;
  bool trans_literal = false;
  trans->add_option("input", trans_input)->required();
  trans->add_flag("--expr", trans_literal);
  trans->add_option("--from", trans_from, "lu | ls | lsig | susp")->required();
  trans->add_option("--to", trans_to, "susp | lsig")->required();

  // measure
  auto* meas = app.add_subcommand("measure", "mu, eta and the essence of a suspension expression");
  std::string meas_input;
  bool meas_literal = false;
  Nat meas_k = 16;
  meas->add_option("input", meas_input)->required();
  meas->add_flag("--expr", meas_literal);
  meas->add_option("--k", meas_k, "largest eta subscript to print");

  // check-decrease
  auto* dec = app.add_subcommand("check-decrease", "measure claims for one rm step");
  std::string dec_before, dec_after;
  bool dec_literal = false;
  Nat dec_k = 16;
  dec->add_option("before", dec_before)->required();
  dec->add_option("after", dec_after)->required();
  dec->add_flag("--expr", dec_literal);
  dec->add_option("--k", dec_k);

  // join
  auto* join = app.add_subcommand("join", "joinability of two expressions");
  std::string join_a, join_b, join_rules = "rm";
  bool join_literal = false, join_logical = false;
  Nat join_fuel = kDefaultRmFuel;
  std::size_t join_cap = kDefaultFrontierCap;
  join->add_option("a", join_a)->required();
  join->add_option("b", join_b)->required();
  join->add_flag("--expr", join_literal);
  join->add_option("--rules", join_rules);
  join->add_option("--fuel", join_fuel);
  join->add_option("--frontier", join_cap, "breadth-first search cap");
  join->add_flag("--logical-mode", join_logical);

  // fuzz
  auto* fuzz = app.add_subcommand("fuzz", "seeded property suites");
  std::string fuzz_suite;
  std::size_t fuzz_cases = 100;
  std::uint64_t fuzz_seed = 0;
  fuzz->add_option("--suite", fuzz_suite,
                   "termination | confluence | simulation | similarity | bridges")
      ->required();
  fuzz->add_option("--cases", fuzz_cases);
  fuzz->add_option("--seed", fuzz_seed);

  // bench
  auto* bench = app.add_subcommand("bench", "step counts per calculus");
  std::string bench_corpus, bench_report = "csv";
  bench->add_option("--corpus", bench_corpus, "church | deep-redex")->required();
  bench->add_option("--report", bench_report, "csv");

  // generate
  auto* gen = app.add_subcommand("generate", "deterministic expression generator");
  std::string gen_mode = "susp";
  std::uint64_t gen_seed = 0;
  Nat gen_size = 40, gen_level = 8;
  bool gen_metavars = false, gen_noconst = false;
  gen->add_option("--mode", gen_mode, "susp | sndb | lu | ls | lsig");
  gen->add_option("--seed", gen_seed);
  gen->add_option("--size", gen_size);
  gen->add_option("--max-level", gen_level);
  gen->add_flag("--metavars", gen_metavars);
  gen->add_flag("--no-constants", gen_noconst);

  std::vector<const char*> argv;
  argv.push_back("suspcalc");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << std::endl;
    return kUsage;
  }

  if (check->parsed()) {
    Ptr x = parse_susp_expr(trim(read_input(check_input, check_literal)), check_legacy);
    WfReport report = check_well_formed(x);
    if (report.ok()) {
      out << "ok" << std::endl;
      return kOk;
    }
    for (const Violation& v : report.violations)
      out << "violation at " << path_to_string(v.at) << " (clause " << v.clause << "): " << v.detail
          << std::endl;
    return kVerdict;
  }
  if (norm->parsed()) {
    if (!fuel_opt->empty()) nopt.fuel = norm_fuel;
    return cmd_normalize(nopt, out, err);
  }
  if (step->parsed()) {
    Ptr x = parse_susp_expr(trim(read_input(step_input, step_literal)), step_legacy);
    auto rule = rule_from_name(step_rule);
    if (!rule) throw Error("unknown rule: " + step_rule);
    Ptr y = step_at(x, parse_path(step_path), *rule);
    out << to_string(y) << std::endl;
    return kOk;
  }
  if (trans->parsed()) {
    std::string text = trim(read_input(trans_input, trans_literal));
    if (trans_from == "lu" && trans_to == "susp") {
      out << to_string(lu::lu_to_susp(parse_lu_term(text))) << std::endl;
      return kOk;
    }
    if (trans_from == "ls" && trans_to == "susp") {
      out << to_string(ls::ls_to_susp(parse_ls_term(text))) << std::endl;
      return kOk;
    }
    if (trans_from == "lsig" && trans_to == "susp") {
      out << to_string(lsig::lsig_to_susp(parse_lsig_term(text))) << std::endl;
      return kOk;
    }
    if (trans_from == "susp" && trans_to == "lsig") {
      out << to_string(lsig::susp_to_lsig(parse_susp_term(text))) << std::endl;
      return kOk;
    }
    err << "supported directions: lu->susp, ls->susp, lsig->susp, susp->lsig" << std::endl;
    return kUsage;
  }
  if (meas->parsed()) {
    Ptr x = parse_susp_expr(trim(read_input(meas_input, meas_literal)));
    out << "mu: " << mu(x) << std::endl;
    for (Nat i = 0; i <= meas_k; ++i) out << "eta_" << i << ": " << eta(x, i) << std::endl;
    out << "essence: " << mterm_to_string(essence(x)) << std::endl;
    return kOk;
  }
  if (dec->parsed()) {
    Ptr before = parse_susp_expr(trim(read_input(dec_before, dec_literal)));
    Ptr after = parse_susp_expr(trim(read_input(dec_after, dec_literal)));
    DecreaseReport report = check_step_decrease(before, after, dec_k);
    out << "essence_decreases: " << (report.essence_decreases ? "true" : "false") << std::endl;
    out << "mu_nonincreasing: " << (report.mu_nonincreasing ? "true" : "false") << std::endl;
    out << "eta_nonincreasing: " << (report.eta_nonincreasing ? "true" : "false") << std::endl;
    return report.essence_decreases && report.mu_nonincreasing && report.eta_nonincreasing
               ? kOk
               : kVerdict;
  }
  if (join->parsed()) {
    Ptr a = parse_susp_expr(trim(read_input(join_a, join_literal)));
    Ptr b = parse_susp_expr(trim(read_input(join_b, join_literal)));
    JoinResult r = joinable(a, b, ruleset_from_name(join_rules, join_logical), join_fuel, join_cap);
    out << (r.joined ? "joinable" : r.inconclusive ? "inconclusive" : "not joinable") << std::endl;
    return r.joined ? kOk : kVerdict;
  }
  if (fuzz->parsed()) return cmd_fuzz(fuzz_suite, fuzz_cases, fuzz_seed, out);
  if (bench->parsed()) return cmd_bench(bench_corpus, out);
  if (gen->parsed()) {
    GenConfig cfg;
    cfg.seed = gen_seed;
    cfg.max_size = gen_size;
    cfg.max_level = gen_level;
    cfg.allow_metavars = gen_metavars;
    cfg.allow_constants = !gen_noconst;
    if (gen_mode == "susp") {
      cfg.mode = GenMode::WellFormedSusp;
      out << to_string(gen_susp_term(cfg)) << std::endl;
    } else if (gen_mode == "sndb") {
      cfg.mode = GenMode::SNDeBruijn;
      out << db::db_to_string(gen_sn_db(cfg)) << std::endl;
    } else if (gen_mode == "lu") {
      cfg.mode = GenMode::LuExpr;
      out << to_string(gen_lu_term(cfg)) << std::endl;
    } else if (gen_mode == "ls") {
      cfg.mode = GenMode::LsExpr;
      out << to_string(gen_ls_term(cfg)) << std::endl;
    } else if (gen_mode == "lsig") {
      cfg.mode = GenMode::LsigExpr;
      out << to_string(gen_lsig_term(cfg)) << std::endl;
    } else {
      throw Error("unknown generator mode: " + gen_mode);
    }
    return kOk;
  }
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(args, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << std::endl;
    return kUsage;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << std::endl;
    return kUsage;
  } catch (const RewriteError& e) {
    err << "rewrite error: " << e.what() << std::endl;
    return kVerdict;
  } catch (const Error& e) {
    err << "error: " << e.what() << std::endl;
    return kUsage;
  }
}

}  // namespace susp::cli
