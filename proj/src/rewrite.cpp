#include "susp/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace susp {

const char* rule_name(RuleId r) {
  switch (r) {
    case RuleId::BetaS: return "beta_s";
    case RuleId::R1: return "r1";
    case RuleId::R2: return "r2";
    case RuleId::R3: return "r3";
    case RuleId::R4: return "r4";
    case RuleId::R5: return "r5";
    case RuleId::R6: return "r6";
    case RuleId::R7: return "r7";
    case RuleId::M1: return "m1";
    case RuleId::M2: return "m2";
    case RuleId::M3: return "m3";
    case RuleId::M4: return "m4";
    case RuleId::M5: return "m5";
    case RuleId::M6: return "m6";
    case RuleId::R3Prime: return "r3'";
    case RuleId::LookupDerived: return "lookup";
  }
  return "?";
}

std::optional<RuleId> rule_from_name(const std::string& name) {
  for (RuleId r : kAllRules)
    if (name == rule_name(r)) return r;
  if (name == "bs") return RuleId::BetaS;
  if (name == "r3_prime" || name == "r3p") return RuleId::R3Prime;
  return std::nullopt;
}

RuleSet RuleSet::r() {
  RuleSet s;
  for (RuleId r : {RuleId::R1, RuleId::R2, RuleId::R3, RuleId::R4, RuleId::R5, RuleId::R6})
    s = s.with(r);
  return s;
}

RuleSet RuleSet::rm() {
  RuleSet s = r();
  for (RuleId m : {RuleId::M1, RuleId::M2, RuleId::M3, RuleId::M4, RuleId::M5, RuleId::M6})
    s = s.with(m);
  return s;
}

RuleSet RuleSet::rbeta() { return r().with(RuleId::BetaS); }
RuleSet RuleSet::rmbeta() { return rm().with(RuleId::BetaS); }

RuleSet RuleSet::with(RuleId rule) const {
  RuleSet s = *this;
  s.mask_ |= bit(rule);
  return s;
}

RuleSet RuleSet::without(RuleId rule) const {
  RuleSet s = *this;
  s.mask_ &= ~bit(rule);
  return s;
}

namespace {

bool is_kind(const Ptr& x, Kind k) { return x->kind == k; }

// The derived lookup rule resolves [#n, ol, nl, e] for a simple environment
// in one step, folding the r2-r4 walk the full rules would take. An entry
// (#1, l) with l >= 1 is a renumbering pseudo substitution and yields the
// adjusted index directly; every other entry yields the usual renumbering
// suspension around the entry's term.
std::optional<Ptr> lookup_derived(const Ptr& x) {
  if (!is_kind(x, Kind::Susp) || !is_kind(x->c0, Kind::Index)) return std::nullopt;
  if (!is_simple(x->c1) || len(x->c1) != x->n0) return std::nullopt;
  const Nat n = x->c0->n0, ol = x->n0, nl = x->n1;
  if (n > ol) return index(checked_add(checked_sub(n, ol), nl));
  EnvItem item = env_item_at(x->c1, n - 1);
  if (is_kind(item.term, Kind::Index) && item.term->n0 == 1 && item.level >= 1)
    return index(checked_add(checked_sub(nl, item.level), 1));
  return suspend(item.term, 0, checked_sub(nl, item.level), nil());
}

}  // namespace

std::optional<Ptr> rule_apply(RuleId rule, const Ptr& x) {
  switch (rule) {
    case RuleId::BetaS:
      if (is_kind(x, Kind::App) && is_kind(x->c0, Kind::Abs))
        return suspend(x->c0->c0, 1, 0, cons(x->c1, 0, nil()));
      return std::nullopt;

    case RuleId::R1:
      if (is_kind(x, Kind::Susp) && is_kind(x->c0, Kind::Const)) return x->c0;
      return std::nullopt;

    case RuleId::R2:
      if (is_kind(x, Kind::Susp) && is_kind(x->c0, Kind::Index) && x->n0 == 0 &&
          is_kind(x->c1, Kind::Nil))
        return index(checked_add(x->c0->n0, x->n1));
      return std::nullopt;

    case RuleId::R3:
      if (is_kind(x, Kind::Susp) && is_kind(x->c0, Kind::Index) && x->c0->n0 == 1 &&
          is_kind(x->c1, Kind::Cons))
        return suspend(x->c1->c0, 0, checked_sub(x->n1, x->c1->n0), nil());
      return std::nullopt;

    case RuleId::R4:
      if (is_kind(x, Kind::Susp) && is_kind(x->c0, Kind::Index) && x->c0->n0 > 1 &&
          is_kind(x->c1, Kind::Cons))
        return suspend(index(x->c0->n0 - 1), checked_sub(x->n0, 1), x->n1, x->c1->c1);
      return std::nullopt;

    case RuleId::R5:
      if (is_kind(x, Kind::Susp) && is_kind(x->c0, Kind::App))
        return app(suspend(x->c0->c0, x->n0, x->n1, x->c1), suspend(x->c0->c1, x->n0, x->n1, x->c1));
      return std::nullopt;

    case RuleId::R6:
      if (is_kind(x, Kind::Susp) && is_kind(x->c0, Kind::Abs)) {
        const Nat nl1 = checked_add(x->n1, 1);
        return abs(suspend(x->c0->c0, checked_add(x->n0, 1), nl1, cons(index(1), nl1, x->c1)));
      }
      return std::nullopt;

    case RuleId::R7:
      if (is_kind(x, Kind::Susp) && is_kind(x->c0, Kind::Meta)) return x->c0;
      return std::nullopt;

    case RuleId::M1:
      if (is_kind(x, Kind::Susp) && is_kind(x->c0, Kind::Susp)) {
        const Ptr& inner = x->c0;
        const Nat ol = checked_add(inner->n0, monus(x->n0, inner->n1));
        const Nat nl = checked_add(x->n1, monus(inner->n1, x->n0));
        return suspend(inner->c0, ol, nl, merge(inner->c1, inner->n1, x->n0, x->c1));
      }
      return std::nullopt;

    case RuleId::M2:
      if (is_kind(x, Kind::Merge) && x->n1 == 0 && is_kind(x->c1, Kind::Nil)) return x->c0;
      return std::nullopt;

    case RuleId::M3:
      if (is_kind(x, Kind::Merge) && is_kind(x->c0, Kind::Nil) && x->n0 == 0) return x->c1;
      return std::nullopt;

    case RuleId::M4:
      if (is_kind(x, Kind::Merge) && is_kind(x->c0, Kind::Nil) && x->n0 >= 1 &&
          is_kind(x->c1, Kind::Cons))
        return merge(nil(), x->n0 - 1, checked_sub(x->n1, 1), x->c1->c1);
      return std::nullopt;

    case RuleId::M5:
      if (is_kind(x, Kind::Merge) && is_kind(x->c0, Kind::Cons) && is_kind(x->c1, Kind::Cons) &&
          x->n0 > x->c0->n0)
        return merge(x->c0, x->n0 - 1, checked_sub(x->n1, 1), x->c1->c1);
      return std::nullopt;

    case RuleId::M6:
      if (is_kind(x, Kind::Merge) && is_kind(x->c0, Kind::Cons) && is_kind(x->c1, Kind::Cons) &&
          x->n0 == x->c0->n0) {
        const Nat l = x->c1->n0;
        const Nat m = checked_add(l, monus(x->n0, x->n1));
        return cons(suspend(x->c0->c0, x->n1, l, x->c1), m, merge(x->c0->c1, x->n0, x->n1, x->c1));
      }
      return std::nullopt;

    case RuleId::R3Prime:
      if (is_kind(x, Kind::Susp) && is_kind(x->c0, Kind::Index) && x->c0->n0 == 1 &&
          x->n1 == 0 && is_kind(x->c1, Kind::Cons) && x->c1->n0 == 0)
        return x->c1->c0;
      return std::nullopt;

    case RuleId::LookupDerived:
      return lookup_derived(x);
  }
  return std::nullopt;
}

bool rule_matches(RuleId rule, const Ptr& x) {
  switch (rule) {
    case RuleId::BetaS:
      return is_kind(x, Kind::App) && is_kind(x->c0, Kind::Abs);
    case RuleId::R1:
      return is_kind(x, Kind::Susp) && is_kind(x->c0, Kind::Const);
    case RuleId::R2:
      return is_kind(x, Kind::Susp) && is_kind(x->c0, Kind::Index) && x->n0 == 0 &&
             is_kind(x->c1, Kind::Nil);
    case RuleId::R3:
      return is_kind(x, Kind::Susp) && is_kind(x->c0, Kind::Index) && x->c0->n0 == 1 &&
             is_kind(x->c1, Kind::Cons);
    case RuleId::R4:
      return is_kind(x, Kind::Susp) && is_kind(x->c0, Kind::Index) && x->c0->n0 > 1 &&
             is_kind(x->c1, Kind::Cons);
    case RuleId::R5:
      return is_kind(x, Kind::Susp) && is_kind(x->c0, Kind::App);
    case RuleId::R6:
      return is_kind(x, Kind::Susp) && is_kind(x->c0, Kind::Abs);
    case RuleId::R7:
      return is_kind(x, Kind::Susp) && is_kind(x->c0, Kind::Meta);
    case RuleId::M1:
      return is_kind(x, Kind::Susp) && is_kind(x->c0, Kind::Susp);
    case RuleId::M2:
      return is_kind(x, Kind::Merge) && x->n1 == 0 && is_kind(x->c1, Kind::Nil);
    case RuleId::M3:
      return is_kind(x, Kind::Merge) && is_kind(x->c0, Kind::Nil) && x->n0 == 0;
    case RuleId::M4:
      return is_kind(x, Kind::Merge) && is_kind(x->c0, Kind::Nil) && x->n0 >= 1 &&
             is_kind(x->c1, Kind::Cons);
    case RuleId::M5:
      return is_kind(x, Kind::Merge) && is_kind(x->c0, Kind::Cons) && is_kind(x->c1, Kind::Cons) &&
             x->n0 > x->c0->n0;
    case RuleId::M6:
      return is_kind(x, Kind::Merge) && is_kind(x->c0, Kind::Cons) && is_kind(x->c1, Kind::Cons) &&
             x->n0 == x->c0->n0;
    case RuleId::R3Prime:
      return is_kind(x, Kind::Susp) && is_kind(x->c0, Kind::Index) && x->c0->n0 == 1 &&
             x->n1 == 0 && is_kind(x->c1, Kind::Cons) && x->c1->n0 == 0;
    case RuleId::LookupDerived:
      return is_kind(x, Kind::Susp) && is_kind(x->c0, Kind::Index) && is_simple(x->c1) &&
             len(x->c1) == x->n0;
  }
  return false;
}

namespace {

void collect_redexes(const Ptr& x, RuleSet rules, Path& at, std::vector<Redex>& out) {
  for (RuleId r : kAllRules)
    if (rules.contains(r) && rule_matches(r, x)) out.push_back({at, r});
  unsigned n = child_count(x);
  for (unsigned i = 0; i < n; ++i) {
    at.push_back(i);
    collect_redexes(child(x, i), rules, at, out);
    at.pop_back();
  }
}

// Postorder path order: descendants before ancestors, left before right.
bool postorder_less(const Path& a, const Path& b) {
  std::size_t i = 0;
  while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
  if (i == a.size() && i == b.size()) return false;
  if (i == a.size()) return false;  // a is a proper prefix: b is inner, b first
  if (i == b.size()) return true;
  return a[i] < b[i];
}

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

}  // namespace

std::vector<Redex> redexes(const Ptr& x, RuleSet rules) {
  std::vector<Redex> out;
  Path at;
  collect_redexes(x, rules, at, out);
  return out;
}

namespace {

bool find_outermost(const Ptr& x, RuleSet rules, Path& at, RuleId& rule) {
  for (RuleId r : kAllRules)
    if (rules.contains(r) && rule_matches(r, x)) {
      rule = r;
      return true;
    }
  unsigned n = child_count(x);
  for (unsigned i = 0; i < n; ++i) {
    at.push_back(i);
    if (find_outermost(child(x, i), rules, at, rule)) return true;
    at.pop_back();
  }
  return false;
}

bool find_innermost(const Ptr& x, RuleSet rules, Path& at, RuleId& rule) {
  unsigned n = child_count(x);
  for (unsigned i = 0; i < n; ++i) {
    at.push_back(i);
    if (find_innermost(child(x, i), rules, at, rule)) return true;
    at.pop_back();
  }
  for (RuleId r : kAllRules)
    if (rules.contains(r) && rule_matches(r, x)) {
      rule = r;
      return true;
    }
  return false;
}

}  // namespace

Ptr step_at(const Ptr& x, const Path& at, RuleId rule) {
  Ptr sub = subexpr(x, at);
  auto result = rule_apply(rule, sub);
  if (!result)
    throw RewriteError(std::string("rule ") + rule_name(rule) + " does not match at " +
                       path_to_string(at));
  return replace(x, at, *result);
}

void validate_ruleset(RuleSet rules, const Ptr& input) {
  if (rules.contains(RuleId::R3Prime) && !rules.contains(RuleId::R7) && contains_metavar(input))
    throw ConfigError("r3' is not admissible with graftable meta variables in the input");
}

std::optional<Redex> spine_redex(const Ptr& t, RuleSet rules) {
  Path at;
  Ptr cur = t;
  for (;;) {
    if (cur->kind == Kind::Abs) {
      at.push_back(0);
      cur = cur->c0;
      continue;
    }
    if (cur->kind == Kind::App) {
      if (cur->c0->kind == Kind::Abs) {
        if (!rules.has_beta()) return std::nullopt;
        return Redex{at, RuleId::BetaS};
      }
      at.push_back(0);
      cur = cur->c0;
      continue;
    }
    if (cur->kind == Kind::Susp) {
      auto inner = redexes(cur, rules);
      if (inner.empty()) return std::nullopt;  // stuck head, e.g. grafting meta variable
      Path full = at;
      full.insert(full.end(), inner.front().at.begin(), inner.front().at.end());
      return Redex{std::move(full), inner.front().rule};
    }
    return std::nullopt;  // index, constant or meta variable head
  }
}

namespace {

Redex pick_redex(const std::vector<Redex>& rs, const Strategy& strategy, SplitMix64& rng) {
  switch (strategy.kind) {
    case StrategyKind::LeftmostOutermost:
    case StrategyKind::HeadFirst:
      return rs.front();
    case StrategyKind::LeftmostInnermost: {
      auto it = std::min_element(rs.begin(), rs.end(), [](const Redex& a, const Redex& b) {
        return postorder_less(a.at, b.at);
      });
      return *it;
    }
    case StrategyKind::RandomSeeded:
      return rs[rng.next() % rs.size()];
  }
  return rs.front();
}

}  // namespace

Trace normalize(const Ptr& x, RuleSet rules, Strategy strategy, Nat fuel) {
  validate_ruleset(rules, x);
  Trace trace;
  trace.initial = x;
  SplitMix64 rng(strategy.seed);
  Ptr cur = x;
  for (Nat n = 0;; ++n) {
    std::optional<Redex> chosen;
    switch (strategy.kind) {
      case StrategyKind::HeadFirst:
        chosen = spine_redex(cur, rules);
        if (chosen) break;
        [[fallthrough]];
      case StrategyKind::LeftmostOutermost: {
        Path at;
        RuleId rule;
        if (find_outermost(cur, rules, at, rule)) chosen = Redex{std::move(at), rule};
        break;
      }
      case StrategyKind::LeftmostInnermost: {
        Path at;
        RuleId rule;
        if (find_innermost(cur, rules, at, rule)) chosen = Redex{std::move(at), rule};
        break;
      }
      case StrategyKind::RandomSeeded: {
        auto rs = redexes(cur, rules);
        if (!rs.empty()) chosen = pick_redex(rs, strategy, rng);
        break;
      }
    }
    if (!chosen) {
      trace.status = TraceStatus::NormalForm;
      return trace;
    }
    if (n >= fuel) {
      trace.status = TraceStatus::FuelExhausted;
      return trace;
    }
    cur = step_at(cur, chosen->at, chosen->rule);
    trace.steps.push_back({chosen->rule, chosen->at, cur});
  }
}

Ptr rm_normal_form(const Ptr& x, Nat fuel) {
  Trace t = normalize(x, RuleSet::rm(), Strategy::lo(), fuel);
  if (!t.normal()) throw RewriteError("rm normalization ran out of fuel");
  return t.result();
}

Trace head_normalize(const Ptr& t, Nat fuel) {
  if (!is_term(t)) throw Error("head_normalize: term expected");
  RuleSet rules = RuleSet::rmbeta();
  Trace trace;
  trace.initial = t;
  Ptr cur = t;
  for (Nat n = 0;; ++n) {
    auto redex = spine_redex(cur, rules);
    if (!redex) {
      trace.status = TraceStatus::NormalForm;
      return trace;
    }
    if (n >= fuel) {
      trace.status = TraceStatus::FuelExhausted;
      return trace;
    }
    cur = step_at(cur, redex->at, redex->rule);
    trace.steps.push_back({redex->rule, redex->at, cur});
  }
}

namespace {

using ExprSet = std::unordered_set<Ptr, ExprHash, ExprEq>;

bool intersects(const ExprSet& a, const ExprSet& b) {
  const ExprSet& small = a.size() <= b.size() ? a : b;
  const ExprSet& large = a.size() <= b.size() ? b : a;
  for (const Ptr& x : small)
    if (large.count(x)) return true;
  return false;
}

}  // namespace

ReachResult reachable(const Ptr& x, RuleSet rules, std::size_t cap) {
  ReachResult result;
  ExprSet seen;
  std::deque<Ptr> frontier;
  seen.insert(x);
  frontier.push_back(x);
  result.complete = true;
  while (!frontier.empty()) {
    Ptr cur = frontier.front();
    frontier.pop_front();
    for (const Redex& rd : redexes(cur, rules)) {
      Ptr next = step_at(cur, rd.at, rd.rule);
      if (seen.count(next)) continue;
      if (seen.size() >= cap) {
        result.complete = false;
        goto done;
      }
      seen.insert(next);
      frontier.push_back(next);
    }
  }
done:
  result.states.assign(seen.begin(), seen.end());
  return result;
}

JoinResult joinable(const Ptr& a, const Ptr& b, RuleSet rules, Nat fuel,
                    std::size_t frontier_cap) {
  if (equal(a, b)) return {true, false};

  Trace ta = normalize(a, rules, Strategy::lo(), fuel);
  Trace tb = normalize(b, rules, Strategy::lo(), fuel);
  if (ta.normal() && tb.normal() && equal(ta.result(), tb.result())) return {true, false};

  ExprSet sa, sb;
  std::deque<Ptr> qa, qb;
  sa.insert(a);
  qa.push_back(a);
  sb.insert(b);
  qb.push_back(b);
  // Seed each side with its leftmost-outermost reduction sequence; common
  // forms are often met along those before breadth-first search is needed.
  for (const TraceStep& s : ta.steps)
    if (sa.insert(s.result).second) qa.push_back(s.result);
  for (const TraceStep& s : tb.steps)
    if (sb.insert(s.result).second) qb.push_back(s.result);
  if (intersects(sa, sb)) return {true, false};

  bool a_complete = false, b_complete = false;
  while (sa.size() + sb.size() < frontier_cap) {
    std::deque<Ptr>* q;
    ExprSet *mine, *theirs;
    if (!qa.empty() && (qb.empty() || sa.size() <= sb.size())) {
      q = &qa;
      mine = &sa;
      theirs = &sb;
    } else if (!qb.empty()) {
      q = &qb;
      mine = &sb;
      theirs = &sa;
    } else {
      a_complete = b_complete = true;
      break;
    }
    Ptr cur = q->front();
    q->pop_front();
    for (const Redex& rd : redexes(cur, rules)) {
      Ptr next = step_at(cur, rd.at, rd.rule);
      if (!mine->insert(next).second) continue;
      if (theirs->count(next)) return {true, false};
      q->push_back(next);
    }
  }
  if (qa.empty() && qb.empty()) {
    a_complete = b_complete = true;
  }
  if (a_complete && b_complete) return {false, false};
  return {false, true};
}

}  // namespace susp
