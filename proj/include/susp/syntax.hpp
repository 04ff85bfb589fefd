#ifndef SUSP_SYNTAX_HPP
#define SUSP_SYNTAX_HPP

#include <string>

#include "susp/bridges.hpp"
#include "susp/core.hpp"
#include "susp/rewrite.hpp"

// Concrete syntax for the four calculi: canonical printers with minimal
// parentheses and recursive-descent parsers with line/column positions.
//
// Suspension expressions:  #N index, lowercase identifiers are constants,
// uppercase are meta variables, `\ t` abstraction (binds weakest),
// juxtaposition for application, `[t, ol, nl, e]`, `(t, n) :: e`, `nil`,
// `{e1, nl, ol, e2}`. With legacy dummies enabled, `@n` is read as the
// item (#1, n+1).
//
// lambda-sigma:  1, juxtaposition, `\ a`, `a[s]`, `id`, `a . s`, `s o t`,
// `^`, `^N`.   lambda-upsilon:  `N_`, `a[s]`, `a/`, `lift(s)`, `shift`.
// lambda-s:  `N`, `sig(i, a, b)`, `phi(k, i, a)`.

namespace susp {

struct ParseError : Error {
  ParseError(std::string message, std::size_t line, std::size_t column);
  std::size_t line;
  std::size_t column;
};

std::string to_string(const Ptr& x);

Ptr parse_susp_term(const std::string& text, bool legacy_dummies = false);
Ptr parse_susp_env(const std::string& text, bool legacy_dummies = false);
// A term, or an environment when the text is not a term.
Ptr parse_susp_expr(const std::string& text, bool legacy_dummies = false);
EnvItem parse_susp_item(const std::string& text, bool legacy_dummies = false);

std::string to_string(const lu::LuPtr& x);
lu::LuPtr parse_lu_term(const std::string& text);
lu::LuPtr parse_lu_subst(const std::string& text);

std::string to_string(const ls::LsPtr& x);
ls::LsPtr parse_ls_term(const std::string& text);

std::string to_string(const lsig::LsigPtr& x);
lsig::LsigPtr parse_lsig_term(const std::string& text);
lsig::LsigPtr parse_lsig_subst(const std::string& text);
lsig::LsigPtr parse_lsig_expr(const std::string& text);

// Trace serialization: {"initial": str, "steps": [{"rule", "path", "result"}],
// "status": "normal_form" | "fuel_exhausted"}, expressions in canonical
// concrete syntax.
std::string trace_to_json(const Trace& trace);
// Re-executes a serialized trace, checking each intermediate expression;
// throws Error on the first mismatch.
void replay_trace_json(const std::string& json_text);

}  // namespace susp

#endif
