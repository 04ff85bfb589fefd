#ifndef SUSP_CORE_HPP
#define SUSP_CORE_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

// Core syntax of the suspension calculus: terms, environments, the
// length/level/index measures on environments, well-formedness checking,
// and addressing of subexpressions by path.

namespace susp {

using Nat = std::uint64_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when arithmetic that must not underflow/overflow would do so.
struct ArithmeticError : Error {
  using Error::Error;
};

struct IndexError : Error {
  using Error::Error;
};

Nat monus(Nat a, Nat b);        // natural subtraction, truncated at zero
Nat checked_add(Nat a, Nat b);  // throws ArithmeticError on wraparound
Nat checked_sub(Nat a, Nat b);  // throws ArithmeticError on underflow

enum class Kind : std::uint8_t {
  Const,  // c
  Meta,   // instantiatable variable
  Index,  // #i, i >= 1
  App,    // (t1 t2)
  Abs,    // (\ t)
  Susp,   // [t, ol, nl, e]
  Nil,    // nil
  Cons,   // (t, l) :: e
  Merge,  // {e1, nl1, ol2, e2}
};

struct Expr;
using Ptr = std::shared_ptr<const Expr>;

// One node of a suspension expression. Nodes are immutable and may share
// subtrees; sharing is unobservable (equality and printing are structural).
struct Expr {
  Kind kind;
  std::string name;  // Const, Meta
  Nat n0 = 0;        // Index: i;  Susp: ol;  Cons: item level;  Merge: nl1
  Nat n1 = 0;        // Susp: nl;  Merge: ol2
  Ptr c0, c1;        // children, see child() for the layout
};

Ptr constant(std::string name);
Ptr metavar(std::string name);
Ptr index(Nat i);
Ptr app(Ptr fn, Ptr arg);
Ptr abs(Ptr body);
Ptr suspend(Ptr term, Nat ol, Nat nl, Ptr env);
Ptr nil();
Ptr cons(Ptr term, Nat level, Ptr rest);
Ptr merge(Ptr e1, Nat nl1, Nat ol2, Ptr e2);

bool is_term(const Ptr& x);
bool is_env(const Ptr& x);

bool equal(const Ptr& a, const Ptr& b);
std::size_t hash_expr(const Ptr& x);
bool contains_metavar(const Ptr& x);
bool contains_constant(const Ptr& x);
// True if `sub` occurs (structurally) as a subexpression of `x`.
bool contains(const Ptr& x, const Ptr& sub);
std::size_t node_count(const Ptr& x);

struct ExprHash {
  std::size_t operator()(const Ptr& x) const { return hash_expr(x); }
};
struct ExprEq {
  bool operator()(const Ptr& a, const Ptr& b) const { return equal(a, b); }
};

Nat len(const Ptr& env);
Nat lev(const Ptr& env);
// i-th index of an environment (the original calculus's measure).
Nat ind(const Ptr& env, Nat i);

// Address of a subexpression. Child numbering:
//   App(0=fn, 1=arg), Abs(0=body), Susp(0=term, 1=env),
//   Cons(0=item's term, 1=rest), Merge(0=e1, 1=e2).
using Path = std::vector<std::uint32_t>;

unsigned child_count(const Ptr& x);
Ptr child(const Ptr& x, unsigned i);                 // throws IndexError
Ptr subexpr(const Ptr& x, const Path& at);           // throws IndexError
Ptr replace(const Ptr& x, const Path& at, Ptr sub);  // throws IndexError
std::string path_to_string(const Path& at);

struct Violation {
  Path at;
  int clause;  // 1 = suspension, 2 = cons, 3 = merged environment
  std::string detail;
};

struct WfReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

WfReport check_well_formed(const Ptr& x);

struct EnvItem {
  Ptr term;
  Nat level;
};

// e[i] and e{i} on simple environments. env_item_at requires i < len(e);
// env_drop yields nil once i >= len(e).
EnvItem env_item_at(const Ptr& simple_env, Nat i);
Ptr env_drop(const Ptr& simple_env, Nat i);

// is_simple asks only for the nil/cons spine shape; item terms are
// unconstrained. is_debruijn holds iff the term contains no suspension.
bool is_simple(const Ptr& env);
bool is_debruijn(const Ptr& term);

}  // namespace susp

#endif
