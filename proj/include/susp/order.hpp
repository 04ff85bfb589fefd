#ifndef SUSP_ORDER_HPP
#define SUSP_ORDER_HPP

#include <memory>
#include <string>
#include <vector>

#include "susp/core.hpp"

// Termination apparatus for the reading and merging rules: the internal
// embedding potential mu, the effort measures eta_i, the translation of
// suspension expressions into first-order measure terms, and the recursive
// path ordering that orients every rm step.

namespace susp {

enum class MKind : std::uint8_t { Star, Lam, App, Cons, S };

struct MTerm;
using MPtr = std::shared_ptr<const MTerm>;

struct MTerm {
  MKind kind;
  Nat s_index = 0;       // subscript of an S node, >= 1
  std::size_t hash = 0;  // structural hash, filled at construction
  MPtr c0, c1;
};

MPtr m_star();
MPtr m_lam(MPtr a);
MPtr m_app(MPtr a, MPtr b);
MPtr m_cons(MPtr a, MPtr b);
MPtr m_s(Nat i, MPtr a, MPtr b);

bool mterm_equal(const MPtr& a, const MPtr& b);
std::string mterm_to_string(const MPtr& x);

Nat mu(const Ptr& x);
// eta_i; the nil clause is 1 so that pushing a substitution under an
// abstraction (rule r6) never increases the measure.
Nat eta(const Ptr& x, Nat i);
MPtr essence(const Ptr& x);

// The recursive path ordering over measure terms: same head with a
// lexicographic or multiset descent of the arguments, greater head
// dominating all arguments, or a subterm already at least as large.
bool rpo_gt(const MPtr& a, const MPtr& b);

struct DecreaseReport {
  bool essence_decreases = false;
  bool mu_nonincreasing = false;
  bool eta_nonincreasing = false;  // checked for subscripts 0..k
};

DecreaseReport check_step_decrease(const Ptr& before, const Ptr& after, Nat k = 16);

}  // namespace susp

#endif
