#ifndef SUSP_ORACLE_HPP
#define SUSP_ORACLE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "susp/core.hpp"

// Ground-truth machinery kept independent of the rewrite engine: plain
// de Bruijn beta reduction via simultaneous substitution, the similarity
// relation on suspension expressions, and the parallelized beta_s relation.

namespace susp::db {

enum class DbKind : std::uint8_t { Const, Index, App, Abs };

struct DbTerm;
using DbPtr = std::shared_ptr<const DbTerm>;

struct DbTerm {
  DbKind kind;
  std::string name;  // Const
  Nat i = 0;         // Index, >= 1
  DbPtr c0, c1;
};

DbPtr d_const(std::string name);
DbPtr d_index(Nat i);
DbPtr d_app(DbPtr fn, DbPtr arg);
DbPtr d_abs(DbPtr body);

bool db_equal(const DbPtr& a, const DbPtr& b);
std::string db_to_string(const DbPtr& t);

// Finite representation of the infinite substitution sequences of beta
// contraction: explicit values for indices 1..n, then #(k) maps to
// #(k - n + shift) for k > n.
struct DbSubst {
  std::vector<DbPtr> explicit_terms;
  std::int64_t tail_shift = 0;
};

DbPtr db_subst(const DbPtr& t, const DbSubst& s);

// Beta contraction of the redex addressed by `at`, which must be an
// application of an abstraction. Path selectors as in susp::Path.
DbPtr db_beta_step(const DbPtr& t, const Path& at);

enum class DbStatus : std::uint8_t { NormalForm, FuelExhausted };

struct DbResult {
  DbPtr term;
  Nat steps = 0;
  DbStatus status = DbStatus::NormalForm;
  bool normal() const { return status == DbStatus::NormalForm; }
};

// Leftmost-outermost beta reduction to beta-normal form.
DbResult db_normalize(const DbPtr& t, Nat fuel);

// Bridges between the oracle's term space and suspension terms; from_susp
// requires a suspension-free, meta-free term.
Ptr to_susp(const DbPtr& t);
DbPtr from_susp(const Ptr& t);

// One-step beta successors, for bounded reduction-path searches.
std::vector<DbPtr> db_successors(const DbPtr& t);
bool db_reduces_to(const DbPtr& from, const DbPtr& to, std::size_t cap);

}  // namespace susp::db

namespace susp {

// The similarity relation: structural congruence plus the coordinated
// trade-off between an environment item's index and its suspension's new
// embedding level. Expects two terms or two environments.
bool similar(const Ptr& a, const Ptr& b);

// All expressions related to x by one step of the parallelized beta_s
// relation (every subset of its redexes contracted congruently).
std::vector<Ptr> par_successors(const Ptr& x);
bool par_related(const Ptr& a, const Ptr& b);
// Contracts every beta_s redex; a canonical common parallel successor.
Ptr full_development(const Ptr& x);

}  // namespace susp

#endif
