#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qloop/loop.hpp"

namespace qloop {

enum class TermKind { Var, E, Mul, LDiv, RDiv, LInv, RInv, TwoInv };

// Term over the loop signature. LDiv(a,b) is a\b, RDiv(a,b) is a/b.
struct Term {
  TermKind kind = TermKind::E;
  int var = -1;  // index into the owning identity's variable list
  std::vector<Term> args;

  static Term variable(int index) { return {TermKind::Var, index, {}}; }
  static Term identity() { return {TermKind::E, -1, {}}; }
  static Term binary(TermKind kind, Term a, Term b) { return {kind, -1, {std::move(a), std::move(b)}}; }
  static Term unary(TermKind kind, Term a) { return {kind, -1, {std::move(a)}}; }

  friend bool operator==(const Term&, const Term&) = default;
};

struct Identity {
  Term lhs, rhs;
  std::vector<std::string> vars;  // sorted by name

  friend bool operator==(const Identity&, const Identity&) = default;
};

// Grammar (whitespace insignificant):
//   identity := term '=' term
//   term     := factor (('\' | '/') factor)*      left-associative
//   factor   := atom ('*' atom)*                  left-associative
//   atom     := (var | 'e' | '(' term ')') ('^l' | '^r' | '^-1')*
// Variables are [A-Za-z][A-Za-z0-9_]* other than "e".
// Throws SyntaxError / UnknownToken with the offending position.
Identity parse_identity(std::string_view text);
Term parse_term(std::string_view text, std::vector<std::string>& vars);

// Fully parenthesized rendering; parse(to_string(id)) == id.
std::string to_string(const Term& t, const std::vector<std::string>& vars);
std::string to_string(const Identity& id);

// Left-right mirror: reverses products, swaps \ with / and ^l with ^r.
// An identity holds in Q iff its mirror holds in the opposite loop.
Identity mirror(const Identity& id);

// Only variables, e and products.
bool is_division_free(const Term& t);
bool is_division_free(const Identity& id);

inline constexpr Element kUndefined = -1;

// Evaluates `t` under `assignment` (indexed like the identity's vars).
// Returns kUndefined when ^-1 meets an element whose one-sided inverses
// differ. Throws UnboundVariable when a variable index is not covered.
Element eval_term(const Term& t, std::span<const Element> assignment, const LoopTable& q);

struct CheckResult {
  bool holds = true;
  std::optional<std::vector<Element>> counterexample;
  std::optional<std::vector<Element>> undefined_at;
};

// Scans all |Q|^k assignments in lexicographic order (first variable most
// significant) and reports the first failing one.
CheckResult check(const LoopTable& q, const Identity& id);
// Same result as check(); the first variable's range is split across OpenMP
// workers and the lexicographically least failure is kept.
CheckResult check_parallel(const LoopTable& q, const Identity& id, int workers = 0);

struct CatalogEntry {
  std::string name;
  Identity identity;
  int var_count;
};

// Named identities used by property profiles and the CLI.
const std::vector<CatalogEntry>& catalog();
// Throws PreconditionViolated for an unknown name.
const Identity& catalog_identity(std::string_view name);

}  // namespace qloop
