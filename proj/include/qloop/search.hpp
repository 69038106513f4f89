#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qloop/identity.hpp"
#include "qloop/loop.hpp"

namespace qloop {

// Element-level existential constraints, evaluated on complete tables.
enum class PointConstraint {
  OneSidedInverse,  // exists x with x^l != x^r
  Nonassociative,
  Noncommutative,
  NotUnipotent,     // exists x with xx != e
};

std::optional<PointConstraint> point_constraint_from_name(std::string_view name);
std::string_view to_string(PointConstraint p);
bool satisfies(const LoopTable& q, PointConstraint p);

struct SearchLimits {
  std::uint64_t nodes = 0;    // decisions; 0 = unlimited
  double seconds = 0;         // 0 = unlimited
  std::uint64_t solutions = 0;  // 0 = unlimited
};

struct SearchSpec {
  int order = 1;
  std::vector<Identity> required;
  std::vector<Identity> forbidden;  // each must fail on an accepted table
  std::vector<PointConstraint> points;
  SearchLimits limits;
};

// Plain-text directives, one per line, '#' starts a comment:
//   order N | require <identity or catalog name> | forbid <...> |
//   point <predicate> | limit nodes N | limit seconds N | limit solutions N
// Throws ParseError naming the line.
SearchSpec parse_search_spec(std::string_view text);

struct SearchStats {
  std::uint64_t nodes = 0;         // branching decisions
  std::uint64_t propagations = 0;  // cells forced by identities
  std::uint64_t conflicts = 0;
  std::uint64_t complete_tables = 0;
  std::uint64_t solutions = 0;

  SearchStats& operator+=(const SearchStats& o);
};

enum class SearchStatus { Found, Unsatisfiable, BudgetExhausted };
std::string_view to_string(SearchStatus s);

struct SearchOutcome {
  SearchStatus status = SearchStatus::Unsatisfiable;
  std::optional<LoopTable> loop;
  SearchStats stats;
};

// Return false to stop the search.
using SolutionVisitor = std::function<bool(const LoopTable&)>;

// A subtree of the search: the first undecided cell after root propagation
// fixed to one candidate value. `cell < 0` denotes the whole tree.
struct SearchBranch {
  int cell = -1;
  int value = -1;
};

// Branches at the first undecided cell, in ascending value order. Empty if
// root propagation already fails; a single whole-tree branch if it completes
// the table.
std::vector<SearchBranch> root_branches(const SearchSpec& spec);

// Depth-first search in row-major cell order, ascending values. Required
// division-free identities are checked (and propagate forced cells) as soon
// as instances become evaluable; everything else is checked on complete
// tables through the independent identity checker. When `shared_nodes` is
// given, the node limit applies to that shared counter.
SearchStatus search_branch(const SearchSpec& spec, const SearchBranch& branch, const SolutionVisitor& visit,
                           SearchStats& stats, std::atomic<std::uint64_t>* shared_nodes = nullptr);

SearchOutcome find_one(const SearchSpec& spec);

enum class Dedup { None, Iso };

struct EnumerationResult {
  std::vector<LoopTable> loops;
  SearchStats stats;
  SearchStatus status = SearchStatus::Unsatisfiable;
  // Not cut off by the node or time budget. Stopping at the solution cap
  // counts as complete: the caller asked for that many tables.
  bool complete() const { return status != SearchStatus::BudgetExhausted; }
};

// All normalized tables meeting the spec in lexicographic order; with
// Dedup::Iso, the sorted canonical forms of the isomorphism classes (n <= 8).
EnumerationResult enumerate(const SearchSpec& spec, Dedup dedup = Dedup::None);
// Root branches distributed over OpenMP workers; same tables as enumerate().
EnumerationResult enumerate_parallel(const SearchSpec& spec, Dedup dedup = Dedup::None, int workers = 0);

}  // namespace qloop
