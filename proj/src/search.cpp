#include "qloop/search.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "qloop/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qloop {

namespace {

constexpr std::pair<PointConstraint, std::string_view> kPointNames[] = {
    {PointConstraint::OneSidedInverse, "one_sided_inverse"},
    {PointConstraint::Nonassociative, "nonassociative"},
    {PointConstraint::Noncommutative, "noncommutative"},
    {PointConstraint::NotUnipotent, "not_unipotent"},
};

}  // namespace

std::optional<PointConstraint> point_constraint_from_name(std::string_view name) {
  for (const auto& [p, n] : kPointNames)
    if (n == name) return p;
  return std::nullopt;
}

std::string_view to_string(PointConstraint p) {
  for (const auto& [q, n] : kPointNames)
    if (q == p) return n;
  return "?";
}

bool satisfies(const LoopTable& q, PointConstraint p) {
  switch (p) {
    case PointConstraint::OneSidedInverse:
      for (int x = 0; x < q.order(); ++x)
        if (q.left_inv(x) != q.right_inv(x)) return true;
      return false;
    case PointConstraint::Nonassociative: return !q.is_associative();
    case PointConstraint::Noncommutative: return !q.is_commutative();
    case PointConstraint::NotUnipotent:
      for (int x = 0; x < q.order(); ++x)
        if (q.mul(x, x) != 0) return true;
      return false;
  }
  return false;
}

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Unsatisfiable: return "unsatisfiable";
    case SearchStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  nodes += o.nodes;
  propagations += o.propagations;
  conflicts += o.conflicts;
  complete_tables += o.complete_tables;
  solutions += o.solutions;
  return *this;
}

namespace {

Identity identity_or_catalog(const std::string& text) {
  if (text.find('=') == std::string::npos) return catalog_identity(text);
  return parse_identity(text);
}

}  // namespace

SearchSpec parse_search_spec(std::string_view text) {
  SearchSpec spec;
  bool have_order = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    std::string rest;
    std::getline(ls, rest);
    rest.erase(0, rest.find_first_not_of(" \t"));
    rest.erase(rest.find_last_not_of(" \t\r") + 1);
    auto fail = [&](const std::string& msg) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + msg);
    };
    try {
      if (word == "order") {
        spec.order = std::stoi(rest);
        if (spec.order < 1 || spec.order > kMaxOrder) fail("order out of range");
        have_order = true;
      } else if (word == "require") {
        spec.required.push_back(identity_or_catalog(rest));
      } else if (word == "forbid") {
        spec.forbidden.push_back(identity_or_catalog(rest));
      } else if (word == "point") {
        const auto p = point_constraint_from_name(rest);
        if (!p) fail("unknown point predicate '" + rest + "'");
        spec.points.push_back(*p);
      } else if (word == "limit") {
        std::istringstream rs(rest);
        std::string what;
        double value = 0;
        if (!(rs >> what >> value) || value <= 0) fail("expected 'limit nodes|seconds|solutions <positive>'");
        if (what == "nodes") spec.limits.nodes = static_cast<std::uint64_t>(value);
        else if (what == "seconds") spec.limits.seconds = value;
        else if (what == "solutions") spec.limits.solutions = static_cast<std::uint64_t>(value);
        else fail("unknown limit '" + what + "'");
      } else {
        fail("unknown directive '" + word + "'");
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ParseError) throw;
      fail(e.what());
    } catch (const std::logic_error&) {
      fail("malformed number");
    }
  }
  if (!have_order) throw Error(ErrorKind::ParseError, "missing 'order' directive");
  return spec;
}

namespace {

// Postfix program over Var/E/Mul.
struct MulProgram {
  struct Op {
    bool is_mul;
    int operand;  // variable index, or -1 for e
  };
  std::vector<Op> ops;

  static void compile(const Term& t, std::vector<Op>& out) {
    if (t.kind == TermKind::Mul) {
      compile(t.args[0], out);
      compile(t.args[1], out);
      out.push_back({true, 0});
    } else {
      out.push_back({false, t.kind == TermKind::Var ? t.var : -1});
    }
  }
};

struct Constraint {
  MulProgram lhs, rhs;
  int vars;
  std::uint32_t first_instance;
  std::uint32_t instances;
};

enum class Flow { Continue, Stop, Budget };

class Engine {
 public:
  Engine(const SearchSpec& spec, SearchStats& stats, std::atomic<std::uint64_t>* shared_nodes)
      : spec_(spec), n_(spec.order), stats_(stats), shared_nodes_(shared_nodes),
        cells_(static_cast<std::size_t>(n_) * n_, -1), row_used_(n_, 0), col_used_(n_, 0), watch_(cells_.size()),
        start_(std::chrono::steady_clock::now()) {
    std::uint32_t next = 0;
    for (const Identity& id : spec.required) {
      if (!is_division_free(id)) continue;
      Constraint c;
      MulProgram::compile(id.lhs, c.lhs.ops);
      MulProgram::compile(id.rhs, c.rhs.ops);
      c.vars = static_cast<int>(id.vars.size());
      c.first_instance = next;
      c.instances = 1;
      for (int i = 0; i < c.vars; ++i) c.instances *= static_cast<std::uint32_t>(n_);
      next += c.instances;
      constraints_.push_back(std::move(c));
    }
  }

  // Fixes the identity row and column and evaluates every constraint
  // instance once. False if the constraints are already contradictory.
  bool init() {
    for (int j = 0; j < n_; ++j) {
      assign(j, j);
      if (j) assign(j * n_, j);
    }
    for (const Constraint& c : constraints_)
      for (std::uint32_t a = 0; a < c.instances; ++a)
        if (visit_instance(c, a, -1) == Visit::Conflict) return false;
    return propagate() && masks_ok();
  }

  // First unknown cell in row-major order, or -1.
  int first_open() const {
    for (int c = n_ + 1; c < n_ * n_; ++c)
      if (cells_[c] < 0) return c;
    return -1;
  }

  std::uint64_t candidates(int c) const {
    const std::uint64_t full = n_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    return full & ~(row_used_[c / n_] | col_used_[c % n_]);
  }

  // Assigns a decision at the current level and propagates.
  bool decide(int c, int v) {
    if (!((candidates(c) >> v) & 1U)) return false;
    assign(c, v);
    return propagate() && masks_ok();
  }

  Flow dfs(const SolutionVisitor& visit) {
    const int c = first_open();
    if (c < 0) return complete(visit);
    for (std::uint64_t m = candidates(c); m; m &= m - 1) {
      if (budget_exhausted()) return Flow::Budget;
      ++stats_.nodes;
      if (shared_nodes_) shared_nodes_->fetch_add(1, std::memory_order_relaxed);
      const std::size_t mark = trail_.size();
      if (decide(c, __builtin_ctzll(m))) {
        const Flow f = dfs(visit);
        if (f != Flow::Continue) {
          undo_to(mark);
          return f;
        }
      } else {
        ++stats_.conflicts;
      }
      undo_to(mark);
    }
    return Flow::Continue;
  }

  bool found_any() const { return found_; }

 private:
  enum class Visit { Watching, Satisfied, Conflict };

  struct Partial {
    int value;  // >= 0 when known
    int cell;   // first unknown cell otherwise
    bool at_root;
  };

  Partial eval(const MulProgram& p, const int* a) const {
    int stack[64];
    int sp = 0;
    const std::size_t last = p.ops.size() - 1;
    for (std::size_t i = 0; i < p.ops.size(); ++i) {
      const auto& op = p.ops[i];
      if (!op.is_mul) {
        stack[sp++] = op.operand < 0 ? 0 : a[op.operand];
        continue;
      }
      const int rhs = stack[--sp];
      const int cell = stack[sp - 1] * n_ + rhs;
      const int v = cells_[cell];
      if (v < 0) return {-1, cell, i == last};
      stack[sp - 1] = v;
    }
    return {stack[0], -1, false};
  }

  // Re-examines one instance; `current` is the cell whose watch list is being
  // processed (-1 during init, when fully known instances need no watch).
  Visit visit_instance(const Constraint& c, std::uint32_t index, int current) {
    int a[8];
    for (int i = c.vars - 1, rest = static_cast<int>(index); i >= 0; --i, rest /= n_) a[i] = rest % n_;
    const Partial l = eval(c.lhs, a);
    const Partial r = eval(c.rhs, a);
    const std::uint32_t id = c.first_instance + index;
    if (l.value >= 0 && r.value >= 0) {
      if (l.value != r.value) return Visit::Conflict;
      if (current >= 0) watch_[current].push_back(id);
      return Visit::Satisfied;
    }
    const Partial* known = l.value >= 0 ? &l : r.value >= 0 ? &r : nullptr;
    const Partial* open = l.value >= 0 ? &r : &l;
    if (known && open->at_root) {
      if (!((candidates(open->cell) >> known->value) & 1U)) return Visit::Conflict;
      assign(open->cell, known->value);
      ++stats_.propagations;
      watch_[open->cell].push_back(id);
      return Visit::Satisfied;
    }
    watch_[open->cell].push_back(id);
    return Visit::Watching;
  }

  const Constraint& owner(std::uint32_t id) const {
    auto it = std::upper_bound(constraints_.begin(), constraints_.end(), id,
                               [](std::uint32_t v, const Constraint& c) { return v < c.first_instance; });
    return *(it - 1);
  }

  bool propagate() {
    while (queue_head_ < trail_.size()) {
      const int c = trail_[queue_head_++];
      scratch_.clear();
      scratch_.swap(watch_[c]);
      for (std::size_t k = 0; k < scratch_.size(); ++k) {
        const std::uint32_t id = scratch_[k];
        const Constraint& con = owner(id);
        if (visit_instance(con, id - con.first_instance, c) == Visit::Conflict) {
          watch_[c].insert(watch_[c].end(), scratch_.begin() + static_cast<std::ptrdiff_t>(k), scratch_.end());
          queue_head_ = trail_.size();
          return false;
        }
      }
    }
    return true;
  }

  bool masks_ok() const {
    for (int c = n_ + 1; c < n_ * n_; ++c)
      if (cells_[c] < 0 && candidates(c) == 0) return false;
    return true;
  }

  void assign(int c, int v) {
    cells_[c] = static_cast<std::int8_t>(v);
    row_used_[c / n_] |= std::uint64_t{1} << v;
    col_used_[c % n_] |= std::uint64_t{1} << v;
    trail_.push_back(c);
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const int c = trail_.back();
      trail_.pop_back();
      const int v = cells_[c];
      row_used_[c / n_] &= ~(std::uint64_t{1} << v);
      col_used_[c % n_] &= ~(std::uint64_t{1} << v);
      cells_[c] = -1;
    }
    queue_head_ = trail_.size();
  }

  bool budget_exhausted() {
    const std::uint64_t used = shared_nodes_ ? shared_nodes_->load(std::memory_order_relaxed) : stats_.nodes;
    if (spec_.limits.nodes && used >= spec_.limits.nodes) return true;
    if (spec_.limits.seconds > 0 && (stats_.nodes & 255) == 0) {
      const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
      if (el.count() >= spec_.limits.seconds) timed_out_ = true;
    }
    return timed_out_;
  }

  Flow complete(const SolutionVisitor& visit) {
    ++stats_.complete_tables;
    std::vector<std::uint8_t> cells(cells_.begin(), cells_.end());
    const LoopTable q = LoopTable::from_cells(n_, cells);
    for (const Identity& id : spec_.required)
      if (!check(q, id).holds) {
        if (is_division_free(id))
          throw Error(ErrorKind::InternalInconsistency, "search emitted a table violating " + to_string(id));
        return Flow::Continue;
      }
    for (const Identity& id : spec_.forbidden)
      if (check(q, id).holds) return Flow::Continue;
    for (PointConstraint p : spec_.points)
      if (!satisfies(q, p)) return Flow::Continue;
    ++stats_.solutions;
    found_ = true;
    if (!visit(q)) return Flow::Stop;
    if (spec_.limits.solutions && stats_.solutions >= spec_.limits.solutions) return Flow::Stop;
    return Flow::Continue;
  }

  const SearchSpec& spec_;
  int n_;
  SearchStats& stats_;
  std::atomic<std::uint64_t>* shared_nodes_;
  std::vector<std::int8_t> cells_;
  std::vector<std::uint64_t> row_used_, col_used_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::uint32_t>> watch_;
  std::vector<std::uint32_t> scratch_;
  std::vector<int> trail_;
  std::size_t queue_head_ = 0;
  std::chrono::steady_clock::time_point start_;
  bool timed_out_ = false;
  bool found_ = false;
};

void validate(const SearchSpec& spec) {
  if (spec.order < 1 || spec.order > kMaxOrder)
    throw Error(ErrorKind::PreconditionViolated, "search order must be in 1..64");
  for (const Identity& id : spec.required)
    if (id.vars.size() > 8) throw Error(ErrorKind::PreconditionViolated, "identities may use at most 8 variables");
}

}  // namespace

std::vector<SearchBranch> root_branches(const SearchSpec& spec) {
  validate(spec);
  SearchStats stats;
  Engine e(spec, stats, nullptr);
  if (!e.init()) return {};
  const int c = e.first_open();
  if (c < 0) return {SearchBranch{}};
  std::vector<SearchBranch> out;
  for (std::uint64_t m = e.candidates(c); m; m &= m - 1) out.push_back({c, __builtin_ctzll(m)});
  return out;
}

SearchStatus search_branch(const SearchSpec& spec, const SearchBranch& branch, const SolutionVisitor& visit,
                           SearchStats& stats, std::atomic<std::uint64_t>* shared_nodes) {
  validate(spec);
  Engine e(spec, stats, shared_nodes);
  if (!e.init()) return SearchStatus::Unsatisfiable;
  Flow f = Flow::Continue;
  if (branch.cell >= 0) {
    if (branch.cell != e.first_open())
      throw Error(ErrorKind::PreconditionViolated, "branch cell is not the first undecided cell");
    ++stats.nodes;
    if (shared_nodes) shared_nodes->fetch_add(1, std::memory_order_relaxed);
    if (!e.decide(branch.cell, branch.value)) return SearchStatus::Unsatisfiable;
  }
  f = e.dfs(visit);
  if (f == Flow::Budget) return SearchStatus::BudgetExhausted;
  return e.found_any() ? SearchStatus::Found : SearchStatus::Unsatisfiable;
}

SearchOutcome find_one(const SearchSpec& spec) {
  SearchOutcome out;
  out.status = search_branch(
      spec, SearchBranch{},
      [&](const LoopTable& q) {
        out.loop = q;
        return false;
      },
      out.stats);
  return out;
}

namespace {

void dedup_iso(EnumerationResult& r, int order) {
  if (order > 8) throw Error(ErrorKind::PreconditionViolated, "isomorphism dedup requires order <= 8");
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<LoopTable> reps;
  for (const LoopTable& q : r.loops) {
    LoopTable c = canonical_form(q);
    if (seen.insert({c.cells().begin(), c.cells().end()}).second) reps.push_back(std::move(c));
  }
  std::sort(reps.begin(), reps.end(), [](const LoopTable& a, const LoopTable& b) {
    return std::lexicographical_compare(a.cells().begin(), a.cells().end(), b.cells().begin(), b.cells().end());
  });
  r.loops = std::move(reps);
}

}  // namespace

EnumerationResult enumerate(const SearchSpec& spec, Dedup dedup) {
  EnumerationResult r;
  r.status = search_branch(
      spec, SearchBranch{},
      [&](const LoopTable& q) {
        r.loops.push_back(q);
        return true;
      },
      r.stats);
  if (dedup == Dedup::Iso) dedup_iso(r, spec.order);
  return r;
}

EnumerationResult enumerate_parallel(const SearchSpec& spec, Dedup dedup, int workers) {
  const std::vector<SearchBranch> branches = root_branches(spec);
  const int nb = static_cast<int>(branches.size());
  std::vector<std::vector<LoopTable>> found(nb);
  std::vector<SearchStats> stats(nb);
  std::vector<SearchStatus> status(nb, SearchStatus::Unsatisfiable);
  std::atomic<std::uint64_t> shared_nodes{0};
  // Per-branch solution caps cannot be shared exactly; the cap is re-applied
  // after merging.
#ifdef _OPENMP
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (int b = 0; b < nb; ++b) {
    status[b] = search_branch(
        spec, branches[b],
        [&, b](const LoopTable& q) {
          found[b].push_back(q);
          return true;
        },
        stats[b], &shared_nodes);
  }
#ifndef _OPENMP
  (void)workers;
#endif
  EnumerationResult r;
  bool budget = false, any = false;
  for (int b = 0; b < nb; ++b) {
    r.stats += stats[b];
    budget = budget || status[b] == SearchStatus::BudgetExhausted;
    for (LoopTable& q : found[b]) {
      if (spec.limits.solutions && r.loops.size() >= spec.limits.solutions) break;
      r.loops.push_back(std::move(q));
      any = true;
    }
  }
  r.status = budget ? SearchStatus::BudgetExhausted : any ? SearchStatus::Found : SearchStatus::Unsatisfiable;
  if (dedup == Dedup::Iso) dedup_iso(r, spec.order);
  return r;
}

}  // namespace qloop
