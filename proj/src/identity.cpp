#include "qloop/identity.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "qloop/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qloop {

namespace {

enum class Tok { Var, E, Star, Backslash, Slash, LParen, RParen, Equals, PowL, PowR, PowInv, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      std::string word(s.substr(start, i - start));
      out.push_back({word == "e" ? Tok::E : Tok::Var, start, std::move(word)});
      continue;
    }
    switch (c) {
      case '*': out.push_back({Tok::Star, start, "*"}); ++i; continue;
      case '\\': out.push_back({Tok::Backslash, start, "\\"}); ++i; continue;
      case '/': out.push_back({Tok::Slash, start, "/"}); ++i; continue;
      case '(': out.push_back({Tok::LParen, start, "("}); ++i; continue;
      case ')': out.push_back({Tok::RParen, start, ")"}); ++i; continue;
      case '=': out.push_back({Tok::Equals, start, "="}); ++i; continue;
      case '^':
        if (s.substr(i, 3) == "^-1") {
          out.push_back({Tok::PowInv, start, "^-1"});
          i += 3;
          continue;
        }
        if (s.substr(i, 2) == "^l") {
          out.push_back({Tok::PowL, start, "^l"});
          i += 2;
          continue;
        }
        if (s.substr(i, 2) == "^r") {
          out.push_back({Tok::PowR, start, "^r"});
          i += 2;
          continue;
        }
        break;
      default: break;
    }
    throw Error(ErrorKind::UnknownToken, "unexpected '" + std::string(1, c) + "' at position " + std::to_string(start));
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

// Recursive descent over the token list. Variables are numbered by first
// appearance during parsing and renumbered by name afterwards.
class Parser {
 public:
  Parser(std::vector<Token> toks, std::vector<std::string>& vars) : toks_(std::move(toks)), vars_(vars) {}

  Term term() {
    Term t = factor();
    while (peek().kind == Tok::Backslash || peek().kind == Tok::Slash) {
      const TermKind k = next().kind == Tok::Backslash ? TermKind::LDiv : TermKind::RDiv;
      t = Term::binary(k, std::move(t), factor());
    }
    return t;
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    ++pos_;
  }

  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw Error(ErrorKind::SyntaxError,
                msg + " at position " + std::to_string(t.pos) + (t.text.empty() ? "" : " near '" + t.text + "'"));
  }

 private:
  const Token& next() { return toks_[pos_++]; }

  Term factor() {
    Term t = atom();
    while (peek().kind == Tok::Star) {
      ++pos_;
      t = Term::binary(TermKind::Mul, std::move(t), atom());
    }
    return t;
  }

  Term atom() {
    Term t;
    switch (peek().kind) {
      case Tok::Var: {
        const std::string& name = next().text;
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) {
          vars_.push_back(name);
          it = vars_.end() - 1;
        }
        t = Term::variable(static_cast<int>(it - vars_.begin()));
        break;
      }
      case Tok::E:
        ++pos_;
        t = Term::identity();
        break;
      case Tok::LParen:
        ++pos_;
        t = term();
        expect(Tok::RParen, "')'");
        break;
      default: fail("expected variable, 'e' or '('");
    }
    for (;;) {
      const Tok k = peek().kind;
      if (k == Tok::PowL) t = Term::unary(TermKind::LInv, std::move(t));
      else if (k == Tok::PowR) t = Term::unary(TermKind::RInv, std::move(t));
      else if (k == Tok::PowInv) t = Term::unary(TermKind::TwoInv, std::move(t));
      else break;
      ++pos_;
    }
    return t;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string>& vars_;
};

void renumber(Term& t, const std::vector<int>& map) {
  if (t.kind == TermKind::Var) t.var = map[t.var];
  for (Term& a : t.args) renumber(a, map);
}

// Sorts `vars` by name and rewrites variable indices in the given terms.
void sort_vars(std::vector<std::string>& vars, std::initializer_list<Term*> terms) {
  std::vector<std::string> sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> map(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i)
    map[i] = static_cast<int>(std::find(sorted.begin(), sorted.end(), vars[i]) - sorted.begin());
  for (Term* t : terms) renumber(*t, map);
  vars = std::move(sorted);
}

// Postfix program for fast repeated evaluation.
struct Op {
  TermKind kind;
  int var;
};

void compile(const Term& t, std::vector<Op>& out) {
  for (const Term& a : t.args) compile(a, out);
  out.push_back({t.kind, t.var});
}

class Program {
 public:
  explicit Program(const Term& t) { compile(t, ops_); }

  Element run(const LoopTable& q, const Element* assignment) const {
    Element stack[64];
    int sp = 0;
    for (const Op& op : ops_) {
      switch (op.kind) {
        case TermKind::Var: stack[sp++] = assignment[op.var]; break;
        case TermKind::E: stack[sp++] = 0; break;
        case TermKind::Mul:
        case TermKind::LDiv:
        case TermKind::RDiv: {
          const Element b = stack[--sp];
          const Element a = stack[sp - 1];
          if (a == kUndefined || b == kUndefined) {
            stack[sp - 1] = kUndefined;
          } else {
            stack[sp - 1] = op.kind == TermKind::Mul ? q.mul(a, b) : op.kind == TermKind::LDiv ? q.ldiv(a, b) : q.rdiv(a, b);
          }
          break;
        }
        case TermKind::LInv:
        case TermKind::RInv:
        case TermKind::TwoInv: {
          const Element a = stack[sp - 1];
          if (a == kUndefined) break;
          if (op.kind == TermKind::LInv) stack[sp - 1] = q.left_inv(a);
          else if (op.kind == TermKind::RInv) stack[sp - 1] = q.right_inv(a);
          else stack[sp - 1] = q.left_inv(a) == q.right_inv(a) ? q.left_inv(a) : kUndefined;
          break;
        }
      }
    }
    return stack[0];
  }

 private:
  std::vector<Op> ops_;
};

int max_depth(const Term& t) {
  int d = 0;
  for (const Term& a : t.args) d = std::max(d, max_depth(a));
  return d + 1;
}

enum class Outcome { Holds, Counterexample, Undefined };

// Checks assignments with linear index in [begin, end); returns the first
// failing index or `end`.
std::size_t scan(const LoopTable& q, const Program& lhs, const Program& rhs, int k, std::size_t begin, std::size_t end,
                 Outcome& outcome) {
  const int n = q.order();
  std::vector<Element> a(std::max(k, 1), 0);
  std::size_t idx = begin;
  std::size_t rest = begin;
  for (int i = k - 1; i >= 0; --i, rest /= n) a[i] = static_cast<Element>(rest % n);
  for (; idx < end; ++idx) {
    const Element l = lhs.run(q, a.data());
    const Element r = rhs.run(q, a.data());
    if (l == kUndefined || r == kUndefined) {
      outcome = Outcome::Undefined;
      return idx;
    }
    if (l != r) {
      outcome = Outcome::Counterexample;
      return idx;
    }
    for (int i = k - 1; i >= 0; --i) {
      if (++a[i] < n) break;
      a[i] = 0;
    }
  }
  outcome = Outcome::Holds;
  return end;
}

std::vector<Element> decode(std::size_t idx, int k, int n) {
  std::vector<Element> a(k);
  for (int i = k - 1; i >= 0; --i, idx /= n) a[i] = static_cast<Element>(idx % n);
  return a;
}

std::size_t assignment_count(int n, int k) {
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) total *= static_cast<std::size_t>(n);
  return total;
}

void require_evaluable(const Identity& id) {
  if (max_depth(id.lhs) > 60 || max_depth(id.rhs) > 60)
    throw Error(ErrorKind::PreconditionViolated, "term nesting deeper than 60");
}

CheckResult make_result(Outcome outcome, std::size_t idx, int k, int n) {
  CheckResult r;
  if (outcome == Outcome::Holds) return r;
  r.holds = false;
  (outcome == Outcome::Undefined ? r.undefined_at : r.counterexample) = decode(idx, k, n);
  return r;
}

Term mirror_term(const Term& t) {
  switch (t.kind) {
    case TermKind::Var:
    case TermKind::E: return t;
    case TermKind::Mul: return Term::binary(TermKind::Mul, mirror_term(t.args[1]), mirror_term(t.args[0]));
    case TermKind::LDiv: return Term::binary(TermKind::RDiv, mirror_term(t.args[1]), mirror_term(t.args[0]));
    case TermKind::RDiv: return Term::binary(TermKind::LDiv, mirror_term(t.args[1]), mirror_term(t.args[0]));
    case TermKind::LInv: return Term::unary(TermKind::RInv, mirror_term(t.args[0]));
    case TermKind::RInv: return Term::unary(TermKind::LInv, mirror_term(t.args[0]));
    case TermKind::TwoInv: return Term::unary(TermKind::TwoInv, mirror_term(t.args[0]));
  }
  return t;
}

}  // namespace

Term parse_term(std::string_view text, std::vector<std::string>& vars) {
  Parser p(tokenize(text), vars);
  Term t = p.term();
  if (p.peek().kind != Tok::End) p.fail("unexpected trailing input");
  return t;
}

Identity parse_identity(std::string_view text) {
  std::vector<std::string> vars;
  Parser p(tokenize(text), vars);
  Identity id;
  id.lhs = p.term();
  p.expect(Tok::Equals, "'='");
  id.rhs = p.term();
  if (p.peek().kind != Tok::End) p.fail("unexpected trailing input");
  sort_vars(vars, {&id.lhs, &id.rhs});
  id.vars = std::move(vars);
  return id;
}

std::string to_string(const Term& t, const std::vector<std::string>& vars) {
  switch (t.kind) {
    case TermKind::Var: return vars.at(t.var);
    case TermKind::E: return "e";
    case TermKind::Mul: return "(" + to_string(t.args[0], vars) + "*" + to_string(t.args[1], vars) + ")";
    case TermKind::LDiv: return "(" + to_string(t.args[0], vars) + "\\" + to_string(t.args[1], vars) + ")";
    case TermKind::RDiv: return "(" + to_string(t.args[0], vars) + "/" + to_string(t.args[1], vars) + ")";
    case TermKind::LInv: return to_string(t.args[0], vars) + "^l";
    case TermKind::RInv: return to_string(t.args[0], vars) + "^r";
    case TermKind::TwoInv: return to_string(t.args[0], vars) + "^-1";
  }
  return {};
}

std::string to_string(const Identity& id) { return to_string(id.lhs, id.vars) + " = " + to_string(id.rhs, id.vars); }

Identity mirror(const Identity& id) { return {mirror_term(id.lhs), mirror_term(id.rhs), id.vars}; }

bool is_division_free(const Term& t) {
  if (t.kind != TermKind::Var && t.kind != TermKind::E && t.kind != TermKind::Mul) return false;
  return std::all_of(t.args.begin(), t.args.end(), [](const Term& a) { return is_division_free(a); });
}

bool is_division_free(const Identity& id) { return is_division_free(id.lhs) && is_division_free(id.rhs); }

Element eval_term(const Term& t, std::span<const Element> assignment, const LoopTable& q) {
  switch (t.kind) {
    case TermKind::Var:
      if (t.var < 0 || static_cast<std::size_t>(t.var) >= assignment.size())
        throw Error(ErrorKind::UnboundVariable, "variable #" + std::to_string(t.var));
      return assignment[t.var];
    case TermKind::E: return 0;
    default: break;
  }
  std::vector<Element> v;
  for (const Term& a : t.args) {
    v.push_back(eval_term(a, assignment, q));
    if (v.back() == kUndefined) return kUndefined;
  }
  switch (t.kind) {
    case TermKind::Mul: return q.mul(v[0], v[1]);
    case TermKind::LDiv: return q.ldiv(v[0], v[1]);
    case TermKind::RDiv: return q.rdiv(v[0], v[1]);
    case TermKind::LInv: return q.left_inv(v[0]);
    case TermKind::RInv: return q.right_inv(v[0]);
    case TermKind::TwoInv: return q.left_inv(v[0]) == q.right_inv(v[0]) ? q.left_inv(v[0]) : kUndefined;
    default: return kUndefined;
  }
}

CheckResult check(const LoopTable& q, const Identity& id) {
  require_evaluable(id);
  const int k = static_cast<int>(id.vars.size());
  const Program lhs(id.lhs), rhs(id.rhs);
  Outcome outcome;
  const std::size_t idx = scan(q, lhs, rhs, k, 0, assignment_count(q.order(), k), outcome);
  return make_result(outcome, idx, k, q.order());
}

CheckResult check_parallel(const LoopTable& q, const Identity& id, int workers) {
  require_evaluable(id);
  const int k = static_cast<int>(id.vars.size());
  if (k == 0) return check(q, id);
  const int n = q.order();
  const std::size_t block = assignment_count(n, k - 1);
  const Program lhs(id.lhs), rhs(id.rhs);
  std::vector<std::size_t> first(n);
  std::vector<Outcome> outcomes(n);
#ifdef _OPENMP
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (int v = 0; v < n; ++v) {
    const std::size_t begin = static_cast<std::size_t>(v) * block;
    first[v] = scan(q, lhs, rhs, k, begin, begin + block, outcomes[v]);
  }
#ifndef _OPENMP
  (void)workers;
#endif
  for (int v = 0; v < n; ++v)
    if (outcomes[v] != Outcome::Holds) return make_result(outcomes[v], first[v], k, n);
  return {};
}

namespace {

std::vector<CatalogEntry> build_catalog() {
  // Stored fully parenthesized so that the meaning does not depend on the
  // parser's precedence rules.
  const std::vector<std::pair<std::string, std::string>> base = {
      {"associativity", "(x*(y*z)) = ((x*y)*z)"},
      {"commutativity", "(x*y) = (y*x)"},
      {"lns", "((x*x)*(y*z)) = (((x*x)*y)*z)"},
      {"mns", "((x*(y*y))*z) = (x*((y*y)*z))"},
      {"rns", "((x*y)*(z*z)) = (x*(y*(z*z)))"},
      {"commuting_squares", "((x*x)*y) = (y*(x*x))"},
      {"left_c_1", "(x*(y*(y*z))) = ((x*(y*y))*z)"},
      {"left_c_2", "((x*x)*(y*z)) = ((x*(x*y))*z)"},
      {"left_c_3", "(x*(x*(y*z))) = ((x*(x*y))*z)"},
      {"left_c_4", "(x*(x*(y*z))) = (((x*x)*y)*z)"},
      {"c", "(((x*y)*y)*z) = (x*(y*(y*z)))"},
      {"lalt", "(x*(x*y)) = ((x*x)*y)"},
      {"ralt", "((x*y)*y) = (x*(y*y))"},
      {"lip", "(x^l*(x*y)) = y"},
      {"rip", "((x*y)*y^r) = x"},
      {"aaip", "(x*y)^l = (y^l*x^l)"},
      {"aip", "(x*y)^r = (x^r*y^r)"},
      {"two_sided_inverses", "x^l = x^r"},
      {"left_steiner", "(x*(x*y)) = y"},
      {"right_steiner", "((y*x)*x) = y"},
      {"unipotent", "(x*x) = e"},
      {"squaring_endomorphic", "((x*y)*(x*y)) = ((x*x)*(y*y))"},
      {"cs_ident", "((x*x)*(y*y)) = ((x*y)*((x^-1*y^-1))^-1)"},
      {"aip_left_c", "(x*((y*(y*x))*z)) = ((y*x)*((y*x)*z))"},
  };
  std::vector<CatalogEntry> out;
  for (const auto& [name, text] : base) {
    Identity id = parse_identity(text);
    const int k = static_cast<int>(id.vars.size());
    out.push_back({name, std::move(id), k});
  }
  for (int i = 1; i <= 4; ++i) {
    const std::string src = "left_c_" + std::to_string(i);
    const auto it = std::find_if(out.begin(), out.end(), [&](const CatalogEntry& e) { return e.name == src; });
    Identity m = mirror(it->identity);
    const int k = it->var_count;
    out.push_back({"right_c_" + std::to_string(i), std::move(m), k});
  }
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const Identity& catalog_identity(std::string_view name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return e.identity;
  throw Error(ErrorKind::PreconditionViolated, "no catalog identity named '" + std::string(name) + "'");
}

}  // namespace qloop
