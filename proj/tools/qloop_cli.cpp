// Command-line front end. Exit codes: 0 success, 1 negative answer or
// counterexample, 2 usage or parse error.

#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qloop/decomp.hpp"
#include "qloop/error.hpp"
#include "qloop/harness.hpp"
#include "qloop/identity.hpp"
#include "qloop/io.hpp"
#include "qloop/isostrophe.hpp"
#include "qloop/search.hpp"
#include "qloop/variety.hpp"

#ifndef QLOOP_FIXTURE_DIR
#define QLOOP_FIXTURE_DIR "fixtures"
#endif

namespace {

using namespace qloop;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

// Elements on the command line are written in the file's base.
ElementSet parse_set(const std::string& text, const LoadedLoop& l) {
  ElementSet s;
  std::istringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (tok.empty()) continue;
    int v = 0;
    try {
      v = std::stoi(tok) - l.base;
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::UsageError, "bad element '" + tok + "' in --set");
    }
    if (v < 0 || v >= l.loop.order()) throw Error(ErrorKind::UsageError, "element '" + tok + "' out of range");
    s.insert(v);
  }
  return s;
}

std::string assignment_text(const std::vector<Element>& values, const std::vector<std::string>& vars, int base) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += " ";
    out += vars[i] + "=" + std::to_string(values[i] + base);
  }
  return out;
}

int cmd_validate(const std::string& file) {
  try {
    const LoadedLoop l = load_loop(file);
    std::cout << "valid loop of order " << l.loop.order() << "\n";
    return kOk;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    std::cout << "invalid: " << e.what() << "\n";
    return kNegative;
  }
}

int cmd_profile(const std::string& file, bool json) {
  const LoadedLoop l = load_loop(file);
  const PropertyProfile p = profile(l.loop);
  std::cout << (json ? profile_json(p, l.base) : p.render(l.base));
  return kOk;
}

int cmd_nuclei(const std::string& file) {
  const LoadedLoop l = load_loop(file);
  const Nuclei n = l.loop.nuclei();
  const CommutantCenter cc = l.loop.commutant_and_center();
  const int b = l.base;
  std::cout << "left: " << n.left.to_string(b) << "\n"
            << "middle: " << n.middle.to_string(b) << "\n"
            << "right: " << n.right.to_string(b) << "\n"
            << "left_middle: " << n.left_middle.to_string(b) << "\n"
            << "left_right: " << n.left_right.to_string(b) << "\n"
            << "right_middle: " << n.right_middle.to_string(b) << "\n"
            << "nucleus: " << n.nucleus.to_string(b) << "\n"
            << "commutant: " << cc.commutant.to_string(b) << "\n"
            << "center: " << cc.center.to_string(b) << "\n";
  return kOk;
}

int cmd_normal(const std::string& file, const std::string& set) {
  const LoadedLoop l = load_loop(file);
  const ElementSet s = parse_set(set, l);
  const Normality n = l.loop.is_normal(s);
  if (n.normal) {
    std::cout << "normal: true\n";
    return kOk;
  }
  std::cout << "normal: false\n";
  if (n.witness)
    std::cout << "witness: " << n.witness->first + l.base << " " << n.witness->second + l.base << "\n";
  std::cout << "reason: " << n.reason << "\n";
  return kNegative;
}

int cmd_isostrophe(const std::string& file, const std::string& side) {
  const LoadedLoop l = load_loop(file);
  const Side s = side == "left" ? Side::Left : Side::Right;
  std::cout << format_loop(principal_isostrophe(l.loop, s), l.base);
  return kOk;
}

int cmd_quotient(const std::string& file, const std::string& set) {
  const LoadedLoop l = load_loop(file);
  const ElementSet s = parse_set(set, l);
  Quotient qt = [&] {
    try {
      return l.loop.quotient(s);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotNormal) throw;
      std::cout << "not normal: " << e.what() << "\n";
      throw;
    }
  }();
  for (std::size_t i = 0; i < qt.cosets.size(); ++i)
    std::cout << "# coset " << i + l.base << " = " << qt.cosets[i].to_string(l.base) << "\n";
  std::cout << format_loop(qt.table, l.base);
  return kOk;
}

int cmd_decompose(const std::string& file) {
  const LoadedLoop l = load_loop(file);
  std::optional<DecompositionResult> found;
  try {
    found = decompose(l.loop);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PreconditionViolated) throw;
    std::cout << "rejected: " << e.what() << "\n";
    return kNegative;
  }
  const DecompositionResult& r = *found;
  const int b = l.base;
  std::cout << "E: " << r.e_part.to_string(b) << "\n"
            << "O: " << r.o_part.to_string(b) << "\n"
            << "layers:";
  for (const ElementSet& s : r.e_layers) std::cout << " " << s.to_string(b);
  std::cout << "\n# pairing (e, o) -> e*o\n";
  const int no = static_cast<int>(r.o_part.size());
  for (int p = 0; p < r.product.order(); ++p)
    std::cout << r.e_part[p / no] + b << " " << r.o_part[p % no] + b << " -> " << r.iso(p) + b << "\n";
  return kOk;
}

int cmd_check(const std::string& file, const std::string& identity, const std::string& name) {
  if (identity.empty() == name.empty()) throw Error(ErrorKind::UsageError, "give exactly one of --identity and --name");
  const LoadedLoop l = load_loop(file);
  const Identity id = name.empty() ? parse_identity(identity) : catalog_identity(name);
  const CheckResult r = check(l.loop, id);
  std::cout << "identity: " << to_string(id) << "\n";
  if (r.holds) {
    std::cout << "holds\n";
    return kOk;
  }
  if (r.counterexample) std::cout << "counterexample: " << assignment_text(*r.counterexample, id.vars, l.base) << "\n";
  if (r.undefined_at) std::cout << "undefined at: " << assignment_text(*r.undefined_at, id.vars, l.base) << "\n";
  return kNegative;
}

void print_stats(const SearchStats& s) {
  std::cerr << "nodes=" << s.nodes << " propagations=" << s.propagations << " conflicts=" << s.conflicts
            << " complete=" << s.complete_tables << " solutions=" << s.solutions << "\n";
}

int cmd_search(const std::string& file, int base) {
  const SearchSpec spec = parse_search_spec(read_text_file(file));
  const auto start = std::chrono::steady_clock::now();
  const SearchOutcome out = find_one(spec);
  std::cout << "status: " << to_string(out.status) << "\n";
  std::cout << "nodes: " << out.stats.nodes << "\n";
  if (out.loop) std::cout << format_loop(*out.loop, base);
  print_stats(out.stats);
  std::cerr << "seconds=" << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << "\n";
  return out.status == SearchStatus::Found ? kOk : kNegative;
}

int cmd_enumerate(int order, const std::vector<std::string>& require, const std::string& dedup, int workers,
                  bool count_only, int base) {
  SearchSpec spec;
  spec.order = order;
  for (const std::string& r : require)
    spec.required.push_back(r.find('=') == std::string::npos ? catalog_identity(r) : parse_identity(r));
  const Dedup d = dedup == "iso" ? Dedup::Iso : Dedup::None;
  const EnumerationResult r = workers == 1 ? enumerate(spec, d) : enumerate_parallel(spec, d, workers);
  std::cout << "count: " << r.loops.size() << "\n";
  if (!count_only)
    for (const LoopTable& q : r.loops) std::cout << "\n" << format_loop(q, base);
  print_stats(r.stats);
  return kOk;
}

int cmd_verify(const std::vector<std::string>& suite_names, int min_order, int max_order, const std::string& fixtures,
               bool no_fixtures, int workers, bool order7) {
  VerifyOptions opts;
  for (const std::string& s : suite_names) {
    const auto suite = suite_from_name(s);
    if (!suite) throw Error(ErrorKind::UsageError, "unknown suite '" + s + "'");
    opts.suites.push_back(*suite);
  }
  opts.min_order = min_order;
  opts.max_order = max_order;
  opts.fixture_dir = fixtures;
  opts.include_fixtures = !no_fixtures;
  opts.workers = workers;
  opts.allow_order7 = order7;
  const VerificationReport r = verify_theorems(opts);
  std::cout << r.render();
  std::cerr << "seconds=" << r.wall_seconds << "\n";
  return r.passed() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite loop workbench"};
  app.require_subcommand(1);

  std::string file, set, side = "right", identity, name, dedup = "none", fixtures = QLOOP_FIXTURE_DIR;
  bool json = false, count_only = false, no_fixtures = false, order7 = false;
  int order = 0, workers = 1, min_order = 1, max_order = 6, base = 0;
  std::vector<std::string> require, suites;

  auto* validate = app.add_subcommand("validate", "Check that a file holds a valid loop");
  validate->add_option("file", file)->required();
  auto* prof = app.add_subcommand("profile", "Property profile");
  prof->add_option("file", file)->required();
  prof->add_flag("--json", json, "Machine-readable output");
  auto* nuc = app.add_subcommand("nuclei", "Nuclei, commutant and center");
  nuc->add_option("file", file)->required();
  auto* normal = app.add_subcommand("normal", "Normality of a subloop");
  normal->add_option("file", file)->required();
  normal->add_option("--set", set, "Comma-separated elements in the file's base")->required();
  auto* iso = app.add_subcommand("isostrophe", "Principal isostrophe");
  iso->add_option("file", file)->required();
  iso->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  auto* quot = app.add_subcommand("quotient", "Quotient by a normal subloop");
  quot->add_option("file", file)->required();
  quot->add_option("--set", set)->required();
  auto* dec = app.add_subcommand("decompose", "E x O decomposition");
  dec->add_option("file", file)->required();
  auto* chk = app.add_subcommand("check", "Check an identity");
  chk->add_option("file", file)->required();
  chk->add_option("--identity", identity, "Identity text, e.g. \"x*(y*z) = (x*y)*z\"");
  chk->add_option("--name", name, "Catalog identity name");
  auto* srch = app.add_subcommand("search", "Find one loop meeting a search spec");
  srch->add_option("specfile", file)->required();
  srch->add_option("--base", base)->check(CLI::Range(0, 1));
  auto* enu = app.add_subcommand("enumerate", "Enumerate normalized tables");
  enu->add_option("--order", order)->required()->check(CLI::Range(1, 64));
  enu->add_option("--require", require, "Identity text or catalog name; repeatable");
  enu->add_option("--dedup", dedup)->check(CLI::IsMember({"none", "iso"}));
  enu->add_option("--workers", workers)->check(CLI::NonNegativeNumber);
  enu->add_flag("--count-only", count_only);
  enu->add_option("--base", base)->check(CLI::Range(0, 1));
  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("--suite", suites, "S1..S8; repeatable; default all");
  ver->add_option("--min-order", min_order)->check(CLI::Range(1, 7));
  ver->add_option("--max-order", max_order)->check(CLI::Range(0, 7));
  ver->add_option("--fixtures", fixtures);
  ver->add_flag("--no-fixtures", no_fixtures);
  ver->add_option("--workers", workers)->check(CLI::NonNegativeNumber);
  ver->add_flag("--allow-order7", order7, "Permit the 16,942,080-table order 7 run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*prof) return cmd_profile(file, json);
    if (*nuc) return cmd_nuclei(file);
    if (*normal) return cmd_normal(file, set);
    if (*iso) return cmd_isostrophe(file, side);
    if (*quot) return cmd_quotient(file, set);
    if (*dec) return cmd_decompose(file);
    if (*chk) return cmd_check(file, identity, name);
    if (*srch) return cmd_search(file, base);
    if (*enu) return cmd_enumerate(order, require, dedup, workers, count_only, base);
    if (*ver) return cmd_verify(suites, min_order, max_order, fixtures, no_fixtures, workers, order7);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::NotNormal ? kNegative : kUsage;
  }
  return kUsage;
}
