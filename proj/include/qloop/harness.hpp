#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qloop/loop.hpp"
#include "qloop/variety.hpp"

namespace qloop {

enum class Suite { S1 = 1, S2, S3, S4, S5, S6, S7, S8 };

std::optional<Suite> suite_from_name(std::string_view name);  // "S1".."S8", case-insensitive
std::string to_string(Suite s);
std::vector<Suite> all_suites();

// Lazily computed structure of one loop, shared by every check run on it.
class Analysis {
 public:
  Analysis(const LoopTable& q, std::string label);
  ~Analysis();
  Analysis(const Analysis&) = delete;
  Analysis& operator=(const Analysis&) = delete;

  const LoopTable& loop() const { return q_; }
  const std::string& label() const { return label_; }
  const PropertyProfile& profile() const;
  const LoopTable& right_isostrophe() const;
  const LoopTable& left_isostrophe() const;
  const PropertyProfile& right_isostrophe_profile() const;
  const std::vector<ElementSet>& subloops() const;
  const std::vector<ElementSet>& normal_subloops() const;
  bool simple() const;
  bool squares_in_two_nuclei() const;

 private:
  struct Cache;
  const LoopTable& q_;
  std::string label_;
  std::unique_ptr<Cache> cache_;
};

// Outcome of one claim on one loop.
struct Verdict {
  enum class Kind { NotApplicable, Holds, Fails };
  Kind kind = Kind::NotApplicable;
  std::string assignment;  // elements involved, 0-based
  std::string detail;

  static Verdict not_applicable() { return {}; }
  static Verdict holds() { return {Kind::Holds, {}, {}}; }
  static Verdict fails(std::string assignment, std::string detail) {
    return {Kind::Fails, std::move(assignment), std::move(detail)};
  }
};

struct Claim {
  std::string id;         // "S5.lmnuc_normal"
  Suite suite;
  std::string statement;  // hypotheses => conclusion, in words
  // A negative control asserts a strengthened claim that must be refuted
  // somewhere in the catalog; a failure is the expected outcome.
  bool negative_control = false;
  std::function<Verdict(const Analysis&)> check;
};

// Every claim, grouped by suite in suite order.
const std::vector<Claim>& claims();

enum class ClaimStatus {
  Verified,          // held on every applicable loop
  Counterexample,    // a positive claim failed
  Skipped,           // no loop met the hypotheses
  ExpectedFailure,   // negative control refuted, as it must be
  ControlNotRefuted  // negative control never failed although it should
};
std::string_view to_string(ClaimStatus s);

struct CounterexampleRecord {
  std::string loop_label;
  std::string loop_text;  // format_loop(q, 0)
  std::string assignment;
  std::string detail;
};

struct ClaimResult {
  std::string id;
  std::string statement;
  ClaimStatus status = ClaimStatus::Skipped;
  std::uint64_t examined = 0;
  std::uint64_t applicable = 0;
  std::optional<CounterexampleRecord> counterexample;
  std::string note;
};

struct SuiteReport {
  Suite suite;
  std::vector<ClaimResult> claims;
};

struct CatalogSummary {
  std::string label;  // "fixtures", "order 5", ...
  std::uint64_t loops = 0;
};

struct VerificationReport {
  std::vector<CatalogSummary> catalogs;
  std::vector<SuiteReport> suites;
  double wall_seconds = 0;  // informational; excluded from render()

  // No counterexample and no unrefuted control.
  bool passed() const;
  // Deterministic text: catalog sizes, then one line per claim.
  std::string render() const;
};

struct CatalogLoop {
  LoopTable loop;
  std::string label;
};

// Every *.loop file in `dir`, sorted by file name; labels are file stems.
std::vector<CatalogLoop> fixture_catalog(const std::filesystem::path& dir);

struct VerifyOptions {
  std::vector<Suite> suites;  // empty selects all
  int min_order = 1;
  int max_order = 6;
  bool include_fixtures = true;
  std::filesystem::path fixture_dir;
  int workers = 1;
  // Order 7 has 16,942,080 normalized tables; it is only run on request.
  bool allow_order7 = false;
};

// Runs the selected claims over the fixtures and over every normalized
// table of each order in [min_order, max_order]. Exhaustive orders are
// streamed from the enumerator, so memory stays flat. For a fixed option
// set the rendered report does not depend on `workers`: the counterexample
// kept for a claim is always the first in catalog order.
VerificationReport verify_theorems(const VerifyOptions& opts);

// Same, over an explicit catalog.
VerificationReport verify_catalog(const std::vector<CatalogLoop>& loops, const std::vector<Suite>& suites,
                                  const std::string& catalog_label, int workers = 1);

// Known property values of the fixture tables, keyed by file stem.
struct FixtureExpectation {
  std::string label;
  std::vector<std::pair<std::string, bool>> flags;
};
const std::vector<FixtureExpectation>& fixture_expectations();

}  // namespace qloop
