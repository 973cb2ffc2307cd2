#pragma once

#include "eqmot/sigmacx/weight0.hpp"
#include "eqmot/tables/fixtures.hpp"

#include <string>
#include <vector>

namespace eqmot {

struct CellCheck {
  std::string table;  // what was compared, e.g. "weight1/euclidean/Z"
  int a = 0, p = 0;
  std::string expected;
  std::string actual;
  std::string citation;
  bool passed = true;

  bool operator<(const CellCheck& o) const;
};

struct SuiteReport {
  std::string suite;
  std::size_t checked = 0;
  std::vector<CellCheck> cells;       // sorted
  std::vector<std::string> failures;  // failed cells and structural problems
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
  void record(CellCheck cell);
  void fail(std::string message) { failures.push_back(std::move(message)); }
  std::string summary() const;
};

struct HarnessOptions {
  int p_range = 8;    // |p| for the weight 0 grids and the free orbit / transfer checks
  int a_range = 12;   // |a| for the weight 0 grids
  int n_max = 16;     // formal derivations
  int cone_max = 7;   // cone tower for 0 <= p <= cone_max
  int coverage_range = 24;  // |n|, |m| bound for disjointness and overlap checks
};

// weight0-integral, weight0-mod2, free-orbit, transfer-restriction, cone-tower,
// formal-derivations, qclosed-coincidence, fixture-coverage
const std::vector<std::string>& suite_ids();

// "all" runs every suite. Throws std::invalid_argument for an unknown id. A suite whose
// fixtures lack citations is refused: it reports a failure and compares nothing.
std::vector<SuiteReport> run_check(const std::string& id, const HarnessOptions& options = {},
                                   const FixtureSet& fixtures = FixtureSet::standard(),
                                   Weight0Engine* engine = nullptr);
SuiteReport run_suite(const std::string& id, const HarnessOptions& options, const FixtureSet& fixtures,
                      Weight0Engine& engine);

}  // namespace eqmot
