#pragma once

#include <functional>

#include "gfc/autgroup.hpp"

namespace gfc {

struct CheckRecord {
  std::string name;      // what was checked, with its parameters
  std::string anchor;    // stable check id for regression diffing
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  int64_t passed = 0, failed = 0;
  double wall_ms = 0;
  bool ok() const { return failed == 0; }
};

struct VerifyConfig {
  std::vector<std::pair<int64_t, int>> fields = {{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}};
  int64_t max_exp = 10;          // n, m range over 2..max_exp
  int samples_per_cell = 3;      // coefficient samples per (family, q, n, m)
  int workers = 1;
  int64_t place_count_bound = 2500;  // q^L cap for the place-count cross-check
};

// One curve of the verification grid, in canonical order.
struct GridCurve {
  Family fam;
  int64_t p;
  int h;
  int64_t n, m;
  std::vector<int64_t> params;
  std::string label() const;
};

std::vector<GridCurve> build_grid(const VerifyConfig& cfg);
CurveSpec realize(const GridCurve& gc);

// Suites mirror the acceptance criteria:
//   genus, orbits, frobenius, dickson, quotients, groups, interchange,
//   equiv, places; plus "fields" (basic arithmetic invariants).
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg);
std::vector<SuiteReport> run_all(const VerifyConfig& cfg);

}  // namespace gfc
