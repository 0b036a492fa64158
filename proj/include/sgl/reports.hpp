#pragma once
#include <string>
#include <vector>

#include "sgl/matrix.hpp"

namespace sgl {

struct Residual {
  std::string label;
  double value = 0.0;
  double tolerance = 0.0;
  bool counted = true;  // informational rows carry counted = false
};

// Named residuals with pass/fail against declared tolerances; the universal
// output of identity/theorem checks.
struct CheckReport {
  std::string name;
  bool pass = true;
  std::vector<Residual> residuals;
  std::vector<std::string> notes;

  void require(const std::string& label, double value, double tolerance) {
    residuals.push_back({label, value, tolerance, true});
    if (!(value <= tolerance)) pass = false;
  }
  void info(const std::string& label, double value) {
    residuals.push_back({label, value, 0.0, false});
  }
  void note(std::string text) { notes.push_back(std::move(text)); }

  std::string to_json() const;
};

struct TableRow {
  double n = 0.0;
  double error = 0.0;
};

// Rows (n, error) of a limit formula plus the least-squares order of
// log error against log n. The x column is whatever the limit is taken
// in: the product count n, or lambda for resolvent-type limits.
struct ConvergenceTable {
  std::string target;
  std::vector<TableRow> rows;
  bool exact = false;  // every error at rounding floor

  double empirical_order() const;
  std::string to_csv() const;  // header "n,error,order_running"
};

// Greedy nearest-pair matching of two eigenvalue multisets. Distances are
// normalized by max(1, |expected|) pairwise.
struct MultisetMatch {
  std::vector<cplx> left, right;
  std::vector<std::size_t> pairing;  // left index -> right index
  double max_pair_distance = 0.0;    // normalized bottleneck
  std::size_t unmatched = 0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;

  std::string to_json() const;
};

MultisetMatch match_multisets(std::vector<cplx> left, std::vector<cplx> right,
                              double tolerance);

std::string format_sci(double v);  // 12 significant digits, '.' separator

}  // namespace sgl
