#include "sgl/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

namespace sgl {

std::string format_sci(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

std::string CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["pass"] = pass;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : residuals) {
    nlohmann::ordered_json e;
    e["label"] = r.label;
    e["value"] = r.value;
    if (r.counted)
      e["tolerance"] = r.tolerance;
    else
      e["tolerance"] = nullptr;
    arr.push_back(e);
  }
  j["residuals"] = arr;
  if (!notes.empty()) j["notes"] = notes;
  return j.dump(2);
}

double ConvergenceTable::empirical_order() const {
  // least-squares slope of log error vs log n, sign flipped so that a
  // first-order limit reports +1
  std::vector<double> xs, ys;
  for (const auto& row : rows) {
    if (row.error > 1e-15 && row.n > 0.0) {
      xs.push_back(std::log(row.n));
      ys.push_back(std::log(row.error));
    }
  }
  if (xs.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double m = static_cast<double>(xs.size());
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return -slope;
}

std::string ConvergenceTable::to_csv() const {
  std::string out = "n,error,order_running\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    char nbuf[32];
    if (rows[i].n == std::floor(rows[i].n))
      std::snprintf(nbuf, sizeof nbuf, "%lld",
                    static_cast<long long>(rows[i].n));
    else
      std::snprintf(nbuf, sizeof nbuf, "%.6g", rows[i].n);
    out += nbuf;
    out += ",";
    out += format_sci(rows[i].error);
    out += ",";
    if (i == 0 || rows[i].error <= 1e-15 || rows[i - 1].error <= 1e-15 ||
        rows[i].n <= rows[i - 1].n) {
      out += "nan";
    } else {
      const double order = std::log(rows[i - 1].error / rows[i].error) /
                           std::log(rows[i].n / rows[i - 1].n);
      out += format_sci(order);
    }
    out += "\n";
  }
  return out;
}

MultisetMatch match_multisets(std::vector<cplx> left, std::vector<cplx> right,
                              double tolerance) {
  auto lex = [](const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  };
  std::sort(left.begin(), left.end(), lex);
  std::sort(right.begin(), right.end(), lex);

  MultisetMatch match;
  match.left = left;
  match.right = right;
  match.tolerance = tolerance;
  match.pairing.assign(left.size(), right.size());
  std::vector<bool> used(right.size(), false);

  double bottleneck = 0.0;
  for (std::size_t i = 0; i < left.size(); ++i) {
    std::size_t best = right.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(left[i] - right[j]);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best == right.size()) break;  // right side exhausted
    used[best] = true;
    match.pairing[i] = best;
    const double scale = std::max(1.0, std::abs(left[i]));
    bottleneck = std::max(bottleneck, best_dist / scale);
  }
  match.max_pair_distance = bottleneck;
  match.unmatched = 0;
  for (std::size_t j = 0; j < right.size(); ++j)
    if (!used[j]) ++match.unmatched;
  for (std::size_t i = 0; i < left.size(); ++i)
    if (match.pairing[i] == right.size()) ++match.unmatched;
  match.pass = bottleneck <= tolerance &&
               (left.size() != right.size() || match.unmatched == 0);
  return match;
}

std::string MultisetMatch::to_json() const {
  nlohmann::ordered_json j;
  j["pass"] = pass;
  j["max_pair_distance"] = max_pair_distance;
  j["tolerance"] = tolerance;
  j["unmatched"] = unmatched;
  auto pairs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < left.size(); ++i) {
    nlohmann::ordered_json e;
    e["left_re"] = left[i].real();
    e["left_im"] = left[i].imag();
    if (pairing[i] < right.size()) {
      e["right_re"] = right[pairing[i]].real();
      e["right_im"] = right[pairing[i]].imag();
    }
    pairs.push_back(e);
  }
  j["pairs"] = pairs;
  if (!note.empty()) j["note"] = note;
  return j.dump(2);
}

}  // namespace sgl
