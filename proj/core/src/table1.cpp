#include "specmoore/table1.hpp"

#include <cmath>
#include <cstdio>

#include "specmoore/bounds.hpp"
#include "specmoore/errors.hpp"

namespace specmoore {

const std::vector<Table1Reference>& table1_reference() {
  // Known orders from the degree/diameter survey tables; Lower/Moore/Upper as
  // printed. The (10,2) Upper cell fails its own defining equation
  // G_2(x) = defect, whose root is (-1+sqrt(77))/2 = 3.88748...; the printed
  // neighbors (8,2) and (9,2) match the same equation exactly.
  static const std::vector<Table1Reference> rows = {
      {8, 2, 57, 8, "2.09503", "2.19258", "3.40512", false, ""},
      {9, 2, 74, 8, "2.29956", "2.37228", "3.53113", false, ""},
      {10, 2, 91, 10, "2.46923", "2.54138", "3.88473", true, "3.88748"},
      {4, 3, 41, 12, "2.11232", "2.25342", "2.88396", false, ""},
      {5, 3, 72, 34, "2.42905", "2.62620", "3.77862", false, ""},
      {4, 4, 98, 63, "2.53756", "2.69963", "3.44307", false, ""},
      {5, 4, 212, 214, "2.91829", "3.12941", "4.41922", false, ""},
      {3, 5, 70, 24, "2.32340", "2.39309", "2.64401", false, ""},
      {4, 5, 364, 121, "2.89153", "2.93996", "3.42069", false, ""},
      {3, 6, 132, 58, "2.45777", "2.51283", "2.75001", false, ""},
      {4, 6, 740, 717, "3.00233", "3.08314", "3.73149", false, ""},
  };
  return rows;
}

const Table1Reference* table1_find(int r, int d) {
  for (const auto& row : table1_reference()) {
    if (row.r == r && row.d == d) return &row;
  }
  return nullptr;
}

std::string format_5dp(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.5f", v);
  return buf;
}

std::string format_5dp_truncated(double v) {
  double t = std::trunc(v * 1e5) / 1e5;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.5f", t);
  return buf;
}

Table1Computed compute_table1_row(const Table1Reference& ref) {
  Table1Computed row;
  row.r = ref.r;
  row.d = ref.d;
  row.known = ref.known;
  row.moore_bound_value = moore_bound(ref.r, ref.d);
  row.defect = row.moore_bound_value - ref.known;
  if (row.defect != ref.defect) {
    fail(ErrorKind::CrossCheckFailure,
         "tabulated defect disagrees with moore bound minus known order");
  }
  DefectWindow w = search_window(ref.r, ref.d, ref.known);
  row.lower = w.lower_threshold;
  row.moore = w.lambda_d;
  row.upper = w.beta_threshold;
  row.lower_str = format_5dp(row.lower);
  row.moore_str = format_5dp(row.moore);
  row.upper_str = format_5dp(row.upper);
  row.lower_match = row.lower_str == ref.lower;
  row.moore_match = row.moore_str == ref.moore;
  row.upper_erratum = ref.upper_erratum;
  row.upper_match =
      row.upper_str == (ref.upper_erratum ? ref.upper_corrected : ref.upper);
  return row;
}

std::vector<Table1Computed> compute_table1() {
  std::vector<Table1Computed> out;
  out.reserve(table1_reference().size());
  for (const auto& ref : table1_reference()) {
    out.push_back(compute_table1_row(ref));
  }
  return out;
}

}  // namespace specmoore
