#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace specmoore {

// One published row of the small-(r,D) survey table. The string fields carry
// the 5-decimal values as printed; `upper_erratum` marks the single cell
// whose printed value contradicts the defect-bound formula it came from (see
// data/table1_known.json for the same records with provenance notes).
struct Table1Reference {
  int r;
  int d;
  std::int64_t known;
  std::int64_t defect;
  const char* lower;
  const char* moore;
  const char* upper;
  bool upper_erratum;
  const char* upper_corrected;  // formula-consistent value when erratum
};

// Data version 1; 11 rows.
const std::vector<Table1Reference>& table1_reference();

// Reference row lookup by (r, D); null when the pair is not tabulated.
const Table1Reference* table1_find(int r, int d);

struct Table1Computed {
  int r;
  int d;
  std::int64_t known;
  std::int64_t moore_bound_value;
  std::int64_t defect;
  double lower;
  double moore;  // lambda^(D)
  double upper;
  std::string lower_str;
  std::string moore_str;
  std::string upper_str;
  bool lower_match;
  bool moore_match;
  bool upper_match;  // against the erratum-corrected expectation
  bool upper_erratum;
};

// Recomputes one row and diffs it against the reference strings under the
// frozen 5-decimal round-half-even convention.
Table1Computed compute_table1_row(const Table1Reference& ref);

// All rows in table order.
std::vector<Table1Computed> compute_table1();

// The frozen formatting convention.
std::string format_5dp(double v);
// Truncation toward zero at 5 decimals; kept for the convention test.
std::string format_5dp_truncated(double v);

}  // namespace specmoore
