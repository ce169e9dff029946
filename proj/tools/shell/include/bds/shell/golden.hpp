#pragma once

// The checked-in golden corpus (tools/data/golden.tsv), embedded at build time.

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace bds::shell {

inline const std::vector<std::string> kGoldenColumns = {
    "case_id", "g_type", "nu", "k1_type", "k2_type", "l_type", "dim_u1", "dim_u2", "s",
    "deg_tau1", "self_dual", "bilinear", "inv_degree", "note"};

/// Columns compared by `cases --verify`; the rest need --invariants.
inline const std::vector<std::string> kStructuralColumns = {
    "g_type", "nu", "k1_type", "k2_type", "l_type", "dim_u1", "dim_u2", "s", "deg_tau1"};
inline const std::vector<std::string> kInvariantColumns = {"self_dual", "bilinear", "inv_degree"};

struct GoldenRow {
  std::map<std::string, std::string> cells;

  const std::string& id() const { return cells.at("case_id"); }
  const std::string& at(const std::string& col) const { return cells.at(col); }
  /// "-" marks a cell with no transcribed value.
  bool has(const std::string& col) const;
};

/// Throws std::invalid_argument on a malformed corpus (wrong header or column count).
std::vector<GoldenRow> parse_golden(std::string_view text);
std::string_view embedded_golden_text();
const std::vector<GoldenRow>& embedded_golden();

}  // namespace bds::shell
