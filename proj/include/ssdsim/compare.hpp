#pragma once

#include "ssdsim/reference_tables.hpp"
#include "ssdsim/sweep.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ssdsim {

struct ReferenceTable {
  std::string name;
  std::span<const ReferenceRow> rows;
  // Adds the way-sweep saturation checks to the report.
  bool saturation_checks = false;
};

/// The way-sweep and channel-sweep bandwidth tables.
std::vector<ReferenceTable> bandwidth_references();

struct CellComparison {
  std::string table;
  CellKind cell;
  OpKind mode;
  int channels;
  int ways;
  InterfaceKind interface;
  double reference;  // MB/s
  double simulated;  // MB/s
  double relative_error;
  bool within;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ComparisonReport {
  double tolerance = 0;
  std::vector<CellComparison> cells;
  std::vector<std::string> missing;
  std::vector<CheckResult> checks;
  bool pass = false;

  /// Up to n comparisons with the largest relative error, largest first.
  std::vector<CellComparison> worst(std::size_t n) const;
};

/// Looks up a result row, or nullptr.
const ResultRow* find_result(const std::vector<ResultRow>& rows, CellKind cell, OpKind mode,
                             int channels, int ways, InterfaceKind kind);

/// Smallest way count after which bandwidth stays within `tolerance` of its
/// value there, over the rows with the given channel count. nullopt if the
/// rows do not cover at least two way counts.
std::optional<int> saturation_ways(const std::vector<ResultRow>& rows, CellKind cell, OpKind mode,
                                   InterfaceKind kind, int channels = 1, double tolerance = 0.01);

/// Compares every reference entry within `tolerance` (relative) and checks
/// that entries the reference marks as host-limited come out capped.
/// Reference keys absent from `results` are listed and fail the report.
ComparisonReport compare_tables(const std::vector<ResultRow>& results, double tolerance,
                                const std::vector<ReferenceTable>& references = bandwidth_references());

void print_report(const ComparisonReport& report, std::ostream& out, std::size_t worst = 10);

}  // namespace ssdsim
