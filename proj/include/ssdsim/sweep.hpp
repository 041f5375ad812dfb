#pragma once

#include "ssdsim/config.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ssdsim {

struct SweepPoint {
  int channels = 1;
  int ways = 1;
  friend bool operator==(const SweepPoint&, const SweepPoint&) = default;
};

struct ExperimentPlan {
  std::vector<SweepPoint> sweep;
  std::vector<InterfaceKind> interfaces;
  std::vector<CellKind> cells;
  std::vector<OpKind> modes;
  std::int64_t total_bytes = kDefaultPhaseBytes;
  std::int64_t chunk_bytes = kDefaultChunkBytes;
  std::string output;  // CSV path; empty means stdout

  /// Every list non-empty and the trace parameters usable.
  void validate() const;
  std::size_t size() const {
    return sweep.size() * interfaces.size() * cells.size() * modes.size();
  }
};

/// 1 channel x {1,2,4,8,16} ways, both cells, both modes, all interfaces.
ExperimentPlan way_sweep_plan();
/// {1x16, 2x8, 4x4}, both cells, both modes, all interfaces.
ExperimentPlan channel_sweep_plan();
/// The configuration named in `settings` as a one-row plan.
ExperimentPlan single_plan(const Settings& settings);
/// way-sweep | channel-sweep
ExperimentPlan preset_plan(std::string_view name);

/// Plan file: key = value lines with comma-separated lists, e.g.
///   sweep = 1x1, 1x2, 2x8
///   interfaces = conv, ddr
///   cells = slc
///   modes = write, read
///   total_bytes = 67108864
///   chunk_bytes = 65536
///   output = out.csv
/// Missing list keys default to all values; sweep is required.
ExperimentPlan parse_plan(std::istream& in);
ExperimentPlan load_plan(const std::string& path);

struct ResultRow {
  CellKind cell = CellKind::Slc;
  OpKind mode = OpKind::Write;
  int channels = 1;
  int ways = 1;
  InterfaceKind interface = InterfaceKind::Conventional;
  double bandwidth_mb_s = 0;
  double energy_nj_b = 0;
  bool capped = false;
  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

/// A run inside a sweep failed; the message names the configuration.
class SweepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rows in plan order: cells, then modes, then sweep points, then interfaces.
/// Points run on OpenMP threads, one engine per point.
std::vector<ResultRow> run_plan(const ExperimentPlan& plan, const Settings& settings);
/// Same result, computed on the calling thread.
std::vector<ResultRow> run_plan_serial(const ExperimentPlan& plan, const Settings& settings);

/// Result for a single sweep point.
ResultRow run_point(const Settings& settings, CellKind cell, OpKind mode, SweepPoint point,
                    InterfaceKind kind, std::int64_t total_bytes, std::int64_t chunk_bytes);

constexpr std::string_view kCsvHeader =
    "cell,mode,channels,ways,interface,bandwidth_mb_s,energy_nj_b,capped";

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out);
/// Reads what write_csv produces. ParseError on malformed lines.
std::vector<ResultRow> read_csv(std::istream& in);

}  // namespace ssdsim
