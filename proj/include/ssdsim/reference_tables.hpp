#pragma once

// Published measurements the simulator is regressed against: single-channel
// way sweeps, equal-chip-count channel/way sweeps (bandwidth, MB/s) and the
// SLC controller energy per byte (nJ/B) of the way sweep.

#include "ssdsim/flash.hpp"
#include "ssdsim/timing.hpp"
#include "ssdsim/workload.hpp"

#include <optional>
#include <span>
#include <vector>

namespace ssdsim {

struct ReferenceRow {
  CellKind cell;
  OpKind mode;
  int channels;
  int ways;
  // nullopt where the measurement hit the host-interface ceiling.
  std::optional<double> conv;
  std::optional<double> sync;
  std::optional<double> ddr;
  // Published ratio columns, rounded to two decimals.
  std::optional<double> ratio_ddr_sync;
  std::optional<double> ratio_ddr_conv;

  std::optional<double> value(InterfaceKind kind) const;
};

/// 1 channel x {1,2,4,8,16} ways, SLC and MLC, write and read. 20 rows.
std::span<const ReferenceRow> way_sweep_bandwidth();
/// {1x16, 2x8, 4x4}, SLC and MLC, write and read. 12 rows.
std::span<const ReferenceRow> channel_sweep_bandwidth();
/// SLC way sweep energy per byte. 10 rows.
std::span<const ReferenceRow> way_sweep_energy();

/// Finds the row for a configuration, or nullptr.
const ReferenceRow* find_row(std::span<const ReferenceRow> rows, CellKind cell, OpKind mode,
                             int channels, int ways);

}  // namespace ssdsim
