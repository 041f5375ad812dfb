#pragma once

#include "ssdsim/reference_tables.hpp"
#include "ssdsim/timing.hpp"

#include <array>
#include <span>

namespace ssdsim {

/// Average controller power per interface, in milliwatts.
struct PowerModel {
  double conv_mw = 22.6;
  double sync_mw = 42.1;
  double ddr_mw = 46.7;

  double for_kind(InterfaceKind kind) const;
  void validate() const;
};

/// power / bandwidth in nJ per byte. Zero or negative bandwidth is a DomainError.
double energy_per_byte_nj(double power_mw, double bandwidth_bytes_per_s);

struct PowerCalibration {
  PowerModel model;
  // Indexed by InterfaceKind.
  std::array<double, 3> max_relative_deviation{};
  std::array<int, 3> samples{};
};

/// Fits one power constant per interface: the mean over matching
/// configurations of energy (nJ/B) x bandwidth (MB/s). Rows are matched on
/// cell, mode, channels and ways. No overlap is an InputError.
PowerCalibration calibrate_power(std::span<const ReferenceRow> energy_nj_per_byte,
                                 std::span<const ReferenceRow> bandwidth_mb_s);

}  // namespace ssdsim
