#pragma once

// Key = value settings file. Every key is optional; the defaults describe
// the calibrated 1-channel SLC device.

#include "ssdsim/energy.hpp"
#include "ssdsim/flash.hpp"
#include "ssdsim/timing.hpp"
#include "ssdsim/topology.hpp"
#include "ssdsim/workload.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ssdsim {

struct Settings {
  TimingParams timing = TimingParams::measured_defaults();
  FlashProfile slc = FlashProfile::slc_default();
  FlashProfile mlc = FlashProfile::mlc_default();

  CellKind cell = CellKind::Slc;
  InterfaceKind interface = InterfaceKind::Ddr;
  std::optional<int> freq_mhz;
  int cmd_cycles_write = 2;
  int cmd_cycles_read = 2;
  int addr_cycles = 5;
  Picoseconds write_page_overhead = us(2);
  Picoseconds read_page_overhead = us(6);

  int channels = 1;
  int ways = 1;
  double host_cap = kSataHostCap;  // bytes/s
  Striping striping = Striping::ChannelMajor;
  std::int64_t pages_per_chip = 1 << 16;

  PowerModel power;

  OpKind mode = OpKind::Write;
  std::int64_t total_bytes = kDefaultPhaseBytes;
  std::int64_t chunk_bytes = kDefaultChunkBytes;

  const FlashProfile& profile(CellKind kind) const { return kind == CellKind::Slc ? slc : mlc; }
  FlashProfile& profile(CellKind kind) { return kind == CellKind::Slc ? slc : mlc; }
};

/// Reads settings on top of the defaults. Unknown keys, duplicate keys and
/// malformed values raise ParseError with the line number.
///
/// Unprefixed flash keys (t_r_ns, t_prog_ns, t_byte_ns, page_size_bytes)
/// apply to the profile selected by cell_kind; slc.* / mlc.* target one
/// profile. page_overhead_ns sets both overheads unless the read/write
/// specific key is also given.
Settings parse_settings(std::istream& in);
Settings load_settings(const std::string& path);

/// Every recognised key, in the order `write_settings` emits them.
std::vector<std::string> settings_keys();
void write_settings(const Settings& settings, std::ostream& out);

/// Device for one sweep point. The flash profile's t_byte bounds the clock.
SsdConfig make_config(const Settings& settings, CellKind cell, InterfaceKind kind, int channels,
                      int ways);
/// Device for the cell, interface and topology named in `settings`.
SsdConfig make_config(const Settings& settings);

/// The trace described by mode / total_bytes / chunk_bytes.
Trace make_trace(const Settings& settings);

}  // namespace ssdsim
