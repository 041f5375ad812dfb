#pragma once

#include "ssdsim/timing.hpp"
#include "ssdsim/units.hpp"

#include <cstdint>

namespace ssdsim {

/// A controller <-> chip channel running one interface protocol.
///
/// Command and address cycles are clocked at t_p (single data rate) for all
/// protocols; only the data phase runs at per_byte_cycle(clock). The
/// controller overhead models per-page firmware/ECC work that holds the
/// channel. Reads and writes carry separate overheads.
struct BusProtocol {
  ClockSpec clock;
  int cmd_cycles_write = 2;
  int cmd_cycles_read = 2;
  int addr_cycles = 5;
  Picoseconds write_page_overhead{};
  Picoseconds read_page_overhead{};

  void validate() const;

  /// Default cycle counts and the calibrated overheads (2 us write, 6 us read).
  static BusProtocol with_defaults(const ClockSpec& clock);
};

/// Command + address phase of a write (data-in follows without releasing the bus).
Picoseconds write_command_time(const BusProtocol& proto);
/// Command + address phase of a read; the chip goes busy for t_R afterwards.
Picoseconds read_command_time(const BusProtocol& proto);
/// `bytes` moved at the protocol's data rate, rounded to the picosecond.
Picoseconds data_phase_time(const BusProtocol& proto, std::int64_t bytes);

/// Whole-page channel occupancy of a program: command, address, data-in and
/// controller overhead.
Picoseconds page_write_bus_time(const BusProtocol& proto, std::int64_t page_size);
/// Whole-page channel occupancy of a read, excluding t_R.
Picoseconds page_read_bus_time(const BusProtocol& proto, std::int64_t page_size);

/// Upper bound on data bytes per second the channel can carry.
double channel_peak_rate(const BusProtocol& proto);

}  // namespace ssdsim
