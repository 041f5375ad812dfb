#pragma once

#include "ssdsim/units.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace ssdsim {

enum class CellKind { Slc, Mlc };

std::string_view to_string(CellKind kind);
CellKind parse_cell(std::string_view text);

using PageId = std::int64_t;

struct FlashProfile {
  CellKind cell = CellKind::Slc;
  Picoseconds t_r{};     // cell array -> page register
  Picoseconds t_prog{};  // page register -> cell array
  Picoseconds t_byte{};  // register <-> IO latch per byte; bounds the clock, never added
  std::int64_t page_size = 0;

  /// t_prog > t_r > 0, t_byte >= 0, page_size a positive power of two.
  void validate() const;

  /// Calibrated device defaults: 2 KiB / 25 us / 220 us for SLC and
  /// 4 KiB / 60 us / 800 us for MLC. See docs/calibration.md.
  static FlashProfile slc_default();
  static FlashProfile mlc_default();
  static FlashProfile defaults_for(CellKind cell);
};

/// One NAND die: page register plus the busy/ready line.
///
/// Busy states resolve lazily: a chip whose busy window has elapsed behaves
/// as finished the next time it is queried or commanded. Overlapping
/// commands are rejected with SchedulingError, never queued.
class NandChip {
 public:
  enum class State { Idle, BusyFetch, BusyProgram, ReadyToTransfer };

  explicit NandChip(FlashProfile profile);

  const FlashProfile& profile() const { return profile_; }
  State state() const { return state_; }
  Picoseconds busy_until() const { return busy_until_; }
  const std::optional<PageId>& registered_page() const { return registered_page_; }
  /// Total time spent in cell-array operations.
  Picoseconds busy_time() const { return busy_time_; }

  /// Idle, or busy with the busy window over (boundary inclusive).
  bool is_available(Picoseconds now) const;

  /// Applies any busy-state completion that has happened by `now`.
  void settle(Picoseconds now);

  /// Starts a page fetch. Returns the completion time now + t_R.
  Picoseconds issue_fetch(PageId page, Picoseconds now);

  /// Data-in from the controller finished: the register holds `page`.
  void load_register(PageId page, Picoseconds now);

  /// Programs the loaded register. Returns now + t_PROG.
  Picoseconds issue_program(Picoseconds now);

  /// Data-out to the controller finished; the register is free again.
  void release_register(Picoseconds now);

 private:
  FlashProfile profile_;
  State state_ = State::Idle;
  Picoseconds busy_until_{};
  Picoseconds busy_time_{};
  std::optional<PageId> registered_page_;
};

std::string_view to_string(NandChip::State state);

}  // namespace ssdsim
