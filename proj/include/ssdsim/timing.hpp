#pragma once

// Interface clock derivation for the asynchronous SDR, synchronous SDR and
// synchronous DDR controller/flash interfaces.

#include "ssdsim/units.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace ssdsim {

enum class InterfaceKind { Conventional, SyncOnly, Ddr };

std::string_view to_string(InterfaceKind kind);
/// Accepts conv|sync|ddr (and the long names conventional|sync_only|proposed).
InterfaceKind parse_interface(std::string_view text);

/// Board and device timing for one interface design. Durations that a
/// design does not use stay zero.
struct TimingParams {
  Picoseconds t_out{};       // controller output delay
  Picoseconds t_in{};        // controller input delay
  Picoseconds t_s{};         // latch setup
  Picoseconds t_h{};         // latch hold
  Picoseconds t_ds{};        // data setup vs. WEB (validated, not used in any period)
  Picoseconds t_dh{};        // data hold vs. WEB (validated, not used in any period)
  Picoseconds t_rea{};       // REB access time
  Picoseconds t_byte{};      // page register <-> IO latch, per byte
  Picoseconds t_diff{};      // DVS vs. IO arrival skew at the board
  Picoseconds t_ios{};       // IO pad setup
  Picoseconds t_ioh{};       // IO pad hold
  Picoseconds t_iod_max{};   // worst IO output delay
  Picoseconds t_rwebd_min{}; // best RWEB input delay
  Fraction alpha{0};         // delayed-clock fraction of the period, in [0, 1/2]

  /// Throws DomainError when an invariant does not hold.
  void validate() const;

  /// The measured values used for the 50 MHz / 83 MHz designs.
  static TimingParams measured_defaults();
};

struct ClockSpec {
  InterfaceKind kind = InterfaceKind::Conventional;
  Picoseconds t_p{};      // resolved clock period, 1000/frequency_mhz ns
  int frequency_mhz = 0;

  /// Builds the spec for a fixed frequency (t_p rounded to the picosecond).
  static ClockSpec at_frequency(InterfaceKind kind, int frequency_mhz);
};

/// t_D = alpha * t_P.
Picoseconds delayed_clock_offset(const Fraction& alpha, Picoseconds t_p);

/// Delay the chip's DLL inserts on RWEB: t_IOD,max - t_RWEBD,min + t_IOS.
/// A negative result means the board timing is inconsistent.
Picoseconds dll_delay(Picoseconds t_iod_max, Picoseconds t_rwebd_min, Picoseconds t_ios);

/// Exact read-path period of the asynchronous interface,
/// (t_OUT + t_REA + t_IN + t_S) / (1 + alpha), in picoseconds.
Fraction conventional_path_period(const TimingParams& p);

Picoseconds tpmin_conventional(const TimingParams& p);
Picoseconds tpmin_proposed_pad(Picoseconds t_ios, Picoseconds t_ioh, Picoseconds t_byte);
Picoseconds tpmin_proposed_board(Picoseconds t_s, Picoseconds t_h, Picoseconds t_diff,
                                 Picoseconds t_byte);

/// floor(1000 / t_pmin[ns]).
int max_frequency_mhz(Picoseconds t_pmin);

/// Minimum period for a given interface kind. The synchronous kinds use the
/// board-level bound; the pad-level bound is available separately.
Picoseconds tpmin_for(InterfaceKind kind, const TimingParams& p);

/// Resolves the clock of an interface at its maximum frequency, or at
/// `frequency_override` if given. An override faster than the timing allows
/// is a DomainError.
ClockSpec resolve_clock(InterfaceKind kind, const TimingParams& p,
                        std::optional<int> frequency_override = std::nullopt);

/// Bus time per data byte (ps, exact): t_p for the SDR kinds, t_p / 2 for DDR.
Fraction per_byte_cycle(const ClockSpec& spec);

}  // namespace ssdsim
