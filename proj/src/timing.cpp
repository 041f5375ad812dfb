#include "ssdsim/timing.hpp"

#include "ssdsim/errors.hpp"

#include <algorithm>
#include <string>

namespace ssdsim {

namespace {

void require_non_negative(Picoseconds v, const char* name) {
  if (v.count() < 0) throw DomainError(std::string(name) + " must be >= 0");
}

}  // namespace

std::string_view to_string(InterfaceKind kind) {
  switch (kind) {
    case InterfaceKind::Conventional: return "conv";
    case InterfaceKind::SyncOnly: return "sync";
    case InterfaceKind::Ddr: return "ddr";
  }
  return "?";
}

InterfaceKind parse_interface(std::string_view text) {
  if (text == "conv" || text == "conventional") return InterfaceKind::Conventional;
  if (text == "sync" || text == "sync_only") return InterfaceKind::SyncOnly;
  if (text == "ddr" || text == "proposed") return InterfaceKind::Ddr;
  throw InputError("unknown interface '" + std::string(text) + "' (expected conv|sync|ddr)");
}

void TimingParams::validate() const {
  require_non_negative(t_out, "t_out");
  require_non_negative(t_in, "t_in");
  require_non_negative(t_s, "t_s");
  require_non_negative(t_h, "t_h");
  require_non_negative(t_ds, "t_ds");
  require_non_negative(t_dh, "t_dh");
  require_non_negative(t_rea, "t_rea");
  require_non_negative(t_diff, "t_diff");
  require_non_negative(t_ios, "t_ios");
  require_non_negative(t_ioh, "t_ioh");
  require_non_negative(t_iod_max, "t_iod_max");
  require_non_negative(t_rwebd_min, "t_rwebd_min");
  if (t_byte.count() <= 0) throw DomainError("t_byte must be > 0");
  if (alpha < 0 || alpha > Fraction(1, 2)) throw DomainError("alpha must lie in [0, 1/2]");
}

TimingParams TimingParams::measured_defaults() {
  TimingParams p;
  p.t_out = Picoseconds{7820};
  p.t_in = Picoseconds{1650};
  p.t_s = Picoseconds{250};
  p.t_h = Picoseconds{20};
  p.t_diff = Picoseconds{4690};
  p.t_rea = ns(20);
  p.t_byte = ns(12);
  p.alpha = Fraction(1, 2);
  return p;
}

ClockSpec ClockSpec::at_frequency(InterfaceKind kind, int frequency_mhz) {
  if (frequency_mhz <= 0) throw DomainError("frequency must be > 0 MHz");
  return ClockSpec{kind, round_picos(Fraction(1000000, frequency_mhz)), frequency_mhz};
}

Picoseconds delayed_clock_offset(const Fraction& alpha, Picoseconds t_p) {
  if (alpha < 0 || alpha > Fraction(1, 2)) throw DomainError("alpha must lie in [0, 1/2]");
  if (t_p.count() <= 0) throw DomainError("t_p must be > 0");
  return round_picos(alpha * t_p.count());
}

Picoseconds dll_delay(Picoseconds t_iod_max, Picoseconds t_rwebd_min, Picoseconds t_ios) {
  require_non_negative(t_iod_max, "t_iod_max");
  require_non_negative(t_rwebd_min, "t_rwebd_min");
  require_non_negative(t_ios, "t_ios");
  const Picoseconds d = t_iod_max - t_rwebd_min + t_ios;
  if (d.count() < 0) throw DomainError("DLL delay is negative: board timing is unrealizable");
  return d;
}

Fraction conventional_path_period(const TimingParams& p) {
  p.validate();
  const auto path = (p.t_out + p.t_rea + p.t_in + p.t_s).count();
  return Fraction(path) / (Fraction(1) + p.alpha);
}

Picoseconds tpmin_conventional(const TimingParams& p) {
  return std::max(round_picos(conventional_path_period(p)), p.t_byte);
}

Picoseconds tpmin_proposed_pad(Picoseconds t_ios, Picoseconds t_ioh, Picoseconds t_byte) {
  require_non_negative(t_ios, "t_ios");
  require_non_negative(t_ioh, "t_ioh");
  require_non_negative(t_byte, "t_byte");
  return std::max(2 * (t_ios + t_ioh), t_byte);
}

Picoseconds tpmin_proposed_board(Picoseconds t_s, Picoseconds t_h, Picoseconds t_diff,
                                 Picoseconds t_byte) {
  require_non_negative(t_s, "t_s");
  require_non_negative(t_h, "t_h");
  require_non_negative(t_diff, "t_diff");
  require_non_negative(t_byte, "t_byte");
  return std::max(2 * (t_s + t_h + t_diff), t_byte);
}

int max_frequency_mhz(Picoseconds t_pmin) {
  if (t_pmin.count() <= 0) throw DomainError("t_pmin must be > 0");
  return static_cast<int>(1000000 / t_pmin.count());
}

Picoseconds tpmin_for(InterfaceKind kind, const TimingParams& p) {
  p.validate();
  switch (kind) {
    case InterfaceKind::Conventional:
      return tpmin_conventional(p);
    case InterfaceKind::SyncOnly:
    case InterfaceKind::Ddr:
      return tpmin_proposed_board(p.t_s, p.t_h, p.t_diff, p.t_byte);
  }
  throw DomainError("unknown interface kind");
}

ClockSpec resolve_clock(InterfaceKind kind, const TimingParams& p,
                        std::optional<int> frequency_override) {
  const int fmax = max_frequency_mhz(tpmin_for(kind, p));
  if (fmax <= 0) throw DomainError("interface cannot reach 1 MHz with these timings");
  const int f = frequency_override.value_or(fmax);
  if (f > fmax)
    throw DomainError("requested " + std::to_string(f) + " MHz exceeds the " +
                      std::to_string(fmax) + " MHz the timing allows");
  return ClockSpec::at_frequency(kind, f);
}

Fraction per_byte_cycle(const ClockSpec& spec) {
  const Fraction t_p(spec.t_p.count());
  return spec.kind == InterfaceKind::Ddr ? t_p / 2 : t_p;
}

}  // namespace ssdsim
