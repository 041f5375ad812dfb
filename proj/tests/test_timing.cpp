#include "ssdsim/errors.hpp"
#include "ssdsim/timing.hpp"

#include <doctest.h>

using namespace ssdsim;

namespace {

TimingParams path(std::int64_t out, std::int64_t rea, std::int64_t in, std::int64_t s, Fraction alpha,
                  std::int64_t byte) {
  TimingParams p;
  p.t_out = Picoseconds{out};
  p.t_rea = Picoseconds{rea};
  p.t_in = Picoseconds{in};
  p.t_s = Picoseconds{s};
  p.alpha = alpha;
  p.t_byte = Picoseconds{byte};
  return p;
}

}  // namespace

TEST_CASE("delayed clock offset") {
  CHECK(delayed_clock_offset(Fraction(0), ns(20)) == Picoseconds{0});
  CHECK(delayed_clock_offset(Fraction(1, 2), Picoseconds{19810}) == Picoseconds{9905});
  CHECK(delayed_clock_offset(Fraction(1, 4), ns(12)) == ns(3));
  CHECK_THROWS_AS(delayed_clock_offset(Fraction(3, 4), ns(12)), DomainError);
  CHECK_THROWS_AS(delayed_clock_offset(Fraction(-1, 4), ns(12)), DomainError);
  CHECK_THROWS_AS(delayed_clock_offset(Fraction(1, 4), Picoseconds{0}), DomainError);
}

TEST_CASE("dll delay") {
  CHECK(dll_delay(ns(5), ns(5), Picoseconds{0}) == Picoseconds{0});
  CHECK(dll_delay(ns(8), ns(3), Picoseconds{250}) == Picoseconds{5250});
  CHECK_THROWS_AS(dll_delay(ns(3), ns(5), Picoseconds{250}), DomainError);
}

TEST_CASE("conventional minimum period") {
  const auto p = TimingParams::measured_defaults();
  // (7.82 + 20 + 1.65 + 0.25) / 1.5 = 29.72 / 1.5
  CHECK(conventional_path_period(p) == Fraction(29720 * 2, 3));
  CHECK(tpmin_conventional(p) == Picoseconds{19813});
  CHECK(tpmin_conventional(path(0, 0, 0, 0, Fraction(1, 2), 12000)) == ns(12));
  CHECK(tpmin_conventional(path(10000, 10000, 5000, 5000, Fraction(0), 1000)) == ns(30));
}

TEST_CASE("proposed minimum period, pad level") {
  CHECK(tpmin_proposed_pad(ns(1), ns(1), ns(12)) == ns(12));
  CHECK(tpmin_proposed_pad(ns(4), ns(3), ns(12)) == ns(14));
  CHECK(tpmin_proposed_pad(Picoseconds{0}, Picoseconds{0}, ns(5)) == ns(5));
}

TEST_CASE("proposed minimum period, board level") {
  CHECK(tpmin_proposed_board(Picoseconds{250}, Picoseconds{20}, Picoseconds{4690}, ns(12)) == ns(12));
  CHECK(tpmin_proposed_board(ns(3), ns(1), ns(2), ns(10)) == ns(12));
  CHECK(tpmin_proposed_board(Picoseconds{0}, Picoseconds{0}, Picoseconds{0}, ns(7)) == ns(7));
  // a 0.2 ns hold time gives the same answer
  CHECK(tpmin_proposed_board(Picoseconds{250}, Picoseconds{200}, Picoseconds{4690}, ns(12)) == ns(12));
}

TEST_CASE("maximum frequency") {
  CHECK(max_frequency_mhz(Picoseconds{19813}) == 50);
  CHECK(max_frequency_mhz(ns(12)) == 83);
  CHECK(max_frequency_mhz(ns(1000)) == 1);
  CHECK(max_frequency_mhz(ns(1)) == 1000);
}

TEST_CASE("resolved clocks") {
  const auto p = TimingParams::measured_defaults();
  const auto conv = resolve_clock(InterfaceKind::Conventional, p);
  CHECK(conv.frequency_mhz == 50);
  CHECK(conv.t_p == ns(20));
  const auto ddr = resolve_clock(InterfaceKind::Ddr, p);
  CHECK(ddr.frequency_mhz == 83);
  CHECK(ddr.t_p == Picoseconds{12048});
  CHECK(resolve_clock(InterfaceKind::SyncOnly, p).t_p == Picoseconds{12048});
  CHECK(resolve_clock(InterfaceKind::Ddr, p, 40).t_p == ns(25));
  CHECK_THROWS_AS(resolve_clock(InterfaceKind::Conventional, p, 51), DomainError);
  CHECK_THROWS_AS(ClockSpec::at_frequency(InterfaceKind::Ddr, 0), DomainError);
}

TEST_CASE("per-byte cycle") {
  CHECK(per_byte_cycle(ClockSpec::at_frequency(InterfaceKind::Conventional, 50)) == Fraction(20000));
  CHECK(per_byte_cycle(ClockSpec::at_frequency(InterfaceKind::Ddr, 83)) == Fraction(6024));
  CHECK(per_byte_cycle(ClockSpec::at_frequency(InterfaceKind::SyncOnly, 83)) == Fraction(12048));
}

TEST_CASE("timing parameter validation") {
  auto p = TimingParams::measured_defaults();
  CHECK_NOTHROW(p.validate());
  p.t_ds = Picoseconds{-1};
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = TimingParams::measured_defaults();
  p.t_byte = Picoseconds{0};
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = TimingParams::measured_defaults();
  p.alpha = Fraction(2, 3);
  CHECK_THROWS_AS(tpmin_conventional(p), DomainError);
}

TEST_CASE("interface names") {
  CHECK(parse_interface("conv") == InterfaceKind::Conventional);
  CHECK(parse_interface("proposed") == InterfaceKind::Ddr);
  CHECK(parse_interface(to_string(InterfaceKind::SyncOnly)) == InterfaceKind::SyncOnly);
  CHECK_THROWS_AS(parse_interface("qdr"), InputError);
}
