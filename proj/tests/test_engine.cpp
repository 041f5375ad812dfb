#include "ssdsim/engine.hpp"
#include "ssdsim/errors.hpp"
#include "ssdsim/event_queue.hpp"

#include <doctest.h>

using namespace ssdsim;

namespace {

// Conventional 50 MHz SLC with the default overheads, written out by hand:
// command + address = 7 cycles of 20 ns.
constexpr auto kCmd = Picoseconds{7 * 20000};
constexpr auto kWriteBus = kCmd + Picoseconds{2048LL * 20000} + Picoseconds{2000000};
constexpr auto kReadData = Picoseconds{2048LL * 20000} + Picoseconds{6000000};
constexpr auto kTr = Picoseconds{25000000};
constexpr auto kTprog = Picoseconds{220000000};

SsdConfig conv_slc(int channels, int ways) {
  SsdConfig c;
  c.n_channels = channels;
  c.n_ways = ways;
  c.profile = FlashProfile::slc_default();
  c.protocol = BusProtocol::with_defaults(ClockSpec::at_frequency(InterfaceKind::Conventional, 50));
  return c;
}

Stats one_request(const SsdConfig& c, OpKind op, std::int64_t pages) {
  return simulate(c, Trace{{op, 0, pages * c.profile.page_size}});
}

}  // namespace

TEST_CASE("event queue order") {
  EventQueue q;
  CHECK_THROWS_AS(q.pop_next(), std::logic_error);
  q.push(Picoseconds{5}, EventKind::BusFree, 0, 0, 0);
  q.push(Picoseconds{3}, EventKind::ChipFetchDone, 0, 1, 0);
  CHECK(q.pop_next().time == Picoseconds{3});
  CHECK(q.pop_next().time == Picoseconds{5});

  const auto a = q.push(Picoseconds{5}, EventKind::BusFree, 0, 0, 0);
  const auto b = q.push(Picoseconds{5}, EventKind::PageOpStart, 0, 1, 0);
  CHECK(b > a);
  const auto first = q.pop_next();
  CHECK(first.seq == a);
  CHECK(first.kind == EventKind::BusFree);
  CHECK(q.pop_next().seq == b);

  q.push(Picoseconds{9}, EventKind::RequestDone, -1, -1, 4);
  CHECK(q.size() == 1);
  CHECK(q.pop_next().request == 4);
  CHECK(q.empty());
}

TEST_CASE("event kind names") {
  for (auto k : {EventKind::BusFree, EventKind::ChipFetchDone, EventKind::ChipProgramDone,
                 EventKind::PageOpStart, EventKind::RequestDone})
    CHECK(parse_event_kind(to_string(k)) == k);
  CHECK_THROWS(parse_event_kind("Nope"));
}

TEST_CASE("single page write, one way") {
  const auto s = one_request(conv_slc(1, 1), OpKind::Write, 1);
  CHECK(s.elapsed == kWriteBus + kTprog);
  CHECK(s.elapsed == ns(263100));
  CHECK(s.write_elapsed == s.elapsed);
  CHECK(s.bytes_written == 2048);
  CHECK(s.write_bandwidth == doctest::Approx(2048 / to_seconds(s.elapsed)));
}

TEST_CASE("one-way writes serialise on the chip") {
  for (std::int64_t n : {2, 3, 5})
    CHECK(one_request(conv_slc(1, 1), OpKind::Write, n).elapsed == n * (kWriteBus + kTprog));
}

TEST_CASE("two-way writes overlap programs") {
  CHECK(one_request(conv_slc(1, 2), OpKind::Write, 2).elapsed == 2 * kWriteBus + kTprog);
  for (std::int64_t n : {4, 6, 8})
    CHECK(one_request(conv_slc(1, 2), OpKind::Write, n).elapsed ==
          (n / 2 + 1) * kWriteBus + (n / 2) * kTprog);
}

TEST_CASE("reads") {
  CHECK(one_request(conv_slc(1, 1), OpKind::Read, 1).elapsed == kCmd + kTr + kReadData);
  CHECK(one_request(conv_slc(1, 1), OpKind::Read, 3).elapsed == 3 * (kCmd + kTr + kReadData));
  CHECK(one_request(conv_slc(1, 2), OpKind::Read, 2).elapsed == kCmd + kTr + 2 * kReadData);
}

TEST_CASE("two channels run independently") {
  CHECK(one_request(conv_slc(2, 1), OpKind::Write, 2).elapsed == kWriteBus + kTprog);
  CHECK(one_request(conv_slc(2, 1), OpKind::Read, 2).elapsed == kCmd + kTr + kReadData);
}

TEST_CASE("requests are served one after another") {
  const auto c = conv_slc(1, 2);
  const Trace t{{OpKind::Write, 0, 2048}, {OpKind::Write, 2048, 2048}};
  // the second request waits for the first program
  CHECK(simulate(c, t).elapsed == 2 * (kWriteBus + kTprog));
}

TEST_CASE("busy accounting") {
  const auto c = conv_slc(1, 2);
  const auto s = one_request(c, OpKind::Write, 4);
  REQUIRE(s.per_chip_busy.size() == 2);
  CHECK(s.per_chip_busy[0] == 2 * kTprog);
  CHECK(s.per_chip_busy[1] == 2 * kTprog);
  REQUIRE(s.per_channel_busy.size() == 1);
  CHECK(s.per_channel_busy[0] == 4 * kWriteBus);
  CHECK(s.per_channel_busy[0] <= s.elapsed);
}

TEST_CASE("mixed traces report both modes") {
  const auto c = conv_slc(1, 1);
  const Trace t{{OpKind::Write, 0, 2048}, {OpKind::Read, 0, 2048}};
  const auto s = simulate(c, t);
  CHECK(s.write_elapsed == kWriteBus + kTprog);
  CHECK(s.read_elapsed == kCmd + kTr + kReadData);
  CHECK(s.elapsed == s.write_elapsed + s.read_elapsed);
  CHECK(s.aggregate_bandwidth() == doctest::Approx(4096 / to_seconds(s.elapsed)));
}

TEST_CASE("run errors") {
  auto c = conv_slc(1, 1);
  CHECK_THROWS_AS(simulate(c, Trace{}), InputError);
  c.pages_per_chip = 2;
  CHECK_THROWS_AS(simulate(c, Trace{{OpKind::Write, 0, 3 * 2048}}), InputError);
  c = conv_slc(0, 1);
  CHECK_THROWS_AS(simulate(c, Trace{{OpKind::Write, 0, 2048}}), InputError);
}

TEST_CASE("events are recorded only on request") {
  const auto c = conv_slc(1, 2);
  const Trace t{{OpKind::Read, 0, 4096}};
  CHECK(run(c, t).events.empty());
  const auto r = run(c, t, RunOptions{true});
  CHECK_FALSE(r.events.empty());
  CHECK(r.events.back().kind == EventKind::RequestDone);
  CHECK(r.events.back().time == r.stats.elapsed);
}
