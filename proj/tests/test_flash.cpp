#include "ssdsim/errors.hpp"
#include "ssdsim/flash.hpp"

#include <doctest.h>

using namespace ssdsim;

TEST_CASE("default profiles") {
  const auto slc = FlashProfile::slc_default();
  const auto mlc = FlashProfile::mlc_default();
  CHECK(slc.page_size == 2048);
  CHECK(mlc.page_size == 4096);
  CHECK(slc.t_r == us(25));
  CHECK(mlc.t_r == us(60));
  CHECK(slc.t_prog == us(220));
  CHECK(mlc.t_prog == us(800));
  // MLC programs take roughly three times as long
  const double ratio = static_cast<double>(mlc.t_prog.count()) / static_cast<double>(slc.t_prog.count());
  CHECK(ratio > 3.0 * 0.85);
  CHECK(ratio < 3.0 * 1.35);
}

TEST_CASE("profile validation") {
  auto p = FlashProfile::slc_default();
  p.t_r = Picoseconds{0};
  CHECK_THROWS_AS(p.validate(), InputError);
  CHECK_THROWS_AS(NandChip{p}, InputError);
  p = FlashProfile::slc_default();
  p.t_prog = p.t_r;
  CHECK_THROWS_AS(p.validate(), InputError);
  p = FlashProfile::slc_default();
  p.page_size = 3000;
  CHECK_THROWS_AS(p.validate(), InputError);
}

TEST_CASE("fetch then transfer") {
  NandChip slc{FlashProfile::slc_default()};
  CHECK(slc.issue_fetch(7, Picoseconds{0}) == ns(25000));
  CHECK(slc.state() == NandChip::State::BusyFetch);
  CHECK_FALSE(slc.is_available(ns(24999)));
  CHECK(slc.is_available(ns(25000)));
  slc.settle(ns(25000));
  CHECK(slc.state() == NandChip::State::ReadyToTransfer);
  REQUIRE(slc.registered_page());
  CHECK(*slc.registered_page() == 7);
  CHECK_FALSE(slc.is_available(ns(30000)));
  slc.release_register(ns(30000));
  CHECK(slc.state() == NandChip::State::Idle);
  CHECK(slc.busy_time() == us(25));

  NandChip mlc{FlashProfile::mlc_default()};
  CHECK(mlc.issue_fetch(0, Picoseconds{0}) == ns(60000));
}

TEST_CASE("program") {
  NandChip chip{FlashProfile::slc_default()};
  CHECK_THROWS_AS(chip.issue_program(Picoseconds{0}), SchedulingError);
  chip.load_register(3, Picoseconds{0});
  CHECK(chip.issue_program(Picoseconds{0}) == us(220));
  CHECK(chip.state() == NandChip::State::BusyProgram);
  CHECK_THROWS_AS(chip.issue_program(us(100)), SchedulingError);
  CHECK_THROWS_AS(chip.issue_fetch(1, us(100)), SchedulingError);
  CHECK_THROWS_AS(chip.load_register(1, us(100)), SchedulingError);
  chip.settle(us(220));
  CHECK(chip.state() == NandChip::State::Idle);
  CHECK_FALSE(chip.registered_page());

  NandChip mlc{FlashProfile::mlc_default()};
  mlc.load_register(0, Picoseconds{0});
  CHECK(mlc.issue_program(Picoseconds{0}) == ns(800000));
}

TEST_CASE("availability") {
  NandChip chip{FlashProfile::slc_default()};
  CHECK(chip.is_available(Picoseconds{0}));
  CHECK(chip.is_available(us(1000)));

  auto p = FlashProfile::slc_default();
  p.t_r = ns(100);
  p.t_prog = ns(100) + Picoseconds{1};
  NandChip programming{p};
  programming.load_register(0, Picoseconds{0});
  programming.issue_program(Picoseconds{0});
  CHECK_FALSE(programming.is_available(ns(50)));

  NandChip fetching{p};
  fetching.issue_fetch(0, Picoseconds{0});
  CHECK(fetching.busy_until() == ns(100));
  CHECK(fetching.is_available(ns(100)));
}

TEST_CASE("fetch on a chip holding a page is rejected") {
  NandChip chip{FlashProfile::slc_default()};
  chip.issue_fetch(1, Picoseconds{0});
  CHECK_THROWS_AS(chip.release_register(us(10)), SchedulingError);
  CHECK_THROWS_AS(chip.issue_fetch(2, us(30)), SchedulingError);
}

TEST_CASE("cell names") {
  CHECK(parse_cell("SLC") == CellKind::Slc);
  CHECK(parse_cell("mlc") == CellKind::Mlc);
  CHECK_THROWS_AS(parse_cell("tlc"), InputError);
}
