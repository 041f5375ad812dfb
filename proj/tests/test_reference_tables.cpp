#include "ssdsim/reference_tables.hpp"

#include <doctest.h>

#include <cmath>

using namespace ssdsim;

namespace {

int entries(std::span<const ReferenceRow> rows) {
  int n = 0;
  for (const auto& r : rows)
    for (auto k : {InterfaceKind::Conventional, InterfaceKind::SyncOnly, InterfaceKind::Ddr})
      n += r.value(k) ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("table sizes") {
  CHECK(way_sweep_bandwidth().size() == 20);
  CHECK(entries(way_sweep_bandwidth()) == 60);
  CHECK(channel_sweep_bandwidth().size() == 12);
  CHECK(entries(channel_sweep_bandwidth()) == 34);
  CHECK(way_sweep_energy().size() == 10);
  CHECK(entries(way_sweep_energy()) == 30);
}

TEST_CASE("spot values") {
  const auto* r = find_row(way_sweep_bandwidth(), CellKind::Slc, OpKind::Read, 1, 16);
  REQUIRE(r);
  CHECK(*r->ddr == 117.59);
  CHECK(*r->ratio_ddr_conv == 2.75);
  r = find_row(way_sweep_bandwidth(), CellKind::Mlc, OpKind::Write, 1, 1);
  REQUIRE(r);
  CHECK(*r->conv == 4.43);
  r = find_row(channel_sweep_bandwidth(), CellKind::Slc, OpKind::Read, 4, 4);
  REQUIRE(r);
  CHECK(*r->sync == 237.61);
  CHECK_FALSE(r->ddr);
  CHECK_FALSE(r->ratio_ddr_conv);
  r = find_row(way_sweep_energy(), CellKind::Slc, OpKind::Write, 1, 16);
  REQUIRE(r);
  CHECK(*r->ddr == 0.48);
  CHECK(find_row(way_sweep_energy(), CellKind::Mlc, OpKind::Write, 1, 16) == nullptr);
}

TEST_CASE("ratio columns agree with the value columns") {
  for (auto rows : {way_sweep_bandwidth(), channel_sweep_bandwidth(), way_sweep_energy()}) {
    for (const auto& r : rows) {
      if (!r.ddr) continue;
      CAPTURE(r.ways);
      CAPTURE(r.channels);
      CHECK(std::abs(*r.ddr / *r.conv - *r.ratio_ddr_conv) <= 0.015);
      CHECK(std::abs(*r.ddr / *r.sync - *r.ratio_ddr_sync) <= 0.015);
    }
  }
}

TEST_CASE("the shared 1x16 row is identical in both bandwidth tables") {
  for (auto cell : {CellKind::Slc, CellKind::Mlc})
    for (auto mode : {OpKind::Write, OpKind::Read}) {
      const auto* a = find_row(way_sweep_bandwidth(), cell, mode, 1, 16);
      const auto* b = find_row(channel_sweep_bandwidth(), cell, mode, 1, 16);
      REQUIRE(a);
      REQUIRE(b);
      CHECK(a->conv == b->conv);
      CHECK(a->sync == b->sync);
      CHECK(a->ddr == b->ddr);
    }
}
