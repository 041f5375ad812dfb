#include "ssdsim/energy.hpp"
#include "ssdsim/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <utility>
#include <vector>

using namespace ssdsim;

namespace {

// (nJ/B, MB/s) pairs for the SLC way sweep, one list per interface.
const std::vector<std::pair<double, double>> kConv{
    {2.90, 7.77}, {1.48, 15.22}, {0.78, 28.94}, {0.57, 39.78}, {0.57, 39.76},
    {0.81, 27.78}, {0.53, 42.78}, {0.53, 42.75}, {0.53, 42.72}, {0.53, 42.69}};
const std::vector<std::pair<double, double>> kSync{
    {5.01, 8.38}, {2.53, 16.59}, {1.32, 31.90}, {0.76, 55.36}, {0.69, 60.44},
    {1.15, 36.66}, {0.63, 67.16}, {0.63, 67.13}, {0.63, 67.11}, {0.63, 67.11}};
const std::vector<std::pair<double, double>> kDdr{
    {5.47, 8.50}, {2.65, 17.52}, {1.36, 34.30}, {0.74, 63.00}, {0.48, 97.35},
    {0.97, 47.89}, {0.66, 70.47}, {0.40, 117.68}, {0.40, 117.64}, {0.40, 117.59}};

double mean_product(const std::vector<std::pair<double, double>>& rows) {
  double sum = 0;
  for (const auto& [e, b] : rows) sum += e * b;
  return sum / static_cast<double>(rows.size());
}

}  // namespace

TEST_CASE("energy per byte") {
  CHECK(std::round(energy_per_byte_nj(22.5, 7.77e6) * 100) / 100 == doctest::Approx(2.90));
  CHECK(energy_per_byte_nj(46.6, 97.35e6) == doctest::Approx(0.479).epsilon(0.001));
  CHECK(energy_per_byte_nj(1, 1e6) == doctest::Approx(1.0));
  CHECK_THROWS_AS(energy_per_byte_nj(1, 0), DomainError);
  CHECK_THROWS_AS(energy_per_byte_nj(1, -5), DomainError);
}

TEST_CASE("energy times bandwidth gives back the power") {
  for (double mw : {0.5, 22.6, 46.7})
    for (double bw : {1e6, 7.77e6, 117.59e6, 300e6})
      CHECK(energy_per_byte_nj(mw, bw) * bw / 1e6 == doctest::Approx(mw));
}

TEST_CASE("power calibration over the SLC way sweep") {
  const auto cal = calibrate_power(way_sweep_energy(), way_sweep_bandwidth());
  CHECK(cal.model.conv_mw == doctest::Approx(mean_product(kConv)));
  CHECK(cal.model.sync_mw == doctest::Approx(mean_product(kSync)));
  CHECK(cal.model.ddr_mw == doctest::Approx(mean_product(kDdr)));
  CHECK(cal.model.conv_mw == doctest::Approx(22.5).epsilon(0.01));
  CHECK(cal.model.sync_mw == doctest::Approx(42.1).epsilon(0.01));
  CHECK(cal.model.ddr_mw == doctest::Approx(46.6).epsilon(0.01));
  for (int k = 0; k < 3; ++k) {
    CHECK(cal.samples[k] == 10);
    CHECK(cal.max_relative_deviation[k] < 0.03);
  }
}

TEST_CASE("shipped power constants match the calibration") {
  const auto cal = calibrate_power(way_sweep_energy(), way_sweep_bandwidth());
  const PowerModel shipped;
  CHECK(std::abs(shipped.conv_mw - cal.model.conv_mw) < 0.05);
  CHECK(std::abs(shipped.sync_mw - cal.model.sync_mw) < 0.05);
  CHECK(std::abs(shipped.ddr_mw - cal.model.ddr_mw) < 0.05);
  CHECK(shipped.for_kind(InterfaceKind::SyncOnly) == shipped.sync_mw);
}

TEST_CASE("calibration needs overlapping rows") {
  CHECK_THROWS_AS(calibrate_power({}, way_sweep_bandwidth()), InputError);
  const std::vector<ReferenceRow> mlc_only{{CellKind::Mlc, OpKind::Write, 1, 1, 1.0, 1.0, 1.0, {}, {}}};
  CHECK_THROWS_AS(calibrate_power(way_sweep_energy(), mlc_only), InputError);
}

TEST_CASE("power model validation") {
  PowerModel p;
  CHECK_NOTHROW(p.validate());
  p.ddr_mw = 0;
  CHECK_THROWS_AS(p.validate(), InputError);
}

TEST_CASE("crossover needs a bandwidth advantage above the power ratio") {
  const PowerModel p;
  const double ratio = p.ddr_mw / p.conv_mw;
  CHECK(ratio == doctest::Approx(2.07).epsilon(0.01));
  const double conv_bw = 40e6;
  CHECK(energy_per_byte_nj(p.ddr_mw, conv_bw * ratio * 1.01) < energy_per_byte_nj(p.conv_mw, conv_bw));
  CHECK(energy_per_byte_nj(p.ddr_mw, conv_bw * ratio * 0.99) > energy_per_byte_nj(p.conv_mw, conv_bw));
}
