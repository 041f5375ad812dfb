#include "ssdsim/reference_tables.hpp"

#include <array>

namespace ssdsim {

namespace {

constexpr auto S = CellKind::Slc;
constexpr auto M = CellKind::Mlc;
constexpr auto W = OpKind::Write;
constexpr auto R = OpKind::Read;
constexpr std::nullopt_t kCapped = std::nullopt;

const std::array<ReferenceRow, 20> kWaySweep{{
    {S, W, 1, 1, 7.77, 8.38, 8.50, 1.01, 1.09},
    {S, W, 1, 2, 15.22, 16.59, 17.52, 1.06, 1.15},
    {S, W, 1, 4, 28.94, 31.90, 34.30, 1.08, 1.19},
    {S, W, 1, 8, 39.78, 55.36, 63.00, 1.14, 1.58},
    {S, W, 1, 16, 39.76, 60.44, 97.35, 1.61, 2.45},
    {S, R, 1, 1, 27.78, 36.66, 47.89, 1.31, 1.72},
    {S, R, 1, 2, 42.78, 67.16, 70.47, 1.05, 1.65},
    {S, R, 1, 4, 42.75, 67.13, 117.68, 1.75, 2.75},
    {S, R, 1, 8, 42.72, 67.11, 117.64, 1.75, 2.75},
    {S, R, 1, 16, 42.69, 67.11, 117.59, 1.75, 2.75},
    {M, W, 1, 1, 4.43, 4.55, 4.65, 1.02, 1.05},
    {M, W, 1, 2, 8.36, 8.85, 9.24, 1.04, 1.11},
    {M, W, 1, 4, 15.24, 16.75, 18.13, 1.08, 1.19},
    {M, W, 1, 8, 25.86, 29.72, 34.08, 1.15, 1.32},
    {M, W, 1, 16, 32.45, 45.99, 57.23, 1.24, 1.76},
    {M, R, 1, 1, 26.04, 33.58, 42.69, 1.27, 1.64},
    {M, R, 1, 2, 41.59, 60.41, 77.19, 1.28, 1.86},
    {M, R, 1, 4, 41.55, 64.76, 101.61, 1.57, 2.45},
    {M, R, 1, 8, 41.52, 64.75, 110.56, 1.71, 2.66},
    {M, R, 1, 16, 41.50, 64.73, 110.52, 1.71, 2.66},
}};

const std::array<ReferenceRow, 12> kChannelSweep{{
    {S, W, 1, 16, 39.76, 60.44, 97.35, 1.61, 2.45},
    {S, W, 2, 8, 74.07, 101.99, 114.83, 1.13, 1.55},
    {S, W, 4, 4, 103.76, 115.68, 123.52, 1.07, 1.19},
    {S, R, 1, 16, 42.69, 67.11, 117.59, 1.75, 2.75},
    {S, R, 2, 8, 81.44, 126.70, 224.82, 1.77, 2.76},
    {S, R, 4, 4, 155.35, 237.61, kCapped, kCapped, kCapped},
    {M, W, 1, 16, 32.45, 45.99, 57.23, 1.24, 1.76},
    {M, W, 2, 8, 48.72, 56.83, 64.75, 1.14, 1.33},
    {M, W, 4, 4, 57.46, 63.55, 68.49, 1.08, 1.19},
    {M, R, 1, 16, 41.50, 64.73, 110.52, 1.71, 2.66},
    {M, R, 2, 8, 79.32, 122.48, 201.42, 1.64, 2.54},
    {M, R, 4, 4, 150.94, 230.17, kCapped, kCapped, kCapped},
}};

const std::array<ReferenceRow, 10> kWaySweepEnergy{{
    {S, W, 1, 1, 2.90, 5.01, 5.47, 1.09, 1.89},
    {S, W, 1, 2, 1.48, 2.53, 2.65, 1.05, 1.80},
    {S, W, 1, 4, 0.78, 1.32, 1.36, 1.03, 1.74},
    {S, W, 1, 8, 0.57, 0.76, 0.74, 0.97, 1.30},
    {S, W, 1, 16, 0.57, 0.69, 0.48, 0.69, 0.84},
    {S, R, 1, 1, 0.81, 1.15, 0.97, 0.85, 1.20},
    {S, R, 1, 2, 0.53, 0.63, 0.66, 1.06, 1.25},
    {S, R, 1, 4, 0.53, 0.63, 0.40, 0.63, 0.75},
    {S, R, 1, 8, 0.53, 0.63, 0.40, 0.63, 0.75},
    {S, R, 1, 16, 0.53, 0.63, 0.40, 0.63, 0.75},
}};

}  // namespace

std::optional<double> ReferenceRow::value(InterfaceKind kind) const {
  switch (kind) {
    case InterfaceKind::Conventional: return conv;
    case InterfaceKind::SyncOnly: return sync;
    case InterfaceKind::Ddr: return ddr;
  }
  return std::nullopt;
}

std::span<const ReferenceRow> way_sweep_bandwidth() { return kWaySweep; }
std::span<const ReferenceRow> channel_sweep_bandwidth() { return kChannelSweep; }
std::span<const ReferenceRow> way_sweep_energy() { return kWaySweepEnergy; }

const ReferenceRow* find_row(std::span<const ReferenceRow> rows, CellKind cell, OpKind mode,
                             int channels, int ways) {
  for (const auto& r : rows)
    if (r.cell == cell && r.mode == mode && r.channels == channels && r.ways == ways) return &r;
  return nullptr;
}

}  // namespace ssdsim
