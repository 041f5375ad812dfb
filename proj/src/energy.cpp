#include "ssdsim/energy.hpp"

#include "ssdsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ssdsim {

double PowerModel::for_kind(InterfaceKind kind) const {
  switch (kind) {
    case InterfaceKind::Conventional: return conv_mw;
    case InterfaceKind::SyncOnly: return sync_mw;
    case InterfaceKind::Ddr: return ddr_mw;
  }
  return 0;
}

void PowerModel::validate() const {
  if (!(conv_mw > 0) || !(sync_mw > 0) || !(ddr_mw > 0))
    throw InputError("interface power must be > 0 mW");
}

double energy_per_byte_nj(double power_mw, double bandwidth_bytes_per_s) {
  if (!(bandwidth_bytes_per_s > 0)) throw DomainError("bandwidth must be > 0");
  // mW / (B/s) = 1e-3 J/B = 1e6 nJ/B
  return power_mw * 1e6 / bandwidth_bytes_per_s;
}

PowerCalibration calibrate_power(std::span<const ReferenceRow> energy_nj_per_byte,
                                 std::span<const ReferenceRow> bandwidth_mb_s) {
  constexpr std::array kinds{InterfaceKind::Conventional, InterfaceKind::SyncOnly,
                             InterfaceKind::Ddr};
  std::array<std::vector<double>, 3> products;
  for (const auto& e : energy_nj_per_byte) {
    const ReferenceRow* b = find_row(bandwidth_mb_s, e.cell, e.mode, e.channels, e.ways);
    if (b == nullptr) continue;
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      const auto ev = e.value(kinds[k]);
      const auto bv = b->value(kinds[k]);
      if (ev && bv) products[k].push_back(*ev * *bv);
    }
  }

  PowerCalibration cal;
  std::array<double, 3> means{};
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    const auto& p = products[k];
    if (p.empty()) throw InputError("energy and bandwidth tables share no configuration");
    double sum = 0;
    for (double v : p) sum += v;
    means[k] = sum / static_cast<double>(p.size());
    double dev = 0;
    for (double v : p) dev = std::max(dev, std::abs(v / means[k] - 1));
    cal.max_relative_deviation[k] = dev;
    cal.samples[k] = static_cast<int>(p.size());
  }
  cal.model = PowerModel{means[0], means[1], means[2]};
  return cal;
}

}  // namespace ssdsim
