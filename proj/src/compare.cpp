#include "ssdsim/compare.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

namespace ssdsim {

namespace {

constexpr std::array kKinds{InterfaceKind::Conventional, InterfaceKind::SyncOnly, InterfaceKind::Ddr};

std::string label(CellKind cell, OpKind mode, int channels, int ways, InterfaceKind kind) {
  return std::string(to_string(cell)) + " " + std::string(to_string(mode)) + " " +
         std::to_string(channels) + "x" + std::to_string(ways) + " " + std::string(to_string(kind));
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

void add_saturation_check(ComparisonReport& report, const std::vector<ResultRow>& results,
                          OpKind mode, InterfaceKind kind, int expected) {
  CheckResult c;
  c.name = "SLC " + std::string(to_string(mode)) + " " + std::string(to_string(kind)) +
           " saturates at " + std::to_string(expected) + "-way";
  const auto got = saturation_ways(results, CellKind::Slc, mode, kind);
  c.pass = got == expected;
  c.detail = got ? "saturates at " + std::to_string(*got) + "-way" : "missing rows";
  report.checks.push_back(c);
}

}  // namespace

std::vector<ReferenceTable> bandwidth_references() {
  return {{"way sweep", way_sweep_bandwidth(), true},
          {"channel sweep", channel_sweep_bandwidth(), false}};
}

std::vector<CellComparison> ComparisonReport::worst(std::size_t n) const {
  auto sorted = cells;
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.relative_error > b.relative_error;
  });
  if (sorted.size() > n) sorted.resize(n);
  return sorted;
}

const ResultRow* find_result(const std::vector<ResultRow>& rows, CellKind cell, OpKind mode,
                             int channels, int ways, InterfaceKind kind) {
  for (const auto& r : rows)
    if (r.cell == cell && r.mode == mode && r.channels == channels && r.ways == ways &&
        r.interface == kind)
      return &r;
  return nullptr;
}

std::optional<int> saturation_ways(const std::vector<ResultRow>& rows, CellKind cell, OpKind mode,
                                   InterfaceKind kind, int channels, double tolerance) {
  std::map<int, double> by_ways;
  for (const auto& r : rows)
    if (r.cell == cell && r.mode == mode && r.channels == channels && r.interface == kind)
      by_ways[r.ways] = r.bandwidth_mb_s;
  if (by_ways.size() < 2) return std::nullopt;

  std::optional<int> result;
  for (auto it = by_ways.rbegin(); it != by_ways.rend(); ++it) {
    const double base = it->second;
    const bool flat = std::all_of(by_ways.upper_bound(it->first), by_ways.end(), [&](const auto& kv) {
      return std::abs(kv.second / base - 1) <= tolerance;
    });
    if (!flat) break;
    result = it->first;
  }
  return result;
}

ComparisonReport compare_tables(const std::vector<ResultRow>& results, double tolerance,
                                const std::vector<ReferenceTable>& references) {
  ComparisonReport report;
  report.tolerance = tolerance;
  bool saturation = false;
  for (const auto& table : references) {
    saturation = saturation || table.saturation_checks;
    for (const auto& row : table.rows) {
      for (auto kind : kKinds) {
        const auto* r = find_result(results, row.cell, row.mode, row.channels, row.ways, kind);
        if (r == nullptr) {
          report.missing.push_back(table.name + ": " +
                                   label(row.cell, row.mode, row.channels, row.ways, kind));
          continue;
        }
        const auto ref = row.value(kind);
        if (!ref) {
          CheckResult c;
          c.name = label(row.cell, row.mode, row.channels, row.ways, kind) + " host-limited";
          c.pass = r->capped;
          c.detail = fmt("%.2f MB/s", r->bandwidth_mb_s) + (r->capped ? ", capped" : ", not capped");
          report.checks.push_back(c);
          continue;
        }
        const double err = std::abs(r->bandwidth_mb_s - *ref) / *ref;
        report.cells.push_back({table.name, row.cell, row.mode, row.channels, row.ways, kind, *ref,
                                r->bandwidth_mb_s, err, err <= tolerance});
      }
    }
  }

  if (saturation) {
    add_saturation_check(report, results, OpKind::Write, InterfaceKind::Conventional, 8);
    add_saturation_check(report, results, OpKind::Read, InterfaceKind::Conventional, 2);
    add_saturation_check(report, results, OpKind::Read, InterfaceKind::Ddr, 4);

    CheckResult c;
    c.name = "SLC write ddr gains > 1.4x from 8-way to 16-way";
    const auto* w8 = find_result(results, CellKind::Slc, OpKind::Write, 1, 8, InterfaceKind::Ddr);
    const auto* w16 = find_result(results, CellKind::Slc, OpKind::Write, 1, 16, InterfaceKind::Ddr);
    if (w8 && w16) {
      const double gain = w16->bandwidth_mb_s / w8->bandwidth_mb_s;
      c.pass = gain > 1.4;
      c.detail = fmt("gain %.3f", gain);
    } else {
      c.detail = "missing rows";
    }
    report.checks.push_back(c);
  }

  report.pass = report.missing.empty() &&
                std::all_of(report.cells.begin(), report.cells.end(), [](const auto& c) { return c.within; }) &&
                std::all_of(report.checks.begin(), report.checks.end(), [](const auto& c) { return c.pass; });
  return report;
}

void print_report(const ComparisonReport& report, std::ostream& out, std::size_t worst) {
  const auto failed = std::count_if(report.cells.begin(), report.cells.end(),
                                    [](const auto& c) { return !c.within; });
  out << "entries: " << report.cells.size() << " compared, " << failed << " outside "
      << fmt("%.1f%%", report.tolerance * 100) << ", " << report.missing.size() << " missing\n";
  for (const auto& m : report.missing) out << "  missing " << m << '\n';
  if (!report.cells.empty()) {
    out << "worst entries:\n";
    for (const auto& c : report.worst(worst))
      out << "  " << (c.within ? "ok  " : "FAIL") << ' ' << c.table << ": "
          << label(c.cell, c.mode, c.channels, c.ways, c.interface) << "  ref "
          << fmt("%.2f", c.reference) << "  sim " << fmt("%.2f", c.simulated) << "  err "
          << fmt("%+.1f%%", (c.simulated / c.reference - 1) * 100) << '\n';
  }
  if (!report.checks.empty()) {
    out << "checks:\n";
    for (const auto& c : report.checks)
      out << "  " << (c.pass ? "ok  " : "FAIL") << ' ' << c.name << " (" << c.detail << ")\n";
  }
  out << (report.pass ? "PASS" : "FAIL") << '\n';
}

}  // namespace ssdsim
