#include "ssdsim/sweep.hpp"

#include "ssdsim/engine.hpp"
#include "ssdsim/errors.hpp"

#include <array>

#include <charconv>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

namespace ssdsim {

namespace {

constexpr std::array kAllInterfaces{InterfaceKind::Conventional, InterfaceKind::SyncOnly,
                                    InterfaceKind::Ddr};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

template <typename T>
T number(std::string_view text) {
  T v{};
  const auto* end = text.data() + text.size();
  const auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || p != end) throw InputError("not a number: '" + std::string(text) + "'");
  return v;
}

SweepPoint parse_point(std::string_view text) {
  const auto x = text.find('x');
  if (x == std::string_view::npos) throw InputError("expected <channels>x<ways>, got '" + std::string(text) + "'");
  return {number<int>(trim(text.substr(0, x))), number<int>(trim(text.substr(x + 1)))};
}

std::string describe(CellKind cell, OpKind mode, SweepPoint p, InterfaceKind kind) {
  return std::string(to_string(cell)) + " " + std::string(to_string(mode)) + " " +
         std::to_string(p.channels) + "ch/" + std::to_string(p.ways) + "way " +
         std::string(to_string(kind));
}

struct Job {
  CellKind cell;
  OpKind mode;
  SweepPoint point;
  InterfaceKind kind;
};

std::vector<Job> expand(const ExperimentPlan& plan) {
  std::vector<Job> jobs;
  jobs.reserve(plan.size());
  for (auto cell : plan.cells)
    for (auto mode : plan.modes)
      for (auto point : plan.sweep)
        for (auto kind : plan.interfaces) jobs.push_back({cell, mode, point, kind});
  return jobs;
}

ResultRow run_job(const ExperimentPlan& plan, const Settings& settings, const Job& j) {
  try {
    return run_point(settings, j.cell, j.mode, j.point, j.kind, plan.total_bytes, plan.chunk_bytes);
  } catch (const std::exception& e) {
    throw SweepError(describe(j.cell, j.mode, j.point, j.kind) + ": " + e.what());
  }
}

}  // namespace

void ExperimentPlan::validate() const {
  if (sweep.empty()) throw InputError("plan has an empty sweep");
  if (interfaces.empty()) throw InputError("plan has no interfaces");
  if (cells.empty()) throw InputError("plan has no cells");
  if (modes.empty()) throw InputError("plan has no modes");
  for (const auto& p : sweep)
    if (p.channels < 1 || p.ways < 1) throw InputError("sweep points need channels, ways >= 1");
  if (chunk_bytes <= 0 || total_bytes < chunk_bytes || total_bytes % chunk_bytes != 0)
    throw InputError("total_bytes must be a positive multiple of chunk_bytes");
}

ExperimentPlan way_sweep_plan() {
  ExperimentPlan p;
  p.sweep = {{1, 1}, {1, 2}, {1, 4}, {1, 8}, {1, 16}};
  p.interfaces.assign(kAllInterfaces.begin(), kAllInterfaces.end());
  p.cells = {CellKind::Slc, CellKind::Mlc};
  p.modes = {OpKind::Write, OpKind::Read};
  return p;
}

ExperimentPlan channel_sweep_plan() {
  ExperimentPlan p = way_sweep_plan();
  p.sweep = {{1, 16}, {2, 8}, {4, 4}};
  return p;
}

ExperimentPlan single_plan(const Settings& settings) {
  ExperimentPlan p;
  p.sweep = {{settings.channels, settings.ways}};
  p.interfaces = {settings.interface};
  p.cells = {settings.cell};
  p.modes = {settings.mode};
  p.total_bytes = settings.total_bytes;
  p.chunk_bytes = settings.chunk_bytes;
  return p;
}

ExperimentPlan preset_plan(std::string_view name) {
  if (name == "way-sweep") return way_sweep_plan();
  if (name == "channel-sweep") return channel_sweep_plan();
  throw InputError("unknown preset '" + std::string(name) + "' (expected way-sweep|channel-sweep)");
}

ExperimentPlan parse_plan(std::istream& in) {
  ExperimentPlan p = way_sweep_plan();
  p.sweep.clear();
  bool have_sweep = false;
  std::set<std::string, std::less<>> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (!seen.insert(std::string(key)).second)
      throw ParseError(line_no, "duplicate key '" + std::string(key) + "'");
    try {
      if (key == "sweep") {
        have_sweep = true;
        for (auto item : split(value, ',')) p.sweep.push_back(parse_point(item));
      } else if (key == "interfaces") {
        p.interfaces.clear();
        for (auto item : split(value, ',')) p.interfaces.push_back(parse_interface(item));
      } else if (key == "cells") {
        p.cells.clear();
        for (auto item : split(value, ',')) p.cells.push_back(parse_cell(item));
      } else if (key == "modes") {
        p.modes.clear();
        for (auto item : split(value, ',')) p.modes.push_back(parse_op(item));
      } else if (key == "total_bytes") {
        p.total_bytes = number<std::int64_t>(value);
      } else if (key == "chunk_bytes") {
        p.chunk_bytes = number<std::int64_t>(value);
      } else if (key == "output") {
        p.output = std::string(value);
      } else {
        throw InputError("unknown key '" + std::string(key) + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!have_sweep) throw InputError("plan has no sweep key");
  p.validate();
  return p;
}

ExperimentPlan load_plan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_plan(in);
}

ResultRow run_point(const Settings& settings, CellKind cell, OpKind mode, SweepPoint point,
                    InterfaceKind kind, std::int64_t total_bytes, std::int64_t chunk_bytes) {
  const SsdConfig config = make_config(settings, cell, kind, point.channels, point.ways);
  const Trace trace = gen_sequential(total_bytes, chunk_bytes, mode);
  const Stats stats = apply_host_cap(simulate(config, trace), config);
  const double bw = stats.bandwidth(mode);
  ResultRow row{cell, mode, point.channels, point.ways, kind, bw / kBytesPerMB, 0, stats.capped};
  row.energy_nj_b = energy_per_byte_nj(settings.power.for_kind(kind), bw);
  return row;
}

std::vector<ResultRow> run_plan(const ExperimentPlan& plan, const Settings& settings) {
  plan.validate();
  const auto jobs = expand(plan);
  const auto n = static_cast<std::ptrdiff_t>(jobs.size());
  std::vector<ResultRow> rows(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      rows[i] = run_job(plan, settings, jobs[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::vector<ResultRow> run_plan_serial(const ExperimentPlan& plan, const Settings& settings) {
  plan.validate();
  std::vector<ResultRow> rows;
  for (const auto& job : expand(plan)) rows.push_back(run_job(plan, settings, job));
  return rows;
}

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  char buf[64];
  for (const auto& r : rows) {
    out << to_string(r.cell) << ',' << to_string(r.mode) << ',' << r.channels << ',' << r.ways << ','
        << to_string(r.interface) << ',';
    std::snprintf(buf, sizeof buf, "%.4f,%.4f,", r.bandwidth_mb_s, r.energy_nj_b);
    out << buf << (r.capped ? "true" : "false") << '\n';
  }
}

std::vector<ResultRow> read_csv(std::istream& in) {
  std::vector<ResultRow> rows;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line == kCsvHeader) continue;
    const auto f = split(line, ',');
    if (f.size() != 8) throw ParseError(line_no, "expected 8 fields");
    try {
      ResultRow r;
      r.cell = parse_cell(f[0]);
      r.mode = parse_op(f[1]);
      r.channels = number<int>(f[2]);
      r.ways = number<int>(f[3]);
      r.interface = parse_interface(f[4]);
      r.bandwidth_mb_s = number<double>(f[5]);
      r.energy_nj_b = number<double>(f[6]);
      if (f[7] == "true") r.capped = true;
      else if (f[7] == "false") r.capped = false;
      else throw InputError("capped must be true|false");
      rows.push_back(r);
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return rows;
}

}  // namespace ssdsim
