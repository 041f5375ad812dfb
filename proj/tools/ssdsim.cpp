// Command-line front end: simulate, sweep, timing, verify, trace.

#include "ssdsim/bus.hpp"
#include "ssdsim/compare.hpp"
#include "ssdsim/config.hpp"
#include "ssdsim/engine.hpp"
#include "ssdsim/errors.hpp"
#include "ssdsim/event_log.hpp"
#include "ssdsim/sweep.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

using namespace ssdsim;

namespace {

struct Overrides {
  std::string config;
  std::string cell, interface, mode;
  int channels = 0, ways = 0;
  std::int64_t total = 0, chunk = 0;
  int freq = 0;
};

void add_device_options(CLI::App* app, Overrides& o) {
  app->add_option("-c,--config", o.config, "settings file (key = value)")->check(CLI::ExistingFile);
  app->add_option("--cell", o.cell, "slc|mlc");
  app->add_option("--interface", o.interface, "conv|sync|ddr");
  app->add_option("--channels", o.channels);
  app->add_option("--ways", o.ways);
  app->add_option("--freq", o.freq, "clock override in MHz");
}

void add_trace_options(CLI::App* app, Overrides& o) {
  app->add_option("--mode", o.mode, "read|write");
  app->add_option("--total", o.total, "bytes per phase");
  app->add_option("--chunk", o.chunk, "bytes per request");
}

Settings resolve_settings(const Overrides& o) {
  Settings s = o.config.empty() ? Settings{} : load_settings(o.config);
  if (!o.cell.empty()) s.cell = parse_cell(o.cell);
  if (!o.interface.empty()) s.interface = parse_interface(o.interface);
  if (!o.mode.empty()) s.mode = parse_op(o.mode);
  if (o.channels) s.channels = o.channels;
  if (o.ways) s.ways = o.ways;
  if (o.total) s.total_bytes = o.total;
  if (o.chunk) s.chunk_bytes = o.chunk;
  if (o.freq) s.freq_mhz = o.freq;
  return s;
}

std::string ns_text(Picoseconds t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f ns", to_ns(t));
  return buf;
}

std::string mb(double bytes_per_s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f MB/s", bytes_per_s / kBytesPerMB);
  return buf;
}

int cmd_simulate(const Overrides& o, const std::string& trace_path, const std::string& events_path) {
  const Settings s = resolve_settings(o);
  const SsdConfig config = make_config(s);
  Trace trace;
  if (trace_path.empty()) {
    trace = make_trace(s);
  } else {
    std::ifstream in(trace_path);
    if (!in) throw InputError("cannot open " + trace_path);
    trace = parse_trace(in);
  }
  const RunResult result = run(config, trace, RunOptions{!events_path.empty()});
  const Stats stats = apply_host_cap(result.stats, config);

  std::cout << to_string(s.cell) << ' ' << config.n_channels << "x" << config.n_ways << ' '
            << to_string(config.protocol.clock.kind) << " @ " << config.protocol.clock.frequency_mhz
            << " MHz, " << trace.size() << " requests\n";
  std::cout << "  bytes written   " << stats.bytes_written << '\n'
            << "  bytes read      " << stats.bytes_read << '\n'
            << "  elapsed         " << ns_text(stats.elapsed) << '\n';
  if (stats.bytes_written) {
    std::cout << "  write bandwidth " << mb(stats.write_bandwidth) << '\n';
    std::printf("  write energy    %.4f nJ/B\n",
                energy_per_byte_nj(s.power.for_kind(config.protocol.clock.kind), stats.write_bandwidth));
  }
  if (stats.bytes_read) {
    std::cout << "  read bandwidth  " << mb(stats.read_bandwidth) << '\n';
    std::printf("  read energy     %.4f nJ/B\n",
                energy_per_byte_nj(s.power.for_kind(config.protocol.clock.kind), stats.read_bandwidth));
  }
  if (stats.capped) std::cout << "  capped at host link " << mb(config.host_cap) << '\n';
  if (s.cell == CellKind::Mlc)
    std::cout << "  (MLC energy extrapolates the SLC-fitted power constants)\n";

  if (!events_path.empty()) {
    std::ofstream out(events_path);
    if (!out) throw InputError("cannot write " + events_path);
    write_event_log(result.events, out);
    const auto violations = check_exclusivity(result.events, config);
    for (const auto& v : violations) std::cerr << "violation: " << v << '\n';
    if (!violations.empty()) return 1;
  }
  return 0;
}

int cmd_sweep(const Overrides& o, const std::string& plan_path, const std::string& preset,
              std::string output, bool serial) {
  const Settings s = resolve_settings(o);
  ExperimentPlan plan = plan_path.empty() ? preset_plan(preset) : load_plan(plan_path);
  if (plan_path.empty()) {
    plan.total_bytes = s.total_bytes;
    plan.chunk_bytes = s.chunk_bytes;
  }
  if (output.empty()) output = plan.output;
  const auto rows = serial ? run_plan_serial(plan, s) : run_plan(plan, s);
  if (output.empty() || output == "-") {
    write_csv(rows, std::cout);
  } else {
    std::ofstream out(output);
    if (!out) throw InputError("cannot write " + output);
    write_csv(rows, out);
  }
  return 0;
}

int cmd_timing(const Overrides& o) {
  const Settings s = resolve_settings(o);
  const TimingParams& p = s.timing;
  p.validate();
  const auto t_conv = tpmin_conventional(p);
  const auto t_board = tpmin_proposed_board(p.t_s, p.t_h, p.t_diff, p.t_byte);
  const auto t_pad = tpmin_proposed_pad(p.t_ios, p.t_ioh, p.t_byte);
  std::printf("alpha                       %lld/%lld\n",
              static_cast<long long>(p.alpha.numerator()), static_cast<long long>(p.alpha.denominator()));
  std::printf("read path (tOUT+tREA+tIN+tS)/(1+alpha) = %.3f ns\n",
              to_double(conventional_path_period(p)) / 1e3);
  std::printf("tP,min conventional         %s -> %d MHz\n", ns_text(t_conv).c_str(), max_frequency_mhz(t_conv));
  std::printf("tP,min proposed (board)     %s -> %d MHz\n", ns_text(t_board).c_str(), max_frequency_mhz(t_board));
  std::printf("tP,min proposed (pad)       %s -> %d MHz\n", ns_text(t_pad).c_str(), max_frequency_mhz(t_pad));
  if (p.t_iod_max.count() || p.t_rwebd_min.count() || p.t_ios.count()) {
    try {
      std::printf("tDLL                        %s\n",
                  ns_text(dll_delay(p.t_iod_max, p.t_rwebd_min, p.t_ios)).c_str());
    } catch (const DomainError& e) {
      std::printf("tDLL                        invalid: %s\n", e.what());
    }
  }
  for (auto kind : {InterfaceKind::Conventional, InterfaceKind::SyncOnly, InterfaceKind::Ddr}) {
    const ClockSpec clock = resolve_clock(kind, p, s.freq_mhz);
    const auto proto = BusProtocol::with_defaults(clock);
    std::printf("%-5s clock %3d MHz  tP %s  tD %s  per byte %.3f ns  peak %s\n",
                std::string(to_string(kind)).c_str(), clock.frequency_mhz, ns_text(clock.t_p).c_str(),
                ns_text(delayed_clock_offset(p.alpha, clock.t_p)).c_str(),
                to_double(per_byte_cycle(clock)) / 1e3, mb(channel_peak_rate(proto)).c_str());
  }
  return 0;
}

int cmd_verify(const Overrides& o, double tolerance, std::size_t worst, const std::string& csv_out) {
  const Settings s = resolve_settings(o);
  ExperimentPlan ways = way_sweep_plan();
  ExperimentPlan channels = channel_sweep_plan();
  for (auto* p : {&ways, &channels}) {
    p->total_bytes = s.total_bytes;
    p->chunk_bytes = s.chunk_bytes;
  }
  auto rows = run_plan(ways, s);
  for (const auto& r : run_plan(channels, s))
    if (!find_result(rows, r.cell, r.mode, r.channels, r.ways, r.interface)) rows.push_back(r);
  if (!csv_out.empty()) {
    std::ofstream out(csv_out);
    if (!out) throw InputError("cannot write " + csv_out);
    write_csv(rows, out);
  }
  const auto report = compare_tables(rows, tolerance);
  print_report(report, std::cout, worst);
  return report.pass ? 0 : 1;
}

int cmd_trace(const Overrides& o, const std::string& output) {
  const Settings s = resolve_settings(o);
  const Trace trace = make_trace(s);
  if (output.empty() || output == "-") {
    serialize_trace(trace, std::cout);
  } else {
    std::ofstream out(output);
    if (!out) throw InputError("cannot write " + output);
    serialize_trace(trace, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace-driven SSD simulator"};
  app.require_subcommand(1);

  Overrides o;

  std::string trace_path, events_path;
  auto* sim = app.add_subcommand("simulate", "run one configuration");
  add_device_options(sim, o);
  add_trace_options(sim, o);
  sim->add_option("-t,--trace", trace_path, "trace file (default: sequential trace from settings)")
      ->check(CLI::ExistingFile);
  sim->add_option("-e,--events", events_path, "write the event log here and check it");

  std::string plan_path, preset = "way-sweep", output;
  bool serial = false;
  auto* sweep = app.add_subcommand("sweep", "run a plan and emit CSV");
  add_device_options(sweep, o);
  add_trace_options(sweep, o);
  auto* plan_opt = sweep->add_option("-p,--plan", plan_path, "plan file")->check(CLI::ExistingFile);
  sweep->add_option("--preset", preset, "way-sweep|channel-sweep")->excludes(plan_opt);
  sweep->add_option("-o,--output", output, "CSV path (default stdout)");
  sweep->add_flag("--serial", serial, "run on one thread");

  auto* timing = app.add_subcommand("timing", "print interface clock derivations");
  timing->add_option("-c,--config", o.config, "settings file with timing keys")->check(CLI::ExistingFile);
  timing->add_option("--freq", o.freq, "clock override in MHz");

  double tolerance = 0.20;
  std::size_t worst = 10;
  std::string verify_csv;
  auto* verify = app.add_subcommand("verify", "regress the sweeps against the reference tables");
  verify->add_option("-c,--config", o.config, "settings file")->check(CLI::ExistingFile);
  verify->add_option("--tolerance", tolerance, "relative tolerance")->check(CLI::NonNegativeNumber);
  verify->add_option("--worst", worst, "entries to list");
  verify->add_option("--total", o.total, "bytes per phase");
  verify->add_option("--chunk", o.chunk, "bytes per request");
  verify->add_option("--csv", verify_csv, "also write the simulated rows");

  std::string trace_out;
  auto* trace = app.add_subcommand("trace", "emit a sequential trace");
  trace->add_option("-c,--config", o.config, "settings file")->check(CLI::ExistingFile);
  add_trace_options(trace, o);
  trace->add_option("-o,--output", trace_out, "trace path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sim) return cmd_simulate(o, trace_path, events_path);
    if (*sweep) return cmd_sweep(o, plan_path, preset, output, serial);
    if (*timing) return cmd_timing(o);
    if (*verify) return cmd_verify(o, tolerance, worst, verify_csv);
    if (*trace) return cmd_trace(o, trace_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
