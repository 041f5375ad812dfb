#include "ssdsim/config.hpp"

#include "ssdsim/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace ssdsim {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(std::string_view text) {
  T v{};
  const auto* end = text.data() + text.size();
  const auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || p != end) throw InputError("not a number: '" + std::string(text) + "'");
  return v;
}

int parse_int(std::string_view t) { return parse_number<int>(t); }
std::int64_t parse_i64(std::string_view t) { return parse_number<std::int64_t>(t); }
double parse_double(std::string_view t) { return parse_number<double>(t); }

Fraction parse_alpha(std::string_view t) {
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return parse_fraction(t);
  const auto den = parse_i64(trim(t.substr(slash + 1)));
  if (den == 0) throw InputError("zero denominator");
  return Fraction(parse_i64(trim(t.substr(0, slash))), den);
}

std::string format_ns(Picoseconds t) {
  const auto ps = t.count();
  std::string s = std::to_string(ps / 1000);
  if (const auto frac = ps % 1000; frac != 0) {
    std::string digits = std::to_string(frac < 0 ? -frac : frac);
    digits.insert(0, 3 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    if (ps < 0 && ps > -1000) s = "-0";
    s += "." + digits;
  }
  return s;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Values whose target depends on other keys, resolved after the whole file
// has been read.
struct Pending {
  std::optional<Picoseconds> t_r, t_prog, t_byte;
  std::optional<std::int64_t> page_size;
  std::optional<Picoseconds> overhead, read_overhead, write_overhead;
  std::optional<int> cmd_cycles, cmd_cycles_read, cmd_cycles_write;
};

struct Key {
  std::string name;
  std::function<void(Settings&, Pending&, std::string_view)> set;
  std::function<std::string(const Settings&)> get;
};

Key ns_key(std::string name, Picoseconds TimingParams::*field) {
  return {name,
          [field](Settings& s, Pending&, std::string_view v) { s.timing.*field = parse_ns(v); },
          [field](const Settings& s) { return format_ns(s.timing.*field); }};
}

void add_profile_keys(std::vector<Key>& keys, CellKind cell) {
  const std::string prefix = cell == CellKind::Slc ? "slc." : "mlc.";
  keys.push_back({prefix + "t_r_ns",
                  [cell](Settings& s, Pending&, std::string_view v) { s.profile(cell).t_r = parse_ns(v); },
                  [cell](const Settings& s) { return format_ns(s.profile(cell).t_r); }});
  keys.push_back({prefix + "t_prog_ns",
                  [cell](Settings& s, Pending&, std::string_view v) { s.profile(cell).t_prog = parse_ns(v); },
                  [cell](const Settings& s) { return format_ns(s.profile(cell).t_prog); }});
  keys.push_back({prefix + "t_byte_ns",
                  [cell](Settings& s, Pending&, std::string_view v) { s.profile(cell).t_byte = parse_ns(v); },
                  [cell](const Settings& s) { return format_ns(s.profile(cell).t_byte); }});
  keys.push_back({prefix + "page_size_bytes",
                  [cell](Settings& s, Pending&, std::string_view v) {
                    s.profile(cell).page_size = parse_i64(v);
                  },
                  [cell](const Settings& s) { return std::to_string(s.profile(cell).page_size); }});
}

const std::vector<Key>& key_table() {
  static const std::vector<Key> keys = [] {
    std::vector<Key> k;
    const auto none = [](const Settings&) { return std::string{}; };

    k.push_back({"cell_kind", [](Settings& s, Pending&, std::string_view v) { s.cell = parse_cell(v); },
                 [](const Settings& s) { return lower(to_string(s.cell)); }});
    k.push_back({"t_r_ns", [](Settings&, Pending& p, std::string_view v) { p.t_r = parse_ns(v); }, none});
    k.push_back({"t_prog_ns", [](Settings&, Pending& p, std::string_view v) { p.t_prog = parse_ns(v); }, none});
    k.push_back({"t_byte_ns", [](Settings&, Pending& p, std::string_view v) { p.t_byte = parse_ns(v); }, none});
    k.push_back({"page_size_bytes",
                 [](Settings&, Pending& p, std::string_view v) { p.page_size = parse_i64(v); }, none});
    add_profile_keys(k, CellKind::Slc);
    add_profile_keys(k, CellKind::Mlc);

    k.push_back({"interface",
                 [](Settings& s, Pending&, std::string_view v) { s.interface = parse_interface(v); },
                 [](const Settings& s) { return std::string(to_string(s.interface)); }});
    k.push_back({"freq_mhz", [](Settings& s, Pending&, std::string_view v) { s.freq_mhz = parse_int(v); },
                 [](const Settings& s) { return s.freq_mhz ? std::to_string(*s.freq_mhz) : std::string{}; }});
    k.push_back({"cmd_cycles",
                 [](Settings&, Pending& p, std::string_view v) { p.cmd_cycles = parse_int(v); }, none});
    k.push_back({"cmd_cycles_read",
                 [](Settings&, Pending& p, std::string_view v) { p.cmd_cycles_read = parse_int(v); },
                 [](const Settings& s) { return std::to_string(s.cmd_cycles_read); }});
    k.push_back({"cmd_cycles_write",
                 [](Settings&, Pending& p, std::string_view v) { p.cmd_cycles_write = parse_int(v); },
                 [](const Settings& s) { return std::to_string(s.cmd_cycles_write); }});
    k.push_back({"addr_cycles",
                 [](Settings& s, Pending&, std::string_view v) { s.addr_cycles = parse_int(v); },
                 [](const Settings& s) { return std::to_string(s.addr_cycles); }});
    k.push_back({"page_overhead_ns",
                 [](Settings&, Pending& p, std::string_view v) { p.overhead = parse_ns(v); }, none});
    k.push_back({"page_overhead_read_ns",
                 [](Settings&, Pending& p, std::string_view v) { p.read_overhead = parse_ns(v); },
                 [](const Settings& s) { return format_ns(s.read_page_overhead); }});
    k.push_back({"page_overhead_write_ns",
                 [](Settings&, Pending& p, std::string_view v) { p.write_overhead = parse_ns(v); },
                 [](const Settings& s) { return format_ns(s.write_page_overhead); }});

    k.push_back({"channels", [](Settings& s, Pending&, std::string_view v) { s.channels = parse_int(v); },
                 [](const Settings& s) { return std::to_string(s.channels); }});
    k.push_back({"ways", [](Settings& s, Pending&, std::string_view v) { s.ways = parse_int(v); },
                 [](const Settings& s) { return std::to_string(s.ways); }});
    k.push_back({"host_cap_mb_s",
                 [](Settings& s, Pending&, std::string_view v) { s.host_cap = parse_double(v) * kBytesPerMB; },
                 [](const Settings& s) { return format_double(s.host_cap / kBytesPerMB); }});
    k.push_back({"striping",
                 [](Settings& s, Pending&, std::string_view v) { s.striping = parse_striping(v); },
                 [](const Settings& s) { return std::string(to_string(s.striping)); }});
    k.push_back({"pages_per_chip",
                 [](Settings& s, Pending&, std::string_view v) { s.pages_per_chip = parse_i64(v); },
                 [](const Settings& s) { return std::to_string(s.pages_per_chip); }});

    k.push_back({"power_conv_mw",
                 [](Settings& s, Pending&, std::string_view v) { s.power.conv_mw = parse_double(v); },
                 [](const Settings& s) { return format_double(s.power.conv_mw); }});
    k.push_back({"power_sync_mw",
                 [](Settings& s, Pending&, std::string_view v) { s.power.sync_mw = parse_double(v); },
                 [](const Settings& s) { return format_double(s.power.sync_mw); }});
    k.push_back({"power_ddr_mw",
                 [](Settings& s, Pending&, std::string_view v) { s.power.ddr_mw = parse_double(v); },
                 [](const Settings& s) { return format_double(s.power.ddr_mw); }});

    k.push_back({"mode", [](Settings& s, Pending&, std::string_view v) { s.mode = parse_op(v); },
                 [](const Settings& s) { return std::string(to_string(s.mode)); }});
    k.push_back({"total_bytes",
                 [](Settings& s, Pending&, std::string_view v) { s.total_bytes = parse_i64(v); },
                 [](const Settings& s) { return std::to_string(s.total_bytes); }});
    k.push_back({"chunk_bytes",
                 [](Settings& s, Pending&, std::string_view v) { s.chunk_bytes = parse_i64(v); },
                 [](const Settings& s) { return std::to_string(s.chunk_bytes); }});

    k.push_back(ns_key("t_out_ns", &TimingParams::t_out));
    k.push_back(ns_key("t_in_ns", &TimingParams::t_in));
    k.push_back(ns_key("t_s_ns", &TimingParams::t_s));
    k.push_back(ns_key("t_h_ns", &TimingParams::t_h));
    k.push_back(ns_key("t_ds_ns", &TimingParams::t_ds));
    k.push_back(ns_key("t_dh_ns", &TimingParams::t_dh));
    k.push_back(ns_key("t_rea_ns", &TimingParams::t_rea));
    k.push_back(ns_key("t_diff_ns", &TimingParams::t_diff));
    k.push_back(ns_key("t_ios_ns", &TimingParams::t_ios));
    k.push_back(ns_key("t_ioh_ns", &TimingParams::t_ioh));
    k.push_back(ns_key("t_iod_max_ns", &TimingParams::t_iod_max));
    k.push_back(ns_key("t_rwebd_min_ns", &TimingParams::t_rwebd_min));
    k.push_back({"alpha", [](Settings& s, Pending&, std::string_view v) { s.timing.alpha = parse_alpha(v); },
                 [](const Settings& s) {
                   return std::to_string(s.timing.alpha.numerator()) + "/" +
                          std::to_string(s.timing.alpha.denominator());
                 }});
    return k;
  }();
  return keys;
}

void resolve(Settings& s, const Pending& p) {
  FlashProfile& prof = s.profile(s.cell);
  if (p.t_r) prof.t_r = *p.t_r;
  if (p.t_prog) prof.t_prog = *p.t_prog;
  if (p.t_byte) prof.t_byte = *p.t_byte;
  if (p.page_size) prof.page_size = *p.page_size;
  if (p.overhead) s.read_page_overhead = s.write_page_overhead = *p.overhead;
  if (p.read_overhead) s.read_page_overhead = *p.read_overhead;
  if (p.write_overhead) s.write_page_overhead = *p.write_overhead;
  if (p.cmd_cycles) s.cmd_cycles_read = s.cmd_cycles_write = *p.cmd_cycles;
  if (p.cmd_cycles_read) s.cmd_cycles_read = *p.cmd_cycles_read;
  if (p.cmd_cycles_write) s.cmd_cycles_write = *p.cmd_cycles_write;
}

}  // namespace

Settings parse_settings(std::istream& in) {
  Settings s;
  Pending pending;
  std::map<std::string, const Key*, std::less<>> index;
  for (const auto& k : key_table()) index.emplace(k.name, &k);

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
    const auto it = index.find(key);
    if (it == index.end()) throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
    if (!seen.insert(std::string(key)).second)
      throw ParseError(line_no, "duplicate key '" + std::string(key) + "'");
    if (value.empty()) throw ParseError(line_no, "missing value for '" + std::string(key) + "'");
    try {
      it->second->set(s, pending, value);
    } catch (const std::exception& e) {
      throw ParseError(line_no, std::string(key) + ": " + e.what());
    }
  }
  resolve(s, pending);
  return s;
}

Settings load_settings(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_settings(in);
}

std::vector<std::string> settings_keys() {
  std::vector<std::string> out;
  for (const auto& k : key_table()) out.push_back(k.name);
  return out;
}

void write_settings(const Settings& settings, std::ostream& out) {
  for (const auto& k : key_table()) {
    const auto v = k.get(settings);
    if (!v.empty()) out << k.name << " = " << v << '\n';
  }
}

SsdConfig make_config(const Settings& settings, CellKind cell, InterfaceKind kind, int channels,
                      int ways) {
  SsdConfig c;
  c.n_channels = channels;
  c.n_ways = ways;
  c.profile = settings.profile(cell);
  c.profile.validate();
  TimingParams timing = settings.timing;
  timing.t_byte = c.profile.t_byte;
  c.protocol.clock = resolve_clock(kind, timing, settings.freq_mhz);
  c.protocol.cmd_cycles_write = settings.cmd_cycles_write;
  c.protocol.cmd_cycles_read = settings.cmd_cycles_read;
  c.protocol.addr_cycles = settings.addr_cycles;
  c.protocol.write_page_overhead = settings.write_page_overhead;
  c.protocol.read_page_overhead = settings.read_page_overhead;
  c.host_cap = settings.host_cap;
  c.striping = settings.striping;
  c.pages_per_chip = settings.pages_per_chip;
  c.validate();
  return c;
}

SsdConfig make_config(const Settings& settings) {
  return make_config(settings, settings.cell, settings.interface, settings.channels, settings.ways);
}

Trace make_trace(const Settings& settings) {
  return gen_sequential(settings.total_bytes, settings.chunk_bytes, settings.mode);
}

}  // namespace ssdsim
