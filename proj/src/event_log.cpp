#include "ssdsim/event_log.hpp"

#include "ssdsim/errors.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace ssdsim {

void write_event_log(const std::vector<Event>& events, std::ostream& out) {
  for (const auto& e : events)
    out << e.time.count() << '\t' << to_string(e.kind) << '\t' << e.channel << '\t' << e.way
        << '\t' << e.request << '\n';
}

std::vector<Event> read_event_log(std::istream& in) {
  std::vector<Event> events;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream ls(line);
    std::int64_t t = 0;
    std::string kind;
    Event e;
    if (!(ls >> t >> kind >> e.channel >> e.way >> e.request))
      throw ParseError(line_no, "expected `time_ps kind channel way request`");
    e.time = Picoseconds{t};
    try {
      e.kind = parse_event_kind(kind);
    } catch (const InputError& err) {
      throw ParseError(line_no, err.what());
    }
    e.seq = events.size();
    events.push_back(e);
  }
  return events;
}

std::vector<std::string> check_exclusivity(const std::vector<Event>& events,
                                           const SsdConfig& config) {
  std::vector<std::string> problems;
  auto report = [&](const Event& e, const std::string& what) {
    std::ostringstream msg;
    msg << "t=" << e.time.count() << "ps ch" << e.channel << " way" << e.way << ": " << what;
    problems.push_back(msg.str());
  };

  // Channels: PageOpStart and BusFree strictly alternate per channel.
  std::vector<int> open_phase(static_cast<std::size_t>(config.n_channels), 0);
  std::vector<Picoseconds> last_free(static_cast<std::size_t>(config.n_channels));
  // Chip -> cell-operation intervals reconstructed from completion events.
  std::map<std::pair<int, int>, std::vector<std::pair<Picoseconds, Picoseconds>>> cell_ops;

  Picoseconds prev{};
  for (const auto& e : events) {
    if (e.time < prev) report(e, "log is not time ordered");
    prev = e.time;
    if (e.kind == EventKind::RequestDone) continue;
    if (e.channel < 0 || e.channel >= config.n_channels || e.way < 0 || e.way >= config.n_ways) {
      report(e, "location outside the configured topology");
      continue;
    }
    const auto c = static_cast<std::size_t>(e.channel);
    switch (e.kind) {
      case EventKind::PageOpStart:
        if (open_phase[c] != 0) report(e, "channel granted while already busy");
        if (e.time < last_free[c]) report(e, "channel granted before it was freed");
        open_phase[c] = 1;
        break;
      case EventKind::BusFree:
        if (open_phase[c] != 1) report(e, "channel freed without an open phase");
        open_phase[c] = 0;
        last_free[c] = e.time;
        break;
      case EventKind::ChipFetchDone:
        cell_ops[{e.channel, e.way}].emplace_back(e.time - config.profile.t_r, e.time);
        break;
      case EventKind::ChipProgramDone:
        cell_ops[{e.channel, e.way}].emplace_back(e.time - config.profile.t_prog, e.time);
        break;
      case EventKind::RequestDone:
        break;
    }
  }

  for (auto& [chip, ops] : cell_ops) {
    std::sort(ops.begin(), ops.end());
    for (std::size_t i = 1; i < ops.size(); ++i) {
      if (ops[i].first < ops[i - 1].second) {
        std::ostringstream msg;
        msg << "chip ch" << chip.first << " way" << chip.second << ": cell operations overlap at "
            << ops[i].first.count() << "ps";
        problems.push_back(msg.str());
      }
    }
  }
  return problems;
}

}  // namespace ssdsim
