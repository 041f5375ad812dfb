#include "ssdsim/engine.hpp"

#include "ssdsim/errors.hpp"

#include <cassert>
#include <string>

namespace ssdsim {

double Stats::aggregate_bandwidth() const {
  if (elapsed.count() <= 0) return 0;
  return static_cast<double>(bytes_read + bytes_written) / to_seconds(elapsed);
}

namespace {

enum class Phase { ReadCommand, ReadData, WriteData };

struct ChannelState {
  bool busy = false;
  Phase phase = Phase::ReadCommand;
  std::size_t active_unit = 0;
  Picoseconds busy_total{};
  // Indices into the current request's units that live on this channel.
  std::vector<std::size_t> units;
  std::size_t next_issue = 0;     // next unit to command (read) or stream (write)
  std::size_t next_transfer = 0;  // next fetched unit to move out (read)
};

class Simulator {
 public:
  Simulator(const SsdConfig& config, const Trace& trace, const RunOptions& options)
      : config_(config), trace_(trace), record_(options.record_events) {
    chips_.reserve(static_cast<std::size_t>(config.total_chips()));
    for (int i = 0; i < config.total_chips(); ++i) chips_.emplace_back(config.profile);
    channels_.resize(static_cast<std::size_t>(config.n_channels));
    program_unit_.resize(chips_.size());
  }

  RunResult run() {
    start_request(0, Picoseconds{0});
    while (!queue_.empty()) {
      const Event e = queue_.pop_next();
      now_ = e.time;
      if (record_) result_.events.push_back(e);
      handle(e);
    }
    finish();
    return std::move(result_);
  }

 private:
  NandChip& chip_of(const PageUnit& u) {
    return chips_[static_cast<std::size_t>(u.location.channel * config_.n_ways + u.location.way)];
  }

  void start_request(std::size_t index, Picoseconds now) {
    request_ = index;
    request_start_ = now;
    const TraceRecord& rec = trace_[index];
    units_ = decompose_request(config_, rec);
    remaining_ = units_.size();
    for (auto& ch : channels_) {
      ch.units.clear();
      ch.next_issue = 0;
      ch.next_transfer = 0;
    }
    for (std::size_t i = 0; i < units_.size(); ++i)
      channels_[static_cast<std::size_t>(units_[i].location.channel)].units.push_back(i);
    for (int c = 0; c < config_.n_channels; ++c) dispatch(c);
  }

  void occupy(int c, Phase phase, std::size_t unit, Picoseconds duration) {
    auto& ch = channels_[static_cast<std::size_t>(c)];
    ch.busy = true;
    ch.phase = phase;
    ch.active_unit = unit;
    ch.busy_total += duration;
    const auto way = units_[unit].location.way;
    const auto req = static_cast<std::int64_t>(request_);
    queue_.push(now_, EventKind::PageOpStart, c, way, req);
    queue_.push(now_ + duration, EventKind::BusFree, c, way, req);
  }

  // Grants the channel to at most one phase.
  void dispatch(int c) {
    auto& ch = channels_[static_cast<std::size_t>(c)];
    if (ch.busy) return;
    const bool is_read = trace_[request_].op == OpKind::Read;
    const auto& proto = config_.protocol;

    if (ch.next_issue < ch.units.size()) {
      const std::size_t u = ch.units[ch.next_issue];
      if (chip_of(units_[u]).is_available(now_)) {
        ++ch.next_issue;
        if (is_read) {
          occupy(c, Phase::ReadCommand, u, read_command_time(proto));
        } else {
          occupy(c, Phase::WriteData, u,
                 write_command_time(proto) + data_phase_time(proto, units_[u].bytes) +
                     proto.write_page_overhead);
        }
        return;
      }
    }

    if (is_read && ch.next_transfer < ch.next_issue) {
      const std::size_t u = ch.units[ch.next_transfer];
      NandChip& chip = chip_of(units_[u]);
      chip.settle(now_);
      if (chip.state() == NandChip::State::ReadyToTransfer) {
        ++ch.next_transfer;
        occupy(c, Phase::ReadData, u,
               data_phase_time(proto, units_[u].bytes) + proto.read_page_overhead);
      }
    }
  }

  void unit_finished(const PageUnit& u, OpKind op) {
    if (op == OpKind::Read) {
      result_.stats.bytes_read += u.bytes;
    } else {
      result_.stats.bytes_written += u.bytes;
    }
    assert(remaining_ > 0);
    if (--remaining_ == 0)
      queue_.push(now_, EventKind::RequestDone, -1, -1, static_cast<std::int64_t>(request_));
  }

  void handle(const Event& e) {
    switch (e.kind) {
      case EventKind::PageOpStart:
        return;
      case EventKind::BusFree: {
        auto& ch = channels_[static_cast<std::size_t>(e.channel)];
        const PageUnit& u = units_[ch.active_unit];
        NandChip& chip = chip_of(u);
        ch.busy = false;
        switch (ch.phase) {
          case Phase::ReadCommand: {
            const auto done = chip.issue_fetch(u.location.page, now_);
            queue_.push(done, EventKind::ChipFetchDone, e.channel, u.location.way, e.request);
            break;
          }
          case Phase::ReadData:
            chip.release_register(now_);
            unit_finished(u, OpKind::Read);
            break;
          case Phase::WriteData: {
            chip.load_register(u.location.page, now_);
            const auto done = chip.issue_program(now_);
            queue_.push(done, EventKind::ChipProgramDone, e.channel, u.location.way, e.request);
            program_unit_[chip_index(u)] = ch.active_unit;
            break;
          }
        }
        dispatch(e.channel);
        return;
      }
      case EventKind::ChipFetchDone:
        chips_[chip_index(e.channel, e.way)].settle(now_);
        dispatch(e.channel);
        return;
      case EventKind::ChipProgramDone: {
        const auto idx = chip_index(e.channel, e.way);
        chips_[idx].settle(now_);
        unit_finished(units_[program_unit_[idx]], OpKind::Write);
        dispatch(e.channel);
        return;
      }
      case EventKind::RequestDone: {
        const Picoseconds took = now_ - request_start_;
        if (trace_[request_].op == OpKind::Read) {
          result_.stats.read_elapsed += took;
        } else {
          result_.stats.write_elapsed += took;
        }
        if (request_ + 1 < trace_.size()) start_request(request_ + 1, now_);
        return;
      }
    }
  }

  std::size_t chip_index(const PageUnit& u) const {
    return chip_index(u.location.channel, u.location.way);
  }
  std::size_t chip_index(int channel, int way) const {
    return static_cast<std::size_t>(channel * config_.n_ways + way);
  }

  void finish() {
    Stats& s = result_.stats;
    s.elapsed = now_;
    for (const auto& ch : channels_) s.per_channel_busy.push_back(ch.busy_total);
    for (const auto& chip : chips_) s.per_chip_busy.push_back(chip.busy_time());
    if (s.read_elapsed.count() > 0)
      s.read_bandwidth = static_cast<double>(s.bytes_read) / to_seconds(s.read_elapsed);
    if (s.write_elapsed.count() > 0)
      s.write_bandwidth = static_cast<double>(s.bytes_written) / to_seconds(s.write_elapsed);
  }

  const SsdConfig& config_;
  const Trace& trace_;
  bool record_;

  EventQueue queue_;
  std::vector<NandChip> chips_;
  std::vector<ChannelState> channels_;
  std::vector<std::size_t> program_unit_;  // unit being programmed, per chip

  std::size_t request_ = 0;
  Picoseconds request_start_{};
  std::vector<PageUnit> units_;
  std::size_t remaining_ = 0;
  Picoseconds now_{};

  RunResult result_;
};

}  // namespace

RunResult run(const SsdConfig& config, const Trace& trace, const RunOptions& options) {
  config.validate();
  if (trace.empty()) throw InputError("trace is empty");
  for (const auto& rec : trace) {
    if (rec.length <= 0) throw InputError("request length must be > 0");
    if (rec.offset < 0 || rec.offset + rec.length > config.capacity_bytes())
      throw InputError("request at offset " + std::to_string(rec.offset) +
                       " exceeds device capacity");
  }
  return Simulator(config, trace, options).run();
}

Stats simulate(const SsdConfig& config, const Trace& trace) { return run(config, trace).stats; }

}  // namespace ssdsim
