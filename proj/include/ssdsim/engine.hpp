#pragma once

#include "ssdsim/event_queue.hpp"
#include "ssdsim/topology.hpp"
#include "ssdsim/workload.hpp"

#include <cstdint>
#include <vector>

namespace ssdsim {

struct Stats {
  std::int64_t bytes_read = 0;
  std::int64_t bytes_written = 0;
  Picoseconds elapsed{};        // completion time of the last event
  Picoseconds read_elapsed{};   // summed duration of read requests
  Picoseconds write_elapsed{};  // summed duration of write requests
  std::vector<Picoseconds> per_channel_busy;
  std::vector<Picoseconds> per_chip_busy;  // index channel * n_ways + way
  double read_bandwidth = 0;   // bytes/s
  double write_bandwidth = 0;  // bytes/s
  bool capped = false;

  /// bytes moved over the whole run / elapsed.
  double aggregate_bandwidth() const;
  double bandwidth(OpKind op) const { return op == OpKind::Read ? read_bandwidth : write_bandwidth; }
};

struct RunOptions {
  bool record_events = false;
};

struct RunResult {
  Stats stats;
  std::vector<Event> events;  // only populated with RunOptions::record_events
};

/// Replays `trace` on the device described by `config`.
///
/// Requests are served one at a time in trace order: a request is issued
/// once the previous one has completed, including its final program. Inside
/// a request each channel walks its page units in logical order. A channel
/// that falls free grants, in this order: the next read command whose chip
/// is idle, then the oldest fetched page waiting for data-out. Writes stream
/// data-in to the next page as soon as its chip is idle, so programs on
/// different ways overlap.
RunResult run(const SsdConfig& config, const Trace& trace, const RunOptions& options = {});

/// Convenience wrapper returning only the statistics.
Stats simulate(const SsdConfig& config, const Trace& trace);

}  // namespace ssdsim
