#pragma once

#include "ssdsim/units.hpp"

#include <cstdint>
#include <queue>
#include <string_view>
#include <vector>

namespace ssdsim {

enum class EventKind { BusFree, ChipFetchDone, ChipProgramDone, PageOpStart, RequestDone };

std::string_view to_string(EventKind kind);
EventKind parse_event_kind(std::string_view text);

struct Event {
  Picoseconds time{};
  std::uint64_t seq = 0;
  EventKind kind = EventKind::BusFree;
  int channel = -1;
  int way = -1;
  std::int64_t request = -1;
};

/// Min-queue on (time, seq). Simultaneous events pop in insertion order.
class EventQueue {
 public:
  /// Enqueues and returns the assigned sequence number.
  std::uint64_t push(Picoseconds time, EventKind kind, int channel, int way, std::int64_t request);
  /// Throws std::logic_error on an empty queue.
  Event pop_next();

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

 private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.time != b.time) return a.time > b.time;
      return a.seq > b.seq;
    }
  };
  std::priority_queue<Event, std::vector<Event>, Later> heap_;
  std::uint64_t next_seq_ = 0;
};

}  // namespace ssdsim
