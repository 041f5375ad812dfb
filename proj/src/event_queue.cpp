#include "ssdsim/event_queue.hpp"

#include "ssdsim/errors.hpp"

#include <stdexcept>
#include <string>

namespace ssdsim {

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::BusFree: return "BusFree";
    case EventKind::ChipFetchDone: return "ChipFetchDone";
    case EventKind::ChipProgramDone: return "ChipProgramDone";
    case EventKind::PageOpStart: return "PageOpStart";
    case EventKind::RequestDone: return "RequestDone";
  }
  return "?";
}

EventKind parse_event_kind(std::string_view text) {
  for (auto k : {EventKind::BusFree, EventKind::ChipFetchDone, EventKind::ChipProgramDone,
                 EventKind::PageOpStart, EventKind::RequestDone})
    if (to_string(k) == text) return k;
  throw InputError("unknown event kind '" + std::string(text) + "'");
}

std::uint64_t EventQueue::push(Picoseconds time, EventKind kind, int channel, int way,
                               std::int64_t request) {
  const auto seq = next_seq_++;
  heap_.push(Event{time, seq, kind, channel, way, request});
  return seq;
}

Event EventQueue::pop_next() {
  if (heap_.empty()) throw std::logic_error("pop_next on an empty event queue");
  Event e = heap_.top();
  heap_.pop();
  return e;
}

}  // namespace ssdsim
