#pragma once

// Event log file: one line per event, tab separated,
//
//   time_ps <TAB> kind <TAB> channel <TAB> way <TAB> request
//
// with kind one of PageOpStart, BusFree, ChipFetchDone, ChipProgramDone,
// RequestDone. channel/way are -1 on RequestDone. Lines starting with '#'
// are comments.

#include "ssdsim/event_queue.hpp"
#include "ssdsim/topology.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ssdsim {

void write_event_log(const std::vector<Event>& events, std::ostream& out);
/// seq is reassigned from line order.
std::vector<Event> read_event_log(std::istream& in);

/// Checks from a log alone that no channel ever carried two phases at once
/// and that no chip ever ran two cell operations at once. Returns one
/// message per violation; empty means the log is clean.
std::vector<std::string> check_exclusivity(const std::vector<Event>& events,
                                           const SsdConfig& config);

}  // namespace ssdsim
