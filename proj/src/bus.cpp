#include "ssdsim/bus.hpp"

#include "ssdsim/errors.hpp"

namespace ssdsim {

void BusProtocol::validate() const {
  if (clock.t_p.count() <= 0 || clock.frequency_mhz <= 0)
    throw InputError("bus clock is not resolved");
  if (cmd_cycles_write < 0 || cmd_cycles_read < 0 || addr_cycles < 0)
    throw InputError("cycle counts must be >= 0");
  if (write_page_overhead.count() < 0 || read_page_overhead.count() < 0)
    throw InputError("controller overhead must be >= 0");
}

BusProtocol BusProtocol::with_defaults(const ClockSpec& clock) {
  BusProtocol p;
  p.clock = clock;
  p.write_page_overhead = us(2);
  p.read_page_overhead = us(6);
  return p;
}

Picoseconds write_command_time(const BusProtocol& proto) {
  return (proto.cmd_cycles_write + proto.addr_cycles) * proto.clock.t_p;
}

Picoseconds read_command_time(const BusProtocol& proto) {
  return (proto.cmd_cycles_read + proto.addr_cycles) * proto.clock.t_p;
}

Picoseconds data_phase_time(const BusProtocol& proto, std::int64_t bytes) {
  if (bytes < 0) throw InputError("byte count must be >= 0");
  return round_picos(per_byte_cycle(proto.clock) * bytes);
}

Picoseconds page_write_bus_time(const BusProtocol& proto, std::int64_t page_size) {
  if (page_size <= 0) throw InputError("page_size must be > 0");
  return write_command_time(proto) + data_phase_time(proto, page_size) +
         proto.write_page_overhead;
}

Picoseconds page_read_bus_time(const BusProtocol& proto, std::int64_t page_size) {
  if (page_size <= 0) throw InputError("page_size must be > 0");
  return read_command_time(proto) + data_phase_time(proto, page_size) +
         proto.read_page_overhead;
}

double channel_peak_rate(const BusProtocol& proto) {
  return 1e12 / to_double(per_byte_cycle(proto.clock));
}

}  // namespace ssdsim
