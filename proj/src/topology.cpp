#include "ssdsim/topology.hpp"

#include "ssdsim/engine.hpp"
#include "ssdsim/errors.hpp"

#include <algorithm>
#include <string>

namespace ssdsim {

std::string_view to_string(Striping s) {
  return s == Striping::ChannelMajor ? "channel_major" : "way_major";
}

Striping parse_striping(std::string_view text) {
  if (text == "channel_major") return Striping::ChannelMajor;
  if (text == "way_major") return Striping::WayMajor;
  throw InputError("unknown striping '" + std::string(text) +
                   "' (expected channel_major|way_major)");
}

void SsdConfig::validate() const {
  if (n_channels < 1) throw InputError("channels must be >= 1");
  if (n_ways < 1) throw InputError("ways must be >= 1");
  if (!(host_cap > 0)) throw InputError("host cap must be > 0");
  if (pages_per_chip < 1) throw InputError("pages_per_chip must be >= 1");
  protocol.validate();
  profile.validate();
}

PageLocation map_page(const SsdConfig& config, std::int64_t logical_page) {
  if (logical_page < 0) throw InputError("logical page must be >= 0");
  const std::int64_t nc = config.n_channels;
  const std::int64_t nw = config.n_ways;
  PageLocation loc;
  if (config.striping == Striping::ChannelMajor) {
    loc.channel = static_cast<int>(logical_page % nc);
    loc.way = static_cast<int>((logical_page / nc) % nw);
  } else {
    loc.way = static_cast<int>(logical_page % nw);
    loc.channel = static_cast<int>((logical_page / nw) % nc);
  }
  loc.page = logical_page / (nc * nw);
  return loc;
}

std::vector<PageUnit> decompose_request(const SsdConfig& config, const TraceRecord& record) {
  if (record.length <= 0) throw InputError("request length must be > 0");
  if (record.offset < 0) throw InputError("request offset must be >= 0");
  const std::int64_t page = config.profile.page_size;
  const std::int64_t end = record.offset + record.length;
  if (end > config.capacity_bytes())
    throw InputError("request [" + std::to_string(record.offset) + ", " + std::to_string(end) +
                     ") exceeds device capacity of " + std::to_string(config.capacity_bytes()) +
                     " bytes");

  std::vector<PageUnit> units;
  const std::int64_t first = record.offset / page;
  const std::int64_t last = (end - 1) / page;
  units.reserve(static_cast<std::size_t>(last - first + 1));
  for (std::int64_t lp = first; lp <= last; ++lp) {
    const std::int64_t lo = std::max(record.offset, lp * page);
    const std::int64_t hi = std::min(end, (lp + 1) * page);
    units.push_back(PageUnit{lp, map_page(config, lp), hi - lo});
  }
  return units;
}

Stats apply_host_cap(Stats stats, const SsdConfig& config) {
  if (stats.read_bandwidth > config.host_cap) {
    stats.read_bandwidth = config.host_cap;
    stats.capped = true;
  }
  if (stats.write_bandwidth > config.host_cap) {
    stats.write_bandwidth = config.host_cap;
    stats.capped = true;
  }
  return stats;
}

}  // namespace ssdsim
