#pragma once

#include "ssdsim/bus.hpp"
#include "ssdsim/flash.hpp"
#include "ssdsim/workload.hpp"

#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

namespace ssdsim {

struct Stats;

/// Order in which consecutive logical pages visit the chips.
enum class Striping {
  ChannelMajor,  // next page goes to the next channel, then the next way
  WayMajor,      // next page goes to the next way, then the next channel
};

std::string_view to_string(Striping s);
Striping parse_striping(std::string_view text);

constexpr double kSataHostCap = 300e6;  // bytes/s

struct SsdConfig {
  int n_channels = 1;
  int n_ways = 1;
  BusProtocol protocol;
  FlashProfile profile;
  double host_cap = kSataHostCap;  // bytes/s
  Striping striping = Striping::ChannelMajor;
  std::int64_t pages_per_chip = 1 << 16;

  void validate() const;
  int total_chips() const { return n_channels * n_ways; }
  std::int64_t capacity_bytes() const {
    return static_cast<std::int64_t>(total_chips()) * pages_per_chip * profile.page_size;
  }
};

struct PageLocation {
  int channel = 0;
  int way = 0;
  std::int64_t page = 0;  // within the chip

  friend auto operator<=>(const PageLocation&, const PageLocation&) = default;
};

PageLocation map_page(const SsdConfig& config, std::int64_t logical_page);

/// One page-sized piece of a host request.
struct PageUnit {
  std::int64_t logical_page = 0;
  PageLocation location;
  std::int64_t bytes = 0;  // bytes of the request that fall in this page
};

/// Splits a request into page units in ascending logical-page order.
/// A request that reaches past the configured capacity is an InputError.
std::vector<PageUnit> decompose_request(const SsdConfig& config, const TraceRecord& record);

/// Caps reported bandwidths at the host link rate and flags whether it bound.
Stats apply_host_cap(Stats stats, const SsdConfig& config);

}  // namespace ssdsim
