#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace ssdsim {

enum class OpKind { Read, Write };

std::string_view to_string(OpKind op);
/// read|write (also R|W).
OpKind parse_op(std::string_view text);

/// One host request.
struct TraceRecord {
  OpKind op = OpKind::Read;
  std::int64_t offset = 0;  // bytes
  std::int64_t length = 0;  // bytes, > 0

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

using Trace = std::vector<TraceRecord>;

constexpr std::int64_t kDefaultChunkBytes = 64 * 1024;
constexpr std::int64_t kDefaultPhaseBytes = 64 * 1024 * 1024;

/// total/chunk back-to-back records starting at offset 0.
Trace gen_sequential(std::int64_t total, std::int64_t chunk, OpKind op);

/// Text format, one record per line: `R|W <offset_bytes> <length_bytes>`.
/// Blank lines and lines starting with '#' are skipped. Errors carry the
/// 1-based line number (ParseError).
Trace parse_trace(std::istream& in);
void serialize_trace(const Trace& trace, std::ostream& out);

std::int64_t total_bytes(const Trace& trace);

}  // namespace ssdsim
