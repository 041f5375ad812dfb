#include "ssdsim/workload.hpp"

#include "ssdsim/errors.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace ssdsim {

std::string_view to_string(OpKind op) { return op == OpKind::Read ? "read" : "write"; }

OpKind parse_op(std::string_view text) {
  if (text == "read" || text == "R" || text == "r") return OpKind::Read;
  if (text == "write" || text == "W" || text == "w") return OpKind::Write;
  throw InputError("unknown op '" + std::string(text) + "' (expected read|write)");
}

Trace gen_sequential(std::int64_t total, std::int64_t chunk, OpKind op) {
  if (chunk <= 0) throw InputError("chunk must be > 0");
  if (total < chunk) throw InputError("total must be >= chunk");
  if (total % chunk != 0) throw InputError("chunk must divide total");
  Trace trace;
  trace.reserve(static_cast<std::size_t>(total / chunk));
  for (std::int64_t off = 0; off < total; off += chunk) trace.push_back({op, off, chunk});
  return trace;
}

namespace {

std::int64_t parse_int(std::string_view tok, std::size_t line, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
  return v;
}

}  // namespace

Trace parse_trace(std::istream& in) {
  Trace trace;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    std::istringstream ls(text);
    std::string op, off, len, extra;
    if (!(ls >> op) || op.front() == '#') continue;
    if (!(ls >> off >> len)) throw ParseError(line_no, "expected `R|W <offset> <length>`");
    if (ls >> extra) throw ParseError(line_no, "trailing field '" + extra + "'");

    TraceRecord rec;
    if (op == "R") {
      rec.op = OpKind::Read;
    } else if (op == "W") {
      rec.op = OpKind::Write;
    } else {
      throw ParseError(line_no, "unknown op '" + op + "'");
    }
    rec.offset = parse_int(off, line_no, "offset");
    rec.length = parse_int(len, line_no, "length");
    if (rec.offset < 0) throw ParseError(line_no, "offset must be >= 0");
    if (rec.length <= 0) throw ParseError(line_no, "length must be > 0");
    trace.push_back(rec);
  }
  return trace;
}

void serialize_trace(const Trace& trace, std::ostream& out) {
  for (const auto& r : trace)
    out << (r.op == OpKind::Read ? 'R' : 'W') << ' ' << r.offset << ' ' << r.length << '\n';
}

std::int64_t total_bytes(const Trace& trace) {
  std::int64_t n = 0;
  for (const auto& r : trace) n += r.length;
  return n;
}

}  // namespace ssdsim
