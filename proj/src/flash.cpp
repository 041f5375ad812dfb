#include "ssdsim/flash.hpp"

#include "ssdsim/errors.hpp"

#include <bit>
#include <string>

namespace ssdsim {

std::string_view to_string(CellKind kind) { return kind == CellKind::Slc ? "SLC" : "MLC"; }

CellKind parse_cell(std::string_view text) {
  if (text == "slc" || text == "SLC") return CellKind::Slc;
  if (text == "mlc" || text == "MLC") return CellKind::Mlc;
  throw InputError("unknown cell kind '" + std::string(text) + "' (expected slc|mlc)");
}

std::string_view to_string(NandChip::State state) {
  switch (state) {
    case NandChip::State::Idle: return "Idle";
    case NandChip::State::BusyFetch: return "BusyFetch";
    case NandChip::State::BusyProgram: return "BusyProgram";
    case NandChip::State::ReadyToTransfer: return "ReadyToTransfer";
  }
  return "?";
}

void FlashProfile::validate() const {
  if (t_r.count() <= 0) throw InputError("t_r must be > 0");
  if (t_prog <= t_r) throw InputError("t_prog must exceed t_r");
  if (t_byte.count() < 0) throw InputError("t_byte must be >= 0");
  if (page_size <= 0 || !std::has_single_bit(static_cast<std::uint64_t>(page_size)))
    throw InputError("page_size must be a positive power of two");
}

FlashProfile FlashProfile::slc_default() {
  return FlashProfile{CellKind::Slc, us(25), us(220), ns(12), 2048};
}

FlashProfile FlashProfile::mlc_default() {
  return FlashProfile{CellKind::Mlc, us(60), us(800), ns(12), 4096};
}

FlashProfile FlashProfile::defaults_for(CellKind cell) {
  return cell == CellKind::Slc ? slc_default() : mlc_default();
}

NandChip::NandChip(FlashProfile profile) : profile_(profile) { profile_.validate(); }

bool NandChip::is_available(Picoseconds now) const {
  switch (state_) {
    case State::Idle: return true;
    case State::BusyFetch:
    case State::BusyProgram: return now >= busy_until_;
    case State::ReadyToTransfer: return false;
  }
  return false;
}

void NandChip::settle(Picoseconds now) {
  if (now < busy_until_) return;
  if (state_ == State::BusyFetch) {
    state_ = State::ReadyToTransfer;
  } else if (state_ == State::BusyProgram) {
    state_ = State::Idle;
    registered_page_.reset();
  }
}

Picoseconds NandChip::issue_fetch(PageId page, Picoseconds now) {
  settle(now);
  if (state_ != State::Idle)
    throw SchedulingError(std::string("fetch issued to chip in state ") +
                          std::string(to_string(state_)));
  state_ = State::BusyFetch;
  registered_page_ = page;
  busy_until_ = now + profile_.t_r;
  busy_time_ += profile_.t_r;
  return busy_until_;
}

void NandChip::load_register(PageId page, Picoseconds now) {
  settle(now);
  if (state_ != State::Idle)
    throw SchedulingError(std::string("data-in to chip in state ") +
                          std::string(to_string(state_)));
  state_ = State::ReadyToTransfer;
  registered_page_ = page;
}

Picoseconds NandChip::issue_program(Picoseconds now) {
  settle(now);
  if (state_ != State::ReadyToTransfer || !registered_page_)
    throw SchedulingError(std::string("program issued to chip in state ") +
                          std::string(to_string(state_)));
  state_ = State::BusyProgram;
  busy_until_ = now + profile_.t_prog;
  busy_time_ += profile_.t_prog;
  return busy_until_;
}

void NandChip::release_register(Picoseconds now) {
  settle(now);
  if (state_ != State::ReadyToTransfer)
    throw SchedulingError(std::string("data-out from chip in state ") +
                          std::string(to_string(state_)));
  state_ = State::Idle;
  registered_page_.reset();
}

}  // namespace ssdsim
