#include "ssdsim/units.hpp"

#include "ssdsim/errors.hpp"

#include <charconv>
#include <string>

namespace ssdsim {

Picoseconds round_picos(const Fraction& ps) {
  if (ps < 0) throw DomainError("negative duration: " + std::to_string(to_double(ps)) + " ps");
  const auto num = ps.numerator();
  const auto den = ps.denominator();
  return Picoseconds{(2 * num + den) / (2 * den)};
}

Fraction parse_fraction(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  const std::string_view whole = s.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw InputError("not a number: '" + std::string(text) + "'");
  if (frac.size() > 9) throw InputError("too many fractional digits: '" + std::string(text) + "'");

  auto digits = [&](std::string_view part) -> std::int64_t {
    std::int64_t v = 0;
    if (part.empty()) return 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size())
      throw InputError("not a number: '" + std::string(text) + "'");
    return v;
  };

  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  Fraction value(digits(whole) * scale + digits(frac), scale);
  return negative ? -value : value;
}

Picoseconds parse_ns(std::string_view text) {
  const Fraction ps = parse_fraction(text) * 1000;
  if (ps.denominator() != 1)
    throw InputError("sub-picosecond precision in '" + std::string(text) + "'");
  return Picoseconds{ps.numerator()};
}

double to_double(const Fraction& f) {
  return static_cast<double>(f.numerator()) / static_cast<double>(f.denominator());
}

}  // namespace ssdsim
