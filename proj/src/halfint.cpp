#include "branchkit/halfint.hpp"

#include <charconv>

namespace branchkit {

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

namespace {

[[noreturn]] void bad(std::string_view text, const char* why) {
  throw std::invalid_argument("cannot parse half-integer '" + std::string(text) + "': " + why);
}

long long parse_int(std::string_view s, std::string_view whole, const char* what) {
  long long v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) bad(whole, what);
  return v;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  if (text.empty()) bad(text, "empty input");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    long long d = parse_int(den, text, "malformed denominator");
    long long n = parse_int(num, text, "malformed numerator");
    if (d == 1) return HalfInt(n);
    if (d == 2) return from_twice(n);
    bad(text, "denominator must be 1 or 2");
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (frac != "0" && frac != "5") bad(text, "decimal part must be .0 or .5");
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '+' || whole[0] == '-')) whole.remove_prefix(1);
    if (whole.empty()) bad(text, "missing integer part");
    long long w = parse_int(whole, text, "malformed integer part");
    long long t = 2 * w + (frac == "5" ? 1 : 0);
    return from_twice(negative ? -t : t);
  }

  return HalfInt(parse_int(text, text, "not an integer"));
}

}  // namespace branchkit
