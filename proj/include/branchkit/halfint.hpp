#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace branchkit {

// Exact element of (1/2)Z, stored as twice its value.  All spectral
// parameters live on this grid, so parity conditions, pole detection and
// admissible-set membership are decided by integer arithmetic, never by
// floating-point comparison.  The representation is canonical: equal
// values have equal twice().
class HalfInt {
public:
  constexpr HalfInt() noexcept = default;
  constexpr HalfInt(long long whole) noexcept : twice_(2 * whole) {}

  static constexpr HalfInt from_twice(long long t) noexcept {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  [[nodiscard]] constexpr long long twice() const noexcept { return twice_; }
  [[nodiscard]] constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
  [[nodiscard]] constexpr bool is_half_odd() const noexcept { return twice_ % 2 != 0; }
  [[nodiscard]] constexpr bool is_nonpositive_integer() const noexcept {
    return is_integer() && twice_ <= 0;
  }
  [[nodiscard]] constexpr bool is_positive() const noexcept { return twice_ > 0; }
  [[nodiscard]] constexpr bool is_negative() const noexcept { return twice_ < 0; }

  // Requires is_integer().
  [[nodiscard]] constexpr long long as_integer() const {
    if (!is_integer()) throw std::logic_error("HalfInt::as_integer on a half-odd value");
    return twice_ / 2;
  }

  [[nodiscard]] constexpr double to_double() const noexcept {
    return 0.5 * static_cast<double>(twice_);
  }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) noexcept {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) noexcept {
    return from_twice(a.twice_ - b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a) noexcept { return from_twice(-a.twice_); }
  friend constexpr HalfInt operator*(long long k, HalfInt a) noexcept {
    return from_twice(k * a.twice_);
  }
  constexpr HalfInt& operator+=(HalfInt b) noexcept {
    twice_ += b.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt b) noexcept {
    twice_ -= b.twice_;
    return *this;
  }

  constexpr auto operator<=>(const HalfInt&) const noexcept = default;

  // Canonical, locale-free text form: "n" when integral, "n/2" otherwise.
  [[nodiscard]] std::string str() const;

  // Accepts "n", "n/1", "n/2" and the decimal forms "k.0" / "k.5"
  // (optionally signed).  Throws std::invalid_argument on anything else,
  // including denominators other than 1 or 2.
  static HalfInt parse(std::string_view text);

private:
  long long twice_ = 0;
};

// n/2 as a HalfInt; half(7) is 7/2.
constexpr HalfInt half(long long n) noexcept { return HalfInt::from_twice(n); }

}  // namespace branchkit

template <>
struct std::hash<branchkit::HalfInt> {
  size_t operator()(const branchkit::HalfInt& h) const noexcept {
    return std::hash<long long>{}(h.twice());
  }
};
