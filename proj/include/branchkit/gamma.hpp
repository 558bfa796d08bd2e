#pragma once

#include <stdexcept>

#include "branchkit/halfint.hpp"

namespace branchkit {

// Value of the Gamma function at a half-integer point.  A pole (argument a
// non-positive integer) is a value of this type, not an error, so that
// reciprocal-Gamma factors can vanish exactly.
struct GammaValue {
  enum class Kind { finite, pole };
  Kind kind = Kind::finite;
  double value = 0.0;

  static constexpr GammaValue finite(double v) noexcept { return {Kind::finite, v}; }
  static constexpr GammaValue pole() noexcept { return {Kind::pole, 0.0}; }
  [[nodiscard]] constexpr bool is_pole() const noexcept { return kind == Kind::pole; }
};

// Gamma at half-integer arguments by exact recursion from Gamma(1) = 1 and
// Gamma(1/2) = sqrt(pi).  The only irrational input is sqrt(pi) itself;
// everything else is a product of exact dyadic factors, so functional
// identities such as Gamma(x+1) = x Gamma(x) hold to a few ulp.
// Throws std::overflow_error for x >= 172 where the result exceeds
// double range.
GammaValue gamma_exact(HalfInt x);

// 1/Gamma: entire, exactly 0.0 at the poles of Gamma.
double rgamma(HalfInt x);

// Finite Gamma value or std::domain_error at a pole.
double gamma_or_throw(HalfInt x);

// Gamma at the quarter-integer point four_x/4.  Uses the exact half-integer
// recursion when four_x is even and std::tgamma otherwise (quarter-odd
// arguments are never poles).  Connection coefficients and norm constants
// evaluate their Gamma quotients through this entry point.
GammaValue gamma_q4(long long four_x);
double rgamma_q4(long long four_x);

}  // namespace branchkit
