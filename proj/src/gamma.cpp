#include "branchkit/gamma.hpp"

#include <cmath>

namespace branchkit {

namespace {

constexpr double kSqrtPi = 1.7724538509055160272981674833411452;

// Gamma(172) overflows double; half-odd arguments above 171.5 would too.
constexpr long long kOverflowTwice = 343;

}  // namespace

GammaValue gamma_exact(HalfInt x) {
  if (x.twice() >= kOverflowTwice) throw std::overflow_error("gamma_exact: argument too large");

  if (x.is_integer()) {
    long long n = x.as_integer();
    if (n <= 0) return GammaValue::pole();
    double v = 1.0;
    for (long long k = 2; k < n; ++k) v *= static_cast<double>(k);
    return GammaValue::finite(v);
  }

  // Half-odd: climb from Gamma(1/2) = sqrt(pi).
  double v = kSqrtPi;
  if (x.twice() > 1) {
    for (HalfInt h = half(1); h < x; h += 1) v *= h.to_double();
  } else if (x.twice() < 1) {
    for (HalfInt h = x; h < half(1); h += 1) v /= h.to_double();
  }
  return GammaValue::finite(v);
}

double rgamma(HalfInt x) {
  if (x.is_nonpositive_integer()) return 0.0;
  if (x.twice() >= kOverflowTwice) return 0.0;  // below double denormal range
  return 1.0 / gamma_exact(x).value;
}

double gamma_or_throw(HalfInt x) {
  GammaValue g = gamma_exact(x);
  if (g.is_pole()) throw std::domain_error("Gamma pole at " + x.str());
  return g.value;
}

GammaValue gamma_q4(long long four_x) {
  if (four_x % 2 == 0) return gamma_exact(HalfInt::from_twice(four_x / 2));
  return GammaValue::finite(std::tgamma(0.25 * static_cast<double>(four_x)));
}

double rgamma_q4(long long four_x) {
  if (four_x % 2 == 0) return rgamma(HalfInt::from_twice(four_x / 2));
  return 1.0 / std::tgamma(0.25 * static_cast<double>(four_x));
}

}  // namespace branchkit
