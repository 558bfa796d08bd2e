#include <cmath>
#include <stdexcept>

#include "kernels_impl.hpp"

namespace branchkit::kernels::detail {

namespace {

// Binary exponentiation, same multiplication order as the SIMD variant so
// the two backends produce identical rounding.
double ipow(double base, unsigned long long e) {
  double acc = 1.0;
  while (e != 0) {
    if (e & 1ull) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace

void hyp2f1_scalar(const SeriesSpec& s, std::span<const double> z, std::span<double> out) {
  const std::size_t n = z.size();
  if (s.terminate_after >= 0) {
    for (std::size_t i = 0; i < n; ++i) {
      double term = 1.0, sum = 1.0;
      for (int k = 0; k < s.terminate_after; ++k) {
        term *= series_coeff(s, k) * z[i];
        sum += term;
      }
      out[i] = sum;
    }
    return;
  }

  for (std::size_t i = 0; i < n; ++i) {
    const double zi = z[i];
    double term = 1.0, sum = 1.0;
    int k = 0;
    for (;;) {
      const double coeff = series_coeff(s, k);
      term *= coeff * zi;
      sum += term;
      ++k;
      // Converged once the step multiplier is contracting and the running
      // term dropped below the relative threshold.
      if (std::abs(coeff * zi) < 1.0 && std::abs(term) <= s.rel_tol * std::abs(sum)) break;
      if (k >= s.max_terms)
        throw std::runtime_error("hyp2f1: series did not converge within the term cap");
    }
    out[i] = sum;
  }
}

void halfpow_scalar(std::span<const double> x, long long twice_exp, std::span<double> out) {
  const bool negative = twice_exp < 0;
  const unsigned long long mag = static_cast<unsigned long long>(negative ? -twice_exp : twice_exp);
  const unsigned long long m = mag / 2;
  const bool has_root = (mag % 2) != 0;

  for (std::size_t i = 0; i < x.size(); ++i) {
    double p = ipow(x[i], m);
    if (has_root) p *= std::sqrt(x[i]);
    out[i] = negative ? 1.0 / p : p;
  }
}

}  // namespace branchkit::kernels::detail
