#pragma once

#include "branchkit/kernels.hpp"

namespace branchkit::kernels::detail {

void hyp2f1_scalar(const SeriesSpec& spec, std::span<const double> z, std::span<double> out);
void halfpow_scalar(std::span<const double> x, long long twice_exp, std::span<double> out);

#if defined(BRANCHKIT_HAVE_AVX2_TU)
void hyp2f1_avx2(const SeriesSpec& spec, std::span<const double> z, std::span<double> out);
void halfpow_avx2(std::span<const double> x, long long twice_exp, std::span<double> out);
#endif

// Shared coefficient step: ratio of consecutive Gauss-series terms at k,
//   term_{k+1} = coeff(k) * z * term_k.
inline double series_coeff(const SeriesSpec& s, int k) {
  const double kk = static_cast<double>(k);
  return (s.a + kk) * (s.b + kk) / ((s.c + kk) * (kk + 1.0));
}

}  // namespace branchkit::kernels::detail
