#if defined(BRANCHKIT_HAVE_AVX2_TU)

#include <immintrin.h>

#include <cmath>
#include <stdexcept>

#include "kernels_impl.hpp"

namespace branchkit::kernels::detail {

namespace {

constexpr std::size_t kLanes = 4;

inline __m256d abs_pd(__m256d v) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffll));
  return _mm256_and_pd(v, mask);
}

// Deliberately mul+add, no FMA: keeps per-lane arithmetic identical to the
// scalar reference.
inline void series_block(const SeriesSpec& s, const double* z, double* out, double zmax) {
  const __m256d vz = _mm256_loadu_pd(z);
  __m256d vterm = _mm256_set1_pd(1.0);
  __m256d vsum = _mm256_set1_pd(1.0);

  if (s.terminate_after >= 0) {
    for (int k = 0; k < s.terminate_after; ++k) {
      const __m256d step = _mm256_mul_pd(_mm256_set1_pd(series_coeff(s, k)), vz);
      vterm = _mm256_mul_pd(vterm, step);
      vsum = _mm256_add_pd(vsum, vterm);
    }
    _mm256_storeu_pd(out, vsum);
    return;
  }

  const __m256d vtol = _mm256_set1_pd(s.rel_tol);
  int k = 0;
  for (;;) {
    const double coeff = series_coeff(s, k);
    const __m256d step = _mm256_mul_pd(_mm256_set1_pd(coeff), vz);
    vterm = _mm256_mul_pd(vterm, step);
    vsum = _mm256_add_pd(vsum, vterm);
    ++k;
    if (std::abs(coeff) * zmax < 1.0) {
      const __m256d bound = _mm256_mul_pd(vtol, abs_pd(vsum));
      const __m256d done = _mm256_cmp_pd(abs_pd(vterm), bound, _CMP_LE_OQ);
      if (_mm256_movemask_pd(done) == 0xF) break;
    }
    if (k >= s.max_terms)
      throw std::runtime_error("hyp2f1: series did not converge within the term cap");
  }
  _mm256_storeu_pd(out, vsum);
}

inline __m256d ipow_pd(__m256d base, unsigned long long e) {
  __m256d acc = _mm256_set1_pd(1.0);
  while (e != 0) {
    if (e & 1ull) acc = _mm256_mul_pd(acc, base);
    base = _mm256_mul_pd(base, base);
    e >>= 1;
  }
  return acc;
}

}  // namespace

void hyp2f1_avx2(const SeriesSpec& s, std::span<const double> z, std::span<double> out) {
  const std::size_t n = z.size();
  double zmax = 0.0;
  for (std::size_t i = 0; i < n; ++i) zmax = std::max(zmax, std::abs(z[i]));

  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) series_block(s, z.data() + i, out.data() + i, zmax);
  if (i < n) hyp2f1_scalar(s, z.subspan(i), out.subspan(i));
}

void halfpow_avx2(std::span<const double> x, long long twice_exp, std::span<double> out) {
  const bool negative = twice_exp < 0;
  const unsigned long long mag = static_cast<unsigned long long>(negative ? -twice_exp : twice_exp);
  const unsigned long long m = mag / 2;
  const bool has_root = (mag % 2) != 0;

  const std::size_t n = x.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d vx = _mm256_loadu_pd(x.data() + i);
    __m256d p = ipow_pd(vx, m);
    if (has_root) p = _mm256_mul_pd(p, _mm256_sqrt_pd(vx));
    if (negative) p = _mm256_div_pd(_mm256_set1_pd(1.0), p);
    _mm256_storeu_pd(out.data() + i, p);
  }
  if (i < n) halfpow_scalar(x.subspan(i), twice_exp, out.subspan(i));
}

}  // namespace branchkit::kernels::detail

#endif  // BRANCHKIT_HAVE_AVX2_TU
