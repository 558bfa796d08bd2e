#pragma once

#include <span>
#include <string_view>

namespace branchkit::kernels {

// Batched inner loops behind the special-function and quadrature code.
// Each kernel has a scalar reference implementation and a SIMD variant;
// the backend is picked at runtime from CPU features and can be forced,
// which is how the equivalence tests drive both paths in one process.
enum class Backend { scalar, avx2 };

struct SeriesSpec {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  // >= 0: sum exactly terminate_after + 1 terms (terminating series);
  // < 0: run to rel_tol with the hard max_terms cap.
  int terminate_after = -1;
  double rel_tol = 1e-16;
  int max_terms = 10000;
};

// out[i] = sum_k (a)_k (b)_k / ((c)_k k!) * z[i]^k, the Gauss series.
// The coefficient recurrence is shared across lanes; only z varies.
// Throws std::runtime_error if a non-terminating batch fails to converge
// within max_terms.  Callers are responsible for |z| < 1 in that case.
void hyp2f1_batch(const SeriesSpec& spec, std::span<const double> z, std::span<double> out);

// out[i] = x[i]^(twice_exp / 2) for x[i] >= 0 (x[i] > 0 when twice_exp < 0).
// Half-integer exponents go through one sqrt plus binary exponentiation,
// so no vector exp/log is needed.
void halfpow_batch(std::span<const double> x, long long twice_exp, std::span<double> out);

Backend active_backend() noexcept;
bool backend_available(Backend b) noexcept;
// Throws std::invalid_argument if the backend is not available at runtime.
void set_backend(Backend b);
std::string_view backend_name(Backend b) noexcept;

}  // namespace branchkit::kernels
