#include "branchkit/kernels.hpp"

#include <atomic>
#include <stdexcept>

#include "kernels_impl.hpp"

namespace branchkit::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(BRANCHKIT_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend detect_backend() noexcept { return cpu_has_avx2() ? Backend::avx2 : Backend::scalar; }

std::atomic<Backend> g_backend{detect_backend()};

}  // namespace

Backend active_backend() noexcept { return g_backend.load(std::memory_order_relaxed); }

bool backend_available(Backend b) noexcept {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
      return cpu_has_avx2();
  }
  return false;
}

void set_backend(Backend b) {
  if (!backend_available(b))
    throw std::invalid_argument("kernel backend not available on this machine");
  g_backend.store(b, std::memory_order_relaxed);
}

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

void hyp2f1_batch(const SeriesSpec& spec, std::span<const double> z, std::span<double> out) {
  if (z.size() != out.size()) throw std::invalid_argument("hyp2f1_batch: size mismatch");
#if defined(BRANCHKIT_HAVE_AVX2_TU)
  if (active_backend() == Backend::avx2) {
    detail::hyp2f1_avx2(spec, z, out);
    return;
  }
#endif
  detail::hyp2f1_scalar(spec, z, out);
}

void halfpow_batch(std::span<const double> x, long long twice_exp, std::span<double> out) {
  if (x.size() != out.size()) throw std::invalid_argument("halfpow_batch: size mismatch");
#if defined(BRANCHKIT_HAVE_AVX2_TU)
  if (active_backend() == Backend::avx2) {
    detail::halfpow_avx2(x, twice_exp, out);
    return;
  }
#endif
  detail::halfpow_scalar(x, twice_exp, out);
}

}  // namespace branchkit::kernels
