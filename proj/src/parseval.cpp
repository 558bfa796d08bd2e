#include "branchkit/parseval.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "branchkit/gamma.hpp"
#include "branchkit/hypergeom.hpp"
#include "branchkit/kernels.hpp"

namespace branchkit {

namespace {

constexpr int kGlOrder = 64;

struct GlRule {
  std::array<double, kGlOrder> node;
  std::array<double, kGlOrder> weight;
};

// 64-point Gauss-Legendre rule on [-1, 1] by Newton iteration on P_64.
const GlRule& gl_rule() {
  static const GlRule rule = [] {
    GlRule r;
    const int n = kGlOrder;
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double p1 = 0.0;
      for (int it = 0; it < 100; ++it) {
        p1 = 1.0;
        double p2 = 0.0;
        for (int j = 0; j < n; ++j) {
          const double p3 = p2;
          p2 = p1;
          p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1.0);
        }
        const double dp = n * (x * p1 - p2) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) {
          p1 = 1.0;
          p2 = 0.0;
          for (int j = 0; j < n; ++j) {
            const double p3 = p2;
            p2 = p1;
            p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1.0);
          }
          break;
        }
      }
      const double dp = n * (x * p1 - p2) / (x * x - 1.0);
      r.node[i] = -x;
      r.node[n - 1 - i] = x;
      r.weight[i] = r.weight[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

using BatchEval = std::function<void(std::span<const double>, std::span<double>)>;

double panel_sum(const BatchEval& eval, double a, double b) {
  const GlRule& r = gl_rule();
  std::array<double, kGlOrder> t, v;
  const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
  for (int i = 0; i < kGlOrder; ++i) t[i] = mid + hw * r.node[i];
  eval(t, v);
  double s = 0.0;
  for (int i = 0; i < kGlOrder; ++i) s += r.weight[i] * v[i];
  return hw * s;
}

// Panel-halving refinement until two successive composite estimates agree
// within tol relatively.
double integrate_batch(const BatchEval& eval, double a, double b, double tol, double graded) {
  double lead = 0.0;
  if (graded > 0.0 && a + graded < b) {
    lead = panel_sum(eval, a, a + graded);
    a += graded;
  }
  double previous = 0.0;
  for (int level = 0; level <= 10; ++level) {
    const int panels = 4 << level;
    double total = lead;
    const double w = (b - a) / panels;
    for (int k = 0; k < panels; ++k) total += panel_sum(eval, a + k * w, a + (k + 1) * w);
    if (level > 0 && std::abs(total - previous) <= tol * std::max(std::abs(total), 1e-300))
      return total;
    previous = total;
  }
  throw std::runtime_error("quadrature did not converge under panel refinement");
}

long long four_of(HalfInt l1, int s1, HalfInt l2, int s2, HalfInt lam, int s3) {
  return s1 * l1.twice() + s2 * l2.twice() + s3 * lam.twice() + 2;
}

double gamma_num(long long four_x) {
  GammaValue g = gamma_q4(four_x);
  if (g.is_pole()) throw std::domain_error("v_constant: numerator Gamma pole");
  return g.value;
}

// Integrand of the hyperbolic norm integral at the nodes, batched:
// phi^2 (cosh t)^{2 l1 + 1} (sinh t)^{2 l2 + 1}.
BatchEval hyperbolic_integrand(HalfInt lam1, HalfInt lam2, HalfInt lam) {
  const JacobiParams params{lam, lam1, lam2};
  const long long e_cosh = 2 * lam1.twice() + 2;  // halfpow twice_exp of 2l1+1
  const long long e_sinh = 2 * lam2.twice() + 2;
  return [params, e_cosh, e_sinh](std::span<const double> t, std::span<double> out) {
    const std::size_t n = t.size();
    std::vector<double> phi(n), ch(n), sh(n), wc(n), ws(n);
    jacobi_phi_batch(params, t, phi);
    for (std::size_t i = 0; i < n; ++i) {
      ch[i] = std::cosh(t[i]);
      sh[i] = std::sinh(t[i]);
    }
    kernels::halfpow_batch(ch, e_cosh, wc);
    kernels::halfpow_batch(sh, e_sinh, ws);
    for (std::size_t i = 0; i < n; ++i) out[i] = phi[i] * phi[i] * wc[i] * ws[i];
  };
}

BatchEval compact_integrand(HalfInt lam1, HalfInt lam2, HalfInt lam) {
  const JacobiParams params{lam, lam1, lam2};
  const long long e_cos = 2 * lam1.twice() + 2;
  const long long e_sin = 2 * lam2.twice() + 2;
  return [params, e_cos, e_sin](std::span<const double> theta, std::span<double> out) {
    const std::size_t n = theta.size();
    std::vector<double> z(n), f(n), c(n), s(n), wc(n), ws(n);
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = std::cos(theta[i]);
      s[i] = std::sin(theta[i]);
      z[i] = s[i] * s[i];
    }
    kernels::SeriesSpec spec{params.a(), params.b(), params.c(), -1, 1e-16, 10000};
    if (auto d = params.terminating_degree()) spec.terminate_after = *d;
    kernels::hyp2f1_batch(spec, z, f);
    kernels::halfpow_batch(c, e_cos, wc);
    kernels::halfpow_batch(s, e_sin, ws);
    for (std::size_t i = 0; i < n; ++i) out[i] = f[i] * f[i] * wc[i] * ws[i];
  };
}

}  // namespace

NormConstant v_constant(LambdaKind kind, HalfInt lam1, HalfInt lam2, HalfInt lam) {
  if (!lam.is_positive()) throw std::invalid_argument("v_constant requires lambda > 0");
  if (kind == LambdaKind::mp) {
    NormConstant v = v_constant(LambdaKind::pm, lam2, lam1, lam);
    return NormConstant{LambdaKind::mp, v.value};
  }

  GammaValue gc = gamma_exact(lam2 + HalfInt(1));
  if (gc.is_pole()) throw std::domain_error("v_constant: Gamma(lambda''+1) pole");
  const double front = gc.value * gc.value / (2.0 * lam.to_double());

  if (kind == LambdaKind::pm) {
    const double num = gamma_num(four_of(lam1, 1, lam2, -1, lam, 1)) *
                       gamma_num(four_of(lam1, 1, lam2, -1, lam, -1));
    const double rden = rgamma_q4(four_of(lam1, 1, lam2, 1, lam, 1)) *
                        rgamma_q4(four_of(lam1, 1, lam2, 1, lam, -1));
    return NormConstant{kind, front * num * rden};
  }
  const double num = gamma_num(four_of(lam1, -1, lam2, -1, lam, 1)) *
                     gamma_num(four_of(lam1, 1, lam2, -1, lam, 1));
  const double rden = rgamma_q4(four_of(lam1, -1, lam2, 1, lam, 1)) *
                      rgamma_q4(four_of(lam1, 1, lam2, 1, lam, 1));
  return NormConstant{kind, front * num * rden};
}

double norm_integral(LambdaKind kind, HalfInt lam1, HalfInt lam2, HalfInt lam, double tol) {
  if (tol < 1e-12) throw std::invalid_argument("norm_integral: tol must be >= 1e-12");
  if (!lam.is_positive()) throw std::invalid_argument("norm_integral requires lambda > 0");
  if (!lambda_kind_condition(kind, lam, lam1, lam2))
    throw std::invalid_argument("norm_integral: parameters outside the family, integral diverges");

  if (kind == LambdaKind::mp) return norm_integral(LambdaKind::pm, lam2, lam1, lam, tol);

  if (kind == LambdaKind::pp) {
    if (2 * lam1.twice() + 2 < 0 || 2 * lam2.twice() + 2 < 0)
      throw std::invalid_argument("norm_integral: weight exponents below -1");
    return integrate_batch(compact_integrand(lam1, lam2, lam), 0.0, M_PI_2, tol, 0.0);
  }

  // Hyperbolic family: truncate at T, doubling T until the empirical tail
  // estimate integrand(T)/(2 lambda) is negligible.
  if (2 * lam2.twice() + 2 < 0)
    throw std::invalid_argument("norm_integral: sinh exponent below -1");
  BatchEval f = hyperbolic_integrand(lam1, lam2, lam);
  auto integrand_at = [&f](double t) {
    double v = 0.0;
    f(std::span<const double>(&t, 1), std::span<double>(&v, 1));
    return v;
  };
  for (double T = 8.0; T <= 512.0; T *= 2.0) {
    const double estimate = integrate_batch(f, 0.0, T, tol, 1e-2);
    const double tail = integrand_at(T) / (2.0 * lam.to_double());
    if (tail <= tol * std::max(std::abs(estimate), 1e-300)) return estimate;
  }
  throw std::runtime_error("norm_integral: truncation point grew without the tail vanishing");
}

bool l2_membership(HalfInt lam, HalfInt lam1, HalfInt lam2) {
  if (!lam.is_positive()) throw std::invalid_argument("l2_membership requires lambda > 0");
  if (lam1.twice() <= -2 || lam2.twice() <= -2)
    throw std::invalid_argument("l2_membership requires lambda', lambda'' > -1");
  if (lam2.twice() > -2 && lam2.twice() < 2) return true;  // -1 < lambda'' < 1
  return lambda_kind_condition(LambdaKind::pm, lam, lam1, lam2);
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                          double graded) {
  BatchEval batch = [&f](std::span<const double> t, std::span<double> out) {
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = f(t[i]);
  };
  return integrate_batch(batch, a, b, tol, graded);
}

}  // namespace branchkit
