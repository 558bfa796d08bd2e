#include "branchkit/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "branchkit/gamma.hpp"
#include "branchkit/kernels.hpp"

namespace branchkit {

namespace {

// Path-selection thresholds on sinh^2 t resp. tanh^2 t.
constexpr double kDirectMax = 0.81;
constexpr double kPfaffMax = 0.96;

bool nonpositive_int(double x) { return x <= 0.0 && x == std::floor(x); }

std::optional<int> term_degree(double a, double b) {
  std::optional<int> n;
  if (nonpositive_int(a)) n = static_cast<int>(-a);
  if (nonpositive_int(b)) {
    int nb = static_cast<int>(-b);
    if (!n || nb < *n) n = nb;
  }
  return n;
}

double sum_series(double a, double b, double c, double z, std::optional<int> degree) {
  kernels::SeriesSpec spec;
  spec.a = a;
  spec.b = b;
  spec.c = c;
  if (degree) {
    // (c)_k must stay nonzero through the terminating sum.
    if (nonpositive_int(c) && -c < *degree)
      throw std::domain_error("hyp2f1: c is a non-positive integer inside the sum");
    spec.terminate_after = *degree;
  } else {
    if (nonpositive_int(c)) throw std::domain_error("hyp2f1: c is a non-positive integer");
    if (std::abs(z) >= 1.0)
      throw std::domain_error("hyp2f1: series diverges for |z| >= 1");
  }
  double out = 0.0;
  kernels::hyp2f1_batch(spec, std::span<const double>(&z, 1), std::span<double>(&out, 1));
  return out;
}

double quarter(long long four_x) { return 0.25 * static_cast<double>(four_x); }

}  // namespace

std::optional<int> JacobiParams::terminating_degree() const noexcept {
  std::optional<int> n;
  if (four_a() <= 0 && four_a() % 4 == 0) n = static_cast<int>(-four_a() / 4);
  if (four_b() <= 0 && four_b() % 4 == 0) {
    int nb = static_cast<int>(-four_b() / 4);
    if (!n || nb < *n) n = nb;
  }
  return n;
}

double hyp2f1_series(double a, double b, double c, double z) {
  return sum_series(a, b, c, z, term_degree(a, b));
}

double hyp2f1_series(HalfInt a, HalfInt b, HalfInt c, double z) {
  return hyp2f1_series(a.to_double(), b.to_double(), c.to_double(), z);
}

namespace hyp_detail {

double phi_direct(const JacobiParams& p, double t) {
  const double sh = std::sinh(t);
  return sum_series(p.a(), p.b(), p.c(), -sh * sh, p.terminating_degree());
}

double phi_pfaff(const JacobiParams& p, double t) {
  // 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)); here 1-z = cosh^2 t
  // and z/(z-1) = tanh^2 t, so the transformed series converges for all t.
  const double ch = std::cosh(t);
  const double th = std::tanh(t);
  const double a = p.a();
  const double cb = quarter(2 * p.lam2.twice() + 4 - p.four_b());  // c - b
  const double f = sum_series(a, cb, p.c(), th * th, term_degree(a, cb));
  return std::pow(ch, -2.0 * a) * f;
}

double g_inf_minus_series(const JacobiParams& p, double z) {
  const double b = p.b();
  const double bc1 = quarter(p.four_b() - 2 * p.lam2.twice() - 4) + 1.0;  // b - c + 1
  const double cpar = 1.0 + p.lam.to_double();
  const double f = sum_series(b, bc1, cpar, 1.0 / z, term_degree(b, bc1));
  return std::pow(-z, -b) * f;
}

double g_inf_plus_series(const JacobiParams& p, double z) {
  const double a = p.a();
  const double ac1 = quarter(p.four_a() - 2 * p.lam2.twice() - 4) + 1.0;  // a - c + 1
  const double cpar = 1.0 - p.lam.to_double();
  const double f = sum_series(a, ac1, cpar, 1.0 / z, term_degree(a, ac1));
  return std::pow(-z, -a) * f;
}

double g_inf_minus_continued(const JacobiParams& p, double z) {
  // Pfaff transform of the defining 1/z series:
  //   g_inf^-(z) = (1-z)^{-b} 2F1(b, c-a; 1+lambda; 1/(1-z)),
  // convergent for every real z < 0.
  const double b = p.b();
  const double ca = quarter(2 * p.lam2.twice() + 4 - p.four_a());  // c - a
  const double cpar = 1.0 + p.lam.to_double();
  const double f = sum_series(b, ca, cpar, 1.0 / (1.0 - z), term_degree(b, ca));
  return std::pow(1.0 - z, -b) * f;
}

double g2_real(const JacobiParams& p, double z) {
  // Real convention for the second solution at z=0:
  //   g2(z) = |z|^{-lambda''} 2F1((l'-l''-l+1)/2, (l'-l''+l+1)/2; 1-l''; z),
  // i.e. the principal-branch z^{-lambda''} with its phase stripped.
  const double alpha = quarter(p.four_a() - 2 * p.lam2.twice());  // a - lambda''
  const double beta = quarter(p.four_b() - 2 * p.lam2.twice());   // b - lambda''
  const double cpar = 1.0 - p.lam2.to_double();
  double f;
  if (std::abs(z) <= kDirectMax) {
    f = sum_series(alpha, beta, cpar, z, term_degree(alpha, beta));
  } else {
    const double gb = cpar - beta;
    const double ff = sum_series(alpha, gb, cpar, z / (z - 1.0), term_degree(alpha, gb));
    f = std::pow(1.0 - z, -alpha) * ff;
  }
  return std::pow(std::abs(z), -p.lam2.to_double()) * f;
}

double phi_cfunction(const JacobiParams& p, double t) {
  // Two-sided expansion in the basis at z = infinity,
  //   phi = A+ g_inf^+ + A- g_inf^-,
  // with Gamma-quotient coefficients; valid for non-integral lambda.
  const HalfInt c = p.c_halfint();
  const double gc = gamma_or_throw(c);
  const double a_plus = gc * gamma_or_throw(p.lam) * rgamma_q4(p.four_b()) *
                        rgamma_q4(p.lam2.twice() - p.lam1.twice() + p.lam.twice() + 2);
  const double a_minus = gc * gamma_or_throw(-p.lam) * rgamma_q4(p.four_a()) *
                         rgamma_q4(p.lam2.twice() - p.lam1.twice() - p.lam.twice() + 2);
  const double sh = std::sinh(t);
  const double z = -sh * sh;
  double value = 0.0;
  if (a_plus != 0.0) value += a_plus * g_inf_plus_series(p, z);
  if (a_minus != 0.0) value += a_minus * g_inf_minus_series(p, z);
  return value;
}

}  // namespace hyp_detail

double jacobi_phi(const JacobiParams& p, double t) {
  if (p.c_is_pole()) throw std::domain_error("jacobi_phi: lambda'' in {-1,-2,...}");
  const double sh = std::sinh(t);
  const double sh2 = sh * sh;
  if (p.terminating_degree()) return hyp_detail::phi_direct(p, t);
  if (sh2 <= kDirectMax) return hyp_detail::phi_direct(p, t);
  const double th = std::tanh(t);
  if (th * th <= kPfaffMax) return hyp_detail::phi_pfaff(p, t);
  if (!p.lam.is_integer()) return hyp_detail::phi_cfunction(p, t);
  // Integral lambda in the deep tail: when the g2 coefficient vanishes
  // exactly, u1 is proportional to g_inf^- and the constant is 1/a.
  if (p.lam2.is_half_odd() && p.lam.is_positive()) {
    if (kummer_b(p) == 0.0) {
      const double a_coef = kummer_a(p);
      if (a_coef != 0.0) return hyp_detail::g_inf_minus_continued(p, -sh2) / a_coef;
    }
  }
  return hyp_detail::phi_pfaff(p, t);
}

double jacobi_phi_compact(const JacobiParams& p, double theta) {
  if (p.c_is_pole()) throw std::domain_error("jacobi_phi_compact: lambda'' in {-1,-2,...}");
  if (theta < 0.0 || theta >= 1.5707963267948966)
    throw std::domain_error("jacobi_phi_compact: theta outside [0, pi/2)");
  const double s = std::sin(theta);
  const double z = s * s;
  const auto degree = p.terminating_degree();
  if (degree || z <= 0.99) return sum_series(p.a(), p.b(), p.c(), z, degree);

  // z -> 1-z connection; c-a-b = -lambda' must not be an integer.
  if (p.lam1.is_integer())
    throw std::domain_error("jacobi_phi_compact: non-terminating with integral lambda'");
  const double a = p.a(), b = p.b();
  const HalfInt cab = -p.lam1;  // c - a - b
  const double gc = gamma_or_throw(p.c_halfint());
  const double coef1 = gc * gamma_or_throw(cab) *
                       rgamma_q4(p.lam2.twice() - p.lam1.twice() + p.lam.twice() + 2) *
                       rgamma_q4(p.lam2.twice() - p.lam1.twice() - p.lam.twice() + 2);
  const double coef2 =
      gc * gamma_or_throw(p.lam1) * rgamma_q4(p.four_a()) * rgamma_q4(p.four_b());
  const double w = 1.0 - z;  // = cos^2 theta
  const double ca = quarter(2 * p.lam2.twice() + 4 - p.four_a());
  const double cb = quarter(2 * p.lam2.twice() + 4 - p.four_b());
  const double f1 = sum_series(a, b, p.lam1.to_double() + 1.0, w, term_degree(a, b));
  const double f2 = sum_series(ca, cb, 1.0 - p.lam1.to_double(), w, term_degree(ca, cb));
  return coef1 * f1 + coef2 * std::pow(w, cab.to_double()) * f2;
}

void jacobi_phi_batch(const JacobiParams& p, std::span<const double> t, std::span<double> out) {
  if (t.size() != out.size()) throw std::invalid_argument("jacobi_phi_batch: size mismatch");
  if (p.c_is_pole()) throw std::domain_error("jacobi_phi_batch: lambda'' in {-1,-2,...}");
  const std::size_t n = t.size();
  const auto degree = p.terminating_degree();

  std::vector<std::size_t> direct_idx, pfaff_idx, tail_idx;
  direct_idx.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double sh = std::sinh(t[i]);
    if (degree || sh * sh <= kDirectMax) {
      direct_idx.push_back(i);
    } else {
      const double th = std::tanh(t[i]);
      (th * th <= kPfaffMax ? pfaff_idx : tail_idx).push_back(i);
    }
  }

  if (!direct_idx.empty()) {
    std::vector<double> z(direct_idx.size()), val(direct_idx.size());
    for (std::size_t j = 0; j < direct_idx.size(); ++j) {
      const double sh = std::sinh(t[direct_idx[j]]);
      z[j] = -sh * sh;
    }
    kernels::SeriesSpec spec{p.a(), p.b(), p.c(), degree ? *degree : -1, 1e-16, 10000};
    kernels::hyp2f1_batch(spec, z, val);
    for (std::size_t j = 0; j < direct_idx.size(); ++j) out[direct_idx[j]] = val[j];
  }

  if (!pfaff_idx.empty()) {
    const std::size_t m = pfaff_idx.size();
    std::vector<double> x(m), ch(m), w(m), val(m);
    for (std::size_t j = 0; j < m; ++j) {
      const double tj = t[pfaff_idx[j]];
      const double th = std::tanh(tj);
      x[j] = th * th;
      ch[j] = std::cosh(tj);
    }
    const double a = p.a();
    const double cb = quarter(2 * p.lam2.twice() + 4 - p.four_b());
    kernels::SeriesSpec spec{a, cb, p.c(), -1, 1e-16, 10000};
    if (auto d = term_degree(a, cb)) spec.terminate_after = *d;
    kernels::hyp2f1_batch(spec, x, val);
    // (cosh t)^{-2a} with -2a = -four_a()/2 on the half-integer grid.
    kernels::halfpow_batch(ch, -p.four_a(), w);
    for (std::size_t j = 0; j < m; ++j) out[pfaff_idx[j]] = w[j] * val[j];
  }

  for (std::size_t i : tail_idx) out[i] = jacobi_phi(p, t[i]);
}

double basis_eval(SolutionBasis which, const JacobiParams& p, double t) {
  switch (which) {
    case SolutionBasis::u1_at_0:
      return jacobi_phi(p, t);
    case SolutionBasis::u2_at_0: {
      if (p.lam2.is_integer())
        throw std::domain_error("u2 basis undefined for integral lambda'' (logarithmic case)");
      if (t <= 0.0) throw std::domain_error("u2 basis requires t > 0");
      const double sh = std::sinh(t);
      return hyp_detail::g2_real(p, -sh * sh);
    }
    case SolutionBasis::u_inf_plus:
    case SolutionBasis::u_inf_minus: {
      if (p.lam.is_nonpositive_integer())
        throw std::domain_error("u_inf bases undefined for lambda in {0,-1,-2,...}");
      if (t <= 0.0) throw std::domain_error("u_inf bases require t > 0");
      const double sh = std::sinh(t);
      const double z = -sh * sh;
      if (sh * sh <= 1.0)
        throw std::domain_error("u_inf bases evaluated through the 1/z series need sinh^2 t > 1");
      if (which == SolutionBasis::u_inf_minus) return hyp_detail::g_inf_minus_series(p, z);
      if (p.lam.is_integer())
        throw std::domain_error("u_inf_plus undefined for integral lambda (logarithmic case)");
      return hyp_detail::g_inf_plus_series(p, z);
    }
  }
  throw std::logic_error("basis_eval: bad basis");
}

double kummer_b(const JacobiParams& p) {
  GammaValue g2 = gamma_exact(p.lam2);
  GammaValue g1l = gamma_exact(p.lam + HalfInt(1));
  if (g2.is_pole() || g1l.is_pole())
    throw std::domain_error("kummer_b: numerator Gamma pole");
  const long long t = p.lam.twice(), t1 = p.lam1.twice(), t2 = p.lam2.twice();
  return g2.value * g1l.value * rgamma_q4(-t1 + t2 + t + 2) * rgamma_q4(t1 + t2 + t + 2);
}

double kummer_a(const JacobiParams& p) {
  if (p.lam2.is_integer())
    throw std::domain_error("kummer_a undefined for integral lambda'' (logarithmic case)");
  return kummer_b(JacobiParams{p.lam, p.lam1, -p.lam2});
}

double connection_residual(const JacobiParams& p, std::span<const double> z_grid) {
  if (p.lam2.is_integer())
    throw std::domain_error("connection_residual requires non-integral lambda''");
  if (p.lam.is_nonpositive_integer())
    throw std::domain_error("connection_residual requires lambda not in {0,-1,-2,...}");
  const double acoef = kummer_a(p);
  const double bcoef = kummer_b(p);
  double worst = 0.0;
  for (double z : z_grid) {
    if (!(z < 0.0) || !(z > -1.0))
      throw std::domain_error("connection_residual: grid must lie in (-1, 0)");
    const double lhs = hyp_detail::g_inf_minus_continued(p, z);
    const double t = std::asinh(std::sqrt(-z));
    const double g1 = jacobi_phi(p, t);
    // e^{i pi l''} z^{-l''} = |z|^{-l''} for z < 0 on the principal branch,
    // which is exactly the g2_real convention; both sides are real.
    const double rhs = acoef * g1 + bcoef * hyp_detail::g2_real(p, z);
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1.0));
  }
  return worst;
}

namespace {

constexpr double kFdStep = 1e-3;

struct Stencil {
  double d1, d2;  // first and second derivative estimates
};

template <typename F>
Stencil five_point(const F& f, double x) {
  const double h = kFdStep;
  const double fm2 = f(x - 2 * h), fm1 = f(x - h), f0 = f(x), fp1 = f(x + h), fp2 = f(x + 2 * h);
  Stencil s;
  s.d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h);
  s.d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h);
  return s;
}

}  // namespace

double ode_residual(const JacobiParams& p, SolutionBasis which, std::span<const double> t_grid) {
  const double w1 = 2.0 * p.lam1.to_double() + 1.0;
  const double w2 = 2.0 * p.lam2.to_double() + 1.0;
  const double sum1 = p.lam1.to_double() + p.lam2.to_double() + 1.0;
  const double ev = sum1 * sum1 - p.lam.to_double() * p.lam.to_double();
  auto f = [&](double t) { return basis_eval(which, p, t); };

  double worst = 0.0, scale = 0.0;
  for (double t : t_grid) {
    const Stencil s = five_point(f, t);
    const double u = f(t);
    const double res = s.d2 + (w1 * std::tanh(t) + w2 / std::tanh(t)) * s.d1 + ev * u;
    worst = std::max(worst, std::abs(res));
    scale = std::max(scale, std::abs(u));
  }
  return worst / std::max(scale, 1.0);
}

double ode_residual_compact(const JacobiParams& p, std::span<const double> theta_grid) {
  const double a = p.a(), b = p.b(), c = p.c();
  auto g = [&](double z) { return sum_series(a, b, c, z, p.terminating_degree()); };

  double worst = 0.0, scale = 0.0;
  for (double theta : theta_grid) {
    const double s = std::sin(theta);
    const double z = s * s;
    if (z < 2 * kFdStep || z > 1.0 - 2 * kFdStep)
      throw std::domain_error("ode_residual_compact: grid too close to z = 0 or 1");
    const Stencil st = five_point(g, z);
    const double u = g(z);
    const double res = z * (1.0 - z) * st.d2 + (c - (a + b + 1.0) * z) * st.d1 - a * b * u;
    worst = std::max(worst, std::abs(res));
    scale = std::max(scale, std::abs(u));
  }
  return worst / std::max(scale, 1.0);
}

double s_transform(HalfInt lam1, HalfInt lam2, HalfInt rho1, HalfInt rho2, double phi_value,
                   double t) {
  if (t <= 0.0) throw std::domain_error("s_transform requires t > 0");
  const double e1 = (lam1 - rho1).to_double();
  const double e2 = (lam2 - rho2).to_double();
  return std::pow(std::cosh(t), e1) * std::pow(std::sinh(t), e2) * phi_value;
}

}  // namespace branchkit
