#pragma once

#include <optional>
#include <span>

#include "branchkit/halfint.hpp"

namespace branchkit {

// Parameter triple (lambda, lambda', lambda'') of the radial hypergeometric
// problem.  In the variable z = -sinh^2 t the radial equation becomes the
// Gauss equation with
//   a = (lambda' + lambda'' + 1 - lambda)/2,
//   b = (lambda' + lambda'' + 1 + lambda)/2,
//   c = lambda'' + 1.
// For branching-admissible triples (lambda + lambda' + lambda'' integral)
// a and b are half-integers; the evaluators below also accept the general
// quarter-integer case.
struct JacobiParams {
  HalfInt lam;   // lambda
  HalfInt lam1;  // lambda'
  HalfInt lam2;  // lambda''

  // 4a, 4b as exact integers.
  [[nodiscard]] long long four_a() const noexcept {
    return lam1.twice() + lam2.twice() + 2 - lam.twice();
  }
  [[nodiscard]] long long four_b() const noexcept {
    return lam1.twice() + lam2.twice() + 2 + lam.twice();
  }
  [[nodiscard]] double a() const noexcept { return 0.25 * static_cast<double>(four_a()); }
  [[nodiscard]] double b() const noexcept { return 0.25 * static_cast<double>(four_b()); }
  [[nodiscard]] HalfInt c_halfint() const noexcept { return lam2 + HalfInt(1); }
  [[nodiscard]] double c() const noexcept { return c_halfint().to_double(); }

  // a and b are on the half-integer grid iff the triple has compatible parity.
  [[nodiscard]] bool parity_compatible() const noexcept { return four_a() % 2 == 0; }

  // Degree of the terminating series when a or b is a non-positive integer.
  [[nodiscard]] std::optional<int> terminating_degree() const noexcept;

  // c is a pole of Gamma (lambda'' in {-1,-2,...}); the z=0 bases collapse.
  [[nodiscard]] bool c_is_pole() const noexcept {
    return lam2.is_integer() && lam2.twice() <= -2;
  }
};

// Gauss hypergeometric series sum_k (a)_k (b)_k / ((c)_k k!) z^k, summed to
// a 1e-16 relative term threshold with a 10,000-term cap.  Terminating
// series (a or b a non-positive integer) are summed exactly for any z.
// Throws std::domain_error outside |z| < 1 in the non-terminating case and
// at non-positive-integer c not masked by termination.
double hyp2f1_series(double a, double b, double c, double z);
double hyp2f1_series(HalfInt a, HalfInt b, HalfInt c, double z);

// The Jacobi function phi^{(lambda'', lambda')}_{i lambda}(t): the even
// solution, normalized to 1 at t = 0, of
//   u'' + ((2 lambda'+1) tanh t + (2 lambda''+1) coth t) u'
//      + ((lambda'+lambda''+1)^2 - lambda^2) u = 0.
// Evaluation path: terminating series when a (or b) is a non-positive
// integer; the defining series in z = -sinh^2 t for sinh^2 t <= 0.81;
// the z/(z-1) Pfaff transform (argument tanh^2 t) up to tanh^2 t <= 0.96;
// beyond that the two-term expansion in the z = infinity basis when
// lambda is not an integer, else the Kummer shortcut u1 = g_inf^- / a
// when the g2-coefficient vanishes exactly.  Seam agreement between
// neighbouring paths is covered by tests.
double jacobi_phi(const JacobiParams& p, double t);

// phi at imaginary argument i*theta, i.e. 2F1(a, b; c; sin^2 theta),
// real-valued on 0 <= theta < pi/2.  Terminating parameters evaluate for
// all theta; otherwise the defining series is used for sin^2 theta <= 0.99
// and the z -> 1-z connection beyond (requires lambda' not an integer).
double jacobi_phi_compact(const JacobiParams& p, double theta);

// Batched jacobi_phi over a grid; groups points by evaluation path and
// feeds each group to the batch kernels.
void jacobi_phi_batch(const JacobiParams& p, std::span<const double> t, std::span<double> out);

// Solution bases of the radial equation.
//   u1_at_0      : value 1 at t = 0 (equals jacobi_phi);
//   u2_at_0      : second solution at t = 0 with u2 ~ (sinh t)^{-2 lambda''},
//                  real convention (sinh t)^{-2 lambda''} 2F1(...; 1-lambda''; z),
//                  defined for lambda'' not an integer;
//   u_inf_plus   : ~ (sinh t)^{-(lambda'+lambda''+1-lambda)} as t -> infinity;
//   u_inf_minus  : ~ (sinh t)^{-(lambda'+lambda''+1+lambda)} as t -> infinity.
// The u_inf bases require lambda not in {0,-1,-2,...} (u_inf_plus further
// excludes positive integer lambda, where the basis picks up a logarithm)
// and are evaluated through their 1/z series, valid for sinh^2 t > 1.
enum class SolutionBasis { u1_at_0, u2_at_0, u_inf_plus, u_inf_minus };

double basis_eval(SolutionBasis which, const JacobiParams& p, double t);

// Connection coefficients in
//   g_inf^-(z) = a(l',l'',l) g1(z) + b(l',l'',l) e^{i pi lambda''} g2(z).
// kummer_b = Gamma(lambda'') Gamma(1+lambda)
//            / (Gamma((-l'+l''+l+1)/2) Gamma((l'+l''+l+1)/2)),
// exactly 0.0 when a denominator argument is a non-positive integer;
// throws std::domain_error at numerator poles.  kummer_a is kummer_b with
// lambda'' negated and requires lambda'' not an integer.
double kummer_b(const JacobiParams& p);
double kummer_a(const JacobiParams& p);

// Max relative defect of the connection identity over a grid of z in
// (-1, 0).  Both sides are evaluated in real arithmetic: on the principal
// branch approached from above, e^{i pi lambda''} z^{-lambda''} equals
// |z|^{-lambda''} for z < 0, so the g2 term is real as written.
// g_inf^- on |z| < 1 is reached by the Pfaff-transformed form
//   (1-z)^{-b} 2F1(b, c-a; 1+lambda; 1/(1-z)),
// which converges for every z < 0.
double connection_residual(const JacobiParams& p, std::span<const double> z_grid);

// Max residual of the radial ODE over the grid, centered 5-point stencils
// with step h = 1e-3, normalized by max(sup |u|, 1).
double ode_residual(const JacobiParams& p, SolutionBasis which, std::span<const double> t_grid);

// Same check for the compact picture: the Gauss equation in z = sin^2 theta
// applied to 2F1(a, b; c; z), finite differences in z.
double ode_residual_compact(const JacobiParams& p, std::span<const double> theta_grid);

// Weight transform (cosh t)^{lambda'-rho'} (sinh t)^{lambda''-rho''} * value.
double s_transform(HalfInt lam1, HalfInt lam2, HalfInt rho1, HalfInt rho2, double phi_value,
                   double t);

namespace hyp_detail {
// Individual evaluation paths, exposed for the seam-continuity tests.
double phi_direct(const JacobiParams& p, double t);     // sinh^2 t < 1
double phi_pfaff(const JacobiParams& p, double t);      // any t, argument tanh^2 t
double phi_cfunction(const JacobiParams& p, double t);  // sinh^2 t > 1, lambda not integral
double g_inf_minus_series(const JacobiParams& p, double z);     // |z| > 1
double g_inf_minus_continued(const JacobiParams& p, double z);  // z < 0
double g_inf_plus_series(const JacobiParams& p, double z);      // |z| > 1
double g2_real(const JacobiParams& p, double z);                // z < 0, lambda'' not integral
}  // namespace hyp_detail

}  // namespace branchkit
