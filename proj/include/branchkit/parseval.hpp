#pragma once

#include <functional>

#include "branchkit/branching.hpp"
#include "branchkit/halfint.hpp"

namespace branchkit {

// Closed-form norm constant of the holographic operator of the given
// family.  All Gamma factors are evaluated exactly on the half-integer
// grid; a pole in a denominator contributes an exact zero factor, a pole
// in a numerator throws std::domain_error.
struct NormConstant {
  LambdaKind kind = LambdaKind::pm;
  double value = 0.0;
};

//   V_pm = Gamma(l''+1)^2 G((l'-l''+l+1)/2) G((l'-l''-l+1)/2)
//          / (2l G((l'+l''+l+1)/2) G((l'+l''-l+1)/2))
//   V_pp = Gamma(l''+1)^2 G((-l'-l''+l+1)/2) G((l'-l''+l+1)/2)
//          / (2l G((-l'+l''+l+1)/2) G((l'+l''+l+1)/2))
//   V_mp = V_pm with (l', l'') swapped.
// Requires lam > 0.
NormConstant v_constant(LambdaKind kind, HalfInt lam1, HalfInt lam2, HalfInt lam);

// Weighted L2 norm of the Jacobi function, by adaptive composite
// Gauss-Legendre quadrature (64 nodes per panel, panel halving until two
// refinements agree within tol):
//   pm: int_0^inf |phi^{(l'',l')}_{il}(t)|^2 (cosh t)^{2l'+1} (sinh t)^{2l''+1} dt
//   pp: int_0^{pi/2} |phi^{(l'',l')}_{il}(i theta)|^2 (cos)^{2l'+1} (sin)^{2l''+1} dtheta
//   mp: the pm integral with (l', l'') swapped.
// The hyperbolic domain is truncated at T where the empirical tail bound
// integrand(T)/(2 lambda) falls below tol times the running estimate, and
// T is doubled until that holds.  Requires the family's membership
// condition (the integral diverges otherwise) and tol >= 1e-12.
double norm_integral(LambdaKind kind, HalfInt lam1, HalfInt lam2, HalfInt lam, double tol);

// u_inf^- lies in L2((0,inf), (cosh t)^{2l'+1} (sinh t)^{2l''+1} dt) iff
// -1 < lambda'' < 1 or lambda' - lambda'' - lambda - 1 in 2N.
// Requires lambda > 0, lambda' > -1, lambda'' > -1.
bool l2_membership(HalfInt lam, HalfInt lam1, HalfInt lam2);

// Adaptive composite Gauss-Legendre integration on [a, b] for a scalar
// integrand; deterministic summation order (ascending panel, ascending
// node).  graded > 0 splits off [a, a+graded] as a fixed first panel.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                          double graded = 0.0);

}  // namespace branchkit
