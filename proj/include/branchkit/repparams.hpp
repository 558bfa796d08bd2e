#pragma once

#include <vector>

#include <json.hpp>

#include "branchkit/halfint.hpp"

namespace branchkit {

enum class Sign : int { plus = +1, minus = -1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::plus : Sign::minus;
}
constexpr char sign_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }
Sign sign_parse(std::string_view text);

// Admissible spectral parameters A_+(p,q):
//   p >= 2, q >= 1 : { lambda in Z + (p+q)/2 : lambda > 0 }
//   p >= 2, q  = 0 : { lambda in Z + p/2     : lambda >= p/2 - 1 }
//   p  = 1, q  = 0 : { -1/2, 1/2 }
//   p <= 1 otherwise: empty.
// A_-(p,q) = A_+(q,p).
bool a_plus_contains(int p, int q, HalfInt lambda);
bool a_contains(int p, int q, Sign eps, HalfInt lambda);

// Members of A_eps(p,q) with lambda <= lambda_max, strictly increasing.
std::vector<HalfInt> a_enumerate(int p, int q, Sign eps, HalfInt lambda_max);

// rho = (p + q - 2)/2.
HalfInt rho(int p, int q);

// A short human-readable description of A_eps(p,q), for diagnostics.
std::string a_set_hint(int p, int q, Sign eps);

// Validated label (p, q, eps, lambda) of an irreducible unitary
// representation pi^{p,q}_{eps,lambda}.  The eps = '-' family is the
// eps = '+' family of the swapped signature (q, p); metadata operations
// normalize through that swap.
struct RepParam {
  int p = 0;
  int q = 0;
  Sign eps = Sign::plus;
  HalfInt lambda;

  RepParam(int p_, int q_, Sign eps_, HalfInt lambda_);

  [[nodiscard]] RepParam swapped() const { return RepParam(q, p, eps * Sign::minus, lambda); }
};

// b = lambda - p/2 + q/2 + 1, an integer for admissible parameters.
long long b_param(const RepParam& rep);
// delta = (-1)^b.
Sign delta_sign(const RepParam& rep);

// Harish-Chandra parameter (lambda, (p+q)/2 - 2, ..., (p+q)/2 - floor((p+q)/2)).
std::vector<HalfInt> infinitesimal_character(const RepParam& rep);

// K-type H^m(R^p) (x) H^n(R^q), identified by the two degrees.
struct KType {
  int m = 0;
  int n = 0;
  friend constexpr auto operator<=>(const KType&, const KType&) = default;
};

// Minimal K-type: (b, 0) when b >= 0, else the trivial type (0, 0).
KType minimal_ktype(const RepParam& rep);

// All K-types (m, n) with m, n <= m_max and m - n in 2N + b, in
// lexicographic order.  Degrees on a rank-one factor (p = 1 or q = 1) are
// capped at 1; for q = 0 the module is the single harmonic space H^b.
std::vector<KType> ktype_support(const RepParam& rep, int m_max);

// dim H^m(R^p) = C(m+p-1, p-1) - C(m+p-3, p-1).
long long dim_spherical_harmonics(int m, int p);

// Gelfand-Kirillov dimension p + q - 2 (rejects p + q < 2).
int gk_dimension(const RepParam& rep);

// Scalar by which -I acts: (-1)^(lambda - eps (p-q)/2 + 1).
Sign central_sign(const RepParam& rep);

void to_json(nlohmann::json& j, const RepParam& rep);
RepParam repparam_from_json(const nlohmann::json& j);

}  // namespace branchkit
