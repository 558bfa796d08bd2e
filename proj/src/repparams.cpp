#include "branchkit/repparams.hpp"

#include <stdexcept>

namespace branchkit {

Sign sign_parse(std::string_view text) {
  if (text == "+") return Sign::plus;
  if (text == "-") return Sign::minus;
  throw std::invalid_argument("sign must be '+' or '-'");
}

bool a_plus_contains(int p, int q, HalfInt lambda) {
  if (p < 0 || q < 0) throw std::invalid_argument("negative signature");
  if (p == 1 && q == 0) return lambda == half(-1) || lambda == half(1);
  if (p <= 1) return false;
  const bool parity_ok = ((lambda.twice() - (p + q)) % 2) == 0;
  if (!parity_ok) return false;
  if (q >= 1) return lambda.is_positive();
  return lambda.twice() >= p - 2;  // lambda >= p/2 - 1
}

bool a_contains(int p, int q, Sign eps, HalfInt lambda) {
  return eps == Sign::plus ? a_plus_contains(p, q, lambda) : a_plus_contains(q, p, lambda);
}

std::vector<HalfInt> a_enumerate(int p, int q, Sign eps, HalfInt lambda_max) {
  if (lambda_max < HalfInt(0)) throw std::invalid_argument("a_enumerate: lambda_max < 0");
  if (eps == Sign::minus) return a_enumerate(q, p, Sign::plus, lambda_max);

  std::vector<HalfInt> out;
  if (p == 1 && q == 0) {
    for (HalfInt v : {half(-1), half(1)})
      if (v <= lambda_max) out.push_back(v);
    return out;
  }
  if (p <= 1) return out;

  HalfInt start = (q >= 1) ? ((p + q) % 2 == 0 ? HalfInt(1) : half(1))
                           : HalfInt::from_twice(p - 2);
  for (HalfInt v = start; v <= lambda_max; v += 1) out.push_back(v);
  return out;
}

HalfInt rho(int p, int q) { return HalfInt::from_twice(p + q - 2); }

std::string a_set_hint(int p, int q, Sign eps) {
  if (eps == Sign::minus) return a_set_hint(q, p, Sign::plus) + " (after the (p,q) swap)";
  std::string base = "A_+(" + std::to_string(p) + "," + std::to_string(q) + ") = ";
  if (p == 1 && q == 0) return base + "{-1/2, 1/2}";
  if (p <= 1) return base + "{} (empty)";
  if (q >= 1)
    return base + "{ lambda in Z" + ((p + q) % 2 ? "+1/2" : "") + " : lambda > 0 }";
  return base + "{ lambda in Z" + (p % 2 ? "+1/2" : "") +
         " : lambda >= " + HalfInt::from_twice(p - 2).str() + " }";
}

RepParam::RepParam(int p_, int q_, Sign eps_, HalfInt lambda_)
    : p(p_), q(q_), eps(eps_), lambda(lambda_) {
  if (p < 0 || q < 0) throw std::invalid_argument("RepParam: negative signature");
  if (!a_contains(p, q, eps, lambda))
    throw std::invalid_argument("RepParam: lambda = " + lambda.str() + " not admissible; " +
                                a_set_hint(p, q, eps));
}

namespace {

RepParam normalized(const RepParam& rep) {
  return rep.eps == Sign::plus ? rep : rep.swapped();
}

}  // namespace

long long b_param(const RepParam& rep) {
  if (rep.eps != Sign::plus) throw std::invalid_argument("b_param expects eps = '+'");
  const long long twice_b = rep.lambda.twice() - rep.p + rep.q + 2;
  return twice_b / 2;  // integral for admissible lambda
}

Sign delta_sign(const RepParam& rep) {
  return (b_param(rep) % 2 == 0) ? Sign::plus : Sign::minus;
}

std::vector<HalfInt> infinitesimal_character(const RepParam& rep) {
  if (rep.eps != Sign::plus) throw std::invalid_argument("infinitesimal_character expects eps = '+'");
  const int rank = (rep.p + rep.q) / 2;
  std::vector<HalfInt> out;
  out.reserve(static_cast<std::size_t>(rank));
  if (rank == 0) return out;
  out.push_back(rep.lambda);
  for (int k = 2; k <= rank; ++k) out.push_back(HalfInt::from_twice(rep.p + rep.q - 2 * k));
  return out;
}

KType minimal_ktype(const RepParam& rep) {
  const long long b = b_param(rep);
  if (b >= 0) return KType{static_cast<int>(b), 0};
  return KType{0, 0};
}

std::vector<KType> ktype_support(const RepParam& rep, int m_max) {
  if (rep.eps != Sign::plus) throw std::invalid_argument("ktype_support expects eps = '+'");
  if (m_max < 0) throw std::invalid_argument("ktype_support: m_max < 0");
  const long long b = b_param(rep);

  std::vector<KType> out;
  if (rep.q == 0) {
    // Finite-dimensional case: the single harmonic space of degree b.
    if (b >= 0 && b <= m_max) out.push_back(KType{static_cast<int>(b), 0});
    return out;
  }
  const int cap_m = (rep.p == 1) ? std::min(m_max, 1) : m_max;
  const int cap_n = (rep.q == 1) ? std::min(m_max, 1) : m_max;
  for (int m = 0; m <= cap_m; ++m)
    for (int n = 0; n <= cap_n; ++n) {
      const long long d = static_cast<long long>(m) - n;
      if (d >= b && (d - b) % 2 == 0) out.push_back(KType{m, n});
    }
  return out;  // loop order is already lexicographic
}

long long dim_spherical_harmonics(int m, int p) {
  if (p <= 0) throw std::invalid_argument("dim_spherical_harmonics: p must be >= 1");
  if (m < 0) throw std::invalid_argument("dim_spherical_harmonics: m must be >= 0");
  if (p == 1 && m >= 2) throw std::invalid_argument("dim_spherical_harmonics: p = 1 has degrees 0, 1 only");

  auto binom = [](long long k, long long r) -> long long {
    if (k < 0 || r < 0 || k < r) return 0;
    long long v = 1;
    for (long long i = 1; i <= r; ++i) v = v * (k - r + i) / i;
    return v;
  };
  return binom(m + p - 1, p - 1) - binom(m + p - 3, p - 1);
}

int gk_dimension(const RepParam& rep) {
  if (rep.p + rep.q < 2) throw std::invalid_argument("gk_dimension: p + q < 2 is degenerate");
  return rep.p + rep.q - 2;
}

Sign central_sign(const RepParam& rep) {
  const RepParam r = normalized(rep);
  // Exponent lambda - (p-q)/2 + 1, an integer for admissible lambda.
  const long long twice_e = r.lambda.twice() - (r.p - r.q) + 2;
  return (twice_e / 2) % 2 == 0 ? Sign::plus : Sign::minus;
}

void to_json(nlohmann::json& j, const RepParam& rep) {
  j = nlohmann::json{{"p", rep.p},
                     {"q", rep.q},
                     {"eps", std::string(1, sign_char(rep.eps))},
                     {"lambda", rep.lambda.str()}};
}

RepParam repparam_from_json(const nlohmann::json& j) {
  return RepParam(j.at("p").get<int>(), j.at("q").get<int>(),
                  sign_parse(j.at("eps").get<std::string>()),
                  HalfInt::parse(j.at("lambda").get<std::string>()));
}

}  // namespace branchkit
