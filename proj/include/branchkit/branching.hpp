#pragma once

#include <utility>
#include <vector>

#include <json.hpp>

#include "branchkit/repparams.hpp"

namespace branchkit {

// The three discrete families in the restriction of pi^{p,q}_{+,lambda} to
// O(p',q') x O(p'',q''), labelled by the sign pair (delta, eps):
//   mp = (-,+), pp = (+,+), pm = (+,-).
enum class LambdaKind { mp, pp, pm };

const char* lambda_kind_name(LambdaKind k) noexcept;  // "-+", "++", "+-"

// Subgroup signature (p', q', p'', q'').  Neither factor may be (0, 0).
struct SplitSignature {
  int p1 = 0, q1 = 0, p2 = 0, q2 = 0;

  SplitSignature(int p1_, int q1_, int p2_, int q2_);

  [[nodiscard]] int p() const noexcept { return p1 + p2; }
  [[nodiscard]] int q() const noexcept { return q1 + q2; }
};

// One discrete constituent pi^{p',q'}_{delta,lambda1} (x) pi^{p'',q''}_{eps,lambda2}.
struct Summand {
  Sign delta = Sign::plus;
  Sign eps = Sign::plus;
  HalfInt lambda1;
  HalfInt lambda2;

  friend constexpr auto operator<=>(const Summand&, const Summand&) = default;
};

// Enumeration budget.  The mp and pm families are infinite whenever they
// are nonempty, so a budget is mandatory: max_count caps the number of
// members and total_max caps lambda1 + lambda2.
struct Budget {
  int max_count = 0;
  HalfInt total_max;
};

struct SpectralClass {
  bool discretely_decomposable = false;
  bool finite_discrete = false;
  bool purely_continuous = false;
};

// The integrality condition of the family, without the A-set gates:
//   mp: lambda2 - lambda - lambda1 - 1 in 2N
//   pp: lambda - lambda1 - lambda2 - 1 in 2N
//   pm: lambda1 - lambda2 - lambda - 1 in 2N
bool lambda_kind_condition(LambdaKind kind, HalfInt lam, HalfInt l1, HalfInt l2) noexcept;

// Full membership test for (l1, l2) in Lambda_kind(lambda) for the split.
// Requires lambda in A_+(p, q) of the joined signature.
bool lambda_set_contains(LambdaKind kind, const SplitSignature& split, HalfInt lam, HalfInt l1,
                         HalfInt l2);

// All members with lambda1 + lambda2 <= total_max, at most max_count,
// ordered by increasing lambda1 + lambda2, ties by increasing lambda2.
// The pp family is finite and fully enumerated once total_max >= lambda.
std::vector<std::pair<HalfInt, HalfInt>> lambda_set_enumerate(LambdaKind kind,
                                                              const SplitSignature& split,
                                                              HalfInt lam, const Budget& budget);

// The discrete part of the restriction: concatenation of the three family
// enumerations (order mp, pp, pm), multiplicity-free.  eps = '-' inputs are
// normalized through the (p,q) swap and the results swapped back.
std::vector<Summand> branch_discrete(const RepParam& rep, const SplitSignature& split,
                                     const Budget& budget);

// 1 if the candidate lies in the discrete spectrum, 0 otherwise.
unsigned multiplicity(const RepParam& rep, const SplitSignature& split, const Summand& candidate);

// Spectral shape of the restriction, uniform over the discrete series of
// the joined space form:
//   purely_continuous        <=> (p',p'') = (1,1), (p',q') = (1,1) or (p'',q'') = (1,1)
//   finite_discrete          <=> p'p'' > 0, min(p'',q') <= 1 and min(p',q'') <= 1
//   discretely_decomposable  <=> p' = 0 or p'' = 0
// Requires the joined signature to satisfy p >= 2, q >= 1.
SpectralClass classify_split(const SplitSignature& split);

// Lambda_mp union Lambda_pm is infinite (independently of lambda) iff
// p'p'' = 0, min(p'',q') >= 2 or min(p',q'') >= 2.
bool lambda_union_infinite(const SplitSignature& split);

// Lambda_pm alone is nonempty (equivalently infinite) iff p'' = 0, or
// p' >= 2 and q'' >= 2.
bool lambda_pm_infinite(const SplitSignature& split);

void to_json(nlohmann::json& j, const Summand& s);
Summand summand_from_json(const nlohmann::json& j);
void to_json(nlohmann::json& j, const SpectralClass& c);

}  // namespace branchkit
