#include "branchkit/branching.hpp"

#include <algorithm>
#include <stdexcept>

namespace branchkit {

const char* lambda_kind_name(LambdaKind k) noexcept {
  switch (k) {
    case LambdaKind::mp:
      return "-+";
    case LambdaKind::pp:
      return "++";
    case LambdaKind::pm:
      return "+-";
  }
  return "?";
}

SplitSignature::SplitSignature(int p1_, int q1_, int p2_, int q2_)
    : p1(p1_), q1(q1_), p2(p2_), q2(q2_) {
  if (p1 < 0 || q1 < 0 || p2 < 0 || q2 < 0)
    throw std::invalid_argument("SplitSignature: negative entry");
  if ((p1 == 0 && q1 == 0) || (p2 == 0 && q2 == 0))
    throw std::invalid_argument("SplitSignature: factors must not be O(0,0)");
}

bool lambda_kind_condition(LambdaKind kind, HalfInt lam, HalfInt l1, HalfInt l2) noexcept {
  HalfInt d;
  switch (kind) {
    case LambdaKind::mp:
      d = l2 - lam - l1 - HalfInt(1);
      break;
    case LambdaKind::pp:
      d = lam - l1 - l2 - HalfInt(1);
      break;
    case LambdaKind::pm:
      d = l1 - l2 - lam - HalfInt(1);
      break;
  }
  return d.is_integer() && d.twice() >= 0 && (d.twice() / 2) % 2 == 0;  // d in 2N
}

namespace {

void require_admissible(const SplitSignature& split, HalfInt lam) {
  if (!a_plus_contains(split.p(), split.q(), lam))
    throw std::invalid_argument("lambda = " + lam.str() + " not admissible; " +
                                a_set_hint(split.p(), split.q(), Sign::plus));
}

Sign kind_delta(LambdaKind k) { return k == LambdaKind::mp ? Sign::minus : Sign::plus; }
Sign kind_eps(LambdaKind k) { return k == LambdaKind::pm ? Sign::minus : Sign::plus; }

}  // namespace

bool lambda_set_contains(LambdaKind kind, const SplitSignature& split, HalfInt lam, HalfInt l1,
                         HalfInt l2) {
  require_admissible(split, lam);
  if (!a_contains(split.p1, split.q1, kind_delta(kind), l1)) return false;
  if (!a_contains(split.p2, split.q2, kind_eps(kind), l2)) return false;
  return lambda_kind_condition(kind, lam, l1, l2);
}

std::vector<std::pair<HalfInt, HalfInt>> lambda_set_enumerate(LambdaKind kind,
                                                              const SplitSignature& split,
                                                              HalfInt lam, const Budget& budget) {
  require_admissible(split, lam);
  if (budget.max_count < 0) throw std::invalid_argument("budget.max_count < 0");

  std::vector<std::pair<HalfInt, HalfInt>> found;

  // Smallest value any admissible parameter can take is -1/2, which bounds
  // the search rectangles below.
  const HalfInt floor_param = half(-1);

  switch (kind) {
    case LambdaKind::pp: {
      // lambda1 = lambda - 1 - 2n - lambda2, n in N.
      const HalfInt l2_max = lam - HalfInt(1) - floor_param;
      for (HalfInt l2 : a_enumerate(split.p2, split.q2, Sign::plus,
                                    std::max(l2_max, HalfInt(0)))) {
        for (HalfInt l1 = lam - HalfInt(1) - l2; l1 >= floor_param; l1 -= 2) {
          if (l1 + l2 > budget.total_max) continue;
          if (a_plus_contains(split.p1, split.q1, l1)) found.emplace_back(l1, l2);
        }
      }
      break;
    }
    case LambdaKind::pm: {
      // lambda1 = lambda2 + lambda + 1 + 2n.
      const HalfInt l2_bound = HalfInt::from_twice(
          std::max<long long>(0, (budget.total_max - lam - HalfInt(1)).twice() / 2));
      for (HalfInt l2 : a_enumerate(split.p2, split.q2, Sign::minus, l2_bound)) {
        for (HalfInt l1 = l2 + lam + HalfInt(1); l1 + l2 <= budget.total_max; l1 += 2) {
          if (a_plus_contains(split.p1, split.q1, l1)) found.emplace_back(l1, l2);
        }
      }
      break;
    }
    case LambdaKind::mp: {
      // lambda2 = lambda1 + lambda + 1 + 2n.
      const HalfInt l1_bound = HalfInt::from_twice(
          std::max<long long>(0, (budget.total_max - lam - HalfInt(1)).twice() / 2));
      for (HalfInt l1 : a_enumerate(split.p1, split.q1, Sign::minus, l1_bound)) {
        for (HalfInt l2 = l1 + lam + HalfInt(1); l1 + l2 <= budget.total_max; l2 += 2) {
          if (a_plus_contains(split.p2, split.q2, l2)) found.emplace_back(l1, l2);
        }
      }
      break;
    }
  }

  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    const HalfInt sx = x.first + x.second, sy = y.first + y.second;
    if (sx != sy) return sx < sy;
    return x.second < y.second;
  });
  if (found.size() > static_cast<std::size_t>(budget.max_count))
    found.resize(static_cast<std::size_t>(budget.max_count));
  return found;
}

std::vector<Summand> branch_discrete(const RepParam& rep, const SplitSignature& split,
                                     const Budget& budget) {
  if (rep.p != split.p() || rep.q != split.q())
    throw std::invalid_argument("branch_discrete: split does not join to (p, q)");

  if (rep.eps == Sign::minus) {
    const SplitSignature swapped(split.q1, split.p1, split.q2, split.p2);
    auto sub = branch_discrete(rep.swapped(), swapped, budget);
    for (Summand& s : sub) {
      s.delta = s.delta * Sign::minus;
      s.eps = s.eps * Sign::minus;
    }
    return sub;
  }

  std::vector<Summand> out;
  for (LambdaKind kind : {LambdaKind::mp, LambdaKind::pp, LambdaKind::pm}) {
    for (const auto& [l1, l2] : lambda_set_enumerate(kind, split, rep.lambda, budget))
      out.push_back(Summand{kind_delta(kind), kind_eps(kind), l1, l2});
  }
  return out;
}

unsigned multiplicity(const RepParam& rep, const SplitSignature& split, const Summand& candidate) {
  if (rep.eps == Sign::minus) {
    const SplitSignature swapped(split.q1, split.p1, split.q2, split.p2);
    const Summand flipped{candidate.delta * Sign::minus, candidate.eps * Sign::minus,
                          candidate.lambda1, candidate.lambda2};
    return multiplicity(rep.swapped(), swapped, flipped);
  }

  LambdaKind kind;
  if (candidate.delta == Sign::minus && candidate.eps == Sign::plus) {
    kind = LambdaKind::mp;
  } else if (candidate.delta == Sign::plus && candidate.eps == Sign::plus) {
    kind = LambdaKind::pp;
  } else if (candidate.delta == Sign::plus && candidate.eps == Sign::minus) {
    kind = LambdaKind::pm;
  } else {
    return 0;  // (-,-) never occurs in the discrete part
  }
  return lambda_set_contains(kind, split, rep.lambda, candidate.lambda1, candidate.lambda2) ? 1u
                                                                                            : 0u;
}

SpectralClass classify_split(const SplitSignature& split) {
  if (split.p() < 2 || split.q() < 1)
    throw std::invalid_argument("classify_split requires p >= 2 and q >= 1");
  SpectralClass c;
  c.purely_continuous = (split.p1 == 1 && split.p2 == 1) || (split.p1 == 1 && split.q1 == 1) ||
                        (split.p2 == 1 && split.q2 == 1);
  c.finite_discrete = split.p1 > 0 && split.p2 > 0 && std::min(split.p2, split.q1) <= 1 &&
                      std::min(split.p1, split.q2) <= 1;
  c.discretely_decomposable = split.p1 == 0 || split.p2 == 0;
  return c;
}

bool lambda_pm_infinite(const SplitSignature& split) {
  return split.p2 == 0 || (split.p1 >= 2 && split.q2 >= 2);
}

bool lambda_union_infinite(const SplitSignature& split) {
  return split.p1 * split.p2 == 0 || std::min(split.p2, split.q1) >= 2 ||
         std::min(split.p1, split.q2) >= 2;
}

void to_json(nlohmann::json& j, const Summand& s) {
  j = nlohmann::json{{"delta", std::string(1, sign_char(s.delta))},
                     {"eps", std::string(1, sign_char(s.eps))},
                     {"lambda1", s.lambda1.str()},
                     {"lambda2", s.lambda2.str()}};
}

Summand summand_from_json(const nlohmann::json& j) {
  return Summand{sign_parse(j.at("delta").get<std::string>()),
                 sign_parse(j.at("eps").get<std::string>()),
                 HalfInt::parse(j.at("lambda1").get<std::string>()),
                 HalfInt::parse(j.at("lambda2").get<std::string>())};
}

void to_json(nlohmann::json& j, const SpectralClass& c) {
  j = nlohmann::json{{"discretely_decomposable", c.discretely_decomposable},
                     {"finite_discrete", c.finite_discrete},
                     {"purely_continuous", c.purely_continuous}};
}

}  // namespace branchkit
