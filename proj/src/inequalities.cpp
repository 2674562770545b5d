#include "boolfun/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "boolfun/integrate.hpp"
#include "boolfun/rng.hpp"

namespace boolfun {
namespace {

double safe_ratio(double lhs, double rhs) {
  return rhs > 0.0 ? lhs / rhs : 0.0;
}

// 1 + log(||d||_2 / ||d||_1) from the already-computed power sums.
double log_denominator(double l2_sq, double l1) {
  return 1.0 + 0.5 * std::log(l2_sq) - std::log(l1);
}

void finalize(InequalityReport& r) {
  r.degenerate = !(r.rhs > 0.0);
  r.ratio = safe_ratio(r.lhs, r.rhs);
}

}  // namespace

InequalityReport poincare_report(const RealCubeFunction& f) {
  InequalityReport r;
  r.name = "poincare";
  r.n = f.n();
  r.lhs = variance(f);
  for (int i = 1; i <= r.n; ++i) {
    const RealCubeFunction d = discrete_derivative(f, i);
    const double term = 0.25 * lp_norm_pow(d, 2.0);
    r.terms.push_back({{i}, term});
    r.rhs += term;
  }
  finalize(r);
  return r;
}

InequalityReport talagrand1_report(const RealCubeFunction& f) {
  InequalityReport r;
  r.name = "talagrand1";
  r.n = f.n();
  r.lhs = variance(f);
  for (int i = 1; i <= r.n; ++i) {
    const RealCubeFunction d = discrete_derivative(f, i);
    const double l2_sq = lp_norm_pow(d, 2.0);
    double term = 0.0;
    if (l2_sq > 0.0) {
      term = l2_sq / log_denominator(l2_sq, lp_norm_pow(d, 1.0));
    }
    r.terms.push_back({{i}, term});
    r.rhs += term;
  }
  finalize(r);
  return r;
}

InequalityReport talagrand2_report(const RealCubeFunction& f, double s0) {
  if (!(s0 > 0.0) || !(s0 < kTalagrand2S0Limit)) {
    throw std::invalid_argument(
        "talagrand2_report: s0 must lie strictly inside (0, 1/128)");
  }
  InequalityReport r;
  r.name = "talagrand2";
  r.n = f.n();
  r.lhs = variance(f);
  const double q = 1.0 + std::exp(-2.0 * s0);
  double first_sum = 0.0;
  for (int i = 1; i <= r.n; ++i) {
    const RealCubeFunction d = discrete_derivative(f, i);
    const double mq = lp_norm_pow(d, q);
    const double term = mq > 0.0 ? std::pow(mq, 2.0 / q) : 0.0;
    r.terms.push_back({{i}, term});
    first_sum += term;
  }
  double second_sum = 0.0;
  for (int i = 1; i <= r.n; ++i) {
    for (int j = i + 1; j <= r.n; ++j) {
      const RealCubeFunction d = second_derivative(f, i, j);
      const double l2_sq = lp_norm_pow(d, 2.0);
      double term = 0.0;
      if (l2_sq > 0.0) {
        const double denom = log_denominator(l2_sq, lp_norm_pow(d, 1.0));
        term = 2.0 * l2_sq / (denom * denom);  // both coordinate orders
      }
      r.terms.push_back({{i, j}, term});
      second_sum += term;
    }
  }
  r.rhs = first_sum + second_sum;
  r.params["s0"] = s0;
  r.params["q"] = q;
  r.params["eta"] = 2.0 / q - 1.0;
  r.params["first_sum"] = first_sum;
  r.params["second_sum"] = second_sum;
  finalize(r);
  return r;
}

InequalityReport kkl_report(const BooleanFunction& f) {
  if (f.n() < 2) {
    throw std::invalid_argument("kkl_report: requires n >= 2");
  }
  InequalityReport r;
  r.name = "kkl";
  r.n = f.n();
  const double total = static_cast<double>(std::uint64_t(1) << r.n);
  const double p = static_cast<double>(f.ones_count()) / total;
  const double var = p * (1.0 - p);
  double max_influence = 0.0;
  for (int i = 1; i <= r.n; ++i) {
    const double inf = influence(f, i);
    r.terms.push_back({{i}, inf});
    max_influence = std::max(max_influence, inf);
  }
  r.lhs = max_influence;
  r.rhs = var * std::log(static_cast<double>(r.n)) / r.n;
  finalize(r);
  return r;
}

AlternativeReport corollary_alternative_report(const BooleanFunction& f,
                                               double s0) {
  if (f.n() < 2) {
    throw std::invalid_argument(
        "corollary_alternative_report: requires n >= 2");
  }
  if (!(s0 > 0.0) || !(s0 < kTalagrand2S0Limit)) {
    throw std::invalid_argument(
        "corollary_alternative_report: s0 must lie strictly inside (0, "
        "1/128)");
  }
  AlternativeReport r;
  r.n = f.n();
  r.s0 = s0;
  r.eta = 2.0 / (1.0 + std::exp(-2.0 * s0)) - 1.0;
  const double total = static_cast<double>(std::uint64_t(1) << r.n);
  const double p = static_cast<double>(f.ones_count()) / total;
  r.variance = p * (1.0 - p);

  const InfluenceProfile profile = influence_profile(f);
  for (int i = 1; i <= r.n; ++i) {
    if (profile.first_of(i) > r.max_influence) {
      r.max_influence = profile.first_of(i);
      r.best_i = i;
    }
  }
  for (int i = 1; i <= r.n; ++i) {
    for (int j = i + 1; j <= r.n; ++j) {
      if (profile.pair_of(i, j) > r.max_pair_influence) {
        r.max_pair_influence = profile.pair_of(i, j);
        r.best_pair_i = i;
        r.best_pair_j = j;
      }
    }
  }

  if (!(r.variance > 0.0)) {
    r.degenerate = true;
    return r;
  }
  const double log_n = std::log(static_cast<double>(r.n));
  r.c1 = r.max_influence /
         std::pow(r.variance / r.n, 1.0 / (1.0 + r.eta));
  const double pair_scale = r.variance * (log_n / r.n) * (log_n / r.n);
  r.c2 = r.max_pair_influence / pair_scale;
  r.branch = r.c1 >= r.c2 ? 1 : 2;
  return r;
}

NormEquivalenceReport norm_equivalence_check(const BooleanFunction& f, int i,
                                             int j) {
  if (i == j) {
    throw std::invalid_argument(
        "norm_equivalence_check: coordinates must be distinct");
  }
  NormEquivalenceReport r;
  r.i = i;
  r.j = j;
  const RealCubeFunction d = second_derivative(f.to_real(), i, j);
  r.l1 = lp_norm_pow(d, 1.0);
  r.l2_sq = lp_norm_pow(d, 2.0);
  constexpr double tol = 1e-12;
  r.left_holds = r.l1 <= r.l2_sq + tol;
  r.right_holds = r.l2_sq <= 2.0 * r.l1 + tol;
  return r;
}

HypBoundReport hypercontractive_bound_check(const RealCubeFunction& f, int i,
                                            int j) {
  if (i == j) {
    throw std::invalid_argument(
        "hypercontractive_bound_check: coordinates must be distinct");
  }
  HypBoundReport r;
  r.i = i;
  r.j = j;
  const RealCubeFunction d = second_derivative(f, i, j);
  const double l2_sq = lp_norm_pow(d, 2.0);
  if (!(l2_sq > 0.0)) {
    r.degenerate = true;
    return r;
  }
  const double l1 = lp_norm_pow(d, 1.0);
  r.integral = adaptive_simpson(
      [&](double v) {
        const double mv = lp_norm_pow(d, v);
        return (2.0 - v) * std::pow(mv, 2.0 / v);
      },
      1.0, 2.0, 1e-12);
  const double denom = log_denominator(l2_sq, l1);
  r.majorant = kHypBoundConstant * l2_sq / (denom * denom);
  r.ratio = safe_ratio(r.integral, r.majorant);
  r.holds = r.integral <= r.majorant + 1e-12;
  return r;
}

InequalityId parse_inequality_id(const std::string& name) {
  if (name == "poincare") return InequalityId::poincare;
  if (name == "talagrand1") return InequalityId::talagrand1;
  if (name == "talagrand2") return InequalityId::talagrand2;
  if (name == "kkl") return InequalityId::kkl;
  throw std::invalid_argument("unknown inequality: " + name);
}

std::string inequality_id_name(InequalityId id) {
  switch (id) {
    case InequalityId::poincare:
      return "poincare";
    case InequalityId::talagrand1:
      return "talagrand1";
    case InequalityId::talagrand2:
      return "talagrand2";
    case InequalityId::kkl:
      return "kkl";
  }
  return "?";
}

double inequality_ratio(const BooleanFunction& f, InequalityId id,
                        double s0) {
  switch (id) {
    case InequalityId::poincare:
      return poincare_report(f.to_real()).ratio;
    case InequalityId::talagrand1:
      return talagrand1_report(f.to_real()).ratio;
    case InequalityId::talagrand2:
      return talagrand2_report(f.to_real(), s0).ratio;
    case InequalityId::kkl:
      return kkl_report(f).ratio;
  }
  return 0.0;
}

SearchResult constant_search(int n, InequalityId id, int budget,
                             std::uint64_t seed, double s0) {
  if (n < 1) {
    throw std::invalid_argument("constant_search: n must be >= 1");
  }
  if (n > kMaxSearchDimension) {
    throw capacity_error("constant_search: n exceeds 12");
  }
  if (budget < 1) {
    throw std::invalid_argument("constant_search: budget must be >= 1");
  }
  SearchResult result;
  result.id = id;
  result.n = n;
  result.budget = budget;
  result.seed = seed;
  result.s0 = s0;
  result.best = BooleanFunction(n);

  SplitMix64 rng(seed);
  const std::uint32_t size = std::uint32_t(1) << n;
  // Restart densities cycle through balanced and lopsided tables; lopsided
  // starts sit near AND/OR-like functions whose ratios are already large.
  constexpr double kDensities[] = {0.5, 0.125, 0.875, 0.25, 0.75};
  constexpr int kNumDensities = 5;

  const auto evaluate = [&](const BooleanFunction& f) {
    ++result.evaluations;
    return inequality_ratio(f, id, s0);
  };

  while (result.evaluations < budget) {
    ++result.restarts;
    const double density = kDensities[(result.restarts - 1) % kNumDensities];
    BooleanFunction current(n);
    for (std::uint32_t x = 0; x < size; ++x) {
      current.set(x, rng.next_unit() < density);
    }
    double current_ratio = evaluate(current);
    if (current_ratio > result.best_ratio) {
      result.best_ratio = current_ratio;
      result.best = current;
      ++result.improvements;
    }
    bool improved = true;
    while (improved && result.evaluations < budget) {
      improved = false;
      for (std::uint32_t x = 0; x < size && result.evaluations < budget;
           ++x) {
        current.set(x, !current.value(x));
        const double flipped_ratio = evaluate(current);
        if (flipped_ratio > current_ratio + 1e-15) {
          current_ratio = flipped_ratio;
          improved = true;
          if (current_ratio > result.best_ratio) {
            result.best_ratio = current_ratio;
            result.best = current;
            ++result.improvements;
          }
        } else {
          current.set(x, !current.value(x));  // revert
        }
      }
    }
  }
  return result;
}

}  // namespace boolfun
