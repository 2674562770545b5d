#pragma once
// Variance-vs-influence inequality reports.
//
// Every report carries lhs, rhs, their ratio, and the per-term breakdown of
// the rhs; the stated inequality is lhs <= C * rhs for a universal constant
// C the toolkit estimates empirically (reports never assume it).  Natural
// logarithms are used in every functional; zero-derivative terms contribute
// 0; constant inputs produce a degenerate-flagged report rather than an
// exception so sweeps never abort.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "boolfun/cube.hpp"

namespace boolfun {

inline constexpr double kDefaultS0 = 1.0 / 256.0;  // inside (0, 1/128)
inline constexpr double kTalagrand2S0Limit = 1.0 / 128.0;
// Calibrated constant of hypercontractive_bound_check; the supremum of
// integral/majorant over derivative distributions approaches 1 from below
// in the rare-support limit, so 1.0 is the sharp safe choice.
inline constexpr double kHypBoundConstant = 1.0;

struct ReportTerm {
  std::vector<int> index;  // 1-based coordinates; [i] or [i,j] (i < j)
  double value = 0.0;
};

struct InequalityReport {
  std::string name;
  int n = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs / rhs, 0 when degenerate
  bool degenerate = false;
  std::map<std::string, double> params;
  std::vector<ReportTerm> terms;
};

// Var(f) <= (1/4) sum_i ||D_i f||_2^2, equality iff spectrum degree <= 1.
InequalityReport poincare_report(const RealCubeFunction& f);

// Var(f) <= C sum_i ||D_i f||_2^2 / (1 + log(||D_i f||_2 / ||D_i f||_1)).
InequalityReport talagrand1_report(const RealCubeFunction& f);

// Var(f) <= C [ sum_i ||D_i f||_q^2  +  sum_{i != j} ||D_ij f||_2^2 /
//              (1 + log(||D_ij f||_2 / ||D_ij f||_1))^2 ],  q = 1+e^{-2 s0}.
// Pair terms are emitted once per unordered pair with both orders folded in.
// Requires 0 < s0 < 1/128.
InequalityReport talagrand2_report(const RealCubeFunction& f, double s0);

// max_i I_i(f) >= C Var(f) log(n)/n; the report carries the attained ratio.
InequalityReport kkl_report(const BooleanFunction& f);

// Two-branch alternative: c1 measures the first-order branch
// max I_i / [Var/n]^{1/(1+eta)}, c2 the second-order branch
// max_{i!=j} I_(i,j) / [Var (log n / n)^2], eta = 2/(1+e^{-2 s0}) - 1.
struct AlternativeReport {
  int n = 0;
  double s0 = 0.0, eta = 0.0;
  double variance = 0.0;
  double max_influence = 0.0, max_pair_influence = 0.0;
  double c1 = 0.0, c2 = 0.0;
  int branch = 0;  // 1 or 2: which branch attains the larger constant
  int best_i = 0;
  int best_pair_i = 0, best_pair_j = 0;
  bool degenerate = false;
};
AlternativeReport corollary_alternative_report(const BooleanFunction& f,
                                               double s0);

// ||D_ij f||_1 <= ||D_ij f||_2^2 <= 2 ||D_ij f||_1 for Boolean f, i != j.
struct NormEquivalenceReport {
  int i = 0, j = 0;
  double l1 = 0.0, l2_sq = 0.0;
  bool left_holds = false, right_holds = false;
};
NormEquivalenceReport norm_equivalence_check(const BooleanFunction& f, int i,
                                             int j);

// int_1^2 (2-v) ||D_ij f||_v^2 dv  <=  C' ||D_ij f||_2^2 /
//                                      (1 + log(||D_ij f||_2/||D_ij f||_1))^2.
struct HypBoundReport {
  int i = 0, j = 0;
  double integral = 0.0;
  double majorant = 0.0;  // includes the calibrated constant
  double ratio = 0.0;
  bool holds = false;
  bool degenerate = false;  // D_ij f identically zero
};
HypBoundReport hypercontractive_bound_check(const RealCubeFunction& f, int i,
                                            int j);

enum class InequalityId { poincare, talagrand1, talagrand2, kkl };
InequalityId parse_inequality_id(const std::string& name);
std::string inequality_id_name(InequalityId id);

// Ratio lhs/rhs of the selected report for a Boolean table (0 if degenerate).
double inequality_ratio(const BooleanFunction& f, InequalityId id, double s0);

// Maximise the ratio over random restarts plus greedy single-bit-flip local
// search; wholly deterministic given the seed.  Each ratio evaluation counts
// against the budget.
struct SearchResult {
  InequalityId id = InequalityId::poincare;
  int n = 0;
  int budget = 0;
  std::uint64_t seed = 0;
  double s0 = kDefaultS0;
  BooleanFunction best;
  double best_ratio = 0.0;
  int evaluations = 0;
  int restarts = 0;
  int improvements = 0;
};
inline constexpr int kMaxSearchDimension = 12;
SearchResult constant_search(int n, InequalityId id, int budget,
                             std::uint64_t seed, double s0 = kDefaultS0);

}  // namespace boolfun
