#include "boolfun/serialize.hpp"

#include <cstdio>

namespace boolfun {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json report_json(const InequalityReport& r) {
  json terms = json::array();
  for (const auto& t : r.terms) {
    terms.push_back({{"index", t.index}, {"value", t.value}});
  }
  return json{{"name", r.name},
              {"n", r.n},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"ratio", r.ratio},
              {"degenerate", r.degenerate},
              {"params", r.params},
              {"terms", terms}};
}

json profile_json(const InfluenceProfile& p) {
  json pairs = json::array();
  for (int i = 1; i <= p.n; ++i) {
    for (int j = i + 1; j <= p.n; ++j) {
      pairs.push_back(
          {{"index", {i, j}}, {"value", p.pair_of(i, j)}});
    }
  }
  return json{{"n", p.n},
              {"influences", p.first},
              {"max_influence", p.max_first()},
              {"pair_influences", pairs},
              {"max_pair_influence", p.max_off_diagonal()}};
}

json alternative_json(const AlternativeReport& r) {
  return json{{"n", r.n},
              {"s0", r.s0},
              {"eta", r.eta},
              {"variance", r.variance},
              {"max_influence", r.max_influence},
              {"max_pair_influence", r.max_pair_influence},
              {"c1", r.c1},
              {"c2", r.c2},
              {"branch", r.branch},
              {"best_i", r.best_i},
              {"best_pair", {r.best_pair_i, r.best_pair_j}},
              {"degenerate", r.degenerate}};
}

json norm_equivalence_json(const NormEquivalenceReport& r) {
  return json{{"i", r.i},
              {"j", r.j},
              {"l1", r.l1},
              {"l2_sq", r.l2_sq},
              {"left_holds", r.left_holds},
              {"right_holds", r.right_holds}};
}

json hyp_bound_json(const HypBoundReport& r) {
  return json{{"i", r.i},
              {"j", r.j},
              {"integral", r.integral},
              {"majorant", r.majorant},
              {"constant", kHypBoundConstant},
              {"ratio", r.ratio},
              {"holds", r.holds},
              {"degenerate", r.degenerate}};
}

json search_json(const SearchResult& r) {
  std::string bits;
  const std::uint32_t size = std::uint32_t(1) << r.n;
  bits.reserve(size);
  for (std::uint32_t x = 0; x < size; ++x) {
    bits.push_back(r.best.value(x) ? '1' : '0');
  }
  return json{{"inequality", inequality_id_name(r.id)},
              {"n", r.n},
              {"budget", r.budget},
              {"seed", r.seed},
              {"s0", r.s0},
              {"best_ratio", r.best_ratio},
              {"best_table", bits},
              {"evaluations", r.evaluations},
              {"restarts", r.restarts},
              {"improvements", r.improvements}};
}

json variance_representation_json(const VarianceRepresentationReport& r) {
  return json{{"variance", r.variance},
              {"integral_closed", r.integral_closed},
              {"integral_quadrature", r.integral_quadrature},
              {"kappa", r.kappa},
              {"degenerate", r.degenerate}};
}

json tail_identity_json(const TailIdentityReport& r) {
  return json{{"k_of_s", r.k_of_s},
              {"t_of_s", r.t_of_s},
              {"t_of_s_quadrature", r.t_of_s_quadrature},
              {"kappa2", r.kappa2},
              {"degenerate", r.degenerate}};
}

json hypercontractivity_json(const HypercontractivityReport& r) {
  return json{{"t", r.t},       {"q", r.q},
              {"p", r.p},       {"lhs", r.lhs},
              {"rhs", r.rhs},   {"holds", r.holds}};
}

json taylor_json(const TaylorReport& r) {
  return json{{"p", r.p},
              {"variance", r.variance},
              {"moment_sum", r.moment_sum},
              {"remainder", r.remainder},
              {"residual", r.residual}};
}

json inverse_poincare_json(const InversePoincareReport& r) {
  return json{{"variance", r.variance},
              {"grad_sq", r.grad_sq},
              {"holds", r.holds},
              {"equality", r.equality}};
}

json nelson_json(const NelsonReport& r) {
  return json{{"t", r.t},     {"q", r.q},
              {"p", r.p},     {"lhs", r.lhs},
              {"rhs", r.rhs}, {"holds", r.holds}};
}

std::string csv_header() { return "name,n,param_s0,lhs,rhs,ratio"; }

std::string csv_row(const InequalityReport& r) {
  std::string s0;
  const auto it = r.params.find("s0");
  if (it != r.params.end()) s0 = format_double(it->second);
  return r.name + "," + std::to_string(r.n) + "," + s0 + "," +
         format_double(r.lhs) + "," + format_double(r.rhs) + "," +
         format_double(r.ratio);
}

}  // namespace boolfun
