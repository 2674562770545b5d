#pragma once
// JSON / CSV serialization for reports.  JSON objects keep alphabetical key
// order (std::map-backed) and CSV floats use %.17g, so identical inputs
// always produce byte-identical output.

#include <string>

#include "json.hpp"

#include "boolfun/cube.hpp"
#include "boolfun/hermite.hpp"
#include "boolfun/inequalities.hpp"
#include "boolfun/spectrum.hpp"

namespace boolfun {

using json = nlohmann::json;

std::string format_double(double x);  // %.17g

json report_json(const InequalityReport& r);
json profile_json(const InfluenceProfile& p);
json alternative_json(const AlternativeReport& r);
json norm_equivalence_json(const NormEquivalenceReport& r);
json hyp_bound_json(const HypBoundReport& r);
json search_json(const SearchResult& r);
json variance_representation_json(const VarianceRepresentationReport& r);
json tail_identity_json(const TailIdentityReport& r);
json hypercontractivity_json(const HypercontractivityReport& r);
json taylor_json(const TaylorReport& r);
json inverse_poincare_json(const InversePoincareReport& r);
json nelson_json(const NelsonReport& r);

// Fixed sweep schema: name,n,param_s0,lhs,rhs,ratio (param_s0 empty when the
// metric has no s0 parameter).
std::string csv_header();
std::string csv_row(const InequalityReport& r);

}  // namespace boolfun
