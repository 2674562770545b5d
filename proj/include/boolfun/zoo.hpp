#pragma once
// Named Boolean function families, their closed-form statistics, and the
// family-spec strings the command line accepts.
//
// Tribes conventions: tribes(k, m) is an OR of m disjoint ANDs ("blocks")
// of k coordinates each; block b covers coordinates (b-1)k+1 .. bk and the
// function may live on a larger cube, leaving the remaining coordinates as
// dummies.  Closed forms (all exact for the uniform measure):
//   mean       1 - (1 - 2^-k)^m
//   influence  2^(1-k) (1 - 2^-k)^(m-1)          (coordinate in a block)
//   pair, same block (k >= 2)      2^(1-k) (1 - 2^-k)^(m-1)
//   pair, distinct blocks (m >= 2) (1/2) 4^(1-k) (1 - 2^-k)^(m-2)
// The same-block value dominates for k >= 2, so it is the off-diagonal
// maximum of the pair-influence matrix.
//
// tribes_auto picks (k, m) for a given n by minimising |mean - 1/2| over
// k >= 1 and m in [ceil(n/(2k)), floor(n/k)] (at least half the coordinates
// in use), ties towards smaller k then smaller m.  The m-range keeps the
// selected family inside the cube while preventing degenerate nearly-empty
// constructions.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "boolfun/cube.hpp"

namespace boolfun::zoo {

BooleanFunction dictator(int n, int i);
// f = (1 + chi_S)/2: indicator that chi_S(x) = +1.  S must be a nonzero
// subset mask inside the n-cube.
BooleanFunction parity(int n, std::uint32_t subset_mask);
BooleanFunction majority(int n);  // n odd
// OR of m ANDs of width k on an n-cube (n >= k*m; default n = k*m).
BooleanFunction tribes(int k, int m, int n = 0);
BooleanFunction random_boolean(int n, double density, std::uint64_t seed);

struct TribesParams {
  int k = 0, m = 0;
  double mean = 0.0;
  double influence = 0.0;
  double max_pair_influence = 0.0;
};

double tribes_mean_closed_form(int k, std::int64_t m);
double tribes_influence_closed_form(int k, std::int64_t m);
double tribes_pair_same_block_closed_form(int k, std::int64_t m);       // k >= 2
double tribes_pair_distinct_blocks_closed_form(int k, std::int64_t m);  // m >= 2
double tribes_max_pair_influence_closed_form(int k, std::int64_t m);

// Closed-form parameter selection; valid far beyond the table capacity.
TribesParams tribes_auto_params(std::int64_t n);
// Table construction for n <= kMaxDimension.
std::pair<BooleanFunction, TribesParams> tribes_auto(int n);

// Family specs: "dictator:i=1", "parity:S=0x3", "majority",
// "tribes:k=2,m=2", "tribes-auto", "random:p=0.5,seed=7".
struct FamilySpec {
  std::string name;
  std::map<std::string, std::string> args;
};
FamilySpec parse_family_spec(const std::string& text);
// Instantiate on the n-cube; `fallback_seed` feeds "random" when the spec
// carries no seed of its own.
BooleanFunction make_family(const FamilySpec& spec, int n,
                            std::uint64_t fallback_seed);

// Deterministic test corpus: named zoo members for each dimension up to
// n_max (dictators, parities, majorities, tribes, seeded random tables).
std::vector<std::pair<std::string, BooleanFunction>> corpus(int n_max);

}  // namespace boolfun::zoo
