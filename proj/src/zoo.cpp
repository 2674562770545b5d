#include "boolfun/zoo.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "boolfun/rng.hpp"

namespace boolfun::zoo {
namespace {

// log(1 - 2^-k), computed stably for large k.
double log_block_miss(int k) { return std::log1p(-std::ldexp(1.0, -k)); }

// (1 - 2^-k)^e.  For k*e <= 52 the value is the dyadic rational
// (2^k - 1)^e / 2^(k e) and is computed exactly, so closed forms match
// enumerated counts bit for bit; otherwise fall back to exp/log.
double block_miss_pow(int k, std::int64_t e) {
  if (e < 0) throw std::invalid_argument("negative power");
  if (e == 0) return 1.0;
  if (static_cast<std::int64_t>(k) * e <= 52) {
    const double base = std::ldexp(1.0, k) - 1.0;
    double value = 1.0;
    for (std::int64_t r = 0; r < e; ++r) value *= base;  // stays < 2^52
    return std::ldexp(value, static_cast<int>(-k * e));
  }
  return std::exp(static_cast<double>(e) * log_block_miss(k));
}

}  // namespace

BooleanFunction dictator(int n, int i) {
  if (i < 1 || i > n)
    throw std::out_of_range("dictator coordinate outside 1..n");
  BooleanFunction f(n);
  std::uint64_t bit = std::uint64_t{1} << (i - 1);
  for (std::uint64_t x = 0; x < f.size(); ++x)
    if (x & bit) f.set(x, true);
  return f;
}

BooleanFunction parity(int n, std::uint32_t subset_mask) {
  if (subset_mask == 0)
    throw std::invalid_argument("parity needs a nonempty subset");
  if (n < 32 && (subset_mask >> n))
    throw std::out_of_range("parity subset outside the n-cube");
  BooleanFunction f(n);
  int size = std::popcount(subset_mask);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    // chi_S(x) = (-1)^(|S| - popcount(S & x)).
    int agree = std::popcount(static_cast<std::uint32_t>(x) & subset_mask);
    if (((size - agree) & 1) == 0) f.set(x, true);
  }
  return f;
}

BooleanFunction majority(int n) {
  if (n % 2 == 0)
    throw std::invalid_argument("majority requires odd n");
  BooleanFunction f(n);
  for (std::uint64_t x = 0; x < f.size(); ++x)
    if (2 * std::popcount(x) > n) f.set(x, true);
  return f;
}

BooleanFunction tribes(int k, int m, int n) {
  if (k < 1 || m < 1) throw std::invalid_argument("tribes needs k, m >= 1");
  if (n == 0) n = k * m;
  if (k * m > n)
    throw std::invalid_argument("tribes blocks do not fit the n-cube");
  if (n > kMaxDimension)
    throw capacity_error("tribes dimension exceeds the supported maximum");
  BooleanFunction f(n);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    bool any = false;
    for (int b = 0; b < m && !any; ++b) {
      std::uint64_t block_mask =
          ((std::uint64_t{1} << k) - 1) << (static_cast<std::uint64_t>(b) * k);
      any = (x & block_mask) == block_mask;
    }
    if (any) f.set(x, true);
  }
  return f;
}

BooleanFunction random_boolean(int n, double density, std::uint64_t seed) {
  if (!(density > 0.0 && density < 1.0))
    throw std::invalid_argument("random density must lie in (0, 1)");
  BooleanFunction f(n);
  SplitMix64 rng(seed);
  for (std::uint64_t x = 0; x < f.size(); ++x)
    if (rng.next_unit() < density) f.set(x, true);
  return f;
}

double tribes_mean_closed_form(int k, std::int64_t m) {
  if (static_cast<std::int64_t>(k) * m <= 52) {
    return 1.0 - block_miss_pow(k, m);  // exact dyadic subtraction
  }
  return -std::expm1(static_cast<double>(m) * log_block_miss(k));
}

double tribes_influence_closed_form(int k, std::int64_t m) {
  return std::ldexp(block_miss_pow(k, m - 1), 1 - k);
}

double tribes_pair_same_block_closed_form(int k, std::int64_t m) {
  if (k < 2)
    throw std::invalid_argument("same-block pair needs block width >= 2");
  // Pivotal pattern: the other k-2 block coordinates all set, no other
  // block satisfied; the 2x2 restriction is an AND with |D_ij| = 1.
  return std::ldexp(block_miss_pow(k, m - 1), 1 - k);
}

double tribes_pair_distinct_blocks_closed_form(int k, std::int64_t m) {
  if (m < 2)
    throw std::invalid_argument("distinct-block pair needs >= 2 blocks");
  return std::ldexp(block_miss_pow(k, m - 2), 1 - 2 * k);
}

double tribes_max_pair_influence_closed_form(int k, std::int64_t m) {
  if (k >= 2) return tribes_pair_same_block_closed_form(k, m);
  if (m >= 2) return tribes_pair_distinct_blocks_closed_form(k, m);
  return 0.0;  // a single width-1 block has no coordinate pairs
}

TribesParams tribes_auto_params(std::int64_t n) {
  if (n < 4) {
    throw std::invalid_argument(
        "tribes_auto: dimension must be at least 4");
  }
  TribesParams best;
  double best_diff = 2.0;
  for (int k = 1; k <= 62 && k <= n; ++k) {
    std::int64_t mlo = (n + 2 * k - 1) / (2 * k);
    std::int64_t mhi = n / k;
    if (mlo > mhi) continue;
    // |mean - 1/2| is V-shaped in m; test the integers around the real
    // minimiser plus the range ends.
    double m_star = std::log(2.0) / -log_block_miss(k);
    std::int64_t cands[4] = {
        static_cast<std::int64_t>(std::floor(m_star)),
        static_cast<std::int64_t>(std::ceil(m_star)), mlo, mhi};
    for (std::int64_t m : cands) {
      if (m < mlo) m = mlo;
      if (m > mhi) m = mhi;
      double diff = std::fabs(tribes_mean_closed_form(k, m) - 0.5);
      bool better = diff < best_diff - 1e-15;
      bool tie = std::fabs(diff - best_diff) <= 1e-15;
      if (better || (tie && (k < best.k || (k == best.k && m < best.m)))) {
        best_diff = diff;
        best.k = k;
        best.m = static_cast<int>(m);
      }
    }
  }
  best.mean = tribes_mean_closed_form(best.k, best.m);
  best.influence = tribes_influence_closed_form(best.k, best.m);
  best.max_pair_influence =
      tribes_max_pair_influence_closed_form(best.k, best.m);
  return best;
}

std::pair<BooleanFunction, TribesParams> tribes_auto(int n) {
  TribesParams params = tribes_auto_params(n);
  return {tribes(params.k, params.m, n), params};
}

FamilySpec parse_family_spec(const std::string& text) {
  FamilySpec spec;
  std::size_t colon = text.find(':');
  spec.name = text.substr(0, colon);
  if (spec.name.empty())
    throw parse_error("empty family name in '" + text + "'", 1);
  if (colon == std::string::npos) return spec;
  std::string rest = text.substr(colon + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    std::size_t comma = rest.find(',', pos);
    std::string item = rest.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= item.size())
      throw parse_error("family argument '" + item + "' is not key=value", 1);
    spec.args[item.substr(0, eq)] = item.substr(eq + 1);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return spec;
}

namespace {

long parse_long_arg(const FamilySpec& spec, const std::string& key,
                    long fallback, bool required) {
  auto it = spec.args.find(key);
  if (it == spec.args.end()) {
    if (required)
      throw parse_error("family '" + spec.name + "' requires argument '" +
                            key + "'",
                        1);
    return fallback;
  }
  try {
    std::size_t used = 0;
    long v = std::stol(it->second, &used, 0);  // base 0 accepts 0x masks
    if (used != it->second.size())
      throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw parse_error("invalid value '" + it->second + "' for '" + key + "'",
                      1);
  }
}

double parse_double_arg(const FamilySpec& spec, const std::string& key,
                        double fallback) {
  auto it = spec.args.find(key);
  if (it == spec.args.end()) return fallback;
  try {
    std::size_t used = 0;
    double v = std::stod(it->second, &used);
    if (used != it->second.size())
      throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw parse_error("invalid value '" + it->second + "' for '" + key + "'",
                      1);
  }
}

}  // namespace

BooleanFunction make_family(const FamilySpec& spec, int n,
                            std::uint64_t fallback_seed) {
  if (spec.name == "dictator")
    return dictator(n, static_cast<int>(parse_long_arg(spec, "i", 1, false)));
  if (spec.name == "parity") {
    std::uint32_t full = n >= 32 ? 0xffffffffu
                                 : ((std::uint32_t{1} << n) - 1);
    return parity(n, static_cast<std::uint32_t>(
                         parse_long_arg(spec, "S", full, false)));
  }
  if (spec.name == "majority") return majority(n);
  if (spec.name == "tribes") {
    int k = static_cast<int>(parse_long_arg(spec, "k", 0, true));
    int m = static_cast<int>(parse_long_arg(spec, "m", 0, true));
    return tribes(k, m, n);
  }
  if (spec.name == "tribes-auto") return tribes_auto(n).first;
  if (spec.name == "random") {
    double p = parse_double_arg(spec, "p", 0.5);
    long seed = parse_long_arg(spec, "seed",
                               static_cast<long>(fallback_seed), false);
    return random_boolean(n, p, static_cast<std::uint64_t>(seed));
  }
  throw parse_error("unknown family '" + spec.name + "'", 1);
}

std::vector<std::pair<std::string, BooleanFunction>> corpus(int n_max) {
  std::vector<std::pair<std::string, BooleanFunction>> out;
  for (int n = 2; n <= n_max; ++n) {
    std::string at = "@n=" + std::to_string(n);
    out.emplace_back("dictator:i=1" + at, dictator(n, 1));
    std::uint32_t full = (std::uint32_t{1} << n) - 1;
    out.emplace_back("parity:S=full" + at, parity(n, full));
    out.emplace_back("parity:S=0x3" + at, parity(n, 0x3));
    if (n % 2 == 1) out.emplace_back("majority" + at, majority(n));
    if (n >= 4) {
      auto [fn, params] = tribes_auto(n);
      out.emplace_back("tribes-auto(k=" + std::to_string(params.k) +
                           ",m=" + std::to_string(params.m) + ")" + at,
                       std::move(fn));
    }
    if (n >= 4 && n % 2 == 0)
      out.emplace_back("tribes:k=2,m=" + std::to_string(n / 2) + at,
                       tribes(2, n / 2, n));
    out.emplace_back("random:p=0.5" + at,
                     random_boolean(n, 0.5, 1000 + static_cast<std::uint64_t>(n)));
    out.emplace_back("random:p=0.25" + at,
                     random_boolean(n, 0.25, 2000 + static_cast<std::uint64_t>(n)));
  }
  return out;
}

}  // namespace boolfun::zoo
