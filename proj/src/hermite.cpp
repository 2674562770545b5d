#include "boolfun/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "boolfun/errors.hpp"
#include "boolfun/integrate.hpp"
#include "boolfun/rng.hpp"

namespace boolfun {
namespace {

constexpr int kFactTableSize = 33;

const double* factorial_table() {
  static const auto table = [] {
    std::array<double, kFactTableSize> t{};
    t[0] = 1.0;
    for (int i = 1; i < kFactTableSize; ++i) {
      t[i] = t[i - 1] * i;
    }
    return t;
  }();
  return table.data();
}

double factorial(int k) { return factorial_table()[k]; }

double binomial(int a, int b) {
  if (b < 0 || b > a) return 0.0;
  return factorial(a) / (factorial(b) * factorial(a - b));
}

void check_axis(int axis, int n) {
  if (axis < 1 || axis > n) {
    throw std::out_of_range("hermite: axis out of range");
  }
}

// Neumaier-compensated accumulator for long quadrature sums.
struct Compensated {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

// Gauss-Hermite nodes/weights for the physicists' weight e^{-x^2}
// (Newton iteration on the orthonormal recurrence).
void gauss_hermite_physicists(int n, std::vector<double>& x,
                              std::vector<double>& w) {
  constexpr double kEps = 1.0e-14;
  constexpr int kMaxIterations = 64;
  constexpr double kPiToMinusQuarter = 0.7511255444649425;
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  double z = 0.0, pp = 0.0;
  for (int i = 0; i < m; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) -
          1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * x[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * x[1];
    } else {
      z = 2.0 * z - x[i - 2];
    }
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      double p1 = kPiToMinusQuarter;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 -
             std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::fabs(z - z1) <= kEps) break;
    }
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = 2.0 / (pp * pp);
    w[n - 1 - i] = w[i];
  }
}

}  // namespace

int MultiIndex::total() const {
  int s = 0;
  for (const auto d : deg) s += d;
  return s;
}

double hermite_value(int k, double x) {
  if (k < 0) throw std::invalid_argument("hermite_value: negative degree");
  double prev = 0.0;  // h_{-1}
  double cur = 1.0;   // h_0
  for (int j = 0; j < k; ++j) {
    const double next =
        (x * cur - std::sqrt(static_cast<double>(j)) * prev) /
        std::sqrt(static_cast<double>(j + 1));
    prev = cur;
    cur = next;
  }
  return cur;
}

HermiteExpansion::HermiteExpansion(int n, int maxdeg) : n_(n), maxdeg_(maxdeg) {
  if (n < 1 || n > kMaxGaussianDimension) {
    throw std::invalid_argument("HermiteExpansion: dimension must be 1..6");
  }
  if (maxdeg < 0 || maxdeg > kMaxHermiteDegree) {
    throw std::invalid_argument("HermiteExpansion: maxdeg must be 0..16");
  }
}

void HermiteExpansion::check_index(const MultiIndex& alpha) const {
  for (int a = n_; a < kMaxGaussianDimension; ++a) {
    if (alpha.deg[static_cast<size_t>(a)] != 0) {
      throw std::out_of_range("HermiteExpansion: index uses axis beyond n");
    }
  }
  if (alpha.total() > maxdeg_) {
    throw std::out_of_range("HermiteExpansion: index degree exceeds maxdeg");
  }
}

void HermiteExpansion::set(const MultiIndex& alpha, double c) {
  check_index(alpha);
  if (c == 0.0) {
    coeffs_.erase(alpha);
  } else {
    coeffs_[alpha] = c;
  }
}

double HermiteExpansion::coefficient(const MultiIndex& alpha) const {
  check_index(alpha);
  const auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? 0.0 : it->second;
}

int HermiteExpansion::degree_present() const {
  int d = 0;
  for (const auto& [alpha, c] : coeffs_) d = std::max(d, alpha.total());
  return d;
}

double HermiteExpansion::mean() const {
  const auto it = coeffs_.find(MultiIndex{});
  return it == coeffs_.end() ? 0.0 : it->second;
}

double HermiteExpansion::l2_norm_sq() const {
  Compensated acc;
  for (const auto& [alpha, c] : coeffs_) acc.add(c * c);
  return acc.value();
}

double HermiteExpansion::variance() const {
  Compensated acc;
  for (const auto& [alpha, c] : coeffs_) {
    if (alpha.total() > 0) acc.add(c * c);
  }
  return acc.value();
}

std::vector<double> HermiteExpansion::level_weights() const {
  std::vector<double> levels(static_cast<size_t>(maxdeg_) + 1, 0.0);
  for (const auto& [alpha, c] : coeffs_) {
    levels[static_cast<size_t>(alpha.total())] += c * c;
  }
  return levels;
}

double HermiteExpansion::evaluate(
    const std::array<double, kMaxGaussianDimension>& x) const {
  // Per-axis tables of h_0..h_maxdeg at x_i.
  double table[kMaxGaussianDimension][kMaxHermiteDegree + 1];
  for (int a = 0; a < n_; ++a) {
    double prev = 0.0, cur = 1.0;
    table[a][0] = 1.0;
    for (int j = 0; j < maxdeg_; ++j) {
      const double next =
          (x[static_cast<size_t>(a)] * cur -
           std::sqrt(static_cast<double>(j)) * prev) /
          std::sqrt(static_cast<double>(j + 1));
      prev = cur;
      cur = next;
      table[a][j + 1] = cur;
    }
  }
  Compensated acc;
  for (const auto& [alpha, c] : coeffs_) {
    double prod = c;
    for (int a = 0; a < n_; ++a) {
      prod *= table[a][alpha.deg[static_cast<size_t>(a)]];
    }
    acc.add(prod);
  }
  return acc.value();
}

HermiteExpansion hermite_partial(const HermiteExpansion& f, int axis) {
  check_axis(axis, f.dimension());
  HermiteExpansion out(f.dimension(), f.max_degree());
  const size_t a = static_cast<size_t>(axis - 1);
  for (const auto& [alpha, c] : f.coefficients()) {
    const int k = alpha.deg[a];
    if (k == 0) continue;
    MultiIndex beta = alpha;
    beta.deg[a] = static_cast<std::uint8_t>(k - 1);
    out.set(beta, out.coefficient(beta) +
                      c * std::sqrt(static_cast<double>(k)));
  }
  return out;
}

HermiteExpansion ou_semigroup(const HermiteExpansion& f, double t) {
  if (!(t >= 0.0)) {
    throw std::invalid_argument("ou_semigroup: t must be >= 0");
  }
  HermiteExpansion out(f.dimension(), f.max_degree());
  for (const auto& [alpha, c] : f.coefficients()) {
    out.set(alpha, c * std::exp(-t * alpha.total()));
  }
  return out;
}

HermiteExpansion random_expansion(int n, int maxdeg, std::uint64_t seed) {
  HermiteExpansion out(n, maxdeg);
  SplitMix64 rng(seed);
  MultiIndex alpha{};
  // Odometer over all degree vectors in lexicographic order.
  while (true) {
    if (alpha.total() <= maxdeg) {
      out.set(alpha, 2.0 * rng.next_unit() - 1.0);
    }
    int a = n - 1;
    while (a >= 0) {
      if (alpha.deg[static_cast<size_t>(a)] < maxdeg) {
        ++alpha.deg[static_cast<size_t>(a)];
        break;
      }
      alpha.deg[static_cast<size_t>(a)] = 0;
      --a;
    }
    if (a < 0) break;
  }
  return out;
}

double grad_moment(const HermiteExpansion& f, int k) {
  if (k < 0) throw std::invalid_argument("grad_moment: k must be >= 0");
  if (k == 0) {
    const double m = f.mean();
    return m * m;
  }
  Compensated acc;
  for (const auto& [alpha, c] : f.coefficients()) {
    if (alpha.total() == k) acc.add(c * c);
  }
  return factorial(k) * acc.value();
}

double grad_moment_oracle(const HermiteExpansion& f, int k) {
  if (k < 0) throw std::invalid_argument("grad_moment_oracle: k >= 0");
  if (k == 0) {
    const double m = f.mean();
    return m * m;
  }
  const int n = f.dimension();
  double tuples = 1.0;
  for (int r = 0; r < k; ++r) {
    tuples *= n;
    if (tuples > 2.0e6) {
      throw capacity_error("grad_moment_oracle: n^k too large");
    }
  }
  std::vector<int> tuple(static_cast<size_t>(k), 1);
  Compensated acc;
  while (true) {
    HermiteExpansion g = f;
    for (const int axis : tuple) g = hermite_partial(g, axis);
    const double m = g.mean();
    acc.add(m * m);
    int pos = k - 1;
    while (pos >= 0) {
      if (tuple[static_cast<size_t>(pos)] < n) {
        ++tuple[static_cast<size_t>(pos)];
        break;
      }
      tuple[static_cast<size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
  }
  return acc.value();
}

double semigroup_grad_moment(const HermiteExpansion& f, int k, double t) {
  if (k < 0) throw std::invalid_argument("semigroup_grad_moment: k >= 0");
  Compensated acc;
  for (const auto& [alpha, c] : f.coefficients()) {
    const int a = alpha.total();
    if (a < k) continue;
    acc.add(c * c * std::exp(-2.0 * t * a) * binomial(a, k));
  }
  return factorial(k) * acc.value();
}

TaylorReport variance_taylor_check(const HermiteExpansion& f, int p) {
  if (p < 1 || p > 12) {
    throw std::invalid_argument("variance_taylor_check: p must be 1..12");
  }
  TaylorReport r;
  r.p = p;
  r.variance = f.variance();
  for (int k = 1; k <= p; ++k) {
    r.moment_sum += grad_moment(f, k) / factorial(k);
  }
  // Remainder = (2/p!) sum_{a > p} W_a (p+1)! C(a, p+1) *
  //             int_0^inf e^{-2t} (1-e^{-2t})^p e^{-2t(a-p-1)} dt,
  // with the integral expanded binomially:
  //   sum_{r=0}^{p} C(p,r) (-1)^r / (2 (a - p + r)).
  const std::vector<double> levels = f.level_weights();
  for (int a = p + 1; a < static_cast<int>(levels.size()); ++a) {
    const double w = levels[static_cast<size_t>(a)];
    if (w == 0.0) continue;
    double integral = 0.0;
    for (int s = 0; s <= p; ++s) {
      const double term = binomial(p, s) / (2.0 * (a - p + s));
      integral += (s % 2 == 0) ? term : -term;
    }
    r.remainder +=
        (2.0 / factorial(p)) * factorial(p + 1) * binomial(a, p + 1) *
        w * integral;
  }
  r.residual = std::fabs(r.variance - r.moment_sum - r.remainder);
  return r;
}

double a_k_value(int k, double t) {
  if (k < 0) throw std::invalid_argument("a_k_value: k must be >= 0");
  const double u = -std::expm1(-2.0 * t);  // 1 - e^{-2t}, accurate near 0
  return 2.0 / factorial(k) * std::exp(-2.0 * t) * std::pow(u, k);
}

AkReport a_k_coefficients_check(int k_max) {
  if (k_max < 1 || k_max > 12) {
    throw std::invalid_argument("a_k_coefficients_check: k_max must be 1..12");
  }
  AkReport r;
  r.k_max = k_max;
  constexpr double kGrid[] = {0.05, 0.2, 0.5, 1.0, 2.5};
  for (int k = 1; k <= k_max; ++k) {
    for (const double t : kGrid) {
      const double inner = adaptive_simpson(
          [k](double u) { return a_k_value(k - 1, u); }, 0.0, t, 1e-13);
      const double viaRecursion = a_k_value(0, t) * inner;
      r.max_recursion_residual =
          std::max(r.max_recursion_residual,
                   std::fabs(a_k_value(k, t) - viaRecursion));
    }
    // Scalar sequence: a_k = integral of a_{k-1}(t) over [0, inf); equals
    // 1/k!.  Integrate piecewise so the bump near t = 0 is always sampled;
    // the tail beyond t = 15 is below e^{-30} and ignored.
    double mass = 0.0;
    for (int piece = 0; piece < 15; ++piece) {
      mass += adaptive_simpson(
          [k](double u) { return a_k_value(k - 1, u); },
          static_cast<double>(piece), static_cast<double>(piece + 1), 1e-13);
    }
    r.max_integral_residual = std::max(
        r.max_integral_residual, std::fabs(mass - 1.0 / factorial(k)));
  }
  return r;
}

InversePoincareReport inverse_poincare_check(const HermiteExpansion& f) {
  InversePoincareReport r;
  r.variance = f.variance();
  Compensated acc;
  for (const auto& [alpha, c] : f.coefficients()) {
    acc.add(c * c * alpha.total());
  }
  r.grad_sq = acc.value();
  r.holds = r.variance <= r.grad_sq + 1e-12;
  r.equality = std::fabs(r.grad_sq - r.variance) <= 1e-12;
  return r;
}

QuadratureRule QuadratureRule::make(int order) {
  if (order < 1 || order > 40) {
    throw std::invalid_argument("QuadratureRule: order must be 1..40");
  }
  QuadratureRule rule;
  std::vector<double> x, w;
  gauss_hermite_physicists(order, x, w);
  rule.nodes_.resize(static_cast<size_t>(order));
  rule.weights_.resize(static_cast<size_t>(order));
  // Convert from weight e^{-x^2} to the standard Gaussian measure.
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::acos(-1.0));
  for (int i = 0; i < order; ++i) {
    rule.nodes_[static_cast<size_t>(i)] =
        x[static_cast<size_t>(i)] * std::sqrt(2.0);
    rule.weights_[static_cast<size_t>(i)] =
        w[static_cast<size_t>(i)] * inv_sqrt_pi;
  }
  // Ascending node order for deterministic summation.
  std::vector<size_t> perm(static_cast<size_t>(order));
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    return rule.nodes_[a] < rule.nodes_[b];
  });
  QuadratureRule sorted;
  sorted.nodes_.reserve(perm.size());
  sorted.weights_.reserve(perm.size());
  for (const size_t i : perm) {
    sorted.nodes_.push_back(rule.nodes_[i]);
    sorted.weights_.push_back(rule.weights_[i]);
  }
  return sorted;
}

double QuadratureRule::integrate(
    int n, const std::function<double(
               const std::array<double, kMaxGaussianDimension>&)>& f) const {
  if (n < 1 || n > kMaxGaussianDimension) {
    throw std::invalid_argument("QuadratureRule: dimension must be 1..6");
  }
  const std::uint64_t q = static_cast<std::uint64_t>(order());
  std::uint64_t points = 1;
  for (int a = 0; a < n; ++a) {
    points *= q;
    if (points > kMaxQuadraturePoints) {
      throw capacity_error("QuadratureRule: order^n exceeds point budget");
    }
  }
  std::array<int, kMaxGaussianDimension> idx{};
  std::array<double, kMaxGaussianDimension> pt{};
  for (int a = 0; a < n; ++a) pt[static_cast<size_t>(a)] = nodes_[0];
  Compensated acc;
  for (std::uint64_t c = 0; c < points; ++c) {
    double weight = 1.0;
    for (int a = 0; a < n; ++a) {
      weight *= weights_[static_cast<size_t>(idx[static_cast<size_t>(a)])];
    }
    acc.add(weight * f(pt));
    int a = n - 1;
    while (a >= 0) {
      auto& ia = idx[static_cast<size_t>(a)];
      if (ia + 1 < order()) {
        ++ia;
        pt[static_cast<size_t>(a)] = nodes_[static_cast<size_t>(ia)];
        break;
      }
      ia = 0;
      pt[static_cast<size_t>(a)] = nodes_[0];
      --a;
    }
  }
  return acc.value();
}

double QuadratureRule::l1_norm(const HermiteExpansion& f) const {
  return integrate(f.dimension(),
                   [&](const std::array<double, kMaxGaussianDimension>& x) {
                     return std::fabs(f.evaluate(x));
                   });
}

InequalityReport gaussian_talagrand_report(const HermiteExpansion& f, int p,
                                           const QuadratureRule& rule) {
  if (p < 1 || p > 8) {
    throw std::invalid_argument("gaussian_talagrand_report: p must be 1..8");
  }
  if (rule.exact_degree() < 2 * f.degree_present()) {
    throw std::invalid_argument(
        "gaussian_talagrand_report: quadrature order not exact for degree "
        "2*maxdeg");
  }
  InequalityReport r;
  r.name = "gaussian-talagrand";
  r.n = f.dimension();
  r.params["p"] = p;
  r.params["quadrature_order"] = rule.order();

  r.lhs = f.variance();
  for (int k = 1; k <= p; ++k) {
    r.lhs -= grad_moment(f, k) / factorial(k);
  }

  // Enumerate multisets of p+1 axes as non-decreasing tuples; each stands
  // for (p+1)!/prod(mult!) ordered tuples with identical norms.
  const int order = p + 1;
  std::vector<int> tuple(static_cast<size_t>(order), 1);
  const int n = f.dimension();
  while (true) {
    HermiteExpansion g = f;
    for (const int axis : tuple) g = hermite_partial(g, axis);
    const double l2_sq = g.l2_norm_sq();
    double mult = factorial(order);
    int run = 1;
    for (size_t i = 1; i <= tuple.size(); ++i) {
      if (i < tuple.size() && tuple[i] == tuple[i - 1]) {
        ++run;
      } else {
        mult /= factorial(run);
        run = 1;
      }
    }
    double value = 0.0;
    if (l2_sq > 0.0) {
      const double l1 = rule.l1_norm(g);
      if (!(l1 > 0.0)) {
        throw std::runtime_error(
            "gaussian_talagrand_report: zero L1 for nonzero derivative");
      }
      const double base = 1.0 + 0.5 * std::log(l2_sq) - std::log(l1);
      value = mult * l2_sq / std::pow(base, order);
    }
    r.terms.push_back({tuple, value});
    r.rhs += value;

    // Next non-decreasing tuple.
    int pos = order - 1;
    while (pos >= 0 && tuple[static_cast<size_t>(pos)] == n) --pos;
    if (pos < 0) break;
    const int v = tuple[static_cast<size_t>(pos)] + 1;
    for (int i = pos; i < order; ++i) tuple[static_cast<size_t>(i)] = v;
  }

  r.degenerate = !(r.rhs > 0.0);
  r.ratio = r.degenerate ? 0.0 : r.lhs / r.rhs;
  return r;
}

NelsonReport nelson_check(const HermiteExpansion& f, double t, double q,
                          const QuadratureRule& rule) {
  if (!(t >= 0.0) || !(q > 1.0)) {
    throw std::invalid_argument("nelson_check: need t >= 0 and q > 1");
  }
  NelsonReport r;
  r.t = t;
  r.q = q;
  r.p = 1.0 + (q - 1.0) * std::exp(-2.0 * t);
  const HermiteExpansion g = ou_semigroup(f, t);
  const int n = f.dimension();
  const double mq = rule.integrate(
      n, [&](const std::array<double, kMaxGaussianDimension>& x) {
        return std::pow(std::fabs(g.evaluate(x)), q);
      });
  const double mp = rule.integrate(
      n, [&](const std::array<double, kMaxGaussianDimension>& x) {
        return std::pow(std::fabs(f.evaluate(x)), r.p);
      });
  r.lhs = std::pow(mq, 1.0 / q);
  r.rhs = std::pow(mp, 1.0 / r.p);
  r.holds = r.lhs <= r.rhs + 1e-10;
  return r;
}

double ou_integral_eval(const HermiteExpansion& f, double t,
                        const std::array<double, kMaxGaussianDimension>& x,
                        const QuadratureRule& rule) {
  if (f.dimension() > 2) {
    throw capacity_error("ou_integral_eval: dimension must be <= 2");
  }
  if (!(t >= 0.0)) {
    throw std::invalid_argument("ou_integral_eval: t must be >= 0");
  }
  const double decay = std::exp(-t);
  const double spread = std::sqrt(-std::expm1(-2.0 * t));
  return rule.integrate(
      f.dimension(), [&](const std::array<double, kMaxGaussianDimension>& y) {
        std::array<double, kMaxGaussianDimension> z{};
        for (int a = 0; a < f.dimension(); ++a) {
          z[static_cast<size_t>(a)] = decay * x[static_cast<size_t>(a)] +
                                      spread * y[static_cast<size_t>(a)];
        }
        return f.evaluate(z);
      });
}

void write_expansion(std::ostream& out, const HermiteExpansion& f) {
  out << "n=" << f.dimension() << " maxdeg=" << f.max_degree() << "\n";
  char buf[64];
  for (const auto& [alpha, c] : f.coefficients()) {
    for (int a = 0; a < f.dimension(); ++a) {
      out << static_cast<int>(alpha.deg[static_cast<size_t>(a)]) << ' ';
    }
    std::snprintf(buf, sizeof buf, "%.17g", c);
    out << buf << "\n";
  }
}

HermiteExpansion read_expansion(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1, maxdeg = -1;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (std::sscanf(line.c_str(), "n=%d maxdeg=%d", &n, &maxdeg) != 2) {
      throw parse_error("expected header 'n=<k> maxdeg=<d>'", line_no);
    }
    break;
  }
  if (n < 0) throw parse_error("missing expansion header", line_no);
  HermiteExpansion f(n, maxdeg);
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;  // blank line
    if (tokens.size() != static_cast<std::size_t>(n) + 1) {
      throw parse_error("expected " + std::to_string(n) +
                            " degrees and one coefficient",
                        line_no);
    }
    MultiIndex alpha{};
    for (int a = 0; a < n; ++a) {
      const std::string& t = tokens[static_cast<std::size_t>(a)];
      if (t.find_first_not_of("0123456789") != std::string::npos) {
        throw parse_error("expected integer degree, got '" + t + "'",
                          line_no);
      }
      int d = 0;
      try {
        d = std::stoi(t);
      } catch (const std::out_of_range&) {
        throw parse_error("degree out of range", line_no);
      }
      if (d > kMaxHermiteDegree) {
        throw parse_error("degree out of range", line_no);
      }
      alpha.deg[static_cast<size_t>(a)] = static_cast<std::uint8_t>(d);
    }
    const std::string& coeff_tok = tokens[static_cast<std::size_t>(n)];
    double c = 0.0;
    std::size_t consumed = 0;
    try {
      c = std::stod(coeff_tok, &consumed);
    } catch (const std::exception&) {
      throw parse_error("invalid coefficient '" + coeff_tok + "'", line_no);
    }
    if (consumed != coeff_tok.size()) {
      throw parse_error("invalid coefficient '" + coeff_tok + "'", line_no);
    }
    if (alpha.total() > maxdeg) {
      throw parse_error("index degree exceeds maxdeg", line_no);
    }
    f.set(alpha, c);
  }
  return f;
}

void write_expansion_file(const std::string& path,
                          const HermiteExpansion& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_expansion(out, f);
}

HermiteExpansion read_expansion_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return read_expansion(in);
}

}  // namespace boolfun
