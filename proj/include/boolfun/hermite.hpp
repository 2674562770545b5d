#pragma once
// Gaussian analogue: finite expansions in orthonormal (probabilists')
// Hermite polynomials h_k = H_k / sqrt(k!), E[h_j h_k] = [j == k] under the
// standard Gaussian measure on R^n.
//
//   - partial derivatives act as ladder operators: d/dx h_k = sqrt(k) h_{k-1}
//   - the Ornstein-Uhlenbeck semigroup P_t multiplies c_alpha by
//     e^{-t |alpha|}
//   - E[d^beta f] = c_beta * sqrt(beta!), so the sum over ordered k-tuples
//     of squared derivative means equals k! * sum_{|alpha| = k} c_alpha^2
//
// Dimension is capped at 6 and degree at 16 (factorials stay exactly
// representable in double).

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "boolfun/inequalities.hpp"

namespace boolfun {

inline constexpr int kMaxGaussianDimension = 6;
inline constexpr int kMaxHermiteDegree = 16;

struct MultiIndex {
  std::array<std::uint8_t, kMaxGaussianDimension> deg{};
  auto operator<=>(const MultiIndex&) const = default;
  int total() const;
  int degree(int axis) const { return deg[static_cast<size_t>(axis - 1)]; }
};

// Value of the orthonormal Hermite polynomial h_k at x.
double hermite_value(int k, double x);

class HermiteExpansion {
 public:
  HermiteExpansion(int n, int maxdeg);

  int dimension() const { return n_; }
  int max_degree() const { return maxdeg_; }
  int degree_present() const;  // largest |alpha| with c_alpha != 0

  void set(const MultiIndex& alpha, double c);
  double coefficient(const MultiIndex& alpha) const;
  const std::map<MultiIndex, double>& coefficients() const { return coeffs_; }

  double mean() const;        // c_0
  double l2_norm_sq() const;  // sum c_alpha^2
  double variance() const;    // sum over |alpha| >= 1
  // level_weights()[k] = sum of c_alpha^2 over |alpha| = k.
  std::vector<double> level_weights() const;

  double evaluate(const std::array<double, kMaxGaussianDimension>& x) const;

 private:
  void check_index(const MultiIndex& alpha) const;

  int n_;
  int maxdeg_;
  std::map<MultiIndex, double> coeffs_;
};

// d/dx_i as a ladder operator (axis is 1-based).
HermiteExpansion hermite_partial(const HermiteExpansion& f, int axis);
// Ornstein-Uhlenbeck semigroup P_t, t >= 0.
HermiteExpansion ou_semigroup(const HermiteExpansion& f, double t);

// Deterministic test expansion: every |alpha| <= maxdeg gets a coefficient
// uniform in [-1, 1] drawn in lexicographic index order.
HermiteExpansion random_expansion(int n, int maxdeg, std::uint64_t seed);

// Sum over ordered k-tuples (i_1..i_k) of (E[d_{i_1}..d_{i_k} f])^2,
// evaluated through the coefficient identity k! * sum_{|alpha|=k} c_alpha^2.
double grad_moment(const HermiteExpansion& f, int k);
// Same quantity by explicit tuple enumeration and repeated ladder descent.
double grad_moment_oracle(const HermiteExpansion& f, int k);
// Sum over ordered k-tuples of ||d_tuple P_t f||_2^2 =
// k! * sum_alpha c_alpha^2 e^{-2t|alpha|} C(|alpha|, k).
double semigroup_grad_moment(const HermiteExpansion& f, int k, double t);

// Var(f) = sum_{k=1}^{p} (1/k!) * grad_moment(k)
//        + (2/p!) int_0^inf e^{-2t} (1-e^{-2t})^p
//                 sum_{(p+1)-tuples} ||P_t d_tuple f||_2^2 dt.
// The remainder integral is evaluated in closed form by binomial expansion.
struct TaylorReport {
  int p = 0;
  double variance = 0.0;
  double moment_sum = 0.0;
  double remainder = 0.0;
  double residual = 0.0;  // |variance - moment_sum - remainder|
};
TaylorReport variance_taylor_check(const HermiteExpansion& f, int p);

// a_k(t) = (2/k!) e^{-2t} (1-e^{-2t})^k; checks the recursion
// a_k(t) = a_0(t) * int_0^t a_{k-1}(u) du and the scalar identity
// a_k = int_0^inf a_{k-1}(t) dt = 1/k! (so a_1 = 1, a_2 = 1/2, ...).
double a_k_value(int k, double t);
struct AkReport {
  int k_max = 0;
  double max_recursion_residual = 0.0;
  double max_integral_residual = 0.0;
};
AkReport a_k_coefficients_check(int k_max);

// Var(f) <= sum_i ||d_i f||_2^2 (spectral form; equality iff degree <= 1).
struct InversePoincareReport {
  double variance = 0.0;
  double grad_sq = 0.0;
  bool holds = false;
  bool equality = false;
};
InversePoincareReport inverse_poincare_check(const HermiteExpansion& f);

// Gauss-Hermite quadrature for the standard Gaussian measure.
class QuadratureRule {
 public:
  static QuadratureRule make(int order);  // 1 <= order <= 40
  int order() const { return static_cast<int>(nodes_.size()); }
  int exact_degree() const { return 2 * order() - 1; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  // Tensor-product integral over R^n; order()^n points (capacity-guarded).
  double integrate(
      int n,
      const std::function<double(
          const std::array<double, kMaxGaussianDimension>&)>& f) const;
  double l1_norm(const HermiteExpansion& f) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};
inline constexpr int kDefaultQuadratureOrder = 24;
inline constexpr std::uint64_t kMaxQuadraturePoints = 20'000'000;

// lhs = Var(f) - sum_{k<=p} (1/k!) |E grad^k f|^2,
// rhs = sum over ordered (p+1)-tuples of
//       ||d_tuple f||_2^2 / (1 + log(||d_tuple f||_2 / ||d_tuple f||_1))^{p+1}.
// L2 norms come from coefficients, L1 norms from quadrature; the rule must
// be exact through degree 2 * degree_present.
InequalityReport gaussian_talagrand_report(const HermiteExpansion& f, int p,
                                           const QuadratureRule& rule);

// Hypercontractive spot check: ||P_t f||_q <= ||f||_p, p = 1+(q-1)e^{-2t}.
struct NelsonReport {
  double t = 0.0, q = 0.0, p = 0.0;
  double lhs = 0.0, rhs = 0.0;
  bool holds = false;
};
NelsonReport nelson_check(const HermiteExpansion& f, double t, double q,
                          const QuadratureRule& rule);

// Oracle for P_t f(x) via the Mehler representation
// P_t f(x) = E_y[f(e^{-t} x + sqrt(1-e^{-2t}) y)]; dimension <= 2.
double ou_integral_eval(const HermiteExpansion& f, double t,
                        const std::array<double, kMaxGaussianDimension>& x,
                        const QuadratureRule& rule);

// Text format: header "n=<k> maxdeg=<d>", then one line per coefficient:
// n degree entries followed by the value.
void write_expansion(std::ostream& out, const HermiteExpansion& f);
HermiteExpansion read_expansion(std::istream& in);
void write_expansion_file(const std::string& path, const HermiteExpansion& f);
HermiteExpansion read_expansion_file(const std::string& path);

}  // namespace boolfun
