#pragma once
// Walsh expansion and the noise semigroup.
//
// Characters are indexed by subset masks S (bit i-1 represents coordinate i)
// and evaluated as chi_S(x) = prod_{i in S} x_i; with the table convention
// of cube.hpp this is (-1)^(|S| - popcount(S & x)).  Coefficients are taken
// in the orthonormal basis under the uniform measure:
//   coeff(S) = 2^-n sum_x f(x) chi_S(x).
// The noise operator Q_t acts diagonally, multiplying coeff(S) by
// exp(-t |S|); its generator L satisfies L chi_S = -|S| chi_S with
// L = (1/2) sum_i D_i.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "boolfun/cube.hpp"

namespace boolfun {

class FourierSpectrum {
 public:
  FourierSpectrum() = default;
  explicit FourierSpectrum(int n);
  FourierSpectrum(int n, std::vector<double> coeffs);

  int n() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  double operator[](std::uint64_t mask) const { return coeffs_[mask]; }
  double& operator[](std::uint64_t mask) { return coeffs_[mask]; }
  const double* data() const { return coeffs_.data(); }
  double* data() { return coeffs_.data(); }

  double mean() const { return coeffs_[0]; }
  double l2_norm_sq() const;             // sum of squared coefficients
  double variance() const;               // excludes the empty set
  // Weight at each level: level_weights()[k] = sum_{|S|=k} coeff(S)^2.
  std::vector<double> level_weights() const;

 private:
  int n_ = 0;
  std::vector<double> coeffs_;
};

FourierSpectrum fwht(const RealCubeFunction& f);
RealCubeFunction inverse_fwht(const FourierSpectrum& spec);

enum class SemigroupMethod { spectral, integral };

// Q_t f.  The spectral method multiplies coefficients by exp(-t|S|) for any
// supported n; the integral method evaluates the kernel representation
//   Q_t f(x) = 2^-n sum_y f(y) prod_i (1 + e^-t x_i y_i)
// directly (O(4^n) work, capped at n <= 10).  t must be >= 0.
RealCubeFunction bonami_beckner(const RealCubeFunction& f, double t,
                                SemigroupMethod method =
                                    SemigroupMethod::spectral);
inline constexpr int kMaxIntegralMethodDimension = 10;

struct SemigroupResiduals {
  double composition = 0.0;    // Q_s Q_t f vs Q_{s+t} f   (sup norm)
  double invariance = 0.0;     // |mean(Q_t f) - mean(f)|
  double reversibility = 0.0;  // |<Q_t f, g> - <f, Q_t g>|
  double max() const;
};
SemigroupResiduals check_semigroup_laws(const RealCubeFunction& f,
                                        const RealCubeFunction& g, double s,
                                        double t);

// sup norm of D_i(Q_t f) - Q_t(D_i f).
double check_commutation(const RealCubeFunction& f, int i, double t);

// E(f,g) = sum_S |S| coeff_f(S) coeff_g(S) = (1/4) sum_i E[D_i f D_i g].
double dirichlet_form(const RealCubeFunction& f, const RealCubeFunction& g);

struct DecayReport {
  double lhs = 0.0;  // ||Q_t g||_2^2
  double rhs = 0.0;  // e^{-2t} ||g||_2^2
  bool holds = false;
};
// Requires mean(g) = 0 (tolerance 1e-12), else std::invalid_argument.
DecayReport exponential_decay_check(const RealCubeFunction& g, double t);

struct HypercontractivityReport {
  double t = 0.0, q = 0.0, p = 0.0;  // p = 1 + (q-1) e^{-2t}
  double lhs = 0.0;                  // ||Q_t f||_q
  double rhs = 0.0;                  // ||f||_p
  bool holds = false;
};
HypercontractivityReport hypercontractivity_check(const RealCubeFunction& f,
                                                  double t, double q);

// Variance via the semigroup: with K(t) = sum_i ||Q_t D_i f||_2^2
// = 4 sum_S |S| coeff(S)^2 e^{-2t|S|}, the integral J = int_0^inf K equals
// 2 Var(f), so kappa = Var(f) / J = 1/2 for every non-constant f.  The
// closed form evaluates the level sums exactly; the quadrature field
// integrates K numerically as a cross-check.
struct VarianceRepresentationReport {
  double variance = 0.0;
  double integral_closed = 0.0;
  double integral_quadrature = 0.0;
  double kappa = 0.0;  // variance / integral_closed
  bool degenerate = false;
};
VarianceRepresentationReport variance_representation_check(
    const RealCubeFunction& f);

// Tail of the same integral from s, against the second-order term
//   T(s) = sum_{i,j} int_s^inf ||Q_u D_ij f||_2^2 du
//        = 8 sum_S |S| coeff(S)^2 e^{-2s|S|}  =  2 K(s),
// so kappa2 = K(s) / T(s) = 1/2 whenever T(s) > 0.
struct TailIdentityReport {
  double k_of_s = 0.0;
  double t_of_s = 0.0;
  double t_of_s_quadrature = 0.0;
  double kappa2 = 0.0;
  bool degenerate = false;
};
TailIdentityReport tail_identity_check(const RealCubeFunction& f, double s);

// Spectrum text format: header "n=<k>", then one "<mask-hex> <coeff>" pair
// per nonzero coefficient.
FourierSpectrum read_spectrum(std::istream& in);
void write_spectrum(std::ostream& out, const FourierSpectrum& spec);

}  // namespace boolfun
