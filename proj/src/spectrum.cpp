#include "boolfun/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "boolfun/integrate.hpp"
#include "boolfun/kernels.hpp"

namespace boolfun {
namespace {

void check_time(double t) {
  if (!(t >= 0.0))
    throw std::invalid_argument("semigroup time must be >= 0");
}

}  // namespace

FourierSpectrum::FourierSpectrum(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  if (n > kMaxDimension)
    throw capacity_error("dimension exceeds the supported maximum");
  coeffs_.assign(std::uint64_t{1} << n, 0.0);
}

FourierSpectrum::FourierSpectrum(int n, std::vector<double> coeffs)
    : FourierSpectrum(n) {
  if (coeffs.size() != coeffs_.size())
    throw std::invalid_argument("coefficient table length does not match 2^n");
  coeffs_ = std::move(coeffs);
}

double FourierSpectrum::l2_norm_sq() const {
  return kernels::active().dot(coeffs_.data(), coeffs_.data(),
                               coeffs_.size());
}

double FourierSpectrum::variance() const {
  return l2_norm_sq() - coeffs_[0] * coeffs_[0];
}

std::vector<double> FourierSpectrum::level_weights() const {
  std::vector<double> levels(n_ + 1, 0.0);
  for (std::uint64_t mask = 0; mask < size(); ++mask)
    levels[std::popcount(mask)] += coeffs_[mask] * coeffs_[mask];
  return levels;
}

FourierSpectrum fwht(const RealCubeFunction& f) {
  FourierSpectrum spec(f.n());
  std::copy(f.data(), f.data() + f.size(), spec.data());
  kernels::active().wht_forward(spec.data(), spec.size());
  kernels::active().scale(spec.data(), spec.size(),
                          1.0 / static_cast<double>(spec.size()));
  return spec;
}

RealCubeFunction inverse_fwht(const FourierSpectrum& spec) {
  RealCubeFunction f(spec.n());
  std::copy(spec.data(), spec.data() + spec.size(), f.data());
  kernels::active().wht_inverse(f.data(), f.size());
  return f;
}

RealCubeFunction bonami_beckner(const RealCubeFunction& f, double t,
                                SemigroupMethod method) {
  check_time(t);
  if (method == SemigroupMethod::spectral) {
    FourierSpectrum spec = fwht(f);
    for (std::uint64_t mask = 0; mask < spec.size(); ++mask)
      spec[mask] *= std::exp(-t * std::popcount(mask));
    return inverse_fwht(spec);
  }
  if (f.n() > kMaxIntegralMethodDimension)
    throw capacity_error("integral semigroup method supports n <= " +
                         std::to_string(kMaxIntegralMethodDimension));
  // Kernel value depends only on the number d of disagreeing coordinates:
  // 2^-n (1+e^-t)^(n-d) (1-e^-t)^d.
  double e = std::exp(-t);
  std::vector<double> kernel(f.n() + 1);
  for (int d = 0; d <= f.n(); ++d)
    kernel[d] = std::pow(1.0 + e, f.n() - d) * std::pow(1.0 - e, d) /
                static_cast<double>(f.size());
  RealCubeFunction out(f.n());
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    double acc = 0.0;
    for (std::uint64_t y = 0; y < f.size(); ++y)
      acc += f[y] * kernel[std::popcount(x ^ y)];
    out[x] = acc;
  }
  return out;
}

double SemigroupResiduals::max() const {
  return std::max(composition, std::max(invariance, reversibility));
}

SemigroupResiduals check_semigroup_laws(const RealCubeFunction& f,
                                        const RealCubeFunction& g, double s,
                                        double t) {
  if (f.n() != g.n())
    throw std::invalid_argument("semigroup law check needs matching n");
  SemigroupResiduals r;
  RealCubeFunction qt = bonami_beckner(f, t);
  RealCubeFunction qs_qt = bonami_beckner(qt, s);
  RealCubeFunction qst = bonami_beckner(f, s + t);
  r.composition =
      kernels::active().max_abs_diff(qs_qt.data(), qst.data(), f.size());
  r.invariance = std::fabs(mean(qt) - mean(f));
  RealCubeFunction qtg = bonami_beckner(g, t);
  double lhs = kernels::active().dot(qt.data(), g.data(), f.size());
  double rhs = kernels::active().dot(f.data(), qtg.data(), f.size());
  r.reversibility =
      std::fabs(lhs - rhs) / static_cast<double>(f.size());
  return r;
}

double check_commutation(const RealCubeFunction& f, int i, double t) {
  RealCubeFunction d_qt = discrete_derivative(bonami_beckner(f, t), i);
  RealCubeFunction qt_d = bonami_beckner(discrete_derivative(f, i), t);
  return kernels::active().max_abs_diff(d_qt.data(), qt_d.data(), f.size());
}

double dirichlet_form(const RealCubeFunction& f, const RealCubeFunction& g) {
  if (f.n() != g.n())
    throw std::invalid_argument("dirichlet form needs matching n");
  FourierSpectrum sf = fwht(f);
  FourierSpectrum sg = fwht(g);
  std::vector<double> weighted(sf.size());
  for (std::uint64_t mask = 0; mask < sf.size(); ++mask)
    weighted[mask] = static_cast<double>(std::popcount(mask)) * sf[mask];
  return kernels::active().dot(weighted.data(), sg.data(), sf.size());
}

DecayReport exponential_decay_check(const RealCubeFunction& g, double t) {
  check_time(t);
  if (std::fabs(mean(g)) > 1e-12)
    throw std::invalid_argument("exponential decay check requires mean zero");
  DecayReport rep;
  RealCubeFunction qt = bonami_beckner(g, t);
  rep.lhs = lp_norm_pow(qt, 2.0);
  rep.rhs = std::exp(-2.0 * t) * lp_norm_pow(g, 2.0);
  rep.holds = rep.lhs <= rep.rhs + 1e-12;
  return rep;
}

HypercontractivityReport hypercontractivity_check(const RealCubeFunction& f,
                                                  double t, double q) {
  check_time(t);
  if (!(q > 1.0))
    throw std::invalid_argument("hypercontractivity check requires q > 1");
  HypercontractivityReport rep;
  rep.t = t;
  rep.q = q;
  rep.p = 1.0 + (q - 1.0) * std::exp(-2.0 * t);
  rep.lhs = lp_norm(bonami_beckner(f, t), q);
  rep.rhs = lp_norm(f, rep.p);
  rep.holds = rep.lhs <= rep.rhs + 1e-12;
  return rep;
}

namespace {

// K(t) = sum_i ||Q_t D_i f||_2^2 = 4 sum_k k W_k e^{-2tk} from the level
// weights W.
double level_sum_k(const std::vector<double>& levels, double t) {
  double acc = 0.0;
  for (std::size_t k = 1; k < levels.size(); ++k)
    acc += 4.0 * static_cast<double>(k) * levels[k] *
           std::exp(-2.0 * t * static_cast<double>(k));
  return acc;
}

}  // namespace

VarianceRepresentationReport variance_representation_check(
    const RealCubeFunction& f) {
  VarianceRepresentationReport rep;
  FourierSpectrum spec = fwht(f);
  std::vector<double> levels = spec.level_weights();
  for (std::size_t k = 1; k < levels.size(); ++k) rep.variance += levels[k];
  for (std::size_t k = 1; k < levels.size(); ++k)
    rep.integral_closed += 4.0 * static_cast<double>(k) * levels[k] /
                           (2.0 * static_cast<double>(k));
  if (rep.variance <= 0.0) {
    rep.degenerate = true;
    return rep;
  }
  // Tail beyond t = 18 is below e^-36 times the variance.
  rep.integral_quadrature = adaptive_simpson(
      [&](double t) { return level_sum_k(levels, t); }, 0.0, 18.0,
      std::max(1e-14, 1e-12 * rep.variance));
  rep.kappa = rep.variance / rep.integral_closed;
  return rep;
}

TailIdentityReport tail_identity_check(const RealCubeFunction& f, double s) {
  check_time(s);
  TailIdentityReport rep;
  FourierSpectrum spec = fwht(f);
  std::vector<double> levels = spec.level_weights();
  rep.k_of_s = level_sum_k(levels, s);
  for (std::size_t k = 1; k < levels.size(); ++k)
    rep.t_of_s += 8.0 * static_cast<double>(k) * levels[k] *
                  std::exp(-2.0 * s * static_cast<double>(k));
  if (rep.t_of_s <= 0.0) {
    rep.degenerate = true;
    return rep;
  }
  // Integrand: sum_{i,j} ||Q_u D_ij f||_2^2 = 16 sum_k k^2 W_k e^{-2uk}.
  auto integrand = [&](double u) {
    double acc = 0.0;
    for (std::size_t k = 1; k < levels.size(); ++k)
      acc += 16.0 * static_cast<double>(k) * static_cast<double>(k) *
             levels[k] * std::exp(-2.0 * u * static_cast<double>(k));
    return acc;
  };
  double window = adaptive_simpson(integrand, s, s + 18.0,
                                   std::max(1e-14, 1e-12 * rep.t_of_s));
  // Analytic remainder beyond s + 18.
  double tail = 0.0;
  for (std::size_t k = 1; k < levels.size(); ++k)
    tail += 8.0 * static_cast<double>(k) * levels[k] *
            std::exp(-2.0 * (s + 18.0) * static_cast<double>(k));
  rep.t_of_s_quadrature = window + tail;
  rep.kappa2 = rep.k_of_s / rep.t_of_s;
  return rep;
}

FourierSpectrum read_spectrum(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  // Header.
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (tok.rfind("n=", 0) != 0)
      throw parse_error("expected header 'n=<dimension>'", line_no);
    try {
      n = std::stoi(tok.substr(2));
    } catch (const std::exception&) {
      throw parse_error("invalid dimension in header", line_no);
    }
    std::string extra;
    if (ls >> extra)
      throw parse_error("unexpected token after header", line_no);
    break;
  }
  if (n < 1) throw parse_error("missing or invalid header", line_no);
  if (n > kMaxDimension)
    throw capacity_error("dimension exceeds the supported maximum");
  FourierSpectrum spec(n);
  std::vector<bool> seen(spec.size(), false);
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string mask_tok, coeff_tok;
    if (!(ls >> mask_tok)) continue;
    if (!(ls >> coeff_tok))
      throw parse_error("expected '<mask-hex> <coeff>'", line_no);
    std::string extra;
    if (ls >> extra)
      throw parse_error("unexpected token after coefficient", line_no);
    std::uint64_t mask = 0;
    try {
      std::size_t used = 0;
      mask = std::stoull(mask_tok, &used, 16);
      if (used != mask_tok.size())
        throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw parse_error("invalid subset mask '" + mask_tok + "'", line_no);
    }
    if (mask >= spec.size())
      throw parse_error("subset mask outside the n-cube", line_no);
    double coeff = 0.0;
    try {
      std::size_t used = 0;
      coeff = std::stod(coeff_tok, &used);
      if (used != coeff_tok.size())
        throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw parse_error("invalid coefficient '" + coeff_tok + "'", line_no);
    }
    if (seen[mask])
      throw parse_error("duplicate subset mask '" + mask_tok + "'", line_no);
    seen[mask] = true;
    spec[mask] = coeff;
  }
  return spec;
}

void write_spectrum(std::ostream& out, const FourierSpectrum& spec) {
  out << "n=" << spec.n() << '\n';
  char buf[64];
  for (std::uint64_t mask = 0; mask < spec.size(); ++mask) {
    if (spec[mask] == 0.0) continue;
    std::snprintf(buf, sizeof buf, "%llx %.17g",
                  static_cast<unsigned long long>(mask), spec[mask]);
    out << buf << '\n';
  }
}

}  // namespace boolfun
