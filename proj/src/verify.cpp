#include "boolfun/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "boolfun/cube.hpp"
#include "boolfun/hermite.hpp"
#include "boolfun/inequalities.hpp"
#include "boolfun/rng.hpp"
#include "boolfun/spectrum.hpp"
#include "boolfun/zoo.hpp"

namespace boolfun {

int VerifySummary::passed() const {
  int count = 0;
  for (const auto& c : checks) count += c.passed ? 1 : 0;
  return count;
}

int VerifySummary::failed() const {
  return static_cast<int>(checks.size()) - passed();
}

namespace {

// Tracks the worst residual seen by one check, with a note on where.
struct Track {
  bool any = false;
  double worst = 0.0;
  std::string detail;
  void update(double value, const std::string& where) {
    if (!any || value > worst) {
      worst = value;
      detail = where;
    }
    any = true;
  }
};

CheckResult make_check(const std::string& name, const Track& t,
                       double threshold, const std::string& repro) {
  CheckResult c;
  c.name = name;
  c.worst = t.any ? t.worst : 0.0;
  c.threshold = threshold;
  c.passed = c.worst <= threshold;
  c.detail = t.any ? t.detail : "(no cases)";
  c.repro = repro;
  return c;
}

std::string verify_repro(const std::string& suite, const VerifyOptions& o) {
  std::ostringstream out;
  out << "boolfun verify --suite " << suite << " --n-max " << o.n_max
      << " --seed " << o.seed;
  if (o.inject_fault) out << " --inject-fault";
  return out.str();
}

RealCubeFunction random_real(int n, SplitMix64& rng) {
  RealCubeFunction f(n);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    f[x] = 2.0 * rng.next_unit() - 1.0;
  }
  return f;
}

// g(x) = f(sigma(x)) where bit perm[i] of sigma(x) equals bit i of x; any
// relabeling of coordinates leaves every ratio invariant.
BooleanFunction permute_coordinates(const BooleanFunction& f,
                                    const std::vector<int>& perm) {
  BooleanFunction g(f.n());
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    std::uint64_t y = 0;
    for (int b = 0; b < f.n(); ++b) {
      if ((x >> b) & 1) y |= std::uint64_t{1} << perm[static_cast<size_t>(b)];
    }
    g.set(y, f.value(x));
  }
  return g;
}

double double_factorial_odd(int m) {  // (2m-1)!! with (-1)!! = 1
  double value = 1.0;
  for (int j = 1; j <= m; ++j) value *= 2.0 * j - 1.0;
  return value;
}

}  // namespace

VerifySummary verify_identities(const VerifyOptions& opts) {
  VerifySummary summary;
  summary.suite = "identities";
  const std::string repro = verify_repro("identities", opts);
  SplitMix64 rng(opts.seed);

  Track roundtrip, parseval, derivative, laplacian;
  Track methods, laws, commutation, dirichlet, decay;
  const int n_top = std::clamp(opts.n_max, 2, 12);
  for (int n = 2; n <= n_top; n += 2) {
    for (int rep = 0; rep < 3; ++rep) {
      const std::string where =
          "random real table n=" + std::to_string(n) + " rep " +
          std::to_string(rep);
      const RealCubeFunction f = random_real(n, rng);
      const FourierSpectrum spec = fwht(f);
      const RealCubeFunction back = inverse_fwht(spec);
      double diff = 0.0;
      for (std::uint64_t x = 0; x < f.size(); ++x) {
        diff = std::max(diff, std::fabs(back[x] - f[x]));
      }
      roundtrip.update(diff, where);
      parseval.update(std::fabs(lp_norm_pow(f, 2.0) - spec.l2_norm_sq()),
                      where);

      for (const int i : {1, n}) {
        const FourierSpectrum dspec = fwht(discrete_derivative(f, i));
        double dd = 0.0;
        for (std::uint64_t s = 0; s < spec.size(); ++s) {
          const bool in_s = (s >> (i - 1)) & 1;
          const double expected = in_s ? -2.0 * spec[s] : 0.0;
          dd = std::max(dd, std::fabs(dspec[s] - expected));
        }
        derivative.update(dd, where + " i=" + std::to_string(i));
      }

      {
        RealCubeFunction lf(n);
        for (int i = 1; i <= n; ++i) {
          const RealCubeFunction d = discrete_derivative(f, i);
          for (std::uint64_t x = 0; x < f.size(); ++x) lf[x] += 0.5 * d[x];
        }
        const FourierSpectrum lspec = fwht(lf);
        double ld = 0.0;
        for (std::uint64_t s = 0; s < spec.size(); ++s) {
          const double expected =
              -static_cast<double>(std::popcount(s)) * spec[s];
          ld = std::max(ld, std::fabs(lspec[s] - expected));
        }
        laplacian.update(ld, where);
      }

      if (n <= 8) {
        for (const double t : {0.1, 0.5, 1.0, 2.0}) {
          const RealCubeFunction a =
              bonami_beckner(f, t, SemigroupMethod::spectral);
          const RealCubeFunction b =
              bonami_beckner(f, t, SemigroupMethod::integral);
          double md = 0.0;
          for (std::uint64_t x = 0; x < f.size(); ++x) {
            md = std::max(md, std::fabs(a[x] - b[x]));
          }
          methods.update(md, where + " t=" + std::to_string(t));
        }
      }

      const RealCubeFunction g = random_real(n, rng);
      laws.update(check_semigroup_laws(f, g, 0.3, 0.7).max(), where);
      commutation.update(check_commutation(f, 1, 0.5), where);

      {
        const FourierSpectrum gspec = fwht(g);
        double spectral_side = 0.0;
        for (std::uint64_t s = 0; s < spec.size(); ++s) {
          spectral_side +=
              static_cast<double>(std::popcount(s)) * spec[s] * gspec[s];
        }
        dirichlet.update(std::fabs(spectral_side - dirichlet_form(f, g)),
                         where);
      }

      {
        RealCubeFunction centered = f;
        const double mu = mean(f);
        for (std::uint64_t x = 0; x < f.size(); ++x) centered[x] -= mu;
        for (const double t : {0.2, 1.0}) {
          const DecayReport d = exponential_decay_check(centered, t);
          decay.update(std::max(0.0, d.lhs - d.rhs),
                       where + " t=" + std::to_string(t));
        }
      }
    }
  }
  summary.checks.push_back(make_check("walsh_roundtrip", roundtrip, 1e-10,
                                      repro));
  summary.checks.push_back(make_check("parseval", parseval, 1e-10, repro));
  summary.checks.push_back(
      make_check("derivative_spectrum", derivative, 1e-12, repro));
  summary.checks.push_back(
      make_check("laplacian_eigenvalues", laplacian, 1e-12, repro));
  summary.checks.push_back(
      make_check("semigroup_methods_agree", methods, 1e-10, repro));
  summary.checks.push_back(make_check("semigroup_laws", laws, 1e-10, repro));
  summary.checks.push_back(
      make_check("semigroup_commutes_with_derivatives", commutation, 1e-12,
                 repro));
  summary.checks.push_back(
      make_check("dirichlet_form_identity", dirichlet, 1e-11, repro));
  summary.checks.push_back(
      make_check("exponential_decay", decay, 1e-12, repro));

  // Influence identities: the bit-sliced path must match the real-table
  // norms exactly (all quantities are dyadic rationals).
  Track inf_first, inf_pair;
  for (int n = 2; n <= std::min(opts.n_max, 10); ++n) {
    const BooleanFunction f =
        zoo::random_boolean(n, 0.5, opts.seed + static_cast<unsigned>(n));
    const RealCubeFunction fr = f.to_real();
    for (int i = 1; i <= n; ++i) {
      const RealCubeFunction d = discrete_derivative(fr, i);
      const double l1 = lp_norm_pow(d, 1.0);
      const double l2 = lp_norm_pow(d, 2.0);
      const double where_v = std::fabs(influence(f, i) - l1);
      inf_first.update(std::max(where_v, std::fabs(influence(f, i) - l2)),
                       "n=" + std::to_string(n) + " i=" + std::to_string(i));
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const double real_path =
            0.5 * lp_norm_pow(second_derivative(fr, i, j), 1.0);
        inf_pair.update(std::fabs(pair_influence(f, i, j) - real_path),
                        "n=" + std::to_string(n) + " (" + std::to_string(i) +
                            "," + std::to_string(j) + ")");
      }
    }
  }
  summary.checks.push_back(
      make_check("influence_bit_vs_real", inf_first, 0.0, repro));
  summary.checks.push_back(
      make_check("pair_influence_bit_vs_real", inf_pair, 0.0, repro));

  // Variance representation (kappa) and its tail form (kappa2).
  Track kappa, kappa_quad, kappa2, kappa2_quad;
  std::vector<std::pair<std::string, BooleanFunction>> members =
      zoo::corpus(std::min(opts.n_max, 10));
  for (int rep = 0; rep < 20; ++rep) {
    int n = 2 + static_cast<int>(rng.next_below(9));
    n = std::min(n, std::max(2, opts.n_max));
    members.emplace_back(
        "random@n=" + std::to_string(n),
        zoo::random_boolean(n, 0.5,
                            opts.seed + 100 + static_cast<unsigned>(rep)));
  }
  for (const auto& [name, f] : members) {
    if (f.is_constant()) continue;
    const RealCubeFunction fr = f.to_real();
    const VarianceRepresentationReport v = variance_representation_check(fr);
    kappa.update(std::fabs(v.kappa - 0.5), name);
    kappa_quad.update(std::fabs(v.integral_closed - v.integral_quadrature),
                      name);
    for (const double s : {0.0, 0.3, 1.0}) {
      const TailIdentityReport t = tail_identity_check(fr, s);
      kappa2.update(std::fabs(t.kappa2 - 0.5),
                    name + " s=" + std::to_string(s));
      kappa2_quad.update(std::fabs(t.t_of_s - t.t_of_s_quadrature),
                         name + " s=" + std::to_string(s));
    }
  }
  summary.checks.push_back(make_check("kappa_is_half", kappa, 1e-8, repro));
  summary.checks.push_back(
      make_check("kappa_quadrature_agrees", kappa_quad, 1e-6, repro));
  summary.checks.push_back(make_check("kappa2_is_half", kappa2, 1e-8, repro));
  summary.checks.push_back(
      make_check("kappa2_quadrature_agrees", kappa2_quad, 1e-6, repro));

  // Hypercontractivity spot battery.
  Track hyper;
  const int hn = std::clamp(std::min(opts.n_max, 8), 2, 8);
  for (int rep = 0; rep < 50; ++rep) {
    const RealCubeFunction f = rep % 2 == 0
                                   ? random_real(hn, rng)
                                   : zoo::random_boolean(
                                         hn, 0.5, opts.seed + 500 + rep)
                                         .to_real();
    for (const double t : {0.1, 0.5, 1.0}) {
      for (const double q : {2.0, 3.0, 4.0}) {
        const HypercontractivityReport h = hypercontractivity_check(f, t, q);
        hyper.update(std::max(0.0, h.lhs - h.rhs),
                     "rep " + std::to_string(rep) + " t=" +
                         std::to_string(t) + " q=" + std::to_string(q));
      }
    }
  }
  summary.checks.push_back(
      make_check("hypercontractivity", hyper, 1e-12, repro));
  return summary;
}

VerifySummary verify_inequalities(const VerifyOptions& opts) {
  VerifySummary summary;
  summary.suite = "inequalities";
  const std::string repro = verify_repro("inequalities", opts);
  SplitMix64 rng(opts.seed);

  // Exhaustive over every table at small n.
  Track poincare_bound, denom_first, denom_pair, norm_equiv, finite;
  for (int n = 2; n <= std::min(opts.n_max, 4); ++n) {
    const std::uint64_t tables = std::uint64_t{1} << (std::uint64_t{1} << n);
    for (std::uint64_t bits = 0; bits < tables; ++bits) {
      const BooleanFunction f = BooleanFunction::from_bits(n, bits);
      const std::string where =
          "n=" + std::to_string(n) + " table=" + std::to_string(bits);
      const RealCubeFunction fr = f.to_real();
      const InequalityReport p = poincare_report(fr);
      poincare_bound.update(p.ratio - 1.0, where);

      for (int i = 1; i <= n; ++i) {
        const RealCubeFunction d = discrete_derivative(fr, i);
        const double l1 = lp_norm_pow(d, 1.0);
        const double l2 = std::sqrt(lp_norm_pow(d, 2.0));
        denom_first.update(l1 - l2, where + " i=" + std::to_string(i));
      }
      const InequalityReport t1 = talagrand1_report(fr);
      const InequalityReport t2 = talagrand2_report(fr, opts.s0);
      if (!std::isfinite(t1.ratio) || !std::isfinite(t2.ratio)) {
        finite.update(1.0, where);
      }
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const RealCubeFunction d = second_derivative(fr, i, j);
          const double l1 = lp_norm_pow(d, 1.0);
          const double l2 = std::sqrt(lp_norm_pow(d, 2.0));
          denom_pair.update(l1 - l2,
                            where + " pair=" + std::to_string(i) + "," +
                                std::to_string(j));
          const NormEquivalenceReport ne = norm_equivalence_check(f, i, j);
          norm_equiv.update(std::max(ne.l1 - ne.l2_sq,
                                     ne.l2_sq - 2.0 * ne.l1),
                            where);
        }
      }
    }
  }
  summary.checks.push_back(
      make_check("poincare_ratio_at_most_one_exhaustive", poincare_bound,
                 1e-12, repro));
  summary.checks.push_back(
      make_check("first_order_denominators_exhaustive", denom_first, 1e-15,
                 repro));
  summary.checks.push_back(
      make_check("second_order_denominators_exhaustive", denom_pair, 1e-15,
                 repro));
  summary.checks.push_back(
      make_check("norm_equivalence_exhaustive", norm_equiv, 1e-12, repro));
  summary.checks.push_back(
      make_check("ratios_finite_exhaustive", finite, 0.0, repro));

  // Random battery at n in {6, 8, 10}.
  Track poincare_rand, denom_rand, relabel, norm_rand, hyp_rand, finite_rand;
  for (const int n : {6, 8, 10}) {
    if (n > opts.n_max) continue;
    for (int rep = 0; rep < opts.random_tables; ++rep) {
      const BooleanFunction f = zoo::random_boolean(
          n, 0.5, opts.seed + 10007 * static_cast<unsigned>(n) +
                      static_cast<unsigned>(rep));
      const std::string where =
          "n=" + std::to_string(n) + " rep=" + std::to_string(rep);
      const RealCubeFunction fr = f.to_real();
      poincare_rand.update(poincare_report(fr).ratio - 1.0, where);
      const InequalityReport t1 = talagrand1_report(fr);
      const InequalityReport t2 = talagrand2_report(fr, opts.s0);
      if (!std::isfinite(t1.ratio) || !std::isfinite(t2.ratio)) {
        finite_rand.update(1.0, where);
      }
      if (rep % 500 == 0) {
        for (int i = 1; i <= n; ++i) {
          const RealCubeFunction d = discrete_derivative(fr, i);
          denom_rand.update(
              lp_norm_pow(d, 1.0) - std::sqrt(lp_norm_pow(d, 2.0)), where);
        }
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (int b = n - 1; b > 0; --b) {
          std::swap(perm[static_cast<size_t>(b)],
                    perm[rng.next_below(static_cast<std::uint64_t>(b) + 1)]);
        }
        const BooleanFunction g = permute_coordinates(f, perm);
        const RealCubeFunction gr = g.to_real();
        relabel.update(
            std::fabs(talagrand1_report(gr).ratio - t1.ratio), where);
        relabel.update(
            std::fabs(talagrand2_report(gr, opts.s0).ratio - t2.ratio),
            where);
        const NormEquivalenceReport ne = norm_equivalence_check(f, 1, 2);
        norm_rand.update(
            std::max(ne.l1 - ne.l2_sq, ne.l2_sq - 2.0 * ne.l1), where);
      }
      if (rep % 2000 == 0) {
        const HypBoundReport hb = hypercontractive_bound_check(fr, 1, 2);
        if (!hb.degenerate) {
          hyp_rand.update(hb.integral - hb.majorant, where);
        }
      }
    }
  }
  summary.checks.push_back(
      make_check("poincare_ratio_at_most_one_random", poincare_rand, 1e-12,
                 repro));
  summary.checks.push_back(
      make_check("denominators_random", denom_rand, 1e-15, repro));
  summary.checks.push_back(
      make_check("relabeling_invariance", relabel, 1e-10, repro));
  summary.checks.push_back(
      make_check("norm_equivalence_random", norm_rand, 1e-12, repro));
  summary.checks.push_back(
      make_check("hypercontractive_bound_random", hyp_rand, 1e-12, repro));
  summary.checks.push_back(
      make_check("ratios_finite_random", finite_rand, 0.0, repro));

  // Zoo corpus: reports stay sound at every size.
  Track zoo_sound, kkl_positive, alt_consistent;
  for (const auto& [name, f] : zoo::corpus(std::min(opts.n_max, 16))) {
    const RealCubeFunction fr = f.to_real();
    const InequalityReport t1 = talagrand1_report(fr);
    const InequalityReport t2 = talagrand2_report(fr, opts.s0);
    const InequalityReport p = poincare_report(fr);
    double bad = 0.0;
    if (!std::isfinite(t1.ratio) || !std::isfinite(t2.ratio) ||
        !std::isfinite(p.ratio)) {
      bad = 1.0;
    }
    zoo_sound.update(std::max(bad, p.ratio - 1.0), name);
    if (!f.is_constant()) {
      const InequalityReport k = kkl_report(f);
      kkl_positive.update(1e-6 - k.ratio, name);
      const AlternativeReport a = corollary_alternative_report(f, opts.s0);
      double residual = 0.0;
      if (a.branch != 1 && a.branch != 2) residual = 1.0;
      if (!(a.c1 >= 0.0) || !(a.c2 >= 0.0)) residual = 1.0;
      const double c1_back =
          a.c1 * std::pow(a.variance / a.n, 1.0 / (1.0 + a.eta));
      residual = std::max(residual, std::fabs(c1_back - a.max_influence));
      alt_consistent.update(residual, name);
    }
  }
  summary.checks.push_back(make_check("zoo_reports_sound", zoo_sound, 1e-12,
                                      repro));
  summary.checks.push_back(
      make_check("kkl_ratio_positive", kkl_positive, 0.0, repro));
  summary.checks.push_back(
      make_check("alternative_report_consistent", alt_consistent, 1e-10,
                 repro));

  // First sum of the second-order report is monotone in s0.
  Track monotone;
  {
    const std::vector<std::pair<std::string, BooleanFunction>> cases = {
        {"tribes(2,2)", zoo::tribes(2, 2, 4)},
        {"majority(5)", zoo::majority(5)},
        {"random(6)", zoo::random_boolean(6, 0.5, opts.seed + 77)}};
    const double grid[] = {1.0 / 1024, 1.0 / 512, 1.0 / 256, 1.0 / 192,
                           1.0 / 130};
    for (const auto& [name, f] : cases) {
      const RealCubeFunction fr = f.to_real();
      double prev = 0.0;
      bool have_prev = false;
      for (const double s0 : grid) {
        const InequalityReport t2 = talagrand2_report(fr, s0);
        const double first_sum = t2.params.at("first_sum");
        if (have_prev) {
          monotone.update(first_sum - prev,
                          name + " s0=" + std::to_string(s0));
        }
        prev = first_sum;
        have_prev = true;
      }
    }
  }
  summary.checks.push_back(
      make_check("first_sum_monotone_in_s0", monotone, 1e-12, repro));

  // Exact dictator report; when fault injection is on, one table bit is
  // corrupted and this check must fail (battery detects bad data).
  Track dictator_exact;
  {
    BooleanFunction f = zoo::dictator(4, 1);
    if (opts.inject_fault) f.set(0, !f.value(0));
    const InequalityReport p = poincare_report(f.to_real());
    dictator_exact.update(std::fabs(p.ratio - 1.0),
                          opts.inject_fault ? "corrupted dictator table"
                                            : "dictator n=4");
  }
  summary.checks.push_back(
      make_check("dictator_poincare_exact", dictator_exact, 1e-9, repro));

  // Search smoke test: the greedy climb must rediscover a high-ratio table.
  Track search_track;
  {
    const SearchResult sr =
        constant_search(4, InequalityId::talagrand1, 400, opts.seed, opts.s0);
    search_track.update(0.2 - sr.best_ratio,
                        "best_ratio=" + std::to_string(sr.best_ratio));
  }
  summary.checks.push_back(
      make_check("constant_search_smoke", search_track, 0.0, repro));
  return summary;
}

VerifySummary verify_gaussian(const VerifyOptions& opts) {
  VerifySummary summary;
  summary.suite = "gaussian";
  const std::string repro = verify_repro("gaussian", opts);
  const QuadratureRule rule = QuadratureRule::make(kDefaultQuadratureOrder);

  Track moments;
  for (int m = 0; m <= 10; ++m) {
    const double got = rule.integrate(
        1, [m](const std::array<double, kMaxGaussianDimension>& x) {
          return std::pow(x[0], 2 * m);
        });
    const double want = double_factorial_odd(m);
    moments.update(std::fabs(got - want) / want, "moment 2m=" +
                                                     std::to_string(2 * m));
  }
  summary.checks.push_back(
      make_check("quadrature_even_moments", moments, 1e-12, repro));

  Track ortho;
  for (int j = 0; j <= 8; ++j) {
    for (int k = 0; k <= 8; ++k) {
      const double got = rule.integrate(
          1, [j, k](const std::array<double, kMaxGaussianDimension>& x) {
            return hermite_value(j, x[0]) * hermite_value(k, x[0]);
          });
      ortho.update(std::fabs(got - (j == k ? 1.0 : 0.0)),
                   "(" + std::to_string(j) + "," + std::to_string(k) + ")");
    }
  }
  summary.checks.push_back(
      make_check("hermite_orthonormality", ortho, 1e-12, repro));

  // Integration by parts: E[(d_1 f) g] = E[f (x_1 g - d_1 g)].
  Track ibp;
  {
    const HermiteExpansion f = random_expansion(2, 5, opts.seed + 1);
    const HermiteExpansion g = random_expansion(2, 5, opts.seed + 2);
    const HermiteExpansion df = hermite_partial(f, 1);
    const HermiteExpansion dg = hermite_partial(g, 1);
    const double lhs = rule.integrate(
        2, [&](const std::array<double, kMaxGaussianDimension>& x) {
          return df.evaluate(x) * g.evaluate(x);
        });
    const double rhs = rule.integrate(
        2, [&](const std::array<double, kMaxGaussianDimension>& x) {
          return f.evaluate(x) * (x[0] * g.evaluate(x) - dg.evaluate(x));
        });
    ibp.update(std::fabs(lhs - rhs), "n=2 deg=5");
  }
  summary.checks.push_back(
      make_check("ladder_integration_by_parts", ibp, 1e-10, repro));

  Track grad_match, semi_grad;
  for (int n = 1; n <= 3; ++n) {
    const HermiteExpansion f =
        random_expansion(n, 4, opts.seed + 10 + static_cast<unsigned>(n));
    for (int k = 1; k <= 3; ++k) {
      grad_match.update(
          std::fabs(grad_moment(f, k) - grad_moment_oracle(f, k)),
          "n=" + std::to_string(n) + " k=" + std::to_string(k));
      for (const double t : {0.0, 0.4}) {
        // Oracle: enumerate ordered tuples of ladder descents on P_t f.
        const HermiteExpansion pf = ou_semigroup(f, t);
        std::vector<int> tuple(static_cast<size_t>(k), 1);
        double total = 0.0;
        while (true) {
          HermiteExpansion g = pf;
          for (const int axis : tuple) g = hermite_partial(g, axis);
          total += g.l2_norm_sq();
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
        semi_grad.update(std::fabs(semigroup_grad_moment(f, k, t) - total),
                         "n=" + std::to_string(n) + " k=" +
                             std::to_string(k) + " t=" + std::to_string(t));
      }
    }
  }
  summary.checks.push_back(
      make_check("grad_moment_identity_vs_oracle", grad_match, 1e-10, repro));
  summary.checks.push_back(
      make_check("semigroup_grad_moment_vs_oracle", semi_grad, 1e-10, repro));

  Track taylor, taylor_tail, worked;
  {
    SplitMix64 rng(opts.seed + 99);
    for (int rep = 0; rep < 20; ++rep) {
      const int n = 1 + static_cast<int>(rng.next_below(3));
      const HermiteExpansion f = random_expansion(n, 5, rng.next());
      const std::vector<double> levels = f.level_weights();
      for (int p = 1; p <= 3; ++p) {
        const TaylorReport r = variance_taylor_check(f, p);
        taylor.update(r.residual, "rep=" + std::to_string(rep) + " p=" +
                                      std::to_string(p));
        double tail = 0.0;
        for (size_t a = static_cast<size_t>(p) + 1; a < levels.size(); ++a) {
          tail += levels[a];
        }
        taylor_tail.update(std::fabs(r.remainder - tail),
                           "rep=" + std::to_string(rep) + " p=" +
                               std::to_string(p));
      }
    }
    // x1 x2: moments vanish, remainder is exactly the level-2 weight 1.
    HermiteExpansion prod(2, 4);
    MultiIndex a11{};
    a11.deg[0] = 1;
    a11.deg[1] = 1;
    prod.set(a11, 1.0);
    const TaylorReport r1 = variance_taylor_check(prod, 1);
    worked.update(std::fabs(r1.moment_sum - 0.0), "x1x2 moment");
    worked.update(std::fabs(r1.remainder - 1.0), "x1x2 remainder");
    // x1: everything is captured at order 1.
    HermiteExpansion lin(1, 2);
    MultiIndex a1{};
    a1.deg[0] = 1;
    lin.set(a1, 1.0);
    const TaylorReport r2 = variance_taylor_check(lin, 1);
    worked.update(std::fabs(r2.moment_sum - 1.0), "x1 moment");
    worked.update(std::fabs(r2.remainder - 0.0), "x1 remainder");
    // x1^2 = sqrt(2) h_2 + 1: grad_moment(2) = 4.
    HermiteExpansion sq(1, 2);
    MultiIndex a2{};
    a2.deg[0] = 2;
    sq.set(a2, std::sqrt(2.0));
    sq.set(MultiIndex{}, 1.0);
    worked.update(std::fabs(grad_moment(sq, 2) - 4.0), "x1^2 grad_moment");
    // h_3: the third derivative has mean sqrt(6).
    HermiteExpansion cyc(1, 3);
    MultiIndex a3{};
    a3.deg[0] = 3;
    cyc.set(a3, 1.0);
    HermiteExpansion d3 = cyc;
    for (int r = 0; r < 3; ++r) d3 = hermite_partial(d3, 1);
    worked.update(std::fabs(d3.mean() - std::sqrt(6.0)), "h3 third ladder");
  }
  summary.checks.push_back(
      make_check("variance_taylor_residual", taylor, 1e-9, repro));
  summary.checks.push_back(
      make_check("taylor_remainder_equals_tail", taylor_tail, 1e-10, repro));
  summary.checks.push_back(
      make_check("worked_examples", worked, 1e-12, repro));

  {
    const AkReport ak = a_k_coefficients_check(10);
    Track rec, mass;
    rec.update(ak.max_recursion_residual, "k<=10");
    mass.update(ak.max_integral_residual, "k<=10");
    summary.checks.push_back(
        make_check("a_k_recursion", rec, 1e-8, repro));
    summary.checks.push_back(
        make_check("a_k_total_mass", mass, 1e-8, repro));
  }

  Track inv;
  {
    for (int n = 1; n <= 3; ++n) {
      const HermiteExpansion f =
          random_expansion(n, 4, opts.seed + 300 + static_cast<unsigned>(n));
      const InversePoincareReport r = inverse_poincare_check(f);
      inv.update(std::max(0.0, r.variance - r.grad_sq),
                 "random n=" + std::to_string(n));
    }
    HermiteExpansion deg1(2, 3);
    MultiIndex e1{}, e2{};
    e1.deg[0] = 1;
    e2.deg[1] = 1;
    deg1.set(e1, 0.7);
    deg1.set(e2, -0.3);
    const InversePoincareReport r1 = inverse_poincare_check(deg1);
    if (!r1.equality || !r1.holds) inv.update(1.0, "degree-1 equality");
    MultiIndex e22{};
    e22.deg[1] = 2;
    deg1.set(e22, 0.5);
    const InversePoincareReport r2 = inverse_poincare_check(deg1);
    if (r2.equality || !r2.holds) inv.update(1.0, "degree-2 strict");
  }
  summary.checks.push_back(
      make_check("inverse_poincare", inv, 1e-12, repro));

  Track ou_law, ou_oracle;
  {
    const HermiteExpansion f = random_expansion(2, 4, opts.seed + 400);
    const HermiteExpansion a = ou_semigroup(ou_semigroup(f, 0.3), 0.9);
    const HermiteExpansion b = ou_semigroup(f, 1.2);
    for (const auto& [alpha, c] : b.coefficients()) {
      ou_law.update(std::fabs(a.coefficient(alpha) - c), "composition");
    }
    for (const double t : {0.15, 0.8}) {
      const HermiteExpansion pf = ou_semigroup(f, t);
      for (const double x0 : {-1.3, 0.0, 0.7}) {
        for (const double x1 : {-0.4, 1.1}) {
          std::array<double, kMaxGaussianDimension> x{};
          x[0] = x0;
          x[1] = x1;
          ou_oracle.update(
              std::fabs(ou_integral_eval(f, t, x, rule) - pf.evaluate(x)),
              "t=" + std::to_string(t));
        }
      }
    }
  }
  summary.checks.push_back(
      make_check("ou_semigroup_composition", ou_law, 1e-12, repro));
  summary.checks.push_back(
      make_check("ou_integral_oracle", ou_oracle, 1e-8, repro));

  Track nelson;
  {
    const HermiteExpansion f = random_expansion(2, 3, opts.seed + 500);
    for (const double t : {0.2, 0.7}) {
      for (const double q : {2.0, 4.0}) {
        const NelsonReport r = nelson_check(f, t, q, rule);
        nelson.update(std::max(0.0, r.lhs - r.rhs),
                      "t=" + std::to_string(t) + " q=" + std::to_string(q));
      }
    }
  }
  summary.checks.push_back(
      make_check("nelson_hypercontractivity", nelson, 1e-10, repro));

  Track gt;
  {
    HermiteExpansion prod(2, 4);
    MultiIndex a11{};
    a11.deg[0] = 1;
    a11.deg[1] = 1;
    prod.set(a11, 1.0);
    const InequalityReport r = gaussian_talagrand_report(prod, 1, rule);
    gt.update(std::fabs(r.lhs - 1.0), "x1x2 lhs");
    gt.update(std::fabs(r.rhs - 2.0), "x1x2 rhs");
    HermiteExpansion lin(1, 2);
    MultiIndex a1{};
    a1.deg[0] = 1;
    lin.set(a1, 1.0);
    const InequalityReport r2 = gaussian_talagrand_report(lin, 1, rule);
    if (!r2.degenerate || r2.lhs > 1e-12 || r2.rhs != 0.0) {
      gt.update(1.0, "x1 degenerate");
    }
    const HermiteExpansion f = random_expansion(2, 3, opts.seed + 600);
    for (int p = 1; p <= 2; ++p) {
      const InequalityReport rr = gaussian_talagrand_report(f, p, rule);
      if (!std::isfinite(rr.ratio) || rr.rhs < 0.0) {
        gt.update(1.0, "random p=" + std::to_string(p));
      }
    }
  }
  summary.checks.push_back(
      make_check("gaussian_talagrand_report", gt, 1e-6, repro));

  Track io;
  {
    const HermiteExpansion f = random_expansion(3, 4, opts.seed + 700);
    std::ostringstream out;
    write_expansion(out, f);
    std::istringstream in(out.str());
    const HermiteExpansion back = read_expansion(in);
    double diff = 0.0;
    for (const auto& [alpha, c] : f.coefficients()) {
      diff = std::max(diff, std::fabs(back.coefficient(alpha) - c));
    }
    if (back.coefficients().size() != f.coefficients().size()) diff = 1.0;
    io.update(diff, "roundtrip n=3 deg=4");
  }
  summary.checks.push_back(make_check("expansion_io_roundtrip", io, 0.0,
                                      repro));
  return summary;
}

std::vector<VerifySummary> verify_suites(const std::string& suite_id,
                                         const VerifyOptions& opts) {
  std::vector<VerifySummary> out;
  if (suite_id == "identities" || suite_id == "all") {
    out.push_back(verify_identities(opts));
  }
  if (suite_id == "inequalities" || suite_id == "all") {
    out.push_back(verify_inequalities(opts));
  }
  if (suite_id == "gaussian" || suite_id == "all") {
    out.push_back(verify_gaussian(opts));
  }
  if (out.empty()) {
    throw std::invalid_argument(
        "unknown suite '" + suite_id +
        "' (expected identities, inequalities, gaussian, or all)");
  }
  return out;
}

}  // namespace boolfun
