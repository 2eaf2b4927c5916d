#include "sqz/verify.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "json.hpp"
#include "sqz/fock.hpp"
#include "sqz/nonclassical.hpp"
#include "sqz/polyfam.hpp"
#include "sqz/recurrence.hpp"
#include "sqz/specfun.hpp"
#include "sqz/squeezed.hpp"
#include "sqz/wigner.hpp"

namespace sqz::verify {

namespace {

using fock::StateVector;

double rel(cplx got, cplx want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

struct Ctx {
  VerifyReport* report;
  void add(const std::string& name, double residual, double bound) {
    InvariantResult item;
    item.name = name;
    item.residual = residual;
    item.bound = bound;
    item.pass = residual <= bound * report->scale;
    report->items.push_back(item);
    if (!item.pass) report->all_pass = false;
  }
};

void check_specfun(Ctx& ctx) {
  using namespace specfun;

  // Scaled-Hermite identity He_n(z) = 2^{-n/2} H_n(z/sqrt2), n <= 20.
  {
    const std::vector<cplx> zs = {cplx(0.3, 0.2), cplx(-1.1, 0.7), cplx(2.5, 0.0),
                                  cplx(-3.0, 0.1), cplx(1.7, -2.3)};
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n)
      for (cplx z : zs) {
        const cplx lhs = hermite_scaled(n, z);
        const cplx rhs =
            std::pow(2.0, -0.5 * n) * hermite_phys(n, z / std::sqrt(2.0));
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
      }
    ctx.add("specfun/hermite_scaled_identity", worst, 1e-12);
  }

  // Kummer contiguous recurrence residual, scaled by the largest term.
  {
    const std::vector<cplx> zs = {cplx(0.7, 0.0), cplx(0.4, -0.3), cplx(2.0, 0.0)};
    double worst = 0.0;
    for (int ia = -8; ia <= -1; ++ia)
      for (double c : {0.5, 1.5})
        for (cplx z : zs) {
          const double a = ia;
          const cplx m_prev = kummer_m(a - 1.0, c, z);
          const cplx m_mid = kummer_m(a, c, z);
          const cplx m_next = kummer_m(a + 1.0, c, z);
          const cplx t1 = (c - a) * m_prev;
          const cplx t2 = (2.0 * a - c + z) * m_mid;
          const cplx t3 = -a * m_next;
          const double scale = std::max(
              {std::abs(t1), std::abs(t2), std::abs(t3), 1.0});
          worst = std::max(worst, std::abs(t1 + t2 + t3) / scale);
        }
    ctx.add("specfun/kummer_recurrence", worst, 1e-10);
  }

  // Terminating 3F2 against a long-double term-by-term sum.
  {
    auto brute = [](double a1, double a2, int a3, double b1, double b2) {
      long double sum = 1.0L, term = 1.0L;
      for (int k = 1; k <= -a3; ++k) {
        term *= (static_cast<long double>(a1) + k - 1) *
                (static_cast<long double>(a2) + k - 1) *
                (static_cast<long double>(a3) + k - 1) /
                ((static_cast<long double>(b1) + k - 1) *
                 (static_cast<long double>(b2) + k - 1) * k);
        sum += term;
      }
      return static_cast<double>(sum);
    };
    double worst = 0.0;
    for (int n = 0; n <= 10; ++n)
      for (int j = 0; j <= n; ++j) {
        const double even = specfun::hyp3f2_unit(1.0, 0.5, j - n, j + 2.0, j + 1.5);
        const double odd = specfun::hyp3f2_unit(1.0, 0.5, j - n, j + 1.0, j + 1.5);
        worst = std::max(worst, rel(even, brute(1.0, 0.5, j - n, j + 2.0, j + 1.5)));
        worst = std::max(worst, rel(odd, brute(1.0, 0.5, j - n, j + 1.0, j + 1.5)));
      }
    ctx.add("specfun/hyp3f2_termwise", worst, 1e-12);
  }
}

void check_recurrence(Ctx& ctx) {
  namespace rec = recurrence;
  const cplx xi(0.6, 0.0);
  const cplx alpha(1.3, 0.4);
  const auto spec = rec::two_param_hermite_spec(xi);

  // Replay of the defining recurrence over the stored values.
  {
    const auto seq = rec::run_recurrence(spec, alpha, 1.0, alpha, 20);
    double worst = 0.0;
    for (int n = 1; n < 20; ++n) {
      const cplx expect = (alpha - spec.c(n)) * seq.values[n] -
                          spec.lambda(n) * seq.values[n - 1];
      worst = std::max(worst, rel(seq.values[n + 1], expect));
    }
    ctx.add("recurrence/replay", worst, 1e-12);
  }

  // Casorati product law C_n = prod_{k=1..n} lambda_k for the (+,-) pair.
  {
    const auto p = rec::run_recurrence(spec, alpha, 1.0, alpha, 12);
    const auto g = rec::associated_sequence(spec, alpha, 12);
    double worst = 0.0;
    cplx prod = 1.0;
    for (int n = 1; n <= 10; ++n) {
      prod *= spec.lambda(n);
      worst = std::max(worst, rel(rec::casorati(p, g, n), prod));
    }
    ctx.add("recurrence/casorati_product", worst, 1e-10);
  }

  // Associated sequence vs the order-reduction route, away from poles.
  {
    const auto p = rec::run_recurrence(spec, cplx(1.0, 0.0), 1.0, 1.0, 8);
    const auto g_rec = rec::associated_sequence(spec, cplx(1.0, 0.0), 8);
    const auto g_sum = rec::numerator_via_order_reduction(p, 0.0, 1.0);
    double worst = 0.0;
    for (int n = 0; n <= 8; ++n)
      worst = std::max(worst, rel(g_sum.values[n], g_rec.values[n]));
    ctx.add("recurrence/route_equivalence", worst, 1e-10);
  }

  // Even/odd decoupling of the two-parameter family.
  {
    const auto p = rec::run_recurrence(spec, alpha, 1.0, alpha, 24);
    double worst = 0.0;
    for (int n = 1; 2 * n + 2 <= 24; ++n) {
      const double nn = n;
      const cplx even = p.values[2 * n + 2] +
                        (4.0 * xi * nn + xi - alpha * alpha) * p.values[2 * n] +
                        4.0 * xi * xi * nn * (nn - 0.5) * p.values[2 * n - 2];
      worst = std::max(worst, std::abs(even) / std::max(1.0, std::abs(p.values[2 * n + 2])));
      if (2 * n + 3 <= 24) {
        const cplx odd = p.values[2 * n + 3] +
                         (4.0 * xi * nn + 3.0 * xi - alpha * alpha) * p.values[2 * n + 1] +
                         4.0 * xi * xi * nn * (nn + 0.5) * p.values[2 * n - 1];
        worst = std::max(worst, std::abs(odd) / std::max(1.0, std::abs(p.values[2 * n + 3])));
      }
    }
    ctx.add("recurrence/even_odd_decoupling", worst, 1e-12);
  }

  // Compatibility: the Hermite pairing holds at z = alpha/sqrt(2 xi); the
  // raw Kummer pairing must be rejected.
  {
    const cplx z = alpha / std::sqrt(2.0 * xi);
    rec::ThreeTermCoeffs target{[](int) { return cplx(1.0); },
                               [alpha](int) { return -alpha; },
                               [xi](int n) { return xi * double(n); }};
    rec::ThreeTermCoeffs hermite{[](int) { return cplx(1.0); },
                                 [z](int) { return -2.0 * z; },
                                 [](int n) { return cplx(2.0 * n); }};
    const auto good = rec::compatibility_check(target, hermite, 16);
    ctx.add("recurrence/compatibility_hermite_pairing", good.worst_residual, 1e-10);

    // Kummer recurrence in the downward label: coefficients of
    // M(-(n+1)), M(-n), M(-(n-1)) at c = 1/2.
    const double c_par = 0.5;
    rec::ThreeTermCoeffs kummer{
        [c_par](int n) { return cplx(c_par + double(n)); },
        [c_par, z](int n) { return z - c_par - 2.0 * double(n); },
        [](int n) { return cplx(double(n)); }};
    const auto bad = rec::compatibility_check(target, kummer, 16);
    ctx.add("recurrence/compatibility_kummer_rejected", bad.compatible ? 1.0 : 0.0,
            0.5);
  }
}

void check_polyfam(Ctx& ctx) {
  using polyfam::p_minus;
  using polyfam::p_plus;

  std::mt19937 rng(0x5eed01);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  // Constraint identities P_1(+) = alpha P_0(+) and P_2(-) = alpha P_1(-).
  {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const cplx alpha(2.0 * unit(rng), 2.0 * unit(rng));
      const cplx xi(0.9 * unit(rng), 0.3 * unit(rng));
      const double scale = 1.0 + std::abs(alpha);
      worst = std::max(worst,
                       std::abs(p_plus(1, alpha, xi) - alpha * p_plus(0, alpha, xi)) / scale);
      worst = std::max(worst,
                       std::abs(p_minus(2, alpha, xi) - alpha * p_minus(1, alpha, xi)) / scale);
    }
    ctx.add("polyfam/constraint_pair", worst, 1e-13);
  }

  // Monic leading coefficient via divided differences at n+1 nodes.
  {
    double worst = 0.0;
    const cplx xi(0.37, 0.18);
    for (int n = 1; n <= 6; ++n) {
      for (bool minus : {false, true}) {
        const int degree = n;
        std::vector<cplx> node(degree + 1), val(degree + 1);
        for (int j = 0; j <= degree; ++j) {
          node[j] = cplx(double(j), 0.0);
          val[j] = minus ? p_minus(n + 1, node[j], xi) : p_plus(n, node[j], xi);
        }
        for (int level = 1; level <= degree; ++level)
          for (int j = 0; j <= degree - level; ++j)
            val[j] = (val[j + 1] - val[j]) / (node[j + level] - node[j]);
        worst = std::max(worst, std::abs(val[0] - 1.0));
      }
    }
    ctx.add("polyfam/monic_leading_coefficient", worst, 1e-8);
  }

  // Route agreement on a pole-free grid, n <= 12.
  {
    double worst = 0.0;
    const std::vector<cplx> alphas = {cplx(0.8, 0.3), cplx(1.6, -0.4), cplx(2.4, 0.0)};
    const std::vector<cplx> xis = {cplx(0.45, 0.0), cplx(0.3, 0.25), cplx(0.7, -0.1)};
    for (cplx alpha : alphas)
      for (cplx xi : xis)
        for (int n = 0; n <= 12; ++n) {
          const cplx plus = p_plus(n, alpha, xi);
          worst = std::max(worst, rel(polyfam::p_plus_closed(n, alpha, xi), plus));
          const cplx minus = p_minus(n, alpha, xi);
          worst = std::max(worst, rel(polyfam::p_minus_hypergeometric(n, alpha, xi), minus));
          try {
            worst = std::max(worst, rel(polyfam::p_minus_sum_form(n, alpha, xi), minus));
          } catch (const numeric_error&) {
            // Hermite zero inside the sum range; the recurrence route covers it.
          }
        }
    ctx.add("polyfam/route_agreement", worst, 1e-9);
  }

  // General Kummer-branch solution with the second-solution coefficients.
  {
    double worst = 0.0;
    const cplx alpha(1.0, 0.0);
    const cplx xi(0.6, 0.0);
    const cplx w = alpha * alpha / (2.0 * xi);
    const cplx m13 = specfun::kummer_m(1.0, 1.5, -w);
    for (int m = 0; m <= 6; ++m) {
      // Even-branch constants carry the cross-coupling factor -alpha/xi.
      const cplx even = polyfam::general_solution(
          polyfam::Parity::even, m, alpha, xi, alpha / xi * m13, -alpha / xi);
      worst = std::max(worst, rel(even, p_minus(2 * m, alpha, xi)));
      const cplx odd = polyfam::general_solution(
          polyfam::Parity::odd, m, alpha, xi, alpha * alpha / xi * m13, 1.0);
      worst = std::max(worst, rel(odd, p_minus(2 * m + 1, alpha, xi)));
    }
    ctx.add("polyfam/general_solution_minus", worst, 1e-9);
  }

  // xi -> 0 limit: P_{n+1}(alpha, 0; -) = alpha^n.
  {
    double worst = 0.0;
    const cplx alpha(1.3, -0.6);
    cplx want = 1.0;
    for (int n = 0; n <= 10; ++n) {
      worst = std::max(worst, rel(p_minus(n + 1, alpha, 0.0), want));
      want *= alpha;
    }
    ctx.add("polyfam/xi_zero_limit", worst, 1e-12);
  }
}

void check_fock(Ctx& ctx) {
  using namespace fock;

  // Canonical and distorted commutators on the truncation interior.
  {
    const int n_cut = 24;
    auto l = ladder_matrices(n_cut);
    auto d = distorted_ladder_matrices(n_cut);
    OperatorMatrix comm = l.a * l.a_dag - l.a_dag * l.a;
    OperatorMatrix comm2 = d.a2 * d.a2_dag - d.a2_dag * d.a2;
    double worst = 0.0;
    for (int n = 0; n <= n_cut - 2; ++n) {
      worst = std::max(worst, std::abs(comm.at(n, n) - 1.0));
      const double want = n == 0 ? 0.0 : (n == 1 ? 2.0 : 1.0);
      worst = std::max(worst, std::abs(comm2.at(n, n) - want));
      for (int m = 0; m <= n_cut - 2; ++m) {
        if (m == n) continue;
        worst = std::max(worst, std::abs(comm.at(n, m)));
        worst = std::max(worst, std::abs(comm2.at(n, m)));
      }
    }
    ctx.add("fock/commutators", worst, 1e-12);
  }

  // Disentangled squeeze operator vs the closed even-sector constructor.
  {
    double worst = 0.0;
    for (cplx xi : {cplx(0.3, 0.0), cplx(0.8, 0.0), cplx(0.35, 0.35)}) {
      const int n_cut = 120;
      const StateVector direct = squeezed::squeezed_vacuum(xi, n_cut);
      const StateVector applied = squeeze_apply(xi, basis_state(0, n_cut));
      worst = std::max(worst, 1.0 - fidelity(direct, applied));
    }
    ctx.add("fock/squeeze_vs_closed", worst, 1e-10);
  }

  // Annihilation maps the distorted coherent state back onto the Glauber
  // state with coefficient |alpha|/sqrt(1 - e^{-|alpha|^2}); the alpha = 0
  // case takes the limit value 1 (|1> drops to |0>).
  {
    double worst = 0.0;
    for (double a : {0.0, 0.7, 1.4, 2.2}) {
      const cplx alpha(a, 0.0);
      squeezed::StateSpec spec;
      spec.family = "distorted";
      spec.alpha = alpha;
      const int n_cut = squeezed::auto_n_cut(spec);
      const StateVector dist = squeezed::distorted_coherent(alpha, n_cut);
      const StateVector coh = coherent_state(alpha, n_cut);
      StateVector lowered = ladder_matrices(n_cut).a.apply(dist);
      const double coeff = std::sqrt(lowered.norm_sq());
      const double want =
          a == 0.0 ? 1.0
                   : std::abs(alpha) / std::sqrt(1.0 - std::exp(-std::norm(alpha)));
      worst = std::max(worst, std::abs(coeff - want) / want);
      for (cplx& v : lowered.amp) v /= coeff;
      lowered.normalized = true;
      worst = std::max(worst, 1.0 - std::abs(overlap(coh, lowered)));
    }
    ctx.add("fock/annihilated_distorted_vs_coherent", worst, 1e-9);
  }

  // Number operator maps the distorted coherent state onto the one-photon
  // added coherent state.
  {
    double worst = 0.0;
    for (double a : {0.7, 1.4, 2.2}) {
      const cplx alpha(a, 0.0);
      squeezed::StateSpec spec;
      spec.family = "distorted";
      spec.alpha = alpha;
      const int n_cut = squeezed::auto_n_cut(spec);
      const StateVector dist = squeezed::distorted_coherent(alpha, n_cut);
      const StateVector added = photon_added_coherent(alpha, n_cut);
      StateVector counted = ladder_matrices(n_cut).num.apply(dist);
      const double coeff = std::sqrt(counted.norm_sq());
      const double a2 = std::norm(alpha);
      const double want =
          std::abs(alpha) * std::sqrt(1.0 + a2) / std::sqrt(1.0 - std::exp(-a2));
      worst = std::max(worst, std::abs(coeff - want) / want);
      for (cplx& v : counted.amp) v /= coeff;
      counted.normalized = true;
      worst = std::max(worst, 1.0 - std::abs(overlap(added, counted)));
    }
    ctx.add("fock/number_distorted_vs_added", worst, 1e-9);
  }

  // [1 + alpha d/dalpha] on the analytic series of the distorted family
  // reproduces sqrt(1+alpha^2) e^{alpha^2/2} times the added state.
  {
    double worst = 0.0;
    const double h = 1e-5;
    for (double a : {0.8, 1.6}) {
      squeezed::StateSpec spec;
      spec.family = "added:1";
      spec.alpha = cplx(a, 0.0);
      const int n_cut = squeezed::auto_n_cut(spec);
      auto series = [&](double av) {
        std::vector<cplx> f(n_cut + 1, 0.0);
        double term = 1.0;  // av^n / sqrt((n+1)!)
        f[1] = term;
        for (int n = 1; n < n_cut; ++n) {
          term *= av / std::sqrt(double(n + 1));
          f[n + 1] = term;
        }
        return f;
      };
      const auto f0 = series(a);
      const auto fp = series(a + h);
      const auto fm = series(a - h);
      const StateVector added = photon_added_coherent(cplx(a, 0.0), n_cut);
      const double coeff = std::sqrt(1.0 + a * a) * std::exp(0.5 * a * a);
      double num = 0.0, den = 0.0;
      for (int n = 0; n <= n_cut; ++n) {
        const cplx lhs = f0[n] + a * (fp[n] - fm[n]) / (2.0 * h);
        const cplx rhs = coeff * added.amp[n];
        num += std::norm(lhs - rhs);
        den += std::norm(rhs);
      }
      worst = std::max(worst, std::sqrt(num / den));
    }
    ctx.add("fock/ladder_representation_derivative", worst, 1e-5);
  }
}

void check_squeezed(Ctx& ctx) {
  using namespace squeezed;

  const std::vector<double> alphas = {0.0, 0.75, 1.5, 2.25, 3.0};
  const std::vector<double> xis = {0.0, 0.2, 0.4, 0.6, 0.8};

  // Schrodinger saturation for the conventional family (ordinary
  // quadratures) and the associated family (distorted quadratures, with the
  // commutator expectation 1 - P0 + P1 in the bound), plus the variance
  // ratio tau^2.
  {
    double worst_sat_plus = 0.0, worst_ratio = 0.0, worst_sat_minus = 0.0;
    for (double a : alphas)
      for (double x : xis) {
        StateSpec sp;
        sp.family = "squeezed";
        sp.alpha = a;
        sp.xi = x;
        const StateVector plus = make_state(sp);
        const auto qs = fock::quadrature_stats(plus, false);
        worst_sat_plus = std::max(
            worst_sat_plus,
            std::abs(qs.var_x * qs.var_p - (0.25 + qs.cov_xp * qs.cov_xp)));
        const double t = tau(cplx(x, 0.0)).tau;
        worst_ratio = std::max(worst_ratio, std::abs(qs.var_x / qs.var_p - t * t));

        StateSpec sm;
        sm.family = "assoc";
        sm.alpha = a;
        sm.xi = x;
        const StateVector minus = make_state(sm);
        const auto qd = fock::quadrature_stats(minus, true);
        const double comm = distorted_commutator_expectation(minus);
        worst_sat_minus = std::max(
            worst_sat_minus,
            std::abs(qd.var_x * qd.var_p -
                     (0.25 * comm * comm + qd.cov_xp * qd.cov_xp)));
      }
    ctx.add("squeezed/saturation_conventional", worst_sat_plus, 1e-7);
    ctx.add("squeezed/variance_ratio_tau", worst_ratio, 1e-7);
    ctx.add("squeezed/saturation_associated_distorted", worst_sat_minus, 1e-7);
  }

  // Boundary identities of the associated family.
  {
    double worst = 0.0;
    for (double x : {0.2, 0.5, 0.8}) {
      StateSpec s;
      s.family = "assoc";
      s.xi = x;
      const StateVector assoc = make_state(s);
      const StateVector odd = odd_photon_squeezed(x, assoc.n_cut);
      worst = std::max(worst, 1.0 - fock::fidelity(assoc, odd));
    }
    for (double a : {0.6, 1.8}) {
      StateSpec s;
      s.family = "assoc";
      s.alpha = a;
      const StateVector assoc = make_state(s);
      const StateVector dist = distorted_coherent(a, assoc.n_cut);
      worst = std::max(worst, 1.0 - fock::fidelity(assoc, dist));
    }
    ctx.add("squeezed/boundary_consistency", worst, 1e-10);
  }

  // Parity support is exact.
  {
    double worst = 0.0;
    const StateVector even = squeezed_vacuum(0.55, 80);
    const StateVector odd = odd_photon_squeezed(0.55, 80);
    for (int n = 0; n <= 80; ++n) {
      if (n % 2 == 1) worst = std::max(worst, std::norm(even.amp[n]));
      if (n % 2 == 0) worst = std::max(worst, std::norm(odd.amp[n]));
    }
    ctx.add("squeezed/parity_support", worst, 0.0);
  }

  // Eigen-relation residuals for both families.
  {
    double worst_plus = 0.0, worst_minus = 0.0;
    for (double a : {0.5, 1.0, 2.0, 3.0})
      for (double x : {0.1, 0.3, 0.5, 0.7}) {
        const StateVector plus = conventional_squeezed(a, x, 150);
        worst_plus = std::max(worst_plus, eigen_residual(plus, a, x, false));
        const StateVector minus = associated_squeezed(a, x, 150);
        worst_minus = std::max(worst_minus, eigen_residual(minus, a, x, true));
      }
    ctx.add("squeezed/eigen_residual_conventional", worst_plus, 1e-8);
    ctx.add("squeezed/eigen_residual_associated", worst_minus, 1e-8);
  }

  // Closed normalization sums vs the numeric amplitude sums.
  {
    double worst = 0.0;
    for (double a : {0.0, 1.0, 2.5})
      for (double x : {0.0, 0.35, 0.8}) {
        StateSpec s;
        s.family = "squeezed";
        s.alpha = a;
        s.xi = x;
        const int n_cut = std::max(200, auto_n_cut(s));
        std::vector<cplx> q(n_cut + 1);
        q[0] = 1.0;
        q[1] = a;
        for (int n = 1; n < n_cut; ++n)
          q[n + 1] = a / std::sqrt(double(n + 1)) * q[n] -
                     x * std::sqrt(double(n) / double(n + 1)) * q[n - 1];
        double direct = 0.0;
        for (const cplx& v : q) direct += std::norm(v);
        worst = std::max(worst,
                         std::abs(direct / conventional_norm_sq_closed(a, x) - 1.0));
      }
    for (double x : {0.2, 0.5, 0.8}) {
      double direct = 0.0;
      double term = 1.0;
      for (int n = 0; 2 * n + 1 <= 260; ++n) {
        direct += term * term;
        term *= x * std::sqrt((2.0 * n + 2.0) / (2.0 * n + 3.0));
      }
      worst = std::max(worst, std::abs(direct / odd_photon_norm_sq_closed(x) - 1.0));
    }
    ctx.add("squeezed/closed_normalizations", worst, 1e-9);
  }

  // Closed mean photon numbers vs the numeric expectation.
  {
    double worst = 0.0;
    for (double a : {0.5, 1.0, 2.0, 3.0})
      for (double x : {0.1, 0.3, 0.5, 0.7}) {
        const StateVector plus = conventional_squeezed(a, x, 170);
        worst = std::max(worst,
                         std::abs(mean_photon(plus) - mean_photon_plus_closed(a, x)));
      }
    for (double x : {0.2, 0.5, 0.8}) {
      StateSpec s;
      s.family = "oddsq";
      s.xi = x;
      const StateVector odd = make_state(s);
      worst = std::max(worst,
                       std::abs(mean_photon(odd) - mean_photon_minus_alpha_zero(x)));
    }
    for (double a : {0.8, 1.0, 2.0}) {
      StateSpec s;
      s.family = "distorted";
      s.alpha = a;
      const StateVector dist = make_state(s);
      worst = std::max(worst,
                       std::abs(mean_photon(dist) - mean_photon_minus_xi_zero(a)));
    }
    ctx.add("squeezed/mean_photon_closed_forms", worst, 1e-8);
  }

  // Probability histograms: the two families converge pointwise by
  // alpha = 4 at xi = 0.6 and are disjointly supported at alpha = 0.
  {
    StateSpec sp;
    sp.family = "squeezed";
    sp.alpha = 4.0;
    sp.xi = 0.6;
    StateSpec sm = sp;
    sm.family = "assoc";
    const int n_cut = std::max(auto_n_cut(sp), auto_n_cut(sm));
    const auto pp = photon_probabilities(conventional_squeezed(4.0, 0.6, n_cut));
    const auto pm = photon_probabilities(associated_squeezed(4.0, 0.6, n_cut));
    double worst = 0.0;
    for (size_t n = 0; n < pp.size(); ++n)
      worst = std::max(worst, std::abs(pp[n] - pm[n]));
    ctx.add("squeezed/histogram_convergence_alpha4", worst, 0.02);

    const auto p0 = photon_probabilities(squeezed_vacuum(0.6, 120));
    const auto m0 = photon_probabilities(odd_photon_squeezed(0.6, 120));
    double cross = 0.0;
    for (size_t n = 0; n < p0.size(); ++n) cross += p0[n] * m0[n];
    ctx.add("squeezed/histogram_disjoint_alpha0", cross, 0.0);
  }
}

void check_wigner(Ctx& ctx) {
  using namespace wigner;

  // Convention anchors: vacuum Gaussian, |1> at the origin, displaced
  // Gaussian for a coherent state.
  {
    double worst = 0.0;
    const StateVector vac = fock::basis_state(0, 16);
    for (cplx z : {cplx(0.0, 0.0), cplx(0.7, -0.4), cplx(1.5, 1.1)})
      worst = std::max(worst,
                       std::abs(wigner_point(vac, z) - std::exp(-2.0 * std::norm(z))));
    const StateVector one = fock::basis_state(1, 16);
    worst = std::max(worst, std::abs(wigner_point(one, 0.0) + 1.0));
    const cplx alpha(0.9, 0.5);
    const StateVector coh = fock::coherent_state(alpha, 40);
    for (cplx z : {cplx(0.4, 0.2), cplx(1.2, -0.3)})
      worst = std::max(
          worst, std::abs(wigner_point(coh, z) - std::exp(-2.0 * std::norm(z - alpha))));
    ctx.add("wigner/convention_anchors", worst, 1e-10);
  }

  // Fast Laguerre-kernel path vs the literal quadrature.
  {
    double worst = 0.0;
    struct Sample {
      StateVector state;
      cplx z;
    };
    std::vector<Sample> samples;
    samples.push_back({fock::coherent_state(cplx(0.8, 0.4), 32), cplx(0.3, -0.2)});
    samples.push_back({squeezed::odd_photon_squeezed(0.5, 64), cplx(1.1, 0.6)});
    samples.push_back({squeezed::conventional_squeezed(1.0, 0.4, 80), cplx(-0.7, 0.9)});
    samples.push_back({squeezed::associated_squeezed(1.5, 0.3, 80), cplx(0.0, 0.0)});
    for (const auto& s : samples) {
      const double fast = wigner_point(s.state, s.z);
      const auto oracle = wigner_quadrature_oracle(s.state, s.z, 7.0, 280);
      worst = std::max(worst, std::abs(fast - oracle.value));
    }
    ctx.add("wigner/fast_vs_quadrature", worst, 1e-5);
  }

  // Pure |1>-limit parity: W(0) = -1 with radial symmetry.
  {
    const StateVector one = fock::basis_state(1, 16);
    double worst = std::abs(wigner_point(one, 0.0) + 1.0);
    for (double r : {0.4, 0.9, 1.7}) {
      const double wx = wigner_point(one, cplx(r, 0.0));
      const double wy = wigner_point(one, cplx(0.0, r));
      const double wd = wigner_point(one, cplx(r / std::sqrt(2.0), r / std::sqrt(2.0)));
      worst = std::max({worst, std::abs(wx - wy), std::abs(wx - wd)});
    }
    ctx.add("wigner/parity_radial_symmetry", worst, 1e-10);
  }
}

void check_nonclassical(Ctx& ctx) {
  using namespace nonclassical;

  // Closed pure-state trace distance vs the Jacobi eigen-route.
  {
    std::mt19937 rng(0x5eed02);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n_cut = 40;
    double worst = 0.0;
    for (int trial = 0; trial < 12; ++trial) {
      StateVector a, b;
      a.n_cut = b.n_cut = n_cut;
      a.amp.resize(n_cut + 1);
      b.amp.resize(n_cut + 1);
      for (int n = 0; n <= n_cut; ++n) {
        a.amp[n] = cplx(gauss(rng), gauss(rng));
        b.amp[n] = cplx(gauss(rng), gauss(rng));
      }
      fock::renormalize(a);
      fock::renormalize(b);
      const double closed = trace_distance_pure(a, b);
      const double eig = trace_distance_oracle(a, b);
      worst = std::max(worst, std::abs(closed - eig));
      if (closed < -1e-12 || closed > 1.0 + 1e-12) worst = 1.0;
    }
    ctx.add("nonclassical/trace_distance_routes", worst, 1e-8);
  }

  // Beam-splitter unitarity of the joint amplitude matrix.
  {
    double worst = 0.0;
    std::vector<StateVector> states;
    states.push_back(fock::coherent_state(cplx(1.2, -0.4), 48));
    states.push_back(squeezed::odd_photon_squeezed(0.6, 90));
    states.push_back(squeezed::associated_squeezed(1.0, 0.4, 90));
    for (const auto& s : states) {
      const auto joint = beamsplitter_mix_with_vacuum(s);
      double total = 0.0;
      for (const cplx& v : joint.a) total += std::norm(v);
      worst = std::max(worst, std::abs(total - 1.0));
    }
    ctx.add("nonclassical/beamsplitter_unitarity", worst, 1e-10);
  }

  // Entropy anchors: product output for a coherent input, 1/2 for |1>.
  {
    double worst = linear_entropy_after_bs(fock::coherent_state(cplx(1.3, 0.2), 48));
    worst = std::max(worst,
                     std::abs(linear_entropy_after_bs(fock::basis_state(1, 24)) - 0.5));
    ctx.add("nonclassical/entropy_anchors", worst, 1e-10);
  }

  // Entropy bounds on both families.
  {
    double worst = 0.0;
    for (double a : {0.0, 1.0, 3.0}) {
      for (double x : {0.0, 0.6}) {
        squeezed::StateSpec s;
        s.family = "assoc";
        s.alpha = a;
        s.xi = x;
        const double entropy = linear_entropy_after_bs(squeezed::make_state(s));
        if (entropy < -1e-12 || entropy >= 1.0) worst = 1.0;
      }
    }
    ctx.add("nonclassical/entropy_range", worst, 0.5);
  }
}

}  // namespace

VerifyReport run_verification(const std::string& profile) {
  VerifyReport report;
  report.profile = profile;
  if (profile == "default" || profile.empty()) {
    report.scale = 1.0;
  } else {
    try {
      size_t used = 0;
      report.scale = std::stod(profile, &used);
      if (used != profile.size() || report.scale < 0.0)
        throw std::invalid_argument(profile);
    } catch (const std::exception&) {
      throw domain_error("run_verification: profile must be 'default' or a nonnegative scale");
    }
  }
  report.all_pass = true;

  Ctx ctx{&report};
  check_specfun(ctx);
  check_recurrence(ctx);
  check_polyfam(ctx);
  check_fock(ctx);
  check_squeezed(ctx);
  check_wigner(ctx);
  check_nonclassical(ctx);
  return report;
}

std::string report_to_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["profile"] = report.profile;
  j["scale"] = report.scale;
  j["all_pass"] = report.all_pass;
  j["items"] = nlohmann::ordered_json::array();
  for (const auto& item : report.items) {
    nlohmann::ordered_json e;
    e["name"] = item.name;
    e["residual"] = item.residual;
    e["bound"] = item.bound;
    e["pass"] = item.pass;
    j["items"].push_back(e);
  }
  return j.dump(2);
}

}  // namespace sqz::verify
