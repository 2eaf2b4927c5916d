#include "sqz/polyfam.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "sqz/recurrence.hpp"
#include "sqz/specfun.hpp"

namespace sqz::polyfam {

namespace {

cplx run_family(int n, cplx alpha, cplx xi, cplx p0, cplx p1) {
  if (n < 0) throw domain_error("polyfam: n must be nonnegative");
  if (n == 0) return p0;
  if (n == 1) return p1;
  const auto spec = recurrence::two_param_hermite_spec(xi);
  return recurrence::run_recurrence(spec, alpha, p0, p1, n).values[n];
}

void require_nonzero_xi(cplx xi, const char* fn) {
  if (xi == cplx(0.0)) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s: xi must be nonzero for this route", fn);
    throw domain_error(buf);
  }
}

}  // namespace

cplx p_plus(int n, cplx alpha, cplx xi) {
  return run_family(n, alpha, xi, 1.0, alpha);
}

cplx p_minus(int n, cplx alpha, cplx xi) {
  return run_family(n, alpha, xi, 0.0, 1.0);
}

cplx p_plus_closed(int n, cplx alpha, cplx xi) {
  if (n < 0) throw domain_error("p_plus_closed: n must be nonnegative");
  require_nonzero_xi(xi, "p_plus_closed");
  const cplx s = std::sqrt(0.5 * xi);      // principal branch of (xi/2)^{1/2}
  const cplx y = alpha / (2.0 * s);        // alpha / sqrt(2 xi)
  cplx scale = 1.0;
  for (int k = 0; k < n; ++k) scale *= s;
  return scale * specfun::hermite_phys(n, y);
}

cplx p_minus_sum_form(int n, cplx alpha, cplx xi) {
  if (n < 0) throw domain_error("p_minus_sum_form: n must be nonnegative");
  if (n == 0) return 0.0;
  require_nonzero_xi(xi, "p_minus_sum_form");
  constexpr double kPoleEps = 1e-12;

  const cplx s = std::sqrt(0.5 * xi);
  const cplx y = alpha / (2.0 * s);

  // H_0..H_n at y.  Interior zeros (H_k, 1 <= k <= n-1) are genuine poles
  // of this route; the H_n in the last denominator cancels against the
  // prefactor and is folded in algebraically.
  std::vector<cplx> h(n + 1);
  h[0] = 1.0;
  h[1] = 2.0 * y;
  for (int k = 1; k < n; ++k)
    h[k + 1] = 2.0 * y * h[k] - 2.0 * static_cast<double>(k) * h[k - 1];
  for (int k = 1; k < n; ++k) {
    if (std::abs(h[k]) <= kPoleEps) {
      char buf[96];
      std::snprintf(buf, sizeof(buf),
                    "p_minus_sum_form: Hermite zero at index %d", k);
      throw numeric_error(buf);
    }
  }

  cplx partial = 0.0;
  double weight = 1.0;  // 2^k k!
  for (int k = 0; k + 1 < n; ++k) {
    partial += weight / (h[k] * h[k + 1]);
    weight *= 2.0 * static_cast<double>(k + 1);
  }
  cplx scale = 1.0;
  for (int k = 0; k < n - 1; ++k) scale *= s;
  return scale * (h[n] * partial + weight / h[n - 1]);
}

cplx p_minus_hypergeometric(int n, cplx alpha, cplx xi) {
  if (n < 0) throw domain_error("p_minus_hypergeometric: n must be nonnegative");
  if (n == 0) return 0.0;
  require_nonzero_xi(xi, "p_minus_hypergeometric");
  const cplx w = alpha * alpha / (2.0 * xi);

  if (n % 2 == 0) {
    // P_{2m+2} = alpha (m+1) (3/2)_m (-2 xi)^m *
    //   sum_{j<=m} w^j (-m)_j / ((3/2)_j (j+1)!) 3F2(1, 1/2, j-m; j+2, j+3/2; 1)
    const int m = n / 2 - 1;
    cplx sum = 0.0;
    cplx wpow = 1.0;
    for (int j = 0; j <= m; ++j) {
      const double jj = static_cast<double>(j);
      double factorial_j1 = 1.0;
      for (int i = 2; i <= j + 1; ++i) factorial_j1 *= i;
      const double coeff = specfun::pochhammer(-static_cast<double>(m), j) /
                           (specfun::pochhammer(1.5, j) * factorial_j1);
      const double f32 =
          specfun::hyp3f2_unit(1.0, 0.5, j - m, jj + 2.0, jj + 1.5);
      sum += wpow * coeff * f32;
      wpow *= w;
    }
    cplx prefactor = alpha * static_cast<double>(m + 1) *
                     specfun::pochhammer(1.5, m);
    cplx xipow = 1.0;
    for (int i = 0; i < m; ++i) xipow *= -2.0 * xi;
    return prefactor * xipow * sum;
  }

  // P_{2m+1} = (3/2)_m (-2 xi)^m *
  //   sum_{j<=m} w^j (-m)_j / ((3/2)_j j!) 3F2(1, 1/2, j-m; j+1, j+3/2; 1)
  const int m = (n - 1) / 2;
  cplx sum = 0.0;
  cplx wpow = 1.0;
  for (int j = 0; j <= m; ++j) {
    const double jj = static_cast<double>(j);
    double factorial_j = 1.0;
    for (int i = 2; i <= j; ++i) factorial_j *= i;
    const double coeff = specfun::pochhammer(-static_cast<double>(m), j) /
                         (specfun::pochhammer(1.5, j) * factorial_j);
    const double f32 =
        specfun::hyp3f2_unit(1.0, 0.5, j - m, jj + 1.0, jj + 1.5);
    sum += wpow * coeff * f32;
    wpow *= w;
  }
  cplx prefactor = specfun::pochhammer(1.5, m);
  cplx xipow = 1.0;
  for (int i = 0; i < m; ++i) xipow *= -2.0 * xi;
  return prefactor * xipow * sum;
}

cplx general_solution(Parity parity, int n, cplx alpha, cplx xi, cplx kappa,
                      cplx kappa_tilde) {
  if (n < 0) throw domain_error("general_solution: n must be nonnegative");
  require_nonzero_xi(xi, "general_solution");
  const cplx w = alpha * alpha / (2.0 * xi);
  const double nn = static_cast<double>(n);
  double factorial_n = 1.0;
  for (int i = 2; i <= n; ++i) factorial_n *= i;
  cplx xipow = 1.0;
  for (int i = 0; i < n; ++i) xipow *= -2.0 * xi;

  if (parity == Parity::even) {
    const cplx terminating = specfun::kummer_m(-nn, 0.5, w);
    const cplx second = specfun::kummer_m(nn + 1.0, 1.5, -w);
    return xipow * (specfun::pochhammer(0.5, n) * kappa * terminating +
                    factorial_n * kappa_tilde * second);
  }
  const cplx terminating = specfun::kummer_m(-nn, 1.5, w);
  const cplx second = specfun::kummer_m(nn + 1.0, 0.5, -w);
  return xipow * (specfun::pochhammer(1.5, n) * kappa * terminating +
                  factorial_n * kappa_tilde * second);
}

}  // namespace sqz::polyfam
