#include "sqz/specfun.hpp"

#include <cmath>
#include <cstdio>

namespace sqz::specfun {

namespace {

bool is_nonpositive_integer(double v) {
  return v <= 0.0 && v == std::floor(v);
}

std::string idx_msg(const char* fn, int n) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s: overflow at index %d", fn, n);
  return buf;
}

}  // namespace

cplx hermite_phys(int n, cplx z) {
  if (n < 0) throw domain_error("hermite_phys: n must be nonnegative");
  if (n == 0) return 1.0;
  cplx pm1 = 1.0;
  cplx p = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    cplx next = 2.0 * z * p - 2.0 * static_cast<double>(k) * pm1;
    pm1 = p;
    p = next;
    if (!is_finite(p)) throw numeric_error(idx_msg("hermite_phys", k + 1));
  }
  return p;
}

cplx hermite_scaled(int n, cplx z) {
  if (n < 0) throw domain_error("hermite_scaled: n must be nonnegative");
  if (n == 0) return 1.0;
  cplx pm1 = 1.0;
  cplx p = z;
  for (int k = 1; k < n; ++k) {
    cplx next = z * p - static_cast<double>(k) * pm1;
    pm1 = p;
    p = next;
    if (!is_finite(p)) throw numeric_error(idx_msg("hermite_scaled", k + 1));
  }
  return p;
}

double pochhammer(double a, int k) {
  if (k < 0) throw domain_error("pochhammer: k must be nonnegative");
  double prod = 1.0;
  for (int j = 0; j < k; ++j) prod *= a + static_cast<double>(j);
  return prod;
}

cplx kummer_m(double a, double c, cplx z) {
  if (is_nonpositive_integer(c))
    throw domain_error("kummer_m: c must not be a nonpositive integer");

  if (is_nonpositive_integer(a)) {
    // Exact terminating polynomial of degree -a.
    const int n = static_cast<int>(-a);
    cplx sum = 1.0;
    cplx term = 1.0;
    for (int k = 1; k <= n; ++k) {
      const double kk = static_cast<double>(k);
      term *= (a + kk - 1.0) / ((c + kk - 1.0) * kk) * z;
      sum += term;
    }
    return sum;
  }

  constexpr int kMaxTerms = 500;
  constexpr double kTailTol = 1e-14;
  cplx sum = 1.0;
  cplx term = 1.0;
  int small_count = 0;
  for (int k = 1; k <= kMaxTerms; ++k) {
    const double kk = static_cast<double>(k);
    term *= (a + kk - 1.0) / ((c + kk - 1.0) * kk) * z;
    sum += term;
    if (!is_finite(sum)) throw numeric_error(idx_msg("kummer_m", k));
    // Two consecutive small terms guard against parameter-induced dips.
    if (std::abs(term) <= kTailTol * std::abs(sum)) {
      if (++small_count >= 2) return sum;
    } else {
      small_count = 0;
    }
  }
  throw numeric_error("kummer_m: series did not converge within 500 terms");
}

double hyp3f2_unit(double a1, double a2, int a3, double b1, double b2) {
  if (a3 > 0)
    throw domain_error("hyp3f2_unit: a3 must be a nonpositive integer");
  const int kmax = -a3;
  double sum = 1.0;
  double term = 1.0;
  for (int k = 1; k <= kmax; ++k) {
    const double kk = static_cast<double>(k);
    const double den1 = b1 + kk - 1.0;
    const double den2 = b2 + kk - 1.0;
    if (den1 == 0.0 || den2 == 0.0)
      throw domain_error("hyp3f2_unit: lower parameter hits a nonpositive integer");
    term *= (a1 + kk - 1.0) * (a2 + kk - 1.0) * (static_cast<double>(a3) + kk - 1.0) /
            (den1 * den2 * kk);
    sum += term;
  }
  return sum;
}

double laguerre_assoc(int n, int k, double x) {
  if (n < 0 || k < 0)
    throw domain_error("laguerre_assoc: n and k must be nonnegative");
  if (n == 0) return 1.0;
  const double kk = static_cast<double>(k);
  double pm1 = 1.0;
  double p = 1.0 + kk - x;
  for (int m = 1; m < n; ++m) {
    const double mm = static_cast<double>(m);
    double next = ((2.0 * mm + kk + 1.0 - x) * p - (mm + kk) * pm1) / (mm + 1.0);
    pm1 = p;
    p = next;
  }
  return p;
}

}  // namespace sqz::specfun
