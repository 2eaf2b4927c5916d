#include "sqz/recurrence.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace sqz::recurrence {

namespace {

std::string fmt(const char* pattern, int n) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), pattern, n);
  return buf;
}

constexpr double kPoleEps = 1e-12;

}  // namespace

RecurrenceSpec two_param_hermite_spec(cplx xi) {
  char label[80];
  std::snprintf(label, sizeof(label), "two_param_hermite(%.17g,%.17g)",
                xi.real(), xi.imag());
  return RecurrenceSpec{
      [](int) { return cplx(0.0); },
      [xi](int n) { return xi * static_cast<double>(n); },
      label,
  };
}

RecurrenceSpec hermite_spec() {
  return RecurrenceSpec{
      [](int) { return cplx(0.0); },
      [](int n) { return cplx(2.0 * n); },
      "hermite",
  };
}

RecurrenceSequence run_recurrence(const RecurrenceSpec& spec, cplx x, cplx p0,
                                  cplx p1, int n_max) {
  if (n_max < 1) throw domain_error("run_recurrence: n_max must be >= 1");
  RecurrenceSequence seq;
  seq.spec = spec;
  seq.x = x;
  seq.p0 = p0;
  seq.p1 = p1;
  seq.values.resize(n_max + 1);
  seq.values[0] = p0;
  seq.values[1] = p1;
  for (int n = 1; n < n_max; ++n) {
    seq.values[n + 1] =
        (x - spec.c(n)) * seq.values[n] - spec.lambda(n) * seq.values[n - 1];
    if (!is_finite(seq.values[n + 1]))
      throw numeric_error(fmt("run_recurrence: overflow at index %d", n + 1));
  }
  return seq;
}

RecurrenceSequence associated_sequence(const RecurrenceSpec& spec, cplx x,
                                       int n_max) {
  return run_recurrence(spec, x, 0.0, 1.0, n_max);
}

RecurrenceSequence numerator_via_order_reduction(const RecurrenceSequence& p,
                                                 cplx d0, cplx d1) {
  const int n_max = p.n_max();
  RecurrenceSequence g;
  g.spec = p.spec;
  g.x = p.x;
  g.values.assign(n_max + 1, 0.0);

  cplx ratio_sum = 0.0;
  cplx casorati_ratio = 1.0;  // R(m) = prod_{k=1..m} lambda_k
  for (int m = 0; m < n_max; ++m) {
    if (std::abs(p.values[m]) <= kPoleEps ||
        std::abs(p.values[m + 1]) <= kPoleEps)
      throw numeric_error(fmt("numerator_via_order_reduction: pole at index %d", m));
    ratio_sum += casorati_ratio / (p.values[m] * p.values[m + 1]);
    g.values[m + 1] = p.values[m + 1] * (d0 + d1 * ratio_sum);
    casorati_ratio *= p.spec.lambda(m + 1);
  }
  g.p0 = g.values[0];
  g.p1 = g.values[1];
  return g;
}

cplx casorati(const RecurrenceSequence& p, const RecurrenceSequence& g, int n) {
  if (p.spec.label != g.spec.label || p.x != g.x)
    throw domain_error("casorati: sequences do not share spec and x");
  if (n < 0 || n + 1 > p.n_max() || n + 1 > g.n_max())
    throw domain_error("casorati: index out of range");
  return p.values[n] * g.values[n + 1] - g.values[n] * p.values[n + 1];
}

CompatibilityReport compatibility_check(const ThreeTermCoeffs& unknown,
                                        const ThreeTermCoeffs& solved,
                                        int n_max, double tol) {
  CompatibilityReport report;
  report.compatible = true;
  for (int n = 0; n <= n_max; ++n) {
    const cplx den = solved.b(n) * solved.b(n + 1) * unknown.a(n) * unknown.d(n + 1);
    if (std::abs(den) == 0.0) {
      report.compatible = false;
      report.worst_residual = std::numeric_limits<double>::infinity();
      report.worst_index = n;
      report.reason = fmt("zero denominator coefficient at index %d", n);
      return report;
    }
    const cplx ratio =
        solved.a(n) * solved.d(n + 1) * unknown.b(n) * unknown.b(n + 1) / den;
    const double residual = std::abs(ratio - 1.0);
    if (residual > report.worst_residual) {
      report.worst_residual = residual;
      report.worst_index = n;
    }
    if (residual >= tol) report.compatible = false;
  }
  if (!report.compatible && report.reason.empty())
    report.reason = fmt("compatibility residual exceeds tolerance at index %d",
                        report.worst_index);
  return report;
}

cplx comparison_gauge(const ThreeTermCoeffs& unknown,
                      const ThreeTermCoeffs& solved, cplx h0, int n) {
  if (n < 0) throw domain_error("comparison_gauge: n must be nonnegative");
  cplx h = h0;
  cplx h_alt = h0;
  for (int k = 0; k < n; ++k) {
    const cplx den1 = solved.b(k) * unknown.a(k);
    const cplx den2 = solved.d(k + 1) * unknown.b(k + 1);
    if (std::abs(den1) == 0.0 || std::abs(den2) == 0.0)
      throw domain_error(fmt("comparison_gauge: zero denominator at index %d", k));
    h *= solved.a(k) * unknown.b(k) / den1;
    h_alt *= solved.b(k + 1) * unknown.d(k + 1) / den2;
  }
  if (std::abs(h - h_alt) > 1e-12 * std::max(1.0, std::abs(h)))
    throw numeric_error("comparison_gauge: the two gauge products disagree; pairing is not compatible");
  return h;
}

}  // namespace sqz::recurrence
