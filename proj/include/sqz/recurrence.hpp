#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sqz/types.hpp"

namespace sqz::recurrence {

// Coefficient maps are index -> value functions so a spec extends lazily to
// any n_max (lambda_n = xi * n style families are unbounded).
using CoeffMap = std::function<cplx(int)>;

// Generator of the pairs (c_n, lambda_n) defining
//   p_{n+1} = (x - c_n) p_n - lambda_n p_{n-1}.
// lambda_1 != 0 is required wherever independence of the two solutions is
// asserted (Casorati function nonzero).
struct RecurrenceSpec {
  CoeffMap c;
  CoeffMap lambda;
  std::string label;
};

struct RecurrenceSequence {
  std::vector<cplx> values;  // indices 0..n_max
  RecurrenceSpec spec;
  cplx x;
  cplx p0, p1;

  int n_max() const { return static_cast<int>(values.size()) - 1; }
};

// The two-parameter family: c_n = 0, lambda_n = xi * n.
RecurrenceSpec two_param_hermite_spec(cplx xi);

// Classical Hermite in the variable x = 2z: c_n = 0, lambda_n = 2n.
RecurrenceSpec hermite_spec();

// Runs the recurrence forward from the initial pair (p0, p1).
// Throws numeric_error naming the failing index on overflow.
RecurrenceSequence run_recurrence(const RecurrenceSpec& spec, cplx x, cplx p0,
                                  cplx p1, int n_max);

// Second independent solution g_n with the initial pair (g_0, g_1) = (0, 1).
RecurrenceSequence associated_sequence(const RecurrenceSpec& spec, cplx x,
                                       int n_max);

// Order-reduction route to the second solution:
//   g_{n+1} / p_{n+1} = d0 + d1 * sum_{m<=n} R(m) / (p_m p_{m+1}),
// where R(m) is the Casorati ratio prod_{k=1..m} lambda_k (R(0) = 1).
// Any |p_m| <= 1e-12 in range is a pole of this route and raises a
// numeric_error identifying m; use associated_sequence near zeros.
RecurrenceSequence numerator_via_order_reduction(const RecurrenceSequence& p,
                                                 cplx d0, cplx d1);

// Casorati function C_n = p_n g_{n+1} - g_n p_{n+1}.  Both sequences must
// share the spec (by label) and the point x.
cplx casorati(const RecurrenceSequence& p, const RecurrenceSequence& g, int n);

// One side of a comparison pairing a_n f_{n+1} + b_n f_n + d_n f_{n-1} = 0.
struct ThreeTermCoeffs {
  CoeffMap a, b, d;
};

struct CompatibilityReport {
  bool compatible = false;
  double worst_residual = 0.0;
  int worst_index = -1;
  std::string reason;
};

// Checks |A_n D_{n+1} b_n b_{n+1} / (B_n B_{n+1} a_n d_{n+1}) - 1| < tol for
// all n <= n_max.  Zero denominators are reported as incompatible.
CompatibilityReport compatibility_check(const ThreeTermCoeffs& unknown,
                                        const ThreeTermCoeffs& solved,
                                        int n_max, double tol = 1e-10);

// Gauge factor h_n relating f_n = h_n F_n between a compatible pair:
//   h_n = h0 * prod_{k=0..n-1} (A_k b_k) / (B_k a_k).
// The alternative product over (B_{k+1} d_{k+1}) / (D_{k+1} b_{k+1}) is
// evaluated as well and must agree to 1e-12 relative.
cplx comparison_gauge(const ThreeTermCoeffs& unknown,
                      const ThreeTermCoeffs& solved, cplx h0, int n);

}  // namespace sqz::recurrence
