#pragma once

#include "sqz/types.hpp"

namespace sqz::specfun {

// Physicists' Hermite polynomial H_n(z) by the forward recurrence
// H_{n+1} = 2 z H_n - 2 n H_{n-1}.  Safe working range: n <= 170 with
// |z| <= 30; past that the values overflow and a numeric_error is thrown.
cplx hermite_phys(int n, cplx z);

// Scaled (probabilists') Hermite polynomial He_n(z) = 2^{-n/2} H_n(z/sqrt 2),
// evaluated by its own recurrence He_{n+1} = z He_n - n He_{n-1}.
cplx hermite_scaled(int n, cplx z);

// Pochhammer symbol (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
double pochhammer(double a, int k);

// Kummer's confluent hypergeometric function M(a, c; z).  For a a
// nonpositive integer the exact terminating sum of degree -a is used;
// otherwise the power series is summed to relative tolerance 1e-14 with a
// 500 term cap (numeric_error on non-convergence).  c must not be a
// nonpositive integer.
cplx kummer_m(double a, double c, cplx z);

// Terminating 3F2 at unit argument: a3 must be <= 0 so the series is the
// finite sum over k = 0..-a3 of (a1)_k (a2)_k (a3)_k / ((b1)_k (b2)_k k!).
double hyp3f2_unit(double a1, double a2, int a3, double b1, double b2);

// Associated Laguerre polynomial L_n^k(x) via the standard three-term
// recurrence in the degree n.
double laguerre_assoc(int n, int k, double x);

}  // namespace sqz::specfun
