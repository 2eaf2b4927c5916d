#pragma once

#include "sqz/types.hpp"

namespace sqz::polyfam {

// Both families solve P_{n+2} - alpha P_{n+1} + (n+1) xi P_n = 0 and differ
// only in the initial pair: plus starts from (P_0, P_1) = (1, alpha), minus
// from (0, 1).  The recurrence is the authoritative route everywhere
// (including xi = 0 and zeros of the Hermite factors); the closed forms
// below are validators.

enum class Parity { even, odd };

// Two-parametric Hermite polynomial P_n(alpha, xi; +).
cplx p_plus(int n, cplx alpha, cplx xi);

// Associated family P_n(alpha, xi; -); monic of degree n-1 in alpha for
// n >= 1, with P_0 = 0.
cplx p_minus(int n, cplx alpha, cplx xi);

// Closed Hermite form (xi/2)^{n/2} H_n(alpha / sqrt(2 xi)) of the plus
// family.  The square root takes the principal branch, fixed once; only
// |P_n|^2 enters the physics but cross-route tests need one convention.
cplx p_plus_closed(int n, cplx alpha, cplx xi);

// Hermite-sum route to the minus family,
//   P_{n+1} = (xi/2)^{n/2} H_{n+1}(y) sum_{k<=n} 2^k k! / (H_k(y) H_{k+1}(y)),
// with y = alpha / sqrt(2 xi).  Requires xi != 0 and throws a numeric_error
// naming the index when some H_k(y) vanishes inside the range (the caller
// falls back to p_minus, which has no poles).
cplx p_minus_sum_form(int n, cplx alpha, cplx xi);

// Even/odd-decoupled hypergeometric route to the minus family built from
// terminating 3F2 sums at unit argument.  Requires xi != 0.
cplx p_minus_hypergeometric(int n, cplx alpha, cplx xi);

// General solution of the even (P_{2n}) or odd (P_{2n+1}) subsequence as a
// linear combination of the terminating and non-terminating Kummer
// branches with caller-supplied coefficients kappa and kappa_tilde.
cplx general_solution(Parity parity, int n, cplx alpha, cplx xi, cplx kappa,
                      cplx kappa_tilde);

}  // namespace sqz::polyfam
