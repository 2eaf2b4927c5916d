#pragma once

#include <string>
#include <vector>

#include "sqz/fock.hpp"
#include "sqz/types.hpp"

namespace sqz::squeezed {

using fock::StateVector;

// Squeezing classifier tau = |1 - xi| / |1 + xi| for |xi| < 1.
// Regime 'a': tau within 1e-12 of 1; 'b': tau < 1 (x squeezed);
// 'c': tau > 1 (p squeezed).
struct TauResult {
  double tau = 1.0;
  char regime = 'a';
};
TauResult tau(cplx xi);

// Even-photon squeezed vacuum; amplitudes proportional to
// sqrt((2n)!) / (2^n n!) (-xi)^n on |2n>.  Numerically renormalized after
// truncation (the closed normalization is kept as a validator).
StateVector squeezed_vacuum(cplx xi, int n_cut);

// Odd-photon counterpart supported on |2n+1> with amplitudes proportional
// to 2^n n! (-xi)^n / sqrt((2n+1)!); reduces to |1> as xi -> 0.
StateVector odd_photon_squeezed(cplx xi, int n_cut);

// Conventional two-parameter squeezed state: amp_n ~ P_n(alpha, xi; +)/sqrt(n!).
StateVector conventional_squeezed(cplx alpha, cplx xi, int n_cut);

// Associated squeezed state: amp_0 = 0 and
// amp_{n+1} ~ P_{n+1}(alpha, xi; -)/sqrt((n+1)!).
StateVector associated_squeezed(cplx alpha, cplx xi, int n_cut);

// xi = 0 member of the associated family:
// amp_{n+1} = (|alpha|/sqrt(e^{|alpha|^2}-1)) alpha^n / sqrt((n+1)!),
// with the alpha -> 0 limit |1>.
StateVector distorted_coherent(cplx alpha, int n_cut);

// Closed-form normalization sums, used as validators of the numeric
// amplitude sums (which are authoritative):
//   conventional: sum |P_n(+)|^2/n! via the bilinear Hermite generating
//   function; odd family: sum |P_{2n+1}|^2/(2n+1)! = asin|xi|/(|xi| sqrt(1-|xi|^2)).
double conventional_norm_sq_closed(cplx alpha, cplx xi);
double odd_photon_norm_sq_closed(cplx xi);

// Closed mean photon number of the conventional family.
double mean_photon_plus_closed(cplx alpha, cplx xi);

// Boundary closed forms for the associated family (no closed expression
// exists off the boundaries).
double mean_photon_minus_alpha_zero(cplx xi);
double mean_photon_minus_xi_zero(cplx alpha);

std::vector<double> photon_probabilities(const StateVector& state);

double mean_photon(const StateVector& state);

// Norm of (A + xi A^dag)|psi> - alpha |psi> with A = a (distorted = false)
// or A = a2, the top two truncation-corrupted rows masked.
double eigen_residual(const StateVector& state, cplx alpha, cplx xi,
                      bool distorted);

// Expectation of [a2, a2^dag]: 0, 2, 1 on |0>, |1>, |n>=2>, i.e.
// 1 - P_0 + P_1.  Enters the Schrodinger bound for the distorted quadratures.
double distorted_commutator_expectation(const StateVector& state);

// CLI-facing state specification.  Recognized family keys: glauber | sqvac |
// oddsq | squeezed | assoc | distorted | fock:<n> | added:<n>.
struct StateSpec {
  std::string family = "glauber";
  cplx alpha = 0.0;
  cplx xi = 0.0;
  int n_cut = 0;  // 0 = choose automatically
};

// Family-aware cutoff heuristic: mean-photon estimate plus 12 standard
// deviations plus a geometric-tail allowance 28/(-ln|xi|), clamped to
// [16, 4096].
int auto_n_cut(const StateSpec& spec);

StateVector make_state(const StateSpec& spec);

}  // namespace sqz::squeezed
