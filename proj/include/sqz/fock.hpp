#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sqz/types.hpp"

namespace sqz::fock {

// Truncated Fock-basis amplitude list.  norm_defect is the estimated
// probability mass lost to truncation (closed-form tail when the family has
// one, top-two-row mass otherwise); constructors reject cutoffs whose defect
// exceeds 1e-6.
struct StateVector {
  std::vector<cplx> amp;  // indexed by photon number 0..n_cut
  int n_cut = 0;
  bool normalized = false;
  double norm_defect = 0.0;

  double norm_sq() const;
};

struct OperatorMatrix {
  int dim = 0;  // (n_cut + 1) square
  std::vector<cplx> m;
  std::string label;

  static OperatorMatrix zero(int dim, std::string label);
  cplx& at(int row, int col) { return m[static_cast<size_t>(row) * dim + col]; }
  cplx at(int row, int col) const {
    return m[static_cast<size_t>(row) * dim + col];
  }
  OperatorMatrix adjoint() const;
  OperatorMatrix operator*(const OperatorMatrix& rhs) const;
  OperatorMatrix operator+(const OperatorMatrix& rhs) const;
  OperatorMatrix operator-(const OperatorMatrix& rhs) const;
  OperatorMatrix scaled(cplx factor) const;
  // Applies the matrix to the amplitudes; the result is not renormalized.
  StateVector apply(const StateVector& state) const;
};

struct LadderOps {
  OperatorMatrix a, a_dag, num;
};

struct DistortedOps {
  OperatorMatrix a2, a2_dag;
};

// a|n> = sqrt(n)|n-1>, a^dag|n> = sqrt(n+1)|n+1> (top row truncated),
// num = a^dag a.
LadderOps ladder_matrices(int n_cut);

// Direct ladder actions on the amplitude list (no matrix build); the
// distorted variants implement the a2 / a2^dag rules.
StateVector apply_lower(const StateVector& state, bool distorted);
StateVector apply_raise(const StateVector& state, bool distorted);

// Distorted pair: a2 and a2^dag both annihilate |0>, a2|1> = 0, and the
// shifted actions a2|n+1> = sqrt(n+1)|n>, a2^dag|n> = sqrt(n+1)|n+1> hold
// for n >= 1.
DistortedOps distorted_ladder_matrices(int n_cut);

StateVector basis_state(int n, int n_cut);

// Glauber state amp_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!), renormalized
// after truncation.  Needs n_cut >~ |alpha|^2 + 10 sqrt(|alpha|^2 + 1).
StateVector coherent_state(cplx alpha, int n_cut);

// One-photon added coherent state: amp_{n+1} ~ sqrt(n+1) alpha^n / sqrt(n!).
StateVector photon_added_coherent(cplx alpha, int n_cut);

// Applies the squeeze operator through its disentangled product
//   e^{-(xi/2) a^dag^2} (1-|xi|^2)^{(a a^dag + a^dag a)/4} e^{(xi*/2) a^2},
// the two exponentials as truncated Taylor series of matrix actions (terms
// until the term norm drops below 1e-16) and the middle factor as the exact
// diagonal power.  Requires |xi| < 1.  The result is renormalized and the
// renormalization defect reported in norm_defect.
StateVector squeeze_apply(cplx xi, const StateVector& state);

// <state| op |state>; the state must be normalized.
cplx expectation(const OperatorMatrix& op, const StateVector& state);

struct QuadratureStats {
  double var_x = 0.0;
  double var_p = 0.0;
  double cov_xp = 0.0;
};

// Variances and symmetrized covariance of x = (a^dag + a)/sqrt2 and
// p = i(a^dag - a)/sqrt2, or of the distorted pair x2, p2 built from a2.
QuadratureStats quadrature_stats(const StateVector& state, bool distorted);

cplx overlap(const StateVector& a, const StateVector& b);
double fidelity(const StateVector& a, const StateVector& b);

// Normalizes in place and returns the pre-normalization deviation |1 - S|.
double renormalize(StateVector& state);

// Plain-text serialization: one header line carrying n_cut and the norm
// defect, then rows "n, re(amp), im(amp)".
void write_state(const StateVector& state, std::ostream& os);
StateVector read_state(std::istream& is);
void write_state_file(const StateVector& state, const std::string& path);
StateVector read_state_file(const std::string& path);

}  // namespace sqz::fock
