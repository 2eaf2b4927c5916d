#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sqz/fock.hpp"
#include "sqz/types.hpp"

namespace sqz::wigner {

using fock::StateVector;

// Convention: the vacuum gives W(z) = e^{-2|z|^2} exactly, so W_vac(0) = 1.
// This is a factor pi/2 above the common (2/pi)-normalized convention
// (whose vacuum value at the origin is 2/pi).

struct GridSpec {
  double re_min = -4.0, re_max = 4.0;
  int re_steps = 161;
  double im_min = -4.0, im_max = 4.0;
  int im_steps = 161;
};

struct WignerGrid {
  GridSpec spec;
  // Row-major with the imaginary axis outer: values[iy * re_steps + ix].
  std::vector<double> values;

  double re_at(int ix) const;
  double im_at(int iy) const;
};

// Fast path: the Gaussian integral over coherent-state overlaps folded
// analytically into the displaced-number-state kernel
//   W(z) = e^{-2|z|^2} sum_{m,n} amp_m amp_n^* K_{mn}(2z),
// with K built from associated Laguerre polynomials at 4|z|^2.  The double
// sum is accumulated in complex arithmetic; an imaginary residue above
// 1e-10 raises a numeric_error, otherwise it is discarded.
double wigner_point(const StateVector& state, cplx z);

struct OracleResult {
  double value = 0.0;
  double imag_residual = 0.0;  // |Im| of the accumulated integral
  double radius_tail = 0.0;    // e^{-radius^2} bound on the clipped mass
  bool converged = false;      // radius_tail below 1e-12
};

// Literal midpoint-rule evaluation of the defining phase-space integral
// over the disk |beta| <= radius, using coherent-state overlaps.  Slow;
// exists as the cross-check for wigner_point.
OracleResult wigner_quadrature_oracle(const StateVector& state, cplx z,
                                      double radius, int steps);

WignerGrid wigner_grid(const StateVector& state, const GridSpec& spec);

// CSV: '#'-prefixed metadata lines, a "re_z, im_z, w" header row, then one
// row per grid point; byte-identical across runs for fixed inputs.
void write_grid_csv(const WignerGrid& grid, std::ostream& os,
                    const std::vector<std::string>& metadata);
// JSON mirror: axes plus the row-major value array.
void write_grid_json(const WignerGrid& grid, std::ostream& os,
                     const std::vector<std::string>& metadata);

}  // namespace sqz::wigner
