#pragma once

#include <vector>

#include "sqz/fock.hpp"
#include "sqz/types.hpp"

namespace sqz::nonclassical {

using fock::StateVector;

// Trace distance between two pure states through the closed form
// sqrt(1 - |<psi1|psi2>|^2).  Both states must be normalized and share the
// same cutoff.
double trace_distance_pure(const StateVector& psi1, const StateVector& psi2);

// Independent route: half the absolute eigenvalue sum of the Hermitian
// difference rho1 - rho2, diagonalized by a cyclic Jacobi sweep (at most
// 100 sweeps, numeric_error past that).  Meant for n_cut <= 60.
double trace_distance_oracle(const StateVector& psi1, const StateVector& psi2);

// Eigenvalues of a dense Hermitian matrix (row-major, dim x dim) by cyclic
// Jacobi rotations; exposed for test oracles.
std::vector<double> jacobi_eigenvalues(std::vector<cplx> matrix, int dim);

// Joint photon-number amplitudes after a 50:50 beam splitter with vacuum on
// the second port: A[k][j] = amp_{k+j} sqrt(C(k+j, k)) 2^{-(k+j)/2} in the
// real symmetric convention.  Any phase convention leaves the reduced
// spectrum unchanged.
struct JointAmplitudeMatrix {
  int dim = 0;
  std::vector<cplx> a;

  cplx& at(int k, int j) { return a[static_cast<size_t>(k) * dim + j]; }
  cplx at(int k, int j) const { return a[static_cast<size_t>(k) * dim + j]; }
};

JointAmplitudeMatrix beamsplitter_mix_with_vacuum(const StateVector& state);

// Linear entropy 1 - Tr(rho~^2) of the port-1 reduced state, computed from
// the Gram matrix G = A A^dag without forming the bipartite density matrix.
double linear_entropy_after_bs(const StateVector& state);

}  // namespace sqz::nonclassical
