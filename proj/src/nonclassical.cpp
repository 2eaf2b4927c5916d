#include "sqz/nonclassical.hpp"

#include <algorithm>
#include <cmath>

namespace sqz::nonclassical {

namespace {

void require_pair(const StateVector& a, const StateVector& b, const char* fn) {
  if (a.n_cut != b.n_cut)
    throw domain_error(std::string(fn) + ": states must share the same n_cut");
  if (!a.normalized || !b.normalized ||
      std::abs(a.norm_sq() - 1.0) > 1e-8 || std::abs(b.norm_sq() - 1.0) > 1e-8)
    throw domain_error(std::string(fn) + ": states must be normalized");
}

void require_normalized(const StateVector& s, const char* fn) {
  if (!s.normalized || std::abs(s.norm_sq() - 1.0) > 1e-8)
    throw domain_error(std::string(fn) + ": state must be normalized");
}

}  // namespace

double trace_distance_pure(const StateVector& psi1, const StateVector& psi2) {
  require_pair(psi1, psi2, "trace_distance_pure");
  // sqrt(1 - |<psi1|psi2>|^2), evaluated as the norm of the component of
  // psi2 orthogonal to psi1; this form does not cancel near identical
  // states.
  const cplx ov = fock::overlap(psi1, psi2);
  double perp = 0.0;
  for (int n = 0; n <= psi1.n_cut; ++n)
    perp += std::norm(psi2.amp[n] - ov * psi1.amp[n]);
  return std::min(1.0, std::sqrt(perp));
}

std::vector<double> jacobi_eigenvalues(std::vector<cplx> a, int dim) {
  auto at = [&a, dim](int r, int c) -> cplx& {
    return a[static_cast<size_t>(r) * dim + c];
  };

  double scale = 0.0;
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) scale = std::max(scale, std::abs(at(r, c)));
  if (scale == 0.0) return std::vector<double>(dim, 0.0);
  const double tol = 1e-14 * scale;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < dim; ++p)
      for (int q = p + 1; q < dim; ++q) off = std::max(off, std::abs(at(p, q)));
    if (off <= tol) {
      std::vector<double> eig(dim);
      for (int r = 0; r < dim; ++r) eig[r] = at(r, r).real();
      return eig;
    }

    for (int p = 0; p < dim; ++p) {
      for (int q = p + 1; q < dim; ++q) {
        const cplx apq = at(p, q);
        const double mag = std::abs(apq);
        if (mag <= tol) continue;
        // Complex Givens rotation annihilating the (p, q) element.
        const cplx phase = apq / mag;
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx sp = s * phase;

        for (int k = 0; k < dim; ++k) {
          const cplx akp = at(k, p);
          const cplx akq = at(k, q);
          at(k, p) = c * akp - std::conj(sp) * akq;
          at(k, q) = sp * akp + c * akq;
        }
        for (int k = 0; k < dim; ++k) {
          const cplx apk = at(p, k);
          const cplx aqk = at(q, k);
          at(p, k) = c * apk - sp * aqk;
          at(q, k) = std::conj(sp) * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }
  throw numeric_error("jacobi_eigenvalues: no convergence within 100 sweeps");
}

double trace_distance_oracle(const StateVector& psi1, const StateVector& psi2) {
  require_pair(psi1, psi2, "trace_distance_oracle");
  const int dim = psi1.n_cut + 1;
  std::vector<cplx> diff(static_cast<size_t>(dim) * dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      diff[static_cast<size_t>(r) * dim + c] =
          psi1.amp[r] * std::conj(psi1.amp[c]) -
          psi2.amp[r] * std::conj(psi2.amp[c]);
  const std::vector<double> eig = jacobi_eigenvalues(std::move(diff), dim);
  double sum = 0.0;
  for (double e : eig) sum += std::abs(e);
  return 0.5 * sum;
}

JointAmplitudeMatrix beamsplitter_mix_with_vacuum(const StateVector& state) {
  require_normalized(state, "beamsplitter_mix_with_vacuum");
  const int dim = state.n_cut + 1;
  JointAmplitudeMatrix joint;
  joint.dim = dim;
  joint.a.assign(static_cast<size_t>(dim) * dim, 0.0);
  // weight(n, k) = sqrt(C(n, k)) 2^{-n/2}, walked along k for each n.
  for (int n = 0; n < dim; ++n) {
    if (state.amp[n] == cplx(0.0)) continue;
    double w = std::pow(0.5, 0.5 * n);  // k = 0 weight
    for (int k = 0; k <= n; ++k) {
      joint.at(k, n - k) = state.amp[n] * w;
      if (k < n)
        w *= std::sqrt(static_cast<double>(n - k) / static_cast<double>(k + 1));
    }
  }
  return joint;
}

double linear_entropy_after_bs(const StateVector& state) {
  const JointAmplitudeMatrix joint = beamsplitter_mix_with_vacuum(state);
  const int dim = joint.dim;
  // G = A A^dag is the reduced density matrix on port 1; S = 1 - sum |G|^2.
  // A[k][j] vanishes for k + j >= dim, which bounds the inner sum.
  double purity = 0.0;
  for (int k = 0; k < dim; ++k) {
    for (int kp = 0; kp < dim; ++kp) {
      cplx g = 0.0;
      const int j_max = dim - 1 - std::max(k, kp);
      for (int j = 0; j <= j_max; ++j)
        g += joint.at(k, j) * std::conj(joint.at(kp, j));
      purity += std::norm(g);
    }
  }
  return 1.0 - purity;
}

}  // namespace sqz::nonclassical
