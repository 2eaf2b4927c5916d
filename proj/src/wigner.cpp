#include "sqz/wigner.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace sqz::wigner {

namespace {

void require_normalized(const StateVector& state, const char* fn) {
  if (!state.normalized || std::abs(state.norm_sq() - 1.0) > 1e-8) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s: state must be normalized", fn);
    throw domain_error(buf);
  }
}

// L_m^k(x) for m = 0..(rows-1), one fixed superscript k per call.
void laguerre_row(int k, double x, int rows, std::vector<double>& out) {
  out.resize(rows);
  if (rows <= 0) return;
  out[0] = 1.0;
  if (rows == 1) return;
  out[1] = 1.0 + k - x;
  for (int m = 1; m + 1 < rows; ++m) {
    const double mm = static_cast<double>(m);
    out[m + 1] =
        ((2.0 * mm + k + 1.0 - x) * out[m] - (mm + k) * out[m - 1]) / (mm + 1.0);
  }
}

}  // namespace

double WignerGrid::re_at(int ix) const {
  if (spec.re_steps == 1) return spec.re_min;
  return spec.re_min + (spec.re_max - spec.re_min) * ix / (spec.re_steps - 1);
}

double WignerGrid::im_at(int iy) const {
  if (spec.im_steps == 1) return spec.im_min;
  return spec.im_min + (spec.im_max - spec.im_min) * iy / (spec.im_steps - 1);
}

double wigner_point(const StateVector& state, cplx z) {
  require_normalized(state, "wigner_point");
  const int dim = state.n_cut + 1;
  const double x4 = 4.0 * std::norm(z);
  const cplx two_z = 2.0 * z;

  // Laguerre table lag[k][m] = L_m^k(x4) and the combined prefactor
  // pref[k][m] = (2z)^k sqrt(m! / (m+k)!).  The prefactor is accumulated as
  // one product because its factors overflow/underflow separately for large
  // cutoffs while the product stays below e^{2|z|^2}.
  std::vector<std::vector<double>> lag(dim);
  std::vector<std::vector<cplx>> pref(dim);
  for (int k = 0; k < dim; ++k) {
    laguerre_row(k, x4, dim - k, lag[k]);
    pref[k].resize(dim - k);
    pref[k][0] = k == 0 ? cplx(1.0)
                        : pref[k - 1][0] * two_z / std::sqrt(static_cast<double>(k));
    for (int m = 0; m + k + 1 < dim; ++m)
      pref[k][m + 1] = pref[k][m] * std::sqrt((m + 1.0) / (m + 1.0 + k));
  }

  // Full hermitian double sum, fixed (m, n) order; n >= m uses the analytic
  // kernel, n < m its conjugate-transposed form.
  cplx total = 0.0;
  for (int m = 0; m < dim; ++m) {
    if (state.amp[m] == cplx(0.0)) continue;
    const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
    for (int n = 0; n < dim; ++n) {
      if (state.amp[n] == cplx(0.0)) continue;
      const cplx rho = state.amp[m] * std::conj(state.amp[n]);
      if (n >= m) {
        const int k = n - m;
        total += rho * sign_m * pref[k][m] * lag[k][m];
      } else {
        const int k = m - n;
        const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
        total += rho * sign_n * std::conj(pref[k][n]) * lag[k][n];
      }
    }
  }

  if (!is_finite(total))
    throw numeric_error("wigner_point: kernel sum overflowed; reduce n_cut or |z|");
  const double envelope = std::exp(-2.0 * std::norm(z));
  if (std::abs(total.imag()) * envelope > 1e-10)
    throw numeric_error("wigner_point: hermitian sum left an imaginary residue");
  return envelope * total.real();
}

OracleResult wigner_quadrature_oracle(const StateVector& state, cplx z,
                                      double radius, int steps) {
  require_normalized(state, "wigner_quadrature_oracle");
  if (radius <= 0.0 || steps < 2)
    throw domain_error("wigner_quadrature_oracle: bad radius or steps");
  const int dim = state.n_cut + 1;
  const double h = 2.0 * radius / steps;

  // g(u) = sum_n amp_n^* u^n / sqrt(n!);  <psi|beta> = e^{-|b|^2/2} g(beta)
  // and <-beta|psi> = conj(g(-beta)).
  std::vector<double> inv_sqrt_fact(dim);
  inv_sqrt_fact[0] = 1.0;
  for (int n = 1; n < dim; ++n)
    inv_sqrt_fact[n] = inv_sqrt_fact[n - 1] / std::sqrt(static_cast<double>(n));
  auto g = [&](cplx u) {
    cplx acc = 0.0;
    cplx upow = 1.0;
    for (int n = 0; n < dim; ++n) {
      acc += std::conj(state.amp[n]) * inv_sqrt_fact[n] * upow;
      upow *= u;
    }
    return acc;
  };

  cplx sum = 0.0;
  for (int iy = 0; iy < steps; ++iy) {
    const double by = -radius + (iy + 0.5) * h;
    for (int ix = 0; ix < steps; ++ix) {
      const double bx = -radius + (ix + 0.5) * h;
      const cplx beta(bx, by);
      if (std::norm(beta) > radius * radius) continue;
      const cplx bra = std::conj(g(-beta));
      const cplx ket = g(beta);
      const cplx phase = std::exp(2.0 * (z * std::conj(beta) - std::conj(z) * beta));
      sum += std::exp(-std::norm(beta)) * bra * ket * phase;
    }
  }
  sum *= h * h / M_PI * std::exp(2.0 * std::norm(z));

  OracleResult out;
  out.value = sum.real();
  out.imag_residual = std::abs(sum.imag());
  out.radius_tail = std::exp(-radius * radius);
  out.converged = out.radius_tail < 1e-12;
  return out;
}

WignerGrid wigner_grid(const StateVector& state, const GridSpec& spec) {
  if (spec.re_steps < 1 || spec.im_steps < 1)
    throw domain_error("wigner_grid: steps must be >= 1");
  WignerGrid grid;
  grid.spec = spec;
  grid.values.resize(static_cast<size_t>(spec.re_steps) * spec.im_steps);
  for (int iy = 0; iy < spec.im_steps; ++iy) {
    const double im = grid.im_at(iy);
    for (int ix = 0; ix < spec.re_steps; ++ix) {
      grid.values[static_cast<size_t>(iy) * spec.re_steps + ix] =
          wigner_point(state, cplx(grid.re_at(ix), im));
    }
  }
  return grid;
}

void write_grid_csv(const WignerGrid& grid, std::ostream& os,
                    const std::vector<std::string>& metadata) {
  for (const std::string& line : metadata) os << "# " << line << "\n";
  os << "re_z, im_z, w\n";
  char buf[128];
  for (int iy = 0; iy < grid.spec.im_steps; ++iy) {
    for (int ix = 0; ix < grid.spec.re_steps; ++ix) {
      std::snprintf(buf, sizeof(buf), "%.17g, %.17g, %.17g\n", grid.re_at(ix),
                    grid.im_at(iy),
                    grid.values[static_cast<size_t>(iy) * grid.spec.re_steps + ix]);
      os << buf;
    }
  }
}

void write_grid_json(const WignerGrid& grid, std::ostream& os,
                     const std::vector<std::string>& metadata) {
  nlohmann::ordered_json j;
  j["metadata"] = metadata;
  j["re_axis"] = {{"min", grid.spec.re_min},
                  {"max", grid.spec.re_max},
                  {"steps", grid.spec.re_steps}};
  j["im_axis"] = {{"min", grid.spec.im_min},
                  {"max", grid.spec.im_max},
                  {"steps", grid.spec.im_steps}};
  j["order"] = "im_major";
  j["values"] = grid.values;
  os << j.dump(2) << "\n";
}

}  // namespace sqz::wigner
