#include "sqz.h"

#include <cstring>
#include <new>
#include <string>

#include "sqz/fock.hpp"
#include "sqz/nonclassical.hpp"
#include "sqz/polyfam.hpp"
#include "sqz/squeezed.hpp"
#include "sqz/types.hpp"
#include "sqz/verify.hpp"
#include "sqz/wigner.hpp"

struct sqz_state {
  sqz::fock::StateVector v;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return SQZ_OK;
  } catch (const sqz::domain_error& e) {
    g_last_error = e.what();
    return SQZ_ERR_DOMAIN;
  } catch (const sqz::io_error& e) {
    g_last_error = e.what();
    return SQZ_ERR_IO;
  } catch (const sqz::numeric_error& e) {
    g_last_error = e.what();
    return SQZ_ERR_NUMERIC;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SQZ_ERR_NUMERIC;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SQZ_ERR_NUMERIC;
  }
}

int require(bool ok, const char* msg) {
  if (!ok) {
    g_last_error = msg;
    return SQZ_ERR_DOMAIN;
  }
  return SQZ_OK;
}

sqz::squeezed::StateSpec make_spec(const char* family, double alpha_re,
                                   double alpha_im, double xi_re,
                                   double xi_im, int n_cut) {
  sqz::squeezed::StateSpec spec;
  spec.family = family ? family : "";
  spec.alpha = sqz::cplx(alpha_re, alpha_im);
  spec.xi = sqz::cplx(xi_re, xi_im);
  spec.n_cut = n_cut;
  return spec;
}

}  // namespace

extern "C" {

const char* sqz_version(void) { return "0.1.0"; }

const char* sqz_last_error(void) { return g_last_error.c_str(); }

int sqz_state_create(const char* family, double alpha_re, double alpha_im,
                     double xi_re, double xi_im, int n_cut, sqz_state** out) {
  if (int rc = require(out != nullptr && family != nullptr,
                       "sqz_state_create: null argument"))
    return rc;
  *out = nullptr;
  return guarded([&] {
    auto spec = make_spec(family, alpha_re, alpha_im, xi_re, xi_im, n_cut);
    auto state = new sqz_state{sqz::squeezed::make_state(spec)};
    *out = state;
  });
}

void sqz_state_destroy(sqz_state* state) { delete state; }

int sqz_auto_n_cut(const char* family, double alpha_re, double alpha_im,
                   double xi_re, double xi_im, int* out) {
  if (int rc = require(out != nullptr && family != nullptr,
                       "sqz_auto_n_cut: null argument"))
    return rc;
  return guarded([&] {
    auto spec = make_spec(family, alpha_re, alpha_im, xi_re, xi_im, 0);
    *out = sqz::squeezed::auto_n_cut(spec);
  });
}

int sqz_state_n_cut(const sqz_state* state, int* out) {
  if (int rc = require(state != nullptr && out != nullptr,
                       "sqz_state_n_cut: null argument"))
    return rc;
  *out = state->v.n_cut;
  return SQZ_OK;
}

int sqz_state_norm_defect(const sqz_state* state, double* out) {
  if (int rc = require(state != nullptr && out != nullptr,
                       "sqz_state_norm_defect: null argument"))
    return rc;
  *out = state->v.norm_defect;
  return SQZ_OK;
}

int sqz_state_amplitudes(const sqz_state* state, double* buffer,
                         size_t capacity) {
  if (int rc = require(state != nullptr && buffer != nullptr,
                       "sqz_state_amplitudes: null argument"))
    return rc;
  const size_t need = 2 * state->v.amp.size();
  if (int rc = require(capacity >= need, "sqz_state_amplitudes: buffer too small"))
    return rc;
  for (size_t n = 0; n < state->v.amp.size(); ++n) {
    buffer[2 * n] = state->v.amp[n].real();
    buffer[2 * n + 1] = state->v.amp[n].imag();
  }
  return SQZ_OK;
}

int sqz_state_probabilities(const sqz_state* state, double* buffer,
                            size_t capacity) {
  if (int rc = require(state != nullptr && buffer != nullptr,
                       "sqz_state_probabilities: null argument"))
    return rc;
  if (int rc = require(capacity >= state->v.amp.size(),
                       "sqz_state_probabilities: buffer too small"))
    return rc;
  return guarded([&] {
    const auto p = sqz::squeezed::photon_probabilities(state->v);
    std::memcpy(buffer, p.data(), p.size() * sizeof(double));
  });
}

int sqz_state_mean_photon(const sqz_state* state, double* out) {
  if (int rc = require(state != nullptr && out != nullptr,
                       "sqz_state_mean_photon: null argument"))
    return rc;
  return guarded([&] { *out = sqz::squeezed::mean_photon(state->v); });
}

int sqz_state_quadrature_stats(const sqz_state* state, int distorted,
                               double* var_x, double* var_p, double* cov_xp) {
  if (int rc = require(state != nullptr && var_x != nullptr &&
                           var_p != nullptr && cov_xp != nullptr,
                       "sqz_state_quadrature_stats: null argument"))
    return rc;
  return guarded([&] {
    const auto stats = sqz::fock::quadrature_stats(state->v, distorted != 0);
    *var_x = stats.var_x;
    *var_p = stats.var_p;
    *cov_xp = stats.cov_xp;
  });
}

int sqz_state_eigen_residual(const sqz_state* state, double alpha_re,
                             double alpha_im, double xi_re, double xi_im,
                             int distorted, double* out) {
  if (int rc = require(state != nullptr && out != nullptr,
                       "sqz_state_eigen_residual: null argument"))
    return rc;
  return guarded([&] {
    *out = sqz::squeezed::eigen_residual(state->v, sqz::cplx(alpha_re, alpha_im),
                                         sqz::cplx(xi_re, xi_im), distorted != 0);
  });
}

int sqz_state_write(const sqz_state* state, const char* path) {
  if (int rc = require(state != nullptr && path != nullptr,
                       "sqz_state_write: null argument"))
    return rc;
  return guarded([&] { sqz::fock::write_state_file(state->v, path); });
}

int sqz_tau(double xi_re, double xi_im, double* tau, char* regime) {
  if (int rc = require(tau != nullptr && regime != nullptr,
                       "sqz_tau: null argument"))
    return rc;
  return guarded([&] {
    const auto result = sqz::squeezed::tau(sqz::cplx(xi_re, xi_im));
    *tau = result.tau;
    *regime = result.regime;
  });
}

int sqz_poly(char sign, int n, double alpha_re, double alpha_im, double xi_re,
             double xi_im, double* out_re, double* out_im) {
  if (int rc = require(out_re != nullptr && out_im != nullptr,
                       "sqz_poly: null argument"))
    return rc;
  if (int rc = require(sign == '+' || sign == '-', "sqz_poly: sign must be + or -"))
    return rc;
  return guarded([&] {
    const sqz::cplx alpha(alpha_re, alpha_im);
    const sqz::cplx xi(xi_re, xi_im);
    const sqz::cplx v = sign == '+' ? sqz::polyfam::p_plus(n, alpha, xi)
                                    : sqz::polyfam::p_minus(n, alpha, xi);
    *out_re = v.real();
    *out_im = v.imag();
  });
}

int sqz_poly_closed(char sign, int n, double alpha_re, double alpha_im,
                    double xi_re, double xi_im, double* out_re, double* out_im) {
  if (int rc = require(out_re != nullptr && out_im != nullptr,
                       "sqz_poly_closed: null argument"))
    return rc;
  if (int rc = require(sign == '+' || sign == '-',
                       "sqz_poly_closed: sign must be + or -"))
    return rc;
  return guarded([&] {
    const sqz::cplx alpha(alpha_re, alpha_im);
    const sqz::cplx xi(xi_re, xi_im);
    const sqz::cplx v = sign == '+'
                            ? sqz::polyfam::p_plus_closed(n, alpha, xi)
                            : sqz::polyfam::p_minus_hypergeometric(n, alpha, xi);
    *out_re = v.real();
    *out_im = v.imag();
  });
}

int sqz_mean_photon_plus_closed(double alpha_re, double alpha_im, double xi_re,
                                double xi_im, double* out) {
  if (int rc = require(out != nullptr, "sqz_mean_photon_plus_closed: null argument"))
    return rc;
  return guarded([&] {
    *out = sqz::squeezed::mean_photon_plus_closed(sqz::cplx(alpha_re, alpha_im),
                                                  sqz::cplx(xi_re, xi_im));
  });
}

int sqz_mean_photon_minus_alpha0(double xi_re, double xi_im, double* out) {
  if (int rc = require(out != nullptr, "sqz_mean_photon_minus_alpha0: null argument"))
    return rc;
  return guarded([&] {
    *out = sqz::squeezed::mean_photon_minus_alpha_zero(sqz::cplx(xi_re, xi_im));
  });
}

int sqz_mean_photon_minus_xi0(double alpha_re, double alpha_im, double* out) {
  if (int rc = require(out != nullptr, "sqz_mean_photon_minus_xi0: null argument"))
    return rc;
  return guarded([&] {
    *out = sqz::squeezed::mean_photon_minus_xi_zero(sqz::cplx(alpha_re, alpha_im));
  });
}

int sqz_wigner_point(const sqz_state* state, double z_re, double z_im,
                     double* out) {
  if (int rc = require(state != nullptr && out != nullptr,
                       "sqz_wigner_point: null argument"))
    return rc;
  return guarded([&] {
    *out = sqz::wigner::wigner_point(state->v, sqz::cplx(z_re, z_im));
  });
}

int sqz_wigner_grid(const sqz_state* state, double re_min, double re_max,
                    int re_steps, double im_min, double im_max, int im_steps,
                    double* values, size_t capacity) {
  if (int rc = require(state != nullptr && values != nullptr,
                       "sqz_wigner_grid: null argument"))
    return rc;
  if (int rc = require(re_steps >= 1 && im_steps >= 1 &&
                           capacity >= static_cast<size_t>(re_steps) * im_steps,
                       "sqz_wigner_grid: buffer too small"))
    return rc;
  return guarded([&] {
    sqz::wigner::GridSpec spec;
    spec.re_min = re_min;
    spec.re_max = re_max;
    spec.re_steps = re_steps;
    spec.im_min = im_min;
    spec.im_max = im_max;
    spec.im_steps = im_steps;
    const auto grid = sqz::wigner::wigner_grid(state->v, spec);
    std::memcpy(values, grid.values.data(), grid.values.size() * sizeof(double));
  });
}

int sqz_trace_distance(const sqz_state* a, const sqz_state* b, double* out) {
  if (int rc = require(a != nullptr && b != nullptr && out != nullptr,
                       "sqz_trace_distance: null argument"))
    return rc;
  return guarded(
      [&] { *out = sqz::nonclassical::trace_distance_pure(a->v, b->v); });
}

int sqz_trace_distance_oracle(const sqz_state* a, const sqz_state* b,
                              double* out) {
  if (int rc = require(a != nullptr && b != nullptr && out != nullptr,
                       "sqz_trace_distance_oracle: null argument"))
    return rc;
  return guarded(
      [&] { *out = sqz::nonclassical::trace_distance_oracle(a->v, b->v); });
}

int sqz_linear_entropy_bs(const sqz_state* state, double* out) {
  if (int rc = require(state != nullptr && out != nullptr,
                       "sqz_linear_entropy_bs: null argument"))
    return rc;
  return guarded(
      [&] { *out = sqz::nonclassical::linear_entropy_after_bs(state->v); });
}

int sqz_verify(const char* profile, char** report_json, int* all_pass) {
  if (int rc = require(report_json != nullptr && all_pass != nullptr,
                       "sqz_verify: null argument"))
    return rc;
  *report_json = nullptr;
  return guarded([&] {
    const auto report =
        sqz::verify::run_verification(profile ? profile : "default");
    const std::string json = sqz::verify::report_to_json(report);
    char* out = new char[json.size() + 1];
    std::memcpy(out, json.c_str(), json.size() + 1);
    *report_json = out;
    *all_pass = report.all_pass ? 1 : 0;
  });
}

void sqz_string_free(char* str) { delete[] str; }

}  // extern "C"
