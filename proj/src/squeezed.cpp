#include "sqz/squeezed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace sqz::squeezed {

namespace {

constexpr double kTruncationBudget = 1e-6;

void require_xi_in_disk(cplx xi, const char* fn) {
  if (std::abs(xi) >= 1.0) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s: |xi| must be < 1", fn);
    throw domain_error(buf);
  }
}

void require_normalized(const StateVector& state, const char* fn) {
  if (!state.normalized || std::abs(state.norm_sq() - 1.0) > 1e-8) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s: state must be normalized", fn);
    throw domain_error(buf);
  }
}

void finish(StateVector& s, double defect, const char* fn) {
  s.norm_defect = defect;
  if (!(defect < kTruncationBudget)) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "%s: truncation defect %.3e exceeds budget %.1e; increase n_cut",
                  fn, defect, kTruncationBudget);
    throw numeric_error(buf);
  }
  const double sum = s.norm_sq();
  if (sum <= 0.0) throw numeric_error(std::string(fn) + ": null state");
  const double inv = 1.0 / std::sqrt(sum);
  for (cplx& a : s.amp) a *= inv;
  s.normalized = true;
}

double top_rows_mass_fraction(const StateVector& s) {
  const double sum = s.norm_sq();
  if (sum <= 0.0) return 1.0;
  double top = std::norm(s.amp[s.n_cut]);
  if (s.n_cut >= 1) top += std::norm(s.amp[s.n_cut - 1]);
  return top / sum;
}

// Scaled recurrence for q_n = P_n / sqrt(n!):
//   q_{n+1} = (alpha / sqrt(n+1)) q_n - xi sqrt(n/(n+1)) q_{n-1},
// which stays bounded wherever the state is normalizable.
std::vector<cplx> scaled_family(cplx alpha, cplx xi, cplx q0, cplx q1,
                                int n_cut) {
  std::vector<cplx> q(n_cut + 1);
  q[0] = q0;
  if (n_cut >= 1) q[1] = q1;
  for (int n = 1; n < n_cut; ++n) {
    const double np1 = static_cast<double>(n + 1);
    q[n + 1] = alpha / std::sqrt(np1) * q[n] -
               xi * std::sqrt(static_cast<double>(n) / np1) * q[n - 1];
    if (!is_finite(q[n + 1]))
      throw numeric_error("squeezed: amplitude recurrence overflow");
  }
  return q;
}

}  // namespace

TauResult tau(cplx xi) {
  require_xi_in_disk(xi, "tau");
  TauResult out;
  out.tau = std::abs(1.0 - xi) / std::abs(1.0 + xi);
  if (std::abs(out.tau - 1.0) <= 1e-12)
    out.regime = 'a';
  else
    out.regime = out.tau < 1.0 ? 'b' : 'c';
  return out;
}

StateVector squeezed_vacuum(cplx xi, int n_cut) {
  require_xi_in_disk(xi, "squeezed_vacuum");
  if (n_cut < 1) throw domain_error("squeezed_vacuum: n_cut must be >= 1");
  StateVector s;
  s.n_cut = n_cut;
  s.amp.assign(n_cut + 1, 0.0);
  // raw amp_{2n} = sqrt((2n)!)/(2^n n!) (-xi)^n, built from stable ratios.
  cplx term = 1.0;
  s.amp[0] = term;
  for (int n = 1; 2 * n <= n_cut; ++n) {
    const double k = static_cast<double>(n);
    term *= -xi * std::sqrt((2.0 * k - 1.0) / (2.0 * k));
    s.amp[2 * n] = term;
  }
  const double closed = 1.0 / std::sqrt(1.0 - std::norm(xi));
  const double defect = std::abs(1.0 - s.norm_sq() / closed);
  finish(s, defect, "squeezed_vacuum");
  return s;
}

StateVector odd_photon_squeezed(cplx xi, int n_cut) {
  require_xi_in_disk(xi, "odd_photon_squeezed");
  if (n_cut < 1) throw domain_error("odd_photon_squeezed: n_cut must be >= 1");
  StateVector s;
  s.n_cut = n_cut;
  s.amp.assign(n_cut + 1, 0.0);
  // raw amp_{2n+1} = 2^n n!/sqrt((2n+1)!) (-xi)^n.
  cplx term = 1.0;
  s.amp[1] = term;
  for (int n = 1; 2 * n + 1 <= n_cut; ++n) {
    const double k = static_cast<double>(n);
    term *= -xi * std::sqrt((2.0 * k) / (2.0 * k + 1.0));
    s.amp[2 * n + 1] = term;
  }
  const double defect = std::abs(1.0 - s.norm_sq() / odd_photon_norm_sq_closed(xi));
  finish(s, defect, "odd_photon_squeezed");
  return s;
}

StateVector conventional_squeezed(cplx alpha, cplx xi, int n_cut) {
  require_xi_in_disk(xi, "conventional_squeezed");
  if (n_cut < 1) throw domain_error("conventional_squeezed: n_cut must be >= 1");
  StateVector s;
  s.n_cut = n_cut;
  s.amp = scaled_family(alpha, xi, 1.0, alpha, n_cut);
  const double defect =
      std::abs(1.0 - s.norm_sq() / conventional_norm_sq_closed(alpha, xi));
  finish(s, defect, "conventional_squeezed");
  return s;
}

StateVector associated_squeezed(cplx alpha, cplx xi, int n_cut) {
  require_xi_in_disk(xi, "associated_squeezed");
  if (n_cut < 1) throw domain_error("associated_squeezed: n_cut must be >= 1");
  StateVector s;
  s.n_cut = n_cut;
  s.amp = scaled_family(alpha, xi, 0.0, 1.0, n_cut);
  // No closed normalization off the boundaries; report the top-row mass.
  const double defect = top_rows_mass_fraction(s);
  finish(s, defect, "associated_squeezed");
  return s;
}

StateVector distorted_coherent(cplx alpha, int n_cut) {
  if (n_cut < 1) throw domain_error("distorted_coherent: n_cut must be >= 1");
  StateVector s;
  s.n_cut = n_cut;
  s.amp.assign(n_cut + 1, 0.0);
  if (alpha == cplx(0.0)) {
    s.amp[1] = 1.0;
    finish(s, 0.0, "distorted_coherent");
    return s;
  }
  // raw amp_{n+1} = alpha^n / sqrt((n+1)!).
  cplx term = 1.0;
  s.amp[1] = term;
  for (int n = 1; n < n_cut; ++n) {
    term *= alpha / std::sqrt(static_cast<double>(n + 1));
    s.amp[n + 1] = term;
  }
  const double a2 = std::norm(alpha);
  const double closed = (std::exp(a2) - 1.0) / a2;
  const double defect = std::abs(1.0 - s.norm_sq() / closed);
  finish(s, defect, "distorted_coherent");
  return s;
}

double conventional_norm_sq_closed(cplx alpha, cplx xi) {
  require_xi_in_disk(xi, "conventional_norm_sq_closed");
  const double one_minus = 1.0 - std::norm(xi);
  const double expo =
      (std::norm(alpha) - (xi * std::conj(alpha) * std::conj(alpha)).real()) /
      one_minus;
  return std::exp(expo) / std::sqrt(one_minus);
}

double odd_photon_norm_sq_closed(cplx xi) {
  require_xi_in_disk(xi, "odd_photon_norm_sq_closed");
  const double r = std::abs(xi);
  if (r < 1e-12) return 1.0;  // removable limit at xi = 0
  return std::asin(r) / (r * std::sqrt(1.0 - r * r));
}

double mean_photon_plus_closed(cplx alpha, cplx xi) {
  require_xi_in_disk(xi, "mean_photon_plus_closed");
  const double x2 = std::norm(xi);
  const double a2 = std::norm(alpha);
  const double one_minus = 1.0 - x2;
  const double cross = 2.0 * (alpha * alpha * std::conj(xi)).real();
  return (x2 * one_minus + a2 * (1.0 + x2) - cross) / (one_minus * one_minus);
}

double mean_photon_minus_alpha_zero(cplx xi) {
  require_xi_in_disk(xi, "mean_photon_minus_alpha_zero");
  const double r = std::abs(xi);
  if (r < 1e-12) return 1.0;  // |1> limit
  return r / (std::asin(r) * std::sqrt(1.0 - r * r)) + r * r / (1.0 - r * r);
}

double mean_photon_minus_xi_zero(cplx alpha) {
  const double a2 = std::norm(alpha);
  if (a2 < 1e-14) return 1.0;  // |1> limit
  return a2 / (1.0 - std::exp(-a2));
}

std::vector<double> photon_probabilities(const StateVector& state) {
  require_normalized(state, "photon_probabilities");
  std::vector<double> p(state.amp.size());
  for (size_t n = 0; n < state.amp.size(); ++n) p[n] = std::norm(state.amp[n]);
  return p;
}

double mean_photon(const StateVector& state) {
  require_normalized(state, "mean_photon");
  double acc = 0.0;
  for (int n = 0; n <= state.n_cut; ++n)
    acc += static_cast<double>(n) * std::norm(state.amp[n]);
  return acc;
}

double eigen_residual(const StateVector& state, cplx alpha, cplx xi,
                      bool distorted) {
  require_normalized(state, "eigen_residual");
  const int n_cut = state.n_cut;
  const StateVector low = fock::apply_lower(state, distorted);
  const StateVector high = fock::apply_raise(state, distorted);
  double acc = 0.0;
  for (int n = 0; n <= n_cut - 2; ++n)  // top two rows carry truncation junk
    acc += std::norm(low.amp[n] + xi * high.amp[n] - alpha * state.amp[n]);
  return std::sqrt(acc);
}

double distorted_commutator_expectation(const StateVector& state) {
  require_normalized(state, "distorted_commutator_expectation");
  const double p0 = std::norm(state.amp[0]);
  const double p1 = state.n_cut >= 1 ? std::norm(state.amp[1]) : 0.0;
  return 1.0 - p0 + p1;
}

namespace {

bool parse_indexed_key(const std::string& family, const char* prefix, int* n) {
  const size_t len = std::string(prefix).size();
  if (family.compare(0, len, prefix) != 0) return false;
  char extra;
  if (std::sscanf(family.c_str() + len, "%d%c", n, &extra) != 1 || *n < 0)
    throw domain_error("state spec: malformed index in family key '" + family + "'");
  return true;
}

double mean_photon_estimate(const StateSpec& spec) {
  const double a2 = std::norm(spec.alpha);
  int idx = 0;
  if (spec.family == "glauber") return a2;
  if (spec.family == "sqvac")
    return std::norm(spec.xi) / (1.0 - std::norm(spec.xi));
  if (spec.family == "oddsq") return mean_photon_minus_alpha_zero(spec.xi);
  if (spec.family == "squeezed")
    return mean_photon_plus_closed(spec.alpha, spec.xi);
  if (spec.family == "assoc")
    return std::max(mean_photon_plus_closed(spec.alpha, spec.xi),
                    mean_photon_minus_alpha_zero(spec.xi)) +
           2.0;
  if (spec.family == "distorted") return mean_photon_minus_xi_zero(spec.alpha);
  if (parse_indexed_key(spec.family, "fock:", &idx)) return double(idx);
  if (parse_indexed_key(spec.family, "added:", &idx)) return a2 + double(idx);
  throw domain_error("state spec: unrecognized family key '" + spec.family + "'");
}

bool family_uses_xi(const std::string& family) {
  return family == "sqvac" || family == "oddsq" || family == "squeezed" ||
         family == "assoc";
}

}  // namespace

int auto_n_cut(const StateSpec& spec) {
  const double nbar = mean_photon_estimate(spec);
  double tail = 0.0;
  if (family_uses_xi(spec.family)) {
    const double r = std::abs(spec.xi);
    if (r > 1e-3) tail = 28.0 / (-std::log(r));
  }
  const double want = nbar + 12.0 * std::sqrt(nbar + 1.0) + tail + 8.0;
  return std::clamp(static_cast<int>(std::ceil(want)), 16, 4096);
}

StateVector make_state(const StateSpec& spec) {
  StateSpec s = spec;
  if (!family_uses_xi(s.family) && s.xi != cplx(0.0))
    throw domain_error("state spec: family '" + s.family +
                       "' requires xi = 0");
  if (family_uses_xi(s.family)) require_xi_in_disk(s.xi, "make_state");
  const bool alpha_free = s.family == "squeezed" || s.family == "assoc" ||
                          s.family == "distorted" || s.family == "glauber" ||
                          s.family.rfind("added:", 0) == 0;
  if (!alpha_free && s.alpha != cplx(0.0))
    throw domain_error("state spec: family '" + s.family +
                       "' does not take alpha");
  int idx = 0;
  if (parse_indexed_key(s.family, "fock:", &idx)) {
    const int n_cut = s.n_cut > 0 ? s.n_cut : std::max(idx + 2, 16);
    return fock::basis_state(idx, n_cut);
  }
  const int n_cut = s.n_cut > 0 ? s.n_cut : auto_n_cut(s);

  if (s.family == "glauber") return fock::coherent_state(s.alpha, n_cut);
  if (s.family == "sqvac") return squeezed_vacuum(s.xi, n_cut);
  if (s.family == "oddsq") return odd_photon_squeezed(s.xi, n_cut);
  if (s.family == "squeezed")
    return conventional_squeezed(s.alpha, s.xi, n_cut);
  if (s.family == "assoc") return associated_squeezed(s.alpha, s.xi, n_cut);
  if (s.family == "distorted") return distorted_coherent(s.alpha, n_cut);
  if (parse_indexed_key(s.family, "added:", &idx)) {
    if (idx == 0) return fock::coherent_state(s.alpha, n_cut);
    if (idx == 1) return fock::photon_added_coherent(s.alpha, n_cut);
    // Repeated creation-operator action, renormalized.
    StateVector st = fock::coherent_state(s.alpha, n_cut);
    auto ops = fock::ladder_matrices(n_cut);
    for (int k = 0; k < idx; ++k) st = ops.a_dag.apply(st);
    fock::renormalize(st);
    st.norm_defect = top_rows_mass_fraction(st);
    return st;
  }
  throw domain_error("state spec: unrecognized family key '" + s.family + "'");
}

}  // namespace sqz::squeezed
