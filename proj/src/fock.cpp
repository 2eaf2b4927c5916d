#include "sqz/fock.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sqz::fock {

namespace {

constexpr double kTruncationBudget = 1e-6;

void require_normalized(const StateVector& state, const char* fn) {
  if (!state.normalized || std::abs(state.norm_sq() - 1.0) > 1e-8) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s: state must be normalized", fn);
    throw domain_error(buf);
  }
}

void check_defect(double defect, const char* fn) {
  if (!(defect < kTruncationBudget)) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "%s: truncation defect %.3e exceeds budget %.1e; increase n_cut",
                  fn, defect, kTruncationBudget);
    throw numeric_error(buf);
  }
}

}  // namespace

double StateVector::norm_sq() const {
  double s = 0.0;
  for (const cplx& a : amp) s += std::norm(a);
  return s;
}

OperatorMatrix OperatorMatrix::zero(int dim, std::string label) {
  OperatorMatrix op;
  op.dim = dim;
  op.m.assign(static_cast<size_t>(dim) * dim, 0.0);
  op.label = std::move(label);
  return op;
}

OperatorMatrix OperatorMatrix::adjoint() const {
  OperatorMatrix out = zero(dim, label + "^dag");
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) out.at(c, r) = std::conj(at(r, c));
  return out;
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& rhs) const {
  if (dim != rhs.dim) throw domain_error("OperatorMatrix: dimension mismatch");
  OperatorMatrix out = zero(dim, label + "*" + rhs.label);
  for (int r = 0; r < dim; ++r) {
    for (int k = 0; k < dim; ++k) {
      const cplx v = at(r, k);
      if (v == cplx(0.0)) continue;
      for (int c = 0; c < dim; ++c) out.at(r, c) += v * rhs.at(k, c);
    }
  }
  return out;
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& rhs) const {
  if (dim != rhs.dim) throw domain_error("OperatorMatrix: dimension mismatch");
  OperatorMatrix out = *this;
  for (size_t i = 0; i < m.size(); ++i) out.m[i] += rhs.m[i];
  return out;
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& rhs) const {
  if (dim != rhs.dim) throw domain_error("OperatorMatrix: dimension mismatch");
  OperatorMatrix out = *this;
  for (size_t i = 0; i < m.size(); ++i) out.m[i] -= rhs.m[i];
  return out;
}

OperatorMatrix OperatorMatrix::scaled(cplx factor) const {
  OperatorMatrix out = *this;
  for (cplx& v : out.m) v *= factor;
  return out;
}

StateVector OperatorMatrix::apply(const StateVector& state) const {
  if (dim != state.n_cut + 1)
    throw domain_error("OperatorMatrix: state dimension mismatch");
  StateVector out;
  out.n_cut = state.n_cut;
  out.amp.assign(dim, 0.0);
  out.normalized = false;
  for (int r = 0; r < dim; ++r) {
    cplx acc = 0.0;
    for (int c = 0; c < dim; ++c) acc += at(r, c) * state.amp[c];
    out.amp[r] = acc;
  }
  return out;
}

LadderOps ladder_matrices(int n_cut) {
  if (n_cut < 1) throw domain_error("ladder_matrices: n_cut must be >= 1");
  const int dim = n_cut + 1;
  LadderOps ops{OperatorMatrix::zero(dim, "a"), OperatorMatrix::zero(dim, "a_dag"),
                OperatorMatrix::zero(dim, "num")};
  for (int n = 1; n <= n_cut; ++n) ops.a.at(n - 1, n) = std::sqrt(double(n));
  for (int n = 0; n < n_cut; ++n) ops.a_dag.at(n + 1, n) = std::sqrt(double(n + 1));
  for (int n = 0; n <= n_cut; ++n) ops.num.at(n, n) = double(n);
  return ops;
}

DistortedOps distorted_ladder_matrices(int n_cut) {
  if (n_cut < 2) throw domain_error("distorted_ladder_matrices: n_cut must be >= 2");
  const int dim = n_cut + 1;
  DistortedOps ops{OperatorMatrix::zero(dim, "a2"),
                   OperatorMatrix::zero(dim, "a2_dag")};
  // a2|1> = 0 and a2^dag|0> = 0; the shifted sqrt(n+1) actions start at n=1.
  for (int n = 1; n < n_cut; ++n) {
    ops.a2.at(n, n + 1) = std::sqrt(double(n + 1));
    ops.a2_dag.at(n + 1, n) = std::sqrt(double(n + 1));
  }
  return ops;
}

StateVector basis_state(int n, int n_cut) {
  if (n < 0 || n > n_cut) throw domain_error("basis_state: n out of range");
  StateVector s;
  s.n_cut = n_cut;
  s.amp.assign(n_cut + 1, 0.0);
  s.amp[n] = 1.0;
  s.normalized = true;
  s.norm_defect = 0.0;
  return s;
}

StateVector coherent_state(cplx alpha, int n_cut) {
  if (n_cut < 1) throw domain_error("coherent_state: n_cut must be >= 1");
  StateVector s;
  s.n_cut = n_cut;
  s.amp.assign(n_cut + 1, 0.0);
  cplx term = 1.0;  // alpha^n / sqrt(n!)
  s.amp[0] = term;
  for (int n = 1; n <= n_cut; ++n) {
    term *= alpha / std::sqrt(double(n));
    s.amp[n] = term;
  }
  const double sum = s.norm_sq();
  const double exact = std::exp(std::norm(alpha));
  s.norm_defect = std::abs(1.0 - sum / exact);
  check_defect(s.norm_defect, "coherent_state");
  const double inv = 1.0 / std::sqrt(sum);
  for (cplx& a : s.amp) a *= inv;
  s.normalized = true;
  return s;
}

StateVector photon_added_coherent(cplx alpha, int n_cut) {
  if (n_cut < 1) throw domain_error("photon_added_coherent: n_cut must be >= 1");
  StateVector s;
  s.n_cut = n_cut;
  s.amp.assign(n_cut + 1, 0.0);
  cplx term = 1.0;  // alpha^n / sqrt(n!)
  for (int n = 0; n < n_cut; ++n) {
    s.amp[n + 1] = std::sqrt(double(n + 1)) * term;
    term *= alpha / std::sqrt(double(n + 1));
  }
  const double sum = s.norm_sq();
  const double exact = std::exp(std::norm(alpha)) * (1.0 + std::norm(alpha));
  s.norm_defect = std::abs(1.0 - sum / exact);
  check_defect(s.norm_defect, "photon_added_coherent");
  const double inv = 1.0 / std::sqrt(sum);
  for (cplx& a : s.amp) a *= inv;
  s.normalized = true;
  return s;
}

namespace {

// result = exp(M) psi by the Taylor series of matrix actions.
StateVector apply_exp_series(const OperatorMatrix& op, const StateVector& psi) {
  StateVector term = psi;
  StateVector result = psi;
  const int dim = op.dim;
  for (int k = 1; k <= 500; ++k) {
    StateVector next;
    next.n_cut = psi.n_cut;
    next.amp.assign(dim, 0.0);
    for (int r = 0; r < dim; ++r) {
      cplx acc = 0.0;
      for (int c = 0; c < dim; ++c) acc += op.at(r, c) * term.amp[c];
      next.amp[r] = acc / double(k);
    }
    term = next;
    double tn = 0.0;
    for (const cplx& a : term.amp) tn += std::norm(a);
    for (int r = 0; r < dim; ++r) result.amp[r] += term.amp[r];
    if (std::sqrt(tn) < 1e-16) return result;
  }
  throw numeric_error("squeeze_apply: exponential series did not converge");
}

}  // namespace

StateVector squeeze_apply(cplx xi, const StateVector& state) {
  if (std::abs(xi) >= 1.0) throw domain_error("squeeze_apply: |xi| must be < 1");
  const int n_cut = state.n_cut;
  if (xi == cplx(0.0)) return state;

  const int dim = n_cut + 1;
  LadderOps ops = ladder_matrices(n_cut);
  OperatorMatrix a_sq = ops.a * ops.a;
  OperatorMatrix adag_sq = ops.a_dag * ops.a_dag;

  StateVector work = apply_exp_series(a_sq.scaled(0.5 * std::conj(xi)), state);
  const double mid = 1.0 - std::norm(xi);
  for (int n = 0; n < dim; ++n)
    work.amp[n] *= std::pow(mid, (2.0 * n + 1.0) / 4.0);
  work = apply_exp_series(adag_sq.scaled(-0.5 * xi), work);

  const double sum = work.norm_sq();
  if (sum <= 0.0) throw numeric_error("squeeze_apply: null result");
  work.norm_defect = std::abs(1.0 - sum);
  check_defect(work.norm_defect, "squeeze_apply");
  const double inv = 1.0 / std::sqrt(sum);
  for (cplx& a : work.amp) a *= inv;
  work.normalized = true;
  return work;
}

cplx expectation(const OperatorMatrix& op, const StateVector& state) {
  require_normalized(state, "expectation");
  if (op.dim != state.n_cut + 1)
    throw domain_error("expectation: operator/state dimension mismatch");
  cplx acc = 0.0;
  for (int r = 0; r < op.dim; ++r) {
    cplx row = 0.0;
    for (int c = 0; c < op.dim; ++c) row += op.at(r, c) * state.amp[c];
    acc += std::conj(state.amp[r]) * row;
  }
  return acc;
}

StateVector apply_lower(const StateVector& state, bool distorted) {
  StateVector out;
  out.n_cut = state.n_cut;
  out.amp.assign(state.n_cut + 1, 0.0);
  const int first = distorted ? 1 : 0;  // a2|1> = 0 drops the n = 0 row
  for (int n = first; n < state.n_cut; ++n)
    out.amp[n] = std::sqrt(double(n + 1)) * state.amp[n + 1];
  return out;
}

StateVector apply_raise(const StateVector& state, bool distorted) {
  StateVector out;
  out.n_cut = state.n_cut;
  out.amp.assign(state.n_cut + 1, 0.0);
  const int first = distorted ? 1 : 0;  // a2^dag|0> = 0 drops the n = 0 source
  for (int n = first; n < state.n_cut; ++n)
    out.amp[n + 1] = std::sqrt(double(n + 1)) * state.amp[n];
  return out;
}

QuadratureStats quadrature_stats(const StateVector& state, bool distorted) {
  require_normalized(state, "quadrature_stats");
  const StateVector low = apply_lower(state, distorted);
  const StateVector high = apply_raise(state, distorted);
  const int dim = state.n_cut + 1;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  StateVector xs, ps;
  xs.n_cut = ps.n_cut = state.n_cut;
  xs.amp.resize(dim);
  ps.amp.resize(dim);
  for (int n = 0; n < dim; ++n) {
    xs.amp[n] = inv_sqrt2 * (high.amp[n] + low.amp[n]);
    ps.amp[n] = cplx(0.0, inv_sqrt2) * (high.amp[n] - low.amp[n]);
  }
  // x and p are Hermitian on the truncated space, so all moments reduce to
  // inner products of x|psi> and p|psi>.
  cplx ex = 0.0, ep = 0.0, exx = 0.0, epp = 0.0, exp_xp = 0.0;
  for (int n = 0; n < dim; ++n) {
    ex += std::conj(state.amp[n]) * xs.amp[n];
    ep += std::conj(state.amp[n]) * ps.amp[n];
    exx += std::conj(xs.amp[n]) * xs.amp[n];
    epp += std::conj(ps.amp[n]) * ps.amp[n];
    exp_xp += std::conj(xs.amp[n]) * ps.amp[n];
  }
  QuadratureStats out;
  out.var_x = exx.real() - ex.real() * ex.real();
  out.var_p = epp.real() - ep.real() * ep.real();
  out.cov_xp = exp_xp.real() - ex.real() * ep.real();
  return out;
}

cplx overlap(const StateVector& a, const StateVector& b) {
  if (a.n_cut != b.n_cut) throw domain_error("overlap: cutoff mismatch");
  cplx acc = 0.0;
  for (int n = 0; n <= a.n_cut; ++n) acc += std::conj(a.amp[n]) * b.amp[n];
  return acc;
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(overlap(a, b));
}

double renormalize(StateVector& state) {
  const double sum = state.norm_sq();
  if (sum <= 0.0) throw numeric_error("renormalize: null state");
  const double inv = 1.0 / std::sqrt(sum);
  for (cplx& a : state.amp) a *= inv;
  state.normalized = true;
  return std::abs(1.0 - sum);
}

void write_state(const StateVector& state, std::ostream& os) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "# n_cut=%d norm_defect=%.17g\n", state.n_cut,
                state.norm_defect);
  os << buf;
  for (int n = 0; n <= state.n_cut; ++n) {
    std::snprintf(buf, sizeof(buf), "%d, %.17g, %.17g\n", n,
                  state.amp[n].real(), state.amp[n].imag());
    os << buf;
  }
}

StateVector read_state(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw io_error("read_state: missing header");
  int n_cut = -1;
  double defect = 0.0;
  if (std::sscanf(header.c_str(), "# n_cut=%d norm_defect=%lg", &n_cut,
                  &defect) != 2 ||
      n_cut < 0)
    throw io_error("read_state: malformed header line");
  StateVector s;
  s.n_cut = n_cut;
  s.norm_defect = defect;
  s.amp.assign(n_cut + 1, 0.0);
  std::string line;
  int rows = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    int n;
    double re, im;
    if (std::sscanf(line.c_str(), "%d, %lg, %lg", &n, &re, &im) != 3 || n < 0 ||
        n > n_cut)
      throw io_error("read_state: malformed amplitude row");
    s.amp[n] = cplx(re, im);
    ++rows;
  }
  if (rows != n_cut + 1) throw io_error("read_state: missing amplitude rows");
  s.normalized = std::abs(s.norm_sq() - 1.0) < 1e-8;
  return s;
}

void write_state_file(const StateVector& state, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw io_error("write_state_file: cannot open " + path);
  write_state(state, os);
  if (!os.good()) throw io_error("write_state_file: write failed for " + path);
}

StateVector read_state_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw io_error("read_state_file: cannot open " + path);
  return read_state(is);
}

}  // namespace sqz::fock
