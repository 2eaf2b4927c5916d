// Command-line front end for the sqz shared library.  Every subcommand
// emits a deterministic CSV (or JSON) artifact with a '#'-prefixed
// metadata header; repeated invocations are byte-identical.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqz.h"

namespace {

struct CliFailure {
  int code;
  std::string message;
};

void check(int rc, const std::string& where) {
  if (rc != SQZ_OK) throw CliFailure{rc, where + ": " + sqz_last_error()};
}

struct Complex2 {
  double re = 0.0;
  double im = 0.0;
};

Complex2 parse_complex(const std::string& text, const std::string& flag) {
  Complex2 v;
  char extra;
  if (std::sscanf(text.c_str(), "%lf,%lf%c", &v.re, &v.im, &extra) == 2) return v;
  if (std::sscanf(text.c_str(), "%lf%c", &v.re, &extra) == 1) {
    v.im = 0.0;
    return v;
  }
  throw CliFailure{SQZ_ERR_DOMAIN, flag + ": expected re or re,im, got '" + text + "'"};
}

struct Range {
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;

  double at(int i) const {
    if (steps <= 1) return start;
    return start + (stop - start) * i / (steps - 1);
  }
};

Range parse_range(const std::string& text, const std::string& flag) {
  Range r;
  char extra;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &r.start, &r.stop, &r.steps,
                  &extra) != 3 ||
      r.steps < 1)
    throw CliFailure{SQZ_ERR_DOMAIN,
                     flag + ": expected start:stop:steps, got '" + text + "'"};
  return r;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CliFailure{SQZ_ERR_DOMAIN, flag + ": bad number '" + item + "'"};
    }
  }
  if (values.empty())
    throw CliFailure{SQZ_ERR_DOMAIN, flag + ": empty list"};
  return values;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Short form for labels and metadata (data rows keep full precision).
std::string fmt_label(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

struct Table {
  std::vector<std::string> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void emit(const Table& table, const std::string& format, const std::string& out) {
  std::ostringstream body;
  if (format == "csv") {
    for (const auto& line : table.metadata) body << "# " << line << "\n";
    for (size_t c = 0; c < table.columns.size(); ++c)
      body << table.columns[c] << (c + 1 < table.columns.size() ? ", " : "\n");
    for (const auto& row : table.rows) {
      for (size_t c = 0; c < row.size(); ++c)
        body << fmt(row[c]) << (c + 1 < row.size() ? ", " : "\n");
    }
  } else if (format == "json") {
    nlohmann::ordered_json j;
    j["metadata"] = table.metadata;
    j["columns"] = table.columns;
    j["rows"] = table.rows;
    body << j.dump(2) << "\n";
  } else {
    throw CliFailure{SQZ_ERR_DOMAIN, "--format must be csv or json, got '" + format + "'"};
  }

  if (out.empty() || out == "-") {
    std::cout << body.str();
    return;
  }
  std::ofstream os(out, std::ios::binary);
  if (!os) throw CliFailure{SQZ_ERR_IO, "cannot open output file '" + out + "'"};
  os << body.str();
  if (!os.good()) throw CliFailure{SQZ_ERR_IO, "write failed for '" + out + "'"};
}

using StatePtr = std::unique_ptr<sqz_state, decltype(&sqz_state_destroy)>;

StatePtr make_state(const std::string& family, Complex2 alpha, Complex2 xi,
                    int n_cut) {
  sqz_state* raw = nullptr;
  check(sqz_state_create(family.c_str(), alpha.re, alpha.im, xi.re, xi.im,
                         n_cut, &raw),
        "state '" + family + "'");
  return StatePtr(raw, &sqz_state_destroy);
}

std::string spec_line(const std::string& family, Complex2 alpha, Complex2 xi,
                      int n_cut) {
  std::ostringstream os;
  os << "state: family=" << family << " alpha=" << fmt(alpha.re) << ","
     << fmt(alpha.im) << " xi=" << fmt(xi.re) << "," << fmt(xi.im)
     << " n_cut=" << n_cut;
  return os.str();
}

std::string version_line() {
  return std::string("tool: sqz ") + sqz_version();
}

// Shared per-command option bundle mirroring the public flag set.
struct CommonOpts {
  std::string state = "glauber";
  std::string alpha = "0";
  std::string xi = "0";
  int n_cut = 0;
  std::string format = "csv";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_state = true) {
  if (with_state)
    cmd->add_option("--state", opts.state,
                    "family key: glauber|sqvac|oddsq|squeezed|assoc|distorted|"
                    "fock:<n>|added:<n>");
  cmd->add_option("--alpha", opts.alpha, "coherent amplitude, re or re,im");
  cmd->add_option("--xi", opts.xi, "squeezing parameter, re or re,im (|xi|<1)");
  cmd->add_option("--ncut", opts.n_cut, "Fock cutoff; 0 = automatic");
  cmd->add_option("--format", opts.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts.out, "output file; '-' or empty for stdout");
}

int resolve_ncut(const std::string& family, Complex2 alpha, Complex2 xi,
                 int requested) {
  if (requested > 0) return requested;
  int out = 0;
  check(sqz_auto_n_cut(family.c_str(), alpha.re, alpha.im, xi.re, xi.im, &out),
        "auto n_cut for '" + family + "'");
  return out;
}

int cmd_tau_surface(int r_steps, int theta_steps, const CommonOpts& opts) {
  if (r_steps < 2 || theta_steps < 2)
    throw CliFailure{SQZ_ERR_DOMAIN, "tau-surface: steps must be >= 2"};
  Table table;
  table.metadata = {version_line(), "command: tau-surface",
                    "grid: r=[0,1) x" + std::to_string(r_steps) +
                        " theta=[-pi,pi) x" + std::to_string(theta_steps)};
  table.columns = {"r", "theta", "tau", "inv_tau"};
  for (int i = 0; i < r_steps; ++i) {
    const double r = static_cast<double>(i) / r_steps;
    for (int j = 0; j < theta_steps; ++j) {
      const double theta = -M_PI + 2.0 * M_PI * j / theta_steps;
      double tau = 0.0;
      char regime = 0;
      check(sqz_tau(r * std::cos(theta), r * std::sin(theta), &tau, &regime),
            "tau");
      table.rows.push_back({r, theta, tau, 1.0 / tau});
    }
  }
  emit(table, opts.format, opts.out);
  return 0;
}

int cmd_polytable(const std::string& family, int n_max, bool have_sweep,
                  Range sweep, const CommonOpts& opts) {
  const Complex2 alpha = parse_complex(opts.alpha, "--alpha");
  const Complex2 xi = parse_complex(opts.xi, "--xi");
  const bool both = family == "both";
  if (!both && family != "plus" && family != "minus")
    throw CliFailure{SQZ_ERR_DOMAIN,
                     "polytable: --family must be plus, minus or both"};

  Table table;
  table.metadata = {version_line(), "command: polytable",
                    "point: alpha=" + fmt(alpha.re) + "," + fmt(alpha.im) +
                        " xi=" + fmt(xi.re) + "," + fmt(xi.im),
                    "closed columns: Hermite form (+), hypergeometric form (-); "
                    "recurrence value repeated at xi=0"};
  table.columns = {"alpha_re", "n"};
  auto add_family_columns = [&table](const std::string& tag) {
    table.columns.push_back(tag + "_re");
    table.columns.push_back(tag + "_im");
    table.columns.push_back(tag + "_closed_re");
    table.columns.push_back(tag + "_closed_im");
  };
  if (both || family == "plus") add_family_columns("p_plus");
  if (both || family == "minus") add_family_columns("p_minus");

  const int points = have_sweep ? sweep.steps : 1;
  for (int i = 0; i < points; ++i) {
    Complex2 a = alpha;
    if (have_sweep) {
      a.re = sweep.at(i);
      a.im = 0.0;
    }
    for (int n = 0; n <= n_max; ++n) {
      std::vector<double> row = {a.re, static_cast<double>(n)};
      auto push_family = [&](char sign) {
        double re = 0.0, im = 0.0;
        check(sqz_poly(sign, n, a.re, a.im, xi.re, xi.im, &re, &im), "poly");
        row.push_back(re);
        row.push_back(im);
        double cre = re, cim = im;
        if (xi.re != 0.0 || xi.im != 0.0)
          check(sqz_poly_closed(sign, n, a.re, a.im, xi.re, xi.im, &cre, &cim),
                "poly closed");
        row.push_back(cre);
        row.push_back(cim);
      };
      if (both || family == "plus") push_family('+');
      if (both || family == "minus") push_family('-');
      table.rows.push_back(std::move(row));
    }
  }
  emit(table, opts.format, opts.out);
  return 0;
}

struct GridSpec6 {
  Range re{-4.0, 4.0, 161};
  Range im{-4.0, 4.0, 161};
};

GridSpec6 parse_grid(const std::string& text) {
  GridSpec6 g;
  if (text.empty()) return g;
  double a0, a1, b0, b1;
  int s0, s1;
  char extra;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d:%lf:%lf:%d%c", &a0, &a1, &s0, &b0,
                  &b1, &s1, &extra) == 6 &&
      s0 >= 1 && s1 >= 1) {
    g.re = {a0, a1, s0};
    g.im = {b0, b1, s1};
    return g;
  }
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &a0, &a1, &s0, &extra) == 3 &&
      s0 >= 1) {
    g.re = {a0, a1, s0};
    g.im = {a0, a1, s0};
    return g;
  }
  throw CliFailure{SQZ_ERR_DOMAIN,
                   "--grid: expected min:max:steps[:min:max:steps], got '" +
                       text + "'"};
}

int cmd_wigner(const std::string& grid_text, const CommonOpts& opts) {
  const Complex2 alpha = parse_complex(opts.alpha, "--alpha");
  const Complex2 xi = parse_complex(opts.xi, "--xi");
  const GridSpec6 grid = parse_grid(grid_text);
  const int n_cut = resolve_ncut(opts.state, alpha, xi, opts.n_cut);
  StatePtr state = make_state(opts.state, alpha, xi, n_cut);

  std::vector<double> values(static_cast<size_t>(grid.re.steps) * grid.im.steps);
  check(sqz_wigner_grid(state.get(), grid.re.start, grid.re.stop, grid.re.steps,
                        grid.im.start, grid.im.stop, grid.im.steps,
                        values.data(), values.size()),
        "wigner grid");

  Table table;
  table.metadata = {version_line(), "command: wigner",
                    spec_line(opts.state, alpha, xi, n_cut),
                    "grid: re=[" + fmt(grid.re.start) + "," + fmt(grid.re.stop) +
                        "]x" + std::to_string(grid.re.steps) + " im=[" +
                        fmt(grid.im.start) + "," + fmt(grid.im.stop) + "]x" +
                        std::to_string(grid.im.steps),
                    "convention: vacuum -> exp(-2|z|^2)"};
  table.columns = {"re_z", "im_z", "w"};
  for (int iy = 0; iy < grid.im.steps; ++iy)
    for (int ix = 0; ix < grid.re.steps; ++ix)
      table.rows.push_back({grid.re.at(ix), grid.im.at(iy),
                            values[static_cast<size_t>(iy) * grid.re.steps + ix]});
  emit(table, opts.format, opts.out);
  return 0;
}

int cmd_stats(bool have_sweep, Range sweep, int probs, const CommonOpts& opts) {
  const Complex2 alpha0 = parse_complex(opts.alpha, "--alpha");
  const Complex2 xi = parse_complex(opts.xi, "--xi");

  Table table;
  table.metadata = {version_line(), "command: stats",
                    spec_line(opts.state, alpha0, xi, opts.n_cut),
                    have_sweep ? "sweep: real alpha" : "sweep: none"};
  table.columns = {"alpha",  "mean_n", "var_x",  "var_p",
                   "cov_xp", "var_x2", "var_p2", "cov_x2p2"};
  for (int k = 0; k < probs; ++k)
    table.columns.push_back("p" + std::to_string(k));

  const int points = have_sweep ? sweep.steps : 1;
  for (int i = 0; i < points; ++i) {
    Complex2 a = alpha0;
    if (have_sweep) {
      a.re = sweep.at(i);
      a.im = 0.0;
    }
    const int n_cut = resolve_ncut(opts.state, a, xi, opts.n_cut);
    StatePtr state = make_state(opts.state, a, xi, n_cut);
    double mean = 0.0;
    check(sqz_state_mean_photon(state.get(), &mean), "mean photon");
    double vx, vp, cov, vx2, vp2, cov2;
    check(sqz_state_quadrature_stats(state.get(), 0, &vx, &vp, &cov), "stats");
    check(sqz_state_quadrature_stats(state.get(), 1, &vx2, &vp2, &cov2),
          "distorted stats");
    std::vector<double> row = {a.re, mean, vx, vp, cov, vx2, vp2, cov2};
    if (probs > 0) {
      std::vector<double> p(n_cut + 1);
      check(sqz_state_probabilities(state.get(), p.data(), p.size()), "probs");
      for (int k = 0; k < probs; ++k)
        row.push_back(k <= n_cut ? p[k] : 0.0);
    }
    table.rows.push_back(std::move(row));
  }
  emit(table, opts.format, opts.out);
  return 0;
}

int cmd_distance(Range sweep, const CommonOpts& opts) {
  const Complex2 xi = parse_complex(opts.xi, "--xi");
  Table table;
  table.metadata = {version_line(), "command: distance",
                    "pair: squeezed vs assoc at xi=" + fmt(xi.re) + "," +
                        fmt(xi.im),
                    "sweep: real alpha"};
  table.columns = {"alpha", "trace_distance"};
  for (int i = 0; i < sweep.steps; ++i) {
    const Complex2 a{sweep.at(i), 0.0};
    int n1 = opts.n_cut, n2 = opts.n_cut;
    if (opts.n_cut <= 0) {
      n1 = resolve_ncut("squeezed", a, xi, 0);
      n2 = resolve_ncut("assoc", a, xi, 0);
      n1 = n2 = std::max(n1, n2);
    }
    StatePtr plus = make_state("squeezed", a, xi, n1);
    StatePtr minus = make_state("assoc", a, xi, n2);
    double d = 0.0;
    check(sqz_trace_distance(plus.get(), minus.get(), &d), "trace distance");
    table.rows.push_back({a.re, d});
  }
  emit(table, opts.format, opts.out);
  return 0;
}

int cmd_entropy(const std::string& xi_list_text, Range sweep,
                const CommonOpts& opts) {
  const std::vector<double> xi_list = parse_list(xi_list_text, "--xi-list");
  Table table;
  table.metadata = {version_line(), "command: entropy",
                    "family: " + opts.state, "sweep: real alpha",
                    "xi list: " + xi_list_text};
  table.columns = {"alpha"};
  for (double x : xi_list) table.columns.push_back("S_xi_" + fmt_label(x));
  for (int i = 0; i < sweep.steps; ++i) {
    const Complex2 a{sweep.at(i), 0.0};
    std::vector<double> row = {a.re};
    for (double x : xi_list) {
      const Complex2 xc{x, 0.0};
      // Families that take no xi keep their single column meaningful.
      const bool uses_xi = opts.state == "sqvac" || opts.state == "oddsq" ||
                           opts.state == "squeezed" || opts.state == "assoc";
      const Complex2 xi_used = uses_xi ? xc : Complex2{0.0, 0.0};
      const int n_cut = resolve_ncut(opts.state, a, xi_used, opts.n_cut);
      StatePtr state = make_state(opts.state, a, xi_used, n_cut);
      double s = 0.0;
      check(sqz_linear_entropy_bs(state.get(), &s), "entropy");
      row.push_back(s);
    }
    table.rows.push_back(std::move(row));
  }
  emit(table, opts.format, opts.out);
  return 0;
}

int cmd_meanphotons(const std::string& grid_text, const CommonOpts& opts) {
  GridSpec6 grid;
  grid.re = {0.0, 6.0, 61};   // alpha
  grid.im = {0.0, 0.8, 5};    // xi
  if (!grid_text.empty()) grid = parse_grid(grid_text);
  Table table;
  table.metadata = {version_line(), "command: meanphotons",
                    "grid: alpha=[" + fmt(grid.re.start) + "," +
                        fmt(grid.re.stop) + "]x" + std::to_string(grid.re.steps) +
                        " xi=[" + fmt(grid.im.start) + "," + fmt(grid.im.stop) +
                        "]x" + std::to_string(grid.im.steps)};
  table.columns = {"alpha", "xi", "n_plus_closed", "n_minus_numeric"};
  for (int j = 0; j < grid.im.steps; ++j) {
    const double x = grid.im.at(j);
    for (int i = 0; i < grid.re.steps; ++i) {
      const double a = grid.re.at(i);
      double nplus = 0.0;
      check(sqz_mean_photon_plus_closed(a, 0.0, x, 0.0, &nplus), "mean plus");
      const Complex2 ac{a, 0.0}, xc{x, 0.0};
      const int n_cut = resolve_ncut("assoc", ac, xc, opts.n_cut);
      StatePtr minus = make_state("assoc", ac, xc, n_cut);
      double nminus = 0.0;
      check(sqz_state_mean_photon(minus.get(), &nminus), "mean minus");
      table.rows.push_back({a, x, nplus, nminus});
    }
  }
  emit(table, opts.format, opts.out);
  return 0;
}

int cmd_state_dump(const CommonOpts& opts) {
  const Complex2 alpha = parse_complex(opts.alpha, "--alpha");
  const Complex2 xi = parse_complex(opts.xi, "--xi");
  const int n_cut = resolve_ncut(opts.state, alpha, xi, opts.n_cut);
  StatePtr state = make_state(opts.state, alpha, xi, n_cut);
  if (opts.out.empty() || opts.out == "-")
    throw CliFailure{SQZ_ERR_DOMAIN, "state: --out is required"};
  check(sqz_state_write(state.get(), opts.out.c_str()), "state write");
  return 0;
}

int cmd_verify(const std::string& profile, const std::string& out) {
  char* report = nullptr;
  int all_pass = 0;
  check(sqz_verify(profile.c_str(), &report, &all_pass), "verify");
  std::unique_ptr<char, decltype(&sqz_string_free)> guard(report,
                                                          &sqz_string_free);
  const auto j = nlohmann::ordered_json::parse(report);
  for (const auto& item : j["items"]) {
    std::printf("%s  %-45s residual=%.3e bound=%.3e\n",
                item["pass"].get<bool>() ? "PASS" : "FAIL",
                item["name"].get<std::string>().c_str(),
                item["residual"].get<double>(), item["bound"].get<double>());
  }
  std::printf("%s: %zu invariants, profile=%s\n",
              all_pass ? "verification passed" : "verification FAILED",
              j["items"].size(), profile.c_str());
  if (!out.empty() && out != "-") {
    std::ofstream os(out, std::ios::binary);
    if (!os) throw CliFailure{SQZ_ERR_IO, "cannot open output file '" + out + "'"};
    os << report << "\n";
    if (!os.good()) throw CliFailure{SQZ_ERR_IO, "write failed for '" + out + "'"};
  }
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"squeezed-state toolkit: recurrence-built state families, "
               "phase-space grids and nonclassicality diagnostics"};
  app.require_subcommand(1);

  // tau-surface
  auto* tau_cmd = app.add_subcommand(
      "tau-surface", "squeezing classifier tau and 1/tau over the xi-disk");
  CommonOpts tau_opts;
  int r_steps = 50, theta_steps = 64;
  tau_cmd->add_option("--r-steps", r_steps, "radial samples over [0,1)");
  tau_cmd->add_option("--theta-steps", theta_steps, "angular samples over [-pi,pi)");
  add_common(tau_cmd, tau_opts, false);

  // polytable
  auto* poly_cmd = app.add_subcommand(
      "polytable", "polynomial family tables P_n at a point, with closed-form "
                   "check columns; optional alpha sweep");
  CommonOpts poly_opts;
  std::string poly_family = "both";
  int n_max = 8;
  std::string poly_sweep_text;
  poly_cmd->add_option("--family", poly_family, "plus, minus or both");
  poly_cmd->add_option("--nmax", n_max, "largest index n");
  poly_cmd->add_option("--sweep", poly_sweep_text, "real alpha sweep start:stop:steps");
  add_common(poly_cmd, poly_opts, false);

  // wigner
  auto* wig_cmd = app.add_subcommand(
      "wigner", "Wigner function grid over the complex z-plane");
  CommonOpts wig_opts;
  std::string wig_grid;
  wig_cmd->add_option("--grid", wig_grid, "min:max:steps[:min:max:steps], default -4:4:161");
  add_common(wig_cmd, wig_opts);

  // stats
  auto* stats_cmd = app.add_subcommand(
      "stats", "mean photon number, ordinary and distorted quadrature "
               "variances, optional photon-number probabilities, over an "
               "alpha sweep");
  CommonOpts stats_opts;
  std::string stats_sweep_text;
  int probs = 0;
  stats_cmd->add_option("--sweep", stats_sweep_text, "real alpha sweep start:stop:steps");
  stats_cmd->add_option("--probs", probs, "emit the first K photon probabilities");
  add_common(stats_cmd, stats_opts);

  // distance
  auto* dist_cmd = app.add_subcommand(
      "distance", "trace distance between the conventional and associated "
                  "families along an alpha sweep");
  CommonOpts dist_opts;
  std::string dist_sweep_text = "0:6:121";
  dist_cmd->add_option("--sweep", dist_sweep_text, "real alpha sweep start:stop:steps");
  add_common(dist_cmd, dist_opts, false);

  // entropy
  auto* ent_cmd = app.add_subcommand(
      "entropy", "linear entropy of the reduced state after a 50:50 beam "
                 "splitter with vacuum, one column per xi");
  CommonOpts ent_opts;
  ent_opts.state = "assoc";
  std::string xi_list = "0,0.2,0.6,0.8";
  std::string ent_sweep_text = "0:6:121";
  ent_cmd->add_option("--xi-list", xi_list, "comma-separated real xi values");
  ent_cmd->add_option("--sweep", ent_sweep_text, "real alpha sweep start:stop:steps");
  add_common(ent_cmd, ent_opts);

  // meanphotons
  auto* mean_cmd = app.add_subcommand(
      "meanphotons", "closed-form conventional and numeric associated mean "
                     "photon numbers over an (alpha, xi) grid");
  CommonOpts mean_opts;
  std::string mean_grid;
  mean_cmd->add_option("--grid", mean_grid,
                       "alpha_min:alpha_max:steps:xi_min:xi_max:steps");
  add_common(mean_cmd, mean_opts, false);

  // state
  auto* state_cmd = app.add_subcommand(
      "state", "write the truncated amplitude list of a state to a file");
  CommonOpts state_opts;
  add_common(state_cmd, state_opts);

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "run the full invariant suite and report each residual");
  std::string profile = "default";
  std::string verify_out;
  verify_cmd->add_option("--tolerance-profile", profile,
                         "'default' or a numeric scale on every bound");
  verify_cmd->add_option("--out", verify_out, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : SQZ_ERR_DOMAIN;
  }

  try {
    if (tau_cmd->parsed()) return cmd_tau_surface(r_steps, theta_steps, tau_opts);
    if (poly_cmd->parsed()) {
      const bool have_sweep = !poly_sweep_text.empty();
      Range sweep;
      if (have_sweep) sweep = parse_range(poly_sweep_text, "--sweep");
      return cmd_polytable(poly_family, n_max, have_sweep, sweep, poly_opts);
    }
    if (wig_cmd->parsed()) return cmd_wigner(wig_grid, wig_opts);
    if (stats_cmd->parsed()) {
      const bool have_sweep = !stats_sweep_text.empty();
      Range sweep;
      if (have_sweep) sweep = parse_range(stats_sweep_text, "--sweep");
      return cmd_stats(have_sweep, sweep, probs, stats_opts);
    }
    if (dist_cmd->parsed())
      return cmd_distance(parse_range(dist_sweep_text, "--sweep"), dist_opts);
    if (ent_cmd->parsed())
      return cmd_entropy(xi_list, parse_range(ent_sweep_text, "--sweep"), ent_opts);
    if (mean_cmd->parsed()) return cmd_meanphotons(mean_grid, mean_opts);
    if (state_cmd->parsed()) return cmd_state_dump(state_opts);
    if (verify_cmd->parsed()) return cmd_verify(profile, verify_out);
  } catch (const CliFailure& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return SQZ_ERR_NUMERIC;
  }
  return 0;
}
