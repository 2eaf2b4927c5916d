#include "sqz/wigner.hpp"

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "sqz/fock.hpp"
#include "sqz/squeezed.hpp"

using namespace sqz;
using namespace sqz::wigner;

TEST_CASE("vacuum anchor: W(z) = exp(-2|z|^2) on both routes") {
  const auto vac = fock::basis_state(0, 16);
  for (cplx z : {cplx(0.0, 0.0), cplx(0.6, -0.3), cplx(1.4, 0.9)}) {
    const double want = std::exp(-2.0 * std::norm(z));
    CHECK(wigner_point(vac, z) == doctest::Approx(want).epsilon(1e-12));
    const auto oracle = wigner_quadrature_oracle(vac, z, 7.0, 280);
    CHECK(oracle.converged);
    CHECK(std::abs(oracle.value - want) < 1e-6);
  }
}

TEST_CASE("one-photon anchor: W(0) = -1 on both routes") {
  const auto one = fock::basis_state(1, 16);
  CHECK(wigner_point(one, 0.0) == doctest::Approx(-1.0).epsilon(1e-13));
  const auto oracle = wigner_quadrature_oracle(one, 0.0, 7.0, 280);
  CHECK(std::abs(oracle.value + 1.0) < 1e-6);
}

TEST_CASE("coherent state: displaced Gaussian") {
  const cplx alpha(0.9, 0.6);
  const auto coh = fock::coherent_state(alpha, 40);
  for (cplx z : {cplx(0.5, 0.4), cplx(1.4, -0.2), alpha}) {
    const double want = std::exp(-2.0 * std::norm(z - alpha));
    CHECK(wigner_point(coh, z) == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("fast path tracks the quadrature oracle") {
  struct Sample {
    fock::StateVector state;
    cplx z;
  };
  std::vector<Sample> samples;
  samples.push_back({squeezed::odd_photon_squeezed(0.45, 70), cplx(0.8, 0.5)});
  samples.push_back({squeezed::conventional_squeezed(1.2, 0.35, 80), cplx(-0.4, 1.0)});
  samples.push_back({squeezed::associated_squeezed(1.0, 0.3, 80), cplx(0.2, -0.7)});
  samples.push_back({fock::photon_added_coherent(cplx(0.7, 0.2), 50), cplx(0.0, 0.0)});
  for (const auto& s : samples) {
    const double fast = wigner_point(s.state, s.z);
    const auto oracle = wigner_quadrature_oracle(s.state, s.z, 7.0, 280);
    CHECK(std::abs(fast - oracle.value) < 1e-5);
  }
}

TEST_CASE("odd-photon squeezed grids carry negative regions") {
  const auto odd = squeezed::odd_photon_squeezed(0.4, 80);
  GridSpec spec;
  spec.re_min = -2.0;
  spec.re_max = 2.0;
  spec.re_steps = 41;
  spec.im_min = -2.0;
  spec.im_max = 2.0;
  spec.im_steps = 41;
  const auto grid = wigner_grid(odd, spec);
  double min_value = 1e9;
  for (double v : grid.values) min_value = std::min(min_value, v);
  CHECK(min_value < -0.1);
}

TEST_CASE("coherent grid peaks at the displacement") {
  const cplx alpha = 2.0 * std::exp(cplx(0.0, 3.0 * M_PI / 4.0));
  const auto coh = fock::coherent_state(alpha, 60);
  GridSpec spec;
  spec.re_steps = 81;
  spec.im_steps = 81;
  const auto grid = wigner_grid(coh, spec);
  double best = -1e9;
  cplx argmax;
  for (int iy = 0; iy < spec.im_steps; ++iy)
    for (int ix = 0; ix < spec.re_steps; ++ix) {
      const double v = grid.values[size_t(iy) * spec.re_steps + ix];
      if (v > best) {
        best = v;
        argmax = cplx(grid.re_at(ix), grid.im_at(iy));
      }
    }
  CHECK(std::abs(argmax - alpha) < 0.11);  // one grid cell
}

TEST_CASE("rotating the squeezing phase rotates the grid") {
  const int n_cut = 80;
  const auto base = squeezed::odd_photon_squeezed(0.4, n_cut);
  GridSpec spec;
  spec.re_min = spec.im_min = -2.0;
  spec.re_max = spec.im_max = 2.0;
  spec.re_steps = spec.im_steps = 121;
  const int ns = spec.re_steps;
  const auto g0 = wigner_grid(base, spec);

  // xi -> -xi rotates phase space by 90 degrees: grid points map exactly.
  const auto flipped = squeezed::odd_photon_squeezed(-0.4, n_cut);
  const auto g180 = wigner_grid(flipped, spec);
  double worst = 0.0;
  for (int iy = 0; iy < ns; ++iy)
    for (int ix = 0; ix < ns; ++ix) {
      // W_{-xi}(z) = W_xi(-i z): (x, y) -> (y, -x) in grid indices.
      const int jx = iy;
      const int jy = ns - 1 - ix;
      const double a = g180.values[size_t(iy) * ns + ix];
      const double b = g0.values[size_t(jy) * ns + jx];
      worst = std::max(worst, std::abs(a - b));
    }
  CHECK(worst < 1e-10);

  // xi -> i xi rotates by 45 degrees; compare through bilinear interpolation.
  const auto quarter = squeezed::odd_photon_squeezed(cplx(0.0, 0.4), n_cut);
  const auto g90 = wigner_grid(quarter, spec);
  const double step = (spec.re_max - spec.re_min) / (ns - 1);
  double worst45 = 0.0;
  for (int iy = 0; iy < ns; ++iy) {
    for (int ix = 0; ix < ns; ++ix) {
      const cplx z(g90.re_at(ix), g90.im_at(iy));
      if (std::abs(z) > 1.9) continue;  // rotated point must stay on the grid
      const cplx zr = z * std::exp(cplx(0.0, -M_PI / 4.0));
      const double fx = (zr.real() - spec.re_min) / step;
      const double fy = (zr.imag() - spec.im_min) / step;
      const int bx = int(fx), by = int(fy);
      const double tx = fx - bx, ty = fy - by;
      auto v = [&](int yy, int xx) { return g0.values[size_t(yy) * ns + xx]; };
      const double interp = (1 - tx) * (1 - ty) * v(by, bx) +
                            tx * (1 - ty) * v(by, bx + 1) +
                            (1 - tx) * ty * v(by + 1, bx) +
                            tx * ty * v(by + 1, bx + 1);
      worst45 = std::max(worst45,
                         std::abs(g90.values[size_t(iy) * ns + ix] - interp));
    }
  }
  CHECK(worst45 < 0.005);
}

TEST_CASE("grid serialization is deterministic and structured") {
  const auto one = fock::basis_state(1, 12);
  GridSpec spec;
  spec.re_min = -1.0;
  spec.re_max = 1.0;
  spec.re_steps = 5;
  spec.im_min = -1.0;
  spec.im_max = 1.0;
  spec.im_steps = 3;
  const auto grid = wigner_grid(one, spec);

  std::ostringstream a, b;
  write_grid_csv(grid, a, {"case: unit-test"});
  write_grid_csv(grid, b, {"case: unit-test"});
  CHECK(a.str() == b.str());
  CHECK(a.str().find("# case: unit-test\nre_z, im_z, w\n") != std::string::npos);

  std::ostringstream j;
  write_grid_json(grid, j, {"case: unit-test"});
  CHECK(j.str().find("\"re_axis\"") != std::string::npos);
  CHECK(j.str().find("\"values\"") != std::string::npos);
}

TEST_CASE("quadrature oracle reports an insufficient radius") {
  const auto vac = fock::basis_state(0, 8);
  const auto tight = wigner_quadrature_oracle(vac, 0.0, 2.0, 60);
  CHECK_FALSE(tight.converged);
  CHECK(tight.radius_tail > 1e-12);
  const auto wide = wigner_quadrature_oracle(vac, 0.0, 6.0, 200);
  CHECK(wide.converged);
  CHECK_THROWS_AS((void)wigner_quadrature_oracle(vac, 0.0, -1.0, 60), domain_error);
}

TEST_CASE("wigner_point demands a normalized state") {
  fock::StateVector bad;
  bad.n_cut = 3;
  bad.amp.assign(4, 0.4);
  bad.normalized = false;
  CHECK_THROWS_AS((void)wigner_point(bad, 0.0), domain_error);
}
