#include "sqz/nonclassical.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "sqz/fock.hpp"
#include "sqz/squeezed.hpp"

using namespace sqz;
using namespace sqz::nonclassical;

namespace {

fock::StateVector random_state(std::mt19937& rng, int n_cut) {
  std::normal_distribution<double> g(0.0, 1.0);
  fock::StateVector s;
  s.n_cut = n_cut;
  s.amp.resize(n_cut + 1);
  for (auto& a : s.amp) a = cplx(g(rng), g(rng));
  fock::renormalize(s);
  return s;
}

}  // namespace

TEST_CASE("jacobi eigenvalues of a known Hermitian matrix") {
  // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
  std::vector<cplx> m = {cplx(2.0, 0.0), cplx(0.0, 1.0), cplx(0.0, -1.0),
                         cplx(2.0, 0.0)};
  auto eig = jacobi_eigenvalues(m, 2);
  std::sort(eig.begin(), eig.end());
  CHECK(eig[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eig[1] == doctest::Approx(3.0).epsilon(1e-12));

  // Rank-one projector spectrum: {1, 0, 0}.
  std::vector<cplx> v = {cplx(0.6, 0.0), cplx(0.0, 0.8), cplx(0.0, 0.0)};
  std::vector<cplx> proj(9);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) proj[r * 3 + c] = v[r] * std::conj(v[c]);
  auto peig = jacobi_eigenvalues(proj, 3);
  std::sort(peig.begin(), peig.end());
  CHECK(std::abs(peig[0]) < 1e-13);
  CHECK(std::abs(peig[1]) < 1e-13);
  CHECK(peig[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("trace distance of identical and orthogonal states") {
  const auto s = squeezed::conventional_squeezed(1.0, 0.4, 60);
  CHECK(trace_distance_pure(s, s) < 1e-12);
  CHECK(trace_distance_oracle(s, s) < 1e-10);

  const auto zero = fock::basis_state(0, 24);
  const auto one = fock::basis_state(1, 24);
  CHECK(trace_distance_pure(zero, one) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(trace_distance_oracle(zero, one) == doctest::Approx(1.0).epsilon(1e-10));

  // The even and odd families share no Fock component.
  const auto plus = squeezed::squeezed_vacuum(0.6, 120);
  const auto minus = squeezed::odd_photon_squeezed(0.6, 120);
  CHECK(trace_distance_pure(plus, minus) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("closed form matches the Jacobi oracle on random pure pairs") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_state(rng, 40);
    const auto b = random_state(rng, 40);
    const double closed = trace_distance_pure(a, b);
    CHECK(closed >= 0.0);
    CHECK(closed <= 1.0);
    CHECK(std::abs(closed - trace_distance_oracle(a, b)) < 1e-8);
  }
}

TEST_CASE("trace distance requires matching cutoffs") {
  const auto a = fock::basis_state(0, 10);
  const auto b = fock::basis_state(0, 12);
  CHECK_THROWS_AS((void)trace_distance_pure(a, b), domain_error);
  CHECK_THROWS_AS((void)trace_distance_oracle(a, b), domain_error);
}

TEST_CASE("families converge at large alpha") {
  const cplx alpha(4.0, 0.0);
  const cplx xi(0.6, 0.0);
  squeezed::StateSpec sp;
  sp.family = "squeezed";
  sp.alpha = alpha;
  sp.xi = xi;
  squeezed::StateSpec sm = sp;
  sm.family = "assoc";
  const int n_cut = std::max(squeezed::auto_n_cut(sp), squeezed::auto_n_cut(sm));
  const auto plus = squeezed::conventional_squeezed(alpha, xi, n_cut);
  const auto minus = squeezed::associated_squeezed(alpha, xi, n_cut);
  CHECK(trace_distance_pure(plus, minus) < 0.05);
}

TEST_CASE("beam splitter amplitudes for small inputs") {
  const auto one = fock::basis_state(1, 8);
  const auto joint = beamsplitter_mix_with_vacuum(one);
  CHECK(std::abs(joint.at(1, 0) - cplx(1.0 / std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(joint.at(0, 1) - cplx(1.0 / std::sqrt(2.0))) < 1e-15);
  CHECK(joint.at(0, 0) == cplx(0.0));

  const auto vac = fock::basis_state(0, 8);
  const auto jv = beamsplitter_mix_with_vacuum(vac);
  CHECK(jv.at(0, 0) == cplx(1.0));
}

TEST_CASE("beam splitter unitarity") {
  for (const auto& s :
       {squeezed::odd_photon_squeezed(0.6, 100),
        squeezed::associated_squeezed(cplx(1.1, 0.4), cplx(0.3, 0.1), 100)}) {
    const auto joint = beamsplitter_mix_with_vacuum(s);
    double total = 0.0;
    for (const auto& v : joint.a) total += std::norm(v);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("coherent input splits into a product state") {
  const auto coh = fock::coherent_state(cplx(1.1, -0.5), 60);
  CHECK(std::abs(linear_entropy_after_bs(coh)) < 1e-10);

  // Rank check through the reduced spectrum: one unit singular value.
  const auto joint = beamsplitter_mix_with_vacuum(coh);
  const int dim = joint.dim;
  std::vector<cplx> gram(size_t(dim) * dim, 0.0);
  for (int k = 0; k < dim; ++k)
    for (int kp = 0; kp < dim; ++kp) {
      cplx g = 0.0;
      for (int j = 0; j < dim; ++j)
        g += joint.at(k, j) * std::conj(joint.at(kp, j));
      gram[size_t(k) * dim + kp] = g;
    }
  auto eig = jacobi_eigenvalues(gram, dim);
  std::sort(eig.begin(), eig.end());
  CHECK(eig.back() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(eig[dim - 2]) < 1e-9);
}

TEST_CASE("linear entropy anchors and trend") {
  CHECK(linear_entropy_after_bs(fock::basis_state(1, 20)) ==
        doctest::Approx(0.5).epsilon(1e-10));

  // Entropy decays with alpha along the associated family.
  double prev = linear_entropy_after_bs(squeezed::odd_photon_squeezed(0.6, 110));
  for (double a : {0.8, 1.6, 2.4, 3.2}) {
    const double s =
        linear_entropy_after_bs(squeezed::associated_squeezed(a, 0.6, 110));
    CHECK(s < prev + 1e-9);
    prev = s;
  }
}

TEST_CASE("linear entropy is invariant under the beam-splitter phase convention") {
  // Alternative convention with an i phase on reflection, built in-test.
  const auto s = squeezed::associated_squeezed(0.9, 0.45, 90);
  const auto joint = beamsplitter_mix_with_vacuum(s);
  const int dim = joint.dim;
  std::vector<cplx> alt(size_t(dim) * dim, 0.0);
  for (int k = 0; k < dim; ++k)
    for (int j = 0; j + k < dim; ++j) {
      cplx phase = 1.0;
      for (int t = 0; t < j; ++t) phase *= cplx(0.0, 1.0);
      alt[size_t(k) * dim + j] = joint.at(k, j) * phase;
    }
  double purity = 0.0;
  for (int k = 0; k < dim; ++k)
    for (int kp = 0; kp < dim; ++kp) {
      cplx g = 0.0;
      for (int j = 0; j < dim; ++j)
        g += alt[size_t(k) * dim + j] * std::conj(alt[size_t(kp) * dim + j]);
      purity += std::norm(g);
    }
  CHECK(std::abs((1.0 - purity) - linear_entropy_after_bs(s)) < 1e-12);
}
