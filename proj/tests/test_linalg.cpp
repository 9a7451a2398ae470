#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "hfcorr/errors.hpp"
#include "hfcorr/linalg.hpp"
#include "hfcorr/model.hpp"
#include "oracles.hpp"

using namespace hfcorr;
using doctest::Approx;

namespace {

Matrix4 singlet() {
  const double h = 1.0 / std::sqrt(2.0);
  return Matrix4::projector({0.0, h, -h, 0.0});
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("Pauli constants") {
    CHECK(pauli::X * pauli::X == pauli::I);
    CHECK(pauli::Y * pauli::Y == pauli::I);
    CHECK(pauli::Z * pauli::Z == pauli::I);
    // XY = iZ
    CHECK(pauli::X * pauli::Y == complex{0, 1} * pauli::Z);
  }

  TEST_CASE("kron puts qubit A on the left factor") {
    const Matrix4 zi = kron(pauli::Z, pauli::I);
    CHECK(zi == Matrix4::diagonal({1, 1, -1, -1}));
    const Matrix4 iz = kron(pauli::I, pauli::Z);
    CHECK(iz == Matrix4::diagonal({1, -1, 1, -1}));
  }

  TEST_CASE("eigenvalues of simple matrices") {
    const auto quarter = hermitian_eigenvalues(Matrix4::identity() * complex{0.25});
    for (double v : quarter) CHECK(v == 0.25);

    const auto d = hermitian_eigenvalues(Matrix4::diagonal({1.0 / 6, 1.0 / 3, 1.0 / 3, 1.0 / 6}));
    CHECK(d[0] == Approx(1.0 / 6).epsilon(1e-15));
    CHECK(d[1] == Approx(1.0 / 6).epsilon(1e-15));
    CHECK(d[2] == Approx(1.0 / 3).epsilon(1e-15));
    CHECK(d[3] == Approx(1.0 / 3).epsilon(1e-15));
  }

  TEST_CASE("central block of the R=1.25, B=0, KT=0.2 thermal state") {
    const ThermalStateX s = thermal_state_paper({1.25, 0.0, 0.2});
    const auto ev = hermitian_eigenvalues(to_matrix(s));
    // a22 ± |a23| with the corners a11 = a44 sitting below both.
    CHECK(ev[0] == Approx(s.a11).epsilon(1e-12));
    CHECK(ev[1] == Approx(s.a44).epsilon(1e-12));
    CHECK(ev[2] == Approx(0.079785).epsilon(1e-5));
    CHECK(ev[3] == Approx(0.840429).epsilon(1e-5));
  }

  TEST_CASE("eigen-decomposition reconstructs the matrix") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const Matrix4 m = oracle::random_hermitian<4>(rng);
      const EigenSystem<4> es = hermitian_eigensystem(m);
      Matrix4 rebuilt;
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j)
            rebuilt(i, j) += es.values[k] * es.vectors(i, k) * std::conj(es.vectors(j, k));
      for (std::size_t k = 0; k < 16; ++k)
        REQUIRE(std::abs(rebuilt.entries()[k] - m.entries()[k]) < 1e-12);
      const Matrix4 vv = es.vectors.adjoint() * es.vectors;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) REQUIRE(std::abs(vv(i, j) - (i == j ? 1.0 : 0.0)) < 1e-12);
    }
  }

  TEST_CASE("property: eigenvalue sum equals trace, sorted, and matches an independent solver") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 1000; ++trial) {
      const Matrix4 m4 = oracle::random_hermitian<4>(rng);
      const auto ev = hermitian_eigenvalues(m4);
      REQUIRE(std::is_sorted(ev.begin(), ev.end()));
      REQUIRE(std::abs(std::accumulate(ev.begin(), ev.end(), 0.0) - m4.trace().real()) < 1e-10);
      const auto ref = oracle::eigenvalues(oracle::to_eigen(m4));
      for (std::size_t k = 0; k < 4; ++k) REQUIRE(std::abs(ev[k] - ref[k]) < 1e-10);

      const Matrix2 m2 = oracle::random_hermitian<2>(rng);
      const auto ev2 = hermitian_eigenvalues(m2);
      REQUIRE(std::abs(ev2[0] + ev2[1] - m2.trace().real()) < 1e-10);
    }
  }

  TEST_CASE("property: Jacobi matches the X-form closed form") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
      // Random valid X-form: corners, central block with |a23| <= sqrt(a22 a33).
      const double a11 = u(rng), a44 = u(rng), a22 = u(rng), a33 = u(rng);
      const double a23 = (2 * u(rng) - 1) * std::sqrt(a22 * a33);
      const double tr = a11 + a22 + a33 + a44;
      const ThermalStateX s{a11 / tr, a22 / tr, a23 / tr, a33 / tr, a44 / tr};
      const auto ev = hermitian_eigenvalues(to_matrix(s));

      const double mean = 0.5 * (s.a22 + s.a33);
      const double rad = std::hypot(0.5 * (s.a22 - s.a33), s.a23);
      std::array<double, 4> closed{s.a11, s.a44, mean - rad, mean + rad};
      std::sort(closed.begin(), closed.end());
      for (std::size_t k = 0; k < 4; ++k) REQUIRE(std::abs(ev[k] - closed[k]) < 1e-10);
    }
  }

  TEST_CASE("non-Hermitian input names the offending pair") {
    Matrix4 m = Matrix4::identity();
    m(1, 3) = 0.5;
    try {
      (void)hermitian_eigenvalues(m);
      FAIL("expected InvalidInputError");
    } catch (const InvalidInputError& e) {
      CHECK(std::string(e.what()).find("(1,3)") != std::string::npos);
    }
    // Within the 1e-12 tolerance is accepted.
    Matrix2 almost = Matrix2::identity();
    almost(0, 1) = 1e-13;
    CHECK_NOTHROW((void)hermitian_eigenvalues(almost));
  }

  TEST_CASE("von Neumann entropy") {
    CHECK(std::abs(von_neumann_entropy(singlet())) < 1e-12);
    CHECK(von_neumann_entropy(Matrix2::projector({std::sqrt(0.3), complex{0, std::sqrt(0.7)}})) <
          1e-10);
    CHECK(std::abs(von_neumann_entropy(Matrix4::identity() * complex{0.25}) - 2.0) < 1e-12);
    CHECK(von_neumann_entropy(Matrix4::diagonal({1.0 / 6, 1.0 / 3, 1.0 / 3, 1.0 / 6})) ==
          Approx(1.918296).epsilon(1e-6));
  }

  TEST_CASE("entropy clamps tiny negatives and rejects larger ones") {
    CHECK(von_neumann_entropy(Matrix2::diagonal({1.0 + 5e-11, -5e-11})) < 1e-9);
    CHECK_THROWS_AS((void)von_neumann_entropy(Matrix2::diagonal({1.0 + 1e-8, -1e-8})), NotAStateError);
    CHECK_THROWS_AS((void)von_neumann_entropy(Matrix2::diagonal({0.5, 0.6})), NotAStateError);
  }

  TEST_CASE("property: entropy is invariant under permuting a diagonal") {
    std::array<double, 4> d{0.1, 0.2, 0.3, 0.4};
    const double ref = von_neumann_entropy(Matrix4::diagonal(d));
    std::sort(d.begin(), d.end());
    do {
      CHECK(von_neumann_entropy(Matrix4::diagonal(d)) == ref);
    } while (std::next_permutation(d.begin(), d.end()));
  }

  TEST_CASE("partial trace") {
    const Matrix4 mixed = Matrix4::identity() * complex{0.25};
    CHECK(partial_trace(mixed, Subsystem::A) == Matrix2::identity() * complex{0.5});

    const Matrix2 b = partial_trace(singlet(), Subsystem::B);
    CHECK(std::abs(b(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(b(1, 1) - 0.5) < 1e-15);
    CHECK(std::abs(b(0, 1)) < 1e-15);

    const Matrix2 a = partial_trace(to_matrix(thermal_state_paper({1.25, 0.0, 0.2})), Subsystem::A);
    CHECK(std::abs(a(0, 0) - 0.5) < 1e-10);
    CHECK(std::abs(a(1, 1) - 0.5) < 1e-10);
    CHECK(std::abs(a(0, 1)) < 1e-15);

    // Product operators factor as expected.
    const Matrix2 ra = Matrix2::diagonal({0.7, 0.3});
    const Matrix2 rb{{complex{0.6}, complex{0.1, 0.2}, complex{0.1, -0.2}, complex{0.4}}};
    CHECK(partial_trace(kron(ra, rb), Subsystem::A) == ra);
    const Matrix2 got_b = partial_trace(kron(ra, rb), Subsystem::B);
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(got_b.entries()[k] - rb.entries()[k]) < 1e-15);
  }

  TEST_CASE("property: marginals of states have unit trace") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
      const Matrix4 rho = oracle::random_state(rng);
      REQUIRE(std::abs(partial_trace(rho, Subsystem::A).trace() - 1.0) < 1e-12);
      REQUIRE(std::abs(partial_trace(rho, Subsystem::B).trace() - 1.0) < 1e-12);
      const auto e = oracle::to_eigen(rho);
      const Matrix2 ra = partial_trace(rho, Subsystem::A);
      const Matrix2 rb = partial_trace(rho, Subsystem::B);
      REQUIRE(std::abs(von_neumann_entropy(ra) - oracle::entropy_bits(oracle::trace_out_b(e))) < 1e-10);
      REQUIRE(std::abs(von_neumann_entropy(rb) - oracle::entropy_bits(oracle::trace_out_a(e))) < 1e-10);
    }
  }
}
