#pragma once

// Test-only reference computations. None of these call into the library's
// eigensolver, entropy or measurement code.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "hfcorr/linalg.hpp"

namespace oracle {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

template <std::size_t N>
Eigen::Matrix<std::complex<double>, N, N> to_eigen(const hfcorr::Matrix<N>& m) {
  Eigen::Matrix<std::complex<double>, N, N> e;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) e(i, j) = m(i, j);
  return e;
}

template <std::size_t N>
hfcorr::Matrix<N> from_eigen(const Eigen::Matrix<std::complex<double>, N, N>& e) {
  hfcorr::Matrix<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = e(i, j);
  return m;
}

template <typename M>
std::vector<double> eigenvalues(const M& m) {
  Eigen::SelfAdjointEigenSolver<M> solver(m, Eigen::EigenvaluesOnly);
  const auto& v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

template <typename M>
double entropy_bits(const M& m) {
  double s = 0.0;
  for (double l : eigenvalues(m))
    if (l > 1e-300) s -= l * std::log2(l);
  return s;
}

inline Mat2 trace_out_a(const Mat4& m) {
  Mat2 r = Mat2::Zero();
  for (int a = 0; a < 2; ++a) r += m.block<2, 2>(2 * a, 2 * a);
  return r;
}

inline Mat2 trace_out_b(const Mat4& m) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
  return r;
}

/// Measured conditional entropy of B for the A-basis {|n>, |n⊥>} built from
/// the state vector cos(θ/2)|0> + e^{iφ} sin(θ/2)|1>.
inline double conditional_entropy(const Mat4& rho, double theta, double phi) {
  Eigen::Vector2cd up(std::cos(theta / 2), std::polar(std::sin(theta / 2), phi));
  Eigen::Vector2cd down(-std::conj(up(1)), std::conj(up(0)));
  double s = 0.0;
  for (const auto& v : {up, down}) {
    // (⟨v|⊗I) ρ (|v⟩⊗I), computed directly as a 2x2 block contraction
    Mat2 block = Mat2::Zero();
    for (int a = 0; a < 2; ++a)
      for (int a2 = 0; a2 < 2; ++a2)
        block += std::conj(v(a)) * v(a2) * rho.block<2, 2>(2 * a, 2 * a2);
    const double p = block.trace().real();
    if (p > 1e-14) s += p * entropy_bits(Mat2(block / p));
  }
  return s;
}

/// Discord by exhaustive search over a (θ, φ) grid on the hemisphere.
inline double brute_force_discord(const Mat4& rho, int n_theta, int n_phi) {
  double best = 1e300;
  for (int i = 0; i < n_theta; ++i)
    for (int j = 0; j < n_phi; ++j) {
      const double t = std::numbers::pi * i / (n_theta - 1);
      const double f = std::numbers::pi * j / n_phi;
      best = std::min(best, conditional_entropy(rho, t, f));
    }
  return entropy_bits(trace_out_b(rho)) - entropy_bits(rho) + best;
}

/// Random Hermitian matrix with entries uniform in [-1, 1] + i[-1, 1].
template <std::size_t N>
hfcorr::Matrix<N> random_hermitian(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  hfcorr::Matrix<N> m;
  for (std::size_t i = 0; i < N; ++i) {
    m(i, i) = u(rng);
    for (std::size_t j = i + 1; j < N; ++j) {
      m(i, j) = {u(rng), u(rng)};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

/// Random full-rank two-qubit density matrix G G† / Tr(G G†).
inline hfcorr::Matrix4 random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = {g(rng), g(rng)};
  Mat4 rho = a * a.adjoint();
  rho /= rho.trace();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return from_eigen<4>(rho);
}

}  // namespace oracle
