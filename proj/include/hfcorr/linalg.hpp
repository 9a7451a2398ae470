#pragma once

// Dense complex matrices of dimension 2 and 4, just enough linear algebra
// for single- and two-qubit density matrices.

#include <array>
#include <complex>
#include <cstddef>

namespace hfcorr {

using complex = std::complex<double>;

/// Square complex matrix of fixed dimension N, stored row-major.
template <std::size_t N>
class Matrix {
  static_assert(N == 2 || N == 4, "only one- and two-qubit operators are supported");

 public:
  static constexpr std::size_t dim = N;

  constexpr Matrix() = default;
  constexpr explicit Matrix(const std::array<complex, N * N>& entries) : data_(entries) {}

  static constexpr Matrix zero() { return Matrix{}; }
  static constexpr Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }
  static constexpr Matrix diagonal(const std::array<double, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }
  /// |v><v|
  static constexpr Matrix projector(const std::array<complex, N>& v) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
  }

  constexpr complex& operator()(std::size_t row, std::size_t col) { return data_[row * N + col]; }
  constexpr const complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * N + col];
  }

  constexpr const std::array<complex, N * N>& entries() const { return data_; }

  constexpr complex trace() const {
    complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  /// Elementwise complex conjugate (not the adjoint).
  constexpr Matrix conj() const {
    Matrix m;
    for (std::size_t k = 0; k < N * N; ++k) m.data_[k] = std::conj(data_[k]);
    return m;
  }

  constexpr Matrix adjoint() const {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
  }

  constexpr Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  constexpr Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  constexpr Matrix& operator*=(complex s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend constexpr Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend constexpr Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend constexpr Matrix operator*(Matrix a, complex s) { return a *= s; }
  friend constexpr Matrix operator*(complex s, Matrix a) { return a *= s; }
  friend constexpr Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const complex aik = a(i, k);
        if (aik == complex{}) continue;
        for (std::size_t j = 0; j < N; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }
  friend constexpr bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::array<complex, N * N> data_{};
};

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;

/// Eigenvalues in ascending order.
template <std::size_t N>
using Eigenvalues = std::array<double, N>;

/// Eigenvalues (ascending) with the matching orthonormal eigenvectors stored
/// as the columns of `vectors`.
template <std::size_t N>
struct EigenSystem {
  Eigenvalues<N> values{};
  Matrix<N> vectors;
};

enum class Subsystem { A, B };

namespace pauli {
inline constexpr Matrix2 I = Matrix2::identity();
inline constexpr Matrix2 X{{complex{0, 0}, complex{1, 0}, complex{1, 0}, complex{0, 0}}};
inline constexpr Matrix2 Y{{complex{0, 0}, complex{0, -1}, complex{0, 1}, complex{0, 0}}};
inline constexpr Matrix2 Z{{complex{1, 0}, complex{0, 0}, complex{0, 0}, complex{-1, 0}}};
}  // namespace pauli

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kNegativeEigenvalueBand = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;

/// a ⊗ b with `a` acting on the left tensor factor (qubit A).
Matrix4 kron(const Matrix2& a, const Matrix2& b);

/// Largest elementwise |m(i,j) - conj(m(j,i))|.
template <std::size_t N>
double hermiticity_defect(const Matrix<N>& m);

template <std::size_t N>
bool is_hermitian(const Matrix<N>& m, double tol = kHermitianTolerance) {
  return hermiticity_defect(m) <= tol;
}

/// Average of m and its adjoint; strips round-off asymmetry from products
/// that are Hermitian in exact arithmetic.
template <std::size_t N>
Matrix<N> hermitian_part(const Matrix<N>& m) {
  return (m + m.adjoint()) * complex{0.5};
}

/**
 * Eigen-decomposition of a Hermitian matrix by the cyclic complex Jacobi
 * method. Sweeps until every off-diagonal magnitude is below 1e-13, or 50
 * sweeps have been made.
 *
 * Throws InvalidInputError naming the first (row, col) pair that violates
 * Hermiticity by more than 1e-12.
 */
template <std::size_t N>
EigenSystem<N> hermitian_eigensystem(const Matrix<N>& m);

template <std::size_t N>
Eigenvalues<N> hermitian_eigenvalues(const Matrix<N>& m) {
  return hermitian_eigensystem(m).values;
}

/// -Σ λ log2 λ over the eigenvalues of a density matrix, in bits.
/// Eigenvalues in [-1e-10, 0) count as zero; anything more negative, or a
/// trace off 1 by more than 1e-10, throws NotAStateError.
template <std::size_t N>
double von_neumann_entropy(const Matrix<N>& rho);

/// Entropy from a spectrum that is already known, with the same clamping
/// and validation as von_neumann_entropy.
template <std::size_t N>
double entropy_of_spectrum(const Eigenvalues<N>& spectrum);

/// Tr_B(m) for keep == A, Tr_A(m) for keep == B.
Matrix2 partial_trace(const Matrix4& m, Subsystem keep);

}  // namespace hfcorr
