#include "hfcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hfcorr/errors.hpp"

namespace hfcorr {

namespace {

constexpr double kJacobiThreshold = 1e-13;
constexpr int kMaxSweeps = 50;

template <std::size_t N>
void require_hermitian(const Matrix<N>& m) {
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > kHermitianTolerance) {
        std::ostringstream msg;
        msg << "matrix is not Hermitian: entries (" << i << ',' << j << ") and (" << j << ',' << i
            << ") differ by more than " << kHermitianTolerance;
        throw InvalidInputError(msg.str());
      }
    }
}

template <std::size_t N>
double max_off_diagonal(const Matrix<N>& a) {
  double off = 0.0;
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = p + 1; q < N; ++q) off = std::max(off, std::abs(a(p, q)));
  return off;
}

// One complex Jacobi rotation annihilating a(p,q), p < q. The rotation is
// G = P R where P rephases column q so a(p,q) becomes real and R is the
// classical real Jacobi rotation; a <- G^H a G and v <- v G.
template <std::size_t N>
void rotate(Matrix<N>& a, Matrix<N>& v, std::size_t p, std::size_t q) {
  const double r = std::abs(a(p, q));
  if (r < kJacobiThreshold) return;

  const complex phase = std::conj(a(p, q)) / r;  // e^{-i arg a_pq}
  for (std::size_t k = 0; k < N; ++k) {
    a(k, q) *= phase;
    v(k, q) *= phase;
  }
  for (std::size_t k = 0; k < N; ++k) a(q, k) *= std::conj(phase);
  a(p, q) = r;
  a(q, p) = r;
  a(q, q) = a(q, q).real();

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = 0.5 * (aqq - app) / r;
  double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  a(p, p) = app - t * r;
  a(q, q) = aqq + t * r;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    if (k == p || k == q) continue;
    const complex akp = a(k, p);
    const complex akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
    a(p, k) = std::conj(a(k, p));
    a(q, k) = std::conj(a(k, q));
  }
  for (std::size_t k = 0; k < N; ++k) {
    const complex vkp = v(k, p);
    const complex vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

template <std::size_t N>
double hermiticity_defect(const Matrix<N>& m) {
  double defect = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j)
      defect = std::max(defect, std::abs(m(i, j) - std::conj(m(j, i))));
  return defect;
}

template <std::size_t N>
EigenSystem<N> hermitian_eigensystem(const Matrix<N>& m) {
  require_hermitian(m);

  Matrix<N> a = m;
  for (std::size_t i = 0; i < N; ++i) a(i, i) = a(i, i).real();
  Matrix<N> v = Matrix<N>::identity();

  for (int sweep = 0; sweep < kMaxSweeps && max_off_diagonal(a) >= kJacobiThreshold; ++sweep)
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) rotate(a, v, p, q);

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenSystem<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t row = 0; row < N; ++row) out.vectors(row, k) = v(row, order[k]);
  }
  return out;
}

template <std::size_t N>
double entropy_of_spectrum(const Eigenvalues<N>& spectrum) {
  double trace = 0.0;
  double s = 0.0;
  for (double lambda : spectrum) {
    if (lambda < -kNegativeEigenvalueBand) {
      std::ostringstream msg;
      msg << "not a density matrix: eigenvalue " << lambda << " is below -"
          << kNegativeEigenvalueBand;
      throw NotAStateError(msg.str());
    }
    trace += lambda;
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  if (std::abs(trace - 1.0) > kTraceTolerance) {
    std::ostringstream msg;
    msg << "not a density matrix: trace " << trace << " differs from 1";
    throw NotAStateError(msg.str());
  }
  return s;
}

template <std::size_t N>
double von_neumann_entropy(const Matrix<N>& rho) {
  return entropy_of_spectrum<N>(hermitian_eigenvalues(rho));
}

Matrix2 partial_trace(const Matrix4& m, Subsystem keep) {
  // m(2a + b, 2a' + b') with a the index of qubit A and b of qubit B.
  Matrix2 out;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y)
      for (std::size_t k = 0; k < 2; ++k)
        out(x, y) += keep == Subsystem::A ? m(2 * x + k, 2 * y + k) : m(2 * k + x, 2 * k + y);
  return out;
}

template double hermiticity_defect<2>(const Matrix2&);
template double hermiticity_defect<4>(const Matrix4&);
template EigenSystem<2> hermitian_eigensystem<2>(const Matrix2&);
template EigenSystem<4> hermitian_eigensystem<4>(const Matrix4&);
template double entropy_of_spectrum<2>(const Eigenvalues<2>&);
template double entropy_of_spectrum<4>(const Eigenvalues<4>&);
template double von_neumann_entropy<2>(const Matrix2&);
template double von_neumann_entropy<4>(const Matrix4&);

}  // namespace hfcorr
