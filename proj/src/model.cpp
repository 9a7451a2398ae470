#include "hfcorr/model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "hfcorr/errors.hpp"

namespace hfcorr {

namespace {

constexpr double kHerringFlickerPrefactor = 1.642;
constexpr double kMaxSafeExponent = 700.0;

}  // namespace

void ModelParams::validate() const {
  if (!std::isfinite(r) || !std::isfinite(b) || !std::isfinite(kt)) {
    throw DomainError("model parameters must be finite");
  }
  if (r < 0.0) {
    std::ostringstream msg;
    msg << "coupling distance R must be >= 0, got " << r;
    throw DomainError(msg.str());
  }
  if (kt <= 0.0) {
    std::ostringstream msg;
    msg << "temperature KT must be > 0, got " << kt;
    throw DomainError(msg.str());
  }
}

double hf_coupling(double r) {
  if (!std::isfinite(r) || r < 0.0) {
    std::ostringstream msg;
    msg << "Herring-Flicker coupling needs a finite R >= 0, got " << r;
    throw DomainError(msg.str());
  }
  return kHerringFlickerPrefactor * std::exp(-2.0 * r) * r * r * std::sqrt(r);
}

Matrix4 build_hamiltonian(const ModelParams& p, Convention c) {
  p.validate();
  const double j = hf_coupling(p.r);
  const Matrix4 exchange =
      kron(pauli::X, pauli::X) + kron(pauli::Y, pauli::Y) + kron(pauli::Z, pauli::Z);
  const Matrix4 zeeman = kron(pauli::Z, pauli::I) + kron(pauli::I, pauli::Z);

  switch (c) {
    case Convention::Eq3AsPrinted:
      return complex{j} * (exchange + complex{p.b} * zeeman);
    case Convention::Reconciled:
      return complex{j / 2.0} * exchange + complex{p.b / 2.0} * zeeman;
  }
  throw InvalidInputError("unknown Hamiltonian convention");
}

ThermalStateX thermal_state_paper(const ModelParams& p) {
  p.validate();
  const double j = hf_coupling(p.r);
  const double kt = p.kt;

  // Exponents (already divided by KT) of the four distinct Boltzmann weights.
  const double up = -(2.0 * p.b + j) / (2.0 * kt);    // a11 numerator
  const double down = -(j - 2.0 * p.b) / (2.0 * kt);  // a44 numerator
  const double triplet = -j / (2.0 * kt);
  const double singlet = 3.0 * j / (2.0 * kt);

  const std::array<double, 4> exponents{up, down, triplet, singlet};
  double shift = 0.0;
  if (std::any_of(exponents.begin(), exponents.end(),
                  [](double x) { return std::abs(x) > kMaxSafeExponent; })) {
    shift = *std::max_element(exponents.begin(), exponents.end());
  }

  const double w_up = std::exp(up - shift);
  const double w_down = std::exp(down - shift);
  const double w_t = std::exp(triplet - shift);
  const double w_s = std::exp(singlet - shift);
  const double z = w_down + w_up + 2.0 * w_t + 2.0 * w_s;

  ThermalStateX s;
  s.a11 = w_up / z;
  s.a22 = (w_t + w_s) / z;
  s.a23 = (w_t - w_s) / z;
  s.a33 = s.a22;
  s.a44 = w_down / z;
  return s;
}

Matrix4 thermal_state_gibbs(const ModelParams& p, Convention c) {
  const EigenSystem<4> eig = hermitian_eigensystem(build_hamiltonian(p, c));

  // Energies are ascending, so weights relative to the ground level are <= 1.
  std::array<double, 4> w{};
  double z = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    w[k] = std::exp(-(eig.values[k] - eig.values[0]) / p.kt);
    z += w[k];
  }

  Matrix4 rho;
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t l = 0; l < 4; ++l)
        rho(i, l) += (w[k] / z) * eig.vectors(i, k) * std::conj(eig.vectors(l, k));
  }
  return hermitian_part(rho);
}

Matrix4 thermal_state(const ModelParams& p, Mode mode, Convention c) {
  switch (mode) {
    case Mode::Paper:
      return to_matrix(thermal_state_paper(p));
    case Mode::Gibbs:
      return thermal_state_gibbs(p, c);
  }
  throw InvalidInputError("unknown construction mode");
}

Matrix4 to_matrix(const ThermalStateX& s) {
  Matrix4 m;
  m(0, 0) = s.a11;
  m(1, 1) = s.a22;
  m(1, 2) = s.a23;
  m(2, 1) = s.a23;
  m(2, 2) = s.a33;
  m(3, 3) = s.a44;
  return m;
}

ThermalStateX x_entries(const Matrix4& m) {
  return {m(0, 0).real(), m(1, 1).real(), m(1, 2).real(), m(2, 2).real(), m(3, 3).real()};
}

std::string_view to_string(Mode m) { return m == Mode::Paper ? "paper" : "gibbs"; }

std::string_view to_string(Convention c) {
  return c == Convention::Reconciled ? "reconciled" : "eq3";
}

}  // namespace hfcorr
