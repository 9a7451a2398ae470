#pragma once

// Two spins with isotropic (XXX) exchange whose strength follows the
// Herring-Flicker law J(R) = 1.642 e^{-2R} R^{5/2}, in a uniform field B
// along z, at temperature KT. Everything is dimensionless.

#include <string_view>

#include "hfcorr/linalg.hpp"

namespace hfcorr {

/// One physical configuration.
struct ModelParams {
  double r = 0.0;   ///< spin separation, >= 0
  double b = 0.0;   ///< field strength
  double kt = 1.0;  ///< temperature times Boltzmann constant, > 0

  /// Throws DomainError unless r >= 0, kt > 0 and all three are finite.
  void validate() const;
};

/// How the Hamiltonian is written down.
enum class Convention {
  /// J(R) [σx⊗σx + σy⊗σy + σz⊗σz + B(σz⊗I + I⊗σz)], field scaled by J(R).
  Eq3AsPrinted,
  /// (J/2)(σ·σ) + (B/2)(σz⊗I + I⊗σz); its Boltzmann exponents are the ones
  /// appearing in the closed-form thermal entries.
  Reconciled,
};

/// How the thermal density matrix is constructed.
enum class Mode {
  /// Closed-form X-state entries (thermal_state_paper). Default.
  Paper,
  /// Exact e^{-H/KT}/Z of build_hamiltonian (thermal_state_gibbs).
  Gibbs,
};

/// The five independent entries of the X-form thermal state
///
///     | a11  0    0    0   |
///     | 0    a22  a23  0   |
///     | 0    a23  a33  0   |
///     | 0    0    0    a44 |
struct ThermalStateX {
  double a11 = 0.0;
  double a22 = 0.0;
  double a23 = 0.0;
  double a33 = 0.0;
  double a44 = 0.0;

  friend bool operator==(const ThermalStateX&, const ThermalStateX&) = default;
};

/// Herring-Flicker exchange, leading term only. Throws DomainError for
/// negative or non-finite r.
double hf_coupling(double r);

/// Separation at which hf_coupling peaks (d/dR of e^{-2R} R^{5/2} vanishes).
inline constexpr double kCouplingPeakR = 1.25;

Matrix4 build_hamiltonian(const ModelParams& p, Convention c);

/**
 * Closed-form thermal entries. With w(x) = e^{x/KT} and J = J(R):
 *
 *   Z   = w(-(J-2B)/2) + w(-(2B+J)/2) + 2 w(-J/2) + 2 w(3J/2)
 *   a11 = w(-(2B+J)/2) / Z          a44 = w(-(J-2B)/2) / Z
 *   a22 = a33 = (w(-J/2) + w(3J/2)) / Z
 *   a23 = (w(-J/2) - w(3J/2)) / Z
 *
 * When any exponent exceeds 700 in magnitude, all weights are rescaled by
 * the largest one before exponentiating.
 */
ThermalStateX thermal_state_paper(const ModelParams& p);

/// e^{-H/KT} / Tr e^{-H/KT} for H = build_hamiltonian(p, c), through the
/// eigen-decomposition of H with ground-energy shifted weights.
Matrix4 thermal_state_gibbs(const ModelParams& p, Convention c);

/// Dispatches on the mode; `c` only matters for Mode::Gibbs.
Matrix4 thermal_state(const ModelParams& p, Mode mode, Convention c = Convention::Reconciled);

Matrix4 to_matrix(const ThermalStateX& s);

/// Reads the five X-form fields back out of a matrix (real parts).
ThermalStateX x_entries(const Matrix4& m);

std::string_view to_string(Mode m);
std::string_view to_string(Convention c);

}  // namespace hfcorr
