#pragma once

// Entanglement (Wootters concurrence) and quantum discord of two-qubit
// states, plus closed-form cross-checks for X-form and Bell-diagonal states.

#include <array>

#include "hfcorr/linalg.hpp"
#include "hfcorr/model.hpp"

namespace hfcorr {

/// Rank-1 projective measurement {|+n><+n|, |-n><-n|} on qubit A with
/// n = (sinθ cosφ, sinθ sinφ, cosθ).
struct MeasurementBasis {
  double theta = 0.0;  ///< [0, π]
  double phi = 0.0;    ///< [0, 2π)

  /// Projector onto +n (outcome 0) or -n (outcome 1).
  Matrix2 projector(int outcome) const;
};

struct ConcurrenceResult {
  double value = 0.0;
  /// Square roots of the eigenvalues of ρ·ρ̃, descending (p, q, r, s).
  std::array<double, 4> sqrt_eigenvalues{};
};

struct ConditionalBranch {
  double probability = 0.0;
  Matrix2 state;  ///< conditional state of B; I/2 placeholder when probability < 1e-14
};

/// Grid resolution and golden-section stopping width of the measurement
/// search.
struct MinimizerOptions {
  int grid_n = 181;
  double tol = 1e-9;
};

struct ConditionalEntropyResult {
  double value = 0.0;  ///< bits
  MeasurementBasis basis;
  int evaluations = 0;
};

struct DiscordResult {
  double value = 0.0;  ///< bits
  double s_a = 0.0;
  double s_ab = 0.0;
  double min_conditional_entropy = 0.0;
  MeasurementBasis optimal_basis;
  int evaluations = 0;
};

/// Branches with probability below this are dropped from entropy averages.
inline constexpr double kNegligibleBranch = 1e-14;

/// (σy⊗σy) ρ* (σy⊗σy).
Matrix4 spin_flip(const Matrix4& rho);

/**
 * Wootters concurrence max(0, p - q - r - s) from the square-rooted
 * eigenvalues of ρ·ρ̃. Those eigenvalues are taken from the Hermitian
 * similarity transform √ρ ρ̃ √ρ, so any input (not only X-form) works.
 *
 * Throws NotAStateError if an eigenvalue is below -1e-10.
 */
ConcurrenceResult concurrence(const Matrix4& rho);

/// 2·max(0, |a23| - √(a11·a44)).
double concurrence_xstate(const ThermalStateX& s);

/// Outcome probabilities and post-measurement states of B after measuring A.
std::array<ConditionalBranch, 2> measure_conditional_states(const Matrix4& rho,
                                                            const MeasurementBasis& basis);

/// Σ_k p_k S(ρ_B|k) for one measurement basis, in bits.
double conditional_entropy(const Matrix4& rho, const MeasurementBasis& basis);

/**
 * Minimizes conditional_entropy over projective measurements on A.
 *
 * States whose only off-diagonal entries are ρ(1,2) and ρ(2,1) are symmetric
 * under joint z-rotations and the σz⊗σz parity, so only θ ∈ [0, π/2] at
 * φ = 0 is scanned. Anything else gets a full (θ ∈ [0, π], φ ∈ [0, π))
 * grid. The best grid point is then polished by golden-section search
 * (θ, and φ on the full path) down to a bracket narrower than `tol`.
 *
 * Ties go to smaller θ, then smaller φ. The returned value is never larger
 * than any evaluated candidate.
 */
ConditionalEntropyResult min_conditional_entropy(const Matrix4& rho,
                                                 const MinimizerOptions& opts = {});

/// S(ρ_A) - S(ρ) + min conditional entropy. Values in [-1e-9, 0) are
/// reported as 0.
DiscordResult quantum_discord(const Matrix4& rho, const MinimizerOptions& opts = {});

/**
 * Closed-form discord for the Bell-diagonal members of the X family
 * (a11 == a44, a22 == a33): c1 = c2 = 2 a23, c3 = 4 a11 - 1,
 * c = max(|c1|, |c3|), Q = S(ρ_A) - S(ρ) + H2((1 + c)/2). The spectrum of
 * ρ is taken in closed form, not from the eigensolver.
 *
 * Throws DomainError if a11 and a44 differ by more than 1e-12.
 */
double discord_bell_diagonal_oracle(const ThermalStateX& s);

/// S(ρ_A) + S(ρ_B) - S(ρ), clamped at 0.
double mutual_information(const Matrix4& rho);

/// -p log2 p - (1-p) log2 (1-p).
double binary_entropy(double p);

}  // namespace hfcorr
