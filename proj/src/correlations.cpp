#include "hfcorr/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "hfcorr/errors.hpp"

namespace hfcorr {

namespace {

constexpr double kDiscordClampBand = 1e-9;
constexpr double kBellDiagonalTolerance = 1e-12;
constexpr double kStructuralZero = 1e-14;
// Conditional entropies closer than this count as equal for the angle tie-break.
constexpr double kTieBand = 1e-13;

void require_physical(double lambda, const char* what) {
  if (lambda < -kNegativeEigenvalueBand) {
    std::ostringstream msg;
    msg << "not a density matrix: " << what << " has eigenvalue " << lambda;
    throw NotAStateError(msg.str());
  }
}

Matrix4 hermitian_sqrt(const Matrix4& rho) {
  const EigenSystem<4> eig = hermitian_eigensystem(rho);
  Matrix4 root;
  for (std::size_t k = 0; k < 4; ++k) {
    require_physical(eig.values[k], "rho");
    const double s = std::sqrt(std::max(eig.values[k], 0.0));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        root(i, j) += s * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }
  return hermitian_part(root);
}

// True when every off-diagonal entry other than (1,2)/(2,1) vanishes. Such
// states commute with e^{-iφσz/2}⊗e^{-iφσz/2} and with σz⊗σz, which makes
// the conditional entropy independent of φ and symmetric under θ -> π - θ.
bool has_z_rotation_symmetry(const Matrix4& rho) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j || (i == 1 && j == 2) || (i == 2 && j == 1)) continue;
      if (std::abs(rho(i, j)) > kStructuralZero) return false;
    }
  return true;
}

class MeasurementSearch {
 public:
  explicit MeasurementSearch(const Matrix4& rho) : rho_(rho) {}

  double evaluate(double theta, double phi) {
    const double v = conditional_entropy(rho_, {theta, phi});
    ++best_.evaluations;
    const bool tie = std::abs(v - best_.value) <= kTieBand;
    const bool better =
        best_.evaluations == 1 || (!tie && v < best_.value) ||
        (tie && (theta < best_.basis.theta || (theta == best_.basis.theta && phi < best_.basis.phi)));
    if (better) {
      best_.value = v;
      best_.basis = {theta, phi};
    }
    return v;
  }

  const ConditionalEntropyResult& best() const { return best_; }

 private:
  const Matrix4& rho_;
  ConditionalEntropyResult best_;
};

// Golden-section search for a minimum of f on [lo, hi], stopping once the
// bracket is narrower than tol.
void golden_section(const std::function<double(double)>& f, double lo, double hi, double tol) {
  constexpr double inv_phi = 0.6180339887498949;  // (√5 - 1)/2
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo >= tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
}

// Index of the smallest value; first occurrence wins.
std::size_t argmin(const std::vector<double>& values) {
  return static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
}

}  // namespace

Matrix2 MeasurementBasis::projector(int outcome) const {
  const double sign = outcome == 0 ? 1.0 : -1.0;
  const double nx = std::sin(theta) * std::cos(phi);
  const double ny = std::sin(theta) * std::sin(phi);
  const double nz = std::cos(theta);
  const Matrix2 n_dot_sigma = complex{nx} * pauli::X + complex{ny} * pauli::Y + complex{nz} * pauli::Z;
  return complex{0.5} * (pauli::I + complex{sign} * n_dot_sigma);
}

Matrix4 spin_flip(const Matrix4& rho) {
  const Matrix4 yy = kron(pauli::Y, pauli::Y);
  return yy * rho.conj() * yy;
}

ConcurrenceResult concurrence(const Matrix4& rho) {
  const Matrix4 root = hermitian_sqrt(rho);
  // Rescale to unit max entry: the eigensolver stops on an absolute
  // off-diagonal threshold, which weakly entangled states sit below.
  Matrix4 r = hermitian_part(root * spin_flip(rho) * root);
  double scale = 0.0;
  for (const complex& z : r.entries()) scale = std::max(scale, std::abs(z));
  if (scale > 0.0) r = r * complex{1.0 / scale};
  Eigenvalues<4> lambdas = hermitian_eigenvalues(r);
  for (double& l : lambdas) l *= scale;

  ConcurrenceResult out;
  for (std::size_t k = 0; k < 4; ++k) {
    require_physical(lambdas[k], "rho * spin_flip(rho)");
    // ascending input, descending output
    out.sqrt_eigenvalues[3 - k] = std::sqrt(std::max(lambdas[k], 0.0));
  }
  const auto& s = out.sqrt_eigenvalues;
  out.value = std::max(0.0, s[0] - s[1] - s[2] - s[3]);
  return out;
}

double concurrence_xstate(const ThermalStateX& s) {
  return 2.0 * std::max(0.0, std::abs(s.a23) - std::sqrt(s.a11 * s.a44));
}

std::array<ConditionalBranch, 2> measure_conditional_states(const Matrix4& rho,
                                                            const MeasurementBasis& basis) {
  std::array<ConditionalBranch, 2> branches;
  for (int k = 0; k < 2; ++k) {
    const Matrix4 lift = kron(basis.projector(k), pauli::I);
    const Matrix4 post = lift * rho * lift;
    const double p = post.trace().real();
    branches[k].probability = p;
    branches[k].state = p < kNegligibleBranch
                            ? complex{0.5} * pauli::I
                            : hermitian_part(partial_trace(post, Subsystem::B)) * complex{1.0 / p};
  }
  return branches;
}

double conditional_entropy(const Matrix4& rho, const MeasurementBasis& basis) {
  double s = 0.0;
  for (const ConditionalBranch& br : measure_conditional_states(rho, basis)) {
    if (br.probability < kNegligibleBranch) continue;
    s += br.probability * von_neumann_entropy(br.state);
  }
  return s;
}

ConditionalEntropyResult min_conditional_entropy(const Matrix4& rho, const MinimizerOptions& opts) {
  if (opts.grid_n < 2) throw InvalidInputError("grid_n must be at least 2");
  if (!(opts.tol > 0.0)) throw InvalidInputError("tol must be positive");

  using std::numbers::pi;
  const auto n = static_cast<std::size_t>(opts.grid_n);
  MeasurementSearch search(rho);

  if (has_z_rotation_symmetry(rho)) {
    const double step = (pi / 2.0) / static_cast<double>(n - 1);
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = search.evaluate(static_cast<double>(i) * step, 0.0);

    const std::size_t i = argmin(values);
    const double lo = i == 0 ? 0.0 : static_cast<double>(i - 1) * step;
    const double hi = i + 1 == n ? pi / 2.0 : static_cast<double>(i + 1) * step;
    golden_section([&](double t) { return search.evaluate(t, 0.0); }, lo, hi, opts.tol);
    return search.best();
  }

  const double theta_step = pi / static_cast<double>(n - 1);
  const double phi_step = pi / static_cast<double>(n);
  std::vector<double> values(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      values[i * n + j] =
          search.evaluate(static_cast<double>(i) * theta_step, static_cast<double>(j) * phi_step);

  const std::size_t best = argmin(values);
  const std::size_t i = best / n;
  double phi = static_cast<double>(best % n) * phi_step;

  const double lo = i == 0 ? 0.0 : static_cast<double>(i - 1) * theta_step;
  const double hi = i + 1 == n ? pi : static_cast<double>(i + 1) * theta_step;
  golden_section([&](double t) { return search.evaluate(t, phi); }, lo, hi, opts.tol);

  // φ is 2π-periodic; keep probes inside [0, 2π).
  const double theta = search.best().basis.theta;
  phi = search.best().basis.phi;
  const auto wrap = [](double x) { return x < 0.0 ? x + 2.0 * pi : x; };
  golden_section([&](double f) { return search.evaluate(theta, wrap(f)); }, phi - phi_step,
                 phi + phi_step, opts.tol);

  phi = search.best().basis.phi;
  const double t0 = search.best().basis.theta;
  golden_section([&](double t) { return search.evaluate(t, phi); }, std::max(0.0, t0 - theta_step),
                 std::min(pi, t0 + theta_step), opts.tol);
  return search.best();
}

DiscordResult quantum_discord(const Matrix4& rho, const MinimizerOptions& opts) {
  DiscordResult out;
  out.s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
  out.s_ab = von_neumann_entropy(rho);
  const ConditionalEntropyResult m = min_conditional_entropy(rho, opts);
  out.min_conditional_entropy = m.value;
  out.optimal_basis = m.basis;
  out.evaluations = m.evaluations;
  out.value = out.s_a - out.s_ab + out.min_conditional_entropy;
  if (out.value < 0.0 && out.value >= -kDiscordClampBand) out.value = 0.0;
  return out;
}

double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double discord_bell_diagonal_oracle(const ThermalStateX& s) {
  if (std::abs(s.a11 - s.a44) > kBellDiagonalTolerance ||
      std::abs(s.a22 - s.a33) > kBellDiagonalTolerance) {
    throw DomainError("Bell-diagonal discord needs a11 == a44 and a22 == a33");
  }
  const double c12 = 2.0 * s.a23;
  const double c3 = 4.0 * s.a11 - 1.0;
  const double c = std::max(std::abs(c12), std::abs(c3));

  const double mean = 0.5 * (s.a22 + s.a33);
  const double radius = std::hypot(0.5 * (s.a22 - s.a33), s.a23);
  Eigenvalues<4> spectrum{s.a11, s.a44, mean - radius, mean + radius};
  std::sort(spectrum.begin(), spectrum.end());

  const double s_a = binary_entropy(s.a11 + s.a22);
  const double s_ab = entropy_of_spectrum<4>(spectrum);
  return s_a - s_ab + binary_entropy(0.5 * (1.0 + c));
}

double mutual_information(const Matrix4& rho) {
  const double s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
  const double s_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));
  return std::max(0.0, s_a + s_b - von_neumann_entropy(rho));
}

}  // namespace hfcorr
