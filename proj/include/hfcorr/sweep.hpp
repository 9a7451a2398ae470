#pragma once

// Parameter sweeps over (R, B, KT), CSV output and the bisection-based
// threshold finders (entanglement death radius, critical temperature).

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hfcorr/correlations.hpp"
#include "hfcorr/model.hpp"

namespace hfcorr {

struct SweepConfig {
  double r_min = 0.0;
  double r_max = 6.0;
  int r_steps = 601;
  std::vector<double> b_values{0.0, 0.5, 1.0, 2.0};
  std::vector<double> kt_values{0.2};
  Mode mode = Mode::Paper;
  Convention convention = Convention::Reconciled;  ///< only used in gibbs mode
  MinimizerOptions minimizer;
  std::string out_path;  ///< empty: no file is written

  /// Throws InvalidInputError on an empty list, r_min >= r_max,
  /// r_steps < 2, non-finite values or KT <= 0.
  void validate() const;

  /// r_min + i (r_max - r_min)/(r_steps - 1), with the last point pinned to r_max.
  double r_at(int i) const;
};

/// One row of the CSV.
struct CorrelationRecord {
  double r = 0.0;
  double b = 0.0;
  double kt = 0.0;
  double j = 0.0;
  double concurrence = 0.0;
  double discord = 0.0;
  double s_ab = 0.0;
  double s_a = 0.0;
  double s_b = 0.0;
  double mutual_information = 0.0;
  double theta_opt = 0.0;
};

inline constexpr std::string_view kCsvHeader =
    "R,B,KT,J,concurrence,discord,s_ab,s_a,s_b,mutual_information,theta_opt";

/// Environment variable holding the sweep worker count.
inline constexpr const char* kWorkersEnv = "HFCORR_WORKERS";

/// Evaluates every correlation quantity at one parameter point.
CorrelationRecord evaluate_point(const ModelParams& p, Mode mode,
                                 Convention convention = Convention::Reconciled,
                                 const MinimizerOptions& opts = {});

/**
 * Evaluates the full (kt, b, r) grid, fanning points out over
 * `worker_count()` threads. Records come back (and are written) in
 * lexicographic (kt, b, r) order regardless of scheduling.
 *
 * When cfg.out_path is set the file is opened before any computation;
 * failure to open it throws IoError.
 */
std::vector<CorrelationRecord> run_sweep(const SweepConfig& cfg);

/// HFCORR_WORKERS if set to a positive integer, else the processor count.
unsigned worker_count();

/// CSV cell rendering: 12 significant digits with `%.12g` semantics and a
/// '.' radix regardless of locale. Negative zero prints as 0.
std::string format_number(double x);

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const CorrelationRecord& rec);
void write_csv(std::ostream& os, const std::vector<CorrelationRecord>& records);

/// Default bisection width for the threshold finders.
inline constexpr double kDefaultThresholdTol = 1e-9;

/**
 * Largest R at which the thermal concurrence crosses zero, by bisection on
 * [1.25, 12] to a bracket narrower than tol.
 *
 * Throws NoEntanglementError if the concurrence at the coupling peak
 * R = 1.25 is already zero.
 */
double find_death_radius(double b, double kt, Mode mode,
                         Convention convention = Convention::Reconciled,
                         double tol = kDefaultThresholdTol);

/**
 * Largest KT at which the concurrence at the coupling peak R = 1.25 is
 * positive, by bisection to a bracket narrower than tol.
 *
 * The bracket is found by scanning a log-spaced grid over [1e-3, 1e3]
 * downward from the hot end. Throws NoEntanglementError if no grid
 * temperature gives a positive value.
 */
double find_critical_kt(double b, Mode mode, Convention convention = Convention::Reconciled,
                        double tol = kDefaultThresholdTol);

}  // namespace hfcorr
