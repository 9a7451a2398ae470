#include "hfcorr/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "hfcorr/errors.hpp"

namespace hfcorr {

namespace {

constexpr double kDeathBracketHi = 12.0;
constexpr double kCriticalKtFloor = 1e-3;
constexpr double kCriticalKtCeiling = 1e3;
constexpr int kCriticalKtScanPoints = 241;

// Concurrence at one parameter point, closed form for the X-form
// construction and the general definition otherwise.
double thermal_concurrence(const ModelParams& p, Mode mode, Convention convention) {
  if (mode == Mode::Paper) return concurrence_xstate(thermal_state_paper(p));
  return concurrence(thermal_state_gibbs(p, convention)).value;
}

void require_finite_list(const std::vector<double>& values, const char* name) {
  if (values.empty()) throw InvalidInputError(std::string(name) + " list is empty");
  for (double v : values)
    if (!std::isfinite(v)) throw InvalidInputError(std::string(name) + " values must be finite");
}

void require_tolerance(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw InvalidInputError("tolerance must be positive");
}

}  // namespace

void SweepConfig::validate() const {
  if (!std::isfinite(r_min) || !std::isfinite(r_max)) throw InvalidInputError("R bounds must be finite");
  if (r_min < 0.0) throw InvalidInputError("r_min must be >= 0");
  if (!(r_min < r_max)) throw InvalidInputError("r_min must be below r_max");
  if (r_steps < 2) throw InvalidInputError("r_steps must be at least 2");
  require_finite_list(b_values, "B");
  require_finite_list(kt_values, "KT");
  for (double kt : kt_values)
    if (kt <= 0.0) throw InvalidInputError("KT values must be positive");
  if (minimizer.grid_n < 2) throw InvalidInputError("grid_theta must be at least 2");
  require_tolerance(minimizer.tol);
}

double SweepConfig::r_at(int i) const {
  if (i == r_steps - 1) return r_max;
  return r_min + static_cast<double>(i) * (r_max - r_min) / static_cast<double>(r_steps - 1);
}

CorrelationRecord evaluate_point(const ModelParams& p, Mode mode, Convention convention,
                                 const MinimizerOptions& opts) {
  p.validate();
  const Matrix4 rho = thermal_state(p, mode, convention);
  const DiscordResult discord = quantum_discord(rho, opts);

  CorrelationRecord rec;
  rec.r = p.r;
  rec.b = p.b;
  rec.kt = p.kt;
  rec.j = hf_coupling(p.r);
  rec.concurrence = mode == Mode::Paper ? concurrence_xstate(x_entries(rho)) : concurrence(rho).value;
  rec.discord = discord.value;
  rec.s_ab = discord.s_ab;
  rec.s_a = discord.s_a;
  rec.s_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));
  rec.mutual_information = std::max(0.0, rec.s_a + rec.s_b - rec.s_ab);
  rec.theta_opt = discord.optimal_basis.theta;
  return rec;
}

unsigned worker_count() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<CorrelationRecord> run_sweep(const SweepConfig& cfg) {
  cfg.validate();

  std::ofstream out;
  if (!cfg.out_path.empty()) {
    out.open(cfg.out_path, std::ios::out | std::ios::trunc);
    if (!out) throw IoError("cannot open output file '" + cfg.out_path + "'");
  }

  std::vector<double> kts = cfg.kt_values;
  std::vector<double> bs = cfg.b_values;
  std::sort(kts.begin(), kts.end());
  std::sort(bs.begin(), bs.end());

  const std::size_t nr = static_cast<std::size_t>(cfg.r_steps);
  const std::size_t total = kts.size() * bs.size() * nr;
  std::vector<CorrelationRecord> records(total);

  // Record index k enumerates (kt, b, r) lexicographically.
  const auto point_at = [&](std::size_t k) {
    const std::size_t ir = k % nr;
    const std::size_t ib = (k / nr) % bs.size();
    const std::size_t ikt = k / (nr * bs.size());
    return ModelParams{cfg.r_at(static_cast<int>(ir)), bs[ib], kts[ikt]};
  };

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto work = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      try {
        records[k] = evaluate_point(point_at(k), cfg.mode, cfg.convention, cfg.minimizer);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = total;
      }
    }
  };

  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), total));
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();  // joins
  if (failure) std::rethrow_exception(failure);

  if (out.is_open()) {
    write_csv(out, records);
    out.flush();
    if (!out) throw IoError("failed writing output file '" + cfg.out_path + "'");
  }
  return records;
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  return {buf, res.ptr};
}

void write_csv_header(std::ostream& os) { os << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& os, const CorrelationRecord& rec) {
  const double cells[] = {rec.r,       rec.b,    rec.kt,  rec.j,   rec.concurrence,
                          rec.discord, rec.s_ab, rec.s_a, rec.s_b, rec.mutual_information,
                          rec.theta_opt};
  bool first = true;
  for (double c : cells) {
    if (!first) os << ',';
    os << format_number(c);
    first = false;
  }
  os << '\n';
}

void write_csv(std::ostream& os, const std::vector<CorrelationRecord>& records) {
  write_csv_header(os);
  for (const auto& rec : records) write_csv_row(os, rec);
}

double find_death_radius(double b, double kt, Mode mode, Convention convention, double tol) {
  require_tolerance(tol);
  ModelParams p{kCouplingPeakR, b, kt};
  p.validate();

  if (!(thermal_concurrence(p, mode, convention) > 0.0)) {
    std::ostringstream msg;
    msg << "no entanglement at the coupling peak R=" << kCouplingPeakR << " for B=" << b
        << ", KT=" << kt;
    throw NoEntanglementError(msg.str());
  }

  double lo = kCouplingPeakR;
  double hi = kDeathBracketHi;
  if (thermal_concurrence({hi, b, kt}, mode, convention) > 0.0) {
    throw NoEntanglementError("concurrence has no zero crossing below R=12");
  }
  while (hi - lo >= tol) {
    const double mid = 0.5 * (lo + hi);
    if (thermal_concurrence({mid, b, kt}, mode, convention) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double find_critical_kt(double b, Mode mode, Convention convention, double tol) {
  require_tolerance(tol);
  if (!std::isfinite(b)) throw DomainError("field B must be finite");
  const auto entangled = [&](double kt) {
    return thermal_concurrence({kCouplingPeakR, b, kt}, mode, convention) > 0.0;
  };

  // Walk a log-spaced temperature grid down from the ceiling to the first
  // entangled point; the crossing lies between it and its hotter neighbour.
  const double log_lo = std::log(kCriticalKtFloor);
  const double log_hi = std::log(kCriticalKtCeiling);
  const auto grid = [&](int i) {
    if (i == kCriticalKtScanPoints - 1) return kCriticalKtCeiling;
    return std::exp(log_lo + (log_hi - log_lo) * i / (kCriticalKtScanPoints - 1));
  };
  if (entangled(kCriticalKtCeiling)) throw NoEntanglementError("concurrence does not vanish at high KT");

  int i = kCriticalKtScanPoints - 2;
  while (i >= 0 && !entangled(grid(i))) --i;
  if (i < 0) {
    std::ostringstream msg;
    msg << "no entanglement at R=" << kCouplingPeakR << " for B=" << b << " at any KT >= "
        << kCriticalKtFloor;
    throw NoEntanglementError(msg.str());
  }

  double lo = grid(i);
  double hi = grid(i + 1);
  while (hi - lo >= tol) {
    const double mid = 0.5 * (lo + hi);
    if (entangled(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace hfcorr
