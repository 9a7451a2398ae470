#include "hfcorr/cli.hpp"

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hfcorr/errors.hpp"
#include "hfcorr/sweep.hpp"

namespace hfcorr {

namespace {

const std::map<std::string, Mode> kModeNames{{"paper", Mode::Paper}, {"gibbs", Mode::Gibbs}};
const std::map<std::string, Convention> kConventionNames{{"reconciled", Convention::Reconciled},
                                                         {"eq3", Convention::Eq3AsPrinted}};

// Names are kept as validated, lower-cased strings and resolved after parsing.
struct ConstructionOptions {
  std::string mode_name = "paper";
  std::string convention_name = "reconciled";

  Mode mode() const { return kModeNames.at(mode_name); }
  Convention convention() const { return kConventionNames.at(convention_name); }
};

void add_construction_options(CLI::App* cmd, ConstructionOptions& opts) {
  cmd->add_option("--mode", opts.mode_name, "thermal-state construction: paper (closed form) or gibbs")
      ->transform(CLI::IsMember(kModeNames, CLI::ignore_case))
      ->capture_default_str();
  cmd->add_option("--convention", opts.convention_name, "Hamiltonian convention for gibbs mode")
      ->transform(CLI::IsMember(kConventionNames, CLI::ignore_case))
      ->capture_default_str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thermal entanglement and quantum discord of a Herring-Flicker coupled XXX spin pair",
               "hfcorr"};
  app.require_subcommand(1);

  SweepConfig sweep_cfg;
  ConstructionOptions sweep_construction;
  auto* sweep = app.add_subcommand("sweep", "evaluate a (KT, B, R) grid and write CSV");
  sweep->add_option("--kt", sweep_cfg.kt_values, "temperatures (comma separated)")
      ->required()
      ->delimiter(',');
  sweep->add_option("--b", sweep_cfg.b_values, "field strengths (comma separated)")
      ->required()
      ->delimiter(',');
  sweep->add_option("--r-min", sweep_cfg.r_min, "smallest coupling distance")->required();
  sweep->add_option("--r-max", sweep_cfg.r_max, "largest coupling distance")->required();
  sweep->add_option("--r-steps", sweep_cfg.r_steps, "number of R grid points")->required();
  add_construction_options(sweep, sweep_construction);
  sweep->add_option("--grid-theta", sweep_cfg.minimizer.grid_n, "measurement-angle grid size")
      ->capture_default_str();
  sweep->add_option("--tol", sweep_cfg.minimizer.tol, "golden-section stopping width")
      ->capture_default_str();
  sweep->add_option("--out", sweep_cfg.out_path, "output CSV path")->required();

  ModelParams point_params;
  ConstructionOptions point_construction;
  MinimizerOptions point_minimizer;
  auto* point = app.add_subcommand("point", "evaluate one parameter point, CSV to stdout");
  point->add_option("--r", point_params.r, "coupling distance")->required();
  point->add_option("--b", point_params.b, "field strength")->required();
  point->add_option("--kt", point_params.kt, "temperature")->required();
  add_construction_options(point, point_construction);
  point->add_option("--grid-theta", point_minimizer.grid_n, "measurement-angle grid size");
  point->add_option("--tol", point_minimizer.tol, "golden-section stopping width");

  double death_kt = 0.0;
  double death_b = 0.0;
  double death_tol = kDefaultThresholdTol;
  ConstructionOptions death_construction;
  auto* death = app.add_subcommand("death-radius", "largest R with nonzero concurrence");
  death->add_option("--kt", death_kt, "temperature")->required();
  death->add_option("--b", death_b, "field strength")->required();
  add_construction_options(death, death_construction);
  death->add_option("--tol", death_tol, "bisection width")->capture_default_str();

  double critical_b = 0.0;
  double critical_tol = kDefaultThresholdTol;
  ConstructionOptions critical_construction;
  auto* critical = app.add_subcommand("critical-kt", "largest KT with nonzero concurrence at R=1.25");
  critical->add_option("--b", critical_b, "field strength")->required();
  add_construction_options(critical, critical_construction);
  critical->add_option("--tol", critical_tol, "bisection width")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidArguments;
  }

  try {
    if (sweep->parsed()) {
      sweep_cfg.mode = sweep_construction.mode();
      sweep_cfg.convention = sweep_construction.convention();
      const auto records = run_sweep(sweep_cfg);
      out << "wrote " << records.size() << " records to " << sweep_cfg.out_path << '\n';
    } else if (point->parsed()) {
      const CorrelationRecord rec = evaluate_point(point_params, point_construction.mode(),
                                                   point_construction.convention(), point_minimizer);
      write_csv_header(out);
      write_csv_row(out, rec);
    } else if (death->parsed()) {
      out << format_number(find_death_radius(death_b, death_kt, death_construction.mode(),
                                             death_construction.convention(), death_tol))
          << '\n';
    } else if (critical->parsed()) {
      out << format_number(find_critical_kt(critical_b, critical_construction.mode(),
                                            critical_construction.convention(), critical_tol))
          << '\n';
    }
  } catch (const NoEntanglementError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoEntanglement;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  }
  return kExitOk;
}

}  // namespace hfcorr
