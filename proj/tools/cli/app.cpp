#include "app.hpp"

#include <fstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "format.hpp"

namespace hdet::cli {

namespace {

std::uint64_t require_seed(const std::optional<std::uint64_t>& seed, const char* what) {
  if (!seed) throw BadRange(std::string(what) + " requires --seed");
  return *seed;
}

OutputFormat format_from_name(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw BadRange("unknown format: " + s);
}

ThermalMode thermal_mode_from_name(const std::string& s) {
  if (s == "weighted") return ThermalMode::WeightedSum;
  if (s == "min") return ThermalMode::DegenerateMin;
  if (s == "superposition") return ThermalMode::Superposition;
  throw BadRange("unknown thermal mode: " + s);
}

DegeneratePolicy policy_from_name(const std::string& s) {
  if (s == "mean") return DegeneratePolicy::SubspaceMean;
  if (s == "min") return DegeneratePolicy::SubspaceMin;
  if (s == "first") return DegeneratePolicy::First;
  throw BadRange("unknown degenerate policy: " + s);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const InvariantFn& invariants) {
  CLI::App app{"4-qubit polynomial invariants and hyperdeterminant"};
  app.require_subcommand(1);

  std::string state_name;
  std::vector<std::string> state_params;
  bool state_json = false, state_extended = false;
  auto* st = app.add_subcommand("state", "Invariants of a named state or normal-form family");
  st->add_option("name", state_name, "GHZ, C1, C2, C3, YC, W, HD, L or a family tag")->required();
  st->add_option("params", state_params, "complex family parameters, e.g. 0.3+0.2i");
  st->add_flag("--json", state_json, "emit JSON");
  st->add_flag("--extended", state_extended, "extended-precision hdet");

  SweepRequest sweep;
  std::string sweep_model, sweep_format = "csv";
  bool by_index = false;
  auto* sw = app.add_subcommand("sweep", "Invariants of model eigenstates over a parameter grid");
  sw->add_option("model", sweep_model, "ising, xxz, hs, hs-dimer")->required();
  sw->add_option("--start", sweep.start, "grid start");
  sw->add_option("--stop", sweep.stop, "grid stop");
  sw->add_option("--steps", sweep.steps, "grid points");
  sw->add_option("--level", sweep.level, "ground, all, or level index 0..15");
  sw->add_flag("--by-index", by_index, "select numbered levels by energy rank at every point");
  sw->add_option("--alpha", sweep.alpha, "alpha for hs-dimer (grid runs over delta)");
  sw->add_option("--format", sweep_format, "csv or json");

  RandomRequest rnd;
  std::string rnd_kind, rnd_policy = "mean", rnd_hist;
  std::optional<std::uint64_t> rnd_seed;
  int rnd_n = 10000;
  auto* rn = app.add_subcommand("random", "Hyperdeterminant statistics of random ensembles");
  rn->add_option("kind", rnd_kind, "flat, haar, goe, gue, gse")->required();
  rn->add_option("-n,--samples", rnd_n, "sample count")->check(CLI::PositiveNumber);
  rn->add_option("--seed", rnd_seed, "PRNG seed");
  rn->add_option("--threshold", rnd.threshold, "fraction threshold");
  rn->add_option("--policy", rnd_policy, "degenerate ground level policy: mean, min, first");
  rn->add_option("--threads", rnd.spec.threads, "worker threads (0 = hardware)");
  rn->add_option("--histogram", rnd_hist, "write log-binned histogram CSV to this file ('-' for stdout)");
  rn->add_option("--bins", rnd.bins, "histogram bins")->check(CLI::PositiveNumber);
  rn->add_option("--log10-lo", rnd.log10_lo, "histogram lower decade");
  rn->add_option("--log10-hi", rnd.log10_hi, "histogram upper decade");

  ThermalRequest th;
  std::string th_model, th_mode = "min", th_betas;
  std::optional<std::uint64_t> th_seed;
  auto* tc = app.add_subcommand("thermal", "Thermal invariants over a parameter grid");
  tc->add_option("model", th_model, "xxz or ising")->required();
  tc->add_option("--start", th.start, "grid start");
  tc->add_option("--stop", th.stop, "grid stop");
  tc->add_option("--steps", th.steps, "grid points");
  tc->add_option("--betas", th_betas, "comma-separated inverse temperatures");
  tc->add_option("--mode", th_mode, "weighted, min, superposition");
  tc->add_option("--seed", th_seed, "seed for the subspace minimizer");

  std::vector<std::string> only;
  bool list = false;
  auto* vf = app.add_subcommand("verify", "Run the golden-value and property suites");
  vf->add_option("--only", only, "run only these suites");
  vf->add_flag("--list", list, "list suite names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*st) {
      const PureState4 s = resolve_state(state_name, state_params);
      const auto report = state_report(state_name, s, state_extended ? Precision::Extended : Precision::Double);
      if (state_json) {
        out << report.dump(2) << '\n';
      } else {
        write_state_text(report, out);
      }
    } else if (*sw) {
      sweep.model = sweep_model_from_name(sweep_model);
      sweep.format = format_from_name(sweep_format);
      sweep.continuity = !by_index;
      write_sweep(run_sweep(sweep), sweep.format, out);
    } else if (*rn) {
      rnd.spec.kind = ensemble_from_name(rnd_kind);
      rnd.spec.sample_count = rnd_n;
      rnd.spec.seed = require_seed(rnd_seed, "random");
      rnd.spec.policy = policy_from_name(rnd_policy);
      const HDetStats stats = ensemble_hdet_stats(rnd.spec);
      out << random_summary(stats, rnd).dump(2) << '\n';
      if (rnd_hist == "-") {
        write_histogram(stats, rnd, out);
      } else if (!rnd_hist.empty()) {
        std::ofstream f(rnd_hist);
        if (!f) throw BadRange("cannot open " + rnd_hist);
        write_histogram(stats, rnd, f);
      }
    } else if (*tc) {
      if (th_model == "xxz") {
        th.model = ThermalModel::XXZ;
      } else if (th_model == "ising") {
        th.model = ThermalModel::Ising;
      } else {
        throw BadRange("unknown thermal model: " + th_model);
      }
      th.mode = thermal_mode_from_name(th_mode);
      if (!th_betas.empty()) th.betas = parse_double_list(th_betas);
      if (th.mode != ThermalMode::WeightedSum) th.seed = require_seed(th_seed, "thermal min and superposition modes");
      write_thermal(run_thermal(th), th.model, out);
    } else if (*vf) {
      if (list) {
        for (const std::string& n : verify_suite_names()) out << n << '\n';
        return 0;
      }
      VerifyOptions opts;
      opts.only = only;
      opts.invariants = invariants;
      return report_verify(run_verify(opts), out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace hdet::cli
