#include "commands.hpp"

#include <cmath>

#include "format.hpp"

namespace hdet::cli {

namespace {

bool valid_level_index(const std::string& s, int& k) {
  if (s.empty() || s.size() > 2) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  k = std::stoi(s);
  return k >= 0 && k < 16;
}

// Position of the first eigenvector of level `l` in energy order.
int level_offset(const SpectralDecomposition& d, std::size_t l) {
  int off = 0;
  for (std::size_t i = 0; i < l; ++i) off += d.levels[i].multiplicity;
  return off;
}

std::size_t level_of_index(const SpectralDecomposition& d, int k) {
  int off = 0;
  for (std::size_t l = 0; l < d.levels.size(); ++l) {
    off += d.levels[l].multiplicity;
    if (k < off) return l;
  }
  return d.levels.size() - 1;
}

Hamiltonian16 model_hamiltonian(SweepModel m, double p) {
  return m == SweepModel::Ising ? ising_hamiltonian({p}) : xxz_hamiltonian({p});
}

std::vector<SweepRow> spin_chain_sweep(const SweepRequest& req, const std::vector<double>& grid) {
  std::vector<SpectralDecomposition> decs;
  decs.reserve(grid.size());
  for (double p : grid) decs.push_back(eig_hermitian(model_hamiltonian(req.model, p)));

  std::vector<SweepRow> rows;
  if (req.level == "all" || req.level == "ground") {
    const bool all = req.level == "all";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto flat = decs[i].flattened();
      const std::size_t n = all ? flat.size() : 1;
      for (std::size_t k = 0; k < n; ++k) {
        rows.push_back({grid[i], static_cast<int>(k), flat[k].first, invariants_of(flat[k].second)});
      }
    }
    return rows;
  }

  int k = 0;
  valid_level_index(req.level, k);
  if (!req.continuity) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto flat = decs[i].flattened();
      const auto& [e, v] = flat[static_cast<std::size_t>(k)];
      rows.push_back({grid[i], k, e, invariants_of(v)});
    }
    return rows;
  }

  // Seed at the first grid point where level k is non-degenerate, then follow
  // the eigenvector by overlap in both directions.
  std::size_t seed = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (decs[i].levels[level_of_index(decs[i], k)].multiplicity == 1) {
      seed = i;
      break;
    }
  }
  std::vector<TrackedState> tracked(grid.size());
  {
    const std::size_t l = level_of_index(decs[seed], k);
    const Level& lv = decs[seed].levels[l];
    const std::size_t inner_idx = static_cast<std::size_t>(k - level_offset(decs[seed], l));
    tracked[seed] = {l, lv.energy, lv.basis[inner_idx], 1.0};
  }
  for (std::size_t i = seed + 1; i < grid.size(); ++i) {
    tracked[i] = track_by_overlap(decs[i], tracked[i - 1].state);
  }
  for (std::size_t i = seed; i-- > 0;) {
    tracked[i] = track_by_overlap(decs[i], tracked[i + 1].state);
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    rows.push_back({grid[i], level_offset(decs[i], tracked[i].level), tracked[i].energy,
                    invariants_of(tracked[i].state)});
  }
  return rows;
}

double expectation(const Hamiltonian16& h, const PureState4& s) {
  return inner(s.amps(), h.apply(s.amps())).real();
}

}  // namespace

SweepModel sweep_model_from_name(const std::string& name) {
  if (name == "ising") return SweepModel::Ising;
  if (name == "xxz") return SweepModel::XXZ;
  if (name == "hs") return SweepModel::HS;
  if (name == "hs-dimer") return SweepModel::HSDimer;
  throw BadRange("unknown model: " + name);
}

std::vector<double> linear_grid(double start, double stop, int steps) {
  if (steps < 1) throw BadRange("steps must be >= 1");
  if (!(start <= stop) || !std::isfinite(start) || !std::isfinite(stop)) {
    throw BadRange("need finite start <= stop");
  }
  std::vector<double> g(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    g[static_cast<std::size_t>(i)] =
        steps == 1 ? start : start + (stop - start) * i / static_cast<double>(steps - 1);
  }
  if (steps > 1) g.back() = stop;
  return g;
}

std::vector<SweepRow> run_sweep(const SweepRequest& req) {
  const std::vector<double> grid = linear_grid(req.start, req.stop, req.steps);
  int k = 0;
  if (req.level != "ground" && req.level != "all" && !valid_level_index(req.level, k)) {
    throw BadRange("level must be ground, all, or 0..15");
  }
  switch (req.model) {
    case SweepModel::Ising:
      if (req.start < 0.0) throw BadRange("lambda must be >= 0");
      return spin_chain_sweep(req, grid);
    case SweepModel::XXZ:
      return spin_chain_sweep(req, grid);
    case SweepModel::HS:
    case SweepModel::HSDimer:
      break;
  }
  if (req.level != "ground" && req.level != "0") {
    throw BadRange("hs sweeps provide the ground-state wave function only");
  }
  const Hamiltonian16 h = hs_hamiltonian();
  std::vector<SweepRow> rows;
  for (double p : grid) {
    const PureState4 s = req.model == SweepModel::HS ? hs_state(p)
                                                     : hs_dimerized_state({req.alpha, p});
    rows.push_back({p, 0, expectation(h, s), invariants_of(s)});
  }
  return rows;
}

void write_sweep(const std::vector<SweepRow>& rows, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SweepRow& r : rows) {
      arr.push_back({{"param", r.param},
                     {"level", r.level},
                     {"energy", r.energy},
                     {"S", {r.inv.S.real(), r.inv.S.imag()}},
                     {"T", {r.inv.T.real(), r.inv.T.imag()}},
                     {"hdet", {r.inv.hdet.real(), r.inv.hdet.imag()}},
                     {"abs_hdet", r.inv.abs_hdet}});
    }
    out << arr.dump(2) << '\n';
    return;
  }
  CsvWriter w(out);
  w.header({"param", "level", "energy", "S_re", "S_im", "T_re", "T_im", "hdet_re", "hdet_im",
            "abs_hdet"});
  for (const SweepRow& r : rows) {
    w.row(r.param, r.level,
          {r.energy, r.inv.S.real(), r.inv.S.imag(), r.inv.T.real(), r.inv.T.imag(),
           r.inv.hdet.real(), r.inv.hdet.imag(), r.inv.abs_hdet});
  }
}

std::vector<ThermalRow> run_thermal(const ThermalRequest& req) {
  const std::vector<double> grid = linear_grid(req.start, req.stop, req.steps);
  if (req.model == ThermalModel::Ising && req.start < 0.0) throw BadRange("lambda must be >= 0");
  if (req.betas.empty()) throw BadRange("at least one beta is required");
  for (double b : req.betas) {
    if (!(b >= 0.0) || !std::isfinite(b)) throw BadRange("beta must be finite and >= 0");
  }
  std::vector<ThermalRow> rows;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double p = grid[i];
    const SpectralDecomposition dec = eig_hermitian(
        req.model == ThermalModel::Ising ? ising_hamiltonian({p}) : xxz_hamiltonian({p}));
    for (double beta : req.betas) {
      MinimizerOptions opt = req.mode == ThermalMode::Superposition
                                 ? superposition_defaults(req.seed)
                                 : MinimizerOptions{};
      opt.seed = req.seed + 1000003ULL * i;
      double v[3];
      const Invariant which[3] = {Invariant::S, Invariant::T, Invariant::HDet};
      for (int w = 0; w < 3; ++w) v[w] = thermal_invariant(dec, {beta, req.mode, which[w]}, opt);
      rows.push_back({p, beta, v[0], v[1], v[2]});
    }
  }
  return rows;
}

void write_thermal(const std::vector<ThermalRow>& rows, ThermalModel model, std::ostream& out) {
  CsvWriter w(out);
  w.header({model == ThermalModel::XXZ ? "delta" : "lambda", "beta", "S_thermal", "T_thermal",
            "hdet_thermal"});
  for (const ThermalRow& r : rows) w.row({r.param, r.beta, r.S, r.T, r.hdet});
}

nlohmann::json random_summary(const HDetStats& stats, const RandomRequest& req) {
  nlohmann::json j{{"kind", std::string(ensemble_name(req.spec.kind))},
                   {"n", stats.samples.size()},
                   {"seed", req.spec.seed},
                   {"mean", stats.mean},
                   {"frac_gt_1e-8", stats.fraction_above(1e-8)}};
  if (req.threshold != 1e-8) {
    j["threshold"] = req.threshold;
    j["frac_above_threshold"] = stats.fraction_above(req.threshold);
  }
  if (is_matrix_ensemble(req.spec.kind)) {
    nlohmann::json mult = nlohmann::json::object();
    for (const auto& [m, count] : stats.multiplicity_counts()) mult[std::to_string(m)] = count;
    j["ground_multiplicity"] = mult;
    const char* policy = req.spec.policy == DegeneratePolicy::SubspaceMean  ? "mean"
                         : req.spec.policy == DegeneratePolicy::SubspaceMin ? "min"
                                                                            : "first";
    j["degenerate_policy"] = policy;
  }
  return j;
}

void write_histogram(const HDetStats& stats, const RandomRequest& req, std::ostream& out) {
  CsvWriter w(out);
  w.header({"bin_low", "bin_high", "count"});
  for (const HistogramBin& b : stats.histogram(req.log10_lo, req.log10_hi, req.bins)) {
    out << format_double(b.low) << ',' << format_double(b.high) << ',' << b.count << '\n';
  }
}

PureState4 resolve_state(const std::string& name, const std::vector<std::string>& params) {
  for (const std::string& n : named_state_names()) {
    if (n == name) {
      if (!params.empty()) throw ArityMismatch(name + " takes no parameters");
      return named_state(name);
    }
  }
  FamilyParams fp{family_from_tag(name), {}};
  for (const std::string& p : params) {
    try {
      fp.params.push_back(parse_complex(p));
    } catch (const std::invalid_argument& e) {
      throw ArityMismatch(e.what());
    }
  }
  return verstraete_state(fp);
}

nlohmann::json state_report(const std::string& name, const PureState4& s, Precision precision) {
  const InvariantTriple inv = invariants_of(s, precision);
  nlohmann::json amps = nlohmann::json::array();
  for (std::size_t i = 0; i < 16; ++i) {
    if (s[i] == 0.0) continue;
    std::string ket(4, '0');
    for (int b = 0; b < 4; ++b) ket[static_cast<std::size_t>(b)] = ((i >> (3 - b)) & 1) ? '1' : '0';
    amps.push_back({{"ket", ket}, {"re", s[i].real()}, {"im", s[i].imag()}});
  }
  const bool zero = is_structural_zero(inv.hdet, inv.S);
  nlohmann::json j{{"state", name},
                   {"amplitudes", amps},
                   {"S", {inv.S.real(), inv.S.imag()}},
                   {"T", {inv.T.real(), inv.T.imag()}},
                   {"hdet", {inv.hdet.real(), inv.hdet.imag()}},
                   {"abs_S", inv.abs_S},
                   {"abs_T", inv.abs_T},
                   {"abs_hdet", zero ? 0.0 : inv.abs_hdet},
                   {"structural_zero", zero}};
  if (zero) {
    j["J"] = nullptr;
  } else {
    const cplx J = inv.S * inv.S * inv.S / inv.hdet;
    j["J"] = {J.real(), J.imag()};
  }
  return j;
}

void write_state_text(const nlohmann::json& r, std::ostream& out) {
  auto z = [](const nlohmann::json& pair) {
    return format_complex({pair[0].get<double>(), pair[1].get<double>()});
  };
  out << "state " << r["state"].get<std::string>() << '\n';
  for (const auto& a : r["amplitudes"]) {
    out << "  |" << a["ket"].get<std::string>() << ">  "
        << format_complex({a["re"].get<double>(), a["im"].get<double>()}) << '\n';
  }
  out << "S      = " << z(r["S"]) << '\n';
  out << "T      = " << z(r["T"]) << '\n';
  out << "HDet4  = " << z(r["hdet"]) << '\n';
  out << "|HDet4| = " << format_double(r["abs_hdet"].get<double>())
      << (r["structural_zero"].get<bool>() ? "  (structural zero)" : "") << '\n';
  if (r["J"].is_null()) {
    out << "J      = undefined\n";
  } else {
    out << "J      = " << z(r["J"]) << '\n';
  }
}

}  // namespace hdet::cli
