#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hdet/hdet.hpp"

namespace hdet::cli {

enum class SweepModel { Ising, XXZ, HS, HSDimer };
enum class OutputFormat { Csv, Json };

/// Throws BadRange.
SweepModel sweep_model_from_name(const std::string& name);

struct SweepRequest {
  SweepModel model = SweepModel::Ising;
  double start = 0.0;
  double stop = 1.0;
  int steps = 11;
  /// "ground", "all", or a level index 0..15.
  std::string level = "ground";
  /// Follow a numbered level by eigenvector overlap instead of by index.
  bool continuity = true;
  /// Fixed alpha for hs-dimer sweeps (the grid runs over delta).
  double alpha = 0.25;
  OutputFormat format = OutputFormat::Csv;
};

struct SweepRow {
  double param = 0.0;
  int level = 0;
  double energy = 0.0;
  InvariantTriple inv;
};

std::vector<double> linear_grid(double start, double stop, int steps);

/// Throws BadRange.
std::vector<SweepRow> run_sweep(const SweepRequest& req);
void write_sweep(const std::vector<SweepRow>& rows, OutputFormat format, std::ostream& out);

enum class ThermalModel { Ising, XXZ };

struct ThermalRequest {
  ThermalModel model = ThermalModel::XXZ;
  double start = -2.0;
  double stop = 2.0;
  int steps = 41;
  std::vector<double> betas{0.5, 1.0, 2.0, 5.0};
  ThermalMode mode = ThermalMode::DegenerateMin;
  std::uint64_t seed = 0;
};

struct ThermalRow {
  double param, beta, S, T, hdet;
};

/// Throws BadRange.
std::vector<ThermalRow> run_thermal(const ThermalRequest& req);
void write_thermal(const std::vector<ThermalRow>& rows, ThermalModel model, std::ostream& out);

struct RandomRequest {
  EnsembleSpec spec;
  double threshold = 1e-8;
  int bins = 40;
  double log10_lo = -16.0;
  double log10_hi = -6.0;
};

nlohmann::json random_summary(const HDetStats& stats, const RandomRequest& req);
void write_histogram(const HDetStats& stats, const RandomRequest& req, std::ostream& out);

/// Throws UnknownState / ArityMismatch.
PureState4 resolve_state(const std::string& name, const std::vector<std::string>& params);
nlohmann::json state_report(const std::string& name, const PureState4& s, Precision precision);
void write_state_text(const nlohmann::json& report, std::ostream& out);

}  // namespace hdet::cli
