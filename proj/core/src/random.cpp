#include "hdet/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "hdet/errors.hpp"
#include "hdet/invariants.hpp"
#include "hdet/thermal.hpp"

namespace hdet {

Rng stream_for(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

std::string_view ensemble_name(EnsembleKind k) {
  switch (k) {
    case EnsembleKind::FlatState: return "flat";
    case EnsembleKind::HaarState: return "haar";
    case EnsembleKind::GOE: return "goe";
    case EnsembleKind::GUE: return "gue";
    case EnsembleKind::GSE: return "gse";
  }
  return "";
}

EnsembleKind ensemble_from_name(std::string_view name) {
  for (EnsembleKind k : {EnsembleKind::FlatState, EnsembleKind::HaarState, EnsembleKind::GOE,
                         EnsembleKind::GUE, EnsembleKind::GSE}) {
    if (ensemble_name(k) == name) return k;
  }
  throw BadRange("unknown ensemble: " + std::string(name));
}

bool is_matrix_ensemble(EnsembleKind k) {
  return k == EnsembleKind::GOE || k == EnsembleKind::GUE || k == EnsembleKind::GSE;
}

double HDetStats::fraction_above(double threshold) const {
  if (samples.empty()) return 0.0;
  const auto n = std::count_if(samples.begin(), samples.end(),
                               [threshold](double x) { return x > threshold; });
  return static_cast<double>(n) / static_cast<double>(samples.size());
}

std::vector<HistogramBin> HDetStats::histogram(double lo, double hi, int bins) const {
  if (bins < 1 || !(hi > lo)) throw BadRange("histogram needs bins >= 1 and hi > lo");
  std::vector<HistogramBin> out;
  out.push_back({0.0, std::pow(10.0, lo), 0});
  const double width = (hi - lo) / bins;
  for (int b = 0; b < bins; ++b) {
    out.push_back({std::pow(10.0, lo + b * width), std::pow(10.0, lo + (b + 1) * width), 0});
  }
  out.push_back({std::pow(10.0, hi), std::numeric_limits<double>::infinity(), 0});
  for (double x : samples) {
    std::size_t idx;
    if (!(x > 0.0) || std::log10(x) < lo) {
      idx = 0;
    } else if (std::log10(x) >= hi) {
      idx = out.size() - 1;
    } else {
      const int b = std::min(bins - 1, static_cast<int>((std::log10(x) - lo) / width));
      idx = static_cast<std::size_t>(b) + 1;
    }
    ++out[idx].count;
  }
  return out;
}

std::map<int, std::size_t> HDetStats::multiplicity_counts() const {
  std::map<int, std::size_t> m;
  for (int g : ground_multiplicity) ++m[g];
  return m;
}

PureState4 sample_state(EnsembleKind kind, Rng& rng) {
  Amplitudes4 a{};
  if (kind == EnsembleKind::FlatState) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (cplx& z : a) {
      const double re = u(rng);
      z = cplx(re, u(rng));
    }
  } else if (kind == EnsembleKind::HaarState) {
    std::normal_distribution<double> g(0.0, std::sqrt(0.5));
    for (cplx& z : a) {
      const double re = g(rng);
      z = cplx(re, g(rng));
    }
  } else {
    throw BadRange("sample_state expects a state ensemble");
  }
  return PureState4(a);
}

Hamiltonian16 sample_matrix(EnsembleKind kind, Rng& rng) {
  std::normal_distribution<double> g;
  Matrix16 a{};
  switch (kind) {
    case EnsembleKind::GOE:
      for (cplx& z : a) z = g(rng);
      break;
    case EnsembleKind::GUE: {
      std::normal_distribution<double> h(0.0, std::sqrt(0.5));
      for (cplx& z : a) {
        const double re = h(rng);
        z = cplx(re, h(rng));
      }
      break;
    }
    case EnsembleKind::GSE:
      // quaternion q0 + q1 i + q2 j + q3 k -> [[q0 + i q1, q2 + i q3], [-q2 + i q3, q0 - i q1]]
      for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
          const double q0 = g(rng), q1 = g(rng), q2 = g(rng), q3 = g(rng);
          a[16 * (2 * r) + 2 * c] = cplx(q0, q1);
          a[16 * (2 * r) + 2 * c + 1] = cplx(q2, q3);
          a[16 * (2 * r + 1) + 2 * c] = cplx(-q2, q3);
          a[16 * (2 * r + 1) + 2 * c + 1] = cplx(q0, -q1);
        }
      }
      break;
    default:
      throw BadRange("sample_matrix expects a matrix ensemble");
  }
  Matrix16 h{};
  for (std::size_t r = 0; r < 16; ++r) {
    for (std::size_t c = 0; c < 16; ++c) {
      h[16 * r + c] = 0.5 * (a[16 * r + c] + std::conj(a[16 * c + r]));
    }
  }
  return Hamiltonian16(h, std::string(ensemble_name(kind)));
}

namespace {

double subspace_mean(const Level& lv, int draws, Rng& rng) {
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  double acc = 0.0;
  for (int d = 0; d < draws; ++d) {
    Amplitudes4 v{};
    for (const PureState4& b : lv.basis) {
      const double re = g(rng);
      const cplx c(re, g(rng));
      for (std::size_t r = 0; r < 16; ++r) v[r] += c * b[r];
    }
    acc += invariants_of(PureState4(v)).abs_hdet;
  }
  return acc / draws;
}

void sample_one(const EnsembleSpec& spec, std::size_t index, double& value, int& mult) {
  Rng rng = stream_for(spec.seed, index);
  if (!is_matrix_ensemble(spec.kind)) {
    value = invariants_of(sample_state(spec.kind, rng)).abs_hdet;
    mult = 1;
    return;
  }
  const SpectralDecomposition dec = eig_hermitian(sample_matrix(spec.kind, rng));
  const Level& g = dec.levels.front();
  mult = g.multiplicity;
  if (g.multiplicity == 1 || spec.policy == DegeneratePolicy::First) {
    value = invariants_of(g.basis.front()).abs_hdet;
  } else if (spec.policy == DegeneratePolicy::SubspaceMean) {
    value = subspace_mean(g, spec.subspace_draws, rng);
  } else {
    MinimizerOptions o;
    o.seed = rng();
    value = minimize_over_subspace(g.basis, Invariant::HDet, o).value;
  }
}

}  // namespace

HDetStats ensemble_hdet_stats(const EnsembleSpec& spec) {
  if (spec.sample_count == 0) throw BadRange("sample_count must be >= 1");
  HDetStats stats;
  stats.samples.resize(spec.sample_count);
  stats.ground_multiplicity.resize(spec.sample_count);
  unsigned nt = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  nt = static_cast<unsigned>(std::min<std::size_t>(nt, spec.sample_count));
  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < spec.sample_count; i += nt) {
      sample_one(spec, i, stats.samples[i], stats.ground_multiplicity[i]);
    }
  };
  if (nt == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  double sum = 0.0;
  for (double x : stats.samples) sum += x;
  stats.mean = sum / static_cast<double>(stats.samples.size());
  return stats;
}

}  // namespace hdet
