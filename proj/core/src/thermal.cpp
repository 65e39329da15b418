#include "hdet/thermal.hpp"

#include <gsl/gsl_multimin.h>

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "hdet/errors.hpp"
#include "hdet/invariants.hpp"

namespace hdet {

namespace {

using std::numbers::pi;

// Unit vector in C^m from m-1 hyperspherical angles and `phases` phases; the
// first `m - phases` components are real.
void unit_vector(const double* angles, const double* phases, std::size_t m,
                 std::size_t nphases, cplx* out) {
  double run = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double r = k + 1 < m ? run * std::cos(angles[k]) : run;
    if (k + 1 < m) run *= std::sin(angles[k]);
    const std::size_t first_phase = m - nphases;
    out[k] = k >= first_phase ? std::polar(r, phases[k - first_phase]) : cplx(r);
  }
}

// Angles that map onto basis vector e_k.
std::vector<double> basis_angles(std::size_t m, std::size_t k) {
  std::vector<double> a(m > 0 ? m - 1 : 0, 0.0);
  for (std::size_t j = 0; j < k && j < a.size(); ++j) a[j] = pi / 2;
  return a;
}

struct Objective {
  std::function<double(const double*)> f;
  long evals = 0;
};

double gsl_trampoline(const gsl_vector* x, void* params) {
  auto* obj = static_cast<Objective*>(params);
  ++obj->evals;
  return obj->f(x->data);
}

struct LocalResult {
  std::vector<double> x;
  double fx;
  bool converged;
};

LocalResult nelder_mead(Objective& obj, const std::vector<double>& x0,
                        const MinimizerOptions& opt) {
  const std::size_t n = x0.size();
  gsl_multimin_function fn{&gsl_trampoline, n, &obj};
  gsl_vector* x = gsl_vector_alloc(n);
  gsl_vector* step = gsl_vector_alloc(n);
  for (std::size_t i = 0; i < n; ++i) gsl_vector_set(x, i, x0[i]);
  gsl_vector_set_all(step, 0.3);
  gsl_multimin_fminimizer* s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n);
  gsl_multimin_fminimizer_set(s, &fn, x, step);
  const long start = obj.evals;
  bool converged = false;
  while (obj.evals - start < opt.max_evals) {
    if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) break;
    if (s->fval <= opt.value_floor ||
        gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), opt.size_tol) == GSL_SUCCESS) {
      converged = true;
      break;
    }
  }
  LocalResult r{std::vector<double>(s->x->data, s->x->data + n), s->fval, converged};
  gsl_multimin_fminimizer_free(s);
  gsl_vector_free(step);
  gsl_vector_free(x);
  return r;
}

void check_orthonormal(std::span<const PureState4> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const cplx p = inner(basis[i].amps(), basis[j].amps());
      if (std::abs(p - (i == j ? 1.0 : 0.0)) > 1e-10) {
        throw NonOrthonormalBasis("subspace basis is not orthonormal");
      }
    }
  }
}

}  // namespace

double invariant_magnitude(const InvariantTriple& inv, Invariant which) {
  switch (which) {
    case Invariant::S: return inv.abs_S;
    case Invariant::T: return inv.abs_T;
    case Invariant::HDet: return inv.abs_hdet;
  }
  return 0.0;
}

SubspaceMinResult minimize_over_subspace(std::span<const PureState4> basis, Invariant which,
                                         const MinimizerOptions& options) {
  const std::size_t m = basis.size();
  if (m == 0 || m > 16) throw NonOrthonormalBasis("subspace dimension must be 1..16");
  check_orthonormal(basis);
  if (m == 1) {
    return {invariant_magnitude(invariants_of(basis[0]), which), {cplx(1.0)}, true, 0};
  }

  const std::size_t nang = m - 1, nph = m - 1;
  std::vector<cplx> coeff(m);
  auto combine = [&](const double* p, std::vector<cplx>& a) {
    unit_vector(p, p + nang, m, nph, a.data());
    Amplitudes4 v{};
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t r = 0; r < 16; ++r) v[r] += a[j] * basis[j][r];
    }
    return v;
  };
  Objective obj;
  obj.f = [&](const double* p) {
    return invariant_magnitude(invariants_of_amplitudes(combine(p, coeff)), which);
  };

  std::vector<std::vector<double>> starts;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<double> x = basis_angles(m, k);
    x.resize(nang + nph, 0.0);
    starts.push_back(std::move(x));
  }
  Rng rng(options.seed);
  std::uniform_real_distribution<double> ang(0.0, pi / 2), ph(0.0, 2 * pi);
  for (int s = 0; s < options.random_starts; ++s) {
    std::vector<double> x(nang + nph);
    for (std::size_t i = 0; i < nang; ++i) x[i] = ang(rng);
    for (std::size_t i = nang; i < x.size(); ++i) x[i] = ph(rng);
    starts.push_back(std::move(x));
  }

  SubspaceMinResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (const auto& x0 : starts) {
    const double f0 = obj.f(x0.data());
    if (f0 < best.value) {
      best.value = f0;
      best.coefficients = coeff;
    }
    const LocalResult r = nelder_mead(obj, x0, options);
    ++best.restarts_used;
    best.converged = best.converged || r.converged;
    if (r.fx < best.value) {
      best.value = r.fx;
      std::vector<cplx> a(m);
      combine(r.x.data(), a);
      best.coefficients = a;
    }
    if (best.value <= options.value_floor) break;
  }
  return best;
}

MinimizerOptions superposition_defaults(std::uint64_t seed) {
  MinimizerOptions o;
  o.random_starts = 6;
  o.max_evals = 20000;
  o.size_tol = 1e-10;
  o.seed = seed;
  return o;
}

double thermal_invariant(const Hamiltonian16& h, const ThermalSpec& spec,
                         const MinimizerOptions& options) {
  return thermal_invariant(eig_hermitian(h), spec, options);
}

double thermal_invariant(const SpectralDecomposition& dec, const ThermalSpec& ts,
                         const MinimizerOptions& options) {
  if (!(ts.beta >= 0.0) || !std::isfinite(ts.beta)) throw BadRange("beta must be finite and >= 0");
  const double e0 = dec.levels.front().energy;
  std::vector<double> w;
  double Z = 0.0;
  for (const Level& lv : dec.levels) {
    w.push_back(std::exp(-ts.beta * (lv.energy - e0)));
    Z += lv.multiplicity * w.back();
  }

  switch (ts.mode) {
    case ThermalMode::WeightedSum: {
      double acc = 0.0;
      for (std::size_t l = 0; l < dec.levels.size(); ++l) {
        for (const PureState4& v : dec.levels[l].basis) {
          acc += w[l] * invariant_magnitude(invariants_of(v), ts.which);
        }
      }
      return acc / Z;
    }
    case ThermalMode::DegenerateMin: {
      double acc = 0.0;
      for (std::size_t l = 0; l < dec.levels.size(); ++l) {
        const Level& lv = dec.levels[l];
        MinimizerOptions o = options;
        o.seed = options.seed + l;
        acc += lv.multiplicity * w[l] * minimize_over_subspace(lv.basis, ts.which, o).value;
      }
      return acc / Z;
    }
    case ThermalMode::Superposition: break;
  }

  // Parameter layout per level: m-1 angles then phases; the first level
  // carries m-1 phases (global phase fixed), the others m.
  struct Block {
    std::size_t offset, m, nphases;
  };
  std::vector<Block> blocks;
  std::size_t n = 0;
  for (std::size_t l = 0; l < dec.levels.size(); ++l) {
    const std::size_t m = dec.levels[l].basis.size();
    const std::size_t nph = l == 0 ? m - 1 : m;
    blocks.push_back({n, m, nph});
    n += (m - 1) + nph;
  }
  std::vector<cplx> a(16);
  auto psi = [&](const double* p) {
    Amplitudes4 v{};
    for (std::size_t l = 0; l < blocks.size(); ++l) {
      const Block& b = blocks[l];
      unit_vector(p + b.offset, p + b.offset + (b.m - 1), b.m, b.nphases, a.data());
      const double c = w[l] / Z;
      for (std::size_t j = 0; j < b.m; ++j) {
        for (std::size_t r = 0; r < 16; ++r) v[r] += c * a[j] * dec.levels[l].basis[j][r];
      }
    }
    return v;
  };
  Objective obj;
  obj.f = [&](const double* p) {
    return invariant_magnitude(invariants_of_amplitudes(psi(p)), ts.which);
  };
  if (n == 0) {
    return obj.f(nullptr);
  }
  Rng rng(options.seed);
  std::uniform_real_distribution<double> u(0.0, 2 * pi);
  double best = obj.f(std::vector<double>(n, 0.0).data());
  for (int s = 0; s < options.random_starts; ++s) {
    std::vector<double> x(n);
    for (double& xi : x) xi = u(rng);
    // restart from the best point until a restart stops improving
    double prev = std::numeric_limits<double>::infinity();
    for (int rep = 0; rep < 4; ++rep) {
      const LocalResult r = nelder_mead(obj, x, options);
      x = r.x;
      best = std::min(best, r.fx);
      if (!(r.fx < prev * (1.0 - 1e-9))) break;
      prev = r.fx;
    }
  }
  return best;
}

}  // namespace hdet
