#include "hdet/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "hdet/errors.hpp"

namespace hdet {

namespace {

using EMat = Eigen::Matrix<cplx, 16, 16>;

constexpr double kHermitianTolerance = 1e-12;

}  // namespace

Hamiltonian16::Hamiltonian16(const Matrix16& entries, std::string label)
    : entries_(entries), label_(std::move(label)) {
  for (std::size_t r = 0; r < 16; ++r) {
    for (std::size_t c = r; c < 16; ++c) {
      if (std::abs(entries_[16 * r + c] - std::conj(entries_[16 * c + r])) >
          kHermitianTolerance) {
        throw NotHermitian("matrix is not Hermitian at (" + std::to_string(r) + "," +
                           std::to_string(c) + ")");
      }
    }
  }
}

double Hamiltonian16::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double Hamiltonian16::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < 16; ++i) t += entries_[17 * i].real();
  return t;
}

Amplitudes4 Hamiltonian16::apply(const Amplitudes4& v) const {
  Amplitudes4 out{};
  for (std::size_t r = 0; r < 16; ++r) {
    cplx s = 0.0;
    for (std::size_t c = 0; c < 16; ++c) s += entries_[16 * r + c] * v[c];
    out[r] = s;
  }
  return out;
}

cplx inner(const Amplitudes4& a, const Amplitudes4& b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < 16; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

std::vector<std::pair<double, PureState4>> SpectralDecomposition::flattened() const {
  std::vector<std::pair<double, PureState4>> out;
  for (const Level& lv : levels) {
    for (const PureState4& v : lv.basis) out.emplace_back(lv.energy, v);
  }
  return out;
}

double default_degeneracy_tol(const Hamiltonian16& h) {
  return 1e-8 * std::max(1.0, h.frobenius_norm());
}

SpectralDecomposition eig_hermitian(const Hamiltonian16& h, std::optional<double> degeneracy_tol) {
  const double tol = degeneracy_tol.value_or(default_degeneracy_tol(h));
  EMat m;
  for (int r = 0; r < 16; ++r) {
    for (int c = 0; c < 16; ++c) m(r, c) = h(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  }
  Eigen::SelfAdjointEigenSolver<EMat> solver(m);
  const auto& w = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();

  SpectralDecomposition out;
  int i = 0;
  while (i < 16) {
    int j = i + 1;
    while (j < 16 && w(j) - w(j - 1) <= tol) ++j;
    Level lv;
    lv.multiplicity = j - i;
    double esum = 0.0;
    std::vector<Amplitudes4> basis;
    for (int k = i; k < j; ++k) {
      esum += w(k);
      Amplitudes4 v;
      for (int r = 0; r < 16; ++r) v[static_cast<std::size_t>(r)] = vecs(r, k);
      for (const Amplitudes4& u : basis) {
        const cplx p = inner(u, v);
        for (std::size_t r = 0; r < 16; ++r) v[r] -= p * u[r];
      }
      const double n = norm(v);
      for (cplx& z : v) z /= n;
      basis.push_back(v);
    }
    lv.energy = esum / lv.multiplicity;
    for (const Amplitudes4& v : basis) lv.basis.emplace_back(v);
    out.levels.push_back(std::move(lv));
    i = j;
  }
  return out;
}

GroundState ground_state(const Hamiltonian16& h) {
  SpectralDecomposition spec = eig_hermitian(h);
  const Level& g = spec.levels.front();
  return {g.energy, g.basis.front(), g.multiplicity};
}

TrackedState track_by_overlap(const SpectralDecomposition& spec, const PureState4& previous) {
  TrackedState best;
  best.overlap = -1.0;
  for (std::size_t l = 0; l < spec.levels.size(); ++l) {
    const Level& lv = spec.levels[l];
    Amplitudes4 proj{};
    for (const PureState4& v : lv.basis) {
      const cplx c = inner(v.amps(), previous.amps());
      for (std::size_t r = 0; r < 16; ++r) proj[r] += c * v[r];
    }
    const double ov = norm(proj);
    if (ov > best.overlap) {
      best.overlap = ov;
      best.level = l;
      best.energy = lv.energy;
      best.state = ov > 0.0 ? PureState4(proj) : lv.basis.front();
    }
  }
  return best;
}

}  // namespace hdet
