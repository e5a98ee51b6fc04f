#pragma once

// Periodic Ising chain in transverse and longitudinal fields,
//   H = -J Σ σᶻₙσᶻₙ₊₁ - h_z Σ σᶻₙ - h_x Σ σˣₙ,
// diagonalized exactly in momentum sectors of the cyclic shift T.
//
// Basis: bitstring s of length N, site 1 is the most significant bit, bit 0
// means spin up (σᶻ = +1). T moves site n+1 into site n, which is a left
// rotation of the bitstring.

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cartan/matrix.hpp"

namespace cartan::ising {

using State = std::uint32_t;

struct IsingParams {
  int n = 8;
  double J = 1.0;
  double hz = 0.0;
  double hx = 0.0;

  static constexpr int max_sites = 14;

  void validate() const {
    if (n < 2 || n > max_sites) throw std::domain_error("N must be in 2.." + std::to_string(max_sites));
    if (!(J > 0.0) || !std::isfinite(J)) throw std::domain_error("J must be positive");
    if (!(hz >= 0.0) || !std::isfinite(hz)) throw std::domain_error("h_z must be nonnegative");
    if (!(hx >= 0.0) || !std::isfinite(hx)) throw std::domain_error("h_x must be nonnegative");
  }
};

class Chain {
 public:
  explicit Chain(IsingParams p) : p_(p) {
    p_.validate();
    mask_ = (State{1} << p_.n) - 1;
  }

  const IsingParams& params() const { return p_; }
  int sites() const { return p_.n; }
  std::size_t dimension() const { return std::size_t{1} << p_.n; }

  State translate(State s) const { return ((s << 1) | (s >> (p_.n - 1))) & mask_; }

  /// Σ σᶻₙσᶻₙ₊₁ over the periodic bonds (an integer).
  int bond_sum(State s) const { return p_.n - 2 * std::popcount(s ^ translate(s)); }
  /// Σ σᶻₙ (an integer).
  int magnetization(State s) const { return p_.n - 2 * std::popcount(s); }

  /// Diagonal matrix element. Built from integer sums so that states in the
  /// same translation orbit get bit-identical values.
  double diagonal(State s) const { return -p_.J * bond_sum(s) - p_.hz * magnetization(s); }

  /// H v without storing H.
  template <class V>
  V apply(const V& v) const {
    if (v.size() != dimension()) throw std::invalid_argument("vector has wrong size");
    V out(v.size());
    for (State s = 0; s < dimension(); ++s) {
      out[s] += diagonal(s) * v[s];
      if (p_.hx != 0.0)
        for (int b = 0; b < p_.n; ++b) out[s ^ (State{1} << b)] += -p_.hx * v[s];
    }
    return out;
  }

  template <class V>
  V apply_translation(const V& v) const {
    V out(v.size());
    for (State s = 0; s < dimension(); ++s) out[translate(s)] = v[s];
    return out;
  }

  /// Dense H; refuses beyond 2^12 states.
  RealMatrix to_dense() const {
    if (p_.n > 12) throw std::domain_error("dense Hamiltonian limited to N <= 12");
    const std::size_t d = dimension();
    RealMatrix h(d, d);
    for (State s = 0; s < d; ++s) {
      h(s, s) = diagonal(s);
      if (p_.hx != 0.0)
        for (int b = 0; b < p_.n; ++b) h(s ^ (State{1} << b), s) += -p_.hx;
    }
    return h;
  }

  /// Permutation matrix of T: T e_s = e_{T(s)}.
  IntMatrix translation_matrix() const {
    if (p_.n > 12) throw std::domain_error("dense translation limited to N <= 12");
    IntMatrix t(dimension(), dimension());
    for (State s = 0; s < dimension(); ++s) t(translate(s), s) = 1;
    return t;
  }

 private:
  IsingParams p_;
  State mask_ = 0;
};

// ---------------------------------------------------------------------------
// Momentum sectors.

struct Orbits {
  std::vector<State> reps;        // smallest element of each orbit
  std::vector<int> size;          // orbit length d_a
  std::vector<int> index_of;      // state -> orbit index
  std::vector<int> shift_of;      // state -> l with T^l(rep) = state
};

inline Orbits translation_orbits(const Chain& c) {
  Orbits o;
  const std::size_t d = c.dimension();
  o.index_of.assign(d, -1);
  o.shift_of.assign(d, 0);
  for (State s = 0; s < d; ++s) {
    if (o.index_of[s] >= 0) continue;
    const int idx = static_cast<int>(o.reps.size());
    State t = s;
    int l = 0;
    do {
      o.index_of[t] = idx;
      o.shift_of[t] = l++;
      t = c.translate(t);
    } while (t != s);
    o.reps.push_back(s);
    o.size.push_back(l);
  }
  return o;
}

/// p = 2πk/N mapped into (-π, π].
inline double momentum(int k, int n) {
  int kk = ((k % n) + n) % n;
  if (2 * kk > n) kk -= n;
  return 2.0 * std::numbers::pi * kk / n;
}

struct MomentumLevel {
  int k = 0;
  double p = 0.0;
  double energy = 0.0;
  double epsilon = 0.0;  // energy - ground energy
  double residual_h = 0.0;
  double residual_t = 0.0;
};

struct MomentumSpectrum {
  IsingParams params;
  double ground_energy = 0.0;
  double ground_momentum = 0.0;
  std::vector<MomentumLevel> levels;  // sorted by (p, epsilon)
};

struct Sector {
  int k = 0;
  std::vector<int> orbits;  // orbit indices admitting momentum k
  Eigen::MatrixXcd h;
};

/// Block of H in the basis |r_a> = d_a^{-1/2} Σ_{l<d_a} e^{-ipl} T^l |rep_a>
/// over orbits with k·d_a ≡ 0 (mod N).
inline Sector sector_hamiltonian(const Chain& c, const Orbits& o, int k) {
  const int n = c.sites();
  const double p = 2.0 * std::numbers::pi * k / n;
  Sector sec;
  sec.k = k;
  std::vector<int> pos(o.reps.size(), -1);
  for (std::size_t a = 0; a < o.reps.size(); ++a)
    if ((static_cast<long>(k) * o.size[a]) % n == 0) {
      pos[a] = static_cast<int>(sec.orbits.size());
      sec.orbits.push_back(static_cast<int>(a));
    }
  const auto m = static_cast<Eigen::Index>(sec.orbits.size());
  sec.h = Eigen::MatrixXcd::Zero(m, m);
  const auto& prm = c.params();
  for (Eigen::Index col = 0; col < m; ++col) {
    const int b = sec.orbits[col];
    const State sb = o.reps[b];
    sec.h(col, col) += c.diagonal(sb);
    if (prm.hx == 0.0) continue;
    for (int bit = 0; bit < n; ++bit) {
      const State t = sb ^ (State{1} << bit);
      const int a = o.index_of[t];
      if (pos[a] < 0) continue;
      const double ratio = std::sqrt(static_cast<double>(o.size[b]) / o.size[a]);
      sec.h(pos[a], col) += -prm.hx * std::polar(ratio, p * o.shift_of[t]);
    }
  }
  return sec;
}

/// Full momentum-resolved spectrum. With `residuals`, every eigenvector is
/// rebuilt in the 2^N space and checked against H and T.
inline MomentumSpectrum momentum_spectrum(const IsingParams& params, bool residuals = false) {
  const Chain c(params);
  const Orbits o = translation_orbits(c);
  const int n = c.sites();
  MomentumSpectrum out;
  out.params = params;
  for (int k = 0; k < n; ++k) {
    const Sector sec = sector_hamiltonian(c, o, k);
    if (sec.orbits.empty()) continue;
    Eigen::VectorXd values;
    Eigen::MatrixXcd vectors;
    if (params.hx == 0.0) {
      // Sector matrices are diagonal; read them off exactly instead of
      // letting the solver rescale them.
      const Eigen::Index m = sec.h.rows();
      std::vector<Eigen::Index> order(m);
      std::iota(order.begin(), order.end(), Eigen::Index{0});
      std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return sec.h(x, x).real() < sec.h(y, y).real(); });
      values.resize(m);
      vectors = Eigen::MatrixXcd::Zero(m, m);
      for (Eigen::Index j = 0; j < m; ++j) {
        values(j) = sec.h(order[j], order[j]).real();
        vectors(order[j], j) = 1.0;
      }
    } else {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sec.h, residuals ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
      if (es.info() != Eigen::Success) throw std::runtime_error("sector diagonalization failed at k=" + std::to_string(k));
      values = es.eigenvalues();
      if (residuals) vectors = es.eigenvectors();
    }
    const double p = momentum(k, n);
    const double phase = 2.0 * std::numbers::pi * k / n;
    for (Eigen::Index j = 0; j < values.size(); ++j) {
      MomentumLevel lv{k, p, values(j), 0.0, 0.0, 0.0};
      if (residuals) {
        ComplexVector v(c.dimension());
        for (std::size_t r = 0; r < sec.orbits.size(); ++r) {
          const int a = sec.orbits[r];
          const Complex coef = vectors(static_cast<Eigen::Index>(r), j) / std::sqrt(double(o.size[a]));
          State s = o.reps[a];
          for (int l = 0; l < o.size[a]; ++l, s = c.translate(s)) v[s] += coef * std::polar(1.0, -phase * l);
        }
        const ComplexVector hv = c.apply(v);
        const ComplexVector tv = c.apply_translation(v);
        const Complex eip = std::polar(1.0, phase);
        for (std::size_t s = 0; s < v.size(); ++s) {
          lv.residual_h = std::max(lv.residual_h, std::abs(hv[s] - lv.energy * v[s]));
          lv.residual_t = std::max(lv.residual_t, std::abs(tv[s] - eip * v[s]));
        }
      }
      out.levels.push_back(lv);
    }
  }
  const auto ground = std::min_element(out.levels.begin(), out.levels.end(),
                                       [](const auto& x, const auto& y) { return x.energy < y.energy; });
  out.ground_energy = ground->energy;
  out.ground_momentum = ground->p;
  for (auto& lv : out.levels) lv.epsilon = std::max(0.0, lv.energy - out.ground_energy);
  std::stable_sort(out.levels.begin(), out.levels.end(), [](const auto& x, const auto& y) {
    return x.p != y.p ? x.p < y.p : x.epsilon < y.epsilon;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Dispersion.

/// ε(p) of a single fermion on the h_z = 0 line; the gap closes at h_x = J.
inline double free_fermion_energy(double J, double hx, double p) {
  return 2.0 * std::sqrt(J * J + hx * hx - 2.0 * J * hx * std::cos(p));
}

inline double critical_field(double J) { return J; }

/// Lattice momentum proxy (2 sin(p/2))², which equals p² for small p.
inline double lattice_p2(double p) {
  const double s = 2.0 * std::sin(p / 2.0);
  return s * s;
}

struct BandFit {
  int band = 0;  // 1-based
  double mass_sq = 0.0;
  double mass = 0.0;
  double stiffness = 0.0;  // c in ε² = m² + c·(2 sin(p/2))²
  double rms = 0.0;        // of ε² residuals
  std::vector<std::pair<double, double>> points;  // (p, ε)
};

/// Band b at momentum p is the b-th lowest excitation in that sector (the
/// ground state itself is skipped). Each band is fitted by linear least
/// squares in (m², c). Exploratory: no claim about continuum mass ratios.
inline std::vector<BandFit> dispersion_probe(const MomentumSpectrum& spec, int band_count) {
  if (band_count < 0) throw std::invalid_argument("band count must be nonnegative");
  std::vector<BandFit> fits;
  if (band_count == 0) return fits;
  std::vector<std::vector<std::pair<double, double>>> bands(band_count);
  bool ground_skipped = false;
  for (std::size_t i = 0; i < spec.levels.size();) {
    std::size_t j = i;
    int b = 0;
    for (; j < spec.levels.size() && spec.levels[j].p == spec.levels[i].p; ++j) {
      const auto& lv = spec.levels[j];
      if (!ground_skipped && lv.energy == spec.ground_energy) {
        ground_skipped = true;
        continue;
      }
      if (b < band_count) bands[b++].emplace_back(lv.p, lv.epsilon);
    }
    i = j;
  }
  for (int b = 0; b < band_count; ++b) {
    const auto& pts = bands[b];
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [p, e] : pts) {
      const double x = lattice_p2(p), y = e * e;
      sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    const double m = static_cast<double>(pts.size());
    const double det = m * sxx - sx * sx;
    if (pts.size() < 2 || std::abs(det) < 1e-12 * std::max(1.0, m * sxx))
      throw std::domain_error("band " + std::to_string(b + 1) + " has too few distinct momenta to fit");
    BandFit f;
    f.band = b + 1;
    f.stiffness = (m * sxy - sx * sy) / det;
    f.mass_sq = (sy - f.stiffness * sx) / m;
    f.mass = std::sqrt(std::max(0.0, f.mass_sq));
    double ss = 0;
    for (auto [p, e] : pts) {
      const double r = e * e - (f.mass_sq + f.stiffness * lattice_p2(p));
      ss += r * r;
    }
    f.rms = std::sqrt(ss / m);
    f.points = pts;
    fits.push_back(std::move(f));
  }
  return fits;
}

}  // namespace cartan::ising
