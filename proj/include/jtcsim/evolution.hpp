// Copyright 2026 The jtcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// evolution.hpp: spectral propagators for the excitation blocks and the two
// stabilizer-output scenarios evolved under the full coupled Hamiltonian.

#pragma once

#include "jtcsim/linalg.hpp"
#include "jtcsim/model.hpp"

#include <array>
#include <string>
#include <string_view>
#include <stdexcept>
#include <vector>

namespace jtcsim {

using Level1Amplitudes = Eigen::Matrix<cplx, 8, 1>;
using Level2Amplitudes = Eigen::Matrix<cplx, 32, 1>;

// Index 0 is |E0>; index k in 1..32 is f_k.
using IndexedAmplitudes = std::array<cplx, 33>;

// Amplitudes over {|E0>} + level 1 + level 2.
struct SystemState {
  cplx ground{0.0, 0.0};
  Level1Amplitudes level1 = Level1Amplitudes::Zero();
  Level2Amplitudes level2 = Level2Amplitudes::Zero();

  double norm_squared() const {
    return std::norm(ground) + level1.squaredNorm() + level2.squaredNorm();
  }

  static SystemState from_indexed(const IndexedAmplitudes& mu) {
    SystemState s;
    s.ground = mu[0];
    for (int k = 0; k < 32; ++k) s.level2(k) = mu[static_cast<std::size_t>(k + 1)];
    return s;
  }

  // Level-1 amplitudes are dropped; callers use this only for scenario states.
  IndexedAmplitudes indexed() const {
    IndexedAmplitudes mu{};
    mu[0] = ground;
    for (int k = 0; k < 32; ++k) mu[static_cast<std::size_t>(k + 1)] = level2(k);
    return mu;
  }

  // Visits every basis label with its amplitude (mutable on non-const states).
  template <typename Fn>
  void for_each(Fn&& fn) { visit(*this, fn); }
  template <typename Fn>
  void for_each(Fn&& fn) const { visit(*this, fn); }

 private:
  template <typename Self, typename Fn>
  static void visit(Self& self, Fn& fn) {
    static const ExcitationBasis b0 = excitation_basis(0);
    static const ExcitationBasis b1 = excitation_basis(1);
    static const ExcitationBasis b2 = excitation_basis(2);
    fn(b0[0], self.ground);
    for (int k = 0; k < 8; ++k) fn(b1[static_cast<std::size_t>(k)], self.level1(k));
    for (int k = 0; k < 32; ++k) fn(b2[static_cast<std::size_t>(k)], self.level2(k));
  }
};

// out_k = sum_eta exp(-i E_eta t) V(k, eta) sum_j V(j, eta) in_j
inline ComplexVector propagate(int level, const SpectralDecomposition& decomp,
                               const ComplexVector& in, double t) {
  const Eigen::Index expected = level == 1 ? 8 : level == 2 ? 32 : -1;
  if (expected < 0) throw std::invalid_argument("propagate: level must be 1 or 2");
  if (decomp.dimension() != expected || in.size() != expected) {
    throw std::invalid_argument("propagate: dimension mismatch for level " + std::to_string(level));
  }
  if (t == 0.0) return in;
  const Eigen::MatrixXd& v = decomp.eigenvectors;
  ComplexVector weights = v.transpose().cast<cplx>() * in;
  for (Eigen::Index eta = 0; eta < weights.size(); ++eta) {
    weights(eta) *= std::exp(-kI * (decomp.eigenvalues(eta) * t));
  }
  return v.cast<cplx>() * weights;
}

// Decompositions of both excitation blocks for one parameter set.
class SubspacePropagator {
 public:
  explicit SubspacePropagator(const SystemParams& p)
      : params_(p),
        e0_(jtcsim::ground_energy(p)),
        level1_(jacobi_eigendecompose(build_h1(p))),
        level2_(jacobi_eigendecompose(build_h2(p))) {}

  const SystemParams& params() const noexcept { return params_; }
  double ground_energy() const noexcept { return e0_; }
  const SpectralDecomposition& level1() const noexcept { return level1_; }
  const SpectralDecomposition& level2() const noexcept { return level2_; }

  SystemState evolve(const SystemState& in, double t) const {
    SystemState out;
    out.ground = std::exp(-kI * (e0_ * t)) * in.ground;
    out.level1 = propagate(1, level1_, in.level1, t);
    out.level2 = propagate(2, level2_, in.level2, t);
    return out;
  }

 private:
  SystemParams params_;
  double e0_;
  SpectralDecomposition level1_;
  SpectralDecomposition level2_;
};

// beta_0 = (sqrt2/2) exp(-i E0 t); beta_k = (sqrt2/2) sum_eta exp(-i E_eta t) b_{eta,27} b_{eta,k}
inline IndexedAmplitudes beta(const SpectralDecomposition& level2, double e0, double t) {
  if (level2.dimension() != 32) throw std::invalid_argument("beta: expected the 32-dim block");
  IndexedAmplitudes out{};
  out[0] = kInvSqrt2 * std::exp(-kI * (e0 * t));
  constexpr int f27 = 26;
  if (t == 0.0) {
    out[f27 + 1] = kInvSqrt2;
    return out;
  }
  for (Eigen::Index eta = 0; eta < 32; ++eta) {
    const cplx w = kInvSqrt2 * std::exp(-kI * (level2.eigenvalues(eta) * t)) *
                   level2.eigenvectors(f27, eta);
    for (int k = 0; k < 32; ++k) out[static_cast<std::size_t>(k + 1)] += w * level2.eigenvectors(k, eta);
  }
  return out;
}

// gamma_k = (sqrt2/2) sum_eta exp(-i E_eta t) (b_{eta,29} + b_{eta,31}) b_{eta,k}; gamma_0 = 0
inline IndexedAmplitudes gamma(const SpectralDecomposition& level2, double t) {
  if (level2.dimension() != 32) throw std::invalid_argument("gamma: expected the 32-dim block");
  IndexedAmplitudes out{};
  constexpr int f29 = 28;
  constexpr int f31 = 30;
  if (t == 0.0) {
    out[f29 + 1] = kInvSqrt2;
    out[f31 + 1] = kInvSqrt2;
    return out;
  }
  for (Eigen::Index eta = 0; eta < 32; ++eta) {
    const cplx w = kInvSqrt2 * std::exp(-kI * (level2.eigenvalues(eta) * t)) *
                   (level2.eigenvectors(f29, eta) + level2.eigenvectors(f31, eta));
    for (int k = 0; k < 32; ++k) out[static_cast<std::size_t>(k + 1)] += w * level2.eigenvectors(k, eta);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scenarios: ideal stabilizer output for a stable Bell input, with empty resonators.

enum class Scenario { phi_plus, psi_plus };

inline std::string_view to_string(Scenario s) { return s == Scenario::phi_plus ? "phi+" : "psi+"; }

inline Scenario parse_scenario(std::string_view s) {
  if (s == "phi+" || s == "phi_plus" || s == "PhiPlus") return Scenario::phi_plus;
  if (s == "psi+" || s == "psi_plus" || s == "PsiPlus") return Scenario::psi_plus;
  throw std::invalid_argument("unknown scenario '" + std::string(s) + "'");
}

// phi+: (|E0> + |f27>)/sqrt2.  psi+: (|f29> + |f31>)/sqrt2.
inline SystemState initial_state(Scenario s) {
  SystemState st;
  if (s == Scenario::phi_plus) {
    st.ground = kInvSqrt2;
    st.level2(26) = kInvSqrt2;
  } else {
    st.level2(28) = kInvSqrt2;
    st.level2(30) = kInvSqrt2;
  }
  return st;
}

// mu_k(t): beta for phi+, gamma for psi+.
inline IndexedAmplitudes scenario_amplitudes(Scenario s, const SubspacePropagator& prop, double t) {
  return s == Scenario::phi_plus ? beta(prop.level2(), prop.ground_energy(), t)
                                 : gamma(prop.level2(), t);
}

inline SystemState evolve_scenario(Scenario s, const SubspacePropagator& prop, double t) {
  return SystemState::from_indexed(scenario_amplitudes(s, prop, t));
}

// ---------------------------------------------------------------------------
// Time grids

struct TimeGrid {
  double start = 0.0;
  double end = 50.0;
  int steps = 2000;  // number of intervals; the grid has steps + 1 points

  void validate() const {
    if (!(start >= 0.0) || !(end > start)) throw std::invalid_argument("time grid: need 0 <= t_start < t_end");
    if (steps < 2) throw std::invalid_argument("time grid: need steps >= 2");
  }

  std::vector<double> points() const {
    validate();
    std::vector<double> t(static_cast<std::size_t>(steps) + 1);
    const double dt = (end - start) / steps;
    for (int i = 0; i <= steps; ++i) t[static_cast<std::size_t>(i)] = i == steps ? end : start + i * dt;
    return t;
  }
};

struct AmplitudeSeries {
  std::vector<double> times;
  std::vector<IndexedAmplitudes> amplitudes;
};

inline AmplitudeSeries amplitude_series(Scenario s, const SubspacePropagator& prop, const TimeGrid& grid) {
  AmplitudeSeries out;
  out.times = grid.points();
  out.amplitudes.reserve(out.times.size());
  for (double t : out.times) out.amplitudes.push_back(scenario_amplitudes(s, prop, t));
  return out;
}

}  // namespace jtcsim
