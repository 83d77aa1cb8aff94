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

// density.hpp: reduced data-qubit density matrices, fidelities, and the
// operator-sum form of "evolve, measure ancillas, trace resonators".

#pragma once

#include "jtcsim/evolution.hpp"
#include "jtcsim/linalg.hpp"
#include "jtcsim/stabilizer.hpp"
#include "jtcsim/syndrome.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace jtcsim {

// 4x4 density matrix of the two data qubits in the {|00>, |01>, |10>, |11>} basis.
struct QubitDensityMatrix {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  // Optional decomposition rho = sum_k v_k v_k^dagger (one term per resonator label).
  std::vector<TwoQubitVector> ensemble;

  struct Hygiene {
    double hermiticity = 0.0;     // max |rho - rho^dagger|
    double trace_error = 0.0;     // |tr rho - 1|
    double min_eigenvalue = 0.0;
  };

  Hygiene hygiene() const {
    Hygiene h;
    h.hermiticity = max_abs(rho - rho.adjoint());
    h.trace_error = std::abs(rho.trace() - cplx{1.0, 0.0});
    h.min_eigenvalue = hermitian_eigenvalues(rho).minCoeff();
    return h;
  }

  // Hermitian to 1e-12, unit trace to 1e-12, eigenvalues above -1e-10.
  bool is_valid() const {
    const Hygiene h = hygiene();
    return h.hermiticity <= 1e-12 && h.trace_error <= 1e-12 && h.min_eigenvalue >= -1e-10;
  }

  double purity() const { return (rho * rho).trace().real(); }

  double largest_eigenvalue() const { return hermitian_eigenvalues(rho).maxCoeff(); }
};

// Partial trace over resonators: rho_q = sum_R v_R v_R^dagger, v_R = sum_{k in R} amp_k |q_k>.
inline QubitDensityMatrix reduce(const DataResonatorState& state) {
  if (std::abs(state.norm_squared() - 1.0) > 1e-10) {
    throw std::invalid_argument("reduce: input state is not normalized");
  }
  std::map<ResonatorLabel, TwoQubitVector> groups;
  for (const auto& c : state.components) {
    auto [it, inserted] = groups.try_emplace(c.resonators, TwoQubitVector::Zero());
    it->second(c.data) += c.amplitude;
  }
  QubitDensityMatrix out;
  for (const auto& [r, v] : groups) {
    out.rho += v * v.adjoint();
    out.ensemble.push_back(v);
  }
  return out;
}

inline double fidelity_squared(const TwoQubitVector& target, const QubitDensityMatrix& rho) {
  if (std::abs(target.squaredNorm() - 1.0) > 1e-12) {
    throw std::invalid_argument("fidelity: target state is not normalized");
  }
  if (!rho.ensemble.empty()) {
    double f2 = 0.0;
    for (const auto& v : rho.ensemble) f2 += std::norm(target.dot(v));
    return f2;
  }
  return std::max(0.0, (target.adjoint() * rho.rho * target)(0, 0).real());
}

// F = sqrt(<psi| rho |psi>), negative round-off clamped to zero. With an
// ensemble the overlaps are summed directly, which keeps F accurate near 0.
inline double fidelity(const TwoQubitVector& target, const QubitDensityMatrix& rho) {
  return std::sqrt(fidelity_squared(target, rho));
}

// F(target, C rho C^dagger) = F(C^dagger target, rho) with C the listed correction.
inline double corrected_fidelity(Scenario scenario, Syndrome s, const QubitDensityMatrix& rho) {
  const BellLabel target = target_bell(scenario);
  const PauliCorrection c = correction_for(target, s);
  const TwoQubitVector pulled = bell_compose(pauli_on_bell(adjoint(c), BellCoefficients::pure(target)));
  return fidelity(pulled, rho);
}

// ---------------------------------------------------------------------------
// Operator-sum representation

// Ancilla bits of the scenario's initial state (ancilla B is excited for psi+).
inline std::array<int, 2> initial_ancilla_bits(Scenario s) {
  return s == Scenario::phi_plus ? std::array<int, 2>{0, 0} : std::array<int, 2>{0, 1};
}

// Operational elements A_r[q', q] = <r, q', a_k| U(t) |0000, q, a_m> for one syndrome.
// Input columns whose evolution would leave the N <= 2 sector are not modelled;
// `input_supported` marks the usable ones and apply() rejects states touching the rest.
struct KrausSet {
  Syndrome syndrome;
  std::vector<ResonatorLabel> resonators;
  std::vector<Eigen::Matrix4cd> elements;
  std::array<bool, 4> input_supported{};

  Eigen::Matrix4cd apply(const Eigen::Matrix4cd& rho) const {
    for (int q = 0; q < 4; ++q) {
      if (input_supported[static_cast<std::size_t>(q)]) continue;
      if (rho.row(q).cwiseAbs().maxCoeff() > 1e-14 || rho.col(q).cwiseAbs().maxCoeff() > 1e-14) {
        throw std::invalid_argument("KrausSet::apply: input has weight outside the supported subspace");
      }
    }
    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    for (const auto& a : elements) out += a * rho * a.adjoint();
    return out;
  }

  // Probability of this syndrome for the given input.
  double trace(const Eigen::Matrix4cd& rho) const { return apply(rho).trace().real(); }

  QubitDensityMatrix apply_normalized(const Eigen::Matrix4cd& rho) const {
    const Eigen::Matrix4cd m = apply(rho);
    const double tr = m.trace().real();
    if (tr < probability_floor()) throw std::domain_error("KrausSet: zero-probability branch");
    QubitDensityMatrix out;
    out.rho = m / tr;
    return out;
  }
};

inline KrausSet kraus_elements(const SubspacePropagator& prop, Scenario scenario, Syndrome s, double t) {
  const auto [am, bm] = initial_ancilla_bits(scenario);
  KrausSet k;
  k.syndrome = s;
  std::map<ResonatorLabel, Eigen::Matrix4cd> by_resonator;
  for (int q = 0; q < 4; ++q) {
    const BasisLabel in{{0, 0, 0, 0}, q >> 1, q & 1, am, bm};
    if (excitation_number(in) > 2) continue;
    k.input_supported[static_cast<std::size_t>(q)] = true;
    SystemState st;
    st.for_each([&](const BasisLabel& l, cplx& amp) {
      if (l == in) amp = 1.0;
    });
    const SystemState out = prop.evolve(st, t);
    out.for_each([&](const BasisLabel& l, const cplx& amp) {
      if (amp == cplx{0.0, 0.0} || l.qa != s.ancilla_a_bit() || l.qb != s.ancilla_b_bit()) return;
      auto [it, inserted] = by_resonator.try_emplace(l.photons, Eigen::Matrix4cd::Zero());
      it->second(l.data_index(), q) += amp;
    });
  }
  for (const auto& [r, a] : by_resonator) {
    k.resonators.push_back(r);
    k.elements.push_back(a);
  }
  const TwoQubitVector target = bell_state(target_bell(scenario));
  const Eigen::Matrix4cd rho0 = target * target.adjoint();
  if (k.trace(rho0) < probability_floor()) {
    throw std::domain_error("kraus_elements: syndrome " + s.tag() + " has zero probability");
  }
  return k;
}

}  // namespace jtcsim
