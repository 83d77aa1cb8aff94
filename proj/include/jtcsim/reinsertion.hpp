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

// reinsertion.hpp: second stabilizer round on a post-measurement state with
// fresh ancillas, and the matching squared fidelities.

#pragma once

#include "jtcsim/density.hpp"
#include "jtcsim/stabilizer.hpp"
#include "jtcsim/syndrome.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>

namespace jtcsim {

struct ReinsertionReport {
  double t = 0.0;
  Syndrome branch = kSyndromePP;
  double branch_probability = 0.0;
  std::array<double, 4> p_tilde{};    // (pp, mp, pm, mm)
  std::array<double, 4> f_squared{};  // F^2(Bell(s), rho_q), same order
  double residual = 0.0;

  double p_tilde_sum() const { return p_tilde[0] + p_tilde[1] + p_tilde[2] + p_tilde[3]; }
};

// The circuit acts on data qubits only; resonator factors with distinct labels
// are orthogonal, so the Born weights add per resonator label.
inline std::array<double, 4> reinsert(const DataResonatorState& post) {
  std::map<ResonatorLabel, TwoQubitVector> groups;
  for (const auto& c : post.components) {
    auto [it, inserted] = groups.try_emplace(c.resonators, TwoQubitVector::Zero());
    it->second(c.data) += c.amplitude;
  }
  std::array<double, 4> p{};
  for (const auto& [r, v] : groups) {
    const double w = v.squaredNorm();
    if (w == 0.0) continue;
    const auto born = syndrome_probabilities(ideal_circuit(bell_expand(v / std::sqrt(w))));
    for (std::size_t k = 0; k < 4; ++k) p[k] += w * born[k];
  }
  return p;
}

inline std::array<double, 4> bell_fidelities_squared(const QubitDensityMatrix& rho) {
  std::array<double, 4> f{};
  for (Syndrome s : kSyndromes) f[s.slot()] = fidelity_squared(bell_state(syndrome_bell(s)), rho);
  return f;
}

inline double verify_identity(const ReinsertionReport& r) {
  double res = 0.0;
  for (std::size_t k = 0; k < 4; ++k) res = std::max(res, std::abs(r.p_tilde[k] - r.f_squared[k]));
  return res;
}

// Full branch chain: measure, strip ancillas, reinsert and compare with F^2.
// Empty when the branch probability is below the floor.
inline std::optional<ReinsertionReport> reinsertion_report(const SystemState& state, Syndrome branch, double t) {
  const MeasurementResult m = measure(state, branch);
  if (!m.post) return std::nullopt;
  const DataResonatorState post = strip_ancillas(*m.post, branch);
  ReinsertionReport r;
  r.t = t;
  r.branch = branch;
  r.branch_probability = m.probability;
  r.p_tilde = reinsert(post);
  r.f_squared = bell_fidelities_squared(reduce(post));
  r.residual = verify_identity(r);
  return r;
}

}  // namespace jtcsim
