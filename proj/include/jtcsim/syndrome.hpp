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

// syndrome.hpp: ancilla projective measurement on evolved system states.

#pragma once

#include "jtcsim/evolution.hpp"
#include "jtcsim/model.hpp"
#include "jtcsim/stabilizer.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace jtcsim {

// Level-2 index sets (1-based f indices) grouped by ancilla outcome.
struct SyndromeIndexSets {
  std::array<std::vector<int>, 4> by_syndrome;  // (pp, mp, pm, mm) order
  std::vector<int> s_bar;                       // S(1,1) members with one photon and one excited data qubit

  const std::vector<int>& operator[](Syndrome s) const { return by_syndrome[s.slot()]; }

  // S(1,1) together with index 0 (|E0>).
  std::vector<int> no_error_with_ground() const {
    std::vector<int> out{0};
    const auto& pp = by_syndrome[kSyndromePP.slot()];
    out.insert(out.end(), pp.begin(), pp.end());
    return out;
  }

  friend bool operator==(const SyndromeIndexSets&, const SyndromeIndexSets&) = default;
};

inline SyndromeIndexSets literal_index_sets() {
  SyndromeIndexSets s;
  s.by_syndrome[kSyndromePP.slot()] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 16, 19, 20, 23, 24, 27};
  s.by_syndrome[kSyndromeMP.slot()] = {13, 17, 21, 25, 28, 30};
  s.by_syndrome[kSyndromePM.slot()] = {14, 18, 22, 26, 29, 31};
  s.by_syndrome[kSyndromeMM.slot()] = {32};
  s.s_bar = {11, 12, 15, 16, 19, 20, 23, 24};
  return s;
}

class BasisOrderError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Computes the sets from each label's ancilla bits and insists they equal the
// literal sets; a mismatch means the basis ordering has been corrupted.
inline SyndromeIndexSets derive_index_sets(const ExcitationBasis& basis) {
  if (basis.level != 2 || basis.size() != 32) {
    throw BasisOrderError("derive_index_sets: expected the 32-label level-2 basis");
  }
  SyndromeIndexSets s;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const BasisLabel& l = basis[k];
    const int f = static_cast<int>(k) + 1;
    s.by_syndrome[static_cast<std::size_t>(l.qa + 2 * l.qb)].push_back(f);
    const int photons = l.photons[0] + l.photons[1] + l.photons[2] + l.photons[3];
    if (photons == 1 && l.qa == 0 && l.qb == 0 && (l.q1 + l.q2) == 1) s.s_bar.push_back(f);
  }
  if (!(s == literal_index_sets())) {
    throw BasisOrderError("derive_index_sets: basis ordering does not reproduce the syndrome index sets");
  }
  return s;
}

inline double probability_floor() { return 1e-300; }

struct MeasurementResult {
  double probability = 0.0;
  std::optional<SystemState> post;  // empty when the probability is below the floor
};

// Projects onto the ancilla outcome and renormalizes. The projected phase is kept.
inline MeasurementResult measure(const SystemState& state, Syndrome s) {
  SystemState projected = state;
  double p = 0.0;
  projected.for_each([&](const BasisLabel& l, cplx& amp) {
    if (l.qa == s.ancilla_a_bit() && l.qb == s.ancilla_b_bit()) {
      p += std::norm(amp);
    } else {
      amp = 0.0;
    }
  });
  MeasurementResult r;
  r.probability = p;
  if (p >= probability_floor()) {
    const double inv = 1.0 / std::sqrt(p);
    projected.for_each([inv](const BasisLabel&, cplx& amp) { amp *= inv; });
    r.post = projected;
  }
  return r;
}

// Data qubits and resonators after the ancillas have been factored out:
// sum_k amp_k |q_k> |R_k>.
struct DataResonatorState {
  struct Component {
    ResonatorLabel resonators{};
    int data = 0;  // index into {|00>, |01>, |10>, |11>}
    cplx amplitude{0.0, 0.0};
  };
  std::vector<Component> components;

  double norm_squared() const {
    double n = 0.0;
    for (const auto& c : components) n += std::norm(c.amplitude);
    return n;
  }
};

// Requires every nonzero amplitude to carry the syndrome's ancilla bits.
inline DataResonatorState strip_ancillas(const SystemState& post, Syndrome s) {
  DataResonatorState out;
  post.for_each([&](const BasisLabel& l, const cplx& amp) {
    if (amp == cplx{0.0, 0.0}) return;
    if (l.qa != s.ancilla_a_bit() || l.qb != s.ancilla_b_bit()) {
      throw std::invalid_argument("strip_ancillas: state is not an eigenstate of the ancilla projector");
    }
    out.components.push_back({l.photons, l.data_index(), amp});
  });
  return out;
}

// ---------------------------------------------------------------------------
// Scenario bookkeeping

inline BellLabel target_bell(Scenario s) {
  return s == Scenario::phi_plus ? BellLabel::phi_plus : BellLabel::psi_plus;
}

inline Syndrome no_error_syndrome(Scenario s) {
  return s == Scenario::phi_plus ? kSyndromePP : kSyndromePM;
}

struct SyndromeRow {
  double t = 0.0;
  std::array<double, 4> probability{};  // (pp, mp, pm, mm)
};

inline std::array<double, 4> syndrome_probabilities(const SystemState& state) {
  std::array<double, 4> p{};
  for (Syndrome s : kSyndromes) p[s.slot()] = measure(state, s).probability;
  return p;
}

inline std::vector<SyndromeRow> sweep(Scenario scenario, const SubspacePropagator& prop, const TimeGrid& grid) {
  std::vector<SyndromeRow> rows;
  for (double t : grid.points()) {
    rows.push_back({t, syndrome_probabilities(evolve_scenario(scenario, prop, t))});
  }
  return rows;
}

}  // namespace jtcsim
