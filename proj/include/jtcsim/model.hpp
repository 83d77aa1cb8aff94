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

// model.hpp: device parameters, excitation-number bases, and the Hamiltonian
// blocks of the two-data-qubit / two-ancilla / four-resonator device.
//
// Topology (resonator k couples to the listed qubits):
//   r1: data 1, ancilla a     r2: data 2, ancilla a
//   r3: data 1, ancilla b     r4: data 2, ancilla b
//
// Units: hbar = 1, time in ns, angular frequencies in rad/ns.

#pragma once

#include "jtcsim/linalg.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jtcsim {

enum class FrequencyConvention {
  angular,  // omega = value, g = value
  cyclic,   // omega = 2 pi value, g = 2 pi value
  mixed,    // omega = 2 pi value, g = value
};

inline std::string_view to_string(FrequencyConvention c) {
  switch (c) {
    case FrequencyConvention::angular: return "angular";
    case FrequencyConvention::cyclic: return "cyclic";
    case FrequencyConvention::mixed: return "mixed";
  }
  return "?";
}

inline FrequencyConvention parse_convention(std::string_view s) {
  if (s == "cyclic") return FrequencyConvention::cyclic;
  if (s == "angular") return FrequencyConvention::angular;
  if (s == "mixed") return FrequencyConvention::mixed;
  throw std::invalid_argument("unknown frequency convention '" + std::string(s) + "'");
}

struct Couplings {
  double g11 = 0.0;  // r1 - data 1
  double g1a = 0.0;  // r1 - ancilla a
  double g2a = 0.0;  // r2 - ancilla a
  double g22 = 0.0;  // r2 - data 2
  double g42 = 0.0;  // r4 - data 2
  double g4b = 0.0;  // r4 - ancilla b
  double g3b = 0.0;  // r3 - ancilla b
  double g31 = 0.0;  // r3 - data 1

  Couplings scaled(double factor) const {
    return {g11 * factor, g1a * factor, g2a * factor, g22 * factor,
            g42 * factor, g4b * factor, g3b * factor, g31 * factor};
  }
};

// Raw device values as quoted in GHz, before the unit convention is applied.
struct FrequenciesGHz {
  std::array<double, 4> resonator{};
  double data1 = 0.0;
  double data2 = 0.0;
  double ancilla_a = 0.0;
  double ancilla_b = 0.0;
  Couplings g;
};

// Reference device: resonators near 8.1 GHz, qubits 5.7-6.6 GHz, couplings ~0.5 GHz.
inline FrequenciesGHz reference_frequencies_ghz() {
  FrequenciesGHz f;
  f.resonator = {8.14, 8.18, 8.1, 8.06};
  f.data1 = 6.6;
  f.data2 = 6.4;
  f.ancilla_a = 5.9;
  f.ancilla_b = 5.7;
  f.g = {.g11 = 0.51, .g1a = 0.53, .g2a = 0.54, .g22 = 0.52,
         .g42 = 0.5, .g4b = 0.49, .g3b = 0.48, .g31 = 0.47};
  return f;
}

struct SystemParams {
  std::array<double, 4> resonator{};  // omega_1..omega_4
  double data1 = 0.0;                 // omega'_1
  double data2 = 0.0;                 // omega'_2
  double ancilla_a = 0.0;
  double ancilla_b = 0.0;
  Couplings g;
  FrequencyConvention convention = FrequencyConvention::cyclic;

  void validate() const {
    auto check = [](double v, const char* what, bool positive) {
      if (!std::isfinite(v)) throw std::invalid_argument(std::string("non-finite ") + what);
      if (positive && !(v > 0.0)) throw std::invalid_argument(std::string("non-positive ") + what);
    };
    for (double w : resonator) check(w, "resonator frequency", true);
    check(data1, "data qubit frequency", true);
    check(data2, "data qubit frequency", true);
    check(ancilla_a, "ancilla frequency", true);
    check(ancilla_b, "ancilla frequency", true);
    for (double c : {g.g11, g.g1a, g.g2a, g.g22, g.g42, g.g4b, g.g3b, g.g31}) {
      check(c, "coupling", false);
    }
  }

  SystemParams with_couplings(const Couplings& c) const {
    SystemParams p = *this;
    p.g = c;
    return p;
  }

  double omega_plus() const noexcept { return data1 + data2; }
  double omega_minus() const noexcept { return data1 - data2; }
};

inline SystemParams from_frequencies_ghz(const FrequenciesGHz& f, FrequencyConvention convention) {
  auto positive = [](double v) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw std::invalid_argument("from_frequencies_ghz: frequencies must be positive and finite");
    }
  };
  for (double v : f.resonator) positive(v);
  for (double v : {f.data1, f.data2, f.ancilla_a, f.ancilla_b}) positive(v);

  const double s = convention == FrequencyConvention::angular ? 1.0 : 2.0 * std::numbers::pi;
  const double sg = convention == FrequencyConvention::cyclic ? s : 1.0;
  SystemParams p;
  for (std::size_t k = 0; k < 4; ++k) p.resonator[k] = s * f.resonator[k];
  p.data1 = s * f.data1;
  p.data2 = s * f.data2;
  p.ancilla_a = s * f.ancilla_a;
  p.ancilla_b = s * f.ancilla_b;
  p.g = f.g.scaled(sg);
  p.convention = convention;
  p.validate();
  return p;
}

// ---------------------------------------------------------------------------
// Basis labels

using ResonatorLabel = std::array<int, 4>;

// Product state |r1 r2 r3 r4> (x) |q1 q2> (x) |qa qb>; bit 1 is the excited qubit state.
struct BasisLabel {
  ResonatorLabel photons{};
  int q1 = 0;
  int q2 = 0;
  int qa = 0;
  int qb = 0;

  // Data-qubit basis index in {|00>, |01>, |10>, |11>} ordering (q1 is the high bit).
  int data_index() const noexcept { return 2 * q1 + q2; }
  int ancilla_index() const noexcept { return 2 * qa + qb; }

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

inline int excitation_number(const BasisLabel& l) {
  return l.photons[0] + l.photons[1] + l.photons[2] + l.photons[3] + l.q1 + l.q2 + l.qa + l.qb;
}

struct ExcitationBasis {
  int level = 0;
  std::vector<BasisLabel> labels;

  std::size_t size() const noexcept { return labels.size(); }
  const BasisLabel& operator[](std::size_t i) const { return labels[i]; }
};

namespace detail {

inline BasisLabel label(ResonatorLabel r, int q1, int q2, int qa, int qb) {
  return BasisLabel{r, q1, q2, qa, qb};
}

}  // namespace detail

// Fixed orderings: level 1 is e1..e8, level 2 is f1..f32. Index sets and
// matrix entries elsewhere refer to these positions (1-based in the docs,
// 0-based in code).
inline ExcitationBasis excitation_basis(int level) {
  using detail::label;
  ExcitationBasis b;
  b.level = level;
  switch (level) {
    case 0:
      b.labels = {label({0, 0, 0, 0}, 0, 0, 0, 0)};
      break;
    case 1:
      b.labels = {
          label({1, 0, 0, 0}, 0, 0, 0, 0), label({0, 1, 0, 0}, 0, 0, 0, 0),
          label({0, 0, 1, 0}, 0, 0, 0, 0), label({0, 0, 0, 1}, 0, 0, 0, 0),
          label({0, 0, 0, 0}, 1, 0, 0, 0), label({0, 0, 0, 0}, 0, 1, 0, 0),
          label({0, 0, 0, 0}, 0, 0, 1, 0), label({0, 0, 0, 0}, 0, 0, 0, 1),
      };
      break;
    case 2: {
      b.labels = {
          label({2, 0, 0, 0}, 0, 0, 0, 0), label({1, 1, 0, 0}, 0, 0, 0, 0),
          label({1, 0, 1, 0}, 0, 0, 0, 0), label({1, 0, 0, 1}, 0, 0, 0, 0),
          label({0, 2, 0, 0}, 0, 0, 0, 0), label({0, 1, 1, 0}, 0, 0, 0, 0),
          label({0, 1, 0, 1}, 0, 0, 0, 0), label({0, 0, 2, 0}, 0, 0, 0, 0),
          label({0, 0, 1, 1}, 0, 0, 0, 0), label({0, 0, 0, 2}, 0, 0, 0, 0),
      };
      // f11..f26: one photon in resonator k, one excited qubit in order 1, 2, a, b.
      for (int k = 0; k < 4; ++k) {
        ResonatorLabel r{};
        r[static_cast<std::size_t>(k)] = 1;
        b.labels.push_back(label(r, 1, 0, 0, 0));
        b.labels.push_back(label(r, 0, 1, 0, 0));
        b.labels.push_back(label(r, 0, 0, 1, 0));
        b.labels.push_back(label(r, 0, 0, 0, 1));
      }
      const ResonatorLabel empty{};
      b.labels.push_back(label(empty, 1, 1, 0, 0));  // f27
      b.labels.push_back(label(empty, 1, 0, 1, 0));  // f28
      b.labels.push_back(label(empty, 1, 0, 0, 1));  // f29
      b.labels.push_back(label(empty, 0, 1, 1, 0));  // f30
      b.labels.push_back(label(empty, 0, 1, 0, 1));  // f31
      b.labels.push_back(label(empty, 0, 0, 1, 1));  // f32
      break;
    }
    default:
      throw std::invalid_argument("excitation_basis: only levels 0, 1, 2 are supported");
  }
  return b;
}

// ---------------------------------------------------------------------------
// Hamiltonian blocks

inline double ground_energy(const SystemParams& p) {
  return 0.5 * (p.resonator[0] + p.resonator[1] + p.resonator[2] + p.resonator[3] - p.data1 -
                p.data2 - p.ancilla_a - p.ancilla_b);
}

// Free (uncoupled) energy of a product label.
inline double label_energy(const SystemParams& p, const BasisLabel& l) {
  double e = ground_energy(p);
  for (std::size_t k = 0; k < 4; ++k) e += l.photons[k] * p.resonator[k];
  e += l.q1 * p.data1 + l.q2 * p.data2 + l.qa * p.ancilla_a + l.qb * p.ancilla_b;
  return e;
}

enum class CouplingId { g11, g1a, g2a, g22, g42, g4b, g3b, g31 };

inline double coupling(const Couplings& g, CouplingId id) {
  switch (id) {
    case CouplingId::g11: return g.g11;
    case CouplingId::g1a: return g.g1a;
    case CouplingId::g2a: return g.g2a;
    case CouplingId::g22: return g.g22;
    case CouplingId::g42: return g.g42;
    case CouplingId::g4b: return g.g4b;
    case CouplingId::g3b: return g.g3b;
    case CouplingId::g31: return g.g31;
  }
  return 0.0;
}

// Off-diagonal element H[row][col] (1-based, row < col) = factor * g.
struct CouplingEntry {
  int row;
  int col;
  CouplingId id;
  bool sqrt2;
};

inline const std::vector<CouplingEntry>& level1_couplings() {
  using enum CouplingId;
  static const std::vector<CouplingEntry> entries = {
      {1, 5, g11, false}, {1, 7, g1a, false}, {2, 6, g22, false}, {2, 7, g2a, false},
      {3, 5, g31, false}, {3, 8, g3b, false}, {4, 6, g42, false}, {4, 8, g4b, false},
  };
  return entries;
}

inline const std::vector<CouplingEntry>& level2_couplings() {
  using enum CouplingId;
  static const std::vector<CouplingEntry> entries = {
      {1, 11, g11, true},   {1, 13, g1a, true},
      {2, 12, g22, false},  {2, 13, g2a, false},  {2, 15, g11, false},  {2, 17, g1a, false},
      {3, 11, g31, false},  {3, 14, g3b, false},  {3, 19, g11, false},  {3, 21, g1a, false},
      {4, 12, g42, false},  {4, 14, g4b, false},  {4, 23, g11, false},  {4, 25, g1a, false},
      {5, 16, g22, true},   {5, 17, g2a, true},
      {6, 15, g31, false},  {6, 18, g3b, false},  {6, 20, g22, false},  {6, 21, g2a, false},
      {7, 16, g42, false},  {7, 18, g4b, false},  {7, 24, g22, false},  {7, 25, g2a, false},
      {8, 19, g31, true},   {8, 22, g3b, true},
      {9, 20, g42, false},  {9, 22, g4b, false},  {9, 23, g31, false},  {9, 26, g3b, false},
      {10, 24, g42, true},  {10, 26, g4b, true},  {11, 28, g1a, false},
      {12, 27, g11, false}, {12, 30, g1a, false}, {13, 28, g11, false},
      {14, 29, g11, false}, {14, 32, g1a, false}, {15, 27, g22, false}, {15, 28, g2a, false},
      {16, 30, g2a, false}, {17, 30, g22, false}, {18, 31, g22, false}, {18, 32, g2a, false},
      {19, 29, g3b, false}, {20, 27, g31, false}, {20, 31, g3b, false},
      {21, 28, g31, false}, {21, 32, g3b, false}, {22, 29, g31, false},
      {23, 27, g42, false}, {23, 29, g4b, false}, {24, 31, g4b, false},
      {25, 30, g42, false}, {25, 32, g4b, false}, {26, 31, g42, false},
  };
  return entries;
}

namespace detail {

inline RealSymmetricMatrix build_block(const SystemParams& p, const ExcitationBasis& basis,
                                       const std::vector<CouplingEntry>& entries) {
  p.validate();
  const auto n = static_cast<Eigen::Index>(basis.size());
  RealSymmetricMatrix h(n);
  for (Eigen::Index i = 0; i < n; ++i) h.set(i, i, label_energy(p, basis[static_cast<std::size_t>(i)]));
  const double root2 = std::sqrt(2.0);
  for (const CouplingEntry& e : entries) {
    const double g = coupling(p.g, e.id);
    h.set(e.row - 1, e.col - 1, e.sqrt2 ? root2 * g : g);
  }
  return h;
}

}  // namespace detail

inline RealSymmetricMatrix build_h1(const SystemParams& p) {
  return detail::build_block(p, excitation_basis(1), level1_couplings());
}

inline RealSymmetricMatrix build_h2(const SystemParams& p) {
  return detail::build_block(p, excitation_basis(2), level2_couplings());
}

}  // namespace jtcsim
