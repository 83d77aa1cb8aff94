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

// stabilizer.hpp: Bell-basis algebra and the ideal X/Z stabilizer circuit on
// two data qubits and two ancillas.
//
// Conventions
//   two-qubit vectors: basis {|00>, |01>, |10>, |11>} over (data 1, data 2)
//   four-qubit vectors: qubit order (ancilla A, data 1, data 2, ancilla B),
//     index = 8 a + 4 q1 + 2 q2 + b
//   syndrome value +1 <-> ancilla |0>, -1 <-> ancilla |1>

#pragma once

#include "jtcsim/linalg.hpp"

#include <array>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jtcsim {

using TwoQubitVector = Eigen::Vector4cd;
using FourQubitVector = Eigen::Matrix<cplx, 16, 1>;

enum class BellLabel { phi_plus, phi_minus, psi_plus, psi_minus };

inline std::string_view to_string(BellLabel b) {
  switch (b) {
    case BellLabel::phi_plus: return "phi+";
    case BellLabel::phi_minus: return "phi-";
    case BellLabel::psi_plus: return "psi+";
    case BellLabel::psi_minus: return "psi-";
  }
  return "?";
}

inline TwoQubitVector bell_state(BellLabel b) {
  TwoQubitVector v = TwoQubitVector::Zero();
  switch (b) {
    case BellLabel::phi_plus: v << kInvSqrt2, 0.0, 0.0, kInvSqrt2; break;
    case BellLabel::phi_minus: v << kInvSqrt2, 0.0, 0.0, -kInvSqrt2; break;
    case BellLabel::psi_plus: v << 0.0, kInvSqrt2, kInvSqrt2, 0.0; break;
    case BellLabel::psi_minus: v << 0.0, kInvSqrt2, -kInvSqrt2, 0.0; break;
  }
  return v;
}

// Coefficients of A+ |phi+> + A- |phi-> + B+ |psi+> + B- |psi->.
struct BellCoefficients {
  cplx phi_plus{0.0, 0.0};   // A+
  cplx phi_minus{0.0, 0.0};  // A-
  cplx psi_plus{0.0, 0.0};   // B+
  cplx psi_minus{0.0, 0.0};  // B-

  cplx& operator[](BellLabel b) {
    switch (b) {
      case BellLabel::phi_plus: return phi_plus;
      case BellLabel::phi_minus: return phi_minus;
      case BellLabel::psi_plus: return psi_plus;
      case BellLabel::psi_minus: return psi_minus;
    }
    throw std::logic_error("BellCoefficients: bad label");
  }
  cplx operator[](BellLabel b) const { return const_cast<BellCoefficients&>(*this)[b]; }

  double norm_squared() const {
    return std::norm(phi_plus) + std::norm(phi_minus) + std::norm(psi_plus) + std::norm(psi_minus);
  }

  static BellCoefficients pure(BellLabel b) {
    BellCoefficients c;
    c[b] = 1.0;
    return c;
  }
};

inline constexpr std::array<BellLabel, 4> kBellLabels = {BellLabel::phi_plus, BellLabel::phi_minus,
                                                         BellLabel::psi_plus, BellLabel::psi_minus};

// Linear; valid for unnormalized vectors too.
inline BellCoefficients bell_expand(const TwoQubitVector& v) {
  BellCoefficients c;
  c.phi_plus = kInvSqrt2 * (v(0) + v(3));
  c.phi_minus = kInvSqrt2 * (v(0) - v(3));
  c.psi_plus = kInvSqrt2 * (v(1) + v(2));
  c.psi_minus = kInvSqrt2 * (v(1) - v(2));
  return c;
}

inline TwoQubitVector bell_compose(const BellCoefficients& c) {
  TwoQubitVector v;
  v(0) = kInvSqrt2 * (c.phi_plus + c.phi_minus);
  v(1) = kInvSqrt2 * (c.psi_plus + c.psi_minus);
  v(2) = kInvSqrt2 * (c.psi_plus - c.psi_minus);
  v(3) = kInvSqrt2 * (c.phi_plus - c.phi_minus);
  return v;
}

// ---------------------------------------------------------------------------
// Syndromes

struct Syndrome {
  int a = 1;  // X-type ancilla A outcome
  int b = 1;  // Z-type ancilla B outcome

  int ancilla_a_bit() const noexcept { return a == 1 ? 0 : 1; }
  int ancilla_b_bit() const noexcept { return b == 1 ? 0 : 1; }

  // Position in the (pp, mp, pm, mm) ordering used by tables and CSV columns.
  std::size_t slot() const noexcept { return static_cast<std::size_t>(ancilla_a_bit() + 2 * ancilla_b_bit()); }

  std::string tag() const { return std::string(a == 1 ? "p" : "m") + (b == 1 ? "p" : "m"); }

  friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

inline constexpr Syndrome kSyndromePP{1, 1};
inline constexpr Syndrome kSyndromeMP{-1, 1};
inline constexpr Syndrome kSyndromePM{1, -1};
inline constexpr Syndrome kSyndromeMM{-1, -1};
inline constexpr std::array<Syndrome, 4> kSyndromes = {kSyndromePP, kSyndromeMP, kSyndromePM, kSyndromeMM};

// Post-measurement data state of the ideal circuit for each syndrome.
inline BellLabel syndrome_bell(Syndrome s) {
  if (s == kSyndromePP) return BellLabel::phi_plus;
  if (s == kSyndromePM) return BellLabel::psi_plus;
  if (s == kSyndromeMP) return BellLabel::phi_minus;
  return BellLabel::psi_minus;
}

// ---------------------------------------------------------------------------
// Ideal circuit

// Closed-form output after the final Hadamard on ancilla A:
//   A+ |0>|phi+>|0> + B+ |0>|psi+>|1> + A- |1>|phi->|0> + B- |1>|psi->|1>
inline FourQubitVector ideal_circuit(const BellCoefficients& in) {
  FourQubitVector out = FourQubitVector::Zero();
  auto add = [&out](int a, const TwoQubitVector& data, int b, cplx coeff) {
    for (int d = 0; d < 4; ++d) out(8 * a + 2 * d + b) += coeff * data(d);
  };
  add(0, bell_state(BellLabel::phi_plus), 0, in.phi_plus);
  add(0, bell_state(BellLabel::psi_plus), 1, in.psi_plus);
  add(1, bell_state(BellLabel::phi_minus), 0, in.phi_minus);
  add(1, bell_state(BellLabel::psi_minus), 1, in.psi_minus);
  return out;
}

// Born probabilities of the four ancilla outcomes, (pp, mp, pm, mm) order.
inline std::array<double, 4> syndrome_probabilities(const FourQubitVector& psi) {
  std::array<double, 4> p{};
  for (int idx = 0; idx < 16; ++idx) {
    const int a = (idx >> 3) & 1;
    const int b = idx & 1;
    p[static_cast<std::size_t>(a + 2 * b)] += std::norm(psi(idx));
  }
  return p;
}

// Data-qubit state left after projecting ancillas onto the syndrome (unnormalized).
inline TwoQubitVector project_data(const FourQubitVector& psi, Syndrome s) {
  TwoQubitVector v;
  for (int d = 0; d < 4; ++d) v(d) = psi(8 * s.ancilla_a_bit() + 2 * d + s.ancilla_b_bit());
  return v;
}

// ---------------------------------------------------------------------------
// Pauli corrections

enum class Pauli { x1, x2, z1, z2 };

inline std::string_view to_string(Pauli p) {
  switch (p) {
    case Pauli::x1: return "X1";
    case Pauli::x2: return "X2";
    case Pauli::z1: return "Z1";
    case Pauli::z2: return "Z2";
  }
  return "?";
}

// Single-qubit operators applied in list order (front first).
class PauliCorrection {
 public:
  PauliCorrection() = default;
  PauliCorrection(std::initializer_list<Pauli> ops) : ops_(ops) {
    if (ops_.size() > 2) throw std::invalid_argument("PauliCorrection: at most two operators");
  }

  const std::vector<Pauli>& ops() const noexcept { return ops_; }
  bool is_identity() const noexcept { return ops_.empty(); }

  std::string to_string() const {
    if (ops_.empty()) return "I";
    // Operator-product notation: last applied on the left.
    std::string s;
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) s += jtcsim::to_string(*it);
    return s;
  }

  friend bool operator==(const PauliCorrection&, const PauliCorrection&) = default;

 private:
  std::vector<Pauli> ops_;
};

namespace detail {

struct SignedBell {
  BellLabel label;
  double sign;
};

// Action of single-qubit X and Z on the Bell states.
inline SignedBell apply_pauli(Pauli op, BellLabel b) {
  using enum BellLabel;
  switch (op) {
    case Pauli::x1:
      switch (b) {
        case phi_plus: return {psi_plus, 1.0};
        case phi_minus: return {psi_minus, -1.0};
        case psi_plus: return {phi_plus, 1.0};
        case psi_minus: return {phi_minus, -1.0};
      }
      break;
    case Pauli::x2:
      switch (b) {
        case phi_plus: return {psi_plus, 1.0};
        case phi_minus: return {psi_minus, 1.0};
        case psi_plus: return {phi_plus, 1.0};
        case psi_minus: return {phi_minus, 1.0};
      }
      break;
    case Pauli::z1:
      switch (b) {
        case phi_plus: return {phi_minus, 1.0};
        case phi_minus: return {phi_plus, 1.0};
        case psi_plus: return {psi_minus, 1.0};
        case psi_minus: return {psi_plus, 1.0};
      }
      break;
    case Pauli::z2:
      switch (b) {
        case phi_plus: return {phi_minus, 1.0};
        case phi_minus: return {phi_plus, 1.0};
        case psi_plus: return {psi_minus, -1.0};
        case psi_minus: return {psi_plus, -1.0};
      }
      break;
  }
  throw std::logic_error("apply_pauli: bad operator");
}

}  // namespace detail

inline BellCoefficients pauli_on_bell(const PauliCorrection& op, const BellCoefficients& state) {
  BellCoefficients cur = state;
  for (Pauli p : op.ops()) {
    BellCoefficients next;
    for (BellLabel b : kBellLabels) {
      const auto [to, sign] = detail::apply_pauli(p, b);
      next[to] += sign * cur[b];
    }
    cur = next;
  }
  return cur;
}

// Same operators, reverse order. Every factor is Hermitian, so this is the adjoint.
inline PauliCorrection adjoint(const PauliCorrection& op) {
  const auto& ops = op.ops();
  if (ops.size() == 2) return {ops[1], ops[0]};
  if (ops.size() == 1) return {ops[0]};
  return {};
}

// Correction mapping the syndrome-implied Bell state back onto the target.
// Only the two stable inputs analysed here (phi+, psi+) are supported.
inline PauliCorrection correction_for(BellLabel target, Syndrome s) {
  if (target == BellLabel::phi_plus) {
    if (s == kSyndromePP) return {};
    if (s == kSyndromeMP) return {Pauli::z1};
    if (s == kSyndromePM) return {Pauli::x2};
    return {Pauli::z1, Pauli::x2};
  }
  if (target == BellLabel::psi_plus) {
    if (s == kSyndromePM) return {};
    if (s == kSyndromePP) return {Pauli::x1};
    if (s == kSyndromeMP) return {Pauli::z1, Pauli::x2};
    return {Pauli::z1};
  }
  throw std::invalid_argument("correction_for: target must be phi+ or psi+");
}

// Hadamard on data qubit 1 followed by CNOT(1 -> 2); maps |00> to |phi+>.
inline TwoQubitVector recover_product_state(const TwoQubitVector& v) {
  TwoQubitVector h;
  h(0) = kInvSqrt2 * (v(0) + v(2));
  h(1) = kInvSqrt2 * (v(1) + v(3));
  h(2) = kInvSqrt2 * (v(0) - v(2));
  h(3) = kInvSqrt2 * (v(1) - v(3));
  TwoQubitVector out = h;
  std::swap(out(2), out(3));
  return out;
}

}  // namespace jtcsim
