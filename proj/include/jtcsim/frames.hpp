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

// frames.hpp: rotating frames and the uncoupled closed forms.

#pragma once

#include "jtcsim/evolution.hpp"
#include "jtcsim/model.hpp"
#include "jtcsim/syndrome.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jtcsim {

enum class Frame { lab, rotating_qubits, rotating_qubits_ancillas };

inline std::string_view to_string(Frame f) {
  switch (f) {
    case Frame::lab: return "lab";
    case Frame::rotating_qubits: return "rot";
    case Frame::rotating_qubits_ancillas: return "rot-ext";
  }
  return "?";
}

inline Frame parse_frame(std::string_view s) {
  if (s == "lab") return Frame::lab;
  if (s == "rot") return Frame::rotating_qubits;
  if (s == "rot-ext") return Frame::rotating_qubits_ancillas;
  throw std::invalid_argument("unknown frame '" + std::string(s) + "' (expected lab, rot or rot-ext)");
}

struct FrameSpec {
  Frame kind = Frame::lab;
  double data1 = 0.0;
  double data2 = 0.0;
  double ancilla_a = 0.0;
  double ancilla_b = 0.0;

  static FrameSpec from(const SystemParams& p, Frame kind) {
    return {kind, p.data1, p.data2, p.ancilla_a, p.ancilla_b};
  }

  double omega_plus() const noexcept { return data1 + data2; }
  double omega_minus() const noexcept { return data1 - data2; }

  // Exponent rate of exp(i H0 t) on a product label: +w/2 per excited qubit, -w/2 per ground one.
  double phase_rate(const BasisLabel& l) const noexcept {
    if (kind == Frame::lab) return 0.0;
    auto half = [](int bit, double w) { return bit ? 0.5 * w : -0.5 * w; };
    double r = half(l.q1, data1) + half(l.q2, data2);
    if (kind == Frame::rotating_qubits_ancillas) r += half(l.qa, ancilla_a) + half(l.qb, ancilla_b);
    return r;
  }
};

// Phase rates indexed like IndexedAmplitudes (0 is |E0>, k is f_k).
inline std::array<double, 33> rotating_frame_rates(const FrameSpec& frame) {
  static const ExcitationBasis b0 = excitation_basis(0);
  static const ExcitationBasis b2 = excitation_basis(2);
  std::array<double, 33> r{};
  r[0] = frame.phase_rate(b0[0]);
  for (std::size_t k = 0; k < 32; ++k) r[k + 1] = frame.phase_rate(b2[k]);
  return r;
}

inline SystemState to_rotating_frame(const SystemState& lab, const FrameSpec& frame, double t) {
  if (frame.kind == Frame::lab) return lab;
  SystemState out = lab;
  out.for_each([&](const BasisLabel& l, cplx& amp) { amp *= std::exp(kI * (frame.phase_rate(l) * t)); });
  return out;
}

inline IndexedAmplitudes to_rotating_frame(const IndexedAmplitudes& lab, const FrameSpec& frame, double t) {
  const auto rates = rotating_frame_rates(frame);
  IndexedAmplitudes out = lab;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] *= std::exp(kI * (rates[k] * t));
  return out;
}

// ---------------------------------------------------------------------------
// Uncoupled closed forms (lab frame)

inline double free_frequency(Scenario s, const SystemParams& p) {
  return s == Scenario::phi_plus ? p.omega_plus() : p.omega_minus();
}

// (sqrt2/2) sqrt(1 + cos wt), evaluated as |cos(wt/2)|.
inline double free_fidelity(Scenario s, const SystemParams& p, double t) {
  return std::abs(std::cos(0.5 * free_frequency(s, p) * t));
}

// phi+: mass on (pp, mp); psi+: mass on (pm, mm).
inline std::array<double, 4> free_reinsertion(Scenario s, const SystemParams& p, double t) {
  const double c = std::cos(free_frequency(s, p) * t);
  std::array<double, 4> out{};
  const Syndrome keep = no_error_syndrome(s);
  const Syndrome flip = s == Scenario::phi_plus ? kSyndromeMP : kSyndromeMM;
  out[keep.slot()] = 0.5 * (1.0 + c);
  out[flip.slot()] = 0.5 * (1.0 - c);
  return out;
}

}  // namespace jtcsim
