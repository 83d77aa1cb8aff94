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

#include "jtcsim/frames.hpp"
#include "jtcsim/pipeline.hpp"

#include <gtest/gtest.h>

namespace jtcsim {
namespace {

const std::vector<int>& pp_set() {
  static const SyndromeIndexSets sets = literal_index_sets();
  return sets[kSyndromePP];
}

SystemParams params() { return from_frequencies_ghz(reference_frequencies_ghz(), FrequencyConvention::cyclic); }

const SubspacePropagator& prop() {
  static const SubspacePropagator p(params());
  return p;
}

TEST(Frames, ParseRoundTrip) {
  for (Frame f : {Frame::lab, Frame::rotating_qubits, Frame::rotating_qubits_ancillas}) {
    EXPECT_EQ(parse_frame(to_string(f)), f);
  }
  EXPECT_THROW(parse_frame("rotating"), std::invalid_argument);
}

TEST(Frames, PhaseRates) {
  const auto p = params();
  const auto rot = rotating_frame_rates(FrameSpec::from(p, Frame::rotating_qubits));
  EXPECT_DOUBLE_EQ(rot[0], -0.5 * p.omega_plus());
  EXPECT_DOUBLE_EQ(rot[27], 0.5 * p.omega_plus());
  EXPECT_DOUBLE_EQ(rot[29], 0.5 * p.omega_minus());
  EXPECT_DOUBLE_EQ(rot[31], -0.5 * p.omega_minus());
  const auto lab = rotating_frame_rates(FrameSpec::from(p, Frame::lab));
  for (double r : lab) EXPECT_EQ(r, 0.0);
  const auto ext = rotating_frame_rates(FrameSpec::from(p, Frame::rotating_qubits_ancillas));
  EXPECT_DOUBLE_EQ(ext[0], -0.5 * (p.omega_plus() + p.ancilla_a + p.ancilla_b));
  EXPECT_DOUBLE_EQ(ext[32], 0.5 * (p.ancilla_a + p.ancilla_b - p.omega_plus()));
}

TEST(Frames, ModuliAndProbabilitiesInvariant) {
  for (Frame f : {Frame::rotating_qubits, Frame::rotating_qubits_ancillas}) {
    const FrameSpec spec = FrameSpec::from(params(), f);
    for (double t : {1.0, 13.0}) {
      const auto lab = evolve_scenario(Scenario::phi_plus, prop(), t);
      const auto rot = to_rotating_frame(lab, spec, t);
      const auto li = lab.indexed();
      const auto ri = to_rotating_frame(li, spec, t);
      const auto rs = rot.indexed();
      for (std::size_t k = 0; k < 33; ++k) {
        EXPECT_NEAR(std::abs(ri[k]), std::abs(li[k]), 1e-15);
        EXPECT_NEAR(std::abs(ri[k] - rs[k]), 0.0, 1e-14);
      }
      const auto pl = syndrome_probabilities(lab);
      const auto pr = syndrome_probabilities(rot);
      for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(pl[k], pr[k], 1e-15);
    }
  }
}

TEST(Frames, RotatingFidelityCarriesCrossPhase) {
  const auto p = params();
  const double t = 4.2;
  const auto b = beta(prop().level2(), prop().ground_energy(), t);
  double p11 = std::norm(b[0]);
  for (int k : pp_set()) p11 += std::norm(b[static_cast<std::size_t>(k)]);
  double acc = std::norm(b[27]) + 2.0 * (std::conj(b[0]) * b[27] * std::exp(kI * p.omega_plus() * t)).real();
  for (std::size_t k = 0; k <= 10; ++k) acc += std::norm(b[k]);
  const double closed = std::sqrt(acc / (2.0 * p11));
  const auto a = analyze_point(prop(), Scenario::phi_plus, FrameSpec::from(p, Frame::rotating_qubits), t);
  EXPECT_NEAR(a[kSyndromePP].corrected_fidelity, closed, 1e-12);
}

// Ancilla phases are global within each syndrome branch.
TEST(Frames, ExtendedFrameMatchesQubitFrame) {
  const auto p = params();
  for (Scenario sc : {Scenario::phi_plus, Scenario::psi_plus}) {
    for (double t : {2.0, 21.0}) {
      const auto a = analyze_point(prop(), sc, FrameSpec::from(p, Frame::rotating_qubits), t);
      const auto b = analyze_point(prop(), sc, FrameSpec::from(p, Frame::rotating_qubits_ancillas), t);
      for (Syndrome s : kSyndromes) {
        EXPECT_NEAR(a[s].corrected_fidelity, b[s].corrected_fidelity, 1e-12);
        EXPECT_LT(max_abs(a[s].rho->rho - b[s].rho->rho), 1e-12);
      }
    }
  }
}

TEST(Free, ClosedFormsMatchNumerics) {
  const auto p = params().with_couplings({});
  const SubspacePropagator free(p);
  for (Scenario sc : {Scenario::phi_plus, Scenario::psi_plus}) {
    for (double t : {0.0, 0.5, 1.3, 7.7, 50.0}) {
      const auto a = analyze_point(free, sc, FrameSpec::from(p, Frame::lab), t);
      const auto& ok = a[no_error_syndrome(sc)];
      EXPECT_NEAR(ok.corrected_fidelity, free_fidelity(sc, p, t), 1e-12);
      const auto r = free_reinsertion(sc, p, t);
      for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(ok.reinsertion->p_tilde[k], r[k], 1e-12);
      // Rotating frame removes the beat entirely.
      const auto rot = analyze_point(free, sc, FrameSpec::from(p, Frame::rotating_qubits), t);
      EXPECT_NEAR(rot[no_error_syndrome(sc)].corrected_fidelity, 1.0, 1e-12);
    }
  }
}

TEST(Free, FrequenciesAndZeros) {
  const auto p = params();
  EXPECT_DOUBLE_EQ(free_frequency(Scenario::phi_plus, p), p.omega_plus());
  EXPECT_DOUBLE_EQ(free_frequency(Scenario::psi_plus, p), p.omega_minus());
  const double t0 = std::numbers::pi / p.omega_plus();
  EXPECT_NEAR(free_fidelity(Scenario::phi_plus, p, t0), 0.0, 1e-15);
  const auto r = free_reinsertion(Scenario::phi_plus, p, t0);
  EXPECT_NEAR(r[kSyndromeMP.slot()], 1.0, 1e-15);
  const auto q = free_reinsertion(Scenario::psi_plus, p, 0.0);
  EXPECT_EQ(q[kSyndromePM.slot()], 1.0);
  EXPECT_EQ(q[kSyndromeMM.slot()], 0.0);
}

// For phi+ the mp and mm branches carry no |E0> component, so both frames agree there.
TEST(Frames, PhiPlusErrorBranchesFrameIndependent) {
  const auto p = params();
  const double t = 6.5;
  const auto lab = analyze_point(prop(), Scenario::phi_plus, FrameSpec::from(p, Frame::lab), t);
  const auto rot = analyze_point(prop(), Scenario::phi_plus, FrameSpec::from(p, Frame::rotating_qubits), t);
  for (Syndrome s : {kSyndromeMP, kSyndromeMM}) {
    EXPECT_NEAR(lab[s].corrected_fidelity, rot[s].corrected_fidelity, 1e-12);
  }
}

TEST(Frames, CorrectedFidelityIsBranchBellOverlap) {
  const auto p = params();
  for (Scenario sc : {Scenario::phi_plus, Scenario::psi_plus}) {
    for (double t : {3.0, 17.5}) {
      const auto a = analyze_point(prop(), sc, FrameSpec::from(p, Frame::lab), t);
      for (Syndrome s : kSyndromes) {
        ASSERT_TRUE(a[s].reinsertion);
        EXPECT_NEAR(a[s].corrected_fidelity, std::sqrt(a[s].reinsertion->f_squared[s.slot()]), 1e-12);
      }
    }
  }
}

}  // namespace
}  // namespace jtcsim
