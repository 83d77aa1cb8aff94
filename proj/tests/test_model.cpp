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

#include "jtcsim/model.hpp"

#include "reference_values.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <set>

namespace jtcsim {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SystemParams cyclic() { return from_frequencies_ghz(reference_frequencies_ghz(), FrequencyConvention::cyclic); }

TEST(Conventions, ScaleFrequenciesAndCouplings) {
  const auto f = reference_frequencies_ghz();
  const auto a = from_frequencies_ghz(f, FrequencyConvention::angular);
  const auto c = from_frequencies_ghz(f, FrequencyConvention::cyclic);
  const auto m = from_frequencies_ghz(f, FrequencyConvention::mixed);
  EXPECT_DOUBLE_EQ(a.data1, 6.6);
  EXPECT_DOUBLE_EQ(a.g.g11, 0.51);
  EXPECT_DOUBLE_EQ(c.data1, kTwoPi * 6.6);
  EXPECT_DOUBLE_EQ(c.g.g11, kTwoPi * 0.51);
  EXPECT_DOUBLE_EQ(m.resonator[2], kTwoPi * 8.1);
  EXPECT_DOUBLE_EQ(m.g.g4b, 0.49);
  EXPECT_EQ(m.convention, FrequencyConvention::mixed);
}

TEST(Conventions, ParseRoundTrip) {
  for (auto c : {FrequencyConvention::angular, FrequencyConvention::cyclic, FrequencyConvention::mixed}) {
    EXPECT_EQ(parse_convention(to_string(c)), c);
  }
  EXPECT_THROW(parse_convention("hertz"), std::invalid_argument);
}

TEST(Params, Validation) {
  auto f = reference_frequencies_ghz();
  f.data2 = 0.0;
  EXPECT_THROW(from_frequencies_ghz(f, FrequencyConvention::cyclic), std::invalid_argument);
  SystemParams p = cyclic();
  p.g.g31 = std::numeric_limits<double>::infinity();
  EXPECT_THROW(p.validate(), std::invalid_argument);
  EXPECT_NO_THROW(cyclic().with_couplings({}).validate());
}

TEST(Energies, GroundEnergy) {
  const auto p = cyclic();
  EXPECT_NEAR(ground_energy(p), reference::kGroundEnergyCyclic, 1e-12);
  EXPECT_NEAR(ground_energy(p), kTwoPi * 0.5 * (8.14 + 8.18 + 8.1 + 8.06 - 6.6 - 6.4 - 5.9 - 5.7), 1e-12);
  EXPECT_DOUBLE_EQ(p.omega_plus(), p.data1 + p.data2);
  EXPECT_DOUBLE_EQ(p.omega_minus(), p.data1 - p.data2);
}

TEST(Basis, SizesAndExcitationNumbers) {
  for (int level : {0, 1, 2}) {
    const auto b = excitation_basis(level);
    EXPECT_EQ(b.size(), level == 0 ? 1u : level == 1 ? 8u : 32u);
    std::set<std::vector<int>> seen;
    for (const auto& l : b.labels) {
      EXPECT_EQ(excitation_number(l), level);
      seen.insert({l.photons[0], l.photons[1], l.photons[2], l.photons[3], l.q1, l.q2, l.qa, l.qb});
    }
    EXPECT_EQ(seen.size(), b.size());
  }
  EXPECT_THROW(excitation_basis(3), std::invalid_argument);
  // 32 is every way of placing two excitations with at most one per qubit.
  const auto b2 = excitation_basis(2);
  EXPECT_EQ(b2[26], (BasisLabel{{0, 0, 0, 0}, 1, 1, 0, 0}));
  EXPECT_EQ(b2[28], (BasisLabel{{0, 0, 0, 0}, 1, 0, 0, 1}));
  EXPECT_EQ(b2[30], (BasisLabel{{0, 0, 0, 0}, 0, 1, 0, 1}));
  EXPECT_EQ(b2[31], (BasisLabel{{0, 0, 0, 0}, 0, 0, 1, 1}));
}

TEST(Blocks, DiagonalIsFreeEnergy) {
  const auto p = cyclic();
  const auto h1 = build_h1(p);
  const auto h2 = build_h2(p);
  const auto b1 = excitation_basis(1);
  const auto b2 = excitation_basis(2);
  for (Eigen::Index i = 0; i < 8; ++i) EXPECT_DOUBLE_EQ(h1(i, i), label_energy(p, b1[static_cast<std::size_t>(i)]));
  for (Eigen::Index i = 0; i < 32; ++i) EXPECT_DOUBLE_EQ(h2(i, i), label_energy(p, b2[static_cast<std::size_t>(i)]));
  EXPECT_DOUBLE_EQ(h2(0, 10), std::sqrt(2.0) * p.g.g11);
  EXPECT_DOUBLE_EQ(h2(10, 0), std::sqrt(2.0) * p.g.g11);
  EXPECT_DOUBLE_EQ(h2(26, 11), p.g.g11);
  EXPECT_DOUBLE_EQ(h1(0, 4), p.g.g11);
  EXPECT_DOUBLE_EQ(h1(7, 3), p.g.g4b);
}

// Every off-diagonal entry moves one excitation between a resonator and a
// qubit linked to it, with amplitude g sqrt(n).
TEST(Blocks, OffDiagonalEntriesAreSingleHops) {
  const auto p = cyclic();
  struct Edge {
    int r;
    int slot;
    double g;
  };
  const std::vector<Edge> edges = {{0, 0, p.g.g11}, {0, 2, p.g.g1a}, {1, 1, p.g.g22}, {1, 2, p.g.g2a},
                                   {2, 0, p.g.g31}, {2, 3, p.g.g3b}, {3, 1, p.g.g42}, {3, 3, p.g.g4b}};
  auto expected = [&](const BasisLabel& a, const BasisLabel& b) {
    const std::array<int, 4> qa{a.q1, a.q2, a.qa, a.qb};
    for (const Edge& e : edges) {
      // a has the photon, b has the qubit excitation.
      BasisLabel moved = a;
      if (a.photons[static_cast<std::size_t>(e.r)] == 0 || qa[static_cast<std::size_t>(e.slot)] == 1) continue;
      moved.photons[static_cast<std::size_t>(e.r)] -= 1;
      std::array<int*, 4> bits{&moved.q1, &moved.q2, &moved.qa, &moved.qb};
      *bits[static_cast<std::size_t>(e.slot)] = 1;
      if (moved == b) return e.g * std::sqrt(static_cast<double>(a.photons[static_cast<std::size_t>(e.r)]));
    }
    return 0.0;
  };
  for (int level : {1, 2}) {
    const auto basis = excitation_basis(level);
    const auto h = level == 1 ? build_h1(p) : build_h2(p);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        const double want = expected(basis[i], basis[j]) + expected(basis[j], basis[i]);
        EXPECT_DOUBLE_EQ(h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), want)
            << "level " << level << " (" << i + 1 << "," << j + 1 << ")";
      }
    }
  }
}

TEST(Blocks, SpectraMatchReference) {
  for (const auto& ref : reference::spectra()) {
    const auto p = from_frequencies_ghz(reference_frequencies_ghz(), ref.convention);
    const auto d1 = jacobi_eigendecompose(build_h1(p));
    const auto d2 = jacobi_eigendecompose(build_h2(p));
    EXPECT_NEAR(d1.eigenvalues(0), ref.level1_min, 1e-9);
    EXPECT_NEAR(d1.eigenvalues(7), ref.level1_max, 1e-9);
    EXPECT_NEAR(d2.eigenvalues(0), ref.level2_min, 1e-9);
    EXPECT_NEAR(d2.eigenvalues(31), ref.level2_max, 1e-9);
  }
}

TEST(Blocks, TraceIsSumOfFreeEnergies) {
  const auto p = from_frequencies_ghz(reference_frequencies_ghz(), FrequencyConvention::mixed);
  const auto d2 = jacobi_eigendecompose(build_h2(p));
  double free_sum = 0.0;
  for (const auto& l : excitation_basis(2).labels) free_sum += label_energy(p, l);
  EXPECT_NEAR(d2.eigenvalues.sum(), free_sum, 1e-10);
}

}  // namespace
}  // namespace jtcsim
