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

#include "jtcsim/oracle.hpp"
#include "jtcsim/density.hpp"

#include "reference_values.hpp"

#include <gtest/gtest.h>

namespace jtcsim {
namespace {

SystemParams params(FrequencyConvention c) { return from_frequencies_ghz(reference_frequencies_ghz(), c); }

const oracle::FullSpacePropagator& full() {
  static const oracle::FullSpacePropagator f(params(FrequencyConvention::cyclic));
  return f;
}

const SubspacePropagator& sub() {
  static const SubspacePropagator s(params(FrequencyConvention::cyclic));
  return s;
}

TEST(Oracle, IndexRoundTrip) {
  for (int i = 0; i < oracle::kDimension; ++i) EXPECT_EQ(oracle::index_of(oracle::label_of(i)), i);
  EXPECT_THROW(oracle::label_of(oracle::kDimension), std::out_of_range);
  EXPECT_THROW(oracle::index_of(BasisLabel{{3, 0, 0, 0}, 0, 0, 0, 0}), std::out_of_range);
}

TEST(Oracle, HamiltonianStructure) {
  const Eigen::MatrixXd& h = full().hamiltonian();
  EXPECT_EQ(max_abs(h - h.transpose()), 0.0);
  EXPECT_EQ(oracle::excitation_commutator_norm(h), 0.0);
  const Eigen::MatrixXd h0 = oracle::build_full_h(params(FrequencyConvention::cyclic).with_couplings({}));
  EXPECT_EQ(max_abs(Eigen::MatrixXd(h0.diagonal().asDiagonal()) - h0), 0.0);
  EXPECT_NEAR(h0(0, 0), reference::kGroundEnergyCyclic, 1e-12);
}

TEST(Oracle, BlocksMatchSubspaceBuilder) {
  for (auto c : {FrequencyConvention::cyclic, FrequencyConvention::angular, FrequencyConvention::mixed}) {
    const auto p = params(c);
    const Eigen::MatrixXd h = oracle::build_full_h(p);
    EXPECT_LT(max_abs(oracle::extract_block(h, excitation_basis(1)) - build_h1(p).matrix()), 1e-12);
    EXPECT_LT(max_abs(oracle::extract_block(h, excitation_basis(2)) - build_h2(p).matrix()), 1e-12);
  }
}

TEST(Oracle, StabilizerCommutatorsMatchReference) {
  for (const auto& ref : reference::spectra()) {
    const auto c = oracle::stabilizer_commutators(params(ref.convention));
    EXPECT_NEAR(c.x_stabilizer, ref.comm_x, 1e-9);
    EXPECT_NEAR(c.z_stabilizer, ref.comm_z, 1e-9);
  }
}

TEST(Oracle, ZCommutatorScalesWithDetuning) {
  const auto p = params(FrequencyConvention::mixed);
  EXPECT_EQ(oracle::stabilizer_commutators(p.with_couplings({})).z_stabilizer, 0.0);
  const double base = oracle::stabilizer_commutators(p).z_stabilizer;
  const double twice = oracle::stabilizer_commutators(p.with_couplings(p.g.scaled(2.0))).z_stabilizer;
  EXPECT_NEAR(twice, 2.0 * base, 1e-12);
}

TEST(Oracle, PropagationAgreesWithSubspace) {
  for (Scenario sc : {Scenario::phi_plus, Scenario::psi_plus}) {
    for (double t : {0.5, 2.0, 10.0, 20.0}) {
      const auto direct = evolve_scenario(sc, sub(), t);
      const auto [ex, outside] = oracle::extract(full().propagate(oracle::embed(initial_state(sc)), t));
      EXPECT_LT(outside, 1e-12);
      EXPECT_LT(std::abs(ex.ground - direct.ground) + (ex.level2 - direct.level2).norm() + ex.level1.norm(), 1e-9);
    }
  }
}

TEST(Oracle, ReducedDensityAgrees) {
  for (Scenario sc : {Scenario::phi_plus, Scenario::psi_plus}) {
    const double t = 5.0;
    const auto v = full().propagate(oracle::embed(initial_state(sc)), t);
    const auto st = evolve_scenario(sc, sub(), t);
    for (Syndrome s : kSyndromes) {
      const auto m = measure(st, s);
      EXPECT_NEAR(oracle::syndrome_probability(v, s), m.probability, 1e-10);
      const auto rho = reduce(strip_ancillas(*m.post, s));
      EXPECT_LT(max_abs(oracle::reduced_density(v, s) - rho.rho), 1e-8);
    }
  }
}

TEST(Oracle, DimensionErrors) {
  EXPECT_THROW(full().propagate(oracle::FullVector::Zero(3), 1.0), std::invalid_argument);
  EXPECT_THROW(oracle::reduced_density(oracle::FullVector::Zero(oracle::kDimension), kSyndromePP), std::domain_error);
}

}  // namespace
}  // namespace jtcsim
