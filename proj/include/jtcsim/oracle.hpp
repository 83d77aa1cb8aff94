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

// oracle.hpp: brute-force reference on the full product space with at most
// two photons per resonator (3^4 * 2^4 = 1296 states).

#pragma once

#include "jtcsim/evolution.hpp"
#include "jtcsim/linalg.hpp"
#include "jtcsim/model.hpp"
#include "jtcsim/stabilizer.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jtcsim::oracle {

inline constexpr int kPhotonCutoff = 2;
inline constexpr int kDimension = 81 * 16;

// index = ((((r1 * 3 + r2) * 3 + r3) * 3 + r4) * 16) + 8 q1 + 4 q2 + 2 qa + qb
inline int index_of(const BasisLabel& l) {
  int r = 0;
  for (int n : l.photons) {
    if (n < 0 || n > kPhotonCutoff) throw std::out_of_range("oracle: photon number outside cutoff");
    r = 3 * r + n;
  }
  return 16 * r + 8 * l.q1 + 4 * l.q2 + 2 * l.qa + l.qb;
}

inline BasisLabel label_of(int index) {
  if (index < 0 || index >= kDimension) throw std::out_of_range("oracle: index outside the full space");
  BasisLabel l;
  const int q = index % 16;
  int r = index / 16;
  for (int k = 3; k >= 0; --k) {
    l.photons[static_cast<std::size_t>(k)] = r % 3;
    r /= 3;
  }
  l.q1 = (q >> 3) & 1;
  l.q2 = (q >> 2) & 1;
  l.qa = (q >> 1) & 1;
  l.qb = q & 1;
  return l;
}

// Qubit slot ordering inside the 4-bit field: 0 = q1, 1 = q2, 2 = qa, 3 = qb.
inline int& qubit_ref(BasisLabel& l, int slot) {
  switch (slot) {
    case 0: return l.q1;
    case 1: return l.q2;
    case 2: return l.qa;
    default: return l.qb;
  }
}

// Dense real Hamiltonian
//   sum_r w_r (n_r + 1/2) - 1/2 sum_q w_q sz_q + sum_edges g (a_r^dag s_q + a_r s_q^dag),
// with sz|0> = |0>, sz|1> = -|1> and s_q the qubit lowering operator.
inline Eigen::MatrixXd build_full_h(const SystemParams& p) {
  p.validate();
  const std::array<double, 4> wq{p.data1, p.data2, p.ancilla_a, p.ancilla_b};
  struct Edge {
    int resonator;
    int qubit;
    double g;
  };
  const std::array<Edge, 8> edges{{{0, 0, p.g.g11}, {0, 2, p.g.g1a},
                                   {1, 1, p.g.g22}, {1, 2, p.g.g2a},
                                   {2, 0, p.g.g31}, {2, 3, p.g.g3b},
                                   {3, 1, p.g.g42}, {3, 3, p.g.g4b}}};

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(kDimension, kDimension);
  for (int i = 0; i < kDimension; ++i) {
    const BasisLabel l = label_of(i);
    double e = 0.0;
    for (int k = 0; k < 4; ++k) e += p.resonator[static_cast<std::size_t>(k)] * (l.photons[static_cast<std::size_t>(k)] + 0.5);
    BasisLabel tmp = l;
    for (int q = 0; q < 4; ++q) {
      const double sz = qubit_ref(tmp, q) == 0 ? 1.0 : -1.0;
      e -= 0.5 * wq[static_cast<std::size_t>(q)] * sz;
    }
    h(i, i) = e;

    // a_r^dag s_q: photon created, qubit relaxed. The Hermitian partner fills the transpose.
    for (const Edge& ed : edges) {
      BasisLabel to = l;
      int& bit = qubit_ref(to, ed.qubit);
      int& n = to.photons[static_cast<std::size_t>(ed.resonator)];
      if (bit != 1 || n >= kPhotonCutoff) continue;
      bit = 0;
      n += 1;
      const double amp = ed.g * std::sqrt(static_cast<double>(n));
      const int j = index_of(to);
      h(j, i) += amp;
      h(i, j) += amp;
    }
  }
  return h;
}

inline Eigen::VectorXd excitation_diagonal() {
  Eigen::VectorXd n(kDimension);
  for (int i = 0; i < kDimension; ++i) n(i) = excitation_number(label_of(i));
  return n;
}

// max |[N, H]_ij| = max |(N_i - N_j) H_ij|
inline double excitation_commutator_norm(const Eigen::MatrixXd& h) {
  const Eigen::VectorXd n = excitation_diagonal();
  double m = 0.0;
  for (int j = 0; j < kDimension; ++j) {
    for (int i = 0; i < kDimension; ++i) m = std::max(m, std::abs((n(i) - n(j)) * h(i, j)));
  }
  return m;
}

// Restriction of H to the labels of one excitation block, in that block's order.
inline Eigen::MatrixXd extract_block(const Eigen::MatrixXd& h, const ExcitationBasis& basis) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd b(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      b(i, j) = h(index_of(basis[static_cast<std::size_t>(i)]), index_of(basis[static_cast<std::size_t>(j)]));
    }
  }
  return b;
}

struct StabilizerCommutators {
  double x_stabilizer = 0.0;  // || [X_a X_1 X_2, H] ||_max
  double z_stabilizer = 0.0;  // || [Z_1 Z_2 Z_b, H] ||_max
};

inline StabilizerCommutators stabilizer_commutators(const Eigen::MatrixXd& h) {
  // X_a X_1 X_2 is the bit-flip permutation pi; ([S, H])_ij = H(pi i, j) - H(i, pi j).
  auto flip = [](int i) { return i ^ (8 | 4 | 2); };
  auto zsign = [](int i) {
    const int parity = ((i >> 3) ^ (i >> 2) ^ i) & 1;  // q1, q2, qb
    return parity ? -1.0 : 1.0;
  };
  StabilizerCommutators c;
  for (int j = 0; j < kDimension; ++j) {
    for (int i = 0; i < kDimension; ++i) {
      c.x_stabilizer = std::max(c.x_stabilizer, std::abs(h(flip(i), j) - h(i, flip(j))));
      c.z_stabilizer = std::max(c.z_stabilizer, std::abs((zsign(i) - zsign(j)) * h(i, j)));
    }
  }
  return c;
}

inline StabilizerCommutators stabilizer_commutators(const SystemParams& p) {
  return stabilizer_commutators(build_full_h(p));
}

// ---------------------------------------------------------------------------
// Dense propagation

using FullVector = Eigen::VectorXcd;

class FullSpacePropagator {
 public:
  explicit FullSpacePropagator(const SystemParams& p) : h_(build_full_h(p)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h_);
    if (es.info() != Eigen::Success) throw std::runtime_error("oracle: eigensolver failed");
    energies_ = es.eigenvalues();
    vectors_ = es.eigenvectors();
  }

  const Eigen::MatrixXd& hamiltonian() const noexcept { return h_; }
  const Eigen::VectorXd& energies() const noexcept { return energies_; }
  const Eigen::MatrixXd& eigenvectors() const noexcept { return vectors_; }

  FullVector propagate(const FullVector& in, double t) const {
    if (in.size() != kDimension) throw std::invalid_argument("oracle: state dimension mismatch");
    FullVector w = vectors_.transpose().cast<cplx>() * in;
    for (Eigen::Index k = 0; k < w.size(); ++k) w(k) *= std::exp(-kI * (energies_(k) * t));
    return vectors_.cast<cplx>() * w;
  }

 private:
  Eigen::MatrixXd h_;
  Eigen::VectorXd energies_;
  Eigen::MatrixXd vectors_;
};

inline FullVector embed(const SystemState& s) {
  FullVector v = FullVector::Zero(kDimension);
  s.for_each([&](const BasisLabel& l, const cplx& amp) { v(index_of(l)) += amp; });
  return v;
}

// Amplitudes on the subspace labels, plus the norm found outside them.
inline std::pair<SystemState, double> extract(const FullVector& v) {
  SystemState s;
  std::vector<char> used(kDimension, 0);
  s.for_each([&](const BasisLabel& l, cplx& amp) {
    const int i = index_of(l);
    amp = v(i);
    used[static_cast<std::size_t>(i)] = 1;
  });
  double outside = 0.0;
  for (int i = 0; i < kDimension; ++i) {
    if (!used[static_cast<std::size_t>(i)]) outside += std::norm(v(i));
  }
  return {s, std::sqrt(outside)};
}

inline double syndrome_probability(const FullVector& v, Syndrome s) {
  double p = 0.0;
  for (int i = 0; i < kDimension; ++i) {
    if (((i >> 1) & 1) == s.ancilla_a_bit() && (i & 1) == s.ancilla_b_bit()) p += std::norm(v(i));
  }
  return p;
}

// Project the ancillas, renormalize, trace out the resonators.
inline Eigen::Matrix4cd reduced_density(const FullVector& v, Syndrome s) {
  const double p = syndrome_probability(v, s);
  if (p < 1e-300) throw std::domain_error("oracle: zero-probability branch");
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  const int anc = 2 * s.ancilla_a_bit() + s.ancilla_b_bit();
  for (int r = 0; r < 81; ++r) {
    Eigen::Vector4cd x;
    for (int d = 0; d < 4; ++d) x(d) = v(16 * r + 4 * d + anc);
    rho += x * x.adjoint();
  }
  return rho / p;
}

}  // namespace jtcsim::oracle
