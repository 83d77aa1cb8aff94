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

// linalg.hpp: dense real-symmetric eigensolver (cyclic Jacobi) and the small
// complex helpers shared by the rest of the library.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace jtcsim {

using cplx = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr cplx kI{0.0, 1.0};
inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Square real matrix whose symmetry is exact (bitwise) by construction.
class RealSymmetricMatrix {
 public:
  explicit RealSymmetricMatrix(Eigen::Index n) : a_(Eigen::MatrixXd::Zero(n, n)) {
    if (n <= 0) throw std::invalid_argument("RealSymmetricMatrix: dimension must be positive");
  }

  explicit RealSymmetricMatrix(Eigen::MatrixXd a) : a_(std::move(a)) {
    if (a_.rows() != a_.cols() || a_.rows() == 0) {
      throw std::invalid_argument("RealSymmetricMatrix: matrix must be square and non-empty");
    }
    for (Eigen::Index i = 0; i < a_.rows(); ++i) {
      for (Eigen::Index j = 0; j < a_.cols(); ++j) {
        if (!std::isfinite(a_(i, j))) {
          throw std::invalid_argument("RealSymmetricMatrix: non-finite entry");
        }
        if (a_(i, j) != a_(j, i)) {
          throw std::invalid_argument("RealSymmetricMatrix: matrix is not exactly symmetric");
        }
      }
    }
  }

  // Writes both (i, j) and (j, i).
  void set(Eigen::Index i, Eigen::Index j, double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("RealSymmetricMatrix: non-finite entry");
    a_(i, j) = value;
    a_(j, i) = value;
  }

  double operator()(Eigen::Index i, Eigen::Index j) const { return a_(i, j); }
  Eigen::Index dimension() const noexcept { return a_.rows(); }
  const Eigen::MatrixXd& matrix() const noexcept { return a_; }

 private:
  Eigen::MatrixXd a_;
};

// Eigenvalues ascending; column mu of `eigenvectors` is the eigenvector of
// eigenvalues[mu], i.e. eigenvectors(k, mu) is its k-th basis coefficient.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  int sweeps = 0;

  Eigen::Index dimension() const noexcept { return eigenvalues.size(); }
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(int sweeps, double off_diagonal_norm)
      : std::runtime_error("jacobi_eigendecompose: no convergence after " + std::to_string(sweeps) +
                           " sweeps, off-diagonal norm " + std::to_string(off_diagonal_norm)),
        sweeps_(sweeps),
        residual_(off_diagonal_norm) {}

  int sweeps() const noexcept { return sweeps_; }
  double residual() const noexcept { return residual_; }

 private:
  int sweeps_;
  double residual_;
};

namespace detail {

inline double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < j; ++i) sum += 2.0 * a(i, j) * a(i, j);
  }
  return std::sqrt(sum);
}

}  // namespace detail

// Cyclic Jacobi with row-major sweeps over the upper triangle. Converged when
// the off-diagonal Frobenius norm drops below tol * ||A||_F. Eigenvectors are
// sign-normalized so that the first component with magnitude above 1e-10 is
// positive.
inline SpectralDecomposition jacobi_eigendecompose(const RealSymmetricMatrix& input,
                                                   double tol = 1e-14, int max_sweeps = 100) {
  if (!(tol > 0.0)) throw std::invalid_argument("jacobi_eigendecompose: tol must be positive");
  const Eigen::Index n = input.dimension();
  Eigen::MatrixXd a = input.matrix();
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

  const double scale = a.norm();
  const double threshold = tol * (scale > 0.0 ? scale : 1.0);

  int sweep = 0;
  double off = detail::off_diagonal_norm(a);
  while (off > threshold) {
    if (sweep == max_sweeps) throw ConvergenceError(sweep, off);
    ++sweep;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Negligible element after the first few sweeps: drop it.
        if (sweep > 4 && std::abs(app) + 100.0 * std::abs(apq) == std::abs(app) &&
            std::abs(aqq) + 100.0 * std::abs(apq) == std::abs(aqq)) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    off = detail::off_diagonal_norm(a);
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  out.sweeps = sweep;
  for (Eigen::Index mu = 0; mu < n; ++mu) {
    const Eigen::Index src = order[static_cast<std::size_t>(mu)];
    out.eigenvalues(mu) = a(src, src);
    Eigen::VectorXd col = v.col(src);
    for (Eigen::Index k = 0; k < n; ++k) {
      if (std::abs(col(k)) > 1e-10) {
        if (col(k) < 0.0) col = -col;
        break;
      }
    }
    out.eigenvectors.col(mu) = col;
  }
  return out;
}

inline bool hermitian_check(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_check: matrix must be square");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    }
  }
  return true;
}

// Eigenvalues of a Hermitian matrix via the real-symmetric embedding
// [[Re, -Im], [Im, Re]], whose spectrum is that of M with every value doubled.
inline Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
  const Eigen::Index n = m.rows();
  RealSymmetricMatrix embed(2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      // Symmetrize explicitly so round-off asymmetry in M never reaches the solver.
      const cplx h = 0.5 * (m(i, j) + std::conj(m(j, i)));
      embed.set(i, j, h.real());
      embed.set(n + i, n + j, h.real());
      embed.set(i, n + j, -h.imag());
      embed.set(j, n + i, h.imag());
    }
  }
  const SpectralDecomposition d = jacobi_eigendecompose(embed);
  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) out(i) = d.eigenvalues(2 * i);
  return out;
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace jtcsim
