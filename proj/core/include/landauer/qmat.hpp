// Copyright 2026 The Landauer Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "landauer/errors.hpp"

namespace landauer::qmat {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Seeded generator used everywhere randomness is needed. Passed by
/// reference; never shared across threads.
using Rng = std::mt19937_64;

/// Relative threshold below which an eigenvalue counts as exactly zero for
/// support questions (faithfulness, kernels, 0 log 0).
inline constexpr double kSupportClip = 1e-14;

/// Hermitian matrix, symmetrized as (M + M^dagger) / 2 on construction.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(ComplexMatrix m);

  static HermitianOperator zero(std::size_t dim);
  static HermitianOperator identity(std::size_t dim);
  static HermitianOperator diagonal(const std::vector<double>& values);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }

  HermitianOperator operator+(const HermitianOperator& o) const;
  HermitianOperator operator-(const HermitianOperator& o) const;
  HermitianOperator operator*(double s) const;
  friend HermitianOperator operator*(double s, const HermitianOperator& h) {
    return h * s;
  }

  double trace() const { return m_.trace().real(); }
  /// Re tr(this * other); exact for Hermitian pairs.
  double expectation(const HermitianOperator& other) const;

 private:
  ComplexMatrix m_;
};

/// Positive semidefinite unit-trace Hermitian matrix.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  /// Validates eigenvalues >= -1e-12 and |tr - 1| <= 1e-12.
  explicit DensityMatrix(HermitianOperator h);
  explicit DensityMatrix(ComplexMatrix m)
      : DensityMatrix(HermitianOperator(std::move(m))) {}

  static DensityMatrix maximally_mixed(std::size_t dim);
  static DensityMatrix pure(std::size_t dim, std::size_t index);
  static DensityMatrix diagonal(const std::vector<double>& probabilities);
  /// Normalizes a positive semidefinite matrix by its trace.
  static DensityMatrix normalized(const ComplexMatrix& positive);

  std::size_t dim() const { return h_.dim(); }
  const HermitianOperator& hermitian() const { return h_; }
  const ComplexMatrix& matrix() const { return h_.matrix(); }

  /// Expectation value tr(rho A).
  double expect(const HermitianOperator& a) const { return h_.expectation(a); }

 private:
  HermitianOperator h_;
};

class UnitaryOperator {
 public:
  UnitaryOperator() = default;
  /// Validates ||U^dagger U - 1||_max <= 1e-10.
  explicit UnitaryOperator(ComplexMatrix m);

  static UnitaryOperator identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }

  UnitaryOperator operator*(const UnitaryOperator& o) const;
  UnitaryOperator adjoint() const;

  /// Deviation ||U^dagger U - 1||_max.
  double unitarity_defect() const;

 private:
  ComplexMatrix m_;
};

struct EigenDecomposition {
  RealVector values;        ///< descending
  ComplexMatrix vectors;    ///< columns are eigenvectors, unitary
};

/// Sorted (descending, stable by index) eigendecomposition of a Hermitian
/// operator. Throws ConvergenceError if the solver fails.
EigenDecomposition hermitian_eig(const HermitianOperator& h);

/// Descending eigenvalues only.
RealVector eigenvalues(const HermitianOperator& h);

/// V f(Lambda) V^dagger. Throws DomainError if f returns a non-finite value.
HermitianOperator matrix_function(const HermitianOperator& h,
                                  const std::function<double(double)>& f);
HermitianOperator matrix_function(const EigenDecomposition& eig,
                                  const std::function<double(double)>& f);

HermitianOperator matrix_exp(const HermitianOperator& h);
/// Logarithm of a strictly positive operator; throws DomainError when an
/// eigenvalue falls below the support clip.
HermitianOperator matrix_log(const HermitianOperator& h);

/// exp(-i t H) built from the eigendecomposition; unitary to rounding.
UnitaryOperator unitary_exp(const HermitianOperator& h, double t);

/// Kronecker product, left factor major: index i = i_a * dim(b) + i_b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
UnitaryOperator tensor(const UnitaryOperator& a, const UnitaryOperator& b);

enum class Keep { System, Reservoir };

/// Partial trace of an operator on H_S (x) H_R. Keep::System returns tr_R.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t d_s,
                            std::size_t d_r, Keep keep);
DensityMatrix partial_trace(const DensityMatrix& m, std::size_t d_s,
                            std::size_t d_r, Keep keep);

/// U rho U^dagger.
DensityMatrix conjugate(const DensityMatrix& rho, const UnitaryOperator& u);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& m);
double trace_norm(const HermitianOperator& h);

/// i [A, B], Hermitian whenever A and B are.
HermitianOperator commutator_i(const HermitianOperator& a,
                               const HermitianOperator& b);

double max_abs(const ComplexMatrix& m);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
/// of R's diagonal absorbed into Q.
UnitaryOperator haar_unitary(std::size_t dim, Rng& rng);

/// Gaussian unitary ensemble sample scaled so entries have unit variance.
HermitianOperator random_hermitian(std::size_t dim, Rng& rng,
                                   double scale = 1.0);

/// Full-rank Hilbert-Schmidt random state (G G^dagger / tr).
DensityMatrix random_density(std::size_t dim, Rng& rng);

/// True when every eigenvalue exceeds the support clip relative to the
/// largest eigenvalue.
bool is_faithful(const DensityMatrix& rho);

/// l-infinity distance between the sorted spectra of two operators of equal
/// dimension.
double spectrum_distance(const HermitianOperator& a, const HermitianOperator& b);

}  // namespace landauer::qmat
