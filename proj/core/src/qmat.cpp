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

#include "landauer/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace landauer::qmat {

namespace {

constexpr double kDensityEigTol = 1e-12;
constexpr double kDensityTraceTol = 1e-12;
constexpr double kUnitaryTol = 1e-10;

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": expected a square matrix, got " << m.rows() << "x"
       << m.cols();
    throw DimensionError(os.str());
  }
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw DomainError(std::string(what) + ": non-finite entry");
  }
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DimensionError(os.str());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// HermitianOperator

HermitianOperator::HermitianOperator(ComplexMatrix m) : m_(std::move(m)) {
  require_square(m_, "HermitianOperator");
  require_finite(m_, "HermitianOperator");
  ComplexMatrix sym = 0.5 * (m_ + m_.adjoint());
  m_ = std::move(sym);
}

HermitianOperator HermitianOperator::zero(std::size_t dim) {
  return HermitianOperator(ComplexMatrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
  return HermitianOperator(ComplexMatrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::diagonal(const std::vector<double>& values) {
  ComplexMatrix m = ComplexMatrix::Zero(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return HermitianOperator(std::move(m));
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& o) const {
  require_same_dim(dim(), o.dim(), "HermitianOperator::operator+");
  return HermitianOperator(m_ + o.m_);
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& o) const {
  require_same_dim(dim(), o.dim(), "HermitianOperator::operator-");
  return HermitianOperator(m_ - o.m_);
}

HermitianOperator HermitianOperator::operator*(double s) const {
  return HermitianOperator(m_ * s);
}

double HermitianOperator::expectation(const HermitianOperator& other) const {
  require_same_dim(dim(), other.dim(), "HermitianOperator::expectation");
  // tr(A B) = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij) for Hermitian B.
  return (m_.array() * other.m_.array().conjugate()).sum().real();
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(HermitianOperator h) : h_(std::move(h)) {
  const double tr = h_.trace();
  if (std::abs(tr - 1.0) > kDensityTraceTol) {
    std::ostringstream os;
    os.precision(17);
    os << "DensityMatrix: trace " << tr << " differs from 1";
    throw DomainError(os.str());
  }
  const RealVector ev = eigenvalues(h_);
  if (ev.size() > 0 && ev(ev.size() - 1) < -kDensityEigTol) {
    std::ostringstream os;
    os.precision(17);
    os << "DensityMatrix: negative eigenvalue " << ev(ev.size() - 1);
    throw DomainError(os.str());
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(
      HermitianOperator(ComplexMatrix::Identity(dim, dim) / double(dim)));
}

DensityMatrix DensityMatrix::pure(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("DensityMatrix::pure: index out of range");
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  m(index, index) = 1.0;
  return DensityMatrix(HermitianOperator(std::move(m)));
}

DensityMatrix DensityMatrix::diagonal(const std::vector<double>& probabilities) {
  return DensityMatrix(HermitianOperator::diagonal(probabilities));
}

DensityMatrix DensityMatrix::normalized(const ComplexMatrix& positive) {
  require_square(positive, "DensityMatrix::normalized");
  const double tr = positive.trace().real();
  if (!(tr > 0.0)) throw DomainError("DensityMatrix::normalized: non-positive trace");
  return DensityMatrix(HermitianOperator(positive / tr));
}

// ---------------------------------------------------------------------------
// UnitaryOperator

UnitaryOperator::UnitaryOperator(ComplexMatrix m) : m_(std::move(m)) {
  require_square(m_, "UnitaryOperator");
  require_finite(m_, "UnitaryOperator");
  const double defect = unitarity_defect();
  if (defect > kUnitaryTol) {
    std::ostringstream os;
    os << "UnitaryOperator: ||U^dagger U - 1||_max = " << defect;
    throw DomainError(os.str());
  }
}

UnitaryOperator UnitaryOperator::identity(std::size_t dim) {
  return UnitaryOperator(ComplexMatrix::Identity(dim, dim));
}

UnitaryOperator UnitaryOperator::operator*(const UnitaryOperator& o) const {
  require_same_dim(dim(), o.dim(), "UnitaryOperator::operator*");
  return UnitaryOperator(m_ * o.m_);
}

UnitaryOperator UnitaryOperator::adjoint() const {
  return UnitaryOperator(m_.adjoint());
}

double UnitaryOperator::unitarity_defect() const {
  const ComplexMatrix g = m_.adjoint() * m_;
  return max_abs(g - ComplexMatrix::Identity(m_.rows(), m_.cols()));
}

// ---------------------------------------------------------------------------
// Spectral machinery

namespace {

bool is_real(const ComplexMatrix& m) { return m.imag().cwiseAbs().maxCoeff() == 0.0; }

// Sorts an ascending solver result into descending order (stable in ties).
template <typename Vectors>
EigenDecomposition descending(const RealVector& asc, const Vectors& vectors) {
  const Eigen::Index n = asc.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return asc(a) > asc(b); });
  EigenDecomposition out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = asc(order[static_cast<std::size_t>(k)]);
    out.vectors.col(k) = vectors.col(order[static_cast<std::size_t>(k)]).template cast<Complex>();
  }
  return out;
}

}  // namespace

EigenDecomposition hermitian_eig(const HermitianOperator& h) {
  if (h.dim() == 0) return {};
  // Real symmetric input takes the cheaper real solver.
  if (is_real(h.matrix())) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix().real());
    if (solver.info() != Eigen::Success) {
      throw ConvergenceError("hermitian_eig: eigensolver did not converge");
    }
    return descending(solver.eigenvalues(), solver.eigenvectors());
  }
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("hermitian_eig: eigensolver did not converge");
  }
  return descending(solver.eigenvalues(), solver.eigenvectors());
}

RealVector eigenvalues(const HermitianOperator& h) {
  if (h.dim() == 0) return {};
  if (is_real(h.matrix())) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix().real(),
                                                                Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw ConvergenceError("eigenvalues: eigensolver did not converge");
    }
    return solver.eigenvalues().reverse();
  }
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix(),
                                                            Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("eigenvalues: eigensolver did not converge");
  }
  return solver.eigenvalues().reverse();
}

HermitianOperator matrix_function(const EigenDecomposition& eig,
                                  const std::function<double(double)>& f) {
  const Eigen::Index n = eig.values.size();
  RealVector fv(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    fv(k) = f(eig.values(k));
    if (!std::isfinite(fv(k))) {
      std::ostringstream os;
      os.precision(17);
      os << "matrix_function: f undefined at eigenvalue " << eig.values(k);
      throw DomainError(os.str());
    }
  }
  return HermitianOperator(eig.vectors * fv.asDiagonal() * eig.vectors.adjoint());
}

HermitianOperator matrix_function(const HermitianOperator& h,
                                  const std::function<double(double)>& f) {
  return matrix_function(hermitian_eig(h), f);
}

HermitianOperator matrix_exp(const HermitianOperator& h) {
  return matrix_function(h, [](double x) { return std::exp(x); });
}

HermitianOperator matrix_log(const HermitianOperator& h) {
  const EigenDecomposition eig = hermitian_eig(h);
  const double top = eig.values.size() > 0 ? eig.values(0) : 0.0;
  const double floor = kSupportClip * std::max(top, 0.0);
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    if (!(eig.values(k) > floor)) {
      throw DomainError("matrix_log: operator is not strictly positive");
    }
  }
  return matrix_function(eig, [](double x) { return std::log(x); });
}

UnitaryOperator unitary_exp(const HermitianOperator& h, double t) {
  const EigenDecomposition eig = hermitian_eig(h);
  const Eigen::Index n = eig.values.size();
  Eigen::VectorXcd phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    phases(k) = std::polar(1.0, -t * eig.values(k));
  }
  return UnitaryOperator(eig.vectors * phases.asDiagonal() * eig.vectors.adjoint());
}

// ---------------------------------------------------------------------------
// Tensor structure

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator(tensor(a.matrix(), b.matrix()));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(HermitianOperator(tensor(a.matrix(), b.matrix())));
}

UnitaryOperator tensor(const UnitaryOperator& a, const UnitaryOperator& b) {
  return UnitaryOperator(tensor(a.matrix(), b.matrix()));
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t d_s,
                            std::size_t d_r, Keep keep) {
  require_square(m, "partial_trace");
  if (static_cast<std::size_t>(m.rows()) != d_s * d_r) {
    std::ostringstream os;
    os << "partial_trace: matrix dimension " << m.rows() << " != " << d_s << "*"
       << d_r;
    throw DimensionError(os.str());
  }
  const auto ds = static_cast<Eigen::Index>(d_s);
  const auto dr = static_cast<Eigen::Index>(d_r);
  if (keep == Keep::System) {
    ComplexMatrix out(ds, ds);
    for (Eigen::Index i = 0; i < ds; ++i) {
      for (Eigen::Index j = 0; j < ds; ++j) {
        out(i, j) = m.block(i * dr, j * dr, dr, dr).trace();
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dr, dr);
  for (Eigen::Index s = 0; s < ds; ++s) {
    out += m.block(s * dr, s * dr, dr, dr);
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& m, std::size_t d_s,
                            std::size_t d_r, Keep keep) {
  return DensityMatrix(HermitianOperator(partial_trace(m.matrix(), d_s, d_r, keep)));
}

DensityMatrix conjugate(const DensityMatrix& rho, const UnitaryOperator& u) {
  require_same_dim(rho.dim(), u.dim(), "conjugate");
  return DensityMatrix(
      HermitianOperator(u.matrix() * rho.matrix() * u.matrix().adjoint()));
}

// ---------------------------------------------------------------------------
// Norms and small helpers

double trace_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  const Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

double trace_norm(const HermitianOperator& h) {
  if (h.dim() == 0) return 0.0;
  return eigenvalues(h).cwiseAbs().sum();
}

HermitianOperator commutator_i(const HermitianOperator& a,
                               const HermitianOperator& b) {
  require_same_dim(a.dim(), b.dim(), "commutator_i");
  const ComplexMatrix ab = a.matrix() * b.matrix();
  return HermitianOperator(Complex(0.0, 1.0) * (ab - ab.adjoint()));
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_faithful(const DensityMatrix& rho) {
  const RealVector ev = eigenvalues(rho.hermitian());
  if (ev.size() == 0) return false;
  return ev(ev.size() - 1) > kSupportClip * ev(0);
}

double spectrum_distance(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a.dim(), b.dim(), "spectrum_distance");
  if (a.dim() == 0) return 0.0;
  return (eigenvalues(a) - eigenvalues(b)).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// Random instances

namespace {

ComplexMatrix ginibre(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  const double s = 1.0 / std::sqrt(2.0);
  // Column-major fill order is part of the determinism contract.
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re * s, im * s);
    }
  }
  return g;
}

}  // namespace

UnitaryOperator haar_unitary(std::size_t dim, Rng& rng) {
  if (dim == 0) throw DimensionError("haar_unitary: dim must be >= 1");
  const ComplexMatrix g = ginibre(dim, rng);
  const Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    const Complex phase = mag > 0.0 ? d / mag : Complex(1.0, 0.0);
    q.col(k) *= phase;
  }
  return UnitaryOperator(std::move(q));
}

HermitianOperator random_hermitian(std::size_t dim, Rng& rng, double scale) {
  const ComplexMatrix g = ginibre(dim, rng);
  return HermitianOperator((g + g.adjoint()) * (scale / std::sqrt(2.0)));
}

DensityMatrix random_density(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = ginibre(dim, rng);
  return DensityMatrix::normalized(g * g.adjoint());
}

}  // namespace landauer::qmat
