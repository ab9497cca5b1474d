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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace landauer::qmat {
namespace {

ComplexMatrix diag(std::initializer_list<double> v) {
  return HermitianOperator::diagonal(std::vector<double>(v)).matrix();
}

TEST(Tensor, IdentityTimesIdentity) {
  EXPECT_EQ(tensor(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)),
            ComplexMatrix::Identity(4, 4));
}

TEST(Tensor, DiagonalCaseUsesLeftFactorMajorIndex) {
  const double p = 0.3;
  EXPECT_LT(oracle::max_abs(tensor(diag({1, 0}), diag({p, 1 - p})) - diag({p, 1 - p, 0, 0})),
            1e-15);
}

TEST(Tensor, MatchesIndexLoopOracle) {
  Rng rng(3);
  const auto a = oracle::random_hermitian(3, rng);
  const auto b = oracle::random_hermitian(2, rng);
  EXPECT_LT(oracle::max_abs(tensor(a, b) - oracle::kron(a, b)), 1e-15);
}

TEST(Tensor, ProductOfHaarUnitariesIsUnitary) {
  Rng rng(11);
  const auto u = tensor(haar_unitary(3, rng), haar_unitary(4, rng));
  const ComplexMatrix defect = u.matrix().adjoint() * u.matrix() - ComplexMatrix::Identity(12, 12);
  EXPECT_LE(oracle::max_abs(defect), 1e-10);
}

TEST(Tensor, Associative) {
  Rng rng(5);
  const auto a = oracle::random_hermitian(2, rng);
  const auto b = oracle::random_hermitian(3, rng);
  const auto c = oracle::random_hermitian(2, rng);
  EXPECT_LT(oracle::max_abs(tensor(tensor(a, b), c) - tensor(a, tensor(b, c))), 1e-14);
}

TEST(PartialTrace, ProductStates) {
  Rng rng(7);
  const auto rho = random_density(3, rng);
  const auto nu = random_density(4, rng);
  const auto joint = tensor(rho, nu);
  EXPECT_LT(oracle::max_abs(partial_trace(joint, 3, 4, Keep::System).matrix() - rho.matrix()),
            1e-15);
  EXPECT_LT(oracle::max_abs(partial_trace(joint, 3, 4, Keep::Reservoir).matrix() - nu.matrix()),
            1e-15);
}

TEST(PartialTrace, BellStateMarginalIsMaximallyMixed) {
  ComplexMatrix psi = ComplexMatrix::Zero(4, 1);
  psi(0, 0) = psi(3, 0) = 1.0 / std::sqrt(2.0);
  const ComplexMatrix bell = psi * psi.adjoint();
  const ComplexMatrix m = partial_trace(bell, 2, 2, Keep::System);
  EXPECT_LT(oracle::max_abs(m - oracle::partial_trace(bell, 2, 2, true)), 1e-16);
  EXPECT_LT(oracle::max_abs(m - 0.5 * ComplexMatrix::Identity(2, 2)), 1e-15);
}

TEST(PartialTrace, MatchesIndexLoopOracleOnRandomOperator) {
  Rng rng(9);
  const auto m = oracle::random_hermitian(12, rng);
  for (auto [ds, dr] : {std::pair<std::size_t, std::size_t>{3, 4}, {4, 3}, {2, 6}}) {
    EXPECT_LT(oracle::max_abs(partial_trace(m, ds, dr, Keep::System) -
                              oracle::partial_trace(m, ds, dr, true)),
              1e-14);
    EXPECT_LT(oracle::max_abs(partial_trace(m, ds, dr, Keep::Reservoir) -
                              oracle::partial_trace(m, ds, dr, false)),
              1e-14);
  }
}

TEST(PartialTrace, OfTensorIsScaledLeftFactor) {
  Rng rng(13);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = ComplexMatrix::Random(3, 3);
    const ComplexMatrix b = ComplexMatrix::Random(2, 2);
    EXPECT_LE(oracle::max_abs(partial_trace(tensor(a, b), 3, 2, Keep::System) - b.trace() * a),
              1e-12);
  }
}

TEST(PartialTrace, RejectsWrongShape) {
  EXPECT_THROW(partial_trace(ComplexMatrix::Identity(5, 5), 2, 2, Keep::System), DimensionError);
}

TEST(HermitianEig, DiagonalIsSortedDescending) {
  const auto e = hermitian_eig(HermitianOperator::diagonal({3, 1, 2}));
  EXPECT_DOUBLE_EQ(e.values(0), 3);
  EXPECT_DOUBLE_EQ(e.values(1), 2);
  EXPECT_DOUBLE_EQ(e.values(2), 1);
}

TEST(HermitianEig, PauliX) {
  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;
  const auto v = eigenvalues(HermitianOperator(x));
  EXPECT_NEAR(v(0), 1.0, 1e-15);
  EXPECT_NEAR(v(1), -1.0, 1e-15);
}

TEST(HermitianEig, RandomReconstructionAndTrace) {
  Rng rng(17);
  const HermitianOperator h = random_hermitian(16, rng);
  const auto e = hermitian_eig(h);
  const ComplexMatrix back = e.vectors * e.values.asDiagonal() * e.vectors.adjoint();
  EXPECT_LE(oracle::max_abs(back - h.matrix()), 1e-11);
  EXPECT_LE(std::abs(e.values.sum() - h.trace()), 1e-11 * 16);
  const auto ref = oracle::spectrum(h.matrix());
  for (int i = 0; i < 16; ++i) EXPECT_NEAR(e.values(i), ref[i], 1e-11);
}

TEST(HermitianEig, RealSymmetricInputMatchesComplexPath) {
  Rng rng(19);
  const HermitianOperator h = random_hermitian(8, rng);
  const HermitianOperator real(ComplexMatrix(h.matrix().real().cast<Complex>()));
  const auto e = hermitian_eig(real);
  const ComplexMatrix back = e.vectors * e.values.asDiagonal() * e.vectors.adjoint();
  EXPECT_LE(oracle::max_abs(back - real.matrix()), 1e-12);
  const auto ref = oracle::spectrum(real.matrix());
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(e.values(i), ref[i], 1e-12);
}

TEST(HermitianEig, TiesKeepIndexOrder) {
  const auto e = hermitian_eig(HermitianOperator::diagonal({1, 2, 1}));
  EXPECT_NEAR(std::abs(e.vectors(0, 1)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(e.vectors(2, 2)), 1.0, 1e-15);
}

TEST(MatrixFunction, ExpOfDiagonal) {
  const auto e = matrix_exp(HermitianOperator::diagonal({0, 1}));
  EXPECT_LT(oracle::max_abs(e.matrix() - diag({1, std::numbers::e})), 1e-15);
}

TEST(MatrixFunction, MatchesPadeExponential) {
  Rng rng(23);
  const HermitianOperator h = random_hermitian(6, rng, 0.5);
  EXPECT_LE(oracle::max_abs(matrix_exp(h).matrix() - oracle::expm(h.matrix())), 1e-12);
}

TEST(MatrixFunction, LogInvertsExp) {
  Rng rng(29);
  for (int k = 0; k < 10; ++k) {
    HermitianOperator h = random_hermitian(5, rng);
    const double norm = std::abs(eigenvalues(h)(0));
    h = h * (5.0 / std::max(norm, 5.0));
    EXPECT_LE(oracle::max_abs(matrix_log(matrix_exp(h)).matrix() - h.matrix()), 1e-10);
  }
}

TEST(MatrixFunction, IdentityFunctionReproducesInput) {
  Rng rng(31);
  const HermitianOperator h = random_hermitian(7, rng);
  EXPECT_LE(oracle::max_abs(matrix_function(h, [](double x) { return x; }).matrix() - h.matrix()),
            1e-12);
}

TEST(MatrixFunction, GibbsOfTwoLevelSystem) {
  const double z = 1.0 + std::exp(-1.0);
  const auto e = matrix_exp(HermitianOperator::diagonal({0, 1}) * -1.0);
  const ComplexMatrix g = e.matrix() / e.trace();
  EXPECT_LT(oracle::max_abs(g - diag({1.0 / z, std::exp(-1.0) / z})), 1e-15);
}

TEST(MatrixFunction, LogRejectsSingular) {
  EXPECT_THROW(matrix_log(HermitianOperator::diagonal({1, 0})), DomainError);
}

TEST(MatrixFunction, NonFiniteValueThrows) {
  EXPECT_THROW(matrix_function(HermitianOperator::diagonal({1, -1}),
                               [](double x) { return std::log(x); }),
               DomainError);
}

TEST(UnitaryExp, MatchesPadeExponential) {
  Rng rng(37);
  const HermitianOperator h = random_hermitian(6, rng);
  const ComplexMatrix ref = oracle::expm(Complex(0, -0.7) * h.matrix());
  EXPECT_LE(oracle::max_abs(unitary_exp(h, 0.7).matrix() - ref), 1e-12);
}

TEST(TraceNorm, Examples) {
  Rng rng(41);
  EXPECT_NEAR(trace_norm(random_density(4, rng).hermitian()), 1.0, 1e-14);
  EXPECT_NEAR(trace_norm(diag({1, -1})), 2.0, 1e-15);
  const auto a = DensityMatrix::maximally_mixed(2);
  const auto b = DensityMatrix::diagonal({0.75, 0.25});
  EXPECT_NEAR(trace_norm(ComplexMatrix(a.matrix() - b.matrix())), 0.5, 1e-15);
}

TEST(TraceNorm, TriangleInequalityAndSvdOracle) {
  Rng rng(43);
  for (int k = 0; k < 50; ++k) {
    const ComplexMatrix a = ComplexMatrix::Random(4, 4);
    const ComplexMatrix b = ComplexMatrix::Random(4, 4);
    EXPECT_LE(trace_norm(ComplexMatrix(a + b)), trace_norm(a) + trace_norm(b) + 1e-10);
    EXPECT_NEAR(trace_norm(a), oracle::trace_norm(a), 1e-12);
  }
}

TEST(Haar, SameSeedIsBitIdentical) {
  Rng a(99), b(99);
  EXPECT_EQ(haar_unitary(5, a).matrix(), haar_unitary(5, b).matrix());
}

TEST(Haar, UnitaryToRounding) {
  Rng rng(47);
  for (int k = 0; k < 20; ++k) EXPECT_LE(haar_unitary(8, rng).unitarity_defect(), 1e-10);
}

TEST(Haar, FirstMomentIsOneOverDimension) {
  Rng rng(53);
  double mean = 0.0;
  const int samples = 10000;
  for (int k = 0; k < samples; ++k) mean += std::norm(haar_unitary(4, rng).matrix()(0, 0));
  EXPECT_NEAR(mean / samples, 0.25, 0.01);
}

TEST(Operators, HermitianIsSymmetrizedOnConstruction) {
  ComplexMatrix m(2, 2);
  m << 1, Complex(0, 1), 0, 2;
  const HermitianOperator h(m);
  EXPECT_EQ(h.matrix(), h.matrix().adjoint());
  EXPECT_EQ(h.matrix()(0, 1), Complex(0, 0.5));
}

TEST(Operators, DensityValidation) {
  EXPECT_THROW(DensityMatrix::diagonal({0.6, 0.6}), DomainError);
  EXPECT_THROW(DensityMatrix::diagonal({1.2, -0.2}), DomainError);
  EXPECT_NO_THROW(DensityMatrix::diagonal({1.0, 0.0}));
  EXPECT_THROW(UnitaryOperator(ComplexMatrix::Identity(2, 2) * 2.0), DomainError);
}

TEST(Operators, FaithfulnessUsesRelativeClip) {
  EXPECT_TRUE(is_faithful(DensityMatrix::diagonal({1 - 1e-12, 1e-12})));
  EXPECT_FALSE(is_faithful(DensityMatrix::diagonal({1 - 1e-16, 1e-16})));
  EXPECT_FALSE(is_faithful(DensityMatrix::pure(3, 1)));
}

TEST(Operators, CommutatorOfPaulis) {
  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;
  // i [X, Y] = i (2 i Z) = -2 Z
  const auto c = commutator_i(HermitianOperator(x), HermitianOperator(y));
  EXPECT_LT(oracle::max_abs(c.matrix() + 2.0 * z), 1e-15);
}

TEST(Operators, SpectrumDistance) {
  EXPECT_NEAR(spectrum_distance(HermitianOperator::diagonal({0.1, 0.9}),
                                HermitianOperator::diagonal({0.85, 0.15})),
              0.05, 1e-15);
  EXPECT_THROW(spectrum_distance(HermitianOperator::identity(2), HermitianOperator::identity(3)),
               DimensionError);
}

}  // namespace
}  // namespace landauer::qmat
