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

#include "landauer/harness/models.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace landauer::harness {

using qmat::Complex;
using qmat::ComplexMatrix;
using qmat::HermitianOperator;

ComplexMatrix pauli(Pauli p) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  switch (p) {
    case Pauli::I:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case Pauli::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case Pauli::Y:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    case Pauli::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

ComplexMatrix site_operator(std::size_t n, std::size_t site, Pauli p) {
  if (site >= n) throw DimensionError("site_operator: site out of range");
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (std::size_t k = 0; k < n; ++k) {
    out = qmat::tensor(out, k == site ? pauli(p) : pauli(Pauli::I));
  }
  return out;
}

namespace {

void check_chain_size(std::size_t n) {
  if (n == 0) throw DimensionError("spin chain: need at least one site");
  if (n > 12 || (std::size_t{1} << n) > kMaxReservoirDim) {
    std::ostringstream os;
    os << "spin chain: 2^" << n << " levels exceed the cap of " << kMaxReservoirDim;
    throw DimensionError(os.str());
  }
}

}  // namespace

HermitianOperator spin_chain_hamiltonian(std::size_t n, const std::vector<double>& j,
                                         const std::vector<double>& h) {
  check_chain_size(n);
  if (j.size() + 1 != n || h.size() != n) {
    throw DimensionError("spin_chain_hamiltonian: need n-1 couplings and n fields");
  }
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    m += 0.5 * j[k] *
         (site_operator(n, k, Pauli::X) * site_operator(n, k + 1, Pauli::X) +
          site_operator(n, k, Pauli::Y) * site_operator(n, k + 1, Pauli::Y));
  }
  for (std::size_t k = 0; k < n; ++k) m += 0.5 * h[k] * site_operator(n, k, Pauli::Z);
  return HermitianOperator(std::move(m));
}

ReservoirSpec spin_chain_reservoir(std::size_t n, const std::vector<double>& j,
                                   const std::vector<double>& h, double beta) {
  return ReservoirSpec(spin_chain_hamiltonian(n, j, h), beta);
}

ReservoirSpec single_level_reservoir(double gap, double beta) {
  return ReservoirSpec(HermitianOperator::diagonal({0.0, gap}), beta);
}

std::vector<double> default_chain_couplings(std::size_t n) {
  std::vector<double> j;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    j.push_back(1.0 + 0.1 * std::sqrt(static_cast<double>(k) + 2.0));
  }
  return j;
}

std::vector<double> default_chain_fields(std::size_t n) {
  std::vector<double> h;
  for (std::size_t k = 0; k < n; ++k) {
    h.push_back(0.5 + std::fmod(0.3 * std::sqrt(static_cast<double>(k) + 3.0), 1.0));
  }
  return h;
}

double min_level_spacing(const HermitianOperator& h) {
  const qmat::RealVector ev = qmat::eigenvalues(h);
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k + 1 < ev.size(); ++k) gap = std::min(gap, ev(k) - ev(k + 1));
  return std::isfinite(gap) ? gap : 0.0;
}

HermitianOperator qubit_chain_coupling(std::size_t n_chain, std::size_t site,
                                       CouplingKind kind) {
  const ComplexMatrix xx = qmat::tensor(pauli(Pauli::X), site_operator(n_chain, site, Pauli::X));
  if (kind == CouplingKind::XX) return HermitianOperator(xx);
  const ComplexMatrix yy = qmat::tensor(pauli(Pauli::Y), site_operator(n_chain, site, Pauli::Y));
  return HermitianOperator(0.5 * (xx + yy));
}

ProcessInstance random_process_instance(qmat::Rng& rng, bool saturating) {
  static constexpr std::size_t kSystemDims[] = {2, 3, 4};
  static constexpr std::size_t kReservoirDims[] = {2, 4, 8};
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_real_distribution<double> beta_dist(0.2, 2.0);
  const std::size_t d_s = kSystemDims[pick(rng)];
  const std::size_t d_r = kReservoirDims[pick(rng)];
  const double beta = beta_dist(rng);
  ReservoirSpec reservoir(qmat::random_hermitian(d_r, rng), beta);
  qmat::DensityMatrix rho_i = qmat::random_density(d_s, rng);
  qmat::UnitaryOperator u;
  if (saturating) {
    const qmat::UnitaryOperator u_s = qmat::haar_unitary(d_s, rng);
    const qmat::EigenDecomposition eig = qmat::hermitian_eig(reservoir.hamiltonian());
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.141592653589793);
    Eigen::VectorXcd ph(static_cast<Eigen::Index>(d_r));
    for (Eigen::Index k = 0; k < ph.size(); ++k) ph(k) = std::polar(1.0, angle(rng));
    const qmat::UnitaryOperator w(eig.vectors * ph.asDiagonal() * eig.vectors.adjoint());
    u = qmat::tensor(u_s, w);
  } else {
    u = qmat::haar_unitary(d_s * d_r, rng);
  }
  return {std::move(rho_i), std::move(reservoir), std::move(u), saturating};
}

}  // namespace landauer::harness
