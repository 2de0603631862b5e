// Copyright 2026 The symex Authors
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


#include "symex/state.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "symex/errors.hpp"

namespace symex {
namespace {

constexpr double kTraceTol = 1e-10;
constexpr double kNormTol = 1e-12;
constexpr double kUnitaryTol = 1e-10;

std::size_t checked_dim(std::size_t n) {
  if (n > 14) {
    throw Error(ErrorKind::DimensionOverflow,
                std::to_string(n) + " qubits exceed the dense ceiling");
  }
  return std::size_t{1} << n;
}

// Offsets of the 2^k local basis states and the indices with every target bit
// cleared.
struct Layout {
  std::vector<Eigen::Index> offsets;
  std::vector<Eigen::Index> bases;
};

Layout make_layout(std::size_t dim, std::span<const std::size_t> qubits) {
  Layout out;
  const std::size_t k = qubits.size();
  std::uint64_t mask = 0;
  for (auto q : qubits) mask |= std::uint64_t{1} << q;
  out.offsets.resize(std::size_t{1} << k);
  for (std::size_t l = 0; l < out.offsets.size(); ++l) {
    std::uint64_t off = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((l >> j) & 1u) off |= std::uint64_t{1} << qubits[j];
    }
    out.offsets[l] = static_cast<Eigen::Index>(off);
  }
  out.bases.reserve(dim >> k);
  for (std::uint64_t b = 0; b < dim; ++b) {
    if ((b & mask) == 0) out.bases.push_back(static_cast<Eigen::Index>(b));
  }
  return out;
}

}  // namespace

PureState::PureState(std::size_t num_qubits, Vector amplitudes)
    : n_(num_qubits), amp_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amp_.size()) != checked_dim(n_)) {
    throw Error(ErrorKind::DimensionMismatch, "amplitude vector has wrong length");
  }
  if (std::abs(amp_.norm() - 1.0) > kNormTol) {
    throw Error(ErrorKind::InvalidState, "state vector is not normalised");
  }
}

PureState PureState::basis(std::size_t num_qubits, std::uint64_t index) {
  const std::size_t dim = checked_dim(num_qubits);
  if (index >= dim) {
    throw Error(ErrorKind::IndexOutOfRange, "basis index outside the space");
  }
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(num_qubits, std::move(v));
}

void PureState::apply(const Matrix& u, std::span<const std::size_t> qubits) {
  check_unitary_on(u, qubits, n_);
  Matrix col = amp_;
  kernels::left_multiply(col, u, qubits);
  amp_ = col.col(0);
}

double PureState::expect(const Observable& obs) const {
  if (obs.num_qubits() != n_) {
    throw Error(ErrorKind::DimensionMismatch, "observable and state differ in size");
  }
  double total = 0.0;
  for (const auto& term : obs.terms()) {
    const auto& p = term.pauli;
    cplx acc = 0.0;
    for (std::uint64_t b = 0; b < dim(); ++b) {
      acc += std::conj(amp_(static_cast<Eigen::Index>(b ^ p.x_mask()))) *
             p.coefficient(b) * amp_(static_cast<Eigen::Index>(b));
    }
    total += term.coefficient * acc.real();
  }
  return total;
}

DensityOperator::DensityOperator(std::size_t num_qubits, Matrix mat)
    : DensityOperator(num_qubits, std::move(mat), true) {}

DensityOperator::DensityOperator(std::size_t num_qubits, Matrix mat,
                                 bool check_hermitian)
    : n_(num_qubits), mat_(std::move(mat)) {
  const auto dim = static_cast<Eigen::Index>(checked_dim(n_));
  if (mat_.rows() != dim || mat_.cols() != dim) {
    throw Error(ErrorKind::DimensionMismatch, "density matrix has wrong shape");
  }
  if (std::abs(mat_.trace() - cplx{1.0, 0.0}) > kTraceTol) {
    throw Error(ErrorKind::InvalidState, "trace differs from one");
  }
  if (check_hermitian && (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > kTraceTol) {
    throw Error(ErrorKind::InvalidState, "density matrix is not Hermitian");
  }
}

DensityOperator DensityOperator::unit_trace(std::size_t num_qubits, Matrix mat) {
  return DensityOperator(num_qubits, std::move(mat), false);
}

DensityOperator DensityOperator::from_pure(const PureState& psi) {
  const Vector& a = psi.amplitudes();
  return DensityOperator(psi.num_qubits(), a * a.adjoint());
}

DensityOperator DensityOperator::maximally_mixed(std::size_t num_qubits) {
  const auto dim = static_cast<Eigen::Index>(checked_dim(num_qubits));
  return DensityOperator(num_qubits,
                         Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

cplx trace_pauli(const Matrix& mat, const PauliString& pauli) {
  const std::size_t dim = std::size_t{1} << pauli.num_qubits();
  if (static_cast<std::size_t>(mat.rows()) != dim ||
      static_cast<std::size_t>(mat.cols()) != dim) {
    throw Error(ErrorKind::DimensionMismatch, "Pauli and matrix differ in size");
  }
  // P|d> = c(d)|d^x>, so Tr(P M) = sum_d c(d) M(d, d^x).
  cplx acc = 0.0;
  const std::uint64_t x = pauli.x_mask();
  for (std::uint64_t d = 0; d < dim; ++d) {
    acc += pauli.coefficient(d) *
           mat(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d ^ x));
  }
  return acc;
}

cplx expect_complex(const DensityOperator& rho, const Observable& obs) {
  if (obs.num_qubits() != rho.num_qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "observable and state differ in size");
  }
  cplx total = 0.0;
  for (const auto& term : obs.terms()) {
    total += term.coefficient * trace_pauli(rho.matrix(), term.pauli);
  }
  return total;
}

double expect(const DensityOperator& rho, const Observable& obs) {
  return expect_complex(rho, obs).real();
}

double fidelity_with_pure(const DensityOperator& rho, const PureState& psi0) {
  if (rho.num_qubits() != psi0.num_qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "state sizes differ");
  }
  const Vector& a = psi0.amplitudes();
  return a.dot(rho.matrix() * a).real();
}

void check_unitary_on(const Matrix& u, std::span<const std::size_t> qubits,
                      std::size_t num_qubits) {
  const auto local = static_cast<Eigen::Index>(std::size_t{1} << qubits.size());
  if (qubits.empty() || u.rows() != local || u.cols() != local) {
    throw Error(ErrorKind::DimensionMismatch,
                "unitary size does not match the qubit list");
  }
  std::uint64_t seen = 0;
  for (auto q : qubits) {
    if (q >= num_qubits) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "qubit " + std::to_string(q) + " outside register");
    }
    if ((seen >> q) & 1u) {
      throw Error(ErrorKind::InvalidArgument, "repeated qubit in target list");
    }
    seen |= std::uint64_t{1} << q;
  }
  const Matrix gram = u.adjoint() * u;
  if ((gram - Matrix::Identity(local, local)).cwiseAbs().maxCoeff() > kUnitaryTol) {
    throw Error(ErrorKind::NotUnitary, "matrix is not unitary to 1e-10");
  }
}

DensityOperator apply_unitary(const DensityOperator& rho, const Matrix& u,
                              std::span<const std::size_t> qubits) {
  check_unitary_on(u, qubits, rho.num_qubits());
  DensityOperator out = rho;
  kernels::conjugate(out.mutable_matrix(), u, qubits);
  return out;
}

namespace kernels {

void left_multiply(Matrix& mat, const Matrix& u,
                   std::span<const std::size_t> qubits) {
  const Layout lay = make_layout(static_cast<std::size_t>(mat.rows()), qubits);
  const auto k = static_cast<Eigen::Index>(lay.offsets.size());
  std::vector<Eigen::Index> rows(lay.offsets.size());
  Matrix block(k, mat.cols());
  for (auto b : lay.bases) {
    for (Eigen::Index l = 0; l < k; ++l) rows[l] = b + lay.offsets[l];
    block = mat(rows, Eigen::all);
    mat(rows, Eigen::all) = u * block;
  }
}

void right_multiply_adjoint(Matrix& mat, const Matrix& u,
                            std::span<const std::size_t> qubits) {
  const Layout lay = make_layout(static_cast<std::size_t>(mat.cols()), qubits);
  const auto k = static_cast<Eigen::Index>(lay.offsets.size());
  std::vector<Eigen::Index> cols(lay.offsets.size());
  const Matrix u_adj = u.adjoint();
  Matrix block(mat.rows(), k);
  for (auto b : lay.bases) {
    for (Eigen::Index l = 0; l < k; ++l) cols[l] = b + lay.offsets[l];
    block = mat(Eigen::all, cols);
    mat(Eigen::all, cols) = block * u_adj;
  }
}

void conjugate(Matrix& mat, const Matrix& u, std::span<const std::size_t> qubits) {
  left_multiply(mat, u, qubits);
  right_multiply_adjoint(mat, u, qubits);
}

}  // namespace kernels
}  // namespace symex
