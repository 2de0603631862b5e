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


#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "symex/pauli.hpp"

namespace symex {

/// Normalised state vector on n qubits.
class PureState {
 public:
  PureState() = default;
  /// Throws InvalidState unless the 2-norm is 1 to 1e-12.
  PureState(std::size_t num_qubits, Vector amplitudes);

  /// Computational basis state |index>.
  static PureState basis(std::size_t num_qubits, std::uint64_t index);

  std::size_t num_qubits() const noexcept { return n_; }
  std::size_t dim() const noexcept { return std::size_t{1} << n_; }
  const Vector& amplitudes() const noexcept { return amp_; }

  /// In-place U on the listed qubits; qubits[k] is bit k of U's local index.
  void apply(const Matrix& u, std::span<const std::size_t> qubits);

  double expect(const Observable& obs) const;

 private:
  std::size_t n_ = 0;
  Vector amp_;
};

/// Unit-trace operator on n qubits. Positivity is never assumed.
class DensityOperator {
 public:
  DensityOperator() = default;
  /// Throws InvalidState unless the trace is 1 and the matrix Hermitian, both
  /// to 1e-10.
  DensityOperator(std::size_t num_qubits, Matrix mat);

  /// Unit trace only. For expanded operators such as Gamma rho / <Gamma>,
  /// which need not be Hermitian.
  static DensityOperator unit_trace(std::size_t num_qubits, Matrix mat);
  static DensityOperator from_pure(const PureState& psi);
  static DensityOperator maximally_mixed(std::size_t num_qubits);

  std::size_t num_qubits() const noexcept { return n_; }
  std::size_t dim() const noexcept { return std::size_t{1} << n_; }
  const Matrix& matrix() const noexcept { return mat_; }
  /// Mutable access for in-place kernels; callers keep the trace at one.
  Matrix& mutable_matrix() noexcept { return mat_; }

 private:
  DensityOperator(std::size_t num_qubits, Matrix mat, bool check_hermitian);

  std::size_t n_ = 0;
  Matrix mat_;
};

/// Tr(P M) for a 2^n x 2^n matrix M, in O(2^n).
cplx trace_pauli(const Matrix& mat, const PauliString& pauli);

/// Tr(O rho) as a complex number; the imaginary part vanishes for Hermitian rho.
cplx expect_complex(const DensityOperator& rho, const Observable& obs);

double expect(const DensityOperator& rho, const Observable& obs);

/// <psi0| rho |psi0>, real part.
double fidelity_with_pure(const DensityOperator& rho, const PureState& psi0);

DensityOperator apply_unitary(const DensityOperator& rho, const Matrix& u,
                              std::span<const std::size_t> qubits);

/// Throws NotUnitary or IndexOutOfRange; returns silently otherwise.
void check_unitary_on(const Matrix& u, std::span<const std::size_t> qubits,
                      std::size_t num_qubits);

namespace kernels {

/// M <- U M, U acting on `qubits` of an n-qubit row space. No validation.
void left_multiply(Matrix& mat, const Matrix& u,
                   std::span<const std::size_t> qubits);
/// M <- M U^dagger.
void right_multiply_adjoint(Matrix& mat, const Matrix& u,
                            std::span<const std::size_t> qubits);
/// M <- U M U^dagger.
void conjugate(Matrix& mat, const Matrix& u, std::span<const std::size_t> qubits);

}  // namespace kernels

}  // namespace symex
