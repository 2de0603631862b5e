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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace symex {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Signed n-qubit Pauli word stored as symplectic bit masks.
///
/// Qubit q maps to bit q of a computational-basis index. The operator is
/// sign * i^{popcount(x & z)} * X^x Z^z, so every letter is the usual Hermitian
/// Pauli and the only free phase is the real sign.
class PauliString {
 public:
  enum class Letter : std::uint8_t { I, X, Y, Z };

  static constexpr std::size_t kMaxQubits = 64;

  PauliString() = default;
  explicit PauliString(std::size_t num_qubits);

  /// Parses "ZZII", "+XY" or "-ZIZ". Character k is qubit k.
  static PauliString parse(std::string_view text);

  /// Z on every listed qubit, identity elsewhere.
  static PauliString z_on(std::size_t num_qubits,
                          std::span<const std::size_t> qubits, int sign = 1);

  static PauliString from_masks(std::size_t num_qubits, std::uint64_t x,
                                std::uint64_t z, int sign = 1);

  std::size_t num_qubits() const noexcept { return n_; }
  int sign() const noexcept { return sign_; }
  std::uint64_t x_mask() const noexcept { return x_; }
  std::uint64_t z_mask() const noexcept { return z_; }

  Letter letter(std::size_t qubit) const;
  PauliString with_letter(std::size_t qubit, Letter letter) const;
  PauliString with_sign(int sign) const;

  /// True when every letter is I (the sign is not inspected).
  bool is_identity_letters() const noexcept { return x_ == 0 && z_ == 0; }
  /// True for +I.
  bool is_identity() const noexcept { return is_identity_letters() && sign_ == 1; }

  std::size_t weight() const noexcept;
  bool commutes_with(const PauliString& other) const;

  PauliString operator-() const { return with_sign(-sign_); }

  std::string str() const;

  /// Dense 2^n x 2^n matrix; intended for small n and for test oracles.
  Matrix to_matrix() const;

  /// Amplitude of P|basis>: P|b> = coefficient(b) |b ^ x_mask>.
  cplx coefficient(std::uint64_t basis_index) const noexcept;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  std::size_t n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int sign_ = 1;
};

/// A product of two Pauli words with its full phase i^phase.
struct PhasedPauli {
  int phase = 0;  ///< power of i, in [0, 4)
  PauliString pauli;  ///< sign folded into phase; pauli.sign() == +1

  cplx factor() const noexcept;
};

PhasedPauli multiply_phased(const PauliString& a, const PauliString& b);

/// Group product of two real-phase Pauli strings.
/// Throws Error(ImaginaryPhase) when the strings anticommute.
PauliString pauli_mul(const PauliString& a, const PauliString& b);

/// Real linear combination of Pauli strings.
class Observable {
 public:
  struct Term {
    double coefficient = 0.0;
    PauliString pauli;
  };

  Observable() = default;
  explicit Observable(std::size_t num_qubits) : n_(num_qubits) {}
  Observable(const PauliString& pauli);  // NOLINT: implicit by intent

  static Observable identity(std::size_t num_qubits);

  std::size_t num_qubits() const noexcept { return n_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  Observable& add(double coefficient, const PauliString& pauli);
  Observable& operator+=(const Observable& other);
  Observable& operator*=(double scale);

  /// Merges duplicate words, folds signs into coefficients and drops
  /// coefficients below `tolerance`. Terms come out in word order.
  Observable simplified(double tolerance = 0.0) const;

  Matrix to_matrix() const;

 private:
  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

Observable operator+(Observable a, const Observable& b);
Observable operator*(double scale, Observable a);

}  // namespace symex
