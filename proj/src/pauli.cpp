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


#include "symex/pauli.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "symex/errors.hpp"

namespace symex {
namespace {

int mod4(int v) { return ((v % 4) + 4) % 4; }

cplx i_power(int phase) {
  switch (mod4(phase)) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void check_qubit(std::size_t qubit, std::size_t n) {
  if (qubit >= n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "qubit " + std::to_string(qubit) + " outside " +
                    std::to_string(n) + "-qubit string");
  }
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) {
    throw Error(ErrorKind::InvalidArgument, "Pauli sign must be +1 or -1");
  }
}

}  // namespace

PauliString::PauliString(std::size_t num_qubits) : n_(num_qubits) {
  if (num_qubits > kMaxQubits) {
    throw Error(ErrorKind::InvalidArgument, "too many qubits for PauliString");
  }
}

PauliString PauliString::parse(std::string_view text) {
  int sign = 1;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    sign = text.front() == '-' ? -1 : 1;
    text.remove_prefix(1);
  }
  PauliString p(text.size());
  p.sign_ = sign;
  for (std::size_t q = 0; q < text.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (text[q]) {
      case 'I': break;
      case 'X': p.x_ |= bit; break;
      case 'Y': p.x_ |= bit; p.z_ |= bit; break;
      case 'Z': p.z_ |= bit; break;
      default:
        throw Error(ErrorKind::InvalidArgument,
                    "bad Pauli letter '" + std::string(1, text[q]) + "'");
    }
  }
  return p;
}

PauliString PauliString::z_on(std::size_t num_qubits,
                              std::span<const std::size_t> qubits, int sign) {
  check_sign(sign);
  PauliString p(num_qubits);
  p.sign_ = sign;
  for (auto q : qubits) {
    check_qubit(q, num_qubits);
    p.z_ |= std::uint64_t{1} << q;
  }
  return p;
}

PauliString PauliString::from_masks(std::size_t num_qubits, std::uint64_t x,
                                    std::uint64_t z, int sign) {
  check_sign(sign);
  PauliString p(num_qubits);
  const std::uint64_t valid =
      num_qubits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << num_qubits) - 1;
  if ((x | z) & ~valid) {
    throw Error(ErrorKind::IndexOutOfRange, "mask has bits beyond num_qubits");
  }
  p.x_ = x;
  p.z_ = z;
  p.sign_ = sign;
  return p;
}

PauliString::Letter PauliString::letter(std::size_t qubit) const {
  check_qubit(qubit, n_);
  const bool x = (x_ >> qubit) & 1u;
  const bool z = (z_ >> qubit) & 1u;
  if (x && z) return Letter::Y;
  if (x) return Letter::X;
  if (z) return Letter::Z;
  return Letter::I;
}

PauliString PauliString::with_letter(std::size_t qubit, Letter letter) const {
  check_qubit(qubit, n_);
  PauliString p = *this;
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  p.x_ &= ~bit;
  p.z_ &= ~bit;
  if (letter == Letter::X || letter == Letter::Y) p.x_ |= bit;
  if (letter == Letter::Z || letter == Letter::Y) p.z_ |= bit;
  return p;
}

PauliString PauliString::with_sign(int sign) const {
  check_sign(sign);
  PauliString p = *this;
  p.sign_ = sign;
  return p;
}

std::size_t PauliString::weight() const noexcept {
  return static_cast<std::size_t>(std::popcount(x_ | z_));
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (other.n_ != n_) {
    throw Error(ErrorKind::DimensionMismatch, "Pauli strings differ in length");
  }
  const int anti = std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_);
  return anti % 2 == 0;
}

std::string PauliString::str() const {
  std::string out(1, sign_ < 0 ? '-' : '+');
  for (std::size_t q = 0; q < n_; ++q) {
    constexpr char kNames[] = {'I', 'X', 'Y', 'Z'};
    out.push_back(kNames[static_cast<int>(letter(q))]);
  }
  return out;
}

cplx PauliString::coefficient(std::uint64_t basis_index) const noexcept {
  const int y = std::popcount(x_ & z_);
  const int parity = std::popcount(basis_index & z_) & 1;
  return static_cast<double>(sign_) * i_power(y + 2 * parity);
}

Matrix PauliString::to_matrix() const {
  const std::size_t dim = std::size_t{1} << n_;
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim),
                          static_cast<Eigen::Index>(dim));
  for (std::uint64_t b = 0; b < dim; ++b) {
    m(static_cast<Eigen::Index>(b ^ x_), static_cast<Eigen::Index>(b)) =
        coefficient(b);
  }
  return m;
}

cplx PhasedPauli::factor() const noexcept { return i_power(phase); }

PhasedPauli multiply_phased(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "Pauli strings differ in length");
  }
  const std::uint64_t x = a.x_mask() ^ b.x_mask();
  const std::uint64_t z = a.z_mask() ^ b.z_mask();
  int phase = std::popcount(a.x_mask() & a.z_mask()) +
              std::popcount(b.x_mask() & b.z_mask()) +
              2 * std::popcount(a.z_mask() & b.x_mask()) -
              std::popcount(x & z);
  if (a.sign() < 0) phase += 2;
  if (b.sign() < 0) phase += 2;
  return PhasedPauli{mod4(phase), PauliString::from_masks(a.num_qubits(), x, z)};
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
  const PhasedPauli product = multiply_phased(a, b);
  if (product.phase % 2 != 0) {
    throw Error(ErrorKind::ImaginaryPhase,
                a.str() + " * " + b.str() + " has an imaginary phase");
  }
  return product.pauli.with_sign(product.phase == 0 ? 1 : -1);
}

Observable::Observable(const PauliString& pauli) : n_(pauli.num_qubits()) {
  terms_.push_back({1.0, pauli});
}

Observable Observable::identity(std::size_t num_qubits) {
  return Observable(PauliString(num_qubits));
}

Observable& Observable::add(double coefficient, const PauliString& pauli) {
  if (terms_.empty() && n_ == 0) n_ = pauli.num_qubits();
  if (pauli.num_qubits() != n_) {
    throw Error(ErrorKind::DimensionMismatch, "term qubit count differs");
  }
  terms_.push_back({coefficient, pauli});
  return *this;
}

Observable& Observable::operator+=(const Observable& other) {
  for (const auto& t : other.terms_) add(t.coefficient, t.pauli);
  return *this;
}

Observable& Observable::operator*=(double scale) {
  for (auto& t : terms_) t.coefficient *= scale;
  return *this;
}

Observable Observable::simplified(double tolerance) const {
  std::map<std::pair<std::uint64_t, std::uint64_t>, double> merged;
  for (const auto& t : terms_) {
    merged[{t.pauli.x_mask(), t.pauli.z_mask()}] +=
        t.coefficient * t.pauli.sign();
  }
  Observable out(n_);
  for (const auto& [masks, c] : merged) {
    if (std::abs(c) > tolerance || (tolerance == 0.0 && c != 0.0)) {
      out.terms_.push_back(
          {c, PauliString::from_masks(n_, masks.first, masks.second)});
    }
  }
  return out;
}

Matrix Observable::to_matrix() const {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_);
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& t : terms_) m += t.coefficient * t.pauli.to_matrix();
  return m;
}

Observable operator+(Observable a, const Observable& b) {
  a += b;
  return a;
}

Observable operator*(double scale, Observable a) {
  a *= scale;
  return a;
}

}  // namespace symex
