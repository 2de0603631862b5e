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
#include <optional>
#include <vector>

#include "symex/pauli.hpp"

namespace symex {

/// Ordered list of Pauli symmetries on a common register.
class SymmetrySet {
 public:
  SymmetrySet() = default;
  /// Throws DimensionMismatch when qubit counts differ and InvalidArgument for
  /// an empty list or duplicate elements.
  explicit SymmetrySet(std::vector<PauliString> elements);

  const std::vector<PauliString>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t num_qubits() const noexcept { return n_; }
  const PauliString& operator[](std::size_t i) const { return elements_[i]; }

  /// Contains +I and is closed under pauli_mul.
  bool is_group() const noexcept { return is_group_; }

  std::optional<std::size_t> index_of(const PauliString& p) const;
  bool contains(const PauliString& p) const { return index_of(p).has_value(); }

  /// Elements picked by bit i of `mask`.
  SymmetrySet subset(std::uint64_t mask) const;

 private:
  std::vector<PauliString> elements_;
  std::size_t n_ = 0;
  bool is_group_ = false;
};

}  // namespace symex
