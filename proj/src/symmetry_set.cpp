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


#include "symex/symmetry_set.hpp"

#include <algorithm>

#include "symex/errors.hpp"

namespace symex {

SymmetrySet::SymmetrySet(std::vector<PauliString> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "symmetry set is empty");
  }
  n_ = elements_.front().num_qubits();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].num_qubits() != n_) {
      throw Error(ErrorKind::DimensionMismatch, "symmetries differ in qubit count");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (elements_[j] == elements_[i]) {
        throw Error(ErrorKind::InvalidArgument,
                    "duplicate symmetry " + elements_[i].str());
      }
    }
  }
  is_group_ = contains(PauliString(n_));
  for (std::size_t i = 0; i < elements_.size() && is_group_; ++i) {
    for (std::size_t j = 0; j < elements_.size() && is_group_; ++j) {
      const PhasedPauli prod = multiply_phased(elements_[i], elements_[j]);
      if (prod.phase % 2 != 0) {
        is_group_ = false;
        break;
      }
      is_group_ = contains(prod.pauli.with_sign(prod.phase == 0 ? 1 : -1));
    }
  }
}

std::optional<std::size_t> SymmetrySet::index_of(const PauliString& p) const {
  const auto it = std::find(elements_.begin(), elements_.end(), p);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

SymmetrySet SymmetrySet::subset(std::uint64_t mask) const {
  std::vector<PauliString> picked;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if ((mask >> i) & 1u) picked.push_back(elements_[i]);
  }
  return SymmetrySet(std::move(picked));
}

}  // namespace symex
