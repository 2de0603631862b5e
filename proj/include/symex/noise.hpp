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

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "symex/state.hpp"

namespace symex {

enum class NoiseKind { Depolarising2Q, BitFlip1Q };

std::string_view to_string(NoiseKind kind) noexcept;
/// Accepts "depolarising"/"depolarizing"/"dep" and "bitflip"/"bit-flip".
NoiseKind parse_noise_kind(std::string_view text);

/// Noise strength expressed as the mean number of error events per run.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::Depolarising2Q;
  double mu = 0.0;
  std::size_t locations = 1;
};

/// Per-location probability mu / locations. Throws ProbabilityOverflow when the
/// result reaches one and InvalidArgument for mu < 0 or zero locations.
double mu_to_p(const NoiseSpec& spec);

/// Two-qubit channel mixing the 15 non-identity Paulis with total weight p.
DensityOperator apply_depolarising(const DensityOperator& rho,
                                   std::array<std::size_t, 2> pair, double p);

/// (1-p) rho + p X rho X on one qubit.
DensityOperator apply_bitflip(const DensityOperator& rho, std::size_t qubit,
                              double p);

namespace kernels {

/// In place; no validation beyond what the public wrappers do.
void depolarise(Matrix& mat, std::array<std::size_t, 2> pair, double p);
void bitflip(Matrix& mat, std::size_t qubit, double p);

}  // namespace kernels

}  // namespace symex
