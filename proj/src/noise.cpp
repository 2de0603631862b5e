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


#include "symex/noise.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "symex/errors.hpp"

namespace symex {
namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw Error(ErrorKind::BadProbability,
                "error probability " + std::to_string(p) + " outside [0, 1)");
  }
}

void check_qubit(std::size_t q, std::size_t n) {
  if (q >= n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "qubit " + std::to_string(q) + " outside register");
  }
}

}  // namespace

std::string_view to_string(NoiseKind kind) noexcept {
  return kind == NoiseKind::Depolarising2Q ? "depolarising" : "bitflip";
}

NoiseKind parse_noise_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "depolarising" || lower == "depolarizing" || lower == "dep") {
    return NoiseKind::Depolarising2Q;
  }
  if (lower == "bitflip" || lower == "bit-flip" || lower == "bit_flip") {
    return NoiseKind::BitFlip1Q;
  }
  throw Error(ErrorKind::UnsupportedNoise, "unknown noise kind '" + lower + "'");
}

double mu_to_p(const NoiseSpec& spec) {
  if (spec.locations == 0) {
    throw Error(ErrorKind::InvalidArgument, "noise needs at least one location");
  }
  if (!(spec.mu >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "mu must be non-negative");
  }
  const double p = spec.mu / static_cast<double>(spec.locations);
  if (p >= 1.0) {
    throw Error(ErrorKind::ProbabilityOverflow,
                "mu / locations = " + std::to_string(p) + " is not below one");
  }
  return p;
}

DensityOperator apply_depolarising(const DensityOperator& rho,
                                   std::array<std::size_t, 2> pair, double p) {
  check_probability(p);
  check_qubit(pair[0], rho.num_qubits());
  check_qubit(pair[1], rho.num_qubits());
  if (pair[0] == pair[1]) {
    throw Error(ErrorKind::InvalidArgument, "depolarising pair must be distinct");
  }
  DensityOperator out = rho;
  kernels::depolarise(out.mutable_matrix(), pair, p);
  return out;
}

DensityOperator apply_bitflip(const DensityOperator& rho, std::size_t qubit,
                              double p) {
  check_probability(p);
  check_qubit(qubit, rho.num_qubits());
  DensityOperator out = rho;
  kernels::bitflip(out.mutable_matrix(), qubit, p);
  return out;
}

namespace kernels {

// Summing P rho P over all 16 pair Paulis gives 16 Tr_pair(rho) (x) I/4, so the
// channel is (1 - 16p/15) rho + (16p/15) Tr_pair(rho) (x) I/4.
void depolarise(Matrix& mat, std::array<std::size_t, 2> pair, double p) {
  if (p == 0.0) return;
  const double keep = 1.0 - 16.0 * p / 15.0;
  const double mix = (16.0 * p / 15.0) / 4.0;
  const Eigen::Index a = Eigen::Index{1} << pair[0];
  const Eigen::Index b = Eigen::Index{1} << pair[1];
  const Eigen::Index off[4] = {0, a, b, a | b};
  const Eigen::Index mask = a | b;
  const Eigen::Index dim = mat.rows();
  for (Eigen::Index c = 0; c < dim; ++c) {
    if (c & mask) continue;
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (r & mask) continue;
      cplx tr = 0.0;
      for (int k = 0; k < 4; ++k) tr += mat(r + off[k], c + off[k]);
      for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) mat(r + off[k], c + off[l]) *= keep;
        mat(r + off[k], c + off[k]) += mix * tr;
      }
    }
  }
}

void bitflip(Matrix& mat, std::size_t qubit, double p) {
  if (p == 0.0) return;
  const Eigen::Index m = Eigen::Index{1} << qubit;
  const Eigen::Index dim = mat.rows();
  for (Eigen::Index c = 0; c < dim; ++c) {
    if (c & m) continue;
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (r & m) continue;
      const cplx v00 = mat(r, c), v01 = mat(r, c | m);
      const cplx v10 = mat(r | m, c), v11 = mat(r | m, c | m);
      mat(r, c) = (1.0 - p) * v00 + p * v11;
      mat(r | m, c | m) = (1.0 - p) * v11 + p * v00;
      mat(r, c | m) = (1.0 - p) * v01 + p * v10;
      mat(r | m, c) = (1.0 - p) * v10 + p * v01;
    }
  }
}

}  // namespace kernels
}  // namespace symex
