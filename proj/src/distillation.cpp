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


#include "symex/distillation.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "symex/errors.hpp"

namespace symex {
namespace {

constexpr std::size_t kMaxTotalQubits = 12;

void check_spec(const CopySpec& spec) {
  if (spec.m_copies == 0) {
    throw Error(ErrorKind::InvalidArgument, "need at least one copy");
  }
  if (spec.sigma.num_qubits() != spec.sigma0.num_qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "sigma and sigma0 differ in size");
  }
}

Matrix power(const Matrix& a, std::size_t m) {
  Matrix out = a;
  for (std::size_t k = 1; k < m; ++k) out = out * a;
  return out;
}

// Cycle length of the cycle through element 0.
std::size_t cycle_of_first(const std::vector<std::size_t>& perm) {
  std::size_t len = 1;
  for (std::size_t i = perm[0]; i != 0; i = perm[i]) ++len;
  return len;
}

}  // namespace

double cycle_fidelity(const CopySpec& spec, std::size_t m) {
  check_spec(spec);
  if (m < 1 || m > spec.m_copies) {
    throw Error(ErrorKind::BadCycleOrder,
                "cycle order " + std::to_string(m) + " outside [1, M]");
  }
  const Matrix sm = power(spec.sigma.matrix(), m);
  const Vector& a = spec.sigma0.amplitudes();
  return (a.dot(sm * a) / sm.trace()).real();
}

double verification_fidelity(const CopySpec& spec) {
  check_spec(spec);
  const std::size_t n = spec.sigma.num_qubits();
  const std::size_t m = spec.m_copies;
  if (n * m > kMaxTotalQubits) {
    throw Error(ErrorKind::DimensionOverflow,
                std::to_string(n * m) + " qubits exceed the explicit M-copy limit");
  }
  Matrix rho = spec.sigma.matrix();
  for (std::size_t c = 1; c < m; ++c) {
    rho = Eigen::kroneckerProduct(spec.sigma.matrix(), rho).eval();
  }
  const std::size_t local = std::size_t{1} << n;
  const std::size_t dim = std::size_t{1} << (n * m);

  // Copy c occupies bits [c n, (c + 1) n) of the joint index.
  Matrix proj = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::size_t count = 0;
  do {
    for (std::size_t idx = 0; idx < dim; ++idx) {
      std::size_t image = 0;
      for (std::size_t c = 0; c < m; ++c) {
        const std::size_t digit = (idx >> (c * n)) & (local - 1);
        image |= digit << (perm[c] * n);
      }
      proj(static_cast<Eigen::Index>(image), static_cast<Eigen::Index>(idx)) += 1.0;
    }
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  proj /= static_cast<double>(count);

  const Matrix verified = proj * rho * proj;
  const Vector& a = spec.sigma0.amplitudes();
  const Matrix p0 = a * a.adjoint();
  Matrix first = p0;
  for (std::size_t c = 1; c < m; ++c) {
    first = Eigen::kroneckerProduct(Matrix::Identity(static_cast<Eigen::Index>(local),
                                                     static_cast<Eigen::Index>(local)),
                                    first)
                .eval();
  }
  return ((first * verified).trace() / verified.trace()).real();
}

std::size_t optimal_weight_claim(const CopySpec& spec) {
  check_spec(spec);
  std::size_t best = 1;
  double best_f = cycle_fidelity(spec, 1);
  for (std::size_t m = 2; m <= spec.m_copies; ++m) {
    const double f = cycle_fidelity(spec, m);
    if (f >= best_f - 1e-12) {
      best = m;
      best_f = std::max(best_f, f);
    }
  }
  return best;
}

std::map<std::size_t, std::size_t> equivalence_classes_sm(std::size_t m_copies) {
  if (m_copies < 1 || m_copies > 6) {
    throw Error(ErrorKind::InvalidArgument, "copy count must be in [1, 6]");
  }
  std::map<std::size_t, std::size_t> out;
  std::vector<std::size_t> perm(m_copies);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    ++out[cycle_of_first(perm)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace symex
