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


#include "symex/subspace.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "symex/errors.hpp"

namespace symex {
namespace {

constexpr double kRangeTol = 1e-10;

Matrix overlap_matrix(const DensityOperator& rho, const SymmetrySet& group) {
  const auto k = static_cast<Eigen::Index>(group.size());
  Matrix s(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      const PhasedPauli gg = multiply_phased(group[i], group[j]);
      s(i, j) = gg.factor() * trace_pauli(rho.matrix(), gg.pauli);
    }
  }
  return s;
}

void check_sizes(const DensityOperator& rho, const SymmetrySet& group) {
  if (group.num_qubits() != rho.num_qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "group and state differ in size");
  }
}

}  // namespace

SubspaceProblem build_problem(const DensityOperator& rho, const SymmetrySet& group,
                              const Observable& h) {
  check_sizes(rho, group);
  if (h.num_qubits() != rho.num_qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "operator and state differ in size");
  }
  const auto k = static_cast<Eigen::Index>(group.size());
  Matrix hm = Matrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      for (const auto& term : h.terms()) {
        const PhasedPauli left = multiply_phased(group[i], term.pauli);
        const PhasedPauli full = multiply_phased(left.pauli, group[j]);
        hm(i, j) += term.coefficient * left.factor() * full.factor() *
                    trace_pauli(rho.matrix(), full.pauli);
      }
    }
  }
  return {hm, overlap_matrix(rho, group), group};
}

SubspaceProblem build_problem(const DensityOperator& rho, const SymmetrySet& group,
                              const Matrix& h) {
  check_sizes(rho, group);
  if (h.rows() != rho.matrix().rows() || h.cols() != rho.matrix().cols()) {
    throw Error(ErrorKind::DimensionMismatch, "operator and state differ in size");
  }
  const auto k = static_cast<Eigen::Index>(group.size());
  std::vector<Matrix> g;
  for (const auto& p : group.elements()) g.push_back(p.to_matrix());
  Matrix hm(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const Matrix right = h * g[j] * rho.matrix();
    for (Eigen::Index i = 0; i < k; ++i) {
      hm(i, j) = (g[i] * right).trace();
    }
  }
  return {hm, overlap_matrix(rho, group), group};
}

SubspaceSolution solve_optimal(const SubspaceProblem& problem) {
  // Both matrices are Hermitian in exact arithmetic; symmetrise the noise away.
  const Matrix s = (problem.s_mat + problem.s_mat.adjoint()) / 2.0;
  const Matrix h = (problem.h_mat + problem.h_mat.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> s_eig(s);
  const auto& lambda = s_eig.eigenvalues();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) > kRangeTol) keep.push_back(i);
  }
  if (keep.empty()) {
    throw Error(ErrorKind::SingularPencil, "overlap matrix has no positive range");
  }
  Matrix t(s.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    t.col(static_cast<Eigen::Index>(c)) =
        s_eig.eigenvectors().col(keep[c]) / std::sqrt(lambda(keep[c]));
  }
  const Matrix reduced = t.adjoint() * h * t;
  Eigen::SelfAdjointEigenSolver<Matrix> r_eig((reduced + reduced.adjoint()) / 2.0);
  SubspaceSolution out;
  const auto& vals = r_eig.eigenvalues();
  for (Eigen::Index i = vals.size(); i-- > 0;) out.values.push_back(vals(i));
  out.value = out.values.front();
  out.v = t * r_eig.eigenvectors().col(vals.size() - 1);
  return out;
}

double rayleigh_quotient(const SubspaceProblem& problem, const Vector& v) {
  const cplx den = v.dot(problem.s_mat * v);
  if (std::abs(den) < kRangeTol) {
    throw Error(ErrorKind::SingularPencil, "v^dag S v vanishes");
  }
  return (v.dot(problem.h_mat * v) / den).real();
}

}  // namespace symex
