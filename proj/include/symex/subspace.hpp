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

#include <vector>

#include "symex/state.hpp"
#include "symex/symmetry_set.hpp"

namespace symex {

/// Rayleigh-Ritz pencil over the states G_j rho: H_ij = <G_i H G_j>,
/// S_ij = <G_i G_j>.
struct SubspaceProblem {
  Matrix h_mat;
  Matrix s_mat;
  SymmetrySet group;
};

struct SubspaceSolution {
  Vector v;                   ///< maximiser of v^dag H v / v^dag S v
  double value = 0.0;
  std::vector<double> values; ///< every admissible stationary value, descending
};

SubspaceProblem build_problem(const DensityOperator& rho, const SymmetrySet& group,
                              const Observable& h);

/// Same with a dense operator, e.g. the ideal-state projector.
SubspaceProblem build_problem(const DensityOperator& rho, const SymmetrySet& group,
                              const Matrix& h);

/// Reduces the pencil onto the range of S (eigenvalues above 1e-10) and solves
/// the resulting Hermitian problem. Throws SingularPencil when S has no range.
SubspaceSolution solve_optimal(const SubspaceProblem& problem);

/// v^dag H v / v^dag S v. Throws SingularPencil when |v^dag S v| < 1e-10.
double rayleigh_quotient(const SubspaceProblem& problem, const Vector& v);

}  // namespace symex
