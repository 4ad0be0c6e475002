// Copyright 2026 The seqsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEQSUM_LINALG_HPP
#define SEQSUM_LINALG_HPP

#include <vector>

#include "seqsum/spaces.hpp"

namespace seqsum {

/// Dense row-major matrix, just big enough for desk-scale work.
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

std::vector<double> matvec(const Matrix& m, const std::vector<double>& x);

/// Cyclic Jacobi on a symmetric matrix; returns eigenvalues (descending) and,
/// if wanted, the matching orthonormal eigenvectors as matrix columns.
void jacobi_symmetric(Matrix a, std::vector<double>& eigenvalues,
                      Matrix* eigenvectors = nullptr);

struct SingularResult {
  double sigma = 0.0;
  std::vector<double> left;  // unit vector u with ||A^T u||_2 = sigma
};

/// Top singular value of the matrix whose columns are the given vectors
/// (coordinates in R^d), plus a maximizing left singular vector.
SingularResult top_singular_value(const std::vector<std::vector<double>>& columns, int dim);

/// Exact operator norm of T : E -> E for p in {1, 2, inf}; errors otherwise.
/// (p = 2 via the spectral norm, p = 1 / p = inf via the attaining extreme
/// points, which reduce to column / row sums.)
double operator_norm_exact(const Matrix& t, const Space& e);

}  // namespace seqsum

#endif  // SEQSUM_LINALG_HPP
