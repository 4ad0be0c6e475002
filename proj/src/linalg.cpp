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

#include "seqsum/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace seqsum {

std::vector<double> matvec(const Matrix& m, const std::vector<double>& x) {
  std::vector<double> y(static_cast<std::size_t>(m.rows), 0.0);
  for (int i = 0; i < m.rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

void jacobi_symmetric(Matrix a, std::vector<double>& eigenvalues, Matrix* eigenvectors) {
  const int n = a.rows;
  if (a.cols != n) throw Error("jacobi needs a square matrix");
  Matrix v(n, n);
  for (int i = 0; i < n; ++i) v.at(i, i) = 1.0;

  auto off_diag = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += a.at(i, j) * a.at(i, j);
    return s;
  };

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps && off_diag() > 1e-30; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a.at(p, q);
        if (std::fabs(apq) < 1e-300) continue;
        double app = a.at(p, p), aqq = a.at(q, q);
        double theta = (aqq - app) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a.at(k, p), akq = a.at(k, q);
          a.at(k, p) = c * akp - s * akq;
          a.at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a.at(p, k), aqk = a.at(q, k);
          a.at(p, k) = c * apk - s * aqk;
          a.at(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v.at(k, p), vkq = v.at(k, q);
          v.at(k, p) = c * vkp - s * vkq;
          v.at(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a.at(i, i) > a.at(j, j); });

  eigenvalues.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) eigenvalues[static_cast<std::size_t>(i)] = a.at(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]);
  if (eigenvectors) {
    *eigenvectors = Matrix(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        eigenvectors->at(i, j) = v.at(i, order[static_cast<std::size_t>(j)]);
  }
}

SingularResult top_singular_value(const std::vector<std::vector<double>>& columns, int dim) {
  SingularResult res;
  res.left.assign(static_cast<std::size_t>(dim), 0.0);
  if (columns.empty()) return res;
  const int k = static_cast<int>(columns.size());

  // Work with the smaller Gram matrix.
  if (dim <= k) {
    Matrix g(dim, dim);  // X X^T
    for (const auto& col : columns)
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          g.at(i, j) += col[static_cast<std::size_t>(i)] * col[static_cast<std::size_t>(j)];
    std::vector<double> eig;
    Matrix vecs;
    jacobi_symmetric(g, eig, &vecs);
    res.sigma = std::sqrt(std::max(eig[0], 0.0));
    for (int i = 0; i < dim; ++i) res.left[static_cast<std::size_t>(i)] = vecs.at(i, 0);
  } else {
    Matrix g(k, k);  // X^T X
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        double s = 0.0;
        for (int i = 0; i < dim; ++i)
          s += columns[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] *
               columns[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)];
        g.at(a, b) = s;
      }
    std::vector<double> eig;
    Matrix vecs;
    jacobi_symmetric(g, eig, &vecs);
    res.sigma = std::sqrt(std::max(eig[0], 0.0));
    if (res.sigma > 0.0) {
      // u = X v / sigma
      for (int a = 0; a < k; ++a)
        for (int i = 0; i < dim; ++i)
          res.left[static_cast<std::size_t>(i)] +=
              columns[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] * vecs.at(a, 0);
      for (double& x : res.left) x /= res.sigma;
    }
  }
  return res;
}

double operator_norm_exact(const Matrix& t, const Space& e) {
  if (t.rows != e.dim || t.cols != e.dim) throw Error("operator shape mismatch");
  if (e.p.is_one()) {
    double best = 0.0;
    for (int j = 0; j < t.cols; ++j) {
      double s = 0.0;
      for (int i = 0; i < t.rows; ++i) s += std::fabs(t.at(i, j));
      best = std::max(best, s);
    }
    return best;
  }
  if (e.p.is_inf()) {
    double best = 0.0;
    for (int i = 0; i < t.rows; ++i) {
      double s = 0.0;
      for (int j = 0; j < t.cols; ++j) s += std::fabs(t.at(i, j));
      best = std::max(best, s);
    }
    return best;
  }
  if (e.p.value() == 2.0) {
    std::vector<std::vector<double>> cols(static_cast<std::size_t>(t.cols));
    for (int j = 0; j < t.cols; ++j) {
      cols[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(t.rows));
      for (int i = 0; i < t.rows; ++i)
        cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = t.at(i, j);
    }
    return top_singular_value(cols, t.rows).sigma;
  }
  throw Error("exact operator norm available only for p in {1, 2, inf}");
}

}  // namespace seqsum
