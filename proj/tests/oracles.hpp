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

// Test-side oracles, deliberately independent of the library's optimizers:
// brute-force grids over the dual sphere and closed-form spectral sums.

#ifndef SEQSUM_TESTS_ORACLES_HPP
#define SEQSUM_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "seqsum/seqclasses.hpp"

namespace seqsum::oracles {

// Maps a point of the Euclidean sphere radially onto the l_q sphere.
inline std::vector<double> to_lq_sphere(std::vector<double> u, const Exponent& q) {
  double n = lp_norm(u, q);
  for (double& v : u) v /= n;
  return u;
}

// Brute-force weak-p norm: walk a grid over the dual-space sphere (d <= 3)
// and take the best l_p evaluation norm. Accuracy ~ O(h^2) in the angular
// step.
inline double weak_norm_grid(const FiniteSeq& s, const Exponent& p, int steps = 1600) {
  const Space ed = dual(s.space);
  const double pi = 3.14159265358979323846;

  auto eval = [&](const std::vector<double>& f) {
    std::vector<double> evals;
    evals.reserve(s.items.size());
    for (const Vector& x : s.items) {
      double t = 0.0;
      for (int i = 0; i < s.space.dim; ++i) t += f[static_cast<std::size_t>(i)] * x[i];
      evals.push_back(t);
    }
    return lp_norm(evals, p);
  };

  double best = 0.0;
  if (ed.dim == 1) {
    best = std::max(eval({1.0}), eval({-1.0}));
  } else if (ed.dim == 2) {
    for (int i = 0; i < 2 * steps; ++i) {
      double t = pi * i / steps;
      best = std::max(best, eval(to_lq_sphere({std::cos(t), std::sin(t)}, ed.p)));
    }
  } else if (ed.dim == 3) {
    for (int i = 0; i <= steps / 2; ++i) {
      double a = pi * i / (steps / 2);
      for (int j = 0; j < steps; ++j) {
        double b = 2.0 * pi * j / steps;
        best = std::max(best, eval(to_lq_sphere({std::sin(a) * std::cos(b),
                                                 std::sin(a) * std::sin(b), std::cos(a)},
                                                ed.p)));
      }
    }
  } else {
    throw Error("grid oracle supports dual dimension <= 3");
  }
  return best;
}

// Nuclear norm (sum of singular values) of the k x 2 matrix with rows x_j,
// via the closed-form 2x2 Gram eigenvalues. For p = 2 on Euclidean spaces
// this is the exact Cohen norm.
inline double nuclear_norm_2d(const FiniteSeq& s) {
  double a = 0.0, b = 0.0, c = 0.0;
  for (const Vector& x : s.items) {
    a += x[0] * x[0];
    b += x[0] * x[1];
    c += x[1] * x[1];
  }
  double tr = a + c;
  double disc = std::sqrt(std::max(tr * tr / 4.0 - (a * c - b * b), 0.0));
  return std::sqrt(std::max(tr / 2.0 + disc, 0.0)) + std::sqrt(std::max(tr / 2.0 - disc, 0.0));
}

// Partial harmonic sum and partial power sums, accumulated in index order.
inline double harmonic(int k) {
  double h = 0.0;
  for (int j = 1; j <= k; ++j) h += 1.0 / j;
  return h;
}

inline double power_sum(double e, int n, int k) {
  double acc = 0.0;
  for (int j = n; j <= k; ++j) acc += std::pow(static_cast<double>(j), -e);
  return acc;
}

}  // namespace seqsum::oracles

#endif  // SEQSUM_TESTS_ORACLES_HPP
