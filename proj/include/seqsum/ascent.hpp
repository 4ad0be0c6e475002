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

#ifndef SEQSUM_ASCENT_HPP
#define SEQSUM_ASCENT_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "seqsum/exponent.hpp"

namespace seqsum {

struct AscentConfig {
  int restarts = 64;
  int max_iters = 10000;
  double rel_tol = 1e-10;
  std::uint64_t seed = 0x51c3a9f2d07b44e1ULL;
};

struct AscentResult {
  double value = 0.0;
  std::vector<double> arg;
  int best_restart = -1;
};

using Objective = std::function<double(const std::vector<double>&)>;
using Gradient = std::function<std::vector<double>(const std::vector<double>&)>;

/// Multistart projected-(sub)gradient ascent of `objective` over the unit
/// sphere of l_q in R^dim. Restarts run with deterministic per-restart seeds
/// and merge by strict max, so the result does not depend on scheduling.
///
/// For q in (1, inf) steps are pulled back radially; for q = 1 and q = inf
/// steps are projected metrically onto the ball first (vertex-attained optima
/// are unreachable with a purely radial pullback on those spheres).
AscentResult maximize_on_sphere(int dim, const Exponent& q, const Objective& objective,
                                const Gradient& gradient,
                                const std::vector<std::vector<double>>& warm_starts,
                                const AscentConfig& cfg = {});

/// Same engine on an unconstrained ray space: maximizes a 0-homogeneous ratio
/// objective by plain (sub)gradient steps with renormalization to ||.||_2 = 1
/// for conditioning only.
AscentResult maximize_ratio(int dim, const Objective& objective, const Gradient& gradient,
                            const std::vector<std::vector<double>>& warm_starts,
                            const AscentConfig& cfg = {});

}  // namespace seqsum

#endif  // SEQSUM_ASCENT_HPP
