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

#include "seqsum/ascent.hpp"

#include <algorithm>
#include <cmath>

#include "seqsum/rng.hpp"
#include "seqsum/spaces.hpp"

namespace seqsum {
namespace {

double norm2(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

// Metric projection onto the l_1 unit ball (soft thresholding).
void project_l1_ball(std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += std::fabs(v);
  if (s <= 1.0) return;
  std::vector<double> mag(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) mag[i] = std::fabs(x[i]);
  std::sort(mag.begin(), mag.end(), std::greater<double>());
  double acc = 0.0, tau = 0.0;
  for (std::size_t i = 0; i < mag.size(); ++i) {
    acc += mag[i];
    double t = (acc - 1.0) / static_cast<double>(i + 1);
    if (i + 1 == mag.size() || mag[i + 1] <= t) {
      tau = t;
      break;
    }
  }
  for (double& v : x) {
    double a = std::fabs(v) - tau;
    v = a > 0.0 ? (v > 0.0 ? a : -a) : 0.0;
  }
}

// Maps a trial point onto the l_q unit sphere. Radial pullback for finite
// q > 1; metric projection first for q = 1 and q = inf so that the ascent can
// reach the ball's extreme points.
bool retract_to_sphere(std::vector<double>& x, const Exponent& q) {
  if (q.is_inf()) {
    for (double& v : x) v = std::clamp(v, -1.0, 1.0);
    double m = 0.0;
    for (double v : x) m = std::max(m, std::fabs(v));
    if (m == 0.0) return false;
    if (m < 1.0)
      for (double& v : x) v /= m;
    return true;
  }
  if (q.is_one()) {
    project_l1_ball(x);
    double s = 0.0;
    for (double v : x) s += std::fabs(v);
    if (s == 0.0) return false;
    if (s != 1.0)
      for (double& v : x) v /= s;
    return true;
  }
  double n = lp_norm(x, q);
  if (n == 0.0) return false;
  for (double& v : x) v /= n;
  return true;
}

using DirectionFilter = std::function<void(const std::vector<double>&, std::vector<double>&)>;

AscentResult run_multistart(int dim, const Objective& objective, const Gradient& gradient,
                            const std::vector<std::vector<double>>& warm_starts,
                            const AscentConfig& cfg,
                            const std::function<bool(std::vector<double>&)>& retract,
                            const DirectionFilter& filter = {}) {
  AscentResult best;
  best.value = -1.0;

  Rng root(cfg.seed);
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    Rng r = root.fork(static_cast<std::uint64_t>(restart));
    std::vector<double> x;
    if (restart < static_cast<int>(warm_starts.size())) {
      x = warm_starts[static_cast<std::size_t>(restart)];
    } else {
      x.assign(static_cast<std::size_t>(dim), 0.0);
      for (double& v : x) v = r.gaussian();
    }
    if (static_cast<int>(x.size()) != dim) continue;
    if (!retract(x)) continue;

    double fx = objective(x);
    double step = 0.5;
    double window_base = fx;
    int window_start = 0;

    auto line_search = [&](const std::vector<double>& dir, double dn, int max_tries) {
      for (int tries = 0; tries < max_tries; ++tries) {
        std::vector<double> trial = x;
        for (int i = 0; i < dim; ++i)
          trial[static_cast<std::size_t>(i)] += step * dir[static_cast<std::size_t>(i)] / dn;
        if (retract(trial)) {
          double ft = objective(trial);
          if (ft > fx) {
            x = std::move(trial);
            fx = ft;
            step = std::min(step * 2.0, 1e3);
            return true;
          }
        }
        step *= 0.5;
        if (step < 1e-15) return false;
      }
      return false;
    };

    int escapes_left = 3;
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
      std::vector<double> g = gradient(x);
      if (filter) filter(x, g);
      double gn = norm2(g);
      bool improved = gn > 0.0 && line_search(g, gn, 60);
      if (!improved && escapes_left > 0) {
        // Subgradient stall: at nonsmooth corners the one-sided derivative
        // may point nowhere useful although better points exist. Probe a few
        // random directions before declaring convergence.
        --escapes_left;
        std::vector<double> dir(static_cast<std::size_t>(dim));
        for (int probe = 0; probe < 12 && !improved; ++probe) {
          for (double& v : dir) v = r.gaussian();
          double dn = norm2(dir);
          if (dn == 0.0) continue;
          step = std::max(step, 1e-9);
          improved = line_search(dir, dn, 12);
        }
      }
      if (!improved) break;
      // Stall detection over a 50-iteration window of accepted steps.
      if (iter - window_start >= 50) {
        if (fx - window_base <= cfg.rel_tol * std::max(1.0, std::fabs(fx))) break;
        window_base = fx;
        window_start = iter;
      }
    }

    if (fx > best.value) {
      best.value = fx;
      best.arg = x;
      best.best_restart = restart;
    }
  }
  if (best.best_restart < 0) {
    best.value = 0.0;
    best.arg.assign(static_cast<std::size_t>(dim), 0.0);
  }
  return best;
}

}  // namespace

AscentResult maximize_on_sphere(int dim, const Exponent& q, const Objective& objective,
                                const Gradient& gradient,
                                const std::vector<std::vector<double>>& warm_starts,
                                const AscentConfig& cfg) {
  auto retract = [&q](std::vector<double>& x) { return retract_to_sphere(x, q); };
  // On smooth l_q spheres, remove the normal component of the gradient: the
  // radial part fights the retraction and slows the tail convergence badly.
  DirectionFilter filter;
  if (!q.is_one() && !q.is_inf()) {
    filter = [&q](const std::vector<double>& x, std::vector<double>& g) {
      std::vector<double> n = lp_norm_gradient(x, q);
      double nn = 0.0, gn = 0.0;
      for (std::size_t i = 0; i < n.size(); ++i) {
        nn += n[i] * n[i];
        gn += g[i] * n[i];
      }
      if (nn == 0.0) return;
      double c = gn / nn;
      for (std::size_t i = 0; i < n.size(); ++i) g[i] -= c * n[i];
    };
  }
  return run_multistart(dim, objective, gradient, warm_starts, cfg, retract, filter);
}

AscentResult maximize_ratio(int dim, const Objective& objective, const Gradient& gradient,
                            const std::vector<std::vector<double>>& warm_starts,
                            const AscentConfig& cfg) {
  auto renorm = [](std::vector<double>& x) {
    double n = norm2(x);
    if (n == 0.0) return false;
    for (double& v : x) v /= n;
    return true;
  };
  return run_multistart(dim, objective, gradient, warm_starts, cfg, renorm);
}

}  // namespace seqsum
