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

#ifndef SEQSUM_PROPCHECK_HPP
#define SEQSUM_PROPCHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqsum/seqclasses.hpp"

namespace seqsum {

/// Deterministic sampling plan: the same config always generates the same
/// samples, so reports are byte-identical across runs.
struct SamplerConfig {
  std::vector<int> dims = {1, 2, 3, 4, 6};
  std::vector<Exponent> exponents = {Exponent::of(1), Exponent::of(3, 2), Exponent::of(2),
                                     Exponent::of(3), Exponent::inf()};
  int min_len = 1;
  int max_len = 8;
  int samples = 1000;
  std::uint64_t seed = 1;
  double tol_exact = 1e-12;  // both sides on exact backends
  double tol_opt = 1e-6;     // an optimizer-backed norm on either side
  double zero_item_prob = 0.1;
};

/// Every universally quantified property is checked by bounded random search:
/// "no-counterexample" means none found within the sample budget, never a
/// proof. A found counterexample carries a payload that replays standalone.
struct PropertyReport {
  std::string property;
  std::vector<std::string> classes;
  bool counterexample = false;
  int samples_tested = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  double lhs = 0.0, rhs = 0.0;
  std::string mode;  // "leq" or "eq"
  nlohmann::json payload;

  std::string verdict() const { return counterexample ? "counterexample" : "no-counterexample"; }
  std::string to_text() const;
};

// Sequence-class axioms on finite data: sup_j ||x_j|| <= class norm, and the
// scalar canonical unit has norm one at every position.
PropertyReport check_seqclass_axioms(const SeqClassSpec& cls, const SamplerConfig& cfg);

// Dropping any single item never increases the norm.
PropertyReport check_finitely_shrinking(const SeqClassSpec& cls, const SamplerConfig& cfg);

// Inserting a zero vector anywhere leaves the norm unchanged.
PropertyReport check_zero_invariant(const SeqClassSpec& cls, const SamplerConfig& cfg);

// Every order-preserving selection has norm <= the full sequence.
PropertyReport check_subsequence_invariant(const SeqClassSpec& cls, const SamplerConfig& cfg);

// ||(a_j x_j)|| <= C ||a||_inf ||(x_j)|| with the class-declared constant C.
PropertyReport check_contraction(const SeqClassSpec& cls, const SamplerConfig& cfg);

// ||(a_j x_j)|| = ||(x_j)|| whenever |a_j| = 1.
PropertyReport check_spherical_completeness(const SeqClassSpec& cls, const SamplerConfig& cfg);

// ||(T x_j)|| <= ||T|| ||(x_j)|| for sampled linear maps. ||T|| is exact for
// p in {1, 2, inf} and ascent-estimated otherwise (an under-estimate, so the
// right side may be low on such spaces; the exact exponents avoid that).
PropertyReport check_linear_stability(const SeqClassSpec& cls, const SamplerConfig& cfg);

// ||(prod_i l_j^i)_j||_{Y(K)} <= prod_i ||(l_j^i)_j||_{X_i(K)} on scalars.
PropertyReport check_scalar_condition(const std::vector<SeqClassSpec>& xs,
                                      const SeqClassSpec& y, const SamplerConfig& cfg);

// ||.||_X <= ||.||_Y on sampled finite sequences.
PropertyReport fin_leq_falsify(const SeqClassSpec& x, const SeqClassSpec& y,
                               const SamplerConfig& cfg);

// Every listed class norm <= the dominating class norm, per sample.
PropertyReport jointly_dominated_check(const std::vector<SeqClassSpec>& classes,
                                       const SeqClassSpec& x, const SamplerConfig& cfg);

struct ReplayResult {
  double lhs = 0.0, rhs = 0.0;
  double tolerance = 0.0;
  std::string mode;
  bool violated = false;
};

/// Recomputes a counterexample payload standalone with the same backends.
ReplayResult replay(const PropertyReport& report);

/// Runs a named checker ("axioms", "shrinking", "zeroinv", "subseq",
/// "contraction", "spherical", "linstab", "scalar", "finleq", "dominated").
/// `classes` carries X_1..X_n plus the target/right-hand class last where the
/// property needs one.
PropertyReport run_checker(const std::string& property, const std::vector<SeqClassSpec>& classes,
                           const SamplerConfig& cfg);

}  // namespace seqsum

#endif  // SEQSUM_PROPCHECK_HPP
