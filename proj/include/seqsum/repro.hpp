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

#ifndef SEQSUM_REPRO_HPP
#define SEQSUM_REPRO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "seqsum/seqclasses.hpp"

namespace seqsum {

/// Exhaustive tiny-instance oracle for the Cohen/dual norms at p = 2 on
/// 2-dimensional Euclidean spaces: functionals parametrized by angle and
/// magnitude, coarse grid plus pattern-search refinement. Brute force, no
/// gradients; independent of the ascent engines it anchors.
double tiny_cohen_oracle_2d(const FiniteSeq& s);

struct ReproOptions {
  std::uint64_t seed = 7;
  std::string out_dir = ".";
  int kmax = 4096;
  int rad_len = 16;
  std::int64_t budget = 20000;
  bool parallel = false;
};

struct CaseResult {
  std::string id;
  bool pass = false;
  std::string summary;  // one line, "<id>: PASS|FAIL - detail"
  std::vector<std::string> csv_paths;
};

/// Registry of deterministic experiment cases; each runs from the seed alone
/// and writes `<id>.csv` under out_dir.
///
///   ex36      rank-one transpose: log-diverging prefix ratios vs the
///             harmonic/power-sum formula; the untransposed ratios stay
///             bounded.
///   p34       rank-one transpose against an l_inf-section witness:
///             sqrt-k-diverging ratios; untransposed constant.
///   radlemma  zero insertion leaves the Rademacher average unchanged.
///   fdprefix  prefix-sup norm equals the plain norm for finitely
///             shrinking classes.
///   dualcohen dual-construction norm with inner weak-2 vs the Cohen norm,
///             both against an exhaustive tiny-instance oracle.
///   ucoincide ratio traces are byte-identical for a class and its
///             u-restriction (finite sections coincide).
///   symavg    symmetrized ratio never beats the best slot permutation.
///   radtail   Rademacher tail traces: decaying pattern vs unit vectors.
const std::vector<std::string>& repro_ids();

CaseResult run_repro_case(const std::string& id, const ReproOptions& opts);

/// Runs one case or "all"; results in registry order regardless of
/// --parallel.
std::vector<CaseResult> run_repro(const std::string& id_or_all, const ReproOptions& opts);

}  // namespace seqsum

#endif  // SEQSUM_REPRO_HPP
