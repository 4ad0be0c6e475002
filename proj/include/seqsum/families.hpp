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

#ifndef SEQSUM_FAMILIES_HPP
#define SEQSUM_FAMILIES_HPP

#include <string>
#include <vector>

#include "seqsum/seqclasses.hpp"

namespace seqsum {

/// A generator of arbitrarily long witness sequences: canonical unit vectors,
/// a decaying multiple of one vector (x_j = j^{-s} z, s > 0), or an explicit
/// list.
struct SeqFamily {
  enum class Kind { UnitVectors, ScaledPattern, Explicit };

  Kind kind = Kind::Explicit;
  Space space;
  double decay = 1.0;
  Vector pattern;
  std::vector<Vector> list;

  static SeqFamily unit_vectors(const Space& s);
  static SeqFamily scaled_pattern(double s, Vector z);
  static SeqFamily explicit_list(const FiniteSeq& s);

  Vector at(int j) const;  // 1-based
  int max_len() const;
  FiniteSeq prefix(int k) const;
  std::string str() const;
};

/// ||(x_n, ..., x_N)||_X for a family range, using exact closed forms where
/// the family structure provides them (unit vectors, scaled patterns for the
/// base classes) and materialization otherwise.
double family_range_norm(const SeqClassSpec& cls, const SeqFamily& fam, int n, int N,
                         const EvalOptions& opts = {});

struct TailTrace {
  std::vector<std::pair<int, double>> entries;  // (n, ||(x_n, ..., x_N)||_X)
  std::string verdict;                          // see u_tail_trace
};

/// Tail-norm trace n -> ||(x_n, ..., x_N)||_X for n = 1..N. Evidence, not
/// proof: the verdict is "tail-to-zero evidence" when the trace decays below
/// a quarter of its initial value, "non-null tail evidence" when it stays
/// above three quarters, "inconclusive" otherwise. Requires a finitely
/// shrinking class (the trace is then nonincreasing).
TailTrace u_tail_trace(const SeqClassSpec& cls, const SeqFamily& fam, int N,
                       const EvalOptions& opts = {});

}  // namespace seqsum

#endif  // SEQSUM_FAMILIES_HPP
