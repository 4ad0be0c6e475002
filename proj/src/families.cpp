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

#include "seqsum/families.hpp"

#include <cmath>
#include <limits>

namespace seqsum {

SeqFamily SeqFamily::unit_vectors(const Space& s) {
  SeqFamily f;
  f.kind = Kind::UnitVectors;
  f.space = s;
  return f;
}

SeqFamily SeqFamily::scaled_pattern(double s, Vector z) {
  if (s <= 0.0) throw Error("scaled pattern needs decay s > 0");
  SeqFamily f;
  f.kind = Kind::ScaledPattern;
  f.space = z.space;
  f.decay = s;
  f.pattern = std::move(z);
  return f;
}

SeqFamily SeqFamily::explicit_list(const FiniteSeq& s) {
  SeqFamily f;
  f.kind = Kind::Explicit;
  f.space = s.space;
  f.list = s.items;
  return f;
}

Vector SeqFamily::at(int j) const {
  if (j < 1 || j > max_len()) throw Error("family index out of range");
  switch (kind) {
    case Kind::UnitVectors:
      return unit_vector(space, j - 1);
    case Kind::ScaledPattern:
      return scale(std::pow(static_cast<double>(j), -decay), pattern);
    case Kind::Explicit:
      return list[static_cast<std::size_t>(j - 1)];
  }
  throw Error("unreachable family kind");
}

int SeqFamily::max_len() const {
  switch (kind) {
    case Kind::UnitVectors:
      return space.dim;
    case Kind::ScaledPattern:
      return std::numeric_limits<int>::max();
    case Kind::Explicit:
      return static_cast<int>(list.size());
  }
  return 0;
}

FiniteSeq SeqFamily::prefix(int k) const {
  if (k > max_len()) throw Error("family prefix exceeds available length");
  FiniteSeq s(space);
  for (int j = 1; j <= k; ++j) s.push(at(j));
  return s;
}

std::string SeqFamily::str() const {
  switch (kind) {
    case Kind::UnitVectors:
      return "unit-vectors";
    case Kind::ScaledPattern:
      return "scaled-pattern(s=" + std::to_string(decay) + ")";
    case Kind::Explicit:
      return "explicit(" + std::to_string(list.size()) + ")";
  }
  return "?";
}

namespace {

// sum_{j=n}^{N} j^(-s*e), accumulated in index order for determinism.
double power_partial_sum(double s, double e, int n, int N) {
  double acc = 0.0;
  for (int j = n; j <= N; ++j) acc += std::pow(static_cast<double>(j), -s * e);
  return acc;
}

// Scalar-sequence norm of (j^-s)_{j=n..N} in the class's scalar component:
// l_p for LpAbs/LpWeak/Cohen, sup for LInfSup, l_2 for Rad.
double scalar_pattern_norm(const SeqClassSpec& cls, double s, int n, int N) {
  switch (cls.kind) {
    case ClassKind::LpAbs:
    case ClassKind::LpWeak:
    case ClassKind::Cohen: {
      if (cls.p.is_inf()) return std::pow(static_cast<double>(n), -s);
      double pv = cls.p.value();
      return std::pow(power_partial_sum(s, pv, n, N), 1.0 / pv);
    }
    case ClassKind::LInfSup:
      return std::pow(static_cast<double>(n), -s);
    case ClassKind::Rad:
      return std::sqrt(power_partial_sum(s, 2.0, n, N));
    default:
      throw Error("no scalar pattern closed form for " + cls.str());
  }
}

bool has_pattern_closed_form(const SeqClassSpec& cls) {
  switch (cls.kind) {
    case ClassKind::LpAbs:
    case ClassKind::LpWeak:
    case ClassKind::LInfSup:
    case ClassKind::Rad:
      return true;
    default:
      return false;
  }
}

}  // namespace

double family_range_norm(const SeqClassSpec& cls, const SeqFamily& fam, int n, int N,
                         const EvalOptions& opts) {
  if (n < 1 || N > fam.max_len()) throw Error("family range out of bounds");
  if (n > N) return 0.0;
  const int m = N - n + 1;

  if (fam.kind == SeqFamily::Kind::ScaledPattern && has_pattern_closed_form(cls)) {
    // ||(a_j z)|| = ||z|| * scalar norm of (a_j); exact for these classes
    // since every evaluation factors through the single direction z.
    return vec_norm(fam.pattern) * scalar_pattern_norm(cls, fam.decay, n, N);
  }

  if (fam.kind == SeqFamily::Kind::UnitVectors) {
    switch (cls.kind) {
      case ClassKind::LpAbs:
        return cls.p.is_inf() ? 1.0 : std::pow(static_cast<double>(m), 1.0 / cls.p.value());
      case ClassKind::LInfSup:
        return 1.0;
      case ClassKind::LpWeak:
        // Exact for l_inf spaces: the dual l_1 ball gives sup_f sum |f_j|^p = 1.
        if (fam.space.p.is_inf()) return 1.0;
        break;
      case ClassKind::Rad:
        // Disjoint supports: every sign pattern has the same norm m^(1/q).
        return fam.space.p.is_inf() ? 1.0
                                    : std::pow(static_cast<double>(m), 1.0 / fam.space.p.value());
      default:
        break;
    }
  }

  // Fall back to materializing the range.
  FiniteSeq s(fam.space);
  for (int j = n; j <= N; ++j) s.push(fam.at(j));
  return class_norm(cls, s, opts);
}

TailTrace u_tail_trace(const SeqClassSpec& cls, const SeqFamily& fam, int N,
                       const EvalOptions& opts) {
  if (!cls.finitely_shrinking)
    throw Error("tail trace requires a finitely shrinking class");
  if (N < 1 || N > fam.max_len()) throw Error("horizon incompatible with family");

  TailTrace t;
  t.entries.reserve(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n)
    t.entries.emplace_back(n, family_range_norm(cls, fam, n, N, opts));

  double first = t.entries.front().second;
  double last = t.entries.back().second;
  if (first <= 0.0) {
    t.verdict = "tail-to-zero evidence";
  } else if (last <= 0.25 * first) {
    t.verdict = "tail-to-zero evidence";
  } else if (last >= 0.75 * first) {
    t.verdict = "non-null tail evidence";
  } else {
    t.verdict = "inconclusive";
  }
  return t;
}

}  // namespace seqsum
