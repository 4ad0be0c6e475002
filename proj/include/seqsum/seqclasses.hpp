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

#ifndef SEQSUM_SEQCLASSES_HPP
#define SEQSUM_SEQCLASSES_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "seqsum/ascent.hpp"
#include "seqsum/spaces.hpp"

namespace seqsum {

/// An ordered finite list of vectors sharing one space. The empty sequence is
/// legal and has norm zero in every class.
struct FiniteSeq {
  Space space;
  std::vector<Vector> items;

  FiniteSeq() = default;
  explicit FiniteSeq(Space s) : space(s) {}
  FiniteSeq(Space s, std::vector<Vector> v) : space(s), items(std::move(v)) {
    for (const Vector& x : items)
      if (x.space != space) throw Error("sequence items must share one space");
  }

  int length() const { return static_cast<int>(items.size()); }
  void push(Vector x) {
    if (x.space != space) throw Error("sequence items must share one space");
    items.push_back(std::move(x));
  }
  FiniteSeq prefix(int m) const {
    if (m < 0 || m > length()) throw Error("prefix length out of range");
    return FiniteSeq(space, std::vector<Vector>(items.begin(), items.begin() + m));
  }
  FiniteSeq without(int k) const {  // drop item k (0-based)
    if (k < 0 || k >= length()) throw Error("drop index out of range");
    std::vector<Vector> v;
    v.reserve(items.size() - 1);
    for (int i = 0; i < length(); ++i)
      if (i != k) v.push_back(items[static_cast<std::size_t>(i)]);
    return FiniteSeq(space, std::move(v));
  }
  FiniteSeq with_inserted(int pos, Vector x) const {  // insert before pos
    if (pos < 0 || pos > length()) throw Error("insert position out of range");
    std::vector<Vector> v = items;
    v.insert(v.begin() + pos, std::move(x));
    return FiniteSeq(space, std::move(v));
  }
};

enum class ClassKind {
  LpAbs,     // (sum ||x_j||^p)^(1/p)
  LInfSup,   // sup_j ||x_j||; finite sections of l_inf, c_0, c, c_0^w
  LpWeak,    // sup over the dual ball of the l_p norm of evaluations
  Rad,       // root mean square over all sign patterns of ||sum e_j x_j||
  Cohen,     // sup of sum |f_j(x_j)| over weak-p* unit tuples
  Fd,        // max over prefixes of the inner norm
  Dual,      // sup of sum |f_j(x_j)| over inner-class unit tuples
  // Deliberately broken classes for falsifier sensitivity tests.
  MutScale,          // c * inner
  MutLengthPenalty,  // inner + 1/length
  MutZeroBonus,      // inner + 0.1 * (number of zero items)
  MutSignBonus,      // inner + 0.1 * ||sum x_j||
  MutCoordWeight,    // l_2-style norm with coordinate 0 double-weighted
};

/// Tagged descriptor of a sequence class. Capability flags are independent
/// metadata consumed by the checkers; they are never inferred from one
/// another.
struct SeqClassSpec {
  ClassKind kind = ClassKind::LpAbs;
  Exponent p = Exponent::of(2);
  std::shared_ptr<const SeqClassSpec> inner;
  double mut_param = 0.0;

  bool finitely_determined = true;
  bool finitely_shrinking = true;
  bool finitely_zero_invariant = true;
  bool subsequence_invariant = true;
  double contraction_constant = 1.0;
  std::string scalar_component;

  std::string str() const;
};

SeqClassSpec lp_abs(const Exponent& p);
SeqClassSpec linf_sup();
SeqClassSpec lp_weak(const Exponent& p);
SeqClassSpec rad_class();
SeqClassSpec cohen_class(const Exponent& p);
SeqClassSpec fd_of(const SeqClassSpec& inner);
SeqClassSpec dual_of(const SeqClassSpec& inner);

SeqClassSpec mut_scale(const SeqClassSpec& inner, double factor);
SeqClassSpec mut_length_penalty(const SeqClassSpec& inner);
SeqClassSpec mut_zero_bonus(const SeqClassSpec& inner);
SeqClassSpec mut_sign_bonus(const SeqClassSpec& inner);
SeqClassSpec mut_coord_weight();

enum class WeakBackend { Auto, ExtremePoints, SingularValue, Ascent };

struct EvalOptions {
  WeakBackend weak_backend = WeakBackend::Auto;
  int rad_cap = 20;
  int sign_cap_dim = 20;
  AscentConfig ascent;
};

struct NormResult {
  double value = 0.0;
  std::string backend;
  std::optional<Functional> certificate;
};

/// Certified lower bound with the witnessing functional tuple.
struct TupleNormResult {
  double value = 0.0;
  std::string backend;
  std::vector<Functional> witness;
};

/// Norm of a finite sequence in the given class. Optimizer-backed classes
/// (weak ascent, Cohen, Dual) report certified lower bounds.
double class_norm(const SeqClassSpec& cls, const FiniteSeq& s, const EvalOptions& opts = {});

/// weak-p norm: sup over the dual unit ball of the l_p norm of evaluations,
/// with a maximizing functional as certificate. Exact via extreme points when
/// the dual exponent is 1 or inf, exact via the top singular value for p = 2
/// on Euclidean spaces, multistart ascent otherwise.
NormResult weak_norm(const FiniteSeq& s, const Exponent& p, const EvalOptions& opts = {});

/// Exact Rademacher average by sign enumeration (Gray-code order).
double rad_norm(const FiniteSeq& s, int cap = 20);

TupleNormResult cohen_norm(const FiniteSeq& s, const Exponent& p, const EvalOptions& opts = {});

/// sup of sum |f_j(x_j)| over tuples with inner-class norm <= 1 in the dual
/// space. Supported inner classes: LpAbs, LpWeak.
TupleNormResult dual_norm(const SeqClassSpec& inner, const FiniteSeq& s,
                          const EvalOptions& opts = {});

/// max over prefixes of the class norm; equals class_norm whenever the class
/// is finitely shrinking.
double fd_norm(const SeqClassSpec& cls, const FiniteSeq& s, const EvalOptions& opts = {});

/// True when class_norm for this class on this space/length runs on an exact
/// backend (used by checkers to pick the tolerance tier).
bool class_norm_is_exact(const SeqClassSpec& cls, const Space& space, int length,
                         const EvalOptions& opts = {});

/// Norm of a scalar sequence in the class's scalar component X(K).
double scalar_class_norm(const SeqClassSpec& cls, const std::vector<double>& lambdas,
                         const EvalOptions& opts = {});

SeqClassSpec parse_class(const std::string& text);

}  // namespace seqsum

#endif  // SEQSUM_SEQCLASSES_HPP
