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

#ifndef SEQSUM_MULTILINEAR_HPP
#define SEQSUM_MULTILINEAR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "seqsum/families.hpp"
#include "seqsum/linalg.hpp"
#include "seqsum/seqclasses.hpp"

namespace seqsum {

/// An n-linear operator E_1 x ... x E_n -> F. Dense tensors carry the general
/// case at desk scale; rank-one forms (a functional product times a linear
/// map or a fixed target) stay cheap at probe scale, where dense storage is
/// impossible.
class MultilinearOp {
 public:
  enum class Rep { Dense, RankOneMap, FunctionalProduct };

  static MultilinearOp dense(std::vector<Space> domains, Space codomain,
                             std::vector<double> coeffs);
  static MultilinearOp zero(std::vector<Space> domains, Space codomain);

  int arity() const { return static_cast<int>(domains_.size()); }
  const std::vector<Space>& domains() const { return domains_; }
  const Space& codomain() const { return codomain_; }
  Rep rep() const { return rep_; }

  Vector apply(const std::vector<Vector>& args) const;

  /// B with B(x_1, ..., x_n) = A(x_sigma(1), ..., x_sigma(n)); sigma is
  /// 0-based. Non-identity permutations require equal domains.
  MultilinearOp permuted(const std::vector<int>& sigma) const;
  MultilinearOp transposed() const;  // arity 2

  /// (1/n!) sum over all permutations; idempotent, permutation invariant.
  MultilinearOp symmetrized(std::size_t dense_cap = std::size_t{1} << 24) const;

  MultilinearOp densified(std::size_t dense_cap = std::size_t{1} << 24) const;
  const std::vector<double>& dense_coeffs() const;

  /// Coefficient A(e_{i_1}, ..., e_{i_n})_r for a dense operator.
  double coeff(const std::vector<int>& idx, int r) const;

  friend MultilinearOp rank_one_bilinear(const Functional& f, const Space& second_domain);
  friend MultilinearOp rank_one_bilinear(const Functional& f, const Matrix& u,
                                         const Space& second_domain, const Space& codomain);
  friend MultilinearOp functional_product(const std::vector<Functional>& fs, const Vector& y);

 private:
  MultilinearOp() = default;

  Rep rep_ = Rep::Dense;
  std::vector<Space> domains_;
  Space codomain_;
  std::vector<double> coeffs_;       // Dense
  std::vector<Functional> funcs_;    // RankOneMap (map slot unused), FunctionalProduct
  int map_slot_ = -1;                // RankOneMap
  bool map_identity_ = true;         // RankOneMap
  Matrix map_;                       // RankOneMap, when not identity
  Vector target_;                    // FunctionalProduct
};

/// A(x, y) = f(x) y.
MultilinearOp rank_one_bilinear(const Functional& f, const Space& second_domain);
/// A(x, y) = f(x) u(y).
MultilinearOp rank_one_bilinear(const Functional& f, const Matrix& u,
                                const Space& second_domain, const Space& codomain);
/// (x_1, ..., x_n) -> f_1(x_1) ... f_n(x_n) y.
MultilinearOp functional_product(const std::vector<Functional>& fs, const Vector& y);

/// rho_k = ||(A(x_j^1, ..., x_j^n))_{j<=k}||_Y / prod_i ||(x_j^i)_{j<=k}||_{X_i};
/// a lower bound on the summing norm for finitely determined classes.
double summing_ratio(const MultilinearOp& a, const std::vector<SeqClassSpec>& xs,
                     const SeqClassSpec& y, const std::vector<FiniteSeq>& witnesses, int k,
                     const EvalOptions& opts = {});

/// A certified lower bound together with the witnesses behind each traced
/// prefix ratio; value is the max over the trace.
struct SummingEstimate {
  double value = 0.0;
  struct Entry {
    int k = 0;
    double rho = 0.0;
    std::vector<FiniteSeq> witnesses;
  };
  std::vector<Entry> trace;
};

struct SearchConfig {
  std::vector<int> ks = {1, 2, 4, 8};
  int restarts = 64;
  std::int64_t budget = 20000;  // total accepted/rejected proposals
  std::uint64_t seed = 17;
};

/// Derivative-free witness search: Gaussian perturbations of witness entries,
/// accepted on ratio improvement, seeded with canonical families. Restarts
/// use deterministic seeds and merge by strict max.
SummingEstimate lower_bound_search(const MultilinearOp& a, const std::vector<SeqClassSpec>& xs,
                                   const SeqClassSpec& y, const SearchConfig& cfg = {},
                                   const EvalOptions& opts = {});

struct ProbeEntry {
  int k = 0;
  double rho = 0.0;
  std::vector<double> slot_norms;
};

struct ProbeTrace {
  std::vector<ProbeEntry> entries;  // k = 1, 2, 4, ..., k_max
  std::string verdict;              // "diverging" or "bounded"
};

/// Prefix-ratio trace along doubling k for family-generated witnesses.
/// Y must be LpAbs or LInfSup (the output norm is accumulated streaming, so
/// probes run at k far beyond dense-materialization scale). Verdict
/// "diverging" iff the trace strictly increases across doublings and the
/// last/first ratio exceeds 4.
ProbeTrace divergence_probe(const MultilinearOp& a, const std::vector<SeqClassSpec>& xs,
                            const SeqClassSpec& y, const std::vector<SeqFamily>& fams,
                            int k_max, const EvalOptions& opts = {});

}  // namespace seqsum

#endif  // SEQSUM_MULTILINEAR_HPP
