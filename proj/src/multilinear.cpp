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

#include "seqsum/multilinear.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "seqsum/rng.hpp"

namespace seqsum {

namespace {

std::size_t dense_size(const std::vector<Space>& domains, const Space& codomain) {
  std::size_t n = static_cast<std::size_t>(codomain.dim);
  for (const Space& d : domains) n *= static_cast<std::size_t>(d.dim);
  return n;
}

bool is_identity_perm(const std::vector<int>& sigma) {
  for (int i = 0; i < static_cast<int>(sigma.size()); ++i)
    if (sigma[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

void check_perm(const std::vector<int>& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) throw Error("permutation arity mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw Error("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

bool equal_domains(const std::vector<Space>& domains) {
  for (const Space& d : domains)
    if (d != domains.front()) return false;
  return true;
}

}  // namespace

MultilinearOp MultilinearOp::dense(std::vector<Space> domains, Space codomain,
                                   std::vector<double> coeffs) {
  if (domains.empty()) throw Error("operator arity must be >= 1");
  if (coeffs.size() != dense_size(domains, codomain))
    throw Error("coefficient count does not match shape");
  MultilinearOp op;
  op.rep_ = Rep::Dense;
  op.domains_ = std::move(domains);
  op.codomain_ = codomain;
  op.coeffs_ = std::move(coeffs);
  return op;
}

MultilinearOp MultilinearOp::zero(std::vector<Space> domains, Space codomain) {
  std::vector<double> c(dense_size(domains, codomain), 0.0);
  return dense(std::move(domains), codomain, std::move(c));
}

MultilinearOp rank_one_bilinear(const Functional& f, const Space& second_domain) {
  MultilinearOp op;
  op.rep_ = MultilinearOp::Rep::RankOneMap;
  op.domains_ = {dual(f.space), second_domain};
  op.codomain_ = second_domain;
  op.funcs_ = {f, Vector()};
  op.map_slot_ = 1;
  op.map_identity_ = true;
  return op;
}

MultilinearOp rank_one_bilinear(const Functional& f, const Matrix& u,
                                const Space& second_domain, const Space& codomain) {
  if (u.rows != codomain.dim || u.cols != second_domain.dim)
    throw Error("map shape mismatch");
  MultilinearOp op;
  op.rep_ = MultilinearOp::Rep::RankOneMap;
  op.domains_ = {dual(f.space), second_domain};
  op.codomain_ = codomain;
  op.funcs_ = {f, Vector()};
  op.map_slot_ = 1;
  op.map_identity_ = false;
  op.map_ = u;
  return op;
}

MultilinearOp functional_product(const std::vector<Functional>& fs, const Vector& y) {
  if (fs.empty()) throw Error("operator arity must be >= 1");
  MultilinearOp op;
  op.rep_ = MultilinearOp::Rep::FunctionalProduct;
  for (const Functional& f : fs) op.domains_.push_back(dual(f.space));
  op.codomain_ = y.space;
  op.funcs_ = fs;
  op.target_ = y;
  return op;
}

Vector MultilinearOp::apply(const std::vector<Vector>& args) const {
  if (static_cast<int>(args.size()) != arity()) throw Error("argument count mismatch");
  for (int i = 0; i < arity(); ++i)
    if (args[static_cast<std::size_t>(i)].space != domains_[static_cast<std::size_t>(i)])
      throw Error("argument space mismatch in slot " + std::to_string(i + 1));

  switch (rep_) {
    case Rep::Dense: {
      std::vector<double> cur = coeffs_;
      for (int s = 0; s < arity(); ++s) {
        const Vector& x = args[static_cast<std::size_t>(s)];
        const std::size_t d = static_cast<std::size_t>(x.dim());
        const std::size_t tail = cur.size() / d;
        std::vector<double> next(tail, 0.0);
        for (std::size_t i = 0; i < d; ++i) {
          double xi = x[static_cast<int>(i)];
          if (xi == 0.0) continue;
          const double* block = cur.data() + i * tail;
          for (std::size_t t = 0; t < tail; ++t) next[t] += xi * block[t];
        }
        cur = std::move(next);
      }
      return Vector(codomain_, std::move(cur));
    }
    case Rep::RankOneMap: {
      double prod = 1.0;
      for (int i = 0; i < arity(); ++i)
        if (i != map_slot_)
          prod *= pair(funcs_[static_cast<std::size_t>(i)], args[static_cast<std::size_t>(i)]);
      const Vector& xm = args[static_cast<std::size_t>(map_slot_)];
      if (map_identity_) return scale(prod, Vector(codomain_, xm.coords));
      return Vector(codomain_, matvec(map_, xm.coords));
    }
    case Rep::FunctionalProduct: {
      double prod = 1.0;
      for (int i = 0; i < arity(); ++i)
        prod *= pair(funcs_[static_cast<std::size_t>(i)], args[static_cast<std::size_t>(i)]);
      return scale(prod, target_);
    }
  }
  throw Error("unreachable representation");
}

MultilinearOp MultilinearOp::permuted(const std::vector<int>& sigma) const {
  check_perm(sigma, arity());
  if (is_identity_perm(sigma)) return *this;
  if (!equal_domains(domains_))
    throw Error("permutation requires equal domain spaces");

  MultilinearOp op = *this;
  switch (rep_) {
    case Rep::Dense: {
      const int n = arity();
      const int d = domains_.front().dim;
      const int df = codomain_.dim;
      std::vector<double> out(coeffs_.size(), 0.0);
      std::vector<int> idx(static_cast<std::size_t>(n), 0);
      std::size_t total = coeffs_.size() / static_cast<std::size_t>(df);
      for (std::size_t lin = 0; lin < total; ++lin) {
        std::size_t rest = lin;
        for (int i = n - 1; i >= 0; --i) {
          idx[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(d));
          rest /= static_cast<std::size_t>(d);
        }
        // source index: j_i -> idx[sigma[i]]
        std::size_t src = 0;
        for (int i = 0; i < n; ++i)
          src = src * static_cast<std::size_t>(d) +
                static_cast<std::size_t>(idx[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])]);
        for (int r = 0; r < df; ++r)
          out[lin * static_cast<std::size_t>(df) + static_cast<std::size_t>(r)] =
              coeffs_[src * static_cast<std::size_t>(df) + static_cast<std::size_t>(r)];
      }
      op.coeffs_ = std::move(out);
      return op;
    }
    case Rep::RankOneMap: {
      std::vector<Functional> nf(funcs_.size());
      int new_map_slot = sigma[static_cast<std::size_t>(map_slot_)];
      for (int i = 0; i < arity(); ++i)
        if (i != map_slot_) nf[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = funcs_[static_cast<std::size_t>(i)];
      op.funcs_ = std::move(nf);
      op.map_slot_ = new_map_slot;
      return op;
    }
    case Rep::FunctionalProduct: {
      std::vector<Functional> nf(funcs_.size());
      for (int i = 0; i < arity(); ++i)
        nf[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = funcs_[static_cast<std::size_t>(i)];
      op.funcs_ = std::move(nf);
      return op;
    }
  }
  throw Error("unreachable representation");
}

MultilinearOp MultilinearOp::transposed() const {
  if (arity() != 2) throw Error("transpose is for bilinear operators");
  return permuted({1, 0});
}

MultilinearOp MultilinearOp::densified(std::size_t dense_cap) const {
  if (rep_ == Rep::Dense) return *this;
  std::size_t size = dense_size(domains_, codomain_);
  if (size > dense_cap) throw Error("dense materialization cap exceeded");

  const int n = arity();
  const int df = codomain_.dim;
  std::vector<double> out(size, 0.0);
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  std::size_t total = size / static_cast<std::size_t>(df);
  for (std::size_t lin = 0; lin < total; ++lin) {
    std::size_t rest = lin;
    for (int i = n - 1; i >= 0; --i) {
      int d = domains_[static_cast<std::size_t>(i)].dim;
      idx[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(d));
      rest /= static_cast<std::size_t>(d);
    }
    if (rep_ == Rep::FunctionalProduct) {
      double prod = 1.0;
      for (int i = 0; i < n; ++i) prod *= funcs_[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
      for (int r = 0; r < df; ++r)
        out[lin * static_cast<std::size_t>(df) + static_cast<std::size_t>(r)] = prod * target_[r];
    } else {  // RankOneMap
      double prod = 1.0;
      for (int i = 0; i < n; ++i)
        if (i != map_slot_) prod *= funcs_[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
      int im = idx[static_cast<std::size_t>(map_slot_)];
      for (int r = 0; r < df; ++r) {
        double m = map_identity_ ? (r == im ? 1.0 : 0.0) : map_.at(r, im);
        out[lin * static_cast<std::size_t>(df) + static_cast<std::size_t>(r)] = prod * m;
      }
    }
  }
  return dense(domains_, codomain_, std::move(out));
}

MultilinearOp MultilinearOp::symmetrized(std::size_t dense_cap) const {
  if (!equal_domains(domains_)) throw Error("symmetrization requires equal domain spaces");
  MultilinearOp base = densified(dense_cap);
  const int n = arity();
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<double> acc(base.coeffs_.size(), 0.0);
  double count = 0.0;
  do {
    MultilinearOp piece = base.permuted(sigma);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += piece.coeffs_[i];
    count += 1.0;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  for (double& v : acc) v /= count;
  return dense(domains_, codomain_, std::move(acc));
}

const std::vector<double>& MultilinearOp::dense_coeffs() const {
  if (rep_ != Rep::Dense) throw Error("operator is not stored densely");
  return coeffs_;
}

double MultilinearOp::coeff(const std::vector<int>& idx, int r) const {
  if (rep_ != Rep::Dense) throw Error("operator is not stored densely");
  if (static_cast<int>(idx.size()) != arity()) throw Error("index arity mismatch");
  std::size_t lin = 0;
  for (int i = 0; i < arity(); ++i)
    lin = lin * static_cast<std::size_t>(domains_[static_cast<std::size_t>(i)].dim) +
          static_cast<std::size_t>(idx[static_cast<std::size_t>(i)]);
  return coeffs_[lin * static_cast<std::size_t>(codomain_.dim) + static_cast<std::size_t>(r)];
}

double summing_ratio(const MultilinearOp& a, const std::vector<SeqClassSpec>& xs,
                     const SeqClassSpec& y, const std::vector<FiniteSeq>& witnesses, int k,
                     const EvalOptions& opts) {
  if (static_cast<int>(xs.size()) != a.arity() ||
      static_cast<int>(witnesses.size()) != a.arity())
    throw Error("class/witness count must match arity");
  for (const FiniteSeq& w : witnesses)
    if (w.length() < k) throw Error("witness shorter than k");

  double den = 1.0;
  for (int i = 0; i < a.arity(); ++i)
    den *= class_norm(xs[static_cast<std::size_t>(i)],
                      witnesses[static_cast<std::size_t>(i)].prefix(k), opts);
  if (den == 0.0) throw Error("zero denominator: an all-zero witness slot");

  FiniteSeq outputs(a.codomain());
  std::vector<Vector> args(static_cast<std::size_t>(a.arity()));
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < a.arity(); ++i)
      args[static_cast<std::size_t>(i)] = witnesses[static_cast<std::size_t>(i)].items[static_cast<std::size_t>(j)];
    outputs.push(a.apply(args));
  }
  return class_norm(y, outputs, opts) / den;
}

SummingEstimate lower_bound_search(const MultilinearOp& a, const std::vector<SeqClassSpec>& xs,
                                   const SeqClassSpec& y, const SearchConfig& cfg,
                                   const EvalOptions& opts) {
  SummingEstimate est;
  Rng root(cfg.seed);

  auto ratio_or_zero = [&](const std::vector<FiniteSeq>& ws, int k) {
    try {
      return summing_ratio(a, xs, y, ws, k, opts);
    } catch (const Error&) {
      return 0.0;
    }
  };

  const std::int64_t per_restart =
      std::max<std::int64_t>(30, cfg.budget / std::max<std::int64_t>(
                                     1, cfg.restarts * static_cast<std::int64_t>(cfg.ks.size())));

  for (int k : cfg.ks) {
    SummingEstimate::Entry entry;
    entry.k = k;
    for (int restart = 0; restart < cfg.restarts; ++restart) {
      Rng r = root.fork(static_cast<std::uint64_t>(k) * 1000003ULL +
                        static_cast<std::uint64_t>(restart));
      std::vector<FiniteSeq> ws;
      ws.reserve(static_cast<std::size_t>(a.arity()));
      for (int i = 0; i < a.arity(); ++i) {
        const Space& e = a.domains()[static_cast<std::size_t>(i)];
        FiniteSeq w(e);
        if (restart == 0 && k <= e.dim) {
          for (int j = 0; j < k; ++j) w.push(unit_vector(e, j));
        } else if (restart == 1) {
          for (int j = 1; j <= k; ++j)
            w.push(scale(1.0 / static_cast<double>(j), unit_vector(e, 0)));
        } else {
          for (int j = 0; j < k; ++j) {
            Vector v = zero_vector(e);
            for (int c = 0; c < e.dim; ++c) v[c] = r.gaussian();
            w.push(v);
          }
        }
        ws.push_back(std::move(w));
      }
      double cur = ratio_or_zero(ws, k);
      for (std::int64_t prop = 0; prop < per_restart; ++prop) {
        int slot = r.uniform_int(0, a.arity() - 1);
        int item = r.uniform_int(0, k - 1);
        const Space& e = a.domains()[static_cast<std::size_t>(slot)];
        Vector& target = ws[static_cast<std::size_t>(slot)].items[static_cast<std::size_t>(item)];
        Vector saved = target;
        double sigma = 0.3 * (vec_norm(target) + 0.1);
        for (int c = 0; c < e.dim; ++c) target[c] += sigma * r.gaussian();
        double trial = ratio_or_zero(ws, k);
        if (trial > cur) {
          cur = trial;
        } else {
          target = saved;
        }
      }
      if (cur > entry.rho) {
        entry.rho = cur;
        entry.witnesses = ws;
      }
    }
    est.trace.push_back(std::move(entry));
  }

  for (const auto& e : est.trace) est.value = std::max(est.value, e.rho);
  return est;
}

ProbeTrace divergence_probe(const MultilinearOp& a, const std::vector<SeqClassSpec>& xs,
                            const SeqClassSpec& y, const std::vector<SeqFamily>& fams,
                            int k_max, const EvalOptions& opts) {
  if (static_cast<int>(xs.size()) != a.arity() || static_cast<int>(fams.size()) != a.arity())
    throw Error("class/family count must match arity");
  if (y.kind != ClassKind::LpAbs && y.kind != ClassKind::LInfSup)
    throw Error("probe output class must be lp or linf (streaming accumulation)");
  if (k_max < 1) throw Error("k_max must be >= 1");
  for (const SeqFamily& f : fams)
    if (f.max_len() < k_max) throw Error("family cannot generate k_max items");

  std::vector<int> ks;
  for (int k = 1; k <= k_max; k *= 2) {
    ks.push_back(k);
    if (k > k_max / 2) break;
  }
  if (ks.back() != k_max) ks.push_back(k_max);

  ProbeTrace trace;
  const double yp = y.kind == ClassKind::LpAbs ? y.p.value() : 0.0;
  double acc = 0.0;  // power sum for LpAbs, running max for LInfSup
  std::size_t next = 0;
  std::vector<Vector> args(static_cast<std::size_t>(a.arity()));
  for (int j = 1; j <= k_max && next < ks.size(); ++j) {
    for (int i = 0; i < a.arity(); ++i)
      args[static_cast<std::size_t>(i)] = fams[static_cast<std::size_t>(i)].at(j);
    double n = vec_norm(a.apply(args));
    if (y.kind == ClassKind::LpAbs)
      acc += yp == 1.0 ? n : std::pow(n, yp);
    else
      acc = std::max(acc, n);

    if (j == ks[next]) {
      ProbeEntry e;
      e.k = j;
      double ynorm = y.kind == ClassKind::LpAbs
                         ? (yp == 1.0 ? acc : std::pow(acc, 1.0 / yp))
                         : acc;
      double den = 1.0;
      for (int i = 0; i < a.arity(); ++i) {
        double sn = family_range_norm(xs[static_cast<std::size_t>(i)],
                                      fams[static_cast<std::size_t>(i)], 1, j, opts);
        e.slot_norms.push_back(sn);
        den *= sn;
      }
      if (den == 0.0) throw Error("zero denominator in probe at k=" + std::to_string(j));
      e.rho = ynorm / den;
      trace.entries.push_back(std::move(e));
      ++next;
    }
  }

  bool increasing = true;
  for (std::size_t i = 1; i < trace.entries.size(); ++i)
    if (trace.entries[i].rho <= trace.entries[i - 1].rho) increasing = false;
  double first = trace.entries.front().rho;
  double last = trace.entries.back().rho;
  trace.verdict =
      (increasing && first > 0.0 && last / first > 4.0) ? "diverging" : "bounded";
  return trace;
}

}  // namespace seqsum
