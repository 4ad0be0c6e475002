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

#include "seqsum/seqclasses.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "seqsum/linalg.hpp"

namespace seqsum {

namespace {

std::shared_ptr<const SeqClassSpec> box(const SeqClassSpec& s) {
  return std::make_shared<const SeqClassSpec>(s);
}

double lp_of_norms(const FiniteSeq& s, const Exponent& p) {
  std::vector<double> norms;
  norms.reserve(s.items.size());
  for (const Vector& x : s.items) norms.push_back(vec_norm(x));
  return lp_norm(norms, p);
}

double sup_of_norms(const FiniteSeq& s) {
  double m = 0.0;
  for (const Vector& x : s.items) m = std::max(m, vec_norm(x));
  return m;
}

}  // namespace

std::string SeqClassSpec::str() const {
  switch (kind) {
    case ClassKind::LpAbs:
      return "lp:" + p.str();
    case ClassKind::LInfSup:
      return "linf";
    case ClassKind::LpWeak:
      return "lpw:" + p.str();
    case ClassKind::Rad:
      return "rad";
    case ClassKind::Cohen:
      return "cohen:" + p.str();
    case ClassKind::Fd:
      return "fd(" + inner->str() + ")";
    case ClassKind::Dual:
      return "dual(" + inner->str() + ")";
    case ClassKind::MutScale: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", mut_param);
      return "mut-scale(" + std::string(buf) + ";" + inner->str() + ")";
    }
    case ClassKind::MutLengthPenalty:
      return "mut-length(" + inner->str() + ")";
    case ClassKind::MutZeroBonus:
      return "mut-zero(" + inner->str() + ")";
    case ClassKind::MutSignBonus:
      return "mut-sign(" + inner->str() + ")";
    case ClassKind::MutCoordWeight:
      return "mut-coordweight";
  }
  return "?";
}

SeqClassSpec lp_abs(const Exponent& p) {
  if (p.is_inf()) throw Error("lp class needs a finite exponent; use linf");
  SeqClassSpec s;
  s.kind = ClassKind::LpAbs;
  s.p = p;
  s.scalar_component = "l_" + p.str();
  return s;
}

SeqClassSpec linf_sup() {
  SeqClassSpec s;
  s.kind = ClassKind::LInfSup;
  s.p = Exponent::inf();
  s.scalar_component = "l_inf";
  return s;
}

SeqClassSpec lp_weak(const Exponent& p) {
  SeqClassSpec s;
  s.kind = ClassKind::LpWeak;
  s.p = p;
  s.scalar_component = "l_" + p.str();
  return s;
}

SeqClassSpec rad_class() {
  SeqClassSpec s;
  s.kind = ClassKind::Rad;
  s.p = Exponent::of(2);
  // One backend serves both almost-unconditionally-summable and -bounded
  // sequence spaces: their norms agree on finite sections. Flags follow the
  // finitely determined representative.
  s.scalar_component = "l_2";
  return s;
}

SeqClassSpec cohen_class(const Exponent& p) {
  if (p.is_inf()) throw Error("cohen class needs a finite exponent");
  SeqClassSpec s;
  s.kind = ClassKind::Cohen;
  s.p = p;
  s.scalar_component = "l_" + p.str();
  return s;
}

SeqClassSpec fd_of(const SeqClassSpec& inner) {
  SeqClassSpec s;
  s.kind = ClassKind::Fd;
  s.inner = box(inner);
  s.finitely_determined = true;  // always, by construction
  s.finitely_shrinking = inner.finitely_shrinking;
  s.finitely_zero_invariant = inner.finitely_zero_invariant;
  s.subsequence_invariant = inner.subsequence_invariant;
  s.contraction_constant = inner.contraction_constant;
  s.scalar_component = inner.scalar_component;
  return s;
}

SeqClassSpec dual_of(const SeqClassSpec& inner) {
  if (inner.kind != ClassKind::LpAbs && inner.kind != ClassKind::LpWeak)
    throw Error("dual wrapper supports inner classes lp and lpw only");
  SeqClassSpec s;
  s.kind = ClassKind::Dual;
  s.inner = box(inner);
  s.finitely_determined = true;
  s.finitely_shrinking = true;
  s.finitely_zero_invariant = true;
  s.subsequence_invariant = true;
  s.contraction_constant = 1.0;
  // Scalar component of the dual construction is the conjugate space.
  s.scalar_component = "l_" + inner.p.conjugate().str();
  return s;
}

namespace {
SeqClassSpec make_mut(ClassKind kind, const SeqClassSpec& inner, double param) {
  SeqClassSpec s = inner;
  s.kind = kind;
  s.inner = box(inner);
  s.mut_param = param;
  return s;
}
}  // namespace

SeqClassSpec mut_scale(const SeqClassSpec& inner, double factor) {
  return make_mut(ClassKind::MutScale, inner, factor);
}
SeqClassSpec mut_length_penalty(const SeqClassSpec& inner) {
  return make_mut(ClassKind::MutLengthPenalty, inner, 1.0);
}
SeqClassSpec mut_zero_bonus(const SeqClassSpec& inner) {
  return make_mut(ClassKind::MutZeroBonus, inner, 0.1);
}
SeqClassSpec mut_sign_bonus(const SeqClassSpec& inner) {
  return make_mut(ClassKind::MutSignBonus, inner, 0.1);
}
SeqClassSpec mut_coord_weight() {
  SeqClassSpec s;
  s.kind = ClassKind::MutCoordWeight;
  s.scalar_component = "l_2";
  return s;
}

double rad_norm(const FiniteSeq& s, int cap) {
  const int k = s.length();
  if (k == 0) return 0.0;
  if (k > cap)
    throw Error("rad enumeration cap exceeded (length " + std::to_string(k) + " > " +
                std::to_string(cap) + ")");
  // Enumerate sign patterns with the first sign fixed to +1; each pattern and
  // its negation contribute the same norm.
  Vector running = s.items[0];
  for (int j = 1; j < k; ++j) axpy_inplace(1.0, s.items[static_cast<std::size_t>(j)], running);

  std::vector<int> sign(static_cast<std::size_t>(k), 1);
  double acc = 0.0;
  double n0 = vec_norm(running);
  acc += n0 * n0;
  const std::uint64_t steps = k > 1 ? (std::uint64_t{1} << (k - 1)) : 1;
  for (std::uint64_t t = 1; t < steps; ++t) {
    int bit = std::countr_zero(t);
    int idx = bit + 1;  // sign of item 0 stays fixed
    double delta = sign[static_cast<std::size_t>(idx)] == 1 ? -2.0 : 2.0;
    axpy_inplace(delta, s.items[static_cast<std::size_t>(idx)], running);
    sign[static_cast<std::size_t>(idx)] = -sign[static_cast<std::size_t>(idx)];
    double n = vec_norm(running);
    acc += n * n;
  }
  return std::sqrt(acc / static_cast<double>(steps));
}

namespace {

NormResult weak_by_extreme_points(const FiniteSeq& s, const Exponent& p,
                                  const EvalOptions& opts) {
  Space ed = dual(s.space);
  std::vector<Vector> pts = extreme_points(ed, opts.sign_cap_dim);
  NormResult best;
  best.backend = "extreme-points";
  for (Vector& f : pts) {
    std::vector<double> evals;
    evals.reserve(s.items.size());
    for (const Vector& x : s.items) evals.push_back(pair(f, x));
    double v = lp_norm(evals, p);
    if (v > best.value) {
      best.value = v;
      best.certificate = f;
    }
  }
  if (!best.certificate && !pts.empty()) best.certificate = pts.front();
  return best;
}

NormResult weak_by_singular_value(const FiniteSeq& s) {
  std::vector<std::vector<double>> cols;
  cols.reserve(s.items.size());
  for (const Vector& x : s.items) cols.push_back(x.coords);
  SingularResult sv = top_singular_value(cols, s.space.dim);
  NormResult r;
  r.value = sv.sigma;
  r.backend = "singular-value";
  r.certificate = Vector(dual(s.space), sv.left);
  return r;
}

NormResult weak_by_ascent(const FiniteSeq& s, const Exponent& p, const EvalOptions& opts) {
  const Space ed = dual(s.space);
  const int d = ed.dim;
  const double pv = p.value();

  auto objective = [&](const std::vector<double>& f) {
    double acc = 0.0;
    if (pv == 1.0) {
      for (const Vector& x : s.items) {
        double t = 0.0;
        for (int i = 0; i < d; ++i) t += f[static_cast<std::size_t>(i)] * x[i];
        acc += std::fabs(t);
      }
      return acc;
    }
    for (const Vector& x : s.items) {
      double t = 0.0;
      for (int i = 0; i < d; ++i) t += f[static_cast<std::size_t>(i)] * x[i];
      acc += std::pow(std::fabs(t), pv);
    }
    return std::pow(acc, 1.0 / pv);
  };

  auto gradient = [&](const std::vector<double>& f) {
    std::vector<double> g(static_cast<std::size_t>(d), 0.0);
    double val = objective(f);
    for (const Vector& x : s.items) {
      double t = 0.0;
      for (int i = 0; i < d; ++i) t += f[static_cast<std::size_t>(i)] * x[i];
      double c;
      if (pv == 1.0) {
        c = t >= 0.0 ? 1.0 : -1.0;
      } else if (val == 0.0) {
        c = 1.0;  // climb out of the null set in some subgradient direction
      } else {
        c = (t >= 0.0 ? 1.0 : -1.0) * std::pow(std::fabs(t) / val, pv - 1.0);
      }
      for (int i = 0; i < d; ++i) g[static_cast<std::size_t>(i)] += c * x[i];
    }
    return g;
  };

  std::vector<std::vector<double>> warm;
  for (const Vector& x : s.items) {
    if (vec_norm(x) == 0.0) continue;
    warm.push_back(norming_functional(x).coords);
    if (warm.size() >= 8) break;
  }

  AscentResult r = maximize_on_sphere(d, ed.p, objective, gradient, warm, opts.ascent);
  NormResult out;
  out.value = r.value;
  out.backend = "ascent";
  out.certificate = Vector(ed, r.arg);
  return out;
}

}  // namespace

NormResult weak_norm(const FiniteSeq& s, const Exponent& p, const EvalOptions& opts) {
  if (s.length() == 0) return {0.0, "empty", std::nullopt};

  if (p.is_inf()) {
    // sup_f max_j |f(x_j)| = max_j ||x_j||.
    NormResult r;
    r.backend = "sup-reduction";
    int arg = -1;
    for (int j = 0; j < s.length(); ++j) {
      double n = vec_norm(s.items[static_cast<std::size_t>(j)]);
      if (n > r.value) {
        r.value = n;
        arg = j;
      }
    }
    if (arg >= 0 && r.value > 0.0)
      r.certificate = norming_functional(s.items[static_cast<std::size_t>(arg)]);
    return r;
  }

  WeakBackend b = opts.weak_backend;
  if (b == WeakBackend::Auto) {
    if (s.space.p.is_inf())
      b = WeakBackend::ExtremePoints;
    else if (s.space.p.is_one() && s.space.dim <= opts.sign_cap_dim)
      b = WeakBackend::ExtremePoints;
    else if (!s.space.p.is_one() && !s.space.p.is_inf() && s.space.p.value() == 2.0 &&
             p.value() == 2.0)
      b = WeakBackend::SingularValue;
    else
      b = WeakBackend::Ascent;
  }
  switch (b) {
    case WeakBackend::ExtremePoints:
      return weak_by_extreme_points(s, p, opts);
    case WeakBackend::SingularValue:
      if (s.space.p.is_inf() || s.space.p.is_one() || s.space.p.value() != 2.0 ||
          p.is_inf() || p.value() != 2.0)
        throw Error("singular-value backend needs p = 2 on a Euclidean space");
      return weak_by_singular_value(s);
    case WeakBackend::Ascent:
      return weak_by_ascent(s, p, opts);
    case WeakBackend::Auto:
      break;
  }
  throw Error("unreachable weak backend");
}

double fd_norm(const SeqClassSpec& cls, const FiniteSeq& s, const EvalOptions& opts) {
  double best = 0.0;
  for (int m = 1; m <= s.length(); ++m)
    best = std::max(best, class_norm(cls, s.prefix(m), opts));
  return best;
}

double class_norm(const SeqClassSpec& cls, const FiniteSeq& s, const EvalOptions& opts) {
  if (s.length() == 0) return 0.0;
  switch (cls.kind) {
    case ClassKind::LpAbs:
      return lp_of_norms(s, cls.p);
    case ClassKind::LInfSup:
      return sup_of_norms(s);
    case ClassKind::LpWeak:
      return weak_norm(s, cls.p, opts).value;
    case ClassKind::Rad:
      return rad_norm(s, opts.rad_cap);
    case ClassKind::Cohen:
      return cohen_norm(s, cls.p, opts).value;
    case ClassKind::Fd:
      return fd_norm(*cls.inner, s, opts);
    case ClassKind::Dual:
      return dual_norm(*cls.inner, s, opts).value;
    case ClassKind::MutScale:
      return cls.mut_param * class_norm(*cls.inner, s, opts);
    case ClassKind::MutLengthPenalty:
      return class_norm(*cls.inner, s, opts) + 1.0 / static_cast<double>(s.length());
    case ClassKind::MutZeroBonus: {
      int zeros = 0;
      for (const Vector& x : s.items)
        if (vec_norm(x) == 0.0) ++zeros;
      return class_norm(*cls.inner, s, opts) + cls.mut_param * zeros;
    }
    case ClassKind::MutSignBonus: {
      Vector sum = zero_vector(s.space);
      for (const Vector& x : s.items) axpy_inplace(1.0, x, sum);
      return class_norm(*cls.inner, s, opts) + cls.mut_param * vec_norm(sum);
    }
    case ClassKind::MutCoordWeight: {
      double acc = 0.0;
      for (const Vector& x : s.items) {
        double q = 0.0;
        for (int i = 0; i < x.dim(); ++i) {
          double w = i == 0 ? 2.0 : 1.0;
          q += w * w * x[i] * x[i];
        }
        acc += q;
      }
      return std::sqrt(acc);
    }
  }
  throw Error("unreachable class kind");
}

bool class_norm_is_exact(const SeqClassSpec& cls, const Space& space, int length,
                         const EvalOptions& opts) {
  switch (cls.kind) {
    case ClassKind::LpAbs:
    case ClassKind::LInfSup:
    case ClassKind::MutCoordWeight:
      return true;
    case ClassKind::Rad:
      return length <= opts.rad_cap;
    case ClassKind::LpWeak: {
      if (cls.p.is_inf()) return true;
      if (opts.weak_backend == WeakBackend::Ascent) return false;
      if (space.p.is_inf()) return true;
      if (space.p.is_one() && space.dim <= opts.sign_cap_dim) return true;
      if (!space.p.is_one() && space.p.value() == 2.0 && cls.p.value() == 2.0) return true;
      return false;
    }
    case ClassKind::Cohen:
    case ClassKind::Dual:
      return false;
    case ClassKind::Fd:
    case ClassKind::MutScale:
    case ClassKind::MutLengthPenalty:
    case ClassKind::MutZeroBonus:
    case ClassKind::MutSignBonus:
      return class_norm_is_exact(*cls.inner, space, length, opts);
  }
  return false;
}

double scalar_class_norm(const SeqClassSpec& cls, const std::vector<double>& lambdas,
                         const EvalOptions& opts) {
  Space k1 = scalar_space();
  FiniteSeq s(k1);
  for (double l : lambdas) s.push(Vector(k1, {l}));
  return class_norm(cls, s, opts);
}

SeqClassSpec parse_class(const std::string& text) {
  auto starts = [&](const char* prefix) { return text.rfind(prefix, 0) == 0; };
  if (text == "linf") return linf_sup();
  if (text == "rad") return rad_class();
  if (starts("lpw:")) return lp_weak(Exponent::parse(text.substr(4)));
  if (starts("lp:")) return lp_abs(Exponent::parse(text.substr(3)));
  if (starts("cohen:")) return cohen_class(Exponent::parse(text.substr(6)));
  if (starts("fd(") && text.back() == ')')
    return fd_of(parse_class(text.substr(3, text.size() - 4)));
  if (starts("dual(") && text.back() == ')')
    return dual_of(parse_class(text.substr(5, text.size() - 6)));
  // Broken-on-purpose classes; round-tripped so counterexample payloads can
  // be replayed. Not part of the documented grammar.
  if (starts("mut-scale(") && text.back() == ')') {
    std::string body = text.substr(10, text.size() - 11);
    auto semi = body.find(';');
    if (semi == std::string::npos) throw Error("bad mut-scale spec");
    return mut_scale(parse_class(body.substr(semi + 1)),
                     std::strtod(body.substr(0, semi).c_str(), nullptr));
  }
  if (starts("mut-length(") && text.back() == ')')
    return mut_length_penalty(parse_class(text.substr(11, text.size() - 12)));
  if (starts("mut-zero(") && text.back() == ')')
    return mut_zero_bonus(parse_class(text.substr(9, text.size() - 10)));
  if (starts("mut-sign(") && text.back() == ')')
    return mut_sign_bonus(parse_class(text.substr(9, text.size() - 10)));
  if (text == "mut-coordweight") return mut_coord_weight();
  throw Error("cannot parse class spec '" + text + "'");
}

}  // namespace seqsum
