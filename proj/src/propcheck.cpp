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

#include "seqsum/propcheck.hpp"

#include <algorithm>
#include <cmath>

#include "seqsum/io.hpp"
#include "seqsum/linalg.hpp"
#include "seqsum/rng.hpp"

namespace seqsum {

namespace {

using nlohmann::json;

std::uint64_t stream_for(const std::string& property, std::uint64_t seed) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : property) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h ^ seed;
}

Space sample_space(const SamplerConfig& cfg, Rng& rng) {
  int dim = cfg.dims[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(cfg.dims.size()) - 1))];
  Exponent p = cfg.exponents[static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<int>(cfg.exponents.size()) - 1))];
  return Space(dim, p);
}

FiniteSeq sample_seq(const Space& sp, int len, Rng& rng, double zero_prob) {
  FiniteSeq s(sp);
  for (int j = 0; j < len; ++j) {
    Vector v = zero_vector(sp);
    if (rng.uniform() >= zero_prob)
      for (int i = 0; i < sp.dim; ++i) v[i] = rng.gaussian();
    s.push(v);
  }
  return s;
}

double tol_for(const SeqClassSpec& cls, const Space& sp, int len, const SamplerConfig& cfg) {
  return class_norm_is_exact(cls, sp, len) ? cfg.tol_exact : cfg.tol_opt;
}

json seq_payload(const FiniteSeq& s) { return seq_to_json(s); }

PropertyReport make_report(const std::string& property, std::vector<std::string> classes,
                           const SamplerConfig& cfg, const std::string& mode) {
  PropertyReport rep;
  rep.property = property;
  rep.classes = std::move(classes);
  rep.seed = cfg.seed;
  rep.mode = mode;
  return rep;
}

void set_counterexample(PropertyReport& rep, json payload, double lhs, double rhs, double tol,
                        int sample_index) {
  payload["checker"] = rep.property;
  payload["mode"] = rep.mode;
  payload["lhs"] = lhs;
  payload["rhs"] = rhs;
  payload["tolerance"] = tol;
  payload["sample_index"] = sample_index;
  rep.payload = std::move(payload);
  rep.counterexample = true;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.tolerance = tol;
}

bool violates(const std::string& mode, double lhs, double rhs, double tol) {
  if (mode == "leq") return lhs > rhs + tol;
  return std::fabs(lhs - rhs) > tol;
}

// ||T|| on E; exact where possible, ascent lower estimate otherwise.
double operator_norm_any(const Matrix& t, const Space& e, const EvalOptions& opts) {
  if (e.p.is_one() || e.p.is_inf() || e.p.value() == 2.0) return operator_norm_exact(t, e);
  auto objective = [&](const std::vector<double>& x) {
    return lp_norm(matvec(t, x), e.p);
  };
  auto gradient = [&](const std::vector<double>& x) {
    std::vector<double> y = matvec(t, x);
    double n = lp_norm(y, e.p);
    std::vector<double> u(y.size(), 0.0);
    double pv = e.p.value();
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (n == 0.0)
        u[i] = 1.0;
      else
        u[i] = (y[i] >= 0.0 ? 1.0 : -1.0) * std::pow(std::fabs(y[i]) / n, pv - 1.0);
    }
    std::vector<double> g(static_cast<std::size_t>(t.cols), 0.0);
    for (int i = 0; i < t.rows; ++i)
      for (int j = 0; j < t.cols; ++j)
        g[static_cast<std::size_t>(j)] += t.at(i, j) * u[static_cast<std::size_t>(i)];
    return g;
  };
  std::vector<std::vector<double>> warm;
  for (int j = 0; j < e.dim; ++j) warm.push_back(unit_vector(e, j).coords);
  return maximize_on_sphere(e.dim, e.p, objective, gradient, warm, opts.ascent).value;
}

// Shared evaluation routines: the sampling loops and the replay path both go
// through these, so a stored counterexample recomputes with identical
// backends.

std::pair<double, double> eval_linf_embed(const SeqClassSpec& cls, const FiniteSeq& s,
                                          const EvalOptions& opts) {
  double sup = 0.0;
  for (const Vector& x : s.items) sup = std::max(sup, vec_norm(x));
  return {sup, class_norm(cls, s, opts)};
}

std::pair<double, double> eval_unit_norm(const SeqClassSpec& cls, int length, int pos,
                                         const EvalOptions& opts) {
  Space k1 = scalar_space();
  FiniteSeq s(k1);
  for (int j = 0; j < length; ++j) s.push(Vector(k1, {j == pos ? 1.0 : 0.0}));
  return {class_norm(cls, s, opts), 1.0};
}

std::pair<double, double> eval_shrink(const SeqClassSpec& cls, const FiniteSeq& s, int drop,
                                      const EvalOptions& opts) {
  return {class_norm(cls, s.without(drop), opts), class_norm(cls, s, opts)};
}

std::pair<double, double> eval_zeroinv(const SeqClassSpec& cls, const FiniteSeq& s, int pos,
                                       const EvalOptions& opts) {
  return {class_norm(cls, s.with_inserted(pos, zero_vector(s.space)), opts),
          class_norm(cls, s, opts)};
}

std::pair<double, double> eval_subseq(const SeqClassSpec& cls, const FiniteSeq& s,
                                      const std::vector<int>& keep, const EvalOptions& opts) {
  FiniteSeq sel(s.space);
  for (int j = 0; j < s.length(); ++j)
    if (keep[static_cast<std::size_t>(j)]) sel.push(s.items[static_cast<std::size_t>(j)]);
  return {class_norm(cls, sel, opts), class_norm(cls, s, opts)};
}

std::pair<double, double> eval_scaled(const SeqClassSpec& cls, const FiniteSeq& s,
                                      const std::vector<double>& alphas, double constant,
                                      const EvalOptions& opts) {
  FiniteSeq scaled(s.space);
  double amax = 0.0;
  for (int j = 0; j < s.length(); ++j) {
    scaled.push(scale(alphas[static_cast<std::size_t>(j)], s.items[static_cast<std::size_t>(j)]));
    amax = std::max(amax, std::fabs(alphas[static_cast<std::size_t>(j)]));
  }
  return {class_norm(cls, scaled, opts), constant * amax * class_norm(cls, s, opts)};
}

std::pair<double, double> eval_spherical(const SeqClassSpec& cls, const FiniteSeq& s,
                                         const std::vector<double>& signs,
                                         const EvalOptions& opts) {
  FiniteSeq flipped(s.space);
  for (int j = 0; j < s.length(); ++j)
    flipped.push(scale(signs[static_cast<std::size_t>(j)], s.items[static_cast<std::size_t>(j)]));
  return {class_norm(cls, flipped, opts), class_norm(cls, s, opts)};
}

std::pair<double, double> eval_linstab(const SeqClassSpec& cls, const FiniteSeq& s,
                                       const Matrix& t, const EvalOptions& opts) {
  FiniteSeq mapped(s.space);
  for (const Vector& x : s.items) mapped.push(Vector(s.space, matvec(t, x.coords)));
  double tn = operator_norm_any(t, s.space, opts);
  return {class_norm(cls, mapped, opts), tn * class_norm(cls, s, opts)};
}

std::pair<double, double> eval_scalar(const std::vector<SeqClassSpec>& xs, const SeqClassSpec& y,
                                      const std::vector<std::vector<double>>& tuples,
                                      const EvalOptions& opts) {
  std::size_t k = tuples.front().size();
  std::vector<double> prod(k, 1.0);
  double rhs = 1.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) prod[j] *= tuples[i][j];
    rhs *= scalar_class_norm(xs[i], tuples[i], opts);
  }
  return {scalar_class_norm(y, prod, opts), rhs};
}

}  // namespace

std::string PropertyReport::to_text() const {
  std::string line = "property=" + property + " classes=";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) line += "|";
    line += classes[i];
  }
  line += " verdict=" + verdict() + " samples=" + std::to_string(samples_tested) +
          " seed=" + std::to_string(seed) + " mode=" + mode + "\n";
  if (counterexample) {
    line += "payload=" + payload.dump() + "\n";
    line += "summary: " + property + " violated: lhs=" + format_double(lhs) +
            " rhs=" + format_double(rhs) + " tol=" + format_double(tolerance) + "\n";
  } else {
    line += "summary: " + property + ": no counterexample in " +
            std::to_string(samples_tested) + " samples\n";
  }
  return line;
}

PropertyReport check_seqclass_axioms(const SeqClassSpec& cls, const SamplerConfig& cfg) {
  PropertyReport rep = make_report("axioms", {cls.str()}, cfg, "mixed");
  Rng rng(stream_for("axioms", cfg.seed));
  EvalOptions opts;
  for (int i = 0; i < cfg.samples; ++i) {
    Space sp = sample_space(cfg, rng);
    int len = rng.uniform_int(std::max(1, cfg.min_len), cfg.max_len);
    FiniteSeq s = sample_seq(sp, len, rng, cfg.zero_item_prob);
    double tol = tol_for(cls, sp, len, cfg);
    rep.samples_tested = i + 1;

    // X(E) embeds into l_inf(E) with norm <= 1. The optimizer-backed norms
    // sit on the right and their warm starts dominate the left side, so a
    // lower bound cannot raise a false alarm here.
    auto [sup, full] = eval_linf_embed(cls, s, opts);
    if (sup > full + tol) {
      json payload;
      payload["axiom"] = "linf-embed";
      payload["class"] = cls.str();
      payload["sequence"] = seq_payload(s);
      rep.mode = "leq";
      set_counterexample(rep, payload, sup, full, tol, i);
      return rep;
    }

    // ||e_j||_{X(K)} = 1 at every position.
    int pos = rng.uniform_int(0, len - 1);
    double unit_tol = tol_for(cls, scalar_space(), len, cfg);
    auto [val, one] = eval_unit_norm(cls, len, pos, opts);
    if (std::fabs(val - one) > unit_tol) {
      json payload;
      payload["axiom"] = "unit-norm";
      payload["class"] = cls.str();
      payload["length"] = len;
      payload["pos"] = pos;
      rep.mode = "eq";
      set_counterexample(rep, payload, val, one, unit_tol, i);
      return rep;
    }
  }
  return rep;
}

PropertyReport check_finitely_shrinking(const SeqClassSpec& cls, const SamplerConfig& cfg) {
  PropertyReport rep = make_report("shrinking", {cls.str()}, cfg, "leq");
  Rng rng(stream_for("shrinking", cfg.seed));
  EvalOptions opts;
  for (int i = 0; i < cfg.samples; ++i) {
    Space sp = sample_space(cfg, rng);
    int len = rng.uniform_int(std::max(1, cfg.min_len), cfg.max_len);
    FiniteSeq s = sample_seq(sp, len, rng, cfg.zero_item_prob);
    double tol = tol_for(cls, sp, len, cfg);
    rep.samples_tested = i + 1;
    for (int drop = 0; drop < len; ++drop) {
      auto [lhs, rhs] = eval_shrink(cls, s, drop, opts);
      if (violates(rep.mode, lhs, rhs, tol)) {
        json payload;
        payload["class"] = cls.str();
        payload["sequence"] = seq_payload(s);
        payload["drop_index"] = drop;
        set_counterexample(rep, payload, lhs, rhs, tol, i);
        return rep;
      }
    }
  }
  return rep;
}

PropertyReport check_zero_invariant(const SeqClassSpec& cls, const SamplerConfig& cfg) {
  PropertyReport rep = make_report("zeroinv", {cls.str()}, cfg, "eq");
  Rng rng(stream_for("zeroinv", cfg.seed));
  EvalOptions opts;
  for (int i = 0; i < cfg.samples; ++i) {
    Space sp = sample_space(cfg, rng);
    int len = rng.uniform_int(std::max(1, cfg.min_len), cfg.max_len);
    FiniteSeq s = sample_seq(sp, len, rng, cfg.zero_item_prob);
    double tol = tol_for(cls, sp, len + 1, cfg);
    int pos = rng.uniform_int(0, len);
    rep.samples_tested = i + 1;
    auto [lhs, rhs] = eval_zeroinv(cls, s, pos, opts);
    if (violates(rep.mode, lhs, rhs, tol)) {
      json payload;
      payload["class"] = cls.str();
      payload["sequence"] = seq_payload(s);
      payload["insert_pos"] = pos;
      set_counterexample(rep, payload, lhs, rhs, tol, i);
      return rep;
    }
  }
  return rep;
}

PropertyReport check_subsequence_invariant(const SeqClassSpec& cls, const SamplerConfig& cfg) {
  PropertyReport rep = make_report("subseq", {cls.str()}, cfg, "leq");
  Rng rng(stream_for("subseq", cfg.seed));
  EvalOptions opts;
  for (int i = 0; i < cfg.samples; ++i) {
    Space sp = sample_space(cfg, rng);
    int len = rng.uniform_int(std::max(1, cfg.min_len), cfg.max_len);
    FiniteSeq s = sample_seq(sp, len, rng, cfg.zero_item_prob);
    double tol = tol_for(cls, sp, len, cfg);
    std::vector<int> keep(static_cast<std::size_t>(len));
    for (int& b : keep) b = rng.uniform_int(0, 1);
    rep.samples_tested = i + 1;
    auto [lhs, rhs] = eval_subseq(cls, s, keep, opts);
    if (violates(rep.mode, lhs, rhs, tol)) {
      json payload;
      payload["class"] = cls.str();
      payload["sequence"] = seq_payload(s);
      payload["keep_mask"] = keep;
      set_counterexample(rep, payload, lhs, rhs, tol, i);
      return rep;
    }
  }
  return rep;
}

PropertyReport check_contraction(const SeqClassSpec& cls, const SamplerConfig& cfg) {
  PropertyReport rep = make_report("contraction", {cls.str()}, cfg, "leq");
  Rng rng(stream_for("contraction", cfg.seed));
  EvalOptions opts;
  for (int i = 0; i < cfg.samples; ++i) {
    Space sp = sample_space(cfg, rng);
    int len = rng.uniform_int(std::max(1, cfg.min_len), cfg.max_len);
    FiniteSeq s = sample_seq(sp, len, rng, cfg.zero_item_prob);
    double tol = tol_for(cls, sp, len, cfg);
    std::vector<double> alphas(static_cast<std::size_t>(len));
    for (double& a : alphas) a = rng.uniform(-1.0, 1.0);
    rep.samples_tested = i + 1;
    auto [lhs, rhs] = eval_scaled(cls, s, alphas, cls.contraction_constant, opts);
    if (violates(rep.mode, lhs, rhs, tol)) {
      json payload;
      payload["class"] = cls.str();
      payload["sequence"] = seq_payload(s);
      payload["alphas"] = alphas;
      payload["constant"] = cls.contraction_constant;
      set_counterexample(rep, payload, lhs, rhs, tol, i);
      return rep;
    }
  }
  return rep;
}

PropertyReport check_spherical_completeness(const SeqClassSpec& cls, const SamplerConfig& cfg) {
  PropertyReport rep = make_report("spherical", {cls.str()}, cfg, "eq");
  Rng rng(stream_for("spherical", cfg.seed));
  EvalOptions opts;
  for (int i = 0; i < cfg.samples; ++i) {
    Space sp = sample_space(cfg, rng);
    int len = rng.uniform_int(std::max(1, cfg.min_len), cfg.max_len);
    FiniteSeq s = sample_seq(sp, len, rng, cfg.zero_item_prob);
    double tol = tol_for(cls, sp, len, cfg);
    std::vector<double> signs(static_cast<std::size_t>(len));
    for (double& a : signs) a = rng.sign();
    rep.samples_tested = i + 1;
    auto [lhs, rhs] = eval_spherical(cls, s, signs, opts);
    if (violates(rep.mode, lhs, rhs, tol)) {
      json payload;
      payload["class"] = cls.str();
      payload["sequence"] = seq_payload(s);
      payload["signs"] = signs;
      set_counterexample(rep, payload, lhs, rhs, tol, i);
      return rep;
    }
  }
  return rep;
}

PropertyReport check_linear_stability(const SeqClassSpec& cls, const SamplerConfig& cfg) {
  PropertyReport rep = make_report("linstab", {cls.str()}, cfg, "leq");
  Rng rng(stream_for("linstab", cfg.seed));
  EvalOptions opts;
  for (int i = 0; i < cfg.samples; ++i) {
    Space sp = sample_space(cfg, rng);
    int len = rng.uniform_int(std::max(1, cfg.min_len), cfg.max_len);
    FiniteSeq s = sample_seq(sp, len, rng, cfg.zero_item_prob);
    // The ascent estimate of ||T|| under-estimates the right side on
    // exponents outside {1, 2, inf}; widen the tolerance there.
    bool exact_opnorm = sp.p.is_one() || sp.p.is_inf() || sp.p.value() == 2.0;
    double tol = std::max(tol_for(cls, sp, len, cfg), exact_opnorm ? 0.0 : cfg.tol_opt);
    Matrix t(sp.dim, sp.dim);
    for (double& v : t.a) v = rng.gaussian();
    rep.samples_tested = i + 1;
    auto [lhs, rhs] = eval_linstab(cls, s, t, opts);
    if (violates(rep.mode, lhs, rhs, tol)) {
      json payload;
      payload["class"] = cls.str();
      payload["sequence"] = seq_payload(s);
      payload["matrix"] = t.a;
      set_counterexample(rep, payload, lhs, rhs, tol, i);
      return rep;
    }
  }
  return rep;
}

PropertyReport check_scalar_condition(const std::vector<SeqClassSpec>& xs,
                                      const SeqClassSpec& y, const SamplerConfig& cfg) {
  std::vector<std::string> names;
  for (const SeqClassSpec& x : xs) names.push_back(x.str());
  names.push_back(y.str());
  PropertyReport rep = make_report("scalar", std::move(names), cfg, "leq");
  Rng rng(stream_for("scalar", cfg.seed));
  EvalOptions opts;
  for (int i = 0; i < cfg.samples; ++i) {
    int len = rng.uniform_int(std::max(1, cfg.min_len), cfg.max_len);
    std::vector<std::vector<double>> tuples(xs.size(), std::vector<double>(static_cast<std::size_t>(len)));
    for (auto& tup : tuples)
      for (double& v : tup) v = rng.gaussian();
    double tol = cfg.tol_exact;
    for (const SeqClassSpec& x : xs)
      tol = std::max(tol, tol_for(x, scalar_space(), len, cfg));
    tol = std::max(tol, tol_for(y, scalar_space(), len, cfg));
    rep.samples_tested = i + 1;
    auto [lhs, rhs] = eval_scalar(xs, y, tuples, opts);
    if (violates(rep.mode, lhs, rhs, tol)) {
      json payload;
      payload["tuples"] = tuples;
      json cl = json::array();
      for (const SeqClassSpec& x : xs) cl.push_back(x.str());
      payload["x_classes"] = cl;
      payload["y_class"] = y.str();
      set_counterexample(rep, payload, lhs, rhs, tol, i);
      return rep;
    }
  }
  return rep;
}

PropertyReport fin_leq_falsify(const SeqClassSpec& x, const SeqClassSpec& y,
                               const SamplerConfig& cfg) {
  PropertyReport rep = make_report("finleq", {x.str(), y.str()}, cfg, "leq");
  Rng rng(stream_for("finleq", cfg.seed));
  EvalOptions opts;
  for (int i = 0; i < cfg.samples; ++i) {
    Space sp = sample_space(cfg, rng);
    int len = rng.uniform_int(std::max(1, cfg.min_len), cfg.max_len);
    FiniteSeq s = sample_seq(sp, len, rng, cfg.zero_item_prob);
    double tol = std::max(tol_for(x, sp, len, cfg), tol_for(y, sp, len, cfg));
    rep.samples_tested = i + 1;
    double lhs = class_norm(x, s, opts);
    double rhs = class_norm(y, s, opts);
    if (violates(rep.mode, lhs, rhs, tol)) {
      json payload;
      payload["class"] = x.str();
      payload["class2"] = y.str();
      payload["sequence"] = seq_payload(s);
      set_counterexample(rep, payload, lhs, rhs, tol, i);
      return rep;
    }
  }
  return rep;
}

PropertyReport jointly_dominated_check(const std::vector<SeqClassSpec>& classes,
                                       const SeqClassSpec& x, const SamplerConfig& cfg) {
  std::vector<std::string> names;
  for (const SeqClassSpec& c : classes) names.push_back(c.str());
  names.push_back(x.str());
  PropertyReport rep = make_report("dominated", std::move(names), cfg, "leq");
  Rng rng(stream_for("dominated", cfg.seed));
  EvalOptions opts;
  for (int i = 0; i < cfg.samples; ++i) {
    Space sp = sample_space(cfg, rng);
    int len = rng.uniform_int(std::max(1, cfg.min_len), cfg.max_len);
    FiniteSeq s = sample_seq(sp, len, rng, cfg.zero_item_prob);
    rep.samples_tested = i + 1;
    double rhs = class_norm(x, s, opts);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      double tol = std::max(tol_for(classes[c], sp, len, cfg), tol_for(x, sp, len, cfg));
      double lhs = class_norm(classes[c], s, opts);
      if (violates(rep.mode, lhs, rhs, tol)) {
        json payload;
        payload["class"] = classes[c].str();
        payload["class2"] = x.str();
        payload["sequence"] = seq_payload(s);
        payload["violating_index"] = c;
        set_counterexample(rep, payload, lhs, rhs, tol, i);
        return rep;
      }
    }
  }
  return rep;
}

ReplayResult replay(const PropertyReport& report) {
  if (!report.counterexample) throw Error("report has no counterexample to replay");
  const json& p = report.payload;
  EvalOptions opts;
  ReplayResult r;
  r.mode = p.at("mode").get<std::string>();
  r.tolerance = p.at("tolerance").get<double>();
  const std::string checker = p.at("checker").get<std::string>();

  auto load_seq = [&]() { return seq_from_json(p.at("sequence")); };

  if (checker == "axioms") {
    SeqClassSpec cls = parse_class(p.at("class").get<std::string>());
    if (p.at("axiom") == "linf-embed") {
      auto [lhs, rhs] = eval_linf_embed(cls, load_seq(), opts);
      r.lhs = lhs;
      r.rhs = rhs;
    } else {
      auto [lhs, rhs] =
          eval_unit_norm(cls, p.at("length").get<int>(), p.at("pos").get<int>(), opts);
      r.lhs = lhs;
      r.rhs = rhs;
    }
  } else if (checker == "shrinking") {
    SeqClassSpec cls = parse_class(p.at("class").get<std::string>());
    auto [lhs, rhs] = eval_shrink(cls, load_seq(), p.at("drop_index").get<int>(), opts);
    r.lhs = lhs;
    r.rhs = rhs;
  } else if (checker == "zeroinv") {
    SeqClassSpec cls = parse_class(p.at("class").get<std::string>());
    auto [lhs, rhs] = eval_zeroinv(cls, load_seq(), p.at("insert_pos").get<int>(), opts);
    r.lhs = lhs;
    r.rhs = rhs;
  } else if (checker == "subseq") {
    SeqClassSpec cls = parse_class(p.at("class").get<std::string>());
    auto [lhs, rhs] =
        eval_subseq(cls, load_seq(), p.at("keep_mask").get<std::vector<int>>(), opts);
    r.lhs = lhs;
    r.rhs = rhs;
  } else if (checker == "contraction") {
    SeqClassSpec cls = parse_class(p.at("class").get<std::string>());
    auto [lhs, rhs] = eval_scaled(cls, load_seq(), p.at("alphas").get<std::vector<double>>(),
                                  p.at("constant").get<double>(), opts);
    r.lhs = lhs;
    r.rhs = rhs;
  } else if (checker == "spherical") {
    SeqClassSpec cls = parse_class(p.at("class").get<std::string>());
    auto [lhs, rhs] =
        eval_spherical(cls, load_seq(), p.at("signs").get<std::vector<double>>(), opts);
    r.lhs = lhs;
    r.rhs = rhs;
  } else if (checker == "linstab") {
    SeqClassSpec cls = parse_class(p.at("class").get<std::string>());
    FiniteSeq s = load_seq();
    Matrix t(s.space.dim, s.space.dim);
    t.a = p.at("matrix").get<std::vector<double>>();
    auto [lhs, rhs] = eval_linstab(cls, s, t, opts);
    r.lhs = lhs;
    r.rhs = rhs;
  } else if (checker == "scalar") {
    std::vector<SeqClassSpec> xs;
    for (const auto& c : p.at("x_classes")) xs.push_back(parse_class(c.get<std::string>()));
    SeqClassSpec y = parse_class(p.at("y_class").get<std::string>());
    auto [lhs, rhs] =
        eval_scalar(xs, y, p.at("tuples").get<std::vector<std::vector<double>>>(), opts);
    r.lhs = lhs;
    r.rhs = rhs;
  } else if (checker == "finleq" || checker == "dominated") {
    SeqClassSpec x = parse_class(p.at("class").get<std::string>());
    SeqClassSpec y = parse_class(p.at("class2").get<std::string>());
    FiniteSeq s = load_seq();
    r.lhs = class_norm(x, s, opts);
    r.rhs = class_norm(y, s, opts);
  } else {
    throw Error("unknown checker in payload: " + checker);
  }

  r.violated = violates(r.mode, r.lhs, r.rhs, r.tolerance);
  return r;
}

PropertyReport run_checker(const std::string& property, const std::vector<SeqClassSpec>& classes,
                           const SamplerConfig& cfg) {
  auto need = [&](std::size_t n) {
    if (classes.size() != n)
      throw Error("property '" + property + "' needs " + std::to_string(n) + " class(es)");
  };
  if (property == "axioms") {
    need(1);
    return check_seqclass_axioms(classes[0], cfg);
  }
  if (property == "shrinking") {
    need(1);
    return check_finitely_shrinking(classes[0], cfg);
  }
  if (property == "zeroinv") {
    need(1);
    return check_zero_invariant(classes[0], cfg);
  }
  if (property == "subseq") {
    need(1);
    return check_subsequence_invariant(classes[0], cfg);
  }
  if (property == "contraction") {
    need(1);
    return check_contraction(classes[0], cfg);
  }
  if (property == "spherical") {
    need(1);
    return check_spherical_completeness(classes[0], cfg);
  }
  if (property == "linstab") {
    need(1);
    return check_linear_stability(classes[0], cfg);
  }
  if (property == "scalar") {
    if (classes.size() < 2) throw Error("scalar needs X_1..X_n plus Y");
    std::vector<SeqClassSpec> xs(classes.begin(), classes.end() - 1);
    return check_scalar_condition(xs, classes.back(), cfg);
  }
  if (property == "finleq") {
    need(2);
    return fin_leq_falsify(classes[0], classes[1], cfg);
  }
  if (property == "dominated") {
    if (classes.size() < 2) throw Error("dominated needs X_1..X_n plus X");
    std::vector<SeqClassSpec> cs(classes.begin(), classes.end() - 1);
    return jointly_dominated_check(cs, classes.back(), cfg);
  }
  throw Error("unknown property '" + property + "'");
}

}  // namespace seqsum
