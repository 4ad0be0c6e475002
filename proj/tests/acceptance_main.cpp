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

// Acceptance suite: one numbered check per release criterion, each printed
// as a PASS/FAIL line with the measured quantities. Criterion 9 drives the
// command-line binary, passed as argv[1].

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <string>
#include <vector>

#include "seqsum/io.hpp"
#include "seqsum/multilinear.hpp"
#include "seqsum/propcheck.hpp"
#include "seqsum/repro.hpp"
#include "seqsum/rng.hpp"

using namespace seqsum;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail) {
  std::printf("[%d] %-28s %s  %s\n", idx, name, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

FiniteSeq random_seq(Rng& rng, const Space& sp, int len, double zero_prob = 0.1) {
  FiniteSeq s(sp);
  for (int j = 0; j < len; ++j) {
    Vector v = zero_vector(sp);
    if (rng.uniform() >= zero_prob)
      for (int c = 0; c < sp.dim; ++c) v[c] = rng.gaussian();
    s.push(v);
  }
  return s;
}

std::string fmt(double v) { return format_double(v); }

// --- 1: Rademacher zero invariance -----------------------------------------

void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(101);
  const std::vector<Exponent> exps = {Exponent::of(1), Exponent::of(3, 2), Exponent::of(2),
                                      Exponent::of(3), Exponent::inf()};
  double maxdev = 0.0;
  for (int i = 0; i < 10000; ++i) {
    Space sp(rng.uniform_int(1, 6), exps[static_cast<std::size_t>(rng.uniform_int(0, 4))]);
    FiniteSeq s = random_seq(rng, sp, rng.uniform_int(1, 12));
    int pos = rng.uniform_int(0, s.length());
    double before = rad_norm(s);
    double after = rad_norm(s.with_inserted(pos, zero_vector(sp)));
    maxdev = std::max(maxdev, std::fabs(after - before));
  }
  double secs = seconds_since(t0);
  report(1, "rad zero-invariance", maxdev <= 1e-12 && secs < 30.0,
         "max deviation " + fmt(maxdev) + " over 10^4 samples in " + fmt(secs) + " s");
}

// --- 2: prefix-sup identity --------------------------------------------------

void criterion_2() {
  Rng rng(202);
  EvalOptions eo;
  double maxdev_exact = 0.0, maxdev_ascent = 0.0;
  const std::vector<Exponent> abs_ps = {Exponent::of(1), Exponent::of(3, 2), Exponent::of(2),
                                        Exponent::of(3)};
  // 2500 samples per class family, exact backends
  for (int i = 0; i < 2500; ++i) {
    // LpAbs with varying exponent
    {
      Space sp(rng.uniform_int(1, 5), abs_ps[static_cast<std::size_t>(rng.uniform_int(0, 3))]);
      SeqClassSpec cls = lp_abs(abs_ps[static_cast<std::size_t>(rng.uniform_int(0, 3))]);
      FiniteSeq s = random_seq(rng, sp, rng.uniform_int(1, 8));
      maxdev_exact =
          std::max(maxdev_exact, std::fabs(fd_norm(cls, s, eo) - class_norm(cls, s, eo)));
    }
    // LInfSup
    {
      Space sp(rng.uniform_int(1, 5), Exponent::of(2));
      FiniteSeq s = random_seq(rng, sp, rng.uniform_int(1, 8));
      maxdev_exact = std::max(
          maxdev_exact, std::fabs(fd_norm(linf_sup(), s, eo) - class_norm(linf_sup(), s, eo)));
    }
    // LpWeak on exact backends: l_inf, small l_1, Euclidean with p = 2
    {
      int pick = rng.uniform_int(0, 2);
      Space sp(rng.uniform_int(1, 5), pick == 0   ? Exponent::inf()
                                      : pick == 1 ? Exponent::of(1)
                                                  : Exponent::of(2));
      SeqClassSpec cls = lp_weak(pick == 2 ? Exponent::of(2)
                                           : abs_ps[static_cast<std::size_t>(rng.uniform_int(0, 3))]);
      FiniteSeq s = random_seq(rng, sp, rng.uniform_int(1, 8));
      maxdev_exact =
          std::max(maxdev_exact, std::fabs(fd_norm(cls, s, eo) - class_norm(cls, s, eo)));
    }
    // Rad
    {
      Space sp(rng.uniform_int(1, 5), rng.uniform() < 0.5 ? Exponent::of(2) : Exponent::inf());
      FiniteSeq s = random_seq(rng, sp, rng.uniform_int(1, 10));
      maxdev_exact = std::max(
          maxdev_exact, std::fabs(fd_norm(rad_class(), s, eo) - class_norm(rad_class(), s, eo)));
    }
  }
  // weak-norm ascent backend tier
  for (int i = 0; i < 300; ++i) {
    Space sp(rng.uniform_int(1, 3), rng.uniform() < 0.5 ? Exponent::of(3, 2) : Exponent::of(3));
    SeqClassSpec cls = lp_weak(rng.uniform() < 0.5 ? Exponent::of(2) : Exponent::of(3, 2));
    FiniteSeq s = random_seq(rng, sp, rng.uniform_int(1, 5));
    maxdev_ascent =
        std::max(maxdev_ascent, std::fabs(fd_norm(cls, s, eo) - class_norm(cls, s, eo)));
  }
  report(2, "prefix-sup identity", maxdev_exact <= 1e-12 && maxdev_ascent <= 1e-6,
         "max |fd - class| exact " + fmt(maxdev_exact) + ", ascent " + fmt(maxdev_ascent));
}

// --- 3: weak-norm backend agreement ------------------------------------------

void criterion_3() {
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(303);
  EvalOptions force;
  force.weak_backend = WeakBackend::Ascent;
  const std::vector<Exponent> ps = {Exponent::of(1), Exponent::of(3, 2), Exponent::of(2),
                                    Exponent::of(3)};
  double max_rel_ext = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Space sp(rng.uniform_int(1, 6), i % 2 ? Exponent::inf() : Exponent::of(1));
    Exponent p = ps[static_cast<std::size_t>(rng.uniform_int(0, 3))];
    FiniteSeq s = random_seq(rng, sp, rng.uniform_int(1, 6));
    double exact = weak_norm(s, p).value;
    double ascent = weak_norm(s, p, force).value;
    if (exact > 0.0) max_rel_ext = std::max(max_rel_ext, std::fabs(ascent - exact) / exact);
  }
  double max_rel_svd = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Space sp(rng.uniform_int(1, 6), Exponent::of(2));
    FiniteSeq s = random_seq(rng, sp, rng.uniform_int(1, 6));
    double exact = weak_norm(s, Exponent::of(2)).value;
    double ascent = weak_norm(s, Exponent::of(2), force).value;
    if (exact > 0.0) max_rel_svd = std::max(max_rel_svd, std::fabs(ascent - exact) / exact);
  }
  double secs = seconds_since(t0);
  report(3, "weak backend agreement",
         max_rel_ext <= 1e-6 && max_rel_svd <= 1e-9 && secs < 120.0,
         "rel gap vs extreme points " + fmt(max_rel_ext) + ", vs singular value " +
             fmt(max_rel_svd) + ", in " + fmt(secs) + " s");
}

// --- 4: rank-one divergence instance -----------------------------------------

void criterion_4() {
  auto t0 = std::chrono::steady_clock::now();
  const int kmax = 4096;
  Space e(kmax, Exponent::inf());
  MultilinearOp a = rank_one_bilinear(unit_vector(dual(e), 0), e);
  SeqFamily f1 = SeqFamily::unit_vectors(e);
  SeqFamily f2 = SeqFamily::scaled_pattern(1.0, unit_vector(e, 0));
  std::vector<SeqClassSpec> xs = {lp_weak(Exponent::of(1)), lp_weak(Exponent::of(2))};
  SeqClassSpec y = lp_abs(Exponent::of(1));
  EvalOptions eo;
  ProbeTrace t = divergence_probe(a.transposed(), xs, y, {f1, f2}, kmax, eo);
  ProbeTrace plain = divergence_probe(a, xs, y, {f1, f2}, kmax, eo);

  // (a) strict increase along k = 16, 32, ..., 4096
  bool increasing = true;
  double rho16 = 0.0, rho4096 = 0.0, prev = -1.0;
  for (const ProbeEntry& en : t.entries) {
    if (en.k == 16) rho16 = en.rho;
    if (en.k == 4096) rho4096 = en.rho;
    if (en.k >= 16) {
      if (prev >= 0.0 && en.rho <= prev) increasing = false;
      prev = en.rho;
    }
  }
  // (b) ratio threshold as stated
  bool ratio_gate = rho16 > 0.0 && rho4096 / rho16 > 4.0;
  // (c) trace matches the independently accumulated formula
  double maxdev = 0.0;
  double h = 0.0, s2 = 0.0;
  int j = 0;
  for (const ProbeEntry& en : t.entries) {
    while (j < en.k) {
      ++j;
      h += 1.0 / j;
      s2 += 1.0 / (static_cast<double>(j) * j);
    }
    maxdev = std::max(maxdev, std::fabs(en.rho - h / std::sqrt(s2)));
  }
  bool formula = maxdev <= 1e-9;
  // (d) untransposed ratios constant for k >= 1, as stated
  double plain_min = 1e300, plain_max = 0.0;
  for (const ProbeEntry& en : plain.entries) {
    plain_min = std::min(plain_min, en.rho);
    plain_max = std::max(plain_max, en.rho);
  }
  bool constant = plain_max - plain_min <= 1e-12;

  double secs = seconds_since(t0);
  bool pass = increasing && ratio_gate && formula && constant && secs < 60.0;
  report(4, "rank-one divergence", pass,
         std::string("increasing(16..4096)=") + (increasing ? "yes" : "no") +
             ", rho4096/rho16=" + fmt(rho16 > 0 ? rho4096 / rho16 : 0.0) +
             (ratio_gate ? " (>4)" : " (<=4)") + ", |rho-formula|<=" + fmt(maxdev) +
             ", plain range [" + fmt(plain_min) + ", " + fmt(plain_max) + "]" +
             (constant ? " constant" : " not constant") + ", " + fmt(secs) + " s");
}

// --- 5: symmetrization algebra ------------------------------------------------

void criterion_5() {
  Rng rng(505);
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 50 && ok; ++i) {
    int n = rng.uniform_int(2, 3);
    int d = rng.uniform_int(1, 4);
    int df = rng.uniform_int(1, 3);
    Space e(d, Exponent::of(2)), f(df, Exponent::of(2));
    std::size_t size = static_cast<std::size_t>(df);
    for (int t = 0; t < n; ++t) size *= static_cast<std::size_t>(d);
    std::vector<double> coeffs(size);
    for (double& c : coeffs) c = rng.gaussian();
    MultilinearOp a =
        MultilinearOp::dense(std::vector<Space>(static_cast<std::size_t>(n), e), f, coeffs);
    MultilinearOp s = a.symmetrized();

    MultilinearOp ss = s.symmetrized();
    for (std::size_t c = 0; c < s.dense_coeffs().size(); ++c)
      if (std::fabs(ss.dense_coeffs()[c] - s.dense_coeffs()[c]) > 1e-14) {
        ok = false;
        detail = "idempotence violated";
      }

    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      MultilinearOp p = s.permuted(sigma);
      for (std::size_t c = 0; c < s.dense_coeffs().size(); ++c)
        if (std::fabs(p.dense_coeffs()[c] - s.dense_coeffs()[c]) > 1e-14) {
          ok = false;
          detail = "permutation invariance violated";
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    if (n == 2) {
      MultilinearOp t = a.transposed();
      for (std::size_t c = 0; c < s.dense_coeffs().size(); ++c)
        if (s.dense_coeffs()[c] != (a.dense_coeffs()[c] + t.dense_coeffs()[c]) / 2.0) {
          ok = false;
          detail = "bilinear closed form not exact";
        }
    }
  }
  // trilinear scalar form x1 y2 z1 against its six-term hand enumeration
  {
    Space e(2, Exponent::of(2)), f(1, Exponent::of(2));
    std::vector<double> coeffs(8, 0.0);
    coeffs[(0 * 2 + 1) * 2 + 0] = 1.0;
    MultilinearOp tri = MultilinearOp::dense({e, e, e}, f, coeffs);
    MultilinearOp tris = tri.symmetrized();
    Rng r2(99);
    for (int t = 0; t < 20; ++t) {
      Vector x = zero_vector(e), y = zero_vector(e), z = zero_vector(e);
      for (int c = 0; c < 2; ++c) {
        x[c] = r2.gaussian();
        y[c] = r2.gaussian();
        z[c] = r2.gaussian();
      }
      auto form = [](const Vector& u, const Vector& v, const Vector& w) {
        return u[0] * v[1] * w[0];
      };
      double hand = (form(x, y, z) + form(x, z, y) + form(y, x, z) + form(y, z, x) +
                     form(z, x, y) + form(z, y, x)) /
                    6.0;
      if (std::fabs(tris.apply({x, y, z})[0] - hand) > 1e-14) {
        ok = false;
        detail = "trilinear hand enumeration mismatch";
      }
    }
  }
  report(5, "symmetrization algebra", ok, ok ? "idempotent, invariant, closed forms match" : detail);
}

// --- 6: permutation-average bound ----------------------------------------------

void criterion_6() {
  Rng rng(606);
  EvalOptions eo;
  SeqClassSpec y = lp_abs(Exponent::of(2));
  std::vector<SeqClassSpec> pool = {lp_abs(Exponent::of(2)), lp_abs(Exponent::of(1)), linf_sup(),
                                    rad_class()};
  int violations = 0;
  double worst = -1e300;
  for (int i = 0; i < 1000; ++i) {
    int n = rng.uniform_int(2, 3);
    int d = rng.uniform_int(1, 3);
    int k = rng.uniform_int(1, 5);
    Space e(d, Exponent::of(2));
    std::size_t size = static_cast<std::size_t>(d);
    for (int t = 0; t < n; ++t) size *= static_cast<std::size_t>(d);
    std::vector<double> coeffs(size);
    for (double& c : coeffs) c = rng.gaussian();
    MultilinearOp a =
        MultilinearOp::dense(std::vector<Space>(static_cast<std::size_t>(n), e), e, coeffs);
    SeqClassSpec x = pool[static_cast<std::size_t>(rng.uniform_int(0, 3))];
    std::vector<SeqClassSpec> xs(static_cast<std::size_t>(n), x);
    std::vector<FiniteSeq> ws;
    for (int s = 0; s < n; ++s) ws.push_back(random_seq(rng, e, k, 0.0));
    double lhs = summing_ratio(a.symmetrized(), xs, y, ws, k, eo);
    double rhs = 0.0;
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      rhs = std::max(rhs, summing_ratio(a.permuted(sigma), xs, y, ws, k, eo));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    worst = std::max(worst, lhs - rhs);
    if (lhs > rhs + 1e-9) ++violations;
  }
  report(6, "permutation-average bound", violations == 0,
         std::to_string(violations) + " violations over 1000 instances, worst margin " +
             fmt(worst));
}

// --- 7: duality agreement ------------------------------------------------------

void criterion_7() {
  Rng rng(707);
  EvalOptions eo;
  double max_rel = 0.0, max_oracle = 0.0;
  int oracle_checked = 0;
  for (int i = 0; i < 100; ++i) {
    int d = rng.uniform_int(2, 3);
    int k = rng.uniform_int(2, 4);
    Space sp(d, Exponent::of(2));
    FiniteSeq s = random_seq(rng, sp, k, 0.0);
    double dn = dual_norm(lp_weak(Exponent::of(2)), s, eo).value;
    double cn = cohen_norm(s, Exponent::of(2), eo).value;
    max_rel = std::max(max_rel, std::fabs(dn - cn) / std::max({dn, cn, 1e-30}));
    if (d == 2 && k <= 3) {
      double oracle = tiny_cohen_oracle_2d(s);
      max_oracle = std::max({max_oracle, std::fabs(dn - oracle), std::fabs(cn - oracle)});
      ++oracle_checked;
    }
  }
  report(7, "duality agreement", max_rel <= 0.05 && max_oracle <= 1e-3 && oracle_checked > 0,
         "dual-vs-cohen rel gap " + fmt(max_rel) + ", |value - oracle| " + fmt(max_oracle) +
             " on " + std::to_string(oracle_checked) + " tiny instances");
}

// --- 8: falsifier sensitivity ----------------------------------------------------

void criterion_8() {
  SamplerConfig cfg;
  cfg.samples = 10000;
  cfg.seed = 808;
  cfg.exponents = {Exponent::of(1), Exponent::of(2), Exponent::inf()};

  struct Entry {
    std::string name;
    bool mutant_found;
    bool genuine_clean;
  };
  std::vector<Entry> entries;
  SeqClassSpec l2 = lp_abs(Exponent::of(2));

  entries.push_back({"axioms", check_seqclass_axioms(mut_scale(l2, 0.5), cfg).counterexample,
                     !check_seqclass_axioms(l2, cfg).counterexample &&
                         !check_seqclass_axioms(rad_class(), cfg).counterexample});
  entries.push_back({"shrinking",
                     check_finitely_shrinking(mut_length_penalty(l2), cfg).counterexample,
                     !check_finitely_shrinking(rad_class(), cfg).counterexample &&
                         !check_finitely_shrinking(lp_weak(Exponent::of(2)), cfg).counterexample});
  entries.push_back({"zeroinv", check_zero_invariant(mut_zero_bonus(l2), cfg).counterexample,
                     !check_zero_invariant(rad_class(), cfg).counterexample &&
                         !check_zero_invariant(l2, cfg).counterexample &&
                         !check_zero_invariant(fd_of(lp_weak(Exponent::of(2))), cfg)
                              .counterexample});
  entries.push_back({"subseq",
                     check_subsequence_invariant(mut_length_penalty(l2), cfg).counterexample,
                     !check_subsequence_invariant(l2, cfg).counterexample &&
                         !check_subsequence_invariant(lp_weak(Exponent::of(2)), cfg)
                              .counterexample});
  SeqClassSpec half = l2;
  half.contraction_constant = 0.5;
  entries.push_back({"contraction", check_contraction(half, cfg).counterexample,
                     !check_contraction(l2, cfg).counterexample &&
                         !check_contraction(rad_class(), cfg).counterexample});
  entries.push_back({"spherical",
                     check_spherical_completeness(mut_sign_bonus(l2), cfg).counterexample,
                     !check_spherical_completeness(l2, cfg).counterexample &&
                         !check_spherical_completeness(rad_class(), cfg).counterexample &&
                         !check_spherical_completeness(lp_weak(Exponent::of(2)), cfg)
                              .counterexample});
  entries.push_back({"linstab", check_linear_stability(mut_coord_weight(), cfg).counterexample,
                     !check_linear_stability(l2, cfg).counterexample &&
                         !check_linear_stability(rad_class(), cfg).counterexample});
  SeqClassSpec l1 = lp_abs(Exponent::of(1));
  entries.push_back(
      {"scalar", check_scalar_condition({linf_sup(), linf_sup()}, l1, cfg).counterexample,
       !check_scalar_condition({l2, l2}, l1, cfg).counterexample &&
           !check_scalar_condition({l1, l1}, l1, cfg).counterexample});
  entries.push_back({"finleq", fin_leq_falsify(l2, lp_weak(Exponent::of(2)), cfg).counterexample,
                     !fin_leq_falsify(lp_weak(Exponent::of(2)), l2, cfg).counterexample});
  SeqClassSpec fdw = fd_of(lp_weak(Exponent::of(2)));
  entries.push_back(
      {"dominated", jointly_dominated_check({l2}, lp_weak(Exponent::of(2)), cfg).counterexample,
       !jointly_dominated_check({lp_weak(Exponent::of(2)), fdw}, fdw, cfg).counterexample});

  bool pass = true;
  std::string missing;
  for (const Entry& e : entries) {
    if (!e.mutant_found || !e.genuine_clean) {
      pass = false;
      missing += " " + e.name + (e.mutant_found ? "" : "[mutant-missed]") +
                 (e.genuine_clean ? "" : "[false-alarm]");
    }
  }
  report(8, "falsifier sensitivity", pass,
         pass ? "all 10 checkers catch their mutants, none flag the genuine classes"
              : "problems:" + missing);
}

// --- 9: byte-identical reruns ------------------------------------------------------

void criterion_9(const char* cli) {
  namespace fs = std::filesystem;
  if (!cli) {
    report(9, "repro determinism", false, "no CLI binary path provided");
    return;
  }
  fs::path base = fs::temp_directory_path() / "seqsum_acceptance";
  fs::remove_all(base);
  fs::create_directories(base);
  std::string dir_a = (base / "a").string(), dir_b = (base / "b").string();
  std::string log_a = (base / "a.log").string(), log_b = (base / "b.log").string();
  std::string cmd_a =
      std::string("\"") + cli + "\" --seed 7 repro all --out \"" + dir_a + "\" > \"" + log_a + "\"";
  std::string cmd_b =
      std::string("\"") + cli + "\" --seed 7 repro all --out \"" + dir_b + "\" > \"" + log_b + "\"";
  int rc_a = std::system(cmd_a.c_str());
  int rc_b = std::system(cmd_b.c_str());

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  };
  bool identical = true;
  int files = 0;
  for (const auto& entry : fs::directory_iterator(dir_a)) {
    if (entry.path().extension() != ".csv") continue;
    ++files;
    fs::path other = fs::path(dir_b) / entry.path().filename();
    if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) identical = false;
  }
  bool pass = rc_a == 0 && rc_b == 0 && identical && files == 8;
  report(9, "repro determinism", pass,
         "exit codes " + std::to_string(rc_a) + "/" + std::to_string(rc_b) + ", " +
             std::to_string(files) + " CSV files byte-identical: " + (identical ? "yes" : "no"));
}

}  // namespace

int main(int argc, char** argv) {
  std::printf("acceptance suite (seeds fixed, tolerances pinned in code)\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9(argc > 1 ? argv[1] : nullptr);
  std::printf("%d of 9 criteria passed\n", 9 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
