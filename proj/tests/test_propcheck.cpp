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

#include <doctest.h>

#include "seqsum/propcheck.hpp"

using namespace seqsum;

namespace {

SamplerConfig quick(int samples = 400) {
  SamplerConfig cfg;
  cfg.samples = samples;
  cfg.seed = 2024;
  // exact weak backends only: l_inf, small l_1, Euclidean
  cfg.exponents = {Exponent::of(1), Exponent::of(2), Exponent::inf()};
  return cfg;
}

}  // namespace

TEST_CASE("genuine classes pass the checkers") {
  SamplerConfig cfg = quick();
  CHECK_FALSE(check_seqclass_axioms(lp_abs(Exponent::of(2)), cfg).counterexample);
  CHECK_FALSE(check_seqclass_axioms(rad_class(), cfg).counterexample);
  CHECK_FALSE(check_finitely_shrinking(rad_class(), cfg).counterexample);
  CHECK_FALSE(check_finitely_shrinking(lp_weak(Exponent::of(2)), cfg).counterexample);
  CHECK_FALSE(check_zero_invariant(rad_class(), cfg).counterexample);
  CHECK_FALSE(check_zero_invariant(lp_abs(Exponent::of(3, 2)), cfg).counterexample);
  CHECK_FALSE(check_zero_invariant(fd_of(lp_weak(Exponent::of(2))), cfg).counterexample);
  CHECK_FALSE(check_subsequence_invariant(lp_abs(Exponent::of(2)), cfg).counterexample);
  CHECK_FALSE(check_subsequence_invariant(lp_weak(Exponent::of(2)), cfg).counterexample);
  CHECK_FALSE(check_contraction(lp_abs(Exponent::of(2)), cfg).counterexample);
  CHECK_FALSE(check_contraction(rad_class(), cfg).counterexample);
  CHECK_FALSE(check_spherical_completeness(lp_abs(Exponent::of(2)), cfg).counterexample);
  CHECK_FALSE(check_spherical_completeness(rad_class(), cfg).counterexample);
  CHECK_FALSE(check_spherical_completeness(lp_weak(Exponent::of(2)), cfg).counterexample);
  CHECK_FALSE(check_linear_stability(lp_abs(Exponent::of(2)), cfg).counterexample);
  CHECK_FALSE(check_linear_stability(rad_class(), cfg).counterexample);
}

TEST_CASE("scalar ideal condition") {
  SamplerConfig cfg = quick();
  SeqClassSpec l1 = lp_abs(Exponent::of(1)), l2 = lp_abs(Exponent::of(2));
  CHECK_FALSE(check_scalar_condition({l2, l2}, l1, cfg).counterexample);
  CHECK_FALSE(check_scalar_condition({l1, l1}, l1, cfg).counterexample);
  PropertyReport bad = check_scalar_condition({linf_sup(), linf_sup()}, l1, cfg);
  CHECK(bad.counterexample);
  CHECK(replay(bad).violated);
}

TEST_CASE("fin-leq and joint domination") {
  SamplerConfig cfg = quick();
  CHECK_FALSE(fin_leq_falsify(lp_weak(Exponent::of(2)), lp_abs(Exponent::of(2)), cfg)
                  .counterexample);
  PropertyReport rev = fin_leq_falsify(lp_abs(Exponent::of(2)), lp_weak(Exponent::of(2)), cfg);
  CHECK(rev.counterexample);
  CHECK(replay(rev).violated);
  CHECK_FALSE(fin_leq_falsify(rad_class(), rad_class(), cfg).counterexample);

  SeqClassSpec fdw = fd_of(lp_weak(Exponent::of(2)));
  CHECK_FALSE(
      jointly_dominated_check({lp_weak(Exponent::of(2)), fdw}, fdw, cfg).counterexample);
  PropertyReport dom =
      jointly_dominated_check({lp_abs(Exponent::of(2))}, lp_weak(Exponent::of(2)), cfg);
  CHECK(dom.counterexample);
  CHECK(replay(dom).violated);
  CHECK_FALSE(jointly_dominated_check({rad_class()}, rad_class(), cfg).counterexample);
}

TEST_CASE("mutants are caught and replays stay violations") {
  SamplerConfig cfg = quick(2000);
  struct Case {
    const char* property;
    PropertyReport report;
  };
  std::vector<Case> cases;
  cases.push_back({"axioms", check_seqclass_axioms(mut_scale(lp_abs(Exponent::of(2)), 0.5), cfg)});
  cases.push_back(
      {"shrinking", check_finitely_shrinking(mut_length_penalty(lp_abs(Exponent::of(2))), cfg)});
  cases.push_back({"zeroinv", check_zero_invariant(mut_zero_bonus(lp_abs(Exponent::of(2))), cfg)});
  cases.push_back({"subseq",
                   check_subsequence_invariant(mut_length_penalty(lp_abs(Exponent::of(2))), cfg)});
  SeqClassSpec half_constant = lp_abs(Exponent::of(2));
  half_constant.contraction_constant = 0.5;
  cases.push_back({"contraction", check_contraction(half_constant, cfg)});
  cases.push_back(
      {"spherical", check_spherical_completeness(mut_sign_bonus(lp_abs(Exponent::of(2))), cfg)});
  cases.push_back({"linstab", check_linear_stability(mut_coord_weight(), cfg)});

  for (auto& c : cases) {
    CHECK_MESSAGE(c.report.counterexample, c.property);
    if (c.report.counterexample) {
      ReplayResult r = replay(c.report);
      CHECK_MESSAGE(r.violated, c.property, " replay lhs=", r.lhs, " rhs=", r.rhs);
    }
  }
}

TEST_CASE("reports are deterministic") {
  SamplerConfig cfg = quick(300);
  PropertyReport a = check_finitely_shrinking(rad_class(), cfg);
  PropertyReport b = check_finitely_shrinking(rad_class(), cfg);
  CHECK(a.to_text() == b.to_text());

  PropertyReport c = check_zero_invariant(mut_zero_bonus(lp_abs(Exponent::of(2))), cfg);
  PropertyReport d = check_zero_invariant(mut_zero_bonus(lp_abs(Exponent::of(2))), cfg);
  CHECK(c.to_text() == d.to_text());
  CHECK(c.counterexample);
  CHECK(c.to_text().find("payload=") != std::string::npos);
}

TEST_CASE("checker dispatch") {
  SamplerConfig cfg = quick(50);
  PropertyReport rep = run_checker("axioms", {lp_abs(Exponent::of(2))}, cfg);
  CHECK(rep.property == "axioms");
  CHECK_FALSE(rep.counterexample);
  CHECK(run_checker("finleq", {lp_abs(Exponent::of(2)), lp_weak(Exponent::of(2))}, cfg)
            .counterexample);
  CHECK_THROWS_AS(run_checker("axioms", {}, cfg), Error);
  CHECK_THROWS_AS(run_checker("unknown", {lp_abs(Exponent::of(2))}, cfg), Error);
  CHECK_THROWS_AS(replay(rep), Error);  // no counterexample to replay
}
