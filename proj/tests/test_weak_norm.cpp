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

#include <cmath>

#include "seqsum/rng.hpp"
#include "seqsum/seqclasses.hpp"
#include "oracles.hpp"

using namespace seqsum;

namespace {

FiniteSeq random_seq(Rng& rng, const Space& sp, int len) {
  FiniteSeq s(sp);
  for (int j = 0; j < len; ++j) {
    Vector v = zero_vector(sp);
    for (int c = 0; c < sp.dim; ++c) v[c] = rng.gaussian();
    s.push(v);
  }
  return s;
}

}  // namespace

TEST_CASE("weak norm closed cases") {
  for (int d : {2, 4, 7}) {
    Space einf(d, Exponent::inf());
    FiniteSeq s(einf);
    for (int j = 0; j < d; ++j) s.push(unit_vector(einf, j));
    for (const Exponent& p : {Exponent::of(1), Exponent::of(2), Exponent::of(3)}) {
      NormResult r = weak_norm(s, p);
      CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(r.backend == "extreme-points");
    }
  }

  Space e2(2, Exponent::of(2));
  Vector x(e2, {1.0, -2.5});
  FiniteSeq single(e2, {x});
  CHECK(weak_norm(single, Exponent::of(2)).value == doctest::Approx(vec_norm(x)));

  FiniteSeq basis(e2, {unit_vector(e2, 0), unit_vector(e2, 1)});
  NormResult id = weak_norm(basis, Exponent::of(2));
  CHECK(id.value == doctest::Approx(1.0));
  CHECK(id.backend == "singular-value");

  // p = inf reduces to the section sup
  FiniteSeq t(e2, {Vector(e2, {3.0, 4.0}), Vector(e2, {0.0, 1.0})});
  CHECK(weak_norm(t, Exponent::inf()).value == doctest::Approx(5.0));

  CHECK(weak_norm(FiniteSeq(e2), Exponent::of(2)).value == 0.0);
}

TEST_CASE("certificates attain the reported value") {
  Rng rng(31);
  const std::vector<Space> spaces = {Space(3, Exponent::inf()), Space(3, Exponent::of(1)),
                                     Space(3, Exponent::of(2)), Space(2, Exponent::of(3))};
  for (int i = 0; i < 60; ++i) {
    Space sp = spaces[static_cast<std::size_t>(rng.uniform_int(0, 3))];
    Exponent p = i % 2 ? Exponent::of(2) : Exponent::of(1);
    FiniteSeq s = random_seq(rng, sp, rng.uniform_int(1, 5));
    NormResult r = weak_norm(s, p);
    REQUIRE(r.certificate.has_value());
    CHECK(vec_norm(*r.certificate) <= 1.0 + 1e-9);
    std::vector<double> evals;
    for (const Vector& x : s.items) evals.push_back(pair(*r.certificate, x));
    CHECK(lp_norm(evals, p) == doctest::Approx(r.value).epsilon(1e-9));
  }
}

TEST_CASE("ascent backend agrees with the dual-sphere grid oracle") {
  Rng rng(37);
  EvalOptions force;
  force.weak_backend = WeakBackend::Ascent;
  const std::vector<Exponent> space_ps = {Exponent::of(3, 2), Exponent::of(2), Exponent::of(3)};
  const std::vector<Exponent> ps = {Exponent::of(1), Exponent::of(3, 2), Exponent::of(2),
                                    Exponent::of(3)};
  for (int i = 0; i < 60; ++i) {
    Space sp(rng.uniform_int(1, 3), space_ps[static_cast<std::size_t>(rng.uniform_int(0, 2))]);
    Exponent p = ps[static_cast<std::size_t>(rng.uniform_int(0, 3))];
    FiniteSeq s = random_seq(rng, sp, rng.uniform_int(1, 4));
    double ascent = weak_norm(s, p, force).value;
    double grid = oracles::weak_norm_grid(s, p);
    CHECK_MESSAGE(std::fabs(ascent - grid) <= 1e-4 * std::max(1.0, grid),
                  "space=", sp.str(), " p=", p.str(), " ascent=", ascent, " grid=", grid);
  }
}

TEST_CASE("ascent backend agrees with the exact backends") {
  Rng rng(41);
  EvalOptions force;
  force.weak_backend = WeakBackend::Ascent;
  for (int i = 0; i < 100; ++i) {
    bool use_inf = i % 2 == 0;
    Space sp(rng.uniform_int(1, 5), use_inf ? Exponent::inf() : Exponent::of(1));
    Exponent p = i % 3 == 0 ? Exponent::of(1) : (i % 3 == 1 ? Exponent::of(2) : Exponent::of(3));
    FiniteSeq s = random_seq(rng, sp, rng.uniform_int(1, 5));
    double exact = weak_norm(s, p).value;
    double ascent = weak_norm(s, p, force).value;
    CHECK_MESSAGE(std::fabs(ascent - exact) <= 1e-6 * std::max(1.0, exact),
                  "space=", sp.str(), " p=", p.str());
  }
  for (int i = 0; i < 100; ++i) {
    Space sp(rng.uniform_int(1, 5), Exponent::of(2));
    FiniteSeq s = random_seq(rng, sp, rng.uniform_int(1, 5));
    double exact = weak_norm(s, Exponent::of(2)).value;  // singular value
    double ascent = weak_norm(s, Exponent::of(2), force).value;
    CHECK(std::fabs(ascent - exact) <= 1e-9 * std::max(1.0, exact));
  }
}

TEST_CASE("forced backend preconditions") {
  Space e3(3, Exponent::of(3));
  FiniteSeq s(e3, {unit_vector(e3, 0)});
  EvalOptions force;
  force.weak_backend = WeakBackend::SingularValue;
  CHECK_THROWS_AS(weak_norm(s, Exponent::of(2), force), Error);
  force.weak_backend = WeakBackend::ExtremePoints;
  CHECK_THROWS_AS(weak_norm(s, Exponent::of(2), force), Error);
}
