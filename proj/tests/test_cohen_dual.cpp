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

#include "seqsum/repro.hpp"
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

TEST_CASE("cohen norm basics") {
  Space e2(2, Exponent::of(2));
  Vector x(e2, {0.7, -1.1});
  FiniteSeq single(e2, {x});
  CHECK(cohen_norm(single, Exponent::of(2)).value ==
        doctest::Approx(vec_norm(x)).epsilon(1e-9));

  CHECK(cohen_norm(FiniteSeq(e2), Exponent::of(2)).value == 0.0);
  FiniteSeq zeros(e2, {zero_vector(e2), zero_vector(e2)});
  CHECK(cohen_norm(zeros, Exponent::of(2)).value == 0.0);

  // identity columns: frozen value 2 computed with the tiny frame oracle
  FiniteSeq basis(e2, {unit_vector(e2, 0), unit_vector(e2, 1)});
  double oracle = tiny_cohen_oracle_2d(basis);
  CHECK(oracle == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(cohen_norm(basis, Exponent::of(2)).value == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("cohen norm with p = 1 sums the item norms") {
  Rng rng(51);
  for (int i = 0; i < 20; ++i) {
    Space sp(rng.uniform_int(1, 3), i % 2 ? Exponent::of(2) : Exponent::inf());
    FiniteSeq s = random_seq(rng, sp, rng.uniform_int(1, 4));
    double expect = 0.0;
    for (const Vector& x : s.items) expect += vec_norm(x);
    CHECK(cohen_norm(s, Exponent::of(1)).value == doctest::Approx(expect).epsilon(1e-9));
  }
}

TEST_CASE("cohen norm dominates the absolute norm") {
  Rng rng(53);
  for (int i = 0; i < 20; ++i) {
    Space sp(rng.uniform_int(1, 3), Exponent::of(2));
    Exponent p = i % 2 ? Exponent::of(2) : Exponent::of(3, 2);
    FiniteSeq s = random_seq(rng, sp, rng.uniform_int(1, 4));
    CHECK(cohen_norm(s, p).value >= class_norm(lp_abs(p), s) - 1e-6);
  }
  // a few spaces where the constraint itself is optimizer-evaluated
  const std::vector<Exponent> space_ps = {Exponent::of(3, 2), Exponent::of(3)};
  for (int i = 0; i < 6; ++i) {
    Space sp(2, space_ps[static_cast<std::size_t>(i % 2)]);
    FiniteSeq s = random_seq(rng, sp, rng.uniform_int(1, 3));
    CHECK(cohen_norm(s, Exponent::of(2)).value >=
          class_norm(lp_abs(Exponent::of(2)), s) - 1e-6);
  }
}

TEST_CASE("cohen witness is feasible and attains the bound") {
  Rng rng(57);
  Space e2(2, Exponent::of(2));
  FiniteSeq s = random_seq(rng, e2, 3);
  TupleNormResult r = cohen_norm(s, Exponent::of(2));
  REQUIRE(r.witness.size() == 3);
  FiniteSeq tuple(dual(e2), r.witness);
  CHECK(weak_norm(tuple, Exponent::of(2)).value == doctest::Approx(1.0).epsilon(1e-9));
  double attained = 0.0;
  for (int j = 0; j < 3; ++j)
    attained += std::fabs(pair(r.witness[static_cast<std::size_t>(j)],
                               s.items[static_cast<std::size_t>(j)]));
  CHECK(attained == doctest::Approx(r.value).epsilon(1e-9));
}

TEST_CASE("dual norm with absolute inner class has a closed form") {
  Rng rng(61);
  for (int i = 0; i < 25; ++i) {
    Space sp(rng.uniform_int(1, 3), i % 2 ? Exponent::of(2) : Exponent::of(3, 2));
    Exponent q = i % 3 == 0 ? Exponent::of(2) : (i % 3 == 1 ? Exponent::of(3, 2) : Exponent::of(3));
    FiniteSeq s = random_seq(rng, sp, rng.uniform_int(1, 4));
    std::vector<double> norms;
    for (const Vector& x : s.items) norms.push_back(vec_norm(x));
    double expect = lp_norm(norms, q.conjugate());
    CHECK_MESSAGE(dual_norm(lp_abs(q), s).value == doctest::Approx(expect).epsilon(1e-6),
                  "space=", sp.str(), " q=", q.str());
  }
  Space e2(2, Exponent::of(2));
  Vector x(e2, {1.0, 1.0});
  FiniteSeq single(e2, {x});
  CHECK(dual_norm(lp_abs(Exponent::of(2)), single).value ==
        doctest::Approx(vec_norm(x)).epsilon(1e-9));
  CHECK(dual_norm(lp_abs(Exponent::of(2)), FiniteSeq(e2)).value == 0.0);
  CHECK_THROWS_AS(dual_norm(rad_class(), single), Error);
}

TEST_CASE("dual norm with weak inner class meets the cohen norm") {
  Rng rng(67);
  for (int i = 0; i < 12; ++i) {
    int d = rng.uniform_int(2, 3);
    Space sp(d, Exponent::of(2));
    FiniteSeq s = random_seq(rng, sp, rng.uniform_int(2, 4));
    double dn = dual_norm(lp_weak(Exponent::of(2)), s).value;
    double cn = cohen_norm(s, Exponent::of(2)).value;
    CHECK(std::fabs(dn - cn) <= 0.05 * std::max(dn, cn));
    if (d == 2 && s.length() <= 3) {
      double oracle = tiny_cohen_oracle_2d(s);
      CHECK(std::fabs(dn - oracle) <= 1e-3);
      CHECK(std::fabs(cn - oracle) <= 1e-3);
    }
  }
}

TEST_CASE("tiny frame oracle equals the closed-form spectral sum") {
  Rng rng(71);
  Space e2(2, Exponent::of(2));
  for (int i = 0; i < 15; ++i) {
    FiniteSeq s = random_seq(rng, e2, rng.uniform_int(1, 3));
    CHECK(tiny_cohen_oracle_2d(s) ==
          doctest::Approx(oracles::nuclear_norm_2d(s)).epsilon(1e-9));
  }
}
