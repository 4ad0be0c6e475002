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

#ifndef SEQSUM_SPACES_HPP
#define SEQSUM_SPACES_HPP

#include <string>
#include <vector>

#include "seqsum/exponent.hpp"

namespace seqsum {

/// A finite-dimensional l_p space: dimension plus exponent in [1, inf].
/// Scalars are modeled as dim == 1.
struct Space {
  int dim = 1;
  Exponent p = Exponent::of(2);

  Space() = default;
  Space(int dimension, Exponent exponent) : dim(dimension), p(exponent) {
    if (dim < 1) throw Error("space dimension must be >= 1");
  }

  std::string str() const { return "lp:" + p.str() + ":" + std::to_string(dim); }

  friend bool operator==(const Space& a, const Space& b) {
    return a.dim == b.dim && a.p == b.p;
  }
  friend bool operator!=(const Space& a, const Space& b) { return !(a == b); }
};

inline Space scalar_space() { return Space(1, Exponent::of(2)); }

/// Hoelder dual: same dimension, conjugate exponent.
inline Space dual(const Space& s) { return Space(s.dim, s.p.conjugate()); }

struct Vector {
  Space space;
  std::vector<double> coords;

  Vector() = default;
  Vector(Space s, std::vector<double> c) : space(s), coords(std::move(c)) {
    if (static_cast<int>(coords.size()) != space.dim)
      throw Error("coordinate count does not match space dimension");
  }

  double& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
  int dim() const { return space.dim; }
};

/// A functional is a vector living in the dual space; pair() enforces that.
using Functional = Vector;

Vector zero_vector(const Space& s);
Vector unit_vector(const Space& s, int j);  // canonical e_j, 0-based j

Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(double a, const Vector& x);
void axpy_inplace(double a, const Vector& x, Vector& y);  // y += a*x

/// l_p norm of the coordinates (max when p == inf).
double vec_norm(const Vector& x);

/// l_q norm of a raw coordinate array.
double lp_norm(const std::vector<double>& c, const Exponent& q);

/// A (sub)gradient of the l_q norm at c; first attaining index for q = inf.
std::vector<double> lp_norm_gradient(const std::vector<double>& c, const Exponent& q);

/// Dual pairing f(x); requires f.space == dual(x.space).
double pair(const Functional& f, const Vector& x);

/// x / vec_norm(x); errors on the zero vector.
Vector radial_retract(const Vector& x);

/// Extreme points of the unit ball: {+-e_i} for p = 1, all sign vectors for
/// p = inf (capped). Other exponents are rejected.
std::vector<Vector> extreme_points(const Space& s, int sign_cap_dim = 20);

/// A norm-one functional f with f(x) = vec_norm(x). Errors on x = 0.
Functional norming_functional(const Vector& x);

}  // namespace seqsum

#endif  // SEQSUM_SPACES_HPP
