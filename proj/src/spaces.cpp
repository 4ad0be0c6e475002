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

#include "seqsum/spaces.hpp"

#include <cmath>
#include <cstdlib>

namespace seqsum {

Exponent Exponent::parse(const std::string& text) {
  if (text == "inf") return Exponent::inf();
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::int64_t num = std::strtoll(text.substr(0, slash).c_str(), nullptr, 10);
    std::int64_t den = std::strtoll(text.substr(slash + 1).c_str(), nullptr, 10);
    return Exponent::of(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < text.size() - dot - 1; ++i) den *= 10;
    std::int64_t num = std::strtoll(digits.c_str(), nullptr, 10);
    if (num == 0) throw Error("cannot parse exponent '" + text + "'");
    return Exponent::of(num, den);
  }
  std::int64_t num = std::strtoll(text.c_str(), nullptr, 10);
  if (num == 0) throw Error("cannot parse exponent '" + text + "'");
  return Exponent::of(num);
}

Vector zero_vector(const Space& s) {
  return Vector(s, std::vector<double>(static_cast<std::size_t>(s.dim), 0.0));
}

Vector unit_vector(const Space& s, int j) {
  if (j < 0 || j >= s.dim) throw Error("unit vector index out of range");
  Vector v = zero_vector(s);
  v[j] = 1.0;
  return v;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.space != b.space) throw Error("space mismatch in add");
  Vector r = a;
  for (int i = 0; i < r.dim(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.space != b.space) throw Error("space mismatch in sub");
  Vector r = a;
  for (int i = 0; i < r.dim(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(double a, const Vector& x) {
  Vector r = x;
  for (int i = 0; i < r.dim(); ++i) r[i] *= a;
  return r;
}

void axpy_inplace(double a, const Vector& x, Vector& y) {
  if (x.space != y.space) throw Error("space mismatch in axpy");
  for (int i = 0; i < y.dim(); ++i) y[i] += a * x[i];
}

double lp_norm(const std::vector<double>& c, const Exponent& q) {
  if (c.empty()) return 0.0;
  if (q.is_inf()) {
    double m = 0.0;
    for (double v : c) m = std::max(m, std::fabs(v));
    return m;
  }
  double p = q.value();
  if (p == 1.0) {
    double s = 0.0;
    for (double v : c) s += std::fabs(v);
    return s;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (double v : c) s += v * v;
    return std::sqrt(s);
  }
  double s = 0.0;
  for (double v : c) s += std::pow(std::fabs(v), p);
  return std::pow(s, 1.0 / p);
}

std::vector<double> lp_norm_gradient(const std::vector<double>& c, const Exponent& q) {
  std::vector<double> g(c.size(), 0.0);
  if (q.is_inf()) {
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (std::fabs(c[i]) > best) {
        best = std::fabs(c[i]);
        arg = i;
      }
    if (best > 0.0) g[arg] = c[arg] >= 0.0 ? 1.0 : -1.0;
    return g;
  }
  double qv = q.value();
  if (qv == 1.0) {
    for (std::size_t i = 0; i < c.size(); ++i)
      g[i] = c[i] > 0.0 ? 1.0 : (c[i] < 0.0 ? -1.0 : 0.0);
    return g;
  }
  double n = lp_norm(c, q);
  if (n == 0.0) return g;
  for (std::size_t i = 0; i < c.size(); ++i)
    g[i] = (c[i] >= 0.0 ? 1.0 : -1.0) * std::pow(std::fabs(c[i]) / n, qv - 1.0);
  return g;
}

double vec_norm(const Vector& x) { return lp_norm(x.coords, x.space.p); }

double pair(const Functional& f, const Vector& x) {
  if (f.space != dual(x.space))
    throw Error("functional space is not the dual of the vector space");
  double s = 0.0;
  for (int i = 0; i < x.dim(); ++i) s += f[i] * x[i];
  return s;
}

Vector radial_retract(const Vector& x) {
  double n = vec_norm(x);
  if (n == 0.0) throw Error("cannot retract the zero vector");
  return scale(1.0 / n, x);
}

std::vector<Vector> extreme_points(const Space& s, int sign_cap_dim) {
  std::vector<Vector> pts;
  if (s.p.is_one()) {
    pts.reserve(static_cast<std::size_t>(2 * s.dim));
    for (int j = 0; j < s.dim; ++j) {
      pts.push_back(unit_vector(s, j));
      pts.push_back(scale(-1.0, unit_vector(s, j)));
    }
    return pts;
  }
  if (s.p.is_inf()) {
    if (s.dim > sign_cap_dim)
      throw Error("sign-vector enumeration cap exceeded (dim " +
                  std::to_string(s.dim) + " > " + std::to_string(sign_cap_dim) + ")");
    std::size_t count = std::size_t{1} << s.dim;
    pts.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
      Vector v = zero_vector(s);
      for (int j = 0; j < s.dim; ++j) v[j] = (mask >> j) & 1 ? 1.0 : -1.0;
      pts.push_back(std::move(v));
    }
    return pts;
  }
  throw Error("extreme points are enumerable only for p in {1, inf}");
}

Functional norming_functional(const Vector& x) {
  double n = vec_norm(x);
  if (n == 0.0) throw Error("zero vector has no norming functional");
  Space ds = dual(x.space);
  Vector f = zero_vector(ds);
  if (x.space.p.is_inf()) {
    int arg = 0;
    double best = std::fabs(x[0]);
    for (int i = 1; i < x.dim(); ++i) {
      if (std::fabs(x[i]) > best) {
        best = std::fabs(x[i]);
        arg = i;
      }
    }
    f[arg] = x[arg] >= 0.0 ? 1.0 : -1.0;
    return f;
  }
  double p = x.space.p.value();
  if (p == 1.0) {
    for (int i = 0; i < x.dim(); ++i) f[i] = x[i] > 0.0 ? 1.0 : (x[i] < 0.0 ? -1.0 : 0.0);
    return f;
  }
  for (int i = 0; i < x.dim(); ++i) {
    double a = std::fabs(x[i]);
    f[i] = (x[i] >= 0.0 ? 1.0 : -1.0) * std::pow(a / n, p - 1.0);
  }
  return f;
}

}  // namespace seqsum
