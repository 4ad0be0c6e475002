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

#ifndef SEQSUM_EXPONENT_HPP
#define SEQSUM_EXPONENT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace seqsum {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An l_p exponent in [1, inf], kept as a reduced rational (or the
/// distinguished value inf) so that conjugation is exact: conj(conj(p)) == p
/// with no floating drift.
class Exponent {
 public:
  Exponent() : num_(2), den_(1) {}

  static Exponent inf() {
    Exponent e;
    e.num_ = 1;
    e.den_ = 0;
    return e;
  }

  static Exponent of(std::int64_t num, std::int64_t den = 1) {
    if (den <= 0 || num <= 0) throw Error("exponent must be positive");
    std::int64_t g = gcd(num, den);
    Exponent e;
    e.num_ = num / g;
    e.den_ = den / g;
    if (e.num_ < e.den_) throw Error("exponent must be >= 1");
    return e;
  }

  // Accepts "inf", integers ("2"), decimals ("1.5") and fractions ("4/3").
  static Exponent parse(const std::string& text);

  bool is_inf() const { return den_ == 0; }
  bool is_one() const { return !is_inf() && num_ == den_; }

  double value() const {
    if (is_inf()) throw Error("exponent inf has no finite value");
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Hoelder conjugate: 1/p + 1/p* = 1, with 1 <-> inf.
  Exponent conjugate() const {
    if (is_inf()) return of(1);
    if (is_one()) return inf();
    return of(num_, num_ - den_);
  }

  std::string str() const {
    if (is_inf()) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Exponent& a, const Exponent& b) {
    return !(a == b);
  }

 private:
  static std::int64_t gcd(std::int64_t a, std::int64_t b) {
    while (b != 0) {
      std::int64_t t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::int64_t num_, den_;  // den_ == 0 encodes inf
};

}  // namespace seqsum

#endif  // SEQSUM_EXPONENT_HPP
