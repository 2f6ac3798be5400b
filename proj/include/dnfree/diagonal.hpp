// Copyright 2026 The dnfree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "dnfree/rational.hpp"

namespace dnfree {

/// An element of the diagonal algebra D_N = Q^N with componentwise
/// arithmetic. The number of components is carried on the value and every
/// binary operation checks it.
class DiagonalScalar {
 public:
  DiagonalScalar() = default;

  /// Constant tuple (value, ..., value) with n components.
  explicit DiagonalScalar(std::size_t n, const Rational& value = 0);
  explicit DiagonalScalar(std::vector<Rational> entries);
  DiagonalScalar(std::initializer_list<Rational> entries);

  static DiagonalScalar zero(std::size_t n) { return DiagonalScalar(n, 0); }
  static DiagonalScalar one(std::size_t n) { return DiagonalScalar(n, 1); }

  std::size_t size() const noexcept { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Rational> entries() const noexcept { return entries_; }

  bool is_zero() const;
  /// Membership in D_N^{-1}: every component nonzero.
  bool is_invertible() const;

  DiagonalScalar& operator+=(const DiagonalScalar& other);
  DiagonalScalar& operator-=(const DiagonalScalar& other);
  DiagonalScalar& operator*=(const DiagonalScalar& other);
  DiagonalScalar& operator*=(const Rational& factor);

  friend bool operator==(const DiagonalScalar& a, const DiagonalScalar& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Rational> entries_;
};

DiagonalScalar d_add(const DiagonalScalar& a, const DiagonalScalar& b);
DiagonalScalar d_sub(const DiagonalScalar& a, const DiagonalScalar& b);
DiagonalScalar d_mul(const DiagonalScalar& a, const DiagonalScalar& b);
DiagonalScalar d_neg(const DiagonalScalar& a);

/// Componentwise reciprocal. Throws DomainError naming the first zero
/// component (1-based) when a is outside D_N^{-1}.
DiagonalScalar d_invert(const DiagonalScalar& a);

/// a^k for k >= 0; a^0 is the unit.
DiagonalScalar d_pow(const DiagonalScalar& a, unsigned k);

inline DiagonalScalar operator+(DiagonalScalar a, const DiagonalScalar& b) { return a += b; }
inline DiagonalScalar operator-(DiagonalScalar a, const DiagonalScalar& b) { return a -= b; }
inline DiagonalScalar operator*(DiagonalScalar a, const DiagonalScalar& b) { return a *= b; }
inline DiagonalScalar operator*(DiagonalScalar a, const Rational& s) { return a *= s; }
inline DiagonalScalar operator*(const Rational& s, DiagonalScalar a) { return a *= s; }
inline DiagonalScalar operator-(const DiagonalScalar& a) { return d_neg(a); }

/// Extract component i as a one-component scalar.
DiagonalScalar component(const DiagonalScalar& a, std::size_t i);

/// Concatenate one-component scalars back into a tuple.
DiagonalScalar zip_components(std::span<const DiagonalScalar> parts);

std::ostream& operator<<(std::ostream& os, const DiagonalScalar& a);

}  // namespace dnfree
