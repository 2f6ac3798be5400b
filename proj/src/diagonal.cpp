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

#include "dnfree/diagonal.hpp"

#include <algorithm>
#include <string>

#include "dnfree/errors.hpp"

namespace dnfree {
namespace {

void check_same_size(const DiagonalScalar& a, const DiagonalScalar& b) {
  if (a.size() != b.size()) {
    throw DomainError("diagonal dimension mismatch: N=" + std::to_string(a.size()) +
                      " vs N=" + std::to_string(b.size()));
  }
}

}  // namespace

DiagonalScalar::DiagonalScalar(std::size_t n, const Rational& value) : entries_(n, value) {
  if (n == 0) throw DomainError("diagonal algebra needs N >= 1");
}

DiagonalScalar::DiagonalScalar(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("diagonal algebra needs N >= 1");
  for (auto& e : entries_) e.canonicalize();
}

DiagonalScalar::DiagonalScalar(std::initializer_list<Rational> entries)
    : DiagonalScalar(std::vector<Rational>(entries)) {}

bool DiagonalScalar::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

bool DiagonalScalar::is_invertible() const {
  return std::none_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

DiagonalScalar& DiagonalScalar::operator+=(const DiagonalScalar& other) {
  check_same_size(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

DiagonalScalar& DiagonalScalar::operator-=(const DiagonalScalar& other) {
  check_same_size(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

DiagonalScalar& DiagonalScalar::operator*=(const DiagonalScalar& other) {
  check_same_size(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] *= other.entries_[i];
  return *this;
}

DiagonalScalar& DiagonalScalar::operator*=(const Rational& factor) {
  for (auto& e : entries_) e *= factor;
  return *this;
}

DiagonalScalar d_add(const DiagonalScalar& a, const DiagonalScalar& b) { return a + b; }
DiagonalScalar d_sub(const DiagonalScalar& a, const DiagonalScalar& b) { return a - b; }
DiagonalScalar d_mul(const DiagonalScalar& a, const DiagonalScalar& b) { return a * b; }

DiagonalScalar d_neg(const DiagonalScalar& a) {
  DiagonalScalar r = a;
  r *= Rational(-1);
  return r;
}

DiagonalScalar d_invert(const DiagonalScalar& a) {
  DiagonalScalar r = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) {
      throw DomainError("element is not in D_N^{-1}: component " + std::to_string(i + 1) +
                        " is zero");
    }
    r[i] = 1 / a[i];
  }
  return r;
}

DiagonalScalar d_pow(const DiagonalScalar& a, unsigned k) {
  DiagonalScalar r = DiagonalScalar::one(a.size());
  for (unsigned i = 0; i < k; ++i) r *= a;
  return r;
}

DiagonalScalar component(const DiagonalScalar& a, std::size_t i) {
  return DiagonalScalar({a[i]});
}

DiagonalScalar zip_components(std::span<const DiagonalScalar> parts) {
  std::vector<Rational> entries;
  for (const auto& p : parts) entries.insert(entries.end(), p.entries().begin(), p.entries().end());
  return DiagonalScalar(std::move(entries));
}

std::ostream& operator<<(std::ostream& os, const DiagonalScalar& a) {
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << format_rational(a[i]);
  }
  return os << ')';
}

}  // namespace dnfree
