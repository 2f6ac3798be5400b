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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dnfree/diagonal.hpp"
#include "dnfree/series.hpp"

namespace dnfree {

/// Degree-indexed family k -> value for k = 1..M, all of one dimension N.
class DegreeSequence {
 public:
  DegreeSequence(std::size_t n_components, int order);
  explicit DegreeSequence(std::vector<DiagonalScalar> values);

  std::size_t n_components() const noexcept { return n_; }
  int order() const noexcept { return static_cast<int>(values_.size()); }

  /// Value at degree k, 1 <= k <= order. Throws BoundError otherwise.
  const DiagonalScalar& operator[](int k) const;
  DiagonalScalar& operator[](int k);
  const std::vector<DiagonalScalar>& values() const noexcept { return values_; }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<DiagonalScalar> values_;
};

/// Trivial moments E(x^k), k = 1..M, of a D_N-valued random variable.
struct Distribution {
  DegreeSequence moments;
  std::size_t n_components() const noexcept { return moments.n_components(); }
  int order() const noexcept { return moments.order(); }
  friend bool operator==(const Distribution&, const Distribution&) = default;
};

/// Trivial free cumulants k_k(x, ..., x), k = 1..M.
struct CumulantSequence {
  DegreeSequence cumulants;
  std::size_t n_components() const noexcept { return cumulants.n_components(); }
  int order() const noexcept { return cumulants.order(); }
  friend bool operator==(const CumulantSequence&, const CumulantSequence&) = default;
};

/// k_n = sum_{pi in NC(n)} m_pi mu(pi, 1_n), componentwise.
CumulantSequence moments_to_cumulants(const Distribution& d);

/// m_n = sum_{pi in NC(n)} k_pi, componentwise.
Distribution cumulants_to_moments(const CumulantSequence& k);

/// M_x(z) = sum_{n=1}^M E(x^n) z^n.
TruncatedSeries moment_series(const Distribution& d);
/// R_x(z) = sum_{n=1}^M k_n z^n.
TruncatedSeries r_transform(const Distribution& d);
TruncatedSeries cumulant_series(const CumulantSequence& k);

/// Degrees 1..M of a series in Theta, as a sequence.
DegreeSequence sequence_from_series(const TruncatedSeries& s);
Distribution distribution_from_series(const TruncatedSeries& moment_series);
CumulantSequence cumulants_from_series(const TruncatedSeries& r);

/// Distribution of x + y for x, y free over D_N: cumulants add.
Distribution free_add_convolve(const Distribution& x, const Distribution& y);

/// k_n(xy) = sum_{pi in NC(n)} k_pi(x) k_{Kr(pi)}(y), evaluated directly
/// from the partition blocks.
CumulantSequence product_cumulants(const Distribution& x, const Distribution& y);

enum class MultMethod { product_formula, boxed, s_transform };

inline constexpr std::array<MultMethod, 3> kAllMultMethods = {
    MultMethod::product_formula, MultMethod::boxed, MultMethod::s_transform};

std::string to_string(MultMethod m);
std::optional<MultMethod> parse_mult_method(const std::string& text);

/// Distribution of xy for x, y free over D_N, computed by one route.
/// The s_transform route requires E(x), E(y) in D_N^{-1}.
Distribution free_mult_convolve(const Distribution& x, const Distribution& y, MultMethod method);

struct MultRoute {
  MultMethod method;
  std::optional<Distribution> result;
  std::string skipped_reason;  // set when result is empty
};

struct MultComparison {
  Distribution result;
  std::vector<MultRoute> routes;
  bool agreement = false;  // every route that ran produced the same value
};

/// Runs every route; the s_transform route is skipped (with a reason) when
/// a mean is not invertible.
MultComparison free_mult_convolve_all(const Distribution& x, const Distribution& y);

/// S_x(z) = R_x^{<-1>}(z) / z, of order M - 1. Requires E(x) in D_N^{-1}.
TruncatedSeries s_transform(const Distribution& x);

/// ((1 + z) / z) M_x^{<-1>}(z), of order M - 1; agrees with s_transform.
TruncatedSeries s_transform_via_moments(const Distribution& x);

/// F(g) = g^{<-1>}(z) / z for g in Theta^{inv}.
TruncatedSeries f_homomorphism(const TruncatedSeries& g);

/// Cumulants of the named one-component models.
struct Model {
  enum class Kind { semicircular, point_mass, free_poisson } kind;
  Rational parameter;  // variance, value, or rate
};
std::vector<Rational> model_cumulants(const Model& model, int order);

Distribution truncate(const Distribution& d, int order);
CumulantSequence truncate(const CumulantSequence& k, int order);

Distribution distribution_component(const Distribution& d, std::size_t i);
Distribution zip_distributions(const std::vector<Distribution>& parts);
CumulantSequence cumulant_component(const CumulantSequence& k, std::size_t i);
CumulantSequence zip_cumulants(const std::vector<CumulantSequence>& parts);

}  // namespace dnfree
