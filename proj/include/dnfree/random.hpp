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
#include <random>

#include "dnfree/series.hpp"
#include "dnfree/transforms.hpp"

namespace dnfree {

/// Small random rationals for property checks: numerator in
/// [-max_num, max_num], denominator in [1, max_den].
class RandomInputs {
 public:
  explicit RandomInputs(std::uint64_t seed) : rng_(seed) {}

  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int max_num = 5, int max_den = 4);
  Rational nonzero_rational(int max_num = 5, int max_den = 4);

  DiagonalScalar scalar(std::size_t n);
  DiagonalScalar invertible_scalar(std::size_t n);

  /// Random series with the given constant term policy.
  TruncatedSeries series(std::size_t n, int order, bool zero_constant = false);
  /// Random element of Theta^{inv}.
  TruncatedSeries theta_inv_series(std::size_t n, int order);

  /// Moments of a random distribution. With invertible_mean the first
  /// moment lies in D_N^{-1}.
  Distribution distribution(std::size_t n, int order, bool invertible_mean = false);

 private:
  std::mt19937_64 rng_;
};

}  // namespace dnfree
