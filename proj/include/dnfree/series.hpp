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
#include <vector>

#include "dnfree/diagonal.hpp"
#include "dnfree/ncpart.hpp"

namespace dnfree {

/// A formal series sum_{k=0}^{M} d_k z^k over D_N, truncated at order M.
/// Coefficients commute with z. Binary operations truncate to the smaller
/// order of their operands.
class TruncatedSeries {
 public:
  /// The zero series with N components and order M >= 0.
  TruncatedSeries(std::size_t n_components, int order);
  /// From dense coefficients d_0..d_M.
  explicit TruncatedSeries(std::vector<DiagonalScalar> coeffs);

  /// c * z^degree.
  static TruncatedSeries monomial(const DiagonalScalar& c, int degree, int order);
  /// 1_{D_N} z, the identity for composition and for boxed convolution.
  static TruncatedSeries identity(std::size_t n_components, int order);

  std::size_t n_components() const noexcept { return n_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of z^k. Degrees above the order throw BoundError.
  const DiagonalScalar& operator[](int k) const;
  DiagonalScalar& operator[](int k);
  const std::vector<DiagonalScalar>& coeffs() const noexcept { return coeffs_; }

  /// Zero constant term (membership in Theta_{D_N}).
  bool in_theta() const { return coeffs_[0].is_zero(); }
  /// Zero constant term and invertible linear coefficient.
  bool in_theta_inv() const;

  TruncatedSeries truncated(int order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<DiagonalScalar> coeffs_;
};

TruncatedSeries s_add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries s_sub(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries s_scale(const TruncatedSeries& f, const DiagonalScalar& c);

/// Cauchy product.
TruncatedSeries s_mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// f(g(z)) by Horner accumulation. g must have zero constant term.
TruncatedSeries s_compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// Compositional inverse of g in Theta^{inv}: g(h(z)) = z = h(g(z)) up to
/// the order of g. Throws DomainError otherwise.
TruncatedSeries s_comp_inverse(const TruncatedSeries& g);

/// z * f, raising the order by one.
TruncatedSeries s_shift_up(const TruncatedSeries& f);
/// f / z for f with zero constant term, lowering the order by one.
TruncatedSeries s_shift_down(const TruncatedSeries& f);

/// a_p = prod_{V in p} a_{|V|} where a_k is the degree-k coefficient of a.
/// Throws BoundError when a block is larger than the order of a.
DiagonalScalar multiplicative_extension(const TruncatedSeries& a, const NoncrossingPartition& p);
DiagonalScalar multiplicative_extension(const TruncatedSeries& a, const std::vector<int>& block_sizes);

/// Restricted boxed convolution on Theta_{D_N}:
/// d_n = sum_{pi in NC(n)} a_pi * b_{Kr(pi)}.
TruncatedSeries boxed_convolve(const TruncatedSeries& g1, const TruncatedSeries& g2);

/// Inverse of g for boxed convolution, solved degree by degree. Requires g
/// in Theta^{inv}.
TruncatedSeries boxed_inverse(const TruncatedSeries& g);

/// sum_{n>=1} 1_{D_N} z^n.
TruncatedSeries zeta_series(std::size_t n_components, int order);
/// sum_{n>=1} mu(0_n, 1_n) 1_{D_N} z^n.
TruncatedSeries mob_series(std::size_t n_components, int order);

/// Split into one-component series and back.
TruncatedSeries series_component(const TruncatedSeries& f, std::size_t i);
TruncatedSeries zip_series(const std::vector<TruncatedSeries>& parts);

}  // namespace dnfree
