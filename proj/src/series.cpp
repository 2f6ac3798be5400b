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

#include "dnfree/series.hpp"

#include <algorithm>
#include <string>

#include "dnfree/errors.hpp"

namespace dnfree {
namespace {

void check_components(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.n_components() != g.n_components()) {
    throw DomainError("series dimension mismatch: N=" + std::to_string(f.n_components()) +
                      " vs N=" + std::to_string(g.n_components()));
  }
}

int common_order(const TruncatedSeries& f, const TruncatedSeries& g) {
  check_components(f, g);
  return std::min(f.order(), g.order());
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t n_components, int order) : n_(n_components) {
  if (order < 0) throw BoundError("series order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, DiagonalScalar::zero(n_components));
}

TruncatedSeries::TruncatedSeries(std::vector<DiagonalScalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw BoundError("series needs at least a constant coefficient");
  n_ = coeffs_.front().size();
  for (const auto& c : coeffs_) {
    if (c.size() != n_) throw DomainError("series coefficients have mixed dimensions");
  }
}

TruncatedSeries TruncatedSeries::monomial(const DiagonalScalar& c, int degree, int order) {
  TruncatedSeries s(c.size(), order);
  if (degree <= order) s[degree] = c;
  return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t n_components, int order) {
  return monomial(DiagonalScalar::one(n_components), 1, order);
}

const DiagonalScalar& TruncatedSeries::operator[](int k) const {
  if (k < 0 || k > order()) {
    throw BoundError("degree " + std::to_string(k) + " beyond series order " +
                     std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

DiagonalScalar& TruncatedSeries::operator[](int k) {
  if (k < 0 || k > order()) {
    throw BoundError("degree " + std::to_string(k) + " beyond series order " +
                     std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

bool TruncatedSeries::in_theta_inv() const {
  return in_theta() && order() >= 1 && coeffs_[1].is_invertible();
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > this->order()) {
    throw BoundError("cannot extend series of order " + std::to_string(this->order()) +
                     " to order " + std::to_string(order));
  }
  if (order < 0) throw BoundError("series order must be >= 0");
  return TruncatedSeries(std::vector<DiagonalScalar>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries s_add(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int m = common_order(f, g);
  TruncatedSeries r(f.n_components(), m);
  for (int k = 0; k <= m; ++k) r[k] = f[k] + g[k];
  return r;
}

TruncatedSeries s_sub(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int m = common_order(f, g);
  TruncatedSeries r(f.n_components(), m);
  for (int k = 0; k <= m; ++k) r[k] = f[k] - g[k];
  return r;
}

TruncatedSeries s_scale(const TruncatedSeries& f, const DiagonalScalar& c) {
  TruncatedSeries r = f;
  for (int k = 0; k <= f.order(); ++k) r[k] *= c;
  return r;
}

TruncatedSeries s_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int m = common_order(f, g);
  TruncatedSeries r(f.n_components(), m);
  for (int i = 0; i <= m; ++i) {
    if (f[i].is_zero()) continue;
    for (int j = 0; i + j <= m; ++j) r[i + j] += f[i] * g[j];
  }
  return r;
}

TruncatedSeries s_compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int m = common_order(f, g);
  if (!g.in_theta()) {
    throw DomainError("composition f(g(z)) requires g to have zero constant term");
  }
  const TruncatedSeries inner = g.truncated(m);
  TruncatedSeries acc = TruncatedSeries::monomial(f[m], 0, m);
  for (int k = m - 1; k >= 0; --k) {
    acc = s_mul(acc, inner);
    acc[0] += f[k];
  }
  return acc;
}

TruncatedSeries s_comp_inverse(const TruncatedSeries& g) {
  if (!g.in_theta()) {
    throw DomainError("compositional inverse requires zero constant term");
  }
  if (g.order() < 1) throw BoundError("compositional inverse needs order >= 1");
  if (!g[1].is_invertible()) {
    throw DomainError("compositional inverse requires an invertible linear coefficient");
  }
  const int m = g.order();
  const DiagonalScalar lead_inverse = d_invert(g[1]);
  TruncatedSeries h(g.n_components(), m);
  h[1] = lead_inverse;
  // [z^n] g(h) = g_1 h_n + (terms in h_1..h_{n-1}); solve for h_n.
  for (int n = 2; n <= m; ++n) {
    const TruncatedSeries partial = s_compose(g.truncated(n), h.truncated(n));
    h[n] = -(lead_inverse * partial[n]);
  }
  return h;
}

TruncatedSeries s_shift_up(const TruncatedSeries& f) {
  TruncatedSeries r(f.n_components(), f.order() + 1);
  for (int k = 0; k <= f.order(); ++k) r[k + 1] = f[k];
  return r;
}

TruncatedSeries s_shift_down(const TruncatedSeries& f) {
  if (!f.in_theta()) throw DomainError("division by z requires zero constant term");
  if (f.order() < 1) throw BoundError("division by z needs order >= 1");
  TruncatedSeries r(f.n_components(), f.order() - 1);
  for (int k = 1; k <= f.order(); ++k) r[k - 1] = f[k];
  return r;
}

DiagonalScalar multiplicative_extension(const TruncatedSeries& a, const std::vector<int>& block_sizes) {
  DiagonalScalar value = DiagonalScalar::one(a.n_components());
  for (int size : block_sizes) {
    if (size > a.order()) {
      throw BoundError("multiplicative extension needs degree " + std::to_string(size) +
                       " but series is truncated at " + std::to_string(a.order()));
    }
    value *= a[size];
  }
  return value;
}

DiagonalScalar multiplicative_extension(const TruncatedSeries& a, const NoncrossingPartition& p) {
  return multiplicative_extension(a, p.block_sizes());
}

TruncatedSeries boxed_convolve(const TruncatedSeries& g1, const TruncatedSeries& g2) {
  const int m = common_order(g1, g2);
  if (!g1.in_theta() || !g2.in_theta()) {
    throw DomainError("boxed convolution is defined on series with zero constant term");
  }
  TruncatedSeries r(g1.n_components(), m);
  for (int n = 1; n <= m; ++n) {
    DiagonalScalar sum = DiagonalScalar::zero(g1.n_components());
    for (const auto& entry : nc_table(n)) {
      sum += multiplicative_extension(g1, entry.block_sizes) *
             multiplicative_extension(g2, entry.kreweras_block_sizes);
    }
    r[n] = std::move(sum);
  }
  return r;
}

TruncatedSeries boxed_inverse(const TruncatedSeries& g) {
  if (!g.in_theta_inv()) {
    throw DomainError("boxed-convolution inverse requires zero constant term and an "
                      "invertible linear coefficient");
  }
  const int m = g.order();
  const std::size_t n_comp = g.n_components();
  TruncatedSeries h(n_comp, m);
  for (int n = 1; n <= m; ++n) {
    // Only pi = 0_n pairs with Kr(pi) = 1_n, contributing g_1^n h_n; every
    // other term involves h_k with k < n.
    DiagonalScalar rest = DiagonalScalar::zero(n_comp);
    for (const auto& entry : nc_table(n)) {
      if (entry.kreweras_block_sizes.size() == 1) continue;
      rest += multiplicative_extension(g, entry.block_sizes) *
              multiplicative_extension(h, entry.kreweras_block_sizes);
    }
    DiagonalScalar target = n == 1 ? DiagonalScalar::one(n_comp) : DiagonalScalar::zero(n_comp);
    h[n] = (target - rest) * d_invert(d_pow(g[1], static_cast<unsigned>(n)));
  }
  return h;
}

TruncatedSeries zeta_series(std::size_t n_components, int order) {
  TruncatedSeries s(n_components, order);
  for (int n = 1; n <= order; ++n) s[n] = DiagonalScalar::one(n_components);
  return s;
}

TruncatedSeries mob_series(std::size_t n_components, int order) {
  TruncatedSeries s(n_components, order);
  for (int n = 1; n <= order; ++n) {
    s[n] = DiagonalScalar(n_components, mobius_full(NoncrossingPartition::finest(n)));
  }
  return s;
}

TruncatedSeries series_component(const TruncatedSeries& f, std::size_t i) {
  std::vector<DiagonalScalar> coeffs;
  for (const auto& c : f.coeffs()) coeffs.push_back(component(c, i));
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries zip_series(const std::vector<TruncatedSeries>& parts) {
  if (parts.empty()) throw DomainError("zip_series needs at least one part");
  const int m = parts.front().order();
  std::vector<DiagonalScalar> coeffs;
  for (int k = 0; k <= m; ++k) {
    std::vector<DiagonalScalar> column;
    for (const auto& p : parts) {
      if (p.order() != m) throw DomainError("zip_series parts have different orders");
      column.push_back(p[k]);
    }
    coeffs.push_back(zip_components(column));
  }
  return TruncatedSeries(std::move(coeffs));
}

}  // namespace dnfree
