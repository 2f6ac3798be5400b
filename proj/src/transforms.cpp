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

#include "dnfree/transforms.hpp"

#include <algorithm>
#include <string>

#include "dnfree/errors.hpp"

namespace dnfree {
namespace {

void check_compatible(const DegreeSequence& a, const DegreeSequence& b, const char* what) {
  if (a.n_components() != b.n_components()) {
    throw DomainError(std::string(what) + ": dimension mismatch N=" +
                      std::to_string(a.n_components()) + " vs N=" +
                      std::to_string(b.n_components()));
  }
  if (a.order() != b.order()) {
    throw DomainError(std::string(what) + ": order mismatch M=" + std::to_string(a.order()) +
                      " vs M=" + std::to_string(b.order()));
  }
}

DiagonalScalar block_product(const DegreeSequence& seq, const std::vector<int>& block_sizes) {
  DiagonalScalar value = DiagonalScalar::one(seq.n_components());
  for (int size : block_sizes) value *= seq[size];
  return value;
}

}  // namespace

DegreeSequence::DegreeSequence(std::size_t n_components, int order) : n_(n_components) {
  if (order < 1) throw BoundError("sequence order must be >= 1");
  values_.assign(static_cast<std::size_t>(order), DiagonalScalar::zero(n_components));
}

DegreeSequence::DegreeSequence(std::vector<DiagonalScalar> values) : values_(std::move(values)) {
  if (values_.empty()) throw BoundError("sequence order must be >= 1");
  n_ = values_.front().size();
  for (const auto& v : values_) {
    if (v.size() != n_) throw DomainError("sequence entries have mixed dimensions");
  }
}

const DiagonalScalar& DegreeSequence::operator[](int k) const {
  if (k < 1 || k > order()) {
    throw BoundError("degree " + std::to_string(k) + " outside 1.." + std::to_string(order()));
  }
  return values_[static_cast<std::size_t>(k - 1)];
}

DiagonalScalar& DegreeSequence::operator[](int k) {
  if (k < 1 || k > order()) {
    throw BoundError("degree " + std::to_string(k) + " outside 1.." + std::to_string(order()));
  }
  return values_[static_cast<std::size_t>(k - 1)];
}

CumulantSequence moments_to_cumulants(const Distribution& d) {
  DegreeSequence k(d.n_components(), d.order());
  for (int n = 1; n <= d.order(); ++n) {
    DiagonalScalar sum = DiagonalScalar::zero(d.n_components());
    for (const auto& entry : nc_table(n)) {
      sum += block_product(d.moments, entry.block_sizes) * entry.mobius_to_top;
    }
    k[n] = std::move(sum);
  }
  return CumulantSequence{std::move(k)};
}

Distribution cumulants_to_moments(const CumulantSequence& k) {
  DegreeSequence m(k.n_components(), k.order());
  for (int n = 1; n <= k.order(); ++n) {
    DiagonalScalar sum = DiagonalScalar::zero(k.n_components());
    for (const auto& entry : nc_table(n)) sum += block_product(k.cumulants, entry.block_sizes);
    m[n] = std::move(sum);
  }
  return Distribution{std::move(m)};
}

namespace {

TruncatedSeries series_from_sequence(const DegreeSequence& seq) {
  TruncatedSeries s(seq.n_components(), seq.order());
  for (int n = 1; n <= seq.order(); ++n) s[n] = seq[n];
  return s;
}

}  // namespace

TruncatedSeries moment_series(const Distribution& d) { return series_from_sequence(d.moments); }
TruncatedSeries r_transform(const Distribution& d) { return cumulant_series(moments_to_cumulants(d)); }
TruncatedSeries cumulant_series(const CumulantSequence& k) { return series_from_sequence(k.cumulants); }

DegreeSequence sequence_from_series(const TruncatedSeries& s) {
  if (!s.in_theta()) throw DomainError("expected a series with zero constant term");
  std::vector<DiagonalScalar> values(s.coeffs().begin() + 1, s.coeffs().end());
  return DegreeSequence(std::move(values));
}

Distribution distribution_from_series(const TruncatedSeries& s) {
  return Distribution{sequence_from_series(s)};
}

CumulantSequence cumulants_from_series(const TruncatedSeries& r) {
  return CumulantSequence{sequence_from_series(r)};
}

Distribution free_add_convolve(const Distribution& x, const Distribution& y) {
  check_compatible(x.moments, y.moments, "free additive convolution");
  const auto kx = moments_to_cumulants(x);
  const auto ky = moments_to_cumulants(y);
  DegreeSequence sum(x.n_components(), x.order());
  for (int n = 1; n <= x.order(); ++n) sum[n] = kx.cumulants[n] + ky.cumulants[n];
  return cumulants_to_moments(CumulantSequence{std::move(sum)});
}

CumulantSequence product_cumulants(const Distribution& x, const Distribution& y) {
  check_compatible(x.moments, y.moments, "product cumulants");
  const auto kx = moments_to_cumulants(x).cumulants;
  const auto ky = moments_to_cumulants(y).cumulants;
  DegreeSequence out(x.n_components(), x.order());
  for (int n = 1; n <= x.order(); ++n) {
    DiagonalScalar sum = DiagonalScalar::zero(x.n_components());
    for (const auto& pi : enumerate_noncrossing(n)) {
      DiagonalScalar term = DiagonalScalar::one(x.n_components());
      for (const auto& block : pi.blocks()) term *= kx[static_cast<int>(block.size())];
      const auto kr = kreweras_complement(pi);
      for (const auto& block : kr.blocks()) term *= ky[static_cast<int>(block.size())];
      sum += term;
    }
    out[n] = std::move(sum);
  }
  return CumulantSequence{std::move(out)};
}

std::string to_string(MultMethod m) {
  switch (m) {
    case MultMethod::product_formula: return "product-formula";
    case MultMethod::boxed: return "boxed";
    case MultMethod::s_transform: return "s-transform";
  }
  return "unknown";
}

std::optional<MultMethod> parse_mult_method(const std::string& text) {
  for (auto m : kAllMultMethods) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

Distribution free_mult_convolve(const Distribution& x, const Distribution& y, MultMethod method) {
  check_compatible(x.moments, y.moments, "free multiplicative convolution");
  switch (method) {
    case MultMethod::product_formula:
      return cumulants_to_moments(product_cumulants(x, y));
    case MultMethod::boxed:
      return cumulants_to_moments(cumulants_from_series(boxed_convolve(r_transform(x), r_transform(y))));
    case MultMethod::s_transform: {
      const TruncatedSeries s_xy = s_mul(s_transform(x), s_transform(y));
      const TruncatedSeries r_xy = s_comp_inverse(s_shift_up(s_xy));
      return cumulants_to_moments(cumulants_from_series(r_xy));
    }
  }
  throw DomainError("unknown multiplication method");
}

MultComparison free_mult_convolve_all(const Distribution& x, const Distribution& y) {
  check_compatible(x.moments, y.moments, "free multiplicative convolution");
  std::vector<MultRoute> routes;
  for (auto method : kAllMultMethods) {
    MultRoute route{method, std::nullopt, {}};
    if (method == MultMethod::s_transform &&
        (!x.moments[1].is_invertible() || !y.moments[1].is_invertible())) {
      route.skipped_reason = "a mean has a zero component; S-transform undefined";
    } else {
      route.result = free_mult_convolve(x, y, method);
    }
    routes.push_back(std::move(route));
  }
  const Distribution& reference = *routes.front().result;
  const bool agree = std::all_of(routes.begin(), routes.end(), [&](const MultRoute& r) {
    return !r.result || *r.result == reference;
  });
  return MultComparison{reference, std::move(routes), agree};
}

TruncatedSeries s_transform(const Distribution& x) {
  if (!x.moments[1].is_invertible()) {
    throw DomainError("S-transform requires an invertible mean E(x) in D_N^{-1}");
  }
  return f_homomorphism(r_transform(x));
}

TruncatedSeries s_transform_via_moments(const Distribution& x) {
  if (!x.moments[1].is_invertible()) {
    throw DomainError("S-transform requires an invertible mean E(x) in D_N^{-1}");
  }
  const TruncatedSeries inverse = s_shift_down(s_comp_inverse(moment_series(x)));
  TruncatedSeries one_plus_z = TruncatedSeries::monomial(DiagonalScalar::one(x.n_components()), 0,
                                                         inverse.order());
  if (inverse.order() >= 1) one_plus_z[1] = DiagonalScalar::one(x.n_components());
  return s_mul(one_plus_z, inverse);
}

TruncatedSeries f_homomorphism(const TruncatedSeries& g) {
  return s_shift_down(s_comp_inverse(g));
}

std::vector<Rational> model_cumulants(const Model& model, int order) {
  std::vector<Rational> k(static_cast<std::size_t>(order), Rational(0));
  switch (model.kind) {
    case Model::Kind::semicircular:
      if (order >= 2) k[1] = model.parameter;
      break;
    case Model::Kind::point_mass:
      if (order >= 1) k[0] = model.parameter;
      break;
    case Model::Kind::free_poisson:
      std::fill(k.begin(), k.end(), model.parameter);
      break;
  }
  return k;
}

namespace {

DegreeSequence truncate_sequence(const DegreeSequence& s, int order) {
  if (order < 1 || order > s.order()) {
    throw BoundError("cannot truncate order " + std::to_string(s.order()) + " to order " +
                     std::to_string(order));
  }
  return DegreeSequence(std::vector<DiagonalScalar>(s.values().begin(), s.values().begin() + order));
}

DegreeSequence sequence_component(const DegreeSequence& s, std::size_t i) {
  if (i >= s.n_components()) throw DomainError("component index out of range");
  std::vector<DiagonalScalar> values;
  for (const auto& v : s.values()) values.push_back(component(v, i));
  return DegreeSequence(std::move(values));
}

DegreeSequence zip_sequences(const std::vector<const DegreeSequence*>& parts) {
  if (parts.empty()) throw DomainError("zip needs at least one part");
  const int m = parts.front()->order();
  std::vector<DiagonalScalar> values;
  for (int k = 1; k <= m; ++k) {
    std::vector<DiagonalScalar> column;
    for (const auto* p : parts) {
      if (p->order() != m) throw DomainError("zip parts have different orders");
      column.push_back((*p)[k]);
    }
    values.push_back(zip_components(column));
  }
  return DegreeSequence(std::move(values));
}

}  // namespace

Distribution truncate(const Distribution& d, int order) {
  return Distribution{truncate_sequence(d.moments, order)};
}

CumulantSequence truncate(const CumulantSequence& k, int order) {
  return CumulantSequence{truncate_sequence(k.cumulants, order)};
}

Distribution distribution_component(const Distribution& d, std::size_t i) {
  return Distribution{sequence_component(d.moments, i)};
}

Distribution zip_distributions(const std::vector<Distribution>& parts) {
  std::vector<const DegreeSequence*> seqs;
  for (const auto& p : parts) seqs.push_back(&p.moments);
  return Distribution{zip_sequences(seqs)};
}

CumulantSequence cumulant_component(const CumulantSequence& k, std::size_t i) {
  return CumulantSequence{sequence_component(k.cumulants, i)};
}

CumulantSequence zip_cumulants(const std::vector<CumulantSequence>& parts) {
  std::vector<const DegreeSequence*> seqs;
  for (const auto& p : parts) seqs.push_back(&p.cumulants);
  return CumulantSequence{zip_sequences(seqs)};
}

}  // namespace dnfree
