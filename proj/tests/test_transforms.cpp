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

#include <dnfree/errors.hpp>
#include <dnfree/random.hpp>
#include <dnfree/transforms.hpp>

#include "doctest.h"
#include "oracles.hpp"

using namespace dnfree;

namespace {

// One inner vector per component, degrees 1..M.
DegreeSequence seq(const std::vector<std::vector<Rational>>& comps) {
  const int order = static_cast<int>(comps.front().size());
  DegreeSequence s(comps.size(), order);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (int k = 1; k <= order; ++k) s[k][i] = comps[i][k - 1];
  return s;
}

Distribution dist(const std::vector<std::vector<Rational>>& comps) { return Distribution{seq(comps)}; }
CumulantSequence cums(const std::vector<std::vector<Rational>>& comps) { return CumulantSequence{seq(comps)}; }

Distribution model(Model::Kind kind, Rational parameter, int order) {
  return cumulants_to_moments(cums({model_cumulants({kind, std::move(parameter)}, order)}));
}

oracle::Poly poly(const DegreeSequence& s, std::size_t i = 0) {
  oracle::Poly p{0};
  for (const auto& v : s.values()) p.push_back(v[i]);
  return p;
}

}  // namespace

TEST_CASE("low-degree cumulant formulas") {
  RandomInputs rng(1);
  const auto d = rng.distribution(3, 4);
  const auto k = moments_to_cumulants(d).cumulants;
  const auto& m = d.moments;
  CHECK(k[1] == m[1]);
  CHECK(k[2] == m[2] - m[1] * m[1]);
  CHECK(k[3] == m[3] - Rational(3) * m[1] * m[2] + Rational(2) * d_pow(m[1], 3));
}

TEST_CASE("semicircular moments and cumulants") {
  const auto semi = dist({{0, 1, 0, 2, 0, 5}});
  CHECK(moments_to_cumulants(semi) == cums({{0, 1, 0, 0, 0, 0}}));
  for (const Rational& var : {Rational(1), Rational(1, 2), Rational(3)}) {
    const auto m = model(Model::Kind::semicircular, var, 10).moments;
    for (int n = 1; n <= 5; ++n) {
      Rational expected = Rational(oracle::catalan(n));
      for (int j = 0; j < n; ++j) expected *= var;
      CHECK(m[2 * n][0] == expected);
      CHECK(m[2 * n - 1][0] == 0);
    }
  }
}

TEST_CASE("free Poisson and point mass moments") {
  const auto fp = model(Model::Kind::free_poisson, 1, 5).moments;
  for (int n = 1; n <= 5; ++n) CHECK(fp[n][0] == Rational(oracle::catalan(n)));
  const auto pm = model(Model::Kind::point_mass, Rational(-2, 3), 5).moments;
  for (int n = 1; n <= 5; ++n) CHECK(pm[n] == d_pow(DiagonalScalar{Rational(-2, 3)}, n));
}

TEST_CASE("roundtrip against the scalar oracle") {
  RandomInputs rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto d = rng.distribution(2, 7);
    const auto k = moments_to_cumulants(d);
    CHECK(cumulants_to_moments(k) == d);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(poly(k.cumulants, i) == oracle::cumulants_from_moments(poly(d.moments, i), 7));
      CHECK(poly(d.moments, i) == oracle::moments_from_cumulants(poly(k.cumulants, i), 7));
    }
  }
}

TEST_CASE("series views") {
  RandomInputs rng(9);
  const auto d = rng.distribution(2, 6);
  const auto ms = moment_series(d);
  CHECK(ms.order() == 6);
  CHECK(ms[0].is_zero());
  CHECK(distribution_from_series(ms) == d);
  const auto r = r_transform(d);
  CHECK(cumulants_from_series(r) == moments_to_cumulants(d));
  CHECK(boxed_convolve(r, zeta_series(2, 6)) == ms);
  CHECK(boxed_convolve(ms, mob_series(2, 6)) == r);
  CHECK(r_transform(dist({{Rational(7, 2), Rational(49, 4), Rational(343, 8)}})) ==
        TruncatedSeries::monomial(DiagonalScalar{Rational(7, 2)}, 1, 3));
  const auto semi_r = r_transform(model(Model::Kind::semicircular, 1, 6));
  CHECK(semi_r == TruncatedSeries::monomial(DiagonalScalar{1}, 2, 6));
  CHECK(r_transform(dist({{0, 0, 0}})) == TruncatedSeries(1, 3));
}

TEST_CASE("additive convolution") {
  const auto semi = model(Model::Kind::semicircular, 1, 6);
  const auto sum = free_add_convolve(semi, semi);
  CHECK(sum.moments[2][0] == 2);
  CHECK(sum.moments[4][0] == 8);
  const auto fp1 = model(Model::Kind::free_poisson, 1, 5);
  CHECK(free_add_convolve(fp1, fp1) == model(Model::Kind::free_poisson, 2, 5));
  CHECK(free_add_convolve(fp1, dist({{0, 0, 0, 0, 0}})) == fp1);
  CHECK_THROWS_AS(free_add_convolve(fp1, semi), DomainError);
}

TEST_CASE("multiplicative convolution routes") {
  const auto fp = model(Model::Kind::free_poisson, 1, 5);
  const auto delta1 = model(Model::Kind::point_mass, 1, 5);
  for (MultMethod m : kAllMultMethods) {
    CAPTURE(to_string(m));
    CHECK(free_mult_convolve(fp, delta1, m) == fp);
    CHECK(free_mult_convolve(model(Model::Kind::point_mass, 2, 5), model(Model::Kind::point_mass, -3, 5), m) ==
          model(Model::Kind::point_mass, -6, 5));
  }
  const auto k = product_cumulants(fp, delta1);
  CHECK(k == moments_to_cumulants(fp));
  const auto all = free_mult_convolve_all(fp, fp);
  CHECK(all.agreement);
  CHECK(all.routes.size() == 3);
  CHECK(poly(all.result.moments) == oracle::product_moments(poly(fp.moments), poly(fp.moments), 5));
  CHECK(all.result.moments[5][0] == 273);

  RandomInputs rng(13);
  for (int t = 0; t < 10; ++t) {
    const auto x = rng.distribution(2, 5, true);
    const auto y = rng.distribution(2, 5, true);
    const auto c = free_mult_convolve_all(x, y);
    CHECK(c.agreement);
    for (std::size_t i = 0; i < 2; ++i)
      CHECK(poly(c.result.moments, i) == oracle::product_moments(poly(x.moments, i), poly(y.moments, i), 5));
    const auto kxy = product_cumulants(x, y).cumulants;
    const auto kx = moments_to_cumulants(x).cumulants, ky = moments_to_cumulants(y).cumulants;
    CHECK(kxy[1] == kx[1] * ky[1]);
    CHECK(kxy[2] == kx[2] * ky[1] * ky[1] + kx[1] * kx[1] * ky[2]);
  }
}

TEST_CASE("s-transform route is skipped for a non-invertible mean") {
  const auto semi = model(Model::Kind::semicircular, 1, 5);
  const auto fp = model(Model::Kind::free_poisson, 1, 5);
  const auto c = free_mult_convolve_all(semi, fp);
  CHECK(c.agreement);
  bool skipped = false;
  for (const auto& r : c.routes) {
    if (r.method == MultMethod::s_transform) {
      skipped = !r.result.has_value() && !r.skipped_reason.empty();
    }
  }
  CHECK(skipped);
  CHECK_THROWS_AS(free_mult_convolve(semi, fp, MultMethod::s_transform), DomainError);
  CHECK(parse_mult_method("boxed") == MultMethod::boxed);
  CHECK_FALSE(parse_mult_method("fast").has_value());
}

TEST_CASE("S-transform closed forms") {
  const auto delta = dist({{Rational(2, 3), Rational(4, 9), Rational(8, 27), Rational(16, 81)}});
  CHECK(s_transform(delta) == TruncatedSeries::monomial(DiagonalScalar{Rational(3, 2)}, 0, 3));
  for (const Rational& lambda : {Rational(1), Rational(2), Rational(1, 3)}) {
    const auto s = s_transform(model(Model::Kind::free_poisson, lambda, 6));
    REQUIRE(s.order() == 5);
    Rational c = 1 / lambda;
    for (int k = 0; k <= 5; ++k) {
      CHECK(s[k][0] == c);
      c = -c / lambda;
    }
    CHECK(s_transform_via_moments(model(Model::Kind::free_poisson, lambda, 6)) == s);
  }
  // N=2 pairs the scalar answers.
  const auto mixed = zip_distributions({model(Model::Kind::free_poisson, 1, 4), model(Model::Kind::point_mass, 2, 4)});
  const auto s2 = s_transform(mixed);
  CHECK(s2[0] == DiagonalScalar{1, Rational(1, 2)});
  CHECK(s2[1] == DiagonalScalar{-1, 0});
  CHECK_THROWS_AS(s_transform(model(Model::Kind::semicircular, 1, 4)), DomainError);
}

TEST_CASE("F is a homomorphism into the units") {
  CHECK(f_homomorphism(TruncatedSeries::identity(2, 5)) == TruncatedSeries::monomial(DiagonalScalar::one(2), 0, 4));
  CHECK(f_homomorphism(TruncatedSeries::monomial(DiagonalScalar{4, -2}, 1, 5)) ==
        TruncatedSeries::monomial(DiagonalScalar{Rational(1, 4), Rational(-1, 2)}, 0, 4));
  RandomInputs rng(17);
  for (int t = 0; t < 10; ++t) {
    const auto g1 = rng.theta_inv_series(2, 5), g2 = rng.theta_inv_series(2, 5);
    CHECK(f_homomorphism(boxed_convolve(g1, g2)) == s_mul(f_homomorphism(g1), f_homomorphism(g2)));
  }
}

TEST_CASE("truncation and components") {
  RandomInputs rng(19);
  const auto d = rng.distribution(3, 5);
  CHECK(truncate(d, 3).order() == 3);
  CHECK(truncate(d, 3).moments[3] == d.moments[3]);
  CHECK_THROWS_AS(truncate(d, 6), BoundError);
  CHECK(zip_distributions({distribution_component(d, 0), distribution_component(d, 1), distribution_component(d, 2)}) == d);
  CHECK_THROWS_AS(d.moments[6], BoundError);
}
