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

#include <dnfree/diagonal.hpp>
#include <dnfree/errors.hpp>
#include <dnfree/rational.hpp>

#include <sstream>

#include "doctest.h"

using namespace dnfree;

namespace {

Rational q(const char* text) { return parse_rational(text); }

}  // namespace

TEST_CASE("rational parsing is strict") {
  CHECK(q("3") == 3);
  CHECK(q("-2/3") == Rational(-2, 3));
  CHECK(format_rational(Rational(6, 4)) == "3/2");
  CHECK(format_rational(Rational(-4, 2)) == "-2");
  for (const char* bad : {"1/0", "2/4", "3/1", "", "1/", "/2", "1.5", " 1", "1/-2", "x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("componentwise ring operations") {
  CHECK(DiagonalScalar{1, 2} + DiagonalScalar{0, 0} == DiagonalScalar{1, 2});
  CHECK(DiagonalScalar{q("1/2"), -1} + DiagonalScalar{q("1/2"), 1} == DiagonalScalar{1, 0});
  CHECK(DiagonalScalar{q("2/3"), 5} + DiagonalScalar{q("1/3"), -5} == DiagonalScalar{1, 0});
  CHECK(DiagonalScalar::one(2) * DiagonalScalar{3, 4} == DiagonalScalar{3, 4});
  CHECK(DiagonalScalar{2, 3} * DiagonalScalar{q("1/2"), q("1/3")} == DiagonalScalar{1, 1});
  const auto zd = DiagonalScalar{0, 5} * DiagonalScalar{7, 0};
  CHECK(zd.is_zero());
  CHECK(d_sub(DiagonalScalar{1, 1}, DiagonalScalar{2, 3}) == DiagonalScalar{-1, -2});
  CHECK(d_pow(DiagonalScalar{2, -1}, 3) == DiagonalScalar{8, -1});
  CHECK(d_pow(DiagonalScalar{2, -1}, 0) == DiagonalScalar::one(2));
  CHECK(Rational(2) * DiagonalScalar{1, q("1/4")} == DiagonalScalar{2, q("1/2")});
  CHECK_THROWS_AS(DiagonalScalar(2) + DiagonalScalar(3), DomainError);
}

TEST_CASE("inversion") {
  CHECK(d_invert(DiagonalScalar{1, 1, 1}) == DiagonalScalar{1, 1, 1});
  CHECK(d_invert(DiagonalScalar{2, q("-1/3")}) == DiagonalScalar{q("1/2"), -3});
  CHECK_FALSE(DiagonalScalar{1, 0}.is_invertible());
  try {
    d_invert(DiagonalScalar{1, 0});
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("component 2") != std::string::npos);
  }
}

TEST_CASE("components split and zip") {
  const DiagonalScalar a{1, q("1/2"), -3};
  std::vector<DiagonalScalar> parts;
  for (std::size_t i = 0; i < a.size(); ++i) parts.push_back(component(a, i));
  CHECK(parts[1] == DiagonalScalar{q("1/2")});
  CHECK(zip_components(parts) == a);
  std::ostringstream os;
  os << a;
  CHECK(os.str() == "(1, 1/2, -3)");
}
