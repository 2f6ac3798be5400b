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

#include "dnfree/random.hpp"

namespace dnfree {

Rational RandomInputs::rational(int max_num, int max_den) {
  Rational q(uniform_int(-max_num, max_num), uniform_int(1, max_den));
  q.canonicalize();
  return q;
}

Rational RandomInputs::nonzero_rational(int max_num, int max_den) {
  Rational q = 0;
  while (q == 0) q = rational(max_num, max_den);
  return q;
}

DiagonalScalar RandomInputs::scalar(std::size_t n) {
  std::vector<Rational> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(rational());
  return DiagonalScalar(std::move(e));
}

DiagonalScalar RandomInputs::invertible_scalar(std::size_t n) {
  std::vector<Rational> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(nonzero_rational());
  return DiagonalScalar(std::move(e));
}

TruncatedSeries RandomInputs::series(std::size_t n, int order, bool zero_constant) {
  TruncatedSeries s(n, order);
  for (int k = zero_constant ? 1 : 0; k <= order; ++k) s[k] = scalar(n);
  return s;
}

TruncatedSeries RandomInputs::theta_inv_series(std::size_t n, int order) {
  TruncatedSeries s = series(n, order, true);
  s[1] = invertible_scalar(n);
  return s;
}

Distribution RandomInputs::distribution(std::size_t n, int order, bool invertible_mean) {
  DegreeSequence m(n, order);
  for (int k = 1; k <= order; ++k) m[k] = scalar(n);
  if (invertible_mean) m[1] = invertible_scalar(n);
  return Distribution{std::move(m)};
}

}  // namespace dnfree
