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

#include "dnfree/rational.hpp"

#include <cctype>

#include "dnfree/errors.hpp"

namespace dnfree {
namespace {

bool is_decimal_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  if (!is_decimal_integer(num_text, true)) {
    throw ParseError("invalid rational \"" + std::string(text) + "\"");
  }
  mpz_class num(std::string(num_text), 10);
  if (slash == std::string_view::npos) return Rational(num);

  const std::string_view den_text = text.substr(slash + 1);
  if (!is_decimal_integer(den_text, false)) {
    throw ParseError("invalid rational \"" + std::string(text) + "\"");
  }
  mpz_class den(std::string(den_text), 10);
  if (den == 0) {
    throw ParseError("zero denominator in rational \"" + std::string(text) + "\"");
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1 || den == 1) {
    throw ParseError("rational \"" + std::string(text) + "\" is not in lowest terms");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str(10);
  return v.get_str(10);
}

}  // namespace dnfree
