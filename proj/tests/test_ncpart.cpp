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
#include <dnfree/ncpart.hpp>

#include "doctest.h"
#include "oracles.hpp"

using namespace dnfree;

namespace {

oracle::Blocks sorted_blocks(const NoncrossingPartition& p) {
  oracle::Blocks b = p.blocks();
  std::sort(b.begin(), b.end());
  return b;
}

}  // namespace

TEST_CASE("enumeration matches small cases and the Catalan recurrence") {
  CHECK(enumerate_noncrossing(1).size() == 1);
  CHECK(to_string(enumerate_noncrossing(1)[0]) == "{{1}}");
  const auto& two = enumerate_noncrossing(2);
  REQUIRE(two.size() == 2);
  CHECK(to_string(two[0]) == "{{1},{2}}");
  CHECK(to_string(two[1]) == "{{1,2}}");
  for (int n = 1; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(mpz_class(static_cast<unsigned long>(enumerate_noncrossing(n).size())) == oracle::catalan(n));
    CHECK(catalan(n) == oracle::catalan(n));
  }
}

TEST_CASE("enumeration equals the filtered set partitions") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<oracle::Blocks> ours;
    for (const auto& p : enumerate_noncrossing(n)) ours.push_back(sorted_blocks(p));
    auto theirs = oracle::noncrossing(n);
    for (auto& b : theirs) std::sort(b.begin(), b.end());
    std::sort(ours.begin(), ours.end());
    std::sort(theirs.begin(), theirs.end());
    CHECK(ours == theirs);
  }
}

TEST_CASE("enumeration order is canonical and stable") {
  const auto& p = enumerate_noncrossing(5);
  CHECK(std::is_sorted(p.begin(), p.end()));
  CHECK(&enumerate_noncrossing(5) == &p);
  CHECK_THROWS_AS(enumerate_noncrossing(0), BoundError);
  CHECK_THROWS_AS(enumerate_noncrossing(13), BoundError);
  CHECK(enumerate_noncrossing(3, 3).size() == 5);
  CHECK_THROWS_AS(enumerate_noncrossing(4, 3), BoundError);
}

TEST_CASE("crossing predicate") {
  CHECK(is_noncrossing(3, {{1, 2}, {3}}));
  CHECK_FALSE(is_noncrossing(4, {{1, 3}, {2, 4}}));
  CHECK(is_noncrossing(4, {{1, 4}, {2, 3}}));
  CHECK_THROWS_AS(is_noncrossing(3, {{1, 2}}), DomainError);
  CHECK_THROWS_AS(is_noncrossing(3, {{1, 2}, {2, 3}}), DomainError);
  CHECK_THROWS_AS(NoncrossingPartition(4, {{1, 3}, {2, 4}}), DomainError);
}

TEST_CASE("partitions are canonicalized") {
  const NoncrossingPartition p(4, {{4, 1}, {3, 2}});
  CHECK(to_string(p) == "{{1,4},{2,3}}");
  CHECK(p == parse_partition("{{2,3},{1,4}}"));
  CHECK(p.block_sizes() == std::vector<int>{2, 2});
  CHECK(p.block_of(3) == 1);
  CHECK_THROWS_AS(parse_partition("{{1,2}"), ParseError);
  CHECK_THROWS_AS(parse_partition("{{1,x}}"), ParseError);
}

TEST_CASE("refinement order") {
  const auto zero = NoncrossingPartition::finest(3);
  for (const auto& q : enumerate_noncrossing(3)) CHECK(leq(zero, q));
  CHECK_FALSE(leq(NoncrossingPartition::coarsest(3), parse_partition("{{1,2},{3}}")));
  CHECK(leq(parse_partition("{{1},{2,3}}"), parse_partition("{{1,2,3}}")));
  CHECK_FALSE(leq(parse_partition("{{1,2},{3}}"), parse_partition("{{1},{2,3}}")));
}

TEST_CASE("Kreweras complement") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(kreweras_complement(NoncrossingPartition::finest(n)) == NoncrossingPartition::coarsest(n));
    CHECK(kreweras_complement(NoncrossingPartition::coarsest(n)) == NoncrossingPartition::finest(n));
  }
  CHECK(to_string(kreweras_complement(parse_partition("{{1,2},{3}}"))) == "{{1},{2,3}}");
  CHECK(to_string(kreweras_complement(parse_partition("{{1,3},{2}}"))) == "{{1,2},{3}}");
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_noncrossing(n)) {
      const auto kr = kreweras_complement(p);
      CAPTURE(to_string(p));
      CHECK(sorted_blocks(kr) == oracle::kreweras(sorted_blocks(p), n));
      CHECK(p.block_count() + kr.block_count() == static_cast<std::size_t>(n + 1));
    }
  }
}

TEST_CASE("Moebius function") {
  const auto one = [](int n) { return NoncrossingPartition::coarsest(n); };
  const auto zero = [](int n) { return NoncrossingPartition::finest(n); };
  CHECK(mobius_brute(one(4), one(4)) == 1);
  CHECK(mobius_brute(zero(2), one(2)) == -1);
  CHECK(mobius_brute(zero(3), one(3)) == 2);
  CHECK(mobius_brute(zero(4), one(4)) == -5);
  CHECK(mobius_brute(parse_partition("{{1,2},{3}}"), one(3)) == -1);
  CHECK(mobius_full(one(5)) == 1);
  CHECK(mobius_full(zero(4)) == -5);
  CHECK(mobius_full(parse_partition("{{1,3},{2}}")) == -1);
  CHECK_THROWS_AS(mobius_brute(one(3), zero(3)), DomainError);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : enumerate_noncrossing(n)) {
      CAPTURE(to_string(p));
      const Rational expected = oracle::mobius_to_top(p.blocks(), n);
      CHECK(mobius_full(p) == expected);
      CHECK(mobius_brute(p, one(n)) == expected);
    }
  }
}

TEST_CASE("lattice table rows") {
  const auto& rows = nc_table(4);
  REQUIRE(rows.size() == 14);
  for (const auto& r : rows) {
    CHECK(r.block_sizes == r.partition.block_sizes());
    CHECK(r.kreweras_block_sizes == kreweras_complement(r.partition).block_sizes());
    CHECK(r.mobius_to_top == mobius_full(r.partition));
  }
}
