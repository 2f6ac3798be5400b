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

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dnfree/rational.hpp"

namespace dnfree {

/// Default upper bound on n for enumerate_noncrossing. NC(12) has 208012
/// elements.
inline constexpr int kDefaultNcCap = 12;

using Block = std::vector<int>;

/// A noncrossing partition of {1, ..., n} in canonical form: blocks sorted
/// by their minimum, elements ascending within each block. Construction
/// validates coverage, disjointness and the noncrossing condition.
class NoncrossingPartition {
 public:
  NoncrossingPartition(int n, std::vector<Block> blocks);

  /// 0_n: all singletons.
  static NoncrossingPartition finest(int n);
  /// 1_n: a single block.
  static NoncrossingPartition coarsest(int n);

  int n() const noexcept { return n_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }

  /// Block sizes in canonical block order.
  std::vector<int> block_sizes() const;

  /// Index of the block holding element e (1-based element).
  std::size_t block_of(int e) const;

  friend bool operator==(const NoncrossingPartition&, const NoncrossingPartition&) = default;
  friend std::strong_ordering operator<=>(const NoncrossingPartition& a,
                                          const NoncrossingPartition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

 private:
  struct Trusted {};
  NoncrossingPartition(Trusted, int n, std::vector<Block> blocks);
  friend const std::vector<NoncrossingPartition>& enumerate_noncrossing(int, int);
  friend NoncrossingPartition kreweras_complement(const NoncrossingPartition&);

  int n_ = 0;
  std::vector<Block> blocks_;
};

/// Every element of NC(n) exactly once, sorted lexicographically on the
/// canonical block lists. Results are cached; the returned reference stays
/// valid for the life of the process. Throws BoundError for n < 1 or n > cap.
const std::vector<NoncrossingPartition>& enumerate_noncrossing(int n, int cap = kDefaultNcCap);

/// True iff blocks is noncrossing. Throws DomainError when blocks is not a
/// partition of {1, ..., n} (overlap, gap, or element out of range).
bool is_noncrossing(int n, const std::vector<Block>& blocks);

/// Refinement order: every block of p lies inside a block of q.
bool leq(const NoncrossingPartition& p, const NoncrossingPartition& q);

NoncrossingPartition kreweras_complement(const NoncrossingPartition& p);

/// mu(p, q) from the defining recursion over the interval [p, q] in NC(n).
/// Throws DomainError unless p <= q.
Rational mobius_brute(const NoncrossingPartition& p, const NoncrossingPartition& q);

/// mu(p, 1_n) as the product over blocks W of Kr(p) of
/// (-1)^{|W|-1} C_{|W|-1}.
Rational mobius_full(const NoncrossingPartition& p);

/// n-th Catalan number, C_n = binom(2n, n) / (n + 1).
mpz_class catalan(int n);

/// One row of the cached NC(n) table used by the convolution kernels.
struct NcEntry {
  NoncrossingPartition partition;
  std::vector<int> block_sizes;
  std::vector<int> kreweras_block_sizes;
  Rational mobius_to_top;  // mu(partition, 1_n)
};

/// Cached per-n table in enumeration order. Thread-safe.
const std::vector<NcEntry>& nc_table(int n);

/// Text form "{{1,3},{2}}".
std::string to_string(const NoncrossingPartition& p);

/// Parses the text form. Whitespace is allowed between tokens. Throws
/// ParseError for malformed text and DomainError for a crossing or
/// non-covering block list.
NoncrossingPartition parse_partition(std::string_view text);

}  // namespace dnfree
