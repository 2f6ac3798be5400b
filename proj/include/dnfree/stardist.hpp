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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dnfree/diagonal.hpp"
#include "dnfree/transforms.hpp"

namespace dnfree {

/// Joint tables are dense over all words up to the order; these caps keep
/// them at (2 * n_vars)^M entries for M <= 6, n_vars <= 2.
inline constexpr int kMaxJointOrder = 6;
inline constexpr int kMaxJointVars = 2;

/// x_var, or its adjoint when star is set.
struct Letter {
  int var = 0;
  bool star = false;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using StarWord = std::vector<Letter>;

/// Every word of length 1..max_length over the alphabet, ordered by length
/// and then lexicographically with x < x* < y < y*.
std::vector<StarWord> all_words(int n_vars, bool star, int max_length);

/// Space-separated letters, "*" suffix for adjoints: "x x* y".
std::string to_string(const StarWord& w, const std::vector<std::string>& vars);
StarWord parse_word(std::string_view text, const std::vector<std::string>& vars, bool star);

/// The word reversed with every star flipped (the word of w^*).
StarWord adjoint_word(const StarWord& w);

/// Mixed moments E(w) over D_N for every word of length <= M.
class JointDistribution {
 public:
  /// Validates letters and that the table is complete up to the order.
  JointDistribution(std::size_t n_components, int order, std::vector<std::string> vars, bool star,
                    std::map<StarWord, DiagonalScalar> moments);

  std::size_t n_components() const noexcept { return n_; }
  int order() const noexcept { return order_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  bool star() const noexcept { return star_; }
  const std::map<StarWord, DiagonalScalar>& moments() const noexcept { return moments_; }

  const DiagonalScalar& moment(const StarWord& w) const;

  /// The single-variable Distribution of x_var (unstarred powers).
  Distribution marginal(int var) const;

  friend bool operator==(const JointDistribution&, const JointDistribution&) = default;

 private:
  std::size_t n_;
  int order_;
  std::vector<std::string> vars_;
  bool star_;
  std::map<StarWord, DiagonalScalar> moments_;
};

using CumulantFn = std::function<DiagonalScalar(const StarWord&)>;

/// E(w) = sum_{pi in NC(|w|)} prod_{V in pi} k(w|_V).
DiagonalScalar word_moment_from_cumulants(const StarWord& w, const CumulantFn& cumulant,
                                          std::size_t n_components);

/// k(w) = sum_{pi in NC(|w|)} mu(pi, 1_|w|) prod_{V in pi} E(w|_V).
DiagonalScalar mixed_cumulant(const JointDistribution& j, const StarWord& w);

/// All mixed cumulants of the table, keyed by word.
std::map<StarWord, DiagonalScalar> cumulant_table(const JointDistribution& j);

/// Rebuilds the moment table from a complete cumulant table.
JointDistribution joint_from_cumulant_table(std::size_t n_components, int order,
                                            std::vector<std::string> vars, bool star,
                                            const std::map<StarWord, DiagonalScalar>& cumulants);

/// The joint table of a free pair (x, y): pure cumulants from each marginal,
/// every mixed cumulant zero. Variables are named "x" and "y".
JointDistribution joint_from_free_pair(const Distribution& x, const Distribution& y, int order);

struct FreenessReport {
  bool free = true;
  std::optional<StarWord> witness;           // shortest offending word
  std::optional<DiagonalScalar> witness_cumulant;
};

/// Checks that every word of length 2..order using both variables has a
/// vanishing mixed cumulant.
FreenessReport check_freeness(const JointDistribution& j, int var_a, int var_b, int order);

/// Moments of x + y through the joint table of the free pair, expanding
/// (x + y)^n over all 2^n words.
Distribution sum_moments_through_joint(const Distribution& x, const Distribution& y, int order);

/// Moments of xy as E((xy)^n) through free-pair words of length 2n.
Distribution product_moments_through_joint(const Distribution& x, const Distribution& y, int order);

enum class Verdict { no, yes, degenerate };
std::string to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::degenerate;
  std::vector<Verdict> components;  // per component of D_N
  std::vector<std::string> notes;
};

/// Only the second cumulant survives, k_2 nonzero, in every component whose
/// moments are not all zero. Requires order >= 3.
Classification classify_semicircular(const Distribution& d, int order);

/// Star-table variant: additionally requires E(w) = E(w^*) for every word.
Classification classify_semicircular(const JointDistribution& j, int order);

/// All odd moments vanish in every nonzero component. Requires order >= 2.
Classification classify_even(const Distribution& d, int order);

/// Only even-length alternating cumulants of x, x^* survive, and at least
/// one survives in every nonzero component. Requires a one-variable star
/// table.
Classification classify_r_diagonal(const JointDistribution& j, int order);

/// The distribution with cumulants k_m / n; n-fold free additive
/// convolution of the result recovers d.
Distribution divide_free(const Distribution& d, int n);

}  // namespace dnfree
