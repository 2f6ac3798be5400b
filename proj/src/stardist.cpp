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

#include "dnfree/stardist.hpp"

#include <algorithm>
#include <sstream>

#include "dnfree/errors.hpp"
#include "dnfree/ncpart.hpp"

namespace dnfree {
namespace {

StarWord restrict_to(const StarWord& w, const Block& block) {
  StarWord sub;
  sub.reserve(block.size());
  for (int e : block) sub.push_back(w[static_cast<std::size_t>(e - 1)]);
  return sub;
}

bool uses_only(const StarWord& w, int var) {
  return std::all_of(w.begin(), w.end(), [var](const Letter& l) { return l.var == var; });
}

bool uses_var(const StarWord& w, int var) {
  return std::any_of(w.begin(), w.end(), [var](const Letter& l) { return l.var == var; });
}

// Even length and strictly alternating x, x^* (either starting letter).
bool is_alternating(const StarWord& w) {
  if (w.empty() || w.size() % 2 != 0) return false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i].var != w[0].var || w[i].star == w[i - 1].star) return false;
  }
  return true;
}

void check_classifier_order(int order, int minimum, int available, const char* name) {
  if (order < minimum) {
    throw BoundError(std::string(name) + " needs order >= " + std::to_string(minimum));
  }
  if (order > available) {
    throw BoundError(std::string(name) + ": order " + std::to_string(order) +
                     " exceeds available order " + std::to_string(available));
  }
}

Verdict combine(const std::vector<Verdict>& components) {
  bool any = false;
  for (auto v : components) {
    if (v == Verdict::no) return Verdict::no;
    if (v == Verdict::yes) any = true;
  }
  return any ? Verdict::yes : Verdict::degenerate;
}

bool component_all_zero(const DegreeSequence& seq, std::size_t c, int order) {
  for (int k = 1; k <= order; ++k) {
    if (seq[k][c] != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<StarWord> all_words(int n_vars, bool star, int max_length) {
  std::vector<Letter> alphabet;
  for (int v = 0; v < n_vars; ++v) {
    alphabet.push_back({v, false});
    if (star) alphabet.push_back({v, true});
  }
  std::vector<StarWord> out;
  std::vector<StarWord> level{StarWord{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<StarWord> next;
    next.reserve(level.size() * alphabet.size());
    for (const auto& w : level) {
      for (const auto& l : alphabet) {
        StarWord e = w;
        e.push_back(l);
        next.push_back(std::move(e));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

std::string to_string(const StarWord& w, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += vars.at(static_cast<std::size_t>(w[i].var));
    if (w[i].star) s += '*';
  }
  return s;
}

StarWord parse_word(std::string_view text, const std::vector<std::string>& vars, bool star) {
  std::istringstream in{std::string(text)};
  StarWord w;
  std::string token;
  while (in >> token) {
    Letter l;
    if (token.size() > 1 && token.back() == '*') {
      if (!star) throw ParseError("word \"" + std::string(text) + "\" uses * in a table without star");
      l.star = true;
      token.pop_back();
    }
    const auto it = std::find(vars.begin(), vars.end(), token);
    if (it == vars.end()) {
      throw ParseError("word \"" + std::string(text) + "\" uses unknown variable \"" + token + "\"");
    }
    l.var = static_cast<int>(it - vars.begin());
    w.push_back(l);
  }
  if (w.empty()) throw ParseError("empty word");
  return w;
}

StarWord adjoint_word(const StarWord& w) {
  StarWord r(w.rbegin(), w.rend());
  for (auto& l : r) l.star = !l.star;
  return r;
}

JointDistribution::JointDistribution(std::size_t n_components, int order, std::vector<std::string> vars,
                                     bool star, std::map<StarWord, DiagonalScalar> moments)
    : n_(n_components), order_(order), vars_(std::move(vars)), star_(star), moments_(std::move(moments)) {
  if (n_ == 0) throw DomainError("joint distribution needs N >= 1");
  if (vars_.empty() || static_cast<int>(vars_.size()) > kMaxJointVars) {
    throw BoundError("joint distribution needs 1.." + std::to_string(kMaxJointVars) + " variables");
  }
  if (order_ < 1 || order_ > kMaxJointOrder) {
    throw BoundError("joint distribution order must be in 1.." + std::to_string(kMaxJointOrder));
  }
  for (const auto& [w, value] : moments_) {
    if (w.empty() || static_cast<int>(w.size()) > order_) {
      throw BoundError("joint table word \"" + to_string(w, vars_) + "\" longer than order");
    }
    for (const auto& l : w) {
      if (l.var < 0 || l.var >= static_cast<int>(vars_.size()) || (l.star && !star_)) {
        throw DomainError("joint table word uses a letter outside the alphabet");
      }
    }
    if (value.size() != n_) {
      throw DomainError("joint table entry \"" + to_string(w, vars_) + "\" has wrong dimension");
    }
  }
  for (const auto& w : all_words(static_cast<int>(vars_.size()), star_, order_)) {
    if (!moments_.count(w)) {
      throw BoundError("joint table incomplete: missing word \"" + to_string(w, vars_) + "\"");
    }
  }
}

const DiagonalScalar& JointDistribution::moment(const StarWord& w) const {
  const auto it = moments_.find(w);
  if (it == moments_.end()) {
    throw BoundError("no moment for word \"" + to_string(w, vars_) + "\" (order " +
                     std::to_string(order_) + ")");
  }
  return it->second;
}

Distribution JointDistribution::marginal(int var) const {
  DegreeSequence m(n_, order_);
  for (int k = 1; k <= order_; ++k) m[k] = moment(StarWord(static_cast<std::size_t>(k), Letter{var, false}));
  return Distribution{std::move(m)};
}

DiagonalScalar word_moment_from_cumulants(const StarWord& w, const CumulantFn& cumulant,
                                          std::size_t n_components) {
  const int n = static_cast<int>(w.size());
  DiagonalScalar sum = DiagonalScalar::zero(n_components);
  for (const auto& pi : enumerate_noncrossing(n)) {
    DiagonalScalar term = DiagonalScalar::one(n_components);
    for (const auto& block : pi.blocks()) {
      term *= cumulant(restrict_to(w, block));
      if (term.is_zero()) break;
    }
    sum += term;
  }
  return sum;
}

DiagonalScalar mixed_cumulant(const JointDistribution& j, const StarWord& w) {
  const int n = static_cast<int>(w.size());
  if (n < 1 || n > j.order()) {
    throw BoundError("word length " + std::to_string(n) + " exceeds table order " +
                     std::to_string(j.order()));
  }
  DiagonalScalar sum = DiagonalScalar::zero(j.n_components());
  for (const auto& entry : nc_table(n)) {
    DiagonalScalar term = DiagonalScalar::one(j.n_components());
    for (const auto& block : entry.partition.blocks()) term *= j.moment(restrict_to(w, block));
    sum += term * entry.mobius_to_top;
  }
  return sum;
}

std::map<StarWord, DiagonalScalar> cumulant_table(const JointDistribution& j) {
  std::map<StarWord, DiagonalScalar> table;
  for (const auto& w : all_words(static_cast<int>(j.vars().size()), j.star(), j.order())) {
    table.emplace(w, mixed_cumulant(j, w));
  }
  return table;
}

JointDistribution joint_from_cumulant_table(std::size_t n_components, int order,
                                            std::vector<std::string> vars, bool star,
                                            const std::map<StarWord, DiagonalScalar>& cumulants) {
  const CumulantFn lookup = [&](const StarWord& w) -> DiagonalScalar {
    const auto it = cumulants.find(w);
    if (it == cumulants.end()) throw BoundError("cumulant table incomplete");
    return it->second;
  };
  std::map<StarWord, DiagonalScalar> moments;
  for (const auto& w : all_words(static_cast<int>(vars.size()), star, order)) {
    moments.emplace(w, word_moment_from_cumulants(w, lookup, n_components));
  }
  return JointDistribution(n_components, order, std::move(vars), star, std::move(moments));
}

namespace {

CumulantFn free_pair_cumulants(const Distribution& x, const Distribution& y) {
  const auto kx = moments_to_cumulants(x).cumulants;
  const auto ky = moments_to_cumulants(y).cumulants;
  const std::size_t n = x.n_components();
  return [kx, ky, n](const StarWord& w) -> DiagonalScalar {
    const int len = static_cast<int>(w.size());
    if (uses_only(w, 0)) return kx[len];
    if (uses_only(w, 1)) return ky[len];
    return DiagonalScalar::zero(n);
  };
}

void check_pair(const Distribution& x, const Distribution& y, int order) {
  if (x.n_components() != y.n_components()) {
    throw DomainError("free pair: dimension mismatch N=" + std::to_string(x.n_components()) +
                      " vs N=" + std::to_string(y.n_components()));
  }
  if (order < 1 || order > x.order() || order > y.order()) {
    throw BoundError("free pair: order " + std::to_string(order) + " exceeds the marginals");
  }
}

}  // namespace

JointDistribution joint_from_free_pair(const Distribution& x, const Distribution& y, int order) {
  check_pair(x, y, order);
  if (order > kMaxJointOrder) {
    throw BoundError("joint table order capped at " + std::to_string(kMaxJointOrder));
  }
  const auto cumulant = free_pair_cumulants(truncate(x, order), truncate(y, order));
  std::map<StarWord, DiagonalScalar> moments;
  for (const auto& w : all_words(2, false, order)) {
    moments.emplace(w, word_moment_from_cumulants(w, cumulant, x.n_components()));
  }
  return JointDistribution(x.n_components(), order, {"x", "y"}, false, std::move(moments));
}

FreenessReport check_freeness(const JointDistribution& j, int var_a, int var_b, int order) {
  const int n_vars = static_cast<int>(j.vars().size());
  if (var_a < 0 || var_b < 0 || var_a >= n_vars || var_b >= n_vars || var_a == var_b) {
    throw DomainError("freeness check needs two distinct variables present in the table");
  }
  if (order > j.order()) {
    throw BoundError("freeness check order " + std::to_string(order) + " exceeds table order " +
                     std::to_string(j.order()));
  }
  for (const auto& w : all_words(n_vars, j.star(), order)) {
    if (w.size() < 2 || !uses_var(w, var_a) || !uses_var(w, var_b)) continue;
    const bool only_pair = std::all_of(w.begin(), w.end(), [&](const Letter& l) {
      return l.var == var_a || l.var == var_b;
    });
    if (!only_pair) continue;
    auto k = mixed_cumulant(j, w);
    if (!k.is_zero()) return FreenessReport{false, w, std::move(k)};
  }
  return FreenessReport{};
}

Distribution sum_moments_through_joint(const Distribution& x, const Distribution& y, int order) {
  const JointDistribution joint = joint_from_free_pair(x, y, order);
  DegreeSequence m(x.n_components(), order);
  for (const auto& [w, value] : joint.moments()) m[static_cast<int>(w.size())] += value;
  return Distribution{std::move(m)};
}

Distribution product_moments_through_joint(const Distribution& x, const Distribution& y, int order) {
  check_pair(x, y, order);
  const auto cumulant = free_pair_cumulants(truncate(x, order), truncate(y, order));
  DegreeSequence m(x.n_components(), order);
  for (int n = 1; n <= order; ++n) {
    StarWord w;
    for (int i = 0; i < n; ++i) {
      w.push_back({0, false});
      w.push_back({1, false});
    }
    m[n] = word_moment_from_cumulants(w, cumulant, x.n_components());
  }
  return Distribution{std::move(m)};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::no: return "false";
    case Verdict::yes: return "true";
    case Verdict::degenerate: return "degenerate";
  }
  return "unknown";
}

Classification classify_semicircular(const Distribution& d, int order) {
  check_classifier_order(order, 3, d.order(), "semicircular classification");
  const Distribution t = truncate(d, order);
  const auto k = moments_to_cumulants(t).cumulants;
  Classification result;
  for (std::size_t c = 0; c < d.n_components(); ++c) {
    if (component_all_zero(t.moments, c, order)) {
      result.components.push_back(Verdict::degenerate);
      continue;
    }
    bool ok = k[2][c] != 0;
    for (int n = 1; n <= order && ok; ++n) {
      if (n != 2 && k[n][c] != 0) ok = false;
    }
    result.components.push_back(ok ? Verdict::yes : Verdict::no);
  }
  result.verdict = combine(result.components);
  result.notes.push_back("self-adjointness not checkable from plain moments; skipped");
  return result;
}

Classification classify_semicircular(const JointDistribution& j, int order) {
  if (j.vars().size() != 1) throw DomainError("semicircular classification takes one variable");
  Classification result = classify_semicircular(j.marginal(0), order);
  result.notes.clear();
  if (j.star()) {
    for (const auto& [w, value] : j.moments()) {
      if (static_cast<int>(w.size()) > order) continue;
      if (j.moment(adjoint_word(w)) != value) {
        result.notes.push_back("E(w) != E(w*) for w = \"" + to_string(w, j.vars()) + "\"");
        for (std::size_t c = 0; c < j.n_components(); ++c) {
          if (value[c] != j.moment(adjoint_word(w))[c]) result.components[c] = Verdict::no;
        }
      }
    }
    result.verdict = combine(result.components);
  } else {
    result.notes.push_back("self-adjointness not checkable without a star table; skipped");
  }
  return result;
}

Classification classify_even(const Distribution& d, int order) {
  check_classifier_order(order, 2, d.order(), "even classification");
  Classification result;
  for (std::size_t c = 0; c < d.n_components(); ++c) {
    if (component_all_zero(d.moments, c, order)) {
      result.components.push_back(Verdict::degenerate);
      continue;
    }
    bool ok = true;
    for (int n = 1; n <= order && ok; n += 2) ok = d.moments[n][c] == 0;
    result.components.push_back(ok ? Verdict::yes : Verdict::no);
  }
  result.verdict = combine(result.components);
  return result;
}

Classification classify_r_diagonal(const JointDistribution& j, int order) {
  if (j.vars().size() != 1 || !j.star()) {
    throw DomainError("R-diagonal classification needs a one-variable star table");
  }
  check_classifier_order(order, 2, j.order(), "R-diagonal classification");
  const std::size_t n = j.n_components();
  std::vector<bool> nonzero_component(n, false);
  std::vector<bool> alternating_survives(n, false);
  std::vector<bool> violation(n, false);
  for (const auto& w : all_words(1, true, order)) {
    const auto& m = j.moment(w);
    for (std::size_t c = 0; c < n; ++c) {
      if (m[c] != 0) nonzero_component[c] = true;
    }
    const auto k = mixed_cumulant(j, w);
    const bool alternating = is_alternating(w);
    for (std::size_t c = 0; c < n; ++c) {
      if (k[c] == 0) continue;
      if (alternating) {
        alternating_survives[c] = true;
      } else {
        violation[c] = true;
      }
    }
  }
  Classification result;
  for (std::size_t c = 0; c < n; ++c) {
    if (!nonzero_component[c]) {
      result.components.push_back(Verdict::degenerate);
    } else {
      result.components.push_back(!violation[c] && alternating_survives[c] ? Verdict::yes : Verdict::no);
    }
  }
  result.verdict = combine(result.components);
  return result;
}

Distribution divide_free(const Distribution& d, int n) {
  if (n < 1) throw DomainError("divide_free needs n >= 1, got " + std::to_string(n));
  auto k = moments_to_cumulants(d);
  const Rational inverse(1, n);
  for (int m = 1; m <= k.order(); ++m) k.cumulants[m] *= inverse;
  return cumulants_to_moments(k);
}

}  // namespace dnfree
