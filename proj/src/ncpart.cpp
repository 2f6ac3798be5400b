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

#include "dnfree/ncpart.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "dnfree/errors.hpp"

namespace dnfree {
namespace {

// labels[e] = block index of element e (1-based elements, labels[0] unused).
std::vector<int> validate_partition(int n, const std::vector<Block>& blocks) {
  if (n < 1) throw DomainError("partition ground set must be nonempty");
  std::vector<int> labels(n + 1, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw DomainError("partition has an empty block");
    for (int e : blocks[b]) {
      if (e < 1 || e > n) {
        throw DomainError("element " + std::to_string(e) + " outside 1.." + std::to_string(n));
      }
      if (labels[e] != -1) {
        throw DomainError("element " + std::to_string(e) + " appears in two blocks");
      }
      labels[e] = static_cast<int>(b);
    }
  }
  for (int e = 1; e <= n; ++e) {
    if (labels[e] == -1) throw DomainError("element " + std::to_string(e) + " is not covered");
  }
  return labels;
}

bool labels_noncrossing(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size()) - 1;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (labels[b] == labels[a]) continue;
      for (int c = b + 1; c <= n; ++c) {
        if (labels[c] != labels[a]) continue;
        for (int d = c + 1; d <= n; ++d) {
          if (labels[d] == labels[b]) return false;
        }
      }
    }
  return true;
}

std::vector<Block> canonical_blocks(std::vector<Block> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& x, const Block& y) { return x.front() < y.front(); });
  return blocks;
}

// Depth-first growth: element i joins an existing block or opens a new one.
// Joining block B is legal iff no other block straddles max(B), i.e. has
// elements both below max(B) and between max(B) and i.
void grow(int i, int n, std::vector<Block>& blocks, std::vector<int>& labels,
          std::vector<NoncrossingPartition>& out,
          const std::function<NoncrossingPartition(std::vector<Block>)>& make) {
  if (i > n) {
    out.push_back(make(blocks));
    return;
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const int top = blocks[b].back();
    bool straddled = false;
    for (int j = top + 1; j < i && !straddled; ++j) {
      const int c = labels[j];
      if (blocks[c].front() < top) straddled = true;
    }
    if (straddled) continue;
    blocks[b].push_back(i);
    labels[i] = static_cast<int>(b);
    grow(i + 1, n, blocks, labels, out, make);
    blocks[b].pop_back();
  }
  blocks.push_back(Block{i});
  labels[i] = static_cast<int>(blocks.size() - 1);
  grow(i + 1, n, blocks, labels, out, make);
  blocks.pop_back();
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

NoncrossingPartition::NoncrossingPartition(int n, std::vector<Block> blocks) : n_(n) {
  const auto labels = validate_partition(n, blocks);
  if (!labels_noncrossing(labels)) throw DomainError("partition has crossing blocks");
  blocks_ = canonical_blocks(std::move(blocks));
}

NoncrossingPartition::NoncrossingPartition(Trusted, int n, std::vector<Block> blocks)
    : n_(n), blocks_(std::move(blocks)) {}

NoncrossingPartition NoncrossingPartition::finest(int n) {
  std::vector<Block> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return NoncrossingPartition(n, std::move(blocks));
}

NoncrossingPartition NoncrossingPartition::coarsest(int n) {
  Block all(n);
  std::iota(all.begin(), all.end(), 1);
  return NoncrossingPartition(n, {all});
}

std::vector<int> NoncrossingPartition::block_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
  return sizes;
}

std::size_t NoncrossingPartition::block_of(int e) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (std::binary_search(blocks_[b].begin(), blocks_[b].end(), e)) return b;
  }
  throw DomainError("element " + std::to_string(e) + " not in partition");
}

const std::vector<NoncrossingPartition>& enumerate_noncrossing(int n, int cap) {
  if (n < 1 || n > cap) {
    throw BoundError("NC(n) enumeration needs 1 <= n <= " + std::to_string(cap) +
                     ", got n=" + std::to_string(n));
  }
  static std::map<int, std::unique_ptr<const std::vector<NoncrossingPartition>>> cache;
  std::lock_guard lock(cache_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto out = std::make_unique<std::vector<NoncrossingPartition>>();
  std::vector<Block> blocks;
  std::vector<int> labels(n + 1, -1);
  const std::function<NoncrossingPartition(std::vector<Block>)> make =
      [n](std::vector<Block> b) { return NoncrossingPartition(NoncrossingPartition::Trusted{}, n, std::move(b)); };
  grow(1, n, blocks, labels, *out, make);
  std::sort(out->begin(), out->end());
  auto& ref = *out;
  cache.emplace(n, std::move(out));
  return ref;
}

bool is_noncrossing(int n, const std::vector<Block>& blocks) {
  return labels_noncrossing(validate_partition(n, blocks));
}

bool leq(const NoncrossingPartition& p, const NoncrossingPartition& q) {
  if (p.n() != q.n()) {
    throw DomainError("cannot compare partitions of different ground sets (" +
                      std::to_string(p.n()) + " vs " + std::to_string(q.n()) + ")");
  }
  for (const auto& block : p.blocks()) {
    const auto target = q.block_of(block.front());
    for (int e : block) {
      if (q.block_of(e) != target) return false;
    }
  }
  return true;
}

NoncrossingPartition kreweras_complement(const NoncrossingPartition& p) {
  // Kr(p) is the cycle decomposition of p^{-1} o gamma, where gamma is the
  // long cycle (1 2 ... n) and each block of p is read as an increasing cycle.
  const int n = p.n();
  std::vector<int> p_inverse(n + 1);
  for (const auto& block : p.blocks()) {
    for (std::size_t j = 0; j < block.size(); ++j) {
      const int next = block[(j + 1) % block.size()];
      p_inverse[next] = block[j];
    }
  }
  std::vector<bool> seen(n + 1, false);
  std::vector<Block> blocks;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    Block cycle;
    for (int e = start; !seen[e];) {
      seen[e] = true;
      cycle.push_back(e);
      e = p_inverse[e % n + 1];
    }
    std::sort(cycle.begin(), cycle.end());
    blocks.push_back(std::move(cycle));
  }
  return NoncrossingPartition(NoncrossingPartition::Trusted{}, n, canonical_blocks(std::move(blocks)));
}

Rational mobius_brute(const NoncrossingPartition& p, const NoncrossingPartition& q) {
  if (!leq(p, q)) {
    throw DomainError("mobius_brute requires p <= q, got p=" + to_string(p) + " q=" + to_string(q));
  }
  std::vector<const NoncrossingPartition*> interval;
  for (const auto& s : enumerate_noncrossing(p.n())) {
    if (leq(p, s) && leq(s, q)) interval.push_back(&s);
  }
  // Strictly finer elements have strictly more blocks, so processing by
  // decreasing block count visits every tau < sigma before sigma.
  std::stable_sort(interval.begin(), interval.end(), [](const auto* a, const auto* b) {
    return a->block_count() > b->block_count();
  });
  std::vector<Rational> mu(interval.size());
  for (std::size_t i = 0; i < interval.size(); ++i) {
    if (*interval[i] == p) {
      mu[i] = 1;
      continue;
    }
    Rational sum = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (*interval[j] != *interval[i] && leq(*interval[j], *interval[i])) sum += mu[j];
    }
    mu[i] = -sum;
  }
  for (std::size_t i = 0; i < interval.size(); ++i) {
    if (*interval[i] == q) return mu[i];
  }
  throw DomainError("internal: q missing from its own interval");
}

mpz_class catalan(int n) {
  if (n < 0) throw DomainError("catalan index must be nonnegative");
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  return binom / (n + 1);
}

Rational mobius_full(const NoncrossingPartition& p) {
  Rational value = 1;
  const auto kr = kreweras_complement(p);
  for (const auto& block : kr.blocks()) {
    const int k = static_cast<int>(block.size()) - 1;
    Rational factor(catalan(k));
    if (k % 2 == 1) factor = -factor;
    value *= factor;
  }
  return value;
}

const std::vector<NcEntry>& nc_table(int n) {
  const auto& partitions = enumerate_noncrossing(n);
  static std::map<int, std::unique_ptr<const std::vector<NcEntry>>> cache;
  std::lock_guard lock(cache_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto table = std::make_unique<std::vector<NcEntry>>();
  table->reserve(partitions.size());
  for (const auto& p : partitions) {
    table->push_back(NcEntry{p, p.block_sizes(), kreweras_complement(p).block_sizes(),
                             mobius_full(p)});
  }
  auto& ref = *table;
  cache.emplace(n, std::move(table));
  return ref;
}

std::string to_string(const NoncrossingPartition& p) {
  std::string s = "{";
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    if (b) s += ',';
    s += '{';
    for (std::size_t j = 0; j < p.blocks()[b].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(p.blocks()[b][j]);
    }
    s += '}';
  }
  return s + '}';
}

NoncrossingPartition parse_partition(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError("partition text: expected '" + std::string(1, c) + "' at offset " +
                       std::to_string(pos));
    }
    ++pos;
  };
  auto peek = [&] {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  };
  auto read_int = [&] {
    skip_ws();
    const std::size_t begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (begin == pos || pos - begin > 6) {
      throw ParseError("partition text: expected integer at offset " + std::to_string(begin));
    }
    return std::stoi(std::string(text.substr(begin, pos - begin)));
  };

  std::vector<Block> blocks;
  int count = 0;
  expect('{');
  while (true) {
    expect('{');
    Block block{read_int()};
    while (peek() == ',') {
      ++pos;
      block.push_back(read_int());
    }
    expect('}');
    count += static_cast<int>(block.size());
    blocks.push_back(std::move(block));
    if (peek() == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect('}');
  skip_ws();
  if (pos != text.size()) throw ParseError("partition text: trailing characters");
  return NoncrossingPartition(count, std::move(blocks));
}

}  // namespace dnfree
