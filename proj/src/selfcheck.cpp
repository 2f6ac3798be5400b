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

#include "dnfree/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "dnfree/errors.hpp"
#include "dnfree/ncpart.hpp"
#include "dnfree/random.hpp"

namespace dnfree {
namespace {

// ---------------------------------------------------------------------------
// Independent oracles. None of these call the closed forms they check.

std::vector<mpz_class> catalan_by_recurrence(int max_n) {
  std::vector<mpz_class> c(static_cast<std::size_t>(max_n) + 1, 0);
  c[0] = 1;
  for (int k = 0; k < max_n; ++k) {
    for (int i = 0; i <= k; ++i) c[k + 1] += c[i] * c[k - i];
  }
  return c;
}

// All set partitions of {1..n} as restricted growth strings.
void set_partitions(int n, std::vector<int>& rgs, int blocks, const std::function<void(const std::vector<Block>&)>& visit) {
  const int i = static_cast<int>(rgs.size());
  if (i == n) {
    std::vector<Block> out(static_cast<std::size_t>(blocks));
    for (int e = 0; e < n; ++e) out[static_cast<std::size_t>(rgs[e])].push_back(e + 1);
    visit(out);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    rgs.push_back(b);
    set_partitions(n, rgs, std::max(blocks, b + 1), visit);
    rgs.pop_back();
  }
}

// Kr(p) as the unique maximal sigma with p on odd positions and sigma on
// even positions of 1, 1', 2, 2', ..., n, n' jointly noncrossing.
NoncrossingPartition kreweras_by_search(const NoncrossingPartition& p) {
  const int n = p.n();
  std::vector<const NoncrossingPartition*> valid;
  for (const auto& s : enumerate_noncrossing(n)) {
    std::vector<Block> joint;
    for (const auto& b : p.blocks()) {
      Block jb;
      for (int e : b) jb.push_back(2 * e - 1);
      joint.push_back(jb);
    }
    for (const auto& b : s.blocks()) {
      Block jb;
      for (int e : b) jb.push_back(2 * e);
      joint.push_back(jb);
    }
    if (is_noncrossing(2 * n, joint)) valid.push_back(&s);
  }
  for (const auto* candidate : valid) {
    if (std::all_of(valid.begin(), valid.end(), [&](const auto* other) { return leq(*other, *candidate); })) {
      return *candidate;
    }
  }
  throw DomainError("no maximal complement found");
}

// ---------------------------------------------------------------------------

class Runner {
 public:
  explicit Runner(SelfcheckReport& report) : report_(report) {}

  // fn returns an empty string on success or a failure description.
  void run(const std::string& module, const std::string& name, const std::function<std::string()>& fn) {
    CheckResult r{module, name, false, {}, 0.0};
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = fn();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(r));
  }

 private:
  SelfcheckReport& report_;
};

template <class T>
std::string show(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

std::string series_text(const TruncatedSeries& s) { return dump(to_json(s)); }

Verdict combine_verdicts(const std::vector<Verdict>& components) {
  bool any = false;
  for (auto v : components) {
    if (v == Verdict::no) return Verdict::no;
    if (v == Verdict::yes) any = true;
  }
  return any ? Verdict::yes : Verdict::degenerate;
}

Classification zip_classifications(const std::vector<Classification>& parts) {
  Classification out;
  for (const auto& p : parts) out.components.insert(out.components.end(), p.components.begin(), p.components.end());
  out.verdict = combine_verdicts(out.components);
  out.notes = parts.front().notes;
  return out;
}

JointDistribution zip_joints(const std::vector<JointDistribution>& parts) {
  const auto& first = parts.front();
  std::map<StarWord, DiagonalScalar> moments;
  for (const auto& [w, value] : first.moments()) {
    std::vector<DiagonalScalar> column;
    for (const auto& p : parts) column.push_back(p.moment(w));
    moments.emplace(w, zip_components(column));
  }
  std::size_t n = 0;
  for (const auto& p : parts) n += p.n_components();
  return JointDistribution(n, first.order(), first.vars(), first.star(), std::move(moments));
}

// ---------------------------------------------------------------------------

void lattice_checks(Runner& run) {
  run.run("ncpart", "catalan counts n<=10 (recurrence oracle)", []() -> std::string {
    const auto c = catalan_by_recurrence(10);
    for (int n = 1; n <= 10; ++n) {
      if (mpz_class(enumerate_noncrossing(n).size()) != c[n]) {
        return "|NC(" + std::to_string(n) + ")| = " + std::to_string(enumerate_noncrossing(n).size());
      }
      if (catalan(n) != c[n]) return "catalan(" + std::to_string(n) + ") disagrees with recurrence";
    }
    return std::string();
  });

  run.run("ncpart", "enumeration equals filtered set partitions n<=8", []() -> std::string {
    for (int n = 1; n <= 8; ++n) {
      std::vector<NoncrossingPartition> found;
      std::vector<int> rgs;
      set_partitions(n, rgs, 0, [&](const std::vector<Block>& blocks) {
        if (is_noncrossing(n, blocks)) found.emplace_back(n, blocks);
      });
      std::sort(found.begin(), found.end());
      if (found != enumerate_noncrossing(n)) return "mismatch at n=" + std::to_string(n);
    }
    return std::string();
  });

  run.run("ncpart", "kreweras block count and Kr^2 block multiset n<=8", []() -> std::string {
    for (int n = 1; n <= 8; ++n) {
      for (const auto& p : enumerate_noncrossing(n)) {
        const auto kr = kreweras_complement(p);
        if (static_cast<int>(p.block_count() + kr.block_count()) != n + 1) return "|p|+|Kr p| at " + to_string(p);
        auto a = p.block_sizes();
        auto b = kreweras_complement(kr).block_sizes();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return "Kr^2 block sizes at " + to_string(p);
      }
    }
    return std::string();
  });

  run.run("ncpart", "kreweras equals maximal-complement search n<=6", []() -> std::string {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& p : enumerate_noncrossing(n)) {
        if (kreweras_complement(p) != kreweras_by_search(p)) return "Kr mismatch at " + to_string(p);
      }
    }
    return std::string();
  });

  run.run("ncpart", "mobius closed form equals recursion n<=7", []() -> std::string {
    for (int n = 1; n <= 7; ++n) {
      const auto top = NoncrossingPartition::coarsest(n);
      for (const auto& p : enumerate_noncrossing(n)) {
        if (mobius_full(p) != mobius_brute(p, top)) return "mu mismatch at " + to_string(p);
      }
    }
    return std::string();
  });

  run.run("ncpart", "lattice zeta-mobius inversion n<=6", []() -> std::string {
    for (int n = 1; n <= 6; ++n) {
      const auto bottom = NoncrossingPartition::finest(n);
      for (const auto& pi : enumerate_noncrossing(n)) {
        Rational sum = 0;
        for (const auto& s : enumerate_noncrossing(n)) {
          if (leq(s, pi)) sum += mobius_brute(s, pi);
        }
        const Rational expected = pi == bottom ? 1 : 0;
        if (sum != expected) return "sum_{s<=pi} mu(s,pi) wrong at " + to_string(pi);
      }
    }
    return std::string();
  });

  run.run("ncpart", "refinement is a partial order n<=6", []() -> std::string {
    for (int n = 1; n <= 6; ++n) {
      const auto& all = enumerate_noncrossing(n);
      const std::size_t m = all.size();
      std::vector<char> le(m * m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) le[i * m + j] = leq(all[i], all[j]);
      for (std::size_t i = 0; i < m; ++i) {
        if (!le[i * m + i]) return "not reflexive at " + to_string(all[i]);
        for (std::size_t j = 0; j < m; ++j) {
          if (i != j && le[i * m + j] && le[j * m + i]) return "not antisymmetric at " + to_string(all[i]);
          if (!le[i * m + j]) continue;
          for (std::size_t k = 0; k < m; ++k) {
            if (le[j * m + k] && !le[i * m + k]) return "not transitive at " + to_string(all[i]);
          }
        }
      }
    }
    return std::string();
  });
}

void algebra_checks(Runner& run, RandomInputs& rnd) {
  run.run("dalg", "commutative unital ring axioms (1000 cases, N<=8)", [&]() -> std::string {
    for (int t = 0; t < 1000; ++t) {
      const auto n = static_cast<std::size_t>(rnd.uniform_int(1, 8));
      const auto a = rnd.scalar(n), b = rnd.scalar(n), c = rnd.scalar(n);
      const auto zero = DiagonalScalar::zero(n), one = DiagonalScalar::one(n);
      if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c) || a + b != b + a || a * b != b * a ||
          a * (b + c) != a * b + a * c || a + zero != a || a * one != a || a + d_neg(a) != zero) {
        return "ring law fails at a=" + show(a) + " b=" + show(b) + " c=" + show(c);
      }
    }
    return std::string();
  });

  run.run("dalg", "inversion is an involution and defines D_N^{-1}", [&]() -> std::string {
    for (int t = 0; t < 1000; ++t) {
      const auto n = static_cast<std::size_t>(rnd.uniform_int(1, 8));
      const auto a = rnd.scalar(n);
      bool threw = false;
      try {
        const auto inv = d_invert(a);
        if (d_invert(inv) != a || a * inv != DiagonalScalar::one(n)) return "involution fails at " + show(a);
      } catch (const DomainError&) {
        threw = true;
      }
      if (threw == a.is_invertible()) return "membership mismatch at " + show(a);
    }
    return std::string();
  });
}

void series_checks(Runner& run, RandomInputs& rnd, int order) {
  const int m8 = std::min(order, 8);
  const int m5 = std::min(order, 5);
  const int m6 = std::min(order, 6);

  run.run("series", "ring laws for add/mul (N<=4, M<=8)", [&]() -> std::string {
    for (int t = 0; t < 60; ++t) {
      const auto n = static_cast<std::size_t>(rnd.uniform_int(1, 4));
      const int m = rnd.uniform_int(1, m8);
      const auto f = rnd.series(n, m), g = rnd.series(n, m), h = rnd.series(n, m);
      const auto one = TruncatedSeries::monomial(DiagonalScalar::one(n), 0, m);
      if (s_add(s_add(f, g), h) != s_add(f, s_add(g, h)) || s_mul(s_mul(f, g), h) != s_mul(f, s_mul(g, h)) ||
          s_mul(f, g) != s_mul(g, f) || s_mul(f, s_add(g, h)) != s_add(s_mul(f, g), s_mul(f, h)) ||
          s_mul(f, one) != f || s_add(f, TruncatedSeries(n, m)) != f) {
        return "ring law fails for f=" + series_text(f);
      }
    }
    return std::string();
  });

  run.run("series", "composition is associative on Theta", [&]() -> std::string {
    for (int t = 0; t < 30; ++t) {
      const auto n = static_cast<std::size_t>(rnd.uniform_int(1, 3));
      const auto f = rnd.series(n, m8), g = rnd.series(n, m8, true), h = rnd.series(n, m8, true);
      if (s_compose(s_compose(f, g), h) != s_compose(f, s_compose(g, h))) return "fails for f=" + series_text(f);
    }
    return std::string();
  });

  run.run("series", "compositional inverse is two-sided", [&]() -> std::string {
    for (int t = 0; t < 30; ++t) {
      const auto n = static_cast<std::size_t>(rnd.uniform_int(1, 3));
      const auto g = rnd.theta_inv_series(n, m8);
      const auto h = s_comp_inverse(g);
      const auto id = TruncatedSeries::identity(n, m8);
      if (s_compose(g, h) != id || s_compose(h, g) != id) return "fails for g=" + series_text(g);
    }
    return std::string();
  });

  run.run("series", "boxed convolution group laws (M<=5)", [&]() -> std::string {
    for (int t = 0; t < 20; ++t) {
      const auto n = static_cast<std::size_t>(rnd.uniform_int(1, 3));
      const auto a = rnd.theta_inv_series(n, m5), b = rnd.theta_inv_series(n, m5), c = rnd.theta_inv_series(n, m5);
      const auto id = TruncatedSeries::identity(n, m5);
      if (boxed_convolve(boxed_convolve(a, b), c) != boxed_convolve(a, boxed_convolve(b, c))) {
        return "associativity fails for a=" + series_text(a);
      }
      if (boxed_convolve(a, id) != a || boxed_convolve(id, a) != a) return "identity fails for a=" + series_text(a);
      const auto inv = boxed_inverse(a);
      if (boxed_convolve(a, inv) != id || boxed_convolve(inv, a) != id) return "inverse fails for a=" + series_text(a);
    }
    return std::string();
  });

  run.run("series", "Zeta and Mob are mutual boxed inverses (M<=6)", [&]() -> std::string {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto id = TruncatedSeries::identity(n, m6);
      if (boxed_convolve(zeta_series(n, m6), mob_series(n, m6)) != id) return "Zeta * Mob != z";
      if (boxed_convolve(mob_series(n, m6), zeta_series(n, m6)) != id) return "Mob * Zeta != z";
    }
    return std::string();
  });
}

void transform_checks(Runner& run, RandomInputs& rnd, int order) {
  const int m8 = std::min(order, 8);
  const int m6 = std::min(order, 6);
  const int m5 = std::min(order, 5);

  run.run("transforms", "moments <-> cumulants roundtrip (N<=4, M<=8)", [&]() -> std::string {
    for (int t = 0; t < 100; ++t) {
      const auto n = static_cast<std::size_t>(rnd.uniform_int(1, 4));
      const auto d = rnd.distribution(n, rnd.uniform_int(1, m8));
      if (cumulants_to_moments(moments_to_cumulants(d)) != d) return "roundtrip fails: " + dump(to_json(d));
      const CumulantSequence k{d.moments};
      if (moments_to_cumulants(cumulants_to_moments(k)) != k) return "reverse roundtrip fails";
    }
    return std::string();
  });

  run.run("transforms", "M = R [*] Zeta and R = M [*] Mob (M<=6)", [&]() -> std::string {
    for (int t = 0; t < 30; ++t) {
      const auto n = static_cast<std::size_t>(rnd.uniform_int(1, 4));
      const auto d = rnd.distribution(n, m6);
      if (moment_series(d) != boxed_convolve(r_transform(d), zeta_series(n, m6))) return "M != R [*] Zeta";
      if (r_transform(d) != boxed_convolve(moment_series(d), mob_series(n, m6))) return "R != M [*] Mob";
    }
    return std::string();
  });

  run.run("transforms", "additive convolution: cumulants add, joint expansion agrees (M<=5)", [&]() -> std::string {
    for (int t = 0; t < 20; ++t) {
      const auto n = static_cast<std::size_t>(rnd.uniform_int(1, 3));
      const auto x = rnd.distribution(n, m5), y = rnd.distribution(n, m5);
      const auto sum = free_add_convolve(x, y);
      const auto ks = moments_to_cumulants(sum).cumulants;
      const auto kx = moments_to_cumulants(x).cumulants, ky = moments_to_cumulants(y).cumulants;
      for (int k = 1; k <= m5; ++k) {
        if (ks[k] != kx[k] + ky[k]) return "cumulant " + std::to_string(k) + " not additive";
      }
      if (sum_moments_through_joint(x, y, m5) != sum) return "joint (x+y)^n expansion disagrees";
    }
    return std::string();
  });

  run.run("transforms", "multiplicative triple agreement (50 pairs, N<=3, M<=5)", [&]() -> std::string {
    for (int t = 0; t < 50; ++t) {
      const auto n = static_cast<std::size_t>(rnd.uniform_int(1, 3));
      const auto x = rnd.distribution(n, m5, true), y = rnd.distribution(n, m5, true);
      const auto a = free_mult_convolve(x, y, MultMethod::product_formula);
      if (free_mult_convolve(x, y, MultMethod::boxed) != a) return "boxed route disagrees";
      if (free_mult_convolve(x, y, MultMethod::s_transform) != a) return "s-transform route disagrees";
    }
    return std::string();
  });

  run.run("transforms", "S-transform constant term is the inverse mean", [&]() -> std::string {
    for (int t = 0; t < 30; ++t) {
      const auto n = static_cast<std::size_t>(rnd.uniform_int(1, 4));
      const auto x = rnd.distribution(n, std::max(m5, 2), true);
      if (s_transform(x)[0] != d_invert(x.moments[1])) return "constant term mismatch";
    }
    return std::string();
  });

  run.run("transforms", "S via moment series equals S via R-transform", [&]() -> std::string {
    for (int t = 0; t < 20; ++t) {
      const auto n = static_cast<std::size_t>(rnd.uniform_int(1, 3));
      const auto x = rnd.distribution(n, std::max(m6, 2), true);
      if (s_transform(x) != s_transform_via_moments(x)) return "mismatch for " + dump(to_json(x));
    }
    return std::string();
  });

  run.run("transforms", "S-transform closed forms (point mass, free Poisson)", [&]() -> std::string {
    const int m = std::max(m6, 2);
    for (const Rational& c : {Rational(2), Rational(-1, 3), Rational(5, 2)}) {
      const auto k = model_cumulants({Model::Kind::point_mass, c}, m);
      std::vector<DiagonalScalar> ks;
      for (const auto& q : k) ks.push_back(DiagonalScalar({q}));
      const auto s = s_transform(cumulants_to_moments(CumulantSequence{DegreeSequence(ks)}));
      if (s != TruncatedSeries::monomial(DiagonalScalar({1 / c}), 0, m - 1)) return "S(delta_c) != 1/c";
    }
    for (const Rational& lambda : {Rational(1), Rational(1, 2), Rational(3)}) {
      std::vector<DiagonalScalar> ks(static_cast<std::size_t>(m), DiagonalScalar({lambda}));
      const auto s = s_transform(cumulants_to_moments(CumulantSequence{DegreeSequence(ks)}));
      // 1/(lambda + z) = sum_k (-1)^k z^k / lambda^{k+1}
      Rational term = 1 / lambda;
      for (int k = 0; k < m; ++k) {
        if (s[k][0] != term) return "free Poisson S coefficient " + std::to_string(k);
        term /= -lambda;
      }
    }
    return std::string();
  });

  run.run("transforms", "F(g1 [*] g2) = F(g1) F(g2) (30 pairs, M<=5)", [&]() -> std::string {
    for (int t = 0; t < 30; ++t) {
      const auto n = static_cast<std::size_t>(rnd.uniform_int(1, 3));
      const auto g1 = rnd.theta_inv_series(n, m5), g2 = rnd.theta_inv_series(n, m5);
      if (f_homomorphism(boxed_convolve(g1, g2)) != s_mul(f_homomorphism(g1), f_homomorphism(g2))) {
        return "homomorphism fails for g1=" + series_text(g1);
      }
    }
    return std::string();
  });

  run.run("transforms", "semicircular cumulants give Catalan moments", [&]() -> std::string {
    const int m = std::max(order, 2);
    for (const Rational& v : {Rational(1), Rational(1, 2), Rational(3)}) {
      DegreeSequence k(1, m);
      k[2] = DiagonalScalar({v});
      const auto d = cumulants_to_moments(CumulantSequence{k});
      for (int j = 1; j <= m; ++j) {
        Rational expected = 0;
        if (j % 2 == 0) {
          mpq_class pw = 1;
          for (int i = 0; i < j / 2; ++i) pw *= v;
          expected = Rational(catalan_by_recurrence(j / 2)[j / 2]) * pw;
        }
        if (d.moments[j][0] != expected) return "moment " + std::to_string(j);
      }
    }
    return std::string();
  });

  run.run("transforms", "componentwise decomposition (N=3 vs three N=1 runs)", [&]() -> std::string {
    for (int t = 0; t < 4; ++t) {
      const auto x = rnd.distribution(3, std::max(m5, 3), true);
      const auto y = rnd.distribution(3, std::max(m5, 3), true);
      const auto bad = componentwise_mismatches(x, y, std::max(m5, 3));
      if (!bad.empty()) return "pipeline " + bad.front() + " is not componentwise";
    }
    return std::string();
  });
}

void stardist_checks(Runner& run, RandomInputs& rnd, int order) {
  const int m6 = std::min(order, 6);
  const int m5 = std::min(order, 5);
  const int m4 = std::min(order, 4);

  run.run("stardist", "free-pair marginals reproduce inputs (M<=6)", [&]() -> std::string {
    for (int t = 0; t < 6; ++t) {
      const auto n = static_cast<std::size_t>(rnd.uniform_int(1, 3));
      const auto x = rnd.distribution(n, m6), y = rnd.distribution(n, m6);
      const auto j = joint_from_free_pair(x, y, m6);
      if (j.marginal(0) != x || j.marginal(1) != y) return "marginal mismatch";
    }
    return std::string();
  });

  run.run("stardist", "freeness detected and single perturbations witnessed (M<=5)", [&]() -> std::string {
    for (int t = 0; t < 5; ++t) {
      const auto n = static_cast<std::size_t>(rnd.uniform_int(1, 2));
      const auto x = rnd.distribution(n, m5), y = rnd.distribution(n, m5);
      const auto j = joint_from_free_pair(x, y, m5);
      if (!check_freeness(j, 0, 1, m5).free) return "free pair reported non-free";
      const auto cumulants = cumulant_table(j);
      std::vector<StarWord> mixed;
      for (const auto& [w, k] : cumulants) {
        const bool has_x = std::any_of(w.begin(), w.end(), [](const Letter& l) { return l.var == 0; });
        const bool has_y = std::any_of(w.begin(), w.end(), [](const Letter& l) { return l.var == 1; });
        if (has_x && has_y) mixed.push_back(w);
      }
      for (int p = 0; p < 3; ++p) {
        const auto& w = mixed[static_cast<std::size_t>(rnd.uniform_int(0, static_cast<int>(mixed.size()) - 1))];
        auto perturbed = cumulants;
        perturbed[w] += rnd.invertible_scalar(n);
        const auto pj = joint_from_cumulant_table(n, m5, {"x", "y"}, false, perturbed);
        const auto report = check_freeness(pj, 0, 1, m5);
        if (report.free || !report.witness || *report.witness != w) {
          return "perturbation at \"" + to_string(w, {"x", "y"}) + "\" not witnessed";
        }
      }
    }
    return std::string();
  });

  run.run("stardist", "product through joint words equals multiplicative convolution (M<=4)", [&]() -> std::string {
    for (int t = 0; t < 6; ++t) {
      const auto n = static_cast<std::size_t>(rnd.uniform_int(1, 3));
      const auto x = rnd.distribution(n, m4, true), y = rnd.distribution(n, m4, true);
      if (product_moments_through_joint(x, y, m4) != free_mult_convolve(x, y, MultMethod::product_formula)) {
        return "E((xy)^n) disagrees";
      }
    }
    return std::string();
  });

  run.run("stardist", "divide_free recombines exactly (n in {1,2,3,5})", [&]() -> std::string {
    for (int t = 0; t < 10; ++t) {
      const auto d = rnd.distribution(static_cast<std::size_t>(rnd.uniform_int(1, 3)), m6);
      for (int parts : {1, 2, 3, 5}) {
        const auto piece = divide_free(d, parts);
        Distribution acc = piece;
        for (int i = 1; i < parts; ++i) acc = free_add_convolve(acc, piece);
        if (acc != d) return "recombination fails for n=" + std::to_string(parts);
      }
    }
    return std::string();
  });

  run.run("stardist", "classifiers are componentwise", [&]() -> std::string {
    const int m = std::max(m6, 4);
    auto model_component = [&](int kind) {
      DegreeSequence k(1, m);
      switch (kind) {
        case 0: k[2] = DiagonalScalar({rnd.nonzero_rational()}); break;  // semicircular
        case 1: break;                                                    // zero
        case 2: for (int i = 1; i <= m; ++i) k[i] = DiagonalScalar({Rational(1)}); break;
        case 3: k[1] = DiagonalScalar({rnd.nonzero_rational()}); break;
        default: k[2] = DiagonalScalar({rnd.nonzero_rational()}); k[4] = DiagonalScalar({rnd.rational()}); break;
      }
      return cumulants_to_moments(CumulantSequence{k});
    };
    for (int t = 0; t < 30; ++t) {
      std::vector<Distribution> parts;
      for (int c = 0; c < 3; ++c) parts.push_back(model_component(rnd.uniform_int(0, 4)));
      const auto d = zip_distributions(parts);
      for (int kind = 0; kind < 2; ++kind) {
        std::vector<Verdict> per;
        for (const auto& p : parts) {
          per.push_back(kind == 0 ? classify_semicircular(p, m).verdict : classify_even(p, m).verdict);
        }
        const auto whole = kind == 0 ? classify_semicircular(d, m) : classify_even(d, m);
        if (whole.components != per || whole.verdict != combine_verdicts(per)) {
          return std::string(kind == 0 ? "semicircular" : "even") + " not componentwise";
        }
      }
    }
    return std::string();
  });

  run.run("stardist", "R-diagonal: Haar unitary fixture and a self-adjoint counterexample", [&]() -> std::string {
    const int m = std::max(m4, 4);
    std::map<StarWord, DiagonalScalar> k;
    for (const auto& w : all_words(1, true, m)) {
      bool alternating = w.size() % 2 == 0;
      for (std::size_t i = 1; i < w.size() && alternating; ++i) alternating = w[i].star != w[i - 1].star;
      const int half = static_cast<int>(w.size() / 2);
      Rational value = 0;
      if (alternating) {
        value = Rational(catalan_by_recurrence(half - 1)[half - 1]);
        if ((half - 1) % 2 == 1) value = -value;
      }
      k.emplace(w, DiagonalScalar({value}));
    }
    const auto haar = joint_from_cumulant_table(1, m, {"u"}, true, k);
    for (const auto& [w, value] : haar.moments()) {
      int balance = 0;
      for (const auto& l : w) balance += l.star ? -1 : 1;
      if (value[0] != (balance == 0 ? 1 : 0)) return "Haar moment wrong at \"" + to_string(w, {"u"}) + "\"";
    }
    if (classify_r_diagonal(haar, m).verdict != Verdict::yes) return "Haar unitary not R-diagonal";

    std::map<StarWord, DiagonalScalar> k3;
    for (const auto& w : all_words(1, true, m)) k3.emplace(w, DiagonalScalar({Rational(w.size() == 3 ? 1 : 0)}));
    if (classify_r_diagonal(joint_from_cumulant_table(1, m, {"x"}, true, k3), m).verdict != Verdict::no) {
      return "k_3 != 0 table classified R-diagonal";
    }
    return std::string();
  });
}

void io_checks(Runner& run, RandomInputs& rnd, int order) {
  const int m = std::min(order, 6);
  run.run("cli", "emitted documents re-parse to identical values", [&]() -> std::string {
    for (int t = 0; t < 20; ++t) {
      const auto n = static_cast<std::size_t>(rnd.uniform_int(1, 4));
      const auto d = rnd.distribution(n, m);
      if (parse_distribution(dump(to_json(d))) != d) return "distribution closure fails";
      const auto k = moments_to_cumulants(d);
      if (parse_cumulants(dump(to_json(k))) != k) return "cumulant closure fails";
      const auto s = rnd.series(n, m);
      if (parse_series(dump(to_json(s))) != s) return "series closure fails";
    }
    const auto j = joint_from_free_pair(rnd.distribution(2, std::min(m, 4)), rnd.distribution(2, std::min(m, 4)),
                                        std::min(m, 4));
    if (parse_joint(dump(to_json(j))) != j) return "joint closure fails";
    return std::string();
  });

  run.run("cli", "identical inputs give byte-identical output", [&]() -> std::string {
    const auto x = rnd.distribution(2, std::min(m, 5), true), y = rnd.distribution(2, std::min(m, 5), true);
    const auto a = dump(to_json(free_mult_convolve_all(x, y).result));
    const auto b = dump(to_json(free_mult_convolve_all(x, y).result));
    return a == b ? std::string() : std::string("outputs differ");
  });
}

}  // namespace

int SelfcheckReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
}

int SelfcheckReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

std::vector<std::string> componentwise_mismatches(const Distribution& x, const Distribution& y, int order) {
  const Distribution xt = truncate(x, order), yt = truncate(y, order);
  const std::size_t n = xt.n_components();
  std::vector<Distribution> xs, ys;
  for (std::size_t c = 0; c < n; ++c) {
    xs.push_back(distribution_component(xt, c));
    ys.push_back(distribution_component(yt, c));
  }

  std::vector<std::string> bad;
  auto compare = [&](const std::string& name, const Json& whole, const Json& zipped) {
    if (dump(whole) != dump(zipped)) bad.push_back(name);
  };
  auto per_component = [&](auto&& fn) {
    using R = decltype(fn(xs[0], ys[0]));
    std::vector<R> out;
    for (std::size_t c = 0; c < n; ++c) out.push_back(fn(xs[c], ys[c]));
    return out;
  };

  compare("m2k", to_json(moments_to_cumulants(xt)),
          to_json(zip_cumulants(per_component([](const auto& a, const auto&) { return moments_to_cumulants(a); }))));
  compare("k2m", to_json(cumulants_to_moments(CumulantSequence{xt.moments})),
          to_json(zip_distributions(per_component(
              [](const auto& a, const auto&) { return cumulants_to_moments(CumulantSequence{a.moments}); }))));
  compare("moment_series", to_json(moment_series(xt)),
          to_json(zip_series(per_component([](const auto& a, const auto&) { return moment_series(a); }))));
  compare("r_transform", to_json(r_transform(xt)),
          to_json(zip_series(per_component([](const auto& a, const auto&) { return r_transform(a); }))));
  compare("add", to_json(free_add_convolve(xt, yt)),
          to_json(zip_distributions(per_component([](const auto& a, const auto& b) { return free_add_convolve(a, b); }))));
  for (auto method : kAllMultMethods) {
    compare("mult/" + to_string(method), to_json(free_mult_convolve(xt, yt, method)),
            to_json(zip_distributions(
                per_component([method](const auto& a, const auto& b) { return free_mult_convolve(a, b, method); }))));
  }
  compare("boxed", to_json(boxed_convolve(r_transform(xt), r_transform(yt))),
          to_json(zip_series(
              per_component([](const auto& a, const auto& b) { return boxed_convolve(r_transform(a), r_transform(b)); }))));
  compare("stransform", to_json(s_transform(xt)),
          to_json(zip_series(per_component([](const auto& a, const auto&) { return s_transform(a); }))));
  compare("stransform/moments", to_json(s_transform_via_moments(xt)),
          to_json(zip_series(per_component([](const auto& a, const auto&) { return s_transform_via_moments(a); }))));
  compare("f_homomorphism", to_json(f_homomorphism(r_transform(xt))),
          to_json(zip_series(per_component([](const auto& a, const auto&) { return f_homomorphism(r_transform(a)); }))));
  compare("divide", to_json(divide_free(xt, 3)),
          to_json(zip_distributions(per_component([](const auto& a, const auto&) { return divide_free(a, 3); }))));
  if (order >= 3) {
    compare("classify/semicircular", to_json(classify_semicircular(xt, order)),
            to_json(zip_classifications(
                per_component([order](const auto& a, const auto&) { return classify_semicircular(a, order); }))));
  }
  compare("classify/even", to_json(classify_even(xt, order)),
          to_json(zip_classifications(per_component([order](const auto& a, const auto&) { return classify_even(a, order); }))));
  const int joint_order = std::min(order, 4);
  compare("joint_from_free_pair", to_json(joint_from_free_pair(xt, yt, joint_order)),
          to_json(zip_joints(per_component(
              [joint_order](const auto& a, const auto& b) { return joint_from_free_pair(a, b, joint_order); }))));
  return bad;
}

SelfcheckReport run_selfcheck(int order, std::uint64_t seed) {
  if (order < 2 || order > kMaxInputOrder) {
    throw BoundError("selfcheck order must be in 2.." + std::to_string(kMaxInputOrder));
  }
  SelfcheckReport report;
  report.order = order;
  Runner run(report);
  RandomInputs rnd(seed);
  lattice_checks(run);
  algebra_checks(run, rnd);
  series_checks(run, rnd, order);
  transform_checks(run, rnd, order);
  stardist_checks(run, rnd, order);
  io_checks(run, rnd, order);
  return report;
}

Json to_json(const SelfcheckReport& report) {
  Json doc;
  doc["order"] = report.order;
  doc["passed"] = report.passed();
  doc["failed"] = report.failed();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry;
    entry["module"] = c.module;
    entry["name"] = c.name;
    entry["passed"] = c.passed;
    entry["seconds"] = std::round(c.seconds * 1000) / 1000;
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

}  // namespace dnfree
