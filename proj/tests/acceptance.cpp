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

// One line per acceptance criterion; exit status is the number of failures.

#include <dnfree/errors.hpp>
#include <dnfree/json_io.hpp>
#include <dnfree/ncpart.hpp>
#include <dnfree/random.hpp>
#include <dnfree/selfcheck.hpp>
#include <dnfree/stardist.hpp>
#include <dnfree/transforms.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"

using namespace dnfree;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

int failures = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.ok && secs > budget_seconds) r = fail("over time budget");
  if (!r.ok) ++failures;
  std::printf("[%s] %2d %-44s %7.2fs%s%s\n", r.ok ? "PASS" : "FAIL", id, title, secs, r.detail.empty() ? "" : "  ",
              r.detail.c_str());
  std::fflush(stdout);
}

oracle::Poly poly(const DegreeSequence& s, std::size_t i) {
  oracle::Poly p{0};
  for (const auto& v : s.values()) p.push_back(v[i]);
  return p;
}

Distribution model(Model::Kind kind, const Rational& parameter, int order) {
  const auto k = model_cumulants({kind, parameter}, order);
  DegreeSequence s(1, order);
  for (int n = 1; n <= order; ++n) s[n] = DiagonalScalar{k[n - 1]};
  return cumulants_to_moments(CumulantSequence{s});
}

std::size_t pick_n(RandomInputs& rng, int hi) { return static_cast<std::size_t>(rng.uniform_int(1, hi)); }

Outcome lattice() {
  for (int n = 1; n <= 10; ++n) {
    const mpz_class count(static_cast<unsigned long>(enumerate_noncrossing(n).size()));
    if (count != oracle::catalan(n)) return fail("|NC(" + std::to_string(n) + ")| = " + count.get_str());
  }
  return {};
}

Outcome mobius() {
  int checked = 0;
  for (int n = 1; n <= 7; ++n) {
    const auto top = NoncrossingPartition::coarsest(n);
    for (const auto& p : enumerate_noncrossing(n)) {
      if (mobius_full(p) != mobius_brute(p, top)) return fail("mismatch at " + to_string(p));
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " partitions"};
}

Outcome inversion(RandomInputs& rng) {
  for (int t = 0; t < 200; ++t) {
    const auto d = rng.distribution(pick_n(rng, 4), rng.uniform_int(1, 8));
    const auto k = moments_to_cumulants(d);
    if (cumulants_to_moments(k) != d) return fail("roundtrip " + std::to_string(t));
    if (d.order() <= 5 && poly(k.cumulants, 0) != oracle::cumulants_from_moments(poly(d.moments, 0), d.order())) {
      return fail("oracle disagreement at roundtrip " + std::to_string(t));
    }
  }
  for (int order = 1; order <= 6; ++order) {
    const auto d = rng.distribution(pick_n(rng, 3), order);
    const auto m = moment_series(d), r = r_transform(d);
    if (boxed_convolve(r, zeta_series(d.n_components(), order)) != m) return fail("M != R [*] Zeta");
    if (boxed_convolve(m, mob_series(d.n_components(), order)) != r) return fail("R != M [*] Mob");
  }
  return {};
}

Outcome semicircular() {
  for (const Rational& var : {Rational(1), Rational(1, 2), Rational(3)}) {
    DegreeSequence k(3, 10);
    k[2] = DiagonalScalar{var, var, var};
    const auto m = cumulants_to_moments(CumulantSequence{k}).moments;
    for (int n = 1; n <= 5; ++n) {
      Rational expected = Rational(oracle::catalan(n));
      for (int j = 0; j < n; ++j) expected *= var;
      if (m[2 * n] != DiagonalScalar{expected, expected, expected} || !m[2 * n - 1].is_zero()) {
        return fail("variance " + format_rational(var) + ", degree " + std::to_string(2 * n));
      }
    }
  }
  return {};
}

Outcome freeness(RandomInputs& rng) {
  const std::vector<std::string> vars{"x", "y"};
  int perturbations = 0;
  for (int t = 0; t < 20; ++t) {
    const auto n = pick_n(rng, 2);
    const auto x = rng.distribution(n, 5), y = rng.distribution(n, 5);
    const auto j = joint_from_free_pair(x, y, 5);
    if (!check_freeness(j, 0, 1, 5).free) return fail("free pair rejected");
    const auto cumulants = cumulant_table(j);
    for (const auto& [w, value] : cumulants) {
      bool has_x = false, has_y = false;
      for (const auto& l : w) (l.var == 0 ? has_x : has_y) = true;
      if (!has_x || !has_y) continue;
      if (rng.uniform_int(0, 9) != 0) continue;
      auto bumped = cumulants;
      bumped[w] += rng.invertible_scalar(n);
      const auto report = check_freeness(joint_from_cumulant_table(n, 5, vars, false, bumped), 0, 1, 5);
      if (report.free || !report.witness || *report.witness != w) {
        return fail("perturbation at \"" + to_string(w, vars) + "\" missed");
      }
      ++perturbations;
    }
  }
  return {true, std::to_string(perturbations) + " perturbations witnessed"};
}

Outcome triple(RandomInputs& rng) {
  for (int t = 0; t < 50; ++t) {
    const auto n = pick_n(rng, 3);
    const auto x = rng.distribution(n, 5, true), y = rng.distribution(n, 5, true);
    const auto c = free_mult_convolve_all(x, y);
    if (!c.agreement) return fail("routes disagree on pair " + std::to_string(t));
    for (const auto& route : c.routes) {
      if (!route.result) return fail(to_string(route.method) + " skipped: " + route.skipped_reason);
      if (dump(to_json(*route.result)) != dump(to_json(c.result))) return fail("bytes differ");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (poly(c.result.moments, i) != oracle::product_moments(poly(x.moments, i), poly(y.moments, i), 5)) {
        return fail("oracle disagreement on pair " + std::to_string(t));
      }
    }
  }
  return {};
}

Outcome s_closed_forms() {
  for (const Rational& c : {Rational(1), Rational(2), Rational(-3, 4), Rational(5, 7)}) {
    const auto s = s_transform(model(Model::Kind::point_mass, c, 5));
    if (s != TruncatedSeries::monomial(DiagonalScalar{1 / c}, 0, 4)) return fail("delta at " + format_rational(c));
  }
  for (const Rational& lambda : {Rational(1), Rational(2), Rational(1, 3), Rational(5, 2)}) {
    const auto s = s_transform(model(Model::Kind::free_poisson, lambda, 6));
    if (s.order() != 5) return fail("order " + std::to_string(s.order()));
    // 1/(lambda+z) = sum_k (-1)^k z^k / lambda^{k+1}
    Rational coeff = 1 / lambda;
    for (int k = 0; k <= 5; ++k, coeff = -coeff / lambda) {
      if (s[k] != DiagonalScalar{coeff}) return fail("free Poisson " + format_rational(lambda));
    }
  }
  return {};
}

Outcome homomorphism(RandomInputs& rng) {
  for (int t = 0; t < 30; ++t) {
    const auto n = pick_n(rng, 3);
    const auto g1 = rng.theta_inv_series(n, 5), g2 = rng.theta_inv_series(n, 5);
    if (f_homomorphism(boxed_convolve(g1, g2)) != s_mul(f_homomorphism(g1), f_homomorphism(g2))) {
      return fail("pair " + std::to_string(t));
    }
  }
  return {};
}

Outcome divisibility(RandomInputs& rng) {
  for (int parts : {2, 3, 5}) {
    for (int t = 0; t < 20; ++t) {
      const auto d = rng.distribution(pick_n(rng, 3), rng.uniform_int(1, 6));
      const auto piece = divide_free(d, parts);
      Distribution acc = piece;
      for (int i = 1; i < parts; ++i) acc = free_add_convolve(acc, piece);
      if (acc != d) return fail("n=" + std::to_string(parts));
    }
  }
  return {};
}

// Each pipeline on N=3 against the zip of its three N=1 runs, compared as
// emitted JSON text.
Outcome componentwise(RandomInputs& rng) {
  int runs = 0;
  auto split = [](const Distribution& d) {
    std::vector<Distribution> v;
    for (std::size_t i = 0; i < d.n_components(); ++i) v.push_back(distribution_component(d, i));
    return v;
  };
  for (int t = 0; t < 10; ++t) {
    const int order = 5;
    const auto x = rng.distribution(3, order, true), y = rng.distribution(3, order, true);
    const auto xs = split(x), ys = split(y);
    std::vector<std::pair<std::string, std::pair<Json, Json>>> cases;
    auto add = [&](const std::string& name, Json whole, Json zipped) {
      cases.emplace_back(name, std::make_pair(std::move(whole), std::move(zipped)));
    };
    std::vector<CumulantSequence> k1;
    std::vector<Distribution> sum1, div1;
    std::vector<TruncatedSeries> r1, s1;
    std::vector<std::vector<Distribution>> mult1(3);
    Json semi1 = Json::array(), free1 = Json::array();
    for (std::size_t i = 0; i < 3; ++i) {
      k1.push_back(moments_to_cumulants(xs[i]));
      sum1.push_back(free_add_convolve(xs[i], ys[i]));
      div1.push_back(divide_free(xs[i], 3));
      r1.push_back(r_transform(xs[i]));
      s1.push_back(s_transform(xs[i]));
      for (std::size_t m = 0; m < 3; ++m) mult1[m].push_back(free_mult_convolve(xs[i], ys[i], kAllMultMethods[m]));
    }
    add("m2k", to_json(moments_to_cumulants(x)), to_json(zip_cumulants(k1)));
    add("k2m", to_json(cumulants_to_moments(moments_to_cumulants(x))),
        to_json(zip_distributions({cumulants_to_moments(k1[0]), cumulants_to_moments(k1[1]),
                                   cumulants_to_moments(k1[2])})));
    add("add", to_json(free_add_convolve(x, y)), to_json(zip_distributions(sum1)));
    add("divide", to_json(divide_free(x, 3)), to_json(zip_distributions(div1)));
    add("r-transform", to_json(r_transform(x)), to_json(zip_series(r1)));
    add("s-transform", to_json(s_transform(x)), to_json(zip_series(s1)));
    for (std::size_t m = 0; m < 3; ++m) {
      add("mult/" + to_string(kAllMultMethods[m]), to_json(free_mult_convolve(x, y, kAllMultMethods[m])),
          to_json(zip_distributions(mult1[m])));
    }
    // Verdicts zip as per-component lists.
    for (const auto* kind : {"semicircular", "even"}) {
      auto classify = [&](const Distribution& d) {
        return std::string(kind) == "semicircular" ? classify_semicircular(d, order) : classify_even(d, order);
      };
      Json whole = to_json(classify(x))["components"], zipped = Json::array();
      for (const auto& c : xs) zipped.push_back(to_json(classify(c))["components"][0]);
      add(std::string("classify/") + kind, whole, zipped);
    }
    for (const auto& [name, docs] : cases) {
      if (dump(docs.first) != dump(docs.second)) return fail(name + " is not componentwise");
      ++runs;
    }
  }
  const auto report = run_selfcheck(5);
  if (report.failed() != 0) return fail(std::to_string(report.failed()) + " selfcheck failures");
  const auto bad = componentwise_mismatches(rng.distribution(3, 5, true), rng.distribution(3, 5, true), 5);
  if (!bad.empty()) return fail("selfcheck pipeline " + bad.front());
  return {true, std::to_string(runs) + " pipeline runs, selfcheck " + std::to_string(report.passed()) + "/" +
                    std::to_string(report.checks.size())};
}

}  // namespace

int main() {
  RandomInputs rng(0x5eed2026);
  criterion(1, "NC(n) counts are Catalan, n<=10", 60, lattice);
  criterion(2, "Moebius closed form equals recursion, n<=7", 120, mobius);
  criterion(3, "moments/cumulants inversion roundtrips", 600, [&] { return inversion(rng); });
  criterion(4, "semicircular moments are Catalan multiples", 60, semicircular);
  criterion(5, "freeness and perturbation witnesses", 600, [&] { return freeness(rng); });
  criterion(6, "multiplicative triple agreement", 300, [&] { return triple(rng); });
  criterion(7, "S-transform closed forms", 60, s_closed_forms);
  criterion(8, "F turns boxed convolution into products", 600, [&] { return homomorphism(rng); });
  criterion(9, "free division recombines exactly", 600, [&] { return divisibility(rng); });
  criterion(10, "N=3 equals zip of three N=1 runs", 600, [&] { return componentwise(rng); });
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
