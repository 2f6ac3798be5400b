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

/* Exercises the shared library through its C header only. */

#include <dnfree/dnfree.h>

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static const char* kPoisson =
    "{\"N\":1,\"order\":5,\"components\":[{\"model\":{\"free_poisson\":{\"rate\":\"1\"}}}]}";
static const char* kSemi =
    "{\"N\":1,\"order\":5,\"components\":[{\"model\":{\"semicircular\":{\"variance\":\"1\"}}}]}";

static void test_lattice(void) {
  unsigned long long count = 0;
  char* s = NULL;
  EXPECT(dnf_nc_count(10, &count) == DNF_OK && count == 16796ULL);
  EXPECT(dnf_nc_count(0, &count) == DNF_ERR_BOUND);
  EXPECT(dnf_partition_kreweras("{{1,3},{2}}", &s) == DNF_OK && strcmp(s, "{{1,2},{3}}") == 0);
  dnf_string_free(s);
  EXPECT(dnf_partition_mobius("{{1},{2},{3},{4}}", &s) == DNF_OK && strcmp(s, "-5") == 0);
  dnf_string_free(s);
  EXPECT(dnf_partition_kreweras("{{1,3},{2,4}}", &s) == DNF_ERR_DOMAIN);
  EXPECT(strlen(dnf_last_error()) > 0);
  EXPECT(dnf_partition_kreweras("{{1,3}", &s) == DNF_ERR_PARSE);
}

static void test_transforms(void) {
  dnf_distribution *x = NULL, *y = NULL, *prod = NULL, *back = NULL;
  dnf_cumulants* k = NULL;
  dnf_series* s = NULL;
  char* json = NULL;
  char* routes = NULL;
  int agreement = 0;

  EXPECT(dnf_distribution_parse(kPoisson, &x) == DNF_OK);
  EXPECT(dnf_distribution_order(x) == 5 && dnf_distribution_components(x) == 1);
  EXPECT(dnf_moments_to_cumulants(x, &k) == DNF_OK);
  EXPECT(dnf_cumulants_to_json(k, &json) == DNF_OK &&
         strcmp(json, "{\"N\":1,\"order\":5,\"components\":[{\"cumulants\":[\"1\",\"1\",\"1\",\"1\",\"1\"]}]}") == 0);
  dnf_string_free(json);
  EXPECT(dnf_cumulants_to_moments(k, &back) == DNF_OK);
  EXPECT(dnf_free_mult_all(x, x, &prod, &agreement, &routes) == DNF_OK && agreement == 1);
  EXPECT(dnf_distribution_to_json(prod, &json) == DNF_OK && strstr(json, "\"273\"") != NULL);
  dnf_string_free(json);
  dnf_string_free(routes);
  EXPECT(dnf_s_transform(x, &s) == DNF_OK);
  EXPECT(dnf_series_to_json(s, &json) == DNF_OK &&
         strcmp(json, "{\"N\":1,\"order\":4,\"coeffs\":{\"0\":[\"1\"],\"1\":[\"-1\"],\"2\":[\"1\"],\"3\":[\"-1\"],"
                      "\"4\":[\"1\"]}}") == 0);
  dnf_string_free(json);

  EXPECT(dnf_distribution_parse(kSemi, &y) == DNF_OK);
  dnf_series_free(s);
  s = NULL;
  EXPECT(dnf_s_transform(y, &s) == DNF_ERR_DOMAIN && s == NULL);
  EXPECT(dnf_distribution_parse("{\"N\":1,\"order\":1,\"components\":[{\"moments\":[\"1/0\"]}]}", &back) ==
         DNF_ERR_PARSE);
  EXPECT(strstr(dnf_last_error(), "components[0].moments[0]") != NULL);

  dnf_distribution_free(x);
  dnf_distribution_free(y);
  dnf_distribution_free(prod);
  dnf_distribution_free(back);
  dnf_cumulants_free(k);
  dnf_series_free(s);
}

static void test_series(void) {
  dnf_series *g = NULL, *inv = NULL;
  char* json = NULL;
  EXPECT(dnf_series_parse("{\"N\":1,\"order\":5,\"coeffs\":{\"1\":[\"1\"],\"2\":[\"1\"]}}", &g) == DNF_OK);
  EXPECT(dnf_series_comp_inverse(g, &inv) == DNF_OK);
  EXPECT(dnf_series_to_json(inv, &json) == DNF_OK &&
         strcmp(json, "{\"N\":1,\"order\":5,\"coeffs\":{\"1\":[\"1\"],\"2\":[\"-1\"],\"3\":[\"2\"],\"4\":[\"-5\"],"
                      "\"5\":[\"14\"]}}") == 0);
  dnf_string_free(json);
  dnf_series_free(g);
  dnf_series_free(inv);
}

static void test_classify(void) {
  dnf_distribution *x = NULL, *y = NULL;
  dnf_joint* j = NULL;
  dnf_verdict v = DNF_VERDICT_DEGENERATE;
  int is_free = 0;
  char* report = NULL;
  EXPECT(dnf_distribution_parse(kSemi, &x) == DNF_OK);
  EXPECT(dnf_distribution_parse(kPoisson, &y) == DNF_OK);
  EXPECT(dnf_classify(x, DNF_CLASS_SEMICIRCULAR, 5, &v, &report) == DNF_OK && v == DNF_VERDICT_TRUE);
  dnf_string_free(report);
  EXPECT(dnf_classify(y, DNF_CLASS_SEMICIRCULAR, 5, &v, &report) == DNF_OK && v == DNF_VERDICT_FALSE);
  dnf_string_free(report);
  EXPECT(dnf_joint_from_free_pair(x, y, 4, &j) == DNF_OK);
  EXPECT(dnf_joint_order(j) == 4);
  EXPECT(dnf_check_freeness(j, 0, 1, 4, &is_free, &report) == DNF_OK && is_free == 1);
  dnf_string_free(report);
  dnf_joint_free(j);
  dnf_distribution_free(x);
  dnf_distribution_free(y);
}

int main(void) {
  EXPECT(strcmp(dnf_version(), "0.1.0") == 0);
  dnf_distribution_free(NULL);
  dnf_string_free(NULL);
  test_lattice();
  test_transforms();
  test_series();
  test_classify();
  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
