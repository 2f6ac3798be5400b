/*
 * Copyright 2026 The dnfree Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * dnfree.h : C interface to the exact D_N-valued free probability engine.
 *
 * Conventions
 *   - Every fallible call returns a dnf_status. On failure the out
 *     parameters are left untouched and dnf_last_error() describes the
 *     problem (per thread, valid until the next failing call).
 *   - Handles are opaque and immutable. Each *_free accepts NULL.
 *   - char** outputs are NUL-terminated JSON (or plain text where noted),
 *     owned by the caller and released with dnf_string_free.
 *   - Exact rationals travel as strings "p" or "p/q" in lowest terms.
 */

#ifndef DNFREE_DNFREE_H
#define DNFREE_DNFREE_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DNFREE_BUILDING_LIBRARY)
#    define DNF_API __declspec(dllexport)
#  else
#    define DNF_API __declspec(dllimport)
#  endif
#else
#  define DNF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 1..4 are also the CLI exit codes. */
typedef enum dnf_status {
  DNF_OK = 0,
  DNF_ERR_PARSE = 1,
  DNF_ERR_DOMAIN = 2,
  DNF_ERR_BOUND = 3,
  DNF_ERR_SELFCHECK = 4,
  DNF_ERR_ARGUMENT = 5, /* NULL handle or out pointer, bad enum value */
  DNF_ERR_INTERNAL = 6
} dnf_status;

typedef enum dnf_document_kind {
  DNF_DOC_DISTRIBUTION = 0,
  DNF_DOC_CUMULANTS = 1,
  DNF_DOC_JOINT = 2,
  DNF_DOC_SERIES = 3
} dnf_document_kind;

typedef enum dnf_mult_method {
  DNF_MULT_PRODUCT_FORMULA = 0,
  DNF_MULT_BOXED = 1,
  DNF_MULT_S_TRANSFORM = 2
} dnf_mult_method;

typedef enum dnf_class_kind {
  DNF_CLASS_SEMICIRCULAR = 0,
  DNF_CLASS_EVEN = 1,
  DNF_CLASS_R_DIAGONAL = 2
} dnf_class_kind;

typedef enum dnf_verdict {
  DNF_VERDICT_FALSE = 0,
  DNF_VERDICT_TRUE = 1,
  DNF_VERDICT_DEGENERATE = 2 /* every component identically zero */
} dnf_verdict;

typedef struct dnf_distribution dnf_distribution; /* moments E(x^k), k=1..M */
typedef struct dnf_cumulants dnf_cumulants;       /* free cumulants k_1..k_M */
typedef struct dnf_series dnf_series;             /* truncated series over D_N */
typedef struct dnf_joint dnf_joint;               /* mixed moments over star words */

DNF_API const char* dnf_version(void);
DNF_API const char* dnf_last_error(void);
DNF_API void dnf_string_free(char* s);

DNF_API dnf_status dnf_document_detect(const char* json, dnf_document_kind* out);

/* Parsing, serialization, lifetime. */
DNF_API dnf_status dnf_distribution_parse(const char* json, dnf_distribution** out);
DNF_API dnf_status dnf_distribution_to_json(const dnf_distribution* d, char** out);
DNF_API dnf_status dnf_distribution_truncate(const dnf_distribution* d, int order, dnf_distribution** out);
DNF_API int dnf_distribution_order(const dnf_distribution* d);
DNF_API size_t dnf_distribution_components(const dnf_distribution* d);
DNF_API void dnf_distribution_free(dnf_distribution* d);

DNF_API dnf_status dnf_cumulants_parse(const char* json, dnf_cumulants** out);
DNF_API dnf_status dnf_cumulants_to_json(const dnf_cumulants* k, char** out);
DNF_API void dnf_cumulants_free(dnf_cumulants* k);

DNF_API dnf_status dnf_series_parse(const char* json, dnf_series** out);
DNF_API dnf_status dnf_series_to_json(const dnf_series* s, char** out);
DNF_API void dnf_series_free(dnf_series* s);

DNF_API dnf_status dnf_joint_parse(const char* json, dnf_joint** out);
DNF_API dnf_status dnf_joint_to_json(const dnf_joint* j, char** out);
DNF_API int dnf_joint_order(const dnf_joint* j);
DNF_API void dnf_joint_free(dnf_joint* j);

/* Noncrossing partitions. */
DNF_API dnf_status dnf_nc_count(int n, unsigned long long* out);
/* {"n":..,"count":..,"rows":[{"partition","kreweras","mobius"}]}; rows only
   when with_rows is nonzero. */
DNF_API dnf_status dnf_nc_table(int n, int with_rows, char** out);
/* Text form "{{1,3},{2}}" in, text form out. */
DNF_API dnf_status dnf_partition_kreweras(const char* partition, char** out);
/* mu(p, 1_n) as a rational string. */
DNF_API dnf_status dnf_partition_mobius(const char* partition, char** out);

/* Moments, cumulants, transforms. */
DNF_API dnf_status dnf_moments_to_cumulants(const dnf_distribution* d, dnf_cumulants** out);
DNF_API dnf_status dnf_cumulants_to_moments(const dnf_cumulants* k, dnf_distribution** out);
DNF_API dnf_status dnf_moment_series(const dnf_distribution* d, dnf_series** out);
DNF_API dnf_status dnf_r_transform(const dnf_distribution* d, dnf_series** out);
/* Order M-1; requires an invertible mean. */
DNF_API dnf_status dnf_s_transform(const dnf_distribution* d, dnf_series** out);

DNF_API dnf_status dnf_free_add(const dnf_distribution* x, const dnf_distribution* y, dnf_distribution** out);
DNF_API dnf_status dnf_free_mult(const dnf_distribution* x, const dnf_distribution* y, dnf_mult_method method,
                                 dnf_distribution** out);
/* Runs all three routes. routes_json (optional) lists each route's result
   or skip reason; *agreement is 1 when every route that ran agrees. */
DNF_API dnf_status dnf_free_mult_all(const dnf_distribution* x, const dnf_distribution* y, dnf_distribution** out,
                                     int* agreement, char** routes_json);

/* Series calculus. */
DNF_API dnf_status dnf_series_compose(const dnf_series* f, const dnf_series* g, dnf_series** out);
DNF_API dnf_status dnf_series_comp_inverse(const dnf_series* g, dnf_series** out);
DNF_API dnf_status dnf_boxed_convolve(const dnf_series* g1, const dnf_series* g2, dnf_series** out);
DNF_API dnf_status dnf_f_homomorphism(const dnf_series* g, dnf_series** out);

/* Joint distributions and classification. */
DNF_API dnf_status dnf_joint_from_free_pair(const dnf_distribution* x, const dnf_distribution* y, int order,
                                            dnf_joint** out);
/* report_json (optional): {"free":..,"witness":"x y x y","witness_cumulant":[..]} */
DNF_API dnf_status dnf_check_freeness(const dnf_joint* j, int var_a, int var_b, int order, int* is_free,
                                      char** report_json);
/* Semicircular and even take a distribution; R-diagonal needs a joint. */
DNF_API dnf_status dnf_classify(const dnf_distribution* d, dnf_class_kind kind, int order, dnf_verdict* verdict,
                                char** report_json);
DNF_API dnf_status dnf_classify_joint(const dnf_joint* j, dnf_class_kind kind, int order, dnf_verdict* verdict,
                                      char** report_json);
DNF_API dnf_status dnf_divide_free(const dnf_distribution* d, int n, dnf_distribution** out);

/* Runs every module invariant. *failures receives the failing-check count;
   the call itself returns DNF_OK unless the suite could not run. */
DNF_API dnf_status dnf_selfcheck(int order, int* failures, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* DNFREE_DNFREE_H */
