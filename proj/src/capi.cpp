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

#include "dnfree/dnfree.h"

#include <cstring>
#include <new>
#include <string>

#include "dnfree/errors.hpp"
#include "dnfree/json_io.hpp"
#include "dnfree/ncpart.hpp"
#include "dnfree/selfcheck.hpp"
#include "dnfree/series.hpp"
#include "dnfree/stardist.hpp"
#include "dnfree/transforms.hpp"

struct dnf_distribution {
  dnfree::Distribution value;
};
struct dnf_cumulants {
  dnfree::CumulantSequence value;
};
struct dnf_series {
  dnfree::TruncatedSeries value;
};
struct dnf_joint {
  dnfree::JointDistribution value;
};

namespace {

thread_local std::string last_error;

dnf_status fail(dnf_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class Fn>
dnf_status guarded(Fn&& fn) {
  try {
    fn();
    return DNF_OK;
  } catch (const dnfree::Error& e) {
    return fail(static_cast<dnf_status>(static_cast<int>(e.kind())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DNF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DNF_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

struct ArgumentError {};

template <class... Ptrs>
bool any_null(const Ptrs*... ptrs) {
  return ((ptrs == nullptr) || ...);
}

dnf_status null_argument() { return fail(DNF_ERR_ARGUMENT, "null argument"); }

dnfree::MultMethod to_method(dnf_mult_method m) {
  switch (m) {
    case DNF_MULT_PRODUCT_FORMULA: return dnfree::MultMethod::product_formula;
    case DNF_MULT_BOXED: return dnfree::MultMethod::boxed;
    case DNF_MULT_S_TRANSFORM: return dnfree::MultMethod::s_transform;
  }
  throw ArgumentError{};
}

dnf_verdict to_verdict(dnfree::Verdict v) {
  switch (v) {
    case dnfree::Verdict::no: return DNF_VERDICT_FALSE;
    case dnfree::Verdict::yes: return DNF_VERDICT_TRUE;
    case dnfree::Verdict::degenerate: return DNF_VERDICT_DEGENERATE;
  }
  return DNF_VERDICT_DEGENERATE;
}

template <class Handle, class Value>
Handle* make_handle(Value&& v) {
  return new Handle{std::forward<Value>(v)};
}

}  // namespace

extern "C" {

const char* dnf_version(void) { return "0.1.0"; }

const char* dnf_last_error(void) { return last_error.c_str(); }

void dnf_string_free(char* s) { delete[] s; }

dnf_status dnf_document_detect(const char* json, dnf_document_kind* out) {
  if (any_null(json, out)) return null_argument();
  return guarded([&] {
    switch (dnfree::detect_document(json)) {
      case dnfree::DocumentKind::distribution: *out = DNF_DOC_DISTRIBUTION; break;
      case dnfree::DocumentKind::cumulants: *out = DNF_DOC_CUMULANTS; break;
      case dnfree::DocumentKind::joint: *out = DNF_DOC_JOINT; break;
      case dnfree::DocumentKind::series: *out = DNF_DOC_SERIES; break;
    }
  });
}

// --- distributions ---------------------------------------------------------

dnf_status dnf_distribution_parse(const char* json, dnf_distribution** out) {
  if (any_null(json, out)) return null_argument();
  return guarded([&] { *out = make_handle<dnf_distribution>(dnfree::parse_distribution(json)); });
}

dnf_status dnf_distribution_to_json(const dnf_distribution* d, char** out) {
  if (any_null(d, out)) return null_argument();
  return guarded([&] { *out = copy_string(dnfree::dump(dnfree::to_json(d->value))); });
}

dnf_status dnf_distribution_truncate(const dnf_distribution* d, int order, dnf_distribution** out) {
  if (any_null(d, out)) return null_argument();
  return guarded([&] { *out = make_handle<dnf_distribution>(dnfree::truncate(d->value, order)); });
}

int dnf_distribution_order(const dnf_distribution* d) { return d ? d->value.order() : 0; }

size_t dnf_distribution_components(const dnf_distribution* d) { return d ? d->value.n_components() : 0; }

void dnf_distribution_free(dnf_distribution* d) { delete d; }

dnf_status dnf_cumulants_parse(const char* json, dnf_cumulants** out) {
  if (any_null(json, out)) return null_argument();
  return guarded([&] { *out = make_handle<dnf_cumulants>(dnfree::parse_cumulants(json)); });
}

dnf_status dnf_cumulants_to_json(const dnf_cumulants* k, char** out) {
  if (any_null(k, out)) return null_argument();
  return guarded([&] { *out = copy_string(dnfree::dump(dnfree::to_json(k->value))); });
}

void dnf_cumulants_free(dnf_cumulants* k) { delete k; }

dnf_status dnf_series_parse(const char* json, dnf_series** out) {
  if (any_null(json, out)) return null_argument();
  return guarded([&] { *out = make_handle<dnf_series>(dnfree::parse_series(json)); });
}

dnf_status dnf_series_to_json(const dnf_series* s, char** out) {
  if (any_null(s, out)) return null_argument();
  return guarded([&] { *out = copy_string(dnfree::dump(dnfree::to_json(s->value))); });
}

void dnf_series_free(dnf_series* s) { delete s; }

dnf_status dnf_joint_parse(const char* json, dnf_joint** out) {
  if (any_null(json, out)) return null_argument();
  return guarded([&] { *out = make_handle<dnf_joint>(dnfree::parse_joint(json)); });
}

dnf_status dnf_joint_to_json(const dnf_joint* j, char** out) {
  if (any_null(j, out)) return null_argument();
  return guarded([&] { *out = copy_string(dnfree::dump(dnfree::to_json(j->value))); });
}

int dnf_joint_order(const dnf_joint* j) { return j ? j->value.order() : 0; }

void dnf_joint_free(dnf_joint* j) { delete j; }

// --- noncrossing partitions ------------------------------------------------

dnf_status dnf_nc_count(int n, unsigned long long* out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { *out = dnfree::enumerate_noncrossing(n).size(); });
}

dnf_status dnf_nc_table(int n, int with_rows, char** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] {
    const auto& table = dnfree::nc_table(n);
    dnfree::Json doc;
    doc["n"] = n;
    doc["count"] = table.size();
    if (with_rows) {
      dnfree::Json rows = dnfree::Json::array();
      for (const auto& entry : table) {
        dnfree::Json row;
        row["partition"] = dnfree::to_string(entry.partition);
        row["kreweras"] = dnfree::to_string(dnfree::kreweras_complement(entry.partition));
        row["mobius"] = dnfree::format_rational(entry.mobius_to_top);
        rows.push_back(std::move(row));
      }
      doc["rows"] = std::move(rows);
    }
    *out = copy_string(dnfree::dump(doc));
  });
}

dnf_status dnf_partition_kreweras(const char* partition, char** out) {
  if (any_null(partition, out)) return null_argument();
  return guarded([&] {
    *out = copy_string(dnfree::to_string(dnfree::kreweras_complement(dnfree::parse_partition(partition))));
  });
}

dnf_status dnf_partition_mobius(const char* partition, char** out) {
  if (any_null(partition, out)) return null_argument();
  return guarded([&] {
    *out = copy_string(dnfree::format_rational(dnfree::mobius_full(dnfree::parse_partition(partition))));
  });
}

// --- transforms ------------------------------------------------------------

dnf_status dnf_moments_to_cumulants(const dnf_distribution* d, dnf_cumulants** out) {
  if (any_null(d, out)) return null_argument();
  return guarded([&] { *out = make_handle<dnf_cumulants>(dnfree::moments_to_cumulants(d->value)); });
}

dnf_status dnf_cumulants_to_moments(const dnf_cumulants* k, dnf_distribution** out) {
  if (any_null(k, out)) return null_argument();
  return guarded([&] { *out = make_handle<dnf_distribution>(dnfree::cumulants_to_moments(k->value)); });
}

dnf_status dnf_moment_series(const dnf_distribution* d, dnf_series** out) {
  if (any_null(d, out)) return null_argument();
  return guarded([&] { *out = make_handle<dnf_series>(dnfree::moment_series(d->value)); });
}

dnf_status dnf_r_transform(const dnf_distribution* d, dnf_series** out) {
  if (any_null(d, out)) return null_argument();
  return guarded([&] { *out = make_handle<dnf_series>(dnfree::r_transform(d->value)); });
}

dnf_status dnf_s_transform(const dnf_distribution* d, dnf_series** out) {
  if (any_null(d, out)) return null_argument();
  return guarded([&] { *out = make_handle<dnf_series>(dnfree::s_transform(d->value)); });
}

dnf_status dnf_free_add(const dnf_distribution* x, const dnf_distribution* y, dnf_distribution** out) {
  if (any_null(x, y, out)) return null_argument();
  return guarded([&] { *out = make_handle<dnf_distribution>(dnfree::free_add_convolve(x->value, y->value)); });
}

dnf_status dnf_free_mult(const dnf_distribution* x, const dnf_distribution* y, dnf_mult_method method,
                         dnf_distribution** out) {
  if (any_null(x, y, out)) return null_argument();
  try {
    const auto m = to_method(method);
    return guarded(
        [&] { *out = make_handle<dnf_distribution>(dnfree::free_mult_convolve(x->value, y->value, m)); });
  } catch (const ArgumentError&) {
    return fail(DNF_ERR_ARGUMENT, "unknown multiplication method");
  }
}

dnf_status dnf_free_mult_all(const dnf_distribution* x, const dnf_distribution* y, dnf_distribution** out,
                             int* agreement, char** routes_json) {
  if (any_null(x, y, out, agreement)) return null_argument();
  return guarded([&] {
    const auto cmp = dnfree::free_mult_convolve_all(x->value, y->value);
    char* routes = nullptr;
    if (routes_json) {
      dnfree::Json arr = dnfree::Json::array();
      for (const auto& r : cmp.routes) {
        dnfree::Json entry;
        entry["method"] = dnfree::to_string(r.method);
        if (r.result) {
          entry["distribution"] = dnfree::to_json(*r.result);
        } else {
          entry["skipped"] = r.skipped_reason;
        }
        arr.push_back(std::move(entry));
      }
      routes = copy_string(dnfree::dump(arr));
    }
    *out = make_handle<dnf_distribution>(cmp.result);
    *agreement = cmp.agreement ? 1 : 0;
    if (routes_json) *routes_json = routes;
  });
}

// --- series ----------------------------------------------------------------

dnf_status dnf_series_compose(const dnf_series* f, const dnf_series* g, dnf_series** out) {
  if (any_null(f, g, out)) return null_argument();
  return guarded([&] { *out = make_handle<dnf_series>(dnfree::s_compose(f->value, g->value)); });
}

dnf_status dnf_series_comp_inverse(const dnf_series* g, dnf_series** out) {
  if (any_null(g, out)) return null_argument();
  return guarded([&] { *out = make_handle<dnf_series>(dnfree::s_comp_inverse(g->value)); });
}

dnf_status dnf_boxed_convolve(const dnf_series* g1, const dnf_series* g2, dnf_series** out) {
  if (any_null(g1, g2, out)) return null_argument();
  return guarded([&] { *out = make_handle<dnf_series>(dnfree::boxed_convolve(g1->value, g2->value)); });
}

dnf_status dnf_f_homomorphism(const dnf_series* g, dnf_series** out) {
  if (any_null(g, out)) return null_argument();
  return guarded([&] { *out = make_handle<dnf_series>(dnfree::f_homomorphism(g->value)); });
}

// --- joint distributions ---------------------------------------------------

dnf_status dnf_joint_from_free_pair(const dnf_distribution* x, const dnf_distribution* y, int order,
                                    dnf_joint** out) {
  if (any_null(x, y, out)) return null_argument();
  return guarded([&] { *out = make_handle<dnf_joint>(dnfree::joint_from_free_pair(x->value, y->value, order)); });
}

dnf_status dnf_check_freeness(const dnf_joint* j, int var_a, int var_b, int order, int* is_free,
                              char** report_json) {
  if (any_null(j, is_free)) return null_argument();
  return guarded([&] {
    const auto report = dnfree::check_freeness(j->value, var_a, var_b, order);
    if (report_json) *report_json = copy_string(dnfree::dump(dnfree::to_json(report, j->value.vars())));
    *is_free = report.free ? 1 : 0;
  });
}

dnf_status dnf_classify(const dnf_distribution* d, dnf_class_kind kind, int order, dnf_verdict* verdict,
                        char** report_json) {
  if (any_null(d, verdict)) return null_argument();
  if (kind == DNF_CLASS_R_DIAGONAL) {
    return fail(DNF_ERR_DOMAIN, "R-diagonal classification needs a joint star table");
  }
  if (kind != DNF_CLASS_SEMICIRCULAR && kind != DNF_CLASS_EVEN) {
    return fail(DNF_ERR_ARGUMENT, "unknown classification kind");
  }
  return guarded([&] {
    const auto c = kind == DNF_CLASS_SEMICIRCULAR ? dnfree::classify_semicircular(d->value, order)
                                                  : dnfree::classify_even(d->value, order);
    if (report_json) *report_json = copy_string(dnfree::dump(dnfree::to_json(c)));
    *verdict = to_verdict(c.verdict);
  });
}

dnf_status dnf_classify_joint(const dnf_joint* j, dnf_class_kind kind, int order, dnf_verdict* verdict,
                              char** report_json) {
  if (any_null(j, verdict)) return null_argument();
  return guarded([&] {
    dnfree::Classification c;
    switch (kind) {
      case DNF_CLASS_SEMICIRCULAR: c = dnfree::classify_semicircular(j->value, order); break;
      case DNF_CLASS_EVEN:
        if (j->value.vars().size() != 1) throw dnfree::DomainError("even classification takes one variable");
        c = dnfree::classify_even(j->value.marginal(0), order);
        break;
      case DNF_CLASS_R_DIAGONAL: c = dnfree::classify_r_diagonal(j->value, order); break;
      default: throw dnfree::DomainError("unknown classification kind");
    }
    if (report_json) *report_json = copy_string(dnfree::dump(dnfree::to_json(c)));
    *verdict = to_verdict(c.verdict);
  });
}

dnf_status dnf_divide_free(const dnf_distribution* d, int n, dnf_distribution** out) {
  if (any_null(d, out)) return null_argument();
  return guarded([&] { *out = make_handle<dnf_distribution>(dnfree::divide_free(d->value, n)); });
}

dnf_status dnf_selfcheck(int order, int* failures, char** report_json) {
  if (any_null(failures)) return null_argument();
  return guarded([&] {
    const auto report = dnfree::run_selfcheck(order);
    if (report_json) *report_json = copy_string(dnfree::dump(dnfree::to_json(report)));
    *failures = report.failed();
  });
}

}  // extern "C"
