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

// dnfree command-line front end. Talks to the engine only through the C API.

#include <dnfree/dnfree.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1.0";

struct Failure {
  dnf_status status;
  std::string message;
};

const char* status_kind(dnf_status s) {
  switch (s) {
    case DNF_ERR_PARSE: return "parse";
    case DNF_ERR_DOMAIN: return "domain";
    case DNF_ERR_BOUND: return "bound";
    case DNF_ERR_SELFCHECK: return "selfcheck";
    case DNF_ERR_ARGUMENT: return "argument";
    default: return "internal";
  }
}

void check(dnf_status s) {
  if (s != DNF_OK) throw Failure{s, dnf_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using Distribution = std::unique_ptr<dnf_distribution, Deleter<dnf_distribution, dnf_distribution_free>>;
using Cumulants = std::unique_ptr<dnf_cumulants, Deleter<dnf_cumulants, dnf_cumulants_free>>;
using Series = std::unique_ptr<dnf_series, Deleter<dnf_series, dnf_series_free>>;
using Joint = std::unique_ptr<dnf_joint, Deleter<dnf_joint, dnf_joint_free>>;

// Takes ownership of a library string and parses it.
Json take_json(char* s) {
  std::unique_ptr<char, Deleter<char, dnf_string_free>> owned(s);
  return Json::parse(owned.get());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{DNF_ERR_PARSE, "cannot read input file \"" + path + "\""};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Prefixes library diagnostics with the file they came from.
template <class Fn>
void with_file(const std::string& path, Fn&& fn) {
  try {
    fn();
  } catch (Failure& f) {
    f.message = path + ": " + f.message;
    throw;
  }
}

Distribution load_distribution(const std::string& path) {
  const std::string text = read_file(path);
  dnf_distribution* d = nullptr;
  with_file(path, [&] { check(dnf_distribution_parse(text.c_str(), &d)); });
  return Distribution(d);
}

// order 0 keeps the input's own order.
Distribution truncated(Distribution d, int order) {
  if (order == 0) return d;
  dnf_distribution* t = nullptr;
  check(dnf_distribution_truncate(d.get(), order, &t));
  return Distribution(t);
}

Json distribution_json(const Distribution& d) {
  char* s = nullptr;
  check(dnf_distribution_to_json(d.get(), &s));
  return take_json(s);
}

Json series_json(const Series& s) {
  char* out = nullptr;
  check(dnf_series_to_json(s.get(), &out));
  return take_json(out);
}

struct Options {
  int n = 0;
  bool table = false;
  std::vector<std::string> inputs;
  std::string direction;
  std::string op;
  std::string method = "all";
  std::string kind;
  int order = 0;
};

struct Result {
  Json payload;
  Json provenance = Json::object();
  int exit_code = 0;
};

Result run_nc(const Options& o) {
  char* s = nullptr;
  check(dnf_nc_table(o.n, o.table ? 1 : 0, &s));
  return {take_json(s)};
}

Result run_transform(const Options& o) {
  const std::string& path = o.inputs.front();
  const std::string text = read_file(path);
  Result r;
  if (o.direction == "m2k") {
    dnf_distribution* d = nullptr;
    with_file(path, [&] { check(dnf_distribution_parse(text.c_str(), &d)); });
    Distribution dist(d);
    dnf_cumulants* k = nullptr;
    check(dnf_moments_to_cumulants(dist.get(), &k));
    Cumulants cum(k);
    char* cs = nullptr;
    check(dnf_cumulants_to_json(cum.get(), &cs));
    dnf_series* rs = nullptr;
    check(dnf_r_transform(dist.get(), &rs));
    r.payload["cumulants"] = take_json(cs);
    r.payload["r_transform"] = series_json(Series(rs));
  } else {
    dnf_cumulants* k = nullptr;
    with_file(path, [&] { check(dnf_cumulants_parse(text.c_str(), &k)); });
    Cumulants cum(k);
    dnf_distribution* d = nullptr;
    check(dnf_cumulants_to_moments(cum.get(), &d));
    Distribution dist(d);
    dnf_series* ms = nullptr;
    check(dnf_moment_series(dist.get(), &ms));
    r.payload["distribution"] = distribution_json(dist);
    r.payload["moment_series"] = series_json(Series(ms));
  }
  r.provenance["route"] = o.direction == "m2k" ? "moebius inversion over NC(n)" : "zeta summation over NC(n)";
  return r;
}

Result run_convolve(const Options& o) {
  if (o.inputs.size() != 2) throw Failure{DNF_ERR_PARSE, "convolve needs exactly two --in files"};
  Distribution x = load_distribution(o.inputs[0]);
  Distribution y = load_distribution(o.inputs[1]);
  const int order = o.order != 0 ? o.order
                                 : std::min(dnf_distribution_order(x.get()), dnf_distribution_order(y.get()));
  x = truncated(std::move(x), order);
  y = truncated(std::move(y), order);
  Result r;
  dnf_distribution* out = nullptr;
  if (o.op == "add") {
    check(dnf_free_add(x.get(), y.get(), &out));
    r.payload["distribution"] = distribution_json(Distribution(out));
    r.provenance["method"] = "cumulant addition";
    return r;
  }
  if (o.method == "all") {
    int agreement = 0;
    char* routes = nullptr;
    check(dnf_free_mult_all(x.get(), y.get(), &out, &agreement, &routes));
    r.payload["distribution"] = distribution_json(Distribution(out));
    r.payload["agreement"] = agreement != 0;
    r.payload["routes"] = take_json(routes);
    r.provenance["method"] = "all";
    return r;
  }
  dnf_mult_method m = DNF_MULT_PRODUCT_FORMULA;
  if (o.method == "boxed") m = DNF_MULT_BOXED;
  if (o.method == "s-transform") m = DNF_MULT_S_TRANSFORM;
  check(dnf_free_mult(x.get(), y.get(), m, &out));
  r.payload["distribution"] = distribution_json(Distribution(out));
  r.provenance["method"] = o.method;
  return r;
}

Result run_stransform(const Options& o) {
  const Distribution x = truncated(load_distribution(o.inputs.front()), o.order);
  dnf_series* s = nullptr;
  check(dnf_s_transform(x.get(), &s));
  Result r;
  r.payload["series"] = series_json(Series(s));
  r.provenance["method"] = "compositional inverse of the R-transform, divided by z";
  return r;
}

Result run_classify(const Options& o) {
  const std::string& path = o.inputs.front();
  const std::string text = read_file(path);
  dnf_document_kind doc = DNF_DOC_DISTRIBUTION;
  with_file(path, [&] { check(dnf_document_detect(text.c_str(), &doc)); });
  Result r;
  char* report = nullptr;

  if (o.kind == "free") {
    if (doc != DNF_DOC_JOINT) throw Failure{DNF_ERR_DOMAIN, "freeness check needs a joint table with two variables"};
    dnf_joint* j = nullptr;
    with_file(path, [&] { check(dnf_joint_parse(text.c_str(), &j)); });
    Joint joint(j);
    int is_free = 0;
    check(dnf_check_freeness(joint.get(), 0, 1, o.order != 0 ? o.order : dnf_joint_order(joint.get()), &is_free, &report));
    r.payload = take_json(report);
    r.payload = Json{{"kind", o.kind}, {"result", is_free ? "true" : "false"}, {"report", r.payload}};
    return r;
  }

  const dnf_class_kind kind = o.kind == "semicircular" ? DNF_CLASS_SEMICIRCULAR
                              : o.kind == "even"       ? DNF_CLASS_EVEN
                                                       : DNF_CLASS_R_DIAGONAL;
  dnf_verdict verdict = DNF_VERDICT_DEGENERATE;
  if (doc == DNF_DOC_JOINT) {
    dnf_joint* j = nullptr;
    with_file(path, [&] { check(dnf_joint_parse(text.c_str(), &j)); });
    Joint joint(j);
    check(dnf_classify_joint(joint.get(), kind, o.order != 0 ? o.order : dnf_joint_order(joint.get()), &verdict, &report));
  } else {
    dnf_distribution* d = nullptr;
    with_file(path, [&] { check(dnf_distribution_parse(text.c_str(), &d)); });
    Distribution dist(d);
    check(dnf_classify(dist.get(), kind, o.order != 0 ? o.order : dnf_distribution_order(dist.get()), &verdict, &report));
  }
  Json body = take_json(report);
  r.payload["kind"] = o.kind;
  for (auto& [key, value] : body.items()) r.payload[key] = value;
  return r;
}

Result run_divide(const Options& o) {
  const Distribution d = load_distribution(o.inputs.front());
  dnf_distribution* out = nullptr;
  check(dnf_divide_free(d.get(), o.n, &out));
  Result r;
  r.payload["distribution"] = distribution_json(Distribution(out));
  r.provenance["method"] = "cumulants divided by n";
  return r;
}

Result run_selfcheck(const Options& o) {
  int failures = 0;
  char* report = nullptr;
  check(dnf_selfcheck(o.order != 0 ? o.order : 5, &failures, &report));
  Result r;
  r.payload = take_json(report);
  r.exit_code = failures == 0 ? 0 : DNF_ERR_SELFCHECK;
  return r;
}

Json command_echo(const std::string& verb, const Options& o) {
  Json c;
  c["verb"] = verb;
  if (verb == "nc") {
    c["n"] = o.n;
    c["table"] = o.table;
  } else if (verb == "transform") {
    c["direction"] = o.direction;
  } else if (verb == "convolve") {
    c["op"] = o.op;
    if (o.op == "mult") c["method"] = o.method;
  } else if (verb == "classify") {
    c["kind"] = o.kind;
  } else if (verb == "divide") {
    c["n"] = o.n;
  }
  if (verb == "convolve" || verb == "stransform" || verb == "classify" || verb == "selfcheck") {
    if (o.order != 0) c["order"] = o.order;
  }
  if (!o.inputs.empty()) c["inputs"] = o.inputs;
  return c;
}

void emit_error(dnf_status status, const std::string& message) {
  Json err;
  err["error"] = Json{{"code", static_cast<int>(status)}, {"kind", status_kind(status)}, {"message", message}};
  std::cerr << err.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact free probability over the diagonal algebra D_N"};
  app.require_subcommand(1);
  Options o;

  auto* nc = app.add_subcommand("nc", "Enumerate NC(n) with Kreweras complements and Moebius values");
  nc->add_option("--n", o.n, "Ground set size")->required();
  nc->add_flag("--table", o.table, "Emit one row per partition");

  auto* transform = app.add_subcommand("transform", "Moments to cumulants (m2k) or back (k2m)");
  transform->add_option("--in", o.inputs, "Input document")->required()->expected(1);
  transform->add_option("--direction", o.direction)->required()->check(CLI::IsMember({"m2k", "k2m"}));

  auto* convolve = app.add_subcommand("convolve", "Free additive or multiplicative convolution");
  convolve->add_option("--op", o.op)->required()->check(CLI::IsMember({"add", "mult"}));
  convolve->add_option("--method", o.method, "Multiplicative route")
      ->check(CLI::IsMember({"product-formula", "boxed", "s-transform", "all"}));
  convolve->add_option("--in", o.inputs, "Input distributions (twice)")->required()->expected(2);
  convolve->add_option("--order", o.order, "Truncation order (default: the input's order)");

  auto* stransform = app.add_subcommand("stransform", "S-transform (order M-1 for moment order M)");
  stransform->add_option("--in", o.inputs)->required()->expected(1);
  stransform->add_option("--order", o.order, "Truncation order (default: the input's order)");

  auto* classify = app.add_subcommand("classify", "Classify a distribution or joint table");
  classify->add_option("--in", o.inputs)->required()->expected(1);
  classify->add_option("--kind", o.kind)->required()->check(
      CLI::IsMember({"semicircular", "even", "r-diagonal", "free"}));
  classify->add_option("--order", o.order, "Truncation order (default: the input's order)");

  auto* divide = app.add_subcommand("divide", "Split into n identically distributed free summands");
  divide->add_option("--in", o.inputs)->required()->expected(1);
  divide->add_option("--n", o.n)->required();

  auto* selfcheck = app.add_subcommand("selfcheck", "Run every invariant against its oracle");
  selfcheck->add_option("--order", o.order, "Moment order for the suite (default 5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error(DNF_ERR_PARSE, e.what());
    return DNF_ERR_PARSE;
  }

  const auto* sub = app.get_subcommands().front();
  const std::string verb = sub->get_name();
  try {
    Result r;
    if (verb == "nc") r = run_nc(o);
    else if (verb == "transform") r = run_transform(o);
    else if (verb == "convolve") r = run_convolve(o);
    else if (verb == "stransform") r = run_stransform(o);
    else if (verb == "classify") r = run_classify(o);
    else if (verb == "divide") r = run_divide(o);
    else r = run_selfcheck(o);

    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command_echo(verb, o);
    doc["payload"] = std::move(r.payload);
    r.provenance["library_version"] = dnf_version();
    doc["provenance"] = std::move(r.provenance);
    std::cout << doc.dump() << '\n';
    return r.exit_code;
  } catch (const Failure& f) {
    emit_error(f.status, f.message);
    return f.status == DNF_ERR_ARGUMENT ? DNF_ERR_PARSE : static_cast<int>(f.status);
  } catch (const std::exception& e) {
    emit_error(DNF_ERR_INTERNAL, e.what());
    return DNF_ERR_INTERNAL;
  }
}
