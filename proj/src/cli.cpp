/*
 * Copyright 2026 The walkernp Authors
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
 */

#include "walkernp/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <mutex>
#include <sstream>
#include <thread>

#include "walkernp/congruence.hpp"
#include "walkernp/curvature.hpp"
#include "walkernp/heavenly.hpp"
#include "walkernp/nullgeom.hpp"
#include "walkernp/spincoeff.hpp"

namespace wnp::cli {

namespace {

using json = nlohmann::ordered_json;

// Any input problem: unreadable file, bad JSON, bad expression, bad flag value.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Poly field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw InputError(std::string("missing expression field \"") + key + "\"");
  const std::string text = j[key].get<std::string>();
  try {
    return parse_poly(text);
  } catch (const ParseError& e) {
    throw InputError(std::string("field \"") + key + "\": " + e.what());
  }
}

WalkerMetric load_metric(const std::string& path) {
  const json j = load_json(path);
  WalkerMetric w{field(j, "a"), field(j, "b"), field(j, "c"), {}};
  if (j.contains("label") && j["label"].is_string()) w.label = j["label"].get<std::string>();
  return w;
}

HeavenlyPotential load_potential(const std::string& path) {
  const json j = load_json(path);
  return {field(j, "theta"), field(j, "f"), field(j, "g"), field(j, "F"), field(j, "G"), field(j, "h")};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

Point parse_point(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 4) throw InputError("point needs four comma-separated rationals: " + s);
  Point p;
  for (int i = 0; i < 4; ++i) {
    try {
      const Poly c = parse_poly(parts[i]);
      if (c.total_degree() > 0) throw InputError("point coordinates must be numbers: " + s);
      p[i] = c.constant_term();
    } catch (const ParseError& e) {
      throw InputError("point: " + std::string(e.what()));
    }
  }
  return p;
}

ConnectingState parse_state(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 4) throw InputError("initial state needs four comma-separated numbers: " + s);
  ConnectingState z;
  for (int i = 0; i < 4; ++i) {
    char* end = nullptr;
    z(i) = std::strtod(parts[i].c_str(), &end);
    if (end == parts[i].c_str() || *end != '\0') throw InputError("not a number: " + parts[i]);
  }
  return z;
}

json metric_json(const WalkerMetric& w) {
  json j;
  if (!w.label.empty()) j["label"] = w.label;
  j["a"] = str(w.a);
  j["b"] = str(w.b);
  j["c"] = str(w.c);
  return j;
}

// A residual block: every key once, in computation order, plus the nonzero keys.
json residual_block(const Residuals& r) {
  json values = json::object(), bad = json::array();
  for (const auto& [k, v] : r) {
    values[k] = str(v);
    if (!v.is_zero()) bad.push_back(k);
  }
  json j;
  j["count"] = r.size();
  j["nonzero"] = bad;
  j["pass"] = bad.empty();
  j["residuals"] = values;
  return j;
}

json flag_json(const Flag& f) {
  json w = json::object();
  for (const auto& [k, v] : f.witness) w[k] = str(v);
  return {{"value", f.value}, {"witness", w}};
}

// Runs independent jobs on up to thread_cap() workers; results keep job order.
template <class R>
std::vector<R> parallel_map(const std::vector<std::function<R()>>& jobs) {
  std::vector<R> out(jobs.size());
  const unsigned n = std::min<unsigned>(thread_cap(), static_cast<unsigned>(jobs.size()));
  if (n <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < jobs.size();) {
        try {
          out[i] = jobs[i]();
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<Poly> test_monomials(int max_degree) {
  std::vector<Poly> out;
  for (unsigned d = 0; d <= static_cast<unsigned>(max_degree); ++d)
    for (unsigned i = 0; i <= d; ++i)
      for (unsigned j = 0; i + j <= d; ++j)
        for (unsigned k = 0; i + j + k <= d; ++k)
          out.push_back(Poly::monomial(Rational(1), {i, j, k, d - i - j - k}));
  return out;
}

// Relation suites that hold for every Walker metric in its canonical frame.
const std::vector<std::string>& walker_relation_suites() {
  static const std::vector<std::string> names = {"walker-spin",       "induced-flat",           "walker-tilde",
                                                 "walker-curvature", "hypersurface-integrable", "hypersurface-walker"};
  return names;
}

// ---- analyze ---------------------------------------------------------------

int cmd_analyze(const std::string& path, const std::string& point, std::ostream& out) {
  const WalkerMetric w = load_metric(path);
  const Point pt = parse_point(point);
  const WalkerFrameData d = walker_frame_data(w);
  const SpinCoefficientSet tetrad_route = spin_coefficients_from_tetrad(d.m, d.gam, d.t);
  const PhiLambda tensor_route = phi_lambda_from_ricci(riemann(d.m, d.gam), d.m, d.t);

  bool curvature_agrees = tensor_route.Lambda == d.c.Lambda && tensor_route.S == d.c.S;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) curvature_agrees = curvature_agrees && tensor_route.Phi[i][j] == d.c.Phi[i][j];
  const bool coefficients_agree = tetrad_route == d.s;

  json rep;
  rep["metric"] = metric_json(w);
  json sc = json::object();
  for (int i = 0; i < 32; ++i) sc[SpinCoefficientSet::name(i)] = str(d.s[i]);
  rep["spin_coefficients"] = sc;
  json cv = json::object();
  for (const auto& [k, v] : d.c.named()) cv[k] = str(v);
  rep["curvature"] = cv;

  const SdWeylClass cls = classify_sd_weyl(w, pt);
  const TypeIFlags t1 = classify_type_I(d.s);
  const TypeIIIFlags t3 = classify_type_III(d.s, d.c);
  rep["classification"] = {{"point", {pt[0].get_str(), pt[1].get_str(), pt[2].get_str(), pt[3].get_str()}},
                           {"sd_weyl", cls.label},
                           {"A", cls.A.get_str()},
                           {"B", cls.B.get_str()},
                           {"type_I", {{"auto_parallel", flag_json(t1.auto_parallel)}, {"parallel", flag_json(t1.parallel)}}},
                           {"type_III",
                            {{"integrable", flag_json(t3.integrable)},
                             {"auto_parallel", flag_json(t3.auto_parallel)},
                             {"parallel", flag_json(t3.parallel)}}}};

  const DistributionReport dr = distribution_report(d, {RF(1), RF(0)});
  rep["distribution"] = {{"alpha_integrable", flag_json(dr.alpha_integrable)},
                         {"walker", flag_json(dr.walker)},
                         {"auto_parallel", flag_json(dr.auto_parallel)},
                         {"parallel", flag_json(dr.parallel)},
                         {"typeIII_integrable", flag_json(dr.typeIII_integrable)},
                         {"ricci_null", flag_json(dr.ricci_null)},
                         {"ricci_aligned", flag_json(dr.ricci_aligned)}};
  rep["cross_route"] = {{"spin_coefficients", coefficients_agree}, {"curvature", curvature_agrees}};
  out << rep.dump(2) << "\n";
  return coefficients_agree && curvature_agrees ? kOk : kCrossRoute;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& path, const std::string& suite, const std::string& perturb, const std::string& by,
               bool timing, std::ostream& out) {
  static const std::vector<std::string> known = {"field", "commutator", "bianchi", "relations"};
  std::vector<std::string> suites;
  if (suite == "all")
    suites = known;
  else if (std::find(known.begin(), known.end(), suite) != known.end())
    suites = {suite};
  else
    throw InputError("unknown suite: " + suite);

  const WalkerMetric w = load_metric(path);
  const WalkerFrameData d = walker_frame_data(w);
  SpinCoefficientSet s = d.s;
  if (!perturb.empty()) {
    int idx = -1;
    try {
      idx = SpinCoefficientSet::index_of(perturb);
    } catch (const std::exception&) {
      throw InputError("unknown spin coefficient: " + perturb);
    }
    try {
      s[idx] += RF(parse_poly(by));
    } catch (const ParseError& e) {
      throw InputError("--by: " + std::string(e.what()));
    }
  }

  using Job = std::function<Residuals()>;
  auto run_suite = [&](const std::string& name) -> std::pair<Residuals, double> {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Job> jobs;
    if (name == "field") {
      jobs.push_back([&] { return field_equation_residuals(s, d.c, d.t); });
    } else if (name == "commutator") {
      for (const Poly& f : test_monomials(3))
        jobs.push_back([&, f] {
          Residuals r;
          const std::string tag = " f=" + str(f);
          for (auto& [k, v] : commutator_residuals(s, d.t, RF(f))) r.emplace_back(k + tag, std::move(v));
          for (auto& [k, v] : walker_commutator_residuals(w, RF(f))) r.emplace_back("walker " + k + tag, std::move(v));
          return r;
        });
    } else if (name == "bianchi") {
      jobs.push_back([&] {
        const auto b = bianchi_contracted_check(riemann(d.m, d.gam), d.m, d.gam);
        static const char* coord[] = {"u", "v", "x", "y"};
        Residuals r;
        for (int i = 0; i < 4; ++i) r.emplace_back(std::string("contracted bianchi d") + coord[i], RF(b[i]));
        return r;
      });
      jobs.push_back([&] { return walker_curvature_redundancy(w); });
    } else {
      jobs.push_back([&] { return spin_frame_relations(s); });
      for (const auto& n : walker_relation_suites())
        jobs.push_back([&, n] {
          Residuals r;
          for (auto& [k, v] : relation_suite(s, d.c, n)) r.emplace_back(n + ": " + k, std::move(v));
          return r;
        });
    }
    Residuals all;
    for (auto& part : parallel_map(jobs)) std::move(part.begin(), part.end(), std::back_inserter(all));
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return {std::move(all), ms};
  };

  json rep;
  rep["metric"] = metric_json(w);
  if (!perturb.empty()) rep["perturbed"] = {{"coefficient", perturb}, {"by", by}};
  json js = json::object();
  bool pass = true;
  for (const auto& name : suites) {
    auto [res, ms] = run_suite(name);
    json block = residual_block(res);
    pass = pass && block["pass"].get<bool>();
    if (timing) block["milliseconds"] = ms;
    js[name] = std::move(block);
  }
  rep["suites"] = js;
  rep["verdict"] = pass ? "pass" : "fail";
  out << rep.dump(2) << "\n";
  return pass ? kOk : kVerifyFailed;
}

// ---- congruence ------------------------------------------------------------

int cmd_congruence(const std::string& path, const std::string& base_s, const std::string& v0_s, double end,
                   double step, const std::string& csv_path, std::ostream& out) {
  if (!(step > 0)) throw InputError("--step must be positive");
  if (!(end >= 0)) throw InputError("--end must be non-negative");
  const WalkerMetric w = load_metric(path);
  const Point base = parse_point(base_s);
  const ConnectingState z0 = parse_state(v0_s);
  const PropagationProvider prov = walker_provider(w, base);
  const ConnectingPath path_v = integrate_connecting(prov, z0, end, step);

  double err = 0;
  bool nu_constant = true;
  for (const auto& s : path_v) {
    err = std::max(err, (s.z - walker_connecting_oracle(w, base, z0, s.v)).lpNorm<Eigen::Infinity>());
    nu_constant = nu_constant && s.z(3) == z0(3);
  }

  if (!csv_path.empty()) {
    if (csv_path == "-") {
      write_csv(out, path_v, prov);
      return kOk;
    }
    std::ofstream f(csv_path);
    if (!f) throw InputError("cannot write " + csv_path);
    write_csv(f, path_v, prov);
  }
  json rep;
  rep["metric"] = metric_json(w);
  rep["samples"] = path_v.size();
  rep["end"] = format_double(path_v.empty() ? 0.0 : path_v.back().v);
  rep["step"] = format_double(step);
  rep["max_oracle_error"] = format_double(err);
  rep["nu_constant"] = nu_constant;
  out << rep.dump(2) << "\n";
  return kOk;
}

// ---- heavenly --------------------------------------------------------------

int cmd_heavenly(const std::string& path, const std::string& check, std::ostream& out, std::ostream& err) {
  if (check != "all" && check != "einstein" && check != "identity") throw InputError("unknown check: " + check);
  const HeavenlyPotential p = load_potential(path);
  const PotentialReport pr = validate_potential(p);
  if (!pr.valid) {
    json rep;
    rep["error"] = "invalid potential";
    json r = json::object();
    for (const auto& [k, v] : pr.violations) r[k] = str(v);
    rep["residuals"] = r;
    out << rep.dump(2) << "\n";
    err << "invalid potential: " << pr.violations.front().first << " = " << pr.violations.front().second << "\n";
    return kInputError;
  }

  const WalkerMetric w = build_metric(p);
  json rep;
  rep["metric"] = metric_json(w);
  int code = kOk;
  json checks = json::object();
  checks["ricci_null"] = residual_block(walker_ricci_null_residuals(w));
  if (!checks["ricci_null"]["pass"].get<bool>()) code = kVerifyFailed;

  if (check != "einstein") {
    const IdentityCheck id = identity_check(p);
    const PsiComparison ps = psi_components(p);
    checks["identity"] = residual_block({{"-24 ~Psi4 - potential form", RF(id.residual)}});
    json psi = json::object();
    for (int k = 0; k < 5; ++k) psi["Psi" + std::to_string(k)] = str(ps.direct[k]);
    checks["psi"] = {{"consistent", ps.consistent()}, {"values", psi}};
    if (!id.residual.is_zero() || !ps.consistent()) code = std::max(code, static_cast<int>(kVerifyFailed));
  }

  if (check != "identity") {
    try {
      const EinsteinVerdict ev = einstein_check(p);
      json wit = json::object();
      for (const auto& [k, v] : ev.second_derivatives)
        if (!v.is_zero()) wit[k] = str(v);
      checks["einstein"] = {{"applicable", true},
                            {"R", str(ev.R)},
                            {"einstein", ev.einstein},
                            {"witness", wit},
                            {"tensor_route_einstein", ev.tensor_route_einstein},
                            {"agree", ev.agree()}};
      if (!ev.agree()) code = kCrossRoute;
    } catch (const std::invalid_argument& e) {
      checks["einstein"] = {{"applicable", false}, {"reason", e.what()}};
    }
  }
  rep["checks"] = checks;
  out << rep.dump(2) << "\n";
  return code;
}

// ---- classify --------------------------------------------------------------

int cmd_classify(const std::string& path, const std::string& point, std::ostream& out) {
  const WalkerMetric w = load_metric(path);
  const Point pt = parse_point(point);
  const SdWeylClass cls = classify_sd_weyl(w, pt);
  json rep;
  rep["metric"] = metric_json(w);
  rep["point"] = {pt[0].get_str(), pt[1].get_str(), pt[2].get_str(), pt[3].get_str()};
  rep["label"] = cls.label;
  rep["A"] = cls.A.get_str();
  rep["B"] = cls.B.get_str();
  rep["S"] = cls.S.get_str();
  rep["c"] = cls.c.get_str();
  out << rep.dump(2) << "\n";
  return kOk;
}

}  // namespace

unsigned thread_cap() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NP_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && n >= 1) return std::min<unsigned>(hw, static_cast<unsigned>(n));
  }
  return hw;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spin-coefficient analysis of Walker metrics", "walkernp"};
  app.require_subcommand(1);

  std::string input, point = "0,0,0,0", suite = "all", perturb, by = "1", base = "0,0,0,0", v0 = "0,0,1,0", csv,
                    check = "all";
  double end = 1.0, step = 1e-3;
  bool timing = false;

  auto* analyze = app.add_subcommand("analyze", "Spin coefficients, curvature, classification, distribution flags");
  analyze->add_option("input", input, "Metric JSON file")->required();
  analyze->add_option("--point", point, "Point u,v,x,y for the pointwise classification");

  auto* verify = app.add_subcommand("verify", "Residual suites; exit 1 when any residual is nonzero");
  verify->add_option("input", input, "Metric JSON file")->required();
  verify->add_option("--suite", suite, "all | field | commutator | bianchi | relations");
  verify->add_option("--perturb", perturb, "Shift the named spin coefficient before the suites run");
  verify->add_option("--by", by, "Shift amount for --perturb (expression, default 1)");
  verify->add_flag("--timing", timing, "Include per-suite wall time (not deterministic)");

  auto* cong = app.add_subcommand("congruence", "Integrate a connecting field along d/du");
  cong->add_option("input", input, "Metric JSON file")->required();
  cong->add_option("--base", base, "Base point u,v,x,y");
  cong->add_option("--v0", v0, "Initial eta,zeta,zetatilde,nu");
  cong->add_option("--end", end, "Final affine parameter");
  cong->add_option("--step", step, "RK4 step");
  cong->add_option("--out", csv, "CSV path, or - for stdout");

  auto* heav = app.add_subcommand("heavenly", "Build and check a metric from potential data");
  heav->add_option("potential", input, "Potential JSON file")->required();
  heav->add_option("--check", check, "einstein | identity | all");

  auto* classify = app.add_subcommand("classify", "Self-dual Weyl type at a point");
  classify->add_option("input", input, "Metric JSON file")->required();
  classify->add_option("--point", point, "Point u,v,x,y");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(input, point, out);
    if (*verify) return cmd_verify(input, suite, perturb, by, timing, out);
    if (*cong) return cmd_congruence(input, base, v0, end, step, csv, out);
    if (*heav) return cmd_heavenly(input, check, out, err);
    return cmd_classify(input, point, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidPotential& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace wnp::cli
