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

// Python bindings. Polynomials cross the boundary as expression strings and
// exact results come back in the same printed form, so values round-trip
// through parse().

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "walkernp/cli.hpp"
#include "walkernp/congruence.hpp"
#include "walkernp/heavenly.hpp"
#include "walkernp/nullgeom.hpp"
#include "walkernp/spincoeff.hpp"

namespace py = pybind11;
using namespace wnp;

namespace {

using StrMap = std::map<std::string, std::string>;

WalkerMetric metric(const std::string& a, const std::string& b, const std::string& c) {
  return {parse_poly(a), parse_poly(b), parse_poly(c), ""};
}

Point point(const std::vector<py::object>& xs) {
  if (xs.size() != 4) throw std::invalid_argument("a point needs four coordinates u, v, x, y");
  Point p;
  for (int i = 0; i < 4; ++i) {
    p[i] = Rational(py::str(xs[i]).cast<std::string>());
    p[i].canonicalize();
  }
  return p;
}

StrMap residual_map(const Residuals& r) {
  StrMap out;
  for (const auto& [k, v] : r) out[k] = v.str();
  return out;
}

StrMap coefficients(const SpinCoefficientSet& s) {
  StrMap out;
  for (int i = 0; i < 32; ++i) out[SpinCoefficientSet::name(i)] = s[i].str();
  return out;
}

HeavenlyPotential potential(const StrMap& m) {
  auto field = [&](const char* k) {
    const auto it = m.find(k);
    if (it == m.end()) throw std::invalid_argument(std::string("missing potential field ") + k);
    return parse_poly(it->second);
  };
  return {field("theta"), field("f"), field("g"), field("F"), field("G"), field("h")};
}

Eigen::MatrixXd path_matrix(const ConnectingPath& path) {
  Eigen::MatrixXd out(path.size(), 5);
  for (std::size_t i = 0; i < path.size(); ++i) {
    out(i, 0) = path[i].v;
    out.block<1, 4>(i, 1) = path[i].z.transpose();
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_walkernp, m) {
  m.doc() = "Spin-coefficient analysis of Walker metrics";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidPotential>(m, "InvalidPotential", PyExc_ValueError);
  py::register_exception<CausticError>(m, "CausticError", PyExc_ArithmeticError);
  py::register_exception<IntegrationError>(m, "IntegrationError", PyExc_ArithmeticError);

  m.def("parse", [](const std::string& s) { return parse_poly(s).str(); }, py::arg("expr"),
        "Canonical printed form of a polynomial expression.");
  m.def(
      "diff", [](const std::string& s, const std::string& var) {
        static const std::map<std::string, int> vars = {{"u", U}, {"v", V}, {"x", X}, {"y", Y}};
        const auto it = vars.find(var);
        if (it == vars.end()) throw std::invalid_argument("variable must be one of u, v, x, y");
        return parse_poly(s).diff(it->second).str();
      },
      py::arg("expr"), py::arg("var"));
  m.def(
      "evaluate", [](const std::string& s, const std::vector<py::object>& p) { return parse_poly(s).eval(point(p)).get_str(); },
      py::arg("expr"), py::arg("point"), "Exact value at a rational point, as a string.");

  m.def(
      "spin_coefficients",
      [](const std::string& a, const std::string& b, const std::string& c, const std::string& route) {
        const WalkerMetric w = metric(a, b, c);
        if (route == "closed") return coefficients(walker_closed_form(w));
        if (route == "tetrad") {
          const MetricTensor mt = assemble_metric(w);
          return coefficients(spin_coefficients_from_tetrad(mt, christoffel(mt), walker_tetrad(w)));
        }
        throw std::invalid_argument("route must be 'closed' or 'tetrad'");
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("route") = "closed");

  m.def(
      "curvature",
      [](const std::string& a, const std::string& b, const std::string& c) {
        StrMap out;
        for (const auto& [k, v] : walker_curvature_components(metric(a, b, c)).named()) out[k] = v.str();
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("c"));

  m.def(
      "field_equations",
      [](const std::string& a, const std::string& b, const std::string& c, const std::string& perturb,
         const std::string& by) {
        const WalkerMetric w = metric(a, b, c);
        SpinCoefficientSet s = walker_closed_form(w);
        if (!perturb.empty()) s[SpinCoefficientSet::index_of(perturb)] += RF(parse_poly(by));
        return residual_map(field_equation_residuals(s, walker_curvature_components(w), walker_tetrad(w)));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("perturb") = "", py::arg("by") = "1",
      "The 48 field-equation residuals, optionally after shifting one coefficient.");

  m.def(
      "commutators",
      [](const std::string& a, const std::string& b, const std::string& c, const std::string& f) {
        const WalkerMetric w = metric(a, b, c);
        return residual_map(commutator_residuals(walker_closed_form(w), walker_tetrad(w), RF(parse_poly(f))));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("f"));

  m.def(
      "classify",
      [](const std::string& a, const std::string& b, const std::string& c, const std::vector<py::object>& p) {
        const SdWeylClass k = classify_sd_weyl(metric(a, b, c), point(p));
        return StrMap{{"label", k.label}, {"A", k.A.get_str()}, {"B", k.B.get_str()}, {"S", k.S.get_str()},
                      {"c", k.c.get_str()}};
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("point"));

  m.def(
      "integrate_connecting",
      [](const std::string& a, const std::string& b, const std::string& c, const std::vector<py::object>& base,
         const Eigen::Vector4d& z0, double end, double step) {
        const WalkerMetric w = metric(a, b, c);
        return path_matrix(integrate_connecting(walker_provider(w, point(base)), z0, end, step));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("base"), py::arg("z0"), py::arg("end") = 1.0,
      py::arg("step") = 1e-3, "RK4 samples along d/du; columns v, eta, zeta, zetatilde, nu.");

  m.def(
      "connecting_oracle",
      [](const std::string& a, const std::string& b, const std::string& c, const std::vector<py::object>& base,
         const Eigen::Vector4d& z0, double v) {
        return Eigen::Vector4d(walker_connecting_oracle(metric(a, b, c), point(base), z0, v));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("base"), py::arg("z0"), py::arg("v"));

  m.def(
      "heavenly_metric",
      [](const StrMap& p) {
        const WalkerMetric w = build_metric(potential(p));
        return StrMap{{"a", w.a.str()}, {"b", w.b.str()}, {"c", w.c.str()}};
      },
      py::arg("potential"));

  m.def(
      "einstein_check",
      [](const StrMap& p) {
        const EinsteinVerdict v = einstein_check(potential(p));
        py::dict out;
        out["einstein"] = v.einstein;
        out["tensor_route_einstein"] = v.tensor_route_einstein;
        out["R"] = v.R.str();
        out["second_derivatives"] = residual_map(v.second_derivatives);
        return out;
      },
      py::arg("potential"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool in process; returns (exit code, stdout, stderr).");
}
