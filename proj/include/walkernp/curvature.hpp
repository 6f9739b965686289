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

#ifndef WALKERNP_CURVATURE_HPP
#define WALKERNP_CURVATURE_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "walkernp/poly.hpp"
#include "walkernp/spincoeff.hpp"
#include "walkernp/walker.hpp"

namespace wnp {

using Residuals = std::vector<std::pair<std::string, RF>>;

// riemann[a][b][c][d] = R^a_{bcd}; ricci[b][d] = R^a_{bad}; scalar = g^{bd} R_bd.
struct RiemannData {
  std::array<std::array<PolyMat4, 4>, 4> riemann;
  PolyMat4 ricci;
  Poly scalar;
};

RiemannData riemann(const MetricTensor& m, const Christoffel& gam);

struct CurvatureSpinors {
  std::array<RF, 5> Psi;
  std::array<RF, 5> tPsi;
  std::array<std::array<RF, 3>, 3> Phi;
  RF Lambda, Pi, S;

  // Names used in reports: "Psi0", "~Psi3", "Phi01", "Lambda", "Pi", "S".
  std::vector<std::pair<std::string, RF>> named() const;
};

bool operator==(const CurvatureSpinors& a, const CurvatureSpinors& b);

struct PhiLambda {
  std::array<std::array<RF, 3>, 3> Phi;
  RF Lambda;
  RF S;
};

// Tensor route: Phi_ab = (R_ab - S g_ab / 4) / 2 contracted with the tetrad.
PhiLambda phi_lambda_from_ricci(const RiemannData& r, const MetricTensor& m, const Tetrad& t);

// Spin-coefficient route for Walker frames. Every component that has more
// than one closed form is returned once; the alternatives are compared by
// walker_curvature_redundancy.
CurvatureSpinors walker_curvature_components(const WalkerMetric& w);
Residuals walker_curvature_redundancy(const WalkerMetric& w);

// The 24 NP-type field equations and their tilde partners, as lhs - rhs.
// Keys: "field(a)" ... "field(l')", then "field~(a)" ... "field~(l')".
Residuals field_equation_residuals(const SpinCoefficientSet& s, const CurvatureSpinors& c, const Tetrad& t);

// The six commutators applied to f, minus their general right-hand sides.
// Keys: "[D',D]", "[delta,D]", "[D',Delta]", "[D,Delta]", "[delta,D']", "[Delta,delta]".
Residuals commutator_residuals(const SpinCoefficientSet& s, const Tetrad& t, const RF& f);
// Same commutators against their Walker-coordinate reductions.
Residuals walker_commutator_residuals(const WalkerMetric& w, const RF& f);

// nabla^a R_ab - (1/2) d_b S for b = 0..3.
std::array<Poly, 4> bianchi_contracted_check(const RiemannData& r, const MetricTensor& m, const Christoffel& gam);

// Psi'_k = (-1)^k Psi_{4-k}, Phi'_ij = (-1)^(i+j) Phi_{2-i,2-j}, same on Psi~.
CurvatureSpinors prime_curvature(const CurvatureSpinors& c);
// Psi <-> Psi~, Phi_ij <-> Phi_ji.
CurvatureSpinors tilde_swap(const CurvatureSpinors& c);

struct SdWeylClass {
  std::string label;  // "SD-flat", "{2,2}Ia", "{211}II/{1 1-bar 2}II", "{4}II", "{31}III"
  Rational A, B, S, c;
};

// The A and B combinations are recovered from Psi~3, Psi~4, S and c at the point.
SdWeylClass classify_sd_weyl(const WalkerMetric& w, const Point& point);

}  // namespace wnp

#endif  // WALKERNP_CURVATURE_HPP
