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

#ifndef WALKERNP_HEAVENLY_HPP
#define WALKERNP_HEAVENLY_HPP

#include <array>
#include <stdexcept>
#include <string>

#include "walkernp/curvature.hpp"
#include "walkernp/walker.hpp"

namespace wnp {

// Potential data for a Ricci-null Walker metric:
//   theta(u,v,x,y), f(u,x,y), g(v,x,y), F(u,x,y), G(v,x,y), h(x,y)
// with f_u = g_v = h, F_u = f, G_v = g.
struct HeavenlyPotential {
  Poly theta, f, g, F, G, h;
};

struct PotentialReport {
  bool valid = true;
  Residuals violations;  // only the nonzero residuals
};
PotentialReport validate_potential(const HeavenlyPotential& p);

class InvalidPotential : public std::invalid_argument {
 public:
  InvalidPotential(const std::string& msg, Residuals r) : std::invalid_argument(msg), residuals_(std::move(r)) {}
  const Residuals& residuals() const { return residuals_; }

 private:
  Residuals residuals_;
};

// a = -2 theta_vv + F, b = -2 theta_uu + G, c = 2 theta_uv. Throws InvalidPotential.
WalkerMetric build_metric(const HeavenlyPotential& p);

// The second-order operator -a H_uu - 2c H_uv - b H_vv + 2 H_ux + 2 H_vy - f H_u - g H_v.
Poly box(const HeavenlyPotential& p, const Poly& H);

struct HeavenlyInvariants {
  Poly S, BplusSc, P, Q, T, R;
  Poly A00, A01, A11;
};
HeavenlyInvariants invariants(const HeavenlyPotential& p);

// A - 6Bc - S(3c^2 - 1) from curvature (left) against the potential expression (right).
struct IdentityCheck {
  Poly lhs, rhs, residual;
};
IdentityCheck identity_check(const HeavenlyPotential& p);

// Psi_0..Psi_4 three ways: the fourth-derivative forms, the delta^4 potential
// form (evaluated on upper indices and lowered), and the curvature route.
struct PsiComparison {
  std::array<Poly, 5> direct, delta4;
  std::array<RF, 5> curvature;
  bool consistent() const;
};
PsiComparison psi_components(const HeavenlyPotential& p);

// delta_{A_1} ... delta_{A_k} on a function for lower indices: delta_0 = d/du, delta_1 = d/dv.
Poly delta_lower(const Poly& f, const std::vector<int>& indices);

struct ScalarFlatReport {
  Poly tPsi3, tPsi4;  // closed forms
  RF tPsi3_curvature, tPsi4_curvature;
  Poly R;
  Poly A00, A01, A11;  // delta_A delta_B R
  Residuals phi_residuals;  // A against tensor-route Phi02, Phi12, Phi22
  std::string label;        // generic type where B (or A) does not vanish
};
// Requires h = 0, F = u f, G = v g with f, g functions of (x, y).
ScalarFlatReport scalar_flat_case(const HeavenlyPotential& p);

struct EinsteinVerdict {
  bool einstein = false;          // R affine in u and v
  Poly R;
  Residuals second_derivatives;   // A00, A01, A11: R_uu, R_uv, R_vv
  bool tensor_route_einstein = false;
  bool agree() const { return einstein == tensor_route_einstein; }
};
EinsteinVerdict einstein_check(const HeavenlyPotential& p);

// u <-> v, x <-> y with f <-> g, F <-> G (and a <-> b on metrics).
HeavenlyPotential walker_swap(const HeavenlyPotential& p);
WalkerMetric walker_swap(const WalkerMetric& w);

}  // namespace wnp

#endif  // WALKERNP_HEAVENLY_HPP
