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

#include "walkernp/heavenly.hpp"

#include <algorithm>

#include "walkernp/spincoeff.hpp"

namespace wnp {

namespace {

const Poly& u() {
  static const Poly p = Poly::var(U);
  return p;
}
const Poly& v() {
  static const Poly p = Poly::var(V);
  return p;
}

void require_valid(const HeavenlyPotential& p) {
  PotentialReport r = validate_potential(p);
  if (!r.valid) throw InvalidPotential("invalid heavenly potential", std::move(r.violations));
}

CurvatureSpinors curvature_of(const HeavenlyPotential& p) { return walker_curvature_components(build_metric(p)); }

}  // namespace

PotentialReport validate_potential(const HeavenlyPotential& p) {
  Residuals all = {
      {"f1 - g2", RF(p.f.diff(U) - p.g.diff(V))},
      {"f1 - h", RF(p.f.diff(U) - p.h)},
      {"g2 - h", RF(p.g.diff(V) - p.h)},
      {"F1 - f", RF(p.F.diff(U) - p.f)},
      {"G2 - g", RF(p.G.diff(V) - p.g)},
      {"d f / dv", RF(p.f.diff(V))},
      {"d g / du", RF(p.g.diff(U))},
      {"d F / dv", RF(p.F.diff(V))},
      {"d G / du", RF(p.G.diff(U))},
      {"d h / du", RF(p.h.diff(U))},
      {"d h / dv", RF(p.h.diff(V))},
  };
  PotentialReport r;
  for (auto& [name, val] : all)
    if (!val.is_zero()) r.violations.emplace_back(name, val);
  r.valid = r.violations.empty();
  return r;
}

WalkerMetric build_metric(const HeavenlyPotential& p) {
  require_valid(p);
  WalkerMetric w;
  w.a = Poly(-2) * p.theta.diff({V, V}) + p.F;
  w.b = Poly(-2) * p.theta.diff({U, U}) + p.G;
  w.c = Poly(2) * p.theta.diff({U, V});
  w.label = "heavenly";
  return w;
}

Poly box(const HeavenlyPotential& p, const Poly& H) {
  const WalkerMetric w = build_metric(p);
  return -w.a * H.diff({U, U}) - Poly(2) * w.c * H.diff({U, V}) - w.b * H.diff({V, V}) + Poly(2) * H.diff({U, X}) +
         Poly(2) * H.diff({V, Y}) - p.f * H.diff(U) - p.g * H.diff(V);
}

HeavenlyInvariants invariants(const HeavenlyPotential& p) {
  require_valid(p);
  const Poly& th = p.theta;
  const Rational half(1, 2), quarter(1, 4);
  HeavenlyInvariants r;
  r.S = Poly(2) * p.h;
  r.BplusSc = Poly(2) * (p.f.diff(Y) - p.g.diff(X));
  const Poly t12 = th.diff({U, V});
  r.P = th.diff({U, X}) + th.diff({V, Y}) + th.diff({U, U}) * th.diff({V, V}) - t12 * t12;
  r.Q = (p.g * th.diff(V) - p.G * th.diff({V, V}) + p.f * th.diff(U) - p.F * th.diff({U, U}) - p.h * th) * half;
  r.T = -(v() * p.F.diff(Y) + u() * p.G.diff(X)) * quarter;
  r.R = r.P + r.Q + r.T;
  const Poly pq = r.P + r.Q;
  r.A00 = pq.diff({U, U});
  r.A01 = r.R.diff({U, V});
  r.A11 = pq.diff({V, V});
  return r;
}

IdentityCheck identity_check(const HeavenlyPotential& p) {
  const HeavenlyInvariants inv = invariants(p);
  const CurvatureSpinors c = curvature_of(p);
  const Poly& R = inv.R;
  const Poly& f = p.f;
  const Poly& g = p.g;
  const Poly& F = p.F;
  const Poly& G = p.G;
  const Poly& h = p.h;

  IdentityCheck r;
  r.lhs = (RF(-24) * c.tPsi[4]).as_poly();
  r.rhs = Poly(12) * box(p, R) + Poly(24) * f * R.diff(U) + Poly(24) * g * R.diff(V) -
          Poly(3) * (f * G.diff(X) + g * F.diff(Y)) - Poly(6) * (F.diff({Y, Y}) + G.diff({X, X})) +
          Poly(3) * (v() * f * f.diff(Y) + u() * g * g.diff(X)) + Poly(6) * (v() * f.diff({X, Y}) + u() * g.diff({X, Y})) -
          Poly(3) * v() * h.diff(Y) * (F - Poly(2) * p.theta.diff({V, V})) -
          Poly(3) * u() * h.diff(X) * (G - Poly(2) * p.theta.diff({U, U}));
  r.residual = r.lhs - r.rhs;
  return r;
}

Poly delta_lower(const Poly& f, const std::vector<int>& indices) {
  Poly r = f;
  for (int i : indices) r = r.diff(i == 0 ? U : V);
  return r;
}

bool PsiComparison::consistent() const {
  for (int k = 0; k < 5; ++k)
    if (direct[k] != delta4[k] || RF(direct[k]) != curvature[k]) return false;
  return true;
}

PsiComparison psi_components(const HeavenlyPotential& p) {
  require_valid(p);
  const Poly& th = p.theta;
  PsiComparison out;
  out.direct = {-th.diff({U, U, U, U}), -th.diff({U, U, U, V}), -th.diff({U, U, V, V}) + p.h * Rational(1, 6),
                -th.diff({U, V, V, V}), -th.diff({V, V, V, V})};

  // Upper-index form: delta^0 = d/dv, delta^1 = -d/du on functions, so a
  // component with q upper indices equal to 1 is (-1)^q d^q/du^q d^(4-q)/dv^(4-q).
  const Poly pot = th - u() * u() * v() * v() * p.h * Rational(1, 24);
  DyadSpinorField up(std::vector<Slot>(4, Slot::UnprimedUpper));
  for (std::size_t i = 0; i < up.size(); ++i) {
    const auto mi = up.multi(i);
    const auto q = std::count(mi.begin(), mi.end(), 1);
    Poly d = pot;
    for (long k = 0; k < q; ++k) d = d.diff(U);
    for (long k = q; k < 4; ++k) d = d.diff(V);
    up[i] = RF(q % 2 ? d : -d);
  }
  DyadSpinorField low = up;
  for (std::size_t s = 0; s < 4; ++s) low = lower_slot(low, s);
  for (int k = 0; k < 5; ++k) {
    std::vector<int> idx(4, 0);
    for (int j = 0; j < k; ++j) idx[3 - j] = 1;
    out.delta4[k] = low.at(idx).as_poly();
  }
  out.curvature = curvature_of(p).Psi;
  return out;
}

ScalarFlatReport scalar_flat_case(const HeavenlyPotential& p) {
  require_valid(p);
  if (!p.h.is_zero()) throw std::invalid_argument("scalar-flat case needs h = 0");
  if (p.f.depends_on(U) || p.g.depends_on(V)) throw std::invalid_argument("scalar-flat case needs f, g functions of (x, y)");
  if (p.F != u() * p.f || p.G != v() * p.g) throw std::invalid_argument("scalar-flat case needs F = u f and G = v g");

  const Poly& th = p.theta;
  const Poly& f = p.f;
  const Poly& g = p.g;
  const Rational half(1, 2), quarter(1, 4), eighth(1, 8);
  const Poly t12 = th.diff({U, V});
  const Poly P = th.diff({U, X}) + th.diff({V, Y}) + th.diff({U, U}) * th.diff({V, V}) - t12 * t12;
  const Poly Q = (g * (th.diff(V) - v() * th.diff({V, V})) + f * (th.diff(U) - u() * th.diff({U, U}))) * half;
  const Poly T = -(u() * v() * (f.diff(Y) + g.diff(X))) * quarter;

  ScalarFlatReport r;
  r.R = P + Q + T;
  const Poly k = f.diff(Y) - g.diff(X);
  r.tPsi3 = (g.diff(X) - f.diff(Y)) * quarter;
  r.tPsi4 = -box(p, r.R) * half - f * r.R.diff(U) - g * r.R.diff(V) + (u() * g - v() * f) * k * eighth +
            (u() * k.diff(Y) - v() * k.diff(X)) * quarter;

  const WalkerMetric w = build_metric(p);
  const CurvatureSpinors c = walker_curvature_components(w);
  r.tPsi3_curvature = c.tPsi[3];
  r.tPsi4_curvature = c.tPsi[4];
  r.A00 = delta_lower(r.R, {0, 0});
  r.A01 = delta_lower(r.R, {0, 1});
  r.A11 = delta_lower(r.R, {1, 1});

  const MetricTensor m = assemble_metric(w);
  const PhiLambda pl = phi_lambda_from_ricci(riemann(m, christoffel(m)), m, walker_tetrad(w));
  r.phi_residuals = {{"A00 - Phi02", RF(r.A00) - pl.Phi[0][2]},
                     {"A01 - Phi12", RF(r.A01) - pl.Phi[1][2]},
                     {"A11 - Phi22", RF(r.A11) - pl.Phi[2][2]}};

  // With S = 0: B = -8 Psi~3 and A = 6 B c - 24 Psi~4.
  const Poly B = r.tPsi3 * Rational(-8);
  const Poly A = Poly(6) * B * w.c - Poly(24) * r.tPsi4;
  if (B.is_zero() && A.is_zero()) r.label = "SD-flat";
  else if (!B.is_zero()) r.label = "{31}III";
  else r.label = "{4}II";
  return r;
}

EinsteinVerdict einstein_check(const HeavenlyPotential& p) {
  const ScalarFlatReport sf = scalar_flat_case(p);
  EinsteinVerdict v;
  v.R = sf.R;
  v.second_derivatives = {{"A00", RF(sf.R.diff({U, U}))},
                          {"A01", RF(sf.R.diff({U, V}))},
                          {"A11", RF(sf.R.diff({V, V}))}};
  v.einstein = true;
  for (const auto& [n, r] : v.second_derivatives) v.einstein = v.einstein && r.is_zero();

  const WalkerMetric w = build_metric(p);
  const MetricTensor m = assemble_metric(w);
  const PhiLambda pl = phi_lambda_from_ricci(riemann(m, christoffel(m)), m, walker_tetrad(w));
  v.tensor_route_einstein = true;
  for (const auto& row : pl.Phi)
    for (const auto& x : row) v.tensor_route_einstein = v.tensor_route_einstein && x.is_zero();
  return v;
}

HeavenlyPotential walker_swap(const HeavenlyPotential& p) {
  static constexpr std::array<int, 4> perm = {1, 0, 3, 2};
  return {p.theta.permute(perm), p.g.permute(perm), p.f.permute(perm),
          p.G.permute(perm),     p.F.permute(perm), p.h.permute(perm)};
}

WalkerMetric walker_swap(const WalkerMetric& w) {
  static constexpr std::array<int, 4> perm = {1, 0, 3, 2};
  return {w.b.permute(perm), w.a.permute(perm), w.c.permute(perm), w.label};
}

}  // namespace wnp
