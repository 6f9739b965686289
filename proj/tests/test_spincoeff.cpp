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

#include <doctest.h>

#include "support.hpp"
#include "walkernp/nullgeom.hpp"
#include "walkernp/spincoeff.hpp"

using namespace wnp;

namespace {
Poly P(const char* s) { return parse_poly(s); }

SpinCoefficientSet tetrad_route(const WalkerMetric& w) {
  const MetricTensor m = assemble_metric(w);
  return spin_coefficients_from_tetrad(m, christoffel(m), walker_tetrad(w));
}

int nonzero_count(const SpinCoefficientSet& s) {
  int n = 0;
  for (const RF& x : s.v) n += !x.is_zero();
  return n;
}
}  // namespace

TEST_CASE("names round-trip") {
  for (int i = 0; i < 32; ++i) CHECK(SpinCoefficientSet::index_of(SpinCoefficientSet::name(i)) == i);
  CHECK(SpinCoefficientSet::name(sc::idx(sc::kappa)) == "kappa");
  CHECK(SpinCoefficientSet::name(sc::tp(sc::sigma)) == "~sigma'");
  CHECK_THROWS(SpinCoefficientSet::index_of("lambda"));
}

TEST_CASE("flat and b = u^3") {
  CHECK(nonzero_count(tetrad_route({})) == 0);
  const WalkerMetric w{Poly(), P("u^3"), Poly(), ""};
  const SpinCoefficientSet s = tetrad_route(w);
  CHECK(s[sc::sigma] == RF(P("-3/2*u^2")));
  CHECK(nonzero_count(s) == 1);
  CHECK(s == walker_closed_form(w));
}

TEST_CASE("closed-form entries for a = v^2") {
  const SpinCoefficientSet s = walker_closed_form({P("v^2"), Poly(), Poly(), ""});
  CHECK(s[sc::p(sc::kappa)] == RF(P("-v")));
  CHECK(s[sc::gamma].is_zero());
  CHECK(s[sc::tp(sc::epsilon)].is_zero());
}

TEST_CASE("directional operators on functions") {
  const WalkerMetric w{P("x*y"), P("u + v^2"), P("u*x"), ""};
  const Tetrad t = walker_tetrad(w);
  CHECK(directional(t, Op::D, RF(P("u^2"))) == RF(P("2*u")));
  CHECK(directional(t, Op::Dp, RF(P("x"))) == RF(1));
  CHECK(directional(t, Op::delta, RF(P("y"))) == RF(-1));
  CHECK(directional(t, Op::Delta, RF(P("v^3"))) == RF(P("3*v^2")));
}

TEST_CASE("property: tetrad route equals closed forms; exterior derivatives; frame relations") {
  for (const WalkerMetric& w : testing::random_walkers(31, 10)) {
    const MetricTensor m = assemble_metric(w);
    const Christoffel gam = christoffel(m);
    const Tetrad t = walker_tetrad(w);
    const SpinCoefficientSet s = walker_closed_form(w);
    CHECK(spin_coefficients_from_tetrad(m, gam, t) == s);
    for (const auto& [name, form] : exterior_derivative_residuals(m, t, s))
      for (const RF& e : form) CHECK_MESSAGE(e.is_zero(), name);
    for (const auto& [name, r] : spin_frame_relations(s)) CHECK_MESSAGE(r.is_zero(), name);
    CHECK(s[sc::beta] == RF((w.b.diff(V) - w.c.diff(U)) * Rational(1, 4)));
    CHECK(s[sc::beta] == s[sc::p(sc::alpha)]);
    CHECK(s[sc::gamma] == -s[sc::p(sc::epsilon)]);
    // Walker relations between the families
    CHECK((s[sc::p(sc::alpha)] + s[sc::t(sc::alpha)] + s[sc::tau]).is_zero());
    CHECK((s[sc::beta] + s[sc::tp(sc::beta)] + s[sc::tau]).is_zero());
    CHECK((s[sc::gamma] - s[sc::t(sc::gamma)] - s[sc::p(sc::rho)]).is_zero());
    CHECK((s[sc::p(sc::epsilon)] - s[sc::tp(sc::epsilon)] + s[sc::p(sc::rho)]).is_zero());
  }
}

TEST_CASE("priming") {
  const WalkerMetric w{Poly(), P("u^3"), Poly(), ""};
  const SpinCoefficientSet pr = prime(walker_closed_form(w));
  CHECK(pr[sc::p(sc::sigma)] == RF(P("-3/2*u^2")));
  CHECK(nonzero_count(pr) == 1);

  for (const WalkerMetric& g : testing::random_walkers(32, 6)) {
    const MetricTensor m = assemble_metric(g);
    const SpinCoefficientSet s = walker_closed_form(g);
    CHECK(prime(prime(s)) == s);
    CHECK(spin_coefficients_from_tetrad(m, christoffel(m), prime_tetrad(walker_tetrad(g))) == prime(s));
  }
}

TEST_CASE("transformation laws against recomputation") {
  SpinCoefficientSet unit;
  unit[sc::kappa] = RF(1);
  const auto img = transform_coefficients(unit, {RF(2), RF(1), RF(0), RF(0)});
  CHECK(img.at(sc::kappa) == RF(8));

  const std::vector<FrameTransform> frames = {
      {RF(P("1 + u^2")), RF(P("2 + x")), RF(P("v")), RF(P("y - u"))},
      {RF(3), RF(Rational(1, 3)), RF(P("x")), RF(0)},
  };
  for (const WalkerMetric& w : testing::random_walkers(33, 3, 3)) {
    const MetricTensor m = assemble_metric(w);
    const Christoffel gam = christoffel(m);
    const SpinCoefficientSet s = walker_closed_form(w);
    for (const FrameTransform& f : frames) {
      const SpinCoefficientSet re = spin_coefficients_from_tetrad(m, gam, tetrad_transform(walker_tetrad(w), f));
      for (const auto& [i, v] : transform_coefficients(s, f)) CHECK_MESSAGE(v == re[i], SpinCoefficientSet::name(i));
      CHECK(re[sc::kappa].is_zero());
      CHECK(re[sc::t(sc::kappa)].is_zero());
    }
    // lam = 1 / lamt keeps rho, ~rho and the product sigma ~sigma
    const FrameTransform inv{RF(P("2 + x^2")), RF(1) / RF(P("2 + x^2")), RF(0), RF(0)};
    const SpinCoefficientSet re = spin_coefficients_from_tetrad(m, gam, tetrad_transform(walker_tetrad(w), inv));
    CHECK(re[sc::rho] == s[sc::rho]);
    CHECK(re[sc::t(sc::rho)] == s[sc::t(sc::rho)]);
    CHECK(re[sc::sigma] * re[sc::t(sc::sigma)] == s[sc::sigma] * s[sc::t(sc::sigma)]);
  }
}

TEST_CASE("relabelled frame along d/dv") {
  // l' = mt, n' = -m, m' = n, mt' = -l: D' operators become Delta, -delta, D', -D.
  for (const WalkerMetric& w : testing::random_walkers(34, 4)) {
    const MetricTensor m = assemble_metric(w);
    const Tetrad t = walker_tetrad(w);
    Tetrad h;
    for (int i = 0; i < 4; ++i) {
      h.l[i] = t.mt[i];
      h.n[i] = -t.m[i];
      h.m[i] = t.n[i];
      h.mt[i] = -t.l[i];
    }
    CHECK_NOTHROW(require_spin_frame(m, h));
    const RF f(P("u^2*x + v*y^2 + x*y"));
    CHECK(directional(h, Op::D, f) == directional(t, Op::Delta, f));
    CHECK(directional(h, Op::Dp, f) == -directional(t, Op::delta, f));
    CHECK(directional(h, Op::delta, f) == directional(t, Op::Dp, f));
    CHECK(directional(h, Op::Delta, f) == -directional(t, Op::D, f));
    const SpinCoefficientSet s = spin_coefficients_from_tetrad(m, christoffel(m), h);
    CHECK(s[sc::kappa].is_zero());  // d/dv is geodesic
    CHECK(s[sc::t(sc::kappa)].is_zero());
  }
}

TEST_CASE("spinor calculus") {
  // o^A has D o = Delta o = 0 in Walker frames
  for (const WalkerMetric& w : testing::random_walkers(35, 4)) {
    const SpinCoefficientSet s = walker_closed_form(w);
    const Tetrad t = walker_tetrad(w);
    DyadSpinorField o(std::vector<Slot>{Slot::UnprimedUpper});
    o.at({0}) = RF(1);
    const DyadSpinorField d = dyad_covariant_derivative(o, s, t);
    for (int A = 0; A < 2; ++A) {
      CHECK(d.at({A, 0, 0}).is_zero());  // D
      CHECK(d.at({A, 1, 0}).is_zero());  // Delta
    }

    // Walker LSR: nabla_b pi^{A'} = P_b pi^{A'} with P = (a1 + c2)/4 l_b + (b2 + c1)/4 mt_b
    const MetricTensor m = assemble_metric(w);
    const DyadSpinorField dp = dyad_covariant_derivative(as_field({RF(1), RF(0)}), s, t);
    const RF pl = RF((w.a.diff(U) + w.c.diff(V)) * Rational(1, 4));
    const RF pm = RF((w.b.diff(V) + w.c.diff(U)) * Rational(1, 4));
    Vec4 expect;
    const Vec4 lo = lower(m, t.l), mo = lower(m, t.mt);
    for (int i = 0; i < 4; ++i) expect[i] = pl * lo[i] + pm * mo[i];
    const Vec4 got = dyad_covector_to_coord(m, t, {dp.at({0, 0, 0}), dp.at({0, 0, 1}), dp.at({0, 1, 0}), dp.at({0, 1, 1})});
    for (int i = 0; i < 4; ++i) CHECK(got[i] == expect[i]);
    for (int b = 0; b < 4; ++b) CHECK(dp.at({1, b / 2, b % 2}).is_zero());
  }

  // constant components on flat space
  DyadSpinorField c(std::vector<Slot>{Slot::UnprimedUpper, Slot::PrimedLower});
  c.at({0, 1}) = RF(3);
  c.at({1, 0}) = RF(-2);
  CHECK(dyad_covariant_derivative(c, walker_closed_form({}), walker_tetrad({})).is_zero());

  // raising after lowering is the identity; double application of eps flips the sign
  DyadSpinorField x(std::vector<Slot>{Slot::UnprimedUpper, Slot::PrimedUpper});
  x.at({0, 0}) = RF(P("u"));
  x.at({0, 1}) = RF(2);
  x.at({1, 1}) = RF(P("x*y"));
  for (std::size_t k = 0; k < 2; ++k) {
    const DyadSpinorField y = raise_slot(lower_slot(x, k), k);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(y[i] == x[i]);
  }
  // kappa_A kappa^A = 0 for any rank-one spinor
  DyadSpinorField k1(std::vector<Slot>{Slot::UnprimedUpper});
  k1.at({0}) = RF(P("u + 1"));
  k1.at({1}) = RF(P("y"));
  const DyadSpinorField kk = contract_slots(tensor(lower_slot(k1, 0), k1), 0, 1);
  CHECK(kk.is_zero());
}
