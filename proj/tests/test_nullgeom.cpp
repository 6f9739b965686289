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
#include "walkernp/heavenly.hpp"
#include "walkernp/nullgeom.hpp"

using namespace wnp;

namespace {
Poly P(const char* s) { return parse_poly(s); }
const PrimedSpinorField kLsr{RF(1), RF(0)};

bool zero(const DyadSpinorField& f) { return f.is_zero(); }
template <std::size_t N>
bool zero(const std::array<RF, N>& a) {
  for (const RF& x : a)
    if (!x.is_zero()) return false;
  return true;
}
bool zero(const Residuals& r) {
  for (const auto& [k, v] : r)
    if (!v.is_zero()) return false;
  return true;
}
}  // namespace

TEST_CASE("alpha integrability") {
  for (const WalkerMetric& w : testing::random_walkers(51, 5)) {
    const WalkerFrameData d = walker_frame_data(w);
    CHECK(zero(alpha_integrability_residual(kLsr, d.s, d.t)));
  }
  const WalkerFrameData flat = walker_frame_data({});
  CHECK(zero(alpha_integrability_residual({RF(0), RF(1)}, flat.s, flat.t)));
  // l + u m and mt + u n bracket to d/dx, outside their span
  CHECK_FALSE(zero(alpha_integrability_residual({RF(1), RF(P("u"))}, flat.s, flat.t)));
  CHECK(zero(alpha_integrability_residual({RF(P("v")), RF(P("x"))}, flat.s, flat.t)));
  CHECK_THROWS_AS(s_and_t_forms({RF(1), RF(P("u"))}, flat.s, flat.m, flat.t), std::invalid_argument);
}

TEST_CASE("property: S vanishes exactly when the tilde pattern holds") {
  for (const WalkerMetric& w : testing::random_walkers(52, 6)) {
    const WalkerFrameData d = walker_frame_data(w);
    const STForms f = s_and_t_forms(kLsr, d.s, d.m, d.t);
    CHECK(zero(f.S));
    CHECK(zero(f.omega));
    CHECK(zero(f.lemma_residual));
    for (sc::Base b : {sc::kappa, sc::sigma, sc::rho, sc::tau}) CHECK(d.s[sc::t(b)].is_zero());
    const WpsResult wps = wps_tests(kLsr, d.c);
    CHECK(wps.quartic.is_zero());
    CHECK(zero(wps.lambda));
    CHECK_THROWS_AS(kerr_check(kLsr, d.s, d.c, d.m, d.t), std::invalid_argument);
    const NablaPiSquare sq = nabla_pi_square(kLsr, d.s, d.m, d.t);
    CHECK(sq.lhs.is_zero());
    CHECK(sq.lhs == sq.rhs);
  }
}

TEST_CASE("a non-Walker integrable distribution on flat space") {
  const WalkerFrameData flat = walker_frame_data({});
  const PrimedSpinorField pi{RF(P("v")), RF(P("x"))};
  const STForms f = s_and_t_forms(pi, flat.s, flat.m, flat.t);
  CHECK_FALSE(zero(f.S));
  CHECK(zero(f.lemma_residual));
  const KerrReport k = kerr_check(pi, flat.s, flat.c, flat.m, flat.t);
  CHECK(k.hypothesis);
  CHECK(k.consistent());
  CHECK(zero(frobenius_check(f.S)));
  // the left side of the squared-derivative identity vanishes for any field
  CHECK(nabla_pi_square(pi, flat.s, flat.m, flat.t).lhs.is_zero());

  // scaling pi by a function scales S quadratically and omega linearly
  const RF lam(P("2 + x"));
  const STForms g = s_and_t_forms({lam * pi.p, lam * pi.q}, flat.s, flat.m, flat.t);
  for (int i = 0; i < 4; ++i) CHECK(g.S[i] == lam * lam * f.S[i]);
  for (int i = 0; i < 2; ++i) CHECK(g.omega[i] == lam * f.omega[i]);
}

TEST_CASE("Frobenius test") {
  const Vec4 dx{RF(0), RF(0), RF(1), RF(0)};
  CHECK(zero(frobenius_check(dx)));
  CHECK_FALSE(zero(frobenius_check({RF(1), RF(P("x")), RF(0), RF(0)})));
  std::mt19937_64 rng(53);
  for (int i = 0; i < 10; ++i) {
    const Poly F = testing::random_poly(rng, 4, 5);
    CHECK(zero(frobenius_check({RF(F.diff(U)), RF(F.diff(V)), RF(F.diff(X)), RF(F.diff(Y))})));
  }
}

TEST_CASE("GGST condition (iii)") {
  const WalkerFrameData flat = walker_frame_data({});
  const WalkerFrameData ein = walker_frame_data(build_metric({P("u*v*x"), Poly(), Poly(), Poly(), Poly(), Poly()}));
  const WalkerFrameData bu3 = walker_frame_data({Poly(), P("u^3"), Poly(), ""});
  for (int q = 2; q <= 4; ++q) {
    CHECK(zero(ggst_condition_iii(kLsr, q, flat.c, flat.s, flat.t)));
    CHECK(zero(ggst_condition_iii({RF(P("v")), RF(P("x"))}, q, bu3.c, bu3.s, bu3.t)));
  }
  CHECK(zero(ggst_condition_iii(kLsr, 2, ein.c, ein.s, ein.t)));
  const WpsResult wps = wps_tests(kLsr, ein.c);
  CHECK(zero(wps.lambda));
}

TEST_CASE("WPS multiplicity on the scalar-flat example") {
  const WalkerFrameData d = walker_frame_data(build_metric(testing::scalar_flat(Poly(), P("y^2"), Poly())));
  const WpsResult wps = wps_tests(kLsr, d.c);
  CHECK(wps.quartic.is_zero());
  CHECK(zero(wps.lambda));
  CHECK_FALSE(d.c.tPsi[3].is_zero());
}

TEST_CASE("type I and type III flags") {
  const WalkerFrameData bu3 = walker_frame_data({Poly(), P("u^3"), Poly(), ""});
  const TypeIFlags t1 = classify_type_I(bu3.s);
  CHECK(t1.auto_parallel.value);
  CHECK_FALSE(t1.parallel.value);
  const TypeIIIFlags t3 = classify_type_III(bu3.s, bu3.c);
  CHECK(t3.integrable.value);
  CHECK_FALSE(t3.auto_parallel.value);

  const WalkerFrameData flat = walker_frame_data({});
  CHECK(classify_type_I(flat.s).parallel.value);
  CHECK(classify_type_III(flat.s, flat.c).parallel.value);

  // parallel iff b_u = c_u = 0
  const WalkerFrameData par = walker_frame_data({P("u^2*x"), P("v^2"), P("v*x"), ""});
  CHECK(classify_type_I(par.s).parallel.value);
  for (const WalkerMetric& w : testing::random_walkers(54, 5)) {
    const WalkerFrameData d = walker_frame_data(w);
    CHECK(classify_type_I(d.s).auto_parallel.value);
    CHECK(classify_type_I(d.s).parallel.value == (w.b.diff(U).is_zero() && w.c.diff(U).is_zero()));
    const TypeIIIFlags f = classify_type_III(d.s, d.c);
    if (f.auto_parallel.value)
      for (const auto& [k, v] : f.auto_parallel_consequences) CHECK_MESSAGE(v.is_zero(), k);
    if (f.parallel.value)
      for (const auto& [k, v] : f.parallel_consequences) CHECK_MESSAGE(v.is_zero(), k);
  }
  // a type III parallel example: both consequences Psi2 + 2 Lambda = 0 = ~Psi2 + 2 Lambda
  const WalkerFrameData tp = walker_frame_data({P("x^2 + y^2"), Poly(), Poly(), ""});
  const TypeIIIFlags f = classify_type_III(tp.s, tp.c);
  if (f.parallel.value) CHECK(zero(f.parallel_consequences));
}

TEST_CASE("Ricci conditions") {
  for (const WalkerMetric& w : testing::random_walkers(55, 4)) {
    const WalkerFrameData d = walker_frame_data(w);
    CHECK(ricci_conditions(kLsr, d.c).aligned.value);
  }
  const WalkerMetric a4{P("v^4"), Poly(), Poly(), ""};
  CHECK(zero(walker_ricci_null_residuals(a4)));
  CHECK(ricci_conditions(kLsr, walker_frame_data(a4).c).null.value);

  std::mt19937_64 rng(56);
  for (int i = 0; i < 4; ++i) {
    const WalkerMetric w = build_metric(testing::random_potential(rng, 4));
    CHECK(zero(walker_ricci_null_residuals(w)));
    CHECK(ricci_conditions(kLsr, walker_frame_data(w).c).null.value);
  }
  CHECK_FALSE(zero(walker_ricci_null_residuals({P("u^2"), Poly(), Poly(), ""})));
}

TEST_CASE("relation suites") {
  const std::vector<std::string> universal = {"walker-spin",      "induced-flat",           "walker-tilde",
                                              "walker-curvature", "hypersurface-integrable", "hypersurface-walker"};
  for (const WalkerMetric& w : testing::random_walkers(57, 6)) {
    const WalkerFrameData d = walker_frame_data(w);
    for (const auto& n : universal) CHECK_MESSAGE(zero(relation_suite(d.s, d.c, n)), n);
  }
  const auto& names = relation_suite_names();
  CHECK(names.size() == 9);
  for (const auto& n : universal) CHECK(std::find(names.begin(), names.end(), n) != names.end());
  const WalkerFrameData flat = walker_frame_data({});
  for (const auto& n : names)
    if (n != "ricci-aligned") CHECK_MESSAGE(zero(relation_suite(flat.s, flat.c, n)), n);
  // the aligned suite presumes an adapted frame with alpha = -1
  CHECK_FALSE(zero(relation_suite(flat.s, flat.c, "ricci-aligned")));
  CHECK_THROWS_AS(relation_suite(flat.s, flat.c, "no-such-suite"), std::invalid_argument);
}

TEST_CASE("distribution report for the Walker LSR") {
  const WalkerFrameData d = walker_frame_data({Poly(), P("u^3"), Poly(), ""});
  const DistributionReport r = distribution_report(d, kLsr);
  CHECK(r.alpha_integrable.value);
  CHECK(r.walker.value);
  CHECK(r.auto_parallel.value);
  CHECK(r.typeIII_integrable.value);
  CHECK(r.ricci_null.value);
  CHECK(r.ricci_aligned.value);
}
