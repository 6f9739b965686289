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
#include "walkernp/walker.hpp"

using namespace wnp;

namespace {
Poly P(const char* s) { return parse_poly(s); }
RF R(const char* s) { return RF(parse_poly(s)); }

bool vec_eq(const Vec4& a, const Vec4& b) {
  for (int i = 0; i < 4; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Vec4 combo(const RF& p, const Vec4& a, const RF& q, const Vec4& b) {
  Vec4 out;
  for (int i = 0; i < 4; ++i) out[i] = p * a[i] + q * b[i];
  return out;
}
}  // namespace

TEST_CASE("metric assembly") {
  const MetricTensor flat = assemble_metric({Poly(), Poly(), Poly(), ""});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(flat.g[i][j] == Poly((i + 2 == j || j + 2 == i) ? 1 : 0));

  const MetricTensor m = assemble_metric({Poly(1), Poly(1), Poly(), ""});
  CHECK(m.g[2][2] == Poly(1));
  CHECK(m.g[3][3] == Poly(1));
  CHECK(m.g[0][2] == Poly(1));
  CHECK(m.g[1][3] == Poly(1));
  CHECK(m.g[2][3].is_zero());
}

TEST_CASE("property: inverse metric, symmetric connection, compatibility") {
  for (const WalkerMetric& w : testing::random_walkers(21, 10)) {
    const MetricTensor m = assemble_metric(w);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Poly s;
        for (int k = 0; k < 4; ++k) s += m.g[i][k] * m.ginv[k][j];
        CHECK(s == Poly(i == j ? 1 : 0));
      }
    CHECK(m.ginv[0][0] == -w.a);
    CHECK(m.ginv[0][1] == -w.c);
    CHECK(m.ginv[1][1] == -w.b);
    const Christoffel gam = christoffel(m);
    for (int k = 0; k < 4; ++k) {
      CHECK(gam(k, 0, 0).is_zero());
      CHECK(gam(k, 1, 1).is_zero());
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(gam(k, i, j) == gam(k, j, i));
    }
    for (const Poly& r : metric_compatibility_residuals(m, gam)) CHECK(r.is_zero());
  }
}

TEST_CASE("compatibility for b = u^3 and a flat connection") {
  const MetricTensor m = assemble_metric({Poly(), P("u^3"), Poly(), ""});
  for (const Poly& r : metric_compatibility_residuals(m, christoffel(m))) CHECK(r.is_zero());
  const Christoffel flat = christoffel(assemble_metric({}));
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(flat(k, i, j).is_zero());
}

TEST_CASE("Walker tetrad") {
  const Tetrad flat = walker_tetrad({});
  CHECK(vec_eq(flat.n, {RF(0), RF(0), RF(1), RF(0)}));
  CHECK(vec_eq(flat.m, {RF(0), RF(0), RF(0), RF(-1)}));

  for (const WalkerMetric& w : testing::random_walkers(22, 8)) {
    const MetricTensor m = assemble_metric(w);
    const Tetrad t = walker_tetrad(w);
    CHECK(dot(m, t.l, t.n) == RF(1));
    CHECK(dot(m, t.m, t.mt) == RF(-1));
    for (const RF& r : tetrad_normalization_residuals(m, t)) CHECK(r.is_zero());
    // g_ab = 2 l_(a n_b) - 2 m_(a mt_b)
    const Vec4 l = lower(m, t.l), n = lower(m, t.n), mm = lower(m, t.m), mt = lower(m, t.mt);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        CHECK(RF(m.g[a][b]) == l[a] * n[b] + n[a] * l[b] - mm[a] * mt[b] - mt[a] * mm[b]);
    CHECK_NOTHROW(require_spin_frame(m, t));
  }
}

TEST_CASE("Infeld-van der Waerden symbols") {
  const WalkerMetric w{P("x*y"), P("u^2 - v"), P("u*y"), ""};
  const IvdWSymbols s = ivdw_symbols(w);
  CHECK(s.to_dyad[0][0][0] == Poly(1));
  CHECK(s.to_dyad[0][0][1].is_zero());
  CHECK(s.to_dyad[0][1][0].is_zero());
  CHECK(s.to_dyad[0][1][1].is_zero());
  CHECK(s.to_coord[2][1][1] == Poly(1));
  CHECK(s.to_coord[2][0][0].is_zero());
  CHECK(s.to_coord[2][0][1].is_zero());
  CHECK(s.to_coord[2][1][0].is_zero());

  const Vec4 dx{RF(0), RF(0), RF(1), RF(0)};
  CHECK(vec_eq(ivdw_to_coord(s, ivdw_to_dyad(s, dx)), dx));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 10; ++i) {
    Vec4 v;
    for (auto& c : v) c = RF(testing::random_poly(rng, 3, 3));
    CHECK(vec_eq(ivdw_to_coord(s, ivdw_to_dyad(s, v)), v));
  }
}

TEST_CASE("tetrad derivatives") {
  for (const WalkerMetric& w : testing::random_walkers(24, 6)) {
    const MetricTensor m = assemble_metric(w);
    const Christoffel gam = christoffel(m);
    const Tetrad t = walker_tetrad(w);
    const Vec4 zero{};
    for (const Vec4* e : {&t.l, &t.n, &t.m, &t.mt}) {
      CHECK(vec_eq(directional_derivative(gam, t.l, *e), zero));
      CHECK(vec_eq(directional_derivative(gam, t.mt, t.l), zero));
    }
    // D' l = (a_u l + c_u mt) / 2
    const RF a1 = RF(w.a.diff(U) * Rational(1, 2)), c1 = RF(w.c.diff(U) * Rational(1, 2));
    CHECK(vec_eq(directional_derivative(gam, t.n, t.l), combo(a1, t.l, c1, t.mt)));
  }
  const WalkerMetric flat{};
  const Christoffel g0 = christoffel(assemble_metric(flat));
  const Tetrad t0 = walker_tetrad(flat);
  for (const Vec4* y : {&t0.l, &t0.n, &t0.m, &t0.mt})
    for (const Vec4* e : {&t0.l, &t0.n, &t0.m, &t0.mt}) CHECK(vec_eq(directional_derivative(g0, *y, *e), Vec4{}));
}

TEST_CASE("frame transformations") {
  const WalkerMetric w{P("x^2"), P("u*v"), P("y"), ""};
  const MetricTensor m = assemble_metric(w);
  const Tetrad t = walker_tetrad(w);

  const Tetrad id = tetrad_transform(t, {});
  CHECK(vec_eq(id.l, t.l));
  CHECK(vec_eq(id.n, t.n));
  CHECK(vec_eq(id.m, t.m));
  CHECK(vec_eq(id.mt, t.mt));

  const Tetrad s = tetrad_transform(t, {RF(2), RF(1), RF(0), RF(0)});
  CHECK(vec_eq(s.l, combo(RF(2), t.l, RF(0), t.l)));
  CHECK(vec_eq(s.n, combo(RF(Rational(1, 2)), t.n, RF(0), t.n)));
  CHECK(vec_eq(s.m, combo(RF(2), t.m, RF(0), t.m)));
  CHECK(vec_eq(s.mt, combo(RF(Rational(1, 2)), t.mt, RF(0), t.mt)));

  const Tetrad g = tetrad_transform(t, {R("1 + u^2"), R("2 + x"), R("v"), R("y - u")});
  CHECK(dot(m, g.l, g.n) == RF(1));
  CHECK(dot(m, g.m, g.mt) == RF(-1));
  for (const RF& r : tetrad_normalization_residuals(m, g)) CHECK(r.is_zero());
}

TEST_CASE("non-spin frames are rejected") {
  const WalkerMetric w{};
  const MetricTensor m = assemble_metric(w);
  Tetrad t = walker_tetrad(w);
  t.l = combo(RF(2), t.l, RF(0), t.l);
  CHECK_THROWS(require_spin_frame(m, t));
}
