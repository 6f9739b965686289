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
#include "walkernp/poly.hpp"

using namespace wnp;

namespace {
Poly P(const char* s) { return parse_poly(s); }
}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK((P("u^2*v") + P("-u^2*v")).is_zero());
  CHECK(P("u+v") * P("u-v") == P("u^2 - v^2"));
  CHECK(P("3*u^3") - P("u^3") == P("2*u^3"));
  CHECK(P("u").pow(3) == P("u*u*u"));
}

TEST_CASE("differentiation examples") {
  CHECK(P("u^2*v").diff(U) == P("2*u*v"));
  CHECK(P("u^2*v").diff(Y).is_zero());
  CHECK(P("u*v*x").diff(U).diff(X) == P("v"));
  CHECK(P("u*v*x").diff(X).diff(U) == P("v"));
}

TEST_CASE("evaluation examples") {
  CHECK(P("u^2*v").eval({2, 3, 0, 0}) == 12);
  CHECK(Poly().eval({1, 2, 3, 4}) == 0);
  CHECK(P("u+y").eval({1, 0, 0, -1}) == 0);
  CHECK(P("1/2*x").eval({0, 0, Rational(2, 3), 0}) == Rational(1, 3));
}

TEST_CASE("parser examples and errors") {
  CHECK(P("3*u^2*v - x") == Poly::monomial(3, {2, 1, 0, 0}) - Poly::var(X));
  CHECK(P("u*(u+v)") == P("u^2 + u*v"));
  CHECK(P("2/3*y^4") == Poly::monomial(Rational(2, 3), {0, 0, 0, 4}));
  CHECK(P("  u  *  v ") == P("u*v"));
  CHECK(P("-(u - 1)^2") == P("-u^2 + 2*u - 1"));
  CHECK_THROWS_AS(P("u*+"), ParseError);
  CHECK_THROWS_AS(P("z"), ParseError);
  CHECK_THROWS_AS(P("u/v"), ParseError);
  CHECK_THROWS_AS(P("(u"), ParseError);
  try {
    P("u + q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("rational coefficients stay in lowest terms") {
  const Poly p = P("6/4*u");
  CHECK(p.terms().front().coef == Rational(3, 2));
  CHECK(p.terms().front().coef.get_den() > 0);
}

TEST_CASE("property: ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const Poly a = testing::random_poly(rng, 4, 5), b = testing::random_poly(rng, 4, 5),
               c = testing::random_poly(rng, 3, 4);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(a + Poly() == a);
    CHECK(a * Poly(1) == a);
  }
}

TEST_CASE("property: mixed partials commute and Leibniz holds") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 40; ++i) {
    const Poly a = testing::random_poly(rng, 5, 6), b = testing::random_poly(rng, 3, 3);
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q) CHECK(a.diff(p).diff(q) == a.diff(q).diff(p));
    for (int p = 0; p < 4; ++p) CHECK((a * b).diff(p) == a.diff(p) * b + a * b.diff(p));
  }
}

TEST_CASE("property: print then parse is the identity") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 60; ++i) {
    const Poly a = testing::random_poly(rng, 5, 6);
    CHECK(parse_poly(a.str()) == a);
  }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  std::mt19937_64 rng(14);
  const Point pt{Rational(1, 2), -2, 3, Rational(-5, 7)};
  for (int i = 0; i < 30; ++i) {
    const Poly a = testing::random_poly(rng, 4, 5), b = testing::random_poly(rng, 4, 5);
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
  }
}

TEST_CASE("zero test is exact on canonical form") {
  CHECK(Poly().is_zero());
  CHECK(Poly().size() == 0);
  CHECK((P("u*v") * P("0")).is_zero());
  CHECK_FALSE(P("1/1000000*y^7").is_zero());
}

TEST_CASE("rational functions") {
  const RF r(P("u^2 - v^2"), P("u - v"));
  CHECK(r.is_poly());
  CHECK(r.as_poly() == P("u + v"));
  const RF s(P("1"), P("1 + u"));
  CHECK((s * RF(P("1 + u"))) == RF(1));
  CHECK(s.diff(U) == RF(P("-1"), P("(1 + u)^2")));
  CHECK(s.eval({1, 0, 0, 0}) == Rational(1, 2));
  CHECK_THROWS_AS(s.eval({-1, 0, 0, 0}), std::domain_error);
  CHECK_THROWS(RF(P("u"), Poly()));
  CHECK((s - s).is_zero());
  CHECK(s.inverse() == RF(P("1 + u")));
}

TEST_CASE("property: rational function field operations") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 20; ++i) {
    const Poly a = testing::random_poly(rng, 2, 3), b = testing::random_poly(rng, 1, 2).pow(2) + Poly(1);
    const Poly c = testing::random_poly(rng, 2, 3), d = testing::random_poly(rng, 1, 2).pow(2) + Poly(2);
    const RF x(a, b), y(c, d);
    CHECK((x + y) - y == x);
    CHECK((x * y).diff(V) == x.diff(V) * y + x * y.diff(V));
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}
