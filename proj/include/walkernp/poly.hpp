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

#ifndef WALKERNP_POLY_HPP
#define WALKERNP_POLY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace wnp {

using Rational = mpq_class;

// Coordinate slots. Subscripts 1..4 in the usual notation map to 0..3 here.
enum Var : int { U = 0, V = 1, X = 2, Y = 3 };

using Point = std::array<Rational, 4>;
using Exponents = std::array<unsigned, 4>;

// Sparse polynomial in (u,v,x,y) with rational coefficients.
//
// Terms are kept sorted by a packed 64-bit exponent key (16 bits per
// variable, u in the high word), which orders monomials lexicographically
// with u > v > x > y. Zero coefficients are never stored, so the zero
// polynomial is exactly the empty term list.
class Poly {
 public:
  using Key = std::uint64_t;
  struct Term {
    Key key;
    Rational coef;
  };

  Poly() = default;
  Poly(long c);                   // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);        // NOLINT(google-explicit-constructor)

  static Poly var(int i);
  static Poly monomial(const Rational& c, const Exponents& e);

  static Key pack(const Exponents& e);
  static Exponents unpack(Key k);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  int total_degree() const;
  int degree_in(int var) const;
  bool depends_on(int var) const { return degree_in(var) > 0; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned n) const;
  Poly diff(int var) const;
  Poly diff(std::initializer_list<int> vars) const;

  Rational eval(const Point& p) const;

  // Rename variables: variable i of *this becomes variable perm[i].
  Poly permute(const std::array<int, 4>& perm) const;

  // Leading term in the lexicographic order; precondition !is_zero().
  const Term& leading() const { return terms_.back(); }

  // Exact quotient when den divides num, otherwise nullopt.
  static std::optional<Poly> divide_exact(const Poly& num, const Poly& den);

  // Canonical text form, re-readable by parse_poly.
  std::string str() const;

 private:
  explicit Poly(std::vector<Term> t) : terms_(std::move(t)) {}
  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract);

  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// Quotient of polynomials. The denominator is kept monic (leading
// coefficient 1) and constant denominators are folded into the numerator,
// so polynomial values round-trip without any division overhead.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}                  // NOLINT
  RationalFunction(const Rational& c) : num_(c), den_(1) {}       // NOLINT
  RationalFunction(Poly p) : num_(std::move(p)), den_(1) {}       // NOLINT
  RationalFunction(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_constant(); }
  // Numerator when the denominator is 1; throws otherwise.
  const Poly& as_poly() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  RationalFunction diff(int var) const;
  RationalFunction inverse() const;

  // Throws std::domain_error where the denominator vanishes.
  Rational eval(const Point& p) const;
  double eval_double(const Point& p) const { return eval(p).get_d(); }

  std::string str() const;

 private:
  void normalize();
  Poly num_, den_;
};

using RF = RationalFunction;

std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

// Expression grammar: rationals, u v x y, + - * ^ (non-negative integer
// exponents) and parentheses. Division appears only inside a numeric
// literal "p/q".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

Poly parse_poly(std::string_view text);

}  // namespace wnp

#endif  // WALKERNP_POLY_HPP
