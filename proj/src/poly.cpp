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

#include "walkernp/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace wnp {

namespace {

constexpr unsigned kShift[4] = {48, 32, 16, 0};
constexpr Poly::Key kMask = 0xFFFF;
constexpr unsigned kMaxExp = 0xFFFF;
const char* const kVarNames[4] = {"u", "v", "x", "y"};

}  // namespace

Poly::Key Poly::pack(const Exponents& e) {
  Key k = 0;
  for (int i = 0; i < 4; ++i) {
    if (e[i] > kMaxExp) throw std::overflow_error("exponent exceeds 65535");
    k |= static_cast<Key>(e[i]) << kShift[i];
  }
  return k;
}

Exponents Poly::unpack(Key k) {
  Exponents e{};
  for (int i = 0; i < 4; ++i) e[i] = static_cast<unsigned>((k >> kShift[i]) & kMask);
  return e;
}

Poly::Poly(long c) {
  if (c != 0) terms_.push_back({0, Rational(c)});
}

// Inputs built as mpq_class(p, q) are not reduced by GMP; every entry point
// that accepts a caller's Rational canonicalizes its own copy.
Poly::Poly(const Rational& c) {
  if (sgn(c) == 0) return;
  terms_.push_back({0, c});
  terms_.back().coef.canonicalize();
}

Poly Poly::var(int i) {
  Exponents e{};
  e[i] = 1;
  return monomial(1, e);
}

Poly Poly::monomial(const Rational& c, const Exponents& e) {
  if (sgn(c) == 0) return {};
  Rational k = c;
  k.canonicalize();
  return Poly(std::vector<Term>{{pack(e), std::move(k)}});
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0);
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.front().key == 0) return terms_.front().coef;
  return 0;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) {
    auto e = unpack(t.key);
    d = std::max<int>(d, static_cast<int>(e[0] + e[1] + e[2] + e[3]));
  }
  return d;
}

int Poly::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max<int>(d, static_cast<int>((t.key >> kShift[var]) & kMask));
  return d;
}

std::vector<Poly::Term> Poly::merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].key < b[j].key)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].key < a[i].key) {
      out.push_back({b[j].key, subtract ? Rational(-b[j].coef) : b[j].coef});
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (sgn(c) != 0) out.push_back({a[i].key, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  Rational k = c;
  k.canonicalize();
  for (auto& t : terms_) t.coef *= k;
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (b.is_constant()) return a * b.terms_[0].coef;
  if (a.is_constant()) return b * a.terms_[0].coef;
  std::vector<Poly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.key + t.key, s.coef * t.coef});
  std::sort(prod.begin(), prod.end(), [](const Poly::Term& l, const Poly::Term& r) { return l.key < r.key; });
  std::vector<Poly::Term> out;
  out.reserve(prod.size());
  for (auto& t : prod) {
    if (!out.empty() && out.back().key == t.key) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
  return Poly(std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

Poly Poly::pow(unsigned n) const {
  Poly result(1), base = *this;
  while (n) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return result;
}

Poly Poly::diff(int var) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  const Key unit = Key{1} << kShift[var];
  for (const auto& t : terms_) {
    unsigned e = static_cast<unsigned>((t.key >> kShift[var]) & kMask);
    if (e == 0) continue;
    out.push_back({t.key - unit, t.coef * e});
  }
  // Lowering one exponent by one keeps the lexicographic order.
  return Poly(std::move(out));
}

Poly Poly::diff(std::initializer_list<int> vars) const {
  Poly r = *this;
  for (int v : vars) r = r.diff(v);
  return r;
}

Rational Poly::eval(const Point& p) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    auto e = unpack(t.key);
    Rational m = t.coef;
    for (int i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      mpq_class pw;
      mpz_pow_ui(pw.get_num_mpz_t(), p[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), p[i].get_den_mpz_t(), e[i]);
      m *= pw;
    }
    sum += m;
  }
  return sum;
}

Poly Poly::permute(const std::array<int, 4>& perm) const {
  Poly r;
  for (const auto& t : terms_) {
    auto e = unpack(t.key);
    Exponents f{};
    for (int i = 0; i < 4; ++i) f[perm[i]] += e[i];
    r += monomial(t.coef, f);
  }
  return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (den.is_constant()) return num * Rational(1 / den.terms_[0].coef);
  Poly q, r = num;
  const Term& lt = den.leading();
  const auto le = unpack(lt.key);
  while (!r.is_zero()) {
    const auto re = unpack(r.leading().key);
    Exponents qe{};
    for (int i = 0; i < 4; ++i) {
      if (re[i] < le[i]) return std::nullopt;
      qe[i] = re[i] - le[i];
    }
    Poly t = monomial(r.leading().coef / lt.coef, qe);
    q += t;
    r -= t * den;
  }
  return q;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  // Print by descending total degree, then descending lexicographic key.
  std::vector<std::size_t> idx(terms_.size());
  std::iota(idx.begin(), idx.end(), 0);
  auto deg = [&](std::size_t i) {
    auto e = unpack(terms_[i].key);
    return e[0] + e[1] + e[2] + e[3];
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    auto da = deg(a), db = deg(b);
    if (da != db) return da > db;
    return terms_[a].key > terms_[b].key;
  });
  std::ostringstream os;
  bool first = true;
  for (std::size_t i : idx) {
    const Term& t = terms_[i];
    Rational c = t.coef;
    if (sgn(c) < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    auto e = unpack(t.key);
    bool have = false;
    if (t.key == 0 || c != 1) {
      os << c.get_str();
      have = true;
    }
    for (int v = 0; v < 4; ++v) {
      if (e[v] == 0) continue;
      if (have) os << '*';
      os << kVarNames[v];
      if (e[v] > 1) os << '^' << e[v];
      have = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.is_constant()) {
    Rational c = den_.constant_term();
    if (c != 1) num_ *= Rational(1 / c);
    den_ = Poly(1);
    return;
  }
  Rational lc = den_.leading().coef;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
  if (auto q = Poly::divide_exact(num_, den_)) {
    num_ = std::move(*q);
    den_ = Poly(1);
  }
}

const Poly& RationalFunction::as_poly() const {
  if (!is_poly()) throw std::domain_error("rational function is not a polynomial: " + str());
  return num_;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero()) den_ = Poly(1);
    else if (!den_.is_constant()) normalize();
    return *this;
  }
  // Cheap common-denominator search before falling back to the product.
  if (!o.den_.is_constant() || !den_.is_constant()) {
    if (auto q = Poly::divide_exact(den_, o.den_)) {
      num_ += o.num_ * *q;
      normalize();
      return *this;
    }
    if (auto q = Poly::divide_exact(o.den_, den_)) {
      num_ = num_ * *q + o.num_;
      den_ = o.den_;
      normalize();
      return *this;
    }
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_poly() && o.is_poly()) {
    num_ *= o.num_;
    return *this;
  }
  Poly n2 = o.num_, d2 = o.den_;
  if (!d2.is_constant())
    if (auto q = Poly::divide_exact(num_, d2)) {
      num_ = std::move(*q);
      d2 = Poly(1);
    }
  if (!den_.is_constant())
    if (auto q = Poly::divide_exact(n2, den_)) {
      n2 = std::move(*q);
      den_ = Poly(1);
    }
  num_ *= n2;
  den_ *= d2;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("division by the zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::inverse() const { return RationalFunction(1) / *this; }

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFunction RationalFunction::diff(int var) const {
  if (is_poly()) return RationalFunction(num_.diff(var));
  return RationalFunction(num_.diff(var) * den_ - num_ * den_.diff(var), den_ * den_);
}

Rational RationalFunction::eval(const Point& p) const {
  Rational d = den_.eval(p);
  if (sgn(d) == 0) throw std::domain_error("denominator vanishes at evaluation point");
  return num_.eval(p) / d;
}

std::string RationalFunction::str() const {
  if (is_poly()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.str(); }

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Poly run() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
    Poly p = expr();
    skip();
    if (pos_ < s_.size()) throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= unary();
      } else if (peek('/')) {
        throw ParseError("division is not allowed outside a numeric literal", pos_);
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      std::string digits = integer();
      if (digits.empty()) throw ParseError("expected non-negative integer exponent", start);
      if (digits.size() > 5 || std::stoul(digits) > kMaxExp) throw ParseError("exponent too large", start);
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
    char c = s_[pos_];
    if (c == '(') {
      std::size_t open = pos_++;
      Poly inner = expr();
      if (!peek(')')) throw ParseError("unbalanced parenthesis opened", open);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(integer(), 10);
      if (peek('/')) {
        std::size_t slash = pos_++;
        skip();
        std::string den = integer();
        if (den.empty()) throw ParseError("division is not allowed outside a numeric literal", slash);
        Rational d(den, 10);
        if (sgn(d) == 0) throw ParseError("zero denominator in literal", slash);
        value /= d;
      }
      value.canonicalize();
      return Poly(value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view id = s_.substr(start, pos_ - start);
      for (int v = 0; v < 4; ++v)
        if (id == kVarNames[v]) return Poly::var(v);
      throw ParseError("unknown identifier '" + std::string(id) + "'", start);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).run(); }

}  // namespace wnp
