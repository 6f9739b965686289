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

// Evaluator for the identity tables. Each table row is kept as a short
// string over named scalars and unary operators, e.g.
//   "tr(kap)-D(rho)"  or  "rho**2+sig*tsig-tkap*tau+P00"
// so the rows read like the printed equations and can be checked by eye.

#ifndef WALKERNP_TABLE_EVAL_HPP
#define WALKERNP_TABLE_EVAL_HPP

#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "walkernp/poly.hpp"

namespace wnp::detail {

class TableEval {
 public:
  using UnaryOp = std::function<RF(const RF&)>;

  std::map<std::string, RF, std::less<>> vars;
  std::map<std::string, UnaryOp, std::less<>> ops;

  RF operator()(std::string_view text) {
    s_ = text;
    i_ = 0;
    RF r = expr();
    if (i_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::logic_error("table expression '" + std::string(s_) + "': " + what);
  }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }

  RF expr() {
    RF r = term();
    while (peek() == '+' || peek() == '-') {
      const char op = s_[i_++];
      RF t = term();
      if (op == '+') r += t;
      else r -= t;
    }
    return r;
  }

  RF term() {
    RF r = unary();
    for (;;) {
      if (peek() == '*' && (i_ + 1 >= s_.size() || s_[i_ + 1] != '*')) {
        ++i_;
        r = r * unary();
      } else if (peek() == '/') {
        ++i_;
        r = r * RF(Poly(Rational(1, integer())));
      } else {
        return r;
      }
    }
  }

  RF unary() {
    if (peek() == '-') {
      ++i_;
      return -unary();
    }
    if (peek() == '+') {
      ++i_;
      return unary();
    }
    return power();
  }

  RF power() {
    RF base = atom();
    if (s_.substr(i_, 2) == "**") {
      i_ += 2;
      const long n = integer();
      RF r(1);
      for (long k = 0; k < n; ++k) r = r * base;
      return r;
    }
    return base;
  }

  long integer() {
    const std::size_t start = i_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    if (start == i_) fail("integer expected");
    return std::stol(std::string(s_.substr(start, i_ - start)));
  }

  RF atom() {
    if (peek() == '(') {
      ++i_;
      RF r = expr();
      if (peek() != ')') fail("')' expected");
      ++i_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return RF(Poly(Rational(integer())));
    const std::size_t start = i_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++i_;
    if (start == i_) fail("unexpected character");
    const std::string_view name = s_.substr(start, i_ - start);
    if (peek() == '(') {
      auto it = ops.find(name);
      if (it == ops.end()) fail("unknown operator " + std::string(name));
      ++i_;
      RF arg = expr();
      if (peek() != ')') fail("')' expected");
      ++i_;
      return it->second(arg);
    }
    auto it = vars.find(name);
    if (it == vars.end()) fail("unknown symbol " + std::string(name));
    return it->second;
  }
};

}  // namespace wnp::detail

#endif  // WALKERNP_TABLE_EVAL_HPP
