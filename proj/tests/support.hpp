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

// Seeded generators shared by the unit tests and the acceptance runner.

#ifndef WALKERNP_TESTS_SUPPORT_HPP
#define WALKERNP_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "walkernp/heavenly.hpp"
#include "walkernp/walker.hpp"

namespace wnp::testing {

// Random polynomial in the variables flagged by `use`, total degree <= max_degree,
// at most `max_terms` terms, coefficients p/q with |p| <= 5, 1 <= q <= 3.
inline Poly random_poly(std::mt19937_64& rng, unsigned max_degree, int max_terms,
                        std::array<bool, 4> use = {true, true, true, true}) {
  std::uniform_int_distribution<int> nterms(1, max_terms), num(-5, 5), den(1, 3);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  Poly p;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Exponents e{0, 0, 0, 0};
    unsigned left = deg(rng);
    while (left > 0) {
      std::uniform_int_distribution<int> pick(0, 3);
      const int v = pick(rng);
      if (!use[v]) {
        bool any = false;
        for (bool b : use) any = any || b;
        if (!any) break;
        continue;
      }
      ++e[v];
      --left;
    }
    p += Poly::monomial(Rational(num(rng), den(rng)), e);
  }
  return p;
}

inline WalkerMetric random_walker(std::mt19937_64& rng, unsigned max_degree = 4, int max_terms = 4) {
  return {random_poly(rng, max_degree, max_terms), random_poly(rng, max_degree, max_terms),
          random_poly(rng, max_degree, max_terms), "random"};
}

inline std::vector<WalkerMetric> random_walkers(std::uint64_t seed, int count, unsigned max_degree = 4) {
  std::mt19937_64 rng(seed);
  std::vector<WalkerMetric> out;
  for (int i = 0; i < count; ++i) out.push_back(random_walker(rng, max_degree));
  return out;
}

// Valid potential by construction: f = u h + f0, F = u^2 h / 2 + u f0 + F0 and the mirror for g, G.
inline HeavenlyPotential random_potential(std::mt19937_64& rng, unsigned max_degree = 5) {
  const std::array<bool, 4> xy{false, false, true, true};
  const unsigned low = max_degree >= 3 ? max_degree - 3 : 0;
  const Poly u = Poly::var(U), v = Poly::var(V);
  const Poly h = random_poly(rng, low, 2, xy);
  const Poly f0 = random_poly(rng, low + 1, 2, xy), g0 = random_poly(rng, low + 1, 2, xy);
  const Poly F0 = random_poly(rng, low + 1, 2, xy), G0 = random_poly(rng, low + 1, 2, xy);
  HeavenlyPotential p;
  p.theta = random_poly(rng, max_degree, 5);
  p.h = h;
  p.f = u * h + f0;
  p.g = v * h + g0;
  p.F = u * u * h * Rational(1, 2) + u * f0 + F0;
  p.G = v * v * h * Rational(1, 2) + v * g0 + G0;
  return p;
}

// Every monomial in u, v, x, y of total degree <= degree, coefficient 1.
inline std::vector<Poly> monomials_up_to(unsigned degree) {
  std::vector<Poly> out;
  for (unsigned d = 0; d <= degree; ++d)
    for (unsigned i = 0; i <= d; ++i)
      for (unsigned j = 0; i + j <= d; ++j)
        for (unsigned k = 0; i + j + k <= d; ++k) out.push_back(Poly::monomial(1, {i, j, k, d - i - j - k}));
  return out;
}

inline HeavenlyPotential scalar_flat(const Poly& theta, const Poly& f, const Poly& g) {
  return {theta, f, g, Poly::var(U) * f, Poly::var(V) * g, Poly()};
}

}  // namespace wnp::testing

#endif  // WALKERNP_TESTS_SUPPORT_HPP
