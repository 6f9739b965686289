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

#ifndef WALKERNP_WALKER_HPP
#define WALKERNP_WALKER_HPP

#include <array>
#include <string>
#include <vector>

#include "walkernp/poly.hpp"

namespace wnp {

// g = ((0, I), (I, W)) with W = ((a, c), (c, b)) in coordinates (u, v, x, y).
struct WalkerMetric {
  Poly a, b, c;
  std::string label;
};

using PolyMat4 = std::array<std::array<Poly, 4>, 4>;
using Vec4 = std::array<RF, 4>;
using Mat4 = std::array<Vec4, 4>;

struct MetricTensor {
  PolyMat4 g;
  PolyMat4 ginv;
};

// gamma[k][i][j] = Gamma^k_{ij}.
struct Christoffel {
  std::array<PolyMat4, 4> gamma;
  const Poly& operator()(int k, int i, int j) const { return gamma[k][i][j]; }
};

// Null tetrad in contravariant coordinate components. For a spin frame
// chi = chit = 1, l.n = 1, m.mt = -1.
struct Tetrad {
  Vec4 l, n, m, mt;
  RF chi{1}, chit{1};
};

MetricTensor assemble_metric(const WalkerMetric& w);
Christoffel christoffel(const MetricTensor& m);
Tetrad walker_tetrad(const WalkerMetric& w);

// sigma_a^{AA'} (coordinate index a -> dyad components) and
// sigma_{AA'}^a (dyad -> coordinate); matrices are indexed [A][A'].
using PolyMat2 = std::array<std::array<Poly, 2>, 2>;
struct IvdWSymbols {
  std::array<PolyMat2, 4> to_dyad;
  std::array<PolyMat2, 4> to_coord;
};
IvdWSymbols ivdw_symbols(const WalkerMetric& w);
std::array<std::array<RF, 2>, 2> ivdw_to_dyad(const IvdWSymbols& s, const Vec4& v);
Vec4 ivdw_to_coord(const IvdWSymbols& s, const std::array<std::array<RF, 2>, 2>& d);

// Index gymnastics with the coordinate metric.
Vec4 lower(const MetricTensor& m, const Vec4& v);
Vec4 raise(const MetricTensor& m, const Vec4& w);
RF dot(const MetricTensor& m, const Vec4& a, const Vec4& b);
RF contract(const Vec4& covector, const Vec4& vector);

// Y^a d_a f.
RF apply(const Vec4& y, const RF& f);

// out[a][b] = nabla_b V^a.
Mat4 covariant_derivative_vector(const Christoffel& gam, const Vec4& v);
// Y^b nabla_b V^a.
Vec4 directional_derivative(const Christoffel& gam, const Vec4& y, const Vec4& v);

// Components (A, B, C, D) with V = A l + B n + C m + D mt, valid for spin frames.
std::array<RF, 4> tetrad_components(const MetricTensor& m, const Tetrad& t, const Vec4& v);

// nabla_c g_ab for a <= b, every c: 40 residual polynomials.
std::vector<Poly> metric_compatibility_residuals(const MetricTensor& m, const Christoffel& gam);

// Pairings that must equal (l.n - chi chit, m.mt + chi chit) and the eight
// that must vanish.
std::vector<RF> tetrad_normalization_residuals(const MetricTensor& m, const Tetrad& t);
void require_spin_frame(const MetricTensor& m, const Tetrad& t);

// Frame change o -> lam o, o' -> lamt o', iota -> iota/lam + mu o,
// iota' -> iota'/lamt + mut o'.
struct FrameTransform {
  RF lam{1}, lamt{1}, mu{0}, mut{0};
};
Tetrad tetrad_transform(const Tetrad& t, const FrameTransform& f);

Vec4 to_vec(const std::array<Poly, 4>& p);

}  // namespace wnp

#endif  // WALKERNP_WALKER_HPP
