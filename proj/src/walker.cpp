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

#include "walkernp/walker.hpp"

#include <stdexcept>

namespace wnp {

MetricTensor assemble_metric(const WalkerMetric& w) {
  MetricTensor m;
  m.g[0][2] = m.g[2][0] = m.g[1][3] = m.g[3][1] = Poly(1);
  m.g[2][2] = w.a;
  m.g[3][3] = w.b;
  m.g[2][3] = m.g[3][2] = w.c;

  m.ginv[0][2] = m.ginv[2][0] = m.ginv[1][3] = m.ginv[3][1] = Poly(1);
  m.ginv[0][0] = -w.a;
  m.ginv[1][1] = -w.b;
  m.ginv[0][1] = m.ginv[1][0] = -w.c;
  return m;
}

Christoffel christoffel(const MetricTensor& m) {
  // dg[l][i][j] = d_l g_ij
  std::array<PolyMat4, 4> dg;
  for (int l = 0; l < 4; ++l)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) dg[l][i][j] = m.g[i][j].diff(l);

  // First kind: G_lij = (d_i g_lj + d_j g_li - d_l g_ij) / 2.
  std::array<PolyMat4, 4> first;
  const Rational half(1, 2);
  for (int l = 0; l < 4; ++l)
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        first[l][i][j] = (dg[i][l][j] + dg[j][l][i] - dg[l][i][j]) * half;
        first[l][j][i] = first[l][i][j];
      }

  Christoffel c;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        Poly s;
        for (int l = 0; l < 4; ++l)
          if (!m.ginv[k][l].is_zero() && !first[l][i][j].is_zero()) s += m.ginv[k][l] * first[l][i][j];
        c.gamma[k][i][j] = s;
        c.gamma[k][j][i] = std::move(s);
      }
  return c;
}

Vec4 to_vec(const std::array<Poly, 4>& p) { return {RF(p[0]), RF(p[1]), RF(p[2]), RF(p[3])}; }

Tetrad walker_tetrad(const WalkerMetric& w) {
  const Rational half(1, 2);
  Tetrad t;
  t.l = {RF(1), RF(0), RF(0), RF(0)};
  t.mt = {RF(0), RF(1), RF(0), RF(0)};
  t.n = {RF(-w.a * half), RF(-w.c * half), RF(1), RF(0)};
  t.m = {RF(w.c * half), RF(w.b * half), RF(0), RF(-1)};
  return t;
}

IvdWSymbols ivdw_symbols(const WalkerMetric& w) {
  const Rational half(1, 2);
  IvdWSymbols s;
  // Coordinate basis vector d_a expanded on e_{AA'} = (l, m; mt, n).
  s.to_dyad[0] = {{{Poly(1), Poly(0)}, {Poly(0), Poly(0)}}};
  s.to_dyad[1] = {{{Poly(0), Poly(0)}, {Poly(1), Poly(0)}}};
  s.to_dyad[2] = {{{w.a * half, Poly(0)}, {w.c * half, Poly(1)}}};
  s.to_dyad[3] = {{{w.c * half, Poly(-1)}, {w.b * half, Poly(0)}}};
  // Coordinate components of e_{AA'}.
  s.to_coord[0] = {{{Poly(1), w.c * half}, {Poly(0), -w.a * half}}};
  s.to_coord[1] = {{{Poly(0), w.b * half}, {Poly(1), -w.c * half}}};
  s.to_coord[2] = {{{Poly(0), Poly(0)}, {Poly(0), Poly(1)}}};
  s.to_coord[3] = {{{Poly(0), Poly(-1)}, {Poly(0), Poly(0)}}};
  return s;
}

std::array<std::array<RF, 2>, 2> ivdw_to_dyad(const IvdWSymbols& s, const Vec4& v) {
  std::array<std::array<RF, 2>, 2> d;
  for (int A = 0; A < 2; ++A)
    for (int Ap = 0; Ap < 2; ++Ap)
      for (int a = 0; a < 4; ++a) d[A][Ap] += v[a] * RF(s.to_dyad[a][A][Ap]);
  return d;
}

Vec4 ivdw_to_coord(const IvdWSymbols& s, const std::array<std::array<RF, 2>, 2>& d) {
  Vec4 v;
  for (int a = 0; a < 4; ++a)
    for (int A = 0; A < 2; ++A)
      for (int Ap = 0; Ap < 2; ++Ap) v[a] += d[A][Ap] * RF(s.to_coord[a][A][Ap]);
  return v;
}

Vec4 lower(const MetricTensor& m, const Vec4& v) {
  Vec4 w;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!m.g[i][j].is_zero() && !v[j].is_zero()) w[i] += RF(m.g[i][j]) * v[j];
  return w;
}

Vec4 raise(const MetricTensor& m, const Vec4& w) {
  Vec4 v;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!m.ginv[i][j].is_zero() && !w[j].is_zero()) v[i] += RF(m.ginv[i][j]) * w[j];
  return v;
}

RF contract(const Vec4& covector, const Vec4& vector) {
  RF s;
  for (int i = 0; i < 4; ++i)
    if (!covector[i].is_zero() && !vector[i].is_zero()) s += covector[i] * vector[i];
  return s;
}

RF dot(const MetricTensor& m, const Vec4& a, const Vec4& b) { return contract(lower(m, a), b); }

RF apply(const Vec4& y, const RF& f) {
  RF s;
  for (int i = 0; i < 4; ++i) {
    if (y[i].is_zero()) continue;
    RF d = f.diff(i);
    if (!d.is_zero()) s += y[i] * d;
  }
  return s;
}

Mat4 covariant_derivative_vector(const Christoffel& gam, const Vec4& v) {
  Mat4 out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      RF s = v[a].diff(b);
      for (int c = 0; c < 4; ++c)
        if (!gam(a, b, c).is_zero() && !v[c].is_zero()) s += RF(gam(a, b, c)) * v[c];
      out[a][b] = std::move(s);
    }
  return out;
}

Vec4 directional_derivative(const Christoffel& gam, const Vec4& y, const Vec4& v) {
  Vec4 out;
  for (int a = 0; a < 4; ++a) {
    RF s;
    for (int b = 0; b < 4; ++b) {
      if (y[b].is_zero()) continue;
      RF d = v[a].diff(b);
      for (int c = 0; c < 4; ++c)
        if (!gam(a, b, c).is_zero() && !v[c].is_zero()) d += RF(gam(a, b, c)) * v[c];
      if (!d.is_zero()) s += y[b] * d;
    }
    out[a] = std::move(s);
  }
  return out;
}

std::array<RF, 4> tetrad_components(const MetricTensor& m, const Tetrad& t, const Vec4& v) {
  Vec4 vl = lower(m, v);
  return {contract(vl, t.n), contract(vl, t.l), -contract(vl, t.mt), -contract(vl, t.m)};
}

std::vector<Poly> metric_compatibility_residuals(const MetricTensor& m, const Christoffel& gam) {
  std::vector<Poly> out;
  out.reserve(40);
  for (int c = 0; c < 4; ++c)
    for (int a = 0; a < 4; ++a)
      for (int b = a; b < 4; ++b) {
        Poly r = m.g[a][b].diff(c);
        for (int d = 0; d < 4; ++d) {
          r -= gam(d, c, a) * m.g[d][b];
          r -= gam(d, c, b) * m.g[a][d];
        }
        out.push_back(std::move(r));
      }
  return out;
}

std::vector<RF> tetrad_normalization_residuals(const MetricTensor& m, const Tetrad& t) {
  RF cc = t.chi * t.chit;
  std::vector<RF> r;
  r.push_back(dot(m, t.l, t.n) - cc);
  r.push_back(dot(m, t.m, t.mt) + cc);
  const Vec4* vs[4] = {&t.l, &t.n, &t.m, &t.mt};
  // Remaining pairs: ll, nn, mm, mtmt, lm, lmt, nm, nmt.
  for (int i = 0; i < 4; ++i) r.push_back(dot(m, *vs[i], *vs[i]));
  r.push_back(dot(m, t.l, t.m));
  r.push_back(dot(m, t.l, t.mt));
  r.push_back(dot(m, t.n, t.m));
  r.push_back(dot(m, t.n, t.mt));
  return r;
}

void require_spin_frame(const MetricTensor& m, const Tetrad& t) {
  if (t.chi != RF(1) || t.chit != RF(1))
    throw std::invalid_argument("tetrad is not built from spin frames (chi, chit != 1)");
  for (const auto& r : tetrad_normalization_residuals(m, t))
    if (!r.is_zero()) throw std::invalid_argument("degenerate tetrad: normalization violated");
}

Tetrad tetrad_transform(const Tetrad& t, const FrameTransform& f) {
  if (f.lam.is_zero() || f.lamt.is_zero()) throw std::invalid_argument("frame rescaling by the zero function");
  const RF il = f.lam.inverse(), ilt = f.lamt.inverse();
  Tetrad r;
  r.chi = t.chi;
  r.chit = t.chit;
  for (int i = 0; i < 4; ++i) {
    r.l[i] = f.lam * f.lamt * t.l[i];
    r.n[i] = il * ilt * t.n[i] + il * f.mut * t.mt[i] + f.mu * ilt * t.m[i] + f.mu * f.mut * t.l[i];
    r.m[i] = f.lam * ilt * t.m[i] + f.lam * f.mut * t.l[i];
    r.mt[i] = il * f.lamt * t.mt[i] + f.mu * f.lamt * t.l[i];
  }
  return r;
}

}  // namespace wnp
