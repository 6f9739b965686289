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

#include "walkernp/congruence.hpp"

#include <charconv>
#include <cmath>
#include <memory>
#include <ostream>

namespace wnp {

namespace {

using namespace sc;

// Inner product in the (l, mt, m, n) component basis: l.n = 1, m.mt = -1.
const Eigen::Matrix4d& gram() {
  static const Eigen::Matrix4d g = [] {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 3) = m(3, 0) = 1;
    m(1, 2) = m(2, 1) = -1;
    return m;
  }();
  return g;
}

void require_finite(const Eigen::VectorXd& z, double v) {
  if (!z.allFinite()) throw IntegrationError("non-finite state at v = " + format_double(v));
}

// Uniform grid 0, h, 2h, ..., v_end with a shorter final step if needed.
std::vector<double> grid(double v_end, double step) {
  if (!(step > 0) || !std::isfinite(step)) throw std::invalid_argument("step must be positive and finite");
  if (!(v_end >= 0) || !std::isfinite(v_end)) throw std::invalid_argument("end parameter must be finite and >= 0");
  const auto n = static_cast<long>(std::ceil(v_end / step - 1e-9));
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(n) + 1);
  for (long i = 0; i < n; ++i) g.push_back(static_cast<double>(i) * step);
  g.push_back(v_end);
  if (g.size() >= 2 && g[g.size() - 1] <= g[g.size() - 2]) g.erase(g.end() - 2);
  return g;
}

Rational exact(double x) { return Rational(x); }

}  // namespace

SymbolicPropagation propagation_symbolic(const SpinCoefficientSet& s, const CurvatureSpinors& c) {
  SymbolicPropagation p;
  p.M[0] = {RF(0), s[alpha] + s[t(beta)], s[t(alpha)] + s[beta], s[gamma] + s[t(gamma)]};
  p.M[1] = {RF(0), s[rho], s[sigma], s[tau]};
  p.M[2] = {RF(0), s[t(sigma)], s[t(rho)], s[t(tau)]};
  p.M[3] = {RF(0), -s[t(kappa)], -s[kappa], RF(0)};

  const RF a = c.Psi[1] + c.Phi[0][1];
  const RF b = c.tPsi[1] + c.Phi[1][0];
  p.N[0] = {RF(0), -b, -a, RF(2) * c.Lambda - RF(2) * c.Phi[1][1] - c.Psi[2] - c.tPsi[2]};
  p.N[1] = {RF(0), c.Phi[0][0], c.Psi[0], a};
  p.N[2] = {RF(0), c.tPsi[0], c.Phi[0][0], b};
  p.N[3] = {RF(0), RF(0), RF(0), RF(0)};
  return p;
}

PropagationProvider walker_provider(const WalkerMetric& w, const Point& base) {
  auto sym = std::make_shared<SymbolicPropagation>(
      propagation_symbolic(walker_closed_form(w), walker_curvature_components(w)));
  return [sym, base](double v) {
    Point p = base;
    p[0] += exact(v);
    PropagationMatrices pm;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (!sym->M[i][j].is_zero()) pm.M(i, j) = sym->M[i][j].eval_double(p);
        if (!sym->N[i][j].is_zero()) pm.N(i, j) = sym->N[i][j].eval_double(p);
      }
    return pm;
  };
}

PropagationProvider constant_provider(const ConstantCoefficients& k) {
  PropagationMatrices pm;
  pm.M << 0, k.alpha_betat, k.alphat_beta, k.gamma_sum, 0, k.rho, k.sigma, k.tau, 0, k.sigmat, k.rhot, k.taut, 0,
      -k.kappat, -k.kappa, 0;
  pm.N << 0, -k.tPsi1_Phi10, -k.Psi1_Phi01, k.trace_term, 0, k.Phi00, k.Psi0, k.Psi1_Phi01, 0, k.tPsi0, k.Phi00,
      k.tPsi1_Phi10, 0, 0, 0, 0;
  return [pm](double) { return pm; };
}

ConnectingPath integrate_connecting(const PropagationProvider& prov, const ConnectingState& z0, double v_end,
                                    double step) {
  const auto g = grid(v_end, step);
  ConnectingPath path;
  path.reserve(g.size());
  ConnectingState z = z0;
  require_finite(z, 0);
  path.push_back({g[0], z});
  for (std::size_t i = 1; i < g.size(); ++i) {
    const double v = g[i - 1], h = g[i] - g[i - 1];
    const Eigen::Matrix4d m0 = prov(v).M, mh = prov(v + h / 2).M, m1 = prov(v + h).M;
    const ConnectingState k1 = m0 * z;
    const ConnectingState k2 = mh * (z + h / 2 * k1);
    const ConnectingState k3 = mh * (z + h / 2 * k2);
    const ConnectingState k4 = m1 * (z + h * k3);
    z += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    z(3) = z0(3);
    require_finite(z, g[i]);
    path.push_back({g[i], z});
  }
  return path;
}

JacobiPath integrate_jacobi(const PropagationProvider& prov, const ConnectingState& z0, const ConnectingState& dz0,
                            double v_end, double step) {
  const auto g = grid(v_end, step);
  using State = Eigen::Matrix<double, 8, 1>;
  auto rhs = [](const Eigen::Matrix4d& n, const State& y) {
    State d;
    d.head<4>() = y.tail<4>();
    d.tail<4>() = -n * y.head<4>();
    return d;
  };
  State y;
  y << z0, dz0;
  JacobiPath path;
  path.reserve(g.size());
  require_finite(y, 0);
  path.push_back({g[0], y.head<4>(), y.tail<4>()});
  for (std::size_t i = 1; i < g.size(); ++i) {
    const double v = g[i - 1], h = g[i] - g[i - 1];
    const Eigen::Matrix4d n0 = prov(v).N, nh = prov(v + h / 2).N, n1 = prov(v + h).N;
    const State k1 = rhs(n0, y);
    const State k2 = rhs(nh, y + h / 2 * k1);
    const State k3 = rhs(nh, y + h / 2 * k2);
    const State k4 = rhs(n1, y + h * k3);
    y += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    require_finite(y, g[i]);
    path.push_back({g[i], y.head<4>(), y.tail<4>()});
  }
  return path;
}

double richardson_error(const PropagationProvider& prov, const ConnectingState& z0, double v_end, double step) {
  const ConnectingState a = integrate_connecting(prov, z0, v_end, step).back().z;
  const ConnectingState b = integrate_connecting(prov, z0, v_end, step / 2).back().z;
  return (a - b).lpNorm<Eigen::Infinity>() / 15.0;
}

ConnectingState walker_connecting_oracle(const WalkerMetric& w, const Point& base, const ConnectingState& z0,
                                         double v) {
  Point p = base;
  p[0] += exact(v);
  const double a0 = w.a.eval(base).get_d(), b0 = w.b.eval(base).get_d(), c0 = w.c.eval(base).get_d();
  const double a = w.a.eval(p).get_d(), b = w.b.eval(p).get_d(), c = w.c.eval(p).get_d();
  ConnectingState z = z0;
  z(0) = z0(0) + (c0 - c) / 2 * z0(2) + (a - a0) / 2 * z0(3);
  z(1) = z0(1) + (b0 - b) / 2 * z0(2) + (c - c0) / 2 * z0(3);
  return z;
}

bool RiccatiResidual::is_zero() const {
  for (const auto& row : full)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  for (const auto& row : orthogonal)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

RiccatiResidual riccati_residual(const SpinCoefficientSet& s, const CurvatureSpinors& c, const Tetrad& tet) {
  const SymbolicPropagation sp = propagation_symbolic(s, c);
  RiccatiResidual r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      RF x = directional(tet, Op::D, sp.M[i][j]) + sp.N[i][j];
      for (int k = 0; k < 4; ++k)
        if (!sp.M[i][k].is_zero() && !sp.M[k][j].is_zero()) x += sp.M[i][k] * sp.M[k][j];
      r.full[i][j] = std::move(x);
    }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      RF x = directional(tet, Op::D, sp.M[i + 1][j + 1]) + sp.N[i + 1][j + 1];
      for (int k = 0; k < 2; ++k) x += sp.M[i + 1][k + 1] * sp.M[k + 1][j + 1];
      r.orthogonal[i][j] = std::move(x);
    }
  return r;
}

Eigen::MatrixXd curvature_free_solution(const Eigen::MatrixXd& m0, double v) {
  const Eigen::MatrixXd bracket = m0 * v + Eigen::MatrixXd::Identity(m0.rows(), m0.cols());
  Eigen::FullPivLU<Eigen::MatrixXd> lu(bracket);
  if (!lu.isInvertible()) throw CausticError("caustic: M0 v + 1 is singular at v = " + format_double(v), v);
  return m0 * lu.inverse();
}

std::array<double, 4> curvature_free_scalars(double rho0, double sigma0, double sigmat0, double rhot0, double v) {
  const double d = rho0 * rhot0 - sigma0 * sigmat0;
  const double den = 1 + v * (rho0 + rhot0) + v * v * d;
  if (den == 0) throw CausticError("caustic: 1 + v tr P0 + v^2 det P0 vanishes at v = " + format_double(v), v);
  return {(rho0 + v * d) / den, sigma0 / den, sigmat0 / den, (rhot0 + v * d) / den};
}

FlowKind flow_kind_from_string(const std::string& s) {
  if (s == "dilation") return FlowKind::Dilation;
  if (s == "rotation") return FlowKind::Rotation;
  if (s == "boost") return FlowKind::Boost;
  if (s == "inverse-scale") return FlowKind::InverseScale;
  if (s == "diagonal") return FlowKind::Diagonal;
  throw std::invalid_argument("unknown flow kind '" + s + "'");
}

void check_flow_pattern(FlowKind kind, const Eigen::Matrix2d& P, double tol) {
  const double rho = P(0, 0), sigma = P(0, 1), sigmat = P(1, 0), rhot = P(1, 1);
  auto zero = [tol](double x) { return std::abs(x) <= tol; };
  bool ok = false;
  switch (kind) {
    case FlowKind::Dilation: ok = zero(rho - rhot) && zero(sigma) && zero(sigmat); break;
    case FlowKind::Rotation: ok = zero(rho) && zero(rhot) && zero(sigma + sigmat); break;
    case FlowKind::Boost: ok = zero(rho) && zero(rhot) && zero(sigma - sigmat); break;
    case FlowKind::InverseScale: ok = zero(rho + rhot) && zero(sigma) && zero(sigmat); break;
    case FlowKind::Diagonal: ok = zero(sigma) && zero(sigmat); break;
  }
  if (!ok) throw std::invalid_argument("coefficient pattern does not match the requested flow");
}

Eigen::Vector2d special_flow(FlowKind kind, const std::vector<double>& integrals, const Eigen::Vector2d& x0) {
  const std::size_t need = kind == FlowKind::Diagonal ? 2 : 1;
  if (integrals.size() != need) throw std::invalid_argument("wrong number of integrals for this flow");
  const double t = integrals[0];
  Eigen::Matrix2d a;
  switch (kind) {
    case FlowKind::Dilation: return std::exp(t) * x0;
    case FlowKind::Rotation: a << std::cos(t), -std::sin(t), std::sin(t), std::cos(t); return a * x0;
    case FlowKind::Boost: a << std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t); return a * x0;
    case FlowKind::InverseScale: return {std::exp(t) * x0(0), std::exp(-t) * x0(1)};
    case FlowKind::Diagonal: return {std::exp(t) * x0(0), std::exp(integrals[1]) * x0(1)};
  }
  throw std::logic_error("unreachable");
}

double sigma_form(const ConnectingState& v, const ConnectingState& dv, const ConnectingState& w,
                  const ConnectingState& dw) {
  return (v.dot(gram() * dw) - w.dot(gram() * dv)) / 2;
}

double sigma_closed_form(const ConnectingState& v, const ConnectingState& w, const PropagationMatrices& pm) {
  const Eigen::Matrix4d& m = pm.M;
  const double rho = m(1, 1), rhot = m(2, 2), tau = m(1, 3), taut = m(2, 3);
  const double a_bt = m(0, 1), at_b = m(0, 2);
  const double zeta = v(1), zetat = v(2), nu = v(3);
  const double xi = w(1), xit = w(2), chi = w(3);
  return ((rho - rhot) * (zeta * xit - zetat * xi) + (taut + a_bt) * (nu * xi - zeta * chi) +
          (tau + at_b) * (nu * xit - zetat * chi)) /
         2;
}

double omega_form(const ConnectingState& v, const ConnectingState& w) { return v(1) * w(2) - v(2) * w(1); }

std::vector<double> sigma_along(const JacobiPath& a, const JacobiPath& b) {
  if (a.size() != b.size()) throw std::invalid_argument("paths have mismatched grids");
  std::vector<double> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].v != b[i].v) throw std::invalid_argument("paths have mismatched grids");
    out.push_back(sigma_form(a[i].z, a[i].dz, b[i].z, b[i].dz));
  }
  return out;
}

std::vector<double> sigma_along(const ConnectingPath& a, const ConnectingPath& b, const PropagationProvider& prov) {
  if (a.size() != b.size()) throw std::invalid_argument("paths have mismatched grids");
  std::vector<double> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].v != b[i].v) throw std::invalid_argument("paths have mismatched grids");
    const Eigen::Matrix4d m = prov(a[i].v).M;
    out.push_back(sigma_form(a[i].z, m * a[i].z, b[i].z, m * b[i].z));
  }
  return out;
}

std::vector<double> omega_along(const ConnectingPath& a, const ConnectingPath& b) {
  if (a.size() != b.size()) throw std::invalid_argument("paths have mismatched grids");
  std::vector<double> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(omega_form(a[i].z, b[i].z));
  return out;
}

ShapeDecomposition shape_decomposition(Rational rho, Rational rhot, Rational sigma, Rational sigmat) {
  for (Rational* q : {&rho, &rhot, &sigma, &sigmat}) q->canonicalize();
  ShapeDecomposition d;
  d.P = {{{rho, sigma}, {sigmat, rhot}}};
  d.dilation = (rho + rhot) / 2;
  d.shear = (rho - rhot) / 2;
  d.rotation = (sigmat - sigma) / 2;
  d.boost = (sigmat + sigma) / 2;
  d.discriminant = (rho - rhot) * (rho - rhot) + 4 * sigma * sigmat;
  const double tr = Rational(rho + rhot).get_d(), disc = d.discriminant.get_d();
  const std::complex<double> root = std::sqrt(std::complex<double>(disc, 0.0));
  d.eigenvalues = {(tr + root) / 2.0, (tr - root) / 2.0};

  // T(X, Y) = -(zeta xi sigmat + zeta xit rho + zetat xi rhot + zetat xit sigma)
  d.T = {{{-sigmat, -rho}, {-rhot, -sigma}}};
  d.trace_coef = (rho + rhot) / 2;
  d.skew_coef = (rhot - rho) / 2;
  d.S = {{{-sigmat, 0}, {0, -sigma}}};
  return d;
}

std::array<std::array<Rational, 2>, 2> ShapeDecomposition::P_defect() const {
  // E1 = 1, E3 = diag(1, -1), E2 = ((0, -1), (1, 0)), E4 = ((0, 1), (1, 0)).
  std::array<std::array<Rational, 2>, 2> r;
  r[0][0] = P[0][0] - (dilation + shear);
  r[1][1] = P[1][1] - (dilation - shear);
  r[0][1] = P[0][1] - (-rotation + boost);
  r[1][0] = P[1][0] - (rotation + boost);
  return r;
}

std::array<std::array<Rational, 2>, 2> ShapeDecomposition::T_defect() const {
  // h = -(zeta xit + zetat xi), Omega = zeta xit - zetat xi.
  std::array<std::array<Rational, 2>, 2> r;
  r[0][0] = T[0][0] - S[0][0];
  r[1][1] = T[1][1] - S[1][1];
  r[0][1] = T[0][1] - (S[0][1] - trace_coef + skew_coef);
  r[1][0] = T[1][0] - (S[1][0] - trace_coef - skew_coef);
  return r;
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const ConnectingPath& path, const PropagationProvider& prov) {
  os << "v,eta,zeta,zetatilde,nu,rho,rhotilde,sigma,sigmatilde\n";
  for (const auto& smp : path) {
    const Eigen::Matrix4d m = prov(smp.v).M;
    const double cols[9] = {smp.v, smp.z(0), smp.z(1), smp.z(2), smp.z(3), m(1, 1), m(2, 2), m(1, 2), m(2, 1)};
    for (int i = 0; i < 9; ++i) os << (i ? "," : "") << format_double(cols[i]);
    os << '\n';
  }
}

}  // namespace wnp
