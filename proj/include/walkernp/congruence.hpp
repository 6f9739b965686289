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

#ifndef WALKERNP_CONGRUENCE_HPP
#define WALKERNP_CONGRUENCE_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "walkernp/curvature.hpp"
#include "walkernp/spincoeff.hpp"
#include "walkernp/walker.hpp"

namespace wnp {

// Connecting field V = eta l + zeta mt + zetat m + nu n, stored as (eta, zeta, zetat, nu).
using ConnectingState = Eigen::Vector4d;

// Propagation data at one parameter value. P and Q are the middle 2x2 blocks
// of M and N (the orthogonal part acting on (zeta, zetat)).
struct PropagationMatrices {
  Eigen::Matrix4d M = Eigen::Matrix4d::Zero();
  Eigen::Matrix4d N = Eigen::Matrix4d::Zero();
  Eigen::Matrix2d P() const { return M.block<2, 2>(1, 1); }
  Eigen::Matrix2d Q() const { return N.block<2, 2>(1, 1); }
};

// Exact matrices M, N as functions on the manifold.
struct SymbolicPropagation {
  std::array<std::array<RF, 4>, 4> M, N;
};
SymbolicPropagation propagation_symbolic(const SpinCoefficientSet& s, const CurvatureSpinors& c);

// Coefficient data along one integral curve of l, as a function of the affine parameter.
using PropagationProvider = std::function<PropagationMatrices(double)>;

// Walker integral curve of d/du through `base`: (u0 + v, v0, x0, y0). Coefficients
// are evaluated exactly at each curve point and converted to double.
PropagationProvider walker_provider(const WalkerMetric& w, const Point& base);
// Constant coefficients; kappa entries default to zero.
struct ConstantCoefficients {
  double rho = 0, rhot = 0, sigma = 0, sigmat = 0, tau = 0, taut = 0;
  double gamma_sum = 0, alpha_betat = 0, alphat_beta = 0, kappa = 0, kappat = 0;
  // N entries
  double Phi00 = 0, Psi0 = 0, tPsi0 = 0, Psi1_Phi01 = 0, tPsi1_Phi10 = 0, trace_term = 0;
};
PropagationProvider constant_provider(const ConstantCoefficients& k);

class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConnectingSample {
  double v;
  ConnectingState z;
};
using ConnectingPath = std::vector<ConnectingSample>;

// Classical RK4 on DZ = M Z from v = 0; nu is held at its initial value exactly.
ConnectingPath integrate_connecting(const PropagationProvider& prov, const ConnectingState& z0, double v_end,
                                    double step);

struct JacobiSample {
  double v;
  ConnectingState z, dz;
};
using JacobiPath = std::vector<JacobiSample>;

// RK4 on D^2 Z = -N Z.
JacobiPath integrate_jacobi(const PropagationProvider& prov, const ConnectingState& z0, const ConnectingState& dz0,
                            double v_end, double step);

// Richardson estimate |Z_h - Z_{h/2}| / 15 at v_end (max norm).
double richardson_error(const PropagationProvider& prov, const ConnectingState& z0, double v_end, double step);

// Closed-form Walker solution along d/du: returns Z(v) from Z(0) for base point `base`.
ConnectingState walker_connecting_oracle(const WalkerMetric& w, const Point& base, const ConnectingState& z0,
                                         double v);

// D M + M^2 + N and D P + P^2 + Q, with D the derivative along l.
struct RiccatiResidual {
  std::array<std::array<RF, 4>, 4> full;
  std::array<std::array<RF, 2>, 2> orthogonal;
  bool is_zero() const;
};
RiccatiResidual riccati_residual(const SpinCoefficientSet& s, const CurvatureSpinors& c, const Tetrad& t);

class CausticError : public std::runtime_error {
 public:
  CausticError(const std::string& msg, double v) : std::runtime_error(msg), v_(v) {}
  double where() const { return v_; }

 private:
  double v_;
};

// M0 (M0 v + 1)^{-1}; throws CausticError when the bracket is singular.
Eigen::MatrixXd curvature_free_solution(const Eigen::MatrixXd& m0, double v);
// Entry-wise closed form of the 2x2 case: (rho, sigma, sigmat, rhot) at v.
std::array<double, 4> curvature_free_scalars(double rho0, double sigma0, double sigmat0, double rhot0, double v);

enum class FlowKind { Dilation, Rotation, Boost, InverseScale, Diagonal };
FlowKind flow_kind_from_string(const std::string& s);
// Throws std::invalid_argument when P does not have the vanishing pattern of `kind`.
void check_flow_pattern(FlowKind kind, const Eigen::Matrix2d& P, double tol = 0.0);
// Closed-form orthogonal state. Diagonal uses (int rho, int rhot); the others one integral.
Eigen::Vector2d special_flow(FlowKind kind, const std::vector<double>& integrals, const Eigen::Vector2d& x0);

// Sigma(V, W) = (V.DW - W.DV) / 2 with explicit derivatives.
double sigma_form(const ConnectingState& v, const ConnectingState& dv, const ConnectingState& w,
                  const ConnectingState& dw);
// The evaluated form; equals sigma_form for connecting fields when kappa = kappat = 0.
double sigma_closed_form(const ConnectingState& v, const ConnectingState& w, const PropagationMatrices& pm);
// Omega = zeta xit - zetat xi on the orthogonal projections.
double omega_form(const ConnectingState& v, const ConnectingState& w);

std::vector<double> sigma_along(const JacobiPath& a, const JacobiPath& b);
std::vector<double> sigma_along(const ConnectingPath& a, const ConnectingPath& b, const PropagationProvider& prov);
std::vector<double> omega_along(const ConnectingPath& a, const ConnectingPath& b);

// Decomposition of P = ((rho, sigma), (sigmat, rhot)) into dilation, shear
// (E3), rotation (E2) and boost (E4) parts, and of T_ab into its trace-free
// symmetric part, trace part and skew part.
struct ShapeDecomposition {
  Rational dilation, shear, rotation, boost;  // coefficients of E1, E3, E2, E4
  std::array<std::array<Rational, 2>, 2> P;
  Rational discriminant;                      // (rho - rhot)^2 + 4 sigma sigmat
  std::array<std::complex<double>, 2> eigenvalues;
  // T = S + trace_coef h + skew_coef Omega on (zeta, zetat) x (xi, xit).
  std::array<std::array<Rational, 2>, 2> T, S;
  Rational trace_coef, skew_coef;
  // Reconstruction defects; zero by construction.
  std::array<std::array<Rational, 2>, 2> P_defect() const;
  std::array<std::array<Rational, 2>, 2> T_defect() const;
};
ShapeDecomposition shape_decomposition(Rational rho, Rational rhot, Rational sigma, Rational sigmat);

// CSV with header v,eta,zeta,zetatilde,nu,rho,rhotilde,sigma,sigmatilde.
void write_csv(std::ostream& os, const ConnectingPath& path, const PropagationProvider& prov);
// Shortest round-trip decimal.
std::string format_double(double x);

}  // namespace wnp

#endif  // WALKERNP_CONGRUENCE_HPP
