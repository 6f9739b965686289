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

#ifndef WALKERNP_NULLGEOM_HPP
#define WALKERNP_NULLGEOM_HPP

#include <array>
#include <string>
#include <vector>

#include "walkernp/curvature.hpp"
#include "walkernp/spincoeff.hpp"
#include "walkernp/walker.hpp"

namespace wnp {

// pi^{A'} = p o^{A'} + q iota^{A'} in the Walker primed frame.
struct PrimedSpinorField {
  RF p, q;
};

DyadSpinorField as_field(const PrimedSpinorField& pi);

// Everything the null-geometry checks need about one Walker metric, computed once.
struct WalkerFrameData {
  WalkerMetric w;
  MetricTensor m;
  Christoffel gam;
  Tetrad t;
  SpinCoefficientSet s;
  CurvatureSpinors c;
};
WalkerFrameData walker_frame_data(const WalkerMetric& w);

// pi_{A'} pi^{B'} nabla_{BB'} pi^{A'}: one lower unprimed slot.
DyadSpinorField alpha_integrability_residual(const PrimedSpinorField& pi, const SpinCoefficientSet& s, const Tetrad& t);

struct STForms {
  Vec4 S, T;                 // coordinate one-forms
  std::array<RF, 4> S_dyad;  // S_{BB'} at flat index 2B + B'
  std::array<RF, 4> T_dyad;
  std::array<RF, 2> omega, eta;  // lower unprimed components
  // omega_A - (nabla_{AD'} pi^{D'} - eta_A); identically zero.
  std::array<RF, 2> lemma_residual;
};

// Throws std::invalid_argument when pi is not alpha-integrable.
STForms s_and_t_forms(const PrimedSpinorField& pi, const SpinCoefficientSet& s, const MetricTensor& m,
                      const Tetrad& t);

// (nabla_b pi_{A'})(nabla^b pi^{A'}) and 2 eta^D omega_D.
struct NablaPiSquare {
  RF lhs, rhs;
};
NablaPiSquare nabla_pi_square(const PrimedSpinorField& pi, const SpinCoefficientSet& s, const MetricTensor& m,
                              const Tetrad& t);

// (d l ^ l)_{abc} for a < b < c, in the order 012, 013, 023, 123.
std::array<RF, 4> frobenius_check(const Vec4& l);

struct WpsResult {
  RF quartic;                // Psi~_{A'B'C'D'} pi^A' pi^B' pi^C' pi^D'
  std::array<RF, 2> lambda;  // Psi~_{A'B'C'D'} pi^B' pi^C' pi^D'
};
WpsResult wps_tests(const PrimedSpinorField& pi, const CurvatureSpinors& c);

// pi^{A'} ... nabla^{DD'} Psi~_{A'B'C'D'} with 5 - q copies of pi, q in {2, 3, 4}.
DyadSpinorField ggst_condition_iii(const PrimedSpinorField& pi, int q, const CurvatureSpinors& c,
                                   const SpinCoefficientSet& s, const Tetrad& t);

struct Flag {
  bool value = false;
  Residuals witness;
};

struct TypeIFlags {
  Flag auto_parallel, parallel;
};
TypeIFlags classify_type_I(const SpinCoefficientSet& s);

struct TypeIIIFlags {
  Flag integrable, auto_parallel, parallel;
  // Curvature consequences that must vanish when the flags hold.
  Residuals auto_parallel_consequences, parallel_consequences;
};
TypeIIIFlags classify_type_III(const SpinCoefficientSet& s, const CurvatureSpinors& c);

struct RicciFlags {
  Flag aligned;  // Phi_{ABA'B'} pi^A' pi^B' = 0
  Flag null;     // Phi_{ABA'B'} pi^B' = 0
};
RicciFlags ricci_conditions(const PrimedSpinorField& pi, const CurvatureSpinors& c);
// a11 - b22, b12 + c11, a12 + c22.
Residuals walker_ricci_null_residuals(const WalkerMetric& w);

struct KerrReport {
  bool hypothesis = false;       // double Ricci contraction vanishes
  std::array<RF, 4> conclusion;  // frobenius_check(S)
  bool conclusion_holds = false;
  bool consistent() const { return !hypothesis || conclusion_holds; }
};
// Throws std::invalid_argument when pi is not integrable or S vanishes.
KerrReport kerr_check(const PrimedSpinorField& pi, const SpinCoefficientSet& s, const CurvatureSpinors& c,
                      const MetricTensor& m, const Tetrad& t);

struct DistributionReport {
  Flag alpha_integrable, walker, auto_parallel, parallel, typeIII_integrable, ricci_null, ricci_aligned;
};
DistributionReport distribution_report(const WalkerFrameData& d, const PrimedSpinorField& pi);

// Named relation suites; see relation_suite_names() for the list.
const std::vector<std::string>& relation_suite_names();
Residuals relation_suite(const SpinCoefficientSet& s, const CurvatureSpinors& c, const std::string& suite);

}  // namespace wnp

#endif  // WALKERNP_NULLGEOM_HPP
