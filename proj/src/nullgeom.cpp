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

#include "walkernp/nullgeom.hpp"

#include <bit>
#include <map>
#include <stdexcept>

#include "table_eval.hpp"

namespace wnp {

namespace {

bool all_zero(const Residuals& r) {
  for (const auto& [name, v] : r)
    if (!v.is_zero()) return false;
  return true;
}

Flag flag_from(Residuals r) {
  Flag f;
  f.value = all_zero(r);
  f.witness = std::move(r);
  return f;
}

Residuals coefficient_list(const SpinCoefficientSet& s, std::initializer_list<int> idx) {
  Residuals r;
  for (int i : idx) r.emplace_back(SpinCoefficientSet::name(i), s[i]);
  return r;
}

int binom(int n, int k) {
  int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

RF power(const RF& x, int n) {
  RF r(1);
  for (int i = 0; i < n; ++i) r = r * x;
  return r;
}

// nabla pi with slots [pi^{A'}, lower B, lower B'].
DyadSpinorField nabla_pi(const PrimedSpinorField& pi, const SpinCoefficientSet& s, const Tetrad& t) {
  return dyad_covariant_derivative(as_field(pi), s, t);
}

// S_{BB'} = pi_{A'} nabla_{BB'} pi^{A'}: slots [lower B, lower B'].
DyadSpinorField s_spinor(const PrimedSpinorField& pi, const DyadSpinorField& dpi) {
  return contract_slots(tensor(lower_slot(as_field(pi), 0), dpi), 0, 1);
}

}  // namespace

DyadSpinorField as_field(const PrimedSpinorField& pi) {
  DyadSpinorField f({Slot::PrimedUpper});
  f[0] = pi.p;
  f[1] = pi.q;
  return f;
}

WalkerFrameData walker_frame_data(const WalkerMetric& w) {
  WalkerFrameData d;
  d.w = w;
  d.m = assemble_metric(w);
  d.gam = christoffel(d.m);
  d.t = walker_tetrad(w);
  d.s = walker_closed_form(w);
  d.c = walker_curvature_components(w);
  return d;
}

DyadSpinorField alpha_integrability_residual(const PrimedSpinorField& pi, const SpinCoefficientSet& s,
                                             const Tetrad& t) {
  const DyadSpinorField S = s_spinor(pi, nabla_pi(pi, s, t));
  // contract pi^{B'} with the B' slot of S_{BB'}
  return contract_slots(tensor(as_field(pi), S), 0, 2);
}

STForms s_and_t_forms(const PrimedSpinorField& pi, const SpinCoefficientSet& s, const MetricTensor& m,
                      const Tetrad& t) {
  if (!alpha_integrability_residual(pi, s, t).is_zero())
    throw std::invalid_argument("the alpha-distribution of pi is not integrable");
  const DyadSpinorField dpi = nabla_pi(pi, s, t);
  const DyadSpinorField S = s_spinor(pi, dpi);
  // T_{BA'} = pi^{B'} (nabla_{BB'} pi)_{A'}: slots [A' lower, B lower] after contraction.
  const DyadSpinorField T = contract_slots(tensor(as_field(pi), lower_slot(dpi, 0)), 0, 3);

  STForms out;
  for (int b = 0; b < 2; ++b)
    for (int bp = 0; bp < 2; ++bp) {
      out.S_dyad[2 * b + bp] = S.at({b, bp});
      out.T_dyad[2 * b + bp] = T.at({bp, b});
    }
  out.S = dyad_covector_to_coord(m, t, out.S_dyad);
  out.T = dyad_covector_to_coord(m, t, out.T_dyad);

  // Dual spinor xi with pi_{A'} xi^{A'} = 1.
  std::array<RF, 2> xi;
  if (!pi.p.is_zero()) xi = {RF(0), pi.p.inverse()};
  else if (!pi.q.is_zero()) xi = {-pi.q.inverse(), RF(0)};
  else throw std::invalid_argument("pi vanishes identically");

  // nabla_{AD'} pi^{D'}
  const DyadSpinorField div = contract_slots(dpi, 0, 2);
  for (int a = 0; a < 2; ++a) {
    out.omega[a] = out.S_dyad[2 * a] * xi[0] + out.S_dyad[2 * a + 1] * xi[1];
    out.eta[a] = out.T_dyad[2 * a] * xi[0] + out.T_dyad[2 * a + 1] * xi[1];
    out.lemma_residual[a] = out.omega[a] - (div[a] - out.eta[a]);
  }
  return out;
}

NablaPiSquare nabla_pi_square(const PrimedSpinorField& pi, const SpinCoefficientSet& s, const MetricTensor& m,
                              const Tetrad& t) {
  const DyadSpinorField dpi = nabla_pi(pi, s, t);
  const DyadSpinorField lowered = lower_slot(dpi, 0);          // [A' lower, B lower, B' lower]
  const DyadSpinorField raised = raise_slot(raise_slot(dpi, 1), 2);  // [A' upper, B upper, B' upper]
  DyadSpinorField prod = tensor(lowered, raised);
  prod = contract_slots(prod, 2, 5);
  prod = contract_slots(prod, 1, 3);
  prod = contract_slots(prod, 0, 1);
  const STForms f = s_and_t_forms(pi, s, m, t);
  NablaPiSquare r;
  r.lhs = prod[0];
  r.rhs = RF(2) * (f.eta[1] * f.omega[0] - f.eta[0] * f.omega[1]);
  return r;
}

std::array<RF, 4> frobenius_check(const Vec4& l) {
  RF dl[4][4];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) dl[a][b] = l[b].diff(a) - l[a].diff(b);
  std::array<RF, 4> out;
  int k = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c) out[k++] = dl[a][b] * l[c] + dl[b][c] * l[a] + dl[c][a] * l[b];
  return out;
}

WpsResult wps_tests(const PrimedSpinorField& pi, const CurvatureSpinors& c) {
  WpsResult r;
  for (int k = 0; k <= 4; ++k)
    if (!c.tPsi[k].is_zero()) r.quartic += RF(binom(4, k)) * c.tPsi[k] * power(pi.p, 4 - k) * power(pi.q, k);
  for (int a = 0; a < 2; ++a)
    for (int k = 0; k <= 3; ++k)
      if (!c.tPsi[a + k].is_zero())
        r.lambda[a] += RF(binom(3, k)) * c.tPsi[a + k] * power(pi.p, 3 - k) * power(pi.q, k);
  return r;
}

DyadSpinorField ggst_condition_iii(const PrimedSpinorField& pi, int q, const CurvatureSpinors& c,
                                   const SpinCoefficientSet& s, const Tetrad& t) {
  if (q < 2 || q > 4) throw std::invalid_argument("ggst condition (iii) needs q in {2, 3, 4}");
  DyadSpinorField psi(std::vector<Slot>(4, Slot::PrimedLower));
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = c.tPsi[std::popcount(i)];
  // [A' B' C' D' lower, E lower, E' lower] -> raise the derivative slots
  DyadSpinorField d = raise_slot(raise_slot(dyad_covariant_derivative(psi, s, t), 4), 5);
  d = contract_slots(d, 3, 5);  // [A' B' C', E upper]
  for (int k = 0; k < 5 - q; ++k) d = contract_slots(tensor(as_field(pi), d), 0, 1);
  return d;
}

TypeIFlags classify_type_I(const SpinCoefficientSet& s) {
  using namespace sc;
  TypeIFlags f;
  f.auto_parallel = flag_from(coefficient_list(s, {kappa, t(kappa)}));
  f.parallel = flag_from(coefficient_list(s, {kappa, t(kappa), sigma, t(sigma), rho, t(rho), tau, t(tau)}));
  return f;
}

TypeIIIFlags classify_type_III(const SpinCoefficientSet& s, const CurvatureSpinors& c) {
  using namespace sc;
  TypeIIIFlags f;
  Residuals integ = coefficient_list(s, {kappa, t(kappa)});
  integ.emplace_back("rho - ~rho", s[rho] - s[t(rho)]);
  f.integrable = flag_from(std::move(integ));
  f.auto_parallel = flag_from(coefficient_list(s, {kappa, t(kappa), sigma, t(sigma), rho, t(rho)}));
  f.parallel = flag_from(coefficient_list(s, {kappa, t(kappa), sigma, t(sigma), rho, t(rho), tau, t(tau)}));
  f.auto_parallel_consequences = {{"Psi0", c.Psi[0]},
                                  {"~Psi0", c.tPsi[0]},
                                  {"Phi00", c.Phi[0][0]},
                                  {"Psi1 - Phi01", c.Psi[1] - c.Phi[0][1]},
                                  {"~Psi1 - Phi10", c.tPsi[1] - c.Phi[1][0]}};
  f.parallel_consequences = {{"Psi2 + 2 Lambda", c.Psi[2] + RF(2) * c.Lambda},
                             {"~Psi2 + 2 Lambda", c.tPsi[2] + RF(2) * c.Lambda}};
  return f;
}

RicciFlags ricci_conditions(const PrimedSpinorField& pi, const CurvatureSpinors& c) {
  const RF pc[2] = {pi.p, pi.q};
  Residuals dbl, sgl;
  // Phi_{ABA'B'} depends on A+B and A'+B'; symmetric pairs are listed once.
  for (int ab = 0; ab < 3; ++ab) {
    RF x;
    for (int ap = 0; ap < 2; ++ap)
      for (int bp = 0; bp < 2; ++bp)
        if (!c.Phi[ab][ap + bp].is_zero()) x += c.Phi[ab][ap + bp] * pc[ap] * pc[bp];
    dbl.emplace_back("Phi pi pi [" + std::to_string(ab) + "]", x);
    for (int ap = 0; ap < 2; ++ap) {
      RF y;
      for (int bp = 0; bp < 2; ++bp)
        if (!c.Phi[ab][ap + bp].is_zero()) y += c.Phi[ab][ap + bp] * pc[bp];
      sgl.emplace_back("Phi pi [" + std::to_string(ab) + "," + std::to_string(ap) + "]", y);
    }
  }
  RicciFlags f;
  f.aligned = flag_from(std::move(dbl));
  f.null = flag_from(std::move(sgl));
  return f;
}

Residuals walker_ricci_null_residuals(const WalkerMetric& w) {
  return {{"a11 - b22", RF(w.a.diff({U, U}) - w.b.diff({V, V}))},
          {"b12 + c11", RF(w.b.diff({U, V}) + w.c.diff({U, U}))},
          {"a12 + c22", RF(w.a.diff({U, V}) + w.c.diff({V, V}))}};
}

KerrReport kerr_check(const PrimedSpinorField& pi, const SpinCoefficientSet& s, const CurvatureSpinors& c,
                      const MetricTensor& m, const Tetrad& t) {
  const STForms f = s_and_t_forms(pi, s, m, t);
  bool s_zero = true;
  for (const auto& x : f.S) s_zero = s_zero && x.is_zero();
  if (s_zero) throw std::invalid_argument("S_a vanishes identically (Walker case); the lemma is vacuous");
  KerrReport r;
  r.hypothesis = ricci_conditions(pi, c).aligned.value;
  r.conclusion = frobenius_check(f.S);
  r.conclusion_holds = true;
  for (const auto& x : r.conclusion) r.conclusion_holds = r.conclusion_holds && x.is_zero();
  return r;
}

DistributionReport distribution_report(const WalkerFrameData& d, const PrimedSpinorField& pi) {
  DistributionReport r;
  const DyadSpinorField res = alpha_integrability_residual(pi, d.s, d.t);
  Residuals ai;
  for (int b = 0; b < 2; ++b) ai.emplace_back("integrability [" + std::to_string(b) + "]", res[b]);
  r.alpha_integrable = flag_from(std::move(ai));
  if (r.alpha_integrable.value) {
    const STForms f = s_and_t_forms(pi, d.s, d.m, d.t);
    Residuals sw;
    for (int a = 0; a < 4; ++a) sw.emplace_back("S_" + std::to_string(a), f.S[a]);
    r.walker = flag_from(std::move(sw));
  } else {
    r.walker.value = false;
    r.walker.witness = {{"not alpha-integrable", RF(1)}};
  }
  const TypeIFlags t1 = classify_type_I(d.s);
  r.auto_parallel = t1.auto_parallel;
  r.parallel = t1.parallel;
  r.typeIII_integrable = classify_type_III(d.s, d.c).integrable;
  const RicciFlags rf = ricci_conditions(pi, d.c);
  r.ricci_null = rf.null;
  r.ricci_aligned = rf.aligned;
  return r;
}

// ---------------------------------------------------------------------------
// Relation suites

namespace {

struct Suite {
  std::string name;
  std::vector<std::pair<std::string, std::string>> rows;  // label, expression
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"walker-spin",
       {{"alpha' + ~alpha + tau", "alpp+talp+tau"},
        {"beta + ~beta' + tau", "bet+tbetp+tau"},
        {"gamma - ~gamma - rho'", "gam-tgam-rhop"},
        {"epsilon' - ~epsilon' + rho'", "epsp-tepsp+rhop"}}},
      {"induced-flat",
       {{"kappa", "kap"},
        {"rho", "rho"},
        {"alpha", "alp"},
        {"epsilon", "eps"},
        {"tau'", "taup"},
        {"sigma'", "sigp"},
        {"~epsilon", "teps"},
        {"~beta", "tbet"}}},
      {"walker-tilde", {{"~kappa", "tkap"}, {"~sigma", "tsig"}, {"~rho", "trho"}, {"~tau", "ttau"}}},
      {"walker-curvature",
       {{"Phi00", "P00"},
        {"Phi10", "P10"},
        {"Phi20", "P20"},
        {"~Psi0", "tPsi0"},
        {"~Psi1", "tPsi1"},
        {"~Psi2 + 2 Lambda", "tPsi2+2*Lam"}}},
      {"hypersurface-integrable", {{"tau + ~alpha + beta", "tau+talp+bet"}, {"~tau + alpha + ~beta", "ttau+alp+tbet"}}},
      {"hypersurface-walker",
       {{"~kappa", "tkap"},
        {"kappa", "kap"},
        {"~epsilon", "teps"},
        {"epsilon", "eps"},
        {"tau'", "taup"},
        {"~tau'", "ttaup"},
        {"tau + ~alpha + beta", "tau+talp+bet"},
        {"~tau + alpha + ~beta", "ttau+alp+tbet"},
        {"rho - ~rho", "rho-trho"}}},
      {"hypersurface-autoparallel-curvature",
       {{"Psi0", "Psi0"},
        {"~Psi0", "tPsi0"},
        {"Phi00", "P00"},
        {"Psi1 - Phi01", "Psi1-P01"},
        {"~Psi1 - Phi10", "tPsi1-P10"}}},
      {"hypersurface-parallel-curvature",
       {{"Psi0", "Psi0"},
        {"Psi1", "Psi1"},
        {"~Psi0", "tPsi0"},
        {"~Psi1", "tPsi1"},
        {"Phi00", "P00"},
        {"Phi10", "P10"},
        {"Phi01", "P01"},
        {"Phi20", "P20"},
        {"Phi02", "P02"},
        {"Psi2 + 2 Lambda", "Psi2+2*Lam"},
        {"~Psi2 + 2 Lambda", "tPsi2+2*Lam"}}},
      {"ricci-aligned", {{"~beta", "tbet"}, {"alpha + 1", "alp+1"}, {"~Psi2 + 2 Lambda - 2 ~alpha", "tPsi2+2*Lam-2*talp"}}},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& relation_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : suites()) n.push_back(s.name);
    return n;
  }();
  return names;
}

Residuals relation_suite(const SpinCoefficientSet& s, const CurvatureSpinors& c, const std::string& suite) {
  const Suite* chosen = nullptr;
  for (const auto& x : suites())
    if (x.name == suite) chosen = &x;
  if (!chosen) throw std::invalid_argument("unknown relation suite '" + suite + "'");

  static const char* const kShort[8] = {"kap", "sig", "rho", "tau", "eps", "alp", "bet", "gam"};
  detail::TableEval e;
  for (int b = 0; b < 8; ++b)
    for (bool pr : {false, true})
      for (bool tl : {false, true})
        e.vars[std::string(tl ? "t" : "") + kShort[b] + (pr ? "p" : "")] = s[sc::idx(static_cast<sc::Base>(b), pr, tl)];
  for (int k = 0; k < 5; ++k) {
    e.vars["Psi" + std::to_string(k)] = c.Psi[k];
    e.vars["tPsi" + std::to_string(k)] = c.tPsi[k];
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e.vars["P" + std::to_string(i) + std::to_string(j)] = c.Phi[i][j];
  e.vars["Lam"] = c.Lambda;

  Residuals out;
  for (const auto& [label, expr] : chosen->rows) out.emplace_back(label, e(expr));
  return out;
}

}  // namespace wnp
