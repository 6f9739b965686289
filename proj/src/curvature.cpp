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

#include "walkernp/curvature.hpp"

#include <stdexcept>

#include "table_eval.hpp"

namespace wnp {

namespace {

const char* const kShortBase[8] = {"kap", "sig", "rho", "tau", "eps", "alp", "bet", "gam"};

// Bind the table symbols. In the tilde version the two coefficient families,
// delta and Delta, Psi and Psi~, and the off-diagonal Phi indices trade places.
detail::TableEval make_env(const SpinCoefficientSet& s, const CurvatureSpinors* c, const Tetrad& t, bool tilde) {
  detail::TableEval e;
  for (int b = 0; b < 8; ++b)
    for (bool pr : {false, true}) {
      const std::string nm = std::string(kShortBase[b]) + (pr ? "p" : "");
      const auto base = static_cast<sc::Base>(b);
      e.vars[nm] = s[sc::idx(base, pr, tilde)];
      e.vars["t" + nm] = s[sc::idx(base, pr, !tilde)];
    }
  if (c) {
    for (int k = 0; k < 5; ++k) e.vars["Psi" + std::to_string(k)] = tilde ? c->tPsi[k] : c->Psi[k];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        e.vars["P" + std::to_string(i) + std::to_string(j)] = tilde ? c->Phi[j][i] : c->Phi[i][j];
    e.vars["Pi"] = c->Pi;
  }
  const Tetrad* tp = &t;
  e.ops["D"] = [tp](const RF& f) { return directional(*tp, Op::D, f); };
  e.ops["Dp"] = [tp](const RF& f) { return directional(*tp, Op::Dp, f); };
  e.ops[tilde ? "tr" : "de"] = [tp](const RF& f) { return directional(*tp, Op::delta, f); };
  e.ops[tilde ? "de" : "tr"] = [tp](const RF& f) { return directional(*tp, Op::Delta, f); };
  return e;
}

struct FieldRow {
  const char* label;
  const char* lhs;
  const char* rhs;
};

// Notation: kap = kappa, kapp = kappa', tkap = kappa~, D' = Dp, delta = de,
// Delta = tr, Phi_ij = Pij.
const FieldRow kFieldRows[24] = {
    {"a", "tr(kap)-D(rho)", "rho**2+sig*tsig-tkap*tau+kap*(taup+2*alp+tbet+betp)-rho*(eps+teps)+P00"},
    {"a'", "-de(kapp)-Dp(rhop)", "rhop**2+sigp*tsigp-tkapp*taup+kapp*(tau+2*alpp+tbetp+bet)-rhop*(epsp+tepsp)+P22"},
    {"b", "de(kap)-D(sig)", "sig*(rho+trho-tgamp+gamp-2*eps)-kap*(tau-ttaup-talp-alpp-2*bet)+Psi0"},
    {"b'", "-tr(kapp)-Dp(sigp)", "sigp*(rhop+trhop-tgam+gam-2*epsp)-kapp*(taup-ttau-talpp-alp-2*betp)+Psi4"},
    {"c", "Dp(kap)-D(tau)", "rho*(tau+ttaup)+sig*(ttau+taup)-tau*(tgamp+eps)+kap*(tgam+2*gam-epsp)+Psi1+P01"},
    {"c'", "D(kapp)-Dp(taup)", "rhop*(taup+ttau)+sigp*(ttaup+tau)-taup*(tgam+epsp)+kapp*(tgamp+2*gamp-eps)-Psi3-P21"},
    {"d", "tr(sig)-de(rho)", "tau*(rho-trho)+kap*(trhop-rhop)-rho*(talp+bet)+sig*(2*alp-talpp+betp)-Psi1+P01"},
    {"d'", "-de(sigp)+tr(rhop)", "taup*(rhop-trhop)+kapp*(trho-rho)-rhop*(talpp+betp)+sigp*(2*alpp-talp+bet)+Psi3-P21"},
    {"e", "Dp(sig)-de(tau)", "-rhop*sig-tsigp*rho+tau**2-kap*tkapp-tau*(bet-tbetp)+sig*(2*gam-epsp+tepsp)+P02"},
    {"e'", "D(sigp)+tr(taup)", "-rho*sigp-tsig*rhop+taup**2-kapp*tkap-taup*(betp-tbet)+sigp*(2*gamp-eps+teps)+P20"},
    {"f", "tr(tau)-Dp(rho)", "rho*trhop+sig*sigp-tau*ttau+kap*kapp-rho*(gam+tgam)+tau*(alp-talpp)-Psi2-2*Pi"},
    {"f'", "-de(taup)-D(rhop)", "rhop*trho+sigp*sig-taup*ttaup+kapp*kap-rhop*(gamp+tgamp)+taup*(alpp-talp)-Psi2-2*Pi"},
    {"g", "Dp(bet)-de(gam)", "tau*rhop+kapp*sig-tkapp*eps-alp*tsigp+bet*(tepsp-rhop+gam)+gam*(tbetp+alpp+tau)-P12"},
    {"g'", "D(betp)+tr(gamp)", "taup*rho+kap*sigp-tkap*epsp-alpp*tsig+betp*(teps-rho+gamp)+gamp*(tbet+alp+taup)+P10"},
    {"h", "tr(eps)-D(alp)", "-taup*rho-kap*sigp-tkap*gam+bet*tsig-alp*(teps-rho+gamp)+eps*(tbet+alp+taup)-P10"},
    {"h'", "-de(epsp)-Dp(alpp)", "-tau*rhop-kapp*sig-tkapp*gamp+betp*tsigp-alpp*(tepsp-rhop+gam)+epsp*(tbetp+alpp+tau)+P12"},
    {"i", "D(bet)-de(eps)", "kap*(rhop+gam)+sig*(taup-alp)+bet*(tgamp-trho)-eps*(ttaup+talp)+Psi1"},
    {"i'", "Dp(betp)+tr(epsp)", "kapp*(rho+gamp)+sigp*(tau-alpp)+betp*(tgam-trhop)-epsp*(ttau+talpp)-Psi3"},
    {"j", "tr(gam)-Dp(alp)", "kapp*(eps-rho)+sigp*(bet-tau)+alp*(trhop-tgam)-gam*(ttau+talpp)-(gam*betp+alp*epsp)+Psi3"},
    {"j'", "-de(gamp)-D(alpp)", "kap*(epsp-rhop)+sig*(betp-taup)+alpp*(trho-tgamp)-gamp*(ttaup+talp)-(gamp*bet+alpp*eps)-Psi1"},
    {"k", "D(gam)-Dp(eps)", "tau*taup-kap*kapp-bet*(taup+ttau)-alp*(ttaup+tau)-eps*(gam+tgam)+gam*(gamp+tgamp)+Psi2+P11-Pi"},
    {"k'", "Dp(gamp)-D(epsp)", "tau*taup-kap*kapp-betp*(tau+ttaup)-alpp*(ttau+taup)-epsp*(gamp+tgamp)+gamp*(gam+tgam)+Psi2+P11-Pi"},
    {"l", "tr(bet)-de(alp)", "rho*rhop-sig*sigp-alp*talp-bet*talpp+alp*(bet+alpp)+gam*(rho-trho)+eps*(trhop-rhop)+Psi2-P11-Pi"},
    {"l'", "-de(betp)+tr(alpp)", "rho*rhop-sig*sigp-alpp*talpp-betp*talp+alpp*(betp+alp)+gamp*(rhop-trhop)+epsp*(trho-rho)+Psi2-P11-Pi"},
};

struct CommutatorRow {
  const char* label;
  const char* lhs;
  const char* general;
  const char* walker;
};

const CommutatorRow kCommutatorRows[6] = {
    {"[D',D]", "Dp(D(f))-D(Dp(f))",
     "(gam+tgam)*D(f)-(gamp+tgamp)*Dp(f)+(tau+ttaup)*tr(f)+(taup+ttau)*de(f)", "a1/2*D(f)+c1/2*tr(f)"},
    {"[delta,D]", "de(D(f))-D(de(f))",
     "(bet+talp+ttaup)*D(f)-kap*Dp(f)+sig*tr(f)+(trho-eps-tgamp)*de(f)", "-c1/2*D(f)-b1/2*tr(f)"},
    {"[D',Delta]", "Dp(tr(f))-tr(Dp(f))",
     "(betp+talpp+ttau)*Dp(f)-kapp*D(f)-sigp*de(f)-(trhop-epsp-tgam)*tr(f)", "a2/2*D(f)+c2/2*tr(f)"},
    {"[D,Delta]", "D(tr(f))-tr(D(f))",
     "tkap*Dp(f)-(taup+tbet+alp)*D(f)-tsig*de(f)-(rho-teps-gamp)*tr(f)", "0"},
    {"[delta,D']", "de(Dp(f))-Dp(de(f))",
     "tkapp*D(f)-(tau+tbetp+alpp)*Dp(f)+tsigp*tr(f)+(rhop-tepsp-gam)*de(f)", "tkapp*D(f)+tsigp*tr(f)"},
    {"[Delta,delta]", "tr(de(f))-de(tr(f))",
     "(trhop-rhop)*D(f)+(rho-trho)*Dp(f)+(alpp-talp)*tr(f)+(alp-talpp)*de(f)", "c2/2*D(f)+b2/2*tr(f)"},
};

// Spin-coefficient closed forms of the curvature in Walker frames. The first
// entry of each row is the primary formula; the rest must agree with it.
struct CurvRow {
  const char* name;
  std::vector<const char*> forms;
};

const std::vector<CurvRow>& curvature_rows() {
  static const std::vector<CurvRow> rows = {
      {"Psi0", {"-D(sig)"}},
      {"Psi1", {"D(bet)", "-(D(tau)+tr(sig))/2"}},
      {"Psi2", {"(D(gam)+tr(bet-tau))/3", "(D(gam+rhop)+tr(bet))/3"}},
      {"Psi3", {"tr(gam)", "(tr(rhop)-D(kapp))/2"}},
      {"Psi4", {"-tr(kapp)"}},
      {"~Psi0", {"0"}},
      {"~Psi1", {"0"}},
      {"~Psi2", {"(D(tgam)-tr(talp))/3", "S/12"}},
      {"~Psi3", {"de(tgam)-Dp(talp)", "-(D(tkapp)+tr(tsigp))/2"}},
      {"~Psi4", {"2*(tsigp*tepsp-tkapp*tbetp)-de(tkapp)-Dp(tsigp)"}},
      {"S", {"4*(D(gam)+tr(bet+2*tau))", "4*(D(gam-2*rhop)+tr(bet))", "a11+b22+2*c12"}},
      {"Phi00", {"0"}},
      {"Phi01", {"D(tbetp)", "(tr(sig)-D(tau))/2"}},
      {"Phi02", {"D(tsigp)", "Dp(sig)-de(tau)+2*(tau*bet-sig*gam)"}},
      {"Phi10", {"0"}},
      {"Phi11", {"(D(gam)-tr(bet))/2", "(D(tgam)+tr(talp))/2"}},
      {"Phi12", {"tau*rhop+kapp*sig-Dp(bet)+de(gam)", "(tr(tsigp)-D(tkapp))/2"}},
      {"Phi20", {"0"}},
      {"Phi21", {"tr(tgam)", "-(D(kapp)+tr(rhop))/2"}},
      {"Phi22", {"-tr(tkapp)", "2*(rhop*epsp-kapp*alpp)-de(kapp)-Dp(rhop)"}},
  };
  return rows;
}

void bind_walker_data(detail::TableEval& e, const WalkerMetric& w) {
  const Poly* fs[3] = {&w.a, &w.b, &w.c};
  const char names[3] = {'a', 'b', 'c'};
  for (int k = 0; k < 3; ++k) {
    const std::string n(1, names[k]);
    e.vars[n + "1"] = RF(fs[k]->diff(U));
    e.vars[n + "2"] = RF(fs[k]->diff(V));
    e.vars[n + "11"] = RF(fs[k]->diff({U, U}));
    e.vars[n + "12"] = RF(fs[k]->diff({U, V}));
    e.vars[n + "22"] = RF(fs[k]->diff({V, V}));
  }
}

}  // namespace

RiemannData riemann(const MetricTensor& m, const Christoffel& gam) {
  RiemannData r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = c + 1; d < 4; ++d) {
          Poly v = gam(a, d, b).diff(c) - gam(a, c, b).diff(d);
          for (int e = 0; e < 4; ++e) {
            if (!gam(a, c, e).is_zero() && !gam(e, d, b).is_zero()) v += gam(a, c, e) * gam(e, d, b);
            if (!gam(a, d, e).is_zero() && !gam(e, c, b).is_zero()) v -= gam(a, d, e) * gam(e, c, b);
          }
          r.riemann[a][b][d][c] = -v;
          r.riemann[a][b][c][d] = std::move(v);
        }
  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d) {
      Poly s;
      for (int a = 0; a < 4; ++a) s += r.riemann[a][b][a][d];
      r.ricci[b][d] = std::move(s);
    }
  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d)
      if (!m.ginv[b][d].is_zero()) r.scalar += m.ginv[b][d] * r.ricci[b][d];
  return r;
}

std::vector<std::pair<std::string, RF>> CurvatureSpinors::named() const {
  std::vector<std::pair<std::string, RF>> out;
  for (int k = 0; k < 5; ++k) out.emplace_back("Psi" + std::to_string(k), Psi[k]);
  for (int k = 0; k < 5; ++k) out.emplace_back("~Psi" + std::to_string(k), tPsi[k]);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.emplace_back("Phi" + std::to_string(i) + std::to_string(j), Phi[i][j]);
  out.emplace_back("Lambda", Lambda);
  out.emplace_back("Pi", Pi);
  out.emplace_back("S", S);
  return out;
}

bool operator==(const CurvatureSpinors& a, const CurvatureSpinors& b) {
  auto x = a.named(), y = b.named();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].second != y[i].second) return false;
  return true;
}

PhiLambda phi_lambda_from_ricci(const RiemannData& r, const MetricTensor& m, const Tetrad& t) {
  require_spin_frame(m, t);
  Mat4 phi;
  const Rational quarter(1, 4), half(1, 2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) phi[a][b] = RF((r.ricci[a][b] - r.scalar * m.g[a][b] * quarter) * half);

  auto pair = [&](const Vec4& p, const Vec4& q) {
    RF s;
    for (int a = 0; a < 4; ++a) {
      if (p[a].is_zero()) continue;
      for (int b = 0; b < 4; ++b)
        if (!q[b].is_zero() && !phi[a][b].is_zero()) s += phi[a][b] * p[a] * q[b];
    }
    return s;
  };
  PhiLambda out;
  out.Phi[0][0] = pair(t.l, t.l);
  out.Phi[0][1] = pair(t.l, t.m);
  out.Phi[0][2] = pair(t.m, t.m);
  out.Phi[1][0] = pair(t.l, t.mt);
  out.Phi[1][1] = pair(t.l, t.n);
  out.Phi[1][2] = pair(t.m, t.n);
  out.Phi[2][0] = pair(t.mt, t.mt);
  out.Phi[2][1] = pair(t.mt, t.n);
  out.Phi[2][2] = pair(t.n, t.n);
  out.S = RF(r.scalar);
  out.Lambda = RF(r.scalar * Rational(-1, 24));
  return out;
}

namespace {

struct WalkerCurvatureEval {
  SpinCoefficientSet s;
  Tetrad t;
  detail::TableEval e;

  explicit WalkerCurvatureEval(const WalkerMetric& w) : s(walker_closed_form(w)), t(walker_tetrad(w)) {
    e = make_env(s, nullptr, t, false);
    bind_walker_data(e, w);
    // The S/12 alternative of Psi~2 refers to the spin-coefficient S.
    e.vars["S"] = e("4*(D(gam)+tr(bet+2*tau))");
  }
};

}  // namespace

CurvatureSpinors walker_curvature_components(const WalkerMetric& w) {
  WalkerCurvatureEval ev(w);
  std::map<std::string, RF> v;
  for (const auto& row : curvature_rows()) v[row.name] = ev.e(row.forms.front());

  CurvatureSpinors c;
  for (int k = 0; k < 5; ++k) {
    c.Psi[k] = v["Psi" + std::to_string(k)];
    c.tPsi[k] = v["~Psi" + std::to_string(k)];
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c.Phi[i][j] = v["Phi" + std::to_string(i) + std::to_string(j)];
  c.S = v["S"];
  c.Lambda = c.S * RF(Rational(-1, 24));
  c.Pi = c.Lambda;  // spin frames: chi = chit = 1
  return c;
}

Residuals walker_curvature_redundancy(const WalkerMetric& w) {
  WalkerCurvatureEval ev(w);
  Residuals out;
  for (const auto& row : curvature_rows()) {
    if (row.forms.size() < 2) continue;
    const RF first = ev.e(row.forms.front());
    for (std::size_t k = 1; k < row.forms.size(); ++k)
      out.emplace_back(std::string(row.name) + " form " + std::to_string(k + 1) + " vs form 1",
                       ev.e(row.forms[k]) - first);
  }
  return out;
}

Residuals field_equation_residuals(const SpinCoefficientSet& s, const CurvatureSpinors& c, const Tetrad& t) {
  Residuals out;
  out.reserve(48);
  for (bool tilde : {false, true}) {
    auto e = make_env(s, &c, t, tilde);
    const std::string prefix = tilde ? "field~(" : "field(";
    for (const auto& row : kFieldRows) out.emplace_back(prefix + row.label + ")", e(row.lhs) - e(row.rhs));
  }
  return out;
}

Residuals commutator_residuals(const SpinCoefficientSet& s, const Tetrad& t, const RF& f) {
  auto e = make_env(s, nullptr, t, false);
  e.vars["f"] = f;
  Residuals out;
  for (const auto& row : kCommutatorRows) out.emplace_back(row.label, e(row.lhs) - e(row.general));
  return out;
}

Residuals walker_commutator_residuals(const WalkerMetric& w, const RF& f) {
  const SpinCoefficientSet s = walker_closed_form(w);
  const Tetrad t = walker_tetrad(w);
  auto e = make_env(s, nullptr, t, false);
  bind_walker_data(e, w);
  e.vars["f"] = f;
  Residuals out;
  for (const auto& row : kCommutatorRows) out.emplace_back(row.label, e(row.lhs) - e(row.walker));
  return out;
}

std::array<Poly, 4> bianchi_contracted_check(const RiemannData& r, const MetricTensor& m, const Christoffel& gam) {
  // nabla_c R_ab = d_c R_ab - G^d_ca R_db - G^d_cb R_ad
  std::array<Poly, 4> out;
  for (int b = 0; b < 4; ++b) {
    Poly s = r.scalar.diff(b) * Rational(-1, 2);
    for (int c = 0; c < 4; ++c)
      for (int a = 0; a < 4; ++a) {
        if (m.ginv[c][a].is_zero()) continue;
        Poly cov = r.ricci[a][b].diff(c);
        for (int d = 0; d < 4; ++d) {
          if (!gam(d, c, a).is_zero()) cov -= gam(d, c, a) * r.ricci[d][b];
          if (!gam(d, c, b).is_zero()) cov -= gam(d, c, b) * r.ricci[a][d];
        }
        s += m.ginv[c][a] * cov;
      }
    out[b] = std::move(s);
  }
  return out;
}

CurvatureSpinors prime_curvature(const CurvatureSpinors& c) {
  CurvatureSpinors r = c;
  for (int k = 0; k < 5; ++k) {
    const RF sign((k % 2) ? -1 : 1);
    r.Psi[k] = sign * c.Psi[4 - k];
    r.tPsi[k] = sign * c.tPsi[4 - k];
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.Phi[i][j] = RF(((i + j) % 2) ? -1 : 1) * c.Phi[2 - i][2 - j];
  return r;
}

CurvatureSpinors tilde_swap(const CurvatureSpinors& c) {
  CurvatureSpinors r = c;
  std::swap(r.Psi, r.tPsi);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.Phi[i][j] = c.Phi[j][i];
  return r;
}

SdWeylClass classify_sd_weyl(const WalkerMetric& w, const Point& point) {
  const CurvatureSpinors cs = walker_curvature_components(w);
  SdWeylClass out;
  std::array<Rational, 5> tp;
  for (int k = 0; k < 5; ++k) tp[k] = cs.tPsi[k].eval(point);
  out.S = cs.S.eval(point);
  out.c = w.c.eval(point);
  out.B = -8 * tp[3] - out.S * out.c;
  out.A = 6 * out.B * out.c + out.S * (3 * out.c * out.c - 1) - 24 * tp[4];

  bool flat = true;
  for (const auto& q : tp) flat = flat && sgn(q) == 0;
  if (flat) out.label = "SD-flat";
  else if (sgn(out.S) != 0)
    out.label = sgn(out.S * out.S + out.A * out.S + 3 * out.B * out.B) == 0 ? "{2,2}Ia" : "{211}II/{1 1-bar 2}II";
  else if (sgn(out.B) != 0)
    out.label = "{31}III";
  else
    out.label = "{4}II";
  return out;
}

}  // namespace wnp
