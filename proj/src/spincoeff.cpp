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

#include "walkernp/spincoeff.hpp"

#include <stdexcept>

namespace wnp {

using namespace sc;

namespace {

const char* const kBaseNames[8] = {"kappa", "sigma", "rho", "tau", "epsilon", "alpha", "beta", "gamma"};

// A signed reference into the coefficient array.
struct Entry {
  int index;
  int sign;
};

// Row layout shared by the extraction formulas and the connection matrices:
// for each operator, (c00, c01, c10, c11) where (op) e_j = sum_i c_ji e_i.
struct Row {
  Op op;
  Entry e[4];
};

const Row kUnprimedRows[4] = {
    {Op::D, {{epsilon, 1}, {kappa, 1}, {p(tau), -1}, {p(gamma), 1}}},
    {Op::Delta, {{alpha, 1}, {rho, 1}, {p(sigma), 1}, {p(beta), -1}}},
    {Op::delta, {{beta, 1}, {sigma, 1}, {p(rho), 1}, {p(alpha), -1}}},
    {Op::Dp, {{gamma, 1}, {tau, 1}, {p(kappa), -1}, {p(epsilon), 1}}},
};

const Row kPrimedRows[4] = {
    {Op::D, {{t(epsilon), 1}, {t(kappa), 1}, {tp(tau), -1}, {tp(gamma), 1}}},
    {Op::Delta, {{t(beta), 1}, {t(sigma), 1}, {tp(rho), 1}, {tp(alpha), -1}}},
    {Op::delta, {{t(alpha), 1}, {t(rho), 1}, {tp(sigma), 1}, {tp(beta), -1}}},
    {Op::Dp, {{t(gamma), 1}, {t(tau), 1}, {tp(kappa), -1}, {tp(epsilon), 1}}},
};

const Row& row_for(Op op, bool primed) {
  const Row* rows = primed ? kPrimedRows : kUnprimedRows;
  for (int i = 0; i < 4; ++i)
    if (rows[i].op == op) return rows[i];
  throw std::logic_error("unknown operator");
}

}  // namespace

std::string SpinCoefficientSet::name(int i) {
  if (i < 0 || i >= 32) throw std::out_of_range("spin coefficient index");
  std::string s = (i >= 16 ? "~" : "");
  s += kBaseNames[i % 8];
  if ((i / 8) % 2 == 1) s += "'";
  return s;
}

int SpinCoefficientSet::index_of(const std::string& nm) {
  for (int i = 0; i < 32; ++i)
    if (name(i) == nm) return i;
  throw std::invalid_argument("unknown spin coefficient '" + nm + "'");
}

bool operator==(const SpinCoefficientSet& a, const SpinCoefficientSet& b) {
  for (int i = 0; i < 32; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

const Vec4& op_vector(const Tetrad& t, Op op) {
  switch (op) {
    case Op::D: return t.l;
    case Op::Dp: return t.n;
    case Op::delta: return t.m;
    case Op::Delta: return t.mt;
  }
  throw std::logic_error("unknown operator");
}

RF directional(const Tetrad& t, Op op, const RF& f) { return apply(op_vector(t, op), f); }

SpinCoefficientSet spin_coefficients_from_tetrad(const MetricTensor& m, const Christoffel& gam, const Tetrad& t) {
  const RF cc = t.chi * t.chit;
  if (cc.is_zero()) throw std::invalid_argument("degenerate tetrad: chi chit = 0");
  for (const auto& r : tetrad_normalization_residuals(m, t))
    if (!r.is_zero()) throw std::invalid_argument("degenerate tetrad: normalization violated");

  const Vec4 L = lower(m, t.l), N = lower(m, t.n), M = lower(m, t.m), MT = lower(m, t.mt);
  const RF inv = cc.inverse();
  const Rational half(1, 2);
  SpinCoefficientSet s;

  for (Op op : {Op::D, Op::Delta, Op::delta, Op::Dp}) {
    const Vec4& y = op_vector(t, op);
    const Vec4 dl = directional_derivative(gam, y, t.l);
    const Vec4 dn = directional_derivative(gam, y, t.n);
    const Vec4 dm = directional_derivative(gam, y, t.m);
    const Vec4 dmt = directional_derivative(gam, y, t.mt);
    const RF chit_dchi = t.chit * apply(y, t.chi);
    const RF chi_dchit = t.chi * apply(y, t.chit);

    const RF un[4] = {
        (contract(N, dl) + contract(M, dmt) + chit_dchi) * RF(half),
        -contract(M, dl),
        -contract(MT, dn),
        (contract(L, dn) + contract(MT, dm) + chit_dchi) * RF(half),
    };
    const RF pr[4] = {
        (contract(N, dl) + contract(MT, dm) + chi_dchit) * RF(half),
        -contract(MT, dl),
        -contract(M, dn),
        (contract(L, dn) + contract(M, dmt) + chi_dchit) * RF(half),
    };
    const Row& ru = row_for(op, false);
    const Row& rp = row_for(op, true);
    for (int k = 0; k < 4; ++k) {
      s[ru.e[k].index] = RF(ru.e[k].sign) * un[k] * inv;
      s[rp.e[k].index] = RF(rp.e[k].sign) * pr[k] * inv;
    }
  }
  return s;
}

RF walker_K(const WalkerMetric& w) {
  const Poly& a = w.a;
  const Poly& b = w.b;
  const Poly& c = w.c;
  Poly k = Poly(2) * c.diff(X) - Poly(2) * a.diff(Y) + b * a.diff(V) + c * a.diff(U) - a * c.diff(U) - c * c.diff(V);
  return RF(k * Rational(1, 4));
}

RF walker_L(const WalkerMetric& w) {
  const Poly& a = w.a;
  const Poly& b = w.b;
  const Poly& c = w.c;
  Poly l = Poly(2) * c.diff(Y) - Poly(2) * b.diff(X) - c * c.diff(U) - b * c.diff(V) + a * b.diff(U) + c * b.diff(V);
  return RF(l * Rational(1, 4));
}

SpinCoefficientSet walker_closed_form(const WalkerMetric& w) {
  const Rational q(1, 4), h(1, 2);
  const Poly a1 = w.a.diff(U), a2 = w.a.diff(V), b1 = w.b.diff(U), b2 = w.b.diff(V);
  const Poly c1 = w.c.diff(U), c2 = w.c.diff(V);
  SpinCoefficientSet s;
  s[p(epsilon)] = RF((c2 - a1) * q);
  s[tp(epsilon)] = RF(-(a1 + c2) * q);
  s[p(alpha)] = RF((b2 - c1) * q);
  s[t(alpha)] = RF(-(b2 + c1) * q);
  s[beta] = RF((b2 - c1) * q);
  s[tp(beta)] = RF(-(b2 + c1) * q);
  s[gamma] = RF((a1 - c2) * q);
  s[t(gamma)] = RF((a1 + c2) * q);
  s[p(kappa)] = RF(-a2 * h);
  s[tp(kappa)] = -walker_K(w);
  s[p(rho)] = RF(-c2 * h);
  s[sigma] = RF(-b1 * h);
  s[tp(sigma)] = walker_L(w);
  s[tau] = RF(c1 * h);
  return s;
}

SpinCoefficientSet prime(const SpinCoefficientSet& s) {
  SpinCoefficientSet r;
  for (int blk : {0, 16})
    for (int b = 0; b < 8; ++b) {
      r[blk + b] = s[blk + 8 + b];
      r[blk + 8 + b] = s[blk + b];
    }
  return r;
}

Tetrad prime_tetrad(const Tetrad& t) {
  Tetrad r;
  r.chi = t.chi;
  r.chit = t.chit;
  r.l = t.n;
  r.n = t.l;
  for (int i = 0; i < 4; ++i) {
    r.m[i] = -t.mt[i];
    r.mt[i] = -t.m[i];
  }
  return r;
}

std::map<int, RF> transform_coefficients(const SpinCoefficientSet& s, const FrameTransform& f) {
  if (f.lam.is_zero() || f.lamt.is_zero()) throw std::invalid_argument("non-invertible frame rescaling");
  std::map<int, RF> out;
  auto family = [&](const RF& l, const RF& lt, const RF& mu, const RF& mut, bool tilde) {
    const RF& k = s[idx(kappa, false, tilde)];
    const RF& r = s[idx(rho, false, tilde)];
    const RF& sg = s[idx(sigma, false, tilde)];
    const RF& ta = s[idx(tau, false, tilde)];
    const RF ilt = lt.inverse();
    const RF l2 = l * l, l3 = l2 * l;
    out[idx(kappa, false, tilde)] = l3 * lt * k;
    out[idx(rho, false, tilde)] = l * lt * r + l2 * lt * mu * k;
    out[idx(sigma, false, tilde)] = l3 * ilt * sg + l3 * mut * k;
    out[idx(tau, false, tilde)] = l * ilt * ta + l * mut * r + l2 * ilt * mu * sg + l2 * mu * mut * k;
  };
  family(f.lam, f.lamt, f.mu, f.mut, false);
  family(f.lamt, f.lam, f.mut, f.mu, true);
  return out;
}

std::vector<std::pair<std::string, RF>> spin_frame_relations(const SpinCoefficientSet& s) {
  std::vector<std::pair<std::string, RF>> r;
  for (bool tl : {false, true}) {
    const std::string pre = tl ? "~" : "";
    r.emplace_back(pre + "epsilon = -" + pre + "gamma'", s[idx(epsilon, false, tl)] + s[idx(gamma, true, tl)]);
    r.emplace_back(pre + "alpha = " + pre + "beta'", s[idx(alpha, false, tl)] - s[idx(beta, true, tl)]);
    r.emplace_back(pre + "beta = " + pre + "alpha'", s[idx(beta, false, tl)] - s[idx(alpha, true, tl)]);
    r.emplace_back(pre + "gamma = -" + pre + "epsilon'", s[idx(gamma, false, tl)] + s[idx(epsilon, true, tl)]);
  }
  return r;
}

namespace {

using AntiMat = std::array<std::array<RF, 4>, 4>;

AntiMat exterior_d(const Vec4& w) {
  AntiMat r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = w[j].diff(i) - w[i].diff(j);
  return r;
}

AntiMat wedge(const Vec4& p, const Vec4& q) {
  AntiMat r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = p[i] * q[j] - p[j] * q[i];
  return r;
}

TwoForm upper_entries(const AntiMat& a) {
  TwoForm f;
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) f[k++] = a[i][j];
  return f;
}

}  // namespace

std::vector<std::pair<std::string, TwoForm>> exterior_derivative_residuals(const MetricTensor& m, const Tetrad& tet,
                                                                           const SpinCoefficientSet& s) {
  const Vec4 L = lower(m, tet.l), N = lower(m, tet.n), M = lower(m, tet.m), MT = lower(m, tet.mt);
  const AntiMat basis[6] = {wedge(L, M), wedge(L, MT), wedge(L, N), wedge(M, MT), wedge(M, N), wedge(MT, N)};
  auto c = [&](int i) -> const RF& { return s[i]; };

  struct Line {
    const char* name;
    const Vec4* form;
    std::array<RF, 6> coef;
  };
  const std::vector<Line> lines = {
      {"dl (first form)", &L,
       {c(t(tau)) + c(t(beta)) + c(alpha), c(tau) + c(t(alpha)) + c(beta), -(c(epsilon) + c(t(epsilon))),
        c(t(rho)) - c(rho), -c(t(kappa)), -c(kappa)}},
      {"dl (second form)", &L,
       {c(t(tau)) + c(tp(alpha)) + c(p(beta)), c(tau) + c(tp(beta)) + c(p(alpha)), c(p(gamma)) + c(tp(gamma)),
        c(t(rho)) - c(rho), -c(t(kappa)), -c(kappa)}},
      {"dm (first form)", &M,
       {c(gamma) + c(tp(epsilon)) + c(tp(rho)), c(tp(sigma)), c(tau) + c(tp(tau)), c(beta) - c(tp(beta)),
        -(c(rho) + c(epsilon) + c(tp(gamma))), -c(sigma)}},
      {"dm (second form)", &M,
       {c(tp(rho)) - c(p(epsilon)) - c(t(gamma)), c(tp(sigma)), c(tau) + c(tp(tau)), c(p(alpha)) - c(t(alpha)),
        c(p(gamma)) + c(t(epsilon)) - c(rho), -c(sigma)}},
      {"dmt (first form)", &MT,
       {c(p(sigma)), c(t(gamma)) + c(p(epsilon)) + c(p(rho)), c(t(tau)) + c(p(tau)), c(p(beta)) - c(t(beta)),
        -c(t(sigma)), -(c(t(rho)) + c(t(epsilon)) + c(p(gamma)))}},
      {"dmt (second form)", &MT,
       {c(p(sigma)), -(c(tp(epsilon)) + c(gamma) - c(p(rho))), c(t(tau)) + c(p(tau)), c(alpha) - c(tp(alpha)),
        -c(t(sigma)), c(epsilon) + c(tp(gamma)) - c(t(rho))}},
      {"dn (first form)", &N,
       {-c(p(kappa)), -c(tp(kappa)), c(p(epsilon)) + c(tp(epsilon)), c(p(rho)) - c(tp(rho)),
        c(tp(alpha)) + c(p(beta)) + c(p(tau)), c(p(alpha)) + c(tp(beta)) + c(tp(tau))}},
      {"dn (second form)", &N,
       {-c(p(kappa)), -c(tp(kappa)), -(c(gamma) + c(t(gamma))), c(p(rho)) - c(tp(rho)),
        c(t(beta)) + c(alpha) + c(p(tau)), c(beta) + c(t(alpha)) + c(tp(tau))}},
  };

  std::vector<std::pair<std::string, TwoForm>> out;
  for (const auto& ln : lines) {
    AntiMat r = exterior_d(*ln.form);
    for (int k = 0; k < 6; ++k) {
      if (ln.coef[k].is_zero()) continue;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (!basis[k][i][j].is_zero()) r[i][j] -= ln.coef[k] * basis[k][i][j];
    }
    out.emplace_back(ln.name, upper_entries(r));
  }
  return out;
}

Conn2 connection(const SpinCoefficientSet& s, Op op, bool primed) {
  const Row& r = row_for(op, primed);
  Conn2 c;
  for (int k = 0; k < 4; ++k) c[k / 2][k % 2] = RF(r.e[k].sign) * s[r.e[k].index];
  return c;
}

// ---------------------------------------------------------------------------
// Dyad spinor fields

bool is_primed(Slot s) { return s == Slot::PrimedUpper || s == Slot::PrimedLower; }
bool is_upper(Slot s) { return s == Slot::UnprimedUpper || s == Slot::PrimedUpper; }

DyadSpinorField::DyadSpinorField(std::vector<Slot> slots)
    : slots_(std::move(slots)), comp_(std::size_t{1} << slots_.size()) {}

DyadSpinorField DyadSpinorField::scalar(const RF& f) {
  DyadSpinorField d;
  d.comp_[0] = f;
  return d;
}

std::size_t DyadSpinorField::flat(const std::vector<int>& idx) const {
  if (idx.size() != slots_.size()) throw std::invalid_argument("valence mismatch in component access");
  std::size_t k = 0;
  for (int i : idx) k = (k << 1U) | static_cast<std::size_t>(i & 1);
  return k;
}

std::vector<int> DyadSpinorField::multi(std::size_t flat) const {
  std::vector<int> idx(slots_.size());
  for (std::size_t i = slots_.size(); i-- > 0;) {
    idx[i] = static_cast<int>(flat & 1U);
    flat >>= 1U;
  }
  return idx;
}

bool DyadSpinorField::is_zero() const {
  for (const auto& c : comp_)
    if (!c.is_zero()) return false;
  return true;
}

namespace {

std::size_t bit_of(std::size_t rank, std::size_t slot) { return rank - 1 - slot; }

}  // namespace

DyadSpinorField lower_slot(const DyadSpinorField& f, std::size_t k) {
  if (!is_upper(f.slots()[k])) throw std::invalid_argument("slot is already lower");
  auto slots = f.slots();
  slots[k] = is_primed(slots[k]) ? Slot::PrimedLower : Slot::UnprimedLower;
  DyadSpinorField r(slots);
  const std::size_t bit = std::size_t{1} << bit_of(f.rank(), k);
  for (std::size_t i = 0; i < f.size(); ++i) {
    // psi_0 = -psi^1, psi_1 = psi^0
    if (i & bit) r[i] = f[i & ~bit];
    else r[i] = -f[i | bit];
  }
  return r;
}

DyadSpinorField raise_slot(const DyadSpinorField& f, std::size_t k) {
  if (is_upper(f.slots()[k])) throw std::invalid_argument("slot is already upper");
  auto slots = f.slots();
  slots[k] = is_primed(slots[k]) ? Slot::PrimedUpper : Slot::UnprimedUpper;
  DyadSpinorField r(slots);
  const std::size_t bit = std::size_t{1} << bit_of(f.rank(), k);
  for (std::size_t i = 0; i < f.size(); ++i) {
    // kappa^0 = kappa_1, kappa^1 = -kappa_0
    if (i & bit) r[i] = -f[i & ~bit];
    else r[i] = f[i | bit];
  }
  return r;
}

DyadSpinorField contract_slots(const DyadSpinorField& f, std::size_t i, std::size_t j) {
  if (i == j || i >= f.rank() || j >= f.rank()) throw std::invalid_argument("bad contraction slots");
  if (is_primed(f.slots()[i]) != is_primed(f.slots()[j]))
    throw std::invalid_argument("valence mismatch: contracting primed with unprimed slot");
  DyadSpinorField g = f;
  if (is_upper(g.slots()[i]) == is_upper(g.slots()[j])) g = is_upper(g.slots()[j]) ? lower_slot(g, j) : raise_slot(g, j);

  std::vector<Slot> slots;
  for (std::size_t k = 0; k < g.rank(); ++k)
    if (k != i && k != j) slots.push_back(g.slots()[k]);
  DyadSpinorField r(slots);
  for (std::size_t n = 0; n < r.size(); ++n) {
    auto rest = r.multi(n);
    RF sum;
    for (int a = 0; a < 2; ++a) {
      std::vector<int> idx;
      std::size_t q = 0;
      for (std::size_t k = 0; k < g.rank(); ++k) idx.push_back((k == i || k == j) ? a : rest[q++]);
      sum += g.at(idx);
    }
    r[n] = sum;
  }
  return r;
}

DyadSpinorField tensor(const DyadSpinorField& a, const DyadSpinorField& b) {
  auto slots = a.slots();
  slots.insert(slots.end(), b.slots().begin(), b.slots().end());
  DyadSpinorField r(slots);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!a[i].is_zero() && !b[j].is_zero()) r[(i << b.rank()) | j] = a[i] * b[j];
  return r;
}

DyadSpinorField add(const DyadSpinorField& a, const DyadSpinorField& b) {
  if (a.slots() != b.slots()) throw std::invalid_argument("valence mismatch in addition");
  DyadSpinorField r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

DyadSpinorField scale(const DyadSpinorField& a, const RF& c) {
  DyadSpinorField r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] * c;
  return r;
}

DyadSpinorField dyad_covariant_derivative(const DyadSpinorField& f, const SpinCoefficientSet& s, const Tetrad& t) {
  static const Op kOps[2][2] = {{Op::D, Op::delta}, {Op::Delta, Op::Dp}};
  auto slots = f.slots();
  slots.push_back(Slot::UnprimedLower);
  slots.push_back(Slot::PrimedLower);
  DyadSpinorField r(slots);
  const std::size_t n = f.rank();

  for (int b = 0; b < 2; ++b)
    for (int bp = 0; bp < 2; ++bp) {
      const Op op = kOps[b][bp];
      const Conn2 cu = connection(s, op, false);
      const Conn2 cp = connection(s, op, true);
      for (std::size_t i = 0; i < f.size(); ++i) {
        RF val = directional(t, op, f[i]);
        for (std::size_t k = 0; k < n; ++k) {
          const Conn2& c = is_primed(f.slots()[k]) ? cp : cu;
          const std::size_t bit = std::size_t{1} << bit_of(n, k);
          const int ik = (i & bit) ? 1 : 0;
          for (int j = 0; j < 2; ++j) {
            const std::size_t other = j ? (i | bit) : (i & ~bit);
            if (f[other].is_zero()) continue;
            if (is_upper(f.slots()[k])) {
              if (!c[j][ik].is_zero()) val += f[other] * c[j][ik];
            } else {
              if (!c[ik][j].is_zero()) val -= c[ik][j] * f[other];
            }
          }
        }
        r[(i << 2U) | (static_cast<std::size_t>(b) << 1U) | static_cast<std::size_t>(bp)] = std::move(val);
      }
    }
  return r;
}

Vec4 dyad_covector_to_coord(const MetricTensor& m, const Tetrad& t, const std::array<RF, 4>& x) {
  const Vec4 L = lower(m, t.l), N = lower(m, t.n), M = lower(m, t.m), MT = lower(m, t.mt);
  Vec4 r;
  for (int a = 0; a < 4; ++a) r[a] = x[0] * N[a] + x[3] * L[a] - x[1] * MT[a] - x[2] * M[a];
  return r;
}

std::array<RF, 4> coord_covector_to_dyad(const Tetrad& t, const Vec4& x) {
  return {contract(x, t.l), contract(x, t.m), contract(x, t.mt), contract(x, t.n)};
}

}  // namespace wnp
