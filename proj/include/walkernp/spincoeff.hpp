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

#ifndef WALKERNP_SPINCOEFF_HPP
#define WALKERNP_SPINCOEFF_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "walkernp/poly.hpp"
#include "walkernp/walker.hpp"

namespace wnp {

// Layout of the 32 coefficients: four blocks of eight (unprimed, primed,
// tilde, tilde-primed), each ordered kappa sigma rho tau epsilon alpha beta gamma.
namespace sc {
enum Base : int { kappa, sigma, rho, tau, epsilon, alpha, beta, gamma };
constexpr int idx(Base b, bool primed = false, bool tilde = false) {
  return (tilde ? 16 : 0) + (primed ? 8 : 0) + static_cast<int>(b);
}
constexpr int p(Base b) { return idx(b, true, false); }
constexpr int t(Base b) { return idx(b, false, true); }
constexpr int tp(Base b) { return idx(b, true, true); }
}  // namespace sc

struct SpinCoefficientSet {
  std::array<RF, 32> v;

  RF& operator[](int i) { return v[i]; }
  const RF& operator[](int i) const { return v[i]; }

  // "kappa", "kappa'", "~kappa", "~kappa'", ...
  static std::string name(int i);
  static int index_of(const std::string& name);  // throws on unknown name
};

bool operator==(const SpinCoefficientSet& a, const SpinCoefficientSet& b);

// The four directional operators on functions.
enum class Op { D, Dp, delta, Delta };
const Vec4& op_vector(const Tetrad& t, Op op);
RF directional(const Tetrad& t, Op op, const RF& f);

SpinCoefficientSet spin_coefficients_from_tetrad(const MetricTensor& m, const Christoffel& gam, const Tetrad& t);
SpinCoefficientSet walker_closed_form(const WalkerMetric& w);

// The combinations that appear in kappa~' and sigma~' of the closed forms.
RF walker_K(const WalkerMetric& w);
RF walker_L(const WalkerMetric& w);

// Partner swap kappa <-> kappa' etc. in both families.
SpinCoefficientSet prime(const SpinCoefficientSet& s);
// (l, n, m, mt) -> (n, l, -mt, -m).
Tetrad prime_tetrad(const Tetrad& t);

// Closed-form images of kappa, rho, sigma, tau and their tilde partners.
std::map<int, RF> transform_coefficients(const SpinCoefficientSet& s, const FrameTransform& f);

// Residuals of the spin-frame relations eps = -gamma', alpha = beta',
// beta = alpha', gamma = -eps' and their tilde partners.
std::vector<std::pair<std::string, RF>> spin_frame_relations(const SpinCoefficientSet& s);

// The eight expansions of dl, dm, dmt, dn in the basis of tetrad two-forms;
// each residual is an antisymmetric 4x4 matrix flattened to its six upper entries.
using TwoForm = std::array<RF, 6>;
std::vector<std::pair<std::string, TwoForm>> exterior_derivative_residuals(const MetricTensor& m, const Tetrad& t,
                                                                           const SpinCoefficientSet& s);

// Connection matrix c[j][i] with (op) e_j = sum_i c[j][i] e_i for the
// unprimed frame (o, iota) or primed frame (o', iota').
using Conn2 = std::array<std::array<RF, 2>, 2>;
Conn2 connection(const SpinCoefficientSet& s, Op op, bool primed);

// Dyad components of a spinor field of arbitrary valence. Component index
// bits run from slot 0 (most significant) to the last slot.
enum class Slot : unsigned char { UnprimedUpper, UnprimedLower, PrimedUpper, PrimedLower };

class DyadSpinorField {
 public:
  DyadSpinorField() : comp_(1) {}
  explicit DyadSpinorField(std::vector<Slot> slots);
  static DyadSpinorField scalar(const RF& f);

  const std::vector<Slot>& slots() const { return slots_; }
  std::size_t rank() const { return slots_.size(); }
  std::size_t size() const { return comp_.size(); }
  RF& operator[](std::size_t flat) { return comp_[flat]; }
  const RF& operator[](std::size_t flat) const { return comp_[flat]; }
  RF& at(const std::vector<int>& idx) { return comp_[flat(idx)]; }
  const RF& at(const std::vector<int>& idx) const { return comp_[flat(idx)]; }
  std::size_t flat(const std::vector<int>& idx) const;
  std::vector<int> multi(std::size_t flat) const;
  bool is_zero() const;

 private:
  std::vector<Slot> slots_;
  std::vector<RF> comp_;
};

bool is_primed(Slot s);
bool is_upper(Slot s);

// Lower or raise one slot with eps_01 = 1 (eps^01 = 1).
DyadSpinorField lower_slot(const DyadSpinorField& f, std::size_t k);
DyadSpinorField raise_slot(const DyadSpinorField& f, std::size_t k);
// Contract slots i and j (same kind, any positions); both are removed.
DyadSpinorField contract_slots(const DyadSpinorField& f, std::size_t i, std::size_t j);
DyadSpinorField tensor(const DyadSpinorField& a, const DyadSpinorField& b);
DyadSpinorField add(const DyadSpinorField& a, const DyadSpinorField& b);
DyadSpinorField scale(const DyadSpinorField& a, const RF& c);

// nabla_{BB'} of the field: two lower slots (unprimed B then primed B') are
// appended. Operators: nabla_00' = D, nabla_01' = delta, nabla_10' = Delta, nabla_11' = D'.
DyadSpinorField dyad_covariant_derivative(const DyadSpinorField& f, const SpinCoefficientSet& s, const Tetrad& t);

// Dyad covector components X_{BB'} -> coordinate components X_a.
Vec4 dyad_covector_to_coord(const MetricTensor& m, const Tetrad& t, const std::array<RF, 4>& x);
// Coordinate covector -> dyad components X_{BB'} (flat index 2B + B').
std::array<RF, 4> coord_covector_to_dyad(const Tetrad& t, const Vec4& x);

}  // namespace wnp

#endif  // WALKERNP_SPINCOEFF_HPP
