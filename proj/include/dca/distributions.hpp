#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "dca/actions.hpp"
#include "dca/states.hpp"

namespace dca {

/// Distribution state: a combination of derivative monomials applied to the
/// delta distribution at the origin, each carrying a right Clifford
/// constant. The evaluation rules are dual to the polynomial ground state:
/// a trailing coordinate operator annihilates delta, R_j folds into e_j, and
/// derivatives pile up on the left.
class DistState {
 public:
  DistState() : m_(0) {}
  explicit DistState(int m);

  static DistState zero(int m) { return DistState(m); }
  static DistState delta(int m);
  static DistState monomial(int m, std::uint64_t beta, const CliffordElement& c);

  int dim() const { return m_; }
  bool is_zero() const { return terms_.empty(); }

  DistState& operator+=(const DistState& o);
  DistState& operator-=(const DistState& o);
  friend DistState operator+(DistState a, const DistState& b) { return a += b; }
  friend DistState operator-(DistState a, const DistState& b) { return a -= b; }
  friend DistState operator*(const Scalar& s, const DistState& d);
  friend DistState operator-(const DistState& d);

  friend bool operator==(const DistState& a, const DistState& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  const std::map<std::uint64_t, CliffordElement>& terms() const { return terms_; }
  void add_term(std::uint64_t beta, const CliffordElement& c);

  std::string str() const;

 private:
  int m_;
  std::map<std::uint64_t, CliffordElement> terms_;
};

/// Applies an operator to a distribution. T generators reaching delta are
/// rejected.
DistState dist_apply(const OperatorElement& op, const DistState& d);

/// Substitutes every derivative by its conjugated counterpart and
/// re-evaluates against delta.
DistState rotate_dist(const SpinElement& s, const DistState& d);

/// Two-dimensional eigendistributions of the coordinate mixing operator.
/// For even k and i in 0..k/2 the eigenvalue is sign*2i; for odd k and i in
/// 1..(k+1)/2 it is sign*(2i-1). sign is +1 or -1.
DistState eigen_dist(int k, int i, int sign);

/// The delta distribution shifted to the lattice point (1,0), written as a
/// finite derivative series at the origin.
DistState delta_shift_1_0();

/// Closed-form rotation of a distribution through its eigencomponents in
/// two dimensions, with angle index p (mirror of the polynomial route).
DistState exp_rotation_12_dist(int p, const DistState& d);

}  // namespace dca
