#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dca/clifford.hpp"
#include "dca/operators.hpp"

namespace dca {

/// Polynomial state: a combination of coordinate monomials applied to the
/// ground state, each carrying a Clifford constant on the right.
class PolyState {
 public:
  PolyState() : m_(0) {}
  explicit PolyState(int m);

  static PolyState zero(int m) { return PolyState(m); }
  /// The ground state with right constant c (default 1).
  static PolyState ground(int m);
  static PolyState ground(int m, const CliffordElement& c);
  /// Monomial with packed multi-index alpha and right constant c.
  static PolyState monomial(int m, std::uint64_t alpha, const CliffordElement& c);
  static PolyState monomial(int m, const std::vector<std::uint32_t>& alpha);

  int dim() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when every monomial has the same total degree k; returns -1 for 0.
  int homogeneous_degree() const;
  int max_degree() const;
  PolyState degree_slice(int k) const;

  PolyState& operator+=(const PolyState& o);
  PolyState& operator-=(const PolyState& o);
  friend PolyState operator+(PolyState a, const PolyState& b) { return a += b; }
  friend PolyState operator-(PolyState a, const PolyState& b) { return a -= b; }
  friend PolyState operator*(const Scalar& s, const PolyState& f);
  friend PolyState operator-(const PolyState& f);

  friend bool operator==(const PolyState& a, const PolyState& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  const std::map<std::uint64_t, CliffordElement>& terms() const { return terms_; }
  void add_term(std::uint64_t alpha, const CliffordElement& c);

  std::string str() const;

 private:
  int m_;
  std::map<std::uint64_t, CliffordElement> terms_;
};

/// Applies an operator to a state: normal-orders against every monomial and
/// folds the trailing generators at the ground state (derivatives annihilate
/// it, R_j and T_j turn into the right constants e_j and e_j^perp).
PolyState apply(const OperatorElement& op, const PolyState& f);

PolyState dirac(const PolyState& f);
PolyState laplace(const PolyState& f);
/// Grading operator: multiplies every monomial by its total degree.
PolyState euler(const PolyState& f);
PolyState vec_xi(const PolyState& f);

/// Left-multiplies every right constant by c; this is what composing with a
/// ground-constant-producing operator on the far right does.
PolyState insert_ground_constant(const PolyState& f, const CliffordElement& c);

}  // namespace dca
