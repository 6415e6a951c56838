#include "dca/states.hpp"

#include <sstream>
#include <stdexcept>

namespace dca {

PolyState::PolyState(int m) : m_(m) {
  if (m < 0 || m > 8) throw std::invalid_argument("dimension must be in 0..8");
}

PolyState PolyState::ground(int m) { return ground(m, CliffordElement::one(m)); }

PolyState PolyState::ground(int m, const CliffordElement& c) { return monomial(m, 0, c); }

PolyState PolyState::monomial(int m, std::uint64_t alpha, const CliffordElement& c) {
  if (c.dim() != m) throw std::invalid_argument("dimension mismatch");
  PolyState f(m);
  if (!c.is_zero()) f.terms_.emplace(alpha, c);
  return f;
}

PolyState PolyState::monomial(int m, const std::vector<std::uint32_t>& alpha) {
  return monomial(m, mi::pack(alpha), CliffordElement::one(m));
}

int PolyState::homogeneous_degree() const {
  int deg = -1;
  for (const auto& [a, c] : terms_) {
    const int d = mi::degree(a);
    if (deg == -1) deg = d;
    if (d != deg) throw std::domain_error("state is not homogeneous");
  }
  return deg;
}

int PolyState::max_degree() const {
  int deg = 0;
  for (const auto& [a, c] : terms_) deg = std::max(deg, mi::degree(a));
  return deg;
}

PolyState PolyState::degree_slice(int k) const {
  PolyState r(m_);
  for (const auto& [a, c] : terms_)
    if (mi::degree(a) == k) r.terms_.emplace(a, c);
  return r;
}

void PolyState::add_term(std::uint64_t alpha, const CliffordElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyState& PolyState::operator+=(const PolyState& o) {
  if (m_ != o.m_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

PolyState& PolyState::operator-=(const PolyState& o) {
  if (m_ != o.m_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

PolyState operator-(const PolyState& f) {
  PolyState r(f.m_);
  for (const auto& [a, c] : f.terms_) r.terms_.emplace(a, -c);
  return r;
}

PolyState operator*(const Scalar& s, const PolyState& f) {
  PolyState r(f.m_);
  for (const auto& [a, c] : f.terms_) r.add_term(a, s * c);
  return r;
}

PolyState apply(const OperatorElement& op, const PolyState& f) {
  if (op.dim() != f.dim()) throw std::invalid_argument("dimension mismatch");
  const int m = f.dim();
  PolyState out(m);
  std::map<OpWord, Scalar> acc;
  for (const auto& [alpha, c] : f.terms()) {
    acc.clear();
    OpWord mono;
    mono.xi = alpha;
    for (const auto& [w, s] : op.terms()) word_append(acc, w, s, mono, m);
    for (const auto& [w, s] : acc) {
      if (w.del != 0) continue;  // a trailing derivative annihilates the ground state
      CliffordElement k = RtElement::word(m, RtWord{w.r, w.t}, s).ground_constant();
      out.add_term(w.xi, k * c);
    }
  }
  return out;
}

PolyState dirac(const PolyState& f) { return apply(OperatorElement::dirac(f.dim()), f); }

PolyState laplace(const PolyState& f) { return dirac(dirac(f)); }

PolyState euler(const PolyState& f) {
  PolyState r(f.dim());
  for (const auto& [a, c] : f.terms()) {
    const int d = mi::degree(a);
    if (d != 0) r.add_term(a, Scalar(d) * c);
  }
  return r;
}

PolyState vec_xi(const PolyState& f) {
  return apply(OperatorElement::vector_variable(f.dim()), f);
}

PolyState insert_ground_constant(const PolyState& f, const CliffordElement& c) {
  PolyState r(f.dim());
  for (const auto& [a, coeff] : f.terms()) r.add_term(a, c * coeff);
  return r;
}

std::string PolyState::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << "  +  ";
    first = false;
    bool any = false;
    for (int j = 0; j < m_; ++j) {
      const auto e = mi::get(a, j);
      if (e == 0) continue;
      os << (any ? "*" : "") << "x" << (j + 1);
      if (e > 1) os << "^" << e;
      any = true;
    }
    (void)any;
    os << "[1] . (" << c.str() << ")";
  }
  return os.str();
}

}  // namespace dca
