#include "dca/rtalgebra.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace dca {

bool reorder_parity(std::uint32_t a, std::uint32_t b) {
  bool p = false;
  while (b) {
    const int y = std::countr_zero(b);
    b &= b - 1;
    p ^= (std::popcount(a >> (y + 1)) & 1) != 0;
  }
  return p;
}

RtElement::RtElement(int m) : m_(m) {
  if (m < 0 || m > 8) throw std::invalid_argument("dimension must be in 0..8");
}

RtElement RtElement::one(int m) { return scalar(m, Scalar(1)); }

RtElement RtElement::scalar(int m, Scalar s) {
  RtElement x(m);
  if (!s.is_zero()) x.terms_.emplace(RtWord{}, std::move(s));
  return x;
}

RtElement RtElement::generator(Family f, int j, int m) {
  if (j < 1 || j > m) throw std::invalid_argument("generator index out of range");
  RtWord w;
  if (f == Family::R)
    w.r = 1u << (j - 1);
  else
    w.t = 1u << (j - 1);
  return word(m, w);
}

RtElement RtElement::word(int m, RtWord w, Scalar coeff) {
  RtElement x(m);
  if (w.r >= (1u << m) || w.t >= (1u << m)) throw std::invalid_argument("word outside algebra");
  if (!coeff.is_zero()) x.terms_.emplace(w, std::move(coeff));
  return x;
}

Scalar RtElement::scalar_part() const {
  auto it = terms_.find(RtWord{});
  return it == terms_.end() ? Scalar() : it->second;
}

bool RtElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == RtWord{});
}

RtElement RtElement::grade_part(int k) const {
  RtElement r(m_);
  for (const auto& [w, s] : terms_)
    if (std::popcount(w.r) + std::popcount(w.t) == k) r.terms_.emplace(w, s);
  return r;
}

Scalar RtElement::norm2_by_coefficients() const {
  Scalar n;
  for (const auto& [w, s] : terms_) n += s * s;
  return n;
}

CliffordElement RtElement::ground_constant() const {
  CliffordElement out(m_);
  for (const auto& [w, s] : terms_) {
    CliffordElement c = CliffordElement::scalar(m_, s);
    for (std::uint32_t rest = w.r; rest;) {
      const int j = std::countr_zero(rest);
      rest &= rest - 1;
      c = c * CliffordElement::e_vec(j + 1, m_);
    }
    for (std::uint32_t rest = w.t; rest;) {
      const int j = std::countr_zero(rest);
      rest &= rest - 1;
      c = c * CliffordElement::e_perp(j + 1, m_);
    }
    out += c;
  }
  return out;
}

void RtElement::add_term(RtWord w, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RtElement& RtElement::operator+=(const RtElement& o) {
  if (m_ != o.m_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [w, s] : o.terms_) add_term(w, s);
  return *this;
}

RtElement& RtElement::operator-=(const RtElement& o) {
  if (m_ != o.m_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [w, s] : o.terms_) add_term(w, -s);
  return *this;
}

RtElement operator-(const RtElement& a) {
  RtElement r(a.m_);
  for (const auto& [w, s] : a.terms_) r.terms_.emplace(w, -s);
  return r;
}

RtElement operator*(const Scalar& s, const RtElement& a) {
  RtElement r(a.m_);
  for (const auto& [w, t] : a.terms_) r.add_term(w, s * t);
  return r;
}

RtElement operator*(const RtElement& a, const RtElement& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("dimension mismatch");
  RtElement out(a.m_);
  for (const auto& [wa, sa] : a.terms_) {
    for (const auto& [wb, sb] : b.terms_) {
      // wb.r crosses wa.t entirely (R and T always anticommute), then the
      // two R words merge with +1 contractions, the two T words with -1.
      bool neg = (std::popcount(wa.t) * std::popcount(wb.r)) & 1;
      neg ^= reorder_parity(wa.r, wb.r);
      neg ^= reorder_parity(wa.t, wb.t);
      neg ^= (std::popcount(wa.t & wb.t) & 1) != 0;
      const RtWord w{wa.r ^ wb.r, wa.t ^ wb.t};
      const Scalar c = sa * sb;
      out.add_term(w, neg ? -c : c);
    }
  }
  return out;
}

RtElement RtElement::involute(Involution kind) const {
  RtElement r(m_);
  for (const auto& [w, s] : terms_) {
    const int len = std::popcount(w.r) + std::popcount(w.t);
    bool neg = false;
    if (kind == Involution::Reversion || kind == Involution::Conjugation)
      neg ^= ((len * (len - 1) / 2) & 1) != 0;
    if (kind == Involution::Main || kind == Involution::Conjugation) neg ^= (len & 1) != 0;
    Scalar c = kind == Involution::Conjugation ? s.conj() : s;
    r.terms_.emplace(w, neg ? -c : c);
  }
  return r;
}

RtElement RtVector::to_element() const {
  const int m = dim();
  RtElement x(m);
  for (int j = 0; j < m; ++j) {
    RtWord w;
    if (family == Family::R)
      w.r = 1u << j;
    else
      w.t = 1u << j;
    x.add_term(w, coords[j]);
  }
  return x;
}

Scalar RtVector::norm2() const {
  Scalar n;
  for (const auto& c : coords) n += c * c;
  return n;
}

RtElement sym_product(const RtElement& a, const RtElement& b) {
  return Scalar(GaussianRational(1, 2)) * (a * b + b * a);
}

std::string RtElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, s] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << s.str() << ")";
    for (std::uint32_t rest = w.r; rest;) {
      const int j = std::countr_zero(rest);
      rest &= rest - 1;
      os << " R" << (j + 1);
    }
    for (std::uint32_t rest = w.t; rest;) {
      const int j = std::countr_zero(rest);
      rest &= rest - 1;
      os << " T" << (j + 1);
    }
  }
  return os.str();
}

}  // namespace dca
