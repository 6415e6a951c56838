#include "dca/operators.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace dca {

OperatorElement::OperatorElement(int m) : m_(m) {
  if (m < 0 || m > 8) throw std::invalid_argument("dimension must be in 0..8");
}

OperatorElement OperatorElement::identity(int m) { return scalar(m, Scalar(1)); }

OperatorElement OperatorElement::scalar(int m, Scalar s) {
  OperatorElement x(m);
  if (!s.is_zero()) x.terms_.emplace(OpWord{}, std::move(s));
  return x;
}

OperatorElement OperatorElement::word(int m, OpWord w, Scalar coeff) {
  OperatorElement x(m);
  if (!coeff.is_zero()) x.terms_.emplace(w, std::move(coeff));
  return x;
}

OperatorElement OperatorElement::xi(int j, int m) {
  if (j < 1 || j > m) throw std::invalid_argument("index out of range");
  OpWord w;
  w.xi = mi::with(0, j - 1, 1);
  return word(m, w);
}

OperatorElement OperatorElement::del(int j, int m) {
  if (j < 1 || j > m) throw std::invalid_argument("index out of range");
  OpWord w;
  w.del = mi::with(0, j - 1, 1);
  return word(m, w);
}

OperatorElement OperatorElement::r(int j, int m) {
  if (j < 1 || j > m) throw std::invalid_argument("index out of range");
  OpWord w;
  w.r = 1u << (j - 1);
  return word(m, w);
}

OperatorElement OperatorElement::t(int j, int m) {
  if (j < 1 || j > m) throw std::invalid_argument("index out of range");
  OpWord w;
  w.t = 1u << (j - 1);
  return word(m, w);
}

OperatorElement OperatorElement::dirac(int m) {
  OperatorElement x(m);
  for (int j = 1; j <= m; ++j) x += del(j, m);
  return x;
}

OperatorElement OperatorElement::vector_variable(int m) {
  OperatorElement x(m);
  for (int j = 1; j <= m; ++j) x += xi(j, m);
  return x;
}

OperatorElement OperatorElement::from_rt(const RtElement& a) {
  OperatorElement x(a.dim());
  for (const auto& [w, s] : a.terms()) x.add_term(OpWord{0, 0, w.r, w.t}, s);
  return x;
}

bool OperatorElement::is_scalar_operator() const {
  for (const auto& [w, s] : terms_)
    if (w.r != 0 || w.t != 0) return false;
  return true;
}

void OperatorElement::add_term(const OpWord& w, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorElement& OperatorElement::operator+=(const OperatorElement& o) {
  if (m_ != o.m_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [w, s] : o.terms_) add_term(w, s);
  return *this;
}

OperatorElement& OperatorElement::operator-=(const OperatorElement& o) {
  if (m_ != o.m_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [w, s] : o.terms_) add_term(w, -s);
  return *this;
}

OperatorElement operator-(const OperatorElement& a) {
  OperatorElement r(a.m_);
  for (const auto& [w, s] : a.terms_) r.terms_.emplace(w, -s);
  return r;
}

OperatorElement operator*(const Scalar& s, const OperatorElement& a) {
  OperatorElement r(a.m_);
  for (const auto& [w, t] : a.terms_) r.add_term(w, s * t);
  return r;
}

namespace {

inline bool parity_except(std::uint32_t mask, int j) {
  return ((std::popcount(mask) - static_cast<int>((mask >> j) & 1u)) & 1) != 0;
}

}  // namespace

void word_push_xi(const OpWord& w, long c, int j, std::vector<std::pair<OpWord, long>>& out) {
  // Crosses the T word (commutes with T_j, anticommutes elsewhere), then the
  // R word alike, then the derivative block from the top index down.
  bool neg = parity_except(w.t, j);
  neg ^= parity_except(w.r, j);
  neg ^= mi::parity_above(w.del, j);
  const long dj = static_cast<long>(mi::get(w.del, j));
  if (dj > 0) {
    OpWord contracted = w;
    contracted.del = mi::dec(w.del, j);
    out.emplace_back(contracted, neg ? -c * dj : c * dj);
  }
  bool neg2 = neg;
  neg2 ^= mi::parity_below(w.del, j);
  neg2 ^= mi::parity_above(w.xi, j);
  OpWord passed = w;
  passed.xi = mi::inc(w.xi, j);
  out.emplace_back(passed, neg2 ? -c : c);
}

void word_push_del(const OpWord& w, long c, int j, std::vector<std::pair<OpWord, long>>& out) {
  bool neg = parity_except(w.t, j);
  neg ^= parity_except(w.r, j);
  neg ^= mi::parity_above(w.del, j);
  OpWord n = w;
  n.del = mi::inc(w.del, j);
  out.emplace_back(n, neg ? -c : c);
}

void word_push_r(const OpWord& w, long c, int j, std::vector<std::pair<OpWord, long>>& out) {
  // R generators anticommute with every T generator and with higher R's;
  // meeting its own flag folds via R_j^2 = 1.
  bool neg = (std::popcount(w.t) & 1) != 0;
  neg ^= (std::popcount(w.r >> (j + 1)) & 1) != 0;
  OpWord n = w;
  n.r = w.r ^ (1u << j);
  out.emplace_back(n, neg ? -c : c);
}

void word_push_t(const OpWord& w, long c, int j, std::vector<std::pair<OpWord, long>>& out) {
  bool neg = (std::popcount(w.t >> (j + 1)) & 1) != 0;
  if (w.t & (1u << j)) neg = !neg;  // T_j^2 = -1
  OpWord n = w;
  n.t = w.t ^ (1u << j);
  out.emplace_back(n, neg ? -c : c);
}

void word_append(std::map<OpWord, Scalar>& acc, const OpWord& left, const Scalar& coeff,
                 const OpWord& right, int m) {
  std::vector<std::pair<OpWord, long>> cur, next;
  cur.emplace_back(left, 1);
  auto push_all = [&](auto&& pushfn, int j, int times) {
    for (int k = 0; k < times; ++k) {
      next.clear();
      for (const auto& [w, c] : cur) pushfn(w, c, j, next);
      std::swap(cur, next);
    }
  };
  for (int j = 0; j < m; ++j) push_all(word_push_xi, j, static_cast<int>(mi::get(right.xi, j)));
  for (int j = 0; j < m; ++j) push_all(word_push_del, j, static_cast<int>(mi::get(right.del, j)));
  for (int j = 0; j < m; ++j)
    if (right.r & (1u << j)) push_all(word_push_r, j, 1);
  for (int j = 0; j < m; ++j)
    if (right.t & (1u << j)) push_all(word_push_t, j, 1);
  for (const auto& [w, c] : cur) {
    if (c == 0) continue;
    auto [it, inserted] = acc.try_emplace(w, coeff * Scalar(c));
    if (!inserted) {
      it->second += coeff * Scalar(c);
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

OperatorElement operator*(const OperatorElement& a, const OperatorElement& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("dimension mismatch");
  OperatorElement out(a.m_);
  std::map<OpWord, Scalar> acc;
  for (const auto& [wa, sa] : a.terms_)
    for (const auto& [wb, sb] : b.terms_) word_append(acc, wa, sa * sb, wb, a.m_);
  for (auto& [w, s] : acc)
    if (!s.is_zero()) out.terms_.emplace(w, std::move(s));
  return out;
}

OperatorElement OperatorElement::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative operator power");
  OperatorElement r = identity(m_);
  for (int j = 0; j < k; ++j) r = r * *this;
  return r;
}

std::string OperatorElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, s] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << s.str() << ")";
    for (int j = 0; j < 8; ++j) {
      const auto e = mi::get(w.xi, j);
      if (e == 0) continue;
      os << " x" << (j + 1);
      if (e > 1) os << "^" << e;
    }
    for (int j = 0; j < 8; ++j) {
      const auto e = mi::get(w.del, j);
      if (e == 0) continue;
      os << " d" << (j + 1);
      if (e > 1) os << "^" << e;
    }
    for (int j = 0; j < 8; ++j)
      if (w.r & (1u << j)) os << " R" << (j + 1);
    for (int j = 0; j < 8; ++j)
      if (w.t & (1u << j)) os << " T" << (j + 1);
  }
  return os.str();
}

}  // namespace dca
