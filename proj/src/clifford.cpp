#include "dca/clifford.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "dca/multiindex.hpp"

namespace dca {

namespace mi {

std::vector<std::uint64_t> of_degree(int m, int k) {
  std::vector<std::uint64_t> out;
  std::vector<std::uint32_t> cur(m, 0);
  // lexicographic enumeration of compositions of k into m parts
  auto rec = [&](auto&& self, int j, int rest) -> void {
    if (j == m - 1) {
      cur[j] = static_cast<std::uint32_t>(rest);
      out.push_back(pack(cur));
      return;
    }
    for (int e = 0; e <= rest; ++e) {
      cur[j] = static_cast<std::uint32_t>(e);
      self(self, j + 1, rest - e);
    }
  };
  if (m == 0) {
    if (k == 0) out.push_back(0);
    return out;
  }
  rec(rec, 0, k);
  return out;
}

}  // namespace mi

void CliffordElement::check_dim(int m) {
  if (m < 0 || m > 8) throw std::invalid_argument("dimension must be in 0..8");
}

CliffordElement CliffordElement::one(int m) { return scalar(m, Scalar(1)); }

CliffordElement CliffordElement::scalar(int m, Scalar s) {
  CliffordElement x(m);
  if (!s.is_zero()) x.terms_.emplace(0u, std::move(s));
  return x;
}

CliffordElement CliffordElement::blade(int m, BladeMask b, Scalar coeff) {
  CliffordElement x(m);
  if (b >= (1u << (2 * m))) throw std::invalid_argument("blade outside algebra");
  if (!coeff.is_zero()) x.terms_.emplace(b, std::move(coeff));
  return x;
}

CliffordElement CliffordElement::fwd(int j, int m) {
  if (j < 1 || j > m) throw std::invalid_argument("generator index out of range");
  return blade(m, 1u << (2 * (j - 1)));
}

CliffordElement CliffordElement::bwd(int j, int m) {
  if (j < 1 || j > m) throw std::invalid_argument("generator index out of range");
  return blade(m, 1u << (2 * (j - 1) + 1));
}

CliffordElement CliffordElement::e_vec(int j, int m) { return fwd(j, m) + bwd(j, m); }

CliffordElement CliffordElement::e_perp(int j, int m) { return fwd(j, m) - bwd(j, m); }

Scalar CliffordElement::scalar_part() const {
  auto it = terms_.find(0u);
  return it == terms_.end() ? Scalar() : it->second;
}

CliffordElement CliffordElement::grade_part(int k) const {
  CliffordElement r(m_);
  for (const auto& [b, s] : terms_)
    if (std::popcount(b) == k) r.terms_.emplace(b, s);
  return r;
}

void CliffordElement::add_term(BladeMask b, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  if (m_ != o.m_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [b, s] : o.terms_) add_term(b, s);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  if (m_ != o.m_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [b, s] : o.terms_) add_term(b, -s);
  return *this;
}

CliffordElement operator-(const CliffordElement& a) {
  CliffordElement r(a.m_);
  for (const auto& [b, s] : a.terms_) r.terms_.emplace(b, -s);
  return r;
}

CliffordElement operator*(const Scalar& s, const CliffordElement& a) {
  CliffordElement r(a.m_);
  for (const auto& [b, t] : a.terms_) r.add_term(b, s * t);
  return r;
}

void blade_mul_generator(BladeMask a, int sign, int gen, int m,
                         std::vector<std::pair<BladeMask, int>>& out) {
  (void)m;
  const BladeMask bit = 1u << gen;
  const bool fwd_gen = (gen % 2) == 0;
  const BladeMask partner = fwd_gen ? (bit << 1) : 0;
  if (fwd_gen && (a & partner)) {
    // passes everything above the partner, then hits the backward generator
    // of its own coordinate: bf = 1 - fb.
    const int above = std::popcount(a >> (gen + 2));
    const int s1 = (above & 1) ? -sign : sign;
    out.emplace_back(a & ~partner, s1);  // contraction; generator consumed
    if (!(a & bit)) out.emplace_back(a | bit, -s1);
  } else {
    const int above = std::popcount(a >> (gen + 1));
    if (a & bit) return;  // square of a generator vanishes
    out.emplace_back(a | bit, (above & 1) ? -sign : sign);
  }
}

namespace {

// Multiplies blade a by blade b (generators of b pushed in ascending order).
void blade_mul(BladeMask a, BladeMask b, int m, std::vector<std::pair<BladeMask, int>>& out) {
  out.clear();
  out.emplace_back(a, 1);
  std::vector<std::pair<BladeMask, int>> next;
  while (b) {
    const int gen = std::countr_zero(b);
    b &= b - 1;
    next.clear();
    for (const auto& [w, s] : out) blade_mul_generator(w, s, gen, m, next);
    std::swap(out, next);
  }
}

}  // namespace

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("dimension mismatch");
  CliffordElement r(a.m_);
  std::vector<std::pair<BladeMask, int>> prod;
  for (const auto& [ba, sa] : a.terms_) {
    for (const auto& [bb, sb] : b.terms_) {
      blade_mul(ba, bb, a.m_, prod);
      const Scalar c = sa * sb;
      for (const auto& [w, sign] : prod) r.add_term(w, sign < 0 ? -c : c);
    }
  }
  return r;
}

CliffordElement CliffordElement::involute(Involution kind) const {
  if (kind == Involution::Main) {
    CliffordElement r(m_);
    for (const auto& [b, s] : terms_)
      r.terms_.emplace(b, (std::popcount(b) & 1) ? -s : s);
    return r;
  }
  // Reversion: re-normal-order each blade's generator word reversed. The
  // forward/backward contraction makes this non-diagonal on blades.
  CliffordElement r(m_);
  std::vector<std::pair<BladeMask, int>> acc, next;
  for (const auto& [b, s] : terms_) {
    acc.clear();
    acc.emplace_back(0u, 1);
    for (int gen = 2 * m_ - 1; gen >= 0; --gen) {
      if (!(b & (1u << gen))) continue;
      next.clear();
      for (const auto& [w, sg] : acc) blade_mul_generator(w, sg, gen, m_, next);
      std::swap(acc, next);
    }
    for (const auto& [w, sg] : acc) r.add_term(w, sg < 0 ? -s : s);
  }
  if (kind == Involution::Conjugation) {
    CliffordElement c(m_);
    for (const auto& [b, s] : r.terms_) {
      Scalar t = s.conj();
      c.add_term(b, (std::popcount(b) & 1) ? -t : t);
    }
    return c;
  }
  return r;
}

std::string blade_token(int gen) {
  return std::to_string(gen / 2 + 1) + (gen % 2 == 0 ? "+" : "-");
}

int blade_token_parse(const std::string& tok) {
  if (tok.size() < 2) throw std::invalid_argument("bad blade token: " + tok);
  const char suffix = tok.back();
  if (suffix != '+' && suffix != '-') throw std::invalid_argument("bad blade token: " + tok);
  const int j = std::stoi(tok.substr(0, tok.size() - 1));
  if (j < 1) throw std::invalid_argument("bad blade token: " + tok);
  return 2 * (j - 1) + (suffix == '-' ? 1 : 0);
}

std::string CliffordElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, s] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << s.str() << ")";
    for (BladeMask rest = b; rest;) {
      const int gen = std::countr_zero(rest);
      rest &= rest - 1;
      os << " " << blade_token(gen);
    }
  }
  return os.str();
}

}  // namespace dca
