#include "dca/scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dca {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

std::string GaussianRational::str() const {
  if (im == 0) return rational_str(re);
  std::ostringstream os;
  if (re != 0) {
    os << rational_str(re);
    os << (im > 0 ? "+" : "-");
  } else if (im < 0) {
    os << "-";
  }
  Rational a = im < 0 ? Rational(-im) : im;
  if (a != 1) os << rational_str(a) << "*";
  os << "i";
  return os.str();
}

// ---------------------------------------------------------------- TrigWord

void TrigWord::trim() {
  while (!cos_.empty() && cos_.back() == 0 && sin_.back() == 0) {
    cos_.pop_back();
    sin_.pop_back();
  }
}

TrigWord TrigWord::cos_half(int p) {
  if (p < 1) throw std::invalid_argument("angle index must be >= 1");
  TrigWord w;
  w.cos_.resize(p, 0);
  w.sin_.resize(p, 0);
  w.cos_[p - 1] = 1;
  return w;
}

TrigWord TrigWord::sin_half(int p) {
  if (p < 1) throw std::invalid_argument("angle index must be >= 1");
  TrigWord w;
  w.cos_.resize(p, 0);
  w.sin_.resize(p, 0);
  w.sin_[p - 1] = 1;
  return w;
}

TrigWord TrigWord::epsilon() {
  TrigWord w;
  w.eps_ = true;
  return w;
}

std::uint32_t TrigWord::cos_exp(int p) const {
  return p >= 1 && p <= angle_count() ? cos_[p - 1] : 0;
}

std::uint32_t TrigWord::sin_exp(int p) const {
  return p >= 1 && p <= angle_count() ? sin_[p - 1] : 0;
}

bool operator<(const TrigWord& a, const TrigWord& b) {
  if (a.eps_ != b.eps_) return !a.eps_;
  if (a.cos_ != b.cos_) return a.cos_ < b.cos_;
  return a.sin_ < b.sin_;
}

std::string TrigWord::str() const {
  std::ostringstream os;
  bool any = false;
  for (int p = 1; p <= angle_count(); ++p) {
    if (cos_[p - 1] > 0) {
      os << (any ? "*" : "") << "c" << p;
      if (cos_[p - 1] > 1) os << "^" << cos_[p - 1];
      any = true;
    }
    if (sin_[p - 1] > 0) {
      os << (any ? "*" : "") << "s" << p;
      any = true;
    }
  }
  if (eps_) {
    os << (any ? "*" : "") << "eps";
    any = true;
  }
  return any ? os.str() : "1";
}

// ------------------------------------------------------------------ Scalar

Scalar::Scalar(long n) {
  if (n != 0) terms_.emplace(TrigWord::one(), GaussianRational(n));
}

Scalar::Scalar(GaussianRational q) {
  if (!q.is_zero()) terms_.emplace(TrigWord::one(), std::move(q));
}

Scalar Scalar::cos_half(int p) {
  Scalar x;
  x.terms_.emplace(TrigWord::cos_half(p), GaussianRational(1));
  return x;
}

Scalar Scalar::sin_half(int p) {
  Scalar x;
  x.terms_.emplace(TrigWord::sin_half(p), GaussianRational(1));
  return x;
}

Scalar Scalar::epsilon() {
  Scalar x;
  x.terms_.emplace(TrigWord::epsilon(), GaussianRational(1));
  return x;
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() &&
         terms_.begin()->second == GaussianRational(1);
}

bool Scalar::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.is_one();
}

GaussianRational Scalar::constant_value() const {
  if (terms_.empty()) return GaussianRational(0);
  if (!is_constant()) throw std::domain_error("scalar is not a constant: " + str());
  return terms_.begin()->second;
}

bool Scalar::has_epsilon() const {
  for (const auto& [w, c] : terms_)
    if (w.has_epsilon()) return true;
  return false;
}

Scalar Scalar::conj() const {
  Scalar r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, c.conj());
  return r;
}

Scalar Scalar::epsilon_free_part() const {
  Scalar r;
  for (const auto& [w, c] : terms_)
    if (!w.has_epsilon()) r.terms_.emplace(w, c);
  return r;
}

Scalar Scalar::epsilon_coefficient() const {
  Scalar r;
  for (const auto& [w, c] : terms_)
    if (w.has_epsilon()) {
      TrigWord stripped = w;
      stripped.eps_ = false;
      r.terms_.emplace(stripped, c);
    }
  return r;
}

Scalar Scalar::inverse() const {
  if (!is_constant() || terms_.empty())
    throw std::domain_error("scalar not invertible: " + str());
  return Scalar(terms_.begin()->second.inverse());
}

void Scalar::add_term(const TrigWord& w, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Scalar operator-(const Scalar& a) {
  Scalar r;
  for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
  return r;
}

// Product of two canonical monomials, expanded back into canonical form.
// Inputs have s-exponents <= 1, so per angle the raw product has s-exponent
// <= 2; a single application of s^2 -> 1 - c^2 restores the invariant.
void Scalar::mul_words(const TrigWord& a, const TrigWord& b, const GaussianRational& coeff,
                       Scalar& out) {
  if (a.has_epsilon() && b.has_epsilon()) return;  // eps^2 = 0
  const int n = std::max(a.angle_count(), b.angle_count());
  std::vector<std::pair<TrigWord, GaussianRational>> acc;
  TrigWord base;
  base.cos_.assign(n, 0);
  base.sin_.assign(n, 0);
  base.eps_ = a.has_epsilon() || b.has_epsilon();
  acc.emplace_back(std::move(base), coeff);
  for (int p = 1; p <= n; ++p) {
    const std::uint32_t ce = a.cos_exp(p) + b.cos_exp(p);
    const std::uint32_t se = a.sin_exp(p) + b.sin_exp(p);
    if (se < 2) {
      for (auto& [w, c] : acc) {
        w.cos_[p - 1] = ce;
        w.sin_[p - 1] = static_cast<std::uint8_t>(se);
      }
    } else {
      // s^2 = 1 - c^2: split every pending term.
      std::vector<std::pair<TrigWord, GaussianRational>> next;
      next.reserve(acc.size() * 2);
      for (auto& [w, c] : acc) {
        TrigWord lo = w, hi = w;
        lo.cos_[p - 1] = ce;
        lo.sin_[p - 1] = 0;
        hi.cos_[p - 1] = ce + 2;
        hi.sin_[p - 1] = 0;
        next.emplace_back(std::move(lo), c);
        next.emplace_back(std::move(hi), -c);
      }
      acc = std::move(next);
    }
  }
  for (auto& [w, c] : acc) {
    w.trim();
    out.add_term(w, c);
  }
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) Scalar::mul_words(wa, wb, ca * cb, r);
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

std::complex<double> Scalar::eval(std::span<const double> angles) const {
  std::complex<double> total = 0.0;
  for (const auto& [w, c] : terms_) {
    if (w.has_epsilon()) throw std::domain_error("infinitesimal not evaluable");
    if (w.angle_count() > static_cast<int>(angles.size()))
      throw std::invalid_argument("not enough angles supplied");
    double mag = 1.0;
    for (int p = 1; p <= w.angle_count(); ++p) {
      mag *= std::pow(std::cos(angles[p - 1] / 2.0), static_cast<double>(w.cos_exp(p)));
      mag *= std::pow(std::sin(angles[p - 1] / 2.0), static_cast<double>(w.sin_exp(p)));
    }
    total += mag * std::complex<double>(static_cast<double>(c.re), static_cast<double>(c.im));
  }
  return total;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    GaussianRational coeff = c;
    if (first) {
      first = false;
    } else if (coeff.im == 0 && coeff.re < 0) {
      os << " - ";
      coeff = -coeff;
    } else {
      os << " + ";
    }
    const std::string cs = coeff.im == 0 ? coeff.str() : "(" + coeff.str() + ")";
    if (w.is_one()) {
      os << cs;
    } else if (coeff == GaussianRational(1)) {
      os << w.str();
    } else {
      os << cs << "*" << w.str();
    }
  }
  return os.str();
}

Scalar cos_t(int p) {
  Scalar c = Scalar::cos_half(p);
  return Scalar(2) * c * c - Scalar(1);
}

Scalar sin_t(int p) { return Scalar(2) * Scalar::cos_half(p) * Scalar::sin_half(p); }

Scalar exp_half_it(int p) { return Scalar::cos_half(p) + Scalar::i() * Scalar::sin_half(p); }

Scalar exp_ikt(int k, int p) {
  Scalar base = exp_half_it(p) * exp_half_it(p);  // exp(i t_p)
  if (k < 0) base = base.conj();
  Scalar r(1);
  for (int j = 0; j < std::abs(k); ++j) r *= base;
  return r;
}

Scalar cos_kt(int k, int p) {
  Scalar e = exp_ikt(k, p);
  // real part: (e + conj(e)) / 2
  return (e + e.conj()) * Scalar(GaussianRational(1, 2));
}

Scalar sin_kt(int k, int p) {
  Scalar e = exp_ikt(k, p);
  return (e - e.conj()) * Scalar(GaussianRational(1, 2)) * (-Scalar::i());
}

}  // namespace dca
