#include "dca/distributions.hpp"

#include <sstream>
#include <stdexcept>

#include "dca/linalg.hpp"

namespace dca {

DistState::DistState(int m) : m_(m) {
  if (m < 0 || m > 8) throw std::invalid_argument("dimension must be in 0..8");
}

DistState DistState::delta(int m) { return monomial(m, 0, CliffordElement::one(m)); }

DistState DistState::monomial(int m, std::uint64_t beta, const CliffordElement& c) {
  if (c.dim() != m) throw std::invalid_argument("dimension mismatch");
  DistState d(m);
  if (!c.is_zero()) d.terms_.emplace(beta, c);
  return d;
}

void DistState::add_term(std::uint64_t beta, const CliffordElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(beta, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DistState& DistState::operator+=(const DistState& o) {
  if (m_ != o.m_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

DistState& DistState::operator-=(const DistState& o) {
  if (m_ != o.m_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

DistState operator-(const DistState& d) {
  DistState r(d.m_);
  for (const auto& [b, c] : d.terms_) r.terms_.emplace(b, -c);
  return r;
}

DistState operator*(const Scalar& s, const DistState& d) {
  DistState r(d.m_);
  for (const auto& [b, c] : d.terms_) r.add_term(b, s * c);
  return r;
}

DistState dist_apply(const OperatorElement& op, const DistState& d) {
  if (op.dim() != d.dim()) throw std::invalid_argument("dimension mismatch");
  const int m = d.dim();
  DistState out(m);
  std::map<OpWord, Scalar> acc;
  for (const auto& [beta, c] : d.terms()) {
    acc.clear();
    OpWord mono;
    mono.del = beta;
    for (const auto& [w, s] : op.terms()) word_append(acc, w, s, mono, m);
    for (const auto& [w, s] : acc) {
      if (w.t != 0)
        throw std::domain_error("perp generator cannot act on the delta distribution");
      // Fold the R word into its Clifford constant, then feed the remaining
      // coordinate operators rightwards through the derivative word; each
      // one either contracts against its own derivative or dies on delta.
      std::uint64_t delta_word = w.del;
      long coeff = 1;
      bool dead = false;
      for (int j = m - 1; j >= 0 && !dead; --j) {
        for (std::uint32_t rep = 0; rep < mi::get(w.xi, j) && !dead; ++rep) {
          const long dj = static_cast<long>(mi::get(delta_word, j));
          if (dj == 0) {
            dead = true;
            break;
          }
          if (mi::parity_below(delta_word, j)) coeff = -coeff;
          coeff *= -dj;
          delta_word = mi::dec(delta_word, j);
        }
      }
      if (dead) continue;
      const CliffordElement k =
          RtElement::word(m, RtWord{w.r, 0}, s * Scalar(coeff)).ground_constant();
      out.add_term(delta_word, k * c);
    }
  }
  return out;
}

DistState rotate_dist(const SpinElement& s, const DistState& d) {
  const int m = d.dim();
  if (s.dim() != m) throw std::invalid_argument("dimension mismatch");
  RotatedVariables rv = rotated_variables(s);
  // cache powers of the conjugated derivatives
  std::vector<std::vector<OperatorElement>> pow(m, {OperatorElement::identity(m)});
  auto power = [&](int j, int e) -> const OperatorElement& {
    auto& v = pow[j];
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * rv.der[j]);
    return v[e];
  };
  DistState out(m);
  for (const auto& [beta, c] : d.terms()) {
    OperatorElement op = OperatorElement::identity(m);
    for (int j = 0; j < m; ++j) {
      const int e = static_cast<int>(mi::get(beta, j));
      if (e > 0) op = op * power(j, e);
    }
    out += dist_apply(op, DistState::monomial(m, 0, c));
  }
  return out;
}

DistState eigen_dist(int k, int i, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  const int m = 2;
  const OperatorElement d1 = OperatorElement::del(1, m);
  const OperatorElement d2 = OperatorElement::del(2, m);
  const OperatorElement dsum = d1 + d2;
  const OperatorElement plus = sign > 0 ? d2 + d1 : d2 - d1;
  const OperatorElement minus = sign > 0 ? d2 - d1 : d2 + d1;
  OperatorElement op(m);
  if (k % 2 == 0) {
    if (i < 0 || 2 * i > k) throw std::invalid_argument("index out of range");
    op = dsum.pow(k - 2 * i) * (plus * minus).pow(i);
  } else {
    if (i < 1 || 2 * i - 1 > k) throw std::invalid_argument("index out of range");
    op = dsum.pow(k - 2 * i + 1) * (plus * minus).pow(i - 1) * plus;
  }
  return dist_apply(op, DistState::delta(m));
}

DistState delta_shift_1_0() {
  const int m = 2;
  const CliffordElement e1 = CliffordElement::e_vec(1, m);
  const CliffordElement e1p = CliffordElement::e_perp(1, m);
  const Scalar half(GaussianRational(1, 2));
  DistState d = DistState::delta(m);
  d += DistState::monomial(m, mi::with(0, 0, 1), -e1);
  d += DistState::monomial(m, mi::with(0, 0, 2), half * (CliffordElement::one(m) + e1p * e1));
  return d;
}

DistState exp_rotation_12_dist(int p, const DistState& d) {
  const int m = d.dim();
  if (m != 2) throw std::invalid_argument("closed-form rotation is two-dimensional");
  const OperatorElement mixer = OperatorElement::xi(1, m) * OperatorElement::del(2, m) +
                                OperatorElement::xi(2, m) * OperatorElement::del(1, m);
  const OperatorElement bivector = OperatorElement::r(2, m) * OperatorElement::r(1, m);

  int kmax = 0;
  for (const auto& [beta, c] : d.terms()) kmax = std::max(kmax, mi::degree(beta));

  DistState out(m);
  for (int k = 0; k <= kmax; ++k) {
    DistState slice(m);
    for (const auto& [beta, c] : d.terms())
      if (mi::degree(beta) == k) slice.add_term(beta, c);
    if (slice.is_zero()) continue;
    std::vector<std::uint64_t> basis;
    for (int a = 0; a <= k; ++a) basis.push_back(mi::with(mi::with(0, 0, a), 1, k - a));
    const int n = k + 1;
    QMatrix A(n, QVector(n, GaussianRational(0)));
    for (int col = 0; col < n; ++col) {
      const DistState img =
          dist_apply(mixer, DistState::monomial(m, basis[col], CliffordElement::one(m)));
      for (const auto& [beta, c] : img.terms()) {
        int row = -1;
        for (int r2 = 0; r2 < n; ++r2)
          if (basis[r2] == beta) row = r2;
        if (row < 0) throw std::logic_error("mixing operator left the slice");
        A[row][col] = c.scalar_part().constant_value();
      }
    }
    QMatrix V;
    std::vector<int> col_lambda;
    for (int lam = -k; lam <= k; lam += 2) {
      QMatrix shifted = A;
      for (int r2 = 0; r2 < n; ++r2) shifted[r2][r2] -= GaussianRational(lam);
      for (const auto& v : kernel_basis(shifted)) {
        V.push_back(v);
        col_lambda.push_back(lam);
      }
    }
    if (static_cast<int>(V.size()) != n) throw std::logic_error("slice failed to diagonalize");
    QMatrix Vc(n, QVector(n, GaussianRational(0)));
    for (int c2 = 0; c2 < n; ++c2)
      for (int r2 = 0; r2 < n; ++r2) Vc[r2][c2] = V[c2][r2];
    QMatrix aug = Vc;
    for (int r2 = 0; r2 < n; ++r2)
      for (int c2 = 0; c2 < n; ++c2)
        aug[r2].push_back(r2 == c2 ? GaussianRational(1) : GaussianRational(0));
    if (static_cast<int>(rref(aug).size()) != n)
      throw std::logic_error("eigenvector matrix is singular");
    std::vector<CliffordElement> coeff(n, CliffordElement::zero(m));
    for (const auto& [beta, c] : slice.terms())
      for (int r2 = 0; r2 < n; ++r2)
        if (basis[r2] == beta) coeff[r2] = c;
    std::vector<CliffordElement> x(n, CliffordElement::zero(m));
    for (int r2 = 0; r2 < n; ++r2)
      for (int c2 = 0; c2 < n; ++c2) {
        const GaussianRational& q = aug[r2][n + c2];
        if (!q.is_zero()) x[r2] += Scalar(q) * coeff[c2];
      }
    for (int lam = -k; lam <= k; lam += 2) {
      DistState part(m);
      for (int c2 = 0; c2 < n; ++c2) {
        if (col_lambda[c2] != lam) continue;
        for (int r2 = 0; r2 < n; ++r2) {
          if (Vc[r2][c2].is_zero()) continue;
          part.add_term(basis[r2], Scalar(Vc[r2][c2]) * x[c2]);
        }
      }
      if (part.is_zero()) continue;
      out += cos_kt(lam, p) * part + sin_kt(lam, p) * dist_apply(bivector, part);
    }
  }
  return out;
}

std::string DistState::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << "  +  ";
    first = false;
    for (int j = 0; j < m_; ++j) {
      const auto e = mi::get(b, j);
      if (e == 0) continue;
      os << "d" << (j + 1);
      if (e > 1) os << "^" << e;
      os << "*";
    }
    os << "delta . (" << c.str() << ")";
  }
  return os.str();
}

}  // namespace dca
