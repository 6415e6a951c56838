#include "dca/spin.hpp"

#include <bit>
#include <stdexcept>

namespace dca {

SMatrix smat_identity(int n) {
  SMatrix a(n, std::vector<Scalar>(n, Scalar()));
  for (int i = 0; i < n; ++i) a[i][i] = Scalar(1);
  return a;
}

SMatrix smat_mul(const SMatrix& a, const SMatrix& b) {
  const int n = static_cast<int>(a.size());
  SMatrix c(n, std::vector<Scalar>(n, Scalar()));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

SMatrix smat_transpose(const SMatrix& a) {
  const int n = static_cast<int>(a.size());
  SMatrix t(n, std::vector<Scalar>(n, Scalar()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[j][i] = a[i][j];
  return t;
}

Scalar smat_det(const SMatrix& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return Scalar(1);
  if (n == 1) return a[0][0];
  Scalar det;
  std::vector<int> cols(n - 1);
  for (int j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    SMatrix minor(n - 1, std::vector<Scalar>(n - 1, Scalar()));
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = a[r][c];
      }
    }
    Scalar term = a[0][j] * smat_det(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

SpinElement SpinElement::from_factors(Family f, std::vector<RtVector> factors, int m) {
  if (factors.size() % 2 != 0)
    throw std::invalid_argument("spin element needs an even number of factors");
  RtElement v = RtElement::one(m);
  for (const auto& w : factors) {
    if (w.dim() != m) throw std::invalid_argument("dimension mismatch");
    if (w.family != f) throw std::invalid_argument("factor from the wrong vector family");
    if (w.norm2() != Scalar(1)) throw std::invalid_argument("factor is not a unit vector");
    v = v * w.to_element();
  }
  SpinElement s;
  s.family_ = f;
  s.value_ = std::move(v);
  s.factors_ = std::move(factors);
  return s;
}

SpinElement SpinElement::unchecked(Family f, RtElement value) {
  const RtElement prod = value * value.involute(Involution::Reversion);
  if (!(prod == RtElement::one(value.dim())))
    throw std::invalid_argument("element does not have unit norm");
  SpinElement s;
  s.family_ = f;
  s.value_ = std::move(value);
  return s;
}

SpinElement SpinElement::operator*(const SpinElement& o) const {
  if (family_ != o.family_) throw std::invalid_argument("mixed vector families");
  SpinElement s;
  s.family_ = family_;
  s.value_ = value_ * o.value_;
  s.factors_ = factors_;
  if (factors_.empty() || o.factors_.empty())
    s.factors_.clear();  // witness lost
  else
    s.factors_.insert(s.factors_.end(), o.factors_.begin(), o.factors_.end());
  return s;
}

SpinElement SpinElement::operator-() const {
  SpinElement s;
  s.family_ = family_;
  s.value_ = -value_;
  s.factors_.clear();
  return s;
}

RtVector twisted_conjugation(const RtElement& a, const RtVector& x) {
  const int m = a.dim();
  if (x.dim() != m) throw std::invalid_argument("dimension mismatch");
  const RtElement n2 = a * a.involute(Involution::Reversion);
  if (!n2.is_scalar())
    throw std::domain_error("element is not in the vector-product group");
  const Scalar n = n2.scalar_part();
  if (n.is_zero()) throw std::domain_error("element is not invertible");
  const RtElement a_inv = n.inverse() * a.involute(Involution::Reversion);
  const RtElement result = a * x.to_element() * a_inv.involute(Involution::Main);
  // extract grade-1 coordinates of the expected family, reject anything else
  RtVector out;
  out.family = x.family;
  out.coords.assign(m, Scalar());
  for (const auto& [w, s] : result.terms()) {
    const bool pure_r = w.t == 0 && std::popcount(w.r) == 1;
    const bool pure_t = w.r == 0 && std::popcount(w.t) == 1;
    if (x.family == Family::R && pure_r)
      out.coords[std::countr_zero(w.r)] = s;
    else if (x.family == Family::T && pure_t)
      out.coords[std::countr_zero(w.t)] = s;
    else
      throw std::domain_error("twisted conjugation left the vector space");
  }
  return out;
}

SMatrix rotation_matrix(const SpinElement& s) {
  const int m = s.dim();
  SMatrix mat(m, std::vector<Scalar>(m, Scalar()));
  for (int j = 0; j < m; ++j) {
    RtVector basis;
    basis.family = s.family();
    basis.coords.assign(m, Scalar());
    basis.coords[j] = Scalar(1);
    const RtVector img = twisted_conjugation(s.value(), basis);
    for (int i = 0; i < m; ++i) mat[i][j] = img.coords[i];
  }
  if (!(smat_mul(smat_transpose(mat), mat) == smat_identity(m)))
    throw std::domain_error("rotation matrix is not orthogonal");
  if (!(smat_det(mat) == Scalar(1)))
    throw std::domain_error("rotation matrix determinant is not 1");
  return mat;
}

SpinElement exp_bivector(Family f,
                         const std::vector<std::pair<int, std::pair<int, int>>>& pairs, int m) {
  std::uint32_t used = 0;
  std::vector<RtVector> factors;
  for (const auto& [p, ab] : pairs) {
    const auto [a, b] = ab;
    if (a < 1 || b < 1 || a > m || b > m || a == b)
      throw std::invalid_argument("bad index pair");
    const std::uint32_t mask = (1u << (a - 1)) | (1u << (b - 1));
    if (used & mask)
      throw std::invalid_argument("overlapping index pairs; exact form needs commuting planes");
    used |= mask;
    // (k c G_a + s G_b) G_a = c + s G_b G_a with k = G_a^2
    const Scalar c = Scalar::cos_half(p);
    const Scalar sn = Scalar::sin_half(p);
    RtVector v1, v2;
    v1.family = v2.family = f;
    v1.coords.assign(m, Scalar());
    v2.coords.assign(m, Scalar());
    v1.coords[a - 1] = f == Family::R ? c : -c;
    v1.coords[b - 1] = sn;
    v2.coords[a - 1] = Scalar(1);
    factors.push_back(std::move(v1));
    factors.push_back(std::move(v2));
  }
  return SpinElement::from_factors(f, std::move(factors), m);
}

SpinElement torus_element(Family f, int m) {
  std::vector<std::pair<int, std::pair<int, int>>> pairs;
  for (int p = 1; 2 * p <= m; ++p) {
    if (f == Family::R)
      pairs.push_back({p, {2 * p - 1, 2 * p}});  // bivector R_{2p} R_{2p-1}
    else
      pairs.push_back({p, {2 * p, 2 * p - 1}});  // bivector T_{2p-1} T_{2p}
  }
  return exp_bivector(f, pairs, m);
}

RtVector vector_inverse(const RtVector& w) {
  const Scalar n2 = w.norm2();
  if (n2.is_zero()) throw std::domain_error("zero vector has no inverse");
  const Scalar f = w.family == Family::R ? n2.inverse() : -n2.inverse();
  RtVector out;
  out.family = w.family;
  out.coords.reserve(w.coords.size());
  for (const auto& c : w.coords) out.coords.push_back(f * c);
  return out;
}

std::vector<double> exp_bivector_numeric(
    const std::vector<std::pair<double, std::pair<int, int>>>& blades, int m, int terms) {
  const std::size_t n = 1u << m;
  std::vector<double> x(n, 0.0);  // the bivector combination, over R-subset masks
  for (const auto& [coeff, ab] : blades) {
    const auto [a, b] = ab;
    if (a < 1 || b < 1 || a > m || b > m || a == b) throw std::invalid_argument("bad index pair");
    const std::uint32_t mask = (1u << (a - 1)) | (1u << (b - 1));
    // R_b R_a with a < b carries a sign relative to the ascending word
    x[mask] += (a < b) ? -coeff : coeff;
  }
  auto mul = [&](const std::vector<double>& u, const std::vector<double>& v) {
    std::vector<double> w(n, 0.0);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (u[i] == 0.0) continue;
      for (std::uint32_t j = 0; j < n; ++j) {
        if (v[j] == 0.0) continue;
        const double s = reorder_parity(i, j) ? -1.0 : 1.0;
        w[i ^ j] += s * u[i] * v[j];
      }
    }
    return w;
  };
  std::vector<double> sum(n, 0.0), term(n, 0.0);
  sum[0] = 1.0;
  term[0] = 1.0;
  for (int k = 1; k <= terms; ++k) {
    term = mul(term, x);
    for (auto& t : term) t /= k;
    for (std::size_t i = 0; i < n; ++i) sum[i] += term[i];
  }
  return sum;
}

}  // namespace dca
