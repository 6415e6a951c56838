#include "dca/representations.hpp"

#include <stdexcept>

namespace dca {

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (int j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

PolyState commuting_monomial(int m, std::uint64_t alpha) {
  OperatorElement op = OperatorElement::identity(m);
  for (int j = 0; j < m; ++j) {
    const int e = static_cast<int>(mi::get(alpha, j));
    if (e == 0) continue;
    const OperatorElement xr = OperatorElement::xi(j + 1, m) * OperatorElement::r(j + 1, m);
    op = op * xr.pow(e);
  }
  return apply(op, PolyState::ground(m));
}

std::vector<std::pair<std::uint64_t, PolyState>> commuting_basis(int m, int k) {
  std::vector<std::pair<std::uint64_t, PolyState>> out;
  for (std::uint64_t alpha : mi::of_degree(m, k))
    out.emplace_back(alpha, commuting_monomial(m, alpha));
  return out;
}

QVector commuting_coords(const PolyState& f, int k) {
  const int m = f.dim();
  const auto alphas = mi::of_degree(m, k);
  QVector coords(alphas.size(), GaussianRational(0));
  for (const auto& [alpha, c] : f.terms()) {
    int pos = -1;
    for (int i = 0; i < static_cast<int>(alphas.size()); ++i)
      if (alphas[i] == alpha) pos = i;
    if (pos < 0) throw std::domain_error("state has a monomial outside the degree slice");
    const PolyState base = commuting_monomial(m, alpha);
    // base has exactly this one monomial; divide c by its constant
    const CliffordElement& k_alpha = base.terms().begin()->second;
    // pick any blade of k_alpha to read off the ratio, then verify
    const auto& [blade, s] = *k_alpha.terms().begin();
    auto it = c.terms().find(blade);
    if (it == c.terms().end())
      throw std::domain_error("state lies outside the commuting-variable span");
    const GaussianRational lambda =
        it->second.constant_value() * s.constant_value().inverse();
    if (!(Scalar(lambda) * k_alpha == c))
      throw std::domain_error("state lies outside the commuting-variable span");
    coords[pos] = lambda;
  }
  return coords;
}

QMatrix laplace_matrix(int m, int k) {
  const auto basis = commuting_basis(m, k);
  const int rows = static_cast<int>(mi::of_degree(m, k - 2 < 0 ? 0 : k - 2).size());
  QMatrix M(k < 2 ? 0 : rows, QVector(basis.size(), GaussianRational(0)));
  if (k < 2) return M;
  for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
    const QVector coords = commuting_coords(laplace(basis[col].second), k - 2);
    for (int row = 0; row < rows; ++row) M[row][col] = coords[row];
  }
  return M;
}

namespace {

// Solves A q = rhs for a square invertible rational matrix with module
// elements on the right-hand side.
std::vector<CliffordElement> solve_module(QMatrix A, std::vector<CliffordElement> rhs) {
  const int n = static_cast<int>(A.size());
  for (int col = 0, row = 0; col < n && row < n; ++col) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (!A[i][col].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) throw std::domain_error("singular system in harmonic splitting");
    std::swap(A[row], A[p]);
    std::swap(rhs[row], rhs[p]);
    const GaussianRational inv = A[row][col].inverse();
    for (int j = col; j < n; ++j) A[row][j] *= inv;
    rhs[row] = Scalar(inv) * rhs[row];
    for (int i = 0; i < n; ++i) {
      if (i == row || A[i][col].is_zero()) continue;
      const GaussianRational f = A[i][col];
      for (int j = col; j < n; ++j) A[i][j] -= f * A[row][j];
      rhs[i] -= Scalar(f) * rhs[row];
    }
    ++row;
  }
  return rhs;
}

}  // namespace

std::pair<PolyState, PolyState> fischer_split(const PolyState& f) {
  const int m = f.dim();
  const int k = f.homogeneous_degree();
  if (k < 2) {
    commuting_coords(f, k < 0 ? 0 : k);  // validates membership
    return {f, PolyState::zero(m)};
  }
  const QVector p = commuting_coords(f, k);
  const QMatrix M = laplace_matrix(m, k);
  // columns of xi^2 on the lower basis
  const auto lower = commuting_basis(m, k - 2);
  const int nl = static_cast<int>(lower.size());
  QMatrix X(static_cast<int>(p.size()), QVector(nl, GaussianRational(0)));
  for (int col = 0; col < nl; ++col) {
    const QVector coords = commuting_coords(vec_xi(vec_xi(lower[col].second)), k);
    for (int row = 0; row < static_cast<int>(p.size()); ++row) X[row][col] = coords[row];
  }
  const QMatrix MX = q_mul(M, X);
  QVector rhs(M.size(), GaussianRational(0));
  for (int i = 0; i < static_cast<int>(M.size()); ++i)
    for (int j = 0; j < static_cast<int>(p.size()); ++j) rhs[i] += M[i][j] * p[j];
  const auto q = solve(MX, rhs);
  if (!q) throw std::domain_error("harmonic splitting has no solution");
  PolyState qs(m);
  for (int i = 0; i < nl; ++i)
    if (!(*q)[i].is_zero()) qs += Scalar((*q)[i]) * lower[i].second;
  const PolyState h = f - vec_xi(vec_xi(qs));
  if (!laplace(h).is_zero()) throw std::logic_error("harmonic part failed to be harmonic");
  return {h, qs};
}

std::pair<PolyState, PolyState> harmonic_split(const PolyState& f) {
  const int m = f.dim();
  const int k = f.homogeneous_degree();
  if (k < 2) return {f, PolyState::zero(m)};
  const auto alphas_k = mi::of_degree(m, k);
  const auto alphas_l = mi::of_degree(m, k - 2);
  const int nk = static_cast<int>(alphas_k.size());
  const int nl = static_cast<int>(alphas_l.size());
  auto index_of = [](const std::vector<std::uint64_t>& v, std::uint64_t a) {
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
      if (v[i] == a) return i;
    return -1;
  };
  // Laplacian and xi^2 act monomial-wise with rational coefficients here.
  QMatrix M(nl, QVector(nk, GaussianRational(0)));
  for (int col = 0; col < nk; ++col) {
    const std::uint64_t a = alphas_k[col];
    for (int j = 0; j < m; ++j) {
      const long e = mi::get(a, j);
      if (e >= 2)
        M[index_of(alphas_l, mi::dec(mi::dec(a, j), j))][col] += GaussianRational(e * (e - 1));
    }
  }
  QMatrix X(nk, QVector(nl, GaussianRational(0)));
  for (int col = 0; col < nl; ++col) {
    const std::uint64_t a = alphas_l[col];
    for (int j = 0; j < m; ++j)
      X[index_of(alphas_k, mi::inc(mi::inc(a, j), j))][col] += GaussianRational(1);
  }
  const QMatrix MX = q_mul(M, X);
  std::vector<CliffordElement> rhs(nl, CliffordElement::zero(m));
  for (const auto& [alpha, c] : f.terms()) {
    for (int j = 0; j < m; ++j) {
      const long e = mi::get(alpha, j);
      if (e >= 2) rhs[index_of(alphas_l, mi::dec(mi::dec(alpha, j), j))] += Scalar(e * (e - 1)) * c;
    }
  }
  const std::vector<CliffordElement> q = solve_module(MX, rhs);
  PolyState qs(m);
  for (int i = 0; i < nl; ++i) qs.add_term(alphas_l[i], q[i]);
  PolyState xi2q(m);
  for (const auto& [alpha, c] : qs.terms())
    for (int j = 0; j < m; ++j) xi2q.add_term(mi::inc(mi::inc(alpha, j), j), c);
  const PolyState h = f - xi2q;
  if (!laplace(h).is_zero()) throw std::logic_error("harmonic part failed to be harmonic");
  return {h, qs};
}

HarmonicDim harmonic_dim(int m, int k) {
  if (m < 1 || k < 0) throw std::invalid_argument("bad dimension or degree");
  const Integer formula = binomial(k + m - 1, m - 1) - (k >= 2 ? binomial(k + m - 3, m - 1) : 0);
  const QMatrix M = laplace_matrix(m, k);
  const int cols = static_cast<int>(mi::of_degree(m, k).size());
  const int kernel = cols - (k < 2 ? 0 : rank(M));
  HarmonicDim d{static_cast<int>(formula), kernel};
  if (d.formula != d.kernel_rank)
    throw std::logic_error("harmonic dimension formula disagrees with the kernel rank");
  return d;
}

IsotropicFrame isotropic_frame(int m) {
  IsotropicFrame fr;
  fr.m = m;
  fr.n = m / 2;
  const Scalar half(GaussianRational(1, 2));
  const Scalar ihalf = half * Scalar::i();
  for (int j = 1; j <= fr.n; ++j) {
    const RtElement r1 = RtElement::generator(Family::R, 2 * j - 1, m);
    const RtElement r2 = RtElement::generator(Family::R, 2 * j, m);
    const RtElement t1 = RtElement::generator(Family::T, 2 * j - 1, m);
    const RtElement t2 = RtElement::generator(Family::T, 2 * j, m);
    fr.f.push_back(half * r1 - ihalf * r2);
    fr.fd.push_back(half * r1 + ihalf * r2);
    fr.g.push_back(half * t1 - ihalf * t2);
    fr.gd.push_back(-(half * t1 + ihalf * t2));
  }
  return fr;
}

RtElement primitive_idempotent(int m) {
  const IsotropicFrame fr = isotropic_frame(m);
  RtElement I = RtElement::one(m);
  for (int j = 0; j < fr.n; ++j) I = I * fr.f[j] * fr.fd[j] * fr.g[j] * fr.gd[j];
  if (m % 2 == 1) {
    const Scalar half(GaussianRational(1, 2));
    const RtElement rm = RtElement::generator(Family::R, m, m);
    const RtElement tm = RtElement::generator(Family::T, m, m);
    I = I * (half * (RtElement::one(m) + rm * tm));
  }
  if (!(I * I == I)) throw std::logic_error("projector failed to be idempotent");
  return I;
}

int left_ideal_rank(const RtElement& a) {
  const int m = a.dim();
  const int words = 1 << (2 * m);
  QMatrix rows;
  for (int rw = 0; rw < (1 << m); ++rw) {
    for (int tw = 0; tw < (1 << m); ++tw) {
      const RtElement prod =
          RtElement::word(m, RtWord{static_cast<std::uint32_t>(rw),
                                    static_cast<std::uint32_t>(tw)}) * a;
      QVector row(words, GaussianRational(0));
      for (const auto& [w, s] : prod.terms())
        row[static_cast<int>(w.r) | (static_cast<int>(w.t) << m)] = s.constant_value();
      rows.push_back(std::move(row));
    }
  }
  return rank(rows);
}

namespace {

OperatorElement isotropic_pairing(int m, Family fam) {
  // (x_1 G_1 - i x_2 G_2) / 2 for the chosen generator family
  auto gen = [&](int j) {
    return fam == Family::R ? OperatorElement::r(j, m) : OperatorElement::t(j, m);
  };
  const Scalar half(GaussianRational(1, 2));
  return half * (OperatorElement::xi(1, m) * gen(1)) -
         half * Scalar::i() * (OperatorElement::xi(2, m) * gen(2));
}

}  // namespace

PolyState hw_state(int m, int k) {
  if (m < 2 || k < 0) throw std::invalid_argument("needs m >= 2 and k >= 0");
  Scalar inv_fact(1);
  for (int j = 2; j <= k; ++j) inv_fact *= Scalar(j);
  return inv_fact.inverse() * apply(isotropic_pairing(m, Family::R).pow(k), PolyState::ground(m));
}

PolyState hw_half_state(int m, int k) {
  if (m < 2 || k < 0) throw std::invalid_argument("needs m >= 2 and k >= 0");
  const OperatorElement I = OperatorElement::from_rt(primitive_idempotent(m));
  return apply(isotropic_pairing(m, Family::R).pow(k) * I, PolyState::ground(m));
}

PolyState hw_perp_state(int m, int k) {
  if (m < 2 || k < 0) throw std::invalid_argument("needs m >= 2 and k >= 0");
  Scalar inv_fact(1);
  for (int j = 2; j <= k; ++j) inv_fact *= Scalar(j);
  return inv_fact.inverse() * apply(isotropic_pairing(m, Family::T).pow(k), PolyState::ground(m));
}

Scalar torus_weight(ActionKind kind, const PolyState& F) {
  const int m = F.dim();
  if (F.is_zero()) throw std::domain_error("zero state has no weight");
  const SpinElement s = torus_element(action_is_perp(kind) ? Family::T : Family::R, m);
  const PolyState G = act(kind, s, F);
  // read off lambda from any blade with a constant coefficient in F
  for (const auto& [alpha, c] : F.terms()) {
    for (const auto& [blade, sc] : c.terms()) {
      if (!sc.is_constant()) continue;
      auto ait = G.terms().find(alpha);
      if (ait == G.terms().end()) break;
      auto bit = ait->second.terms().find(blade);
      if (bit == ait->second.terms().end()) break;
      const Scalar lambda = bit->second * sc.inverse();
      if (G == lambda * F) return lambda;
      throw std::domain_error("state is not a torus eigenvector");
    }
  }
  throw std::domain_error("state is not a torus eigenvector");
}

}  // namespace dca
