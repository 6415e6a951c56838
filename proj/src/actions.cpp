#include "dca/actions.hpp"

#include <stdexcept>

#include "dca/linalg.hpp"

namespace dca {

ActionKind action_kind_from_string(const std::string& name) {
  if (name == "H0") return ActionKind::H0;
  if (name == "H1") return ActionKind::H1;
  if (name == "L") return ActionKind::L;
  if (name == "H0perp") return ActionKind::H0Perp;
  if (name == "H1perp") return ActionKind::H1Perp;
  if (name == "Lperp") return ActionKind::LPerp;
  throw std::invalid_argument("unknown action kind: " + name);
}

std::string action_kind_name(ActionKind k) {
  switch (k) {
    case ActionKind::H0: return "H0";
    case ActionKind::H1: return "H1";
    case ActionKind::L: return "L";
    case ActionKind::H0Perp: return "H0perp";
    case ActionKind::H1Perp: return "H1perp";
    case ActionKind::LPerp: return "Lperp";
  }
  throw std::logic_error("bad action kind");
}

bool action_is_perp(ActionKind k) {
  return k == ActionKind::H0Perp || k == ActionKind::H1Perp || k == ActionKind::LPerp;
}

RotatedVariables rotated_variables(const SpinElement& s) {
  const int m = s.dim();
  const Family fam = s.family();
  const OperatorElement s_op = OperatorElement::from_rt(s.value());
  const OperatorElement sbar_op = OperatorElement::from_rt(s.conjugated());
  const OperatorElement eta = sbar_op * OperatorElement::vector_variable(m) * s_op;
  const OperatorElement deta = sbar_op * OperatorElement::dirac(m) * s_op;

  auto gen = [&](int j) {
    return fam == Family::R ? OperatorElement::r(j, m) : OperatorElement::t(j, m);
  };
  const Scalar half(GaussianRational(1, 2));
  // component extraction against the family generators; the T family picks
  // up a sign from T_j^2 = -1
  auto component = [&](const OperatorElement& x, int j) {
    OperatorElement c = half * (x * gen(j) + gen(j) * x) * gen(j);
    return fam == Family::R ? c : -c;
  };

  RotatedVariables rv;
  rv.s = s;
  for (int j = 1; j <= m; ++j) {
    rv.var.push_back(component(eta, j));
    rv.der.push_back(component(deta, j));
  }

  // consistency of the extracted components
  OperatorElement var_sum(m), der_sum(m);
  for (int j = 0; j < m; ++j) {
    var_sum += rv.var[j];
    der_sum += rv.der[j];
  }
  if (!(var_sum == eta) || !(der_sum == deta))
    throw std::logic_error("conjugated coordinates do not sum back");
  const OperatorElement one = OperatorElement::identity(m);
  for (int j = 1; j <= m; ++j) {
    for (int k = 1; k <= m; ++k) {
      const OperatorElement anti = gen(j) * rv.var[k - 1] + rv.var[k - 1] * gen(j);
      const OperatorElement expect =
          j == k ? Scalar(2) * (gen(j) * rv.var[j - 1]) : OperatorElement::zero(m);
      if (!(anti == expect))
        throw std::logic_error("conjugated coordinates break the generator exchange rule");
      const OperatorElement& dj = rv.der[j - 1];
      const OperatorElement& vk = rv.var[k - 1];
      if (j == k) {
        if (!(dj * vk - vk * dj == one))
          throw std::logic_error("conjugated pair misses the Weyl relation");
      } else {
        if (!(dj * vk + vk * dj == OperatorElement::zero(m)))
          throw std::logic_error("conjugated cross pair does not anticommute");
      }
    }
  }
  return rv;
}

namespace {

// Product var[0]^{a_0} ... var[m-1]^{a_{m-1}} with cached powers.
class PowerCache {
 public:
  PowerCache(const std::vector<OperatorElement>& base, int m) : base_(base), m_(m) {
    pow_.assign(base.size(), {OperatorElement::identity(m)});
  }
  const OperatorElement& get(int j, int e) {
    auto& v = pow_[j];
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * base_[j]);
    return v[e];
  }
  OperatorElement monomial(std::uint64_t alpha) {
    OperatorElement p = OperatorElement::identity(m_);
    for (int j = 0; j < m_; ++j) {
      const int e = static_cast<int>(mi::get(alpha, j));
      if (e > 0) p = p * get(j, e);
    }
    return p;
  }

 private:
  const std::vector<OperatorElement>& base_;
  int m_;
  std::vector<std::vector<OperatorElement>> pow_;
};

}  // namespace

PolyState act(ActionKind kind, const SpinElement& s, const PolyState& f) {
  if (s.dim() != f.dim()) throw std::invalid_argument("dimension mismatch");
  const bool perp = action_is_perp(kind);
  if (perp && s.family() != Family::T)
    throw std::invalid_argument("perp action needs a perp-family spin element");
  if (!perp && s.family() != Family::R)
    throw std::invalid_argument("action needs an R-family spin element");
  const int m = f.dim();
  RotatedVariables rv = rotated_variables(s);
  PowerCache powers(rv.var, m);
  const OperatorElement s_op = OperatorElement::from_rt(s.value());
  const OperatorElement sbar_op = OperatorElement::from_rt(s.conjugated());

  PolyState out(m);
  for (const auto& [alpha, c] : f.terms()) {
    OperatorElement op = powers.monomial(alpha);
    if (kind == ActionKind::L || kind == ActionKind::LPerp || kind == ActionKind::H1 ||
        kind == ActionKind::H1Perp)
      op = s_op * op;
    if (kind == ActionKind::H1 || kind == ActionKind::H1Perp) op = op * sbar_op;
    out += apply(op, PolyState::ground(m, c));
  }
  return out;
}

OperatorElement rotation_generator(int a, int b, int m) {
  if (a < 1 || b < 1 || a > m || b > m) throw std::invalid_argument("index out of range");
  if (a == b) return OperatorElement::zero(m);
  const OperatorElement mix = OperatorElement::xi(a, m) * OperatorElement::del(b, m) +
                              OperatorElement::xi(b, m) * OperatorElement::del(a, m);
  return OperatorElement::r(b, m) * OperatorElement::r(a, m) * mix;
}

OperatorElement spinor_rotation_generator(int a, int b, int m) {
  if (a == b) return OperatorElement::zero(m);
  const Scalar half(GaussianRational(1, 2));
  return rotation_generator(a, b, m) -
         half * (OperatorElement::r(b, m) * OperatorElement::r(a, m));
}

PolyState exp_rotation_12(int p, const PolyState& f) {
  const int m = f.dim();
  if (m < 2) throw std::invalid_argument("needs at least two coordinates");
  for (const auto& [alpha, c] : f.terms())
    for (int j = 2; j < m; ++j)
      if (mi::get(alpha, j) != 0)
        throw std::invalid_argument("state must be supported on coordinates 1 and 2");

  const OperatorElement mixer = OperatorElement::xi(1, m) * OperatorElement::del(2, m) +
                                OperatorElement::xi(2, m) * OperatorElement::del(1, m);
  const OperatorElement bivector =
      OperatorElement::r(2, m) * OperatorElement::r(1, m);

  PolyState out(m);
  for (int k = 0; k <= f.max_degree(); ++k) {
    const PolyState slice = f.degree_slice(k);
    if (slice.is_zero()) continue;
    // basis monomials x1^a x2^{k-a}
    std::vector<std::uint64_t> basis;
    for (int a = 0; a <= k; ++a) basis.push_back(mi::with(mi::with(0, 0, a), 1, k - a));
    const int n = k + 1;
    QMatrix A(n, QVector(n, GaussianRational(0)));
    for (int col = 0; col < n; ++col) {
      const PolyState img = apply(mixer, PolyState::monomial(m, basis[col], CliffordElement::one(m)));
      for (const auto& [alpha, c] : img.terms()) {
        int row = -1;
        for (int i = 0; i < n; ++i)
          if (basis[i] == alpha) row = i;
        if (row < 0) throw std::logic_error("mixing operator left the degree slice");
        A[row][col] = c.scalar_part().constant_value();
      }
    }
    // eigenvalues are the integers of the same parity as k in [-k, k]
    std::vector<int> lambdas;
    QMatrix V;  // columns = eigenvectors
    std::vector<int> col_lambda;
    for (int lam = -k; lam <= k; lam += 2) {
      QMatrix shifted = A;
      for (int i = 0; i < n; ++i) shifted[i][i] -= GaussianRational(lam);
      for (const auto& v : kernel_basis(shifted)) {
        V.push_back(v);  // stored row-wise for now
        col_lambda.push_back(lam);
      }
    }
    if (static_cast<int>(V.size()) != n)
      throw std::logic_error("degree slice failed to diagonalize");
    // transpose into column form and invert
    QMatrix Vc(n, QVector(n, GaussianRational(0)));
    for (int c2 = 0; c2 < n; ++c2)
      for (int r2 = 0; r2 < n; ++r2) Vc[r2][c2] = V[c2][r2];
    // augment and reduce to get V^{-1}
    QMatrix aug = Vc;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) aug[i].push_back(i == j ? GaussianRational(1) : GaussianRational(0));
    }
    if (static_cast<int>(rref(aug).size()) != n)
      throw std::logic_error("eigenvector matrix is singular");
    QMatrix Vinv(n, QVector(n, GaussianRational(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) Vinv[i][j] = aug[i][n + j];

    // slice coefficients in the monomial basis
    std::vector<CliffordElement> coeff(n, CliffordElement::zero(m));
    for (const auto& [alpha, c] : slice.terms())
      for (int i = 0; i < n; ++i)
        if (basis[i] == alpha) coeff[i] = c;
    // eigen components: x = V^{-1} coeff, then regroup per eigenvalue
    std::vector<CliffordElement> x(n, CliffordElement::zero(m));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!Vinv[i][j].is_zero()) x[i] += Scalar(Vinv[i][j]) * coeff[j];
    for (int lam = -k; lam <= k; lam += 2) {
      PolyState part(m);
      for (int c2 = 0; c2 < n; ++c2) {
        if (col_lambda[c2] != lam) continue;
        for (int r2 = 0; r2 < n; ++r2) {
          if (Vc[r2][c2].is_zero()) continue;
          part.add_term(basis[r2], Scalar(Vc[r2][c2]) * x[c2]);
        }
      }
      if (part.is_zero()) continue;
      out += cos_kt(lam, p) * part + sin_kt(lam, p) * apply(bivector, part);
    }
  }
  return out;
}

PolyState eigen_state(int k, int i, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  const int m = 2;
  const OperatorElement x1 = OperatorElement::xi(1, m);
  const OperatorElement x2 = OperatorElement::xi(2, m);
  const OperatorElement xsum = x1 + x2;
  const OperatorElement plus = sign > 0 ? x2 + x1 : x2 - x1;
  const OperatorElement minus = sign > 0 ? x2 - x1 : x2 + x1;
  OperatorElement op(m);
  if (k % 2 == 0) {
    if (i < 0 || 2 * i > k) throw std::invalid_argument("index out of range");
    op = xsum.pow(k - 2 * i) * (plus * minus).pow(i);
  } else {
    if (i < 1 || 2 * i - 1 > k) throw std::invalid_argument("index out of range");
    op = xsum.pow(k - 2 * i + 1) * (plus * minus).pow(i - 1) * plus;
  }
  return apply(op, PolyState::ground(m));
}

PolyState infinitesimal_action(ActionKind kind, int j, int i, const PolyState& f) {
  const int m = f.dim();
  if (i >= j) throw std::invalid_argument("needs i < j");
  if (action_is_perp(kind)) throw std::invalid_argument("perp kinds have no derivative here");
  const OperatorElement bivector = OperatorElement::r(j, m) * OperatorElement::r(i, m);
  const OperatorElement gen = Scalar(-2) * rotation_generator(i, j, m);
  switch (kind) {
    case ActionKind::H0:
      return apply(gen, f);
    case ActionKind::L:
      return apply(gen + bivector, f);
    case ActionKind::H1: {
      const CliffordElement eji = CliffordElement::e_vec(j, m) * CliffordElement::e_vec(i, m);
      return apply(gen + bivector, f) - insert_ground_constant(f, eji);
    }
    default:
      throw std::invalid_argument("unsupported kind");
  }
}

}  // namespace dca
