#include "dca/linalg.hpp"

#include <stdexcept>

namespace dca {

QMatrix q_identity(int n) {
  QMatrix a(n, QVector(n, GaussianRational(0)));
  for (int i = 0; i < n; ++i) a[i][i] = GaussianRational(1);
  return a;
}

QMatrix q_mul(const QMatrix& a, const QMatrix& b) {
  if (a.empty() || b.empty()) return {};
  const int n = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  const int p = static_cast<int>(b[0].size());
  QMatrix c(n, QVector(p, GaussianRational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (int l = 0; l < p; ++l) c[i][l] += a[i][j] * b[j][l];
    }
  return c;
}

std::vector<int> rref(QMatrix& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = -1;
    for (int i = row; i < rows; ++i)
      if (!a[i][col].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[row], a[p]);
    const GaussianRational inv = a[row][col].inverse();
    for (int j = col; j < cols; ++j) a[row][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      const GaussianRational f = a[i][col];
      for (int j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(QMatrix a) { return static_cast<int>(rref(a).size()); }

std::vector<QVector> kernel_basis(const QMatrix& a_in) {
  QMatrix a = a_in;
  if (a.empty()) return {};
  const int cols = static_cast<int>(a[0].size());
  const std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols, GaussianRational(0));
    v[free] = GaussianRational(1);
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& a_in, const QVector& b) {
  if (a_in.size() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  if (a_in.empty()) return QVector{};
  const int rows = static_cast<int>(a_in.size());
  const int cols = static_cast<int>(a_in[0].size());
  QMatrix aug = a_in;
  for (int i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  const std::vector<int> pivots = rref(aug);
  // inconsistent iff a pivot lands in the augmented column
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  QVector x(cols, GaussianRational(0));
  for (int i = 0; i < static_cast<int>(pivots.size()); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

}  // namespace dca
