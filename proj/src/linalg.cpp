#include "delstar/linalg.hpp"

#include <stdexcept>

namespace delstar {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat mul(const QMat& x, const QMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mul: shape mismatch");
  QMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

QVec mul_vec(const QMat& m, const QVec& v) {
  if (static_cast<int>(v.size()) != m.cols) throw std::invalid_argument("mul_vec: shape mismatch");
  QVec r(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) r[i] += m.at(i, j) * v[j];
  return r;
}

QMat transpose(const QMat& m) {
  QMat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

namespace {

/* Forward elimination with the first-nonzero-row pivot rule. Returns the list
 * of (row, col) pivots; m is left in echelon form. If rhs != nullptr it is
 * carried along. */
std::vector<std::pair<int, int>> echelon(QMat& m, QVec* rhs) {
  std::vector<std::pair<int, int>> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
      if (rhs) std::swap((*rhs)[p], (*rhs)[row]);
    }
    for (int i = row + 1; i < m.rows; ++i) {
      if (m.at(i, col) == 0) continue;
      Rational f = m.at(i, col) / m.at(row, col);
      m.at(i, col) = 0;
      for (int j = col + 1; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
      if (rhs) (*rhs)[i] -= f * (*rhs)[row];
    }
    pivots.emplace_back(row, col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank_q(QMat m) {
  QVec* none = nullptr;
  return static_cast<int>(echelon(m, none).size());
}

std::optional<QVec> solve_q(QMat a, QVec b) {
  if (static_cast<int>(b.size()) != a.rows) throw std::invalid_argument("solve_q: shape mismatch");
  auto pivots = echelon(a, &b);
  int r = static_cast<int>(pivots.size());
  for (int i = r; i < a.rows; ++i)
    if (b[i] != 0) return std::nullopt;
  QVec x(a.cols, Rational(0));
  for (int k = r - 1; k >= 0; --k) {
    auto [row, col] = pivots[k];
    Rational s = b[row];
    for (int j = col + 1; j < a.cols; ++j)
      if (a.at(row, j) != 0) s -= a.at(row, j) * x[j];
    x[col] = s / a.at(row, col);
  }
  return x;
}

QMat inverse_q(const QMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse_q: not square");
  int n = m.rows;
  QMat work(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) work.at(i, j) = m.at(i, j);
    work.at(i, n + i) = 1;
  }
  auto pivots = echelon(work, nullptr);
  // Singular iff some pivot escapes the left block (rank of m below n).
  if (static_cast<int>(pivots.size()) < n || pivots.back().second >= n)
    throw std::invalid_argument("singular matrix");
  // Back substitution on the augmented half.
  QMat inv(n, n);
  for (int rhs = 0; rhs < n; ++rhs) {
    QVec x(n);
    for (int k = n - 1; k >= 0; --k) {
      auto [row, col] = pivots[k];
      Rational s = work.at(row, n + rhs);
      for (int j = col + 1; j < n; ++j)
        if (work.at(row, j) != 0) s -= work.at(row, j) * x[j];
      x[col] = s / work.at(row, col);
    }
    for (int i = 0; i < n; ++i) inv.at(i, rhs) = x[i];
  }
  return inv;
}

Rational det_q(QMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det_q: not square");
  int n = m.rows;
  Rational det = 1;
  int row = 0;
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != row) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(row, j));
      det = -det;
    }
    det *= m.at(row, col);
    for (int i = row + 1; i < n; ++i) {
      if (m.at(i, col) == 0) continue;
      Rational f = m.at(i, col) / m.at(row, col);
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    ++row;
  }
  return det;
}

bool is_positive_definite(const QMat& g) {
  if (g.rows != g.cols) throw std::invalid_argument("is_positive_definite: not square");
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < i; ++j)
      if (g.at(i, j) != g.at(j, i)) throw std::invalid_argument("is_positive_definite: not symmetric");
  for (int k = 1; k <= g.rows; ++k) {
    QMat minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor.at(i, j) = g.at(i, j);
    if (det_q(minor) <= 0) return false;
  }
  return true;
}

Ldlt ldlt(const QMat& g) {
  int n = g.rows;
  Ldlt f;
  f.l = QMat::identity(n);
  f.d.assign(n, Rational(0));
  for (int j = 0; j < n; ++j) {
    Rational dj = g.at(j, j);
    for (int k = 0; k < j; ++k) dj -= f.l.at(j, k) * f.l.at(j, k) * f.d[k];
    if (dj <= 0) throw std::invalid_argument("ldlt: matrix not positive definite");
    f.d[j] = dj;
    for (int i = j + 1; i < n; ++i) {
      Rational v = g.at(i, j);
      for (int k = 0; k < j; ++k) v -= f.l.at(i, k) * f.l.at(j, k) * f.d[k];
      f.l.at(i, j) = v / dj;
    }
  }
  return f;
}

std::vector<QVec> nullspace_q(QMat m) {
  int n = m.cols;
  auto pivots = echelon(m, nullptr);
  std::vector<bool> is_pivot(n, false);
  for (auto [r, c] : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    QVec x(n, Rational(0));
    x[free] = 1;
    for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
      auto [row, col] = pivots[k];
      Rational s = 0;
      for (int j = col + 1; j < n; ++j)
        if (m.at(row, j) != 0) s -= m.at(row, j) * x[j];
      x[col] = s / m.at(row, col);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace delstar
