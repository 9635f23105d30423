#ifndef DELSTAR_LINALG_HPP
#define DELSTAR_LINALG_HPP

#include <optional>

#include "delstar/rational.hpp"

namespace delstar {

struct QMat {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Rational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static QMat identity(int n);
  bool operator==(const QMat& o) const = default;
};

QMat mul(const QMat& x, const QMat& y);
QVec mul_vec(const QMat& m, const QVec& v);
QMat transpose(const QMat& m);

/* Exact Gaussian elimination. Pivot rule everywhere: first row (in index
 * order) with a nonzero entry in the current column. */
int rank_q(QMat m);

/* One exact solution of A x = b, free variables set to zero; nullopt when the
 * system is inconsistent. */
std::optional<QVec> solve_q(QMat a, QVec b);

/* Throws std::invalid_argument("singular matrix") for singular input. */
QMat inverse_q(const QMat& m);

Rational det_q(QMat m);

/* Sylvester criterion: all leading principal minors positive. Requires a
 * square symmetric matrix. */
bool is_positive_definite(const QMat& g);

/* G = L D L^T with L unit lower triangular, D positive diagonal; requires
 * symmetric positive definite G. */
struct Ldlt {
  QMat l;
  QVec d;
};
Ldlt ldlt(const QMat& g);

/* Basis of the nullspace {x : m x = 0}, deterministic (free variable one-hot
 * in index order). */
std::vector<QVec> nullspace_q(QMat m);

}  // namespace delstar

#endif
