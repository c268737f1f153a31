#include "curv/sampling.hpp"

#include <stdexcept>

namespace curv {

Matrix random_matrix(Rng& rng, int rows, int cols, int lo, int hi) {
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = Rational(rng.uniform_int(lo, hi));
  return m;
}

Matrix random_invertible(Rng& rng, int n, int lo, int hi) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n, lo, hi);
    if (rank(m) == n) return m;
  }
}

Bilinear random_symmetric(Rng& rng, Dim m, int lo, int hi) {
  Bilinear b(m);
  for (int i = 0; i < m.m; ++i)
    for (int j = i; j < m.m; ++j) {
      b.at(i, j) = Rational(rng.uniform_int(lo, hi));
      b.at(j, i) = b.at(i, j);
    }
  return b;
}

Bilinear random_antisymmetric(Rng& rng, Dim m, int lo, int hi) {
  Bilinear b(m);
  for (int i = 0; i < m.m; ++i)
    for (int j = i + 1; j < m.m; ++j) {
      b.at(i, j) = Rational(rng.uniform_int(lo, hi));
      b.at(j, i) = -b.at(i, j);
    }
  return b;
}

CubicForm random_cubic(Rng& rng, Dim m, int lo, int hi) {
  CubicForm c(m);
  for (int i = 0; i < m.m; ++i)
    for (int j = i; j < m.m; ++j)
      for (int k = 0; k < m.m; ++k) c.set(i, j, k, Rational(rng.uniform_int(lo, hi)));
  return c;
}

Matrix random_distinct_diagonal(Rng& rng, int n) {
  // distinct positive entries: a shuffled slice of 1..2n
  std::vector<int> pool(2 * n);
  for (int i = 0; i < 2 * n; ++i) pool[i] = i + 1;
  for (int i = 2 * n - 1; i > 0; --i) {
    const int j = rng.uniform_int(0, i);
    std::swap(pool[i], pool[j]);
  }
  Matrix d(n, n);
  for (int i = 0; i < n; ++i) d.at(i, i) = Rational(pool[i]);
  return d;
}

Bilinear random_signature_form(Rng& rng, Dim m, int p, int q) {
  if (p < 0 || q < 0 || p + q < 1 || p + q > m.m)
    throw std::invalid_argument("random_signature_form: invalid signature");
  const Matrix psi = random_invertible(rng, m.m);
  Matrix d(m.m, m.m);
  for (int i = 0; i < p; ++i) d.at(i, i) = Rational(-1);
  for (int i = p; i < p + q; ++i) d.at(i, i) = Rational(1);
  return Bilinear::from_matrix(psi.transpose() * d * psi);
}

Metric random_metric(Rng& rng, Dim m, int p, int q) {
  if (p + q != m.m) throw std::invalid_argument("random_metric: signature must fill dimension");
  return Metric::from_bilinear(random_signature_form(rng, m, p, q));
}

Matrix random_signed_permutation(Rng& rng, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = rng.uniform_int(0, i);
    std::swap(perm[i], perm[j]);
  }
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    m.at(perm[i], i) = Rational(rng.uniform_int(0, 1) == 0 ? 1 : -1);
  return m;
}

Matrix cayley_orthogonal(Rng& rng, const Metric& g) {
  const int n = g.dim();
  const Matrix xi_inv = g.xi_inv().as_matrix();
  for (;;) {
    // K antisymmetric with small rational entries; S = Xi^{-1} K is then
    // skew with respect to the metric.
    Matrix k(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        k.at(i, j) = Rational(rng.uniform_int(-2, 2), rng.uniform_int(1, 3));
        k.at(j, i) = -k.at(i, j);
      }
    const Matrix s = xi_inv * k;
    Matrix i_plus_s = Matrix::identity(n) + s;
    if (rank(i_plus_s) != n) continue;
    Matrix psi = (Matrix::identity(n) - s) * i_plus_s.inverse();
    if (psi == Matrix::identity(n)) continue;  // K was zero; resample
    return psi;
  }
}

}  // namespace curv
