#include <doctest.h>

#include <algorithm>
#include <random>

#include "curv/matrix.hpp"

using namespace curv;

namespace {

Matrix from_rows(const std::vector<std::vector<long>>& rows) {
  Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = Rational(rows[r][c]);
  return m;
}

std::vector<Rational> vec(const std::vector<long>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

Matrix random_rational_matrix(std::mt19937_64& eng, int rows, int cols) {
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = Rational(static_cast<long>(eng() % 7) - 3, static_cast<long>(eng() % 3) + 1);
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic is canonical and exact") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational("6/4").str() == "3/2");
  CHECK(Rational("-7").str() == "-7");
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(1, 3) * Rational(3, 7)) == Rational(1, 7));
  CHECK(Rational(5, 7).inverse() == Rational(7, 5));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rank: zero, identity, proportional rows") {
  CHECK(rank(Matrix(3, 5)) == 0);
  CHECK(rank(Matrix::identity(5)) == 5);
  CHECK(rank(from_rows({{1, 2}, {2, 4}, {3, 6}})) == 1);
}

TEST_CASE("null_space basics") {
  CHECK(null_space(Matrix::identity(4)).dim() == 0);
  CHECK(null_space(Matrix(4, 4)).dim() == 4);

  const Subspace n = null_space(from_rows({{1, 1, 0}}));
  CHECK(n.dim() == 2);
  CHECK(n.contains(vec({1, -1, 0})));
  CHECK(n.contains(vec({0, 0, 1})));
  CHECK_FALSE(n.contains(vec({1, 0, 0})));
  // every basis vector solves the system exactly
  for (int r = 0; r < n.basis().rows(); ++r)
    CHECK((n.basis().at(r, 0) + n.basis().at(r, 1)).is_zero());
}

TEST_CASE("span_union examples") {
  const Subspace x_axis = Subspace::span_of_rows(from_rows({{1, 0, 0}}));
  const Subspace y_axis = Subspace::span_of_rows(from_rows({{0, 1, 0}}));
  CHECK(span_union({x_axis, y_axis}).dim() == 2);
  CHECK(span_union({x_axis, Subspace::zero(3)}) == x_axis);

  const Subspace a = Subspace::span_of_rows(from_rows({{1, 0}}));
  const Subspace b = Subspace::span_of_rows(from_rows({{1, 1}}));
  CHECK(span_union({a, b}) == Subspace::full_space(2));

  CHECK_THROWS_AS(span_union({x_axis, a}), std::invalid_argument);
}

TEST_CASE("contains examples") {
  const Subspace s = Subspace::span_of_rows(from_rows({{1, 2}}));
  CHECK(s.contains(vec({0, 0})));
  CHECK(s.contains(vec({2, 4})));
  CHECK_FALSE(s.contains(vec({1, 0})));
  CHECK_FALSE(Subspace::zero(2).contains(vec({1, 0})));
  CHECK(Subspace::zero(2).contains(vec({0, 0})));
  CHECK_THROWS_AS(s.contains(vec({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("rank equals rank of the transpose") {
  std::mt19937_64 eng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = random_rational_matrix(eng, 5, 7);
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937_64 eng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = random_rational_matrix(eng, 6, 9);
    CHECK(null_space(m).dim() + rank(m) == m.cols());
  }
}

TEST_CASE("span_union is idempotent, commutative, monotone") {
  std::mt19937_64 eng(44);
  const Subspace a = Subspace::span_of_rows(random_rational_matrix(eng, 2, 6));
  const Subspace b = Subspace::span_of_rows(random_rational_matrix(eng, 3, 6));
  const Subspace u = span_union({a, b});
  CHECK(span_union({u, u}) == u);
  CHECK(span_union({b, a}) == u);
  CHECK(u.dim() >= a.dim());
  CHECK(u.dim() >= b.dim());
  CHECK(u.contains(a));
  CHECK(u.contains(b));
}

TEST_CASE("elimination result is independent of row order") {
  std::mt19937_64 eng(45);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix m = random_rational_matrix(eng, 6, 8);
    const int rk = rank(m);
    const Subspace rowspace = Subspace::span_of_rows(m);
    std::vector<int> order(m.rows());
    for (int i = 0; i < m.rows(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), eng);
    Matrix shuffled(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) shuffled.at(r, c) = m.at(order[r], c);
    CHECK(rank(shuffled) == rk);
    CHECK(Subspace::span_of_rows(shuffled) == rowspace);
    CHECK(null_space(shuffled) == null_space(m));
  }
}

TEST_CASE("matrix inverse is exact") {
  std::mt19937_64 eng(46);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix m = random_rational_matrix(eng, 5, 5);
    if (rank(m) < 5) continue;
    CHECK(m * m.inverse() == Matrix::identity(5));
  }
  CHECK_THROWS_AS(from_rows({{1, 2}, {2, 4}}).inverse(), std::domain_error);
}
