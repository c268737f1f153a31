#include "curv/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace curv {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
  e_.assign(static_cast<size_t>(rows) * cols, Rational());
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

std::vector<Rational> Matrix::row(int r) const {
  return std::vector<Rational>(e_.begin() + static_cast<size_t>(r) * cols_,
                               e_.begin() + static_cast<size_t>(r + 1) * cols_);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
  Matrix p(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rational& v = at(r, k);
      if (v.is_zero()) continue;
      for (int c = 0; c < o.cols_; ++c) {
        if (o.at(k, c).is_zero()) continue;
        p.at(r, c) += v * o.at(k, c);
      }
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix: shape mismatch in sum");
  Matrix s(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + o.e_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix: shape mismatch in difference");
  Matrix s(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] - o.e_[i];
  return s;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix s(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] * c;
  return s;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rational& v) { return v.is_zero(); });
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("Matrix: inverse of non-square matrix");
  const int n = rows_;
  Matrix a = *this;
  Matrix inv = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) { piv = r; break; }
    if (piv < 0) throw std::domain_error("Matrix: singular");
    if (piv != col)
      for (int c = 0; c < n; ++c) {
        std::swap(a.at(piv, c), a.at(col, c));
        std::swap(inv.at(piv, c), inv.at(col, c));
      }
    const Rational d = a.at(col, col).inverse();
    for (int c = 0; c < n; ++c) {
      a.at(col, c) *= d;
      inv.at(col, c) *= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      const Rational f = a.at(r, col);
      for (int c = 0; c < n; ++c) {
        a.at(r, c) -= f * a.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

SparseRow to_sparse(const std::vector<Rational>& dense) {
  SparseRow r;
  for (int c = 0; c < static_cast<int>(dense.size()); ++c)
    if (!dense[c].is_zero()) r.emplace_back(c, dense[c]);
  return r;
}

std::vector<Rational> to_dense(const SparseRow& row, int n) {
  std::vector<Rational> v(n);
  for (const auto& [c, val] : row) v[c] = val;
  return v;
}

namespace {

// r + f*p, both sorted by column; zero results dropped.
SparseRow axpy(const SparseRow& r, const Rational& f, const SparseRow& p) {
  SparseRow out;
  out.reserve(r.size() + p.size());
  size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || p[j].first < r[i].first) {
      Rational v = f * p[j].second;
      if (!v.is_zero()) out.emplace_back(p[j].first, std::move(v));
      ++j;
    } else {
      Rational v = r[i].second + f * p[j].second;
      if (!v.is_zero()) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

RrefBuilder::RrefBuilder(int ambient) : ambient_(ambient) {
  if (ambient < 0) throw std::invalid_argument("RrefBuilder: negative ambient dimension");
}

int RrefBuilder::row_for_pivot(int col) const {
  auto it = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), col);
  if (it == pivot_cols_.end() || *it != col) return -1;
  return static_cast<int>(it - pivot_cols_.begin());
}

void RrefBuilder::reduce(SparseRow& r) const {
  size_t i = 0;
  while (i < r.size()) {
    const int col = r[i].first;
    const int pr = row_for_pivot(col);
    if (pr < 0) { ++i; continue; }
    // Pivot row leads at col with coefficient 1; entries before col are
    // untouched by the subtraction.
    r = axpy(r, -r[i].second, rows_[pr]);
  }
}

bool RrefBuilder::insert(SparseRow row) {
  for (const auto& [c, v] : row)
    if (c < 0 || c >= ambient_) throw std::invalid_argument("RrefBuilder: column out of range");
  reduce(row);
  if (row.empty()) return false;
  const Rational lead = row.front().second.inverse();
  for (auto& [c, v] : row) v *= lead;
  const int pc = row.front().first;
  for (auto& existing : rows_) {
    auto it = std::lower_bound(existing.begin(), existing.end(), pc,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != existing.end() && it->first == pc) existing = axpy(existing, -it->second, row);
  }
  auto pos = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), pc);
  const auto idx = pos - pivot_cols_.begin();
  pivot_cols_.insert(pos, pc);
  rows_.insert(rows_.begin() + idx, std::move(row));
  return true;
}

bool RrefBuilder::in_span(SparseRow row) const {
  reduce(row);
  return row.empty();
}

Matrix RrefBuilder::to_matrix() const {
  Matrix m(rank(), ambient_);
  for (int r = 0; r < rank(); ++r)
    for (const auto& [c, v] : rows_[r]) m.at(r, c) = v;
  return m;
}

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full_space(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient);
  return s;
}

Subspace Subspace::span_of_rows(const Matrix& rows) {
  RrefBuilder b(rows.cols());
  for (int r = 0; r < rows.rows(); ++r) b.insert(rows.row(r));
  return from_builder(b);
}

Subspace Subspace::from_builder(const RrefBuilder& b) {
  Subspace s;
  s.ambient_ = b.ambient();
  s.basis_ = b.to_matrix();
  return s;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("Subspace: vector length does not match ambient dimension");
  // Basis rows are already RREF; reuse the builder's reduction.
  RrefBuilder b(ambient_);
  for (int r = 0; r < basis_.rows(); ++r) b.insert(basis_.row(r));
  return b.in_span(v);
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("Subspace: ambient dimension mismatch");
  for (int r = 0; r < other.basis_.rows(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

int rank(const Matrix& m) {
  RrefBuilder b(m.cols());
  for (int r = 0; r < m.rows(); ++r) b.insert(m.row(r));
  return b.rank();
}

int rank_of_rows(const std::vector<SparseRow>& rows, int ambient) {
  RrefBuilder b(ambient);
  for (const auto& r : rows) b.insert(r);
  return b.rank();
}

Subspace null_space_of_rows(const std::vector<SparseRow>& rows, int ambient) {
  RrefBuilder b(ambient);
  for (const auto& r : rows) b.insert(r);
  const auto& piv = b.pivot_cols();
  std::vector<bool> is_pivot(ambient, false);
  for (int c : piv) is_pivot[c] = true;
  RrefBuilder out(ambient);
  for (int f = 0; f < ambient; ++f) {
    if (is_pivot[f]) continue;
    SparseRow v;
    for (int r = 0; r < b.rank(); ++r) {
      const auto& row = b.rows()[r];
      auto it = std::lower_bound(row.begin(), row.end(), f,
                                 [](const auto& e, int col) { return e.first < col; });
      if (it != row.end() && it->first == f) v.emplace_back(piv[r], -it->second);
    }
    v.emplace_back(f, Rational(1));
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& c) { return a.first < c.first; });
    out.insert(std::move(v));
  }
  return Subspace::from_builder(out);
}

Subspace null_space(const Matrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) rows.push_back(to_sparse(m.row(r)));
  return null_space_of_rows(rows, m.cols());
}

Subspace span_union(const std::vector<Subspace>& spaces) {
  if (spaces.empty()) throw std::invalid_argument("span_union: empty input");
  const int ambient = spaces.front().ambient_dim();
  RrefBuilder b(ambient);
  for (const auto& s : spaces) {
    if (s.ambient_dim() != ambient)
      throw std::invalid_argument("span_union: ambient dimension mismatch");
    for (int r = 0; r < s.basis().rows(); ++r) b.insert(s.basis().row(r));
  }
  return Subspace::from_builder(b);
}

bool contains(const Subspace& s, const std::vector<Rational>& v) { return s.contains(v); }

}  // namespace curv
