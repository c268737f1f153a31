#include "curv/tensor.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace curv {

const char* variance_name(Variance v) {
  return v == Variance::Covariant ? "covariant" : "operator";
}

Bilinear& Bilinear::operator+=(const Bilinear& o) {
  if (m_ != o.m_) throw std::invalid_argument("Bilinear: dimension mismatch");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Bilinear& Bilinear::operator-=(const Bilinear& o) {
  if (m_ != o.m_) throw std::invalid_argument("Bilinear: dimension mismatch");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Bilinear Bilinear::scaled(const Rational& c) const {
  Bilinear b = *this;
  for (auto& v : b.e_) v *= c;
  return b;
}

bool Bilinear::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rational& v) { return v.is_zero(); });
}

bool Bilinear::is_symmetric() const {
  for (int i = 0; i < m_; ++i)
    for (int j = i + 1; j < m_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool Bilinear::is_antisymmetric() const {
  for (int i = 0; i < m_; ++i)
    for (int j = i; j < m_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

Bilinear Bilinear::from_flat(Dim m, std::vector<Rational> entries) {
  if (entries.size() != static_cast<size_t>(m.m) * m.m)
    throw std::invalid_argument("Bilinear: wrong entry count");
  Bilinear b(m);
  b.e_ = std::move(entries);
  return b;
}

Matrix Bilinear::as_matrix() const {
  Matrix m(m_, m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) m.at(i, j) = at(i, j);
  return m;
}

Bilinear Bilinear::from_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("Bilinear: non-square matrix");
  Bilinear b((Dim(m.rows())));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) b.at(i, j) = m.at(i, j);
  return b;
}

QuadTensor& QuadTensor::operator+=(const QuadTensor& o) {
  if (m_ != o.m_) throw std::invalid_argument("QuadTensor: dimension mismatch");
  if (variance_ != o.variance_)
    throw std::invalid_argument("QuadTensor: cannot combine covariant and operator tensors");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

QuadTensor& QuadTensor::operator-=(const QuadTensor& o) {
  if (m_ != o.m_) throw std::invalid_argument("QuadTensor: dimension mismatch");
  if (variance_ != o.variance_)
    throw std::invalid_argument("QuadTensor: cannot combine covariant and operator tensors");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

QuadTensor QuadTensor::scaled(const Rational& c) const {
  QuadTensor t = *this;
  for (auto& v : t.e_) v *= c;
  return t;
}

bool QuadTensor::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rational& v) { return v.is_zero(); });
}

QuadTensor QuadTensor::from_flat(Dim m, Variance v, std::vector<Rational> entries) {
  if (entries.size() != static_cast<size_t>(m.m) * m.m * m.m * m.m)
    throw std::invalid_argument("QuadTensor: wrong entry count");
  QuadTensor t(m, v);
  t.e_ = std::move(entries);
  return t;
}

QuadTensor QuadTensor::retagged(Variance v) const {
  QuadTensor t = *this;
  t.variance_ = v;
  return t;
}

bool CubicForm::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rational& v) { return v.is_zero(); });
}

std::tuple<int, int, int> symmetric_signature(const Bilinear& b) {
  if (!b.is_symmetric()) throw std::invalid_argument("signature: form is not symmetric");
  const int n = b.dim();
  Matrix a = b.as_matrix();
  int neg = 0, pos = 0;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int k = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && !a.at(i, i).is_zero()) { k = i; break; }
    if (k < 0) {
      // all remaining diagonal entries vanish; manufacture one
      int fi = -1, fj = -1;
      for (int i = 0; i < n && fi < 0; ++i) {
        if (done[i]) continue;
        for (int j = 0; j < n; ++j)
          if (!done[j] && j != i && !a.at(i, j).is_zero()) { fi = i; fj = j; break; }
      }
      if (fi < 0) break;  // remaining block is zero
      for (int c = 0; c < n; ++c) a.at(fi, c) += a.at(fj, c);
      for (int r = 0; r < n; ++r) a.at(r, fi) += a.at(r, fj);
      k = fi;
    }
    const Rational d = a.at(k, k);
    if (d.sign() > 0) ++pos; else ++neg;
    for (int r = 0; r < n; ++r) {
      if (r == k || done[r] || a.at(r, k).is_zero()) continue;
      const Rational f = a.at(r, k) / d;
      for (int c = 0; c < n; ++c) a.at(r, c) -= f * a.at(k, c);
      for (int c = 0; c < n; ++c) a.at(c, r) -= f * a.at(c, k);
    }
    done[k] = true;
  }
  return {neg, pos, n - neg - pos};
}

Metric Metric::identity(Dim m) {
  Bilinear xi(m);
  for (int i = 0; i < m.m; ++i) xi.at(i, i) = Rational(1);
  return Metric(xi, xi, {0, m.m});
}

Metric Metric::diagonal_signature(Dim m, int p, int q) {
  if (p < 0 || q < 0 || p + q != m.m)
    throw std::invalid_argument("Metric: signature must satisfy p + q = m");
  Bilinear xi(m);
  for (int i = 0; i < m.m; ++i) xi.at(i, i) = Rational(i < p ? -1 : 1);
  return Metric(xi, xi, {p, q});
}

Metric Metric::from_bilinear(const Bilinear& xi) {
  if (!xi.is_symmetric()) throw std::invalid_argument("Metric: form is not symmetric");
  auto [neg, pos, zero] = symmetric_signature(xi);
  if (zero != 0) throw std::invalid_argument("Metric: form is degenerate");
  Matrix inv = xi.as_matrix().inverse();
  return Metric(xi, Bilinear::from_matrix(inv), {neg, pos});
}

QuadTensor lower(const QuadTensor& t, const Metric& g) {
  if (t.variance() != Variance::Operator)
    throw std::invalid_argument("lower: input must have operator variance");
  if (t.dim() != g.dim()) throw std::invalid_argument("lower: dimension mismatch");
  const int m = t.dim();
  QuadTensor out(Dim(m), Variance::Covariant);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          const Rational& v = t.at(i, j, k, l);
          if (v.is_zero()) continue;
          for (int w = 0; w < m; ++w) {
            const Rational& x = g.xi().at(l, w);
            if (!x.is_zero()) out.at(i, j, k, w) += v * x;
          }
        }
  return out;
}

QuadTensor raise(const QuadTensor& t, const Metric& g) {
  if (t.variance() != Variance::Covariant)
    throw std::invalid_argument("raise: input must be covariant");
  if (t.dim() != g.dim()) throw std::invalid_argument("raise: dimension mismatch");
  const int m = t.dim();
  QuadTensor out(Dim(m), Variance::Operator);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int w = 0; w < m; ++w) {
          const Rational& v = t.at(i, j, k, w);
          if (v.is_zero()) continue;
          for (int l = 0; l < m; ++l) {
            const Rational& x = g.xi_inv().at(w, l);
            if (!x.is_zero()) out.at(i, j, k, l) += v * x;
          }
        }
  return out;
}

namespace {

// Applies a: new_slot -> sum_old coeff(old,new) * T[... old ...] to one slot.
QuadTensor transform_slot(const QuadTensor& t, const Matrix& coeff, int slot) {
  const int m = t.dim();
  QuadTensor out(Dim(m), t.variance());
  int idx[4];
  for (idx[0] = 0; idx[0] < m; ++idx[0])
    for (idx[1] = 0; idx[1] < m; ++idx[1])
      for (idx[2] = 0; idx[2] < m; ++idx[2])
        for (idx[3] = 0; idx[3] < m; ++idx[3]) {
          const Rational& v = t.at(idx[0], idx[1], idx[2], idx[3]);
          if (v.is_zero()) continue;
          int jdx[4] = {idx[0], idx[1], idx[2], idx[3]};
          const int old = idx[slot];
          for (int nw = 0; nw < m; ++nw) {
            const Rational& c = coeff.at(old, nw);
            if (c.is_zero()) continue;
            jdx[slot] = nw;
            out.at(jdx[0], jdx[1], jdx[2], jdx[3]) += v * c;
          }
        }
  return out;
}

}  // namespace

QuadTensor pullback(const Matrix& psi, const QuadTensor& t) {
  const int m = t.dim();
  if (psi.rows() != m || psi.cols() != m)
    throw std::invalid_argument("pullback: matrix shape mismatch");
  // (Psi*T)_{ijkl} = sum Psi_{ai} Psi_{bj} Psi_{ck} [Psi or Psi^{-1}] T_{abc(d)}
  QuadTensor out = t;
  for (int slot = 0; slot < 3; ++slot) out = transform_slot(out, psi, slot);
  if (t.variance() == Variance::Covariant) {
    out = transform_slot(out, psi, 3);
  } else {
    const Matrix inv = psi.inverse();  // throws on singular input
    // contravariant slot: (Psi*T)^l = sum_d (Psi^{-1})_{ld} T^d
    out = transform_slot(out, inv.transpose(), 3);
  }
  return out;
}

Bilinear pullback_bilinear(const Matrix& psi, const Bilinear& b) {
  const int m = b.dim();
  if (psi.rows() != m || psi.cols() != m)
    throw std::invalid_argument("pullback_bilinear: matrix shape mismatch");
  psi.inverse();  // reject singular maps
  Bilinear out((Dim(m)));
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c) {
      const Rational& v = b.at(a, c);
      if (v.is_zero()) continue;
      for (int i = 0; i < m; ++i) {
        if (psi.at(a, i).is_zero()) continue;
        const Rational f = v * psi.at(a, i);
        for (int j = 0; j < m; ++j)
          if (!psi.at(c, j).is_zero()) out.at(i, j) += f * psi.at(c, j);
      }
    }
  return out;
}

Rational tensor_inner(const QuadTensor& x, const QuadTensor& y, const Metric& g) {
  if (x.variance() != Variance::Covariant || y.variance() != Variance::Covariant)
    throw std::invalid_argument("tensor_inner: both tensors must be covariant");
  if (x.dim() != y.dim() || x.dim() != g.dim())
    throw std::invalid_argument("tensor_inner: dimension mismatch");
  QuadTensor lifted = x;
  const Matrix inv = g.xi_inv().as_matrix();
  for (int slot = 0; slot < 4; ++slot) lifted = transform_slot(lifted, inv, slot);
  Rational s;
  const auto& a = lifted.flatten();
  const auto& b = y.flatten();
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

}  // namespace curv
