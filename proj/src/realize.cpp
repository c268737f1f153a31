#include "curv/realize.hpp"

#include <stdexcept>

#include "curv/spaces.hpp"

namespace curv {

bool PolyConnection::is_torsion_free() const {
  for (int a = 0; a < m_; ++a)
    for (int b = a + 1; b < m_; ++b)
      for (int d = 0; d < m_; ++d)
        for (int c = 0; c < m_; ++c)
          if (coeff(a, b, d, c) != coeff(b, a, d, c)) return false;
  return true;
}

PolyConnection connection_from(const QuadTensor& r) {
  if (r.variance() != Variance::Operator)
    throw std::invalid_argument("connection_from: input must have operator variance");
  if (!satisfies(r, TensorIdentity::I1a) || !satisfies(r, TensorIdentity::I1b))
    throw std::invalid_argument("connection_from: input is not a curvature operator");
  const int m = r.dim();
  PolyConnection gamma((Dim(m)));
  const Rational third(-1, 3);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int d = 0; d < m; ++d)
        for (int c = 0; c < m; ++c)
          gamma.coeff(a, b, d, c) = third * (r.at(a, c, b, d) + r.at(b, c, a, d));
  return gamma;
}

QuadTensor curvature_at_origin(const PolyConnection& gamma) {
  const int m = gamma.dim();
  QuadTensor r(Dim(m), Variance::Operator);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          r.at(i, j, k, l) = gamma.coeff(j, k, l, i) - gamma.coeff(i, k, l, j);
  return r;
}

PolyMetric::PolyMetric(Bilinear g0, std::vector<Rational> quad)
    : g0_(std::move(g0)), q_(std::move(quad)) {
  const int m = g0_.dim();
  if (q_.size() != static_cast<size_t>(m) * m * m * m)
    throw std::invalid_argument("PolyMetric: wrong coefficient count");
  if (!g0_.is_symmetric()) throw std::invalid_argument("PolyMetric: constant part not symmetric");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          if (quad_coeff(a, b, c, d) != quad_coeff(a, b, d, c))
            throw std::invalid_argument("PolyMetric: coefficients not symmetric in (c,d)");
          if (quad_coeff(a, b, c, d) != quad_coeff(b, a, c, d))
            throw std::invalid_argument("PolyMetric: polynomial g_ab != g_ba");
        }
}

Bilinear PolyMetric::value_at(const std::vector<Rational>& x) const {
  const int m = dim();
  if (static_cast<int>(x.size()) != m)
    throw std::invalid_argument("PolyMetric: point has wrong dimension");
  Bilinear g = g0_;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Rational s;
      for (int c = 0; c < m; ++c) {
        if (x[c].is_zero()) continue;
        for (int d = 0; d < m; ++d) {
          if (x[d].is_zero()) continue;
          s += quad_coeff(a, b, c, d) * x[c] * x[d];
        }
      }
      g.at(a, b) += s;
    }
  return g;
}

PolyMetric metric_from(const QuadTensor& a, const Metric& g0) {
  if (a.variance() != Variance::Covariant)
    throw std::invalid_argument("metric_from: input must be covariant");
  if (a.dim() != g0.dim()) throw std::invalid_argument("metric_from: dimension mismatch");
  if (!satisfies(a, TensorIdentity::I1c) || !satisfies(a, TensorIdentity::I1d) ||
      !satisfies(a, TensorIdentity::I1f))
    throw std::invalid_argument("metric_from: input is not an algebraic curvature tensor");
  const int m = a.dim();
  std::vector<Rational> q(static_cast<size_t>(m) * m * m * m);
  const Rational sixth(-1, 6);
  size_t pos = 0;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          // symmetrized in (c,d): the polynomial sums over ordered pairs
          q[pos++] = sixth * (a.at(x, c, d, y) + a.at(x, d, c, y));
  return PolyMetric(g0.xi(), std::move(q));
}

QuadTensor lc_curvature_at_origin(const PolyMetric& g) {
  const int m = g.dim();
  QuadTensor r(Dim(m), Variance::Covariant);
  // Gamma_jkl = (1/2)(d_j g_kl + d_k g_jl - d_l g_jk) is linear in x, so
  // R_ijkl(0) = d_i Gamma_jkl - d_j Gamma_ikl with second derivatives of g
  // read off the quadratic coefficients: d_e d_c g_ab = 2 Q_{ab,ce}.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          r.at(i, j, k, l) = g.quad_coeff(j, l, i, k) - g.quad_coeff(j, k, i, l) -
                             g.quad_coeff(i, l, j, k) + g.quad_coeff(i, k, j, l);
  return r;
}

}  // namespace curv
