#pragma once

#include <vector>

#include "curv/tensor.hpp"

namespace curv {

/// Torsion-free connection on coordinate space whose Christoffel symbols
/// are homogeneous of degree 1: Gamma_ab^d = sum_c coeff(a,b,d,c) x_c.
/// Gamma(0) = 0 by construction.
class PolyConnection {
 public:
  explicit PolyConnection(Dim m)
      : m_(m.m), c_(static_cast<size_t>(m.m) * m.m * m.m * m.m) {}

  int dim() const { return m_; }
  Rational& coeff(int a, int b, int d, int c) { return c_[index(a, b, d, c)]; }
  const Rational& coeff(int a, int b, int d, int c) const { return c_[index(a, b, d, c)]; }

  bool is_torsion_free() const;

  friend bool operator==(const PolyConnection&, const PolyConnection&) = default;

 private:
  size_t index(int a, int b, int d, int c) const {
    return ((static_cast<size_t>(a) * m_ + b) * m_ + d) * m_ + c;
  }
  int m_;
  std::vector<Rational> c_;
};

/// Gamma_ab^d = -(1/3) sum_c x_c {R_acb^d + R_bca^d}; realizes the given
/// curvature operator at the origin.
PolyConnection connection_from(const QuadTensor& r);

/// Curvature operator of the connection at the origin. Since Gamma is
/// linear and Gamma(0) = 0, only first derivatives contribute:
/// R_ijk^l = d_i Gamma_jk^l - d_j Gamma_ik^l.
QuadTensor curvature_at_origin(const PolyConnection& gamma);

/// Metric germ g_ab(x) = g0_ab + sum_{cd} Q_{ab,cd} x_c x_d with Q
/// symmetric in (c,d) and g symmetric in (a,b). Constant plus quadratic
/// only, so the Levi-Civita Christoffel symbols vanish at 0.
class PolyMetric {
 public:
  PolyMetric(Bilinear g0, std::vector<Rational> quad);

  int dim() const { return g0_.dim(); }
  const Bilinear& constant_part() const { return g0_; }
  Rational& quad_coeff(int a, int b, int c, int d) { return q_[index(a, b, c, d)]; }
  const Rational& quad_coeff(int a, int b, int c, int d) const { return q_[index(a, b, c, d)]; }

  /// Exact evaluation of g at a point.
  Bilinear value_at(const std::vector<Rational>& x) const;

  friend bool operator==(const PolyMetric&, const PolyMetric&) = default;

 private:
  size_t index(int a, int b, int c, int d) const {
    return ((static_cast<size_t>(a) * dim() + b) * dim() + c) * dim() + d;
  }
  Bilinear g0_;
  std::vector<Rational> q_;
};

/// g_ab(x) = <e_a,e_b> - (1/3) sum_{cd} A_{acdb} x_c x_d for an algebraic
/// curvature tensor A; realizes A as the Levi-Civita curvature at 0.
PolyMetric metric_from(const QuadTensor& a, const Metric& g0);

/// Levi-Civita curvature tensor of the metric germ at the origin.
QuadTensor lc_curvature_at_origin(const PolyMetric& g);

}  // namespace curv
