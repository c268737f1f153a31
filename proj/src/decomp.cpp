#include "curv/decomp.hpp"

#include <stdexcept>

namespace curv {

namespace {

Bilinear trace_cov(const QuadTensor& t, const Metric& g, int slot_a, int slot_b) {
  const int m = t.dim();
  Bilinear out((Dim(m)));
  int idx[4];
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      // the two free slots take (x, y) in order
      Rational s;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          const Rational& xi = g.xi_inv().at(i, j);
          if (xi.is_zero()) continue;
          int free_pos = 0;
          for (int p = 0; p < 4; ++p) {
            if (p == slot_a) idx[p] = i;
            else if (p == slot_b) idx[p] = j;
            else idx[p] = (free_pos++ == 0) ? x : y;
          }
          s += xi * t.at(idx[0], idx[1], idx[2], idx[3]);
        }
      out.at(x, y) = s;
    }
  return out;
}

void require_symmetric(const Bilinear& b, const char* who) {
  if (!b.is_symmetric()) throw std::invalid_argument(std::string(who) + ": form is not symmetric");
}

void require_antisymmetric(const Bilinear& b, const char* who) {
  if (!b.is_antisymmetric())
    throw std::invalid_argument(std::string(who) + ": form is not antisymmetric");
}

void require_trace_free(const Bilinear& b, const Metric& g, const char* who) {
  if (!tau(b, g).is_zero())
    throw std::invalid_argument(std::string(who) + ": form is not trace-free");
}

void require_in_r_operator(const QuadTensor& t, const char* who) {
  if (t.variance() != Variance::Operator)
    throw std::invalid_argument(std::string(who) + ": input must have operator variance");
  if (!satisfies(t, TensorIdentity::I1a) || !satisfies(t, TensorIdentity::I1b))
    throw std::invalid_argument(std::string(who) + ": input is not a curvature operator");
}

void require_in_r_covariant(const QuadTensor& t, const char* who) {
  if (t.variance() != Variance::Covariant)
    throw std::invalid_argument(std::string(who) + ": input must be covariant");
  if (!satisfies(t, TensorIdentity::I1c) || !satisfies(t, TensorIdentity::I1d))
    throw std::invalid_argument(std::string(who) + ": input is not a curvature tensor");
}

void require_in_a(const QuadTensor& t, const char* who) {
  require_in_r_covariant(t, who);
  if (!satisfies(t, TensorIdentity::I1f))
    throw std::invalid_argument(std::string(who) + ": input is not an algebraic curvature tensor");
}

// antisymmetric in 1,2 and symmetric in 3,4
void require_l2s2(const QuadTensor& t, const char* who) {
  if (t.variance() != Variance::Covariant)
    throw std::invalid_argument(std::string(who) + ": input must be covariant");
  const int m = t.dim();
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          if (t.at(i, j, k, l) != -t.at(j, i, k, l))
            throw std::invalid_argument(std::string(who) +
                                        ": input is not antisymmetric in slots 1,2");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = k; l < m; ++l)
          if (t.at(i, j, k, l) != t.at(i, j, l, k))
            throw std::invalid_argument(std::string(who) +
                                        ": input is not symmetric in slots 3,4");
}

void require_l2s20(const QuadTensor& t, const Metric& g, const char* who) {
  require_l2s2(t, who);
  const int m = t.dim();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      Rational s;
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          const Rational& xi = g.xi_inv().at(k, l);
          if (!xi.is_zero()) s += xi * t.at(x, y, k, l);
        }
      if (!s.is_zero())
        throw std::invalid_argument(std::string(who) + ": input is not trace-free in slots 3,4");
    }
}

}  // namespace

Bilinear rho(const QuadTensor& t, RhoSlots which, const std::optional<Metric>& g) {
  const int m = t.dim();
  if (g && g->dim() != m) throw std::invalid_argument("rho: metric dimension mismatch");
  if (t.variance() == Variance::Operator) {
    Bilinear out((Dim(m)));
    switch (which) {
      case RhoSlots::Rho14:
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y) {
            Rational s;
            for (int i = 0; i < m; ++i) s += t.at(i, x, y, i);
            out.at(x, y) = s;
          }
        return out;
      case RhoSlots::Rho24:
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y) {
            Rational s;
            for (int i = 0; i < m; ++i) s += t.at(x, i, y, i);
            out.at(x, y) = s;
          }
        return out;
      case RhoSlots::Rho34:
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y) {
            Rational s;
            for (int i = 0; i < m; ++i) s += t.at(x, y, i, i);
            out.at(x, y) = s;
          }
        return out;
      case RhoSlots::Rho13:
      case RhoSlots::Rho23:
        if (!g)
          throw std::invalid_argument(
              "rho: slots 13/23 on an operator need a metric to lower first");
        return rho(lower(t, *g), which, g);
    }
  }
  if (!g) throw std::invalid_argument("rho: covariant traces need a metric");
  switch (which) {
    case RhoSlots::Rho13: return trace_cov(t, *g, 0, 2);
    case RhoSlots::Rho14: return trace_cov(t, *g, 0, 3);
    case RhoSlots::Rho23: return trace_cov(t, *g, 1, 2);
    case RhoSlots::Rho24: return trace_cov(t, *g, 1, 3);
    case RhoSlots::Rho34: return trace_cov(t, *g, 2, 3);
  }
  throw std::logic_error("rho: unreachable");
}

Bilinear pi_antisym(const Bilinear& b) {
  const int m = b.dim();
  Bilinear out((Dim(m)));
  const Rational half(1, 2);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.at(i, j) = half * (b.at(i, j) - b.at(j, i));
  return out;
}

Bilinear pi_sym(const Bilinear& b) {
  const int m = b.dim();
  Bilinear out((Dim(m)));
  const Rational half(1, 2);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.at(i, j) = half * (b.at(i, j) + b.at(j, i));
  return out;
}

Rational tau(const Bilinear& b, const Metric& g) {
  if (b.dim() != g.dim()) throw std::invalid_argument("tau: dimension mismatch");
  Rational s;
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) {
      const Rational& xi = g.xi_inv().at(i, j);
      if (!xi.is_zero()) s += xi * b.at(i, j);
    }
  return s;
}

Bilinear pi_trace_free(const Bilinear& b, const Metric& g) {
  const Rational t = tau(b, g) / Rational(b.dim());
  Bilinear out = pi_sym(b);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) out.at(i, j) -= t * g.xi().at(i, j);
  return out;
}

QuadTensor sigma_gl_antisym(const Bilinear& omega) {
  require_antisymmetric(omega, "sigma_gl_antisym");
  const int m = omega.dim();
  QuadTensor out(Dim(m), Variance::Operator);
  const Rational c(-1, 1 + m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Rational two_w = Rational(2) * omega.at(i, j);
      for (int k = 0; k < m; ++k) {
        // 2 w(x,y) z contributes to l = k; the other terms to l = j and l = i
        out.at(i, j, k, k) += c * two_w;
        out.at(i, j, k, j) += c * omega.at(i, k);
        out.at(i, j, k, i) -= c * omega.at(j, k);
      }
    }
  return out;
}

QuadTensor sigma_gl_sym(const Bilinear& psi) {
  require_symmetric(psi, "sigma_gl_sym");
  const int m = psi.dim();
  QuadTensor out(Dim(m), Variance::Operator);
  const Rational c(1, 1 - m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        out.at(i, j, k, j) += c * psi.at(i, k);
        out.at(i, j, k, i) -= c * psi.at(j, k);
      }
  return out;
}

GLDecomposition decompose_gl(const QuadTensor& r) {
  require_in_r_operator(r, "decompose_gl");
  const Bilinear b = rho(r, RhoSlots::Rho14);
  Bilinear lambda = pi_antisym(b);
  Bilinear s = pi_sym(b);
  QuadTensor u = r;
  u -= sigma_gl_antisym(lambda);
  u -= sigma_gl_sym(s);
  return GLDecomposition{std::move(u), std::move(lambda), std::move(s)};
}

QuadTensor sigma1(const Bilinear& psi, const Metric& g) {
  require_symmetric(psi, "sigma1");
  const int m = psi.dim();
  QuadTensor out(Dim(m), Variance::Covariant);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        for (int w = 0; w < m; ++w)
          out.at(x, y, z, w) =
              psi.at(x, w) * g.xi().at(y, z) - psi.at(y, w) * g.xi().at(x, z);
  return out;
}

QuadTensor sigma2(const Bilinear& psi, const Metric& g) {
  require_symmetric(psi, "sigma2");
  const int m = psi.dim();
  QuadTensor out(Dim(m), Variance::Covariant);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        for (int w = 0; w < m; ++w)
          out.at(x, y, z, w) =
              g.xi().at(x, w) * psi.at(y, z) - g.xi().at(y, w) * psi.at(x, z);
  return out;
}

QuadTensor sigma3(const Bilinear& omega, const Metric& g) {
  require_antisymmetric(omega, "sigma3");
  const int m = omega.dim();
  QuadTensor out(Dim(m), Variance::Covariant);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        for (int w = 0; w < m; ++w)
          out.at(x, y, z, w) = Rational(2) * omega.at(x, y) * g.xi().at(z, w) +
                               omega.at(x, z) * g.xi().at(y, w) -
                               omega.at(y, z) * g.xi().at(x, w);
  return out;
}

QuadTensor sigma4(const Bilinear& omega, const Metric& g) {
  require_antisymmetric(omega, "sigma4");
  const int m = omega.dim();
  QuadTensor out(Dim(m), Variance::Covariant);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        for (int w = 0; w < m; ++w)
          out.at(x, y, z, w) =
              omega.at(x, w) * g.xi().at(y, z) - omega.at(y, w) * g.xi().at(x, z);
  return out;
}

QuadTensor wedge(const Bilinear& phi, const Bilinear& psi) {
  require_symmetric(phi, "wedge");
  require_symmetric(psi, "wedge");
  if (phi.dim() != psi.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  const int m = phi.dim();
  QuadTensor out(Dim(m), Variance::Covariant);
  const Rational half(1, 2);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        for (int w = 0; w < m; ++w)
          out.at(x, y, z, w) =
              half * (phi.at(x, w) * psi.at(y, z) - phi.at(x, z) * psi.at(y, w) +
                      phi.at(y, z) * psi.at(x, w) - phi.at(y, w) * psi.at(x, z));
  return out;
}

QuadTensor sigma_a_rho14(const Bilinear& psi, const Metric& g) {
  require_symmetric(psi, "sigma_a_rho14");
  const int m = psi.dim();
  const Bilinear xi = g.xi();
  QuadTensor out = wedge(psi, xi).scaled(Rational(2, m - 2));
  out -= wedge(xi, xi).scaled(tau(psi, g) / Rational(static_cast<long>(m - 1) * (m - 2)));
  return out;
}

ADecomposition decompose_a(const QuadTensor& a, const Metric& g) {
  require_in_a(a, "decompose_a");
  if (a.dim() != g.dim()) throw std::invalid_argument("decompose_a: dimension mismatch");
  const Bilinear ricci = rho(a, RhoSlots::Rho14, g);
  Rational scalar = tau(ricci, g);
  Bilinear s0 = pi_trace_free(ricci, g);
  QuadTensor weyl = a;
  weyl -= sigma_a_rho14(ricci, g);
  return ADecomposition{std::move(weyl), std::move(s0), std::move(scalar)};
}

QuadTensor id_pi_s(const QuadTensor& t) {
  if (t.variance() != Variance::Covariant)
    throw std::invalid_argument("id_pi_s: input must be covariant");
  const int m = t.dim();
  QuadTensor out(Dim(m), Variance::Covariant);
  const Rational half(1, 2);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          out.at(i, j, k, l) = half * (t.at(i, j, k, l) + t.at(i, j, l, k));
  return out;
}

QuadTensor alpha_map(const QuadTensor& s) {
  if (s.variance() != Variance::Covariant)
    throw std::invalid_argument("alpha_map: input must be covariant");
  const int m = s.dim();
  QuadTensor out(Dim(m), Variance::Covariant);
  const Rational half(1, 2);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          out.at(i, j, k, l) = half * (s.at(k, j, i, l) + s.at(i, k, j, l) -
                                       s.at(l, j, i, k) - s.at(i, l, j, k));
  return out;
}

QuadTensor sigma_id_pi_s(const QuadTensor& s) {
  require_l2s2(s, "sigma_id_pi_s");
  QuadTensor out = s;
  out += alpha_map(s);
  return out;
}

Bilinear pi_1s(const QuadTensor& theta, const Metric& g) {
  require_l2s20(theta, g, "pi_1s");
  return pi_sym(rho(theta, RhoSlots::Rho14, g));
}

Bilinear pi_1a(const QuadTensor& theta, const Metric& g) {
  require_l2s20(theta, g, "pi_1a");
  return pi_antisym(rho(theta, RhoSlots::Rho14, g));
}

QuadTensor pi_lambda(const QuadTensor& theta) {
  require_l2s2(theta, "pi_lambda");
  return alpha_map(theta);
}

QuadTensor sigma_pi_1s(const Bilinear& psi, const Metric& g) {
  require_symmetric(psi, "sigma_pi_1s");
  require_trace_free(psi, g, "sigma_pi_1s");
  const int m = psi.dim();
  const Bilinear& xi = g.xi();
  QuadTensor out(Dim(m), Variance::Covariant);
  const Rational c(1, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          out.at(i, j, k, l) = c * (xi.at(i, l) * psi.at(j, k) - xi.at(j, l) * psi.at(i, k) +
                                    xi.at(i, k) * psi.at(j, l) - xi.at(j, k) * psi.at(i, l));
  return out;
}

QuadTensor sigma_pi_1a(const Bilinear& omega, const Metric& g) {
  require_antisymmetric(omega, "sigma_pi_1a");
  const int m = omega.dim();
  const Bilinear& xi = g.xi();
  QuadTensor out(Dim(m), Variance::Covariant);
  const Rational c(m, static_cast<long>(m) * m - 4);
  const Rational four_over_m(4, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          out.at(i, j, k, l) =
              c * (xi.at(i, l) * omega.at(j, k) + xi.at(i, k) * omega.at(j, l) -
                   xi.at(j, l) * omega.at(i, k) - xi.at(j, k) * omega.at(i, l) +
                   four_over_m * omega.at(i, j) * xi.at(k, l));
  return out;
}

QuadTensor sigma_pi_lambda(const QuadTensor& t, const Metric& g) {
  if (t.variance() != Variance::Covariant)
    throw std::invalid_argument("sigma_pi_lambda: input must be covariant");
  const int m = t.dim();
  // input lives in the trace-free part of Lambda2(Lambda2)
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          if (t.at(i, j, k, l) != -t.at(j, i, k, l))
            throw std::invalid_argument("sigma_pi_lambda: input not antisymmetric in slots 1,2");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          if (t.at(i, j, k, l) != -t.at(k, l, i, j))
            throw std::invalid_argument(
                "sigma_pi_lambda: input not antisymmetric under pair swap");
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      Rational s;
      for (int i = 0; i < m; ++i)
        for (int l = 0; l < m; ++l) {
          const Rational& xi = g.xi_inv().at(i, l);
          if (!xi.is_zero()) s += xi * t.at(i, j, k, l);
        }
      if (!s.is_zero())
        throw std::invalid_argument("sigma_pi_lambda: input is not trace-free");
    }
  QuadTensor out(Dim(m), Variance::Covariant);
  const Rational half(1, 2);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          out.at(i, j, k, l) = half * (t.at(k, j, i, l) - t.at(k, i, j, l));
  return out;
}

QuadTensor WDecomposition::sum() const {
  QuadTensor s = components[0];
  for (int i = 1; i < 8; ++i) s += components[i];
  return s;
}

WDecomposition decompose_w(const QuadTensor& r, const Metric& g) {
  require_in_r_covariant(r, "decompose_w");
  if (r.dim() != g.dim()) throw std::invalid_argument("decompose_w: dimension mismatch");
  const int m = r.dim();

  // (i) peel off the antisymmetric-trace component; what is left is
  // Ricci-symmetric.
  const QuadTensor r_op = raise(r, g);
  const Bilinear omega = pi_antisym(rho(r_op, RhoSlots::Rho14));
  const QuadTensor w3 = lower(sigma_gl_antisym(omega), g);
  QuadTensor f = r;
  f -= w3;

  // (ii) split off the part symmetric in the last two slots; the
  // remainder is an algebraic curvature tensor.
  const QuadTensor s = id_pi_s(f);
  QuadTensor a = f;
  a -= sigma_id_pi_s(s);

  // (iii) scalar / trace-free Ricci / Weyl split of the algebraic part.
  const Bilinear ricci = rho(a, RhoSlots::Rho14, g);
  const Rational scalar = tau(ricci, g);
  Bilinear pure_trace((Dim(m)));
  const Rational t_over_m = scalar / Rational(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) pure_trace.at(i, j) = t_over_m * g.xi().at(i, j);
  const QuadTensor w1 = sigma_a_rho14(pure_trace, g);
  const QuadTensor w2 = sigma_a_rho14(pi_trace_free(ricci, g), g);
  QuadTensor w6 = a;
  w6 -= sigma_a_rho14(ricci, g);

  // (iv) split the symmetric part along the trace maps; the trace parts
  // must come off before the pair-antisymmetrization.
  const Bilinear psi_s = pi_1s(s, g);
  const QuadTensor w5 = sigma_id_pi_s(sigma_pi_1s(psi_s, g));
  const Bilinear omega_a = pi_1a(s, g);
  const QuadTensor w4 = sigma_id_pi_s(sigma_pi_1a(omega_a, g));
  QuadTensor s_rest = s;
  s_rest -= sigma_pi_1s(psi_s, g);
  s_rest -= sigma_pi_1a(omega_a, g);
  const QuadTensor t_l = pi_lambda(s_rest);
  const QuadTensor w8 = sigma_id_pi_s(sigma_pi_lambda(t_l, g));
  QuadTensor s7 = s_rest;
  s7 -= sigma_pi_lambda(t_l, g);
  const QuadTensor w7 = sigma_id_pi_s(s7);

  return WDecomposition{{w1, w2, w3, w4, w5, w6, w7, w8}, g};
}

}  // namespace curv
