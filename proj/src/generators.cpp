#include "curv/generators.hpp"

#include <stdexcept>
#include <utility>

#include "curv/decomp.hpp"
#include "curv/sampling.hpp"

namespace curv {

long long default_max_samples(long long target_dim) { return 5 * target_dim; }

QuadTensor jacobi_form(const QuadTensor& r) {
  if (r.variance() != Variance::Operator)
    throw std::invalid_argument("jacobi_form: input must have operator variance");
  if (!satisfies(r, TensorIdentity::I1a) || !satisfies(r, TensorIdentity::I1b))
    throw std::invalid_argument("jacobi_form: input is not a curvature operator");
  const int m = r.dim();
  QuadTensor t(Dim(m), Variance::Operator);
  const Rational half(1, 2);
  for (int z = 0; z < m; ++z)
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        for (int l = 0; l < m; ++l)
          t.at(z, x, y, l) = half * (r.at(z, x, y, l) + r.at(z, y, x, l));
  return t;
}

long long jacobi_injectivity_rank(Dim m) {
  const Subspace r_space = basis_of({SpaceTag::RCurv, std::nullopt}, m);
  RrefBuilder image(r_space.ambient_dim());
  for (int i = 0; i < r_space.dim(); ++i) {
    const QuadTensor r =
        QuadTensor::from_flat(m, Variance::Operator, r_space.basis().row(i));
    image.insert(jacobi_form(r).flatten());
  }
  return image.rank();
}

QuadTensor r_h(const Bilinear& h) {
  if (!h.is_symmetric()) throw std::invalid_argument("r_h: form is not symmetric");
  const int m = h.dim();
  QuadTensor out(Dim(m), Variance::Operator);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z) {
        out.at(x, y, z, x) += h.at(y, z);
        out.at(x, y, z, y) -= h.at(x, z);
      }
  return out;
}

QuadTensor r_c(const CubicForm& c) {
  const int m = c.dim();
  QuadTensor out(Dim(m), Variance::Operator);
  // R(e_i,e_j)e_k = sum_{l,n} {C_ik^l C_jl^n - C_jk^l C_il^n} e_n
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          const Rational& cik = c.at(i, k, l);
          const Rational& cjk = c.at(j, k, l);
          if (cik.is_zero() && cjk.is_zero()) continue;
          for (int n = 0; n < m; ++n) {
            if (!cik.is_zero()) out.at(i, j, k, n) += cik * c.at(j, l, n);
            if (!cjk.is_zero()) out.at(i, j, k, n) -= cjk * c.at(i, l, n);
          }
        }
  return out;
}

namespace {

long long budget(long long max_samples, long long target_dim) {
  return max_samples < 0 ? default_max_samples(target_dim) : max_samples;
}

int symmetric_rank(const Bilinear& b) { return rank(b.as_matrix()); }

// Accumulates verified samples; every sample must already lie in the
// target space, otherwise the generator itself is broken.
struct SpanAccumulator {
  RrefBuilder member_check;
  RrefBuilder span;
  SpanReport report;

  SpanAccumulator(const Subspace& target, std::string name, std::uint64_t seed)
      : member_check(target.ambient_dim()), span(target.ambient_dim()) {
    for (int i = 0; i < target.dim(); ++i) member_check.insert(target.basis().row(i));
    report.target = std::move(name);
    report.target_dim = target.dim();
    report.seed = seed;
  }

  void feed(const std::vector<Rational>& v) {
    if (!member_check.in_span(v))
      throw std::logic_error("span accumulation: generated element lies outside " +
                             report.target);
    span.insert(v);
    ++report.samples_used;
  }

  bool done() const { return span.rank() == report.target_dim; }

  SpanReport finish() {
    report.achieved_dim = span.rank();
    report.success = report.achieved_dim == report.target_dim;
    return report;
  }
};

}  // namespace

SpanReport span_wedge_rank2(Dim m, std::uint64_t seed, long long max_samples) {
  const Subspace target = basis_of({SpaceTag::AAlg, std::nullopt}, m);
  SpanAccumulator acc(target, "a", seed);
  Rng rng(seed);
  const long long cap = budget(max_samples, target.dim());
  while (acc.report.samples_used < cap && !acc.done()) {
    Bilinear phi(m);
    if (acc.report.samples_used % 2 == 0) {
      // v (x) w + w (x) v
      const Matrix v = random_matrix(rng, 1, m.m);
      const Matrix w = random_matrix(rng, 1, m.m);
      for (int i = 0; i < m.m; ++i)
        for (int j = 0; j < m.m; ++j)
          phi.at(i, j) = v.at(0, i) * w.at(0, j) + w.at(0, i) * v.at(0, j);
    } else {
      // +-(v (x) v + w (x) w) with random overall sign
      const Matrix v = random_matrix(rng, 1, m.m);
      const Matrix w = random_matrix(rng, 1, m.m);
      const Rational sign(rng.uniform_int(0, 1) == 0 ? 1 : -1);
      for (int i = 0; i < m.m; ++i)
        for (int j = 0; j < m.m; ++j)
          phi.at(i, j) = sign * (v.at(0, i) * v.at(0, j) + w.at(0, i) * w.at(0, j));
    }
    if (symmetric_rank(phi) != 2) continue;  // degenerate draw
    acc.feed(wedge(phi, phi).flatten());
  }
  return acc.finish();
}

SpanReport span_wedge_signature(Dim m, int p, int q, std::uint64_t seed,
                                long long max_samples) {
  if (p < 0 || q < 0 || p + q < 2 || p + q > m.m)
    throw std::invalid_argument("span_wedge_signature: need 2 <= p+q <= m");
  const Subspace target = basis_of({SpaceTag::AAlg, std::nullopt}, m);
  SpanAccumulator acc(target, "a", seed);
  Rng rng(seed);
  const long long cap = budget(max_samples, target.dim());
  while (acc.report.samples_used < cap && !acc.done()) {
    const Bilinear phi = random_signature_form(rng, m, p, q);
    acc.feed(wedge(phi, phi).flatten());
  }
  return acc.finish();
}

namespace {

// Ricci-symmetric operators: antisymmetry, first Bianchi, rho_34 = 0.
// Coordinate-wise this is the affine curvature operator space.
Subspace f_operator_space(Dim m) {
  return basis_of({SpaceTag::FAff, Metric::identity(m)}, m);
}

}  // namespace

SpanReport span_metric_curvatures(Dim m, int p, int q, std::uint64_t seed,
                                  long long max_samples) {
  if (p + q != m.m)
    throw std::invalid_argument("span_metric_curvatures: signature must satisfy p + q = m");
  const Subspace target = f_operator_space(m);
  const Subspace a_space = basis_of({SpaceTag::AAlg, std::nullopt}, m);
  SpanAccumulator acc(target, "f", seed);
  Rng rng(seed);
  const long long cap = budget(max_samples, target.dim());
  while (acc.report.samples_used < cap && !acc.done()) {
    const Metric g = random_metric(rng, m, p, q);
    // the curvature space of g, raised to operators
    RrefBuilder contribution(target.ambient_dim());
    for (int i = 0; i < a_space.dim(); ++i) {
      const QuadTensor a =
          QuadTensor::from_flat(m, Variance::Covariant, a_space.basis().row(i));
      contribution.insert(raise(a, g).flatten());
    }
    long long before = acc.report.samples_used;
    for (int r = 0; r < contribution.rank(); ++r)
      acc.feed(to_dense(contribution.rows()[r], target.ambient_dim()));
    acc.report.samples_used = before + 1;  // one metric = one sample
  }
  return acc.finish();
}

SpanReport span_rc(Dim m, std::uint64_t seed, long long max_samples) {
  const Subspace target = f_operator_space(m);
  SpanAccumulator acc(target, "f", seed);
  Rng rng(seed);
  const long long cap = budget(max_samples, target.dim());
  while (acc.report.samples_used < cap && !acc.done()) {
    const CubicForm c = random_cubic(rng, m);
    const QuadTensor r = r_c(c);
    if (!rho(r, RhoSlots::Rho34).is_zero())
      throw std::logic_error("span_rc: rho_34 of a cubic curvature operator must vanish");
    acc.feed(r.flatten());
  }
  return acc.finish();
}

SpanReport span_rh(Dim m, std::uint64_t seed, long long max_samples) {
  // target: the lift of symmetric forms into the curvature space
  const Subspace s2 = basis_of({SpaceTag::S2, std::nullopt}, m);
  RrefBuilder lift_builder(static_cast<int>(m.m) * m.m * m.m * m.m);
  for (int i = 0; i < s2.dim(); ++i) {
    const Bilinear psi = Bilinear::from_flat(m, s2.basis().row(i));
    lift_builder.insert(sigma_gl_sym(psi).flatten());
  }
  const Subspace target = Subspace::from_builder(lift_builder);
  SpanAccumulator acc(target, "sigma_s(S2)", seed);
  Rng rng(seed);
  const long long cap = budget(max_samples, target.dim());
  while (acc.report.samples_used < cap && !acc.done()) {
    const Bilinear h = random_symmetric(rng, m);
    const QuadTensor r = r_h(h);
    if (r.is_zero()) {
      ++acc.report.samples_used;  // zero draw spans nothing
      continue;
    }
    acc.feed(r.flatten());
  }
  return acc.finish();
}

SpanReport orbit_span_certificate(const QuadTensor& a, std::uint64_t seed,
                                  long long max_samples) {
  if (a.variance() != Variance::Covariant)
    throw std::invalid_argument("orbit_span_certificate: input must be covariant");
  if (a.is_zero())
    throw std::invalid_argument("orbit_span_certificate: the orbit of zero is zero");
  const Dim m(a.dim());
  if (!satisfies(a, TensorIdentity::I1c) || !satisfies(a, TensorIdentity::I1d) ||
      !satisfies(a, TensorIdentity::I1f))
    throw std::invalid_argument(
        "orbit_span_certificate: input is not an algebraic curvature tensor");
  const Subspace target = basis_of({SpaceTag::AAlg, std::nullopt}, m);
  SpanAccumulator acc(target, "a", seed);
  Rng rng(seed);
  const long long cap = budget(max_samples, target.dim());
  while (acc.report.samples_used < cap && !acc.done()) {
    // mix general invertible pull-backs with the diagonal family
    const Matrix psi = (acc.report.samples_used % 4 == 3)
                           ? random_distinct_diagonal(rng, m.m)
                           : random_invertible(rng, m.m);
    acc.feed(pullback(psi, a).flatten());
  }
  return acc.finish();
}

}  // namespace curv
