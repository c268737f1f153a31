#include <doctest.h>

#include "curv/decomp.hpp"
#include "curv/sampling.hpp"
#include "curv/spaces.hpp"

using namespace curv;

namespace {

QuadTensor constant_curvature_op(const Metric& g) {
  const int m = g.dim();
  QuadTensor t(Dim(m), Variance::Operator);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z) {
        t.at(x, y, z, x) += g.xi().at(y, z);
        t.at(x, y, z, y) -= g.xi().at(x, z);
      }
  return t;
}

Bilinear e_wedge(Dim m, int i, int j) {
  Bilinear b(m);
  b.at(i, j) = Rational(1);
  b.at(j, i) = Rational(-1);
  return b;
}

Bilinear e_sym(Dim m, int i, int j) {
  Bilinear b(m);
  b.at(i, j) = Rational(1);
  b.at(j, i) = Rational(1);
  return b;
}

Subspace r_basis(int m) { return basis_of({SpaceTag::RCurv, std::nullopt}, Dim(m)); }
Subspace a_basis(int m) { return basis_of({SpaceTag::AAlg, std::nullopt}, Dim(m)); }

QuadTensor random_r_element(Rng& rng, const Subspace& basis, Variance v, int m) {
  QuadTensor t(Dim(m), v);
  for (int b = 0; b < basis.dim(); ++b) {
    const Rational c(rng.uniform_int(-3, 3));
    if (c.is_zero()) continue;
    t += QuadTensor::from_flat(Dim(m), v, basis.basis().row(b)).scaled(c);
  }
  return t;
}

// the trace-free example tensor with A(e1,e3,e4,e1) = 1, A(e2,e3,e4,e2) = -1
QuadTensor weyl_kernel_example(Dim m) {
  QuadTensor a(m, Variance::Covariant);
  const auto put = [&a](int i, int j, int k, int l, long v) {
    a.at(i, j, k, l) = Rational(v);
    a.at(j, i, k, l) = Rational(-v);
    a.at(i, j, l, k) = Rational(-v);
    a.at(j, i, l, k) = Rational(v);
    a.at(k, l, i, j) = Rational(v);
    a.at(l, k, i, j) = Rational(-v);
    a.at(k, l, j, i) = Rational(-v);
    a.at(l, k, j, i) = Rational(v);
  };
  put(0, 2, 3, 0, 1);
  put(1, 2, 3, 1, -1);
  return a;
}

}  // namespace

TEST_CASE("rho of the constant-curvature operator") {
  const Metric id = Metric::identity(Dim(4));
  const Bilinear r14 = rho(constant_curvature_op(id), RhoSlots::Rho14);
  CHECK(r14 == id.xi().scaled(Rational(3)));  // (m-1) <,>
}

TEST_CASE("rho requires a metric exactly where the contraction needs one") {
  const QuadTensor zo(Dim(4), Variance::Operator);
  const QuadTensor zc(Dim(4), Variance::Covariant);
  const Metric id = Metric::identity(Dim(4));
  CHECK_NOTHROW(rho(zo, RhoSlots::Rho14));
  CHECK_THROWS_AS(rho(zo, RhoSlots::Rho13), std::invalid_argument);
  CHECK_NOTHROW(rho(zo, RhoSlots::Rho13, id));
  CHECK_THROWS_AS(rho(zc, RhoSlots::Rho14), std::invalid_argument);
  CHECK_NOTHROW(rho(zc, RhoSlots::Rho14, id));
}

TEST_CASE("operator and covariant rho_14 agree through lowering") {
  Rng rng(21);
  for (auto [p, q] : {std::pair{0, 4}, std::pair{1, 3}}) {
    const Metric g = Metric::diagonal_signature(Dim(4), p, q);
    const QuadTensor r = random_r_element(rng, r_basis(4), Variance::Operator, 4);
    CHECK(rho(r, RhoSlots::Rho14) == rho(lower(r, g), RhoSlots::Rho14, g));
  }
}

TEST_CASE("pi projections and tau") {
  const Metric id = Metric::identity(Dim(4));
  Rng rng(22);
  const Bilinear s = random_symmetric(rng, Dim(4));
  CHECK(pi_antisym(s).is_zero());
  CHECK(tau(id.xi(), id) == Rational(4));  // tau(<,>) = m

  Bilinear b(Dim(4));
  b.at(0, 0) = Rational(2);
  const Bilinear p0 = pi_trace_free(b, id);
  CHECK(p0.at(0, 0) == Rational(3, 2));
  CHECK(p0.at(1, 1) == Rational(-1, 2));
  CHECK(p0.at(2, 2) == Rational(-1, 2));
  CHECK(p0.at(3, 3) == Rational(-1, 2));
  CHECK(tau(p0, id).is_zero());

  const Bilinear any = random_symmetric(rng, Dim(4)) + e_wedge(Dim(4), 0, 2);
  CHECK(pi_antisym(any) + pi_sym(any) == any);
}

TEST_CASE("GL splitting identities over the full bilinear spaces") {
  const Dim m(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const Bilinear omega = e_wedge(m, i, j);
      CHECK(rho(sigma_gl_antisym(omega), RhoSlots::Rho14) == omega);
      const QuadTensor t = sigma_gl_antisym(omega);
      CHECK(satisfies(t, TensorIdentity::I1a));
      CHECK(satisfies(t, TensorIdentity::I1b));
    }
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      const Bilinear psi = e_sym(m, i, j);
      CHECK(rho(sigma_gl_sym(psi), RhoSlots::Rho14) == psi);
      const QuadTensor t = sigma_gl_sym(psi);
      CHECK(satisfies(t, TensorIdentity::I1a));
      CHECK(satisfies(t, TensorIdentity::I1b));
    }
  CHECK(sigma_gl_antisym(Bilinear(m)).is_zero());
  CHECK_THROWS_AS(sigma_gl_antisym(e_sym(m, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(sigma_gl_sym(e_wedge(m, 0, 1)), std::invalid_argument);
}

TEST_CASE("decompose_gl examples") {
  const Dim m(4);
  const Metric id = Metric::identity(m);

  // splitting round-trip
  const Bilinear psi = e_sym(m, 0, 0);
  const GLDecomposition d1 = decompose_gl(sigma_gl_sym(psi));
  CHECK(d1.u_part.is_zero());
  CHECK(d1.lambda_part.is_zero());
  CHECK(d1.s_part == psi);

  // constant-curvature operator: lambda = 0, s = (m-1) <,>
  const QuadTensor a = constant_curvature_op(id);
  const GLDecomposition d2 = decompose_gl(a);
  CHECK(d2.lambda_part.is_zero());
  CHECK(d2.s_part == id.xi().scaled(Rational(3)));
  CHECK(rho(d2.u_part, RhoSlots::Rho14).is_zero());
  QuadTensor recon = d2.u_part;
  recon += sigma_gl_antisym(d2.lambda_part);
  recon += sigma_gl_sym(d2.s_part);
  CHECK(recon == a);

  CHECK_THROWS_AS(decompose_gl(QuadTensor(m, Variance::Covariant)), std::invalid_argument);
}

TEST_CASE("decompose_gl characterizes the Ricci-symmetric subspace") {
  Rng rng(23);
  const Subspace f =
      basis_of({SpaceTag::FAff, Metric::identity(Dim(4))}, Dim(4));
  const QuadTensor r = random_r_element(rng, f, Variance::Operator, 4);
  CHECK(decompose_gl(r).lambda_part.is_zero());
  const QuadTensor outside = sigma_gl_antisym(e_wedge(Dim(4), 0, 1));
  CHECK_FALSE(decompose_gl(outside).lambda_part.is_zero());
}

TEST_CASE("the two trace matrices of the sigma lifts") {
  for (int m : {4, 5, 6}) {
    const Metric id = Metric::identity(Dim(m));
    Rng rng(24);
    const Bilinear psi = pi_trace_free(random_symmetric(rng, Dim(m)), id);
    const Bilinear omega = random_antisymmetric(rng, Dim(m));
    CHECK(rho(sigma1(psi, id), RhoSlots::Rho14, id) == psi.scaled(Rational(-1)));
    CHECK(rho(sigma1(psi, id), RhoSlots::Rho23, id) == psi.scaled(Rational(m - 1)));
    CHECK(rho(sigma2(psi, id), RhoSlots::Rho14, id) == psi.scaled(Rational(m - 1)));
    CHECK(rho(sigma2(psi, id), RhoSlots::Rho23, id) == psi.scaled(Rational(-1)));
    CHECK(rho(sigma3(omega, id), RhoSlots::Rho13, id) == omega.scaled(Rational(-3)));
    CHECK(rho(sigma3(omega, id), RhoSlots::Rho34, id) == omega.scaled(Rational(2 * (m + 1))));
    CHECK(rho(sigma4(omega, id), RhoSlots::Rho13, id) == omega.scaled(Rational(1 - m)));
    CHECK(rho(sigma4(omega, id), RhoSlots::Rho34, id) == omega.scaled(Rational(2)));
    // both coefficient matrices are invertible for m >= 4
    CHECK(Rational(1 - (m - 1) * (m - 1)) != Rational(0));
    CHECK(Rational(-6 - 2 * (m + 1) * (1 - m)) != Rational(0));
    // outputs land in the curvature space
    for (const QuadTensor& t : {sigma1(psi, id), sigma2(psi, id), sigma3(omega, id),
                                sigma4(omega, id)}) {
      CHECK(satisfies(t, TensorIdentity::I1c));
      CHECK(satisfies(t, TensorIdentity::I1d));
    }
  }
}

TEST_CASE("sigma1 tau normalization") {
  // tau(rho_14(sigma_1(<,>))) / (m (m-1)) = 1
  const Dim m(4);
  const Metric id = Metric::identity(m);
  const QuadTensor t = sigma1(id.xi(), id);
  CHECK(tau(rho(t, RhoSlots::Rho14, id), id) / Rational(4 * 3) == Rational(1));
}

TEST_CASE("wedge product examples") {
  const Dim m(4);
  const Bilinear alpha1 = e_sym(m, 0, 0) + e_sym(m, 1, 1);
  const Bilinear alpha2 = e_sym(m, 0, 1);
  // note e_sym(i,i) has entry 2 at (i,i); build exact forms instead
  Bilinear a1(m);
  a1.at(0, 0) = Rational(1);
  a1.at(1, 1) = Rational(1);
  Bilinear a2(m);
  a2.at(0, 1) = Rational(1);
  a2.at(1, 0) = Rational(1);

  const QuadTensor w1 = wedge(a1, a1);
  const QuadTensor w2 = wedge(a2, a2);
  CHECK(w1.at(0, 1, 1, 0) == Rational(1));
  CHECK(w2.at(0, 1, 1, 0) == Rational(-1));
  CHECK(w1 == w2.scaled(Rational(-1)));

  CHECK(wedge(a1, Bilinear(m)).is_zero());
  CHECK_THROWS_AS(wedge(a1, e_wedge(m, 0, 1)), std::invalid_argument);

  // bilinear and symmetric in its arguments
  Rng rng(25);
  const Bilinear x = random_symmetric(rng, m);
  const Bilinear y = random_symmetric(rng, m);
  const Bilinear z = random_symmetric(rng, m);
  CHECK(wedge(x, y) == wedge(y, x));
  CHECK(wedge(x + z, y) == wedge(x, y) + wedge(z, y));
  for (const TensorIdentity i : {TensorIdentity::I1c, TensorIdentity::I1d, TensorIdentity::I1e,
                                 TensorIdentity::I1f})
    CHECK(satisfies(wedge(x, y), i));
}

TEST_CASE("decompose_a examples") {
  const Dim m(4);
  const Metric id = Metric::identity(m);

  const QuadTensor cc = wedge(id.xi(), id.xi());
  const ADecomposition d = decompose_a(cc, id);
  CHECK(d.weyl.is_zero());
  CHECK(d.s0_part.is_zero());
  CHECK(d.scalar_part == Rational(12));  // tau of (m-1)<,> at m = 4

  const QuadTensor w = weyl_kernel_example(m);
  CHECK(rho(w, RhoSlots::Rho14, id).is_zero());
  const ADecomposition dw = decompose_a(w, id);
  CHECK(dw.weyl == w);
  CHECK(dw.s0_part.is_zero());
  CHECK(dw.scalar_part.is_zero());

  const ADecomposition dz = decompose_a(QuadTensor(m, Variance::Covariant), id);
  CHECK(dz.weyl.is_zero());
  CHECK(dz.s0_part.is_zero());
  CHECK(dz.scalar_part.is_zero());

  // reconstruction A = weyl + sigma(pi_0 + (tau/m) <,>)
  Rng rng(26);
  const QuadTensor a = random_r_element(rng, a_basis(4), Variance::Covariant, 4);
  const ADecomposition da = decompose_a(a, id);
  Bilinear trace_part((Dim(4)));
  const Rational tm = da.scalar_part / Rational(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) trace_part.at(i, j) = tm * id.xi().at(i, j);
  QuadTensor recon = da.weyl;
  recon += sigma_a_rho14(da.s0_part + trace_part, id);
  CHECK(recon == a);
  CHECK(rho(da.weyl, RhoSlots::Rho14, id).is_zero());

  CHECK_THROWS_AS(decompose_a(sigma3(e_wedge(m, 0, 1), id), id), std::invalid_argument);
}

TEST_CASE("symmetrization of the last two slots and its lift") {
  const Dim m(4);
  const Metric id = Metric::identity(m);
  Rng rng(27);

  // vanishes on algebraic curvature tensors
  const QuadTensor a = random_r_element(rng, a_basis(4), Variance::Covariant, 4);
  CHECK(id_pi_s(a).is_zero());

  // splitting identity on Lambda2 (x) S2_0 and the alpha complement
  const Subspace l2s20 =
      basis_of({SpaceTag::L2S20Tensor, Metric::identity(m)}, m);
  const QuadTensor s = random_r_element(rng, l2s20, Variance::Covariant, 4);
  CHECK(id_pi_s(sigma_id_pi_s(s)) == s);
  const QuadTensor al = alpha_map(s);
  CHECK(sigma_id_pi_s(s) == s + al);
  // alpha lands in Lambda2 (x) Lambda2
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          CHECK(al.at(i, j, k, l) == -al.at(j, i, k, l));
          CHECK(al.at(i, j, k, l) == -al.at(i, j, l, k));
        }
  // the lift lands in the curvature space
  CHECK(satisfies(sigma_id_pi_s(s), TensorIdentity::I1c));
  CHECK(satisfies(sigma_id_pi_s(s), TensorIdentity::I1d));
}

TEST_CASE("the three split maps on Lambda2 (x) S2_0") {
  const Dim m(4);
  const Metric id = Metric::identity(m);
  Rng rng(28);

  const Bilinear psi = pi_trace_free(random_symmetric(rng, m), id);
  CHECK(pi_1s(sigma_pi_1s(psi, id), id) == psi);
  CHECK(pi_1a(sigma_pi_1s(psi, id), id).is_zero());

  // e.g. psi = e^1 (x) e^1 - e^2 (x) e^2
  Bilinear diag(m);
  diag.at(0, 0) = Rational(1);
  diag.at(1, 1) = Rational(-1);
  CHECK(pi_1s(sigma_pi_1s(diag, id), id) == diag);

  const Bilinear omega = random_antisymmetric(rng, m);
  CHECK(pi_1a(sigma_pi_1a(omega, id), id) == omega);
  CHECK(pi_1s(sigma_pi_1a(omega, id), id).is_zero());

  // trace-freeness of the sigma_pi_1s image in the last two slots
  const QuadTensor lift = sigma_pi_1s(psi, id);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Rational tr;
      for (int k = 0; k < 4; ++k) tr += lift.at(i, j, k, k);
      CHECK(tr.is_zero());
    }

  // pi_lambda round-trip over a basis of the trace-free double 2-forms
  const Subspace l2l20 =
      basis_of({SpaceTag::Lambda2Lambda2Zero, Metric::identity(m)}, m);
  for (int b = 0; b < l2l20.dim(); ++b) {
    const QuadTensor t =
        QuadTensor::from_flat(m, Variance::Covariant, l2l20.basis().row(b));
    CHECK(pi_lambda(sigma_pi_lambda(t, id)) == t);
  }

  CHECK_THROWS_AS(sigma_pi_1s(random_symmetric(rng, m) + e_sym(m, 0, 0), id),
                  std::invalid_argument);
  CHECK_THROWS_AS(sigma_pi_1a(e_sym(m, 0, 1), id), std::invalid_argument);
}

TEST_CASE("decompose_w: canonical examples") {
  const Dim m(4);
  const Metric id = Metric::identity(m);

  const QuadTensor cc = wedge(id.xi(), id.xi());
  const WDecomposition d1 = decompose_w(cc, id);
  CHECK(d1.w(1) == cc);
  for (int i = 2; i <= 8; ++i) CHECK(d1.w(i).is_zero());

  const QuadTensor w3 = lower(sigma_gl_antisym(e_wedge(m, 0, 1)), id);
  const WDecomposition d2 = decompose_w(w3, id);
  CHECK(d2.w(3) == w3);
  for (int i : {1, 2, 4, 5, 6, 7, 8}) CHECK(d2.w(i).is_zero());

  const WDecomposition d3 = decompose_w(QuadTensor(m, Variance::Covariant), id);
  for (int i = 1; i <= 8; ++i) CHECK(d3.w(i).is_zero());

  const QuadTensor weyl = weyl_kernel_example(m);
  const WDecomposition d4 = decompose_w(weyl, id);
  CHECK(d4.w(6) == weyl);
  for (int i : {1, 2, 3, 4, 5, 7, 8}) CHECK(d4.w(i).is_zero());

  CHECK_THROWS_AS(decompose_w(QuadTensor(m, Variance::Operator), id), std::invalid_argument);
}

TEST_CASE("decompose_w: reconstruction, idempotence, orthogonality at m = 4") {
  const Dim m(4);
  const Metric id = Metric::identity(m);
  const Subspace r = r_basis(4);

  std::vector<WDecomposition> all;
  all.reserve(r.dim());
  for (int b = 0; b < r.dim(); ++b) {
    const QuadTensor t = QuadTensor::from_flat(m, Variance::Covariant, r.basis().row(b));
    WDecomposition d = decompose_w(t, id);
    CHECK(d.sum() == t);
    all.push_back(std::move(d));
  }

  // component subspace dimensions
  const long long expected[8] = {1, 9, 6, 6, 9, 10, 30, 9};
  for (int i = 1; i <= 8; ++i) {
    RrefBuilder span(256);
    for (const auto& d : all) span.insert(d.w(i).flatten());
    CHECK(span.rank() == expected[i - 1]);
    CHECK(span.rank() == w_component_dim(i, 4));
  }

  // pairwise orthogonality across all components of all basis elements
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j)
      for (size_t s = 0; s < all.size(); s += 7)
        for (size_t t2 = 0; t2 < all.size(); t2 += 11)
          CHECK(tensor_inner(all[s].w(i), all[t2].w(j), id).is_zero());

  // idempotence on a random element's components
  Rng rng(29);
  const QuadTensor t = random_r_element(rng, r, Variance::Covariant, 4);
  const WDecomposition d = decompose_w(t, id);
  CHECK(d.sum() == t);
  for (int i = 1; i <= 8; ++i) {
    const WDecomposition again = decompose_w(d.w(i), id);
    for (int j = 1; j <= 8; ++j) {
      if (j == i) CHECK(again.w(j) == d.w(i));
      else CHECK(again.w(j).is_zero());
    }
  }
}

TEST_CASE("components are orthogonal for a random positive definite metric") {
  const Dim m(4);
  Rng rng(35);
  const Metric g = random_metric(rng, m, 0, 4);  // P^T P form, positive definite
  const QuadTensor t = random_r_element(rng, r_basis(4), Variance::Covariant, 4);
  const WDecomposition d = decompose_w(t, g);
  CHECK(d.sum() == t);
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j)
      CHECK(tensor_inner(d.w(i), d.w(j), g).is_zero());
}

TEST_CASE("decompose_w with an indefinite metric") {
  const Dim m(4);
  const Metric g = Metric::diagonal_signature(m, 1, 3);
  Rng rng(30);
  const QuadTensor t = random_r_element(rng, r_basis(4), Variance::Covariant, 4);
  const WDecomposition d = decompose_w(t, g);
  CHECK(d.sum() == t);
  for (int i = 1; i <= 8; ++i) {
    const WDecomposition again = decompose_w(d.w(i), g);
    for (int j = 1; j <= 8; ++j) {
      if (j == i) CHECK(again.w(j) == d.w(i));
      else CHECK(again.w(j).is_zero());
    }
  }
}

TEST_CASE("W3 vanishes exactly on the Ricci-symmetric subspace") {
  const Dim m(4);
  const Metric id = Metric::identity(m);
  Rng rng(31);
  const Subspace f = basis_of({SpaceTag::FAff, id}, m);
  const QuadTensor in_f = random_r_element(rng, f, Variance::Covariant, 4);
  CHECK(decompose_w(in_f, id).w(3).is_zero());
  CHECK(satisfies(raise(in_f, id), TensorIdentity::I1k));
  CHECK(satisfies(raise(in_f, id), TensorIdentity::I1L));

  const QuadTensor not_in_f = lower(sigma_gl_antisym(e_wedge(m, 1, 2)), id);
  CHECK_FALSE(decompose_w(not_in_f, id).w(3).is_zero());
  CHECK_FALSE(satisfies(raise(not_in_f, id), TensorIdentity::I1k));
  CHECK_FALSE(satisfies(raise(not_in_f, id), TensorIdentity::I1L));
}

TEST_CASE("the two lifts of the 2-form module intersect trivially") {
  const Dim m(4);
  const Metric id = Metric::identity(m);
  const Subspace l2 = basis_of({SpaceTag::Lambda2, std::nullopt}, m);
  RrefBuilder lift3(256), lift4(256);
  std::vector<Subspace> spans;
  for (int b = 0; b < l2.dim(); ++b) {
    const Bilinear omega = Bilinear::from_flat(m, l2.basis().row(b));
    lift3.insert(lower(sigma_gl_antisym(omega), id).flatten());
    lift4.insert(sigma_id_pi_s(sigma_pi_1a(omega, id)).flatten());
  }
  const Subspace s3 = Subspace::from_builder(lift3);
  const Subspace s4 = Subspace::from_builder(lift4);
  CHECK(s3.dim() == 6);
  CHECK(s4.dim() == 6);
  // trivial intersection: the union has full combined dimension
  CHECK(span_union({s3, s4}).dim() == 12);
}

TEST_CASE("decompose_w is equivariant under exact orthogonal maps") {
  const Dim m(4);
  Rng rng(32);
  for (auto [p, q] : {std::pair{0, 4}, std::pair{1, 3}}) {
    const Metric g = Metric::diagonal_signature(m, p, q);
    const Matrix psi = cayley_orthogonal(rng, g);
    const QuadTensor t = random_r_element(rng, r_basis(4), Variance::Covariant, 4);
    const WDecomposition d = decompose_w(t, g);
    const WDecomposition dp = decompose_w(pullback(psi, t), g);
    for (int i = 1; i <= 8; ++i) CHECK(dp.w(i) == pullback(psi, d.w(i)));
  }
}

TEST_CASE("decompose_gl is equivariant under the general linear action") {
  const Dim m(4);
  Rng rng(33);
  const Matrix psi = random_invertible(rng, 4);
  const QuadTensor r = random_r_element(rng, r_basis(4), Variance::Operator, 4);
  const GLDecomposition d = decompose_gl(r);
  const GLDecomposition dp = decompose_gl(pullback(psi, r));
  CHECK(dp.u_part == pullback(psi, d.u_part));
  CHECK(dp.lambda_part == pullback_bilinear(psi, d.lambda_part));
  CHECK(dp.s_part == pullback_bilinear(psi, d.s_part));
}

TEST_CASE("reconstruction over full bases at m = 5 and 6") {
  for (int n : {5, 6}) {
    const Dim m(n);
    const Metric id = Metric::identity(m);
    const Subspace r = r_basis(n);
    REQUIRE(r.dim() == dim_formula(SpaceTag::RCurv, n));
    for (int b = 0; b < r.dim(); ++b) {
      const QuadTensor t = QuadTensor::from_flat(m, Variance::Covariant, r.basis().row(b));
      CHECK(decompose_w(t, id).sum() == t);
    }
  }
}

TEST_CASE("decompose_w is equivariant under signed permutations") {
  const Dim m(4);
  const Metric id = Metric::identity(m);
  Rng rng(34);
  const Matrix psi = random_signed_permutation(rng, 4);
  CHECK(pullback_bilinear(psi, id.xi()) == id.xi());
  const QuadTensor t = random_r_element(rng, r_basis(4), Variance::Covariant, 4);
  const WDecomposition d = decompose_w(t, id);
  const WDecomposition dp = decompose_w(pullback(psi, t), id);
  for (int i = 1; i <= 8; ++i) CHECK(dp.w(i) == pullback(psi, d.w(i)));
}
