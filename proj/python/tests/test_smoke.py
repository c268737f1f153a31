"""Smoke tests for the pycurv extension module."""

import json

import pytest

import pycurv


def identity_wedge_square(m=4):
    g = pycurv.Metric.identity(m)
    return pycurv.wedge(g.xi, g.xi), g


def test_rational_arithmetic():
    a = pycurv.Rational("1/3")
    b = pycurv.Rational(2)
    assert str(a + b) == "7/3"
    assert str(a * "3/5") == "1/5"
    assert (a - a).is_zero()


def test_exact_linalg():
    m = pycurv.Matrix([[1, 1, 0]])
    ns = pycurv.null_space(m)
    assert ns.dim == 2
    assert ns.contains([1, -1, 0])
    assert not ns.contains([1, 0, 0])
    assert pycurv.rank(pycurv.Matrix([[1, 2], [2, 4], [3, 6]])) == 1


def test_dimension_table():
    expected = {"r": 80, "a": 20, "f": 74, "u": 64, "w": 10,
                "lambda2": 6, "s2": 10, "s2_0": 9, "l2l2_0": 9, "scal": 30}
    g = pycurv.Metric.identity(4)
    for name, dim in expected.items():
        assert pycurv.dim_formula(name, 4) == dim
        assert pycurv.basis_of(name, 4, metric=g).dim == dim
    assert [pycurv.w_component_dim(i, 4) for i in range(1, 9)] == [1, 9, 6, 6, 9, 10, 30, 9]


def test_identities():
    cc, g = identity_wedge_square()
    for name in ("1.c", "1.d", "1.e", "1.f"):
        assert pycurv.satisfies(cc, name)
    omega = pycurv.Bilinear(4)
    omega[0, 1] = 1
    omega[1, 0] = -1
    s3 = pycurv.sigma3(omega, g)
    assert pycurv.satisfies(s3, "1.c")
    assert not pycurv.satisfies(s3, "1.f")


def test_decompose_w_reconstruction():
    cc, g = identity_wedge_square()
    d = pycurv.decompose_w(cc, g)
    assert d.w(1) == cc
    for i in range(2, 9):
        assert d.w(i).is_zero()
    assert d.sum() == cc

    basis = pycurv.basis_of("r", 4)
    t = pycurv.QuadTensor.from_flat(4, "covariant", basis.basis_row(13))
    d2 = pycurv.decompose_w(t, g)
    assert d2.sum() == t
    # components are pairwise orthogonal
    for i in range(1, 9):
        for j in range(i + 1, 9):
            assert pycurv.tensor_inner(d2.w(i), d2.w(j), g).is_zero()


def test_decompose_gl():
    h = pycurv.Metric.identity(4).xi
    a = pycurv.r_h(h)  # constant-curvature operator
    d = pycurv.decompose_gl(a)
    assert d.lambda_part.is_zero()
    assert d.s_part == h.scaled(3)
    assert pycurv.rho(d.u_part, 14).is_zero()


def test_realization_round_trips():
    g = pycurv.Metric.identity(4)
    cc, _ = identity_wedge_square()
    pm = pycurv.metric_from(cc, g)
    assert pycurv.lc_curvature_at_origin(pm) == cc
    assert pm.value_at([0, 0, 0, 0]) == g.xi

    op = pycurv.raise_(cc, g)
    gamma = pycurv.connection_from(op)
    assert gamma.is_torsion_free()
    assert pycurv.curvature_at_origin(gamma) == op


def test_jacobi_rank():
    assert pycurv.jacobi_injectivity_rank(4) == 80


def test_span_certificates():
    r = pycurv.span_rh(4, seed=7)
    assert r.success and r.achieved_dim == 10
    r2 = pycurv.span_rh(4, seed=7)
    assert (r.samples_used, r.achieved_dim) == (r2.samples_used, r2.achieved_dim)

    cc, _ = identity_wedge_square()
    orbit = pycurv.orbit_span_certificate(cc, seed=7)
    assert orbit.success and orbit.achieved_dim == 20

    short = pycurv.span_rc(4, seed=7, max_samples=2)
    assert not short.success and short.samples_used == 2


def test_json_round_trip():
    cc, _ = identity_wedge_square()
    text = pycurv.tensor_to_json(cc)
    doc = json.loads(text)
    assert doc["m"] == 4 and doc["variance"] == "covariant"
    assert pycurv.tensor_from_json(text) == cc
    with pytest.raises(ValueError):
        pycurv.tensor_from_json("{not json")


def test_equivariance_under_exact_orthogonal_maps():
    g = pycurv.Metric.diagonal_signature(4, 1, 3)
    psi = pycurv.cayley_orthogonal(g, seed=5)
    assert pycurv.pullback_bilinear(psi, g.xi) == g.xi
    basis = pycurv.basis_of("r", 4)
    t = pycurv.QuadTensor.from_flat(4, "covariant", basis.basis_row(42))
    d = pycurv.decompose_w(t, g)
    dp = pycurv.decompose_w(pycurv.pullback(psi, t), g)
    for i in range(1, 9):
        assert dp.w(i) == pycurv.pullback(psi, d.w(i))


def test_preconditions_raise():
    g = pycurv.Metric.identity(4)
    op = pycurv.QuadTensor(4, "operator")
    with pytest.raises(ValueError):
        pycurv.decompose_w(op, g)  # wrong variance
    with pytest.raises(ValueError):
        pycurv.basis_of("f", 4)  # missing metric
    with pytest.raises(ValueError):
        pycurv.Metric.diagonal_signature(4, 1, 2)
