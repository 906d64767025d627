import warnings

import numpy as np
import pytest

from monogen import (
    ComponentMap,
    ContourDegenerate,
    HolomorphicFn,
    MonogenicFunction,
    VariableFrame,
    check_cauchy_riemann,
    eval_monogenic,
    eval_monogenic_contour,
    gateaux_derivative,
    surjectivity_check,
    xi,
)
from monogen import fixtures
from monogen.monogenic import (
    GridSpec,
    gateaux_quotient_error,
    polynomial_of_zeta,
    prop1_form,
    prop2_form,
    semi_simple_form,
)

from conftest import quiet, rel_err

IDENT = HolomorphicFn.poly([0, 1])
ZERO = HolomorphicFn.const(0)


def _mf(frame, F, G=None):
    return MonogenicFunction(frame, F, G)


def _random_mf(frame, rng, degree=3, exp=True):
    s = frame.spec
    def one(i):
        f = fixtures.sample_polynomial(rng, degree)
        if exp and i % 2:
            f = f + fixtures.sample_exp(rng, 0.5)
        return f
    return _mf(frame, [one(i) for i in range(s.m)], [one(i + 1) for i in range(s.n - s.m)])


def test_xi_examples():
    assert xi(fixtures.complex_frame(), 1, [3, 4]) == 3 + 4j
    f = fixtures.harmonic_bicomplex_frame()
    assert f.xi(1, [1, 2, 3]) == 1 + 2j and f.xi(2, [1, 2, 3]) == 1 + 3j
    assert xi(f, 1, [0, 0, 0]) == 0


def test_surjectivity_examples():
    assert surjectivity_check(fixtures.complex_frame()) == [True]
    assert surjectivity_check(fixtures.harmonic_bicomplex_frame()) == [True, True]
    real = VariableFrame(fixtures.bicomplex(), [[1, 1j], [2, 0]])
    assert surjectivity_check(real) == [False, True]


def test_non_surjective_frame_warns():
    real = VariableFrame(fixtures.bicomplex(), [[1, 1j], [2, 0]])
    with pytest.warns(UserWarning):
        MonogenicFunction(real, [IDENT, IDENT])


def test_identity_components_give_zeta(algebra_name, rng):
    frame = fixtures.default_frame(algebra_name)
    s = frame.spec
    mf = _mf(frame, [IDENT] * s.m)
    for _ in range(5):
        x = rng.uniform(-2, 2, frame.k)
        assert rel_err(eval_monogenic(mf, x), frame.zeta(x)) < 1e-13


def test_constant_components_give_multiple_of_unit(algebra_name):
    frame = fixtures.default_frame(algebra_name)
    s = frame.spec
    mf = _mf(frame, [HolomorphicFn.const(2.5 - 1j)] * s.m)
    np.testing.assert_allclose(eval_monogenic(mf, np.full(frame.k, 0.7)), (2.5 - 1j) * s.unit(), atol=1e-14)


@pytest.mark.parametrize("degree", range(6))
def test_polynomial_of_zeta(algebra_name, degree, rng):
    frame = fixtures.default_frame(algebra_name)
    s = frame.spec
    coeffs = rng.normal(size=degree + 1) + 1j * rng.normal(size=degree + 1)
    mf = _mf(frame, [HolomorphicFn.poly(coeffs)] * s.m)
    x = rng.uniform(-1, 1, frame.k)
    assert rel_err(eval_monogenic(mf, x), polynomial_of_zeta(frame, coeffs, x)) < 1e-10


def test_closed_form_matches_contour(algebra_name, rng):
    frame = fixtures.default_frame(algebra_name)
    mf = _random_mf(frame, rng)
    for _ in range(3):
        x = rng.uniform(-1, 1, frame.k)
        try:
            ref = eval_monogenic_contour(mf, x)
        except ContourDegenerate:
            continue
        assert rel_err(eval_monogenic(mf, x), ref) < 1e-8


def test_contour_identity_and_constant_cases():
    frame = fixtures.default_frame("mixed")
    s = frame.spec
    x = np.array([0.2, -0.5, 0.9])
    np.testing.assert_allclose(eval_monogenic_contour(_mf(frame, [IDENT] * 2), x), frame.zeta(x), atol=1e-8)
    c = _mf(frame, [HolomorphicFn.const(3)] * 2)
    np.testing.assert_allclose(eval_monogenic_contour(c, x), 3 * s.unit(), atol=1e-8)


def test_contour_cubic_in_dual3():
    frame = fixtures.harmonic_dual3_frame()
    mf = _mf(frame, [HolomorphicFn.poly([1, -2, 0.5j, 1])], [HolomorphicFn.poly([0, 1]), HolomorphicFn.poly([2])])
    x = np.array([0.3, 0.4, -0.2])
    assert rel_err(eval_monogenic(mf, x), eval_monogenic_contour(mf, x)) < 1e-10


def test_contour_degenerate():
    frame = fixtures.harmonic_bicomplex_frame()
    mf = _mf(frame, [IDENT, IDENT])
    with pytest.raises(ContourDegenerate):
        eval_monogenic_contour(mf, [1.0, 2.0, 2.0])  # xi_1 = xi_2


def test_gateaux_order_zero_and_annihilation():
    frame = fixtures.default_frame("dual3")
    cubic = HolomorphicFn.poly([1, 2, 3, 4])
    mf = _mf(frame, [cubic], [cubic, cubic])
    same = gateaux_derivative(mf, 0)
    assert same.F == mf.F and same.G == mf.G
    gone = gateaux_derivative(mf, 4)
    assert all(f.is_zero() for f in gone.F + gone.G)


def test_gateaux_square():
    frame = fixtures.default_frame("prop1_chain5")
    mf = _mf(frame, [HolomorphicFn.poly([0, 0, 1])])
    d = gateaux_derivative(mf, 1)
    x = np.array([0.3, -0.2, 0.4])
    np.testing.assert_allclose(eval_monogenic(d, x), 2 * frame.zeta(x), atol=1e-14)
    errs = [gateaux_quotient_error(mf, x, [1, -0.5, 0.25], eps) for eps in (1e-3, 1e-4)]
    assert errs[1] < errs[0] / 5


def test_gateaux_directional_limit(algebra_name, rng):
    frame = fixtures.default_frame(algebra_name)
    mf = _random_mf(frame, rng, degree=3)
    x = rng.uniform(-0.5, 0.5, frame.k)
    h = rng.normal(size=frame.k)
    assert gateaux_quotient_error(mf, x, h, 1e-6) < 1e-4


def test_cauchy_riemann_square(algebra_name, rng):
    frame = fixtures.default_frame(algebra_name)
    s = frame.spec
    mf = _mf(frame, [HolomorphicFn.poly([0, 0, 1])] * s.m)
    rep = check_cauchy_riemann(mf, rng.uniform(-1, 1, frame.k), 1e-4)
    assert rep.max_residual <= 1e-7


def test_cauchy_riemann_general(algebra_name, rng):
    frame = fixtures.default_frame(algebra_name)
    mf = _random_mf(frame, rng)
    rep = check_cauchy_riemann(mf, rng.uniform(-1, 1, frame.k))
    assert rep.max_residual <= 1e-6


def test_cauchy_riemann_constant():
    frame = fixtures.default_frame("mixed")
    mf = _mf(frame, [HolomorphicFn.const(1j)] * 2)
    assert check_cauchy_riemann(mf, [0.1, 0.2, 0.3]).max_residual < 1e-12


def test_cauchy_riemann_negative_control():
    frame = fixtures.default_frame("dual3")

    def raw(x):
        return np.array([x[0] ** 2, x[1] * x[2], np.sin(x[0])])

    rep = check_cauchy_riemann(ComponentMap(frame, raw), [0.3, 0.4, 0.5])
    assert rep.max_residual > 1e-2


def test_semi_simple_form(rng):
    frame = fixtures.harmonic_bicomplex_frame()
    mf = _random_mf(frame, rng)
    x = [0.2, 0.4, -0.1]
    assert rel_err(eval_monogenic(mf, x), semi_simple_form(mf, x)) < 1e-14


def test_prop2_form(rng):
    frame = fixtures.default_frame("prop2")
    mf = _random_mf(frame, rng)
    x = [0.2, 0.4, -0.1]
    assert rel_err(eval_monogenic(mf, x), prop2_form(mf, x)) < 1e-13


@pytest.mark.parametrize("name", ["dual3", "prop1_chain5", "prop1_xy"])
def test_prop1_form(name, rng):
    frame = fixtures.default_frame(name)
    mf = _random_mf(frame, rng)
    x = rng.uniform(-1, 1, frame.k)
    assert rel_err(eval_monogenic(mf, x), prop1_form(mf, x)) < 1e-12


def test_prop1_form_rejects_two_idempotents():
    frame = fixtures.default_frame("mixed")
    with pytest.raises(ValueError):
        prop1_form(_mf(frame, [IDENT] * 2), [0, 0, 0])


def test_wrong_component_count():
    with pytest.raises(ValueError):
        MonogenicFunction(fixtures.default_frame("dual3"), [IDENT, IDENT])


def test_grid_spec():
    pts = GridSpec([(0, 1), (2, 2), (-1, 1)], [2, 1, 3]).points()
    assert pts.shape == (6, 3)
    assert (pts[:, 1] == 2).all()
    with pytest.raises(ValueError):
        GridSpec([(0, 1)], [0])
