import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monogen import AlgebraSpec, AlgebraSpecError, validate_algebra
from monogen import fixtures

ALGS = fixtures.algebras()


def test_bicomplex_is_semi_simple_and_valid():
    rep = validate_algebra(fixtures.bicomplex())
    assert rep.valid and rep.semi_simple
    assert rep.violations == []


def test_dual3_valid_prop1():
    rep = validate_algebra(fixtures.dual3())
    assert rep.valid and rep.prop1_case and not rep.semi_simple


def test_prop2_violation_reported():
    spec = AlgebraSpec(2, 4, {(3, 3, 4): 1}, {3: 1, 4: 2})
    rep = validate_algebra(spec)
    assert not rep.valid
    first = rep.violations[0]
    assert (first.kind, first.indices) == ("A2", (1, 3, 3))
    assert any(v.kind == "prop2" and v.indices == (3, 3, 4) for v in rep.violations)


@pytest.mark.parametrize("name", sorted(fixtures.violations()))
def test_violation_fixtures(name):
    spec, expected = fixtures.violations()[name]
    rep = validate_algebra(spec)
    got = [(v.kind, v.indices) for v in rep.violations]
    assert not rep.valid
    assert got[0] == expected[0]
    for e in expected:
        assert e in got


def test_all_fixtures_valid():
    for name, spec in ALGS.items():
        assert validate_algebra(spec).valid, name


def test_spec_rejects_bad_index():
    with pytest.raises(AlgebraSpecError):
        AlgebraSpec(1, 3, {(2, 3, 2): 1})
    with pytest.raises(AlgebraSpecError):
        AlgebraSpec(2, 3, {})  # radical vector without u_map entry


def test_spec_rejects_conflicting_symmetric_entries():
    with pytest.raises(AlgebraSpecError):
        AlgebraSpec(1, 4, {(2, 3, 4): 1, (3, 2, 4): 2})


def test_hand_product_in_dual3():
    s = fixtures.dual3()
    a = s.element([1, -1, 0])
    b = s.element([1, 1, 1])
    np.testing.assert_allclose(s.mul(a, b), s.unit(), atol=0)


def test_unit_add_scale():
    s = fixtures.mixed_algebra()
    a = s.element([1, 2j, 3, -1, 0.5])
    np.testing.assert_array_equal(s.add(a, s.zero()), a)
    np.testing.assert_array_equal(s.scale(0, a), s.zero())
    np.testing.assert_array_equal(s.mul(s.unit(), a), a)


def test_f_and_projection():
    s = fixtures.dual3()
    assert s.f(1, s.basis(1)) == 1
    assert s.f(1, s.basis(2)) == 0
    np.testing.assert_array_equal(s.radical_project(s.element([2, 0, 3])), s.element([0, 0, 3]))
    np.testing.assert_array_equal(s.radical_project(s.basis(1)), s.zero())
    b = fixtures.bicomplex()
    assert b.f(1, b.element([3, 5])) == 3


def test_invertibility():
    s = fixtures.dual3()
    assert s.is_invertible(s.unit())
    assert not s.is_invertible(s.basis(2))
    b = fixtures.bicomplex()
    assert not b.is_invertible(b.element([0, 7]))


def test_power_and_polyval():
    s = fixtures.dual3()
    x = s.basis(2)
    np.testing.assert_array_equal(s.power(x, 2), s.basis(3))
    np.testing.assert_array_equal(s.power(x, 3), s.zero())
    np.testing.assert_array_equal(s.polyval([1, 1, 1], x), s.element([1, 1, 1]))


def _gauss(draw, n):
    ints = st.integers(-5, 5)
    return np.array([complex(draw(ints), draw(ints)) for _ in range(n)])


@st.composite
def triples(draw):
    name = draw(st.sampled_from(sorted(ALGS)))
    spec = ALGS[name]
    return spec, _gauss(draw, spec.n), _gauss(draw, spec.n), _gauss(draw, spec.n)


@settings(max_examples=150, deadline=None)
@given(triples())
def test_ring_laws(t):
    s, a, b, c = t
    np.testing.assert_array_equal(s.mul(a, b), s.mul(b, a))
    np.testing.assert_allclose(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c)), atol=1e-9)
    np.testing.assert_allclose(s.mul(a, s.add(b, c)), s.add(s.mul(a, b), s.mul(a, c)), atol=1e-9)
    for u in range(1, s.m + 1):
        assert s.f(u, s.mul(a, b)) == s.f(u, a) * s.f(u, b)


@settings(max_examples=100, deadline=None)
@given(triples())
def test_multiplication_matrix_matches_mul(t):
    s, a, b, _ = t
    # integer-valued structure constants keep this exact for most fixtures
    np.testing.assert_allclose(s.multiplication_matrix(a) @ b, s.mul(a, b), atol=1e-9)


@settings(max_examples=100, deadline=None)
@given(triples())
def test_ideal_property(t):
    """The kernel of f_u absorbs products."""
    s, a, b, _ = t
    for u in range(1, s.m + 1):
        w = a.copy()
        w[u - 1] = 0  # now f_u(w) = 0
        assert s.f(u, s.mul(w, b)) == 0


def test_mul_batched():
    s = fixtures.mixed_algebra()
    rng = np.random.default_rng(0)
    A = rng.normal(size=(s.n, 7)) + 0j
    B = rng.normal(size=(s.n, 7)) + 0j
    out = s.mul(A, B)
    for i in range(7):
        np.testing.assert_allclose(out[:, i], s.mul(A[:, i], B[:, i]), atol=1e-14)


def test_structure_tensor_symmetric():
    for spec in ALGS.values():
        C = spec.structure_tensor()
        np.testing.assert_array_equal(C, C.transpose(1, 0, 2))
