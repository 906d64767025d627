"""Bundled algebras, frames and functions used by the self-test and the demos."""

from __future__ import annotations

import numpy as np

from .algebra import AlgebraSpec
from .frame import VariableFrame
from .holomorphic import HolomorphicFn, Term

I = 1j


def complex_plane() -> AlgebraSpec:
    return AlgebraSpec(1, 1)


def bicomplex() -> AlgebraSpec:
    return AlgebraSpec(2, 2)


def dual3() -> AlgebraSpec:
    """``m = 1, n = 3`` with ``I_2^2 = I_3``."""
    return AlgebraSpec(1, 3, {(2, 2, 3): 1})


def prop2_algebra() -> AlgebraSpec:
    """Two idempotents, each owning one radical vector; radical products vanish."""
    return AlgebraSpec(2, 4, {}, {3: 1, 4: 2})


def truncated_power_algebra(n: int = 5, weights=(1, I, -0.5 + 0.5 * I, 0.8 * I)) -> AlgebraSpec:
    """``C[x] / (x^{n})`` in the rescaled basis ``I_{j+1} = w_j x^j``.

    A single idempotent acts on the whole radical and the structure constants
    are non-trivial complex numbers, so every order of the resolvent table is
    populated.
    """
    w = {j + 1: complex(c) for j, c in enumerate(weights[: n - 1])}
    ups = {}
    for a in range(2, n + 1):
        for b in range(a, n + 1):
            deg = (a - 1) + (b - 1)
            if deg <= n - 1:
                ups[(a, b, deg + 1)] = w[a - 1] * w[b - 1] / w[deg]
    return AlgebraSpec(1, n, ups)


def two_generator_algebra() -> AlgebraSpec:
    """``C[x, y]`` modulo cubic terms: basis ``1, x, y, x^2, xy, y^2``."""
    return AlgebraSpec(1, 6, {(2, 2, 4): 1, (2, 3, 5): 1, (3, 3, 6): 1})


def mixed_algebra() -> AlgebraSpec:
    """``m = 2, n = 5`` with ``u_3 = u_4 = 1``, ``u_5 = 2`` and ``I_3^2 = I_4``."""
    return AlgebraSpec(2, 5, {(3, 3, 4): 1}, {3: 1, 4: 1, 5: 2})


def algebras() -> dict[str, AlgebraSpec]:
    return {
        "complex": complex_plane(),
        "bicomplex": bicomplex(),
        "dual3": dual3(),
        "prop2": prop2_algebra(),
        "prop1_chain5": truncated_power_algebra(),
        "prop1_xy": two_generator_algebra(),
        "mixed": mixed_algebra(),
    }


def broken_a1() -> AlgebraSpec:
    """``I_2^2 = I_3``, ``I_3^2 = I_4`` but ``I_2 I_3 = 0``: fails at ``(2, 2, 3)``."""
    return AlgebraSpec(1, 4, {(2, 2, 3): 1, (3, 3, 4): 1})


def broken_a2() -> AlgebraSpec:
    """``I_3^2 = I_4`` with ``u_3 = 1`` but ``u_4 = 2``: fails at ``(1, 3, 3)``."""
    return AlgebraSpec(2, 5, {(3, 3, 4): 1}, {3: 1, 4: 2, 5: 1})


def broken_prop2() -> AlgebraSpec:
    """Distinct ``u_3 = 1, u_4 = 2`` yet ``I_3^2 = I_4``."""
    return AlgebraSpec(2, 4, {(3, 3, 4): 1}, {3: 1, 4: 2})


def violations() -> dict[str, tuple[AlgebraSpec, list[tuple[str, tuple[int, int, int]]]]]:
    """Name -> (spec, violations that must be reported, first one first)."""
    return {
        "broken_a1": (broken_a1(), [("A1", (2, 2, 3))]),
        "broken_a2": (broken_a2(), [("A2", (1, 3, 3))]),
        "broken_prop2": (broken_prop2(), [("A2", (1, 3, 3)), ("prop2", (3, 3, 4))]),
    }


# -- frames -------------------------------------------------------------------


def harmonic_bicomplex_frame() -> VariableFrame:
    """``e_2 = i I_1``, ``e_3 = i I_2``: ``1 + e_2^2 + e_3^2 = 0``."""
    return VariableFrame(bicomplex(), [[I, 0], [0, I]])


def harmonic_dual3_frame() -> VariableFrame:
    """``e_2 = i + (i/2) I_3``, ``e_3 = I_2``: a harmonic triad with a radical."""
    return VariableFrame(dual3(), [[I, 0, I / 2], [0, 1, 0]])


def complex_frame() -> VariableFrame:
    return VariableFrame(complex_plane(), [[I]])


def random_frame(spec: AlgebraSpec, rng: np.random.Generator, k: int | None = None, scale: float = 1.0) -> VariableFrame:
    """Independent frame with every ``f_u`` onto the plane."""
    if k is None:
        k = int(rng.integers(2, min(2 * spec.n, 4) + 1))
    while True:
        a = scale * (rng.uniform(-1, 1, (k - 1, spec.n)) + 1j * rng.uniform(-1, 1, (k - 1, spec.n)))
        frame = VariableFrame(spec, a, strict=False)
        if frame.independent and all(frame.surjectivity_check(tol=0.1)):
            return frame


def default_frame(name: str) -> VariableFrame:
    """A fixed, hand-picked frame for each bundled algebra."""
    spec = algebras()[name]
    rows = {
        "complex": [[I]],
        "bicomplex": [[I, 0], [0, I]],
        "dual3": [[I, 0, I / 2], [0, 1, 0]],
        "prop2": [[0.3 + I, 0.5, 0.2, -0.4], [0.1, -0.7 + 0.6 * I, 0.3 * I, 0.8]],
        "prop1_chain5": [[0.2 + 0.9 * I, 0.5, -0.3 * I, 0.4, 0.1], [-0.5, 0.3 + 0.2 * I, 0.6, -0.2 * I, 0.7]],
        "prop1_xy": [[0.8 * I, 0.6, 0.1, 0.2 * I, -0.3, 0.4], [0.5, 0.2 * I, 0.7, -0.1, 0.3 * I, 0.2]],
        "mixed": [[0.4 + 0.7 * I, -0.2 + 0.5 * I, 0.6, 0.3 * I, -0.5], [0.3, 0.9 * I, -0.4 * I, 0.2, 0.6 + 0.1 * I]],
    }[name]
    return VariableFrame(spec, rows)


# -- functions ----------------------------------------------------------------


def sample_polynomial(rng: np.random.Generator, degree: int, scale: float = 1.0) -> HolomorphicFn:
    c = rng.uniform(-1, 1, degree + 1) + 1j * rng.uniform(-1, 1, degree + 1)
    return HolomorphicFn.poly(scale * c)


def sample_exp(rng: np.random.Generator, scale: float = 1.0) -> HolomorphicFn:
    lam = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
    p = rng.uniform(-1, 1, 2) + 1j * rng.uniform(-1, 1, 2)
    return HolomorphicFn([Term(tuple(scale * p), lam)])
