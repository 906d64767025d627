"""Monogenic functions built from holomorphic components.

A monogenic function is given by ``m`` holomorphic ``F_u`` (one per
idempotent) and ``n - m`` holomorphic ``G_s`` (one per radical vector).  Its
value at ``zeta = sum x_j e_j`` is

    sum_u I_u (1/2 pi i) oint F_u(t) (t - zeta)^{-1} dt
      + sum_s I_s (1/2 pi i) oint G_s(t) (t - zeta)^{-1} dt

with each contour around ``xi_u`` (resp. ``xi_{u_s}``).  Residues turn this
into a finite sum of Taylor coefficients weighted by the resolvent table;
:func:`eval_monogenic` uses that sum and :func:`eval_monogenic_contour` does
the integrals numerically.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .algebra import AlgebraSpec
from .frame import VariableFrame
from .holomorphic import HolomorphicFn, adaptive_contour_quadrature
from .resolvent import QTable, q_table, resolvent


class ContourDegenerate(ValueError):
    """Two ``xi_u`` coincide, so no circle separates them."""


class MonogenicFunction:
    def __init__(self, frame: VariableFrame, F: Sequence[HolomorphicFn], G: Sequence[HolomorphicFn] | None = None):
        spec = frame.spec
        G = list(G) if G is not None else [HolomorphicFn.const(0)] * (spec.n - spec.m)
        if len(F) != spec.m:
            raise ValueError(f"need {spec.m} functions F_u, got {len(F)}")
        if len(G) != spec.n - spec.m:
            raise ValueError(f"need {spec.n - spec.m} functions G_s, got {len(G)}")
        self.frame = frame
        self.F = list(F)
        self.G = G
        bad = [u + 1 for u, ok in enumerate(frame.surjectivity_check()) if not ok]
        if bad:
            warnings.warn(
                f"f_u is not onto the complex plane for u = {bad}; the representation may miss monogenic functions",
                stacklevel=2,
            )

    @property
    def spec(self) -> AlgebraSpec:
        return self.frame.spec

    def __call__(self, x) -> np.ndarray:
        return eval_monogenic(self, x)

    def __repr__(self):
        return f"MonogenicFunction(F={self.F}, G={self.G})"


@dataclass
class ComponentMap:
    """Arbitrary map ``R^k -> algebra``; used for functions that need not be monogenic."""

    frame: VariableFrame
    fn: Callable[[np.ndarray], np.ndarray]

    def __call__(self, x) -> np.ndarray:
        return self.frame.spec.element(self.fn(np.asarray(x, dtype=float)))


def xi(frame: VariableFrame, u: int, x) -> complex:
    return frame.xi(u, x)


def surjectivity_check(frame: VariableFrame) -> list[bool]:
    return frame.surjectivity_check()


def _g_block(spec: AlgebraSpec, table: QTable, u: int, g: HolomorphicFn, z) -> np.ndarray:
    """``sum_{s: u_s = u} sum_r Q[r,s] g^{(r-1)}(z)/(r-1)! I_s``."""
    out = spec.zero()
    derivs = {}
    for (r, s), q in table.Q.items():
        if spec.u(s) != u or q == 0:
            continue
        if r not in derivs:
            derivs[r] = g.deriv(r - 1).eval(z) / math.factorial(r - 1)
        out[s - 1] += q * derivs[r]
    return out


def eval_monogenic(mf: MonogenicFunction, x, table: QTable | None = None) -> np.ndarray:
    """Closed-form value: Taylor coefficients of the components times the resolvent table.

    In the ``G`` double sum only pairs with ``u_s = u_q`` are kept; the
    others have their pole outside the contour and contribute nothing.
    """
    frame = mf.frame
    spec = frame.spec
    xis = frame.xis(x)
    if table is None:
        table = q_table(frame, x)
    out = spec.zero()
    for u in range(1, spec.m + 1):
        z = xis[u - 1]
        out[u - 1] += mf.F[u - 1].eval(z)
        out += _g_block(spec, table, u, mf.F[u - 1], z)
    for q in spec.radical_indices:
        uq = spec.u(q)
        z = xis[uq - 1]
        G = mf.G[q - spec.m - 1]
        out[q - 1] += G.eval(z)
        out += spec.mul(spec.basis(q), _g_block(spec, table, uq, G, z))
    return out


def contour_radii(xis, cap: float = 1.0, degenerate_tol: float = 1e-9) -> np.ndarray:
    """Half the distance from each ``xi_u`` to its nearest neighbour, capped."""
    xis = np.asarray(xis, dtype=complex)
    radii = np.full(xis.shape, cap, dtype=float)
    for u in range(xis.size):
        for q in range(xis.size):
            if q == u:
                continue
            d = abs(xis[u] - xis[q])
            if d < degenerate_tol:
                raise ContourDegenerate(f"xi_{u + 1} and xi_{q + 1} coincide ({xis[u]})")
            radii[u] = min(radii[u], d / 2)
    return radii


def eval_monogenic_contour(
    mf: MonogenicFunction,
    x,
    nodes: int = 256,
    tol: float = 1e-10,
    max_nodes: int = 4096,
) -> np.ndarray:
    """Value by numerical contour integration against the resolvent."""
    frame = mf.frame
    spec = frame.spec
    xis = frame.xis(x)
    radii = contour_radii(xis)
    table = q_table(frame, x)

    def integral(fn, u):
        res = adaptive_contour_quadrature(
            lambda t: fn.eval(t) * resolvent(t, frame, x, table=table),
            xis[u - 1],
            radii[u - 1],
            nodes=nodes,
            tol=tol,
            max_nodes=max_nodes,
        )
        return res.value

    out = spec.zero()
    for u in range(1, spec.m + 1):
        out += spec.mul(spec.basis(u), integral(mf.F[u - 1], u))
    for s in spec.radical_indices:
        out += spec.mul(spec.basis(s), integral(mf.G[s - spec.m - 1], spec.u(s)))
    return out


def gateaux_derivative(mf: MonogenicFunction, r: int = 1) -> MonogenicFunction:
    """``r``-th Gateaux derivative: the same frame with every component differentiated ``r`` times."""
    if r < 0:
        raise ValueError("derivative order must be non-negative")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return MonogenicFunction(mf.frame, [f.deriv(r) for f in mf.F], [g.deriv(r) for g in mf.G])


def gateaux_quotient_error(mf: MonogenicFunction, x, direction, eps: float) -> float:
    """``|| (Phi(zeta + eps h) - Phi(zeta)) / eps - h Phi'(zeta) ||_inf`` for ``h = sum direction_j e_j``."""
    frame = mf.frame
    x = np.asarray(x, dtype=float)
    d = np.asarray(direction, dtype=float)
    quotient = (eval_monogenic(mf, x + eps * d) - eval_monogenic(mf, x)) / eps
    h = frame.zeta(d)
    expected = frame.spec.mul(h, eval_monogenic(gateaux_derivative(mf, 1), x))
    return float(np.max(np.abs(quotient - expected)))


def polynomial_of_zeta(frame: VariableFrame, coeffs, x) -> np.ndarray:
    """``p(zeta)`` by Horner's rule in the algebra (no resolvent involved)."""
    return frame.spec.polyval(coeffs, frame.zeta(x))


@dataclass
class CRReport:
    residuals: list[float]  # j = 2..k
    max_residual: float
    h: float

    def as_dict(self):
        return {"residuals": {str(j): r for j, r in enumerate(self.residuals, start=2)},
                "max_residual": self.max_residual, "h": self.h}


def default_step(x) -> float:
    return 1e-4 * (1 + float(np.max(np.abs(x))))


def partial(func, x, j: int, h: float) -> np.ndarray:
    """Central difference of ``func`` in coordinate ``j`` (1-based)."""
    x = np.asarray(x, dtype=float)
    dx = np.zeros_like(x)
    dx[j - 1] = h
    return (func(x + dx) - func(x - dx)) / (2 * h)


def check_cauchy_riemann(func, x, h: float | None = None) -> CRReport:
    """Residuals of ``dPhi/dx_j = (dPhi/dx_1) e_j`` by central differences.

    ``func`` is a :class:`MonogenicFunction` or a :class:`ComponentMap`.
    """
    frame = func.frame
    spec = frame.spec
    x = np.asarray(x, dtype=float)
    if h is None:
        h = default_step(x)
    if h <= 0:
        raise ValueError("step must be positive")
    d1 = partial(func, x, 1, h)
    res = []
    for j in range(2, frame.k + 1):
        dj = partial(func, x, j, h)
        res.append(float(np.max(np.abs(dj - spec.mul(d1, frame.e(j))))))
    return CRReport(res, max(res), h)


# -- closed forms for special algebras -------------------------------------


def semi_simple_form(mf: MonogenicFunction, x) -> np.ndarray:
    """``sum_u F_u(xi_u) I_u`` (no radical)."""
    xis = mf.frame.xis(x)
    return np.array([mf.F[u].eval(xis[u]) for u in range(mf.spec.m)], dtype=complex)


def prop2_form(mf: MonogenicFunction, x) -> np.ndarray:
    """Radical with zero products: ``F_u(xi_u) I_u + (G_s + T_s F'_{u_s})(xi_{u_s}) I_s``."""
    spec = mf.spec
    xis = mf.frame.xis(x)
    T = mf.frame.radical_part(x)
    out = spec.zero()
    for u in range(spec.m):
        out[u] = mf.F[u].eval(xis[u])
    for i, s in enumerate(spec.radical_indices):
        z = xis[spec.u(s) - 1]
        out[s - 1] = mf.G[i].eval(z) + T[i] * mf.F[spec.u(s) - 1].deriv(1).eval(z)
    return out


def prop1_form(mf: MonogenicFunction, x) -> np.ndarray:
    """All radical vectors attached to one idempotent ``eta``.

    Every ``F``/``G`` derivative is evaluated at the single point ``xi_eta``.
    """
    spec = mf.spec
    etas = set(spec.u_map.values())
    if len(etas) != 1:
        raise ValueError("algebra does not have a single idempotent acting on the radical")
    eta = etas.pop()
    xis = mf.frame.xis(x)
    z = xis[eta - 1]
    table = q_table(mf.frame, x)
    out = spec.zero()
    for u in range(spec.m):
        out[u] = mf.F[u].eval(xis[u])
    for (r, s), q in table.Q.items():
        out[s - 1] += q * mf.F[eta - 1].deriv(r - 1).eval(z) / math.factorial(r - 1)
    for i, s in enumerate(spec.radical_indices):
        out[s - 1] += mf.G[i].eval(z)
    for i, qidx in enumerate(spec.radical_indices):
        G = mf.G[i]
        for (r, s), q in table.Q.items():
            coeff = q * G.deriv(r - 1).eval(z) / math.factorial(r - 1)
            out += coeff * spec.mul(spec.basis(s), spec.basis(qidx))
    return out


@dataclass
class GridSpec:
    """Tensor grid in R^k: one ``(lo, hi)`` range and one point count per coordinate."""

    ranges: list[tuple[float, float]]
    steps: list[int]

    def __post_init__(self):
        if len(self.ranges) != len(self.steps):
            raise ValueError("need one step count per range")
        if any(int(s) < 1 for s in self.steps):
            raise ValueError("step counts must be positive")

    def points(self) -> np.ndarray:
        axes = [np.linspace(lo, hi, int(s)) if int(s) > 1 else np.array([float(lo)])
                for (lo, hi), s in zip(self.ranges, self.steps)]
        mesh = np.meshgrid(*axes, indexing="ij")
        return np.stack([g.ravel() for g in mesh], axis=-1)
