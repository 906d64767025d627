"""Entire functions of the form ``sum_i p_i(z) exp(lam_i z)`` with exact derivatives,
and trapezoidal quadrature on circles."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Term:
    """``poly(z) * exp(lam * z)``; ``poly`` ascending, ``lam = None`` means no exponential."""

    poly: tuple[complex, ...]
    lam: complex | None = None

    def __post_init__(self):
        object.__setattr__(self, "poly", tuple(complex(c) for c in self.poly))
        if self.lam is not None:
            object.__setattr__(self, "lam", complex(self.lam))

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for c in reversed(self.poly):
            acc = acc * z + c
        if self.lam is not None:
            acc = acc * np.exp(self.lam * z)
        return acc

    def deriv1(self) -> "Term":
        p = self.poly
        dp = [k * p[k] for k in range(1, len(p))]
        if self.lam is None:
            return Term(tuple(dp) or (0j,), None)
        # (p e^{lz})' = (p' + l p) e^{lz}
        new = [self.lam * c for c in p]
        for k, c in enumerate(dp):
            new[k] += c
        return Term(tuple(new), self.lam)


class HolomorphicFn:
    """Finite sum of polynomial-times-exponential terms.

    The class is closed under differentiation, so derivatives of every order
    are represented exactly by their coefficients.
    """

    def __init__(self, terms):
        self.terms = tuple(t if isinstance(t, Term) else Term(*t) for t in terms)

    @classmethod
    def poly(cls, coeffs):
        """Polynomial with ascending coefficients."""
        return cls([Term(tuple(coeffs))])

    @classmethod
    def exp(cls, lam=1.0, scale=1.0):
        return cls([Term((scale,), lam)])

    @classmethod
    def const(cls, c):
        return cls.poly([c])

    def __call__(self, z):
        return self.eval(z)

    def eval(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.zeros_like(z)
        for t in self.terms:
            out = out + t(z)
        return out[()] if out.ndim == 0 else out

    def deriv(self, r: int = 1) -> "HolomorphicFn":
        if r < 0:
            raise ValueError("derivative order must be non-negative")
        terms = self.terms
        for _ in range(r):
            terms = tuple(t.deriv1() for t in terms)
        return HolomorphicFn(terms)

    def __add__(self, other):
        if not isinstance(other, HolomorphicFn):
            return NotImplemented
        return HolomorphicFn(self.terms + other.terms)

    def is_zero(self) -> bool:
        return all(c == 0 for t in self.terms for c in t.poly)

    def coefficients(self):
        """``[(poly, lam), ...]`` for exact comparisons."""
        return [(t.poly, t.lam) for t in self.terms]

    def __eq__(self, other):
        return isinstance(other, HolomorphicFn) and self.coefficients() == other.coefficients()

    def __repr__(self):
        parts = []
        for t in self.terms:
            s = "poly" + str(list(t.poly))
            if t.lam is not None:
                s += f"*exp({t.lam}z)"
            parts.append(s)
        return "HolomorphicFn(" + " + ".join(parts) + ")"


def contour_quadrature(g, center: complex, radius: float, nodes: int = 256):
    """``(1 / 2 pi i)`` times the integral of ``g`` over a circle, by the trapezoidal rule.

    ``g`` is called once with the array of nodes; it may return an array whose
    last axis runs over the nodes (e.g. algebra elements of shape ``(n, nodes)``).
    For integrands analytic in an annulus around the circle the error decays
    geometrically in ``nodes``.
    """
    if nodes < 16:
        raise ValueError("use at least 16 nodes")
    if radius <= 0:
        raise ValueError("radius must be positive")
    theta = 2 * np.pi * np.arange(nodes) / nodes
    w = radius * np.exp(1j * theta)
    vals = np.asarray(g(center + w), dtype=complex)
    # dt = i w dtheta, so (1/2 pi i) * sum g * i w * (2 pi / N)
    return (vals * w).sum(axis=-1) / nodes


@dataclass
class QuadratureResult:
    value: np.ndarray
    nodes: int
    converged: bool


def adaptive_contour_quadrature(g, center, radius, nodes: int = 256, tol: float = 1e-10, max_nodes: int = 4096):
    """Double the node count until successive estimates agree to ``tol``."""
    prev = contour_quadrature(g, center, radius, nodes)
    while nodes < max_nodes:
        nodes *= 2
        cur = contour_quadrature(g, center, radius, nodes)
        if np.max(np.abs(cur - prev)) <= tol:
            return QuadratureResult(cur, nodes, True)
        prev = cur
    warnings.warn(f"contour quadrature did not settle to {tol} with {max_nodes} nodes", RuntimeWarning, stacklevel=2)
    return QuadratureResult(prev, nodes, False)


def taylor_coefficient(f: HolomorphicFn, z, r: int) -> complex:
    """``f^{(r)}(z) / r!``."""
    return f.deriv(r).eval(z) / math.factorial(r)
