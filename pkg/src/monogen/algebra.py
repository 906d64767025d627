"""Finite-dimensional commutative associative algebras over the complex field.

An algebra is fixed by a basis ``I_1, ..., I_n`` whose first ``m`` vectors are
pairwise orthogonal idempotents and whose remaining ``n - m`` vectors span the
radical.  Three rules give the full table:

1. ``I_u I_v = delta_uv I_u`` for idempotents,
2. ``I_r I_s = sum_{p > max(r, s)} c_{rsp} I_p`` for radical vectors,
3. every radical ``I_s`` has exactly one idempotent ``I_{u_s}`` acting on it
   as the identity, all other idempotents annihilate it.

Elements are plain complex ``numpy`` arrays of length ``n`` (extra trailing
axes are treated as a batch).  Indices are 1-based at every public boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

import numpy as np

TOL_ZERO = 1e-12


class AlgebraSpecError(ValueError):
    """Structurally malformed algebra description (bad indices, bad sizes)."""


@dataclass(frozen=True, eq=False)
class AlgebraSpec:
    """Multiplication table of an algebra with ``m`` idempotents in dimension ``n``.

    ``upsilon`` maps ``(r, s, p)`` to the coefficient of ``I_p`` in ``I_r I_s``
    for radical indices ``r, s < p``.  Either ordering of ``(r, s)`` may be
    given; the stored key is ``(min, max, p)``.  ``u_map`` maps each radical
    index ``s`` to its idempotent ``u_s``; it may be omitted when ``m == 1``.
    """

    m: int
    n: int
    upsilon: Mapping[tuple[int, int, int], complex] = field(default_factory=dict)
    u_map: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        m, n = int(self.m), int(self.n)
        if n < 1 or m < 1 or m > n:
            raise AlgebraSpecError(f"need 1 <= m <= n, got m={self.m}, n={self.n}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)

        ups: dict[tuple[int, int, int], complex] = {}
        for key, value in dict(self.upsilon).items():
            try:
                r, s, p = (int(i) for i in key)
            except (TypeError, ValueError):
                raise AlgebraSpecError(f"upsilon key {key!r} is not an index triple") from None
            for name, idx in (("r", r), ("s", s), ("p", p)):
                if not m < idx <= n:
                    raise AlgebraSpecError(
                        f"upsilon entry ({r},{s},{p}): {name}={idx} outside radical range {m + 1}..{n}"
                    )
            if p <= max(r, s):
                raise AlgebraSpecError(f"upsilon entry ({r},{s},{p}): need p > max(r, s)")
            canon = (min(r, s), max(r, s), p)
            value = complex(value)
            if canon in ups and ups[canon] != value:
                raise AlgebraSpecError(
                    f"upsilon entries ({r},{s},{p}) and ({s},{r},{p}) disagree; the table must be symmetric"
                )
            ups[canon] = value
        object.__setattr__(self, "upsilon", MappingProxyType(dict(sorted(ups.items()))))

        umap = {int(s): int(u) for s, u in dict(self.u_map).items()}
        for s, u in umap.items():
            if not m < s <= n:
                raise AlgebraSpecError(f"u_map key {s} is not a radical index ({m + 1}..{n})")
            if not 1 <= u <= m:
                raise AlgebraSpecError(f"u_map[{s}] = {u} outside idempotent range 1..{m}")
        for s in range(m + 1, n + 1):
            if s not in umap:
                if m == 1:
                    umap[s] = 1
                else:
                    raise AlgebraSpecError(f"u_map has no entry for radical index {s}")
        object.__setattr__(self, "u_map", MappingProxyType(dict(sorted(umap.items()))))

        # 0-based index arrays for the sparse product
        rad = np.arange(m, n)
        object.__setattr__(self, "_rad", rad)
        object.__setattr__(self, "_rad_u", np.array([umap[s + 1] - 1 for s in rad], dtype=int))
        keys = list(self.upsilon)
        object.__setattr__(self, "_ups_r", np.array([k[0] - 1 for k in keys], dtype=int))
        object.__setattr__(self, "_ups_s", np.array([k[1] - 1 for k in keys], dtype=int))
        object.__setattr__(self, "_ups_p", np.array([k[2] - 1 for k in keys], dtype=int))
        object.__setattr__(self, "_ups_c", np.array(list(self.upsilon.values()), dtype=complex))

    # -- descriptive properties -------------------------------------------

    @property
    def semi_simple(self) -> bool:
        return self.m == self.n

    @property
    def radical_indices(self) -> range:
        """1-based indices of the radical basis vectors."""
        return range(self.m + 1, self.n + 1)

    def u(self, s: int) -> int:
        """Idempotent index ``u_s`` of radical index ``s`` (1-based)."""
        return self.u_map[s]

    @property
    def prop1_case(self) -> bool:
        """All radical vectors share one idempotent; (A2) then holds automatically."""
        return not self.semi_simple and len(set(self.u_map.values())) == 1

    @property
    def prop2_case(self) -> bool:
        """All ``u_s`` pairwise distinct; the radical must then multiply to zero."""
        vals = list(self.u_map.values())
        return not self.semi_simple and len(set(vals)) == len(vals)

    # -- elements ----------------------------------------------------------

    def element(self, coeffs) -> np.ndarray:
        a = np.asarray(coeffs, dtype=complex)
        if a.shape[:1] != (self.n,):
            raise ValueError(f"element has {a.shape[:1]} leading coefficients, algebra dimension is {self.n}")
        return a

    def zero(self) -> np.ndarray:
        return np.zeros(self.n, dtype=complex)

    def unit(self) -> np.ndarray:
        e = self.zero()
        e[: self.m] = 1.0
        return e

    def basis(self, r: int) -> np.ndarray:
        if not 1 <= r <= self.n:
            raise IndexError(f"basis index {r} outside 1..{self.n}")
        e = self.zero()
        e[r - 1] = 1.0
        return e

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b) -> np.ndarray:
        return self.element(a) + self.element(b)

    def scale(self, lam: complex, a) -> np.ndarray:
        return complex(lam) * self.element(a)

    def mul(self, a, b) -> np.ndarray:
        """Product by the three multiplication rules.

        Every coefficient is accumulated from symmetric pair sums, so
        ``mul(a, b)`` and ``mul(b, a)`` agree bit for bit.
        """
        a, b = np.broadcast_arrays(self.element(a), self.element(b))
        c = np.zeros(a.shape, dtype=complex)
        m = self.m
        c[:m] = a[:m] * b[:m]
        if self.semi_simple:
            return c
        rad, ru = self._rad, self._rad_u
        c[rad] = a[ru] * b[rad] + a[rad] * b[ru]
        if self._ups_c.size:
            r, s, p, coef = self._ups_r, self._ups_s, self._ups_p, self._ups_c
            extra = (coef.size,) + (1,) * (a.ndim - 1)
            pair = np.where(
                (r == s).reshape(extra),
                a[r] * b[s],
                a[r] * b[s] + a[s] * b[r],
            )
            np.add.at(c, p, coef.reshape(extra) * pair)
        return c

    def power(self, a, k: int) -> np.ndarray:
        if k < 0:
            raise ValueError("negative powers need invert()")
        a = self.element(a)
        out = self.unit().reshape((self.n,) + (1,) * (a.ndim - 1))
        for _ in range(k):
            out = self.mul(out, a)
        return np.broadcast_to(out, a.shape).copy()

    def polyval(self, coeffs, a) -> np.ndarray:
        """Evaluate ``sum c_j a^j`` (ascending coefficients) by Horner's rule."""
        a = self.element(a)
        out = np.zeros_like(a)
        unit = self.unit().reshape((self.n,) + (1,) * (a.ndim - 1))
        for c in reversed(list(coeffs)):
            out = self.mul(out, a) + complex(c) * unit
        return out

    # -- functionals and projections ---------------------------------------

    def f(self, u: int, a) -> complex:
        """Multiplicative functional ``f_u``: the ``I_u`` coefficient."""
        if not 1 <= u <= self.m:
            raise IndexError(f"functional index {u} outside 1..{self.m}")
        return self.element(a)[u - 1]

    def radical_project(self, a) -> np.ndarray:
        out = self.element(a).copy()
        out[: self.m] = 0
        return out

    def is_invertible(self, a, tol: float = TOL_ZERO) -> bool:
        a = self.element(a)
        return bool(np.all(np.abs(a[: self.m]) > tol))

    # -- dense forms (used as oracles) -------------------------------------

    def structure_tensor(self) -> np.ndarray:
        """Dense ``C[r, s, p]``: coefficient of ``I_p`` in ``I_r I_s`` (0-based)."""
        n, m = self.n, self.m
        C = np.zeros((n, n, n), dtype=complex)
        for u in range(m):
            C[u, u, u] = 1.0
        for s, u in self.u_map.items():
            C[u - 1, s - 1, s - 1] = 1.0
            C[s - 1, u - 1, s - 1] = 1.0
        for (r, s, p), c in self.upsilon.items():
            C[r - 1, s - 1, p - 1] = c
            C[s - 1, r - 1, p - 1] = c
        return C

    def multiplication_matrix(self, a) -> np.ndarray:
        """Matrix ``M(a)`` with ``M(a) @ b`` equal to the product ``a b``."""
        return np.einsum("r,rsp->ps", self.element(a), self.structure_tensor())

    def __repr__(self):
        return f"AlgebraSpec(m={self.m}, n={self.n}, upsilon={dict(self.upsilon)}, u_map={dict(self.u_map)})"


@dataclass
class Violation:
    kind: str  # "A1", "A2" or "prop2"
    indices: tuple[int, int, int]
    residual: float

    def as_dict(self):
        return {"kind": self.kind, "indices": list(self.indices), "residual": self.residual}


@dataclass
class ValidationReport:
    valid: bool
    semi_simple: bool
    prop1_case: bool
    prop2_case: bool
    violations: list[Violation]

    def as_dict(self):
        return {
            "valid": self.valid,
            "semi_simple": self.semi_simple,
            "prop1_case": self.prop1_case,
            "prop2_case": self.prop2_case,
            "violations": [v.as_dict() for v in self.violations],
        }


def validate_algebra(spec: AlgebraSpec, tol: float = TOL_ZERO) -> ValidationReport:
    """Brute-force check of both associativity families on basis triples.

    (A2) is checked even when all ``u_s`` coincide, where it is known to hold.
    """
    C = spec.structure_tensor()
    # left[r, s, p, :] = (I_r I_s) I_p ; right[r, s, p, :] = I_r (I_s I_p)
    left = np.einsum("rsq,qpt->rspt", C, C)
    right = np.einsum("spq,rqt->rspt", C, C)
    diff = np.abs(left - right).max(axis=-1)

    violations = []
    rad = list(spec.radical_indices)
    for r in rad:
        for s in rad:
            for p in rad:
                d = diff[r - 1, s - 1, p - 1]
                if d > tol:
                    violations.append(Violation("A1", (r, s, p), float(d)))
    for u in range(1, spec.m + 1):
        for s in rad:
            for p in rad:
                d = diff[u - 1, s - 1, p - 1]
                if d > tol:
                    violations.append(Violation("A2", (u, s, p), float(d)))
    if spec.prop2_case:
        for key, c in spec.upsilon.items():
            if abs(c) > tol:
                violations.append(Violation("prop2", key, float(abs(c))))

    return ValidationReport(
        valid=not violations,
        semi_simple=spec.semi_simple,
        prop1_case=spec.prop1_case,
        prop2_case=spec.prop2_case,
        violations=violations,
    )
