"""Inverses and the resolvent ``(t e_1 - zeta)^{-1}`` via the radical recurrences.

For an element split as ``D + N`` (``D`` semisimple, ``N`` in the radical),
the coefficient of ``I_s`` in ``N^{r-1}`` is built by the recurrence

    Q[2, s] = N_s
    B[q, s] = sum_{p=m+1}^{s-1} N_p * c(q, p -> s)
    Q[r, s] = sum_{q=r+m-2}^{s-1} Q[r-1, q] * B[q, s],   r = 3 .. s-m+1

where ``c(q, p -> s)`` is the ``I_s`` coefficient of ``I_q I_p``.  Both the
inverse and the resolvent are geometric series in ``D^{-1} N`` and only need
these coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import TOL_ZERO, AlgebraSpec
from .frame import VariableFrame


class NotInvertible(ArithmeticError):
    def __init__(self, u: int):
        super().__init__(f"f_{u} of the element vanishes; it is not invertible")
        self.u = u


class PoleAt(ArithmeticError):
    def __init__(self, u: int, t, xi):
        super().__init__(f"t = {t} coincides with xi_{u} = {xi}")
        self.u = u


@dataclass
class QTable:
    """Recurrence coefficients for one radical vector ``N`` (1-based keys)."""

    T: dict[int, complex] = field(default_factory=dict)
    B: dict[tuple[int, int], complex] = field(default_factory=dict)
    Q: dict[tuple[int, int], complex] = field(default_factory=dict)

    def __getitem__(self, rs):
        return self.Q.get(rs, 0j)

    def __len__(self):
        return len(self.Q)

    def orders(self, s: int):
        """``(r, Q[r, s])`` pairs for one radical index, ascending in ``r``."""
        return [(r, q) for (r, ss), q in self.Q.items() if ss == s]


def recurrence(spec: AlgebraSpec, radical) -> QTable:
    """Fill the ``T``/``B``/``Q`` tables for radical coefficients ``radical``.

    ``radical`` lists the ``I_{m+1}, ..., I_n`` coefficients of ``N``.
    """
    m, n = spec.m, spec.n
    T = {s: complex(v) for s, v in zip(range(m + 1, n + 1), radical)}
    ups = spec.upsilon

    def c(q, p, s):
        return ups.get((min(q, p), max(q, p), s), 0j)

    B = {}
    for s in range(m + 1, n + 1):
        for q in range(m + 1, s):
            B[(q, s)] = sum((T[p] * c(q, p, s) for p in range(m + 1, s)), 0j)

    Q = {}
    for s in range(m + 1, n + 1):
        Q[(2, s)] = T[s]
    for r in range(3, n - m + 2):
        for s in range(r + m - 1, n + 1):
            Q[(r, s)] = sum((Q[(r - 1, q)] * B[(q, s)] for q in range(r + m - 2, s)), 0j)
    # order the table by (s, r) for readable iteration
    Q = dict(sorted(Q.items(), key=lambda kv: (kv[0][1], kv[0][0])))
    return QTable(T=T, B=B, Q=Q)


def invert(b, spec: AlgebraSpec, tol: float = TOL_ZERO) -> np.ndarray:
    """Inverse of ``b`` from the recurrence, without any linear solve.

    With ``b = D + N`` one has ``b^{-1} = sum_k (-1)^k D^{-k-1} N^k``, so the
    recurrence is seeded with ``-b_s`` on the radical.
    """
    b = spec.element(b)
    for u in range(1, spec.m + 1):
        if abs(b[u - 1]) <= tol:
            raise NotInvertible(u)
    out = np.zeros(spec.n, dtype=complex)
    out[: spec.m] = 1.0 / b[: spec.m]
    if spec.semi_simple:
        return out
    table = recurrence(spec, -b[spec.m :])
    for (r, s), q in table.Q.items():
        out[s - 1] += q / b[spec.u(s) - 1] ** r
    return out


def q_table(frame: VariableFrame, x) -> QTable:
    """Resolvent coefficients at the point ``x`` (``T_s`` from the frame)."""
    return recurrence(frame.spec, frame.radical_part(x))


def resolvent(t, frame: VariableFrame, x, table: QTable | None = None, tol: float = TOL_ZERO) -> np.ndarray:
    """``(t e_1 - zeta(x))^{-1}``.

    ``t`` may be an array, in which case the result has shape ``(n,) + t.shape``.
    """
    spec = frame.spec
    t = np.asarray(t, dtype=complex)
    xis = frame.xis(x)
    for u, xi in enumerate(xis, start=1):
        if np.any(np.abs(t - xi) <= tol):
            raise PoleAt(u, t if t.ndim == 0 else "array value", xi)
    if table is None:
        table = q_table(frame, x)
    out = np.zeros((spec.n,) + t.shape, dtype=complex)
    inv = 1.0 / (t[None, ...] - xis.reshape((-1,) + (1,) * t.ndim))
    out[: spec.m] = inv
    for (r, s), q in table.Q.items():
        out[s - 1] += q * inv[spec.u(s) - 1] ** r
    return out


@dataclass
class DegenerateSet:
    """Real points ``x`` with ``f_u(zeta(x)) = 0``: ``rows @ x == 0``."""

    u: int
    rows: np.ndarray  # shape (2, k)

    def contains(self, x, tol: float = 1e-10) -> bool:
        return bool(np.all(np.abs(self.rows @ np.asarray(x, dtype=float)) <= tol))

    def kernel(self) -> np.ndarray:
        """Orthonormal basis of the solution space, one column per direction."""
        from scipy.linalg import null_space

        return null_space(self.rows)


def degenerate_set(frame: VariableFrame, u: int) -> DegenerateSet:
    if not 1 <= u <= frame.spec.m:
        raise IndexError(f"idempotent index {u} outside 1..{frame.spec.m}")
    col = frame.a[:, u - 1]
    rows = np.zeros((2, frame.k))
    rows[0, 0] = 1.0
    rows[0, 1:] = col.real
    rows[1, 1:] = col.imag
    return DegenerateSet(u=u, rows=rows)
