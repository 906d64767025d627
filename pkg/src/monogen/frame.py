"""Real-linear frames ``e_1 = 1, e_2, ..., e_k`` and the variable they span."""

from __future__ import annotations

import numpy as np

from .algebra import TOL_ZERO, AlgebraSpec


class FrameError(ValueError):
    pass


class VariableFrame:
    """The vectors ``e_1 = 1, e_2, ..., e_k`` of an algebra.

    ``vectors`` holds the rows ``a_{j1}, ..., a_{jn}`` of ``e_2, ..., e_k``;
    ``e_1`` is always the unit.  With ``strict`` the frame must be linearly
    independent over the reals.
    """

    def __init__(self, spec: AlgebraSpec, vectors, strict: bool = True):
        a = np.atleast_2d(np.asarray(vectors, dtype=complex))
        if a.ndim != 2 or a.shape[1] != spec.n:
            raise FrameError(f"frame rows must have {spec.n} coefficients, got shape {a.shape}")
        k = a.shape[0] + 1
        if not 2 <= k <= 2 * spec.n:
            raise FrameError(f"need 2 <= k <= 2n = {2 * spec.n}, got k = {k}")
        self.spec = spec
        self.a = a
        self.a.setflags(write=False)
        if strict and not self.independent:
            raise FrameError(f"the {k} frame vectors are linearly dependent over the reals")

    @property
    def k(self) -> int:
        return self.a.shape[0] + 1

    def vectors(self) -> np.ndarray:
        """All ``k`` frame vectors as rows, ``e_1`` first."""
        return np.vstack([self.spec.unit(), self.a])

    def e(self, j: int) -> np.ndarray:
        if not 1 <= j <= self.k:
            raise IndexError(f"frame index {j} outside 1..{self.k}")
        return self.spec.unit() if j == 1 else self.a[j - 2].copy()

    @property
    def rank(self) -> int:
        E = self.vectors()
        return int(np.linalg.matrix_rank(np.hstack([E.real, E.imag]).T))

    @property
    def independent(self) -> bool:
        return self.rank == self.k

    def _x(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.k,):
            raise ValueError(f"point must have {self.k} real coordinates, got shape {x.shape}")
        return x

    def zeta(self, x) -> np.ndarray:
        """The algebra element ``sum_j x_j e_j``."""
        x = self._x(x)
        return x @ self.vectors()

    def xi(self, u: int, x) -> complex:
        """``xi_u = f_u(zeta) = x_1 + sum_j x_j a_{ju}``."""
        if not 1 <= u <= self.spec.m:
            raise IndexError(f"idempotent index {u} outside 1..{self.spec.m}")
        x = self._x(x)
        return complex(x[0] + x[1:] @ self.a[:, u - 1])

    def xis(self, x) -> np.ndarray:
        x = self._x(x)
        return x[0] + x[1:] @ self.a[:, : self.spec.m]

    def radical_part(self, x) -> np.ndarray:
        """``T_s = sum_{j >= 2} x_j a_{js}`` for each radical index, in order."""
        x = self._x(x)
        return x[1:] @ self.a[:, self.spec.m :]

    def surjectivity_check(self, tol: float = TOL_ZERO) -> list[bool]:
        """Per idempotent, whether ``f_u`` maps the span onto the whole plane.

        That happens exactly when some ``a_{ju}`` has a nonzero imaginary part.
        """
        im = np.abs(self.a[:, : self.spec.m].imag)
        return [bool(np.any(im[:, u] > tol)) for u in range(self.spec.m)]

    def __repr__(self):
        return f"VariableFrame(k={self.k}, n={self.spec.n})"
