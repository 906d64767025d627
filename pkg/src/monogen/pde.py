"""Constant-coefficient PDEs whose solutions are components of monogenic functions.

For ``L = sum_alpha C_alpha d^N / dx^alpha`` and a monogenic ``Phi`` one has
``L Phi = Phi^{(N)}(zeta) * sum_alpha C_alpha e_2^{alpha_2} ... e_k^{alpha_k}``,
so every real and imaginary component of ``Phi`` solves ``L U = 0`` as soon as
the characteristic sum vanishes in the algebra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .frame import VariableFrame


class PDESpecError(ValueError):
    pass


@dataclass(frozen=True)
class PDESpec:
    """Homogeneous operator of order ``N``; ``terms`` maps multi-indices to real coefficients."""

    N: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        terms = {}
        k = None
        for alpha, c in dict(self.terms).items():
            alpha = tuple(int(a) for a in alpha)
            if any(a < 0 for a in alpha):
                raise PDESpecError(f"negative exponent in {alpha}")
            if sum(alpha) != self.N:
                raise PDESpecError(f"multi-index {alpha} has order {sum(alpha)}, expected {self.N}")
            if k is not None and len(alpha) != k:
                raise PDESpecError("all multi-indices must have the same length")
            k = len(alpha)
            if isinstance(c, complex) and c.imag != 0:
                raise PDESpecError("coefficients must be real")
            terms[alpha] = terms.get(alpha, 0.0) + float(np.real(c))
        if not any(c != 0 for c in terms.values()):
            raise PDESpecError("at least one coefficient must be nonzero")
        object.__setattr__(self, "terms", terms)

    @property
    def k(self) -> int:
        return len(next(iter(self.terms)))

    @classmethod
    def laplace(cls, k: int) -> "PDESpec":
        return cls(2, {tuple(2 if i == j else 0 for i in range(k)): 1.0 for j in range(k)})


def characteristic_sum(pde: PDESpec, frame: VariableFrame) -> np.ndarray:
    """``sum C_alpha e_2^{alpha_2} ... e_k^{alpha_k}`` in the algebra (powers of ``e_1`` are the unit)."""
    if pde.k != frame.k:
        raise ValueError(f"operator acts on {pde.k} variables, frame has k = {frame.k}")
    spec = frame.spec
    total = spec.zero()
    for alpha, c in pde.terms.items():
        mono = spec.unit()
        for j, a in enumerate(alpha[1:], start=2):
            e = frame.e(j)
            for _ in range(a):
                mono = spec.mul(mono, e)
        total = spec.add(total, spec.scale(c, mono))
    return total


def p_polynomial_eval(pde: PDESpec, b):
    """``P(b_2, ..., b_k) = sum C_alpha b_2^{alpha_2} ... b_k^{alpha_k}``.

    ``b`` may hold complex numbers or arrays (evaluated elementwise); the
    multiplication order mirrors :func:`characteristic_sum`.
    """
    b = [np.asarray(v) for v in b]
    if len(b) != pde.k - 1:
        raise ValueError(f"need {pde.k - 1} arguments, got {len(b)}")
    total = 0
    for alpha, c in pde.terms.items():
        mono = 1.0
        for bj, a in zip(b, alpha[1:]):
            for _ in range(a):
                mono = mono * bj
        total = total + c * mono
    return total


@dataclass
class ScanReport:
    min_abs: float
    argmin: list[float]
    min_value: float
    max_value: float
    sign_change: bool
    verdict: str  # "no_root_found" | "sign_change_found"
    grid_points: list[int]
    note: str = "heuristic grid scan; cannot prove that P never vanishes"

    def as_dict(self):
        return dict(self.__dict__)


def p_nonvanishing_scan(pde: PDESpec, box, grid_points=11) -> ScanReport:
    """Evaluate ``P`` on a tensor grid over ``box`` (one ``(lo, hi)`` per argument)."""
    box = [tuple(map(float, iv)) for iv in box]
    if len(box) != pde.k - 1:
        raise ValueError(f"box needs {pde.k - 1} intervals, got {len(box)}")
    pts = [int(grid_points)] * len(box) if np.isscalar(grid_points) else [int(g) for g in grid_points]
    if any(g < 2 for g in pts):
        raise ValueError("need at least 2 grid points per axis")
    axes = [np.linspace(lo, hi, g) for (lo, hi), g in zip(box, pts)]
    mesh = np.meshgrid(*axes, indexing="ij") if axes else []
    vals = np.real(np.broadcast_to(p_polynomial_eval(pde, mesh), tuple(pts)))
    idx = np.unravel_index(np.argmin(np.abs(vals)), vals.shape)
    vmin, vmax = float(vals.min()), float(vals.max())
    sign_change = bool(vmin <= 0 <= vmax)
    return ScanReport(
        min_abs=float(np.abs(vals[idx])),
        argmin=[float(ax[i]) for ax, i in zip(axes, idx)],
        min_value=vmin,
        max_value=vmax,
        sign_change=sign_change,
        verdict="sign_change_found" if sign_change else "no_root_found",
        grid_points=pts,
    )


@dataclass
class Theorem4Report:
    characteristic_sum: list
    characteristic_sum_norm: float
    characteristic_equation_holds: bool
    frame_independent: bool
    p_scan: ScanReport
    hypotheses_hold: bool
    surjective: list[bool]
    per_u_sums: list[complex]
    per_u_sums_vanish: list[bool]
    conclusion_holds: bool
    consistent: bool

    def as_dict(self):
        d = dict(self.__dict__)
        d["p_scan"] = self.p_scan.as_dict()
        d["characteristic_sum"] = [[z.real, z.imag] for z in self.characteristic_sum]
        d["per_u_sums"] = [[z.real, z.imag] for z in self.per_u_sums]
        return d


def theorem4_check(pde: PDESpec, frame: VariableFrame, box=None, grid_points=11, tol: float = 1e-10) -> Theorem4Report:
    """Check each hypothesis and the conclusion of the nonvanishing criterion.

    Hypotheses: independent frame, vanishing characteristic sum, ``P`` free of
    real roots (grid heuristic).  Conclusion: every ``f_u`` is onto the plane.
    The per-idempotent sums ``P(a_{2u}, ..., a_{ku})`` must vanish whenever the
    characteristic sum does.
    """
    cs = characteristic_sum(pde, frame)
    norm = float(np.max(np.abs(cs)))
    if box is None:
        box = [(-10.0, 10.0)] * (pde.k - 1)
    scan = p_nonvanishing_scan(pde, box, grid_points)
    per_u = [complex(p_polynomial_eval(pde, frame.a[:, u])) for u in range(frame.spec.m)]
    surj = frame.surjectivity_check()
    char_ok = norm <= tol
    hyp = char_ok and frame.independent and scan.verdict == "no_root_found"
    concl = all(surj)
    return Theorem4Report(
        characteristic_sum=[complex(z) for z in cs],
        characteristic_sum_norm=norm,
        characteristic_equation_holds=char_ok,
        frame_independent=frame.independent,
        p_scan=scan,
        hypotheses_hold=hyp,
        surjective=surj,
        per_u_sums=per_u,
        per_u_sums_vanish=[abs(v) <= tol for v in per_u],
        conclusion_holds=concl,
        consistent=(not hyp) or concl,
    )


def central_stencil(order: int) -> dict[int, float]:
    """Second-order accurate central weights (unit spacing) for ``d^order/dx^order``."""
    first = {-1: -0.5, 1: 0.5}
    second = {-1: 1.0, 0: -2.0, 1: 1.0}

    def compose(a, b):
        out = {}
        for i, wa in a.items():
            for j, wb in b.items():
                out[i + j] = out.get(i + j, 0.0) + wa * wb
        return {k: v for k, v in out.items() if v != 0}

    st = {0: 1.0}
    for _ in range(order // 2):
        st = compose(st, second)
    if order % 2:
        st = compose(st, first)
    return st


@dataclass
class PDEResidual:
    residual: float
    applied: np.ndarray  # L applied to Phi, an algebra element
    h: float

    def as_dict(self):
        return {"residual": self.residual, "h": self.h,
                "applied": [[z.real, z.imag] for z in self.applied]}


def apply_operator(func, pde: PDESpec, x, h: float) -> np.ndarray:
    """Tensor-product central differences of ``func`` (any map ``R^k -> algebra``)."""
    x = np.asarray(x, dtype=float)
    if x.shape != (pde.k,):
        raise ValueError(f"point needs {pde.k} coordinates")
    cache = {}

    def at(offset):
        if offset not in cache:
            cache[offset] = func(x + h * np.asarray(offset, dtype=float))
        return cache[offset]

    total = 0
    for alpha, c in pde.terms.items():
        stencils = [central_stencil(a) for a in alpha]
        acc = 0
        for combo in itertools.product(*(s.items() for s in stencils)):
            offset = tuple(o for o, _ in combo)
            w = np.prod([wt for _, wt in combo])
            acc = acc + w * at(offset)
        total = total + c * acc / h**pde.N
    return np.asarray(total, dtype=complex)


def check_pde_residual(func, pde: PDESpec, x, h: float | None = None) -> PDEResidual:
    """Largest ``|L Re U_r|`` or ``|L Im U_r|`` over the basis components."""
    x = np.asarray(x, dtype=float)
    if h is None:
        h = 1e-2 * (1 + float(np.max(np.abs(x))))
    applied = apply_operator(func, pde, x, h)
    res = float(max(np.max(np.abs(applied.real)), np.max(np.abs(applied.imag))))
    return PDEResidual(res, applied, h)
