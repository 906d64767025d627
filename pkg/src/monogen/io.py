"""JSON formats for algebras, frames, functions, elements and operators.

Complex numbers are read as ``{"re": .., "im": ..}``, ``[re, im]`` or a bare
real number, and always written as ``{"re": .., "im": ..}``.
"""

from __future__ import annotations

import json
import os
from typing import Any

import numpy as np

from .algebra import AlgebraSpec, AlgebraSpecError
from .frame import FrameError, VariableFrame
from .holomorphic import HolomorphicFn, Term
from .monogenic import MonogenicFunction
from .pde import PDESpec, PDESpecError


class InputError(ValueError):
    """Unreadable or malformed input; carries the source and the JSON path."""

    def __init__(self, msg: str, source: str = "<inline>", path: str = "$", line: int | None = None):
        where = source if line is None else f"{source}:{line}"
        super().__init__(f"{where}: {path}: {msg}")
        self.source = source
        self.path = path
        self.line = line
        self.msg = msg

    def as_dict(self):
        return {"error": self.msg, "file": self.source, "path": self.path, "line": self.line}


def load_json(arg: str) -> tuple[Any, str]:
    """Parse ``arg`` as a file path, or as inline JSON when it starts with ``{`` or ``[``."""
    text = arg.strip()
    if text[:1] in "{[":
        source, raw = "<inline>", text
    else:
        source = arg
        if not os.path.exists(arg):
            raise InputError("file not found", source)
        with open(arg) as fh:
            raw = fh.read()
    try:
        return json.loads(raw), source
    except json.JSONDecodeError as exc:
        raise InputError(exc.msg, source, "$", exc.lineno) from None


def parse_complex(v, source="<inline>", path="$") -> complex:
    if isinstance(v, bool):
        raise InputError("expected a complex number", source, path)
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, dict) and set(v) <= {"re", "im"}:
        try:
            return complex(float(v.get("re", 0.0)), float(v.get("im", 0.0)))
        except (TypeError, ValueError):
            raise InputError("re/im must be numbers", source, path) from None
    if isinstance(v, (list, tuple)) and len(v) == 2 and all(isinstance(c, (int, float)) for c in v):
        return complex(float(v[0]), float(v[1]))
    raise InputError('expected {"re":..,"im":..} or [re, im]', source, path)


def emit_complex(z) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def emit_element(a) -> list[dict]:
    return [emit_complex(z) for z in np.asarray(a).ravel()]


def _field(obj, key, source, path, kind=None):
    if not isinstance(obj, dict):
        raise InputError("expected an object", source, path)
    if key not in obj:
        raise InputError(f"missing field '{key}'", source, f"{path}.{key}")
    val = obj[key]
    if kind is not None and not isinstance(val, kind):
        raise InputError(f"field '{key}' has the wrong type", source, f"{path}.{key}")
    return val


def algebra_from_json(obj, source="<inline>") -> AlgebraSpec:
    m = _field(obj, "m", source, "$", int)
    n = _field(obj, "n", source, "$", int)
    ups = {}
    for i, e in enumerate(obj.get("upsilon", []) or []):
        p = f"$.upsilon[{i}]"
        key = tuple(_field(e, f, source, p, int) for f in ("r", "s", "p"))
        if "value" in e:
            val = parse_complex(e["value"], source, f"{p}.value")
        else:
            val = parse_complex({k: e[k] for k in ("re", "im") if k in e}, source, p)
        ups[key] = val
    umap_raw = obj.get("u_map", {}) or {}
    if not isinstance(umap_raw, dict):
        raise InputError("u_map must be an object", source, "$.u_map")
    try:
        umap = {int(s): int(u) for s, u in umap_raw.items()}
    except (TypeError, ValueError):
        raise InputError("u_map keys and values must be integers", source, "$.u_map") from None
    try:
        return AlgebraSpec(m, n, ups, umap)
    except AlgebraSpecError as exc:
        raise InputError(str(exc), source, "$") from None


def algebra_to_json(spec: AlgebraSpec) -> dict:
    return {
        "m": spec.m,
        "n": spec.n,
        "upsilon": [{"r": r, "s": s, "p": p, **emit_complex(c)} for (r, s, p), c in spec.upsilon.items()],
        "u_map": {str(s): u for s, u in spec.u_map.items()},
    }


def frame_from_json(obj, spec: AlgebraSpec, source="<inline>", strict=True) -> VariableFrame:
    vecs = _field(obj, "vectors", source, "$", list)
    rows = []
    for j, row in enumerate(vecs):
        if not isinstance(row, list):
            raise InputError("frame vector must be a list", source, f"$.vectors[{j}]")
        rows.append([parse_complex(c, source, f"$.vectors[{j}][{r}]") for r, c in enumerate(row)])
    if "k" in obj and obj["k"] != len(rows) + 1:
        raise InputError(f"k = {obj['k']} but {len(rows)} vectors besides e_1 were given", source, "$.k")
    try:
        return VariableFrame(spec, rows, strict=strict)
    except FrameError as exc:
        raise InputError(str(exc), source, "$.vectors") from None


def frame_to_json(frame: VariableFrame) -> dict:
    return {"k": frame.k, "vectors": [emit_element(row) for row in frame.a]}


def function_from_json(obj, source="<inline>", path="$") -> HolomorphicFn:
    terms = []
    for i, t in enumerate(_field(obj, "terms", source, path, list)):
        p = f"{path}.terms[{i}]"
        poly = [parse_complex(c, source, f"{p}.poly[{j}]") for j, c in enumerate(_field(t, "poly", source, p, list))]
        lam = t.get("exp_lambda")
        terms.append(Term(tuple(poly) or (0j,), None if lam is None else parse_complex(lam, source, f"{p}.exp_lambda")))
    return HolomorphicFn(terms)


def function_to_json(f: HolomorphicFn) -> dict:
    return {
        "terms": [
            {"poly": [[c.real, c.imag] for c in t.poly], "exp_lambda": None if t.lam is None else [t.lam.real, t.lam.imag]}
            for t in f.terms
        ]
    }


def monogenic_from_json(obj, frame: VariableFrame, source="<inline>") -> MonogenicFunction:
    F = [function_from_json(f, source, f"$.F[{i}]") for i, f in enumerate(_field(obj, "F", source, "$", list))]
    G = obj.get("G")
    if G is not None:
        G = [function_from_json(g, source, f"$.G[{i}]") for i, g in enumerate(G)]
    try:
        return MonogenicFunction(frame, F, G)
    except ValueError as exc:
        raise InputError(str(exc), source, "$") from None


def monogenic_to_json(mf: MonogenicFunction) -> dict:
    return {"F": [function_to_json(f) for f in mf.F], "G": [function_to_json(g) for g in mf.G]}


def element_from_json(obj, spec: AlgebraSpec, source="<inline>") -> np.ndarray:
    if isinstance(obj, dict):
        obj = _field(obj, "coeffs", source, "$", list)
    if not isinstance(obj, list) or len(obj) != spec.n:
        raise InputError(f"element needs {spec.n} coefficients", source, "$")
    return np.array([parse_complex(c, source, f"$[{i}]") for i, c in enumerate(obj)], dtype=complex)


def pde_from_json(obj, source="<inline>") -> PDESpec:
    N = _field(obj, "N", source, "$", int)
    terms = {}
    for i, t in enumerate(_field(obj, "terms", source, "$", list)):
        p = f"$.terms[{i}]"
        alpha = tuple(_field(t, "alpha", source, p, list))
        c = _field(t, "c", source, p)
        if isinstance(c, bool) or not isinstance(c, (int, float)):
            raise InputError("coefficient must be a real number", source, f"{p}.c")
        terms[alpha] = terms.get(alpha, 0.0) + float(c)
    try:
        return PDESpec(N, terms)
    except PDESpecError as exc:
        raise InputError(str(exc), source, "$") from None


def pde_to_json(pde: PDESpec) -> dict:
    return {"N": pde.N, "terms": [{"alpha": list(a), "c": c} for a, c in pde.terms.items()]}


_COMPLEX = {
    "oneOf": [
        {"type": "object", "properties": {"re": {"type": "number"}, "im": {"type": "number"}}, "additionalProperties": False},
        {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
        {"type": "number"},
    ]
}

SCHEMAS = {
    "algebra": {
        "type": "object",
        "required": ["m", "n"],
        "properties": {
            "m": {"type": "integer", "minimum": 1},
            "n": {"type": "integer", "minimum": 1},
            "upsilon": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["r", "s", "p"],
                    "properties": {"r": {"type": "integer"}, "s": {"type": "integer"}, "p": {"type": "integer"},
                                   "re": {"type": "number"}, "im": {"type": "number"}, "value": _COMPLEX},
                },
            },
            "u_map": {"type": "object", "additionalProperties": {"type": "integer"}},
        },
    },
    "frame": {
        "type": "object",
        "required": ["vectors"],
        "properties": {"k": {"type": "integer", "minimum": 2},
                       "vectors": {"type": "array", "items": {"type": "array", "items": _COMPLEX}}},
    },
    "function": {
        "type": "object",
        "required": ["terms"],
        "properties": {"terms": {"type": "array", "items": {
            "type": "object", "required": ["poly"],
            "properties": {"poly": {"type": "array", "items": _COMPLEX},
                           "exp_lambda": {"oneOf": [_COMPLEX, {"type": "null"}]}}}}},
    },
    "monogenic": {
        "type": "object",
        "required": ["F"],
        "properties": {"F": {"type": "array", "items": {"$ref": "#/function"}},
                       "G": {"type": "array", "items": {"$ref": "#/function"}}},
    },
    "element": {"type": "array", "items": _COMPLEX},
    "pde": {
        "type": "object",
        "required": ["N", "terms"],
        "properties": {"N": {"type": "integer", "minimum": 1},
                       "terms": {"type": "array", "items": {
                           "type": "object", "required": ["alpha", "c"],
                           "properties": {"alpha": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                                          "c": {"type": "number"}}}}},
    },
}
