"""Command-line front end.

Every subcommand prints one JSON document on stdout.  Exit status is 0 when
the command succeeds and all its checks pass, 1 when a check fails, 2 on
unusable input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

import numpy as np

from . import io
from .acceptance import run_all
from .algebra import TOL_ZERO, validate_algebra
from .monogenic import (
    ContourDegenerate,
    GridSpec,
    check_cauchy_riemann,
    eval_monogenic,
    eval_monogenic_contour,
    gateaux_derivative,
)
from .pde import characteristic_sum, check_pde_residual, p_nonvanishing_scan, theorem4_check
from .resolvent import NotInvertible, PoleAt, invert, q_table, resolvent

log = logging.getLogger("monogen")

# which inputs each subcommand reads
NEEDS = {
    "validate": {"algebra"},
    "invert": {"algebra", "element"},
    "resolvent": {"algebra", "frame", "point", "t"},
    "eval": {"algebra", "frame", "function", "points"},
    "eval-contour": {"algebra", "frame", "function", "points"},
    "derive": {"algebra", "frame", "function"},
    "check-cr": {"algebra", "frame", "function", "points"},
    "char-eq": {"algebra", "frame", "pde"},
    "p-scan": {"pde", "box"},
    "check-pde": {"algebra", "frame", "function", "pde", "points"},
    "theorem4": {"algebra", "frame", "pde"},
    "selftest": set(),
}


class CheckFailed(Exception):
    def __init__(self, report):
        self.report = report


def _complex_arg(text: str) -> complex:
    parts = [float(p) for p in text.split(",")]
    if len(parts) == 1:
        return complex(parts[0])
    if len(parts) == 2:
        return complex(parts[0], parts[1])
    raise argparse.ArgumentTypeError(f"expected 're' or 're,im', got {text!r}")


def _range_arg(text: str):
    parts = text.split(":")
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi or lo:hi:count, got {text!r}") from None
    if len(vals) == 2:
        return vals[0], vals[1], None
    if len(vals) == 3 and vals[2] == int(vals[2]) and vals[2] >= 1:
        return vals[0], vals[1], int(vals[2])
    raise argparse.ArgumentTypeError(f"expected lo:hi or lo:hi:count, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--tol-zero", type=float, default=TOL_ZERO, help="zero tolerance for invertibility and poles")
    common.add_argument("--tol-check", type=float, default=None, help="pass/fail threshold for residual checks")
    common.add_argument("--fd-step", type=float, default=None, help="finite-difference step")
    common.add_argument("--quad-nodes", type=int, default=256, help="initial contour quadrature nodes")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")

    parser = argparse.ArgumentParser(prog="monogen", description=__doc__.splitlines()[0], parents=[common], allow_abbrev=False)
    parser.add_argument("--emit-schema", action="store_true", help="print the input JSON schemas and exit")
    sub = parser.add_subparsers(dest="command")

    def add(name, help_):
        p = sub.add_parser(name, help=help_, parents=[common], allow_abbrev=False)
        needs = NEEDS[name]
        if "algebra" in needs:
            p.add_argument("algebra", help="algebra spec (file or inline JSON)")
        if "element" in needs:
            p.add_argument("--element", required=True, help="element coefficients (file or inline JSON)")
        if "frame" in needs:
            p.add_argument("--frame", required=True, help="frame spec (file or inline JSON)")
        if "function" in needs:
            p.add_argument("--function", required=True, help='monogenic function spec {"F": [...], "G": [...]}')
        if "pde" in needs:
            p.add_argument("--pde", required=True, help="PDE spec (file or inline JSON)")
        if "point" in needs or "points" in needs:
            p.add_argument("--x", type=float, nargs="+", help="a single point x_1 .. x_k")
        if "points" in needs:
            p.add_argument("--grid", type=_range_arg, action="append", help="lo:hi:count, once per coordinate")
            p.add_argument("--assume-convex", action="store_true",
                           help="record that the caller asserts the domain convexity hypothesis")
        if "t" in needs:
            p.add_argument("--t", type=_complex_arg, required=True, help="re or re,im")
        if "box" in needs or name == "theorem4":
            p.add_argument("--box", type=_range_arg, action="append", help="lo:hi, once per argument of P")
            p.add_argument("--points", type=int, default=11, help="grid points per axis")
        if name == "derive":
            p.add_argument("--order", type=int, default=1)
            p.add_argument("--x", type=float, nargs="+", help="optionally evaluate the derivative here")
        return p

    add("validate", "check associativity and structural rules of an algebra")
    add("invert", "invert an element by the radical recurrence")
    add("resolvent", "resolvent (t - zeta)^-1 at a point")
    add("eval", "evaluate a monogenic function (closed form)")
    add("eval-contour", "evaluate a monogenic function by contour quadrature")
    add("derive", "Gateaux derivative of a monogenic function")
    add("check-cr", "finite-difference Cauchy-Riemann residuals")
    add("char-eq", "characteristic sum of a PDE on a frame")
    add("p-scan", "grid scan of the characteristic polynomial for real roots")
    add("check-pde", "finite-difference PDE residual of the components")
    add("theorem4", "check the surjectivity criterion for a PDE and frame")
    add("selftest", "run the bundled fixture checks")
    return parser


def _points(args, frame):
    if getattr(args, "grid", None):
        ranges = [(lo, hi) for lo, hi, _ in args.grid]
        steps = [c or 1 for _, _, c in args.grid]
        if len(ranges) != frame.k:
            raise io.InputError(f"grid needs {frame.k} ranges, got {len(ranges)}", "<args>", "--grid")
        return GridSpec(ranges, steps).points()
    if args.x is None:
        raise io.InputError("give --x or --grid", "<args>", "--x")
    if len(args.x) != frame.k:
        raise io.InputError(f"point needs {frame.k} coordinates, got {len(args.x)}", "<args>", "--x")
    return np.array([args.x])


def load_inputs(args) -> dict:
    """Parse every referenced input before any computation."""
    out = {}
    needs = NEEDS[args.command]
    if "algebra" in needs:
        obj, src = io.load_json(args.algebra)
        out["algebra"] = io.algebra_from_json(obj, src)
    if "element" in needs:
        obj, src = io.load_json(args.element)
        out["element"] = io.element_from_json(obj, out["algebra"], src)
    if "frame" in needs:
        obj, src = io.load_json(args.frame)
        out["frame"] = io.frame_from_json(obj, out["algebra"], src, strict=args.command != "theorem4")
    if "function" in needs:
        obj, src = io.load_json(args.function)
        out["function"] = io.monogenic_from_json(obj, out["frame"], src)
    if "pde" in needs:
        obj, src = io.load_json(args.pde)
        out["pde"] = io.pde_from_json(obj, src)
        if "frame" in out and out["pde"].k != out["frame"].k:
            raise io.InputError(f"operator has k = {out['pde'].k}, frame has k = {out['frame'].k}", src, "$.terms")
    if "points" in needs:
        out["points"] = _points(args, out["frame"])
    if "point" in needs:
        out["points"] = _points(args, out["frame"])
    return out


def _emit_q(table):
    return {f"{r},{s}": io.emit_complex(q) for (r, s), q in table.Q.items()}


def dispatch(args, data) -> dict:
    cmd = args.command
    tol = args.tol_check
    if cmd == "validate":
        rep = validate_algebra(data["algebra"], args.tol_zero)
        out = rep.as_dict()
        if not rep.valid:
            raise CheckFailed(out)
        return out

    if cmd == "invert":
        spec, b = data["algebra"], data["element"]
        try:
            inv = invert(b, spec, args.tol_zero)
        except NotInvertible as exc:
            raise CheckFailed({"error": str(exc), "u": exc.u}) from None
        resid = float(np.max(np.abs(spec.mul(b, inv) - spec.unit())))
        return {"inverse": io.emit_element(inv), "identity_residual": resid}

    if cmd == "resolvent":
        frame, x = data["frame"], data["points"][0]
        table = q_table(frame, x)
        try:
            R = resolvent(args.t, frame, x, table=table, tol=args.tol_zero)
        except PoleAt as exc:
            raise CheckFailed({"error": str(exc), "u": exc.u}) from None
        return {"t": io.emit_complex(args.t), "x": list(x), "resolvent": io.emit_element(R), "Q": _emit_q(table)}

    if cmd in ("eval", "eval-contour"):
        mf = data["function"]
        rows = []
        for x in data["points"]:
            if cmd == "eval":
                val = eval_monogenic(mf, x)
            else:
                try:
                    val = eval_monogenic_contour(mf, x, nodes=args.quad_nodes)
                except ContourDegenerate as exc:
                    raise CheckFailed({"error": str(exc), "x": list(x)}) from None
            rows.append({"x": list(x), "value": io.emit_element(val)})
        return {"points": rows, "domain_convexity": "asserted by caller" if args.assume_convex else "not asserted"}

    if cmd == "derive":
        d = gateaux_derivative(data["function"], args.order)
        out = {"order": args.order, "function": io.monogenic_to_json(d)}
        if args.x is not None:
            out["value"] = io.emit_element(eval_monogenic(d, np.asarray(args.x)))
        return out

    if cmd == "check-cr":
        tol = 1e-7 if tol is None else tol
        rows = []
        for x in data["points"]:
            rep = check_cauchy_riemann(data["function"], x, args.fd_step)
            rows.append({"x": list(x), **rep.as_dict()})
        worst = max(r["max_residual"] for r in rows)
        out = {"points": rows, "max_residual": worst, "tolerance": tol, "passed": worst <= tol}
        if worst > tol:
            raise CheckFailed(out)
        return out

    if cmd == "char-eq":
        cs = characteristic_sum(data["pde"], data["frame"])
        norm = float(np.max(np.abs(cs)))
        tol = 1e-10 if tol is None else tol
        out = {"characteristic_sum": io.emit_element(cs), "norm": norm, "tolerance": tol, "vanishes": norm <= tol}
        if norm > tol:
            raise CheckFailed(out)
        return out

    if cmd == "p-scan":
        pde = data["pde"]
        box = [(lo, hi) for lo, hi, _ in args.box] if args.box else [(-10.0, 10.0)] * (pde.k - 1)
        rep = p_nonvanishing_scan(pde, box, args.points).as_dict()
        if rep["verdict"] != "no_root_found":
            raise CheckFailed(rep)
        return rep

    if cmd == "check-pde":
        tol = 1e-5 if tol is None else tol
        rows = []
        for x in data["points"]:
            rep = check_pde_residual(data["function"], data["pde"], x, args.fd_step)
            rows.append({"x": list(x), **rep.as_dict()})
        worst = max(r["residual"] for r in rows)
        out = {"points": rows, "max_residual": worst, "tolerance": tol, "passed": worst <= tol}
        if worst > tol:
            raise CheckFailed(out)
        return out

    if cmd == "theorem4":
        pde = data["pde"]
        box = [(lo, hi) for lo, hi, _ in args.box] if args.box else None
        rep = theorem4_check(pde, data["frame"], box, args.points, 1e-10 if tol is None else tol)
        out = rep.as_dict()
        if not (rep.hypotheses_hold and rep.conclusion_holds and all(rep.per_u_sums_vanish)):
            raise CheckFailed(out)
        return out

    if cmd == "selftest":
        results = run_all(args.seed)
        for r in results:
            log.info(r.line())
        out = {"seed": args.seed, "criteria": [r.as_dict() for r in results],
               "passed": all(r.passed for r in results)}
        if not out["passed"]:
            raise CheckFailed(out)
        return out

    raise AssertionError(cmd)


def _default(o):
    if isinstance(o, (np.floating, np.integer)):
        return o.item()
    if isinstance(o, np.bool_):
        return bool(o)
    if isinstance(o, (complex, np.complexfloating)):
        return io.emit_complex(o)
    if isinstance(o, np.ndarray):
        return o.tolist()
    raise TypeError(f"cannot serialise {type(o).__name__}")


def _print(obj, stream=None):
    json.dump(obj, stream or sys.stdout, default=_default, indent=2)
    (stream or sys.stdout).write("\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(message)s")
    if args.emit_schema:
        _print(io.SCHEMAS)
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        data = load_inputs(args)
    except io.InputError as exc:
        log.error(str(exc))
        _print(exc.as_dict())
        return 2
    try:
        out = dispatch(args, data)
    except CheckFailed as exc:
        _print({"command": args.command, "ok": False, **exc.report})
        return 1
    _print({"command": args.command, "ok": True, **out})
    return 0


if __name__ == "__main__":
    sys.exit(main())
