"""Command-line front end: validity checks, conversions, and figure data.

Commands: check, convert, triangle, contour, orbit, named-points.  JSON
documents all carry schema_version "1" and serialize floats with 17
significant digits (round-trip exact for doubles); complex matrices are
row-major lists of [re, im] pairs.  Output depends only on argv and stdin.

Exit codes: 0 success, 1 usage or parse error, 2 domain/validity error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .adjoint import orbit_sample
from .bloch import ValidationError, is_mixed_state, is_pure, state_constraints
from .density import bloch_matrix, eigvals_hermitian_3x3, from_bloch, mixing_entropy, to_bloch
from .triangle import (
    N3_RANGE,
    N8_RANGE,
    bloch_from_diag,
    entropy_grid,
    equi_entropy_contour,
    named_points,
)

SCHEMA_VERSION = "1"


class UsageError(Exception):
    """Malformed invocation or unparseable input."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with code 2
        raise UsageError(message)


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _to_json(obj) -> str:
    """Deterministic JSON with fixed float formatting."""
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ",".join(f"{json.dumps(k)}:{_to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ",".join(_to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _matrix_pairs(m: np.ndarray) -> list:
    return [[float(z.real), float(z.imag)] for z in np.asarray(m, dtype=complex).ravel()]


def _read_json_source(ns):
    if ns.stdin:
        text = sys.stdin.read()
    else:
        try:
            text = Path(ns.input).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read --input file: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON input: {exc}") from exc


def _as_number_list(payload, count: int, what: str) -> list[float]:
    if not isinstance(payload, list) or len(payload) != count:
        raise UsageError(f"{what} must be a JSON array of {count} numbers")
    values = []
    for v in payload:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise UsageError(f"{what} must contain only numbers")
        values.append(float(v))
    if not all(math.isfinite(v) for v in values):
        raise UsageError(f"{what} components must be finite")
    return values


def _vector_arg(ns) -> np.ndarray:
    sources = sum([bool(ns.components), ns.stdin, ns.input is not None])
    if sources != 1:
        raise UsageError(
            "provide the vector exactly one way: 8 positional components, --stdin, or --input PATH"
        )
    if ns.components:
        if len(ns.components) != 8:
            raise UsageError(f"expected 8 vector components, got {len(ns.components)}")
        if not all(math.isfinite(v) for v in ns.components):
            raise UsageError("vector components must be finite")
        return np.array(ns.components)
    return np.array(_as_number_list(_read_json_source(ns), 8, "Bloch vector"))


def _matrix_arg(ns) -> np.ndarray:
    if ns.components:
        raise UsageError("rho-to-bloch takes the matrix as JSON via --stdin or --input")
    if not (ns.stdin or ns.input is not None):
        raise UsageError("rho-to-bloch needs --stdin or --input PATH")
    payload = _read_json_source(ns)
    if isinstance(payload, list) and len(payload) == 3:
        payload = [entry for row in payload for entry in row]
    if not isinstance(payload, list) or len(payload) != 9:
        raise UsageError("matrix must be a row-major JSON array of 9 [re, im] pairs")
    flat = [complex(*_as_number_list(pair, 2, "matrix entry")) for pair in payload]
    return np.array(flat).reshape(3, 3)


def cmd_check(ns) -> int:
    n = _vector_arg(ns)
    q1, q2 = state_constraints(n)
    valid = is_mixed_state(n, ns.tol)
    eigenvalues = eigvals_hermitian_3x3(bloch_matrix(n))
    doc = {
        "schema_version": SCHEMA_VERSION,
        "bloch": list(map(float, n)),
        "q1": q1,
        "q2": q2,
        "is_state": valid,
        "is_pure": is_pure(n, ns.tol),
        "eigenvalues": list(map(float, eigenvalues)),
        "entropy": mixing_entropy(eigenvalues) if valid else None,
    }
    print(_to_json(doc))
    return 0 if valid else 2


def cmd_convert(ns) -> int:
    if ns.direction == "bloch-to-rho":
        rho = from_bloch(_vector_arg(ns), ns.tol)
        doc = {"schema_version": SCHEMA_VERSION, "density": _matrix_pairs(rho)}
    else:
        n = to_bloch(_matrix_arg(ns))
        doc = {"schema_version": SCHEMA_VERSION, "bloch": list(map(float, n))}
    print(_to_json(doc))
    return 0


def _grid_rows(grid):
    for i8, v8 in enumerate(grid.n8):
        for i3, v3 in enumerate(grid.n3):
            inside = bool(grid.in_region[i8, i3])
            yield (
                float(v3),
                float(v8),
                float(grid.q1[i8, i3]),
                float(grid.q2[i8, i3]),
                inside,
                float(grid.entropy[i8, i3]) if inside else None,
            )


def cmd_triangle(ns) -> int:
    if ns.resolution < 2:
        raise UsageError("--resolution must be at least 2")
    grid = entropy_grid(ns.resolution, ns.tol)
    if ns.format == "csv":
        lines = ["n3,n8,q1,q2,in_region,entropy"]
        for n3, n8, q1, q2, inside, entropy in _grid_rows(grid):
            lines.append(
                ",".join(
                    [
                        _fmt(n3),
                        _fmt(n8),
                        _fmt(q1),
                        _fmt(q2),
                        "true" if inside else "false",
                        "" if entropy is None else _fmt(entropy),
                    ]
                )
            )
        print("\n".join(lines))
    else:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "resolution": ns.resolution,
            "n3_range": list(N3_RANGE),
            "n8_range": list(N8_RANGE),
            "columns": ["n3", "n8", "q1", "q2", "in_region", "entropy"],
            "rows": [list(row) for row in _grid_rows(grid)],
        }
        print(_to_json(doc))
    return 0


def _parse_levels(arg: str) -> list[float]:
    levels = []
    for token in arg.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            level = float(token)
        except ValueError as exc:
            raise UsageError(f"cannot parse contour level {token!r}") from exc
        if not 0.0 < level < 1.0:
            raise UsageError(f"contour level {token} is outside (0, 1)")
        levels.append(level)
    return levels


def cmd_contour(ns) -> int:
    if ns.resolution < 2:
        raise UsageError("--resolution must be at least 2")
    levels = _parse_levels(ns.levels)
    entries = []
    for level in levels:
        polylines = equi_entropy_contour(level, ns.tol, ns.resolution)
        entries.append(
            {
                "level": level,
                "polylines": [[[p.n3, p.n8] for p in line] for line in polylines],
            }
        )
    doc = {"schema_version": SCHEMA_VERSION, "resolution": ns.resolution, "levels": entries}
    print(_to_json(doc))
    return 0


def cmd_orbit(ns) -> int:
    if ns.count < 1:
        raise UsageError("--count must be at least 1")
    n = _vector_arg(ns)
    samples = orbit_sample(n, ns.count, ns.seed, ns.tol)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "seed": ns.seed,
        "count": ns.count,
        "bloch": list(map(float, n)),
        "samples": [list(map(float, row)) for row in samples],
    }
    print(_to_json(doc))
    return 0


def cmd_named_points(ns) -> int:
    points = []
    for label, (point, rho) in named_points().items():
        points.append(
            {
                "label": label,
                "n3": point.n3,
                "n8": point.n8,
                "bloch": list(map(float, bloch_from_diag(point))),
                "density": _matrix_pairs(rho),
            }
        )
    doc = {"schema_version": SCHEMA_VERSION, "points": points}
    print(_to_json(doc))
    return 0


def _add_tol(sub):
    sub.add_argument("--tol", type=float, default=1e-9, help="state-predicate tolerance")


def _add_vector_args(sub):
    sub.add_argument("components", nargs="*", type=float, help="Bloch vector components")
    sub.add_argument("--stdin", action="store_true", help="read JSON input from stdin")
    sub.add_argument("--input", metavar="PATH", help="read JSON input from a file")
    _add_tol(sub)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qutrit-bloch", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validity report for an 8-component Bloch vector")
    _add_vector_args(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("convert", help="convert between Bloch vectors and density matrices")
    p.add_argument("direction", choices=["bloch-to-rho", "rho-to-bloch"])
    _add_vector_args(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("triangle", help="emit the (n3, n8) constraint/entropy grid")
    p.add_argument("--resolution", type=int, default=100, help="grid points per axis")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    _add_tol(p)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("contour", help="emit equi-entropy polylines")
    p.add_argument("--levels", default="", help="comma-separated entropy levels in (0, 1)")
    p.add_argument("--resolution", type=int, default=256, help="marching-squares grid size")
    _add_tol(p)
    p.set_defaults(func=cmd_contour)

    p = sub.add_parser("orbit", help="sample the unitary orbit of a state")
    _add_vector_args(p)
    p.add_argument("--count", type=int, default=100, help="number of samples")
    p.add_argument("--seed", type=int, default=0, help="random seed")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("named-points", help="dump the labeled vertex/midpoint table")
    p.set_defaults(func=cmd_named_points)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        return ns.func(ns)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse --help
        return int(exc.code) if exc.code else 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
