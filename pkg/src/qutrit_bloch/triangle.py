"""Geometry of diagonal qutrit states in the (n3, n8) plane.

Diagonal density matrices rho = (1/3)(I + sqrt(3)(n3 lambda_3 + n8 lambda_8))
fill an equilateral triangle with pure vertices

    R = (sqrt(3)/2, 1/2)   B = (-sqrt(3)/2, 1/2)   G = (0, -1)

and the maximally mixed state at the origin.  The state constraints reduce to
two polynomial inequalities,

    0 <= n3^2 + n8^2 <= 1
    0 <= 2 n8^3 - 6 n3^2 n8 + 3 n3^2 + 3 n8^2 <= 1,

whose joint solution set is exactly that triangle.  Edge midpoints (named
M_RB, M_RG, M_BG after the vertices they join; each vertex label is used once)
are the equal mixtures of two vertices; M_BG sits at (-sqrt(3)/4, -1/4), the
image of (1/2) diag(0, 1, 1).

The module also evaluates the entropy of mixing over the triangle and
extracts equi-entropy contours by marching squares with per-point bisection
refinement, so every emitted point meets the requested |E - level| tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .bloch import DEFAULT_TOL, ValidationError
from .density import mixing_entropy
from .gellmann import SQRT3

_LN3 = np.log(3.0)


class DiagPoint(NamedTuple):
    """Coordinates of a diagonal state in the triangle plane."""

    n3: float
    n8: float


VERTICES = {
    "R": DiagPoint(SQRT3 / 2, 0.5),
    "B": DiagPoint(-SQRT3 / 2, 0.5),
    "G": DiagPoint(0.0, -1.0),
}
EDGE_MIDPOINTS = {
    "M_RB": DiagPoint(0.0, 0.5),
    "M_RG": DiagPoint(SQRT3 / 4, -0.25),
    "M_BG": DiagPoint(-SQRT3 / 4, -0.25),
}
ORIGIN = DiagPoint(0.0, 0.0)

N3_RANGE = (-SQRT3 / 2, SQRT3 / 2)
N8_RANGE = (-1.0, 0.5)

_DENSITIES = {
    "R": np.diag([1.0, 0.0, 0.0]).astype(complex),
    "B": np.diag([0.0, 1.0, 0.0]).astype(complex),
    "G": np.diag([0.0, 0.0, 1.0]).astype(complex),
    "M_RB": np.diag([0.5, 0.5, 0.0]).astype(complex),
    "M_RG": np.diag([0.5, 0.0, 0.5]).astype(complex),
    "M_BG": np.diag([0.0, 0.5, 0.5]).astype(complex),
    "O": (np.eye(3) / 3.0).astype(complex),
}


def bloch_from_diag(p) -> np.ndarray:
    """Embed (n3, n8) as the 8-vector with only components 3 and 8 set."""
    n3, n8 = p
    n = np.zeros(8)
    n[2], n[7] = n3, n8
    return n


def diag_constraints(p) -> tuple[float, float]:
    """The two reduced constraint polynomials (q1, q2) at a diagonal point.

    p lies in the state triangle exactly when both values are in [0, 1].
    These are the restrictions of the full 8-vector state functionals.
    """
    n3, n8 = p
    q1 = n3 * n3 + n8 * n8
    q2 = 2 * n8**3 - 6 * n3**2 * n8 + 3 * n3**2 + 3 * n8**2
    return float(q1), float(q2)


def in_triangle(p, tol: float = DEFAULT_TOL) -> bool:
    """True when both constraint polynomials lie in [-tol, 1 + tol]."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    q1, q2 = diag_constraints(p)
    return -tol <= q1 <= 1.0 + tol and -tol <= q2 <= 1.0 + tol


def diag_eigenvalues(p) -> np.ndarray:
    """Eigenvalues of the diagonal state, in (R, B, G) weight order.

    The triple ((1 + sqrt(3) n3 + n8)/3, (1 - sqrt(3) n3 + n8)/3,
    (1 - 2 n8)/3) is affine in p and evaluates to the unit vectors at the
    vertices, so it doubles as barycentric coordinates on the triangle.
    """
    n3, n8 = p
    return np.array(
        [
            (1.0 + SQRT3 * n3 + n8) / 3.0,
            (1.0 - SQRT3 * n3 + n8) / 3.0,
            (1.0 - 2.0 * n8) / 3.0,
        ]
    )


def diag_entropy(p, tol: float = DEFAULT_TOL) -> float:
    """Entropy of mixing at a diagonal point inside the triangle."""
    if not in_triangle(p, tol):
        raise ValidationError(f"point {tuple(p)} is outside the state triangle")
    return mixing_entropy(diag_eigenvalues(p))


def named_points() -> dict[str, tuple[DiagPoint, np.ndarray]]:
    """Labeled special states: vertices, edge midpoints, and the origin.

    Maps label -> (triangle coordinates, density matrix), in the fixed order
    R, B, G, M_RB, M_RG, M_BG, O.
    """
    coords = {**VERTICES, **EDGE_MIDPOINTS, "O": ORIGIN}
    return {label: (coords[label], _DENSITIES[label].copy()) for label in coords}


def _entropy_field(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Vectorized entropy of mixing; caller masks out-of-region points."""
    xs = np.stack(
        [
            (1.0 + SQRT3 * x + y) / 3.0,
            (1.0 - SQRT3 * x + y) / 3.0,
            (1.0 - 2.0 * y) / 3.0,
        ]
    )
    xs = np.clip(xs, 0.0, None)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(xs > 0.0, xs * np.log(xs), 0.0)
    return -terms.sum(axis=0) / _LN3


@dataclass(frozen=True)
class EntropyGrid:
    """Uniform sampling of the triangle's bounding box.

    2-D arrays are indexed [i8, i3] against the two axis vectors.  entropy is
    NaN at out-of-region points: values there are deliberately not defined.
    """

    n3: np.ndarray
    n8: np.ndarray
    q1: np.ndarray
    q2: np.ndarray
    in_region: np.ndarray
    entropy: np.ndarray


def entropy_grid(resolution: int, tol: float = DEFAULT_TOL) -> EntropyGrid:
    """Evaluate constraints and entropy on a resolution x resolution grid."""
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    n3 = np.linspace(*N3_RANGE, resolution)
    n8 = np.linspace(*N8_RANGE, resolution)
    x, y = np.meshgrid(n3, n8)
    q1 = x * x + y * y
    q2 = 2 * y**3 - 6 * x**2 * y + 3 * x**2 + 3 * y**2
    in_region = (q1 >= -tol) & (q1 <= 1.0 + tol) & (q2 >= -tol) & (q2 <= 1.0 + tol)
    entropy = np.where(in_region, _entropy_field(x, y), np.nan)
    return EntropyGrid(n3=n3, n8=n8, q1=q1, q2=q2, in_region=in_region, entropy=entropy)


def _edge_endpoints(edge_id, n3_axis, n8_axis):
    kind, iy, ix = edge_id
    p0 = (n3_axis[ix], n8_axis[iy])
    if kind == "h":
        p1 = (n3_axis[ix + 1], n8_axis[iy])
    else:
        p1 = (n3_axis[ix], n8_axis[iy + 1])
    return np.array(p0), np.array(p1)


def _refine_crossing(p0, p1, b0, b1, level, tol, max_iter=120) -> DiagPoint:
    """Locate E = level on the segment [p0, p1] to within tol.

    b0 >= 0 > b1 are the endpoint values of E - level.  Starts from the
    linear interpolant and falls back to bisection; E is smooth along the
    segment and changes sign, so this terminates.
    """
    t = b0 / (b0 - b1)
    point = (1.0 - t) * p0 + t * p1
    b = mixing_entropy(diag_eigenvalues(point)) - level
    if abs(b) <= tol:
        return DiagPoint(*point)
    ta, tb = 0.0, 1.0
    if b >= 0.0:
        ta = t
    else:
        tb = t
    for _ in range(max_iter):
        t = 0.5 * (ta + tb)
        point = (1.0 - t) * p0 + t * p1
        b = mixing_entropy(diag_eigenvalues(point)) - level
        if abs(b) <= tol:
            return DiagPoint(*point)
        if b >= 0.0:
            ta = t
        else:
            tb = t
    raise ValidationError(
        f"contour refinement failed to reach |E - {level}| <= {tol}"
    )


def equi_entropy_contour(
    level: float, tol: float = DEFAULT_TOL, resolution: int = 256
) -> list[list[DiagPoint]]:
    """Polylines approximating the equi-entropy set {E = level} in the triangle.

    Marching squares over the entropy grid.  A cell edge carries a crossing
    when both endpoints are in-region and E - level changes sign across it;
    cells with exactly two crossings join them, cells with four (saddles) are
    disambiguated by the center value.  Out-of-region grid points never
    contribute, so the curve is clipped at the triangle boundary rather than
    extrapolated.  Each crossing is bisected along its cell edge until
    |E - level| <= tol, so every returned vertex satisfies the tolerance.
    Closed curves repeat their first point at the end.

    Raises ValidationError when no grid cell brackets the level (the level is
    not attained at this resolution).
    """
    if not 0.0 < level < 1.0:
        raise ValueError(f"contour level must be in (0, 1), got {level}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    grid = entropy_grid(resolution)
    b = grid.entropy - level
    above = np.where(grid.in_region, b >= 0.0, False)
    valid = grid.in_region

    crossing_h = valid[:, :-1] & valid[:, 1:] & (above[:, :-1] != above[:, 1:])
    crossing_v = valid[:-1, :] & valid[1:, :] & (above[:-1, :] != above[1:, :])
    counts = (
        crossing_h[:-1, :].astype(int)  # bottom
        + crossing_h[1:, :]             # top
        + crossing_v[:, :-1]            # left
        + crossing_v[:, 1:]             # right
    )
    iys, ixs = np.nonzero(counts >= 2)
    if len(iys) == 0:
        raise ValidationError(
            f"level {level} is not bracketed by the entropy grid at resolution {resolution}"
        )

    crossings: dict[tuple, DiagPoint] = {}
    adjacency: dict[tuple, list[tuple]] = {}

    def crossing_point(edge_id):
        if edge_id not in crossings:
            kind, iy, ix = edge_id
            p0, p1 = _edge_endpoints(edge_id, grid.n3, grid.n8)
            b0 = b[iy, ix]
            b1 = b[iy, ix + 1] if kind == "h" else b[iy + 1, ix]
            if b0 < 0.0:  # orient so the first endpoint is the one above
                p0, p1, b0, b1 = p1, p0, b1, b0
            crossings[edge_id] = _refine_crossing(p0, p1, b0, b1, level, tol)
        return crossings[edge_id]

    def connect(ea, eb):
        crossing_point(ea)
        crossing_point(eb)
        adjacency.setdefault(ea, []).append(eb)
        adjacency.setdefault(eb, []).append(ea)

    for iy, ix in zip(iys.tolist(), ixs.tolist()):
        edges = {
            "bottom": ("h", iy, ix),
            "top": ("h", iy + 1, ix),
            "left": ("v", iy, ix),
            "right": ("v", iy, ix + 1),
        }
        crossed = [
            name
            for name, hit in (
                ("bottom", crossing_h[iy, ix]),
                ("right", crossing_v[iy, ix + 1]),
                ("top", crossing_h[iy + 1, ix]),
                ("left", crossing_v[iy, ix]),
            )
            if hit
        ]
        if len(crossed) == 2:
            connect(edges[crossed[0]], edges[crossed[1]])
        elif len(crossed) == 4:
            # Saddle: pair so segments separate the corners opposite in sign
            # to the cell-center average.
            center = 0.25 * (b[iy, ix] + b[iy, ix + 1] + b[iy + 1, ix + 1] + b[iy + 1, ix])
            if bool(above[iy, ix]) == (center >= 0.0):
                pairs = [("bottom", "right"), ("top", "left")]
            else:
                pairs = [("left", "bottom"), ("right", "top")]
            for name_a, name_b in pairs:
                connect(edges[name_a], edges[name_b])
        # a single crossing is a dead end at the region boundary; skip

    return _assemble_polylines(adjacency, crossings)


def _assemble_polylines(adjacency, crossings) -> list[list[DiagPoint]]:
    """Chain shared cell-edge crossings into open and closed polylines."""
    used: set[tuple] = set()

    def link(a, b):
        return (a, b) if a <= b else (b, a)

    def walk(start):
        chain = [start]
        current = start
        while True:
            step = None
            for neighbor in adjacency[current]:
                if link(current, neighbor) not in used:
                    step = neighbor
                    break
            if step is None:
                return chain
            used.add(link(current, step))
            chain.append(step)
            current = step

    polylines = []
    endpoints = sorted(e for e, nbrs in adjacency.items() if len(nbrs) == 1)
    for start in endpoints:
        if all(link(start, nb) in used for nb in adjacency[start]):
            continue
        chain = walk(start)
        polylines.append([crossings[e] for e in chain])
    for start in sorted(adjacency):
        if all(link(start, nb) in used for nb in adjacency[start]):
            continue
        chain = walk(start)  # remaining components are loops
        points = [crossings[e] for e in chain]
        points.append(points[0])
        polylines.append(points)
    return polylines
