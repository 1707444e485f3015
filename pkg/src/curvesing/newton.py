"""Newton diagrams and Newton polygons of bivariate series.

The Newton polygon is the chain of compact faces of the boundary of
conv(supp f) + R_{>=0}^2, listed from the vertex on the smallest x-exponent
to the vertex on the smallest y-exponent.

Conventions
-----------
* ``[N, N]`` sums :func:`bracket` over *ordered* pairs of edges, the diagonal
  included.  With that reading the one-edge Newton number is (m-1)(n-1) and
  ``[N, N]`` is twice the area under the polygon.
* A polygon without edges (monomial times a unit) has all measures zero and
  ``r(N) = k + l``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .errors import ZeroPolynomialError
from .poly import Poly

Point = tuple[int, int]


@dataclass(frozen=True)
class Edge:
    """Newton edge from ``start`` (upper left) to ``end`` (lower right)."""

    start: Point
    end: Point

    def __post_init__(self):
        (a, b), (a2, b2) = self.start, self.end
        if min(a, b, a2, b2) < 0:
            raise ValueError(f"edge endpoints must lie in N^2: {self.start}, {self.end}")
        if not (a < a2 and b2 < b):
            raise ValueError(f"not a Newton edge: {self.start} -> {self.end}")

    @property
    def h(self) -> int:
        return self.end[0] - self.start[0]

    @property
    def v(self) -> int:
        return self.start[1] - self.end[1]

    @property
    def r(self) -> int:
        return gcd(self.h, self.v)

    def contains(self, pt: Point) -> bool:
        (a, b), (a2, b2) = self.start, self.end
        x, y = pt
        if not (a <= x <= a2 and b2 <= y <= b):
            return False
        return (x - a) * (b2 - b) == (y - b) * (a2 - a)

    def weight(self) -> tuple[int, int, int]:
        """(w1, w2, c) with w1*alpha + w2*beta = c on the edge, gcd(w1, w2) = 1."""
        w1, w2 = self.v // self.r, self.h // self.r
        return w1, w2, w1 * self.start[0] + w2 * self.start[1]

    def lattice_points(self) -> list[Point]:
        r = self.r
        dh, dv = self.h // r, self.v // r
        return [(self.start[0] + i * dh, self.start[1] - i * dv) for i in range(r + 1)]

    def is_parallel(self, other: Edge) -> bool:
        return self.h * other.v == self.v * other.h


def edge_measures(S: Edge) -> tuple[int, int, int]:
    """(|S|_1, |S|_2, r(S))."""
    return S.h, S.v, S.r


def bracket(S: Edge, T: Edge) -> int:
    return min(S.h * T.v, S.v * T.h)


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: tuple[Point, ...]
    edges: tuple[Edge, ...]
    axis_offsets: tuple[int, int]
    warnings: tuple[str, ...] = field(default=(), compare=False)

    @property
    def is_convenient(self) -> bool:
        return self.axis_offsets == (0, 0) and bool(self.edges)


class PolygonMeasures(NamedTuple):
    h_total: int
    v_total: int
    bracket_total: int
    r_N: int


class LatticeCounts(NamedTuple):
    on_polygon: int
    below_not_on_axes: int
    double_area: int


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def polygon_from_support(points, axis_offsets: tuple[int, int] | None = None) -> NewtonPolygon:
    """Newton polygon of a finite nonempty support set."""
    pts = sorted(set(points))
    if not pts:
        raise ZeroPolynomialError("Newton polygon of the zero polynomial")
    k = pts[0][0]
    l = min(b for _, b in pts)
    end = min((p for p in pts if p[1] == l))
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
        if p == end:
            break
    edges = tuple(Edge(lower[i], lower[i + 1]) for i in range(len(lower) - 1))
    return NewtonPolygon(tuple(lower), edges, axis_offsets or (k, l))


def newton_polygon(f: Poly) -> NewtonPolygon:
    """Compact faces of the Newton diagram of ``f``."""
    if f.is_zero():
        raise ZeroPolynomialError("Newton polygon of the zero polynomial")
    N = polygon_from_support(f.support())
    if f.truncation is not None:
        top = max(a + b for a, b in N.vertices)
        if f.truncation <= top + 1:
            N = NewtonPolygon(
                N.vertices,
                N.edges,
                N.axis_offsets,
                (f"truncation degree {f.truncation} is within 1 of the polygon's extent {top}",),
            )
    return N


def polygon_measures(N: NewtonPolygon) -> PolygonMeasures:
    h = sum(S.h for S in N.edges)
    v = sum(S.v for S in N.edges)
    br = sum(bracket(S, T) for S in N.edges for T in N.edges)
    r = sum(S.r for S in N.edges) + N.axis_offsets[0] + N.axis_offsets[1]
    return PolygonMeasures(h, v, br, r)


def chain_height(N: NewtonPolygon, a) -> Fraction:
    """Height of the polygon chain above abscissa ``a`` (inside its span)."""
    for S in N.edges:
        if S.start[0] <= a <= S.end[0]:
            t = Fraction(a - S.start[0], S.h)
            return S.start[1] - t * S.v
    raise ValueError(f"abscissa {a} outside the polygon span")


def lattice_counts(N: NewtonPolygon) -> LatticeCounts:
    """Enumerate lattice points against the region between the polygon and
    the lines x = d1, y = d2.

    ``below_not_on_axes`` counts points (a, b) with a > d1, b > d2 lying on
    or under the chain; ``double_area`` is twice that region's area by the
    shoelace sum.
    """
    d1, d2 = N.axis_offsets
    verts = N.vertices
    on = set()
    for S in N.edges:
        on.update(S.lattice_points())
    if not N.edges:
        on.update(verts)
    below = 0
    if N.edges:
        amax = verts[-1][0]
        bmax = verts[0][1]
        for a in range(d1 + 1, amax + 1):
            top = chain_height(N, a)
            for b in range(d2 + 1, bmax + 1):
                if b <= top:
                    below += 1
    ring = [(d1, d2)] + list(reversed(verts))
    s = 0
    for i in range(len(ring)):
        x0, y0 = ring[i]
        x1, y1 = ring[(i + 1) % len(ring)]
        s += x0 * y1 - x1 * y0
    return LatticeCounts(len(on), below, abs(s))


def polygon_to_json(N: NewtonPolygon) -> dict:
    m = polygon_measures(N)
    return {
        "vertices": [list(v) for v in N.vertices],
        "axis_offsets": list(N.axis_offsets),
        "edges": [
            {"start": list(S.start), "end": list(S.end), "h": S.h, "v": S.v, "r": S.r}
            for S in N.edges
        ],
        "totals": {
            "h": m.h_total,
            "v": m.v_total,
            "bracket": m.bracket_total,
            "r": m.r_N,
        },
        "warnings": list(N.warnings),
    }
