"""Newton number, delta and branch-count of a Newton polygon.

Four independent routes compute the Newton number ``mu(N_f)``:

``mu_N_convenient``
    ``[N,N] - |N|_1 - |N|_2 + 1`` for convenient f.
``mu_N_general``
    the four-case formula keyed on the monomial part x^d1 y^d2 of f.
``mu_N_stabilized``
    the Newton number of the convenient series f + x^m + y^m for m large.
``mu_N_lenarcik``
    ``2*A1 + m1 + n1 - 1`` from the area cut off by the lines x = 1, y = 1.

They must agree on every reduced series where they all apply;
:func:`invariants_bundle` cross-checks against lattice-point counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    ConsistencyError,
    NotConvenientError,
    NotReducedError,
    StabilizationError,
)
from .newton import (
    NewtonPolygon,
    lattice_counts,
    newton_polygon,
    polygon_from_support,
    polygon_measures,
)
from .poly import Poly

STABILIZATION_LIMIT = 2**16


@dataclass(frozen=True)
class PolygonInvariants:
    mu_N: int
    delta_N: Fraction
    r_N: int
    route: str
    routes: dict = field(default_factory=dict, compare=False)
    notes: tuple[str, ...] = field(default=(), compare=False)

    def to_json(self) -> dict:
        d = self.delta_N
        return {
            "mu_newton": self.mu_N,
            "delta_newton": int(d) if d.denominator == 1 else str(d),
            "r_newton": self.r_N,
            "route": self.route,
            "routes": dict(self.routes),
            "notes": list(self.notes),
        }


def mu_N_convenient(N: NewtonPolygon) -> int:
    if N.axis_offsets != (0, 0) or not N.edges:
        raise NotConvenientError("the convenient formula needs a polygon touching both axes")
    h, v, br, _ = polygon_measures(N)
    return br - h - v + 1


def _convenient_mu_of_support(points) -> int:
    return mu_N_convenient(polygon_from_support(points))


def mu_N_stabilized(f: Poly) -> int:
    """Newton number of f + x^m + y^m, for m past the support's extent.

    Starting at m0 = deg f + 2, values at m and m + 1 are compared and m is
    doubled until they agree; beyond 2^16 a StabilizationError is raised.
    """
    if f.is_zero() or f.order() < 1:
        raise ValueError("stabilization needs a nonzero series without constant term")
    supp = f.support()
    m = f.degree() + 2
    while m <= STABILIZATION_LIMIT:
        a = _convenient_mu_of_support(supp + [(m, 0), (0, m)])
        b = _convenient_mu_of_support(supp + [(m + 1, 0), (0, m + 1)])
        if a == b:
            return a
        m *= 2
    raise StabilizationError(
        f"mu(N_f_m) still changing at m = {STABILIZATION_LIMIT}; f is probably not reduced"
    )


def _reduced_offsets(N: NewtonPolygon) -> tuple[int, int]:
    d1, d2 = N.axis_offsets
    if d1 > 1 or d2 > 1:
        raise NotReducedError(f"x^{d1} y^{d2} divides f; a reduced series has d1, d2 <= 1")
    return d1, d2


def mu_N_general(f: Poly) -> int:
    """Four-case formula in the monomial part of f = x^d1 y^d2 g.

    When g is a unit (f a monomial times a unit) the formula's hypothesis
    g(0,0) = 0 fails and the stabilized value is returned instead.
    """
    N = newton_polygon(f)
    d1, d2 = _reduced_offsets(N)
    if not N.edges:
        return mu_N_stabilized(f)
    h, v, br, _ = polygon_measures(N)
    if (d1, d2) == (0, 0):
        return br - h - v + 1
    if (d1, d2) == (1, 0):
        return br - h + v
    if (d1, d2) == (0, 1):
        return br + h - v
    return br + h + v + 1


def _extended_chain(N: NewtonPolygon) -> list[tuple[Fraction, Fraction]]:
    """Polygon chain, prolonged along its extremal edges to meet x = 1 and y = 1."""
    pts = [(Fraction(a), Fraction(b)) for a, b in N.vertices]
    if N.edges:
        first, last = N.edges[0], N.edges[-1]
        if pts[0][0] > 1:
            s = Fraction(first.v, first.h)
            pts.insert(0, (Fraction(1), pts[0][1] + s * (pts[0][0] - 1)))
        if pts[-1][1] > 1:
            s = Fraction(last.h, last.v)
            pts.append((pts[-1][0] + s * (pts[-1][1] - 1), Fraction(1)))
    return pts


def lenarcik_data(f: Poly) -> tuple[Fraction, Fraction, Fraction]:
    """(A1, m1, n1): area cut by x = 1, y = 1 and the chain's crossings (m1, 1), (1, n1)."""
    N = newton_polygon(f)
    chain = _extended_chain(N)
    if chain[0][0] > 1 or chain[-1][1] > 1:
        raise ValueError("polygon does not meet the lines x = 1 and y = 1")

    def crossing_x1():
        for (a0, b0), (a1, b1) in zip(chain, chain[1:]):
            if a0 <= 1 <= a1:
                return b0 + (b1 - b0) * (1 - a0) / (a1 - a0)
        return chain[0][1]

    def crossing_y1():
        for (a0, b0), (a1, b1) in zip(chain, chain[1:]):
            if b1 <= 1 <= b0:
                return a0 + (a1 - a0) * (b0 - 1) / (b0 - b1)
        return chain[-1][0]

    n1, m1 = crossing_x1(), crossing_y1()
    inner = [(a, b) for a, b in chain if a > 1 and b > 1]
    ring = [(Fraction(1), Fraction(1)), (m1, Fraction(1))] + list(reversed(inner)) + [(Fraction(1), n1)]
    s = Fraction(0)
    for i in range(len(ring)):
        x0, y0 = ring[i]
        x1, y1 = ring[(i + 1) % len(ring)]
        s += x0 * y1 - x1 * y0
    return abs(s) / 2, m1, n1


def mu_N_lenarcik(f: Poly) -> int:
    if f.order() < 2:
        raise ValueError("the area formula needs order at least 2")
    _reduced_offsets(newton_polygon(f))
    A1, m1, n1 = lenarcik_data(f)
    value = 2 * A1 + m1 + n1 - 1
    if value.denominator != 1:
        raise ConsistencyError(f"area formula gave a non-integer {value}")
    return int(value)


def invariants_bundle(f: Poly) -> PolygonInvariants:
    """mu, delta and r of the Newton polygon, cross-checked by other routes."""
    N = newton_polygon(f)
    d1, d2 = _reduced_offsets(N)
    notes = []
    if not N.edges:
        route = "stabilized"
        notes.append("monomial times unit: value taken from the stabilized definition")
    else:
        route = "general"
    mu = mu_N_general(f)
    r = polygon_measures(N).r_N
    delta = Fraction(mu + r - 1, 2)
    routes = {"general": mu}
    if f.order() >= 1:
        routes["stabilized"] = mu_N_stabilized(f)
    if f.order() >= 2:
        routes["lenarcik"] = mu_N_lenarcik(f)
    if N.is_convenient:
        routes["convenient"] = mu_N_convenient(N)
    if len(set(routes.values())) != 1:
        raise ConsistencyError(f"Newton-number routes disagree: {routes}")
    if N.is_convenient:
        lc = lattice_counts(N)
        h, v, _, _ = polygon_measures(N)
        if lc.double_area - h - v + 1 != mu:
            raise ConsistencyError("area route disagrees with the Newton number")
        if lc.on_polygon - 1 != r:
            raise ConsistencyError("lattice count on the polygon disagrees with r(N)")
        if delta != lc.below_not_on_axes:
            raise ConsistencyError("lattice count below the polygon disagrees with delta(N)")
    return PolygonInvariants(mu, delta, r, route, routes, tuple(notes))
