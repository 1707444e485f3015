"""Initial forms on Newton edges and the two non-degeneracy predicates.

For an edge S with |S|_1 = m, |S|_2 = n and d = gcd(m, n), every exponent
of the stripped initial form lies on the lattice points of S, so

    in(f, S) = x^alpha_S * y^beta_S * F(x^(m/d), y^(n/d))

for a binary form F(u, v) = sum_i c_i u^i v^(d-i) of degree d.  We store F as
the coefficient list ``[c_0, ..., c_d]`` (index = exponent of u).

Root questions about F are answered over the algebraic closure without
constructing it: squarefreeness by a gcd with the derivative (Q and F_p are
perfect), and root multiplicities from a squarefree decomposition.

Strong (Kouchnirenko) non-degeneracy checks every compact face, vertices
included; ``edges_only_strong`` records the reading restricted to edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import upoly
from .errors import ConsistencyError, NotAnEdgeError, ZeroPolynomialError
from .field import Field
from .newton import Edge, NewtonPolygon, newton_polygon
from .poly import Poly


@dataclass(frozen=True)
class EdgeForm:
    edge: Edge
    in_form: Poly
    alpha_S: int
    beta_S: int
    reduced_part: Poly
    binary_form: tuple
    degree: int

    def reconstruct(self) -> Poly:
        """Substitute u = x^(m/d), v = y^(n/d) back into the binary form."""
        m, n, d = self.edge.h, self.edge.v, self.degree
        F = self.in_form.field
        return Poly(F, {((m // d) * i, (n // d) * (d - i)): c for i, c in enumerate(self.binary_form) if c})


@dataclass(frozen=True)
class EdgeDegeneracy:
    edge: Edge
    squarefree: bool
    distinct_roots: int
    multiplicities: tuple[int, ...]
    torus_critical: bool


@dataclass(frozen=True)
class DegeneracyReport:
    nondegenerate: bool
    strongly_nondegenerate: bool
    edges_only_strong: bool
    per_edge: tuple[EdgeDegeneracy, ...]
    per_vertex: tuple[tuple[tuple[int, int], bool], ...]
    notes: tuple[str, ...] = field(default=(), compare=False)

    def to_json(self) -> dict:
        return {
            "nondegenerate": self.nondegenerate,
            "strongly_nondegenerate": self.strongly_nondegenerate,
            "edges_only_strong": self.edges_only_strong,
            "per_edge": [
                {
                    "start": list(e.edge.start),
                    "end": list(e.edge.end),
                    "squarefree": e.squarefree,
                    "distinct_roots": e.distinct_roots,
                    "multiplicities": list(e.multiplicities),
                    "torus_critical": e.torus_critical,
                }
                for e in self.per_edge
            ],
            "per_vertex": [
                {"vertex": list(v), "torus_critical": crit} for v, crit in self.per_vertex
            ],
            "notes": list(self.notes),
        }


def edge_initial(f: Poly, S: Edge, N: NewtonPolygon | None = None) -> EdgeForm:
    if N is None:
        N = newton_polygon(f)
    if S not in N.edges:
        raise NotAnEdgeError(f"{S.start}->{S.end} is not an edge of the Newton polygon")
    on = {e: c for e, c in f.items() if S.contains(e)}
    in_form = Poly(f.field, on)
    alpha_S = min(a for a, _ in on)
    beta_S = min(b for _, b in on)
    reduced = Poly(f.field, {(a - alpha_S, b - beta_S): c for (a, b), c in on.items()})
    if (alpha_S, beta_S) != (S.start[0], S.end[1]):
        raise ConsistencyError("stripped monomial does not match the edge endpoints")
    d = S.r
    dm = S.h // d
    coeffs = [0] * (d + 1)
    for (a, b), c in reduced.items():
        coeffs[a // dm] = c
    if not reduced.is_convenient() or coeffs[0] == 0 or coeffs[d] == 0:
        raise ConsistencyError("reduced initial form is not convenient")
    return EdgeForm(S, in_form, alpha_S, beta_S, reduced, tuple(coeffs), d)


def binary_form_roots(F: Field, form) -> list[int]:
    """Multiplicities of the distinct roots of a binary form on P^1, largest first."""
    coeffs = upoly.trim(list(form))
    if not coeffs:
        raise ZeroPolynomialError("zero binary form")
    d = len(form) - 1
    mults = []
    at_infinity = d - upoly.degree(coeffs)
    if at_infinity:
        mults.append(at_infinity)
    if len(coeffs) > 1:
        for g, k in upoly.sqf_list(F, coeffs):
            mults.extend([k] * upoly.degree(g))
    return sorted(mults, reverse=True)


def binary_form_squarefree(form, field: Field) -> tuple[bool, list[int]]:
    """(squarefree over the closure, root multiplicities)."""
    mults = binary_form_roots(field, form)
    return all(k == 1 for k in mults), mults


def _torus_critical(F: Field, exps_coeffs) -> bool:
    """Do both partials of a face's initial form vanish somewhere on (K*)^2?

    The face's terms are indexed i = 0..d along the face; x*d/dx and y*d/dy
    become univariate polynomials G_x, G_y in the torus coordinate
    tau = x^(m/d) y^(-n/d), which is onto K*.  A torus critical point exists
    iff G_x, G_y have a common nonzero root.
    """
    gx = upoly.trim([F.reduce(c * a) for _, (a, _b), c in exps_coeffs])
    gy = upoly.trim([F.reduce(c * b) for _, (_a, b), c in exps_coeffs])
    if not gx and not gy:
        return True
    g = upoly.gcd(F, gx, gy)
    return len(upoly.strip_order(g)) > 1


def _edge_terms(form: EdgeForm):
    S = form.edge
    dm = S.h // S.r
    out = []
    for (a, b), c in form.in_form.items():
        out.append(((a - S.start[0]) // dm, (a, b), c))
    d = S.r
    dense = [(i, None, 0) for i in range(d + 1)]
    for i, e, c in out:
        dense[i] = (i, e, c)
    return [(i, e or (0, 0), c) for i, e, c in dense]


def edge_torus_critical(form: EdgeForm) -> bool:
    return _torus_critical(form.in_form.field, _edge_terms(form))


def vertex_torus_critical(F: Field, vertex, c) -> bool:
    a, b = vertex
    return _torus_critical(F, [(0, (a, b), c)])


def degeneracy_report(f: Poly) -> DegeneracyReport:
    if f.is_zero():
        raise ZeroPolynomialError("zero series")
    F = f.field
    N = newton_polygon(f)
    per_edge = []
    for S in N.edges:
        form = edge_initial(f, S, N)
        sqf, mults = binary_form_squarefree(form.binary_form, F)
        per_edge.append(
            EdgeDegeneracy(S, sqf, len(mults), tuple(mults), edge_torus_critical(form))
        )
    per_vertex = tuple(
        (v, vertex_torus_critical(F, v, f.coefficient(*v))) for v in N.vertices
    )
    nondeg = all(e.squarefree for e in per_edge)
    edges_strong = not any(e.torus_critical for e in per_edge)
    strong = edges_strong and not any(crit for _, crit in per_vertex)
    notes = []
    if edges_strong and not strong:
        notes.append("strong test fails only at vertex faces")
    return DegeneracyReport(nondeg, strong, edges_strong, tuple(per_edge), per_vertex, tuple(notes))


def is_nondegenerate(f: Poly) -> DegeneracyReport:
    return degeneracy_report(f)


def is_strongly_nondegenerate(f: Poly) -> DegeneracyReport:
    return degeneracy_report(f)


def edge_factor_data(f: Poly, S: Edge) -> tuple[tuple[int, int], int, int]:
    """(bidegree of the Newton factor, r(S), distinct roots of the edge's binary form)."""
    form = edge_initial(f, S)
    mults = binary_form_roots(f.field, form.binary_form)
    return (S.h, S.v), S.r, len(mults)
