"""Curves given by their branches: JSON specs, pairwise i0, mu-bar, expansion.

JSON form::

    {"id": "c1", "char": 0,
     "branches": [{"x": "t^4", "y": "t^6+t^7"},
                  {"poly": "y-x"},
                  {"semigroup": [2, 3], "poly": "y^2-x^3"}],
     "i0": [[0, 4, 2], [4, 0, 2], [2, 2, 0]]}

A branch needs a semigroup (given, or read off a tame parametrization, or
N for an order-one equation) and, for expansion, an equation (given, or
the implicit equation of its parametrization).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .branch import ParamBranch, char_exponents_from_param, implicitize
from .errors import (
    CommonComponentError,
    CurveSingError,
    ShearError,
    SpecError,
)
from .edges import edge_initial
from .field import Field
from .intersection import i0_local, i0_param, i0_resultant
from .newton import newton_polygon
from .poly import Poly, parse_poly, parse_series
from .semigroup import Semigroup, semigroup_from_generators

EXPANSION_ESCALATIONS = 1


@dataclass(frozen=True)
class CurveBranch:
    semigroup: Semigroup
    param: ParamBranch | None = None
    equation: Poly | None = None
    source: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def mu_bar(self) -> int:
        return self.semigroup.conductor


@dataclass
class CurveSpec:
    field: Field
    branches: list[CurveBranch]
    pairwise_i0: list[list[int]] | None = None
    i0_provenance: list[list[str]] | None = None
    id: str = ""
    expanded: Poly | None = None

    def to_json(self) -> dict:
        d = {
            "id": self.id,
            "char": self.field.characteristic,
            "branches": [dict(b.source) for b in self.branches],
        }
        if self.pairwise_i0 is not None:
            d["i0"] = [list(r) for r in self.pairwise_i0]
        return d


@lru_cache(maxsize=4096)
def _implicit_cached(b: ParamBranch) -> Poly:
    return implicitize(b)


def branch_from_json(F: Field, item: dict) -> CurveBranch:
    if not isinstance(item, dict):
        raise SpecError(f"branch entry must be an object, got {item!r}")
    unknown = set(item) - {"x", "y", "semigroup", "poly"}
    if unknown:
        raise SpecError(f"unknown branch keys {sorted(unknown)}")
    param = None
    eq = None
    sg = None
    if "x" in item or "y" in item:
        if not ("x" in item and "y" in item):
            raise SpecError("a parametrization needs both 'x' and 'y'")
        param = ParamBranch(parse_series(str(item["x"]), F), parse_series(str(item["y"]), F))
    if "poly" in item:
        eq = parse_poly(str(item["poly"]), F)
        if eq.is_zero() or eq.coefficient(0, 0) != 0:
            raise SpecError(f"branch equation {item['poly']!r} does not pass through the origin")
    if "semigroup" in item:
        sg = semigroup_from_generators(item["semigroup"])
        if not sg.plane:
            raise SpecError(f"{item['semigroup']} is not the semigroup of a plane branch")
    if sg is None:
        if param is not None:
            sg = char_exponents_from_param(param)[1]
        elif eq is not None and eq.order() == 1:
            sg = semigroup_from_generators([1])
        else:
            raise SpecError("branch needs a parametrization, a semigroup, or an order-one equation")
    if eq is None and param is not None:
        eq = _implicit_cached(param)
    return CurveBranch(sg, param, eq, dict(item))


def spec_from_json(data: dict, default_char: int | None = None) -> CurveSpec:
    if not isinstance(data, dict):
        raise SpecError("curve spec must be a JSON object")
    p = data.get("char", default_char)
    if p is None:
        raise SpecError("missing 'char'")
    F = Field(int(p))
    items = data.get("branches")
    if not items:
        raise SpecError("a curve needs at least one branch")
    branches = [branch_from_json(F, it) for it in items]
    i0 = data.get("i0")
    prov = None
    if i0 is not None:
        s = len(branches)
        if len(i0) != s or any(len(r) != s for r in i0):
            raise SpecError("i0 matrix shape does not match the branch count")
        for i, j in combinations(range(s), 2):
            if i0[i][j] != i0[j][i]:
                raise SpecError("i0 matrix is not symmetric")
            if int(i0[i][j]) < 1:
                raise SpecError("pairwise i0 entries must be positive")
        i0 = [[int(v) for v in r] for r in i0]
        prov = [["user"] * s for _ in range(s)]
    return CurveSpec(F, branches, i0, prov, str(data.get("id", "")))


def pair_i0(a: CurveBranch, b: CurveBranch) -> tuple[int, str]:
    """i0 of two branches, preferring a parametrization against an equation."""
    try:
        if a.param is not None and b.equation is not None:
            return i0_param(a.param, b.equation), "param"
        if b.param is not None and a.equation is not None:
            return i0_param(b.param, a.equation), "param"
        if a.equation is None or b.equation is None:
            raise SpecError("i0 between branches without equations must be supplied")
        try:
            return i0_resultant(a.equation, b.equation), "resultant"
        except ShearError:
            return i0_local(a.equation, b.equation), "local"
    except CommonComponentError as exc:
        raise SpecError("two branches coincide (the curve is not reduced)") from exc


def fill_pairwise_i0(spec: CurveSpec) -> CurveSpec:
    s = len(spec.branches)
    if spec.pairwise_i0 is not None:
        return spec
    M = [[0] * s for _ in range(s)]
    P = [[""] * s for _ in range(s)]
    for i, j in combinations(range(s), 2):
        v, how = pair_i0(spec.branches[i], spec.branches[j])
        if v < 1:
            raise SpecError(f"branches {i} and {j} do not meet at the origin")
        M[i][j] = M[j][i] = v
        P[i][j] = P[j][i] = how
    spec.pairwise_i0 = M
    spec.i0_provenance = P
    return spec


def mu_bar_curve(spec: CurveSpec) -> int:
    """sum mu-bar(g_i) + 2 sum_{i<j} i0(g_i, g_j) - (s - 1)."""
    fill_pairwise_i0(spec)
    s = len(spec.branches)
    total = sum(b.mu_bar for b in spec.branches)
    total += 2 * sum(spec.pairwise_i0[i][j] for i, j in combinations(range(s), 2))
    return total - (s - 1)


def _product(F: Field, factors: list[Poly], bound: int) -> Poly:
    if sum(f.degree() for f in factors) <= bound:
        out = Poly.constant(F, 1)
        for f in factors:
            out = out * f
        return out
    out = Poly.constant(F, 1).truncate(bound)
    for f in factors:
        out = out.mul(f, bound=bound)
    return out


def _polygon_signature(f: Poly):
    N = newton_polygon(f)
    forms = tuple(edge_initial(f, S, N).in_form for S in N.edges)
    return N.vertices, tuple(
        tuple(sorted(g.items())) for g in forms
    )


def expansion_bound(spec: CurveSpec) -> int:
    fill_pairwise_i0(spec)
    s = len(spec.branches)
    c = sum(b.semigroup.conductor for b in spec.branches)
    i0 = sum(spec.pairwise_i0[i][j] for i, j in combinations(range(s), 2))
    return 2 * (c + i0) + 6


def expand_curve(spec: CurveSpec) -> Poly:
    """Product of the branch equations, truncated where that is safe.

    The polygon and edge forms at D0 must match those at 2*D0 (escalating
    once); the returned series is the 2*D0 one.
    """
    if spec.expanded is not None:
        return spec.expanded
    missing = [i for i, b in enumerate(spec.branches) if b.equation is None]
    if missing:
        raise SpecError(f"branches {missing} have no equation; supply 'poly'")
    F = spec.field
    factors = [b.equation for b in spec.branches]
    D = expansion_bound(spec)
    for _ in range(EXPANSION_ESCALATIONS + 1):
        lo = _product(F, factors, D)
        hi = _product(F, factors, 2 * D)
        if lo.truncation is None or _polygon_signature(lo) == _polygon_signature(hi):
            spec.expanded = hi
            return hi
        D *= 2
    raise CurveSingError(f"Newton polygon not stable under doubling the truncation (last bound {D})")
