"""Plane branches: parametrized or given by their semigroup.

A parametrized branch is (x(t), y(t)) with polynomial components of positive
order.  Its semigroup is read off the characteristic exponents once one
coordinate is a pure power c*t^n; the other coordinate is then scanned for
the exponents that drop the running gcd.  This dictionary is only used for
tame branches (char 0 or p not dividing n).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import SpecError, WildBranchError
from .field import Field
from .linalg import EchelonBasis, nullspace
from .poly import Poly, UniSeries
from .semigroup import Semigroup, semigroup_from_generators

IMPLICIT_DEGREE_CAP = 24


@dataclass(frozen=True)
class ParamBranch:
    xt: UniSeries
    yt: UniSeries

    def __post_init__(self):
        if self.xt.field != self.yt.field:
            raise SpecError("parametrization components over different fields")
        if self.xt.truncation is not None or self.yt.truncation is not None:
            raise SpecError("parametrization components must be polynomials in t")
        for s in (self.xt, self.yt):
            if not s.is_zero() and s.order() < 1:
                raise SpecError("parametrization components need positive order")
        if self.xt.is_zero() and self.yt.is_zero():
            raise SpecError("the zero parametrization is not a branch")

    @property
    def field(self) -> Field:
        return self.xt.field

    @property
    def multiplicity(self) -> int:
        orders = [s.order() for s in (self.xt, self.yt) if not s.is_zero()]
        return min(orders)

    @property
    def tame(self) -> bool:
        p = self.field.characteristic
        return p == 0 or self.multiplicity % p != 0

    def to_json(self) -> dict:
        return {"x": self.xt.render("t"), "y": self.yt.render("t")}


@dataclass(frozen=True)
class AbstractBranch:
    semigroup: Semigroup
    equation: Poly | None = None

    @property
    def multiplicity(self) -> int:
        return self.semigroup.generators[0]

    def to_json(self) -> dict:
        d = {"semigroup": list(self.semigroup.generators)}
        if self.equation is not None:
            d["poly"] = self.equation.render()
        return d


def _normalized(b: ParamBranch) -> tuple[int, UniSeries]:
    """(n, other): the pure-power coordinate's exponent and the other coordinate.

    The pure power must be the coordinate of lower (or equal) order, otherwise
    the exponent scan would not start from the multiplicity.
    """
    xt, yt = b.xt, b.yt
    for pure, other in ((xt, yt), (yt, xt)):
        if pure.is_zero() or not pure.is_monomial():
            continue
        n = pure.order()
        if other.is_zero() or other.order() >= n:
            return n, other
    raise SpecError(
        "parametrization must have one coordinate equal to c*t^n with n the "
        "multiplicity; reparametrize or give the semigroup instead"
    )


def char_exponents_from_param(b: ParamBranch) -> tuple[tuple[int, ...], Semigroup]:
    n, other = _normalized(b)
    p = b.field.characteristic
    if p and n % p == 0:
        raise WildBranchError(
            f"multiplicity {n} is divisible by the characteristic {p}; supply the semigroup"
        )
    beta = [n]
    e = n
    for k in other.exponents():
        if e == 1:
            break
        if k % e:
            beta.append(k)
            e = gcd(e, k)
    if e != 1:
        raise SpecError("parametrization is not primitive (it covers the branch more than once)")
    # v_0 = beta_0, v_1 = beta_1, v_{k+1} = n_k v_k + beta_{k+1} - beta_k
    v = [beta[0]]
    es = [beta[0]]
    for bk in beta[1:]:
        es.append(gcd(es[-1], bk))
    if len(beta) > 1:
        v.append(beta[1])
    for k in range(1, len(beta) - 1):
        v.append((es[k - 1] // es[k]) * v[k] + beta[k + 1] - beta[k])
    return tuple(beta), semigroup_from_generators(v)


def branch_semigroup(b) -> Semigroup:
    if isinstance(b, AbstractBranch):
        return b.semigroup
    return char_exponents_from_param(b)[1]


def _monomial_images(b: ParamBranch, degree: int) -> tuple[list, list[dict]]:
    """Images of x^i y^j (i + j <= degree) as sparse t-polynomials."""
    F = b.field
    xs, ys = [UniSeries.monomial(F, 0)], [UniSeries.monomial(F, 0)]
    for _ in range(degree):
        xs.append(xs[-1] * b.xt)
        ys.append(ys[-1] * b.yt)
    mons, rows = [], []
    for d in range(degree + 1):
        for j in range(d + 1):
            i = d - j
            mons.append((i, j))
            rows.append(dict((xs[i] * ys[j]).items()))
    return mons, rows


def value_set(b: ParamBranch, degree: int = 12) -> list[int]:
    """t-orders of all polynomials of degree <= ``degree`` not vanishing on the branch.

    The span of the images is put in echelon form with pivots at the lowest
    exponent; the pivots are exactly the orders of its nonzero elements.
    """
    _, rows = _monomial_images(b, degree)
    basis = EchelonBasis(b.field)
    for r in rows:
        basis.add(r)
    return sorted(basis.pivots)


def implicitize(b: ParamBranch, cap: int = IMPLICIT_DEGREE_CAP) -> Poly:
    """Least-degree nonzero polynomial vanishing on the branch, normalized.

    The kernel of the evaluation map at the least degree is one-dimensional
    (it is spanned by the irreducible equation).  Normalization makes the
    coefficient of the first monomial in (degree, x-exponent) order equal 1.
    """
    F = b.field
    for d in range(1, cap + 1):
        mons, rows = _monomial_images(b, d)
        cols = sorted({k for r in rows for k in r})
        index = {k: i for i, k in enumerate(cols)}
        # transpose: one equation per t-exponent, one unknown per monomial
        eqs: list[dict] = [dict() for _ in cols]
        for m, r in enumerate(rows):
            for k, c in r.items():
                eqs[index[k]][m] = c
        kernel = nullspace(F, eqs, len(mons))
        if kernel:
            vec = kernel[0]
            terms = {mons[i]: c for i, c in enumerate(vec) if c != 0}
            g = Poly(F, terms)
            lead = g.coefficient(*g.support()[0])
            return g.scale(F.inv(lead))
    raise SpecError(f"no implicit equation of degree <= {cap}; supply the factor explicitly")
