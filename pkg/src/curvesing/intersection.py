"""Intersection multiplicity at the origin, by four independent routes.

``i0_param``
    t-order of g along a parametrized branch.
``i0_resultant``
    x-order of Res_y(f, g) once a shear x -> x + lam*y has pushed every other
    common point off the line x = 0.
``i0_dim_oracle``
    dim K[x,y] / ((f, g) + m^B) by exact linear algebra; the dimension is
    non-decreasing in B and, by Nakayama, constant from the first B where two
    consecutive values agree.
``i0_local``
    Weierstrass-prepare g to a monic W in y over K[[x]] and take the x-order
    of the norm of f in K[[x]][y]/(W).  Everything is done modulo x^P and the
    result is certified (an order below P is exact); P doubles up to the
    Bezout bound, past which a vanishing norm proves a common component.

The Milnor number is i0(f_x, f_y) through ``i0_local``.  In characteristic
0, when parametrizations of all branches are known, ``milnor_polar`` uses the
polar identity i0(f, f_y) = mu + i0(f, x) - 1 (x not dividing f) instead:
every term is a t-order along a branch, so no Weierstrass preparation over Q
is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import NamedTuple

from . import upoly
from .errors import (
    CommonComponentError,
    FieldMismatchError,
    IndeterminateError,
    ShearError,
    ZeroPolynomialError,
)
from .field import Field
from .edges import edge_initial
from .linalg import EchelonBasis
from .newton import bracket, newton_polygon
from .poly import Poly
from .resultant import resultant_y_dense

SHEAR_ATTEMPTS = 8
DIM_BOX_LIMIT = 96


def _check_pair(f: Poly, g: Poly) -> None:
    if f.field != g.field:
        raise FieldMismatchError("field mismatch")
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("intersection with the zero series")


def _vanishes_at_origin(f: Poly) -> bool:
    return f.coefficient(0, 0) == 0


# -- parametrized branch -----------------------------------------------------


def i0_param(branch, g: Poly, bound: int | None = None) -> int:
    """ord_t g(x(t), y(t)).

    Without a ``bound`` the substitution is carried out exactly, so a zero
    result means the branch lies on g = 0 (CommonComponentError).
    """
    xt, yt = branch.xt, branch.yt
    exact = bound is None and g.truncation is None
    if bound is None:
        deg = max(xt.degree(), yt.degree(), 1)
        bound = max(g.degree(), 1) * deg
        if g.truncation is not None:
            bound = min(bound, g.truncation)
    s = g.substitute_param(xt, yt, bound)
    if s.is_zero():
        if exact:
            raise CommonComponentError("the branch lies on g = 0")
        raise IndeterminateError(f"g vanishes on the branch to order > {s.truncation}")
    return s.order()


# -- resultant route ---------------------------------------------------------


def _shear_values(F: Field):
    seen = []
    for lam in [0] + list(range(1, SHEAR_ATTEMPTS + 1)):
        v = F(lam)
        if v not in seen:
            seen.append(v)
            yield v


def _resultant_ready(F: Field, f: Poly, g: Poly) -> bool:
    """Is the origin the only common point of f, g on x = 0 (infinity included)?"""
    f0, g0 = upoly.trim(f.restrict_x0()), upoly.trim(g.restrict_x0())
    if not f0 and not g0:
        return False
    common = upoly.gcd(F, f0, g0) if f0 and g0 else (f0 or g0)
    if upoly.degree(common) != upoly.order(common):
        return False
    lead_f = f.y_coefficients()[-1]
    lead_g = g.y_coefficients()[-1]
    return bool(lead_f and lead_f[0] != 0) or bool(lead_g and lead_g[0] != 0)


def i0_resultant(f: Poly, g: Poly) -> int:
    _check_pair(f, g)
    if not (_vanishes_at_origin(f) and _vanishes_at_origin(g)):
        return 0
    F = f.field
    for lam in _shear_values(F):
        fs, gs = f.shear(lam), g.shear(lam)
        if not _resultant_ready(F, fs, gs):
            continue
        res = resultant_y_dense(fs, gs)
        if not res:
            raise CommonComponentError("resultant vanishes identically: common factor")
        return upoly.order(res)
    raise ShearError(f"no admissible shear among the first {SHEAR_ATTEMPTS} values in {F.name()}")


# -- dimension oracle --------------------------------------------------------


def _quotient_dim(f: Poly, g: Poly, B: int) -> int:
    """dim K[x,y] / ((f, g) + m^B)."""
    F = f.field
    index = {}
    for d in range(B):
        for a in range(d + 1):
            index[(a, d - a)] = len(index)
    basis = EchelonBasis(F)
    for h in (f, g):
        lo = h.order()
        for d in range(max(B - lo, 0)):
            for a in range(d + 1):
                row = {}
                for (u, v), c in h.items():
                    e = (u + a, v + d - a)
                    if e[0] + e[1] < B:
                        row[index[e]] = c
                basis.add(row)
    return len(index) - basis.rank


def i0_dim_oracle(f: Poly, g: Poly, box: int | None = None) -> int:
    _check_pair(f, g)
    if not (_vanishes_at_origin(f) and _vanishes_at_origin(g)):
        return 0
    B = box if box is not None else 2 * (f.degree() + g.degree())
    for h in (f, g):
        if h.truncation is not None and B + 2 > h.truncation + 1:
            raise IndeterminateError("box exceeds the known part of a truncated series")
    prev = _quotient_dim(f, g, B)
    while B + 2 <= DIM_BOX_LIMIT:
        cur = _quotient_dim(f, g, B + 2)
        if cur == prev:
            return cur
        B += 2
        prev = cur
    raise IndeterminateError(f"quotient dimension not stabilized by box {DIM_BOX_LIMIT}")


# -- local route (Weierstrass preparation) -----------------------------------


def _x_major(h: Poly, P: int) -> list[list]:
    """h as a list over x-degree (< P) of dense y-polynomials."""
    rows: list[list] = [[] for _ in range(P)]
    for (a, b), c in h.items():
        if a < P:
            row = rows[a]
            if len(row) <= b:
                row.extend([0] * (b + 1 - len(row)))
            row[b] = c
    return [upoly.trim(r) for r in rows]


def weierstrass(F: Field, g: Poly, P: int) -> tuple[int, list[list]]:
    """Monic W = y^k + sum_{j<k} W_j(x) y^j with g = W * unit, modulo x^P.

    Returns (k, [W_0, ..., W_{k-1}]) with each W_j a dense x-list of length <= P.
    Requires g(0, y) != 0; k is its order.

    Writing g = sum_i g_i(y) x^i, W = sum_i w_i x^i, V = sum_i v_i x^i, the
    coefficient of x^i in W*V = g is solved for (w_i, v_i) given the earlier
    ones: w_i = (delta * v_0^-1 mod y^k), v_i = (delta - w_i v_0) / y^k.
    """
    rows = _x_major(g, P)
    g0 = rows[0]
    k = upoly.order(g0)
    if k < 0:
        raise ValueError("g(0, y) vanishes; shear first")
    v0 = g0[k:]
    b = upoly.inverse_series(F, v0, k) if k else []
    p = F.characteristic
    if p:
        ws, vs = _weierstrass_packed(p, rows, k, v0, b, P)
    else:
        ws, vs = _weierstrass_plain(F, rows, k, v0, b, P)
    W = [[0] * P for _ in range(k)]
    for i in range(1, P):
        for j, c in enumerate(ws[i]):
            W[j][i] = c
    return k, [upoly.trim(col) for col in W]


def _weierstrass_step(F: Field, delta: list, k: int, v0: list, b: list) -> tuple[list, list]:
    w_i = upoly.trim(upoly.mul_trunc(F, delta, b, k)) if k else []
    rest = upoly.sub(F, delta, upoly.mul(F, w_i, v0))
    if any(c != 0 for c in rest[:k]):
        raise AssertionError("Weierstrass step left a remainder")
    return w_i, upoly.trim(list(rest[k:]))


def _weierstrass_plain(F, rows, k, v0, b, P):
    ws: list[list] = [[0] * k + [1]]
    vs: list[list] = [v0]
    for i in range(1, P):
        delta = list(rows[i])
        for j in range(1, i):
            if ws[j] and vs[i - j]:
                delta = upoly.sub(F, delta, upoly.mul(F, ws[j], vs[i - j]))
        w_i, v_i = _weierstrass_step(F, delta, k, v0, b)
        ws.append(w_i)
        vs.append(v_i)
    return ws, vs


def _weierstrass_packed(p, rows, k, v0, b, P):
    """Same recursion over F_p, with y-polynomials packed into integers.

    Slot s of a packed integer holds the coefficient of y^s; slots are wide
    enough for sum_{j<i} w_j v_{i-j} without reduction, so one integer
    multiply-add replaces each polynomial product.
    """
    F = Field(p)
    width = 2 * (p - 1).bit_length() + (P * max(k, 1)).bit_length() + 1
    mask = (1 << width) - 1

    def pack(a):
        out = 0
        for c in reversed(a):
            out = (out << width) | c
        return out

    def unpack(n):
        out = []
        while n:
            out.append((n & mask) % p)
            n >>= width
        return out

    ws: list[list] = [[0] * k + [1]]
    vs: list[list] = [v0]
    pw: list[int] = [0]
    pv: list[int] = [pack(v0)]
    for i in range(1, P):
        acc = 0
        for j in range(1, i):
            if pw[j] and pv[i - j]:
                acc += pw[j] * pv[i - j]
        conv = unpack(acc)
        row = rows[i]
        n = max(len(row), len(conv))
        delta = upoly.trim([
            ((row[s] if s < len(row) else 0) - (conv[s] if s < len(conv) else 0)) % p
            for s in range(n)
        ])
        w_i, v_i = _weierstrass_step(F, delta, k, v0, b)
        ws.append(w_i)
        vs.append(v_i)
        pw.append(pack(w_i))
        pv.append(pack(v_i))
    return ws, vs


def _smul(F: Field, a: list, b: list, P: int) -> list:
    return upoly.trim(upoly.mul_trunc(F, a, b, P))


def _reduce_mod_W(F: Field, cols: list[list], W: list[list], P: int) -> list[list]:
    """Remainder of sum_j cols[j] y^j on division by the monic W (series mod x^P)."""
    k = len(W)
    cols = [upoly.truncate(c, P) for c in cols]
    for d in range(len(cols) - 1, k - 1, -1):
        top = cols[d]
        if not top:
            continue
        for j in range(k):
            if W[j]:
                idx = d - k + j
                cols[idx] = upoly.sub(F, cols[idx], _smul(F, top, W[j], P))
        cols[d] = []
    cols = cols[:k] + [[] for _ in range(k - len(cols))]
    return cols


def _dvr_det_order(F: Field, M: list[list[list]], P: int) -> int | None:
    """x-order of det M for a square matrix over K[[x]] known modulo x^P.

    Minimal-valuation pivoting; each pivot of order v costs v digits of
    precision.  Returns None when the order is >= P.
    """
    n = len(M)
    M = [[list(e) for e in row] for row in M]
    prec = P
    total = 0
    for step in range(n):
        best = None
        for i in range(step, n):
            for j in range(step, n):
                v = upoly.order(M[i][j][:prec])
                if v >= 0 and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            return None
        v, i, j = best
        M[step], M[i] = M[i], M[step]
        for row in M:
            row[step], row[j] = row[j], row[step]
        total += v
        if total >= P:
            return None
        piv = M[step][step]
        unit_inv = upoly.inverse_series(F, piv[v:], prec - v)
        new_prec = prec - v
        for r in range(step + 1, n):
            a = M[r][step]
            if not upoly.trim(list(a[:prec])):
                continue
            q = _smul(F, a[v:prec], unit_inv, new_prec)
            for c in range(step + 1, n):
                if M[step][c]:
                    M[r][c] = upoly.sub(F, upoly.truncate(M[r][c], new_prec), _smul(F, q, M[step][c], new_prec))
                else:
                    M[r][c] = upoly.truncate(M[r][c], new_prec)
            M[r][step] = []
        prec = new_prec
    return total


def _local_norm_order(F: Field, f: Poly, g: Poly, P: int) -> int | None:
    k, W = weierstrass(F, g, P)
    if k == 0:
        return 0
    r = _reduce_mod_W(F, f.y_coefficients(), W, P)
    cols = [r]
    for _ in range(1, k):
        prev = cols[-1]
        shifted = [[]] + prev[:-1]
        top = prev[-1]
        if top:
            shifted = [upoly.sub(F, shifted[j], _smul(F, top, W[j], P)) for j in range(k)]
        cols.append(shifted)
    M = [[cols[j][i] for j in range(k)] for i in range(k)]
    return _dvr_det_order(F, M, P)


class LocalChart(NamedTuple):
    swap: bool
    lam: object
    power: int
    k: int


def _bend(f: Poly, lam, j: int) -> Poly:
    """f(x + lam*y^j, y); for j = 1 this is the linear shear."""
    if j == 1:
        return f.shear(lam)
    F = f.field
    acc: dict = {}
    for (a, b), c in f.items():
        for i in range(a + 1):
            key = (i, b + j * (a - i))
            acc[key] = acc.get(key, 0) + c * comb(a, i) * lam ** (a - i)
    out = {e: F.reduce(v) for e, v in acc.items()}
    return Poly._raw(F, {e: v for e, v in out.items() if v != 0}, None if f.truncation is None else f.truncation)


def _order_on_curve(F: Field, g: Poly, lam, j: int) -> int | None:
    """ord_y g(lam*y^j, y), or None if that vanishes."""
    acc: dict = {}
    for (a, b), c in g.items():
        acc[j * a + b] = acc.get(j * a + b, 0) + c * (pow(lam, a) if a else 1)
    ks = [d for d, c in acc.items() if F.reduce(c) != 0]
    return min(ks) if ks else None


def _best_chart(f: Poly, g: Poly) -> tuple[Poly, Poly, LocalChart]:
    """Coordinates in which g(0, y) != 0 with the smallest order k.

    Linear charts (a swap and shears x -> x + lam*y) are tried first; over a
    small field every line through the origin may divide g, and then the
    curved substitutions x -> x + y^j, j = 2, 3, are used.
    """
    F = g.field
    best = None
    for swap in (False, True):
        gg = g.swap() if swap else g
        for lam in _shear_values(F):
            k = _order_on_curve(F, gg, lam, 1)
            if k is None:
                continue
            if best is None or k < best.k:
                best = LocalChart(swap, lam, 1, k)
            if k == gg.order():
                break
    if best is None:
        for j in (2, 3):
            k = _order_on_curve(F, g, 1, j)
            if k is not None:
                best = LocalChart(False, F(1), j, k)
                break
    if best is None:
        raise ShearError(f"no chart found in which g is y-regular over {F.name()}")
    ff, gg = (f.swap(), g.swap()) if best.swap else (f, g)
    if best.power == 1:
        return ff.shear(best.lam), gg.shear(best.lam), best
    if f.truncation is not None or g.truncation is not None:
        # a curved chart mixes total degrees, so truncations no longer line up
        raise ShearError("curved chart needs exact polynomials")
    return _bend(ff, best.lam, best.power), _bend(gg, best.lam, best.power), best


def i0_local(f: Poly, g: Poly, start: int | None = None) -> int:
    """Local intersection number via Weierstrass preparation of g.

    Raises CommonComponentError when f and g share a factor through the
    origin (only decidable for exact polynomials).
    """
    _check_pair(f, g)
    if not (_vanishes_at_origin(f) and _vanishes_at_origin(g)):
        return 0
    F = f.field
    try:
        fs, gs, chart = _best_chart(f, g)
    except ShearError:
        fs, gs, chart = _best_chart(g, f)
    else:
        # prepare whichever series needs the smaller Weierstrass degree
        try:
            a2, b2, chart2 = _best_chart(g, f)
            if chart2.k < chart.k:
                fs, gs, chart = a2, b2, chart2
        except ShearError:
            pass
    exact = f.truncation is None and g.truncation is None
    bezout = fs.degree() * gs.degree()
    P = max(start or 16, chart.k + 2)
    while True:
        val = _local_norm_order(F, fs, gs, P)
        if val is not None:
            return val
        if P > bezout:
            if exact:
                raise CommonComponentError("f and g share a component through the origin")
            raise IndeterminateError("truncated inputs: local norm vanishes to the Bezout bound")
        P = min(2 * P, bezout + 1)


# -- Newton-edge bound ---------------------------------------------------------


@dataclass(frozen=True)
class BoundCheck:
    i0: int
    bracket: int
    parallel: bool
    forms_coprime: bool | None
    equality: bool
    holds: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def intmul_bound_check(f: Poly, g: Poly) -> BoundCheck:
    """i0(f, g) >= [S, T], with equality iff S, T not parallel or the
    edge forms have no common root."""
    _check_pair(f, g)
    Nf, Ng = newton_polygon(f), newton_polygon(g)
    for N in (Nf, Ng):
        if not N.is_convenient or len(N.edges) != 1:
            raise ValueError("elementary (convenient, one-edge) series required")
    S, T = Nf.edges[0], Ng.edges[0]
    i0 = i0_dim_oracle(f, g) if f.truncation is None and g.truncation is None else i0_local(f, g)
    br = bracket(S, T)
    parallel = S.is_parallel(T)
    coprime = None
    if parallel:
        F = f.field
        bf = list(edge_initial(f, S, Nf).binary_form)
        bg = list(edge_initial(g, T, Ng).binary_form)
        coprime = upoly.is_constant(upoly.gcd(F, upoly.trim(bf), upoly.trim(bg)))
        # both forms are nonzero at u = 0 and at infinity, so the affine gcd sees every root
    expected_equality = (not parallel) or bool(coprime)
    equality = i0 == br
    holds = i0 >= br and equality == expected_equality
    return BoundCheck(i0, br, parallel, coprime, equality, holds)


# -- Milnor number -------------------------------------------------------------


class Milnor(NamedTuple):
    value: int | None
    finite: bool
    reason: str

    def to_json(self):
        return self.value if self.finite else "infinite" if self.reason != "undetermined" else None


def milnor_number(f: Poly, start: int | None = None) -> Milnor:
    # ``start`` is only a first guess for the x-precision (e.g. mu-bar + 2)
    """mu(f) = i0(f_x, f_y).

    For a truncated f (known through degree D) the partials are exact modulo
    m^D; a computed value mu < D is certified because m^D lies in m*(f_x, f_y)
    and Nakayama gives the same ideal.  Larger values come back undetermined.
    """
    if f.is_zero():
        raise ZeroPolynomialError("Milnor number of zero")
    fx, fy = f.partial("x"), f.partial("y")
    if fx.is_zero() or fy.is_zero():
        which = "x" if fx.is_zero() else "y"
        if f.truncation is None:
            return Milnor(None, False, f"partial in {which} vanishes identically")
    D = f.truncation
    if D is not None:
        fx, fy = fx.exact(), fy.exact()
        if fx.is_zero() or fy.is_zero():
            return Milnor(None, False, "undetermined")
    if not (_vanishes_at_origin(fx) and _vanishes_at_origin(fy)):
        return Milnor(0, True, "origin is not a critical point")
    try:
        mu = i0_local(fx, fy, start)
    except CommonComponentError:
        if D is None:
            return Milnor(None, False, "partials share a component")
        return Milnor(None, False, "undetermined")
    if D is not None and mu >= D:
        return Milnor(None, False, "undetermined")
    return Milnor(mu, True, "local")


def milnor_polar(f: Poly, params) -> Milnor:
    """Characteristic-0 Milnor number from branch parametrizations.

    Coordinates are first sheared so that no branch is the line x = 0; a
    branch (x(t), y(t)) of f becomes (x(t) - lam*y(t), y(t)) on f(x + lam*y, y).
    """
    F = f.field
    if F.characteristic != 0:
        raise ValueError("the polar identity is only valid in characteristic 0")
    params = list(params)
    for lam in _shear_values(F):
        if all(not (b.xt - b.yt.scale(lam)).is_zero() for b in params):
            break
    else:
        raise ShearError("every tried line is a branch")
    fs = f.shear(lam)
    fy = fs.partial("y")
    polar = 0
    axis = 0
    for b in params:
        xt = b.xt - b.yt.scale(lam)
        polar += i0_param(_Param(xt, b.yt), fy)
        axis += xt.order()
    mu = polar - axis + 1
    if f.truncation is not None and mu >= f.truncation:
        return Milnor(None, False, "undetermined")
    return Milnor(mu, True, "polar")


class _Param(NamedTuple):
    xt: object
    yt: object
