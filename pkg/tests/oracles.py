"""Independent, deliberately naive reference computations for the tests.

Nothing here imports the package's geometry or semigroup code; the oracles
work from raw supports, integer boxes and sympy.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

import sympy

X, Y, T = sympy.symbols("x y t")


def brute_edges(support):
    """Compact faces of conv(support + R_{>=0}^2) with a strictly positive normal.

    Every pair of points spans a candidate line; it is a face when all points
    lie on or above it.  Each face is reported from its leftmost to its
    rightmost point on the line.
    """
    pts = sorted(set(support))
    faces = set()
    for P, Q in combinations(pts, 2):
        (a1, b1), (a2, b2) = P, Q
        if not (a1 < a2 and b1 > b2) and not (a2 < a1 and b2 > b1):
            continue
        na, nb = abs(b1 - b2), abs(a2 - a1)
        level = na * a1 + nb * b1
        if all(na * a + nb * b >= level for a, b in pts):
            on = [R for R in pts if na * R[0] + nb * R[1] == level]
            faces.add((min(on), max(on)))
    return sorted(faces)


def brute_offsets(support):
    return min(a for a, _ in support), min(b for _, b in support)


def _below_height(edges, a):
    for (a1, b1), (a2, b2) in edges:
        if a1 <= a <= a2:
            return b1 + Fraction(b2 - b1, a2 - a1) * (a - a1)
    return None


def brute_lattice(edges):
    """(points on the polygon, points on or under it off the axes, twice the area).

    Only for convenient polygons: the chain runs from (0, n) to (m, 0).
    """
    m = edges[-1][1][0]
    n = edges[0][0][1]
    on = below = 0
    for a in range(m + 1):
        h = _below_height(edges, a)
        for b in range(n + 1):
            if b == h:
                on += 1
            if b <= h and a > 0 and b > 0:
                below += 1
    # twice the area under the chain, by the trapezoid rule
    twice = sum((a2 - a1) * (b1 + b2) for (a1, b1), (a2, b2) in edges)
    return on, below, twice


def semigroup_members(gens, bound):
    """Set of elements of <gens> below bound, by plain dynamic programming."""
    ok = [False] * bound
    if bound:
        ok[0] = True
    for k in range(1, bound):
        ok[k] = any(k >= g and ok[k - g] for g in gens)
    return {k for k in range(bound) if ok[k]}


def brute_conductor(gens):
    g0 = 0
    for g in gens:
        g0 = gcd(g0, g)
    assert g0 == 1
    bound = max(gens) * max(gens) + 2
    members = semigroup_members(gens, bound)
    gaps = [k for k in range(bound) if k not in members]
    return gaps[-1] + 1 if gaps else 0


def minimal_generators(gens):
    out = []
    for g in sorted(set(gens)):
        if not out or g not in semigroup_members(out, g + 1):
            out.append(g)
    return out


def to_sympy(f):
    """Package Poly -> sympy expression (coefficients as stored)."""
    return sympy.expand(sum(
        (sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c) * X**a * Y**b
        for (a, b), c in f.items()
    ))


def sympy_terms(expr, p=0):
    """sympy expression -> {(a, b): c} with coefficients reduced mod p."""
    P = sympy.Poly(sympy.expand(expr), X, Y)
    out = {}
    for (a, b), c in P.terms():
        c = sympy.Rational(c)
        if p:
            c = int(c.p) * pow(int(c.q), -1, p) % p
            if c == 0:
                continue
        else:
            c = Fraction(int(c.p), int(c.q))
        out[(a, b)] = c
    return out


def sympy_i0_resultant(f_expr, g_expr):
    """ord_x Res_y(f, g) over Q; the caller picks pairs whose only common
    point on the line x = 0 (at finite or infinite y) is the origin."""
    R = sympy.resultant(f_expr, g_expr, Y)
    R = sympy.Poly(sympy.expand(R), X)
    if R.is_zero:
        return None
    return min(m[0] for m in R.monoms())


def sympy_squarefree_count(coeffs, p):
    """Distinct roots (in the algebraic closure) of the affine polynomial with
    the given dense coefficients, by sympy's square-free decomposition."""
    u = sympy.Symbol("u")
    expr = sum(c * u**i for i, c in enumerate(coeffs))
    P = sympy.Poly(expr, u, modulus=p) if p else sympy.Poly(expr, u)
    _, factors = sympy.sqf_list(P)
    return sum(fac.degree() for fac, _ in factors), all(m == 1 for _, m in factors)
