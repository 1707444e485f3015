"""Sylvester resultants in y of bivariate polynomials.

The determinant is evaluated with fraction-free (Bareiss) elimination over
K[x], so every intermediate entry stays a polynomial and each division is
exact.  Sign convention: rows of ``f`` first, then rows of ``g``, each row
listing coefficients from the highest power of y down.
"""

from __future__ import annotations

from . import upoly
from .errors import FieldMismatchError, IndeterminateError, ZeroPolynomialError
from .field import Field
from .poly import Poly, UniSeries


def sylvester_matrix(F: Field, fc: list[list], gc: list[list]) -> list[list[list]]:
    """Sylvester matrix from y-coefficient lists (entry j multiplies y^j)."""
    n, m = len(fc) - 1, len(gc) - 1
    size = n + m
    rows = []
    for i in range(m):
        row = [[] for _ in range(size)]
        for j, c in enumerate(reversed(fc)):
            row[i + j] = list(c)
        rows.append(row)
    for i in range(n):
        row = [[] for _ in range(size)]
        for j, c in enumerate(reversed(gc)):
            row[i + j] = list(c)
        rows.append(row)
    return rows


def bareiss_det(F: Field, M: list[list[list]]) -> list:
    """Determinant of a square matrix over K[x] by Bareiss elimination."""
    n = len(M)
    if n == 0:
        return [1]
    M = [[list(e) for e in row] for row in M]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not M[k][k]:
            for r in range(k + 1, n):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return []
        pivot = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            for j in range(k + 1, n):
                num = upoly.sub(F, upoly.mul(F, pivot, M[i][j]), upoly.mul(F, mik, M[k][j]))
                M[i][j] = upoly.exact_div(F, num, prev) if num else []
            M[i][k] = []
        prev = pivot
    det = M[n - 1][n - 1]
    return upoly.scale(F, det, F(sign)) if det else []


def resultant_y_dense(f: Poly, g: Poly) -> list:
    """Res_y(f, g) as a dense polynomial in x."""
    if f.field != g.field:
        raise FieldMismatchError("field mismatch")
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("resultant of a zero polynomial")
    if f.is_truncated() or g.is_truncated():
        raise IndeterminateError("resultant of a truncated series is not defined")
    F = f.field
    fc, gc = f.y_coefficients(), g.y_coefficients()
    return bareiss_det(F, sylvester_matrix(F, fc, gc))


def resultant_y(f: Poly, g: Poly) -> UniSeries:
    """Exact Sylvester resultant eliminating y, returned as a series in x."""
    dense = resultant_y_dense(f, g)
    return UniSeries.from_dense(f.field, dense)
