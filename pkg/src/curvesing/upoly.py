"""Dense univariate polynomials over a :class:`~curvesing.field.Field`.

A polynomial is a list of coefficients, lowest degree first, with no trailing
zeros; the zero polynomial is ``[]``.  These helpers back the resultant
machinery, binary-form squarefree tests, Weierstrass preparation and the
Bareiss determinant, so they favour plain loops over abstraction.
"""

from __future__ import annotations

from .field import Field


def trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a: list) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(a) - 1


def order(a: list) -> int:
    """Lowest exponent with a nonzero coefficient; -1 for zero."""
    for i, c in enumerate(a):
        if c != 0:
            return i
    return -1


def add(F: Field, a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.reduce(out[i] + c)
    return trim(out)


def sub(F: Field, a: list, b: list) -> list:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = F.reduce(out[i] - c)
    return trim(out)


def scale(F: Field, a: list, c) -> list:
    if c == 0:
        return []
    return trim([F.reduce(x * c) for x in a])


KRONECKER_MIN = 12


def _kron_mul(p: int, a: list, b: list) -> list:
    """Product of mod-p coefficient lists through one big-integer multiplication.

    Coefficients are packed into fixed-width byte slots wide enough for the
    unreduced convolution sums, so the integer product carries them exactly.
    """
    n = min(len(a), len(b))
    width = ((2 * (p - 1).bit_length() + n.bit_length()) // 8) + 1
    ia = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in a), "little")
    ib = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in b), "little")
    m = len(a) + len(b) - 1
    raw = (ia * ib).to_bytes(m * width, "little")
    return [int.from_bytes(raw[i * width:(i + 1) * width], "little") % p for i in range(m)]


def mul(F: Field, a: list, b: list) -> list:
    if not a or not b:
        return []
    p = F.characteristic
    if p and min(len(a), len(b)) >= KRONECKER_MIN:
        return trim(_kron_mul(p, a, b))
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    if p:
        out = [c % p for c in out]
    return trim(out)


def mul_trunc(F: Field, a: list, b: list, n: int) -> list:
    """Product modulo t^n."""
    if not a or not b or n <= 0:
        return []
    a, b = a[:n], b[:n]
    p = F.characteristic
    if p and min(len(a), len(b)) >= KRONECKER_MIN:
        return trim(_kron_mul(p, a, b)[:n])
    out = [0] * min(n, len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b[: n - i]):
            out[i + j] += x * y
    if p:
        out = [c % p for c in out]
    return trim(out)


def divmod_(F: Field, a: list, b: list) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    inv_lc = F.inv(b[-1])
    if len(r) - 1 < db:
        return [], r
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db]
        if c == 0:
            continue
        c = F.reduce(c * inv_lc)
        q[k] = c
        for j, y in enumerate(b):
            r[k + j] = F.reduce(r[k + j] - c * y)
    return trim(q), trim(r[:db])


def exact_div(F: Field, a: list, b: list) -> list:
    q, r = divmod_(F, a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def monic(F: Field, a: list) -> list:
    if not a:
        return []
    return scale(F, a, F.inv(a[-1]))


def gcd(F: Field, a: list, b: list) -> list:
    """Monic gcd; gcd(0, 0) = 0."""
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, divmod_(F, a, b)[1]
    return monic(F, a)


def deriv(F: Field, a: list) -> list:
    return trim([F.reduce(i * c) for i, c in enumerate(a)][1:])


def is_constant(a: list) -> bool:
    return len(a) <= 1


def shift(a: list, k: int) -> list:
    """Multiply by t^k."""
    return [0] * k + list(a) if a else []


def strip_order(a: list) -> list:
    """Remove the largest power of t dividing ``a``."""
    k = order(a)
    return list(a[k:]) if k > 0 else list(a)


def pth_root(F: Field, a: list) -> list:
    """The p-th root of a polynomial whose derivative vanishes (Frobenius is the identity on F_p)."""
    p = F.characteristic
    if not p:
        raise ValueError("p-th root needs positive characteristic")
    if any(c != 0 for i, c in enumerate(a) if i % p):
        raise ValueError("polynomial is not a p-th power")
    return trim([a[i] for i in range(0, len(a), p)])


def sqf_list(F: Field, a: list) -> list[tuple[list, int]]:
    """Squarefree decomposition of a nonzero polynomial.

    Returns pairs ``(g, k)`` with ``g`` monic, squarefree and pairwise coprime,
    such that ``a = lc(a) * prod g**k``.  Works in every characteristic
    (Yun's algorithm, with p-th roots taken when the derivative vanishes).
    """
    if not a:
        raise ValueError("squarefree decomposition of zero")
    f = monic(F, a)
    if len(f) == 1:
        return []
    out: list[tuple[list, int]] = []
    _sqf_into(F, f, 1, out)
    out.sort(key=lambda t: t[1])
    return out


def _sqf_into(F: Field, f: list, mult: int, out: list) -> None:
    p = F.characteristic
    df = deriv(F, f)
    if not df:
        _sqf_into(F, pth_root(F, f), mult * p, out)
        return
    c = gcd(F, f, df)
    w = exact_div(F, f, c)
    i = 1
    while len(w) > 1:
        y = gcd(F, w, c)
        z = exact_div(F, w, y)
        if len(z) > 1:
            out.append((z, i * mult))
        i += 1
        w = y
        c = exact_div(F, c, y)
    if len(c) > 1:
        # only reachable in characteristic p: c is a p-th power
        _sqf_into(F, pth_root(F, c), mult * p, out)


def is_squarefree(F: Field, a: list) -> bool:
    """Squarefree over the algebraic closure (valid because Q and F_p are perfect)."""
    if not a:
        return False
    return is_constant(gcd(F, a, deriv(F, a)))


def evaluate(F: Field, a: list, t):
    acc = 0
    for c in reversed(a):
        acc = F.reduce(acc * t + c)
    return acc


def truncate(a: list, n: int) -> list:
    return trim(list(a[:n]))


def inverse_series(F: Field, a: list, n: int) -> list:
    """Power-series inverse of ``a`` modulo t^n (requires a[0] != 0)."""
    if not a or a[0] == 0:
        raise ZeroDivisionError("series not invertible")
    inv0 = F.inv(a[0])
    out = [0] * n
    for k in range(n):
        s = 1 if k == 0 else 0
        for j in range(1, min(k, len(a) - 1) + 1):
            s -= a[j] * out[k - j]
        out[k] = F.reduce(s * inv0)
    return trim(out)
