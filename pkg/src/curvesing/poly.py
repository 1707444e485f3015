"""Sparse bivariate polynomials / truncated power series in x, y and
univariate series in t, with exact coefficients.

Truncation
----------
A ``truncation`` (``None`` for an exact polynomial) is a total-degree bound
``D``: the object is only known modulo terms of degree ``> D``.  Ring
operations propagate it conservatively, and any query whose answer could
depend on the unknown tail raises :class:`IndeterminateError`.

Canonical rendering sorts terms by (total degree, x-exponent) ascending, so
``x^2 + y^3`` and ``y^3 - x^2*y - x^2*y^2 + x^4`` print in that order.
"""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction

from . import upoly
from .errors import (
    ExponentOverflowError,
    FieldMismatchError,
    IndeterminateError,
    PolySyntaxError,
    ZeroPolynomialError,
)
from .field import Field

MAX_EXPONENT = 2**63 - 1


def _min_trunc(*bounds):
    known = [b for b in bounds if b is not None]
    return min(known) if known else None


def _check_exp(e: int) -> None:
    if e > MAX_EXPONENT:
        raise ExponentOverflowError(f"exponent {e} exceeds 64-bit range")


class Poly:
    """Element of K[x, y] (or of K[[x, y]] known up to a total degree)."""

    __slots__ = ("field", "_terms", "truncation", "_hash")

    def __init__(self, field: Field, terms: Mapping | None = None, truncation: int | None = None):
        self.field = field
        self.truncation = truncation
        clean = {}
        if terms:
            for (a, b), c in terms.items():
                if a < 0 or b < 0:
                    raise ValueError(f"negative exponent in term {(a, b)}")
                _check_exp(a)
                _check_exp(b)
                if truncation is not None and a + b > truncation:
                    continue
                c = field(c)
                if c != 0:
                    clean[(int(a), int(b))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, field: Field, terms: dict, truncation=None) -> Poly:
        # trusted constructor: coefficients already reduced and nonzero
        obj = cls.__new__(cls)
        obj.field = field
        obj._terms = terms
        obj.truncation = truncation
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> Poly:
        return cls._raw(field, {})

    @classmethod
    def constant(cls, field: Field, c=1) -> Poly:
        return cls(field, {(0, 0): c})

    @classmethod
    def monomial(cls, field: Field, a: int, b: int, c=1) -> Poly:
        return cls(field, {(a, b): c})

    @classmethod
    def x(cls, field: Field) -> Poly:
        return cls.monomial(field, 1, 0)

    @classmethod
    def y(cls, field: Field) -> Poly:
        return cls.monomial(field, 0, 1)

    # -- basic access -------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, a: int, b: int):
        return self._terms.get((a, b), 0)

    def support(self) -> list[tuple[int, int]]:
        return sorted(self._terms, key=lambda e: (e[0] + e[1], e[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def is_truncated(self) -> bool:
        return self.truncation is not None

    def __len__(self):
        return len(self._terms)

    def degree(self) -> int:
        """Total degree of the stored terms (-1 for zero)."""
        return max((a + b for a, b in self._terms), default=-1)

    def degree_x(self) -> int:
        return max((a for a, _ in self._terms), default=-1)

    def degree_y(self) -> int:
        return max((b for _, b in self._terms), default=-1)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return (
            self.field == other.field
            and self.truncation == other.truncation
            and self._terms == other._terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.truncation, frozenset(self._terms.items())))
        return self._hash

    def same_terms(self, other: Poly) -> bool:
        """Equality of stored terms, ignoring truncation flags."""
        return self.field == other.field and self._terms == other._terms

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: Poly) -> None:
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field.name()} vs {other.field.name()}")

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = F.reduce(out.get(e, 0) + c)
            if s != 0:
                out[e] = s
            else:
                out.pop(e, None)
        t = _min_trunc(self.truncation, other.truncation)
        if t is not None:
            out = {e: c for e, c in out.items() if e[0] + e[1] <= t}
        return Poly._raw(F, out, t)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Poly._raw(F, {e: F.reduce(-c) for e, c in self._terms.items()}, self.truncation)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> Poly:
        F = self.field
        c = F(c)
        if c == 0:
            return Poly._raw(F, {}, self.truncation)
        return Poly._raw(F, {e: F.reduce(v * c) for e, v in self._terms.items()}, self.truncation)

    def _product_truncation(self, other: Poly):
        tf, tg = self.truncation, other.truncation
        if tf is None and tg is None:
            return None
        bounds = []
        if tf is not None:
            bounds.append(tf + (other.order() if not other.is_zero() else tf))
        if tg is not None:
            bounds.append(tg + (self.order() if not self.is_zero() else tg))
        return min(bounds)

    def mul(self, other: Poly, bound: int | None = None) -> Poly:
        """Product, dropping terms of total degree above ``bound`` if given."""
        self._check(other)
        F = self.field
        t = _min_trunc(self._product_truncation(other), bound)
        acc: dict = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                a, b = a1 + a2, b1 + b2
                if t is not None and a + b > t:
                    continue
                acc[(a, b)] = acc.get((a, b), 0) + c1 * c2
        p = F.characteristic
        if p:
            out = {e: c % p for e, c in acc.items() if c % p}
        else:
            out = {e: c for e, c in acc.items() if c != 0}
        if bound is not None:
            t = bound if t is None else min(t, bound)
        return Poly._raw(F, out, t)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.mul(other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.constant(self.field, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def truncate(self, bound: int) -> Poly:
        t = _min_trunc(self.truncation, bound)
        return Poly._raw(
            self.field, {e: c for e, c in self._terms.items() if e[0] + e[1] <= bound}, t
        )

    def exact(self) -> Poly:
        """Drop the truncation flag (caller asserts the stored terms are the whole series)."""
        return Poly._raw(self.field, dict(self._terms), None)

    # -- local invariants ---------------------------------------------------

    def order(self) -> int:
        """min{a + b : c_ab != 0}."""
        if not self._terms:
            if self.truncation is not None:
                raise IndeterminateError(
                    f"series vanishes up to degree {self.truncation}; order indeterminate"
                )
            raise ZeroPolynomialError("order of the zero polynomial")
        return min(a + b for a, b in self._terms)

    def initial_part(self) -> Poly:
        k = self.order()
        return Poly._raw(self.field, {e: c for e, c in self._terms.items() if e[0] + e[1] == k})

    def extract_monomial(self) -> tuple[int, int, Poly]:
        """Write f = x^d1 y^d2 g with d1, d2 maximal."""
        if not self._terms:
            raise ZeroPolynomialError("extract_monomial of the zero polynomial")
        d1 = min(a for a, _ in self._terms)
        d2 = min(b for _, b in self._terms)
        g = {(a - d1, b - d2): c for (a, b), c in self._terms.items()}
        t = None if self.truncation is None else self.truncation - d1 - d2
        return d1, d2, Poly._raw(self.field, g, t)

    def is_convenient(self) -> bool:
        """f(x,0) * f(0,y) != 0."""
        has_x = any(b == 0 for _, b in self._terms)
        has_y = any(a == 0 for a, _ in self._terms)
        return has_x and has_y

    def partial(self, var: str) -> Poly:
        F = self.field
        out = {}
        if var == "x":
            for (a, b), c in self._terms.items():
                v = F.reduce(a * c)
                if v:
                    out[(a - 1, b)] = v
        elif var == "y":
            for (a, b), c in self._terms.items():
                v = F.reduce(b * c)
                if v:
                    out[(a, b - 1)] = v
        else:
            raise ValueError(f"unknown variable {var!r}")
        t = None if self.truncation is None else self.truncation - 1
        return Poly._raw(F, out, t)

    # -- coordinate changes -------------------------------------------------

    def swap(self) -> Poly:
        """f(y, x)."""
        return Poly._raw(self.field, {(b, a): c for (a, b), c in self._terms.items()}, self.truncation)

    def shear(self, lam) -> Poly:
        """f(x + lam*y, y)."""
        F = self.field
        lam = F(lam)
        if lam == 0:
            return self
        # (x + lam*y)^a = sum_i binom(a, i) lam^(a-i) x^i y^(a-i)
        amax = max((a for a, _ in self._terms), default=0)
        rows = [[1]]
        for a in range(1, amax + 1):
            prev = rows[-1]
            rows.append([1] + [prev[i - 1] + prev[i] for i in range(1, a)] + [1])
        lam_pow = [1]
        for _ in range(amax):
            lam_pow.append(F.reduce(lam_pow[-1] * lam))
        acc: dict = {}
        for (a, b), c in self._terms.items():
            for i in range(a + 1):
                key = (i, b + a - i)
                acc[key] = acc.get(key, 0) + c * rows[a][i] * lam_pow[a - i]
        out = {e: F.reduce(v) for e, v in acc.items()}
        return Poly._raw(F, {e: v for e, v in out.items() if v != 0}, self.truncation)

    def restrict_x0(self) -> list:
        """f(0, y) as a dense list in y."""
        deg = max((b for a, b in self._terms if a == 0), default=-1)
        out = [0] * (deg + 1)
        for (a, b), c in self._terms.items():
            if a == 0:
                out[b] = c
        return out

    def y_coefficients(self) -> list[list]:
        """f as a polynomial in y: entry j is the dense x-polynomial multiplying y^j."""
        deg = self.degree_y()
        cols: list[list] = [[] for _ in range(deg + 1)]
        for (a, b), c in self._terms.items():
            col = cols[b]
            if len(col) <= a:
                col.extend([0] * (a + 1 - len(col)))
            col[a] = c
        return cols

    @classmethod
    def from_y_coefficients(cls, field: Field, cols: list[list], truncation=None) -> Poly:
        out = {}
        for b, col in enumerate(cols):
            for a, c in enumerate(col):
                if c != 0:
                    out[(a, b)] = c
        return cls._raw(field, out, truncation)

    # -- evaluation ----------------------------------------------------------

    def substitute_param(self, xt: UniSeries, yt: UniSeries, bound: int) -> UniSeries:
        """g(x(t), y(t)) modulo t^(bound+1)."""
        return substitute_param(self, xt, yt, bound)

    # -- text ---------------------------------------------------------------

    def render(self) -> str:
        return render_poly(self)

    def __str__(self):
        return self.render()

    def __repr__(self):
        tail = "" if self.truncation is None else f", truncation={self.truncation}"
        return f"Poly({self.render()!r}, {self.field.name()}{tail})"


class UniSeries:
    """Element of K[t] or K[[t]] known modulo t^(truncation+1)."""

    __slots__ = ("field", "_terms", "truncation")

    def __init__(self, field: Field, terms: Mapping | None = None, truncation: int | None = None):
        self.field = field
        self.truncation = truncation
        clean = {}
        if terms:
            for k, c in terms.items():
                if k < 0:
                    raise ValueError("negative exponent")
                _check_exp(k)
                if truncation is not None and k > truncation:
                    continue
                c = field(c)
                if c != 0:
                    clean[int(k)] = c
        self._terms = clean

    @classmethod
    def _raw(cls, field, terms, truncation=None):
        obj = cls.__new__(cls)
        obj.field = field
        obj._terms = terms
        obj.truncation = truncation
        return obj

    @classmethod
    def from_dense(cls, field: Field, coeffs: list, truncation=None) -> UniSeries:
        return cls(field, {i: c for i, c in enumerate(coeffs) if c != 0}, truncation)

    @classmethod
    def monomial(cls, field: Field, k: int, c=1) -> UniSeries:
        return cls(field, {k: c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, k: int):
        return self._terms.get(k, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def exponents(self) -> list[int]:
        return sorted(self._terms)

    def degree(self) -> int:
        return max(self._terms, default=-1)

    def dense(self) -> list:
        out = [0] * (self.degree() + 1)
        for k, c in self._terms.items():
            out[k] = c
        return out

    def order(self) -> int:
        if not self._terms:
            if self.truncation is not None:
                raise IndeterminateError(
                    f"series vanishes modulo t^{self.truncation + 1}; order indeterminate"
                )
            raise ZeroPolynomialError("order of the zero series")
        return min(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __eq__(self, other):
        if not isinstance(other, UniSeries):
            return NotImplemented
        return (
            self.field == other.field
            and self.truncation == other.truncation
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.field, self.truncation, frozenset(self._terms.items())))

    def __add__(self, other: UniSeries) -> UniSeries:
        if self.field != other.field:
            raise FieldMismatchError("field mismatch")
        F = self.field
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = F.reduce(out.get(k, 0) + c)
            if s != 0:
                out[k] = s
            else:
                out.pop(k, None)
        t = _min_trunc(self.truncation, other.truncation)
        if t is not None:
            out = {k: c for k, c in out.items() if k <= t}
        return UniSeries._raw(F, out, t)

    def __neg__(self):
        F = self.field
        return UniSeries._raw(F, {k: F.reduce(-c) for k, c in self._terms.items()}, self.truncation)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> UniSeries:
        F = self.field
        c = F(c)
        return UniSeries._raw(
            F, {k: F.reduce(v * c) for k, v in self._terms.items()} if c else {}, self.truncation
        )

    def mul(self, other: UniSeries, bound: int | None = None) -> UniSeries:
        if self.field != other.field:
            raise FieldMismatchError("field mismatch")
        F = self.field
        bounds = []
        if self.truncation is not None:
            bounds.append(self.truncation + (min(other._terms) if other._terms else self.truncation))
        if other.truncation is not None:
            bounds.append(other.truncation + (min(self._terms) if self._terms else other.truncation))
        if bound is not None:
            bounds.append(bound)
        t = min(bounds) if bounds else None
        acc: dict = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                if t is not None and k > t:
                    continue
                acc[k] = acc.get(k, 0) + c1 * c2
        p = F.characteristic
        if p:
            out = {k: c % p for k, c in acc.items() if c % p}
        else:
            out = {k: c for k, c in acc.items() if c != 0}
        return UniSeries._raw(F, out, t)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return self.mul(other)

    def render(self, var: str = "t") -> str:
        return render_terms(self.field, [((k,), c) for k, c in sorted(self._terms.items())], (var,))

    def __str__(self):
        return self.render()

    def __repr__(self):
        tail = "" if self.truncation is None else f", truncation={self.truncation}"
        return f"UniSeries({self.render()!r}, {self.field.name()}{tail})"


# -- operations named by the module contract ---------------------------------


def order(f: Poly) -> int:
    return f.order()


def initial_part(f: Poly) -> Poly:
    return f.initial_part()


def extract_monomial(f: Poly) -> tuple[int, int, Poly]:
    return f.extract_monomial()


def multiply_truncated(f: Poly, g: Poly, bound: int) -> Poly:
    """Product with every term of total degree above ``bound`` dropped; the
    result is flagged as truncated at ``bound``."""
    return f.mul(g, bound=bound)


def partial(f: Poly, variable: str) -> Poly:
    return f.partial(variable)


def substitute_param(f: Poly, xt: UniSeries, yt: UniSeries, bound: int) -> UniSeries:
    """Compose g(x(t), y(t)) modulo t^(bound+1)."""
    F = f.field
    if xt.field != F or yt.field != F:
        raise FieldMismatchError("parametrization over a different field")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    for s in (xt, yt):
        if not s.is_zero() and s.order() < 1:
            raise ValueError("parametrization components must have positive order")
    xs, ys = [UniSeries.monomial(F, 0)], [UniSeries.monomial(F, 0)]
    max_a = max((a for (a, _), _c in f.items()), default=0)
    max_b = max((b for (_, b), _c in f.items()), default=0)
    for _ in range(max_a):
        xs.append(xs[-1].mul(xt, bound))
    for _ in range(max_b):
        ys.append(ys[-1].mul(yt, bound))
    acc: dict = {}
    t = bound
    for (a, b), c in f.items():
        term = xs[a].mul(ys[b], bound)
        if term.truncation is not None:
            t = min(t, term.truncation)
        for k, v in term.items():
            acc[k] = acc.get(k, 0) + c * v
    if f.truncation is not None:
        # unknown terms of f have total degree > D, hence t-order > D
        t = min(t, f.truncation)
    out = {k: F.reduce(v) for k, v in acc.items() if k <= t}
    return UniSeries._raw(F, {k: v for k, v in out.items() if v != 0}, t)


# -- rendering ---------------------------------------------------------------


def _fmt_coeff(field: Field, c) -> tuple[str, str]:
    """Split a coefficient into (sign, magnitude string)."""
    c = field.signed(c)
    sign = "-" if c < 0 else "+"
    mag = -c if c < 0 else c
    return sign, str(mag)


def render_terms(field: Field, terms: list, names: tuple[str, ...]) -> str:
    if not terms:
        return "0"
    parts = []
    for exps, c in terms:
        sign, mag = _fmt_coeff(field, c)
        mono = "*".join(
            (n if e == 1 else f"{n}^{e}") for n, e in zip(names, exps) if e
        )
        if not mono:
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = f"{mag}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def render_poly(f: Poly) -> str:
    return render_terms(f.field, [(e, f.coefficient(*e)) for e in f.support()], ("x", "y"))


# -- parsing -----------------------------------------------------------------
#
#   expr    := term (("+" | "-") term)*
#   term    := unary (("*" | "/") unary)*        "/" only by a nonzero constant
#   unary   := ("+" | "-") unary | power
#   power   := atom ("^" INT)?                    "**" is accepted for "^"
#   atom    := INT | VAR | "(" expr ")"
#
# Whitespace is ignored.  Coefficients are exact rationals until the final
# reduction into the target field.


class _Parser:
    def __init__(self, text: str, names: tuple[str, ...]):
        self.text = text
        self.names = names
        self.tokens = self._tokenize(text)
        self.i = 0

    def _tokenize(self, text):
        toks = []
        j = 0
        n = len(text)
        while j < n:
            ch = text[j]
            if ch.isspace():
                j += 1
            elif ch.isdigit():
                k = j
                while k < n and text[k].isdigit():
                    k += 1
                toks.append(("int", int(text[j:k]), j))
                j = k
            elif ch.isalpha() or ch == "_":
                k = j
                while k < n and (text[k].isalnum() or text[k] == "_"):
                    k += 1
                name = text[j:k]
                if name not in self.names:
                    raise PolySyntaxError(f"unknown variable {name!r}", text, j)
                toks.append(("var", name, j))
                j = k
            elif text.startswith("**", j):
                toks.append(("op", "^", j))
                j += 2
            elif ch in "+-*/^()":
                toks.append(("op", ch, j))
                j += 1
            else:
                raise PolySyntaxError(f"unexpected character {ch!r}", text, j)
        toks.append(("end", None, n))
        return toks

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise PolySyntaxError(msg, self.text, tok[2])

    def parse(self) -> dict:
        if self.peek()[0] == "end":
            self.error("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.error("unexpected token")
        return value

    # polynomials here are dicts {exponent tuple: Fraction}
    def _add(self, a, b, sign=1):
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + sign * c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return out

    def _mul(self, a, b):
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return {e: c for e, c in out.items() if c}

    def expr(self):
        value = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = self._add(value, rhs, 1 if op == "+" else -1)
        return value

    def term(self):
        value = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op_tok = self.take()
            rhs = self.unary()
            if op_tok[1] == "*":
                value = self._mul(value, rhs)
            else:
                zero = tuple(0 for _ in self.names)
                if set(rhs) - {zero} or not rhs:
                    self.error("division only by a nonzero constant", op_tok)
                d = rhs[zero]
                value = {e: Fraction(c) / d for e, c in value.items()}
        return value

    def unary(self):
        tok = self.peek()
        if tok[:2] == ("op", "-"):
            self.take()
            return {e: -c for e, c in self.unary().items()}
        if tok[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                self.error("exponent must be a nonnegative integer literal")
            self.take()
            k = tok[1]
            if k > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent {k} exceeds 64-bit range")
            result = {tuple(0 for _ in self.names): Fraction(1)}
            b = base
            while k:
                if k & 1:
                    result = self._mul(result, b)
                k >>= 1
                if k:
                    b = self._mul(b, b)
            return result
        return base

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            if tok[1] == 0:
                return {}
            return {tuple(0 for _ in self.names): Fraction(tok[1])}
        if tok[0] == "var":
            self.take()
            return {tuple(int(n == tok[1]) for n in self.names): Fraction(1)}
        if tok[:2] == ("op", "("):
            self.take()
            value = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.error("expected ')'")
            self.take()
            return value
        self.error("expected a number, variable or '('")


def parse_poly(text: str, field: Field) -> Poly:
    """Parse an arithmetic expression in x, y into an expanded polynomial."""
    raw = _Parser(text, ("x", "y")).parse()
    return Poly(field, raw)


def parse_series(text: str, field: Field, var: str = "t") -> UniSeries:
    """Parse a univariate expression (default variable t)."""
    raw = _Parser(text, (var,)).parse()
    return UniSeries(field, {e[0]: c for e, c in raw.items()})
