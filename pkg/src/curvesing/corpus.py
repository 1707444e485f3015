"""Deterministic corpus of reduced plane curves given by their branches.

Curve ``k`` of ``generate_corpus(seed, count, chars)`` is built as follows
(``rng = random.Random(seed)``, draws taken in this order):

1. the characteristic is ``chars[k % len(chars)]``;
2. style: "binomial" with probability 0.45, else "mixed";
3. axis factors: x with probability 0.3, then y with probability 0.3;
4. the number of further branches is uniform in [1, 4 - #axes] (at least one
   branch overall);
5. branches are drawn from the style's templates until that many are
   placed; a draw that repeats a branch already present (two branches with
   infinite i0) is redrawn.  A twin draw places two branches, and is
   replaced by a line when only one slot is left.

Templates (coefficients a, b, c nonzero in the field, n prime to the
characteristic so every branch is tame):

* line        (t, a t)
* tangent     (t, a t^j + b t^(j+1)), j in 2..4, or the same with x, y swapped
* binomial    (t^n, c t^m), gcd(n, m) = 1, 2 <= n <= 5, n < m <= 9
* two-term    (t^n, c t^m + b t^(m+k)), gcd(n, m, m+k) = 1, 2 <= n <= 4,
  n < m <= 8, 1 <= k <= 3
* twin        (t, a t^j + b t^(j+1)) and (t, a t^j + b' t^(j+2)),
  j in 2..3: a shared leading term, hence a repeated root of an edge form

Binomial-style curves use only axes, lines and binomials, which makes
non-degenerate curves common; twins in the mixed style make degenerate ones.
"""

from __future__ import annotations

import random
from math import gcd

from .curve import CurveSpec, branch_from_json, fill_pairwise_i0
from .errors import SpecError
from .field import Field

MAX_REDRAWS = 20


def _coeff(rng: random.Random, F: Field) -> int:
    while True:
        c = rng.choice([1, 2, 3, -1, -2, -3, 4, 5, -4, 6])
        if F(c) != 0:
            return c


def _tame_n(rng: random.Random, p: int, lo: int, hi: int) -> int:
    choices = [n for n in range(lo, hi + 1) if p == 0 or n % p]
    return rng.choice(choices)


def _term(c: int, k: int) -> str:
    if k == 0:
        return str(c)
    mon = "t" if k == 1 else f"t^{k}"
    return mon if c == 1 else f"-{mon}" if c == -1 else f"{c}*{mon}"


def _sum(*terms: str) -> str:
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


def _line(rng, F):
    return {"x": "t", "y": _term(_coeff(rng, F), 1)}


def _twin(rng, F):
    j = rng.randint(2, 3)
    a = _coeff(rng, F)
    b = _coeff(rng, F)
    b2 = _coeff(rng, F)
    return [
        {"x": "t", "y": _sum(_term(a, j), _term(b, j + 1))},
        {"x": "t", "y": _sum(_term(a, j), _term(b2, j + 2))},
    ]


def _tangent(rng, F):
    j = rng.randint(2, 4)
    other = _sum(_term(_coeff(rng, F), j), _term(_coeff(rng, F), j + 1))
    if rng.random() < 0.5:
        return {"x": "t", "y": other}
    return {"x": other, "y": "t"}


def _binomial(rng, F):
    p = F.characteristic
    n = _tame_n(rng, p, 2, 5)
    m = rng.choice([m for m in range(n + 1, 10) if gcd(n, m) == 1])
    c = _coeff(rng, F)
    d = {"x": f"t^{n}", "y": _term(c, m)}
    if rng.random() < 0.5:
        d = {"x": d["y"], "y": d["x"]}
    return d


def _two_term(rng, F):
    p = F.characteristic
    n = _tame_n(rng, p, 2, 4)
    while True:
        m = rng.randint(n + 1, 8)
        k = rng.randint(1, 3)
        if gcd(gcd(n, m), m + k) == 1:
            break
    other = _sum(_term(_coeff(rng, F), m), _term(_coeff(rng, F), m + k))
    d = {"x": f"t^{n}", "y": other}
    if rng.random() < 0.5:
        d = {"x": other, "y": d["x"]}
    return d


_MIXED = (_line, _tangent, _binomial, _two_term, _twin)
_BINOMIAL = (_line, _binomial, _binomial)


def _draw_curve(rng: random.Random, F: Field, ident: str) -> CurveSpec:
    style = _BINOMIAL if rng.random() < 0.45 else _MIXED
    items = []
    if rng.random() < 0.3:
        items.append({"x": "0", "y": "t"})
    if rng.random() < 0.3:
        items.append({"x": "t", "y": "0"})
    extra = rng.randint(1, 4 - len(items))
    branches = [branch_from_json(F, it) for it in items]
    placed = 0
    while placed < extra:
        for _attempt in range(MAX_REDRAWS):
            template = rng.choice(style)
            if template is _twin and extra - placed < 2:
                template = _line
            drawn = template(rng, F)
            new_items = drawn if isinstance(drawn, list) else [drawn]
            new = [branch_from_json(F, it) for it in new_items]
            trial = CurveSpec(F, branches + new, id=ident)
            try:
                fill_pairwise_i0(trial)
            except SpecError:
                continue
            branches += new
            items += new_items
            break
        placed += len(new_items)
    return CurveSpec(F, branches, id=ident)


def generate_corpus(seed: int, count: int, chars=(0, 2, 3, 5, 7)) -> list[CurveSpec]:
    chars = list(chars)
    if not chars:
        raise ValueError("need at least one characteristic")
    fields = [Field(p) for p in chars]
    rng = random.Random(seed)
    width = max(4, len(str(count - 1)))
    return [
        _draw_curve(rng, fields[k % len(fields)], f"s{seed}-{k:0{width}d}")
        for k in range(count)
    ]
