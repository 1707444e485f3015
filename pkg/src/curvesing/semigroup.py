"""Value semigroups of plane branches.

A branch semigroup is given by its minimal generators v_0 < v_1 < ... < v_g
with e_i = gcd(v_0, ..., v_i) and n_i = e_{i-1} / e_i.  For a plane branch
(e strictly decreasing to 1 and n_k v_k < v_{k+1}) the conductor is

    c = sum_{k=1}^{g} (n_k - 1) v_k - v_0 + 1,

and the Puiseux characteristic b_0, ..., b_g satisfies
b_0 = v_0, b_1 = v_1 and v_{k+1} = n_k v_k + b_{k+1} - b_k.

``conductor_by_gaps`` recomputes the conductor by brute-force membership and
is the independent check on the closed formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .errors import InadmissibleSemigroupError


def _gcd_all(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def membership_mask(gens, limit: int) -> int:
    """Bitmask of the semigroup elements in [0, limit) (bit k set iff k is in it)."""
    full = (1 << limit) - 1
    mask = 1
    for g in gens:
        step = g
        while step < limit:
            mask = (mask | (mask << step)) & full
            step *= 2
    return mask


def _minimal_system(gens: list[int]) -> list[int]:
    out: list[int] = []
    for v in sorted(set(gens)):
        if out and (membership_mask(out, v + 1) >> v) & 1:
            continue
        out.append(v)
    return out


@dataclass(frozen=True)
class Semigroup:
    generators: tuple[int, ...]
    e: tuple[int, ...]
    n: tuple[int, ...]
    conductor: int
    plane: bool

    @property
    def g(self) -> int:
        return len(self.generators) - 1

    def __contains__(self, k: int) -> bool:
        if k < 0:
            return False
        if k >= self.conductor:
            return True
        return bool((membership_mask(self.generators, k + 1) >> k) & 1)

    def gaps(self) -> list[int]:
        mask = membership_mask(self.generators, self.conductor)
        return [k for k in range(self.conductor) if not (mask >> k) & 1]

    def elements_below(self, bound: int) -> list[int]:
        mask = membership_mask(self.generators, bound)
        return [k for k in range(bound) if (mask >> k) & 1]

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "e": list(self.e),
            "n": list(self.n),
            "conductor": self.conductor,
            "plane": self.plane,
        }


def is_plane_system(gens) -> bool:
    """Admissibility for a plane branch: e strictly decreasing to 1, n_k v_k < v_{k+1}."""
    gens = list(gens)
    if not gens or gens[0] < 1:
        return False
    e = [gens[0]]
    for v in gens[1:]:
        e.append(gcd(e[-1], v))
        if e[-1] >= e[-2]:
            return False
    if e[-1] != 1:
        return False
    for k in range(1, len(gens) - 1):
        if (e[k - 1] // e[k]) * gens[k] >= gens[k + 1]:
            return False
    return True


def conductor_formula(gens) -> int:
    gens = list(gens)
    total = -gens[0] + 1
    e = gens[0]
    for v in gens[1:]:
        e_new = gcd(e, v)
        total += (e // e_new - 1) * v
        e = e_new
    return max(total, 0)


def semigroup_from_generators(gens) -> Semigroup:
    gens = [int(v) for v in gens]
    if not gens:
        raise InadmissibleSemigroupError("empty generator list")
    if any(v <= 0 for v in gens):
        raise InadmissibleSemigroupError("generators must be positive")
    if _gcd_all(gens) != 1:
        raise InadmissibleSemigroupError(f"generators {gens} have gcd {_gcd_all(gens)} != 1")
    mins = _minimal_system(gens)
    e = [mins[0]]
    for v in mins[1:]:
        e.append(gcd(e[-1], v))
    n = tuple(e[k - 1] // e[k] for k in range(1, len(e)))
    plane = is_plane_system(mins)
    if plane:
        c = conductor_formula(mins)
    else:
        # the closed formula is only valid for plane-branch semigroups
        c = _conductor_search(mins)
    return Semigroup(tuple(mins), tuple(e), n, c, plane)


def _frobenius_bound(gens) -> int:
    # Schur's bound on the largest gap: (v_0 - 1)(v_max - 1) - 1
    return max((gens[0] - 1) * (max(gens) - 1), 0) + 1


def _conductor_search(gens) -> int:
    limit = _frobenius_bound(gens) + 1
    mask = membership_mask(gens, limit)
    for k in range(limit - 1, -1, -1):
        if not (mask >> k) & 1:
            return k + 1
    return 0


def conductor_by_gaps(S: Semigroup) -> int:
    """Conductor from an explicit membership table (largest gap + 1)."""
    return _conductor_search(list(S.generators))


def _require_plane(S: Semigroup) -> None:
    if not S.plane:
        raise InadmissibleSemigroupError(
            f"{list(S.generators)} is not the semigroup of a plane branch"
        )


def puiseux_sequence(S: Semigroup) -> tuple[int, ...]:
    """Characteristic sequence b_0 < ... < b_g, checked against the conductor."""
    _require_plane(S)
    v, n = S.generators, S.n
    b = [v[0]]
    if S.g >= 1:
        b.append(v[1])
    for k in range(1, S.g):
        b.append(v[k + 1] - n[k - 1] * v[k] + b[k])
    closed = [v[0]] + [v[k] - sum((n[i - 1] - 1) * v[i] for i in range(1, k)) for k in range(1, S.g + 1)]
    if closed != b:
        raise AssertionError(f"characteristic sequence routes disagree: {b} vs {closed}")
    if puiseux_conductor(b) != S.conductor:
        raise AssertionError("conductor identity fails for the characteristic sequence")
    return tuple(b)


def puiseux_conductor(b) -> int:
    """c = sum_k (e_{k-1} - e_k)(b_k - 1) with e_k = gcd(b_0, ..., b_k)."""
    total = 0
    e_prev = b[0]
    for bk in b[1:]:
        e_k = gcd(e_prev, bk)
        total += (e_prev - e_k) * (bk - 1)
        e_prev = e_k
    return total


def generators_from_puiseux(b) -> tuple[int, ...]:
    """Inverse dictionary: v_0 = b_0, v_1 = b_1, v_{k+1} = n_k v_k + b_{k+1} - b_k."""
    b = list(b)
    v = [b[0]]
    if len(b) > 1:
        v.append(b[1])
    e = [b[0]]
    for bk in b[1:]:
        e.append(gcd(e[-1], bk))
    for k in range(1, len(b) - 1):
        nk = e[k - 1] // e[k]
        v.append(nk * v[k] + b[k + 1] - b[k])
    return tuple(v)


def cota_check(S: Semigroup) -> tuple[bool, bool]:
    """(c >= (v0-1)(v1-1) + gcd(v0,v1) - 1,  [c == (v0-1)(v1-1)] iff gcd(v0,v1) == 1)."""
    if S.g < 1:
        raise InadmissibleSemigroupError("the bound needs at least two generators")
    v0, v1 = S.generators[0], S.generators[1]
    d = gcd(v0, v1)
    base = (v0 - 1) * (v1 - 1)
    bound_holds = S.conductor >= base + d - 1
    iff = (S.conductor == base) == (d == 1)
    return bound_holds, iff


def mu_bar_branch(S: Semigroup) -> int:
    return S.conductor


def enumerate_admissible(v0_max: int = 12, v1_max: int = 40, tail: int | None = None) -> Iterator[tuple[int, ...]]:
    """All plane-branch generator systems with 2 <= v_0 <= v0_max, v_1 <= v1_max.

    Later generators range over n_k v_k < v_{k+1} <= n_k v_k + tail (default
    tail = v_0), which keeps the sweep finite.
    """
    def extend(gens, e):
        if e == 1:
            yield tuple(gens)
            return
        nk = _gcd_all(gens[:-1]) // e
        lo = nk * gens[-1] + 1
        hi = nk * gens[-1] + (tail if tail is not None else gens[0])
        for w in range(lo, hi + 1):
            e2 = gcd(e, w)
            if e2 < e:
                yield from extend(gens + [w], e2)

    for v0 in range(2, v0_max + 1):
        for v1 in range(v0 + 1, v1_max + 1):
            e1 = gcd(v0, v1)
            if e1 == v0:
                continue
            yield from extend([v0, v1], e1)
