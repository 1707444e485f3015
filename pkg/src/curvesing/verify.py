"""End-to-end check of the Newton-polygon inequalities on a curve.

For a reduced f with r branches the quantities compared are

    mu-bar(f) - mu(N_f)  >=  r(N_f) - r(f)  >=  0,

with equality mu-bar = mu(N_f), r(f) = r(N_f) for non-degenerate f.  The
report also records delta(N_f) <= delta(f), the Melle-Wall bound
mu >= mu-bar where the Milnor number is finite, and mu = mu-bar for strongly
non-degenerate curves.

Each check stores lhs, rhs and the relation, so its status can be recomputed
from the report alone.  Status is one of "pass", "fail", "skip" (not
applicable or undetermined) and "info" (an equality recorded on a degenerate
curve, where only the inequalities are claimed).
"""

from __future__ import annotations

import operator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .curve import CurveSpec, expand_curve, fill_pairwise_i0, mu_bar_curve, spec_from_json
from .edges import degeneracy_report
from .intersection import milnor_number, milnor_polar
from .invariants import invariants_bundle

SCHEMA_VERSION = "v1"

_RELATIONS = {">=": operator.ge, "<=": operator.le, "==": operator.eq}


@dataclass(frozen=True)
class Check:
    name: str
    relation: str
    lhs: object
    rhs: object
    status: str

    @staticmethod
    def compare(name, lhs, relation, rhs, applicable=True, informational=False) -> "Check":
        if not applicable or lhs is None or rhs is None:
            return Check(name, relation, lhs, rhs, "skip")
        ok = _RELATIONS[relation](lhs, rhs)
        if informational:
            return Check(name, relation, lhs, rhs, "info")
        return Check(name, relation, lhs, rhs, "pass" if ok else "fail")

    def recompute(self) -> str:
        if self.status in ("skip", "info"):
            return self.status
        return "pass" if _RELATIONS[self.relation](self.lhs, self.rhs) else "fail"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "relation": self.relation,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "status": self.status,
        }


def _jsonable(v):
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else str(v)
    return v


@dataclass
class VerificationReport:
    id: str
    characteristic: int
    mu_bar: int
    mu_N: int
    r_f: int
    r_N: int
    delta_f: Fraction
    delta_N: Fraction
    nondegenerate: bool
    strongly_nondegenerate: bool
    milnor: int | str | None
    checks: list[Check] = field(default_factory=list)
    polynomial: str = ""
    spec: dict = field(default_factory=dict)

    @property
    def failed(self) -> list[Check]:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failed

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "id": self.id,
            "char": self.characteristic,
            "mu_bar": self.mu_bar,
            "mu_newton": self.mu_N,
            "r_f": self.r_f,
            "r_newton": self.r_N,
            "delta_f": _jsonable(self.delta_f),
            "delta_newton": _jsonable(self.delta_N),
            "nondegenerate": self.nondegenerate,
            "strongly_nondegenerate": self.strongly_nondegenerate,
            "milnor": self.milnor,
            "checks": [c.to_json() for c in self.checks],
            "polynomial": self.polynomial,
            "spec": self.spec,
        }


def verify_theorem(spec: CurveSpec, milnor: bool = True) -> VerificationReport:
    spec_json = spec.to_json()
    fill_pairwise_i0(spec)
    f = expand_curve(spec)
    mu_bar = mu_bar_curve(spec)
    r_f = len(spec.branches)
    inv = invariants_bundle(f)
    deg = degeneracy_report(f)
    mu_N, r_N, delta_N = inv.mu_N, inv.r_N, inv.delta_N
    delta_f = Fraction(mu_bar + r_f - 1, 2)

    mu = None
    milnor_json: int | str | None = None
    if milnor:
        params = [b.param for b in spec.branches]
        if spec.field.characteristic == 0 and all(p is not None for p in params):
            m = milnor_polar(f, params)
        else:
            m = milnor_number(f, start=mu_bar + 4)
        milnor_json = m.to_json()
        mu = m.value if m.finite else None

    nd, strong = deg.nondegenerate, deg.strongly_nondegenerate
    C = Check.compare
    checks = [
        C("excess_bound", mu_bar - mu_N, ">=", r_N - r_f),
        C("branch_deficit", r_N - r_f, ">=", 0),
        C("nondeg_mu", mu_bar, "==", mu_N, informational=not nd),
        C("nondeg_r", r_f, "==", r_N, informational=not nd),
        C("branch_count", r_f, "<=", r_N),
        C("delta_bound", delta_N, "<=", delta_f),
        C("melle_wall", mu, ">=", mu_bar, applicable=mu is not None),
        C("tame", mu, "==", mu_bar, applicable=mu is not None and strong),
    ]
    return VerificationReport(
        spec.id,
        spec.field.characteristic,
        mu_bar,
        mu_N,
        r_f,
        r_N,
        delta_f,
        delta_N,
        nd,
        strong,
        milnor_json,
        checks,
        f.render(),
        spec_json,
    )


def _verify_json(args) -> VerificationReport:
    data, milnor = args
    return verify_theorem(spec_from_json(data), milnor=milnor)


def verify_corpus(specs, milnor: bool = True, workers: int | None = None) -> list[VerificationReport]:
    """Verify every spec; reports come back sorted by curve id."""
    specs = list(specs)
    if workers and workers > 1:
        payload = [(s.to_json(), milnor) for s in specs]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_verify_json, payload, chunksize=16))
    else:
        reports = [verify_theorem(s, milnor=milnor) for s in specs]
    return sorted(reports, key=lambda r: r.id)
