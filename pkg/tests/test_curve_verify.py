import json

import pytest

from curvesing import curve as curve_mod
from curvesing.corpus import generate_corpus
from curvesing.curve import (
    expand_curve,
    fill_pairwise_i0,
    mu_bar_curve,
    spec_from_json,
)
from curvesing.errors import SpecError, WildBranchError
from curvesing.field import Field
from curvesing.poly import parse_poly
from curvesing.verify import Check, verify_corpus, verify_theorem

Q = Field(0)


def spec(branches, p=0, **kw):
    return spec_from_json({"char": p, "branches": branches, **kw})


THREE = [{"poly": "y-x"}, {"poly": "y+x"}, {"poly": "y-x^2"}]


def test_mu_bar_examples():
    assert mu_bar_curve(spec(THREE)) == 4
    assert mu_bar_curve(spec([{"poly": "y-x"}, {"poly": "y-x-x^2"}])) == 3
    assert mu_bar_curve(spec([{"x": "0", "y": "t"}, {"x": "t^2", "y": "t^3"}])) == 5


def test_expand_examples():
    assert expand_curve(spec(THREE)).same_terms(parse_poly("y^3-x^2*y-x^2*y^2+x^4", Q))
    f = expand_curve(spec([{"poly": "x"}, {"semigroup": [2, 3], "poly": "y^2+x^3"}]))
    assert f.same_terms(parse_poly("x*y^2+x^4", Q))
    assert expand_curve(spec([{"x": "t^2", "y": "t^3"}])).same_terms(parse_poly("y^2-x^3", Q))


def test_verify_three_lines():
    r = verify_theorem(spec(THREE))
    assert (r.mu_bar, r.mu_N, r.r_f, r.r_N) == (4, 4, 3, 3)
    assert r.nondegenerate and r.ok
    assert all(c.status == "pass" for c in r.checks)


def test_verify_degenerate_pair():
    r = verify_theorem(spec([{"poly": "y-x"}, {"poly": "y-x-x^2"}]))
    assert (r.mu_bar, r.mu_N, r.r_f, r.r_N) == (3, 1, 2, 2)
    assert not r.nondegenerate and r.ok
    assert r.check("excess_bound").status == "pass"
    assert r.check("nondeg_mu").status == "info"
    assert (r.delta_f, r.delta_N) == (2, 1)
    assert r.check("delta_bound").status == "pass"


def test_verify_char2_cusp_given_abstractly():
    r = verify_theorem(spec([{"semigroup": [2, 3], "poly": "x^2+y^3"}], p=2))
    assert (r.mu_bar, r.mu_N, r.r_f, r.r_N) == (2, 2, 1, 1)
    assert r.nondegenerate and not r.strongly_nondegenerate
    assert r.check("nondeg_mu").status == "pass"
    assert r.check("tame").status == "skip"
    assert r.milnor == "infinite"
    assert r.check("melle_wall").status == "skip"


def test_wild_parametrization_needs_semigroup():
    with pytest.raises(WildBranchError):
        spec([{"x": "t^2", "y": "t^3"}], p=2)


@pytest.mark.parametrize(
    "data",
    [
        {"branches": [{"poly": "y-x"}]},                                  # no char
        {"char": 0, "branches": []},
        {"char": 0, "branches": [{"poly": "1+x"}]},                       # misses origin
        {"char": 0, "branches": [{"x": "t"}]},
        {"char": 0, "branches": [{"poly": "y^2-x^3"}]},                   # no semigroup
        {"char": 0, "branches": [{"semigroup": [3, 4, 5], "poly": "y"}]},  # not plane
        {"char": 0, "branches": [{"poly": "y-x"}, {"poly": "y+x"}], "i0": [[0, 1], [2, 0]]},
        {"char": 0, "branches": [{"poly": "y-x", "colour": 1}]},
        {"char": 4, "branches": [{"poly": "y-x"}]},
    ],
)
def test_bad_specs(data):
    with pytest.raises(Exception) as exc:
        spec_from_json(data)
    assert isinstance(exc.value, (SpecError, ValueError))


def test_coincident_branches_rejected():
    s = spec([{"poly": "y-x"}, {"x": "t", "y": "t"}])
    with pytest.raises(SpecError):
        fill_pairwise_i0(s)


def test_user_supplied_i0_is_used():
    s = spec([{"semigroup": [2, 3]}, {"semigroup": [1]}], i0=[[0, 2], [2, 0]])
    assert mu_bar_curve(s) == 2 + 0 + 4 - 1
    assert s.i0_provenance[0][1] == "user"


def test_checks_are_recomputable():
    for c in verify_theorem(spec(THREE)).checks:
        assert c.recompute() == c.status
    c = Check.compare("x", 1, ">=", 2)
    assert c.status == "fail" and c.recompute() == "fail"


CORPUS = generate_corpus(11, 40)


def test_report_json_reproduces_bit_for_bit():
    for s in CORPUS[:15]:
        rep = verify_theorem(spec_from_json(s.to_json()))
        again = verify_theorem(spec_from_json(rep.to_json()["spec"]))
        assert json.dumps(rep.to_json(), sort_keys=True) == json.dumps(again.to_json(), sort_keys=True)


def test_truncation_robustness(monkeypatch):
    base = [verify_theorem(spec_from_json(s.to_json()), milnor=False) for s in CORPUS]
    original = curve_mod.expansion_bound
    monkeypatch.setattr(curve_mod, "expansion_bound", lambda sp: 2 * original(sp))
    doubled = [verify_theorem(spec_from_json(s.to_json()), milnor=False) for s in CORPUS]
    for a, b in zip(base, doubled):
        assert [c.to_json() for c in a.checks] == [c.to_json() for c in b.checks]


def test_parallel_matches_serial():
    specs = [spec_from_json(s.to_json()) for s in CORPUS[:20]]
    serial = verify_corpus(specs, milnor=False)
    specs = [spec_from_json(s.to_json()) for s in CORPUS[:20]]
    par = verify_corpus(specs, milnor=False, workers=2)
    assert [r.to_json() for r in serial] == [r.to_json() for r in par]
    assert [r.id for r in par] == sorted(r.id for r in par)
