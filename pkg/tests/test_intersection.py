import pytest
from hypothesis import given, strategies as st

from curvesing import upoly
from curvesing.branch import ParamBranch, implicitize
from curvesing.errors import CommonComponentError, IndeterminateError
from curvesing.field import Field
from curvesing.intersection import (
    _weierstrass_packed,
    _weierstrass_plain,
    _x_major,
    i0_dim_oracle,
    i0_local,
    i0_param,
    i0_resultant,
    intmul_bound_check,
    milnor_number,
    milnor_polar,
    weierstrass,
)
from curvesing.poly import Poly, UniSeries, parse_poly, parse_series

from oracles import sympy_i0_resultant, to_sympy


def P(text, p=0):
    return parse_poly(text, Field(p))


def B(x, y, p=0):
    F = Field(p)
    return ParamBranch(parse_series(x, F), parse_series(y, F))


def test_i0_param_examples():
    assert i0_param(B("t^2", "t^3"), P("y^2-x^5")) == 6
    assert i0_param(B("t", "t"), P("y-x-x^2")) == 2
    with pytest.raises(CommonComponentError):
        i0_param(B("t", "0"), P("y"))


@pytest.mark.parametrize("route", [i0_resultant, i0_dim_oracle, i0_local])
def test_i0_polynomial_route_examples(route):
    assert route(P("y^2-x^3"), P("y^2-x^5")) == 6
    assert route(P("y-x"), P("y+x")) == 1
    assert route(P("x"), P("y")) == 1


def test_common_component_detected():
    f, g = P("(y-x)*(y+x)"), P("(y-x)*(y-x^2)")
    with pytest.raises(CommonComponentError):
        i0_local(f, g)
    with pytest.raises(CommonComponentError):
        i0_resultant(f, g)
    # the dimension oracle can only report that the quotient never stabilizes
    with pytest.raises(IndeterminateError):
        i0_dim_oracle(f, g)


def test_i0_in_positive_characteristic():
    # y^2 - x^3 and y^2 + x^3 meet with i0 = 6 except in char 2 (they coincide)
    assert i0_local(P("y^2-x^3", 3), P("y^2+x^3", 3)) == 6
    with pytest.raises(CommonComponentError):
        i0_local(P("y^2-x^3", 2), P("y^2+x^3", 2))


def test_i0_against_sympy_resultant():
    pairs = [("y^2-x^3", "y^3-x^2"), ("y^2-x^3", "y^2-x^3-x^4"), ("y-x^2", "y-x^3"), ("y^3-x^5", "y^2-x^7")]
    for a, b in pairs:
        f, g = P(a), P(b)
        assert i0_local(f, g) == sympy_i0_resultant(to_sympy(f), to_sympy(g))


def test_bound_check_examples():
    r = intmul_bound_check(P("y^2-x^3"), P("y^2-x^5"))
    assert (r.i0, r.bracket, r.parallel, r.equality, r.holds) == (6, 6, False, True, True)
    r = intmul_bound_check(P("y-x"), P("y-x-x^2"))
    assert (r.i0, r.bracket, r.parallel, r.forms_coprime, r.equality, r.holds) == (2, 1, True, False, False, True)
    r = intmul_bound_check(P("y-x"), P("y+x"))
    assert (r.i0, r.bracket, r.parallel, r.forms_coprime, r.equality, r.holds) == (1, 1, True, True, True, True)


def test_bound_check_needs_elementary_series():
    with pytest.raises(ValueError):
        intmul_bound_check(P("y^3-x^2*y-x^2*y^2+x^4"), P("y-x"))


def test_milnor_examples():
    assert milnor_number(P("x^2+y^3")).value == 2
    for p in (2, 3):
        m = milnor_number(P("x^2+y^3", p))
        assert not m.finite and m.to_json() == "infinite"


@pytest.mark.parametrize(
    "text, mu",
    [
        ("y^2+x^5", 4),            # A_4
        ("x^2*y+y^4", 5),          # D_5
        ("x^3+y^4", 6),            # E_6
        ("x^3+x*y^3", 7),          # E_7
        ("x^3+y^5", 8),            # E_8
        ("x*y*(x-y)*(x+y)", 9),    # four lines
    ],
)
def test_milnor_simple_singularities(text, mu):
    assert milnor_number(P(text)).value == mu
    assert milnor_number(P(text, 7)).value == mu


def test_milnor_wild_characteristic():
    assert milnor_number(P("x^3+y^4", 2)).finite is False
    # in char 3, x^3 + y^4 has d/dx = 0
    assert milnor_number(P("x^3+y^4", 3)).finite is False
    # y^2 + x^3 + x^2*y^... : char 3 with a finite but non-tame value
    m = milnor_number(P("y^2+x^3+x^2*y", 3))
    assert m.finite and m.value == i0_dim_oracle(P("y^2+x^3+x^2*y", 3).partial("x"), P("y^2+x^3+x^2*y", 3).partial("y"))


def test_milnor_of_truncated_series():
    f = P("x^2+y^3+x^7*y^7").truncate(8)
    m = milnor_number(f)
    assert m.finite and m.value == 2


def test_milnor_polar_route_examples():
    branches = [B("t^2", "t^3"), B("t", "2*t")]
    f = implicitize(branches[0]) * implicitize(branches[1])
    assert milnor_polar(f, branches).value == milnor_number(f).value


# -- properties ----------------------------------------------------------------


@st.composite
def branch_pairs(draw):
    p = draw(st.sampled_from([0, 2, 3, 5, 7]))
    F = Field(p)

    def one():
        n = draw(st.integers(1, 4).filter(lambda k: p == 0 or k % p))
        m = draw(st.integers(n + 1, n + 5))
        c = draw(st.integers(1, 6).filter(lambda c: F(c) != 0))
        k = draw(st.integers(1, 3))
        d = draw(st.integers(0, 6))
        terms = {m: c}
        if F(d):
            terms[m + k] = d
        from math import gcd
        if gcd(n, *terms) != 1:
            terms[n + 1] = terms.get(n + 1, 0) + 1
        ys = UniSeries(F, terms)
        if ys.is_zero() or gcd(n, *ys.terms) != 1:
            ys = UniSeries(F, {n + 1: 1})
        return ParamBranch(UniSeries.monomial(F, n), ys)

    return one(), one()


@given(branch_pairs())
def test_i0_routes_agree_on_branch_pairs(pair):
    a, b = pair
    fa, fb = implicitize(a), implicitize(b)
    try:
        expected = i0_param(a, fb)
    except CommonComponentError:
        with pytest.raises(CommonComponentError):
            i0_local(fa, fb)
        return
    assert i0_param(b, fa) == expected
    assert i0_local(fa, fb) == expected
    assert i0_local(fb, fa) == expected
    if fa.degree() + fb.degree() <= 12:
        assert i0_dim_oracle(fa, fb) == expected


@given(branch_pairs(), st.integers(1, 3))
def test_i0_is_additive(pair, j):
    a, b = pair
    F = a.field
    line = Poly(F, {(0, 1): 1, (j, 0): 1})   # y + x^j
    fb = implicitize(b)
    try:
        lhs = i0_param(a, fb * line)
        rhs = i0_param(a, fb) + i0_param(a, line)
    except CommonComponentError:
        return
    assert lhs == rhs


@given(st.sampled_from([2, 3, 5, 7, 11]),
       st.dictionaries(st.tuples(st.integers(0, 5), st.integers(0, 5)), st.integers(0, 10), max_size=10),
       st.integers(1, 4), st.integers(4, 14))
def test_packed_weierstrass_matches_plain(p, terms, k, P_):
    F = Field(p)
    terms = {e: c for e, c in terms.items() if e[0] > 0 or e[1] > k}
    terms[(0, k)] = 1
    g = Poly(F, terms)
    rows = _x_major(g, P_)
    v0 = rows[0][k:]
    b = upoly.inverse_series(F, v0, k)
    assert _weierstrass_packed(p, rows, k, v0, b, P_) == _weierstrass_plain(F, rows, k, v0, b, P_)
    kk, W = weierstrass(F, g, P_)
    assert kk == k
    assert all(not col or col[0] == 0 for col in W)


@given(st.sampled_from([0, 5, 7]),
       st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(-3, 3)), max_size=5))
def test_milnor_agrees_with_dimension_oracle(p, extra):
    F = Field(p)
    terms = {(3, 0): 1, (0, 4): 1}
    for a, b, c in extra:
        if a + b >= 3:
            terms[(a, b)] = terms.get((a, b), 0) + c
    f = Poly(F, terms)
    fx, fy = f.partial("x"), f.partial("y")
    try:
        expected = i0_dim_oracle(fx, fy)
    except (CommonComponentError, IndeterminateError):
        assert not milnor_number(f).finite
        return
    assert milnor_number(f).value == expected
