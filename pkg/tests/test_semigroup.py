from math import gcd

import pytest
from hypothesis import given, strategies as st

from curvesing.errors import InadmissibleSemigroupError
from curvesing.semigroup import (
    conductor_by_gaps,
    conductor_formula,
    cota_check,
    enumerate_admissible,
    generators_from_puiseux,
    is_plane_system,
    membership_mask,
    mu_bar_branch,
    puiseux_conductor,
    puiseux_sequence,
    semigroup_from_generators,
)

from oracles import brute_conductor, minimal_generators, semigroup_members


def test_semigroup_examples():
    S = semigroup_from_generators([2, 3])
    assert (S.e, S.n, S.conductor) == ((2, 1), (2,), 2)
    assert S.gaps() == [1]
    S = semigroup_from_generators([4, 6, 13])
    assert (S.e, S.n, S.conductor) == ((4, 2, 1), (2, 2), 16)
    assert max(S.gaps()) == 15
    assert semigroup_from_generators([1]).conductor == 0


def test_conductor_by_gaps_examples():
    assert conductor_by_gaps(semigroup_from_generators([2, 3])) == 2
    assert conductor_by_gaps(semigroup_from_generators([4, 6, 13])) == 16
    assert conductor_by_gaps(semigroup_from_generators([5, 7])) == 24


def test_puiseux_examples():
    for gens, b, c in [([2, 3], (2, 3), 2), ([4, 6, 13], (4, 6, 7), 16), ([5, 7], (5, 7), 24)]:
        S = semigroup_from_generators(gens)
        assert puiseux_sequence(S) == b
        assert puiseux_conductor(b) == c == S.conductor
        assert generators_from_puiseux(b) == tuple(gens)


def test_cota_examples():
    assert cota_check(semigroup_from_generators([4, 6, 13])) == (True, True)
    assert cota_check(semigroup_from_generators([2, 3])) == (True, True)
    assert cota_check(semigroup_from_generators([5, 7])) == (True, True)


def test_mu_bar_examples():
    assert mu_bar_branch(semigroup_from_generators([2, 3])) == 2
    assert mu_bar_branch(semigroup_from_generators([4, 6, 13])) == 16
    assert mu_bar_branch(semigroup_from_generators([1])) == 0


@pytest.mark.parametrize("gens", [[], [0, 1], [-2, 3], [4, 6], [6, 9, 15]])
def test_bad_generators(gens):
    with pytest.raises(InadmissibleSemigroupError):
        semigroup_from_generators(gens)


def test_non_plane_semigroup_uses_gap_search():
    S = semigroup_from_generators([3, 4, 5])
    assert not S.plane
    assert S.conductor == brute_conductor([3, 4, 5]) == 3
    with pytest.raises(InadmissibleSemigroupError):
        puiseux_sequence(S)


def test_redundant_generators_are_dropped():
    S = semigroup_from_generators([4, 6, 8, 10, 13, 17])
    assert S.generators == (4, 6, 13)


def test_membership_and_plane_admissibility():
    S = semigroup_from_generators([4, 6, 13])
    assert 13 in S and 15 not in S and 16 in S and -1 not in S
    assert is_plane_system([4, 6, 13])
    assert not is_plane_system([4, 6, 11])   # n_1 v_1 = 12 >= 11
    assert not is_plane_system([4, 8, 13])   # e does not drop at v_1


@given(st.lists(st.integers(2, 25), min_size=2, max_size=4))
def test_semigroup_matches_brute_force(gens):
    if gcd(*gens) != 1:
        return
    S = semigroup_from_generators(gens)
    assert list(S.generators) == minimal_generators(gens)
    assert S.conductor == brute_conductor(gens) == conductor_by_gaps(S)
    bound = S.conductor + 5
    assert set(S.elements_below(bound)) == semigroup_members(gens, bound)


@given(st.lists(st.integers(1, 20), min_size=1, max_size=3), st.integers(1, 200))
def test_membership_mask_matches_dp(gens, limit):
    mask = membership_mask(gens, limit)
    members = semigroup_members(gens, limit)
    assert {k for k in range(limit) if (mask >> k) & 1} == members


def test_admissible_sweep_small():
    systems = list(enumerate_admissible(6, 12))
    assert (2, 3) in systems and (4, 6, 13) in systems
    for gens in systems:
        S = semigroup_from_generators(gens)
        assert S.plane and S.generators == gens
        assert conductor_formula(gens) == brute_conductor(gens)
        b = puiseux_sequence(S)
        assert generators_from_puiseux(b) == gens
        holds, iff = cota_check(S)
        assert holds and iff


def test_gaps_are_half_the_conductor_for_plane_branches():
    # plane branch semigroups are symmetric: #gaps = c / 2
    for gens in enumerate_admissible(8, 20):
        S = semigroup_from_generators(gens)
        assert 2 * len(S.gaps()) == S.conductor
