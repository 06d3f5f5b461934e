import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import naive_primes, naive_reps
from prodsum import (
    ZERO,
    MultiplicityProfile,
    NotPrime,
    b_value,
    count_representations,
    eval_form,
    kmax_bound,
    nth_prime,
    s_sequence,
    smallest_k_direct,
    smallest_k_profiles,
)

SEQUENCE_4 = [0, 0, 0, 0, 0, 0, 0, 3, 4, 3, 0, 0, 4, 0, 3, 0, 3, 3, 0, 4, 3, 3, 4, 3, 4, 0, 3, 5, 3, 4, 3]


@pytest.mark.parametrize(
    "profile, value",
    [({2: 3}, 14), ({2: 2, 3: 1, 7: 1}, 97), ({2: 1, 3: 3}, 64), ({2: 4}, 23)],
)
def test_b_value(profile, value):
    assert b_value(profile) == value


def test_b_value_matches_form_shift():
    # B(profile) = F_k(parts) - k + 3
    for profile in ({2: 2, 3: 1}, {3: 2, 5: 1, 11: 2}, {2: 7}):
        mp = MultiplicityProfile(profile)
        assert b_value(mp) == eval_form(mp.to_parts()) - mp.arity() + 3


def test_b_value_overflow():
    with pytest.raises(OverflowError):
        b_value({2: 64})
    with pytest.raises(OverflowError):
        b_value({3: 41})


def test_profile_type():
    mp = MultiplicityProfile({7: 1, 2: 2, 3: 1, 5: 0})
    assert mp.items == ((2, 2), (3, 1), (7, 1))
    assert mp.arity() == 4
    assert mp.to_parts() == (2, 2, 3, 7)
    assert str(mp) == "2^2*3*7"
    assert MultiplicityProfile.parse("2^2*3*7") == mp
    assert MultiplicityProfile.from_parts((2, 3, 2, 7)) == mp
    assert mp == {2: 2, 3: 1, 7: 1}
    with pytest.raises(ValueError):
        MultiplicityProfile({1: 2})
    with pytest.raises(ValueError):
        MultiplicityProfile({})


@pytest.mark.parametrize("p, k", [(97, 6), (19, 3), (2, 2), (13, 2), (14, 3), (23, 4), (73, 6), (137, 6), (138, 7)])
def test_kmax_bound(p, k):
    assert kmax_bound(p) == k


def test_kmax_bound_never_exceeds_log2():
    for p in range(2, 5000):
        assert kmax_bound(p) <= max(2, math.floor(math.log2(p)))


@pytest.mark.parametrize("solver", [smallest_k_direct, smallest_k_profiles])
@pytest.mark.parametrize(
    "p, k, witness",
    [(19, 3, {2: 2, 3: 1}), (97, 4, {2: 2, 3: 1, 7: 1}), (101, 0, None), (23, 4, {2: 4}), (2, 0, None)],
)
def test_solver_examples(solver, p, k, witness):
    result = solver(p)
    assert result.k == k
    if witness is None:
        assert result == ZERO and not result.found
    else:
        assert result.witness == MultiplicityProfile(witness)


@pytest.mark.parametrize("solver", [smallest_k_direct, smallest_k_profiles])
def test_solver_rejects_composites(solver):
    with pytest.raises(NotPrime):
        solver(91)


def test_result_rendering():
    assert str(smallest_k_direct(97)) == "s=4 witness=2^2*3*7"
    assert str(smallest_k_direct(101)) == "s=0"


def test_s_sequence():
    assert s_sequence(1) == [0]
    assert s_sequence(12) == SEQUENCE_4[:12]
    assert s_sequence(31) == SEQUENCE_4


def test_minimality_and_zero_soundness_against_unrestricted_counts():
    for p in naive_primes(2000):
        result = smallest_k_direct(p)
        top = result.k - 1 if result.found else kmax_bound(p)
        for j in range(3, top + 1):
            assert count_representations(p + j - 3, j) == 0, (p, j)
        if result.found:
            w = result.witness
            assert b_value(w) == p and w.arity() == result.k
            assert eval_form(w.to_parts()) == p + result.k - 3


def test_first_hit_is_lexicographically_first_witness():
    for p in naive_primes(400):
        result = smallest_k_profiles(p)
        if result.found:
            k = result.k
            n = p + k - 3
            # with the other k - 1 parts >= 2, any part is at most n / 2**(k-1)
            reps = naive_reps(n, k, min_part=2, max_part=n >> (k - 1))
            assert result.witness.to_parts() == reps[0]


@given(st.integers(1, 3000))
def test_solvers_agree(n):
    p = nth_prime(n).p
    direct, profiles = smallest_k_direct(p), smallest_k_profiles(p)
    assert direct == profiles
    if direct.found:
        assert 3 <= direct.k <= math.floor(math.log2(p))
