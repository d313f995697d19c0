import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import semigroup_forge as sf
from semigroup_forge.core import INT64_MAX, _full_monoid
from semigroup_forge.errors import (
    DegenerateFullMonoid,
    EmptyInput,
    NonCoprime,
    Overflow,
    UnitGenerator,
)

import sieve_oracle as oracle


def coprime_tuples(max_value=32, max_size=5):
    return (
        st.lists(st.integers(2, max_value), min_size=2, max_size=max_size)
        .map(lambda xs: tuple(sorted(set(xs))))
        .filter(lambda t: math.gcd(*t) == 1)
    )


def test_sylvester_pair():
    s = sf.from_generators((3, 5))
    assert s.frobenius == 3 * 5 - 3 - 5 == 7


def test_redundant_generator_dropped():
    table = oracle.member_table((4, 6, 9), oracle.safe_limit((4, 6, 9)))
    assert table[13], "13 must be representable from (4, 6, 9)"
    s = sf.from_generators((4, 6, 9, 13))
    assert s.min_gens == (4, 6, 9)


def test_smallest_semigroup():
    s = sf.from_generators((2, 3))
    assert (s.frobenius, s.genus, s.small_count, s.q) == (1, 1, 1, 1)


def test_unsorted_input_is_normalized():
    assert sf.from_generators((9, 4, 6, 9)) == sf.from_generators((4, 6, 9))


def test_validation_errors():
    with pytest.raises(NonCoprime):
        sf.from_generators((4, 6))
    with pytest.raises(NonCoprime):
        sf.from_generators((5,))
    with pytest.raises(UnitGenerator):
        sf.from_generators((1, 2))
    with pytest.raises(UnitGenerator):
        sf.from_generators((0, 3))
    with pytest.raises(UnitGenerator):
        sf.from_generators((-2, 3))
    with pytest.raises(EmptyInput):
        sf.from_generators(())


def test_generator_tuple_rejects_unordered():
    with pytest.raises(ValueError):
        sf.GeneratorTuple((5, 3))


def test_overflow_guard():
    with pytest.raises(Overflow):
        sf.from_generators((2, INT64_MAX + 2))
    big = 2**62 + 1  # coprime with 3; the class of 2*big overflows the table
    with pytest.raises(Overflow):
        sf.from_generators((3, big))


def test_membership_examples():
    s = sf.from_generators((3, 5))
    assert not sf.membership(s, 7)
    assert sf.membership(s, 8)
    assert sf.membership(s, 0)
    assert not sf.membership(s, -1)
    assert 8 in s and 7 not in s


def test_small_elements_examples():
    assert sf.small_elements(sf.from_generators((3, 5))) == (0, 3, 5, 6)
    assert sf.small_elements(sf.from_generators((2, 3))) == (0,)
    assert sf.small_elements(sf.from_generators((5, 6, 7, 8, 9))) == (0,)
    with pytest.raises(DegenerateFullMonoid):
        sf.small_elements(_full_monoid())


def test_invariants_examples():
    inv = sf.invariants(sf.from_generators((3, 5, 7)))
    assert inv == sf.InvariantSummary(3, 3, 4, 3, 2, 2)
    inv = sf.invariants(sf.from_generators((4, 6, 9)))
    assert inv == sf.InvariantSummary(4, 3, 11, 6, 6, 3)
    assert sf.invariants(sf.from_generators((2, 3))).q == 1


def test_full_monoid_internal_value():
    n = _full_monoid()
    assert n.frobenius == -1 and n.genus == 0 and n.small_count == 0
    assert n.min_gens == (1,) and n.q == 0
    assert sf.membership(n, 0) and sf.membership(n, 1) and not sf.membership(n, -1)


@settings(max_examples=120, deadline=None)
@given(coprime_tuples())
def test_membership_matches_sieve(gens):
    s = sf.from_generators(gens)
    limit = s.frobenius + 2 * s.multiplicity
    table = oracle.member_table(gens, max(limit, oracle.safe_limit(gens)))
    for x in range(limit + 1):
        assert sf.membership(s, x) == table[x]


@settings(max_examples=120, deadline=None)
@given(coprime_tuples())
def test_counting_identity_and_q_bracket(gens):
    s = sf.from_generators(gens)
    assert s.small_count + s.genus == s.frobenius + 1
    assert s.q * s.multiplicity >= s.frobenius + 1 > (s.q - 1) * s.multiplicity
    assert 1 <= s.q <= s.small_count


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 60), st.integers(2, 60))
def test_sylvester_formula_random_pairs(a, b):
    if a == b or math.gcd(a, b) != 1:
        return
    assert sf.from_generators((a, b)).frobenius == a * b - a - b


@settings(max_examples=80, deadline=None)
@given(coprime_tuples())
def test_minimal_generators_match_sieve_and_regenerate(gens):
    s = sf.from_generators(gens)
    table = oracle.member_table(gens, oracle.safe_limit(gens))
    assert s.min_gens == oracle.min_gens_of(table)
    assert sf.from_generators(s.min_gens) == s


def test_aperys_of_small_cases_match_sieve(semigroups_genus8):
    for s in semigroups_genus8:
        table = oracle.member_table(s.min_gens, oracle.safe_limit(s.min_gens))
        assert list(sorted(s.apery_mult)) == oracle.apery_of(table, s.multiplicity)
        assert s.frobenius == oracle.frobenius_of(table)
        assert s.genus == len(oracle.gaps_of(table))
        assert s.small_count == len(oracle.small_elements_of(table))
