import pytest

import semigroup_forge as sf
from semigroup_forge.core import _full_monoid
from semigroup_forge.errors import AnchorNotInSemigroup, AnchorZero, DegenerateFullMonoid

import sieve_oracle as oracle


def test_apery_set_examples():
    assert sf.apery_set(sf.from_generators((3, 5)), 3).elements == (0, 5, 10)
    assert sf.apery_set(sf.from_generators((3, 5, 7)), 3).elements == (0, 5, 7)
    assert sf.apery_set(sf.from_generators((4, 6, 9)), 4).elements == (0, 6, 9, 15)


def test_apery_set_anchor_errors():
    s = sf.from_generators((3, 5))
    with pytest.raises(AnchorZero):
        sf.apery_set(s, 0)
    with pytest.raises(AnchorNotInSemigroup):
        sf.apery_set(s, 7)
    with pytest.raises(AnchorNotInSemigroup):
        sf.apery_set(s, -3)


def test_apery_set_invariants_over_small_anchors(semigroups_genus8):
    for s in semigroups_genus8:
        top = 3 * s.multiplicity
        for m in range(1, top + 1):
            if not sf.membership(s, m):
                continue
            ap = sf.apery_set(s, m)
            assert len(ap.elements) == m
            assert ap.elements[0] == 0
            assert ap.elements[-1] == s.frobenius + m
            assert len({w % m for w in ap.elements}) == m
            for w in ap.elements:
                assert sf.membership(s, w) and not sf.membership(s, w - m)


def test_pseudo_frobenius_examples():
    pf = sf.pseudo_frobenius(sf.from_generators((3, 5, 7)))
    assert (pf.elements, pf.type_t, pf.f2) == ((2, 4), 2, 2)
    pf = sf.pseudo_frobenius(sf.from_generators((5, 6, 7, 8, 9)))
    assert (pf.elements, pf.type_t, pf.f2) == ((1, 2, 3, 4), 4, 1)
    # For two generators F itself has the form (g1-1)*g2 - g1, so f2 = F.
    pf = sf.pseudo_frobenius(sf.from_generators((3, 5)))
    assert (pf.elements, pf.type_t, pf.f2) == ((7,), 1, 7)


def test_pseudo_frobenius_full_definitional_check(semigroups_genus8):
    for s in semigroups_genus8:
        table = oracle.member_table(s.min_gens, oracle.safe_limit(s.min_gens))
        pf = sf.pseudo_frobenius(s)
        assert list(pf.elements) == oracle.pf_of(table)
        small = [x for x in sf.small_elements(s) if x] + list(s.min_gens)
        for f in pf.elements:
            for m in small:
                assert sf.membership(s, f + m)


def test_pf_structural_bounds(semigroups_genus8):
    for s in semigroups_genus8:
        pf = sf.pseudo_frobenius(s)
        assert 1 <= pf.type_t <= s.multiplicity - 1
        assert pf.elements[-1] == s.frobenius
        for f in pf.elements:
            assert not sf.membership(s, f)


def test_f2_is_unique_among_enumerated(semigroups_genus8):
    # The scan raises WitnessViolation on duplicates; reaching the end of
    # the loop means uniqueness held everywhere.
    for s in semigroups_genus8:
        pf = sf.pseudo_frobenius(s)
        if pf.f2 is not None:
            g1, g2 = s.min_gens[0], s.min_gens[1]
            assert (pf.f2 + g1) % g2 == 0


def test_is_almost_symmetric_examples():
    assert sf.is_almost_symmetric(sf.from_generators((3, 5, 7)))
    assert sf.is_almost_symmetric(sf.from_generators((3, 5)))
    assert not sf.is_almost_symmetric(sf.from_generators((5, 6, 7)))


def test_almost_symmetric_matches_sieve(semigroups_genus8):
    for s in semigroups_genus8:
        table = oracle.member_table(s.min_gens, oracle.safe_limit(s.min_gens))
        assert sf.is_almost_symmetric(s) == oracle.is_almost_symmetric_of(table)


def test_almost_symmetric_counting_identity(semigroups_genus8):
    for s in semigroups_genus8:
        if sf.is_almost_symmetric(s):  # internally asserts 2n + t = F + 2
            t = sf.pseudo_frobenius(s).type_t
            assert 2 * s.small_count + t == s.frobenius + 2


def test_symmetric_iff_type_one(semigroups_genus8):
    for s in semigroups_genus8:
        symmetric = 2 * s.small_count == s.frobenius + 1
        assert symmetric == (sf.pseudo_frobenius(s).type_t == 1)
        assert symmetric == (sf.symmetry_class(s) is sf.SymmetryClass.SYMMETRIC)


def test_symmetry_class_examples():
    assert sf.symmetry_class(sf.from_generators((3, 5))) is sf.SymmetryClass.SYMMETRIC
    assert sf.symmetry_class(sf.from_generators((3, 5, 7))) is sf.SymmetryClass.PSEUDO_SYMMETRIC
    assert sf.symmetry_class(sf.from_generators((5, 6, 7))) is sf.SymmetryClass.NONE


def test_almost_symmetric_other_class_exists(semigroups_genus8):
    seen = {sf.symmetry_class(s) for s in semigroups_genus8}
    assert sf.SymmetryClass.ALMOST_SYMMETRIC_OTHER in seen


def test_degenerate_full_monoid_errors():
    n = _full_monoid()
    with pytest.raises(DegenerateFullMonoid):
        sf.pseudo_frobenius(n)
    with pytest.raises(DegenerateFullMonoid):
        sf.is_almost_symmetric(n)
    with pytest.raises(DegenerateFullMonoid):
        sf.symmetry_class(n)
