"""Apery sets, pseudo-Frobenius numbers, type, and symmetry classification."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import Semigroup, membership
from .errors import (
    AnchorNotInSemigroup,
    AnchorZero,
    DegenerateFullMonoid,
    WitnessViolation,
)


@dataclass(frozen=True)
class AperySet:
    """Least elements of S in every residue class modulo the anchor."""

    anchor: int
    elements: tuple[int, ...]


@dataclass(frozen=True)
class PseudoFrobeniusSet:
    """Gaps f with f + s in S for every nonzero s in S.

    `f2` is the unique element of the form lam*g2 - g1 when one exists;
    uniqueness is checked at runtime rather than assumed.
    """

    elements: tuple[int, ...]
    type_t: int
    f2: int | None


class SymmetryClass(Enum):
    SYMMETRIC = "symmetric"
    PSEUDO_SYMMETRIC = "pseudo_symmetric"
    ALMOST_SYMMETRIC_OTHER = "almost_symmetric_other"
    NONE = "none"


def apery_set(s: Semigroup, m: int) -> AperySet:
    """Apery set of S with respect to an anchor m in S, m > 0."""
    if m == 0:
        raise AnchorZero("the Apery anchor must be positive")
    if not membership(s, m):
        raise AnchorNotInSemigroup(f"anchor {m} is not an element of the semigroup")
    least = []
    for r in range(m):
        x = r
        while not membership(s, x):
            x += m
        least.append(x)
    return AperySet(anchor=m, elements=tuple(sorted(least)))


def pseudo_frobenius(s: Semigroup) -> PseudoFrobeniusSet:
    """Pseudo-Frobenius numbers via the minimal-generator test.

    A gap f qualifies iff f + g in S for every minimal generator g; closure
    under generator sums extends the test to all nonzero elements.
    """
    if s.is_full_monoid:
        raise DegenerateFullMonoid("the full monoid has no pseudo-Frobenius numbers")
    ap = s.apery_mult
    m = len(ap)
    gens = s.min_gens
    elems = []
    for f in range(s.frobenius + 1):
        if ap[f % m] <= f:
            continue
        for g in gens:
            y = f + g
            if ap[y % m] > y:
                break
        else:
            elems.append(f)
    elements = tuple(elems)
    return PseudoFrobeniusSet(elements, len(elements), _locate_f2(elements, gens, s.frobenius))


def is_almost_symmetric(s: Semigroup) -> bool:
    """Definitional test: every gap x has F-x in S or {x, F-x} inside PF(S).

    When the test passes, the counting identity 2n + t = F + 2 is verified
    and a failure raises WitnessViolation.
    """
    if s.is_full_monoid:
        raise DegenerateFullMonoid("almost-symmetry is undefined for the full monoid")
    pf = pseudo_frobenius(s)
    if not _almost_symmetric_definitional(s, pf):
        return False
    _require_counting_identity(s, pf)
    return True


def symmetry_class(s: Semigroup) -> SymmetryClass:
    """Classify as symmetric, pseudo-symmetric, other almost-symmetric, or none."""
    if s.is_full_monoid:
        raise DegenerateFullMonoid("symmetry is undefined for the full monoid")
    if 2 * s.small_count == s.frobenius + 1:
        return SymmetryClass.SYMMETRIC
    pf = pseudo_frobenius(s)
    if _almost_symmetric_definitional(s, pf):
        _require_counting_identity(s, pf)
        if pf.type_t == 2 and s.frobenius % 2 == 0:
            return SymmetryClass.PSEUDO_SYMMETRIC
        return SymmetryClass.ALMOST_SYMMETRIC_OTHER
    return SymmetryClass.NONE


def _locate_f2(pf_elements: tuple[int, ...], gens: tuple[int, ...], frob: int) -> int | None:
    g1, g2 = gens[0], gens[1]
    pf_set = set(pf_elements)
    hits = []
    lam = 1
    while True:
        v = lam * g2 - g1
        if v > frob:
            break
        if v in pf_set:
            hits.append(v)
        lam += 1
    if len(hits) > 1:
        raise WitnessViolation(
            f"more than one pseudo-Frobenius number of the form lam*{g2}-{g1}: {hits}"
        )
    return hits[0] if hits else None


def _almost_symmetric_definitional(s: Semigroup, pf: PseudoFrobeniusSet) -> bool:
    ap = s.apery_mult
    m = len(ap)
    frob = s.frobenius
    pf_set = set(pf.elements)
    for x in range(frob + 1):
        if ap[x % m] <= x:
            continue
        c = frob - x
        if ap[c % m] <= c:
            continue
        if x in pf_set and c in pf_set:
            continue
        return False
    return True


def _require_counting_identity(s: Semigroup, pf: PseudoFrobeniusSet) -> None:
    if 2 * s.small_count + pf.type_t != s.frobenius + 2:
        raise WitnessViolation(
            f"almost-symmetric semigroup {s.min_gens} breaks 2n+t=F+2 "
            f"(n={s.small_count}, t={pf.type_t}, F={s.frobenius})"
        )
