"""Canonical numerical semigroups: construction, membership, basic invariants.

A semigroup is stored as its Apery vector with respect to the multiplicity
g1: entry r is the least element congruent to r modulo g1.  The vector gives
O(1) membership and every basic invariant (Frobenius number, genus, count of
small elements, minimal generators) derives from it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    DegenerateFullMonoid,
    EmptyInput,
    NonCoprime,
    Overflow,
    UnitGenerator,
)

INT64_MAX = 2**63 - 1


def checked_product(*factors: int) -> int:
    """Multiply non-negative integers, raising Overflow beyond 64-bit range."""
    out = 1
    for f in factors:
        out *= f
        if out > INT64_MAX:
            raise Overflow(f"product {'*'.join(str(x) for x in factors)} exceeds the 64-bit range")
    return out


def checked_value(value: int, what: str = "value") -> int:
    """Pass `value` through, raising Overflow when it leaves 64-bit range."""
    if value > INT64_MAX:
        raise Overflow(f"{what} {value} exceeds the 64-bit range")
    return value


@dataclass(frozen=True)
class GeneratorTuple:
    """Strictly ascending generator tuple, gcd 1, every entry at least 2."""

    gens: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.gens:
            raise EmptyInput("at least one generator is required")
        prev = 1
        for g in self.gens:
            if g < 2:
                raise UnitGenerator(f"unit generator {g} rejected (every generator must be >= 2)")
            if g > INT64_MAX:
                raise Overflow(f"generator {g} exceeds the 64-bit range")
            if g <= prev:
                raise ValueError("generators must be strictly ascending and distinct")
            prev = g
        if math.gcd(*self.gens) != 1:
            raise NonCoprime(f"generators not coprime (gcd {math.gcd(*self.gens)})")

    @classmethod
    def from_raw(cls, values: Iterable[int]) -> "GeneratorTuple":
        """Sort and deduplicate raw input, then validate."""
        seq = list(values)
        if not seq:
            raise EmptyInput("at least one generator is required")
        return cls(tuple(sorted(set(seq))))


@dataclass(frozen=True, slots=True)
class Semigroup:
    """Immutable canonical value of a numerical semigroup.

    `apery_mult[r]` is the least element congruent to r modulo the
    multiplicity; `frobenius` is -1 only for the degenerate full monoid,
    which `from_generators` never produces (the enumeration root builds it).
    """

    apery_mult: tuple[int, ...]
    frobenius: int
    genus: int
    small_count: int
    min_gens: tuple[int, ...]
    q: int

    @property
    def multiplicity(self) -> int:
        return len(self.apery_mult)

    @property
    def embedding_dim(self) -> int:
        return len(self.min_gens)

    @property
    def is_full_monoid(self) -> bool:
        return self.frobenius == -1

    @property
    def is_half_line(self) -> bool:
        """True for {0, m, m+1, ...} with m >= 2; exactly the q == 1 case."""
        return self.frobenius >= 0 and self.q == 1

    def __contains__(self, x: int) -> bool:
        return membership(self, x)


@dataclass(frozen=True)
class InvariantSummary:
    """The six basic invariants in one record."""

    multiplicity: int
    embedding_dim: int
    frobenius: int
    genus: int
    small_count: int
    q: int


def from_generators(gens: Iterable[int]) -> Semigroup:
    """Build the canonical semigroup generated by `gens`.

    Input may be unsorted and redundant; the unique minimal generating
    system is recovered.  Raises EmptyInput, UnitGenerator (entry < 2),
    NonCoprime (gcd > 1) or Overflow (values outside the 64-bit envelope).
    """
    return _from_valid_gens(GeneratorTuple.from_raw(gens).gens)


def membership(s: Semigroup, x: int) -> bool:
    """Decide x in S in O(1) via the Apery vector."""
    if x < 0:
        return False
    return s.apery_mult[x % len(s.apery_mult)] <= x


def small_elements(s: Semigroup) -> tuple[int, ...]:
    """Elements of S in [0, F], ascending."""
    if s.is_full_monoid:
        raise DegenerateFullMonoid("the full monoid has no small elements")
    ap = s.apery_mult
    m = len(ap)
    return tuple(x for x in range(s.frobenius + 1) if ap[x % m] <= x)


def invariants(s: Semigroup) -> InvariantSummary:
    """Summarize multiplicity, embedding dimension, F, genus, n and q."""
    return InvariantSummary(
        multiplicity=s.multiplicity,
        embedding_dim=s.embedding_dim,
        frobenius=s.frobenius,
        genus=s.genus,
        small_count=s.small_count,
        q=s.q,
    )


def _from_valid_gens(gens: tuple[int, ...]) -> Semigroup:
    ap = _apery_fixed_point(gens)
    m = len(ap)
    frob = max(ap) - m
    genus = sum(v // m for v in ap)
    return Semigroup(
        apery_mult=tuple(ap),
        frobenius=frob,
        genus=genus,
        small_count=frob + 1 - genus,
        min_gens=_minimal_generators(ap),
        q=(frob + m) // m,
    )


def _full_monoid() -> Semigroup:
    # Degenerate genus-0 monoid of all non-negative integers.  Only the
    # enumeration tree root uses it; from_generators rejects the entry 1.
    return Semigroup((0,), -1, 0, 0, (1,), 0)


def _apery_fixed_point(gens: tuple[int, ...]) -> list[int]:
    """Least element of <gens> in each class modulo the smallest generator.

    Shortest-path view: node r, edge r -> (r+g) % m of weight g.  Each pass
    relaxes every generator along its residue cycles; passes repeat until no
    entry decreases.  Generators divisible by m are redundant and skipped.
    """
    m = gens[0]
    ap: list[int | None] = [None] * m
    ap[0] = 0
    steps = []
    for g in gens:
        step = g % m
        if step:
            steps.append((g, step, m // math.gcd(step, m)))
    changed = True
    while changed:
        changed = False
        for g, step, cycle_len in steps:
            for start in range(m // cycle_len):
                r = start
                for _ in range(2 * cycle_len):
                    nxt = r + step
                    if nxt >= m:
                        nxt -= m
                    base = ap[r]
                    if base is not None:
                        cand = base + g
                        cur = ap[nxt]
                        if cur is None or cand < cur:
                            ap[nxt] = cand
                            changed = True
                    r = nxt
    if any(v is None for v in ap):
        raise AssertionError("relaxation left an unreachable residue class")
    table: list[int] = [v for v in ap if v is not None]
    checked_value(max(table), "Apery value")
    return table


def _minimal_generators(ap: list[int]) -> tuple[int, ...]:
    """Elements of S that are not a sum of two nonzero elements.

    Every candidate other than the multiplicity sits in the nonzero Apery
    set, and any decomposition of such a candidate uses two nonzero Apery
    elements, so the pair test runs entirely inside that set.
    """
    m = len(ap)
    nonzero = sorted(v for v in ap if v)
    values = set(nonzero)
    gens = [m]
    for w in nonzero:
        for a in nonzero:
            if 2 * a > w:
                gens.append(w)
                break
            if (w - a) in values:
                break
        else:
            gens.append(w)
    return tuple(gens)
