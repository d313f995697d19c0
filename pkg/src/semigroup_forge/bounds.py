"""Inequality checkers and the two partition-witness constructions.

Every checker reports exact lhs/rhs integers so extremal searches can rank
ties.  The witness constructors materialize the partition maps that prove
the multiplicity and type bounds, validating every claimed property; any
failure would contradict a theorem, so it raises WitnessViolation instead
of returning a report.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .apery import PseudoFrobeniusSet, _almost_symmetric_definitional, _require_counting_identity, pseudo_frobenius
from .core import Semigroup, checked_product, checked_value, membership
from .errors import DegenerateFullMonoid, NotAlmostSymmetric, WitnessViolation


class BoundId(Enum):
    WILF = "wilf"
    WILF_Q = "wilfq"
    WILF_N2 = "wilfn2"
    MULTIPLICITY = "multiplicity"
    TYPE = "type"
    TYPE_WEAK = "typeweak"
    COROLLARY_AS = "corollaryas"


class Scope(Enum):
    IN_SCOPE = "in_scope"
    OUT_OF_THEOREM_SCOPE = "out_of_theorem_scope"


class WitnessKind(Enum):
    APERY_PHI = "apery_phi"
    PF_PHI = "pf_phi"


@dataclass(frozen=True)
class BoundReport:
    """One evaluated inequality: lhs <= rhs with exact slack."""

    bound_id: BoundId
    lhs: int
    rhs: int
    slack: int
    holds: bool
    scope: Scope
    gens: tuple[int, ...]


@dataclass(frozen=True)
class WitnessPartition:
    """A validated partition map together with its cardinality ledger.

    `blocks` maps each source element to its (small element, generator)
    pairs; blocks are nonempty, pairwise disjoint, and stay inside the
    allowed codomain.  For the pseudo-Frobenius map, `excluded` holds the
    removed elements {F, f2} and the pairs (i*g1, gj), 1 <= i <= q-1, are
    checked absent.
    """

    kind: WitnessKind
    gens: tuple[int, ...]
    blocks: tuple[tuple[int, tuple[tuple[int, int], ...]], ...]
    excluded: tuple[int, ...]
    forbidden_pairs_checked: int
    ledger_lower: int
    ledger_total: int
    ledger_upper: int


@dataclass(frozen=True)
class FullReport:
    """All applicable bound reports plus both witnesses for one semigroup."""

    reports: tuple[BoundReport, ...]
    witnesses: tuple[WitnessPartition, WitnessPartition]


def check_bound(s: Semigroup, bound_id: BoundId) -> BoundReport:
    """Evaluate one inequality with exact integer lhs/rhs.

    CorollaryAS requires an almost-symmetric input and reports the
    half-line case as out of theorem scope while still evaluating it.
    """
    _reject_full_monoid(s)
    type_t: int | None = None
    if bound_id in (BoundId.TYPE, BoundId.TYPE_WEAK):
        type_t = pseudo_frobenius(s).type_t
    if bound_id is BoundId.COROLLARY_AS:
        pf = pseudo_frobenius(s)
        if not _almost_symmetric_definitional(s, pf):
            raise NotAlmostSymmetric(f"{s.min_gens} is not almost-symmetric")
        _require_counting_identity(s, pf)
    return _report(s, bound_id, type_t)


def apery_partition_witness(s: Semigroup) -> WitnessPartition:
    """Partition map behind the multiplicity bound g1 <= (e-1)n + 1.

    Each nonzero Apery element w maps to its block {(w - gi, gi) : w - gi in S}
    over the generators g2..ge.  Validates: nonempty blocks, pairwise
    disjointness, codomain containment, and g1 - 1 <= total <= n(e-1).
    """
    _reject_full_monoid(s)
    gens = s.min_gens
    g1 = gens[0]
    allowed = gens[1:]
    blocks = []
    for w in sorted(v for v in s.apery_mult if v):
        pairs = tuple(sorted((w - g, g) for g in allowed if membership(s, w - g)))
        blocks.append((w, pairs))
    part = WitnessPartition(
        kind=WitnessKind.APERY_PHI,
        gens=gens,
        blocks=tuple(blocks),
        excluded=(),
        forbidden_pairs_checked=0,
        ledger_lower=g1 - 1,
        ledger_total=sum(len(p) for _, p in blocks),
        ledger_upper=checked_product(s.small_count, len(gens) - 1),
    )
    _validate_common(part, s, set(allowed))
    if len(part.blocks) != g1 - 1:
        raise WitnessViolation(
            f"expected {g1 - 1} blocks over the nonzero Apery set, got {len(part.blocks)}"
        )
    return part


def pf_partition_witness(s: Semigroup) -> WitnessPartition:
    """Partition map behind the type bound t <= (e-2)[n-q+1] + 2.

    Removes F and the unique lam*g2 - g1 element (when present) from PF(S),
    then maps each remaining f to {(f + g1 - gi, gi) : f + g1 - gi in S}
    over g3..ge.  Validates the partition properties, the absence of every
    forbidden pair (i*g1, gj) for 1 <= i <= q-1, the emptiness of the
    domain when e = 2, and t - 2 <= total <= (e-2)(n-q+1).
    """
    _reject_full_monoid(s)
    return _pf_witness(s, pseudo_frobenius(s))


def full_report(s: Semigroup) -> FullReport:
    """Evaluate every applicable bound plus both witnesses.

    Reports come in BoundId order; CorollaryAS is omitted when the
    semigroup is not almost-symmetric.
    """
    _reject_full_monoid(s)
    pf = pseudo_frobenius(s)
    almost = _almost_symmetric_definitional(s, pf)
    if almost:
        _require_counting_identity(s, pf)
    reports = tuple(
        _report(s, b, pf.type_t)
        for b in BoundId
        if almost or b is not BoundId.COROLLARY_AS
    )
    return FullReport(reports, (apery_partition_witness(s), _pf_witness(s, pf)))


def _reject_full_monoid(s: Semigroup) -> None:
    if s.is_full_monoid:
        raise DegenerateFullMonoid("bounds are evaluated only for proper numerical semigroups")


def _report(s: Semigroup, bound_id: BoundId, type_t: int | None = None) -> BoundReport:
    frob, n, q = s.frobenius, s.small_count, s.q
    e = len(s.min_gens)
    g1 = s.min_gens[0]
    scope = Scope.IN_SCOPE
    if bound_id is BoundId.WILF:
        lhs, rhs = frob + 1, checked_product(e, n)
    elif bound_id is BoundId.WILF_Q:
        lhs, rhs = frob + 1, checked_product(q, e, n)
    elif bound_id is BoundId.WILF_N2:
        lhs, rhs = frob + 1, checked_product(e, n, n)
    elif bound_id is BoundId.MULTIPLICITY:
        lhs, rhs = g1, checked_value(checked_product(e - 1, n) + 1, "bound rhs")
    elif bound_id is BoundId.TYPE:
        lhs = type_t if type_t is not None else pseudo_frobenius(s).type_t
        rhs = checked_value(checked_product(e - 2, n - q + 1) + 2, "bound rhs")
    elif bound_id is BoundId.TYPE_WEAK:
        lhs = type_t if type_t is not None else pseudo_frobenius(s).type_t
        rhs = checked_value(checked_product(e - 2, n) + 2, "bound rhs")
    elif bound_id is BoundId.COROLLARY_AS:
        lhs, rhs = frob + 1, checked_product(e, n)
        if s.q == 1:
            scope = Scope.OUT_OF_THEOREM_SCOPE
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"unknown bound {bound_id!r}")
    return BoundReport(
        bound_id=bound_id,
        lhs=lhs,
        rhs=rhs,
        slack=rhs - lhs,
        holds=lhs <= rhs,
        scope=scope,
        gens=s.min_gens,
    )


def _pf_witness(s: Semigroup, pf: PseudoFrobeniusSet) -> WitnessPartition:
    gens = s.min_gens
    g1 = gens[0]
    e = len(gens)
    frob = s.frobenius
    excluded = (frob,) if pf.f2 is None or pf.f2 == frob else (frob, pf.f2)
    excluded_set = set(excluded)
    allowed = gens[2:]
    blocks = []
    for f in pf.elements:
        if f in excluded_set:
            continue
        base = f + g1
        pairs = tuple(sorted((base - g, g) for g in allowed if membership(s, base - g)))
        blocks.append((f, pairs))
    part = WitnessPartition(
        kind=WitnessKind.PF_PHI,
        gens=gens,
        blocks=tuple(blocks),
        excluded=excluded,
        forbidden_pairs_checked=(s.q - 1) * max(e - 2, 0),
        ledger_lower=pf.type_t - 2,
        ledger_total=sum(len(p) for _, p in blocks),
        ledger_upper=checked_product(e - 2, s.small_count - s.q + 1),
    )
    if e == 2 and part.blocks:
        raise WitnessViolation(
            f"two-generator semigroup {gens} has nonempty reduced pseudo-Frobenius set"
        )
    seen = _validate_common(part, s, set(allowed))
    for i in range(1, s.q):
        anchor = i * g1
        for g in allowed:
            if (anchor, g) in seen:
                raise WitnessViolation(
                    f"forbidden pair ({anchor}, {g}) appears in the partition for {gens}"
                )
    if len(part.blocks) != pf.type_t - len(excluded):
        raise WitnessViolation(
            f"expected {pf.type_t - len(excluded)} blocks over the reduced "
            f"pseudo-Frobenius set, got {len(part.blocks)}"
        )
    return part


def _validate_common(
    part: WitnessPartition, s: Semigroup, allowed: set[int]
) -> set[tuple[int, int]]:
    frob = s.frobenius
    seen: set[tuple[int, int]] = set()
    for source, pairs in part.blocks:
        if not pairs:
            raise WitnessViolation(f"empty block for source {source} in {part.kind.value}")
        for small, g in pairs:
            if g not in allowed:
                raise WitnessViolation(f"pair ({small}, {g}) uses a disallowed generator")
            if small < 0 or small > frob or not membership(s, small):
                raise WitnessViolation(f"pair ({small}, {g}) leaves the small elements")
            if (small, g) in seen:
                raise WitnessViolation(f"pair ({small}, {g}) appears in two blocks")
            seen.add((small, g))
    if not part.ledger_lower <= part.ledger_total <= part.ledger_upper:
        raise WitnessViolation(
            f"cardinality ledger violated for {part.kind.value}: "
            f"{part.ledger_lower} <= {part.ledger_total} <= {part.ledger_upper}"
        )
    return seen
