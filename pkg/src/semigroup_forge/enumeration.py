"""Exhaustive generation of numerical semigroups and the sweep engine.

Three layers live here:

* the removal tree, which reaches every numerical semigroup of genus g
  exactly once at depth g by deleting one minimal generator above the
  Frobenius number per edge;
* a brute-force gap-set oracle that enumerates candidate gap sets directly
  and never touches the tree code, used to cross-check the enumerator;
* the sweep engine, which walks the tree, evaluates the configured bound
  checkers, witnesses and structural invariants per semigroup, and folds
  everything through order-independent reductions so results match for any
  worker count.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from multiprocessing import get_context
from typing import Callable, Iterable

from .apery import _almost_symmetric_definitional, pseudo_frobenius
from .bounds import BoundId, _pf_witness, _report, apery_partition_witness
from .core import Semigroup, _full_monoid, from_generators
from .errors import BudgetExceeded, Overflow, WitnessViolation

DEFAULT_GENUS_CAP = 40
CAP_ENV_VAR = "SEMIGROUP_FORGE_CAP"
DEFAULT_SPLIT_DEPTH = 10
ORACLE_GENUS_LIMIT = 14


def genus_cap() -> int:
    """Hard cap on sweep depth; the SEMIGROUP_FORGE_CAP env var overrides it."""
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_GENUS_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"invalid {CAP_ENV_VAR} value {raw!r}") from None


@dataclass(frozen=True)
class TreeNode:
    """One tree position: a semigroup plus its removable generators."""

    semigroup: Semigroup
    effective_generators: tuple[int, ...]
    depth: int

    @property
    def degenerate(self) -> bool:
        return self.semigroup.is_full_monoid


@dataclass(frozen=True)
class Violation:
    """One failed check observed during a sweep."""

    category: str
    gens: tuple[int, ...]
    message: str
    bound_id: BoundId | None = None


@dataclass(frozen=True)
class SlackExtremum:
    """Minimum observed slack for one bound, with every attaining semigroup."""

    bound_id: BoundId
    min_slack: int
    example: tuple[int, ...]
    attainers: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SweepSummary:
    """Order-independent aggregate of one enumeration or sweep.

    `wall_time` is informational and excluded from equality so summaries
    produced with different worker counts compare equal field-by-field.
    """

    max_genus: int
    counts: tuple[int, ...]
    almost_symmetric_count: int
    witnesses_checked: int
    extremal: tuple[SlackExtremum, ...]
    violations: tuple[Violation, ...]
    identity_only: tuple[tuple[int, ...], ...]
    oracle_match: bool | None
    wall_time: float = field(compare=False, default=0.0)

    @property
    def total(self) -> int:
        return sum(self.counts)


def enumerate_tree(
    max_genus: int,
    visitor: Callable[[TreeNode], None] | None = None,
    *,
    force: bool = False,
) -> SweepSummary:
    """Visit every numerical semigroup of genus <= max_genus exactly once.

    The degenerate root (the full monoid) is included and flagged via
    TreeNode.degenerate.  Visitor exceptions abort the walk.
    """
    _check_budget(max_genus, force)
    start = time.perf_counter()
    counts = [0] * (max_genus + 1)
    stack = [_root()]
    while stack:
        node = stack.pop()
        counts[node.depth] += 1
        if visitor is not None:
            visitor(node)
        if node.depth < max_genus:
            for g in reversed(node.effective_generators):
                stack.append(_node(_child(node.semigroup, g)))
    return SweepSummary(
        max_genus=max_genus,
        counts=tuple(counts),
        almost_symmetric_count=0,
        witnesses_checked=0,
        extremal=(),
        violations=(),
        identity_only=(),
        oracle_match=None,
        wall_time=time.perf_counter() - start,
    )


def brute_force_oracle(max_genus: int) -> dict[int, frozenset[tuple[int, ...]]]:
    """Enumerate semigroups per genus from gap sets, independent of the tree.

    For genus g the candidates are subsets of {1, ..., 2g-1} of size g
    containing 1 whose complement is closed under addition; survivors are
    keyed by the minimal generating system recovered from a plain sieve.
    """
    if max_genus < 0:
        raise ValueError("max_genus must be non-negative")
    if max_genus > ORACLE_GENUS_LIMIT:
        raise BudgetExceeded(
            f"brute-force oracle is capped at genus {ORACLE_GENUS_LIMIT} (requested {max_genus})"
        )
    out: dict[int, frozenset[tuple[int, ...]]] = {0: frozenset({(1,)})}
    for g in range(1, max_genus + 1):
        out[g] = frozenset(_min_gens_of_gap_set(gaps) for gaps in _closed_gap_sets(g))
    return out


def sweep(
    max_genus: int,
    *,
    bounds: Iterable[BoundId] | None = None,
    witnesses: bool = False,
    workers: int = 1,
    oracle_crosscheck: bool = False,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
    force: bool = False,
) -> SweepSummary:
    """Run the configured checks over every semigroup of genus <= max_genus.

    Structural invariants and the almost-symmetric bookkeeping always run;
    `bounds` selects the inequality reports (all seven by default) and
    `witnesses` adds both partition constructions.  Results are identical
    for every worker count: the tree splits into independent subtrees at
    `split_depth` and all reductions are commutative and associative.
    """
    _check_budget(max_genus, force)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if split_depth < 1:
        raise ValueError("split_depth must be >= 1")
    if oracle_crosscheck and max_genus > ORACLE_GENUS_LIMIT:
        raise BudgetExceeded(
            f"oracle crosscheck is capped at genus {ORACLE_GENUS_LIMIT} (requested {max_genus})"
        )
    cfg = _SweepConfig(
        max_genus=max_genus,
        bounds=tuple(BoundId) if bounds is None else tuple(bounds),
        witnesses=witnesses,
        crosscheck=oracle_crosscheck,
    )
    start = time.perf_counter()
    acc = _Accumulator(cfg)
    use_pool = workers > 1 and max_genus > split_depth
    frontier: list[tuple[int, ...]] = []
    stack = [_root()]
    while stack:
        node = stack.pop()
        if use_pool and node.depth == split_depth:
            frontier.append(node.semigroup.min_gens)
            continue
        acc.fold(node)
        if node.depth < max_genus:
            for g in reversed(node.effective_generators):
                stack.append(_node(_child(node.semigroup, g)))
    if use_pool and frontier:
        tasks = [(gens, cfg) for gens in frontier]
        with get_context().Pool(workers) as pool:
            for part in pool.imap_unordered(_subtree_task, tasks):
                acc.merge(part)
    oracle_match: bool | None = None
    if cfg.crosscheck:
        oracle_match = _crosscheck(acc, brute_force_oracle(max_genus))
    return acc.finalize(oracle_match, time.perf_counter() - start)


def _check_budget(max_genus: int, force: bool) -> None:
    if max_genus < 0:
        raise ValueError("max_genus must be non-negative")
    cap = genus_cap()
    if max_genus > cap and not force:
        raise BudgetExceeded(f"max_genus {max_genus} exceeds cap {cap} (use --force)")


def _node(s: Semigroup) -> TreeNode:
    return TreeNode(
        semigroup=s,
        effective_generators=tuple(g for g in s.min_gens if g > s.frobenius),
        depth=s.genus,
    )


def _root() -> TreeNode:
    return _node(_full_monoid())


def _child(s: Semigroup, removed: int) -> Semigroup:
    # Removing a minimal generator above F keeps a numerical semigroup;
    # the survivor is generated by the remaining minimal generators, the
    # sums removed+h over those, and 2*removed, 3*removed.
    rest = [h for h in s.min_gens if h != removed]
    multiset = set(rest)
    multiset.update(removed + h for h in rest)
    multiset.add(2 * removed)
    multiset.add(3 * removed)
    return from_generators(multiset)


def _closed_gap_sets(genus: int) -> list[tuple[int, ...]]:
    """All gap sets of the given size whose complement is addition-closed.

    Decides 1, 2, ..., 2*genus-1 in order; a value may become a gap only
    when it is not the sum of two already-accepted nonzero members, which
    is a complete test because both addends of any sum are smaller.
    """
    limit = 2 * genus - 1
    member = [True] * (limit + 1)
    gaps: list[int] = []
    results: list[tuple[int, ...]] = []

    def descend(x: int, left: int) -> None:
        if left == 0:
            results.append(tuple(gaps))
            return
        if x > limit or limit - x + 1 < left:
            return
        blocked = False
        for a in range(1, x // 2 + 1):
            if member[a] and member[x - a]:
                blocked = True
                break
        if not blocked:
            member[x] = False
            gaps.append(x)
            descend(x + 1, left - 1)
            gaps.pop()
            member[x] = True
        if x > 1:  # 1 must be a gap whenever the genus is positive
            descend(x + 1, left)

    descend(1, genus)
    return results


def _min_gens_of_gap_set(gaps: tuple[int, ...]) -> tuple[int, ...]:
    """Minimal generating system of the semigroup with exactly these gaps."""
    frob = max(gaps)
    gap_set = set(gaps)
    hi = 2 * frob + 2
    member = [x not in gap_set for x in range(hi + 1)]
    gens = []
    for v in range(1, hi + 1):
        if not member[v]:
            continue
        if not any(member[a] and member[v - a] for a in range(1, v // 2 + 1)):
            gens.append(v)
    return tuple(gens)


@dataclass(frozen=True)
class _SweepConfig:
    max_genus: int
    bounds: tuple[BoundId, ...]
    witnesses: bool
    crosscheck: bool


class _Accumulator:
    """Mutable per-worker fold state; every reduction commutes."""

    def __init__(self, cfg: _SweepConfig) -> None:
        self.cfg = cfg
        self.counts = [0] * (cfg.max_genus + 1)
        self.almost_symmetric_count = 0
        self.witnesses_checked = 0
        self.extremal: dict[BoundId, tuple[int, set[tuple[int, ...]]]] = {}
        self.violations: list[Violation] = []
        self.identity_only: list[tuple[int, ...]] = []
        self.tree_sets: dict[int, set[tuple[int, ...]]] | None = (
            {g: set() for g in range(cfg.max_genus + 1)} if cfg.crosscheck else None
        )

    def fold(self, node: TreeNode) -> None:
        self.counts[node.depth] += 1
        s = node.semigroup
        if self.tree_sets is not None:
            self.tree_sets[node.depth].add(s.min_gens)
        if s.is_full_monoid:
            return
        try:
            self._check(s)
        except Overflow as exc:
            gens = ",".join(str(g) for g in s.min_gens)
            raise Overflow(f"{exc} [generators {gens}]") from exc

    def _check(self, s: Semigroup) -> None:
        gens = s.min_gens
        e = len(gens)
        g1 = gens[0]
        frob = s.frobenius
        n = s.small_count
        q = s.q
        ap = s.apery_mult
        if n + s.genus != frob + 1:
            self._violate("invariant", gens, f"n+genus={n + s.genus} differs from F+1={frob + 1}")
        if len(ap) != g1:
            self._violate("invariant", gens, "Apery vector length differs from multiplicity")
        if max(ap) != frob + g1:
            self._violate("invariant", gens, "largest Apery element differs from F+g1")
        if not 1 <= q <= n:
            self._violate("invariant", gens, f"q={q} outside [1, n={n}]")
        try:
            pf = pseudo_frobenius(s)
        except WitnessViolation as exc:
            self._violate("witness", gens, str(exc))
            return
        t = pf.type_t
        if not pf.elements or pf.elements[-1] != frob:
            self._violate("invariant", gens, "F is not the largest pseudo-Frobenius number")
        if t > g1 - 1:
            self._violate("invariant", gens, f"type {t} exceeds g1-1={g1 - 1}")
        almost = _almost_symmetric_definitional(s, pf)
        identity = 2 * n + t == frob + 2
        if almost:
            self.almost_symmetric_count += 1
            if not identity:
                self._violate(
                    "almost_symmetric_identity", gens, f"2n+t={2 * n + t} differs from F+2={frob + 2}"
                )
            if frob + 1 > e * n:
                self._violate("corollary", gens, f"F+1={frob + 1} exceeds en={e * n}")
            if e >= 4 and q >= 2 and not (frob + 1 <= e * n - e + 3 < e * n):
                self._violate(
                    "corollary_strict", gens, f"chain F+1 <= en-e+3 < en failed (F={frob}, e={e}, n={n})"
                )
        elif identity:
            self.identity_only.append(gens)
        for b in self.cfg.bounds:
            if b is BoundId.COROLLARY_AS and not almost:
                continue
            rep = _report(s, b, t)
            if not rep.holds:
                self._violate("bound", gens, f"lhs={rep.lhs} exceeds rhs={rep.rhs}", b)
            cur = self.extremal.get(b)
            if cur is None or rep.slack < cur[0]:
                self.extremal[b] = (rep.slack, {gens})
            elif rep.slack == cur[0]:
                cur[1].add(gens)
        if self.cfg.witnesses:
            try:
                apery_partition_witness(s)
                _pf_witness(s, pf)
                self.witnesses_checked += 1
            except WitnessViolation as exc:
                self._violate("witness", gens, str(exc))

    def _violate(
        self, category: str, gens: tuple[int, ...], message: str, bound_id: BoundId | None = None
    ) -> None:
        self.violations.append(Violation(category, gens, message, bound_id))

    def merge(self, other: "_Accumulator") -> None:
        for i, c in enumerate(other.counts):
            self.counts[i] += c
        self.almost_symmetric_count += other.almost_symmetric_count
        self.witnesses_checked += other.witnesses_checked
        for b, (slack, attainers) in other.extremal.items():
            cur = self.extremal.get(b)
            if cur is None or slack < cur[0]:
                self.extremal[b] = (slack, set(attainers))
            elif slack == cur[0]:
                cur[1].update(attainers)
        self.violations.extend(other.violations)
        self.identity_only.extend(other.identity_only)
        if self.tree_sets is not None and other.tree_sets is not None:
            for g, seen in other.tree_sets.items():
                self.tree_sets[g].update(seen)

    def finalize(self, oracle_match: bool | None, wall_time: float) -> SweepSummary:
        extremal = []
        for b in BoundId:
            entry = self.extremal.get(b)
            if entry is None:
                continue
            attainers = tuple(sorted(entry[1]))
            extremal.append(SlackExtremum(b, entry[0], attainers[0], attainers))
        violations = tuple(
            sorted(
                self.violations,
                key=lambda v: (v.category, v.gens, v.bound_id.value if v.bound_id else "", v.message),
            )
        )
        return SweepSummary(
            max_genus=self.cfg.max_genus,
            counts=tuple(self.counts),
            almost_symmetric_count=self.almost_symmetric_count,
            witnesses_checked=self.witnesses_checked,
            extremal=tuple(extremal),
            violations=violations,
            identity_only=tuple(sorted(self.identity_only)),
            oracle_match=oracle_match,
            wall_time=wall_time,
        )


def _subtree_task(args: tuple[tuple[int, ...], _SweepConfig]) -> _Accumulator:
    gens, cfg = args
    acc = _Accumulator(cfg)
    stack = [_node(from_generators(gens))]
    while stack:
        node = stack.pop()
        acc.fold(node)
        if node.depth < cfg.max_genus:
            for g in reversed(node.effective_generators):
                stack.append(_node(_child(node.semigroup, g)))
    return acc


def _crosscheck(acc: _Accumulator, oracle: dict[int, frozenset[tuple[int, ...]]]) -> bool:
    assert acc.tree_sets is not None
    match = True
    for g in range(acc.cfg.max_genus + 1):
        tree_set = frozenset(acc.tree_sets[g])
        if tree_set != oracle[g]:
            match = False
            missing = sorted(oracle[g] - tree_set)[:3]
            extra = sorted(tree_set - oracle[g])[:3]
            acc._violate(
                "oracle_mismatch",
                (),
                f"genus {g}: tree has {len(tree_set)} semigroups, oracle {len(oracle[g])}; "
                f"missing {missing}, extra {extra}",
            )
    return match
