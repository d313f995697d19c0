"""Independent brute-force oracles used to cross-check the library.

Everything here derives from a plain dynamic-programming membership sieve;
no package code is imported, so these helpers stay independent of the
Apery-vector implementation they verify.
"""

from __future__ import annotations


def safe_limit(gens) -> int:
    # Shortest representations use fewer than min(gens) generator steps,
    # so every quantity of interest sits below min*max; headroom added for
    # membership probes past the Frobenius number.
    return min(gens) * max(gens) + 2 * max(gens) + 2


def member_table(gens, limit: int) -> list[bool]:
    table = [False] * (limit + 1)
    table[0] = True
    for x in range(1, limit + 1):
        for g in gens:
            if g <= x and table[x - g]:
                table[x] = True
                break
    return table


def frobenius_of(table: list[bool]) -> int:
    for x in range(len(table) - 1, -1, -1):
        if not table[x]:
            return x
    return -1


def gaps_of(table: list[bool]) -> list[int]:
    frob = frobenius_of(table)
    return [x for x in range(frob + 1) if not table[x]]


def small_elements_of(table: list[bool]) -> list[int]:
    frob = frobenius_of(table)
    return [x for x in range(frob + 1) if table[x]]


def multiplicity_of(table: list[bool]) -> int:
    for x in range(1, len(table)):
        if table[x]:
            return x
    raise AssertionError("no nonzero element below the sieve limit")


def apery_of(table: list[bool], m: int) -> list[int]:
    least = []
    for r in range(m):
        x = r
        while not table[x]:
            x += m
        least.append(x)
    return sorted(least)


def min_gens_of(table: list[bool]) -> tuple[int, ...]:
    frob = frobenius_of(table)
    m = multiplicity_of(table)
    gens = []
    for v in range(1, frob + m + 1):
        if not table[v]:
            continue
        if not any(table[a] and table[v - a] for a in range(1, v // 2 + 1)):
            gens.append(v)
    return tuple(gens)


def pf_of(table: list[bool]) -> list[int]:
    # Full definitional test: f + s must be a member for every nonzero
    # member s, probing every s up to F + 1 (beyond that sums exceed F).
    frob = frobenius_of(table)
    nonzero = [s for s in range(1, frob + 2) if table[s]]
    out = []
    for f in range(frob + 1):
        if table[f]:
            continue
        if all(table[f + s] for s in nonzero):
            out.append(f)
    return out


def is_almost_symmetric_of(table: list[bool]) -> bool:
    frob = frobenius_of(table)
    pf = set(pf_of(table))
    for x in gaps_of(table):
        c = frob - x
        if table[c]:
            continue
        if x in pf and c in pf:
            continue
        return False
    return True
