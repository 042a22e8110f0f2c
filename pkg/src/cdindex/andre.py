"""André permutations, their cd-types, and the coefficient count for the Φ̌ polynomials.

Permutations are tuples of distinct comparable values in one-line notation.
Positions in the public API are 1-based, matching the usual descent
conventions.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator, Sequence

from .ncpoly import NcPoly

DEFAULT_LIMIT = 9


class EnumerationLimit(ValueError):
    pass


def descents(perm: Sequence) -> set[int]:
    return {i + 1 for i in range(len(perm) - 1) if perm[i] > perm[i + 1]}


def has_double_descent(perm: Sequence) -> bool:
    return any(perm[i] > perm[i + 1] > perm[i + 2] for i in range(len(perm) - 2))


def is_andre_direct(perm: Sequence) -> bool:
    """Check the two defining conditions literally.

    Condition (2): for all 2 <= j < j' <= n such that, among
    {π(j-1), π(j), π(j'-1), π(j')}, π(j-1) is the maximum and π(j') the
    minimum, some j < j'' < j' has π(j'') < π(j').
    """
    if has_double_descent(perm):
        return False
    n = len(perm)
    p = (None,) + tuple(perm)  # 1-based
    for j in range(2, n):
        top = p[j - 1]
        if top < p[j]:
            continue
        for jp in range(j + 1, n + 1):
            low = p[jp]
            if top < p[jp - 1] or low > p[j] or low > p[jp - 1]:
                continue
            if not any(p[k] < low for k in range(j + 1, jp)):
                return False
    return True


def _is_andre_rec(seq: tuple) -> bool:
    n = len(seq)
    if n <= 2:
        return True
    m = seq.index(min(seq)) + 1
    if m < n:
        return _is_andre_rec(seq[:m]) and _is_andre_rec(seq[m:])
    # Minimum in last place makes the split trivial.  Every pair with j' = n
    # qualifies and has no witness, so no descent top of the prefix may
    # exceed the prefix's last entry; the other pairs live in the prefix.
    head = seq[:-1]
    last = head[-1]
    if any(head[i] > head[i + 1] and head[i] > last for i in range(len(head) - 1)):
        return False
    return _is_andre_rec(head)


def is_andre_recursive(perm: Sequence) -> bool:
    """Decide André-ness by splitting at the position of the minimum."""
    return _is_andre_rec(tuple(perm))


def cd_type(perm: Sequence) -> str:
    """The cd-word W(π): peel a trailing ``d`` at a final descent, else a ``c``."""
    out: list[str] = []
    k = len(perm)
    while k >= 2:
        if perm[k - 2] > perm[k - 1]:
            out.append("d")
            k -= 2
        else:
            out.append("c")
            k -= 1
    if k == 1:
        out.append("c")
    return "".join(reversed(out))


def andre_permutations(n: int) -> Iterator[tuple[int, ...]]:
    """André permutations of 1..n in lexicographic order.

    Prefixes with a double descent are pruned before the full check.
    """
    used = [False] * (n + 1)
    prefix: list[int] = []

    def extend() -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            perm = tuple(prefix)
            if is_andre_direct(perm):
                yield perm
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            if len(prefix) >= 2 and prefix[-2] > prefix[-1] > v:
                continue
            used[v] = True
            prefix.append(v)
            yield from extend()
            prefix.pop()
            used[v] = False

    yield from extend()


def andre_type_counts(n: int, last: int | None = None, limit: int = DEFAULT_LIMIT) -> Counter:
    """Count André permutations of [n] by cd-type, optionally fixing π(n)."""
    if n > limit:
        raise EnumerationLimit(f"n={n} exceeds enumeration limit {limit}")
    counts: Counter = Counter()
    for perm in andre_permutations(n):
        if last is None or perm[-1] == last:
            counts[cd_type(perm)] += 1
    return counts


def phi_check_via_andre(n: int, j: int, limit: int = DEFAULT_LIMIT) -> NcPoly:
    """Φ̌^n_j as the generating polynomial of André permutations with π(n) = n - j."""
    if not 0 <= j <= n - 1:
        raise ValueError(f"need 0 <= j <= n-1, got n={n}, j={j}")
    return NcPoly(andre_type_counts(n, last=n - j, limit=limit), "cd")


def phi_row_via_andre(n: int, limit: int = DEFAULT_LIMIT) -> list[NcPoly]:
    """All of Φ̌^n_0..Φ̌^n_{n-1} from one enumeration pass."""
    if n > limit:
        raise EnumerationLimit(f"n={n} exceeds enumeration limit {limit}")
    rows: list[Counter] = [Counter() for _ in range(n)]
    for perm in andre_permutations(n):
        rows[n - perm[-1]][cd_type(perm)] += 1
    return [NcPoly(r, "cd") for r in rows]
