"""Reduced simplicial homology over ℚ or a prime field, by exact sparse elimination."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .simplicial import SimplicialComplex, label_key, link


@dataclass(frozen=True)
class FieldChoice:
    """``characteristic`` 0 means the rationals, otherwise a prime p."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p < 0 or (p > 0 and not _is_prime(p)):
            raise ValueError(f"field characteristic must be 0 or a prime, got {p}")

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"


RATIONALS = FieldChoice(0)


def prime_field(p: int) -> FieldChoice:
    return FieldChoice(p)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers; ``values[0]`` is β̃_{-1}."""

    values: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        """β̃_i, zero outside the stored range."""
        k = i + 1
        return self.values[k] if 0 <= k < len(self.values) else 0

    @property
    def top(self) -> int:
        return len(self.values) - 2

    def from_zero(self) -> tuple[int, ...]:
        """(β̃_0, ..., β̃_top)."""
        return self.values[1:]

    def reduced_euler_characteristic(self) -> int:
        return sum((-1) ** (i - 1) * b for i, b in enumerate(self.values))


def matrix_rank(rows: list[dict[int, int]], field: FieldChoice = RATIONALS) -> int:
    """Rank of a sparse integer matrix given as a list of {column: entry} rows."""
    p = field.characteristic
    work: list[dict[int, int]] = []
    for r in rows:
        row = {c: (v % p if p else v) for c, v in r.items()}
        row = {c: v for c, v in row.items() if v}
        if row:
            work.append(row)
    rank = 0
    pivots: dict[int, dict[int, int]] = {}
    for row in work:
        # reduce against existing pivots until the leading column is new
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                break
            a, b = row[lead], piv[lead]
            if p:
                factor = a * pow(b, -1, p) % p
                for c, v in piv.items():
                    nv = (row.get(c, 0) - factor * v) % p
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
            else:
                g = math.gcd(a, b)
                ma, mb = b // g, a // g
                new = {c: ma * v for c, v in row.items()}
                for c, v in piv.items():
                    nv = new.get(c, 0) - mb * v
                    if nv:
                        new[c] = nv
                    else:
                        new.pop(c, None)
                if new:
                    g2 = math.gcd(*new.values())
                    if g2 > 1:
                        new = {c: v // g2 for c, v in new.items()}
                row = new
        if row:
            pivots[min(row)] = row
            rank += 1
    return rank


def boundary_rows(cx: SimplicialComplex, k: int) -> list[dict[int, int]]:
    """Rows of ∂_k : C_k -> C_{k-1}, one row per k-face; C_{-1} is spanned by ∅."""
    lower = {f: i for i, f in enumerate(cx.faces_of_dim(k - 1))} if k > 0 else {frozenset(): 0}
    rows = []
    for face in cx.faces_of_dim(k):
        verts = sorted(face, key=label_key)
        row = {}
        for pos, v in enumerate(verts):
            row[lower[face - {v}]] = (-1) ** pos
        rows.append(row)
    return rows


def betti_numbers(cx: SimplicialComplex, field: FieldChoice = RATIONALS) -> BettiVector:
    if cx.is_void():
        raise ValueError("homology of the void complex is not defined here")
    d = cx.dim
    dims = [1] + [len(cx.faces_of_dim(k)) for k in range(d + 1)]  # index k+1 for C_k
    ranks = [0] * (d + 3)  # ranks[k+1] = rank ∂_k, ∂_{-1} = ∂_{d+1} = 0
    for k in range(d + 1):
        ranks[k + 1] = matrix_rank(boundary_rows(cx, k), field)
    values = tuple(dims[k + 1] - ranks[k + 1] - ranks[k + 2] for k in range(-1, d + 1))
    return BettiVector(values)


def _nonempty_faces(cx: SimplicialComplex) -> list[frozenset[str]]:
    return sorted((f for f in cx.faces if f), key=lambda f: (len(f), sorted(map(label_key, f))))


def link_defects(cx: SimplicialComplex, field: FieldChoice = RATIONALS, manifold: bool = False) -> list[tuple[frozenset[str], BettiVector]]:
    """Nonempty faces whose link homology breaks the Buchsbaum (or manifold) condition."""
    d = cx.dim
    bad = []
    cache: dict[SimplicialComplex, BettiVector] = {}
    for face in _nonempty_faces(cx):
        lk = link(cx, face)
        if lk not in cache:
            cache[lk] = betti_numbers(lk, field)
        b = cache[lk]
        top = d - len(face)
        others = any(b[i] for i in range(-1, b.top + 1) if i != top)
        if others or (manifold and b[top] != 1):
            bad.append((face, b))
    return bad


def is_buchsbaum(cx: SimplicialComplex, field: FieldChoice = RATIONALS) -> bool:
    """Pure, and every nonempty face has link homology only in the top degree."""
    if cx.is_void() or not cx.is_pure():
        return False
    return not link_defects(cx, field)


def is_homology_manifold(cx: SimplicialComplex, field: FieldChoice = RATIONALS) -> bool:
    if cx.is_void() or not cx.is_pure():
        return False
    return not link_defects(cx, field, manifold=True)


def novik_swartz_bounds(n: int, betti: BettiVector) -> list[int]:
    """Lower bounds C(n,i) Σ_{j=1}^{i} (-1)^{i-j} β̃_{j-1} for h_0..h_n."""
    return [math.comb(n, i) * sum((-1) ** (i - j) * betti[j - 1] for j in range(1, i + 1)) for i in range(n + 1)]


def reduced_euler_from_f(f: Sequence[int]) -> int:
    """Σ (-1)^i f_i - 1 for an f-vector starting at f_0."""
    return sum((-1) ** i * x for i, x in enumerate(f)) - 1
