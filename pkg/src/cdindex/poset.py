"""Finite bounded graded posets, flag vectors, and the (semi-Eulerian) cd-index."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .ncpoly import A, B, NcPoly, NotCdExpressible, ab_to_cd, substitute


class InvalidPoset(ValueError):
    pass


class IncomparablePair(ValueError):
    pass


class NotSemiEulerian(ValueError):
    pass


class InternalInconsistency(RuntimeError):
    pass


class PosetParseError(ValueError):
    pass


class Classification(enum.Enum):
    EULERIAN = "Eulerian"
    SEMI_EULERIAN = "SemiEulerian"
    NEITHER = "Neither"

    def __str__(self) -> str:
        return self.value


class GradedPoset:
    """A finite poset given by ranks and cover relations.

    Construction never fails on bad data; call :meth:`validate` for a list of
    problems, or :meth:`require_valid` to raise.  Element ids are strings.
    """

    def __init__(self, elements: Iterable[str], rank: Mapping[str, int], covers: Iterable[tuple[str, str]]):
        self.elements: tuple[str, ...] = tuple(elements)
        self.rank: dict[str, int] = dict(rank)
        self.covers: tuple[tuple[str, str], ...] = tuple(covers)

    def __repr__(self) -> str:
        return f"GradedPoset({len(self.elements)} elements, rank {self.rank.get(self.top, '?') if self._extremes_ok() else '?'})"

    # -- validation -------------------------------------------------------
    def _minimal(self) -> list[str]:
        has_lower = {hi for _, hi in self.covers}
        return [x for x in self.elements if x not in has_lower]

    def _maximal(self) -> list[str]:
        has_upper = {lo for lo, _ in self.covers}
        return [x for x in self.elements if x not in has_upper]

    def _extremes_ok(self) -> bool:
        return len(self._minimal()) == 1 and len(self._maximal()) == 1

    def validate(self) -> list[str]:
        problems: list[str] = []
        seen: set[str] = set()
        for x in self.elements:
            if x in seen:
                problems.append(f"duplicate element {x}")
            seen.add(x)
            if x not in self.rank:
                problems.append(f"element {x} has no rank")
            elif not isinstance(self.rank[x], int) or self.rank[x] < 0:
                problems.append(f"element {x} has invalid rank {self.rank[x]!r}")
        for lo, hi in self.covers:
            if lo not in seen or hi not in seen:
                problems.append(f"cover {lo} {hi} names an unknown element")
                continue
            if lo in self.rank and hi in self.rank:
                step = self.rank[hi] - self.rank[lo]
                if step != 1:
                    problems.append(f"cover {lo} {hi} raises rank by {step}")
        if not self.elements:
            problems.append("empty poset")
            return problems
        mins, maxs = self._minimal(), self._maximal()
        if len(mins) != 1:
            problems.append(f"non-unique 0̂ (minimal elements: {', '.join(mins) or 'none'})")
        elif self.rank.get(mins[0]) != 0:
            problems.append(f"0̂ = {mins[0]} does not have rank 0")
        if len(maxs) != 1:
            problems.append(f"non-unique 1̂ (maximal elements: {', '.join(maxs) or 'none'})")
        return problems

    def is_valid(self) -> bool:
        return not self.validate()

    def require_valid(self) -> None:
        problems = self.validate()
        if problems:
            raise InvalidPoset("; ".join(problems))

    # -- structure (valid posets only) ---------------------------------------
    @cached_property
    def bottom(self) -> str:
        self.require_valid()
        return self._minimal()[0]

    @cached_property
    def top(self) -> str:
        self.require_valid()
        return self._maximal()[0]

    @property
    def n(self) -> int:
        """Rank of 1̂ minus one."""
        return self.rank[self.top] - 1

    @cached_property
    def _order(self) -> list[str]:
        self.require_valid()
        return sorted(self.elements, key=lambda x: self.rank[x])

    @cached_property
    def index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self._order)}

    @cached_property
    def _up(self) -> list[int]:
        """Bitmask (over ``index``) of all elements >= each element."""
        idx = self.index
        upper: list[list[int]] = [[] for _ in self._order]
        for lo, hi in self.covers:
            upper[idx[lo]].append(idx[hi])
        up = [0] * len(self._order)
        for i in reversed(range(len(self._order))):
            mask = 1 << i
            for j in upper[i]:
                mask |= up[j]
            up[i] = mask
        return up

    @cached_property
    def _down(self) -> list[int]:
        down = [0] * len(self._order)
        for i, mask in enumerate(self._up):
            for j in _bits(mask):
                down[j] |= 1 << i
        return down

    def leq(self, s: str, t: str) -> bool:
        return bool(self._up[self.index[s]] >> self.index[t] & 1)

    def interval(self, s: str, t: str) -> list[str]:
        mask = self._up[self.index[s]] & self._down[self.index[t]]
        return [self._order[i] for i in _bits(mask)]

    def levels(self) -> list[list[str]]:
        out: list[list[str]] = [[] for _ in range(self.rank[self.top] + 1)]
        for x in self._order:
            out[self.rank[x]].append(x)
        return out

    def lower_covers(self, x: str) -> list[str]:
        return [lo for lo, hi in self.covers if hi == x]

    def upper_covers(self, x: str) -> list[str]:
        return [hi for lo, hi in self.covers if lo == x]

    # -- Möbius function ------------------------------------------------------
    @cached_property
    def _mobius(self) -> np.ndarray:
        size = len(self._order)
        strict = np.zeros((size, size), dtype=np.int64)
        for i, mask in enumerate(self._up):
            for j in _bits(mask & ~(1 << i)):
                strict[i, j] = 1
        mu = np.zeros((size, size), dtype=np.int64)
        # elements are in rank order, so every u < t already has its column
        for t in range(size):
            col = -(mu @ strict[:, t])
            col[t] += 1
            mu[:, t] = col
        return mu

    def mobius(self, s: str, t: str) -> int:
        if not self.leq(s, t):
            raise IncomparablePair(f"{s} is not <= {t}")
        return int(self._mobius[self.index[s], self.index[t]])


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mobius_by_recursion(p: GradedPoset, s: str, t: str) -> int:
    """Plain recursive Möbius function; the oracle for the matrix version."""
    if not p.leq(s, t):
        raise IncomparablePair(f"{s} is not <= {t}")
    memo: dict[str, int] = {}
    for u in sorted(p.interval(s, t), key=lambda x: p.rank[x]):
        memo[u] = 1 if u == s else -sum(memo[v] for v in p.interval(s, u) if v != u)
    return memo[t]


def classify(p: GradedPoset) -> Classification:
    p.require_valid()
    mu = p._mobius
    ranks = np.array([p.rank[x] for x in p._order])
    sign = np.where((ranks[None, :] - ranks[:, None]) % 2 == 0, 1, -1)
    size = len(ranks)
    strict = np.zeros((size, size), dtype=bool)
    for i, mask in enumerate(p._up):
        for j in _bits(mask & ~(1 << i)):
            strict[i, j] = True
    bad = strict & (mu != sign)
    b, t = p.index[p.bottom], p.index[p.top]
    whole_ok = not bad[b, t]
    bad[b, t] = False
    if bad.any():
        return Classification.NEITHER
    return Classification.EULERIAN if whole_ok else Classification.SEMI_EULERIAN


# -- flag vectors -------------------------------------------------------------

FLAG_F, FLAG_H, FLAG_F_MODIFIED = "flag-f", "flag-h", "flag-f-modified"


def all_subsets(n: int) -> list[tuple[int, ...]]:
    """Subsets of [n] = {1..n} ordered by size, then lexicographically."""
    return [s for k in range(n + 1) for s in combinations(range(1, n + 1), k)]


@dataclass(frozen=True)
class FlagVector:
    n: int
    values: dict[tuple[int, ...], int] = field(hash=False)
    kind: str = FLAG_F

    def __getitem__(self, subset: Iterable[int]) -> int:
        return self.values[tuple(sorted(subset))]

    def is_complete(self) -> bool:
        return set(self.values) == set(all_subsets(self.n))

    def to_poly(self) -> NcPoly:
        """Σ value_S u_S with u_S having ``b`` exactly at the positions in S."""
        terms = {}
        for s, v in self.values.items():
            terms["".join("b" if i in s else "a" for i in range(1, self.n + 1))] = v
        return NcPoly(terms, "ab")

    @classmethod
    def from_poly(cls, p: NcPoly, n: int, kind: str = FLAG_F) -> FlagVector:
        values = {s: 0 for s in all_subsets(n)}
        for word, coeff in p.items():
            if len(word) != n:
                raise ValueError(f"word {word!r} has length {len(word)}, expected {n}")
            values[tuple(i + 1 for i, x in enumerate(word) if x == "b")] = coeff
        return cls(n, values, kind)


def flag_f_vector(p: GradedPoset) -> FlagVector:
    """Chain counts f_S by path counting through the rank levels in S."""
    p.require_valid()
    n = p.n
    levels = p.levels()
    idx = p.index
    # products of level sizes bound every chain count, so int64 is exact below 2**62
    bound = math.prod(max(1, len(levels[r])) for r in range(1, n + 1))
    dtype = np.int64 if bound < 2**62 else object
    comp: dict[tuple[int, int], np.ndarray] = {}
    for r in range(1, n + 1):
        for r2 in range(r + 1, n + 1):
            m = np.zeros((len(levels[r]), len(levels[r2])), dtype=dtype)
            for a, x in enumerate(levels[r]):
                up = p._up[idx[x]]
                for b, y in enumerate(levels[r2]):
                    if up >> idx[y] & 1:
                        m[a, b] = 1
            comp[r, r2] = m
    values: dict[tuple[int, ...], int] = {(): 1}

    def grow(chain: tuple[int, ...], vec: np.ndarray) -> None:
        last = chain[-1]
        for r2 in range(last + 1, n + 1):
            nxt = vec @ comp[last, r2]
            values[chain + (r2,)] = int(nxt.sum())
            grow(chain + (r2,), nxt)

    for r in range(1, n + 1):
        vec = np.ones(len(levels[r]), dtype=dtype)
        values[(r,)] = len(levels[r])
        grow((r,), vec)
    return FlagVector(n, {s: values[s] for s in all_subsets(n)}, FLAG_F)


def flag_h_vector(f: FlagVector) -> FlagVector:
    if f.kind == FLAG_H:
        raise ValueError("input is already a flag h-vector")
    values = {}
    for s in all_subsets(f.n):
        values[s] = sum((-1) ** (len(s) - k) * f.values[t] for k in range(len(s) + 1) for t in combinations(s, k))
    return FlagVector(f.n, values, FLAG_H)


def flag_f_from_h(h: FlagVector) -> FlagVector:
    if h.kind != FLAG_H:
        raise ValueError("input is not a flag h-vector")
    values = {}
    for s in all_subsets(h.n):
        values[s] = sum(h.values[t] for k in range(len(s) + 1) for t in combinations(s, k))
    return FlagVector(h.n, values, FLAG_F)


def chain_polynomial(p: GradedPoset) -> NcPoly:
    return flag_f_vector(p).to_poly()


def ab_index(p: GradedPoset) -> NcPoly:
    """Ψ_P(a, b) = χ_P(a - b, b)."""
    return substitute(chain_polynomial(p), A - B, B)


def euler_characteristic(p: GradedPoset, f: FlagVector | None = None) -> int:
    f = f or flag_f_vector(p)
    return sum((-1) ** (j - 1) * f.values[(j,)] for j in range(1, f.n + 1))


def sphere_euler_characteristic(n: int) -> int:
    """χ of the (n-1)-sphere, 1 - (-1)^n."""
    return 1 - (-1) ** n


def modified_flag_f_vector(p: GradedPoset) -> FlagVector:
    f = flag_f_vector(p)
    values = dict(f.values)
    if f.n >= 1:
        values[(f.n,)] += sphere_euler_characteristic(f.n) - euler_characteristic(p, f)
    return FlagVector(f.n, values, FLAG_F_MODIFIED)


def modified_chain_polynomial(p: GradedPoset) -> NcPoly:
    return modified_flag_f_vector(p).to_poly()


@dataclass(frozen=True)
class GdsViolation:
    subset: tuple[int, ...]
    i: int
    k: int
    residual: int


def gds_relations(f: FlagVector) -> Iterator[tuple[tuple[int, ...], int, int, int, int]]:
    """Yield (S, i, k, lhs, rhs) for every generalized Dehn-Sommerville relation.

    The relations run over all S and all consecutive i < k in S ∪ {0, n+1}
    with k - i >= 2.
    """
    n = f.n
    for s in all_subsets(n):
        marks = (0,) + s + (n + 1,)
        for i, k in zip(marks, marks[1:]):
            if k - i < 2:
                continue
            lhs = sum((-1) ** (j - i - 1) * f.values[tuple(sorted(s + (j,)))] for j in range(i + 1, k))
            rhs = f.values[s] * (1 - (-1) ** (k - i - 1))
            yield s, i, k, lhs, rhs


def gds_check(f: FlagVector) -> list[GdsViolation]:
    if not f.is_complete():
        raise ValueError("flag vector is incomplete")
    return [GdsViolation(s, i, k, lhs - rhs) for s, i, k, lhs, rhs in gds_relations(f) if lhs != rhs]


def cd_index(p: GradedPoset) -> NcPoly:
    """cd-index of a semi-Eulerian poset via the modified chain polynomial."""
    if classify(p) is Classification.NEITHER:
        raise NotSemiEulerian("poset is neither Eulerian nor semi-Eulerian")
    psi = substitute(modified_chain_polynomial(p), A - B, B)
    try:
        return ab_to_cd(psi)
    except NotCdExpressible as exc:
        raise InternalInconsistency(f"semi-Eulerian poset without cd-index: {exc}") from exc


# -- simplicial posets ----------------------------------------------------------

def _is_boolean_interval(p: GradedPoset, x: str) -> bool:
    r = p.rank[x]
    below = p.interval(p.bottom, x)
    if len(below) != 2**r:
        return False
    atoms = [y for y in below if p.rank[y] == 1]
    if len(atoms) != r:
        return False
    atom_sets: dict[str, frozenset[str]] = {}
    for y in below:
        atom_sets[y] = frozenset(a for a in atoms if p.leq(a, y))
        if len(atom_sets[y]) != p.rank[y]:
            return False
    if len(set(atom_sets.values())) != len(below):
        return False
    # y <= z exactly when its atom set is contained in z's
    return all(p.leq(y, z) == (atom_sets[y] <= atom_sets[z]) for y in below for z in below)


def is_simplicial(p: GradedPoset) -> bool:
    p.require_valid()
    return all(_is_boolean_interval(p, x) for x in p.elements if x != p.top)


def f_vector_simplicial(p: GradedPoset) -> list[int]:
    """(f_{-1}, ..., f_{n-1}): f_{i-1} counts elements of rank i below 1̂."""
    levels = p.levels()
    return [len(levels[i]) for i in range(p.n + 1)]


def h_vector_from_f(f: Sequence[int]) -> list[int]:
    """h from Σ f_{i-1}(x-1)^{n-i} = Σ h_i x^{n-i}; ``f`` starts at f_{-1}."""
    n = len(f) - 1
    h = [0] * (n + 1)
    for i, fi in enumerate(f):
        # (x-1)^{n-i} contributes to x^{n-i-k} with sign (-1)^k
        for k in range(n - i + 1):
            h[i + k] += fi * math.comb(n - i, k) * (-1) ** k
    return h


def h_vector_simplicial(p: GradedPoset) -> list[int]:
    return h_vector_from_f(f_vector_simplicial(p))


# -- file format ------------------------------------------------------------------

def format_poset(p: GradedPoset) -> str:
    lines = ["poset"]
    lines += [f"element {x} {p.rank[x]}" for x in p.elements]
    lines += [f"cover {lo} {hi}" for lo, hi in p.covers]
    return "\n".join(lines) + "\n"


def parse_poset(text: str) -> GradedPoset:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0] != "poset":
        raise PosetParseError("first non-comment line must be 'poset'")
    elements: list[str] = []
    rank: dict[str, int] = {}
    covers: list[tuple[str, str]] = []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "element" and len(parts) == 3:
            if covers:
                raise PosetParseError("element lines must precede cover lines")
            try:
                rank[parts[1]] = int(parts[2])
            except ValueError:
                raise PosetParseError(f"bad rank in line {ln!r}") from None
            elements.append(parts[1])
        elif parts[0] == "cover" and len(parts) == 3:
            covers.append((parts[1], parts[2]))
        else:
            raise PosetParseError(f"unrecognized line {ln!r}")
    return GradedPoset(elements, rank, covers)


def boolean_lattice(k: int) -> GradedPoset:
    """The face lattice of a (k-1)-simplex; its top is the full set."""
    ids = {s: "{" + ",".join(map(str, s)) + "}" for r in range(k + 1) for s in combinations(range(1, k + 1), r)}
    covers = [(ids[s], ids[t]) for t in ids if t for s in combinations(t, len(t) - 1)]
    return GradedPoset(list(ids.values()), {v: len(s) for s, v in ids.items()}, covers)
