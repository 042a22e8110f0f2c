"""Abstract simplicial complexes, their face posets, and semisuspensions of balls."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .poset import GradedPoset, sphere_euler_characteristic


class ComplexParseError(ValueError):
    pass


class FaceNotInComplex(ValueError):
    pass


class NotPure(ValueError):
    pass


class InvalidBall(ValueError):
    pass


def label_key(label: str) -> tuple:
    """Sort numeric labels numerically and put them before other labels."""
    return (0, int(label), "") if re.fullmatch(r"-?\d+", label) else (1, 0, label)


def _face_id(face: Iterable[str]) -> str:
    return "{" + ",".join(sorted(face, key=label_key)) + "}"


class SimplicialComplex:
    """A complex given by its facets.

    Faces are frozensets of string labels.  ``SimplicialComplex([])`` is the
    void complex and ``SimplicialComplex([()])`` is {∅}.
    """

    def __init__(self, facets: Iterable[Iterable]):
        sets = {frozenset(str(v) for v in f) for f in facets}
        maximal = [f for f in sets if not any(f < g for g in sets)]
        self.facets: tuple[frozenset[str], ...] = tuple(sorted(maximal, key=_facet_key))
        self.vertices: tuple[str, ...] = tuple(sorted({v for f in self.facets for v in f}, key=label_key))

    def __repr__(self) -> str:
        return f"SimplicialComplex({[sorted(f, key=label_key) for f in self.facets]})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimplicialComplex) and set(self.facets) == set(other.facets)

    def __hash__(self) -> int:
        return hash(frozenset(self.facets))

    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @cached_property
    def faces(self) -> frozenset[frozenset[str]]:
        out: set[frozenset[str]] = set()
        for f in self.facets:
            items = sorted(f)
            for k in range(len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, k))
        return frozenset(out)

    def faces_of_dim(self, d: int) -> list[frozenset[str]]:
        return sorted((f for f in self.faces if len(f) == d + 1), key=_facet_key)

    def __contains__(self, face: Iterable) -> bool:
        return frozenset(str(v) for v in face) in self.faces

    def f_vector(self) -> list[int]:
        """(f_0, ..., f_dim); the empty face is not counted."""
        counts = [0] * (self.dim + 1)
        for f in self.faces:
            if f:
                counts[len(f) - 1] += 1
        return counts

    def reduced_euler_characteristic(self) -> int:
        if self.is_void():
            return 0
        return sum((-1) ** (len(f) - 1) for f in self.faces)

    def euler_characteristic(self) -> int:
        return self.reduced_euler_characteristic() + (0 if self.is_void() else 1)


def _facet_key(face: frozenset[str]) -> tuple:
    return (len(face), sorted((label_key(v) for v in face)))


def parse_complex(text: str) -> SimplicialComplex:
    facets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        labels = line.split()
        if len(set(labels)) != len(labels):
            raise ComplexParseError(f"line {lineno}: duplicate vertex in facet {line!r}")
        facets.append(labels)
    if not facets:
        raise ComplexParseError("no facets given")
    return SimplicialComplex(facets)


def format_complex(cx: SimplicialComplex) -> str:
    return "".join(" ".join(sorted(f, key=label_key)) + "\n" for f in cx.facets)


def face_poset(cx: SimplicialComplex) -> GradedPoset:
    """Faces ordered by inclusion, with 0̂ = ∅ and a new top element ``top``."""
    if cx.is_void():
        raise ValueError("the void complex has no face poset")
    faces = sorted(cx.faces, key=_facet_key)
    ids = {f: _face_id(f) for f in faces}
    rank = {ids[f]: len(f) for f in faces}
    covers = [(ids[f - {v}], ids[f]) for f in faces for v in sorted(f, key=label_key)]
    top_rank = cx.dim + 2
    rank["top"] = top_rank
    covers += [(ids[f], "top") for f in cx.facets]
    # a non-pure complex yields a non-graded poset; validate() will say so
    return GradedPoset([ids[f] for f in faces] + ["top"], rank, covers)


def link(cx: SimplicialComplex, face: Iterable) -> SimplicialComplex:
    face = frozenset(str(v) for v in face)
    if face not in cx.faces:
        raise FaceNotInComplex(f"{_face_id(face)} is not a face")
    return SimplicialComplex(f - face for f in cx.facets if face <= f)


def order_complex(p: GradedPoset) -> SimplicialComplex:
    """Chains of the proper part P̄ = P minus {0̂, 1̂}; vertices are element ids."""
    p.require_valid()
    inner = set(p.elements) - {p.bottom, p.top}
    ups = {x: [y for y in p.upper_covers(x) if y in inner] for x in inner}
    chains: list[tuple[str, ...]] = []

    def walk(chain: tuple[str, ...]) -> None:
        nxt = ups[chain[-1]]
        if not nxt:
            chains.append(chain)
        for y in nxt:
            walk(chain + (y,))

    # maximal chains of a graded poset start at the atoms
    for atom in p.upper_covers(p.bottom):
        if atom in inner:
            walk((atom,))
    if not chains:
        return SimplicialComplex([()])
    return SimplicialComplex(chains)


def boundary_subcomplex(ball: SimplicialComplex) -> SimplicialComplex:
    """The complex generated by codimension-one faces lying in exactly one facet."""
    if not ball.is_pure():
        raise NotPure("complex is not pure")
    d = ball.dim
    ridges = [f for f in ball.faces if len(f) == d]
    free = [r for r in ridges if sum(1 for f in ball.facets if r <= f) == 1]
    return SimplicialComplex(free)


@dataclass(frozen=True)
class CwBallWithBoundary:
    ball: SimplicialComplex
    boundary: SimplicialComplex

    @classmethod
    def of(cls, ball: SimplicialComplex) -> CwBallWithBoundary:
        return cls(ball, boundary_subcomplex(ball))

    def check(self) -> None:
        if self.ball.is_void() or not self.ball.is_pure():
            raise InvalidBall("ball must be a nonempty pure complex")
        if self.boundary != boundary_subcomplex(self.ball):
            raise InvalidBall("boundary does not match the free ridges of the ball")


def semisuspension_poset(b: CwBallWithBoundary) -> GradedPoset:
    """Face poset of the ball with a new cell ``tau`` glued along the boundary.

    ``tau`` has the rank of a facet and covers the boundary facets (or 0̂
    when the boundary is {∅}, i.e. the ball is a point); ``top`` covers tau
    and every facet of the ball.
    """
    b.check()
    base = face_poset(b.ball)
    rank = dict(base.rank)
    covers = [c for c in base.covers]
    r_tau = b.ball.dim + 1
    rank["tau"] = r_tau
    bfacets = [f for f in b.boundary.facets]
    if bfacets == [frozenset()] or b.boundary.is_void():
        covers.append(("{}", "tau"))
    else:
        covers += [(_face_id(f), "tau") for f in bfacets]
    covers.append(("tau", "top"))
    elements = [x for x in base.elements if x != "top"] + ["tau", "top"]
    return GradedPoset(elements, rank, covers)


def boundary_of_simplex(n: int) -> SimplicialComplex:
    """∂Δ^n on vertices 0..n: the facets σ_j = [0..n] minus j."""
    if n < 1:
        raise ValueError("need n >= 1")
    verts = [str(v) for v in range(n + 1)]
    return SimplicialComplex([v for v in verts if v != str(j)] for j in range(n + 1))


def gamma_complex(n: int, i: int) -> SimplicialComplex:
    """The ball generated by σ_0, ..., σ_i inside ∂Δ^n."""
    if not 0 <= i <= n - 1:
        raise ValueError(f"need 0 <= i <= n-1, got n={n}, i={i}")
    verts = [str(v) for v in range(n + 1)]
    return SimplicialComplex([v for v in verts if v != str(j)] for j in range(i + 1))


def lambda_poset(n: int, i: int) -> GradedPoset:
    """Face poset of the semisuspension of ``gamma_complex(n, i)``; rank n + 1."""
    return semisuspension_poset(CwBallWithBoundary.of(gamma_complex(n, i)))


def simplex(vertices: Sequence) -> SimplicialComplex:
    return SimplicialComplex([vertices])
