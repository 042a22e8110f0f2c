"""Small named complexes used as examples and test inputs."""

from __future__ import annotations

from itertools import combinations

from .simplicial import SimplicialComplex, boundary_of_simplex


def torus7() -> SimplicialComplex:
    """The 7-vertex triangulation of the torus."""
    facets = []
    for i in range(7):
        facets.append([i, (i + 1) % 7, (i + 3) % 7])
        facets.append([i, (i + 2) % 7, (i + 3) % 7])
    return SimplicialComplex(facets)


def rp2_6() -> SimplicialComplex:
    """The 6-vertex real projective plane."""
    return SimplicialComplex(
        [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6), (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6)]
    )


def _staircase(xs: list, ys: list) -> list[list[tuple]]:
    """Staircase triangulation of the product of two ordered simplices."""
    out = []
    p, q = len(xs) - 1, len(ys) - 1
    for moves in combinations(range(p + q), p):
        i = j = 0
        cell = [(xs[0], ys[0])]
        for step in range(p + q):
            if step in moves:
                i += 1
            else:
                j += 1
            cell.append((xs[i], ys[j]))
        out.append(cell)
    return out


def product(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    """Triangulated product; both vertex sets are ordered by their labels."""
    from .simplicial import label_key

    facets = []
    for f in k1.facets:
        for g in k2.facets:
            for cell in _staircase(sorted(f, key=label_key), sorted(g, key=label_key)):
                facets.append([f"{a}.{b}" for a, b in cell])
    return SimplicialComplex(facets)


def s1_times_s2() -> SimplicialComplex:
    """S¹ × S² as the product of a triangle boundary and ∂Δ³; 36 tetrahedra."""
    return product(boundary_of_simplex(2), boundary_of_simplex(3))


def wedge_of_triangles() -> SimplicialComplex:
    """Two triangles sharing one vertex."""
    return SimplicialComplex([(1, 2, 3), (1, 4, 5)])


def wedge_of_spheres() -> SimplicialComplex:
    """Two tetrahedron boundaries identified at vertex 0."""
    a = [[v for v in (0, 1, 2, 3) if v != j] for j in range(4)]
    b = [[v for v in (0, 4, 5, 6) if v != j] for j in (0, 4, 5, 6)]
    return SimplicialComplex(a + b)


NAMED = {
    "torus7": torus7,
    "rp2_6": rp2_6,
    "s1xs2": s1_times_s2,
}
