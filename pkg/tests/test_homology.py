import pytest
from hypothesis import given
from hypothesis import strategies as st
from itertools import combinations

from cdindex.corpus import rp2_6, s1_times_s2, torus7, wedge_of_spheres, wedge_of_triangles
from cdindex.homology import (
    RATIONALS,
    BettiVector,
    FieldChoice,
    betti_numbers,
    is_buchsbaum,
    is_homology_manifold,
    link_defects,
    matrix_rank,
    novik_swartz_bounds,
    prime_field,
    reduced_euler_from_f,
)
from cdindex.simplicial import SimplicialComplex, boundary_of_simplex, simplex

from oracles import brute_betti, dense_rank

GF2 = prime_field(2)


@st.composite
def complexes(draw):
    nv = draw(st.integers(1, 6))
    faces = [c for k in range(1, min(4, nv) + 1) for c in combinations(range(nv), k)]
    return SimplicialComplex(draw(st.lists(st.sampled_from(faces), min_size=1, max_size=10)))


@st.composite
def sparse_matrices(draw):
    ncols = draw(st.integers(1, 7))
    rows = draw(st.lists(st.lists(st.integers(-3, 3), min_size=ncols, max_size=ncols), max_size=7))
    return rows, ncols


def to_sparse(rows):
    return [{c: v for c, v in enumerate(r) if v} for r in rows]


def test_field_names():
    assert str(RATIONALS) == "Q"
    assert str(GF2) == "GF(2)"


def test_field_rejects_composite():
    with pytest.raises(ValueError):
        FieldChoice(4)


def test_betti_vector_indexing():
    b = BettiVector((0, 0, 2, 1))
    assert b[-1] == 0 and b[1] == 2 and b[2] == 1 and b[7] == 0
    assert b.top == 2 and b.from_zero() == (0, 2, 1)


@given(sparse_matrices(), st.sampled_from([0, 2, 3, 5]))
def test_rank_matches_dense_oracle(mat, p):
    rows, ncols = mat
    assert matrix_rank(to_sparse(rows), FieldChoice(p)) == dense_rank(rows, ncols, p)


def test_rank_difference_between_fields():
    rows = [{0: 2}]
    assert matrix_rank(rows) == 1
    assert matrix_rank(rows, GF2) == 0


def test_torus_betti():
    assert betti_numbers(torus7()).values == (0, 0, 2, 1)


def test_rp2_depends_on_field():
    assert betti_numbers(rp2_6()).values == (0, 0, 0, 0)
    assert betti_numbers(rp2_6(), GF2).values == (0, 0, 1, 1)


def test_s1_times_s2_betti():
    assert betti_numbers(s1_times_s2()).values == (0, 0, 1, 1, 1)


def test_sphere_and_empty_face():
    assert betti_numbers(boundary_of_simplex(4)).values == (0, 0, 0, 0, 1)
    assert betti_numbers(SimplicialComplex([()])).values == (1,)


@given(complexes(), st.sampled_from([0, 2, 3]))
def test_betti_matches_dense_oracle(cx, p):
    assert betti_numbers(cx, FieldChoice(p)).values == brute_betti(cx, p)


@given(complexes(), st.sampled_from([0, 2]))
def test_euler_poincare(cx, p):
    b = betti_numbers(cx, FieldChoice(p))
    assert b.reduced_euler_characteristic() == cx.reduced_euler_characteristic()
    assert reduced_euler_from_f(cx.f_vector()) == cx.reduced_euler_characteristic()


@given(complexes())
def test_manifold_implies_buchsbaum(cx):
    if is_homology_manifold(cx):
        assert is_buchsbaum(cx)


@pytest.mark.parametrize("make", [torus7, rp2_6, s1_times_s2, lambda: boundary_of_simplex(4)])
def test_corpus_manifolds(make):
    cx = make()
    assert is_buchsbaum(cx) and is_homology_manifold(cx)


def test_rp2_is_manifold_over_gf2_too():
    assert is_homology_manifold(rp2_6(), GF2)


@pytest.mark.parametrize("make", [wedge_of_triangles, wedge_of_spheres])
def test_wedges_fail_at_the_wedge_point(make):
    cx = make()
    assert not is_buchsbaum(cx) and not is_homology_manifold(cx)
    faces = [f for f, _ in link_defects(cx)]
    assert all(len(f) == 1 for f in faces)


def test_ball_is_buchsbaum_not_manifold():
    ball = simplex((1, 2, 3))
    assert is_buchsbaum(ball)
    assert not is_homology_manifold(ball)


def test_nonpure_is_not_buchsbaum():
    assert not is_buchsbaum(SimplicialComplex([(1, 2, 3), (3, 4)]))


def test_novik_swartz_torus():
    # β̃ = (0, 2, 1) from degree 0; the top bound 0 - 2 + 1 equals h_3 = -1
    b = betti_numbers(torus7())
    assert novik_swartz_bounds(3, b) == [0, 0, 3 * 2, -1]


def test_novik_swartz_sphere():
    # only the top bound sees β̃_3 = 1, matching h_4 = 1
    assert novik_swartz_bounds(4, betti_numbers(boundary_of_simplex(4))) == [0, 0, 0, 0, 1]
