"""Brute-force reference computations, kept independent of the library internals."""

from __future__ import annotations

import itertools
from fractions import Fraction

from cdindex.ncpoly import NcPoly, cd_to_ab, words_of_degree


def leq_closure(elements, covers):
    up = {x: {x} for x in elements}
    changed = True
    while changed:
        changed = False
        for lo, hi in covers:
            new = up[hi] - up[lo]
            if new:
                up[lo] |= new
                changed = True
    return up


def chains_by_rank_set(p):
    """Enumerate every chain of the proper part and tally by rank set."""
    up = leq_closure(p.elements, p.covers)
    inner = [x for x in p.elements if x not in (p.bottom, p.top)]
    counts = {(): 1}

    def extend(last, ranks):
        for y in inner:
            if y != last and y in up[last]:
                key = ranks + (p.rank[y],)
                counts[key] = counts.get(key, 0) + 1
                extend(y, key)

    for x in inner:
        counts[(p.rank[x],)] = counts.get((p.rank[x],), 0) + 1
        extend(x, (p.rank[x],))
    return counts


def hall_mobius(p, s, t):
    """μ(s,t) = Σ_k (-1)^k · #(chains s = x_0 < ... < x_k = t)."""
    if s == t:
        return 1
    up = leq_closure(p.elements, p.covers)

    def signed(x):
        # signed count of strict chains from x up to t
        if x == t:
            return 0
        total = -1 if t in up[x] else 0
        for y in up[x]:
            if y != x and y != t and t in up[y]:
                total -= signed(y)
        return total

    return signed(s)


def solve_cd_linear(psi: NcPoly, n: int) -> NcPoly | None:
    """Find the cd-polynomial expanding to ``psi`` by exact Gaussian elimination."""
    cols = words_of_degree(n, "cd")
    rows = ["".join(w) for w in itertools.product("ab", repeat=n)]
    expansions = [cd_to_ab(NcPoly.monomial(w, "cd")) for w in cols]
    mat = [[Fraction(e[r]) for e in expansions] + [Fraction(psi[r])] for r in rows]
    pivots = []
    row = 0
    for col in range(len(cols)):
        pr = next((i for i in range(row, len(mat)) if mat[i][col] != 0), None)
        if pr is None:
            continue
        mat[row], mat[pr] = mat[pr], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [v * inv for v in mat[row]]
        for i in range(len(mat)):
            if i != row and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[row])]
        pivots.append(col)
        row += 1
    if any(all(v == 0 for v in r[:-1]) and r[-1] != 0 for r in mat):
        return None
    sol = {cols[c]: mat[i][-1] for i, c in enumerate(pivots)}
    if any(v.denominator != 1 for v in sol.values()):
        return None
    return NcPoly({w: int(v) for w, v in sol.items()}, "cd")


def dense_rank(rows, ncols, p=0):
    """Rank of an integer matrix over ℚ (p=0) or GF(p), dense elimination."""
    if p:
        mat = [[v % p for v in r] for r in rows]
    else:
        mat = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    for col in range(ncols):
        pr = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if pr is None:
            continue
        mat[rank], mat[pr] = mat[pr], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                if p:
                    f = mat[i][col] * pow(mat[rank][col], -1, p) % p
                    mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[rank])]
                else:
                    f = mat[i][col] / mat[rank][col]
                    mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def brute_betti(cx, p=0):
    """Reduced Betti numbers from dense boundary matrices."""
    faces = sorted(cx.faces, key=lambda f: (len(f), sorted(f)))
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    top = max(by_dim)
    ranks = {}
    for k in range(0, top + 1):
        lower = {f: i for i, f in enumerate(by_dim[k - 1])}
        rows = []
        for f in by_dim[k]:
            verts = sorted(f)
            row = [0] * len(lower)
            for pos, v in enumerate(verts):
                row[lower[f - {v}]] = (-1) ** pos
            rows.append(row)
        ranks[k] = dense_rank(rows, len(lower), p)
    return tuple(len(by_dim[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0) for k in range(-1, top + 1))


def andre_by_definition(perm):
    """Literal two-condition test, written independently (0-based internally)."""
    n = len(perm)
    if any(perm[i] > perm[i + 1] > perm[i + 2] for i in range(n - 2)):
        return False
    for j in range(2, n + 1):
        for jp in range(j + 1, n + 1):
            quad = [perm[j - 2], perm[j - 1], perm[jp - 2], perm[jp - 1]]
            if perm[j - 2] == max(quad) and perm[jp - 1] == min(quad):
                if not any(perm[k - 1] < perm[jp - 1] for k in range(j + 1, jp)):
                    return False
    return True


def latex_cd(text: str) -> NcPoly:
    """Read a cd-polynomial typed as in LaTeX, e.g. ``c^4 - 2dc^2 + 4d^2``."""
    import re

    text = re.sub(r"\\underline\{([^}]*)\}", r"\1", text).replace(" ", "")
    terms = {}
    for sign, coeff, mono in re.findall(r"([+-]?)(\d*)((?:[cd](?:\^\d+)?)+)", text):
        word = re.sub(r"([cd])\^(\d+)", lambda m: m.group(1) * int(m.group(2)), mono)
        value = int(coeff or 1) * (-1 if sign == "-" else 1)
        terms[word] = terms.get(word, 0) + value
    return NcPoly(terms, "cd")
