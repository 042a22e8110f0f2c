"""The Φ̌ and P polynomial families, the h-vector formula for the cd-index, and verifiers.

Verifiers return :class:`Report` objects.  Asserted checks decide
``Report.passed``; report-only items land in ``observations`` and never fail.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .andre import DEFAULT_LIMIT, phi_row_via_andre
from .homology import RATIONALS, BettiVector, FieldChoice, betti_numbers, is_buchsbaum
from .ncpoly import A, B, C, D, NcPoly, cd_to_ab, d_count, derivation_g, evaluate_commutative, substitute, words_of_degree
from .poset import (
    Classification,
    FlagVector,
    GradedPoset,
    all_subsets,
    cd_index,
    classify,
    flag_f_vector,
    gds_check,
    h_vector_from_f,
    h_vector_simplicial,
    is_simplicial,
    modified_flag_f_vector,
)
from .simplicial import boundary_of_simplex, boundary_subcomplex, face_poset, gamma_complex, lambda_poset, order_complex

POSET_ROUTE_MAX = 8
FROM_POSETS, FROM_ANDRE = "from-posets", "from-andre"


class NotApplicable(ValueError):
    pass


class NonPalindromicH(ValueError):
    pass


# -- reports -----------------------------------------------------------------------

@dataclass
class Check:
    where: str
    lhs: int
    rhs: int
    residual: int
    passed: bool

    def to_json_obj(self) -> dict:
        return {"where": self.where, "lhs": str(self.lhs), "rhs": str(self.rhs), "residual": str(self.residual), "pass": self.passed}


@dataclass
class Report:
    suite: str
    n: int | None
    checks: list[Check] = field(default_factory=list)
    observations: list[Check] = field(default_factory=list)

    def equal(self, where: str, lhs: int, rhs: int) -> None:
        self.checks.append(Check(where, lhs, rhs, lhs - rhs, lhs == rhs))

    def at_least(self, where: str, lhs: int, rhs: int, asserted: bool = True) -> None:
        (self.checks if asserted else self.observations).append(Check(where, lhs, rhs, lhs - rhs, lhs >= rhs))

    def extend(self, other: Report) -> None:
        self.checks += other.checks
        self.observations += other.observations

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "checks": [c.to_json_obj() for c in self.checks],
            "observations": [c.to_json_obj() for c in self.observations],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        head = f"{self.suite} n={self.n}" if self.n is not None else self.suite
        extra = f", {len(self.observations)} observations" if self.observations else ""
        return f"{status} {head}: {len(self.checks) - len(self.failures)}/{len(self.checks)} checks{extra}"


# -- Φ̌ tables ------------------------------------------------------------------------

@dataclass(frozen=True)
class PhiTable:
    """Φ̌^n_0, ..., Φ̌^n_n (the last one is zero)."""

    n: int
    entries: tuple[NcPoly, ...]
    provenance: str

    def __getitem__(self, i: int) -> NcPoly:
        return self.entries[i]


@lru_cache(maxsize=None)
def phi_table(n: int, source: str = "posets") -> PhiTable:
    if n < 1:
        raise ValueError("need n >= 1")
    if source == "posets":
        rows, prev = [], None
        for i in range(n):
            cur = cd_index(lambda_poset(n, i))
            rows.append(cur if prev is None else cur - prev)
            prev = cur
        provenance = FROM_POSETS
    elif source == "andre":
        rows = phi_row_via_andre(n, limit=max(n, DEFAULT_LIMIT))
        provenance = FROM_ANDRE
    else:
        raise ValueError(f"unknown source {source!r}")
    return PhiTable(n, tuple(rows) + (NcPoly.zero("cd"),), provenance)


def phi(n: int) -> PhiTable:
    """The table by the poset route when affordable, else by enumeration."""
    return phi_table(n, "posets" if n <= POSET_ROUTE_MAX else "andre")


def phi_check(n: int, i: int) -> NcPoly:
    return phi(n)[i]


def cd_index_from_h(h: Sequence[int]) -> NcPoly:
    n = len(h) - 1
    table = phi(n)
    total = NcPoly.zero("cd")
    for i in range(n):
        total = total + table[i] * h[i]
    return total


def symbolic_h_table(n: int) -> dict[str, tuple[int, ...]]:
    """word -> multipliers of (h_0, ..., h_{n-1}) in the cd-index."""
    table = phi(n)
    out = {}
    for w in words_of_degree(n, "cd"):
        coeffs = tuple(table[i][w] for i in range(n))
        if any(coeffs):
            out[w] = coeffs
    return out


def format_linear_form(coeffs: Sequence[int], var: str = "h") -> str:
    parts = []
    for i, a in enumerate(coeffs):
        if a:
            parts.append(("" if a == 1 else "-" if a == -1 else str(a)) + f"{var}{i}")
    return " + ".join(parts).replace("+ -", "- ") or "0"


def flag_f_of_cd(q: NcPoly, n: int) -> FlagVector:
    """The flag f-vector whose cd-index would be ``q``."""
    chi = substitute(cd_to_ab(q), A + B, B) if q else NcPoly.zero("ab")
    return FlagVector.from_poly(chi, n)


# -- P polynomials --------------------------------------------------------------------

@dataclass(frozen=True)
class PTable:
    n: int
    entries: tuple[NcPoly, ...]

    def __getitem__(self, j: int) -> NcPoly:
        return self.entries[j]


@lru_cache(maxsize=None)
def p_table(n: int) -> PTable:
    table = phi(n)
    entries = []
    for j in range(n):
        total = NcPoly.zero("cd")
        for i in range(j, n):
            total = total + table[i] * ((-1) ** (i - j) * math.comb(n, i))
        entries.append(total)
    return PTable(n, tuple(entries))


def closed_form_P0(n: int) -> NcPoly:
    base = C * C - D * 2
    return base ** (n // 2) * (C if n % 2 else NcPoly.constant(1, "cd"))


def p_rewriting(n: int, j: int) -> NcPoly:
    """P^n_j rebuilt from consecutive Φ̌ differences."""
    t = phi(n)
    total = NcPoly.zero("cd")
    for i in range(j, n):
        total = total + (t[i] - t[i + 1]) * ((-1) ** (i + j) * math.comb(n - 1, i))
    return total + t[j] * (math.comb(n - 1, j - 1) if j >= 1 else 0)


# -- identity verifiers ------------------------------------------------------------------

def _multinomial(s: Sequence[int]) -> int:
    out, prev = 1, 0
    for x in s:
        out *= math.comb(x, x - prev)
        prev = x
    # multinomial(s_k; s_1, s_2 - s_1, ...) as a product of binomials
    return out


def verify_identity_hard(n: int) -> Report:
    if n % 2 == 0:
        raise ValueError("the identity is stated for odd n")
    rep = Report("identityhard", n)
    table = phi(n)
    flags = {i: flag_f_of_cd(table[i], n) for i in range(n // 2 + 1, n)}
    for s in all_subsets(n):
        lhs = sum((-1) ** i * math.comb(n, i) * flags[i].values[s] for i in flags)
        sk = s[-1] if s else 0
        alt = sum((-1) ** j * math.comb(sk, j) for j in range(n // 2 + 1, sk + 1))
        rhs = math.comb(n, sk) * _multinomial(s) * alt + (1 if s == (n,) else 0)
        rep.equal(f"S={set(s) or '{}'}", lhs, rhs)
    return rep


def verify_coefficient_identities(n: int) -> Report:
    if n < 2:
        raise ValueError("need n >= 2")
    rep = Report("coefficient-identities", n)
    big, small = phi(n), phi(n - 1)
    for i in range(n):
        diff = big[i] - big[i + 1]
        for w in words_of_degree(n - 1, "cd"):
            rep.equal(f"i={i} [{w}c]", diff[w + "c"], small[i][w])
        for w in words_of_degree(n - 2, "cd"):
            rep.equal(f"i={i} [{w}d]", diff[w + "d"], small[n - 1 - i][w + "c"] - small[i][w + "c"])
    return rep


def verify_recurrences(n: int) -> Report:
    if n < 5:
        raise ValueError("the recurrences are stated for n >= 5")
    rep = Report("recurrence", n)
    big, p, q = phi(n), p_table(n), p_table(n - 1)
    for j in range(2, n - 1):
        binom = math.comb(n - 1, j - 1)
        for w in words_of_degree(n - 1, "cd"):
            rep.equal(f"j={j} [{w}c]", p[j][w + "c"], q[j][w] + binom * big[j][w + "c"])
        for w in words_of_degree(n - 2, "cd"):
            wc = w + "c"
            rhs = (-1) ** (n + j + 1) * q[0][wc] - q[j][wc] + q[n - j][wc] + binom * big[j][w + "d"]
            rep.equal(f"j={j} [{w}d]", p[j][w + "d"], rhs)
    return rep


def verify_rewriting(n: int) -> Report:
    rep = Report("rewriting", n)
    p = p_table(n)
    for j in range(n):
        other = p_rewriting(n, j)
        for w in words_of_degree(n, "cd"):
            rep.equal(f"j={j} [{w}]", p[j][w], other[w])
    return rep


def _even_c_runs(word: str) -> bool:
    """True when ``word`` factors into the blocks ``cc`` and ``d``."""
    return all(len(run) % 2 == 0 for run in word.split("d"))


def verify_lemma_pn2(n: int) -> Report:
    if n < 5:
        raise ValueError("stated for n >= 5")
    rep = Report("pn2", n)
    p, big, small = p_table(n), phi(n), phi(n - 1)
    for w in words_of_degree(n - 2, "cd"):
        m = d_count(w)
        rhs = (n - 1) * big[1][w + "d"] + small[0][w + "c"]
        if n % 2 == 0 and _even_c_runs(w):
            rhs += 2 * (-1) ** (m + 1) * 2**m
        rep.equal(f"[{w}d]", p[2][w + "d"], rhs)
        rep.at_least(f"[{w}d] lower bound", p[2][w + "d"], (n - 1) * big[1][w + "d"] + small[0][w + "c"] - 2 ** (m + 1))
    return rep


def verify_derivation(n: int) -> Report:
    """G(Φ̌^n_j) against Φ̌^{n+1}_{j+1} from the enumeration route."""
    rep = Report("derivation", n)
    lower = phi(n)
    upper = phi_table(n + 1, "andre")
    for j in range(n):
        g = derivation_g(lower[j])
        for w in words_of_degree(n + 1, "cd"):
            rep.equal(f"j={j} [{w}]", g[w], upper[j + 1][w])
    return rep


def verify_phi_routes(n: int) -> Report:
    """Poset route against enumeration route, plus nonnegativity and degree."""
    rep = Report("andre", n)
    a, b = phi_table(n, "posets"), phi_table(n, "andre")
    for i in range(n + 1):
        for w in words_of_degree(n, "cd"):
            rep.equal(f"i={i} [{w}]", a[i][w], b[i][w])
            rep.at_least(f"i={i} [{w}] >= 0", a[i][w], 0)
        rep.equal(f"i={i} off-degree terms", sum(1 for w in a[i].words() if len(w) + d_count(w) != n), 0)
    return rep


def verify_gds(n: int) -> Report:
    """Dehn-Sommerville relations for the simplex boundary and the Λ posets."""
    rep = Report("gds", n)
    rep.equal("boundary of simplex: violations", len(gds_check(flag_f_vector(face_poset(boundary_of_simplex(n))))), 0)
    for i in range(n):
        lam = lambda_poset(n, i)
        rep.equal(f"Lambda_{i}: Eulerian", int(classify(lam) is Classification.EULERIAN), 1)
        rep.equal(f"Lambda_{i}: violations", len(gds_check(flag_f_vector(lam))), 0)
    return rep


def _rank_counts(p: GradedPoset) -> list[int]:
    return [len(level) for level in p.levels()]


def verify_semisuspension_counts(n: int) -> Report:
    """Chain counts of the Λ posets through face numbers, and shelling increments."""
    rep = Report("semisuspension", n)
    prev = None
    for i in range(n):
        lam = lambda_poset(n, i)
        f = flag_f_vector(lam)
        faces = _rank_counts(lam)  # faces[s] = f_{s-1}(Λ), tau included at rank n
        bd = [len(boundary_subcomplex(gamma_complex(n, i)).faces_of_dim(s - 1)) for s in range(n + 1)]
        for s in all_subsets(n):
            if not s:
                expected = 1
            elif s[-1] < n:
                expected = _multinomial(s) * faces[s[-1]]
            elif s == (n,):
                expected = faces[n]
            else:
                expected = _multinomial(s) * (faces[n] - 1) + _multinomial(s[:-1]) * bd[s[-2]]
            rep.equal(f"i={i} f_S S={set(s) or '{}'}", f.values[s], expected)
        if prev is not None:
            for sk in range(1, n + 1):
                expected = math.comb(n - i, sk - i) if sk >= i else 0
                rep.equal(f"i={i} new faces at rank {sk}", faces[sk] - prev[sk], expected)
        prev = faces
    return rep


def verify_cdvsh(posets: Iterable[tuple[str, GradedPoset]]) -> Report:
    rep = Report("cdvsh", None)
    for name, p in posets:
        phi_p = cd_index(p)
        via_h = cd_index_from_h(h_vector_simplicial(p))
        for w in words_of_degree(p.n, "cd"):
            rep.equal(f"{name} [{w}]", phi_p[w], via_h[w])
        rep.equal(f"{name} GDS of modified flag f", len(gds_check(modified_flag_f_vector(p))), 0)
    return rep


# -- inequality suites ----------------------------------------------------------------------

def andre_bound_report(n: int) -> Report:
    rep = Report("andre-bounds", n)
    t = phi(n)
    if n >= 4:
        for w in words_of_degree(n - 1, "cd"):
            rep.at_least(f"(1) [{w}c]Phi^n_0", t[0][w + "c"], 2 ** d_count(w))
    if n >= 5:
        for j in range(1, n):
            for w in words_of_degree(n - 2, "cd"):
                rep.at_least(f"(2) j={j} [{w}d]", t[j][w + "d"], 2 ** d_count(w))
    return rep


def p_positivity_report(n: int) -> Report:
    """Lower bounds on P^n_j; the wc bound at j = n-1 is only observed."""
    rep = Report("ppos", n)
    if n < 3:
        return rep
    p = p_table(n)
    for j in range(2, n):
        binom = math.comb(n - 1, j - 1)
        for w in words_of_degree(n - 1, "cd"):
            rep.at_least(f"(1) j={j} [{w}c]", p[j][w + "c"], binom * 2 ** d_count(w), asserted=j <= n - 2)
        for w in words_of_degree(n - 2, "cd"):
            rep.at_least(f"(2) j={j} [{w}d]", p[j][w + "d"], (binom - 1) * 2 ** d_count(w))
        for w in words_of_degree(n, "cd"):
            rep.at_least(f"j={j} [{w}] >= 0", p[j][w], 0)
    return rep


def closed_form_report(n: int) -> Report:
    rep = Report("closed-form-P0", n)
    got, want = p_table(n)[0], closed_form_P0(n)
    for w in words_of_degree(n, "cd"):
        rep.equal(f"[{w}]", got[w], want[w])
    return rep


def bound_suites(n: int) -> Report:
    rep = Report("bounds", n)
    rep.extend(andre_bound_report(n))
    rep.extend(p_positivity_report(n))
    return rep


@dataclass
class PosetTopology:
    """Betti numbers of the order complex of P̄ and its Buchsbaum status."""

    betti: BettiVector
    buchsbaum: bool


def poset_topology(p: GradedPoset, fld: FieldChoice = RATIONALS) -> PosetTopology:
    cx = order_complex(p)
    return PosetTopology(betti_numbers(cx, fld), is_buchsbaum(cx, fld))


def buchsbaum_cd_bounds(p: GradedPoset, fld: FieldChoice = RATIONALS, topology: PosetTopology | None = None) -> Report:
    """[w]Φ_P >= Σ_j β̃_{j-1} [w]P^n_j for every word, with Novik-Swartz h bounds.

    The closed-form 2^m bounds are recorded as observations only.
    """
    if classify(p) is Classification.NEITHER:
        raise NotApplicable("poset is not semi-Eulerian")
    if not is_simplicial(p):
        raise NotApplicable("poset is not simplicial")
    topo = topology or poset_topology(p, fld)
    if not topo.buchsbaum:
        raise NotApplicable(f"order complex is not Buchsbaum over {fld}")
    n, b = p.n, topo.betti
    rep = Report(f"buchsbaum-bounds[{fld}]", n)
    h = h_vector_simplicial(p)
    ns = [math.comb(n, i) * sum((-1) ** (i - j) * b[j - 1] for j in range(1, i + 1)) for i in range(n + 1)]
    for i in range(n + 1):
        rep.at_least(f"h_{i} >= Novik-Swartz bound", h[i], ns[i])
    phi_p = cd_index(p)
    pt = p_table(n)
    for w in words_of_degree(n, "cd"):
        rhs = sum(b[j - 1] * pt[j][w] for j in range(1, n))
        rep.at_least(f"[{w}]Phi >= sum beta*P", phi_p[w], rhs)
        rep.at_least(f"[{w}]Phi >= 0", phi_p[w], 0)
    for w in words_of_degree(n - 1, "cd"):
        bound = 2 ** d_count(w) * sum(b[j - 1] * math.comb(n - 1, j - 1) for j in range(2, n))
        rep.at_least(f"closed form (1) [{w}c]", phi_p[w + "c"], bound, asserted=False)
    for w in words_of_degree(n - 2, "cd"):
        bound = 2 ** d_count(w) * sum(b[j - 1] * (math.comb(n - 1, j - 1) - 1) for j in range(2, n))
        rep.at_least(f"closed form (2) [{w}d]", phi_p[w + "d"], bound, asserted=False)
    return rep


# -- γ-vectors ------------------------------------------------------------------------------

def gamma_vector(p: GradedPoset) -> tuple[int, ...]:
    """Coefficients of Φ_P(1, 2t), padded to length ⌊n/2⌋ + 1."""
    if classify(p) is not Classification.EULERIAN:
        raise NotApplicable("the cd route to γ needs an Eulerian poset")
    vals = evaluate_commutative(cd_index(p), (1,), (0, 2))
    size = p.n // 2 + 1
    return tuple(vals) + (0,) * (size - len(vals))


def gamma_from_h(h: Sequence[int]) -> tuple[int, ...]:
    n = len(h) - 1
    if any(h[i] != h[n - i] for i in range(n + 1)):
        raise NonPalindromicH(f"h = {tuple(h)} is not palindromic")
    gamma: list[int] = []
    for i in range(n // 2 + 1):
        # coefficient of t^i in Σ γ_k t^k (1+t)^{n-2k}
        gamma.append(h[i] - sum(g * math.comb(n - 2 * k, i - k) for k, g in enumerate(gamma)))
    return tuple(gamma)


def charney_davis(h: Sequence[int]) -> int:
    if len(h) % 2 == 0:
        raise ValueError("need an h-vector of odd length 2k+1")
    k = len(h) // 2
    return (-1) ** k * sum((-1) ** i * x for i, x in enumerate(h))


def order_complex_h(p: GradedPoset) -> list[int]:
    cx = order_complex(p)
    return h_vector_from_f([1] + cx.f_vector())


def gamma_report(p: GradedPoset, name: str = "poset") -> Report:
    rep = Report("gamma", p.n)
    via_cd = gamma_vector(p)
    h = order_complex_h(p)
    via_h = gamma_from_h(h)
    for i, (x, y) in enumerate(zip(via_cd, via_h)):
        rep.equal(f"{name} gamma_{i}", x, y)
    rep.equal(f"{name} length", len(via_cd), len(via_h))
    if p.n % 2 == 0:
        k = p.n // 2
        rep.equal(f"{name} gamma_{k} = 2^k [d^k]", via_cd[k], 2**k * cd_index(p)["d" * k])
        rep.equal(f"{name} Charney-Davis sum", charney_davis(h), via_cd[k])
    return rep


def rank5_alternating_h_report(p: GradedPoset, topology: PosetTopology, name: str = "poset") -> Report:
    """Σ(-1)^i h_i(Δ(P̄)) against 4([d²]P^4_2 β̃_1 + [d²]P^4_3 β̃_2) for rank 5."""
    if p.n != 4:
        raise NotApplicable("stated for posets of rank 5")
    rep = Report("rank5-alternating-h", 4)
    h = order_complex_h(p)
    pt = p_table(4)
    b = topology.betti
    rhs = 4 * (pt[2]["dd"] * b[1] + pt[3]["dd"] * b[2])
    rep.at_least(f"{name} alternating h-sum", sum((-1) ** i * x for i, x in enumerate(h)), rhs, asserted=False)
    return rep


def unimodality_report(n: int) -> Report:
    rep = Report("unimodal", n)
    t = phi(n)
    for w in words_of_degree(n, "cd"):
        seq = [t[i][w] for i in range(n)]
        rep.observations.append(Check(f"[{w}] {seq}", int(is_unimodal(seq)), 1, int(is_unimodal(seq)) - 1, is_unimodal(seq)))
    return rep


def is_unimodal(seq: Sequence[int]) -> bool:
    k = 0
    while k + 1 < len(seq) and seq[k] <= seq[k + 1]:
        k += 1
    return all(seq[i] >= seq[i + 1] for i in range(k, len(seq) - 1))
