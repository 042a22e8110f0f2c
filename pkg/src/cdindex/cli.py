"""Command-line front end.

Exit codes: 0 when every asserted check passes, 1 when a verification
fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Iterator, Sequence

from . import cdtheory as th
from .andre import EnumerationLimit, andre_permutations, andre_type_counts, is_andre_direct, is_andre_recursive
from .corpus import rp2_6, s1_times_s2, torus7
from .homology import FieldChoice, betti_numbers
from .ncpoly import NcPoly, format_poly, to_json_obj
from .poset import (
    Classification,
    FlagVector,
    GradedPoset,
    InvalidPoset,
    PosetParseError,
    ab_index,
    cd_index,
    chain_polynomial,
    classify,
    flag_f_vector,
    flag_h_vector,
    gds_check,
    h_vector_simplicial,
    is_simplicial,
    modified_chain_polynomial,
    modified_flag_f_vector,
    parse_poset,
)
from .simplicial import ComplexParseError, SimplicialComplex, boundary_of_simplex, face_poset, order_complex, parse_complex

SUITES = ("gds", "cdvsh", "andre", "derivation", "ppos", "identityhard", "recurrence", "pn2", "bounds", "unimodal")


class InputError(Exception):
    pass


# -- input ---------------------------------------------------------------------------

def _first_line(text: str) -> str:
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            return line
    return ""


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def load_poset(path: str, kind: str | None = None) -> tuple[GradedPoset, SimplicialComplex | None]:
    """Read a poset or facet-list file; ``kind`` None means detect."""
    text = _read(path)
    if kind is None:
        kind = "poset" if _first_line(text) == "poset" else "complex"
    try:
        if kind == "poset":
            p, cx = parse_poset(text), None
        else:
            cx = parse_complex(text)
            p = face_poset(cx)
        p.require_valid()
    except (PosetParseError, ComplexParseError, InvalidPoset) as exc:
        raise InputError(f"{path}: {exc}") from None
    return p, cx


def _field(char: int) -> FieldChoice:
    try:
        return FieldChoice(char)
    except ValueError as exc:
        raise InputError(str(exc)) from None


# -- output helpers --------------------------------------------------------------------

def _subset_key(s: tuple[int, ...]) -> str:
    return "{" + ",".join(map(str, s)) + "}"


def _flag_text(f: FlagVector) -> str:
    return " ".join(f"{_subset_key(s)}={v}" for s, v in f.values.items())


def _flag_json(f: FlagVector) -> dict:
    return {_subset_key(s): str(v) for s, v in f.values.items()}


def _emit_reports(reports: Sequence[th.Report], fmt: str, out) -> int:
    if fmt == "json":
        out.write(json.dumps([r.to_json_obj() for r in reports], indent=2) + "\n")
    else:
        for r in reports:
            out.write(r.summary() + "\n")
            for c in r.failures[:20]:
                out.write(f"  failed {c.where}: lhs={c.lhs} rhs={c.rhs} residual={c.residual}\n")
            for c in r.observations:
                if not c.passed:
                    out.write(f"  note {c.where}: lhs={c.lhs} rhs={c.rhs} (report only)\n")
    return 0 if all(r.passed for r in reports) else 1


# -- subcommands -----------------------------------------------------------------------

def cmd_cdindex(args, out) -> int:
    p, cx = load_poset(args.file, args.kind)
    kind = classify(p)
    f = flag_f_vector(p)
    data: dict = {"classification": str(kind), "rank": p.rank[p.top], "n": p.n}
    text = [f"classification: {kind}", f"rank: {p.rank[p.top]} (n = {p.n})"]
    if is_simplicial(p):
        h = h_vector_simplicial(p)
        data["h_vector"] = h
        text.append("h-vector: " + " ".join(map(str, h)))
    data["flag_f"] = _flag_json(f)
    data["flag_h"] = _flag_json(flag_h_vector(f))
    text.append("flag-f: " + _flag_text(f))
    text.append("flag-h: " + _flag_text(flag_h_vector(f)))
    polys = {"chi": chain_polynomial(p), "psi": ab_index(p)}
    if kind is not Classification.NEITHER:
        polys["chi_modified"] = modified_chain_polynomial(p)
        data["flag_f_modified"] = _flag_json(modified_flag_f_vector(p))
        text.append("flag-f-modified: " + _flag_text(modified_flag_f_vector(p)))
        polys["cd_index"] = cd_index(p)
    labels = {"chi": "chi", "psi": "psi", "chi_modified": "chi-modified", "cd_index": "cd-index"}
    for key, poly in polys.items():
        data[key] = to_json_obj(poly)
        text.append(f"{labels[key]}: {format_poly(poly)}")
    if kind is Classification.NEITHER:
        text.append("cd-index: undefined (neither Eulerian nor semi-Eulerian)")
        data["cd_index"] = None
    if args.format == "json":
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        out.write("\n".join(text) + "\n")
    return 0


def cmd_phicheck(args, out) -> int:
    table = th.phi_table(args.n, args.source)
    if args.i is not None:
        if not 0 <= args.i <= args.n:
            raise InputError(f"--i must lie in 0..{args.n}")
        out.write(format_poly(table[args.i]) + "\n")
        return 0
    for i in range(args.n):
        out.write(f"Phi^{args.n}_{i}: {format_poly(table[i])}\n")
    return 0


def cmd_ppoly(args, out) -> int:
    if args.n < 2:
        raise InputError("--n must be at least 2")
    table = th.p_table(args.n)
    if args.j is not None:
        if not 0 <= args.j <= args.n - 1:
            raise InputError(f"--j must lie in 0..{args.n - 1}")
        out.write(format_poly(table[args.j]) + "\n")
        return 0
    for j in range(args.n):
        out.write(f"P^{args.n}_{j}: {format_poly(table[j])}\n")
    return 0


def cmd_andre(args, out) -> int:
    if args.last is not None and not 1 <= args.last <= args.n:
        raise InputError(f"--last must lie in 1..{args.n}")
    counts = andre_type_counts(args.n, last=args.last, limit=args.limit)
    out.write(format_poly(NcPoly(counts, "cd")) + "\n")
    return 0


def _order_complex_of(p: GradedPoset) -> SimplicialComplex:
    return order_complex(p)


def cmd_betti(args, out) -> int:
    p, cx = load_poset(args.file)
    target = cx if cx is not None else _order_complex_of(p)
    b = betti_numbers(target, _field(args.char))
    out.write(f"reduced betti over {_field(args.char)}: " + " ".join(f"b{i - 1}={v}" for i, v in enumerate(b.values)) + "\n")
    return 0


def cmd_bounds(args, out) -> int:
    p, _ = load_poset(args.file)
    fld = _field(args.char)
    try:
        rep = th.buchsbaum_cd_bounds(p, fld)
    except th.NotApplicable as exc:
        raise InputError(str(exc)) from None
    return _emit_reports([rep], args.format, out)


def cmd_gamma(args, out) -> int:
    p, _ = load_poset(args.file)
    try:
        rep = th.gamma_report(p, Path(args.file).name)
    except (th.NotApplicable, th.NonPalindromicH) as exc:
        raise InputError(str(exc)) from None
    if args.format == "text":
        out.write("gamma: " + " ".join(map(str, th.gamma_vector(p))) + "\n")
    return _emit_reports([rep], args.format, out)


# -- verify -----------------------------------------------------------------------------------

def _torus_gds() -> th.Report:
    rep = th.Report("gds-torus", 3)
    p = face_poset(torus7())
    viol = gds_check(flag_f_vector(p))
    rep.equal("violations of flag f", len(viol), 1)
    rep.equal("violation at S = {}", int(bool(viol) and viol[0].subset == ()), 1)
    rep.equal("violations of modified flag f", len(gds_check(modified_flag_f_vector(p))), 0)
    return rep


def _predicate_equivalence(n: int) -> th.Report:
    from itertools import permutations

    rep = th.Report("andre-predicates", n)
    mismatches = sum(1 for perm in permutations(range(1, n + 1)) if is_andre_direct(perm) != is_andre_recursive(perm))
    rep.equal("direct vs recursive mismatches", mismatches, 0)
    return rep


def _corpus(max_n: int) -> list[tuple[str, GradedPoset, FieldChoice]]:
    items = [("torus7", face_poset(torus7()), FieldChoice(0)), ("rp2_6", face_poset(rp2_6()), FieldChoice(2)), ("rp2_6", face_poset(rp2_6()), FieldChoice(0))]
    items += [(f"boundary-simplex-{n}", face_poset(boundary_of_simplex(n)), FieldChoice(0)) for n in range(2, min(max_n, 5) + 1)]
    if max_n >= 4:
        items.append(("s1xs2", face_poset(s1_times_s2()), FieldChoice(0)))
    return items


def suite_reports(suite: str, max_n: int) -> Iterator[th.Report]:
    if suite == "gds":
        yield _torus_gds()
        for n in range(1, max_n + 1):
            yield th.verify_gds(n)
            yield th.verify_semisuspension_counts(n)
    elif suite == "cdvsh":
        corpus = [(name, p) for name, p, fld in _corpus(max_n) if fld.characteristic == 0]
        yield th.verify_cdvsh(corpus)
    elif suite == "andre":
        for n in range(1, min(max_n, th.POSET_ROUTE_MAX) + 1):
            yield th.verify_phi_routes(n)
        for n in range(1, max_n + 1):
            yield _predicate_equivalence(n)
    elif suite == "derivation":
        for n in range(1, max_n + 1):
            yield th.verify_derivation(n)
    elif suite == "ppos":
        for n in range(2, max_n + 1):
            yield th.closed_form_report(n)
            yield th.p_positivity_report(n)
    elif suite == "identityhard":
        for n in range(1, max_n + 1, 2):
            yield th.verify_identity_hard(n)
    elif suite == "recurrence":
        for n in range(2, max_n + 1):
            yield th.verify_coefficient_identities(n)
            yield th.verify_rewriting(n)
        for n in range(5, max_n + 1):
            yield th.verify_recurrences(n)
    elif suite == "pn2":
        for n in range(5, max_n + 1):
            yield th.verify_lemma_pn2(n)
    elif suite == "bounds":
        for n in range(3, max_n + 1):
            yield th.andre_bound_report(n)
        for name, p, fld in _corpus(max_n):
            topo = th.poset_topology(p, fld)
            rep = th.buchsbaum_cd_bounds(p, fld, topo)
            rep.suite += f" {name}"
            yield rep
            if p.n == 4:
                yield th.rank5_alternating_h_report(p, topo, name)
    elif suite == "unimodal":
        for n in range(1, max_n + 1):
            yield th.unimodality_report(n)
    else:
        raise InputError(f"unknown suite {suite!r}")


def cmd_verify(args, out) -> int:
    if args.max_n < 1:
        raise InputError("--max-n must be positive")
    suites = SUITES if args.suite == "all" else (args.suite,)
    reports = [r for s in suites for r in suite_reports(s, args.max_n)]
    return _emit_reports(reports, args.format, out)


# -- parser ------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cdindex", description="Exact cd-index computations for (semi-)Eulerian posets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cdindex", help="classification, flag vectors and cd-index of a poset or complex")
    p.add_argument("kind", choices=("poset", "complex"))
    p.add_argument("--file", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_cdindex)

    p = sub.add_parser("phicheck", help="the polynomials Phi^n_i")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int)
    p.add_argument("--source", choices=("posets", "andre"), default="posets")
    p.set_defaults(func=cmd_phicheck)

    p = sub.add_parser("ppoly", help="the polynomials P^n_j")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int)
    p.set_defaults(func=cmd_ppoly)

    p = sub.add_parser("andre", help="André permutations of [n] counted by cd-type")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--last", type=int, help="only permutations with this last value")
    p.add_argument("--limit", type=int, default=9)
    p.set_defaults(func=cmd_andre)

    for name, func, help_text in (
        ("betti", cmd_betti, "reduced Betti numbers (order complex for poset files)"),
        ("bounds", cmd_bounds, "Novik-Swartz and cd-index lower bounds"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--file", required=True)
        p.add_argument("--char", type=int, default=0, help="0 for the rationals, or a prime")
        if name == "bounds":
            p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)

    p = sub.add_parser("gamma", help="gamma-vector by two routes")
    p.add_argument("--file", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (InputError, EnumerationLimit) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
