"""Command line entry point: ``zgraded <command> ...``.

Exit codes: 0 pass, 1 property violated or not simple, 2 usage or parse
error, 3 indeterminate or search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import analysis, constructions, serialize
from ._common import CapExceeded, Unsupported
from .cocycle import SignCocycle
from .grading_search import EXHAUSTED, grading_search
from .graded_algebra import (
    GradedAlgebra,
    check_associativity,
    check_cocycle,
    check_gamma_commutativity,
    check_grading,
)
from .scalars import GAUSSIAN, RATIONAL, format_term, parse_rational

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INDETERMINATE = 0, 1, 2, 3
MAX_TABLE_DIM = 64
CHECKS = ("assoc", "grading", "gamma-comm", "cocycle")


class UsageError(Exception):
    pass


def _load(path) -> GradedAlgebra:
    try:
        return serialize.load(path)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


# -- build -------------------------------------------------------------------


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"{args.kind} requires --{name.replace('_', '-')}")


def _build(args) -> GradedAlgebra:
    kind = args.kind
    if kind == "clifford":
        _need(args, "p", "q")
        return constructions.clifford(args.p, args.q, args.field or RATIONAL)
    if kind == "clifford-complex":
        _need(args, "n")
        return constructions.clifford_complex(args.n)
    if kind == "twisted":
        _need(args, "n")
        return constructions.twisted_group_algebra(args.n, SignCocycle.standard(args.n), args.field or RATIONAL)
    if kind == "even-twisted":
        _need(args, "n")
        return constructions.even_twisted_subalgebra(args.n, SignCocycle.standard(args.n), args.field or RATIONAL)
    if kind == "quaternions":
        return constructions.quaternions(args.field or RATIONAL)
    if kind == "matrix":
        return _build_matrix(args)
    raise UsageError(f"unknown kind {kind!r}")


def _build_matrix(args) -> GradedAlgebra:
    field = args.field or RATIONAL
    if args.matrices:
        try:
            mats = json.loads(Path(args.matrices).read_text())
            mats = [[[parse_rational(str(x)) for x in row] for row in M] for M in mats]
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read matrices: {exc}") from None
        m = len(mats[0]) if mats else 0
        return constructions.matrix_algebra(m, mats, field)
    _need(args, "m")
    preset = args.preset or "units"
    if preset == "units":
        mats, labels = constructions.matrix_units(args.m)
    elif preset == "clifford":
        if args.m == 2:
            mats, labels = constructions.m2_clifford_basis()
        elif args.m == 4:
            mats, labels = constructions.m4_clifford_basis()
        else:
            raise UsageError("the clifford preset exists for --m 2 and --m 4")
    else:
        bases = constructions.m3_candidate_bases()
        if args.m != 3 or preset not in bases:
            raise UsageError(f"unknown matrix preset {preset!r} for --m {args.m}")
        mats, labels = bases[preset]
    return constructions.matrix_algebra(args.m, mats, field, labels)


def cmd_build(args, out) -> int:
    try:
        A = _build(args)
    except (CapExceeded, ValueError) as exc:
        raise UsageError(str(exc)) from None
    text = serialize.dumps(A)
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def _parse_checks(values) -> list[str]:
    if not values:
        return list(CHECKS)
    checks = []
    for v in values:
        for c in v.split(","):
            c = c.strip()
            if c not in CHECKS:
                raise UsageError(f"unknown check {c!r}; choose from {', '.join(CHECKS)}")
            if c not in checks:
                checks.append(c)
    return checks


def _describe_witness(A, name, report) -> str:
    w = report.witness
    if name in ("assoc", "grading", "gamma-comm") and isinstance(w, tuple) and all(isinstance(x, int) for x in w):
        return "(" + ", ".join(A.labels[x] for x in w) + ")"
    if isinstance(w, tuple):
        return "(" + ", ".join(str(x) for x in w) + ")"
    return str(w)


def cmd_verify(args, out) -> int:
    A = _load(args.file)
    checks = _parse_checks(args.check)
    if not A.graded and any(c != "assoc" for c in checks):
        raise UsageError("document has no degree map; only --check assoc applies")
    status = EXIT_OK
    for name in checks:
        try:
            if name == "assoc":
                rep = check_associativity(A)
            elif name == "grading":
                rep = check_grading(A)
            elif name == "gamma-comm":
                rep = check_gamma_commutativity(A)
            else:
                rep = check_cocycle(A)
        except CapExceeded as exc:
            raise UsageError(str(exc)) from None
        except ValueError as exc:
            out.write(f"{name}: FAIL ({exc})\n")
            status = EXIT_FAIL
            continue
        if rep:
            out.write(f"{name}: pass ({rep.message})\n")
        else:
            witness = _describe_witness(A, name, rep)
            out.write(f"{name}: FAIL at {witness}: {rep.message}\n")
            status = EXIT_FAIL
    return status


# -- table -------------------------------------------------------------------


def format_table(A: GradedAlgebra) -> str:
    """Multiplication table; row label times column label."""
    d = A.dim
    cells = [[A.format_vec(A.mul_vec(A.basis_vector(i), A.basis_vector(j))) for j in range(d)] for i in range(d)]
    width = max(max(len(c) for row in cells for c in row), max(len(l) for l in A.labels))
    head = max(len(l) for l in A.labels)
    lines = [" " * head + " | " + " ".join(l.ljust(width) for l in A.labels).rstrip()]
    lines.append("-" * head + "-+-" + "-" * ((width + 1) * d - 1))
    for i in range(d):
        lines.append(A.labels[i].ljust(head) + " | " + " ".join(c.ljust(width) for c in cells[i]).rstrip())
    return "\n".join(lines) + "\n"


def cmd_table(args, out) -> int:
    A = _load(args.file)
    if A.dim > MAX_TABLE_DIM:
        raise UsageError(f"table rendering is capped at {MAX_TABLE_DIM} basis elements")
    out.write(format_table(A))
    return EXIT_OK


# -- analysis ----------------------------------------------------------------


def _print_subspace(A, S, out) -> None:
    for row in S.rows:
        out.write("  [" + ", ".join(str(x) for x in row) + "]  " + A.format_vec(row) + "\n")


def cmd_simple(args, out) -> int:
    A = _load(args.file)
    try:
        res = analysis.is_simple(A)
    except CapExceeded as exc:
        raise UsageError(str(exc)) from None
    out.write(f"{res.verdict} over {res.field}: {res.detail}\n")
    if res.witness is not None:
        out.write(f"witness ideal (dim {res.witness.dim}):\n")
        _print_subspace(A, res.witness, out)
    if A.graded:
        try:
            out.write(f"graded-simple: {'yes' if analysis.is_graded_simple(A) else 'no'}\n")
        except Unsupported as exc:
            out.write(f"graded-simple: unsupported ({exc})\n")
    return {analysis.SIMPLE: EXIT_OK, analysis.NOT_SIMPLE: EXIT_FAIL}.get(res.verdict, EXIT_INDETERMINATE)


_TERM_RE = re.compile(r"([+-])?(?:(\d+(?:/\d+)?)\*)?([A-Za-z0-9_]+)")


def parse_element(A: GradedAlgebra, text: str) -> tuple:
    """Parse ``1+a1`` or ``a1-3/2*a2`` into coordinates; coefficients are rational."""
    coords = [0] * A.dim
    pos = 0
    text = text.replace(" ", "")
    if not text:
        raise UsageError("empty element expression")
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or (pos > 0 and m.group(1) is None):
            raise UsageError(f"cannot parse element {text!r} at offset {pos}")
        sign = -1 if m.group(1) == "-" else 1
        coef = parse_rational(m.group(2)) if m.group(2) else 1
        try:
            k = A.index(m.group(3))
        except KeyError as exc:
            raise UsageError(str(exc)) from None
        coords[k] = coords[k] + sign * coef
        pos = m.end()
    return tuple(coords)


def cmd_ideal(args, out) -> int:
    A = _load(args.file)
    gens = [parse_element(A, g) for g in args.gen]
    S = analysis.ideal_closure(A, gens)
    kind = "proper" if S.is_proper() else ("zero" if S.dim == 0 else "whole algebra")
    out.write(f"ideal of dim {S.dim} ({kind}):\n")
    _print_subspace(A, S, out)
    return EXIT_OK


def cmd_search(args, out) -> int:
    A = _load(args.file)
    res = grading_search(A, args.max_n, args.budget)
    out.write(str(res) + "\n")
    if res.found:
        for label, g in zip(A.labels, res.degrees):
            out.write(f"  {label}: {g}\n")
        return EXIT_OK
    return EXIT_INDETERMINATE if res.status == EXHAUSTED else EXIT_FAIL


def cmd_iso(args, out) -> int:
    A = _load(args.file_a)
    B = _load(args.file_b)
    gmap = {}
    for item in args.map.split(","):
        if "=" not in item:
            raise UsageError(f"bad map entry {item!r}; expected label=label")
        src, dst = (s.strip() for s in item.split("=", 1))
        try:
            A.index(src)
            gmap[src] = B[dst]
        except KeyError as exc:
            raise UsageError(str(exc)) from None
    try:
        rep = constructions.check_generator_iso(A, B, gmap)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(str(rep) + "\n")
    return EXIT_OK if rep else EXIT_FAIL


# -- wiring ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zgraded", description="Exact (Z2)^n-graded commutative algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct an algebra and write its JSON document")
    b.add_argument("kind", choices=["clifford", "clifford-complex", "twisted", "even-twisted", "quaternions", "matrix"])
    b.add_argument("--p", type=int)
    b.add_argument("--q", type=int)
    b.add_argument("--n", type=int, help="generators (clifford-complex) or group dimension (twisted, even-twisted)")
    b.add_argument("--m", type=int, help="matrix size")
    b.add_argument("--preset", help="matrix basis: units, clifford, sign-shift, unit-shift")
    b.add_argument("--matrices", help="JSON file with a list of matrices (rational entries)")
    b.add_argument("--field", choices=[RATIONAL, GAUSSIAN])
    b.add_argument("--out")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="run structural checks on a document")
    v.add_argument("file")
    v.add_argument("--check", action="append", help=f"comma list from {', '.join(CHECKS)} (default: all)")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="print the multiplication table")
    t.add_argument("file")
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("simple", help="decide simplicity")
    s.add_argument("file")
    s.set_defaults(func=cmd_simple)

    i = sub.add_parser("ideal", help="two-sided ideal generated by elements")
    i.add_argument("file")
    i.add_argument("--gen", action="append", required=True, help="element such as 1+a1")
    i.set_defaults(func=cmd_ideal)

    g = sub.add_parser("search", help="bounded search for a graded-commutative degree map")
    g.add_argument("file")
    g.add_argument("--max-n", type=int, default=4)
    g.add_argument("--budget", type=int, default=2_000_000)
    g.set_defaults(func=cmd_search)

    o = sub.add_parser("iso", help="check a generator map extends to an isomorphism")
    o.add_argument("file_a")
    o.add_argument("file_b")
    o.add_argument("--map", required=True, help="label=label,...")
    o.set_defaults(func=cmd_iso)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"zgraded: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
