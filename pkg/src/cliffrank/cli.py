"""Command line front end.

Exit codes: 0 ok, 1 verification mismatch, 2 usage or parse error,
3 brute-force budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import replace
from importlib import resources
from typing import Sequence

from .algebra import (
    Multivector,
    Signature,
    blade_from_indices,
    blade_indices,
    conjugation_star,
    geometric_product,
    is_group_element,
    is_lie_element,
)
from .config import DEFAULT_LIMITS, BudgetExceeded, DomainError
from .gaussian import Gaussian
from .rank_formulas import (
    KINDS,
    actual_grades,
    build_table,
    kernel_grades,
    render_grades,
    special_case_report,
    theorem_grades,
)
from .subalgebras import (
    COMPLEX_LIE,
    VARIANTS,
    GradedSubspace,
    catalog,
    closure_check_bruteforce,
    closure_check_predicted,
    diff_report,
    enumerate_closed,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
GOLDEN_N = range(1, 11)


class DocumentError(ValueError):
    """Malformed or invalid multivector document."""


# -- golden tables ------------------------------------------------------------

def golden_text(n: int, kind: str) -> str:
    return resources.files("cliffrank.data").joinpath(f"{kind}_n{n:02d}.tsv").read_text()


def parse_table_text(text: str) -> tuple[int, dict[tuple[int, int], str]]:
    """Raw cell strings of a tab-separated table with 1..n headers."""
    rows = [r.split("\t") for r in text.rstrip("\n").split("\n")]
    head = rows[0]
    if not head[0].startswith("n="):
        raise DomainError(f"table must start with 'n=', got {head[0]!r}")
    n = int(head[0][2:])
    if head[1:] != [str(l) for l in range(1, n + 1)] or len(rows) != n + 1:
        raise DomainError(f"malformed header or row count for n = {n}")
    cells = {}
    for k, row in enumerate(rows[1:], start=1):
        if row[0] != str(k) or len(row) != n + 1:
            raise DomainError(f"malformed row {k}")
        for l, cell in enumerate(row[1:], start=1):
            cells[(k, l)] = cell
    return n, cells


def overlay() -> dict[tuple[str, int, int, int], tuple[str, str, str]]:
    text = resources.files("cliffrank.data").joinpath("overlay.tsv").read_text()
    out = {}
    for line in text.splitlines()[1:]:
        if not line.strip():
            continue
        kind, n, k, l, printed, corrected, note = line.split("\t")
        out[(kind, int(n), int(k), int(l))] = (printed, corrected, note)
    return out


# -- multivector documents ----------------------------------------------------

def parse_document(text: str) -> Multivector:
    """{"signature": [p, q], "terms": [{"indices": [...], "re": int, "im": int}, ...]}"""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("document must be an object with 'signature' and 'terms'")
    sig_doc = doc.get("signature")
    if (not isinstance(sig_doc, list) or len(sig_doc) != 2
            or not all(type(v) is int for v in sig_doc)):
        raise DocumentError("'signature' must be a list [p, q] of two integers")
    try:
        sig = Signature(*sig_doc)
    except DomainError as exc:
        raise DocumentError(f"signature: {exc}") from exc
    terms = doc.get("terms")
    if not isinstance(terms, list):
        raise DocumentError("'terms' must be a list")
    coeffs: dict[int, Gaussian] = {}
    for i, term in enumerate(terms):
        where = f"terms[{i}]"
        if not isinstance(term, dict) or "indices" not in term:
            raise DocumentError(f"{where}: expected an object with 'indices'")
        idx = term["indices"]
        re_, im = term.get("re", 0), term.get("im", 0)
        if not isinstance(idx, list) or not all(type(a) is int for a in idx):
            raise DocumentError(f"{where}.indices: expected a list of integers")
        if type(re_) is not int or type(im) is not int:
            raise DocumentError(f"{where}: 're' and 'im' must be integers")
        if any(not 1 <= a <= sig.n for a in idx):
            raise DocumentError(f"{where}.indices: each index must lie in [1, {sig.n}]")
        try:
            blade = blade_from_indices(idx)
        except DomainError as exc:
            raise DocumentError(f"{where}.indices: {exc}") from exc
        if blade in coeffs:
            raise DocumentError(f"{where}: duplicate blade {idx}")
        coeffs[blade] = Gaussian(re_, im)
    return Multivector(sig, coeffs)


def dump_document(x: Multivector) -> dict:
    return {
        "signature": [x.sig.p, x.sig.q],
        "terms": [{"indices": list(blade_indices(b)), "re": c.re, "im": c.im} for b, c in x.items()],
    }


# -- commands -----------------------------------------------------------------

def _kinds(arg: str) -> tuple[str, ...]:
    return KINDS if arg == "both" else (arg,)


def _signature(n: int, pq: str | None) -> Signature:
    if pq is None:
        return Signature(n, 0)
    p, q = (int(v) for v in pq.split(","))
    if p + q != n:
        raise DomainError(f"--pq {pq} does not sum to n = {n}")
    return Signature(p, q)


def cmd_tables(args, out) -> int:
    kinds = _kinds(args.kind)
    tables = [build_table(args.n, kind) for kind in kinds]
    if args.format == "json":
        doc = tables[0].to_json() if len(tables) == 1 else [t.to_json() for t in tables]
        out.write(json.dumps(doc) + "\n")
    else:
        out.write("\n".join(t.to_text() for t in tables))
    return EXIT_OK


class _Verifier:
    def __init__(self, out):
        self.out = out
        self.failures = 0
        self.warnings = 0

    def result(self, name: str, mismatches: list[str], elapsed: float, detail: str = "") -> None:
        status = "PASS" if not mismatches else "FAIL"
        self.failures += len(mismatches)
        tail = f" ({detail})" if detail else ""
        self.out.write(f"{status} {name}: {len(mismatches)} mismatches{tail} [{elapsed:.2f}s]\n")
        for m in mismatches[:50]:
            self.out.write(f"  {m}\n")

    def warn(self, msg: str) -> None:
        self.warnings += 1
        self.out.write(f"WARN {msg}\n")


def cmd_verify(args, out) -> int:
    limits = DEFAULT_LIMITS if args.budget is None else replace(DEFAULT_LIMITS, pair_budget=args.budget)
    n_max = args.n
    if n_max < 1 or n_max > limits.n_max:
        raise DomainError(f"--n must lie in [1, {limits.n_max}]")
    kinds = _kinds(args.kind)
    v = _Verifier(out)

    t = time.perf_counter()
    bad = [f"n={n} k={k} l={l} {kind}: theorem {render_grades(theorem_grades(n, k, l, kind))} "
           f"vs kernel {render_grades(kernel_grades(n, k, l, kind))}"
           for n in range(1, n_max + 1) for k in range(n + 1) for l in range(k + 1) for kind in kinds
           if theorem_grades(n, k, l, kind) != kernel_grades(n, k, l, kind)]
    v.result("formula agreement", bad, time.perf_counter() - t, f"n <= {n_max}")

    t = time.perf_counter()
    bad, known = [], overlay()
    for kind in kinds:
        for n in GOLDEN_N:
            if n > n_max:
                break
            _, gold = parse_table_text(golden_text(n, kind))
            table = build_table(n, kind)
            for (k, l), printed in gold.items():
                computed = table.render_cell(k, l)
                if printed == computed:
                    continue
                entry = known.get((kind, n, k, l))
                brute = render_grades(actual_grades(Signature(n, 0), k, l, kind, limits))
                if entry and entry[0] == printed and entry[1] == computed == brute:
                    v.warn(f"{kind} n={n} cell ({k},{l}): printed {printed!r}, computed {computed!r} "
                           f"(brute force {brute!r}); {entry[2]}")
                else:
                    bad.append(f"{kind} n={n} cell ({k},{l}): printed {printed!r}, computed {computed!r}")
    v.result("golden tables", bad, time.perf_counter() - t, f"n <= {min(n_max, GOLDEN_N[-1])}")

    t = time.perf_counter()
    bad = []
    for n in range(1, n_max + 1):
        for sig in Signature.splits(n):
            for k in range(n + 1):
                for l in range(n + 1):
                    for kind in kinds:
                        got = actual_grades(sig, k, l, kind, limits)
                        want = kernel_grades(n, k, l, kind)
                        if got != want:
                            bad.append(f"Cl({sig.p},{sig.q}) k={k} l={l} {kind}: brute force "
                                       f"{render_grades(got)} vs kernel {render_grades(want)}")
    v.result("brute-force tightness", bad, time.perf_counter() - t, f"all splits, n <= {n_max}")

    t = time.perf_counter()
    rep = special_case_report(n_max)
    v.result("special cases", rep.mismatches, time.perf_counter() - t,
             f"{rep.checked} evaluations, {len(rep.skipped)} skipped")
    for s in rep.skipped:
        v.warn(f"special case skipped: unreadable source: {s}")

    t = time.perf_counter()
    bad, extras = [], 0
    for n in range(1, min(n_max, 10) + 1):
        rep = diff_report(n, limits)
        extras += len(rep.extras)
        bad += [f"n={n} {line.strip()}" for line in rep.lines()[1:] if not line.strip().startswith("extra")]
    v.result("subalgebra listings", bad, time.perf_counter() - t, f"{extras} extra closed subsets")

    t = time.perf_counter()
    bad = []
    for n in range(1, min(n_max, 8) + 1):
        for sig in Signature.splits(n):
            for mask in range(1 << (n + 1)):
                for variant in VARIANTS:
                    s = GradedSubspace(n, frozenset(g for g in range(n + 1) if mask >> g & 1), variant)
                    if closure_check_predicted(s) != closure_check_bruteforce(sig, s, limits):
                        bad.append(f"Cl({sig.p},{sig.q}) {variant} {s.label()}")
    v.result("closure oracle agreement", bad, time.perf_counter() - t, f"n <= {min(n_max, 8)}")

    out.write(f"{v.failures} mismatches, {v.warnings} warnings\n")
    return EXIT_OK if v.failures == 0 else EXIT_MISMATCH


def cmd_subalgebras(args, out) -> int:
    sig = _signature(args.n, args.pq)
    entries = catalog(args.n, args.variant, augmented=args.augmented)
    out.write(f"n={args.n} {args.variant} Cl({sig.p},{sig.q})\n")
    for i, sub in enumerate(entries, start=1):
        verdict = "closed" if closure_check_bruteforce(sig, sub) else "NOT CLOSED"
        out.write(f"{i}) {sub.label()}\t[{sub.provenance}; {verdict}]\n")
    status = EXIT_OK if all(closure_check_bruteforce(sig, s) for s in entries) else EXIT_MISMATCH
    if args.enumerate:
        closed = enumerate_closed(args.n, args.variant)
        out.write(f"closed grade subsets: {len(closed)}\n")
        for sub in closed:
            out.write(f"  {sub.label()}\t[{sub.provenance}]\n")
        if args.variant == COMPLEX_LIE and args.n <= 10:
            rep = diff_report(args.n)
            out.write("\n".join(rep.lines()) + "\n")
            if not rep.ok:
                status = EXIT_MISMATCH
    return status


def cmd_check(args, out) -> int:
    text = sys.stdin.read() if args.document == "-" else open(args.document).read()
    x = parse_document(text)
    sig = x.sig
    if args.predicate == "group":
        ok = is_group_element(sig, x)
        residual = geometric_product(sig, conjugation_star(x), x) - Multivector.scalar(sig)
    else:
        ok = is_lie_element(x)
        residual = conjugation_star(x) + x
    out.write(f"{args.predicate}: {'true' if ok else 'false'}\n")
    if not ok:
        out.write(f"residual: {residual}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliffrank", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", help="print rank-support tables")
    p.add_argument("--n", type=int, required=True, help="number of generators")
    p.add_argument("--kind", choices=KINDS + ("both",), default="commutator")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", help="run the verification suites up to --n")
    p.add_argument("--n", type=int, required=True, help="largest n to verify")
    p.add_argument("--kind", choices=KINDS + ("both",), default="both")
    p.add_argument("--budget", type=int, default=None, help="max blade pairs per (k, l) cell")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("subalgebras", help="list catalogued graded subalgebras")
    p.add_argument("--n", type=int, required=True, help="number of generators")
    p.add_argument("--variant", choices=VARIANTS, default=COMPLEX_LIE,
                   help="decorate grades with a_k (complex-lie) or leave them real (plain)")
    p.add_argument("--augmented", action="store_true", help="include grade-0 and grade-n extensions")
    p.add_argument("--enumerate", action="store_true",
                   help="also enumerate every closed grade subset and diff against the catalogue")
    p.add_argument("--pq", default=None, help="signature split p,q (default n,0)")
    p.set_defaults(func=cmd_subalgebras)

    p = sub.add_parser("check", help="test group / Lie-algebra membership of a multivector document")
    p.add_argument("document", help="JSON document path, or - for stdin")
    p.add_argument("--predicate", choices=("group", "lie"), required=True)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        print(f"resource budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
