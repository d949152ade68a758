"""Command-line entry point: parsing, scan orchestration, reports, manifests.

Subcommands: schur, lr, restrict, toeplitz, body, and verify with one
scanner name.  Reports are JSON with a CSV summary next to them; big
integers and rationals are serialized as decimal strings so spreadsheet
and JSON consumers never round them.  Exit codes: 0 clean, 1 violations
found (a result, not a failure), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import re
import sys
import time
from fractions import Fraction

from . import bodies, concavity, toeplitz
from .lr import lr_coefficient, restriction_multiplicity
from .bodies import MultiPolynomial, PolynomialSubspace
from .partitions import GLWeight, Partition, SkewShape, pad, partition, weight
from .symfunc import skew_schur, to_schur_basis
from .toeplitz import FiniteSequence

ARTIFACT_VERSION = "0.1.0"


class ParseError(ValueError):
    """Malformed input text; the message carries the position."""


# ---------------------------------------------------------------------------
# text syntax
# ---------------------------------------------------------------------------


def parse_partition(text: str) -> Partition:
    """Parse "3,1" (comma-separated, weakly decreasing); "" and "0" are empty."""
    body = text.strip()
    if body in ("", "0"):
        return ()
    parts = []
    for pos, piece in enumerate(body.split(",")):
        piece = piece.strip()
        if not re.fullmatch(r"-?\d+", piece):
            raise ParseError(f"partition entry {pos}: expected an integer, got {piece!r}")
        parts.append(int(piece))
    try:
        return partition(parts)
    except ValueError as exc:
        raise ParseError(f"partition {text!r}: {exc}") from None


def parse_weight(text: str) -> GLWeight:
    """Parse "2,1,0@3": comma-separated entries, @rank suffix."""
    body = text.strip()
    if "@" not in body:
        raise ParseError(f"weight {text!r}: missing @rank suffix")
    entries_s, _, rank_s = body.partition("@")
    if not re.fullmatch(r"\d+", rank_s.strip()):
        raise ParseError(f"weight {text!r}: rank must be a positive integer")
    rank = int(rank_s)
    entries = []
    for pos, piece in enumerate(entries_s.split(",")):
        piece = piece.strip()
        if not re.fullmatch(r"-?\d+", piece):
            raise ParseError(f"weight entry {pos}: expected an integer, got {piece!r}")
        entries.append(int(piece))
    if len(entries) != rank:
        raise ParseError(
            f"weight {text!r}: {len(entries)} entries for rank {rank}"
        )
    try:
        return weight(entries)
    except ValueError as exc:
        raise ParseError(f"weight {text!r}: {exc}") from None


def format_partition(p: Partition) -> str:
    return ",".join(map(str, p)) if p else "0"


def format_weight(w: GLWeight) -> str:
    return ",".join(map(str, w)) + f"@{len(w)}"


def _variable_names(dim: int) -> list[str]:
    if dim <= 3:
        return ["x", "y", "z"][:dim]
    return [f"x{i + 1}" for i in range(dim)]


_TERM_RE = re.compile(
    r"""(?P<coeff>\d+(?:/\d+)?)?      # optional rational coefficient
        (?P<vars>(?:\*?[a-z]\w*(?:\^\d+)?)*)   # variable powers
    """,
    re.VERBOSE,
)


def parse_polynomial(text: str, dim: int) -> MultiPolynomial:
    """Parse "3*x^2*y - 1/2*y" into a polynomial in dim variables.

    Variables are x, y, z for dim <= 3 and x1..xd beyond.  Raises
    ParseError with the offending position on malformed input.
    """
    names = {name: i for i, name in enumerate(_variable_names(dim))}
    body = text.replace(" ", "")
    if not body:
        raise ParseError("empty polynomial")
    # split into signed terms
    terms: dict[tuple[int, ...], Fraction] = {}
    pos = 0
    sign = 1
    if body[0] in "+-":
        sign = -1 if body[0] == "-" else 1
        pos = 1
    while pos < len(body):
        nxt = len(body)
        for i in range(pos, len(body)):
            if body[i] in "+-" and body[i - 1] not in "*/^":
                nxt = i
                break
        chunk = body[pos:nxt]
        if not chunk:
            raise ParseError(f"position {pos}: empty term")
        coeff, exps = _parse_term(chunk, names, dim, pos)
        key = tuple(exps)
        v = terms.get(key, Fraction(0)) + sign * coeff
        if v:
            terms[key] = v
        else:
            terms.pop(key, None)
        if nxt < len(body):
            sign = -1 if body[nxt] == "-" else 1
        pos = nxt + 1
    return MultiPolynomial(dim, terms)


def _parse_term(chunk: str, names: dict[str, int], dim: int, offset: int):
    m = _TERM_RE.fullmatch(chunk)
    if m is None or (not m.group("coeff") and not m.group("vars")):
        raise ParseError(f"position {offset}: cannot parse term {chunk!r}")
    coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
    exps = [0] * dim
    vars_part = m.group("vars")
    for piece in filter(None, vars_part.split("*")):
        name, _, power = piece.partition("^")
        if name not in names:
            raise ParseError(
                f"position {offset}: unknown variable {name!r} in {dim} dimensions"
            )
        exps[names[name]] += int(power) if power else 1
    return coeff, exps


def parse_shape(text: str) -> SkewShape:
    """Parse "3,1/1" or "3,1" into a skew shape."""
    outer_s, _, inner_s = text.partition("/")
    return SkewShape(parse_partition(outer_s), parse_partition(inner_s))


def parse_sequence(text: str) -> FiniteSequence:
    """Parse "0:1,1:1/2" into a finitely supported sequence."""
    support = {}
    for pos, piece in enumerate(text.split(",")):
        piece = piece.strip()
        if not piece:
            continue
        k_s, _, v_s = piece.partition(":")
        if not re.fullmatch(r"-?\d+", k_s.strip()):
            raise ParseError(f"sequence entry {pos}: bad index {k_s!r}")
        try:
            v = Fraction(v_s.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"sequence entry {pos}: bad value {v_s!r}") from None
        support[int(k_s)] = v
    try:
        return FiniteSequence(support)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


def canonical_payload(subcommand: str, params: dict, checked: int, violations: list) -> bytes:
    """The deterministic portion of a report, canonically serialized."""
    doc = {
        "subcommand": subcommand,
        "params": params,
        "checked": checked,
        "violations": violations,
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")).encode("ascii")


def build_report(
    subcommand: str,
    params: dict,
    checked: int,
    violations: list,
    runtime_ms: int,
    argv: list[str],
    jobs: int,
) -> dict:
    payload = canonical_payload(subcommand, params, checked, violations)
    return {
        "subcommand": subcommand,
        "params": params,
        "checked": checked,
        "violations": violations,
        "runtime_ms": runtime_ms,
        "manifest": {
            "argv": argv,
            "jobs": jobs,
            "artifact_version": ARTIFACT_VERSION,
            "wall_time_ms": runtime_ms,
            "output_digest": "sha256:" + hashlib.sha256(payload).hexdigest(),
        },
    }


def write_report(report: dict, out_path: str | None) -> None:
    text = json.dumps(report, sort_keys=True, indent=2)
    if out_path:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text + "\n")
        csv_path = re.sub(r"\.json$", "", out_path) + ".csv"
        with open(csv_path, "w", newline="", encoding="ascii") as fh:
            w = csv.writer(fh)
            w.writerow(["subcommand", "checked", "violations", "params"])
            w.writerow(
                [
                    report["subcommand"],
                    report["checked"],
                    len(report["violations"]),
                    json.dumps(report["params"], sort_keys=True),
                ]
            )
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_schur(args) -> int:
    shape = parse_shape(args.shape)
    expansion = skew_schur(shape, args.vars)
    if args.basis == "monomial":
        out = {format_partition(k): str(v) for k, v in sorted(expansion.terms.items())}
    else:
        out = {
            format_partition(k): str(v)
            for k, v in sorted(to_schur_basis(expansion).terms.items())
        }
    doc = {"shape": str(shape), "vars": args.vars, "basis": args.basis, "terms": out}
    _emit(doc, args.out)
    return 0


def _cmd_lr(args) -> int:
    rank = args.rank
    lam = pad(parse_partition(args.lam), rank)
    mu = pad(parse_partition(args.mu), rank)
    nu = pad(parse_partition(args.nu), rank)
    value = lr_coefficient(lam, mu, nu)
    _emit(
        {
            "lam": format_weight(lam),
            "mu": format_weight(mu),
            "nu": format_weight(nu),
            "rank": rank,
            "value": str(value),
        },
        args.out,
    )
    return 0


def _cmd_restrict(args) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    value = restriction_multiplicity(lam, mu, args.n, args.k)
    _emit(
        {
            "lam": format_partition(lam),
            "mu": format_partition(mu),
            "n": args.n,
            "k": args.k,
            "value": str(value),
        },
        args.out,
    )
    return 0


def _cmd_toeplitz(args) -> int:
    seq = parse_sequence(args.seq)
    if args.check == "2x2":
        ok, bad = toeplitz.two_by_two_scan(seq)
        doc = {"check": "2x2", "passed": ok, "failing_index": bad}
    else:
        ok, bad = toeplitz.character_positivity_check(seq, args.rank, args.bound)
        doc = {
            "check": "schur",
            "rank": args.rank,
            "bound": args.bound,
            "passed": ok,
            "failing_weight": ",".join(map(str, bad)) if bad else None,
        }
    _emit(doc, args.out)
    return 0 if ok else 1


def _cmd_body(args) -> int:
    polys = [parse_polynomial(p, args.dim) for p in args.basis.split(";") if p.strip()]
    subspace = PolynomialSubspace(args.dim, polys)
    b = bodies.body_approximation(subspace, args.kmax)
    volume = None
    degree = None
    try:
        volume = format_fraction(bodies.normalized_volume(b))
    except bodies.DegenerateBodyError as exc:
        volume = f"degenerate: {exc}"
    if args.kmax >= args.dim + 1:
        degree = format_fraction(bodies.degree_estimate(subspace, args.kmax).degree)
    doc = {
        "dim": args.dim,
        "kmax": args.kmax,
        "points": [[format_fraction(x) for x in p] for p in b.points],
        "hull_vertices": [[format_fraction(x) for x in p] for p in b.hull],
        "lattice": [list(row) for row in b.lattice],
        "volume": volume,
        "degree": degree,
        "stable": b.stable,
    }
    _emit(doc, args.out)
    return 0


_VERIFIERS = [
    "theorem1",
    "slm",
    "conj1",
    "saturation",
    "logv",
    "alpha",
    "weyl",
    "restriction",
    "convolution",
]


def run_scan(args) -> tuple[dict, int]:
    """Dispatch a verify subcommand; returns (report, exit code)."""
    name = args.scanner
    t0 = time.monotonic()
    if name == "theorem1":
        rep = concavity.theorem1_scan(args.bound, jobs=args.jobs)
    elif name == "slm":
        rep = concavity.slm_scan(args.bound, jobs=args.jobs)
    elif name == "conj1":
        rep = concavity.conjecture1_scan(args.bound, args.rank, args.pq, jobs=args.jobs)
    elif name == "saturation":
        rep = concavity.saturation_scan_all(args.bound, args.rank, args.kmax)
    elif name == "logv":
        rep = concavity.logv_scan(args.rank, args.bound)
    elif name == "alpha":
        rep = concavity.alpha_scan(args.rank, args.bound, args.pq)
    elif name == "weyl":
        rep = concavity.weyl_logconcavity_scan(args.rank, args.bound, jobs=args.jobs)
    elif name == "restriction":
        rep = concavity.restriction_logconcavity_scan(
            args.n, args.k, args.bound, jobs=args.jobs
        )
    elif name == "convolution":
        rep = concavity.convolution_random_suite(args.cases, args.bound, args.seed)
    else:  # pragma: no cover - argparse restricts choices
        raise ParseError(f"unknown scanner {name!r}")
    runtime_ms = int((time.monotonic() - t0) * 1000)
    argv = getattr(args, "argv", None)
    if argv is None:
        argv = sys.argv[1:]
    report = build_report(
        name, rep.params, rep.checked, rep.violations, runtime_ms, argv, args.jobs
    )
    return report, (0 if not rep.violations else 1)


def _cmd_verify(args) -> int:
    report, code = run_scan(args)
    write_report(report, args.out)
    return code


def _emit(doc: dict, out_path: str | None) -> None:
    text = json.dumps(doc, sort_keys=True, indent=2)
    if out_path:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logcave",
        description="Exact multiplicity computations and log-concavity verifiers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schur", help="skew Schur expansion")
    p.add_argument("--shape", required=True, help='skew shape, e.g. "3,1/1"')
    p.add_argument("--vars", type=int, required=True, help="number of variables")
    p.add_argument("--basis", choices=["monomial", "schur"], default="monomial")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_schur)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient")
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_lr)

    p = sub.add_parser("restrict", help="restriction multiplicity")
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_restrict)

    p = sub.add_parser("toeplitz", help="totally positive sequence checks")
    p.add_argument("--seq", required=True, help='finitely supported, e.g. "0:1,1:1"')
    p.add_argument("--check", choices=["2x2", "schur"], default="2x2")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--bound", type=int, default=6)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_toeplitz)

    p = sub.add_parser("body", help="valuation body of a polynomial subspace")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--basis", required=True, help='semicolon-separated, e.g. "1; x; y"')
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_body)

    p = sub.add_parser("verify", help="run a verifier scan")
    p.add_argument("scanner", choices=_VERIFIERS)
    p.add_argument("--bound", type=int, default=4, help="weight/entry/length bound")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--pq", type=int, default=2, help="bound on p+q for midpoints")
    p.add_argument("--kmax", type=int, default=3, help="stretch bound for saturation")
    p.add_argument("--n", type=int, default=4, help="ambient rank for restriction")
    p.add_argument("--k", type=int, default=2, help="subgroup rank for restriction")
    p.add_argument("--cases", type=int, default=200, help="random cases for convolution")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    args.argv = list(argv) if argv is not None else sys.argv[1:]
    try:
        return args.func(args)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
