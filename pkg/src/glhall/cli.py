"""Command-line entry point: ``glhall {compute,tableaux,tree,verify}``.

Exit codes: 0 success, 2 bad input, 3 a violated internal invariant (or a
failed verification for ``verify``).
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from fractions import Fraction
from typing import Sequence

from .folding import FoldingTree, InvariantViolation, L_table, c_tableau
from .kernel import KernelError
from .laurent import HalfLaurent, NotDivisible
from .residue import IncompatibleColumn, MixedMovement
from .roots import RootDatum, Vector
from .tableaux import (
    Shape,
    TableauError,
    content,
    enumerate_all_ssyt,
    enumerate_ssyt,
    parse_tableau,
    vertex_context,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVARIANT = 3


class UsageError(ValueError):
    pass


# ---- (de)serialisation helpers -----------------------------------------------------
def coord_to_json(c: Fraction):
    return int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def coweight_to_json(x: Sequence[Fraction]) -> list:
    return [coord_to_json(Fraction(c)) for c in x]


def coweight_from_json(data: Sequence) -> Vector:
    return tuple(Fraction(c) for c in data)


def poly_to_json(p: HalfLaurent) -> list[list[int]]:
    return p.q_pairs()


def poly_from_json(data: Sequence[Sequence[int]]) -> HalfLaurent:
    return HalfLaurent((2 * e, c) for e, c in data)


def tableau_to_json(T) -> list[list[int]]:
    return [list(c) for c in T.columns]


def _fmt_vec(x: Sequence[Fraction]) -> str:
    return "(" + ",".join(str(c) for c in x) + ")"


def _parse_vector(text: str, what: str) -> Vector:
    try:
        out = tuple(Fraction(tok.strip()) for tok in text.split(",") if tok.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse {what} {text!r}") from exc
    if any(c.denominator > 2 for c in out):
        raise UsageError(f"{what} coordinates must have denominator at most 2")
    return out


def _datum(args) -> RootDatum:
    try:
        return RootDatum(args.family, args.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _lambda(args, datum: RootDatum) -> Vector:
    if (args.omega is None) == (args.eps is None):
        raise UsageError("give exactly one of --omega and --eps")
    if args.omega is not None:
        coeffs = _parse_vector(args.omega, "--omega")
        if any(c.denominator != 1 for c in coeffs):
            raise UsageError("--omega takes nonnegative integers")
        return datum.omega_to_eps([int(c) for c in coeffs])
    lam = _parse_vector(args.eps, "--eps")
    return Shape.from_eps(datum, lam).lam


def _mu(args, datum: RootDatum) -> Vector | None:
    if args.mu is None:
        return None
    mu = _parse_vector(args.mu, "--mu")
    if len(mu) != datum.dimension:
        raise UsageError(f"--mu needs {datum.dimension} coordinates")
    if not datum.is_coweight(mu) or not datum.is_dominant(mu):
        raise UsageError(f"--mu {args.mu} is not a dominant coweight of {datum}")
    return mu


def _select(table: dict, mu: Vector | None, datum: RootDatum) -> dict:
    if mu is None:
        return table
    key = datum.canonical(mu)
    hits = {m: p for m, p in table.items() if datum.canonical(m) == key}
    return hits or {mu: HalfLaurent()}


# ---- subcommands --------------------------------------------------------------------
def cmd_compute(args) -> int:
    datum = _datum(args)
    lam = _lambda(args, datum)
    mu = _mu(args, datum)
    table = _select(L_table(datum, lam), mu, datum)
    records = [
        {
            "family": datum.family,
            "rank": datum.rank,
            "lambda": coweight_to_json(lam),
            "mu": coweight_to_json(m),
            "L": poly_to_json(p),
        }
        for m, p in table.items()
    ]
    if args.format == "json":
        out = records[0] if mu is not None else records
        print(json.dumps(out))
    else:
        for m, p in table.items():
            print(f"mu={_fmt_vec(m)}: {p}")
    return EXIT_OK


def cmd_tableaux(args) -> int:
    datum = _datum(args)
    lam = _lambda(args, datum)
    mu = _mu(args, datum)
    shape = Shape.from_eps(datum, lam)
    tabs = enumerate_ssyt(shape, mu) if mu is not None else enumerate_all_ssyt(shape)
    rows = [(T, c_tableau(T)) for T in tabs]
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "tableau": T.to_text(),
                        "columns": tableau_to_json(T),
                        "content": coweight_to_json(content(T)),
                        "c": poly_to_json(c),
                    }
                    for T, c in rows
                ]
            )
        )
    else:
        for k, (T, c) in enumerate(rows):
            if k:
                print()
            print(f"# content {_fmt_vec(content(T))}  c(T) = {c}")
            print(T.to_text() if T.columns else "(empty)")
    return EXIT_OK


def _tableau_text(raw: str) -> str:
    return "\n".join(part for part in raw.replace(";", "\n").replace("/", "\n").splitlines())


def cmd_tree(args) -> int:
    datum = _datum(args)
    T = parse_tableau(_tableau_text(args.tableau), datum)
    if T.r < 1:
        raise UsageError("the tableau needs at least two columns")
    i = args.pair
    if not 0 <= i < T.r:
        raise UsageError(f"--pair must lie in 0..{T.r - 1}")
    tree = FoldingTree(T.columns[i], T.columns[i + 1], vertex_context(T, i))
    sys.stdout.write(tree.to_dot())
    return EXIT_OK


def _sweep(datum: RootDatum, bound: int) -> list[Vector]:
    return [
        datum.omega_to_eps(om)
        for om in itertools.product(range(bound + 1), repeat=datum.rank)
        if sum(om) <= bound
    ]


def _perturb(table: dict) -> dict:
    table = dict(table)
    key = next(iter(table))
    table[key] = table[key] + 1
    return table


def cmd_verify(args) -> int:
    from . import oracle
    from .macdonald import macdonald_table

    datum = _datum(args)
    if args.sweep is not None:
        if args.omega is not None or args.eps is not None:
            raise UsageError("--sweep replaces --omega/--eps")
        lams = _sweep(datum, args.sweep)
    else:
        lams = [_lambda(args, datum)]
    against = args.against
    if against in ("macdonald", "both") and datum.family != "A":
        if against == "macdonald":
            raise UsageError("the Macdonald comparison is type A only")
        against = "definition"
    cases = []
    ok = True
    for lam in lams:
        table = L_table(datum, lam)
        if args.inject_fault:
            table = _perturb(table)
        case: dict = {"lambda": coweight_to_json(lam)}
        if against in ("definition", "both"):
            rep = oracle.verify(datum, lam, table, k=args.points, seed=args.seed)
            case["definition"] = rep.to_dict()
            ok &= rep.passed
        if against in ("macdonald", "both"):
            mac = macdonald_table(datum, lam)
            same = mac == table
            case["macdonald"] = {"equal": same}
            ok &= same
        cases.append(case)
    if args.format == "json":
        print(json.dumps({"family": datum.family, "rank": datum.rank, "passed": ok, "cases": cases}))
    else:
        for case in cases:
            parts = []
            if "definition" in case:
                parts.append("definition " + ("ok" if case["definition"]["passed"] else "FAILED"))
            if "macdonald" in case:
                parts.append("macdonald " + ("ok" if case["macdonald"]["equal"] else "FAILED"))
            print(f"lambda={_fmt_vec(coweight_from_json(case['lambda']))}: " + ", ".join(parts))
        print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_INVARIANT


# ---- parser --------------------------------------------------------------------------
def _common(p: argparse.ArgumentParser, weight: bool = True) -> None:
    p.add_argument("family", choices=["A", "B", "C"])
    p.add_argument("rank", type=int)
    if weight:
        p.add_argument("--omega", help="lambda as a1,...,an in fundamental coweights")
        p.add_argument("--eps", help="lambda in epsilon coordinates, e.g. 1/2,1/2")
    p.add_argument("--format", choices=["text", "json"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="glhall", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="L_{lambda,mu}(q), for one mu or all of them")
    _common(p)
    p.add_argument("--mu")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("tableaux", help="semistandard tableaux with their c(T)")
    _common(p)
    p.add_argument("--mu")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("tree", help="DOT dump of one column pair's folding tree")
    _common(p, weight=False)
    p.add_argument("--tableau", required=True, help="rows separated by ';' or '/', bars as trailing \"'\"")
    p.add_argument("--pair", type=int, default=0, help="left column index of the pair")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("verify", help="check L tables against the definition and Macdonald")
    _common(p)
    p.add_argument("--sweep", type=int, help="every lambda with a1+...+an at most this")
    p.add_argument("--points", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--against", choices=["definition", "macdonald", "both"], default="both")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, TableauError, IncompatibleColumn) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvariantViolation, KernelError, MixedMovement, NotDivisible) as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
