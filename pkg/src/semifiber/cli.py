"""Command-line interface: ``semifiber <subcommand> [flags]``.

Exit codes: 0 on success, 1 on a domain error (one line ``error: <code>:
<message>``, or a JSON object with ``--json``), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from typing import Callable

from . import construction as cons
from . import oracle
from . import presentation as pres
from . import rank as rk
from .core import (
    NumericalSemigroup,
    apery,
    depth,
    from_generators,
    invariants,
    is_symmetric,
    pseudo_frobenius,
    wilf_margin,
)
from .errors import ParseError, SemigroupError
from .quotient_fiber import (
    FiberContext,
    enumerate_fiber,
    in_fiber,
    md_closure,
    quotient,
    sample_md_set,
)


def parse_semigroup(text: str) -> NumericalSemigroup:
    """``"6,8,10,7,9"`` -> <6,7,8,9,10>."""
    parts = [p.strip() for p in text.split(",")]
    try:
        gens = [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"expected comma-separated positive integers, got {text!r}") from None
    if not gens or min(gens) <= 0:
        raise ParseError(f"expected comma-separated positive integers, got {text!r}")
    return from_generators(gens)


def csv(values) -> str:
    return ",".join(map(str, values))


def emit(record: dict, as_json: bool) -> str:
    """One record as single-line JSON, or as ``key: value`` lines."""
    if as_json:
        return json.dumps(record, separators=(",", ":"))
    lines = []
    for key, value in record.items():
        if isinstance(value, (list, tuple)) and all(isinstance(v, int) for v in value):
            value = csv(value)
        elif isinstance(value, (dict, list)):
            value = json.dumps(value, separators=(",", ":"))
        elif isinstance(value, bool):
            value = str(value).lower()
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def emit_error(err: SemigroupError, as_json: bool) -> str:
    if as_json:
        return json.dumps({"error": err.code, "message": str(err)}, separators=(",", ":"))
    return f"error: {err.code}: {err}"


@dataclass
class Output:
    records: list[dict]
    text: str | None = None  # replaces the text rendering when set


# --- oracle cross-checks ----------------------------------------------------


def _snapshot(S: NumericalSemigroup) -> oracle.BoundedSet:
    return oracle.oracle_closure(S.msg, 2 * S.conductor + S.msg[-1] + 1)


def _oracle_invariants_match(S: NumericalSemigroup) -> bool:
    if S.is_naturals:
        return True
    ref = oracle.oracle_invariants(_snapshot(S))
    mine = invariants(S).to_json()
    return all(mine[k] == ref[k] for k in mine) and list(S.msg) == ref["msg"]


# --- handlers ---------------------------------------------------------------


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise _Usage(f"{args.command} requires {', '.join(missing)}")


class _Usage(Exception):
    pass


def _ctx(args) -> FiberContext:
    _need(args, "delta", "d")
    return FiberContext(parse_semigroup(args.delta), args.d)


def cmd_invariants(args) -> Output:
    _need(args, "sgp")
    S = parse_semigroup(args.sgp)
    rec = invariants(S).to_json()
    rec["msg"] = list(S.msg)
    if args.oracle:
        rec["oracle_match"] = _oracle_invariants_match(S)
    return Output([rec])


def cmd_quotient(args) -> Output:
    _need(args, "sgp", "d")
    S = parse_semigroup(args.sgp)
    q = quotient(S, args.d)
    rec = {"msg": list(q.msg)}
    if args.oracle:
        snap = oracle.oracle_quotient(_snapshot(S), args.d)
        rec["oracle_match"] = q.is_naturals or oracle.oracle_msg(snap) == list(q.msg)
    return Output([rec], text=str(q))


def cmd_multiple(args) -> Output:
    _need(args, "a")
    spec = cons.DeltaDaSpec(_ctx(args), args.a)
    el = cons.build_delta_d_a(spec)
    S = el.semigroup
    predicted = cons.predicted_invariants(spec).to_json()
    actual = invariants(S).to_json()
    constructed = {k: actual[k] for k in predicted}
    rec = el.to_json()
    rec["predicted"] = predicted
    rec["constructed"] = constructed
    rec["apery"] = cons.predicted_apery(spec).elements()
    rec["depth"] = cons.predicted_depth(spec)
    same = (
        predicted == constructed
        and rec["apery"] == apery(S, S.multiplicity).elements()
        and rec["depth"] == depth(S)
    )
    rec["verdict"] = "MATCH" if same else "MISMATCH"
    if args.oracle:
        rec["oracle_match"] = _oracle_invariants_match(S)
    return Output([rec])


def cmd_rank_one(args) -> Output:
    _need(args, "x")
    spec = rk.RankOneSpec(_ctx(args), args.x)
    el = rk.rank_one_build(spec)
    rec = el.to_json()
    rec["predicted"] = rk.rank_one_invariants(spec).to_json()
    rec["pf"] = rk.rank_one_pf(spec)
    S = el.semigroup
    rec["formulas_match"] = (
        rec["predicted"] == {"frobenius": S.frobenius, "genus": S.genus}
        and rec["pf"] == pseudo_frobenius(S)
    )
    if args.oracle:
        rec["oracle_match"] = oracle.oracle_pf(_snapshot(S)) == rec["pf"]
    return Output([rec])


def cmd_fiber_check(args) -> Output:
    _need(args, "sgp")
    ctx = _ctx(args)
    el = in_fiber(ctx, parse_semigroup(args.sgp))
    return Output([el.to_json()])


def cmd_fiber_enum(args) -> Output:
    _need(args, "bound")
    ctx = _ctx(args)
    elements = enumerate_fiber(ctx, args.bound)
    text = "\n".join(f"{el.semigroup}  rank={el.rank}" for el in elements)
    return Output([el.to_json() for el in elements], text=text)


def cmd_rank(args) -> Output:
    _need(args, "sgp")
    ctx = _ctx(args)
    S = parse_semigroup(args.sgp)
    split = rk.embedding_dim_via_rank(ctx, S)
    rec = {
        "rank": split.rank,
        "relative_msg": list(split.relative_msg),
        "mu": rk.mu(ctx, S),
        "e": split.e,
        "e_delta": ctx.delta.embedding_dimension,
        "absorbed": list(split.absorbed),
    }
    return Output([rec])


def cmd_apery(args) -> Output:
    _need(args, "sgp")
    S = parse_semigroup(args.sgp)
    base = S.multiplicity if args.x is None else args.x
    rec = apery(S, base).to_json()
    if args.oracle:
        rec["oracle_match"] = oracle.oracle_apery(_snapshot(S), base) == rec["apery"]
    return Output([rec])


def cmd_pf(args) -> Output:
    _need(args, "sgp")
    S = parse_semigroup(args.sgp)
    pf = pseudo_frobenius(S)
    rec = {"pf": pf, "type": len(pf), "symmetric": is_symmetric(S)}
    if args.oracle:
        rec["oracle_match"] = oracle.oracle_pf(_snapshot(S)) == pf
    return Output([rec])


def cmd_presentation(args) -> Output:
    if args.delta is not None:
        _need(args, "a")
        spec = cons.DeltaDaSpec(_ctx(args), args.a)
        S = cons.build_delta_d_a(spec).semigroup
        P = pres.lifted_presentation(spec)
    else:
        _need(args, "sgp")
        S = parse_semigroup(args.sgp)
        P = pres.minimal_presentation(S)
    rec = P.to_json()
    if args.oracle:
        rec["verified"] = pres.verify_presentation(S, P)
    return Output([rec])


def cmd_wilf(args) -> Output:
    if args.delta is not None:
        _need(args, "a")
        spec = cons.DeltaDaSpec(_ctx(args), args.a)
        ident = cons.wilf_identity_margin(spec)
        rec = ident.to_json()
        rec["holds"] = ident.lhs == sum(ident.decomposition)
        return Output([rec])
    _need(args, "sgp")
    return Output([{"margin": wilf_margin(parse_semigroup(args.sgp))}])


def cmd_depth(args) -> Output:
    if args.delta is not None:
        _need(args, "a")
        spec = cons.DeltaDaSpec(_ctx(args), args.a)
        return Output([{"depth": cons.predicted_depth(spec)}])
    _need(args, "sgp")
    return Output([{"depth": depth(parse_semigroup(args.sgp))}])


def cmd_max_rank(args) -> Output:
    ctx = _ctx(args)
    bound, el = rk.max_rank_witness(ctx)
    rec = {"bound": bound, **el.to_json()}
    return Output([rec])


def cmd_roundtrip(args) -> Output:
    """Sample an md-set with the given seed and check its closure lands in the fiber."""
    ctx = _ctx(args)
    rng = random.Random(args.seed)
    X = sample_md_set(ctx, rng)
    M = md_closure(ctx, X)
    q = quotient(M, ctx.d)
    rec = {"x": X, "msg": list(M.msg), "quotient": list(q.msg), "ok": q.msg == ctx.delta.msg}
    return Output([rec])


COMMANDS: dict[str, tuple[Callable[[argparse.Namespace], Output], str]] = {
    "invariants": (cmd_invariants, "m, F, g, e, n, c of --sgp"),
    "quotient": (cmd_quotient, "the quotient --sgp / --d"),
    "multiple": (cmd_multiple, "build Delta_d(a) from --delta, --d, --a"),
    "rank-one": (cmd_rank_one, "build <x> + d*Delta from --delta, --d, --x"),
    "fiber-check": (cmd_fiber_check, "is --sgp in the fiber of --delta under --d"),
    "fiber-enum": (cmd_fiber_enum, "fiber elements with relative generators <= --bound"),
    "rank": (cmd_rank, "rank, relative generators, mu and e of --sgp"),
    "apery": (cmd_apery, "Apery set of --sgp with respect to --x (default: multiplicity)"),
    "pf": (cmd_pf, "pseudo-Frobenius numbers of --sgp"),
    "presentation": (cmd_presentation, "minimal presentation of --sgp, or lifted for --delta/--d/--a"),
    "wilf": (cmd_wilf, "Wilf margin of --sgp, or the identity for --delta/--d/--a"),
    "depth": (cmd_depth, "depth of --sgp, or the predicted depth for --delta/--a"),
    "max-rank": (cmd_max_rank, "maximal rank in the fiber and a witness"),
    "roundtrip": (cmd_roundtrip, "seeded md-set closure check"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semifiber", description="Numerical semigroup quotients and fibers.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--sgp", help="generators, comma-separated")
        p.add_argument("--delta", help="generators of Delta, comma-separated")
        p.add_argument("--d", type=int)
        p.add_argument("--a", type=int)
        p.add_argument("--x", type=int)
        p.add_argument("--bound", type=int)
        p.add_argument("--json", action="store_true", help="single-line JSON records")
        p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
        p.add_argument("--seed", type=int, default=0)
    return parser


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = COMMANDS[args.command][0]
    try:
        result = handler(args)
    except _Usage as exc:
        parser.print_usage(err)
        print(f"semifiber: error: {exc}", file=err)
        return 2
    except SemigroupError as exc:
        print(emit_error(exc, args.json), file=out if args.json else err)
        return 1
    except ValueError as exc:
        exc.code = "invalid-argument"
        print(emit_error(exc, args.json), file=out if args.json else err)
        return 1
    if args.json:
        for rec in result.records:
            print(emit(rec, True), file=out)
    elif result.text is not None:
        print(result.text, file=out)
    else:
        print("\n\n".join(emit(rec, False) for rec in result.records), file=out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
