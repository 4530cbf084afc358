"""Command-line surface.

Subcommands: report | semigroup | decompose | core | admissible | verify.
Default output is human-readable text; --format json emits a deterministic
envelope {command, input, result, timing_ms} with sorted keys and every
integer rendered as a decimal string, so consumers never lose precision.

Exit codes: 0 success, 1 verification mismatch, 2 domain error, 3 internal
invariant violation, 64 usage error.
"""

import argparse
import json
import sys
import time

from . import binomial as bn
from . import corepartitions as core
from .exactmath import invariant_report
from .semigroup import NumericalSemigroup

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_DOMAIN = 2
EXIT_INTERNAL = 3
EXIT_USAGE = 64

MAX_N = 10**6          # hard cap on the upper index accepted by the CLI
ELIDE_ABOVE = 1000     # text output elides lists longer than this
VERIFY_CAP = 40        # largest --max-n the verify sweep accepts


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; the contract here is 64
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _stringify(x):
    """Render every integer as a decimal string, recursively; bools stay bools."""
    if isinstance(x, bool):
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_stringify(v) for v in x]
    if isinstance(x, dict):
        return {k: _stringify(v) for k, v in x.items()}
    return x


def _fmt_list(values):
    """Text rendering of an integer list, elided beyond ELIDE_ABOVE."""
    values = list(values)
    if len(values) <= ELIDE_ABOVE:
        return "[" + ", ".join(str(v) for v in values) + "]"
    return f"({len(values)} elements; min {min(values)}, max {max(values)})"


def _check_n(n):
    if n > MAX_N:
        raise UsageError(f"n = {n} exceeds the CLI bound {MAX_N}")


# --- subcommand handlers ---------------------------------------------------
# each returns (input_echo, result_payload, text_lines, exit_code)

def _run_report(args):
    _check_n(args.n)
    spec = bn.bn_spec(args.n)
    report = bn.bn_report(args.n)
    result = {
        "n": report.n,
        "factorization": [list(pair) for pair in spec.factorization],
        "scale": spec.scale,
        "minimal_generators": list(report.minimal_generators),
        "embedding_dimension": report.embedding_dimension,
        "apery_base": report.apery_base,
        "apery_set": list(report.apery_set),
        "frobenius": report.frobenius,
        "genus": report.genus,
        "pseudo_frobenius": list(report.pseudo_frobenius),
        "type": report.type,
        "symmetric": report.symmetric,
        "telescopic": report.telescopic,
    }
    text = [
        f"n                   {report.n}",
        "factorization       " + " * ".join(
            f"{p}^{k}" if k > 1 else str(p) for p, k in spec.factorization),
        f"scale               {spec.scale}",
        f"minimal generators  {_fmt_list(report.minimal_generators)}",
        f"embedding dimension {report.embedding_dimension}",
        f"apery base          {report.apery_base}",
        f"apery set           {_fmt_list(report.apery_set)}",
        f"frobenius           {report.frobenius}",
        f"genus               {report.genus}",
        f"pseudo-frobenius    {_fmt_list(report.pseudo_frobenius)}",
        f"type                {report.type}",
        f"symmetric           {str(report.symmetric).lower()}",
        f"telescopic          {str(report.telescopic).lower()}",
    ]
    return {"n": args.n}, result, text, EXIT_OK


def _run_semigroup(args):
    S = NumericalSemigroup(args.generators)
    table = S.apery_set(args.apery_base)
    genus = S.genus()
    result = {
        "minimal_generators": list(S.generators),
        "multiplicity": S.multiplicity,
        "apery_base": table.base,
        "apery_set": sorted(table.entries),
        "frobenius": S.frobenius(),
        "genus": genus,
        "pseudo_frobenius": S.pseudo_frobenius(),
        "type": S.type(),
        "symmetric": S.is_symmetric(),
        "telescopic": S.is_telescopic(),
    }
    text = [
        f"minimal generators  {_fmt_list(S.generators)}",
        f"multiplicity        {S.multiplicity}",
        f"apery base          {table.base}",
        f"apery set           {_fmt_list(sorted(table.entries))}",
        f"frobenius           {S.frobenius()}",
        f"genus               {genus}",
    ]
    if genus <= core.SET_BOUND:
        # JSON stays complete as long as the gap list is materializable;
        # the text line still elides beyond ELIDE_ABOVE
        gaps = S.gaps()
        result["gaps"] = gaps
        text.append(f"gaps                {_fmt_list(gaps)}")
    else:
        # 1 is always the least gap of a proper semigroup
        result["gaps_elided"] = {"count": genus, "min": 1, "max": S.frobenius()}
        text.append(f"gaps                ({genus} gaps; min 1, max {S.frobenius()})")
    text += [
        f"pseudo-frobenius    {_fmt_list(S.pseudo_frobenius())}",
        f"type                {S.type()}",
        f"symmetric           {str(S.is_symmetric()).lower()}",
        f"telescopic          {str(S.is_telescopic()).lower()}",
    ]
    echo = {"generators": list(args.generators), "apery_base": args.apery_base}
    return echo, result, text, EXIT_OK


def _run_decompose(args):
    _check_n(args.n)
    rep = bn.decompose(args.n, args.m)
    result = {
        "n": rep.target[0],
        "m": rep.target[1],
        "basis": list(rep.basis),
        "coefficients": list(rep.coefficients),
        "value": rep.value,
        "scaled": rep.scaled,
        "binomial": bn.binomial(args.n, args.m),
    }
    terms = " + ".join(f"{c}*{b}" for c, b in zip(rep.coefficients, rep.basis) if c)
    label = f"C({args.n},{args.m})" + ("/p" if rep.scaled else "")
    text = [
        f"target       {label} = {rep.value}",
        f"basis        {_fmt_list(rep.basis)}",
        f"coefficients {_fmt_list(rep.coefficients)}",
        f"identity     {terms or '0'} = {rep.value}",
    ]
    return {"n": args.n, "m": args.m}, result, text, EXIT_OK


def _run_core(args):
    if args.semigroup is not None:
        S_engine = NumericalSemigroup(args.semigroup)
        if S_engine.frobenius() > core.SET_BOUND:
            raise ValueError(
                f"Frobenius number {S_engine.frobenius()} exceeds the bound {core.SET_BOUND}")
        S = core.NumericalSet(S_engine.gaps())
        echo = {"generators": list(args.semigroup)}
    else:
        S = core.numerical_set_from_gaps(args.gaps or ())
        echo = {"gaps": list(args.gaps or ())}
    lam = core.partition_of(S)
    hooks = core.hook_set(lam)
    A = core.a_set(S)
    result = {
        "frobenius": S.frobenius,
        "gaps": S.gaps(),
        "partition": list(lam.parts),
        "hook_set": hooks,
        "a_set_gaps": A.gaps(),
        "a_set_frobenius": A.frobenius,
    }
    a_shown = A.members_below_frobenius() + [A.frobenius + 1]
    text = [
        f"frobenius  {S.frobenius}",
        f"gaps       {_fmt_list(S.gaps())}",
        f"partition  {tuple(lam.parts)}",
        f"hook set   {_fmt_list(hooks)}",
        f"A(S)       {{{', '.join(str(x) for x in a_shown)}, ...}}",
    ]
    return echo, result, text, EXIT_OK


def _run_admissible(args):
    _check_n(args.n)
    out = core.algorithm1(args.n, args.s_seed, args.p, force_base=args.force_base)
    result = {"triple": list(out.triple), "count": out.count}
    text = [
        f"triple  ({out.triple[0]}, {out.triple[1]}, {out.triple[2]})",
        f"count   {out.count}",
    ]
    echo = {"n": args.n, "s_seed": args.s_seed, "p": args.p,
            "force_base": bool(args.force_base)}
    return echo, result, text, EXIT_OK


def _run_verify(args):
    if args.max_n > VERIFY_CAP:
        raise UsageError(f"--max-n {args.max_n} exceeds the cap {VERIFY_CAP}")
    checks = []
    for n in range(4, args.max_n + 1):
        if bn.is_prime(n):
            continue
        cmp = bn.verify_closed_vs_oracle(n, max_n=args.max_n)
        for field, (closed, oracle) in sorted(cmp.fields.items()):
            ok = closed == oracle
            detail = "" if ok else f"closed={closed!r} oracle={oracle!r}"
            checks.append((f"n={n} {field}", ok, detail))
    for label, ok in invariant_report():
        checks.append((label, ok, ""))
    all_passed = all(ok for _, ok, _ in checks)
    result = {
        "checks": [{"name": name, "passed": ok, "detail": detail}
                   for name, ok, detail in checks],
        "all_passed": all_passed,
    }
    width = max(len(name) for name, _, _ in checks)
    text = [f"{'PASS' if ok else 'FAIL'}  {name.ljust(width)}  {detail}".rstrip()
            for name, ok, detail in checks]
    text.append(f"{'all checks passed' if all_passed else 'MISMATCHES FOUND'}")
    return ({"max_n": args.max_n}, result, text,
            EXIT_OK if all_passed else EXIT_MISMATCH)


# --- parser and dispatch ---------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="frobinom",
                     description="Numerical semigroups generated by binomial coefficients")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--max-n", type=int, default=30, help=argparse.SUPPRESS)
    parser.add_argument("--force-base", action="store_true", help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    p = sub.add_parser("report", help="closed-form report for one upper index n")
    p.add_argument("n", type=int)
    common(p)
    p.set_defaults(handler=_run_report)

    p = sub.add_parser("semigroup", help="generic engine on an explicit generating set")
    p.add_argument("generators", type=int, nargs="+")
    p.add_argument("--apery-base", type=int, default=None)
    common(p)
    p.set_defaults(handler=_run_semigroup)

    p = sub.add_parser("decompose", help="write C(n,m) over the minimal system")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    common(p)
    p.set_defaults(handler=_run_decompose)

    p = sub.add_parser("core", help="partition, hook set and A(S) of a numerical set")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--gaps", type=int, nargs="*")
    group.add_argument("--semigroup", type=int, nargs="+")
    common(p)
    p.set_defaults(handler=_run_core)

    p = sub.add_parser("admissible", help="triple completion for the binomial semigroup")
    p.add_argument("n", type=int)
    p.add_argument("s_seed", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--force-base", action="store_true", default=argparse.SUPPRESS)
    common(p)
    p.set_defaults(handler=_run_admissible)

    p = sub.add_parser("verify", help="closed forms vs the generic engine, plus arithmetic self-checks")
    p.add_argument("--max-n", type=int, default=argparse.SUPPRESS)
    common(p)
    p.set_defaults(handler=_run_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        echo, result, text, code = args.handler(args)
    except UsageError as exc:
        print(f"frobinom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"frobinom: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except RuntimeError as exc:
        print(f"frobinom: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    if args.format == "json":
        envelope = {
            "command": args.command,
            "input": echo,
            "result": result,
            "timing_ms": elapsed_ms,
        }
        print(json.dumps(_stringify(envelope), sort_keys=True))
    else:
        for line in text:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
