"""Command-line front end: ``fyperm <command> ...``.

Exit status is 0 on success, 1 when a verification suite fails and 2 on
usage errors.  Words are 1-based and space-separated by default;
``--paper-layout`` switches to the 0-based compact strings of the n=4 tables.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import codec, enumerator, generator, gflab, statistics, verify
from .perm import Permutation, fixed_point_count, inversion_count
from .poly import Poly


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    exit_code: int = 0
    lines: list[str] = field(default_factory=list)
    document: object = None  # set instead of lines under --json
    out: str | None = None

    def render(self) -> str:
        if self.document is not None:
            return json.dumps(self.document) + "\n"
        return "".join(line + "\n" for line in self.lines)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


# -- rendering helpers ------------------------------------------------------------


def _fraction(c: Fraction) -> list[int]:
    return [c.numerator, c.denominator]


def _pgf_json(pgf: Poly) -> list[list[int]]:
    return [_fraction(c) for c in pgf.coeffs_u()]


def _render_perm(p: Permutation, table: bool) -> str:
    return p.compact() if table else str(p)


def _parse_perm(text: str, table: bool) -> Permutation:
    text = text.strip()
    if table:
        return Permutation.from_compact(text.replace(",", "").replace(" ", ""))
    return Permutation.from_word(codec.parse_digits(text))


def _render_code(code, encoding: str, table: bool) -> str:
    if encoding == "fy":
        return code.table_layout() if table else str(code)
    if encoding == "dual":
        return codec.dual_table_layout(code) if table else ",".join(map(str, code))
    # inversion digits are 0-based in both layouts
    return "".join(map(str, code.digits)) if table else ",".join(map(str, code.digits))


def _code_json(code, encoding: str) -> list[int]:
    if encoding == "fy":
        return list(code.digits)
    if encoding == "dual":
        return list(code)
    return list(code.digits)


def _parse_code(text: str, n: int, encoding: str, strict: bool, table: bool):
    if encoding == "fy":
        return codec.TriangularCode.parse(text, n, strict=strict, zero_based=table)
    if encoding == "dual":
        digits = codec.parse_dual(text, n, zero_based=table)
        if strict and any(c >= k for k, c in zip(range(2, n + 1), digits)):
            raise ValueError("strict dual digits need c_k <= k-1")
        return digits
    if strict:
        raise ValueError("the inversion encoding has no strict form")
    return codec.InversionCode(n, tuple(codec.parse_digits(text)))


def _decode(code, encoding: str, strict: bool) -> Permutation:
    if encoding == "fy":
        return codec.fy_decode(code)
    if encoding == "dual":
        return codec.dual_decode(code, strict)
    return codec.inv_decode(code)


# -- commands ---------------------------------------------------------------------


def cmd_gen(args) -> CommandResult:
    seed = args.seed
    if args.entropy:
        seed = random.SystemRandom().getrandbits(64)
        print(f"seed: {seed}", file=sys.stderr)
    rng = generator.RandomSource(seed, args.stream)
    m = {"fy": 0, "sattolo": 1}.get(args.algo, args.m)
    if args.algo == "general" and args.m is None:
        raise UsageError("--algo general needs --m")
    items = []
    for _ in range(args.count):
        perm, trace = generator.general_m(args.n, m, rng)
        items.append((perm, trace))
    if args.json:
        return CommandResult(document={
            "n": args.n, "algo": args.algo, "m": m, "seed": seed, "stream": args.stream,
            "items": [
                {"word": list(p.word), **({"trace": [list(s) for s in t.steps]} if args.trace else {})}
                for p, t in items
            ],
        })
    lines = []
    for p, t in items:
        text = _render_perm(p, args.paper_layout)
        lines.append(f"{text}  {t}" if args.trace else text)
    return CommandResult(lines=lines)


def cmd_encode(args) -> CommandResult:
    p = _parse_perm(args.word, args.paper_layout)
    code = codec.encode_as(p, args.encoding, args.strict)
    if args.json:
        return CommandResult(document={"n": p.n, "encoding": args.encoding, "strict": args.strict,
                                       "code": _code_json(code, args.encoding)})
    return CommandResult(lines=[_render_code(code, args.encoding, args.paper_layout)])


def cmd_decode(args) -> CommandResult:
    code = _parse_code(args.code, args.n, args.encoding, args.strict, args.paper_layout)
    p = _decode(code, args.encoding, args.strict)
    if args.json:
        return CommandResult(document={"n": p.n, "encoding": args.encoding, "word": list(p.word)})
    return CommandResult(lines=[_render_perm(p, args.paper_layout)])


def cmd_rank(args) -> CommandResult:
    code = codec.TriangularCode.parse(args.code, args.n, strict=args.strict, zero_based=args.paper_layout)
    r = codec.rank(code, args.order)
    return CommandResult(document={"rank": r} if args.json else None, lines=[str(r)])


def cmd_unrank(args) -> CommandResult:
    code = codec.unrank(args.rank, args.n, args.order, args.strict)
    p = codec.fy_decode(code)
    if args.json:
        return CommandResult(document={"code": list(code.digits), "word": list(p.word)})
    return CommandResult(lines=[f"{_render_code(code, 'fy', args.paper_layout)} -> {_render_perm(p, args.paper_layout)}"])


def cmd_enum(args) -> CommandResult:
    if args.order == "lex":
        stream = ((code, perm, None) for code, perm in enumerator.lex_stream(args.n, args.family, args.encoding))
    else:
        if args.family == "cycle" and args.encoding != "fy":
            raise UsageError("the cycle Gray code runs over Fisher-Yates codes")
        stream = enumerator.gray_code_stream(args.n, args.family, args.encoding)
    side = enumerator.natural_side(args.encoding)
    items, prev = [], None
    for code, perm, step in stream:
        tag = None
        if args.deltas and prev is not None:
            d = step.induced if step is not None else enumerator.delta(prev, perm, side)
            tag = enumerator.classify_delta(d)
        items.append((code, perm, tag))
        prev = perm
    if args.json:
        return CommandResult(document=[
            {"code": list(code) if isinstance(code, tuple) else _code_json(code, args.encoding),
             "word": list(perm.word), **({"delta": tag} if args.deltas else {})}
            for code, perm, tag in items
        ])
    lines = []
    for _, perm, tag in items:
        text = _render_perm(perm, args.paper_layout)
        lines.append(f"{text} {tag or 'start'}" if args.deltas else text)
    return CommandResult(lines=lines)


def _mc_pgf(args) -> Poly:
    if args.stat in (statistics.MOVES, statistics.DISTANCE):
        law = statistics.monte_carlo_distribution(args.n, args.p, args.stat, args.samples, args.seed)
    else:
        rng = generator.RandomSource(args.seed)
        counts: dict[int, int] = {}
        for _ in range(args.samples):
            perm, trace = generator.fisher_yates(args.n, rng)
            if args.stat == "fixed":
                v = fixed_point_count(perm)
            elif args.stat == "inversions":
                v = inversion_count(perm)
            else:
                v = statistics.rightward_total(trace)
            counts[v] = counts.get(v, 0) + 1
        law = {k: Fraction(c, args.samples) for k, c in counts.items()}
    return Poly({(k, 0): c for k, c in law.items()})


def _stats_pgf(args) -> Poly:
    n, p, stat, mode = args.n, args.p, args.stat, args.mode
    if mode == "mc":
        return _mc_pgf(args)
    if stat in (statistics.MOVES, statistics.DISTANCE):
        if mode == "exact":
            return statistics.exact_distribution(n, p, stat, bound=args.bound)
        if mode == "recurrence":
            return statistics.phi(n, p) if stat == statistics.MOVES else statistics.xi(n, p)
        if stat == statistics.MOVES:
            return statistics.phi_closed(n, p)
        if p != n:
            raise UsageError("the closed distance form covers p = n only")
        return statistics.xi_nn_closed(n)
    if stat == "fixed":
        if mode == "recurrence":
            raise UsageError("fixed points have no recurrence mode; use exact or closed")
        return statistics.fixed_point_distribution(n, "enumerate" if mode == "exact" else "egf", bound=args.bound)
    if mode == "recurrence":
        raise UsageError(f"{stat} has no recurrence mode; use exact or closed")
    if mode == "closed":
        return gflab.mahonian_product(n) / math.factorial(n)
    if stat == "inversions":
        return statistics.inversion_distribution(n, bound=args.bound)
    return statistics.rightward_distribution(n, bound=args.bound)


def cmd_stats(args) -> CommandResult:
    args.stat = statistics.stat_kind(args.stat) if args.stat in ("moves", "dist", "distance") else args.stat
    if args.p is None:
        args.p = args.n
    if args.stat in (statistics.MOVES, statistics.DISTANCE) and not 1 <= args.p <= args.n:
        raise UsageError(f"--p must lie in 1..{args.n}")
    pgf = _stats_pgf(args)
    mean = statistics.pgf_mean(pgf)
    if args.json:
        doc = {"n": args.n, "stat": args.stat, "mode": args.mode, "pgf": _pgf_json(pgf), "mean": _fraction(mean)}
        if args.stat in (statistics.MOVES, statistics.DISTANCE):
            doc["p"] = args.p
        return CommandResult(document=doc)
    return CommandResult(lines=[f"pgf: {pgf}", f"mean: {mean}"])


def cmd_series(args) -> CommandResult:
    series = gflab.GF_BUILDERS[args.gf](args.order)
    if args.json:
        return CommandResult(document={"gf": args.gf, **series.to_json()})
    lines = [] if series.den == Poly.const(1) else [f"denominator: {series.den}"]
    lines += [f"x^{n}: {c}" for n, c in enumerate(series.coeffs)]
    return CommandResult(lines=lines)


def cmd_verify(args) -> CommandResult:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    lines, docs, failed = [], [], False
    for name in names:
        res = verify.run_suite(name, args.n_max)
        failed |= not res.ok
        docs.append({"suite": name, "ok": res.ok, "lines": res.lines})
        lines += [f"[{name}]"] + res.lines + [f"{name}: {'PASS' if res.ok else 'FAIL'}"]
    code = 1 if failed else 0
    if args.json:
        return CommandResult(code, document=docs if len(docs) > 1 else docs[0])
    return CommandResult(code, lines)


# -- parser -----------------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--paper-layout", action="store_true", help="0-based compact words and codes")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = _Parser(prog="fyperm", description="Fisher-Yates and Sattolo permutations and their exact statistics.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="sample permutations")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--algo", choices=["fy", "sattolo", "general"], default="fy")
    p.add_argument("--m", type=int, help="shift for --algo general")
    p.add_argument("--count", type=_positive, default=1)
    p.add_argument("--seed", type=_seed, default=generator.DEFAULT_SEED)
    p.add_argument("--stream", type=int, default=0, help="independent substream index")
    p.add_argument("--entropy", action="store_true", help="seed from the OS; the seed goes to stderr")
    p.add_argument("--trace", action="store_true", help="append the k:j swap pairs")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("encode", parents=[common], help="permutation to code")
    p.add_argument("--word", required=True, help='e.g. "3 4 2 1", or "2310" with --paper-layout')
    p.add_argument("--encoding", choices=["fy", "dual", "inv"], default="fy")
    p.add_argument("--strict", action="store_true", help="n-cycles with strict codes")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="code to permutation")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--code", required=True, help="fy digits j_n..j_2, dual c_2..c_n, or inversion d_1..d_n")
    p.add_argument("--encoding", choices=["fy", "dual", "inv"], default="fy")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=cmd_decode)

    for name, func in (("rank", cmd_rank), ("unrank", cmd_unrank)):
        p = sub.add_parser(name, parents=[common], help=f"{name} a Fisher-Yates code")
        p.add_argument("--n", type=_positive, required=True)
        if name == "rank":
            p.add_argument("--code", required=True)
        else:
            p.add_argument("--rank", type=int, required=True)
        p.add_argument("--order", choices=["big", "little", codec.BIG_ENDIAN, codec.LITTLE_ENDIAN], default="big")
        p.add_argument("--strict", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("enum", parents=[common], help="list a whole family")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--family", choices=["perm", "cycle"], default="perm")
    p.add_argument("--order", choices=["lex", "gray"], default="lex")
    p.add_argument("--encoding", choices=["fy", "dual", "inv"], default="fy")
    p.add_argument("--deltas", action="store_true", help="tag each step with its quotient class")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("stats", parents=[common], help="distribution of a statistic")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--p", type=int, help="symbol, default n")
    p.add_argument("--stat", choices=["moves", "dist", "total-dist", "fixed", "inversions"], default="moves")
    p.add_argument("--mode", choices=["exact", "recurrence", "closed", "mc"], default="recurrence")
    p.add_argument("--samples", type=_positive, default=100_000)
    p.add_argument("--seed", type=_seed, default=generator.DEFAULT_SEED)
    p.add_argument("--bound", type=_positive, default=statistics.EXHAUSTIVE_BOUND,
                   help="largest n enumerated in exact mode")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("series", parents=[common], help="truncated generating function")
    p.add_argument("--gf", choices=sorted(gflab.GF_BUILDERS), required=True)
    p.add_argument("--order", type=_positive, default=8)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=list(verify.SUITES) + ["all"], default="all")
    p.add_argument("--n-max", type=_positive)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        result = args.func(args)
    except (UsageError, ValueError) as exc:
        return CommandResult(2, [str(exc)])
    result.out = args.out
    return result


def main(argv: Sequence[str] | None = None) -> int:
    try:
        result = run(argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if result.exit_code == 2:
        print("\n".join(result.lines), file=sys.stderr)
        return 2
    text = result.render()
    if result.out:
        with open(result.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
