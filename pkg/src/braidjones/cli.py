"""Command-line interface.

Subcommands cover single evaluations (``jones``), family sweeps
(``family``), generating-function coefficients (``genfun``), stability
classification and degree prediction (``classify``), degree-bound audits
(``audit``), the leading-term census (``tables``), unit exponent search
(``units``), the expansion-vs-state-sum benchmark (``bench``), and the
built-in consistency checks (``selftest``).

Exit codes: 0 on success, 1 on usage or parse errors (including cost
caps), 2 when a verified structural property fails on actual data.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import re
import sys
import time
from typing import Sequence

from . import analysis
from .analysis import InvariantViolation, Stability
from .braid import BoundsError, parse_braid, parse_family
from .bracket import CapExceeded, jones_via_bracket
from .engine import FamilySweep, GeneratingFunction, jones
from .laurent import LaurentPoly, ParseError
from .selftest import run_selftest


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        # values like -1..1 or -3,1 are data, not flags
        self._negative_number_matcher = re.compile(r"^-\d")

    # usage problems exit 1, not argparse's default 2
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _record(source: str, value: LaurentPoly) -> dict:
    return {
        "input": source,
        "polynomial": value.as_json_dict(),
        "degree": None if value.is_zero() else int(value.degree),
        "order": None if value.is_zero() else int(value.order),
        "leading": value.leading,
    }


def _emit(args: argparse.Namespace, source: str, value: LaurentPoly) -> None:
    if args.json:
        print(json.dumps(_record(source, value)))
    else:
        print(value.text())


_RANGE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")


def _parse_range(text: str) -> tuple[int, int]:
    match = _RANGE.match(text)
    if not match:
        raise ParseError(f"range must look like -2..5, got {text!r}", 0)
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo > hi:
        raise ParseError(f"empty range {text!r}", 0)
    return lo, hi


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ParseError(f"need a comma-separated integer list, got {text!r}", 0)


# -- subcommand bodies ---------------------------------------------------


def _cmd_jones(args: argparse.Namespace) -> int:
    word = parse_braid(args.braid)
    if args.engine == "oracle":
        value = jones_via_bracket(
            word, args.max_naive_crossings, args.max_strands
        )
    else:
        value = jones(word)
    _emit(args, word.text(), value)
    return 0


def _cmd_family(args: argparse.Namespace) -> int:
    family = parse_family(args.family)
    lo, hi = _parse_range(args.range)
    sweep = FamilySweep(family)
    for e in range(lo, hi + 1):
        _emit(args, f"{family.text()} @ {e}", sweep[e])
    return 0


def _cmd_genfun(args: argparse.Namespace) -> int:
    indices = _parse_ints(args.indices)
    gf = GeneratingFunction.build(args.strands, indices)
    if args.coeff is not None:
        exps = _parse_ints(args.coeff)
        value = gf.coefficient(exps)
        _emit(args, f"t^{exps}", value)
        return 0
    for exps in itertools.product(range(args.upto + 1), repeat=len(indices)):
        value = gf.coefficient(exps)
        if args.json:
            print(json.dumps(_record(f"t^{exps}", value)))
        else:
            print(f"{','.join(map(str, exps))}: {value.text()}")
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    family = parse_family(args.family)
    sweep = FamilySweep(family)
    e = args.at
    v_e, v_e1 = sweep[e], sweep[e + 1]
    cls = analysis.classify_pair(v_e, v_e1)
    out: dict = {
        "input": f"{family.text()} @ {e}",
        "kind": cls.kind.value,
        "coeff_sum": cls.coeff_sum,
    }
    if not args.json:
        print(f"kind: {cls.kind.value}")
        print(f"coeff-sum: {cls.coeff_sum}")
    if args.predict is not None:
        m = args.predict
        v_e2 = sweep[e + 2] if (
            cls.kind is Stability.CRITICAL and cls.coeff_sum == 0
        ) else None
        prediction = analysis.predict_degrees(cls, v_e, v_e1, m, v_e2)
        if prediction is analysis.RECLASSIFY:
            out["prediction"] = "reclassify"
            if not args.json:
                print(f"prediction: critical again at {e + 1}; classify there")
        else:
            actual = sweep[e + m]
            agree = (
                int(actual.degree) == prediction.degree
                and actual.leading == prediction.coeff
            )
            out["prediction"] = {
                "degree": prediction.degree,
                "leading": prediction.coeff,
            }
            out["actual"] = {
                "degree": int(actual.degree),
                "leading": actual.leading,
            }
            out["agree"] = agree
            if not args.json:
                print(
                    f"predicted V({e}+{m}): degree {prediction.degree}, "
                    f"leading {prediction.coeff}"
                )
                print(
                    f"actual: degree {int(actual.degree)}, "
                    f"leading {actual.leading}"
                )
                print(f"agree: {str(agree).lower()}")
            if not agree:
                raise InvariantViolation(
                    f"degree prediction failed for {family.text()} at "
                    f"e={e}, m={m}"
                )
    if args.json:
        print(json.dumps(out))
    return 0


def _report_dict(report: analysis.DegreeReport) -> dict:
    return {
        "exponents": list(report.exponents),
        "total": report.total,
        "pairs": report.pairs,
        "zeros": report.zeros,
        "bound": report.bound,
        "degree": report.degree,
        "leading": report.leading,
        "bound_met": report.bound_met,
    }


def _cmd_audit(args: argparse.Namespace) -> int:
    if args.exps is not None:
        report = analysis.degree_audit(_parse_ints(args.exps))
        if args.json:
            print(json.dumps(_report_dict(report)))
        else:
            print(
                f"exponents {report.exponents}: degree {report.degree} "
                f"{'<=' if report.bound_met else '>'} bound {report.bound} "
                f"(total {report.total}, pairs {report.pairs}, "
                f"zeros {report.zeros})"
            )
        return 0 if report.bound_met else 2
    if args.pairs is None:
        raise ParseError("audit needs --exps or --pairs", 0)
    vectors: list[tuple[int, ...]]
    if args.samples is not None:
        rng = random.Random(args.seed)
        vectors = [
            tuple(rng.randint(0, args.max_exp) for _ in range(2 * args.pairs))
            for _ in range(args.samples)
        ]
    else:
        vectors = list(
            itertools.product(range(args.max_exp + 1), repeat=2 * args.pairs)
        )
    violations = []
    for exps in vectors:
        report = analysis.degree_audit(exps)
        if not report.bound_met:
            violations.append(report)
    if args.json:
        print(
            json.dumps(
                {
                    "checked": len(vectors),
                    "violations": [v.exponents for v in violations],
                }
            )
        )
    else:
        print(f"checked {len(vectors)} words: {len(violations)} violations")
        for v in violations:
            print(f"  {v.exponents}: degree {v.degree} > bound {v.bound}")
    return 0 if not violations else 2


def _cmd_tables(args: argparse.Namespace) -> int:
    rows = analysis.leading_term_table(args.pairs)
    if args.json:
        for row in rows:
            print(
                json.dumps(
                    {
                        "delta": row.delta,
                        "bits": "".join(map(str, row.bits)),
                        "word": row.word,
                        "count": row.count,
                        "leading": row.leading,
                        "degree": row.degree,
                    }
                )
            )
        return 0
    width = max(4, 2 * args.pairs)
    print(
        f"{'delta':>5}  {'bits':<{width}}  {'count':>5}  {'degree':>6}  "
        f"{'leading':<10} word"
    )
    for row in rows:
        bits = "".join(map(str, row.bits))
        print(
            f"{row.delta:>5}  {bits:<{width}}  {row.count:>5}  {row.degree:>6}  "
            f"{row.leading:<10} {row.word}"
        )
    return 0


def _cmd_units(args: argparse.Namespace) -> int:
    family = parse_family(args.family)
    result = analysis.unit_search(family)
    window = result.window
    if args.json:
        print(
            json.dumps(
                {
                    "input": family.text(),
                    "window": [window.lo, window.hi],
                    "order_anchor": list(window.order_anchor),
                    "degree_anchor": list(window.degree_anchor),
                    "hits": list(result.hits),
                }
            )
        )
        return 0
    print(f"window: [{window.lo}, {window.hi}]")
    e, o1, o2 = window.order_anchor
    print(f"order anchor: orders {o1}, {o2} at exponents {e}, {e + 1}")
    e, d1, d2 = window.degree_anchor
    print(f"degree anchor: degrees {d1}, {d2} at exponents {e}, {e - 1}")
    if result.hits:
        print("units at: " + ", ".join(map(str, result.hits)))
    else:
        print("units at: none")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    word = parse_braid(args.braid)
    syllables = len(word.canonical().syllables)
    crossings = word.crossing_count()
    start = time.perf_counter()
    value = jones(word, memo={})
    elapsed = time.perf_counter() - start
    lines = [
        f"value: {value.text()}",
        f"engine time: {elapsed:.3f} s",
        f"expansion terms: 2^{syllables} = {2 ** syllables}",
        f"naive states: 2^{crossings} = {2 ** crossings}",
    ]
    record: dict = {
        "input": word.text(),
        "polynomial": value.as_json_dict(),
        "engine_seconds": elapsed,
        "expansion_terms": 2**syllables,
        "naive_states": 2**crossings,
    }
    if args.compare == "naive":
        try:
            start = time.perf_counter()
            # max_strands=0 forces the brute-force state sum route
            oracle = jones_via_bracket(word, args.max_naive_crossings, 0)
            oracle_elapsed = time.perf_counter() - start
        except CapExceeded:
            lines.append(
                f"naive: cap exceeded at c = {crossings} "
                f"(limit {args.max_naive_crossings})"
            )
            record["naive"] = "cap exceeded"
        else:
            agree = oracle == value
            lines.append(
                f"naive time: {oracle_elapsed:.3f} s, "
                f"{'agrees' if agree else 'DISAGREES'}"
            )
            record["naive"] = "agrees" if agree else "disagrees"
            if not agree:
                raise InvariantViolation(
                    f"state sum disagrees with the engine on {word.text()}"
                )
    if args.json:
        print(json.dumps(record))
    else:
        print("\n".join(lines))
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    results = run_selftest()
    failed = [r for r in results if not r.ok]
    if args.json:
        for r in results:
            print(json.dumps({"name": r.name, "ok": r.ok, "detail": r.detail}))
    else:
        for r in results:
            mark = "ok  " if r.ok else "FAIL"
            print(f"{mark} {r.name}: {r.detail}")
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 0 if not failed else 2


# -- parser --------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="braidjones",
        description="Jones polynomials of braid closures, exactly.",
    )
    common = _Parser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit JSON records instead of text"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jones", parents=[common], help="evaluate one braid word")
    p.add_argument("braid", help='braid word, e.g. "B3: x1 x2^-1 x1"')
    p.add_argument(
        "--engine",
        choices=("recurrence", "oracle"),
        default="recurrence",
        help="evaluation route (default recurrence)",
    )
    p.add_argument("--max-naive-crossings", type=int, default=24)
    p.add_argument("--max-strands", type=int, default=12)
    p.set_defaults(func=_cmd_jones)

    p = sub.add_parser(
        "family", parents=[common], help="sweep one exponent slot of a family"
    )
    p.add_argument("family", help='family word, e.g. "B2: x1^@"')
    p.add_argument("--range", required=True, help="inclusive sweep, e.g. -1..1")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser(
        "genfun",
        parents=[common],
        help="generating-function coefficients over a syllable grid",
    )
    p.add_argument("--strands", type=int, required=True)
    p.add_argument(
        "--indices", required=True, help="generator index sequence, e.g. 1,2,1,2"
    )
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--coeff", help="one exponent tuple, e.g. 2,1,2,1")
    group.add_argument(
        "--upto", type=int, help="print every coefficient with entries in [0, M]"
    )
    p.set_defaults(func=_cmd_genfun)

    p = sub.add_parser(
        "classify",
        parents=[common],
        help="stability class of a family pair, with degree prediction",
    )
    p.add_argument("family")
    p.add_argument("--at", type=int, required=True, help="base exponent e")
    p.add_argument(
        "--predict", type=int, help="also predict and check V(e+m) for this m"
    )
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser(
        "audit", parents=[common], help="syllable-count degree bound checks"
    )
    p.add_argument("--exps", help="one exponent vector, e.g. 3,1,3,1")
    p.add_argument("--pairs", type=int, help="sweep words with this many pairs")
    p.add_argument("--max-exp", type=int, default=4)
    p.add_argument("--samples", type=int, help="sample instead of exhausting")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser(
        "tables", parents=[common], help="leading-term census of {0,1} words"
    )
    p.add_argument("--pairs", type=int, required=True)
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser(
        "units", parents=[common], help="all exponents where a family value is 1"
    )
    p.add_argument("family")
    p.set_defaults(func=_cmd_units)

    p = sub.add_parser(
        "bench",
        parents=[common],
        help="time the expansion path and compare state-sum costs",
    )
    p.add_argument("--braid", required=True)
    p.add_argument("--compare", choices=("naive",))
    p.add_argument("--max-naive-crossings", type=int, default=24)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser(
        "selftest", parents=[common], help="run the built-in consistency checks"
    )
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, BoundsError) as exc:
        print(f"braidjones: {exc}", file=sys.stderr)
        return 1
    except CapExceeded as exc:
        print(
            f"braidjones: {exc} (raise the cap flag or use --engine recurrence)",
            file=sys.stderr,
        )
        return 1
    except InvariantViolation as exc:
        print(f"braidjones: invariant violation: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"braidjones: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())
