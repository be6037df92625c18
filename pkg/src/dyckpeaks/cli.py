"""Command-line interface.

Exit codes: 0 success (or verification passed), 1 verification failure,
2 usage or parse error.  All big counting results serialize as decimal
strings in JSON and CSV.  JSON output is canonical: sorted keys, compact
separators, one object per line, so parsing and re-serializing a report is
byte-identical.  The empty path prints as the placeholder token ``ε`` in
text output and as ``""`` in JSON; ``ε`` is accepted back on input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Iterable, Sequence

from .bijection import InsertionPlan, ReduceResult, expand, fiber, joint_distribution, plan_of, reduce
from .counting import catalan, narayana, refined_count
from .errors import (
    CapExceeded,
    EmptyRange,
    EmptySupport,
    InvalidPlan,
    OrdinalOutOfRange,
    PathError,
    PeakDeficit,
)
from .paths import (
    DEFAULT_ENUMERATION_CAP,
    EMPTY_PATH_TOKEN,
    DyckPath,
    PathStats,
    enumerate_paths,
    enumerate_paths_with_peaks,
    parse_path,
    stats,
)
from .sampling import sample_uniform
from .verify import VerificationSummary, verify_bijection, verify_identity

CAP_ENV_VAR = "DYCKPEAKS_CAP"


def _dump(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _show(text: str) -> str:
    return text if text else EMPTY_PATH_TOKEN


def _read_path(text: str) -> DyckPath:
    if text == EMPTY_PATH_TOKEN:
        return DyckPath("")
    return parse_path(text)


def _cap(args: argparse.Namespace) -> int:
    if getattr(args, "cap", None) is not None:
        return args.cap
    env = os.environ.get(CAP_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {env!r}")
    return DEFAULT_ENUMERATION_CAP


def _stats_payload(path: DyckPath, report: PathStats) -> dict[str, Any]:
    return {
        "path": path.text,
        "semilength": path.semilength,
        "peak_count": report.peak_count,
        "plateau_count": report.plateau_count,
        "peak_apexes": list(report.peak_apexes),
        "plateaus": [
            {"first_step": span.first_step, "run_length": span.run_length}
            for span in report.plateaus
        ],
    }


def _stats_line(path: DyckPath, report: PathStats) -> str:
    apexes = ",".join(str(v) for v in report.peak_apexes)
    plateaus = ",".join(f"{p.first_step}:{p.run_length}" for p in report.plateaus)
    return (
        f"path={_show(path.text)} r={report.peak_count} s={report.plateau_count} "
        f"apexes={apexes} plateaus={plateaus}"
    )


def _plan_payload(plan: InsertionPlan) -> dict[str, Any]:
    return {"base": plan.base.text, "multiplicities": list(plan.multiplicities)}


def _reduce_payload(path: DyckPath, result: ReduceResult) -> dict[str, Any]:
    return {
        "input": path.text,
        "base": result.base.text,
        "stats": _stats_payload(path, result.original_stats),
        "plan": _plan_payload(result.plan),
    }


def _emit_paths(paths: Iterable[DyckPath]) -> None:
    for path in paths:
        print(_show(path.text))


def cmd_stats(args: argparse.Namespace) -> int:
    if args.path == ["-"]:
        texts: Iterable[str] = (line.rstrip("\n") for line in sys.stdin)
    else:
        texts = args.path
    for text in texts:
        path = _read_path(text)
        report = stats(path)
        if args.format == "json":
            print(_dump(_stats_payload(path, report)))
        else:
            print(_stats_line(path, report))
    return 0


def cmd_reduce(args: argparse.Namespace) -> int:
    path = _read_path(args.path)
    result = reduce(path)
    if args.format == "json":
        print(_dump(_reduce_payload(path, result)))
    else:
        vector = ",".join(str(v) for v in result.plan.multiplicities)
        print(
            f"input={_show(path.text)} base={_show(result.base.text)} "
            f"r={result.original_stats.peak_count} "
            f"s={result.original_stats.plateau_count} m={vector}"
        )
    return 0


def cmd_plan(args: argparse.Namespace) -> int:
    path = _read_path(args.path)
    plan = plan_of(path)
    if args.format == "json":
        print(_dump(_plan_payload(plan)))
    else:
        vector = ",".join(str(v) for v in plan.multiplicities)
        print(f"base={_show(plan.base.text)} m={vector}")
    return 0


def _parse_multiplicities(raw: str) -> tuple[int, ...]:
    try:
        values = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValueError(f"multiplicities must be a JSON array: {exc}")
    if not isinstance(values, list) or any(
        isinstance(v, bool) or not isinstance(v, int) for v in values
    ):
        raise ValueError("multiplicities must be a JSON array of integers")
    return tuple(values)


def cmd_expand(args: argparse.Namespace) -> int:
    base = _read_path(args.base)
    plan = InsertionPlan(base=base, multiplicities=_parse_multiplicities(args.multiplicities))
    path = expand(plan)
    if args.format == "json":
        print(_dump({**_plan_payload(plan), "path": path.text}))
    else:
        print(_show(path.text))
    return 0


def cmd_fiber(args: argparse.Namespace) -> int:
    base = _read_path(args.base)
    if args.format == "json":
        paths = [p.text for p in fiber(base, args.peaks)]
        print(
            _dump(
                {
                    "base": base.text,
                    "peak_count": args.peaks,
                    "size": str(len(paths)),
                    "paths": paths,
                }
            )
        )
    else:
        _emit_paths(fiber(base, args.peaks))
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    cap = _cap(args)
    if args.peaks is None:
        stream = enumerate_paths(args.semilength, cap=cap)
    else:
        stream = enumerate_paths_with_peaks(args.semilength, args.peaks, cap=cap)
    if args.format == "json":
        paths = [p.text for p in stream]
        print(
            _dump(
                {
                    "semilength": args.semilength,
                    "peak_filter": args.peaks,
                    "count": str(len(paths)),
                    "paths": paths,
                }
            )
        )
    else:
        _emit_paths(stream)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    cap = _cap(args)
    table = joint_distribution(args.semilength, cap=cap)
    m = args.semilength
    rows = []
    for (r, s), count in sorted(table.items()):
        predicted: int | None = None
        if args.predicted and m - r >= 1:
            predicted = refined_count(m - r, r, s)
        rows.append((r, s, count, predicted))
    if args.format == "json":
        payload = {
            "semilength": m,
            "rows": [
                {
                    "m": m,
                    "r": r,
                    "s": s,
                    "count": str(count),
                    "predicted": None if predicted is None else str(predicted),
                }
                for r, s, count, predicted in rows
            ],
        }
        print(_dump(payload))
    else:
        header = "m,r,s,count,predicted" if args.predicted else "m,r,s,count"
        print(header)
        for r, s, count, predicted in rows:
            line = f"{m},{r},{s},{count}"
            if args.predicted:
                line += f",{'' if predicted is None else predicted}"
            print(line)
    return 0


def _summary_payload(summary: VerificationSummary) -> dict[str, Any]:
    return {
        "checked_cases": summary.checked_cases,
        "elapsed_ms": summary.elapsed_ms,
        "failures": [
            {
                "parameters": failure.parameters,
                "expected": failure.expected,
                "actual": failure.actual,
            }
            for failure in summary.failures
        ],
    }


def _emit_summary(summary: VerificationSummary, fmt: str) -> int:
    if fmt == "json":
        print(_dump(_summary_payload(summary)))
    else:
        print(
            f"checked {summary.checked_cases} cases in {summary.elapsed_ms} ms, "
            f"{len(summary.failures)} failures"
        )
        for failure in summary.failures:
            details = " ".join(f"{k}={v}" for k, v in failure.parameters.items())
            print(f"FAIL {details} expected={failure.expected} actual={failure.actual}")
    return 0 if summary.ok else 1


def cmd_verify_identity(args: argparse.Namespace) -> int:
    summary = verify_identity(args.n_max, args.r_max)
    return _emit_summary(summary, args.format)


def cmd_verify_bijection(args: argparse.Namespace) -> int:
    summary = verify_bijection(args.semilength_max, cap=_cap(args))
    return _emit_summary(summary, args.format)


def cmd_sample(args: argparse.Namespace) -> int:
    stream = sample_uniform(args.n, args.r, args.seed, args.count)
    if args.histogram:
        tally: dict[str, int] = {}
        for path in stream:
            tally[path.text] = tally.get(path.text, 0) + 1
        if args.format == "json":
            print(
                _dump(
                    {
                        "n": args.n,
                        "r": args.r,
                        "count": args.count,
                        "seed": args.seed,
                        "histogram": [
                            {"path": text, "count": tally[text]}
                            for text in sorted(tally)
                        ],
                    }
                )
            )
        else:
            for text in sorted(tally):
                print(f"{_show(text)} {tally[text]}")
    elif args.format == "json":
        print(
            _dump(
                {
                    "n": args.n,
                    "r": args.r,
                    "count": args.count,
                    "seed": args.seed,
                    "paths": [path.text for path in stream],
                }
            )
        )
    else:
        _emit_paths(stream)
    return 0


def _sequence_values(kind: str, n_max: int) -> list[tuple[int, int]]:
    """(index, value) pairs in the documented b-file linearization."""
    if kind == "catalan":
        return [(n, catalan(n)) for n in range(n_max + 1)]
    pairs = []
    index = 1
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            pairs.append((index, narayana(n, k)))
            index += 1
    return pairs


def cmd_sequence(args: argparse.Namespace) -> int:
    if args.n_max < 0:
        raise ValueError(f"n-max must be nonnegative, got {args.n_max}")
    if args.format == "bfile":
        for index, value in _sequence_values(args.kind, args.n_max):
            print(f"{index} {value}")
    elif args.format == "json":
        if args.kind == "catalan":
            payload: dict[str, Any] = {
                "kind": "catalan",
                "values": [str(catalan(n)) for n in range(args.n_max + 1)],
            }
        else:
            payload = {
                "kind": "narayana-triangle",
                "rows": [
                    [str(narayana(n, k)) for k in range(1, n + 1)]
                    for n in range(1, args.n_max + 1)
                ],
            }
        print(_dump(payload))
    else:
        if args.kind == "catalan":
            for n in range(args.n_max + 1):
                print(catalan(n))
        else:
            for n in range(1, args.n_max + 1):
                print(" ".join(str(narayana(n, k)) for k in range(1, n + 1)))
    return 0


def _add_format(parser: argparse.ArgumentParser, choices: Sequence[str], default: str) -> None:
    parser.add_argument("--format", choices=list(choices), default=default)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyckpeaks",
        description=(
            "Dyck path peak statistics, peak deletion and insertion, exact "
            "Narayana counting, and uniform sampling by peak count."
        ),
        epilog=(
            "Steps are 1-based, vertices 0-based (vertex v follows step v). "
            f"The enumeration cap defaults to {DEFAULT_ENUMERATION_CAP}; "
            f"override with --cap or the {CAP_ENV_VAR} environment variable."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="peak/plateau statistics of paths")
    p.add_argument("path", nargs="+", help="path text, ε, or a single - for stdin")
    p.add_argument(
        "--unordered",
        action="store_true",
        help="permit out-of-order output in stdin mode (output is "
        "nevertheless always emitted in input order)",
    )
    _add_format(p, ("text", "json"), "text")
    p.set_defaults(handler=cmd_stats)

    p = sub.add_parser("reduce", help="delete all peaks of a path")
    p.add_argument("path")
    _add_format(p, ("text", "json"), "text")
    p.set_defaults(handler=cmd_reduce)

    p = sub.add_parser("plan", help="decompose a path into base and multiplicities")
    p.add_argument("path")
    _add_format(p, ("text", "json"), "text")
    p.set_defaults(handler=cmd_plan)

    p = sub.add_parser("expand", help="rebuild a path from base and multiplicities")
    p.add_argument("base")
    p.add_argument("multiplicities", help="JSON array, e.g. [1,0,0]")
    _add_format(p, ("text", "json"), "text")
    p.set_defaults(handler=cmd_expand)

    p = sub.add_parser("fiber", help="all paths reducing to a base")
    p.add_argument("base")
    p.add_argument("peaks", type=int, help="peak count of the preimages")
    _add_format(p, ("text", "json"), "text")
    p.set_defaults(handler=cmd_fiber)

    p = sub.add_parser("enumerate", help="stream all paths of a semilength")
    p.add_argument("semilength", type=int)
    p.add_argument("--peaks", type=int, default=None, help="restrict to this peak count")
    p.add_argument("--cap", type=int, default=None)
    _add_format(p, ("text", "json"), "text")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("table", help="joint (peaks, plateaus) tally")
    p.add_argument("semilength", type=int)
    p.add_argument(
        "--predicted",
        action="store_true",
        help="add the formula prediction column where it applies",
    )
    p.add_argument("--cap", type=int, default=None)
    _add_format(p, ("csv", "json"), "csv")
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("verify-identity", help="sweep both identity forms")
    p.add_argument("--n-max", type=int, default=50)
    p.add_argument("--r-max", type=int, default=50)
    _add_format(p, ("text", "json"), "text")
    p.set_defaults(handler=cmd_verify_identity)

    p = sub.add_parser("verify-bijection", help="exhaustively check the bijection")
    p.add_argument("--semilength-max", type=int, default=9)
    p.add_argument("--cap", type=int, default=None)
    _add_format(p, ("text", "json"), "text")
    p.set_defaults(handler=cmd_verify_bijection)

    p = sub.add_parser("sample", help="uniform paths with a prescribed peak count")
    p.add_argument("n", type=int, help="semilength of the reduced base class")
    p.add_argument("r", type=int, help="peak count; samples have semilength n+r")
    p.add_argument("count", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--histogram", action="store_true")
    _add_format(p, ("text", "json"), "text")
    p.set_defaults(handler=cmd_sample)

    p = sub.add_parser("sequence", help="export counting sequences")
    p.add_argument("kind", choices=("catalan", "narayana-triangle"))
    p.add_argument("n_max", type=int)
    _add_format(p, ("text", "json", "bfile"), "text")
    p.set_defaults(handler=cmd_sequence)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (
        PathError,
        CapExceeded,
        EmptyRange,
        OrdinalOutOfRange,
        InvalidPlan,
        PeakDeficit,
        EmptySupport,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())
