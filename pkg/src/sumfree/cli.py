"""Command-line interface.

Examples::

    sumfree count --n 12 --maximal
    sumfree growth --from 4 --to 24 --format csv --plot growth.png
    sumfree verify claim12 --n 40 --trials 500 --seed 7
    sumfree construct quarter --n 8
    sumfree classify --set 4,5,6,7,15,16,17,18 --n 18

Exit status: 0 success, 1 failed verification, 2 usage error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from .cache import ResultCache, cache_key
from .constructions import (
    CEFamilySpec,
    QuarterFamilySpec,
    distinct_maximal_count,
    family_text,
    non_extendable,
)
from .enumerate import (
    EnumerationReport,
    count_maximal_sum_free,
    count_sum_free,
    growth_csv,
    growth_json,
    growth_row,
)
from .errors import ResourceLimitError
from .groundset import IntSet, is_sum_free
from .structure import container_case, dfst_classify
from .verify import DEFAULT_SEED, SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


@dataclass
class CommandRequest:
    command: str
    n: int | None = None
    n_from: int | None = None
    n_to: int | None = None
    maximal: bool = False
    algorithm: str = "backtracking"
    emit: bool = False
    fmt: str = "text"
    cache: str | None = None
    workers: int = 1
    seed: int = DEFAULT_SEED
    trials: int | None = None
    suite: str | None = None
    family: str | None = None
    set_text: str | None = None
    epsilon: float = 0.2
    plot: str | None = None


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(f"{self.prog}: error: {message}")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sumfree", description="Sum-free set enumeration and verification.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser, formats: Sequence[str]) -> None:
        p.add_argument("--format", dest="fmt", choices=formats, default=formats[0])
        p.add_argument("--workers", type=_positive, default=1)
        p.add_argument("--cache", default=None, help="JSON-lines cache file (default: $SUMFREE_CACHE)")

    def single_process(p: argparse.ArgumentParser) -> None:
        # accepted everywhere so scripts can pass it uniformly; these commands never fan out
        p.add_argument("--workers", type=_positive, default=1)

    for name in ("count", "enumerate"):
        p = sub.add_parser(name)
        p.add_argument("--n", type=_positive, required=True)
        p.add_argument("--maximal", action="store_true")
        p.add_argument("--algorithm", choices=("backtracking", "oracle"), default="backtracking")
        common(p, ("text", "json"))

    p = sub.add_parser("verify")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n", type=_positive, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    single_process(p)

    p = sub.add_parser("construct")
    p.add_argument("family", choices=("ce", "quarter"))
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--format", dest="fmt", choices=("text",), default="text")
    single_process(p)

    p = sub.add_parser("classify")
    p.add_argument("--set", dest="set_text", required=True, help='comma-separated members, e.g. "1,3,8"')
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--epsilon", type=float, default=0.2)
    p.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")
    single_process(p)

    p = sub.add_parser("growth")
    p.add_argument("--from", dest="n_from", type=_positive, required=True)
    p.add_argument("--to", dest="n_to", type=_positive, required=True)
    p.add_argument("--plot", default=None, help="also render a figure to this path")
    common(p, ("csv", "json"))
    return parser


def parse_args(argv: Sequence[str]) -> CommandRequest:
    ns = build_parser().parse_args(list(argv))
    req = CommandRequest(command=ns.command)
    for name in vars(req):
        if name != "command" and hasattr(ns, name):
            setattr(req, name, getattr(ns, name))
    if req.command == "enumerate":
        req.emit = True
    if req.command == "growth" and req.n_from > req.n_to:
        raise UsageError("sumfree growth: error: --from must not exceed --to")
    if req.command == "classify" and not 0 < req.epsilon < 1:
        raise UsageError("sumfree classify: error: --epsilon must lie in (0, 1)")
    return req


def _count(req: CommandRequest, n: int, maximal: bool, cache: ResultCache | None) -> EnumerationReport:
    mode = "maximal_sum_free" if maximal else "all_sum_free"
    algorithm = req.algorithm if maximal else "backtracking"
    key = cache_key("count", n, algorithm, mode)
    if cache is not None and not req.emit:
        hit = cache.get(key)
        if hit is not None:
            return EnumerationReport(
                n=n, mode=mode, count=hit["count"], nodes_explored=0, algorithm=algorithm, cached=True
            )
    if maximal:
        rep = count_maximal_sum_free(n, algorithm=algorithm, emit=req.emit, workers=req.workers)
    else:
        rep = count_sum_free(n, emit=req.emit, workers=req.workers)
    if cache is not None:
        cache.put(key, {"count": rep.count, "nodes_explored": rep.nodes_explored})
    return rep


def _cmd_count(req: CommandRequest, out: TextIO) -> int:
    rep = _count(req, req.n, req.maximal, ResultCache.from_env(req.cache))
    if req.fmt == "json":
        out.write(json.dumps(rep.to_dict()) + "\n")
    else:
        out.write(f"{rep.count}\n")
    return EXIT_OK


def _cmd_enumerate(req: CommandRequest, out: TextIO) -> int:
    rep = _count(req, req.n, req.maximal, None)
    if req.fmt == "json":
        out.write(json.dumps(rep.to_dict()) + "\n")
        return EXIT_OK
    out.write(f"# mode={rep.mode} n={rep.n} count={rep.count}\n")
    for s in rep.sets or []:
        out.write(s.to_text() + "\n")
    return EXIT_OK


def _cmd_verify(req: CommandRequest, out: TextIO) -> int:
    res = run_suite(req.suite, n=req.n, trials=req.trials, seed=req.seed)
    if req.fmt == "json":
        payload = {
            "suite": res.suite,
            "params": res.params,
            "passed": res.passed,
            "checks": [
                {
                    "name": c.name,
                    "instances": c.instances,
                    "failures": c.failures,
                    "counterexample": c.counterexample,
                }
                for c in res.checks
            ],
        }
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write("\n".join(res.lines()) + "\n")
    return EXIT_OK if res.passed else EXIT_FAIL


def _cmd_construct(req: CommandRequest, out: TextIO) -> int:
    n = req.n
    if req.family == "ce":
        spec = CEFamilySpec.for_n(n)
        members = [spec.member(i) for i in range(len(spec))]
        frozen_region = list(range(1, spec.m, 2))
    else:
        qspec = QuarterFamilySpec(n)
        members = [qspec.member(i) for i in range(len(qspec))]
        frozen_region = list(qspec.I2)
    for line in family_text(req.family, n):
        out.write(line + "\n")
    sum_free = sum(is_sum_free(s) for s in members)
    frozen = sum(not non_extendable(s, frozen_region) for s in members)
    distinct = distinct_maximal_count(members)
    out.write(f"# sum_free={sum_free}/{len(members)}\n")
    out.write(f"# non_extendable={frozen}/{len(members)}\n")
    out.write(f"# distinct_maximal={distinct}\n")
    out.write(f"# lower_bound=2^{n // 4}={2 ** (n // 4)}\n")
    ok = sum_free == frozen == distinct == len(members)
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_classify(req: CommandRequest, out: TextIO) -> int:
    try:
        A = IntSet.parse(req.n, req.set_text)
    except ValueError as exc:
        raise UsageError(f"sumfree classify: error: {exc}") from None
    cls = dfst_classify(A, req.n)
    diag = container_case(A, req.epsilon, req.n)
    payload = {
        "n": req.n,
        "set": A.to_text(),
        "sum_free": is_sum_free(A),
        "structure": cls.to_dict(),
        "container_case": diag.to_dict(),
    }
    if req.fmt == "json":
        out.write(json.dumps(payload) + "\n")
    else:
        for key in ("n", "set", "sum_free"):
            out.write(f"{key}={payload[key]}\n")
        for section in ("structure", "container_case"):
            for k, v in payload[section].items():
                out.write(f"{section}.{k}={v}\n")
    return EXIT_OK


def _cmd_growth(req: CommandRequest, out: TextIO) -> int:
    cache = ResultCache.from_env(req.cache)
    rows = []
    for n in range(req.n_from, req.n_to + 1):
        f = _count(req, n, False, cache).count
        fmax = _count(req, n, True, cache).count
        rows.append(growth_row(n, f, fmax))
    out.write(growth_csv(rows) if req.fmt == "csv" else growth_json(rows))
    if req.plot:
        from .plotting import plot_growth

        plot_growth(rows, req.plot)
    return EXIT_OK


_COMMANDS = {
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "construct": _cmd_construct,
    "classify": _cmd_classify,
    "growth": _cmd_growth,
}


def execute(req: CommandRequest, out: TextIO | None = None) -> int:
    return _COMMANDS[req.command](req, out or sys.stdout)


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    err = err or sys.stderr
    try:
        req = parse_args(sys.argv[1:] if argv is None else argv)
        return execute(req, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except ResourceLimitError as exc:
        err.write(f"sumfree: resource limit: {exc}\n")
        return EXIT_LIMIT
    except ValueError as exc:
        err.write(f"sumfree: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
