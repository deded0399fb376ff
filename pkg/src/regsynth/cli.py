"""Command-line driver: ``regsynth synth | bench | gen | oracle-check``.

Exit codes for ``synth``: 0 found, 1 bad input, 2 not found within the cost
bound, 3 language cache exhausted.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from .benchgen import BenchParams, generate, parse_manifest
from .check import cross_check
from .engine import (DEFAULT_MAX_COST, DEFAULT_MEMORY, Found, MemoryExhausted, NotFound,
                     SynthesisResult, TimedOut, synthesize)
from .infix import SpecError
from .regex import CostFn, print_regex
from .specfile import SpecFileError, read_spec, write_spec

log = logging.getLogger("regsynth")

EXIT_FOUND, EXIT_INPUT, EXIT_NOT_FOUND, EXIT_OOM = 0, 1, 2, 3

CSV_COLUMNS = ("type", "seed", "k", "le", "p", "n", "costfn", "result", "cost", "regex",
               "cs_generated", "unique_cs", "millis")

_KIND = {Found: "found", NotFound: "not_found", MemoryExhausted: "oom", TimedOut: "timeout"}


@dataclass
class RunReport:
    result: str
    regex: str | None
    cost: int | None
    cs_generated: int
    unique_cs: int
    peak_cache_entries: int
    millis: float
    onthefly_from: int | None
    costfn: str
    last_complete_cost: int | None = None
    type: int | None = None
    seed: int | None = None
    k: int | None = None
    le: int | None = None
    p: int | None = None
    n: int | None = None

    @classmethod
    def of(cls, res: SynthesisResult, cf: CostFn, params: BenchParams | None = None) -> "RunReport":
        st = res.stats
        rep = cls(
            result=_KIND[type(res)],
            regex=print_regex(res.regex) if isinstance(res, Found) else None,
            cost=res.cost if isinstance(res, Found) else None,
            cs_generated=st.cs_generated,
            unique_cs=st.unique_cs,
            peak_cache_entries=st.peak_cache_entries,
            millis=round(st.elapsed * 1000, 3),
            onthefly_from=st.onthefly_from,
            costfn=",".join(map(str, cf)),
            last_complete_cost=getattr(res, "last_complete_cost", None),
        )
        if params is not None:
            rep.type, rep.seed, rep.k = params.bench_type, params.seed, params.k
            rep.le, rep.p, rep.n = params.le, params.p, params.n
        return rep

    def csv_row(self) -> list:
        d = asdict(self)
        return ["" if d[c] is None else d[c] for c in CSV_COLUMNS]


def _cost_fn(text: str) -> CostFn:
    try:
        return CostFn.of(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fraction(text: str) -> float:
    x = float(text)
    if not 0 <= x < 1:
        raise argparse.ArgumentTypeError("allowed error must be in [0, 1)")
    return x


def cmd_synth(args) -> int:
    try:
        spec = read_spec(args.spec)
    except (OSError, SpecError, SpecFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    res = synthesize(spec, args.cost, max_cost=args.max_cost, memory_budget=args.memory,
                     allowed_error=args.error)
    rep = RunReport.of(res, args.cost)
    if args.json:
        print(json.dumps(asdict(rep)))
    else:
        if rep.regex is not None:
            print(rep.regex)
        print(f"# result={rep.result} cost={rep.cost} cs_generated={rep.cs_generated} "
              f"unique_cs={rep.unique_cs} peak_cache={rep.peak_cache_entries} "
              f"millis={rep.millis} onthefly_from={rep.onthefly_from}", file=sys.stderr)
    return {Found: EXIT_FOUND, NotFound: EXIT_NOT_FOUND, MemoryExhausted: EXIT_OOM}.get(
        type(res), EXIT_NOT_FOUND)


def cmd_bench(args) -> int:
    try:
        rows = parse_manifest(Path(args.manifest).read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    total_unique, total_secs = 0, 0.0
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for params in rows:
            try:
                spec = generate(params)
            except ValueError as exc:
                log.warning("skipping %s: %s", params, exc)
                continue
            res = synthesize(spec, args.cost, max_cost=args.max_cost,
                             memory_budget=args.memory, timeout=args.timeout)
            rep = RunReport.of(res, args.cost, params)
            writer.writerow(rep.csv_row())
            out.flush()
            total_unique += rep.unique_cs
            total_secs += res.stats.elapsed
    finally:
        if out is not sys.stdout:
            out.close()
    rate = total_unique / total_secs if total_secs > 0 else 0.0
    print(f"# {len(rows)} instances, {total_unique} unique CSs in {total_secs:.3f}s "
          f"({rate:.0f} unique CSs/s)", file=sys.stderr)
    return 0


def cmd_gen(args) -> int:
    try:
        rows = parse_manifest(Path(args.manifest).read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for params in rows:
        spec = generate(params)
        name = f"type{params.bench_type}_k{params.k}_le{params.le}_p{params.p}_n{params.n}_s{params.seed}.spec"
        write_spec(spec, outdir / name, alphabet=True)
        print(outdir / name)
    return 0


def cmd_oracle_check(args) -> int:
    report = cross_check(args.instances, args.max_le, args.max_examples, args.seed)
    for m in report.mismatches:
        print(f"MISMATCH cost={m.cost_fn} P={list(m.spec.positive)} N={list(m.spec.negative)}: "
              f"{m.reason}")
    print(report)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="regsynth", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def search_opts(p):
        p.add_argument("--cost", type=_cost_fn, default=CostFn(),
                       help="constructor costs c1,c2,c3,c4,c5 for (char, ?, *, concat, union)")
        p.add_argument("--max-cost", type=int, default=DEFAULT_MAX_COST)
        p.add_argument("--memory", type=int, default=DEFAULT_MEMORY,
                       help="language cache budget in bytes")

    p = sub.add_parser("synth", help="infer a minimal regex for a spec file")
    p.add_argument("spec")
    search_opts(p)
    p.add_argument("--error", type=_fraction, default=0.0, help="allowed error fraction")
    p.add_argument("--deterministic", action="store_true",
                   help="accepted for compatibility; runs are always deterministic")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("bench", help="run a benchmark manifest and write CSV")
    p.add_argument("manifest")
    search_opts(p)
    p.add_argument("--timeout", type=float, default=None, help="seconds per instance")
    p.add_argument("--out", default=None, help="CSV path (default stdout)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="write the spec files of a benchmark manifest")
    p.add_argument("manifest")
    p.add_argument("--outdir", default=".")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle-check", help="compare engine and brute-force oracle")
    p.add_argument("--instances", type=int, default=100)
    p.add_argument("--max-le", type=int, default=4)
    p.add_argument("--max-examples", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle_check)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
