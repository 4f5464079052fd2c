"""Command-line front end.

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 timeout.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .classify import (
    REASON_TEXT,
    Verdict,
    VerificationRecord,
    classify_stability,
    predicted_group,
    verify_pair,
)
from .cycles import census, tuple_scan
from .graphs import GpParams, ParameterError

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3

FIELDS = ["n", "k", "parity_case", "verdict", "reason", "aut_gp_order", "a_order_brute",
          "a_order_predicted", "b_order", "c_order", "family", "wreath", "sporadic_tag",
          "pass", "status", "overlap", "checks", "elapsed_ms"]


@dataclass
class SweepConfig:
    n_min: int = 3
    n_max: int = 30
    include_pairs: List[Tuple[int, int]] = field(default_factory=list)
    workers: int = 1
    per_pair_timeout: int = 600_000  # milliseconds
    output: Optional[str] = None
    format: str = "jsonl"

    def __post_init__(self) -> None:
        if self.n_min < 3:
            raise ValueError("n_min must be at least 3")
        if self.per_pair_timeout <= 0:
            raise ValueError("timeout must be positive")
        if self.workers < 1:
            raise ValueError("workers must be positive")
        if self.format not in ("jsonl", "csv", "table"):
            raise ValueError(f"unknown format {self.format!r}")

    def pairs(self) -> List[Tuple[int, int]]:
        out = {(n, k) for n in range(self.n_min, self.n_max + 1) for k in range(1, n) if 2 * k < n}
        for n, k in self.include_pairs:
            GpParams(n, k)
            out.add((n, k))
        return sorted(out)


def classify_line(n: int, k: int) -> str:
    verdict = classify_stability((n, k))
    spec = predicted_group((n, k))
    head = verdict.verdict.value
    if verdict.verdict is not Verdict.STABLE:
        head += " (" + ", ".join(REASON_TEXT[r] for r in verdict.reasons) + ")"
    return f"{head}; A = {spec.label}, order {spec.predicted_order}"


def _verify_job(args) -> VerificationRecord:
    n, k, timeout_s = args
    return verify_pair((n, k), timeout_s)


def run_sweep(config: SweepConfig) -> List[VerificationRecord]:
    jobs = [(n, k, config.per_pair_timeout / 1000) for n, k in config.pairs()]
    if config.workers == 1:
        records = [_verify_job(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            records = list(pool.map(_verify_job, jobs, chunksize=1))
    return sorted(records, key=lambda r: (r.n, r.k))


def format_records(records: Sequence[VerificationRecord], fmt: str) -> str:
    rows = [r.to_json_dict() for r in records]
    if fmt == "jsonl":
        return "".join(json.dumps(row) + "\n" for row in rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            row = dict(row, checks=json.dumps(row["checks"], sort_keys=True))
            writer.writerow(row)
        return buf.getvalue()
    lines = [f"{'n':>3} {'k':>3} {'verdict':<21} {'|Aut GP|':>8} {'|A| brute':>10} "
             f"{'|A| pred':>10} {'|B|':>7} {'|C|':>7} {'group':<28} status"]
    for r in records:
        spec = predicted_group((r.n, r.k))
        lines.append(f"{r.n:>3} {r.k:>3} {r.verdict:<21} {r.aut_gp_order or '-':>8} "
                     f"{r.a_order_brute or '-':>10} {r.a_order_predicted:>10} {r.b_order or '-':>7} "
                     f"{r.c_order or '-':>7} {spec.label:<28} {r.status}")
    return "\n".join(lines) + "\n"


def summary_line(records: Sequence[VerificationRecord]) -> str:
    n_pass = sum(r.status == "pass" for r in records)
    n_fail = sum(r.status == "fail" for r in records)
    n_to = sum(r.status == "timeout" for r in records)
    return f"pairs={len(records)} pass={n_pass} fail={n_fail} timeout={n_to}"


def _pair(text: str) -> Tuple[int, int]:
    try:
        n, k = text.split(":")
        return int(n), int(k)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n:k, got {text!r}")


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gpstab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="stability verdict and predicted cover group")
    c.add_argument("n", type=int)
    c.add_argument("k", type=int)

    v = sub.add_parser("verify", help="check one pair against the automorphism search")
    v.add_argument("n", type=int)
    v.add_argument("k", type=int)
    v.add_argument("--timeout-ms", type=int, default=600_000)
    v.add_argument("--format", choices=["jsonl", "csv", "table"], default="jsonl")

    s = sub.add_parser("sweep", help="verify every pair in a range")
    s.add_argument("--nmin", type=int, default=3)
    s.add_argument("--nmax", type=int, default=30)
    s.add_argument("--include", type=_pair, action="append", default=[], metavar="N:K")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--timeout-ms", type=int, default=600_000)
    s.add_argument("--format", choices=["jsonl", "csv", "table"], default="jsonl")
    s.add_argument("--out", metavar="PATH")

    ce = sub.add_parser("census", help="cycle sums over DGP(n,k) as CSV")
    ce.add_argument("n", type=int)
    ce.add_argument("k", type=int)
    ce.add_argument("j", type=int)
    ce.add_argument("--out", metavar="PATH")

    t = sub.add_parser("lemma10", help="exhaustive ten-term tuple search")
    t.add_argument("--strict", action="store_true", help="also require x10 + x1 != 0")
    t.add_argument("--out", metavar="PATH")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "classify":
            GpParams(args.n, args.k)
            print(classify_line(args.n, args.k))
            return EXIT_PASS

        if args.command == "verify":
            GpParams(args.n, args.k)
            if args.timeout_ms <= 0:
                raise ValueError("timeout must be positive")
            rec = verify_pair((args.n, args.k), args.timeout_ms / 1000)
            sys.stdout.write(format_records([rec], args.format))
            return {"pass": EXIT_PASS, "fail": EXIT_FAIL, "timeout": EXIT_TIMEOUT}[rec.status]

        if args.command == "sweep":
            config = SweepConfig(args.nmin, args.nmax, args.include, args.workers,
                                 args.timeout_ms, args.out, args.format)
            records = run_sweep(config)
            _emit(format_records(records, config.format), config.output)
            print(summary_line(records), file=sys.stderr)
            if any(r.status == "fail" for r in records):
                return EXIT_FAIL
            if any(r.status == "timeout" for r in records):
                return EXIT_TIMEOUT
            return EXIT_PASS

        if args.command == "census":
            GpParams(args.n, args.k)
            if args.j < 3:
                raise ValueError("cycle length must be at least 3")
            _emit(census((args.n, args.k), args.j).to_csv(), args.out)
            return EXIT_PASS

        if args.command == "lemma10":
            res = tuple_scan(10, strict=args.strict)
            lines = [res.summary()] + [" ".join(map(str, w.x)) for w in res.witnesses]
            _emit("\n".join(lines) + "\n", args.out)
            return EXIT_PASS if not res.witnesses else EXIT_FAIL
    except (ParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
