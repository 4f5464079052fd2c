"""Verify every pair in a range and write one JSON record per pair.

    python3 scripts/run_sweep.py --nmax 30 --include 24:5 --out results/sweep.jsonl
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from gpstab.cli import SweepConfig, _pair, format_records, run_sweep, summary_line

log = logging.getLogger("run_sweep")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmin", type=int, default=3)
    ap.add_argument("--nmax", type=int, default=30)
    ap.add_argument("--include", type=_pair, action="append", default=[(24, 5)])
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default="results/sweep.jsonl")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    config = SweepConfig(args.nmin, args.nmax, args.include, args.workers, output=args.out)
    log.info("verifying %d pairs", len(config.pairs()))
    records = run_sweep(config)
    out = Path(config.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(format_records(records, "jsonl"))
    print(format_records(records, "table"), end="")
    print(summary_line(records))
    slow = max(records, key=lambda r: r.elapsed_ms)
    log.info("slowest pair (%d,%d): %d ms; records in %s", slow.n, slow.k, slow.elapsed_ms, out)
    return 0 if all(r.passed for r in records) else 1


if __name__ == "__main__":
    sys.exit(main())
