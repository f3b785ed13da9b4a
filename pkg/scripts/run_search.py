"""Run the Jones collision search and write text, JSON and CSV reports.

    python3 scripts/run_search.py --max-crossings 100 --out results/
"""
import argparse
import os
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from pretzel_jones.search import CONVENTIONS, DEFAULT_CONVENTION, find_jones_collisions, write_report


@dataclass
class SearchConfig:
    max_crossings: int = 100
    convention: str = DEFAULT_CONVENTION
    jobs: int = os.cpu_count() or 1
    out: str = "results"


def main(argv=None):
    defaults = SearchConfig()
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-crossings", type=int, default=defaults.max_crossings)
    parser.add_argument("--convention", choices=CONVENTIONS, default=defaults.convention)
    parser.add_argument("--jobs", type=int, default=defaults.jobs)
    parser.add_argument("--out", default=defaults.out)
    cfg = SearchConfig(**vars(parser.parse_args(argv)))

    start = time.perf_counter()
    report = find_jones_collisions(
        cfg.max_crossings,
        cfg.convention,
        jobs=cfg.jobs,
        progress=lambda n: print(f"... {n} tuples", file=sys.stderr, flush=True),
    )
    elapsed = time.perf_counter() - start

    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    stem = f"collisions_{cfg.convention}_{cfg.max_crossings}"
    for fmt in ("text", "json", "csv"):
        suffix = "txt" if fmt == "text" else fmt
        (out / f"{stem}.{suffix}").write_text(write_report(report, fmt) + "\n")
    print(report.to_text())
    print(f"config {asdict(cfg)}  elapsed {elapsed:.1f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
