"""Tabulate knot-tuple counts under each enumeration convention.

Dihedral conventions enumerate explicitly, so keep their bound small.
"""
import argparse
from dataclasses import dataclass

from pretzel_jones.search import count_knots


@dataclass
class CountConfig:
    multiset_bound: int = 100
    dihedral_bound: int = 30
    step: int = 10


def main(argv=None):
    defaults = CountConfig()
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--multiset-bound", type=int, default=defaults.multiset_bound)
    parser.add_argument("--dihedral-bound", type=int, default=defaults.dihedral_bound)
    parser.add_argument("--step", type=int, default=defaults.step)
    cfg = CountConfig(**vars(parser.parse_args(argv)))

    print(f"{'N':>4} {'multiset':>12} {'n3':>12} {'n1':>12}")
    for n in range(cfg.step, cfg.multiset_bound + 1, cfg.step):
        row = [count_knots(n, "multiset")]
        for convention in ("n3", "n1"):
            row.append(count_knots(n, convention) if n <= cfg.dihedral_bound else None)
        cells = " ".join(f"{'-' if v is None else v:>12}" for v in row)
        print(f"{n:>4} {cells}")


if __name__ == "__main__":
    main()
