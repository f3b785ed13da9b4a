"""Compare the column-product bracket against the state-sum oracle on every
pretzel spec up to a crossing bound, reporting timing per crossing count."""
import argparse
import time

from pretzel_jones.diagram import bracket_brute, pretzel_pd
from pretzel_jones.pretzel import bracket_fast
from pretzel_jones.search import compositions


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-crossings", type=int, default=14)
    args = parser.parse_args(argv)
    bad = 0
    for total in range(1, args.max_crossings + 1):
        start = time.perf_counter()
        specs = list(compositions(total))
        bad += sum(bracket_fast(c) != bracket_brute(pretzel_pd(c)) for c in specs)
        print(f"N={total:>2}  specs={len(specs):>6}  {time.perf_counter() - start:6.2f}s")
    print("mismatches:", bad)
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
