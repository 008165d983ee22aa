"""Enumerate the nice sets, split them into collineation orbits and print the orbit table."""

import argparse
import time

from g2contractions import nice
from g2contractions.cli import orbit_table_columns


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    t0 = time.perf_counter()
    all_nice = nice.enumerate_all_nice(jobs=args.jobs)
    classes = nice.classify_orbits(all_nice)
    print(orbit_table_columns(nice.orbit_table(classes)), end="")
    print(f"\n{len(all_nice)} nice sets in {len(classes)} orbits ({time.perf_counter() - t0:.2f}s)")
    for c in classes:
        print(f"T{c.id:<3} |T|={c.cardinality:<3} orbit={c.orbit_size:<4} stabilizer={c.stabilizer_order}")


if __name__ == "__main__":
    main()
