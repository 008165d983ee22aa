"""Profile the contraction of every class representative and a few points of each parametric family."""

import argparse
import json
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from g2contractions import nice
from g2contractions.contractions import AdmissibleMap, contraction_algebra, equivalence_label
from g2contractions.invariants import profile


def samples():
    reps = nice.REPRESENTATIVES
    out = [AdmissibleMap.from_support(m) for m in reps.values()]
    for lam in (2, Fraction(1, 2), -1):
        out.append(AdmissibleMap.from_support(reps[14], [1, 1, 1, lam]))
        out.append(AdmissibleMap.from_support(reps[17], [1, lam, 1, 1, lam]))
    for lam, mu in ((2, 3), (Fraction(1, 2), -1), (-1, 2)):
        out.append(AdmissibleMap.from_support(reps[20], [1, lam, mu, 1, lam, mu]))
    return out


def record(eta):
    lab = equivalence_label(eta)
    rec = {"label": str(lab), "values": [str(v) for v in eta.on_support()]}
    rec.update(profile(contraction_algebra(eta)).to_json())
    return rec


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--json", action="store_true", help="one JSON record per line")
    args = ap.parse_args()
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as ex:
        rows = list(ex.map(record, samples()))
    for r in rows:
        if args.json:
            print(json.dumps(r))
        else:
            print(f"{r['label']:<14} d=({r['dim_center']},{r['dim_derived']}) nil={r['nilindex']} "
                  f"solv={r['solvindex']} simple={r['is_simple']} reductive={r['is_reductive']}")


if __name__ == "__main__":
    main()
