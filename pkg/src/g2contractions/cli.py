"""Command line: ``g2c g2 table``, ``nice``, ``contract``, ``invariants``, ``verify-paper``.

Exit status is 0 on success, 1 when a verification check fails and 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from . import fano, nice
from .contractions import (
    AdmissibleMap,
    check_conditions_b,
    contraction_algebra,
    equivalence_label,
    failing_triplet,
    NotAGradedContraction,
    parse_eta_document,
)
from .g2 import g2_algebra
from .invariants import profile
from .linalg import Scalar
from .verify import VerifyOptions, cmd_verify_paper


class UsageError(Exception):
    pass


def _emit(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(rows, out, indent=1)
        out.write("\n")
        return
    if not rows:
        return
    if fmt == "text":
        out.write(_text_table(rows))
        return
    buf = io.StringIO()
    fields = list(rows[0])
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
    out.write(buf.getvalue())


def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return (" " if any(isinstance(x, str) for x in v) else ",").join(map(str, v))
    return str(v)


def _text_table(rows: list[dict]) -> str:
    fields = list(rows[0])
    grid = [fields] + [[_cell(r[f]) for f in fields] for r in rows]
    widths = [max(len(g[c]) for g in grid) for c in range(len(fields))]
    return "".join(" | ".join(x.rjust(w) for x, w in zip(g, widths)) + "\n" for g in grid)


def orbit_table_columns(rows: list[dict]) -> str:
    """The orbit table with one column per (stabilizer, orbit size) group."""
    labels = {"classes": "i", "stabilizer_order": "|stabilizer|", "orbit_size": "|orbit|", "nice_sets": "nice sets"}
    grid = [[labels[k]] + [_cell(r[k]) for r in rows] for k in labels]
    widths = [max(len(g[c]) for g in grid) for c in range(len(grid[0]))]
    return "".join(" | ".join(x.rjust(w) for x, w in zip(g, widths)) + "\n" for g in grid)


def _edges_str(mask: int) -> list[str]:
    return [f"{a},{b}" for a, b in fano.mask_edges(mask)]


# g2 ---------------------------------------------------------------------------------


def cmd_g2_table(args, out) -> int:
    L = g2_algebra()
    rows = [{"i": i, "j": j, "k": k, "bi": L.names[i], "bj": L.names[j], "bk": L.names[k], "value": str(c)}
            for i, j, k, c in L.entries()]
    _emit(rows, args.format, out)
    return 0


# nice -------------------------------------------------------------------------------


def cmd_nice(args, out) -> int:
    all_nice = nice.enumerate_all_nice(jobs=args.jobs)
    if args.action == "enumerate":
        rows = [{"mask": t, "edges": _edges_str(t), "cardinality": nice.cardinality(t), "class_id": nice.class_of(t)}
                for t in all_nice]
    else:
        classes = nice.classify_orbits(all_nice)
        if args.orbit_table:
            rows = nice.orbit_table(classes)
            if args.format == "text":
                _write(orbit_table_columns(rows), args.out, out)
                return 0
        else:
            rows = [{"class_id": c.id, "representative": _edges_str(c.representative),
                     "cardinality": c.cardinality, "orbit_size": c.orbit_size,
                     "stabilizer_order": c.stabilizer_order} for c in classes]
    buf = io.StringIO()
    _emit(rows, args.format, buf)
    _write(buf.getvalue(), args.out, out)
    return 0


def _write(text: str, path: str | None, out) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        out.write(text)


# contract ---------------------------------------------------------------------------


def parse_support(text: str) -> int:
    """``T14`` (a class representative) or a comma list of edges such as ``12,13,17``."""
    t = text.strip()
    if t[:1] in "Tt" and t[1:].isdigit():
        cid = int(t[1:])
        if cid not in nice.REPRESENTATIVES:
            raise UsageError(f"unknown class {t}; expected T1..T24")
        return nice.REPRESENTATIVES[cid]
    try:
        return fano.edge_mask(fano.parse_edge(e) for e in t.split(",") if e.strip())
    except ValueError as exc:
        raise UsageError(f"bad support {text!r}: {exc}") from None


def cmd_contract(args, out, inp) -> int:
    if args.action == "build":
        mask = parse_support(args.support)
        if args.ones:
            values = None
        else:
            try:
                values = [Scalar.parse(v) for v in args.values.split(",")]
            except ValueError as exc:
                raise UsageError(f"bad --values: {exc}") from None
        try:
            eta = AdmissibleMap.from_support(mask, values)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if not check_conditions_b(eta):
            (tri, vals) = failing_triplet(eta)
            print(f"warning: eta is not in A; triplet {tri} has rotations {[str(v) for v in vals]}",
                  file=sys.stderr)
        json.dump(eta.to_json(), out, indent=1)
        out.write("\n")
        return 0
    etas = _read_etas(args, inp)

    def one(eta: AdmissibleMap) -> dict:
        if not check_conditions_b(eta):
            tri, _ = failing_triplet(eta)
            return {"support": _edges_str(eta.support), "label": None,
                    "error": f"not in A: generating triplet {list(tri)} fails"}
        lab = equivalence_label(eta)
        return {"support": _edges_str(eta.support), "support_class": nice.class_of(eta.support),
                "label": str(lab), "class_id": lab.class_id, "params": [str(p) for p in lab.params]}

    rows = _pmap(one, etas, args.jobs)
    _emit(rows, args.format, out)
    return 0


def _pmap(fn, items, jobs: int) -> list:
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def _read_etas(args, inp) -> list[AdmissibleMap]:
    if args.input:
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from None
    else:
        text = inp.read()
    try:
        return parse_eta_document(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# invariants ------------------------------------------------------------------------


def cmd_invariants(args, out, inp) -> int:
    etas = _read_etas(args, inp)

    def one(eta: AdmissibleMap) -> dict:
        try:
            L = contraction_algebra(eta)
        except NotAGradedContraction as exc:
            return {"support": _edges_str(eta.support), "error": str(exc)}
        lab = equivalence_label(eta)
        rec = {"label": str(lab), "class_id": lab.class_id, "params": [str(p) for p in lab.params]}
        rec.update(profile(L).to_json())
        return rec

    rows = _pmap(one, etas, args.jobs)
    _emit(rows, args.format, out)
    return 0 if all("error" not in r for r in rows) else 2


# verify-paper ----------------------------------------------------------------------


def cmd_verify(args, out) -> int:
    rep = cmd_verify_paper(VerifyOptions(seed=args.seed, jobs=args.jobs))
    if args.format == "json":
        json.dump(rep.to_json(timings=args.timings), out, indent=1)
        out.write("\n")
    elif args.format == "csv":
        _emit([c.to_json() for c in rep.checks], "csv", out)
    else:
        for c in rep.checks:
            mark = "PASS" if c.passed else "FAIL"
            line = f"{mark} {c.check_id}"
            if not c.passed:
                line += f"  expected={json.dumps(c.to_json()['expected'])} computed={json.dumps(c.to_json()['computed'])}"
            out.write(line + "\n")
        for n in rep.notes:
            out.write(f"note: {n}\n")
        s = rep.summary()
        out.write(f"{s['passed']}/{s['total']} checks passed\n")
        if args.timings:
            for k, v in rep.timings.items():
                out.write(f"time {k}: {v:.2f}s\n")
    return 0 if rep.ok else 1


# parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)

    p = argparse.ArgumentParser(prog="g2c", description="graded contractions of g2")
    sub = p.add_subparsers(dest="cmd", required=True)

    g2 = sub.add_parser("g2", help="the g2 structure tensor")
    g2.add_argument("action", choices=("table",))
    g2.add_argument("--format", choices=("json", "csv", "text"), default="json")

    n = sub.add_parser("nice", parents=[common], help="nice sets")
    n.add_argument("action", choices=("enumerate", "classify"))
    n.add_argument("--orbit-table", action="store_true")
    n.add_argument("--out")

    c = sub.add_parser("contract", parents=[common], help="build or label admissible maps")
    c.add_argument("action", choices=("build", "label"))
    c.add_argument("--support")
    grp = c.add_mutually_exclusive_group()
    grp.add_argument("--values", help="comma list in the support's lexicographic edge order")
    grp.add_argument("--ones", action="store_true")
    c.add_argument("--in", dest="input")

    i = sub.add_parser("invariants", parents=[common], help="invariants of contracted algebras")
    i.add_argument("--in", dest="input")

    v = sub.add_parser("verify-paper", help="run the golden verification suite")
    v.add_argument("--format", choices=("text", "json", "csv"), default="text")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--timings", action="store_true", help="include per-section runtimes")
    return p


def main(argv: Sequence[str] | None = None, out=None, inp=None) -> int:
    out = out or sys.stdout
    inp = inp or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.cmd == "g2":
            return cmd_g2_table(args, out)
        if args.cmd == "nice":
            return cmd_nice(args, out)
        if args.cmd == "contract":
            if args.action == "build" and (not args.support or not (args.ones or args.values)):
                raise UsageError("contract build needs --support and one of --values / --ones")
            return cmd_contract(args, out, inp)
        if args.cmd == "invariants":
            return cmd_invariants(args, out, inp)
        return cmd_verify(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
