"""Nice subsets of the Fano edge set and their classification up to collineation.

An edge set T is nice when, for every generating triplet {a, b, c} and every
way of picking the roles, {a, b} in T and {a*b, c} in T force P_{a,b,c} in T.
Edge sets are 21-bit masks (see :mod:`fano`).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import fano
from .fano import Collineation, edge_bit, edge_mask, star

EdgeSet = int


def p_set(i: int, j: int, k: int) -> EdgeSet:
    if not fano.is_generating(i, j, k):
        raise ValueError(f"{(i, j, k)} is not a generating triplet")
    return edge_mask([(i, j), (j, k), (k, i), (i, star(j, k)), (j, star(k, i)), (k, star(i, j))])


@lru_cache(maxsize=None)
def implications() -> tuple[tuple[int, int], ...]:
    """(hypothesis mask, required mask) pairs, one per generating triplet and role choice."""
    out = []
    for t in fano.generating_triplets():
        p = p_set(*t)
        for c in t:
            a, b = (x for x in t if x != c)
            out.append((edge_mask([(a, b), (star(a, b), c)]), p))
    return tuple(out)


def is_nice(t: EdgeSet) -> bool:
    for h, p in implications():
        if t & h == h and t & p != p:
            return False
    return True


def is_nice_reference(t: EdgeSet) -> bool:
    """Direct transcription of the definition, used to cross-check :func:`is_nice`."""
    edges = {frozenset(e) for e in fano.mask_edges(t)}
    for i, j, k in fano.generating_triplets():
        p = {frozenset(e) for e in fano.mask_edges(p_set(i, j, k))}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            if frozenset((a, b)) in edges and frozenset((star(a, b), c)) in edges and not p <= edges:
                return False
    return True


def _scan(lo: int, hi: int) -> np.ndarray:
    masks = np.arange(lo, hi, dtype=np.int64)
    ok = np.ones(hi - lo, dtype=bool)
    for h, p in implications():
        ok &= ~(((masks & h) == h) & ((masks & p) != p))
    return masks[ok]


def enumerate_all_nice(jobs: int = 1) -> list[EdgeSet]:
    """Every nice subset, by testing all 2^21 masks."""
    total = 1 << len(fano.EDGES)
    chunks = max(1, jobs) * 4
    bounds = [(total * n // chunks, total * (n + 1) // chunks) for n in range(chunks)]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(lambda b: _scan(*b), bounds))
    else:
        parts = [_scan(*b) for b in bounds]
    return [int(m) for part in parts for m in part]


# special families ---------------------------------------------------------------------


def special_set(kind: str, *params: int) -> EdgeSet:
    """Named edge sets.

    ``X_L(i, j)``       edges inside the line through i and j
    ``X_LC(i, j)``      edges with both ends off that line
    ``X_point(i)``      edges through i
    ``X_coline(i)``     edges {a, b} with a*b = i
    ``T_triple(i,j,k)`` union of four P-sets
    ``P_triple(i,j,k)`` the P-set itself
    """
    try:
        if kind in ("X_L", "X_LC"):
            i, j = params
            ln = {i, j, star(i, j)}
            if kind == "X_L":
                return edge_mask(combinations(sorted(ln), 2))
            return edge_mask(combinations([t for t in fano.INDICES if t not in ln], 2))
        if kind == "X_point":
            (i,) = params
            return edge_mask((i, t) for t in fano.INDICES if t != i)
        if kind == "X_coline":
            (i,) = params
            return edge_mask((a, b) for a, b in fano.EDGES if a != i and b != i and star(a, b) == i)
        if kind == "T_triple":
            i, j, k = params
            return p_set(i, j, k) | p_set(i, j, star(i, k)) | p_set(i, k, star(i, j)) | p_set(i, star(i, j), star(i, k))
        if kind == "P_triple":
            return p_set(*params)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"invalid parameters {params} for {kind}: {exc}") from None
    raise ValueError(f"unknown special set kind {kind!r}")


def _m(*edges: int) -> EdgeSet:
    return edge_mask([divmod(e, 10) for e in edges])


# the 24 class representatives, in the published order
REPRESENTATIVES: dict[int, EdgeSet] = {
    1: 0,
    2: _m(12),
    3: _m(12, 13),
    4: _m(12, 15),
    5: _m(12, 67),
    6: special_set("X_L", 1, 2),
    7: special_set("X_coline", 1),
    8: _m(12, 13, 14),
    9: _m(12, 13, 15),
    10: _m(12, 13, 17),
    11: _m(12, 16, 26),
    12: _m(12, 16, 67),
    13: _m(12, 13, 14, 15),
    14: _m(12, 13, 15, 16),
    15: _m(12, 16, 17, 26),
    16: _m(12, 16, 27, 67),
    17: _m(12, 13, 14, 15, 16),
    18: _m(12, 16, 17, 26, 27),
    19: special_set("X_LC", 1, 2),
    20: special_set("X_point", 1),
    21: special_set("P_triple", 1, 2, 3),
    22: special_set("T_triple", 1, 2, 3),
    23: fano.FULL_MASK & ~special_set("X_LC", 1, 2),
    24: fano.FULL_MASK,
}


@dataclass(frozen=True)
class NiceClass:
    id: int
    representative: EdgeSet
    orbit_size: int
    stabilizer_order: int
    orbit: frozenset

    @property
    def cardinality(self) -> int:
        return bin(self.representative).count("1")


def orbit(t: EdgeSet) -> frozenset:
    return frozenset(s.apply_mask(t) for s in fano.all_collineations())


def stabilizer(t: EdgeSet) -> list[Collineation]:
    return [s for s in fano.all_collineations() if s.apply_mask(t) == t]


def classify_orbits(all_nice: list[EdgeSet]) -> list[NiceClass]:
    """Partition the nice sets into collineation orbits labelled by the representatives."""
    remaining = set(all_nice)
    if len(remaining) != len(all_nice):
        raise ValueError("duplicate masks in input")
    orbits = []
    while remaining:
        t = min(remaining)
        o = orbit(t)
        if not o <= remaining:
            raise ValueError("input is not closed under collineations")
        remaining -= o
        orbits.append(o)
    if len(orbits) != len(REPRESENTATIVES):
        raise ValueError(f"found {len(orbits)} orbits, expected {len(REPRESENTATIVES)}")
    classes = []
    for cid, rep in REPRESENTATIVES.items():
        hits = [o for o in orbits if rep in o]
        if len(hits) != 1:
            raise ValueError(f"representative {cid} is not in exactly one orbit")
        o = hits[0]
        stab = len(stabilizer(rep))
        if stab * len(o) != len(fano.all_collineations()):
            raise AssertionError("orbit-stabilizer count mismatch")
        classes.append(NiceClass(cid, rep, len(o), stab, o))
    if len({c.orbit for c in classes}) != len(orbits):
        raise ValueError("two representatives share an orbit")
    return classes


@lru_cache(maxsize=None)
def _orbit_index() -> dict[EdgeSet, tuple[int, Collineation]]:
    index: dict[EdgeSet, tuple[int, Collineation]] = {}
    for cid, rep in REPRESENTATIVES.items():
        for s in fano.all_collineations():
            index.setdefault(s.apply_mask(rep), (cid, s))
    return index


def canonical_rep(t: EdgeSet) -> tuple[int, Collineation]:
    """Class id and a collineation sigma with sigma(T_class) = t."""
    try:
        return _orbit_index()[t]
    except KeyError:
        raise ValueError(f"edge set {fano.mask_edges(t)} is not nice") from None


def class_of(t: EdgeSet) -> int:
    return canonical_rep(t)[0]


def cardinality(t: EdgeSet) -> int:
    return bin(t).count("1")


def contains_p_set(t: EdgeSet) -> bool:
    return any(t & p == p for p in (p_set(*g) for g in fano.generating_triplets()))


def orbit_table(classes: list[NiceClass]) -> list[dict]:
    """Rows grouping the classes by (stabilizer order, orbit size)."""
    groups: dict[tuple[int, int], list[int]] = {}
    for c in classes:
        groups.setdefault((c.stabilizer_order, c.orbit_size), []).append(c.id)
    rows = []
    for (stab, size), ids in sorted(groups.items(), key=lambda kv: min(kv[1])):
        rows.append({"classes": sorted(ids), "stabilizer_order": stab, "orbit_size": size,
                     "nice_sets": size * len(ids)})
    return rows


__all__ = [
    "EdgeSet", "NiceClass", "REPRESENTATIVES", "canonical_rep", "cardinality", "class_of", "classify_orbits",
    "contains_p_set", "edge_bit", "enumerate_all_nice", "implications", "is_nice", "is_nice_reference", "orbit",
    "orbit_table", "p_set", "special_set", "stabilizer",
]
