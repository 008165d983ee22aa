"""The index set I = {1..7}, identified with the nonzero elements of Z2^3.

Group elements are encoded as 3-bit integers with bit 0 the first
coordinate, so addition in Z2^3 is XOR.  Edges are the 21 unordered pairs
of distinct indices, numbered in lexicographic order of (min, max).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

INDICES = (1, 2, 3, 4, 5, 6, 7)

# g_i as coordinate vectors
COORDS = {
    1: (1, 0, 0),
    2: (0, 1, 0),
    3: (0, 0, 1),
    4: (1, 1, 1),
    5: (1, 1, 0),
    6: (1, 0, 1),
    7: (0, 1, 1),
}


def _encode(v: Sequence[int]) -> int:
    return v[0] | (v[1] << 1) | (v[2] << 2)


ELEMENT = {i: _encode(c) for i, c in COORDS.items()}
INDEX_OF = {g: i for i, g in ELEMENT.items()}
IDENTITY_ELEMENT = 0


def star(i: int, j: int) -> int:
    """The index k with g_i + g_j = g_k."""
    if i == j:
        raise ValueError(f"star({i},{j}) is the identity, not an index")
    if i not in ELEMENT or j not in ELEMENT:
        raise ValueError(f"indices must lie in 1..7, got {i}, {j}")
    return INDEX_OF[ELEMENT[i] ^ ELEMENT[j]]


def lines() -> list[tuple[int, int, int]]:
    """The 7 lines {i, j, i*j} as sorted triples."""
    return sorted({tuple(sorted((i, j, star(i, j)))) for i, j in combinations(INDICES, 2)})


def lines_through(i: int) -> list[tuple[int, int, int]]:
    return [ln for ln in lines() if i in ln]


def is_line(i: int, j: int, k: int) -> bool:
    return len({i, j, k}) == 3 and star(i, j) == k


def is_generating(i: int, j: int, k: int) -> bool:
    """True when g_i, g_j, g_k generate Z2^3, i.e. three distinct non-collinear points."""
    if len({i, j, k}) != 3:
        raise ValueError(f"generating triplet needs distinct indices, got {(i, j, k)}")
    return star(i, j) != k


def generating_triplets() -> list[tuple[int, int, int]]:
    return [t for t in combinations(INDICES, 3) if is_generating(*t)]


# edges -------------------------------------------------------------------------------

EDGES: tuple[tuple[int, int], ...] = tuple(combinations(INDICES, 2))
EDGE_INDEX = {e: n for n, e in enumerate(EDGES)}
FULL_MASK = (1 << len(EDGES)) - 1


def edge_bit(i: int, j: int) -> int:
    if i == j:
        raise ValueError("an edge needs two distinct indices")
    return EDGE_INDEX[(min(i, j), max(i, j))]


def edge_mask(edges: Iterable[Sequence[int]]) -> int:
    m = 0
    for i, j in edges:
        m |= 1 << edge_bit(i, j)
    return m


def mask_edges(mask: int) -> list[tuple[int, int]]:
    return [e for n, e in enumerate(EDGES) if mask >> n & 1]


def parse_edge(text: str) -> tuple[int, int]:
    """Parse ``"1,2"`` or ``"12"`` into a sorted edge."""
    t = text.replace(" ", "")
    parts = t.split(",") if "," in t else list(t)
    if len(parts) != 2:
        raise ValueError(f"malformed edge {text!r}")
    i, j = int(parts[0]), int(parts[1])
    if i == j or i not in ELEMENT or j not in ELEMENT:
        raise ValueError(f"malformed edge {text!r}")
    return (min(i, j), max(i, j))


# collineations -----------------------------------------------------------------------


class Collineation(tuple):
    """A star-preserving permutation of I, stored as (sigma(1), ..., sigma(7))."""

    def __new__(cls, images: Sequence[int], *, check: bool = True):
        obj = super().__new__(cls, tuple(images))
        if check:
            if sorted(obj) != list(INDICES):
                raise ValueError(f"not a permutation of 1..7: {images}")
            for i, j in combinations(INDICES, 2):
                if obj(star(i, j)) != star(obj(i), obj(j)):
                    raise ValueError(f"{tuple(images)} does not preserve the star operation")
        return obj

    def __call__(self, i: int) -> int:
        return tuple.__getitem__(self, i - 1)

    def compose(self, other: "Collineation") -> "Collineation":
        """``(self o other)(i) = self(other(i))``."""
        return Collineation([self(other(i)) for i in INDICES], check=False)

    def inverse(self) -> "Collineation":
        inv = [0] * 7
        for i in INDICES:
            inv[self(i) - 1] = i
        return Collineation(inv, check=False)

    def apply_mask(self, mask: int) -> int:
        """Image of an edge set under the induced map on edges."""
        return _edge_perm_apply(self, mask)

    def __repr__(self):
        return f"Collineation({list(self)})"


IDENTITY = Collineation(INDICES, check=False)


def _preserves_star(p: Sequence[int]) -> bool:
    return all(p[star(i, j) - 1] == star(p[i - 1], p[j - 1]) for i, j in combinations(INDICES, 2))


@lru_cache(maxsize=None)
def all_collineations() -> tuple[Collineation, ...]:
    """The 168 collineations, by filtering all 5040 permutations."""
    return tuple(Collineation(p, check=False) for p in permutations(INDICES) if _preserves_star(p))


def collineation_from_triplets(src: Sequence[int], dst: Sequence[int]) -> Collineation:
    """The unique collineation sending the ordered generating triplet ``src`` to ``dst``."""
    if not is_generating(*src) or not is_generating(*dst):
        raise ValueError("both triplets must be generating")
    img = {src[0]: dst[0], src[1]: dst[1], src[2]: dst[2]}
    a, b, c = src
    img[star(a, b)] = star(dst[0], dst[1])
    img[star(a, c)] = star(dst[0], dst[2])
    img[star(b, c)] = star(dst[1], dst[2])
    img[star(a, star(b, c))] = star(dst[0], star(dst[1], dst[2]))
    return Collineation([img[i] for i in INDICES])


@lru_cache(maxsize=None)
def _edge_tables(sigma: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    # three lookup tables over 7-bit chunks of the edge mask
    perm = [edge_bit(sigma[i - 1], sigma[j - 1]) for i, j in EDGES]
    tables = []
    for chunk in range(3):
        tab = []
        for v in range(128):
            out = 0
            for b in range(7):
                if v >> b & 1:
                    out |= 1 << perm[7 * chunk + b]
            tab.append(out)
        tables.append(tuple(tab))
    return tuple(tables)


def _edge_perm_apply(sigma: Collineation, mask: int) -> int:
    t0, t1, t2 = _edge_tables(tuple(sigma))
    return t0[mask & 127] | t1[(mask >> 7) & 127] | t2[(mask >> 14) & 127]


def generate_group(gens: Iterable[Collineation]) -> set[Collineation]:
    """Closure of a set of collineations under composition."""
    gens = list(gens)
    group = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                c = h.compose(g)
                if c not in group:
                    group.add(c)
                    nxt.append(c)
        frontier = nxt
    return group


def find_generating_pair() -> tuple[Collineation, Collineation]:
    """First pair (in enumeration order) generating the whole collineation group."""
    group = all_collineations()
    n = len(group)
    for a in group:
        for b in group:
            if a != IDENTITY and b != IDENTITY and len(generate_group([a, b])) == n:
                return a, b
    raise RuntimeError("no generating pair found")
