"""Planar diagrams of positive pretzel links and the state-sum bracket.

A diagram is a list of crossings. Each crossing lists four edge labels in
counterclockwise order, plus a flag saying whether slots 0 and 2 carry the
over strand. Slots 0/2 and 1/3 are always the two strands through the crossing.

Smoothing convention: state +1 is the A-smoothing, i.e. it merges the two
regions swept when the over strand is turned counterclockwise. In a pretzel
column this opens the column vertically, so the all-(+1) state of an n-column
pretzel has n circles.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    EmptySpec,
    LengthMismatch,
    NotAKnot,
    NotReduced,
    TooManyCrossings,
)
from .laurent import LaurentPoly, delta, power

ORACLE_LIMIT = 20


@dataclass(frozen=True)
class PretzelSpec:
    """Column twist counts (p_1, ..., p_n), all positive."""

    columns: tuple[int, ...]

    def __post_init__(self):
        cols = tuple(int(p) for p in self.columns)
        if not cols:
            raise EmptySpec("a pretzel spec needs at least one column")
        if any(p < 1 for p in cols):
            raise ValueError(f"column twist counts must be positive: {cols}")
        object.__setattr__(self, "columns", cols)

    @classmethod
    def shorthand(cls, m: int, *ps: int) -> PretzelSpec:
        """(m; p_1, ..., p_n): m single-crossing columns, then the p_i."""
        if m < 0:
            raise ValueError("m must be non-negative")
        return cls((1,) * m + tuple(ps))

    @classmethod
    def of(cls, spec) -> PretzelSpec:
        if isinstance(spec, PretzelSpec):
            return spec
        return cls(tuple(spec))

    @property
    def crossings(self) -> int:
        return sum(self.columns)

    def __len__(self):
        return len(self.columns)

    def __iter__(self):
        return iter(self.columns)

    def __str__(self):
        return ",".join(map(str, self.columns))


@dataclass(frozen=True)
class Crossing:
    edges: tuple[int, int, int, int]
    over_first: bool

    def smoothing_pairs(self, state: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """Slot pairs joined by the +1 (A) or -1 (B) smoothing."""
        a_pairs = ((1, 2), (3, 0)) if self.over_first else ((0, 1), (2, 3))
        b_pairs = ((0, 1), (2, 3)) if self.over_first else ((1, 2), (3, 0))
        return a_pairs if state == 1 else b_pairs

    def over_slots(self) -> tuple[int, int]:
        return (0, 2) if self.over_first else (1, 3)


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...]
    columns: tuple[int, ...] | None = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return len(self.crossings)

    def edge_labels(self) -> list[int]:
        return sorted({e for x in self.crossings for e in x.edges})

    def mirror(self) -> Diagram:
        return Diagram(
            tuple(Crossing(x.edges, not x.over_first) for x in self.crossings),
            self.columns,
        )

    def dump(self) -> str:
        return "\n".join(
            f"X({a},{b},{c},{d},{x.over_first})" for x in self.crossings for a, b, c, d in [x.edges]
        )


class _UnionFind:
    def __init__(self, labels: Iterable[int]):
        self.parent = {e: e for e in labels}

    def find(self, e):
        parent = self.parent
        root = e
        while parent[root] != root:
            root = parent[root]
        while parent[e] != root:
            parent[e], e = root, parent[e]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def count(self) -> int:
        return sum(1 for e in self.parent if self.find(e) == e)


def pretzel_pd(spec) -> Diagram:
    """Diagram of the all-positive pretzel D(p_1, ..., p_n).

    Column i holds p_i crossings, indexed top to bottom; columns run left to
    right. Adjacent columns are joined along the top and the bottom, and the
    last column wraps around to the first.
    """
    spec = PretzelSpec.of(spec)
    cols = spec.columns
    n = len(cols)

    # segment (i, r, side): side 0 = left strand, 1 = right strand; row r in 0..p_i
    seg_uf = _UnionFind((i, r, s) for i, p in enumerate(cols) for r in range(p + 1) for s in (0, 1))
    for i, p in enumerate(cols):
        j = (i + 1) % n
        seg_uf.union((i, 0, 1), (j, 0, 0))
        seg_uf.union((i, p, 1), (j, cols[j], 0))

    labels: dict = {}

    def label(seg):
        root = seg_uf.find(seg)
        if root not in labels:
            labels[root] = len(labels) + 1
        return labels[root]

    crossings = []
    for i, p in enumerate(cols):
        for r in range(p):
            nw, ne = (i, r, 0), (i, r, 1)
            sw, se = (i, r + 1, 0), (i, r + 1, 1)
            # counterclockwise from NW; the over strand runs SW-NE (slots 1, 3)
            crossings.append(Crossing((label(nw), label(sw), label(se), label(ne)), False))
    return Diagram(tuple(crossings), cols)


def _check_state(d: Diagram, state: Sequence[int]):
    if len(state) != d.size:
        raise LengthMismatch(f"state has {len(state)} entries, diagram has {d.size} crossings")
    if any(v not in (1, -1) for v in state):
        raise ValueError("state entries must be +1 or -1")


def loops_of_state(d: Diagram, state: Sequence[int]) -> int:
    """Number of circles after smoothing each crossing per its state value."""
    _check_state(d, state)
    uf = _UnionFind(d.edge_labels())
    for x, v in zip(d.crossings, state):
        for a, b in x.smoothing_pairs(v):
            uf.union(x.edges[a], x.edges[b])
    return uf.count()


def _pair_tables(d: Diagram) -> tuple[np.ndarray, np.ndarray, int]:
    """Edge-index pairs joined at each crossing under the +1 and -1 smoothings."""
    index = {e: k for k, e in enumerate(d.edge_labels())}
    plus = np.empty((d.size, 4), dtype=np.int64)
    minus = np.empty((d.size, 4), dtype=np.int64)
    for c, x in enumerate(d.crossings):
        for table, v in ((plus, 1), (minus, -1)):
            (a, b), (e, f) = x.smoothing_pairs(v)
            table[c] = [index[x.edges[a]], index[x.edges[b]], index[x.edges[e]], index[x.edges[f]]]
    return plus, minus, len(index)


def state_histogram(d: Diagram) -> np.ndarray:
    """hist[k, L]: number of states with k crossings at -1 and L circles."""
    from ._kernels import state_histogram_kernel

    plus, minus, n_edges = _pair_tables(d)
    return state_histogram_kernel(plus, minus, n_edges)


def bracket_brute(d: Diagram, limit: int = ORACLE_LIMIT) -> LaurentPoly:
    """Kauffman bracket as the literal sum over all 2^c states."""
    c = d.size
    if c > limit:
        raise TooManyCrossings(f"{c} crossings exceeds the oracle limit of {limit}")
    hist = state_histogram(d)
    dl = delta()
    total = LaurentPoly()
    delta_pows = [power(dl, L) for L in range(hist.shape[1])]
    for k in range(hist.shape[0]):
        for loops in range(1, hist.shape[1]):
            count = int(hist[k, loops])
            if count:
                total = total + delta_pows[loops - 1].shift(c - 2 * k) * count
    return total


def count_components(d: Diagram) -> int:
    uf = _UnionFind(d.edge_labels())
    for x in d.crossings:
        uf.union(x.edges[0], x.edges[2])
        uf.union(x.edges[1], x.edges[3])
    return uf.count()


def _orientation(d: Diagram) -> list[tuple[int, int]]:
    """Entry slots of the two strands at every crossing, for a knot diagram.

    The traversal enters crossing 0 through slot 0 and follows strands
    straight through each crossing.
    """
    if count_components(d) != 1:
        raise NotAKnot("diagram has more than one component")
    ends: dict[int, list[tuple[int, int]]] = {}
    for c, x in enumerate(d.crossings):
        for s, e in enumerate(x.edges):
            ends.setdefault(e, []).append((c, s))
    entries: list[list[int]] = [[] for _ in d.crossings]
    c, s = 0, 0
    for _ in range(2 * d.size):
        entries[c].append(s)
        out = (s + 2) % 4
        e = d.crossings[c].edges[out]
        a, b = ends[e]
        c, s = b if a == (c, out) else a
    return [tuple(es) for es in entries]


def crossing_signs(d: Diagram) -> list[int]:
    """Right-handed (+1) or left-handed (-1) sign of every crossing."""
    signs = []
    for x, entered in zip(d.crossings, _orientation(d)):
        over = set(x.over_slots())
        o_in = next(s for s in entered if s in over)
        u_in = next(s for s in entered if s not in over)
        # direction of travel points at the exit slot; slots sit 90 degrees apart
        o_dir, u_dir = (o_in + 2) % 4, (u_in + 2) % 4
        signs.append(1 if (u_dir - o_dir) % 4 == 1 else -1)
    return signs


def writhe(d: Diagram) -> int:
    return sum(crossing_signs(d))


def seifert_circle_count(d: Diagram) -> int:
    uf = _UnionFind(d.edge_labels())
    for x, (i1, i2) in zip(d.crossings, _orientation(d)):
        uf.union(x.edges[i1], x.edges[(i2 + 2) % 4])
        uf.union(x.edges[i2], x.edges[(i1 + 2) % 4])
    return uf.count()


def alexander_degree(d: Diagram) -> int:
    """Degree (span) of the Alexander polynomial, as 2 * genus = c - s + 1.

    Valid for reduced alternating knot diagrams, where Seifert's algorithm
    realizes the genus.
    """
    cols = d.columns
    if cols is not None and (len(cols) == 1 or (len(cols) == 2 and 1 in cols)):
        raise NotReduced(f"pretzel diagram {cols} is not reduced")
    s = seifert_circle_count(d)
    return d.size - s + 1
