"""Enumeration of positive pretzel knots and the Jones-collision search.

Two families of tuple classes are supported:

* ``multiset``: one sorted tuple per multiset of column lengths, n >= 3.
  The bracket and writhe of P(p_1..p_n) depend only on the multiset, so this
  is the natural table key; it is the only convention that scales to 100
  crossings.
* ``n3`` / ``n1``: one tuple per dihedral orbit (rotations and reversal),
  with n >= 3 or n >= 1 columns. These grow like 2^N and are meant for small
  bounds.

Collisions are found in two stages. Every knot gets a 62-bit fingerprint:
its Jones polynomial evaluated at fixed points modulo two 31-bit primes.
Equal Jones polynomials always share a fingerprint; every fingerprint group
is then re-checked with exact polynomial arithmetic.
"""
from __future__ import annotations

import csv
import io
import json
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

import numpy as np

from .diagram import alexander_degree, pretzel_pd, writhe
from .errors import NotReduced
from .laurent import LaurentPoly
from .pretzel import jones

CONVENTIONS = ("multiset", "n3", "n1")
DEFAULT_CONVENTION = "multiset"

# (modulus, evaluation point for A); both moduli are below 2^31 so products fit int64
FINGERPRINT_FIELDS = ((2147483629, 1234567891), (2147483587, 987654321))


def canonicalize(t: Sequence[int]) -> tuple[int, ...]:
    """Lexicographic minimum over rotations of the tuple and of its reversal."""
    t = tuple(t)
    n = len(t)
    best = t
    for s in (t, t[::-1]):
        for i in range(n):
            r = s[i:] + s[:i]
            if r < best:
                best = r
    return best


def is_knot_tuple(t: Sequence[int]) -> bool:
    """P(t) has one component iff all entries are odd with n odd, or exactly one entry is even."""
    evens = sum(1 for p in t if p % 2 == 0)
    return evens == 1 or (evens == 0 and len(t) % 2 == 1)


def pretzel_writhe(t: Sequence[int]) -> int:
    """Writhe of the standard diagram of a positive pretzel knot.

    With every column odd all crossings are left-handed. With one even
    column and an even number of columns all crossings are right-handed;
    with an odd number of columns the even column turns left-handed.
    """
    evens = [p for p in t if p % 2 == 0]
    if not evens:
        return -sum(t)
    if len(t) % 2 == 0:
        return sum(t)
    return sum(t) - 2 * evens[0]


def _min_columns(convention: str) -> int:
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}; choose from {CONVENTIONS}")
    return 1 if convention == "n1" else 3


# -- enumeration -------------------------------------------------------------


def _partitions(total: int, smallest: int, evens_left: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for p in range(smallest, total + 1):
        even = p % 2 == 0
        if even and not evens_left:
            continue
        for rest in _partitions(total - p, p, evens_left - even):
            yield (p,) + rest


def compositions(total: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for p in range(1, total + 1):
        for rest in compositions(total - p):
            yield (p,) + rest


def _tuples_with_crossings(total: int, convention: str) -> Iterator[tuple[int, ...]]:
    n_min = _min_columns(convention)
    if convention == "multiset":
        source = _partitions(total, 1, 1)
    else:
        source = (t for t in compositions(total) if canonicalize(t) == t)
    for t in source:
        if len(t) >= n_min and is_knot_tuple(t):
            yield t


def enumerate_knot_tuples(max_crossings: int, convention: str = DEFAULT_CONVENTION) -> Iterator[tuple[int, ...]]:
    """Canonical knot tuples with at most max_crossings crossings, sorted by (crossings, tuple)."""
    _min_columns(convention)
    for total in range(1, max_crossings + 1):
        yield from _tuples_with_crossings(total, convention)


def count_knots(max_crossings: int, convention: str = DEFAULT_CONVENTION) -> int:
    if convention != "multiset":
        return sum(1 for _ in enumerate_knot_tuples(max_crossings, convention))
    # count multisets by (sum, min(parts, 3), parts % 2, evens) without listing them
    ways = defaultdict(int)
    ways[(0, 0, 0, 0)] = 1
    for p in range(1, max_crossings + 1):
        new = defaultdict(int, ways)
        for (s, n, par, ev), c in ways.items():
            for k in range(1, (max_crossings - s) // p + 1):
                ev_k = ev + (k if p % 2 == 0 else 0)
                if ev_k > 1:
                    break
                new[(s + k * p, min(n + k, 3), (par + k) % 2, ev_k)] += c
        ways = new
    return sum(c for (s, n, par, ev), c in ways.items() if n == 3 and (ev == 1 or par == 1))


# -- fingerprints ------------------------------------------------------------


def _field_constants(modulus: int, a: int) -> dict[str, int]:
    a_inv = pow(a, -1, modulus)
    x = (-pow(a_inv, 4, modulus)) % modulus
    dl = (-a * a - a_inv * a_inv) % modulus
    if dl == 0 or x == 0:
        raise ValueError("degenerate fingerprint point")
    return {
        "a": a,
        "a_inv": a_inv,
        "x": x,
        "x_inv": pow(x, -1, modulus),
        "delta_inv": pow(dl, -1, modulus),
        "c1": (1 - x + x * x) * pow(x, -1, modulus) % modulus,
    }


def _field_value(t: Sequence[int], modulus: int, k: dict) -> int:
    """Jones value at t = a^-4 from the symmetric bracket formula.

    With x = -A^-4 and G_p = x^(p+1) - x^2 + x - 1:
        <D> = A^N delta^-(n+1) x^-n (prod G_p - (1 - x + x^2) x^(n-1) prod (x^p - 1)).
    """
    x = k["x"]
    g = f = 1
    for p in t:
        xp = pow(x, p, modulus)
        g = g * ((xp * x - x * x + x - 1) % modulus) % modulus
        f = f * (xp - 1) % modulus
    n, total = len(t), sum(t)
    w = pretzel_writhe(t)
    term = (pow(k["x_inv"], n, modulus) * g - k["c1"] * f) % modulus
    value = pow(k["a"], total - 3 * w, modulus) * pow(k["delta_inv"], n + 1, modulus) % modulus * term % modulus
    return value if total % 2 == 0 else (-value) % modulus


def jones_fingerprint(t: Sequence[int]) -> int:
    """62-bit key; equal Jones polynomials always give equal keys."""
    key = 0
    for modulus, a in FINGERPRINT_FIELDS:
        key = (key << 32) | _field_value(t, modulus, _field_constants(modulus, a))
    return key


class OddPartitionTable:
    """Every multiset of odd parts with sum <= max_crossings, in vectorized form.

    Entry j was made from entry parent[j] by adding count[j] copies of
    part[j]; entry 0 is the empty multiset. Per field f, g[f] and fprod[f]
    hold the products of G_p and x^p - 1 over the parts.
    """

    def __init__(self, max_crossings: int):
        self.max_crossings = max_crossings
        self.consts = [_field_constants(m, a) for m, a in FINGERPRINT_FIELDS]
        total = [np.zeros(1, np.int64)]
        size = [np.zeros(1, np.int64)]
        parent = [np.full(1, -1, np.int64)]
        part = [np.zeros(1, np.int64)]
        count = [np.zeros(1, np.int64)]
        g = [[np.ones(1, np.int64)] for _ in FINGERPRINT_FIELDS]
        fp = [[np.ones(1, np.int64)] for _ in FINGERPRINT_FIELDS]
        for p in range(1, max_crossings + 1, 2):
            base_total = np.concatenate(total)
            base_size = np.concatenate(size)
            base_g = [np.concatenate(c) for c in g]
            base_f = [np.concatenate(c) for c in fp]
            gp = [_g_value(p, m, k) for (m, _), k in zip(FINGERPRINT_FIELDS, self.consts)]
            fpv = [(pow(k["x"], p, m) - 1) % m for (m, _), k in zip(FINGERPRINT_FIELDS, self.consts)]
            for mult in range(1, max_crossings // p + 1):
                idx = np.nonzero(base_total + mult * p <= max_crossings)[0]
                if not len(idx):
                    break
                total.append(base_total[idx] + mult * p)
                size.append(base_size[idx] + mult)
                parent.append(idx)
                part.append(np.full(len(idx), p, np.int64))
                count.append(np.full(len(idx), mult, np.int64))
                for f, (m, _) in enumerate(FINGERPRINT_FIELDS):
                    g[f].append(base_g[f][idx] * pow(gp[f], mult, m) % m)
                    fp[f].append(base_f[f][idx] * pow(fpv[f], mult, m) % m)
        self.total = np.concatenate(total)
        self.size = np.concatenate(size)
        self.parent = np.concatenate(parent)
        self.part = np.concatenate(part)
        self.count = np.concatenate(count)
        self.g = [np.concatenate(c) for c in g]
        self.fprod = [np.concatenate(c) for c in fp]

    def __len__(self):
        return len(self.total)

    def parts(self, j: int) -> list[int]:
        out = []
        while j > 0:
            out.extend([int(self.part[j])] * int(self.count[j]))
            j = int(self.parent[j])
        return sorted(out)


def _g_value(p: int, modulus: int, k: dict) -> int:
    x = k["x"]
    return (pow(x, p + 1, modulus) - x * x + x - 1) % modulus


def _units(max_crossings: int) -> list[int]:
    """Work units: 0 = all parts odd; even e = exactly one part equal to e."""
    return [0] + list(range(2, max_crossings + 1, 2))


def _unit_fingerprints(table: OddPartitionTable, unit: int, n_min: int) -> tuple[np.ndarray, np.ndarray]:
    """Fingerprints and odd-table indices of every knot multiset in one unit."""
    mx = table.max_crossings
    if unit == 0:
        idx = np.nonzero((table.size % 2 == 1) & (table.size >= n_min))[0]
        total = table.total[idx]
        size = table.size[idx]
        w = -total
    else:
        idx = np.nonzero((table.total + unit <= mx) & (table.size + 1 >= n_min))[0]
        total = table.total[idx] + unit
        size = table.size[idx] + 1
        w = np.where(size % 2 == 1, total - 2 * unit, total)
    key = np.zeros(len(idx), np.uint64)
    sign = np.where(total % 2 == 0, 1, -1)
    exponent = total - 3 * w
    e_lo = int(exponent.min()) if len(idx) else 0
    e_hi = int(exponent.max()) if len(idx) else 0
    n_hi = int(size.max()) + 2 if len(idx) else 2
    for f, (m, _) in enumerate(FINGERPRINT_FIELDS):
        k = table.consts[f]
        g = table.g[f][idx]
        fp = table.fprod[f][idx]
        if unit:
            g = g * _g_value(unit, m, k) % m
            fp = fp * ((pow(k["x"], unit, m) - 1) % m) % m
        a_pow = np.array([pow(k["a"], e, m) for e in range(e_lo, e_hi + 1)], np.int64)
        xinv_pow = np.array([pow(k["x_inv"], e, m) for e in range(n_hi)], np.int64)
        dinv_pow = np.array([pow(k["delta_inv"], e, m) for e in range(n_hi)], np.int64)
        term = (xinv_pow[size] * g % m - k["c1"] * fp % m) % m
        value = a_pow[exponent - e_lo] * dinv_pow[size + 1] % m * term % m
        value = (sign * value) % m
        key = (key << np.uint64(32)) | value.astype(np.uint64)
    return key, idx


_WORKER_TABLE: OddPartitionTable | None = None


def _init_worker(max_crossings: int):
    global _WORKER_TABLE
    _WORKER_TABLE = OddPartitionTable(max_crossings)


def _worker_unit(args):
    unit, n_min, wanted = args
    key, idx = _unit_fingerprints(_WORKER_TABLE, unit, n_min)
    if wanted is None:
        return key
    keep = np.isin(key, wanted)
    return key[keep], idx[keep]


def _map_units(max_crossings: int, tasks: list, jobs: int):
    if jobs <= 1:
        _init_worker(max_crossings)
        return [_worker_unit(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker, initargs=(max_crossings,)) as pool:
        return list(pool.map(_worker_unit, tasks))


# -- records and reports -----------------------------------------------------


@dataclass(frozen=True)
class KnotRecord:
    canonical_tuple: tuple[int, ...]
    crossing_number: int
    jones: LaurentPoly
    alexander_degree: int | None
    writhe: int

    def row(self) -> dict:
        return {
            "tuple": ",".join(map(str, self.canonical_tuple)),
            "crossings": self.crossing_number,
            "writhe": self.writhe,
            "alexander_degree": "" if self.alexander_degree is None else self.alexander_degree,
            "jones": self.jones.render(),
        }

    def to_json(self) -> dict:
        return {
            "tuple": list(self.canonical_tuple),
            "crossings": self.crossing_number,
            "writhe": self.writhe,
            "alexander_degree": self.alexander_degree,
            "jones": self.jones.to_json(),
        }


def make_record(t: Sequence[int], jones_poly: LaurentPoly | None = None) -> KnotRecord:
    t = tuple(t)
    d = pretzel_pd(t)
    try:
        degree = alexander_degree(d)
    except NotReduced:
        degree = None
    return KnotRecord(
        canonical_tuple=t,
        crossing_number=sum(t),
        jones=jones(t) if jones_poly is None else jones_poly,
        alexander_degree=degree,
        writhe=writhe(d),
    )


@dataclass(frozen=True)
class CollisionGroup:
    members: tuple[KnotRecord, ...]

    @property
    def alexander_distinct(self) -> bool:
        degrees = {m.alexander_degree for m in self.members}
        return len(degrees) > 1

    @property
    def jones(self) -> LaurentPoly:
        return self.members[0].jones

    def tuples(self) -> tuple[tuple[int, ...], ...]:
        return tuple(m.canonical_tuple for m in self.members)


@dataclass
class CollisionReport:
    max_crossings: int
    convention: str
    knots_scanned: int
    groups: list[CollisionGroup] = field(default_factory=list)

    def distinct_degree_groups(self) -> list[CollisionGroup]:
        return [g for g in self.groups if g.alexander_distinct]

    def equal_degree_groups(self) -> list[CollisionGroup]:
        return [g for g in self.groups if not g.alexander_distinct]

    def to_json(self) -> dict:
        return {
            "max_crossings": self.max_crossings,
            "convention": self.convention,
            "knots_scanned": self.knots_scanned,
            "groups": [
                {
                    "alexander_distinct": g.alexander_distinct,
                    "jones": g.jones.to_json(),
                    "members": [m.to_json() for m in g.members],
                }
                for g in self.groups
            ],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(
            buf, fieldnames=["tuple", "crossings", "writhe", "alexander_degree", "jones"], lineterminator="\n"
        )
        writer.writeheader()
        for g in self.groups:
            for m in g.members:
                writer.writerow(m.row())
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [
            f"max_crossings={self.max_crossings} convention={self.convention} knots={self.knots_scanned}",
            f"collision groups: {len(self.groups)} "
            f"(distinct Alexander degree: {len(self.distinct_degree_groups())}, "
            f"equal: {len(self.equal_degree_groups())})",
        ]
        for g in self.groups:
            flag = "distinct" if g.alexander_distinct else "equal"
            members = "  ".join(
                f"({','.join(map(str, m.canonical_tuple))})[deg {m.alexander_degree}]" for m in g.members
            )
            lines.append(f"{flag:8s} {members}")
        return "\n".join(lines)


def _exact_groups(candidates: list[list[tuple[int, ...]]]) -> list[CollisionGroup]:
    groups = []
    for members in candidates:
        by_poly: dict[LaurentPoly, list[tuple[int, ...]]] = defaultdict(list)
        for t in members:
            by_poly[jones(t)].append(t)
        for poly, ts in by_poly.items():
            if len(ts) >= 2:
                ts = sorted(ts, key=lambda t: (sum(t), t))
                groups.append(CollisionGroup(tuple(make_record(t, poly) for t in ts)))
    groups.sort(key=lambda g: (g.members[0].crossing_number, g.members[0].canonical_tuple))
    return groups


def find_jones_collisions(
    max_crossings: int,
    convention: str = DEFAULT_CONVENTION,
    jobs: int | None = None,
    progress: Callable[[int], None] | None = None,
) -> CollisionReport:
    """Group knot tuples with identical Jones polynomials."""
    n_min = _min_columns(convention)
    jobs = jobs or os.cpu_count() or 1
    if convention == "multiset":
        candidates, scanned = _multiset_candidates(max_crossings, n_min, jobs, progress)
    else:
        candidates, scanned = _dihedral_candidates(max_crossings, convention, jobs, progress)
    return CollisionReport(max_crossings, convention, scanned, _exact_groups(candidates))


def _report_progress(progress, before: int, after: int):
    if progress is not None and after // 10**6 > before // 10**6:
        progress(after)


def _multiset_candidates(max_crossings, n_min, jobs, progress):
    units = _units(max_crossings)
    keys = _map_units(max_crossings, [(u, n_min, None) for u in units], jobs)
    scanned = 0
    for k in keys:
        _report_progress(progress, scanned, scanned + len(k))
        scanned += len(k)
    all_keys = np.sort(np.concatenate(keys))
    del keys
    dup = all_keys[1:][all_keys[1:] == all_keys[:-1]]
    wanted = np.unique(dup)
    del all_keys
    hits = _map_units(max_crossings, [(u, n_min, wanted) for u in units], jobs)
    table = OddPartitionTable(max_crossings) if len(wanted) else None
    by_key: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    for unit, (key, idx) in zip(units, hits):
        for k, j in zip(key.tolist(), idx.tolist()):
            parts = table.parts(j)
            if unit:
                parts = sorted(parts + [unit])
            by_key[k].append(tuple(parts))
    return [by_key[k] for k in sorted(by_key)], scanned


def _dihedral_unit(args):
    total, convention = args
    return [(jones_fingerprint(t), t) for t in _tuples_with_crossings(total, convention)]


def _dihedral_candidates(max_crossings, convention, jobs, progress):
    tasks = [(total, convention) for total in range(1, max_crossings + 1)]
    if jobs <= 1:
        results = [_dihedral_unit(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_dihedral_unit, tasks))
    by_key: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    scanned = 0
    for chunk in results:
        for key, t in chunk:
            by_key[key].append(t)
        _report_progress(progress, scanned, scanned + len(chunk))
        scanned += len(chunk)
    return [ts for k, ts in sorted(by_key.items()) if len(ts) > 1], scanned


def write_report(report: CollisionReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2)
    if fmt == "csv":
        return report.to_csv()
    return report.to_text()
