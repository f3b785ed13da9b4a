import csv
import io
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pretzel_jones.diagram import count_components, pretzel_pd, writhe
from pretzel_jones.pretzel import jones
from pretzel_jones.search import (
    CONVENTIONS,
    FINGERPRINT_FIELDS,
    OddPartitionTable,
    canonicalize,
    count_knots,
    enumerate_knot_tuples,
    find_jones_collisions,
    is_knot_tuple,
    jones_fingerprint,
    make_record,
    pretzel_writhe,
)

tuples = st.lists(st.integers(1, 6), min_size=1, max_size=7).map(tuple)


def test_canonicalize_examples():
    assert canonicalize((3, 1, 2)) == (1, 2, 3)
    assert canonicalize((2, 1, 3)) == (1, 2, 3)
    assert canonicalize((5, 5)) == (5, 5)


def _dihedral_orbit(t):
    n = len(t)
    return {s[i:] + s[:i] for s in (t, t[::-1]) for i in range(n)}


@given(tuples)
def test_canonicalize_is_orbit_minimum(t):
    c = canonicalize(t)
    assert c == min(_dihedral_orbit(t))
    assert canonicalize(c) == c
    for other in _dihedral_orbit(t):
        assert canonicalize(other) == c


@pytest.mark.parametrize("convention", ["multiset", "n3"])
def test_enumerate_small(convention):
    assert list(enumerate_knot_tuples(3, convention)) == [(1, 1, 1)]
    assert list(enumerate_knot_tuples(4, convention)) == [(1, 1, 1), (1, 1, 2)]
    assert (1, 1, 1, 1) not in set(enumerate_knot_tuples(8, convention))


@pytest.mark.parametrize("convention", CONVENTIONS)
def test_enumeration_is_deterministic_sorted_and_unique(convention):
    first = list(enumerate_knot_tuples(11, convention))
    assert first == list(enumerate_knot_tuples(11, convention))
    assert first == sorted(first, key=lambda t: (sum(t), t))
    assert len(set(first)) == len(first)
    for t in first:
        assert canonicalize(t) == t
        assert count_components(pretzel_pd(t)) == 1


def test_n3_enumeration_matches_brute_force_orbits():
    from itertools import product

    expected = set()
    for n in range(3, 10):
        for t in product(range(1, 8), repeat=n):
            if sum(t) <= 9 and is_knot_tuple(t):
                expected.add(canonicalize(t))
    assert set(enumerate_knot_tuples(9, "n3")) == expected


def test_multiset_enumeration_matches_sorted_orbits():
    expected = {tuple(sorted(t)) for t in enumerate_knot_tuples(11, "n3")}
    assert set(enumerate_knot_tuples(11, "multiset")) == expected


@pytest.mark.parametrize("convention", CONVENTIONS)
@pytest.mark.parametrize("max_crossings", [3, 4, 9, 13])
def test_count_matches_enumeration(convention, max_crossings):
    assert count_knots(max_crossings, convention) == sum(1 for _ in enumerate_knot_tuples(max_crossings, convention))


def test_count_examples():
    assert count_knots(3, "n3") == 1
    assert count_knots(4, "n3") == 2


def test_writhe_closed_form_matches_trace():
    for t in enumerate_knot_tuples(13, "n1"):
        assert pretzel_writhe(t) == writhe(pretzel_pd(t)), t


def test_fingerprint_is_jones_evaluation():
    # independent route: evaluate the exact Jones polynomial at t = a^-4
    for t in enumerate_knot_tuples(12, "n1"):
        poly = jones(t)
        expected = 0
        for modulus, a in FINGERPRINT_FIELDS:
            expected = (expected << 32) | poly.evaluate_mod(pow(a, -4, modulus), modulus)
        assert jones_fingerprint(t) == expected, t


def test_vectorized_fingerprints_match_scalar():
    from pretzel_jones.search import _unit_fingerprints, _units

    table = OddPartitionTable(24)
    seen = {}
    for unit in _units(24):
        keys, idx = _unit_fingerprints(table, unit, 3)
        for key, j in zip(keys.tolist(), idx.tolist()):
            parts = table.parts(j) + ([unit] if unit else [])
            seen[tuple(sorted(parts))] = key
    assert seen == {t: jones_fingerprint(t) for t in enumerate_knot_tuples(24)}


def test_collisions_none_below_twelve():
    assert find_jones_collisions(11, jobs=1).groups == []


def test_collisions_at_twelve():
    report = find_jones_collisions(12, jobs=1)
    assert [g.tuples() for g in report.groups] == [((1, 1, 1, 1, 1, 1, 1, 2, 3), (3, 4, 5))]
    group = report.groups[0]
    assert group.alexander_distinct
    assert [m.alexander_degree for m in group.members] == [4, 8]
    assert [m.writhe for m in group.members] == [8, 4]


def test_collisions_dihedral_convention():
    report = find_jones_collisions(12, "n3", jobs=1)
    tuples = {t for g in report.groups for t in g.tuples()}
    assert canonicalize((4, 3, 5)) in tuples
    assert canonicalize((1, 1, 1, 1, 1, 1, 2, 1, 3)) in tuples
    # dihedral classes of one multiset are mutants with equal Jones polynomials
    assert report.equal_degree_groups()


def test_parallel_matches_serial_small():
    assert find_jones_collisions(12, "n3", jobs=1) == find_jones_collisions(12, "n3", jobs=2)


def test_record_and_outputs():
    report = find_jones_collisions(20, jobs=1)
    rows = list(csv.DictReader(io.StringIO(report.to_csv())))
    assert list(rows[0]) == ["tuple", "crossings", "writhe", "alexander_degree", "jones"]
    assert rows[1]["tuple"] == "3,4,5"
    assert rows[1]["jones"] == jones((3, 4, 5)).render()
    data = json.loads(json.dumps(report.to_json()))
    assert len(data["groups"]) == 2
    assert data["groups"][0]["members"][1]["tuple"] == [3, 4, 5]


def test_make_record_for_two_column_knot():
    rec = make_record((1, 4))
    assert rec.alexander_degree is None
    assert rec.crossing_number == 5
