import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pretzel_jones.diagram import PretzelSpec, alexander_degree, bracket_brute, pretzel_pd, writhe
from pretzel_jones.errors import BadParams, NotAKnot, OddK, OddM
from pretzel_jones.laurent import LaurentPoly, delta, divide_exact, f_poly, span
from pretzel_jones.pretzel import (
    bracket_closed_form_mabc,
    bracket_fast,
    check_identity,
    column_weights,
    jones,
    theorem12_pair,
)
from pretzel_jones.search import compositions, is_knot_tuple


def test_column_weights_by_hand():
    w1, w2, w3 = column_weights(1), column_weights(2), column_weights(3)
    assert (w1.alpha, w1.beta) == (LaurentPoly({1: 1}), LaurentPoly({-1: 1}))
    assert (w2.alpha, w2.beta) == (LaurentPoly({2: 1}), LaurentPoly({0: 1, -4: -1}))
    assert (w3.alpha, w3.beta) == (LaurentPoly({3: 1}), LaurentPoly({1: 1, -3: -1, -7: 1}))


@pytest.mark.parametrize("p", range(1, 25))
def test_beta_equals_f_over_delta(p):
    via_division = divide_exact(f_poly(p).shift(p), delta())
    assert column_weights(p).beta == via_division


def test_bracket_fast_matches_oracle_examples():
    assert bracket_fast((1, 1, 1)) == bracket_brute(pretzel_pd((1, 1, 1)))
    assert bracket_fast((2, 3, 2)) == bracket_brute(pretzel_pd((2, 3, 2)))
    assert bracket_fast(PretzelSpec.shorthand(0, 4, 3, 5)) == bracket_closed_form_mabc(0, 4, 3, 5)


def test_bracket_fast_matches_oracle_small_sweep():
    for total in range(1, 10):
        for cols in compositions(total):
            assert bracket_fast(cols) == bracket_brute(pretzel_pd(cols)), cols


def test_closed_form_examples():
    assert bracket_closed_form_mabc(0, 1, 1, 1) == bracket_brute(pretzel_pd((1, 1, 1)))
    assert bracket_closed_form_mabc(2, 1, 1, 1) == bracket_brute(pretzel_pd((1,) * 5))
    assert bracket_closed_form_mabc(0, 4, 3, 5).shift(12) == bracket_closed_form_mabc(6, 2, 1, 3)


@pytest.mark.parametrize("m", [1, 3, -2])
def test_closed_form_rejects_odd_m(m):
    with pytest.raises(OddM):
        bracket_closed_form_mabc(m, 1, 2, 3)


def test_bracket_fast_covers_odd_m():
    spec = PretzelSpec.shorthand(3, 2, 1, 2)
    assert bracket_fast(spec) == bracket_brute(pretzel_pd(spec))


@pytest.mark.parametrize(
    "name,params",
    [
        ("eq2", {}),
        ("eq3", {"a": 2, "b": 3}),
        ("f6_factorization", {}),
        ("lemma31", {"a": 5}),
        ("lemma32", {"a": 7}),
        ("thm12_bracket", {"k": 0}),
    ],
)
def test_identities(name, params):
    assert check_identity(name, **params) is True


def test_identity_detects_a_wrong_claim():
    # the lemma31 identity with a shifted power of (-A^-4) must fail
    from pretzel_jones import pretzel

    d2 = delta() * delta()
    a = 5
    lhs = (f_poly(a + 2) + d2) * (f_poly(a + 1) + d2) - (f_poly(a - 1) + d2) * (f_poly(a - 2) + d2)
    wrong = pretzel._x_pow(a - 2) * f_poly(6) * f_poly(a)
    assert lhs != wrong


@pytest.mark.parametrize(
    "name,params",
    [("lemma31", {"a": 2}), ("lemma32", {"a": 1}), ("eq3", {"a": 0, "b": 1}), ("thm12_bracket", {"k": 3}),
     ("nope", {}), ("eq2", {"a": 1})],
)
def test_identity_bad_params(name, params):
    with pytest.raises(BadParams):
        check_identity(name, **params)


def test_jones_trefoil():
    # left-handed trefoil in this crossing convention
    assert jones((1, 1, 1)) == LaurentPoly({-4: -1, -3: 1, -1: 1}, "t")


def test_jones_family_pair_k0():
    first, second = theorem12_pair(0)
    assert jones(first) == jones(second)


def test_jones_rejects_links():
    with pytest.raises(NotAKnot):
        jones((1, 1))


def test_family_pair_columns():
    assert theorem12_pair(0) == (PretzelSpec((4, 3, 5)), PretzelSpec((1, 1, 1, 1, 1, 1, 2, 1, 3)))
    first, second = theorem12_pair(2)
    assert first.columns == (1, 1, 6, 5, 7)
    assert second.columns == (1,) * 8 + (4, 3, 5)
    assert [s.crossings for s in theorem12_pair(22)] == [100, 100]
    with pytest.raises(OddK):
        theorem12_pair(1)


@pytest.mark.parametrize("k", [0, 2, 4, 10])
def test_family_pair_writhe_and_degree(k):
    first, second = theorem12_pair(k)
    d1, d2 = pretzel_pd(first), pretzel_pd(second)
    # traced writhes are 2k+4 and 2k+8; they agree with k+4 and k+8 only at k = 0
    assert (writhe(d1), writhe(d2)) == (2 * k + 4, 2 * k + 8)
    assert (alexander_degree(d1), alexander_degree(d2)) == (2 * k + 8, 2 * k + 4)


def test_writhe_k_plus_4_does_not_normalize_at_k2():
    from pretzel_jones.errors import NotMultipleOfFour
    from pretzel_jones.laurent import to_t_variable

    first, _ = theorem12_pair(2)
    with pytest.raises(NotMultipleOfFour):
        to_t_variable(bracket_fast(first).shift(-3 * (2 + 4)))


knot_specs = st.lists(st.integers(1, 9), min_size=1, max_size=7).filter(is_knot_tuple).map(tuple)


@settings(max_examples=60, deadline=None)
@given(knot_specs)
def test_jones_at_one_is_one(cols):
    assert jones(cols).evaluate(1) == 1


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 10), min_size=3, max_size=8).map(tuple))
def test_tait_span(cols):
    assert span(bracket_fast(cols)) == 4 * sum(cols)


def test_bracket_depends_only_on_multiset():
    rng = random.Random(7)
    for _ in range(20):
        cols = [rng.randint(1, 6) for _ in range(rng.randint(3, 6))]
        shuffled = cols[:]
        rng.shuffle(shuffled)
        assert bracket_fast(cols) == bracket_fast(shuffled)
