"""Fast brackets and Jones polynomials of positive pretzel links.

Each twist column is a 2-tangle and expands in the basis {vertical pair of
strands, cap over cup}:

    column(p) = A^p * vertical + beta_p * cap-cup,
    beta_p    = A^(p-2) * sum_{t<p} (-A^-4)^t  (= A^p F_p / delta).

In the closure, the all-cap-cup choice gives 2 circles (one along the top,
one along the bottom) and a choice with h >= 1 vertical columns gives h
circles. Summing over choices:

    <D> = delta * prod(beta) + (prod(beta + delta * alpha) - prod(beta)) / delta.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diagram import PretzelSpec, count_components, pretzel_pd, writhe
from .errors import BadParams, NotAKnot, OddK, OddM
from .laurent import LaurentPoly, delta, divide_exact, f_poly, power, to_t_variable


@dataclass(frozen=True)
class TL2Element:
    """Bracket expansion of a 2-strand tangle.

    alpha multiplies the tangle whose strands pass straight through the
    column; beta multiplies the cap-cup tangle.
    """

    alpha: LaurentPoly
    beta: LaurentPoly


@lru_cache(maxsize=None)
def column_weights(p: int) -> TL2Element:
    if p < 1:
        raise ValueError(f"column twist count must be positive, got {p}")
    geometric = LaurentPoly({-4 * t: (-1) ** t for t in range(p)})
    return TL2Element(LaurentPoly.monomial(p), geometric.shift(p - 2))


def bracket_fast(spec) -> LaurentPoly:
    spec = PretzelSpec.of(spec)
    dl = delta()
    prod_beta = LaurentPoly.constant(1)
    prod_mixed = LaurentPoly.constant(1)
    for p in spec.columns:
        w = column_weights(p)
        prod_beta = prod_beta * w.beta
        prod_mixed = prod_mixed * (w.beta + dl * w.alpha)
    return dl * prod_beta + divide_exact(prod_mixed - prod_beta, dl)


def bracket_closed_form_mabc(m: int, a: int, b: int, c: int) -> LaurentPoly:
    """Three-column closed form with m leading single-crossing columns (m even)."""
    if m < 0 or m % 2:
        raise OddM(f"the closed form needs a non-negative even m, got {m}")
    if min(a, b, c) < 1:
        raise ValueError("a, b, c must be positive")
    dl = delta()
    d2 = power(dl, 2)
    fa, fb, fc = f_poly(a), f_poly(b), f_poly(c)
    numerator = (fa + d2) * (fb + d2) * (fc + d2) + power(LaurentPoly({-4: -1}), m) * (d2 - 1) * fa * fb * fc
    return divide_exact(numerator, power(dl, 4)).shift(3 * m + a + b + c)


def jones(spec) -> LaurentPoly:
    """Jones polynomial in t = A^-4 of the knot P(p_1, ..., p_n)."""
    spec = PretzelSpec.of(spec)
    d = pretzel_pd(spec)
    if count_components(d) != 1:
        raise NotAKnot(f"P({spec}) has {count_components(d)} components")
    w = writhe(d)
    normalized = bracket_fast(spec).shift(-3 * w) * (-1) ** (w % 2)
    return to_t_variable(normalized)


def theorem12_pair(k: int) -> tuple[PretzelSpec, PretzelSpec]:
    """(k; k+4, k+3, k+5) and (k+6; k+2, k+1, k+3)."""
    if k < 0 or k % 2:
        raise OddK(f"k must be a non-negative even integer, got {k}")
    return (
        PretzelSpec.shorthand(k, k + 4, k + 3, k + 5),
        PretzelSpec.shorthand(k + 6, k + 2, k + 1, k + 3),
    )


# -- identity suite ------------------------------------------------------------
# Each check rebuilds both sides from laurent primitives; no subexpression is
# shared between a left side and its right side.


def _x() -> LaurentPoly:
    return LaurentPoly({-4: -1})


def _x_pow(n: int) -> LaurentPoly:
    return LaurentPoly({-4 * n: (-1) ** n})


def _eq2() -> bool:
    lhs = LaurentPoly.monomial(-4) * (1 - LaurentPoly.monomial(-4)) * (power(delta(), 2) - 1)
    rhs = 1 + power(_x(), 3)
    return lhs == rhs


def _eq3(a: int, b: int) -> bool:
    first = f_poly(a + b) == power(_x(), b) * f_poly(a) + f_poly(b)
    second = f_poly(a) * f_poly(b) == f_poly(a + b) - f_poly(a) - f_poly(b)
    return first and second


def _f6_factorization() -> bool:
    rhs = LaurentPoly.monomial(-4) * f_poly(3) * (1 - LaurentPoly.monomial(-4)) * (power(delta(), 2) - 1)
    return f_poly(6) == rhs


def _lemma31(a: int) -> bool:
    d2 = power(delta(), 2)
    lhs = (f_poly(a + 2) + d2) * (f_poly(a + 1) + d2) - (f_poly(a - 1) + d2) * (f_poly(a - 2) + d2)
    rhs = _x_pow(a - 3) * f_poly(6) * f_poly(a)
    return lhs == rhs


def _lemma32(a: int) -> bool:
    d2 = power(delta(), 2)
    lhs = (d2 - 1) * (f_poly(a + 2) * f_poly(a + 1) - _x_pow(6) * f_poly(a - 1) * f_poly(a - 2))
    rhs = -f_poly(6) * (f_poly(a) + power(delta(), 2))
    return lhs == rhs


def _thm12_bracket(k: int) -> bool:
    lhs = bracket_closed_form_mabc(k, k + 4, k + 3, k + 5).shift(12)
    rhs = bracket_closed_form_mabc(k + 6, k + 2, k + 1, k + 3)
    return lhs == rhs


IDENTITIES = {
    "eq2": ((), _eq2),
    "eq3": (("a", "b"), _eq3),
    "f6_factorization": ((), _f6_factorization),
    "lemma31": (("a",), _lemma31),
    "lemma32": (("a",), _lemma32),
    "thm12_bracket": (("k",), _thm12_bracket),
}


def check_identity(name: str, **params: int) -> bool:
    if name not in IDENTITIES:
        raise BadParams(f"unknown identity {name!r}; choose from {sorted(IDENTITIES)}")
    needed, fn = IDENTITIES[name]
    if set(params) != set(needed):
        raise BadParams(f"{name} takes parameters {needed}, got {tuple(params)}")
    if name == "eq3" and (params["a"] < 1 or params["b"] < 1):
        raise BadParams("eq3 needs a, b >= 1")
    if name in ("lemma31", "lemma32") and params["a"] < 3:
        # F_{a-2} is only defined for a >= 3
        raise BadParams(f"{name} needs a >= 3")
    if name == "thm12_bracket" and (params["k"] < 0 or params["k"] % 2):
        raise BadParams("thm12_bracket needs a non-negative even k")
    return fn(**params)
