"""Exact Laurent polynomials in one variable with integer coefficients.

Coefficients are Python ints, so nothing ever overflows. A polynomial is an
immutable value: every operation returns a new instance.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import NotDivisible, NotMultipleOfFour, ZeroPolynomial


class LaurentPoly:
    __slots__ = ("_terms", "var", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "A"):
        self._terms = {int(e): int(c) for e, c in (terms or {}).items() if c}
        self.var = var
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "A") -> LaurentPoly:
        return cls({exponent: coeff}, var)

    @classmethod
    def constant(cls, c: int, var: str = "A") -> LaurentPoly:
        return cls({0: c}, var)

    @classmethod
    def _raw(cls, terms: dict, var: str) -> LaurentPoly:
        # terms already free of zeros
        p = cls.__new__(cls)
        p._terms = terms
        p.var = var
        p._hash = None
        return p

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        """(exponent, coefficient) pairs by descending exponent."""
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def max_exp(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no degree")
        return max(self._terms)

    def min_exp(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no valuation")
        return min(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly._raw({}, self.var)
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()}, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                k = ea + eb
                out[k] = get(k, 0) + ca * cb
        return LaurentPoly._raw({e: c for e, c in out.items() if c}, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return power(self, n)

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by var**k."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()}, self.var)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items())))
        return self._hash

    # -- evaluation and substitution ---------------------------------------

    def evaluate(self, x):
        """Exact value at x; negative exponents of an int give a Fraction."""
        if isinstance(x, int):
            x = Fraction(x)
        total = 0
        for e, c in self._terms.items():
            total += c * x**e
        return total

    def evaluate_mod(self, x: int, modulus: int) -> int:
        total = 0
        for e, c in self._terms.items():
            total += c * pow(x, e, modulus)
        return total % modulus

    def negate_exponents(self) -> LaurentPoly:
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()}, self.var)

    # -- rendering ----------------------------------------------------------

    def render(self) -> str:
        """Canonical text: descending exponents, signed coefficients, `c*A^e`."""
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            sign = "+" if c > 0 else "-"
            if e == 0:
                parts.append(f"{sign}{abs(c)}")
            else:
                parts.append(f"{sign}{abs(c)}*{self.var}^{e}")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [[e, str(c)] for e, c in self.items()]

    @classmethod
    def from_json(cls, pairs: Iterable, var: str = "A") -> LaurentPoly:
        return cls({int(e): int(c) for e, c in pairs}, var)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LaurentPoly({self.render()!r}, var={self.var!r})"


A = LaurentPoly.monomial(1)
ONE = LaurentPoly.constant(1)
ZERO = LaurentPoly()


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def power(p: LaurentPoly, n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("exponent must be non-negative")
    result = LaurentPoly.constant(1, p.var)
    base = p
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def divide_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return r with r * q == p, by long division from the top exponent.

    Raises NotDivisible when the remainder is nonzero or a leading
    coefficient does not divide.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly._raw({}, p.var)
    q_terms = q._terms
    q_top = max(q_terms)
    q_low = min(q_terms)
    q_lead = q_terms[q_top]
    rem = dict(p._terms)
    quot: dict[int, int] = {}
    p_low = min(rem)
    # any exact quotient r has min exponent p_low - q_low
    while rem:
        top = max(rem)
        if top - q_top < p_low - q_low:
            raise NotDivisible(f"{p.render()} is not divisible by {q.render()}")
        c, r = divmod(rem[top], q_lead)
        if r:
            raise NotDivisible(f"{p.render()} is not divisible by {q.render()}")
        shift = top - q_top
        quot[shift] = c
        for e, qc in q_terms.items():
            k = e + shift
            v = rem.get(k, 0) - c * qc
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return LaurentPoly._raw(quot, p.var)


def delta() -> LaurentPoly:
    """Loop value -A^2 - A^-2."""
    return LaurentPoly({2: -1, -2: -1})


def minus_a_inv4() -> LaurentPoly:
    return LaurentPoly({-4: -1})


def f_poly(i: int) -> LaurentPoly:
    """(-A^-4)^i - 1."""
    if i < 1:
        raise ValueError(f"f_poly needs i >= 1, got {i}")
    return LaurentPoly({-4 * i: (-1) ** i}) - 1


def to_t_variable(p: LaurentPoly) -> LaurentPoly:
    """Substitute t = A^-4: c*A^(4u) becomes c*t^(-u)."""
    out = {}
    for e, c in p._terms.items():
        if e % 4:
            raise NotMultipleOfFour(f"exponent {e} of {p.render()} is not a multiple of 4")
        out[-e // 4] = c
    return LaurentPoly._raw(out, "t")


def span(p: LaurentPoly) -> int:
    if p.is_zero():
        raise ZeroPolynomial("span of the zero polynomial")
    return p.max_exp() - p.min_exp()
