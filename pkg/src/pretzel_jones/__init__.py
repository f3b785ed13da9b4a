"""Exact Kauffman brackets and Jones polynomials of positive pretzel links."""
from .diagram import PretzelSpec, bracket_brute, pretzel_pd
from .laurent import LaurentPoly
from .pretzel import bracket_closed_form_mabc, bracket_fast, check_identity, jones, theorem12_pair
from .search import count_knots, find_jones_collisions

__all__ = [
    "LaurentPoly",
    "PretzelSpec",
    "bracket_brute",
    "bracket_closed_form_mabc",
    "bracket_fast",
    "check_identity",
    "count_knots",
    "find_jones_collisions",
    "jones",
    "pretzel_pd",
    "theorem12_pair",
]
