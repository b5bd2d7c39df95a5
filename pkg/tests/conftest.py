from fractions import Fraction

import sympy
from hypothesis import strategies as st

from grassblow.poly import LaurentPoly, RationalFn

VARS = ("h", "x", "q1", "q2")


def to_sympy(p):
    """LaurentPoly or RationalFn -> sympy expression (independent oracle)."""
    if isinstance(p, RationalFn):
        return to_sympy(p.numer) / to_sympy(p.denom)
    syms = sympy.symbols(p.variables) if p.variables else ()
    if len(p.variables) == 1:
        syms = (syms,)
    out = sympy.Integer(0)
    for e, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(syms, e):
            term *= s ** k
        out += term
    return out


def sympy_equal(a, b) -> bool:
    return sympy.simplify(sympy.together(a - b)) == 0


coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def laurent(draw, variables=("h", "x", "q1"), max_terms=4, low=-2, high=3):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.integers(low, high)) for _ in variables)
        terms[e] = draw(coeffs)
    return LaurentPoly(tuple(variables), terms)


@st.composite
def polys(draw, variables=("h", "x", "q1"), max_terms=4, high=3):
    return draw(laurent(variables, max_terms, 0, high))


def frac(a, b=1):
    return Fraction(a, b)
