"""Exact Laurent polynomials, rational functions and Groebner bases over Q.

Polynomials are sparse maps from integer exponent tuples to ``Fraction``
coefficients.  Exponents may be negative, so monomials are units.

Ideal computations live in :class:`IdealBasis`.  A basis splits its variables
into *main* variables (the ones monomial orders see) and *parameters*, which
are treated as invertible scalars: the coefficient field is then
``Q(params)``.  Internally the Buchberger loop stays fraction free and keeps
coefficients as polynomials in the parameters, dividing out the content after
every reduction.

>>> h, x, q1 = LaurentPoly.symbols("h x q1")
>>> (h + x) ** 2
h^2 + 2*h*x + x^2
>>> x * x ** -1
1
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product
from typing import Iterable, Mapping, Sequence, Union

__all__ = [
    "LaurentPoly",
    "RationalFn",
    "MonomialOrder",
    "IdealBasis",
    "poly_gcd",
    "clear_denominators",
    "groebner",
    "normal_form",
    "ideal_equal",
    "quotient_rank",
    "standard_monomials",
    "saturate",
    "INFINITE",
]

Exp = tuple[int, ...]
Terms = dict[Exp, Fraction]
Scalar = Union[int, Fraction]

INFINITE = math.inf


# ---------------------------------------------------------------------------
# raw sparse helpers (fixed variable count)


def _add(a: Mapping[Exp, Fraction], b: Mapping[Exp, Fraction], sign: int = 1) -> Terms:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + sign * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _mul(a: Mapping[Exp, Fraction], b: Mapping[Exp, Fraction]) -> Terms:
    if len(a) > len(b):
        a, b = b, a
    out: Terms = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(i + j for i, j in zip(ea, eb))
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def _scale(a: Mapping[Exp, Fraction], c: Fraction, shift: Exp | None = None) -> Terms:
    if not c:
        return {}
    if shift is None:
        return {e: v * c for e, v in a.items()}
    return {tuple(i + j for i, j in zip(e, shift)): v * c for e, v in a.items()}


def _min_exp(a: Mapping[Exp, Fraction]) -> Exp:
    return tuple(min(col) for col in zip(*a))


def _lex_lead(a: Mapping[Exp, Fraction]) -> Exp:
    return max(a)


def _div_exact(a: Mapping[Exp, Fraction], b: Mapping[Exp, Fraction]) -> Terms | None:
    """Return a/b when b divides a exactly (as Laurent polynomials), else None."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return {}
    lb = _lex_lead(b)
    cb = b[lb]
    rem = dict(a)
    quo: Terms = {}
    # lex division terminates because lex leading terms strictly decrease and
    # the support of rem stays within the Newton polytope bound of a.
    lo = _min_exp(a)
    lob = _min_exp(b)
    floor = tuple(i - j for i, j in zip(lo, lob))
    while rem:
        la = _lex_lead(rem)
        e = tuple(i - j for i, j in zip(la, lb))
        if any(i < f for i, f in zip(e, floor)):
            return None
        c = rem[la] / cb
        quo[e] = c
        rem = _add(rem, _scale(b, c, e), -1)
    return quo


def _is_const(a: Mapping[Exp, Fraction]) -> bool:
    return len(a) == 1 and not any(next(iter(a)))


def _is_monomial(a: Mapping[Exp, Fraction]) -> bool:
    return len(a) == 1


# ---------------------------------------------------------------------------
# multivariate gcd over Q (recursive primitive PRS)


def _coeffs_in(a: Mapping[Exp, Fraction], i: int) -> dict[int, Terms]:
    out: dict[int, Terms] = {}
    for e, c in a.items():
        d = e[i]
        e0 = e[:i] + (0,) + e[i + 1:]
        out.setdefault(d, {})[e0] = c
    return out


def _monic_lex(a: Terms) -> Terms:
    c = a[_lex_lead(a)]
    return a if c == 1 else {e: v / c for e, v in a.items()}


def _gcd_poly(a: Terms, b: Terms) -> Terms:
    """gcd of two polynomials with nonnegative exponents, lex-monic."""
    n = len(next(iter(a or b)))
    one = {(0,) * n: Fraction(1)}
    if not a:
        return _monic_lex(b) if b else one
    if not b:
        return _monic_lex(a)
    ma, mb = _min_exp(a), _min_exp(b)
    mono = tuple(min(i, j) for i, j in zip(ma, mb))
    a = _scale(a, Fraction(1), tuple(-i for i in ma))
    b = _scale(b, Fraction(1), tuple(-i for i in mb))
    g = _gcd_nomono(a, b, n)
    return _scale(g, Fraction(1), mono)


def _gcd_nomono(a: Terms, b: Terms, n: int) -> Terms:
    one = {(0,) * n: Fraction(1)}
    if _is_const(a) or _is_const(b):
        return one
    if len(a) > len(b):
        a, b = b, a
    q = _div_exact(b, a)
    if q is not None:
        return _monic_lex(a)
    h = _heu_gcd(a, b, n)
    if h is not None:
        return h
    used = [i for i in range(n) if any(e[i] for e in a) or any(e[i] for e in b)]
    # main variable: the one with largest combined degree
    i = max(used, key=lambda j: max(e[j] for e in a) + max(e[j] for e in b))
    ca, cb = _coeffs_in(a, i), _coeffs_in(b, i)
    conta = _content(ca.values())
    contb = _content(cb.values())
    c = _gcd_poly(conta, contb)
    pa = _div_exact(a, conta)
    pb = _div_exact(b, contb)
    assert pa is not None and pb is not None
    if max(ca) == 0 or max(cb) == 0:
        # variable i absent from one side: the gcd lives in the content
        return _monic_lex(c)
    g = _prs(pa, pb, i)
    return _monic_lex(_mul(c, g))


def _integral(a: Terms) -> dict[Exp, int]:
    den = 1
    for c in a.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = {e: int(c * den) for e, c in a.items()}
    g = 0
    for v in ints.values():
        g = math.gcd(g, v)
    return {e: v // g for e, v in ints.items()}


def _heu_int(f: dict[Exp, int], g: dict[Exp, int], k: int, depth: int = 0) -> dict[Exp, int] | None:
    """Heuristic gcd of integer polynomials in the first k variables.

    Evaluate variable k-1 at a large integer xi, take the gcd of the images
    recursively, rebuild a candidate from its balanced xi-adic digits and
    accept it only if it divides both inputs.
    """
    if k == 0:
        (e, a), = f.items()
        (_, b), = g.items()
        return {e: math.gcd(a, b)}
    v = k - 1
    if not any(e[v] for e in f) and not any(e[v] for e in g):
        return _heu_int(f, g, k - 1, depth)
    norm = min(max(abs(c) for c in f.values()), max(abs(c) for c in g.values()))
    xi = 2 * norm + 29
    for _ in range(6):
        if xi.bit_length() * max(max(e[v] for e in f), max(e[v] for e in g)) > 20000:
            return None
        fe, ge = _eval_at(f, v, xi), _eval_at(g, v, xi)
        if not fe or not ge:
            xi = xi * 73794 // 27011
            continue
        gam = _heu_int(fe, ge, k - 1, depth + 1)
        if gam is None:
            return None
        cand: dict[Exp, int] = {}
        d = 0
        while gam:
            nxt: dict[Exp, int] = {}
            for e, c in gam.items():
                r = c % xi
                if r > xi // 2:
                    r -= xi
                if r:
                    cand[e[:v] + (d,) + e[v + 1:]] = r
                rest = (c - r) // xi
                if rest:
                    nxt[e] = rest
            gam = nxt
            d += 1
        if cand:
            cg = 0
            for c in cand.values():
                cg = math.gcd(cg, c)
            cand = {e: c // cg for e, c in cand.items()}
            cq = {e: Fraction(c) for e, c in cand.items()}
            if _div_exact({e: Fraction(c) for e, c in f.items()}, cq) is not None and \
                    _div_exact({e: Fraction(c) for e, c in g.items()}, cq) is not None:
                # the caller reconstructs from digits, so integer content matters
                cont = math.gcd(_icontent(f), _icontent(g))
                return {e: c * cont for e, c in cand.items()}
        xi = xi * 73794 // 27011
    return None


def _icontent(f: dict[Exp, int]) -> int:
    g = 0
    for c in f.values():
        g = math.gcd(g, c)
    return g


def _eval_at(f: dict[Exp, int], v: int, xi: int) -> dict[Exp, int]:
    out: dict[Exp, int] = {}
    for e, c in f.items():
        e0 = e[:v] + (0,) + e[v + 1:]
        out[e0] = out.get(e0, 0) + c * xi ** e[v]
    return {e: c for e, c in out.items() if c}


def _heu_gcd(a: Terms, b: Terms, n: int) -> Terms | None:
    r = _heu_int(_integral(a), _integral(b), n)
    if r is None:
        return None
    return _monic_lex({e: Fraction(c) for e, c in r.items()})


def _content(coeffs: Iterable[Terms]) -> Terms:
    items = sorted(coeffs, key=len)
    g = items[0]
    for t in items[1:]:
        if _is_const(g):
            break
        g = _gcd_poly(g, t)
    return _monic_lex(g)


def _primpart(a: Terms, i: int) -> Terms:
    cont = _content(_coeffs_in(a, i).values())
    q = _div_exact(a, cont)
    assert q is not None
    return q


def _deg(a: Terms, i: int) -> int:
    return max(e[i] for e in a)


def _prem(a: Terms, b: Terms, i: int) -> Terms:
    db = _deg(b, i)
    cb = _coeffs_in(b, i)
    lcb = cb[db]
    r = a
    while r and _deg(r, i) >= db:
        dr = _deg(r, i)
        lcr = _coeffs_in(r, i)[dr]
        shift = tuple(dr - db if j == i else 0 for j in range(len(next(iter(a)))))
        r = _add(_mul(r, lcb), _mul(_scale(b, Fraction(1), shift), lcr), -1)
    return r


def _prs(a: Terms, b: Terms, i: int) -> Terms:
    if _deg(a, i) < _deg(b, i):
        a, b = b, a
    while True:
        r = _prem(a, b, i)
        if not r:
            return _monic_lex(b)
        if _deg(r, i) == 0:
            n = len(next(iter(a)))
            return {(0,) * n: Fraction(1)}
        a, b = b, _primpart(r, i)


# ---------------------------------------------------------------------------
# LaurentPoly


def _fmt_coeff(c: Fraction) -> str:
    return str(c) if c.denominator == 1 else f"({c})"


@dataclass(frozen=True, eq=False)
class LaurentPoly:
    """A Laurent polynomial with rational coefficients.

    ``terms`` maps exponent tuples (aligned with ``variables``) to nonzero
    coefficients.  Instances are treated as immutable.
    """

    variables: tuple[str, ...]
    terms: Mapping[Exp, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        n = len(self.variables)
        if len(set(self.variables)) != n:
            raise ValueError(f"repeated variable in {self.variables}")
        clean: Terms = {}
        for e, c in self.terms.items():
            e = tuple(int(i) for i in e)
            if len(e) != n:
                raise ValueError("exponent length does not match variables")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    # construction ---------------------------------------------------------
    @classmethod
    def symbols(cls, names: str | Sequence[str]) -> tuple["LaurentPoly", ...]:
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        names = tuple(names)
        out = []
        for i, _ in enumerate(names):
            e = tuple(int(j == i) for j in range(len(names)))
            out.append(cls(names, {e: Fraction(1)}))
        return tuple(out)

    @classmethod
    def const(cls, c: Scalar, variables: Sequence[str] = ()) -> "LaurentPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): Fraction(c)})

    @classmethod
    def zero(cls, variables: Sequence[str] = ()) -> "LaurentPoly":
        return cls(tuple(variables), {})

    @classmethod
    def monomial(cls, variables: Sequence[str], exps: Sequence[int], c: Scalar = 1):
        return cls(tuple(variables), {tuple(exps): Fraction(c)})

    # alignment -----------------------------------------------------------
    def extend(self, variables: Sequence[str]) -> "LaurentPoly":
        """Re-express over a variable list that contains all of ours."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        idx = []
        for v in self.variables:
            if v not in variables:
                if any(e[self.variables.index(v)] for e in self.terms):
                    raise ValueError(f"variable {v} is used and cannot be dropped")
                idx.append(None)
            else:
                idx.append(variables.index(v))
        terms = {}
        for e, c in self.terms.items():
            new = [0] * len(variables)
            for i, j in zip(e, idx):
                if j is not None:
                    new[j] = i
            terms[tuple(new)] = c
        return LaurentPoly(variables, terms)

    def used_variables(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.variables)
                     if any(e[i] for e in self.terms))

    @staticmethod
    def _union(a: Sequence[str], b: Sequence[str]) -> tuple[str, ...]:
        return tuple(dict.fromkeys((*a, *b)))

    def _coerce(self, other) -> tuple["LaurentPoly", "LaurentPoly"]:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other, self.variables)
        if not isinstance(other, LaurentPoly):
            return NotImplemented, NotImplemented  # type: ignore[return-value]
        vs = self._union(self.variables, other.variables)
        return self.extend(vs), other.extend(vs)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, RationalFn):
            return NotImplemented
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return LaurentPoly(a.variables, _add(a.terms, b.terms))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, RationalFn):
            return NotImplemented
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return LaurentPoly(a.variables, _add(a.terms, b.terms, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RationalFn):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return LaurentPoly(self.variables, _scale(self.terms, Fraction(other)))
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return LaurentPoly(a.variables, _mul(a.terms, b.terms))

    __rmul__ = __mul__

    def __pow__(self, m: int):
        if not isinstance(m, int):
            raise TypeError("integer exponent required")
        if m < 0:
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial")
            (e, c), = self.terms.items()
            return LaurentPoly(self.variables, {tuple(i * m for i in e): c ** m})
        out = LaurentPoly.const(1, self.variables)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, LaurentPoly):
            a, b = self._coerce(other)
            q = _div_exact(a.terms, b.terms)
            if q is not None:
                return LaurentPoly(a.variables, q)
            return RationalFn(a, b)
        if isinstance(other, RationalFn):
            return RationalFn(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        return RationalFn(LaurentPoly.const(other, self.variables)) / self

    # comparison -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other, self.variables)
        if isinstance(other, RationalFn):
            return other == self
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._coerce(other)
        return a.terms == b.terms

    def __hash__(self):
        used = sorted(self.used_variables())
        return hash((tuple(used), frozenset(self._restrict(used).terms.items())))

    def _restrict(self, vs: Sequence[str]) -> "LaurentPoly":
        idx = [self.variables.index(v) for v in vs]
        return LaurentPoly(tuple(vs), {tuple(e[i] for i in idx): c for e, c in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    # inspection -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_polynomial(self) -> bool:
        return all(i >= 0 for e in self.terms for i in e)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def degree(self, var: str | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.variables:
            return 0
        i = self.variables.index(var)
        return max(e[i] for e in self.terms)

    def coefficient(self, exps: Mapping[str, int]) -> Fraction:
        e = tuple(exps.get(v, 0) for v in self.variables)
        return self.terms.get(e, Fraction(0))

    def coefficients_in(self, vars_: Sequence[str]) -> dict[Exp, "LaurentPoly"]:
        """Group by exponents of ``vars_``; values are polynomials in the rest."""
        idx = [self.variables.index(v) for v in vars_]
        out: dict[Exp, Terms] = {}
        for e, c in self.terms.items():
            key = tuple(e[i] for i in idx)
            rest = tuple(0 if j in idx else k for j, k in enumerate(e))
            out.setdefault(key, {})[rest] = c
        return {k: LaurentPoly(self.variables, t) for k, t in out.items()}

    def homogeneous_part(self, degree: int, weights: Mapping[str, int] | None = None):
        w = [1 if weights is None else weights.get(v, 0) for v in self.variables]
        return LaurentPoly(self.variables, {e: c for e, c in self.terms.items()
                                            if sum(i * j for i, j in zip(e, w)) == degree})

    def weighted_degrees(self, weights: Mapping[str, int]) -> set[int]:
        w = [weights.get(v, 0) for v in self.variables]
        return {sum(i * j for i, j in zip(e, w)) for e in self.terms}

    # calculus and evaluation ---------------------------------------------
    def diff(self, var: str) -> "LaurentPoly":
        if var not in self.variables:
            raise ValueError(f"{var} is not a variable of this polynomial")
        i = self.variables.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                terms[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return LaurentPoly(self.variables, terms)

    def evaluate(self, values: Mapping[str, Scalar]) -> "LaurentPoly":
        """Plug rational numbers into some variables."""
        keep = [v for v in self.variables if v not in values]
        idx = [self.variables.index(v) for v in keep]
        out: Terms = {}
        for e, c in self.terms.items():
            v = c
            for name, val in values.items():
                if name in self.variables:
                    v *= Fraction(val) ** e[self.variables.index(name)]
            if v:
                k = tuple(e[i] for i in idx)
                out[k] = out.get(k, 0) + v
        return LaurentPoly(tuple(keep), out)

    def __call__(self, **values: Scalar) -> Fraction | "LaurentPoly":
        p = self.evaluate(values)
        return p.constant_value() if p.is_constant() and not p.variables else p

    def substitute(self, bindings: Mapping[str, Union["LaurentPoly", "RationalFn", Scalar]]):
        """Replace variables by polynomials or rational functions."""
        return substitute(self, bindings)

    def min_exponents(self) -> Exp:
        return _min_exp(self.terms) if self.terms else (0,) * len(self.variables)

    # output ---------------------------------------------------------------
    def _mono_str(self, e: Exp) -> str:
        parts = []
        for v, i in zip(self.variables, e):
            if i == 1:
                parts.append(v)
            elif i:
                parts.append(f"{v}^{i}" if i > 0 else f"{v}^({i})")
        return "*".join(parts)

    def sorted_terms(self) -> list[tuple[Exp, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            m = self._mono_str(e)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not m:
                body = _fmt_coeff(a)
            elif a == 1:
                body = m
            else:
                body = f"{_fmt_coeff(a)}*{m}"
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    __repr__ = __str__

    def to_json(self) -> dict:
        """Terms sorted by degrevlex (variable-list order), largest first."""
        items = sorted(self.terms.items(), key=lambda t: _degrevlex_key(t[0]), reverse=True)
        return {"vars": list(self.variables),
                "terms": [{"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)}
                          for e, c in items]}

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentPoly":
        return cls(tuple(data["vars"]),
                   {tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in data["terms"]})


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor in the Laurent ring (monomial content dropped)."""
    a, b = a._coerce(b)
    if not a and not b:
        return LaurentPoly.zero(a.variables)
    ta = _scale(a.terms, Fraction(1), tuple(-i for i in a.min_exponents())) if a else {}
    tb = _scale(b.terms, Fraction(1), tuple(-i for i in b.min_exponents())) if b else {}
    return LaurentPoly(a.variables, _gcd_poly(ta, tb))


def clear_denominators(p: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Multiply by the smallest monomial making ``p`` a polynomial.

    Returns ``(polynomial, monomial)`` with ``polynomial = monomial * p``.
    """
    if not p:
        return p, LaurentPoly.const(1, p.variables)
    m = tuple(max(0, -i) for i in p.min_exponents())
    mono = LaurentPoly.monomial(p.variables, m)
    return p * mono, mono


# ---------------------------------------------------------------------------
# RationalFn


def _degrevlex_key(e: Exp) -> tuple:
    return (sum(e), tuple(-i for i in reversed(e)))


class RationalFn:
    """A reduced quotient of Laurent polynomials.

    The denominator is a polynomial without monomial factors whose leading
    coefficient under degrevlex (in variable-list order) is 1.  Monomial
    factors are units and move into the numerator.
    """

    __slots__ = ("numer", "denom")

    def __init__(self, numer: LaurentPoly | Scalar, denom: LaurentPoly | Scalar = 1,
                 _reduced: bool = False):
        if not isinstance(numer, LaurentPoly):
            vs = denom.variables if isinstance(denom, LaurentPoly) else ()
            numer = LaurentPoly.const(numer, vs)
        if not isinstance(denom, LaurentPoly):
            denom = LaurentPoly.const(denom, numer.variables)
        numer, denom = numer._coerce(denom)
        if not denom:
            raise ZeroDivisionError("denominator is the zero polynomial")
        if not _reduced:
            numer, denom = self._canonical(numer, denom)
        self.numer = numer
        self.denom = denom

    @staticmethod
    def _canonical(n: LaurentPoly, d: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        vs = n.variables
        if not n:
            return n, LaurentPoly.const(1, vs)
        md = d.min_exponents()
        dt = _scale(d.terms, Fraction(1), tuple(-i for i in md))
        nt = _scale(n.terms, Fraction(1), tuple(-i for i in md))
        if not _is_const(dt):
            mn = _min_exp(nt)
            ntp = _scale(nt, Fraction(1), tuple(-i for i in mn))
            q = _div_exact(ntp, dt)
            if q is not None:
                return LaurentPoly(vs, _scale(q, Fraction(1), mn)), LaurentPoly.const(1, vs)
            g = _gcd_nomono(ntp, dt, len(vs)) if vs else {(): Fraction(1)}
            if not _is_const(g):
                ntp = _div_exact(ntp, g)
                dt = _div_exact(dt, g)
            nt = _scale(ntp, Fraction(1), mn)
        lead = max(dt, key=_degrevlex_key)
        c = dt[lead]
        if c != 1:
            dt = {e: v / c for e, v in dt.items()}
            nt = {e: v / c for e, v in nt.items()}
        return LaurentPoly(vs, nt), LaurentPoly(vs, dt)

    @property
    def variables(self) -> tuple[str, ...]:
        return self.numer.variables

    def _lift(self, other) -> "RationalFn":
        if isinstance(other, RationalFn):
            return other
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return RationalFn(other)
        return NotImplemented

    def is_polynomial(self) -> bool:
        return self.denom.is_constant()

    def as_laurent(self) -> LaurentPoly:
        if not self.denom.is_constant():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.numer / self.denom.constant_value()

    @staticmethod
    def _finish(n: LaurentPoly, d: LaurentPoly) -> "RationalFn":
        """Normalize a fraction already known to be in lowest terms."""
        vs = n.variables
        if not n:
            return RationalFn(n, LaurentPoly.const(1, vs), _reduced=True)
        md = d.min_exponents()
        if any(md):
            shift = LaurentPoly.monomial(vs, [-i for i in md])
            n, d = n * shift, d * shift
        lead = max(d.terms, key=_degrevlex_key)
        c = d.terms[lead]
        if c != 1:
            n, d = n * (1 / c), d * (1 / c)
        return RationalFn(n, d, _reduced=True)

    @staticmethod
    def _gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
        if b.is_constant() or a.is_constant():
            return LaurentPoly.const(1, a.variables)
        return poly_gcd(a, b)

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if not o.numer:
            return self
        if not self.numer:
            return o
        a, b = self.numer._coerce(self.denom)
        c, d = o.numer._coerce(o.denom)
        a, c = a._coerce(c)
        b, d = b._coerce(d)
        g = self._gcd(b, d)
        bq, dq = b / g, d / g
        t = a * dq + c * bq
        if not t:
            return RationalFn(t)
        h = self._gcd(t, g)
        return self._finish(t / h, bq * dq * (g / h))

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.numer, self.denom, _reduced=True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self._cross(self.numer, self.denom, o.numer, o.denom)

    __rmul__ = __mul__

    @classmethod
    def _cross(cls, a, b, c, d) -> "RationalFn":
        """(a/b)(c/d) with both factors reduced: cancel across only."""
        if not a or not c:
            return RationalFn(LaurentPoly.zero(LaurentPoly._union(a.variables, c.variables)))
        a, c = a._coerce(c)
        b, d = b._coerce(d)
        a, b = a._coerce(b)
        c, d = c._coerce(d)
        g1, g2 = cls._gcd(a, d), cls._gcd(c, b)
        return cls._finish((a / g1) * (c / g2), (b / g2) * (d / g1))

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if not o.numer:
            raise ZeroDivisionError("division by the zero rational function")
        n, d = o.numer, o.denom
        return self._cross(self.numer, self.denom, d, n)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, m: int):
        if m < 0:
            return RationalFn(1) / (self ** -m)
        return self._finish(self.numer ** m, self.denom ** m)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.numer * o.denom - o.numer * self.denom).is_zero()

    def __hash__(self):
        return hash((hash(self.numer), hash(self.denom)))

    def __bool__(self):
        return bool(self.numer)

    def __str__(self):
        if self.denom.is_constant():
            return str(self.numer)
        return f"({self.numer})/({self.denom})"

    __repr__ = __str__

    def diff(self, var: str) -> "RationalFn":
        n, d = self.numer, self.denom
        if var not in n.variables:
            return RationalFn(LaurentPoly.zero(n.variables))
        return RationalFn(n.diff(var) * d - n * d.diff(var), d * d)

    def evaluate(self, values: Mapping[str, Scalar]) -> "RationalFn":
        return RationalFn(self.numer.evaluate(values), self.denom.evaluate(values))

    def to_json(self) -> dict:
        return {"numer": self.numer.to_json(), "denom": self.denom.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "RationalFn":
        return cls(LaurentPoly.from_json(data["numer"]), LaurentPoly.from_json(data["denom"]))


def substitute(p: LaurentPoly,
               bindings: Mapping[str, Union[LaurentPoly, RationalFn, Scalar]]) -> RationalFn:
    """Substitute rational functions for variables and reduce.

    Terms are grouped by the exponents of the substituted variables so each
    distinct power product is built once.
    """
    for v in bindings:
        if v not in p.variables:
            raise ValueError(f"{v} is not a variable of {p}")
    names = list(bindings)
    vals = {v: (b if isinstance(b, RationalFn) else RationalFn(b)) for v, b in bindings.items()}
    keep = [v for v in p.variables if v not in bindings]
    groups = p.coefficients_in(names)
    allvars = LaurentPoly._union(keep, [w for b in vals.values() for w in b.variables])

    # accumulate numerator over a common denominator built from powers
    total = RationalFn(LaurentPoly.zero(allvars))
    powers: dict[tuple[str, int], RationalFn] = {}

    def power(v: str, k: int) -> RationalFn:
        key = (v, k)
        if key not in powers:
            powers[key] = vals[v] ** k
        return powers[key]

    for exps, rest in groups.items():
        term = RationalFn(rest._restrict(keep).extend(allvars))
        for v, k in zip(names, exps):
            if k:
                term = term * power(v, k)
        total = total + term
    return total


# ---------------------------------------------------------------------------
# monomial orders and ideals


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on the main variables.

    ``kind`` is ``"degrevlex"``, ``"lex"`` or ``"elim"``.  ``precedence`` lists
    the main variables from largest to smallest.  For ``"elim"`` the first
    ``block`` variables are eliminated: monomials compare by degrevlex on that
    block first, then degrevlex on the rest.
    """

    kind: str = "degrevlex"
    precedence: tuple[str, ...] = ()
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind}")

    def key(self, e: Exp):
        if self.kind == "lex":
            return e
        if self.kind == "degrevlex":
            return _degrevlex_key(e)
        b = self.block
        return (_degrevlex_key(e[:b]), _degrevlex_key(e[b:]))


# internal polynomial over Q(params): main exponent -> param polynomial
_MPoly = dict[Exp, Terms]


@dataclass(frozen=True)
class IdealBasis:
    """Generators of an ideal in Q(params)[main variables].

    ``params`` are the parameters treated as invertible scalars; an empty
    tuple gives plain rational coefficients.  Generators may carry negative
    exponents in the parameters (those are units) but not in main variables.
    """

    generators: tuple[LaurentPoly, ...]
    order: MonomialOrder
    params: tuple[str, ...] = ()
    is_groebner: bool = False

    @property
    def variables(self) -> tuple[str, ...]:
        return self.order.precedence

    @property
    def coefficient_field(self) -> str:
        return f"QQ({','.join(self.params)})" if self.params else "QQ"

    @classmethod
    def make(cls, generators: Iterable[LaurentPoly], variables: Sequence[str],
             params: Sequence[str] = (), order: str = "degrevlex") -> "IdealBasis":
        return cls(tuple(generators), MonomialOrder(order, tuple(variables)), tuple(params))

    # conversion to and from the internal representation ------------------
    def _split(self, p: LaurentPoly) -> _MPoly:
        return _to_mpoly(p, self.variables, self.params)

    def _join(self, f: _MPoly) -> LaurentPoly:
        return _from_mpoly(f, self.variables, self.params)

    def leading_monomials(self) -> list[Exp]:
        return [_lead(self._split(g), self.order) for g in self.generators]

    def __str__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"<{gens}> over {self.coefficient_field} [{self.order.kind} {' > '.join(self.variables)}]"


def _to_mpoly(p: LaurentPoly, main: Sequence[str], params: Sequence[str]) -> _MPoly:
    extra = [v for v in p.used_variables() if v not in main and v not in params]
    if extra:
        raise ValueError(f"variables {extra} are neither main variables nor parameters")
    p = p.extend(LaurentPoly._union(main, params)) if set(p.variables) <= set(main) | set(params) \
        else p._restrict(p.used_variables()).extend(LaurentPoly._union(main, params))
    m = len(main)
    out: _MPoly = {}
    for e, c in p.terms.items():
        if any(i < 0 for i in e[:m]):
            raise ValueError("negative exponent in a main variable; clear denominators first")
        out.setdefault(e[:m], {})[e[m:]] = c
    return out


def _from_mpoly(f: _MPoly, main: Sequence[str], params: Sequence[str]) -> LaurentPoly:
    terms = {}
    for em, coeff in f.items():
        for ep, c in coeff.items():
            terms[em + ep] = c
    return LaurentPoly(LaurentPoly._union(main, params), terms)


def _lead(f: _MPoly, order: MonomialOrder) -> Exp:
    return max(f, key=order.key)


def _mp_clean_params(f: _MPoly, nparams: int) -> _MPoly:
    """Divide by the content in Q[params] (including monomial content)."""
    if not f:
        return f
    coeffs = list(f.values())
    # monomial content may be negative: parameters are units
    lo = tuple(min(col) for col in zip(*(e for c in coeffs for e in c))) if nparams else ()
    if nparams:
        coeffs = [_scale(c, Fraction(1), tuple(-i for i in lo)) for c in coeffs]
        if len(coeffs) > 1 and not any(_is_const(c) for c in coeffs):
            g = _content(coeffs)
        else:
            g = {(0,) * nparams: Fraction(1)}
        if not _is_const(g):
            coeffs = [_div_exact(c, g) for c in coeffs]
    keys = list(f)
    out = dict(zip(keys, coeffs))
    return out


def _mp_normalize(f: _MPoly, order: MonomialOrder, nparams: int) -> _MPoly:
    f = _mp_clean_params(f, nparams)
    if not f:
        return f
    lc = f[_lead(f, order)]
    c = lc[max(lc, key=_degrevlex_key)]
    if c != 1:
        f = {e: {k: v / c for k, v in t.items()} for e, t in f.items()}
    return f


def _mp_sub_mul(f: _MPoly, a: Terms, g: _MPoly, b: Terms, shift: Exp) -> _MPoly:
    """Return a*f - b*x^shift*g."""
    out: _MPoly = {}
    for e, c in f.items():
        out[e] = _mul(c, a) if not _is_const(a) else _scale(c, next(iter(a.values())))
    bconst = _is_const(b)
    bval = next(iter(b.values()))
    for e, c in g.items():
        k = tuple(i + j for i, j in zip(e, shift))
        prod = _scale(c, bval) if bconst else _mul(c, b)
        cur = out.get(k)
        v = _add(cur, prod, -1) if cur else {kk: -vv for kk, vv in prod.items()}
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _divides(a: Exp, b: Exp) -> bool:
    return all(i <= j for i, j in zip(a, b))


def _reduce(f: _MPoly, basis: list[_MPoly], leads: list[Exp], order: MonomialOrder,
            nparams: int) -> tuple[_MPoly, Terms]:
    """Fully reduce f; returns (r, c) with c*f - r in the ideal."""
    one = {(0,) * nparams: Fraction(1)}
    mult = one
    rem: _MPoly = {}
    f = dict(f)
    while f:
        t = _lead(f, order)
        for g, lg in zip(basis, leads):
            if _divides(lg, t):
                shift = tuple(i - j for i, j in zip(t, lg))
                lcg = g[lg]
                ct = f[t]
                if _is_const(lcg):
                    cg = next(iter(lcg.values()))
                    f = _mp_sub_mul(f, one, g, _scale(ct, 1 / cg), shift)
                else:
                    d = _gcd_poly(lcg, ct) if nparams else one
                    a = _div_exact(lcg, d)
                    b = _div_exact(ct, d)
                    f = _mp_sub_mul(f, a, g, b, shift)
                    rem = {e: _mul(c, a) for e, c in rem.items()}
                    mult = _mul(mult, a)
                break
        else:
            rem[t] = f.pop(t)
    return rem, mult


def _spoly(f: _MPoly, g: _MPoly, lf: Exp, lg: Exp, nparams: int) -> _MPoly:
    m = tuple(max(i, j) for i, j in zip(lf, lg))
    cf, cg = f[lf], g[lg]
    if nparams and not (_is_const(cf) and _is_const(cg)):
        d = _gcd_poly(cf, cg)
        a, b = _div_exact(cg, d), _div_exact(cf, d)
    else:
        a, b = cg, cf
    sf = {tuple(i + j - k for i, j, k in zip(e, m, lf)): c for e, c in f.items()}
    return _mp_sub_mul(sf, a, g, b, tuple(i - j for i, j in zip(m, lg)))


def _buchberger(gens: list[_MPoly], order: MonomialOrder, nparams: int) -> list[_MPoly]:
    basis: list[_MPoly] = []
    leads: list[Exp] = []
    pairs: list[tuple[int, int]] = []

    def add(h: _MPoly):
        h = _mp_normalize(h, order, nparams)
        lh = _lead(h, order)
        idx = len(basis)
        basis.append(h)
        leads.append(lh)
        for i in range(idx):
            pairs.append((i, idx))

    for g in gens:
        g = _mp_normalize(g, order, nparams)
        if not g:
            continue
        r, _ = _reduce(g, basis, leads, order, nparams)
        if r:
            add(r)
    while pairs:
        # normal selection strategy: smallest lcm first
        pairs.sort(key=lambda p: order.key(tuple(max(a, b) for a, b in
                                                  zip(leads[p[0]], leads[p[1]]))), reverse=True)
        i, j = pairs.pop()
        li, lj = leads[i], leads[j]
        lcm = tuple(max(a, b) for a, b in zip(li, lj))
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue  # coprime leading monomials
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not _divides(leads[k], lcm):
                continue
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik not in pairs and pjk not in pairs:
                skip = True
                break
        if skip:
            continue
        s = _spoly(basis[i], basis[j], li, lj, nparams)
        r, _ = _reduce(s, basis, leads, order, nparams)
        if r:
            add(r)
    # minimalize
    keep: list[int] = []
    for i in sorted(range(len(basis)), key=lambda i: order.key(leads[i])):
        if not any(_divides(leads[j], leads[i]) for j in keep):
            keep.append(i)
    mins = [basis[i] for i in keep]
    mleads = [leads[i] for i in keep]
    # interreduce
    out = []
    for idx, g in enumerate(mins):
        others = [h for k, h in enumerate(mins) if k != idx]
        oleads = [l for k, l in enumerate(mleads) if k != idx]
        lg = mleads[idx]
        head = {lg: g[lg]}
        tail = {e: c for e, c in g.items() if e != lg}
        r, mult = _reduce(tail, others, oleads, order, nparams)
        new = {lg: _mul(head[lg], mult)}
        new.update(r)
        out.append(_mp_normalize(new, order, nparams))
    out.sort(key=lambda g: order.key(_lead(g, order)))
    return out


def groebner(ideal: IdealBasis) -> IdealBasis:
    """Reduced Groebner basis, normalized to be unique up to nothing."""
    if not ideal.generators:
        raise ValueError("empty generator list")
    if ideal.is_groebner:
        return ideal
    nparams = len(ideal.params)
    gens = []
    for g in ideal.generators:
        if not g:
            continue
        gens.append(ideal._split(g))
    if not gens:
        raise ValueError("all generators are zero")
    basis = _buchberger(gens, ideal.order, nparams)
    return IdealBasis(tuple(ideal._join(g) for g in basis), ideal.order, ideal.params, True)


def _nf_raw(p: LaurentPoly, G: IdealBasis) -> tuple[_MPoly, Terms]:
    if not G.is_groebner:
        G = groebner(G)
    basis = [G._split(g) for g in G.generators]
    leads = [_lead(g, G.order) for g in basis]
    return _reduce(G._split(p), basis, leads, G.order, len(G.params))


def normal_form(p: LaurentPoly, G: IdealBasis) -> LaurentPoly | RationalFn:
    """Remainder of ``p`` modulo the Groebner basis ``G``.

    The result has coefficients in Q(params).  It is returned as a
    LaurentPoly whenever the common denominator is a monomial in the
    parameters (always the case for bases with monic leading coefficients)
    and as a RationalFn otherwise.
    """
    if not p:
        return LaurentPoly.zero(LaurentPoly._union(G.variables, G.params))
    r, mult = _nf_raw(p, G)
    num = G._join(r)
    den = LaurentPoly(G.params, mult).extend(num.variables)
    if den.is_monomial():
        return num * den ** -1
    return RationalFn(num, den)


def contains(G: IdealBasis, p: LaurentPoly) -> bool:
    if not p:
        return True
    r, _ = _nf_raw(p, G)
    return not r


def ideal_equal(I: IdealBasis, J: IdealBasis) -> bool:
    if set(I.variables) != set(J.variables) or set(I.params) != set(J.params):
        raise ValueError("ideals live in different rings")
    GI = groebner(I)
    GJ = groebner(IdealBasis(J.generators, I.order, I.params))
    return all(contains(GJ, g) for g in GI.generators) and \
        all(contains(GI, g) for g in GJ.generators)


def standard_monomials(G: IdealBasis, limit: int = 100000) -> list[Exp] | float:
    """Exponents of the monomials outside the initial ideal (or INFINITE)."""
    if not G.is_groebner:
        G = groebner(G)
    leads = G.leading_monomials()
    m = len(G.variables)
    bound = []
    for i in range(m):
        pure = [l[i] for l in leads if all(l[j] == 0 for j in range(m) if j != i) and l[i] > 0]
        if not pure and not any(not any(l) for l in leads):
            return INFINITE
        bound.append(min(pure) if pure else 0)
    if any(not any(l) for l in leads):
        return []
    out = []
    for e in product(*(range(b) for b in bound)):
        if not any(_divides(l, e) for l in leads):
            out.append(e)
            if len(out) > limit:
                raise OverflowError("too many standard monomials")
    out.sort(key=G.order.key)
    return out


def quotient_rank(G: IdealBasis) -> int | float:
    sm = standard_monomials(G)
    return sm if sm == INFINITE else len(sm)


def saturate(ideal: IdealBasis, by: LaurentPoly) -> IdealBasis:
    """Saturation I : by^infinity via an auxiliary variable, as a Groebner basis."""
    t = "_t"
    while t in ideal.variables or t in ideal.params:
        t += "_"
    tv = LaurentPoly.symbols([t])[0]
    gens = list(ideal.generators) + [tv * by - 1]
    order = MonomialOrder("elim", (t,) + ideal.variables, 1)
    G = groebner(IdealBasis(tuple(gens), order, ideal.params))
    keep = [g for g in G.generators if g.degree(t) <= 0]
    keep = [g._restrict([v for v in g.variables if v != t]) for g in keep]
    base = MonomialOrder(ideal.order.kind if ideal.order.kind != "elim" else "degrevlex",
                         ideal.variables)
    return groebner(IdealBasis(tuple(keep), base, ideal.params))
