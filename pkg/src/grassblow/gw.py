"""Two-point genus-zero Gromov-Witten invariants of X_{k,n}.

Curve classes are written ``d = d1 e + d2 (ell - e)``.  Only the degrees
``e``, ``ell - e`` and ``ell`` can carry nonzero two-point invariants.  The
first two are tabulated:

* degree e: ``<E^(k-1) sigma_mu, E^(k-1) sigma_{mu+^}> = 1`` in B1, with
  mu+^ the complement of mu in the k x (n-1-k) box;
* degree ell - e: ``<E^(n-k) sigmabar_lam, E^(n-k) sigmabar_{lam-^}> = 1`` in
  B2, with lam-^ the complement of lam in the (k-1) x (n-k) box;

and every other basis pair gives 0.  Degree ell is not available and raises
:class:`DeferredDegree`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .cohomology import (B1Element, B2Element, CohomClass, basis_b1, basis_b2, convert,
                         degree, dual, lam_minus_dual, mu_plus_dual, pair)
from .weyl import CurveDegree

__all__ = [
    "CurveDegree",
    "DeferredDegree",
    "GWEntry",
    "admissible",
    "two_point",
    "two_point_operator",
    "table",
    "expected_degree_sum",
    "chern_degree",
    "divisor_degree",
    "extract_from_ring",
]

E_DEG = CurveDegree(1, 0)
F_DEG = CurveDegree(0, 1)
L_DEG = CurveDegree(1, 1)


class DeferredDegree(NotImplementedError):
    """Degree-ell two-point invariants are not determined here."""


def _as_degree(d) -> CurveDegree:
    if isinstance(d, CurveDegree):
        return d
    if isinstance(d, str):
        named = {"e": E_DEG, "l-e": F_DEG, "l": L_DEG, "0": CurveDegree(0, 0)}
        if d not in named:
            raise ValueError(f"unknown degree name {d!r}")
        return named[d]
    d1, d2 = d
    return CurveDegree(int(d1), int(d2))


def admissible(d) -> bool:
    """True for the degrees e, ell - e and ell; the classical degree 0 is False."""
    d = _as_degree(d)
    return (d.d1, d.d2) in {(1, 0), (0, 1), (1, 1)}


def chern_degree(d, k: int, n: int) -> int:
    """c1(X).d with c1.e = k-1 and c1.(ell-e) = n-k+1."""
    d = _as_degree(d)
    return d.d1 * (k - 1) + d.d2 * (n - k + 1)


def expected_degree_sum(d, k: int, n: int) -> int:
    """deg a + deg b forced on a nonzero <a, b>_d (complex degrees)."""
    return k * (n - k) + chern_degree(d, k, n) - 1


def divisor_degree(divisor: str, d) -> int:
    """Intersection of E, H (pullback of sigma_1) or Hbar = H - E with d."""
    d = _as_degree(d)
    on_e = {"E": -1, "H": 0, "Hbar": 1}
    on_f = {"E": 1, "H": 1, "Hbar": 0}
    if divisor not in on_e:
        raise ValueError(f"unknown divisor {divisor!r}")
    return d.d1 * on_e[divisor] + d.d2 * on_f[divisor]


def _in_basis(a: CohomClass, basis: str) -> CohomClass:
    if a.basis == basis:
        return a
    if a.k != 2:
        raise ValueError(f"degree needs {basis} insertions for k = {a.k}; convert first")
    return convert(a, basis)


def _partner(key, k: int, n: int):
    """The basis element paired with key by the table, or None."""
    if isinstance(key, B1Element):
        if key.power != k - 1:
            return None
        return B1Element(k - 1, mu_plus_dual(key.part, k, n))
    if key.power != n - k:
        return None
    return B2Element(n - k, lam_minus_dual(key.part, k, n))


def two_point(d, a: CohomClass, b: CohomClass) -> Fraction:
    """<a, b>_d, extended bilinearly from the tables."""
    d = _as_degree(d)
    if a.kn != b.kn:
        raise ValueError("classes on different spaces")
    k, n = a.kn
    if (d.d1, d.d2) == (1, 1):
        raise DeferredDegree("degree-ell two-point invariants are not tabulated")
    if (d.d1, d.d2) == (1, 0):
        basis = "B1"
    elif (d.d1, d.d2) == (0, 1):
        basis = "B2"
    else:
        # degree 0 is unstable for two points; everything else vanishes
        return Fraction(0)
    a, b = _in_basis(a, basis), _in_basis(b, basis)
    total = Fraction(0)
    for key, c in a.coeffs.items():
        p = _partner(key, k, n)
        if p is not None and p in b.coeffs:
            total += c * b.coeffs[p]
    return total


def two_point_operator(d, a: CohomClass) -> CohomClass:
    """sum over basis beta of <a, beta>_d beta^dual, in the basis of the table."""
    d = _as_degree(d)
    k, n = a.kn
    if (d.d1, d.d2) == (1, 1):
        raise DeferredDegree("degree-ell two-point invariants are not tabulated")
    basis = "B1" if (d.d1, d.d2) == (1, 0) else "B2"
    out = CohomClass(k, n, basis, {})
    if (d.d1, d.d2) not in ((1, 0), (0, 1)):
        return out
    for key, c in _in_basis(a, basis).coeffs.items():
        p = _partner(key, k, n)
        if p is not None:
            out = out + dual(p, k, n) * c
    return out


class GWEntry(tuple):
    """(degree, left key, right key, value)."""

    def __new__(cls, degree, left, right, value):
        return super().__new__(cls, (degree, left, right, Fraction(value)))

    degree = property(lambda s: s[0])
    left = property(lambda s: s[1])
    right = property(lambda s: s[2])
    value = property(lambda s: s[3])

    def to_json(self) -> dict:
        d = self.degree
        return {"degree": [d.d1, d.d2], "left": str(self.left), "right": str(self.right),
                "value": str(self.value)}


def table(k: int, n: int, d) -> Iterator[GWEntry]:
    """All nonzero basis entries of the degree-d table."""
    d = _as_degree(d)
    if (d.d1, d.d2) == (1, 0):
        keys, basis = basis_b1(k, n), "B1"
    elif (d.d1, d.d2) == (0, 1):
        keys, basis = basis_b2(k, n), "B2"
    elif (d.d1, d.d2) == (1, 1):
        raise DeferredDegree("degree-ell two-point invariants are not tabulated")
    else:
        return
    for key in keys:
        p = _partner(key, k, n)
        if p is not None:
            yield GWEntry(d, key, p, 1)


def extract_from_ring(n: int, d, a: CohomClass, b: CohomClass, divisor: str = "E") -> Fraction:
    """<a, b>_d recovered from the quantum ring of X_{2,n} by the divisor axiom.

    The q^d coefficient of ``D * a`` paired with b is <D, a, b>_d, and
    dividing by D.d gives the two-point invariant.  E works for both e and
    ell - e; Hbar only sees e and H only sees ell - e.
    """
    from . import quantum  # circular at module level

    d = _as_degree(d)
    if a.k != 2 or b.k != 2:
        raise ValueError("ring extraction needs k = 2")
    if (d.d1, d.d2) not in ((1, 0), (0, 1)):
        raise ValueError("ring extraction supports degrees e and ell - e")
    dd = divisor_degree(divisor, d)
    if dd == 0:
        raise ValueError(f"{divisor} has degree 0 on {d}; the divisor axiom gives nothing")
    b2 = _in_basis(b, "B2")
    three = Fraction(0)
    for key, c in _in_basis(a, "B2").coeffs.items():
        three += c * pair(_divisor_times(n, divisor, key, d.d1, d.d2), b2)
    return three / dd


@lru_cache(maxsize=None)
def _divisor_times(n: int, divisor: str, key: B2Element, d1: int, d2: int) -> CohomClass:
    from . import quantum

    prod = quantum.qmul(quantum.divisor_class(n, divisor), CohomClass(2, n, "B2", {key: 1}))
    return prod.coefficient(d1, d2)


def degree_sum_ok(d, a_key, b_key, k: int, n: int) -> bool:
    return degree(a_key) + degree(b_key) == expected_degree_sum(d, k, n)
