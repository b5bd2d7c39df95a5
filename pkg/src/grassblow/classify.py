"""Blowups of G(k, n) along smooth Schubert varieties.

A smooth Schubert center is labelled by ``(k, n, a, b)``: its partition is
``((n-k)^a, (n-k-b)^(k-a))`` and the center is isomorphic to G(k', n') with
``k' = k - a`` and ``n' = k + b - a``.  On the blowup X the Picard group is
spanned by the pullback H of the hyperplane class and the exceptional divisor
E, and the Mori cone by a line e in a fiber of E and the strict transform
ell - e of a line meeting Z once.  Everything here is numerical: the
anticanonical class is ``n H - (c - 1) E`` with ``c = codim Z``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from math import comb

from .schubert import (BoxSpec, SchubertExpr, chern_normal_bundle, degree_of_grassmannian,
                       integrate, segre_classes, sigma)

__all__ = [
    "BlowupSpec",
    "DegenerateCenter",
    "ClassificationReport",
    "classify",
    "mori_nef_data",
    "fibration_number",
    "dimension_equality",
    "bundle_bases",
    "combinatorial_inequality",
    "normal_splitting_on_line",
    "sweep",
]


class DegenerateCenter(ValueError):
    """The center is the whole Grassmannian."""


@dataclass(frozen=True)
class BlowupSpec:
    k: int
    n: int
    a: int
    b: int

    def __post_init__(self):
        k, n, a, b = self.k, self.n, self.a, self.b
        if n < 2 or not (1 <= k <= n - 1) or not (0 <= a <= k) or not (0 <= b <= n - k):
            raise ValueError(f"invalid center parameters {(k, n, a, b)}")
        if not any(self.partition):
            raise DegenerateCenter(f"{(k, n, a, b)} gives the empty partition: Z is G({k},{n})")

    @property
    def partition(self) -> tuple[int, ...]:
        w = self.n - self.k
        return (w,) * self.a + (w - self.b,) * (self.k - self.a)

    @property
    def center(self) -> BoxSpec:
        return BoxSpec(self.k - self.a, self.k + self.b - self.a)

    @property
    def codim(self) -> int:
        return self.k * (self.n - self.k) - self.center.dim

    @property
    def dim(self) -> int:
        return self.k * (self.n - self.k)

    def same_center(self, other: "BlowupSpec") -> bool:
        return (self.k, self.n, self.partition) == (other.k, other.n, other.partition)


def all_specs(max_n: int, min_n: int = 2):
    """Every valid spec with min_n <= n <= max_n, one per distinct center."""
    for n in range(min_n, max_n + 1):
        for k in range(1, n):
            seen = set()
            for a in range(k + 1):
                for b in range(n - k + 1):
                    try:
                        s = BlowupSpec(k, n, a, b)
                    except DegenerateCenter:
                        continue
                    if s.partition in seen:
                        continue
                    seen.add(s.partition)
                    yield s


@dataclass(frozen=True)
class Intersections:
    H_e: int
    H_l: int
    E_e: int
    E_l: int
    K_e: int          # (-K).e
    K_l_minus_e: int  # (-K).(l-e)
    nef: tuple[str, ...] = ("H", "H-E")
    mori: tuple[str, ...] = ("e", "l-e")

    @property
    def K_l(self) -> int:
        return self.K_e + self.K_l_minus_e

    def anticanonical_on_mori(self) -> dict[str, int]:
        """(-K).C for each Mori cone generator that is an actual curve class."""
        vals = {"e": self.K_e, "l-e": self.K_l_minus_e, "l": self.K_l}
        return {m: vals[m] for m in self.mori}


def mori_nef_data(spec: BlowupSpec) -> Intersections:
    """Intersection numbers of H, E and -K with e and ell.

    When Z is a divisor (c = 1) the blowup does nothing, e is not a curve and
    the Mori cone is spanned by the line class ell alone.
    """
    c = spec.codim
    mori = ("e", "l-e") if c >= 2 else ("l",)
    return Intersections(H_e=0, H_l=1, E_e=-1, E_l=0, K_e=c - 1, K_l_minus_e=spec.n - c + 1,
                         mori=mori)


@dataclass(frozen=True)
class ClassificationReport:
    spec: BlowupSpec
    centerK: int
    centerN: int
    codim: int
    isFano: bool
    fanoIndex: int | None
    exceptionalFano: bool
    bundleType: frozenset[str]
    intersections: Intersections
    fibrationNumber: int

    def to_json(self) -> dict:
        d = asdict(self)
        d["bundleType"] = sorted(self.bundleType)
        d["partition"] = list(self.spec.partition)
        d["intersections"]["mori"] = list(self.intersections.mori)
        d["intersections"]["nef"] = list(self.intersections.nef)
        return d


def _bundle_types(spec: BlowupSpec) -> frozenset[str]:
    k, n = spec.k, spec.n
    lam = spec.partition
    out = set()
    if lam == (1,) * k:
        out.add("TypeI")
    if lam == (n - k,) + (0,) * (k - 1):
        out.add("TypeII")
    if k == 1 or n - k == 1:
        out.add("TypeIII")
    return frozenset(out)


def bundle_bases(spec: BlowupSpec) -> dict[str, tuple[int, int]]:
    """The base G(p, p+q) of each projective-bundle structure, as (p, q)."""
    k, n = spec.k, spec.n
    out = {}
    types = _bundle_types(spec)
    if "TypeI" in types:
        out["TypeI"] = (n - k, k - 1)
    if "TypeII" in types:
        out["TypeII"] = (k, n - 1 - k)
    if "TypeIII" in types:
        # blowup of a projective space along a linear P^(n'-1): base P^(n-n'-1)
        m = spec.center.n if k == 1 else n - spec.center.n
        out["TypeIII"] = (1, n - m - 1)
    return out


def fibration_number(spec: BlowupSpec) -> int:
    """(H - E)^N on the blowup; zero exactly when the second contraction is a fibration."""
    N = spec.dim
    Z = spec.center
    top = degree_of_grassmannian(BoxSpec(spec.k, spec.n))
    seg = segre_classes(chern_normal_bundle(spec.k, spec.n, spec.a, spec.b))
    h = sigma(Z, (1,)) if Z.dim else SchubertExpr.one(Z)
    power = SchubertExpr.one(Z)
    correction = 0
    for i in range(Z.dim + 1):
        correction += comb(N, i) * integrate(seg[Z.dim - i] * power)
        power = power * h
    value = top - correction
    assert value.denominator == 1
    return int(value)


def classify(spec: BlowupSpec) -> ClassificationReport:
    c = spec.codim
    fano = c <= spec.n
    return ClassificationReport(
        spec=spec,
        centerK=spec.center.k,
        centerN=spec.center.n,
        codim=c,
        isFano=fano,
        fanoIndex=math.gcd(spec.n, c - 1) if fano else None,
        exceptionalFano=c < spec.n,
        bundleType=_bundle_types(spec),
        intersections=mori_nef_data(spec),
        fibrationNumber=fibration_number(spec),
    )


def dimension_equality(p: int, q: int, spec: BlowupSpec) -> bool:
    """C(p+q, p) + C(n', k') == C(n, k)."""
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    Z = spec.center
    return comb(p + q, p) + comb(Z.n, Z.k) == comb(spec.n, spec.k)


def combinatorial_inequality(alpha: int, beta: int) -> str:
    """Compare C(alpha(beta+1) - beta, alpha) with C(alpha(beta+1) - 1, alpha - 1)."""
    if alpha < 1 or beta < 1:
        raise ValueError("alpha and beta must be positive")
    lhs = comb(alpha * (beta + 1) - beta, alpha)
    rhs = comb(alpha * (beta + 1) - 1, alpha - 1)
    if lhs == rhs:
        return "equal"
    if lhs > rhs:
        return "strict"
    raise ArithmeticError(f"inequality fails at {(alpha, beta)}: {lhs} < {rhs}")


def normal_splitting_on_line(spec: BlowupSpec) -> tuple[int, int]:
    """Multiplicities of O and O(-1) in the conormal bundle restricted to a line in Z."""
    if spec.center.dim == 0:
        raise ValueError("the center is a point and contains no line")
    m = spec.n - spec.center.n
    return spec.codim - m, m


def sweep(max_n: int, min_n: int = 2) -> list[ClassificationReport]:
    return [classify(s) for s in all_specs(max_n, min_n)]
