"""Cohomology of X_{k,n}, the blowup of G(k,n) along G(k,n-1).

Two bases are in play.

``B1`` comes from the blowup description.  Its elements are pulled-back
Schubert classes ``sigma_lam`` (lam in the k x (n-k) box) and exceptional
classes ``E^i sigma_mu`` with ``1 <= i <= k-1`` and mu in the k x (n-1-k) box.
A class ``E^i sigma_mu`` only sees the restriction of sigma_mu to the center,
so partitions touching the right edge of the box die when multiplied by E.
Powers ``E^m`` with ``m >= k`` are rewritten with
``E^k = sum_i (-1)^(k-1-i) E^i sigma_{1^(k-i)}``.

``B2`` comes from the projective bundle X_{k,n} -> G(k-1,n-1).  Its elements
are ``E^i sigmabar_lam`` with ``0 <= i <= n-k`` and lam in the (k-1) x (n-k)
box, subject to ``E^(n-k+1) = -sum_{a>=1} E^a sigmabar_{n-k+1-a}``.

For k = 2 the base is P^(n-2), ``sigmabar_j`` is the power ``Hbar^j`` of its
hyperplane class, and the two bases are related by ``sigmabar_a = sigma_a -
E sigma_{a-1}`` and ``sigma_{a,b} = sum_{i=b}^{a} E^i Hbar^(a+b-i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple, Sequence

from .schubert import BoxSpec, SchubertExpr, dual_partition, partitions_in_box, sigma

__all__ = [
    "B1Element",
    "B2Element",
    "CohomClass",
    "UnsupportedFeature",
    "basis_b1",
    "basis_b2",
    "b1",
    "b2",
    "b1_mul",
    "b2_mul",
    "ek_reduce",
    "convert",
    "pair",
    "integrate",
    "dual",
    "E",
    "Hbar",
    "one",
    "mu_plus_dual",
    "lam_minus_dual",
    "degree",
    "pairing_matrix",
]


class UnsupportedFeature(NotImplementedError):
    """Requested computation is outside what is supported for this (k, n)."""


class B1Element(NamedTuple):
    power: int
    part: tuple[int, ...]

    def __str__(self):
        return _fmt("E", self.power, self.part, "s")


class B2Element(NamedTuple):
    power: int
    part: tuple[int, ...]

    def __str__(self):
        return _fmt("E", self.power, self.part, "sb")


def _fmt(e: str, i: int, part: tuple[int, ...], s: str) -> str:
    bits = []
    if i:
        bits.append(e if i == 1 else f"{e}^{i}")
    p = [str(x) for x in part if x]
    if p:
        bits.append(f"{s}[{','.join(p)}]")
    return "*".join(bits) or "1"


def _boxes(k: int, n: int) -> tuple[BoxSpec, BoxSpec, BoxSpec]:
    """(G(k,n), G(k,n-1), G(k-1,n-1))."""
    return BoxSpec(k, n), BoxSpec(k, n - 1), BoxSpec(k - 1, n - 1)


def _check_kn(k: int, n: int):
    if not (2 <= k <= n - 1):
        raise ValueError(f"X_(k,n) needs 2 <= k <= n-1, got {(k, n)}")


@lru_cache(maxsize=None)
def basis_b1(k: int, n: int) -> tuple[B1Element, ...]:
    _check_kn(k, n)
    G, Gm, _ = _boxes(k, n)
    out = [B1Element(0, lam) for lam in partitions_in_box(G)]
    for i in range(1, k):
        out += [B1Element(i, mu) for mu in partitions_in_box(Gm)]
    return tuple(out)


@lru_cache(maxsize=None)
def basis_b2(k: int, n: int) -> tuple[B2Element, ...]:
    _check_kn(k, n)
    _, _, Gb = _boxes(k, n)
    return tuple(B2Element(i, lam) for i in range(n - k + 1) for lam in partitions_in_box(Gb))


def degree(key: B1Element | B2Element) -> int:
    """Complex degree of a basis element."""
    return key.power + sum(key.part)


# ---------------------------------------------------------------------------
# CohomClass


@dataclass(frozen=True, eq=False)
class CohomClass:
    """A rational combination of B1 or B2 basis elements of H*(X_{k,n})."""

    k: int
    n: int
    basis: str
    coeffs: Mapping[tuple, Fraction]

    def __post_init__(self):
        if self.basis not in ("B1", "B2"):
            raise ValueError(f"unknown basis {self.basis}")
        cls = B1Element if self.basis == "B1" else B2Element
        valid = set(basis_b1(self.k, self.n) if self.basis == "B1" else basis_b2(self.k, self.n))
        clean: dict = {}
        for key, c in self.coeffs.items():
            c = Fraction(c)
            if not c:
                continue
            key = cls(int(key[0]), tuple(key[1]))
            if key not in valid:
                raise ValueError(f"{key} is not a {self.basis} element of X_({self.k},{self.n})")
            clean[key] = clean.get(key, 0) + c
        object.__setattr__(self, "coeffs", {k_: v for k_, v in clean.items() if v})

    @property
    def kn(self) -> tuple[int, int]:
        return (self.k, self.n)

    def _same(self, other: "CohomClass"):
        if not isinstance(other, CohomClass) or other.kn != self.kn or other.basis != self.basis:
            raise ValueError("classes live in different bases or spaces")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._same(other)
        out = dict(self.coeffs)
        for key, v in other.coeffs.items():
            out[key] = out.get(key, 0) + v
        return CohomClass(self.k, self.n, self.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CohomClass(self.k, self.n, self.basis,
                              {key: v * other for key, v in self.coeffs.items()})
        if isinstance(other, CohomClass):
            if other.kn != self.kn:
                raise ValueError("classes on different spaces")
            if other.basis != self.basis:
                other = convert(other, self.basis)
            return b1_mul(self, other) if self.basis == "B1" else b2_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        return self * other

    def __pow__(self, m: int):
        out = one(self.k, self.n, self.basis)
        for _ in range(m):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, CohomClass):
            return NotImplemented
        if other.kn != self.kn:
            return False
        if other.basis != self.basis:
            other = convert(other, self.basis)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.kn, self.basis, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def degrees(self) -> set[int]:
        return {degree(key) for key in self.coeffs}

    def degree_part(self, d: int) -> "CohomClass":
        return CohomClass(self.k, self.n, self.basis,
                          {key: v for key, v in self.coeffs.items() if degree(key) == d})

    def __str__(self):
        if not self.coeffs:
            return "0"
        s = ""
        for key, c in sorted(self.coeffs.items(), key=lambda t: (degree(t[0]), t[0])):
            a = abs(c)
            body = str(key) if a == 1 else f"{a}*{key}"
            s += (f" {'-' if c < 0 else '+'} " if s else ("-" if c < 0 else "")) + body
        return s

    __repr__ = __str__

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n, "basis": self.basis,
                "terms": [{"key": {"power": key.power, "lambda": list(key.part)},
                           "num": str(c.numerator), "den": str(c.denominator)}
                          for key, c in sorted(self.coeffs.items())]}

    @classmethod
    def from_json(cls, data: Mapping) -> "CohomClass":
        return cls(data["k"], data["n"], data["basis"],
                   {(t["key"]["power"], tuple(t["key"]["lambda"])):
                    Fraction(int(t["num"]), int(t["den"])) for t in data["terms"]})


def b1(k: int, n: int, power: int, part: Sequence[int] = (), coeff=1) -> CohomClass:
    """The B1 class coeff * E^power sigma_part, reduced to the basis."""
    _check_kn(k, n)
    G, Gm, _ = _boxes(k, n)
    box = G if power == 0 else Gm
    s = sigma(box, part)
    if not s:
        return CohomClass(k, n, "B1", {})
    (lam, c), = s.coeffs.items()
    return _b1_from_raw(k, n, {(power, lam): coeff * c})


def b2(k: int, n: int, power: int, part: Sequence[int] = (), coeff=1) -> CohomClass:
    """The B2 class coeff * E^power sigmabar_part, reduced."""
    _check_kn(k, n)
    _, _, Gb = _boxes(k, n)
    s = sigma(Gb, part)
    if not s:
        return CohomClass(k, n, "B2", {})
    (lam, c), = s.coeffs.items()
    return _b2_from_raw(k, n, {(power, lam): coeff * c})


def one(k: int, n: int, basis: str = "B1") -> CohomClass:
    return b1(k, n, 0) if basis == "B1" else b2(k, n, 0)


def E(k: int, n: int, basis: str = "B1") -> CohomClass:
    return b1(k, n, 1) if basis == "B1" else b2(k, n, 1)


def Hbar(n: int, basis: str = "B2") -> CohomClass:
    """Pullback of the hyperplane class of P^(n-2) on X_{2,n}."""
    h = b2(2, n, 0, (1,))
    return h if basis == "B2" else convert(h, "B1")


# ---------------------------------------------------------------------------
# B1 ring


def _restrict(s: SchubertExpr, box: BoxSpec) -> SchubertExpr:
    """Restriction G(k,n) -> G(k,n-1): drop partitions leaving the smaller box."""
    return SchubertExpr(box, {lam: c for lam, c in s.coeffs.items() if box.contains(lam)})


def _b1_from_raw(k: int, n: int, raw: Mapping[tuple[int, tuple], Fraction]) -> CohomClass:
    """Reduce a combination of E^m sigma_lam (any m >= 0) into B1."""
    G, Gm, _ = _boxes(k, n)
    out: dict = {}
    todo = dict(raw)
    while todo:
        (m, lam), c = todo.popitem()
        if not c:
            continue
        if m == 0:
            out[(0, lam)] = out.get((0, lam), 0) + c
            continue
        if not Gm.contains(lam):
            continue  # restricts to zero on the exceptional divisor
        if m < k:
            out[(m, lam)] = out.get((m, lam), 0) + c
            continue
        # E^m s_lam = E^(m-k) * sum_i (-1)^(k-1-i) E^i s_{1^(k-i)} s_lam
        base = sigma(G, lam)
        for i in range(k):
            sign = -1 if (k - 1 - i) % 2 else 1
            prod = sigma(G, (1,) * (k - i)) * base
            p = m - k + i
            if p > 0:
                prod = _restrict(prod, Gm)
            for nu, v in prod.coeffs.items():
                key = (p, nu)
                todo[key] = todo.get(key, 0) + sign * c * v
    return CohomClass(k, n, "B1", out)


def ek_reduce(k: int, n: int, power: int, part: Sequence[int] = ()) -> CohomClass:
    """E^power * sigma_part rewritten in B1 (powers of E below k)."""
    _check_kn(k, n)
    G = BoxSpec(k, n)
    s = sigma(G, part)
    if not s:
        return CohomClass(k, n, "B1", {})
    (lam, c), = s.coeffs.items()
    return _b1_from_raw(k, n, {(power, lam): c})


@lru_cache(maxsize=None)
def _b1_basis_product(k: int, n: int, x: B1Element, y: B1Element) -> tuple:
    G, Gm, _ = _boxes(k, n)
    if x.power + y.power == 0:
        prod = sigma(G, x.part) * sigma(G, y.part)
        raw = {(0, lam): c for lam, c in prod.coeffs.items()}
    else:
        a = _restrict(sigma(G, x.part), Gm)
        b = _restrict(sigma(G, y.part), Gm)
        if not a or not b:
            return ()
        prod = a * b
        raw = {(x.power + y.power, lam): c for lam, c in prod.coeffs.items()}
    return tuple(_b1_from_raw(k, n, raw).coeffs.items())


def b1_mul(a: CohomClass, b: CohomClass) -> CohomClass:
    if a.basis != "B1" or b.basis != "B1" or a.kn != b.kn:
        raise ValueError("b1_mul needs two B1 classes on the same X_(k,n)")
    out: dict = {}
    for x, u in a.coeffs.items():
        for y, v in b.coeffs.items():
            for key, c in _b1_basis_product(a.k, a.n, *sorted((x, y))):
                out[key] = out.get(key, 0) + u * v * c
    return CohomClass(a.k, a.n, "B1", out)


# ---------------------------------------------------------------------------
# B2 ring


def _b2_from_raw(k: int, n: int, raw: Mapping[tuple[int, tuple], Fraction]) -> CohomClass:
    _, _, Gb = _boxes(k, n)
    top = n - k
    out: dict = {}
    todo = dict(raw)
    while todo:
        (m, lam), c = todo.popitem()
        if not c:
            continue
        if m <= top:
            out[(m, lam)] = out.get((m, lam), 0) + c
            continue
        # E^(top+1) = -sum_{a=1}^{top} E^a sb_{top+1-a}
        base = sigma(Gb, lam)
        for a in range(1, top + 1):
            prod = sigma(Gb, (top + 1 - a,)) * base
            for nu, v in prod.coeffs.items():
                key = (m - top - 1 + a, nu)
                todo[key] = todo.get(key, 0) - c * v
    return CohomClass(k, n, "B2", out)


@lru_cache(maxsize=None)
def _b2_basis_product(k: int, n: int, x: B2Element, y: B2Element) -> tuple:
    _, _, Gb = _boxes(k, n)
    prod = sigma(Gb, x.part) * sigma(Gb, y.part)
    raw = {(x.power + y.power, lam): c for lam, c in prod.coeffs.items()}
    return tuple(_b2_from_raw(k, n, raw).coeffs.items())


def b2_mul(a: CohomClass, b: CohomClass) -> CohomClass:
    if a.basis != "B2" or b.basis != "B2" or a.kn != b.kn:
        raise ValueError("b2_mul needs two B2 classes on the same X_(k,n)")
    out: dict = {}
    for x, u in a.coeffs.items():
        for y, v in b.coeffs.items():
            for key, c in _b2_basis_product(a.k, a.n, *sorted((x, y))):
                out[key] = out.get(key, 0) + u * v * c
    return CohomClass(a.k, a.n, "B2", out)


# ---------------------------------------------------------------------------
# integration, duals, pairing


def integrate(a: CohomClass) -> Fraction:
    """Degree of the top-dimensional part.

    In B1 this is the coefficient of the pulled-back point class.  In B2 it is
    the coefficient of ``E^(n-k) sigmabar_top``.
    """
    k, n = a.kn
    if a.basis == "B1":
        return a.coeffs.get(B1Element(0, BoxSpec(k, n).top), Fraction(0))
    return a.coeffs.get(B2Element(n - k, BoxSpec(k - 1, n - 1).top), Fraction(0))


def pair(a: CohomClass, b: CohomClass) -> Fraction:
    """Poincare pairing, computed in the basis of the first argument."""
    return integrate(a * b)


def mu_plus_dual(mu: Sequence[int], k: int, n: int) -> tuple[int, ...]:
    """Complement of mu in the k x (n-1-k) box."""
    return dual_partition(mu, BoxSpec(k, n - 1))


def lam_minus_dual(lam: Sequence[int], k: int, n: int) -> tuple[int, ...]:
    """Complement of lam in the (k-1) x (n-k) box."""
    return dual_partition(lam, BoxSpec(k - 1, n - 1))


def dual(key: B1Element | B2Element, k: int, n: int) -> CohomClass:
    """The dual basis element under the Poincare pairing."""
    if isinstance(key, B2Element):
        i, lam = key
        base = b2(k, n, 0, lam_minus_dual(lam, k, n))
        s = sum((b2(k, n, a, (n - k - i - a,)) for a in range(n - k - i + 1)),
                CohomClass(k, n, "B2", {}))
        return base * s
    i, mu = key
    if i == 0:
        return b1(k, n, 0, dual_partition(mu, BoxSpec(k, n)))
    base = b1(k, n, 0, mu_plus_dual(mu, k, n))
    s = CohomClass(k, n, "B1", {})
    for a in range(1, k - i + 1):
        sign = -1 if (a + i - 1) % 2 else 1
        s = s + b1(k, n, a, (1,) * (k - i - a), sign)
    return base * s


def pairing_matrix(k: int, n: int, basis: str = "B1") -> list[list[Fraction]]:
    """Matrix of pair(e, dual(f)) over the chosen basis."""
    keys = basis_b1(k, n) if basis == "B1" else basis_b2(k, n)
    cls = {key: CohomClass(k, n, basis, {key: 1}) for key in keys}
    duals = {key: dual(key, k, n) for key in keys}
    return [[pair(cls[e], duals[f]) for f in keys] for e in keys]


# ---------------------------------------------------------------------------
# conversion


def _is_special(part: Sequence[int]) -> bool:
    return all(p == 0 for p in part[1:])


@lru_cache(maxsize=None)
def _b1_to_b2_key(k: int, n: int, key: B1Element) -> tuple:
    i, lam = key
    if k == 2:
        a, b = lam
        # sigma_{a,b} = sum_{j=b}^{a} E^j Hbar^(a+b-j)
        raw = {(i + j, (a + b - j,)): Fraction(1) for j in range(b, a + 1)}
    elif _is_special(lam) and i == 0:
        a = lam[0]
        Gb = BoxSpec(k - 1, n - 1)
        raw = {(j, Gb.normalize((a - j,))): Fraction(1) for j in range(a + 1)}
    else:
        raise UnsupportedFeature("B1 -> B2 conversion beyond special classes needs k = 2")
    return tuple(_b2_from_raw(k, n, raw).coeffs.items())


@lru_cache(maxsize=None)
def _b2_to_b1_key(k: int, n: int, key: B2Element) -> tuple:
    i, lam = key
    if k != 2 and not _is_special(lam):
        raise UnsupportedFeature("B2 -> B1 conversion beyond special classes needs k = 2")
    a = lam[0] if lam else 0
    # sigmabar_a = sigma_a - E sigma_(a-1)
    sb = b1(k, n, 0, (a,))
    if a:
        sb = sb - b1(k, n, 1, (a - 1,))
    out = b1(k, n, i) * sb if i else sb
    return tuple(out.coeffs.items())


def convert(a: CohomClass, target: str) -> CohomClass:
    """Change of basis.  Full for k = 2; special classes only otherwise."""
    if target not in ("B1", "B2"):
        raise ValueError(f"unknown basis {target}")
    if a.basis == target:
        return a
    k, n = a.kn
    out: dict = {}
    table = _b1_to_b2_key if target == "B2" else _b2_to_b1_key
    for key, c in a.coeffs.items():
        for key2, v in table(k, n, key):
            out[key2] = out.get(key2, 0) + c * v
    return CohomClass(k, n, target, out)
