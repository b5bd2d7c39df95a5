"""Schubert calculus on the Grassmannian G(k, n).

Classes are indexed by partitions in the k x (n-k) box.  Products go through
Giambelli: the second factor is expanded as a determinant in special classes
and each special class acts by Pieri.  A separate Littlewood-Richardson
tableau count lives in :func:`lr_coefficient` and is only used as a check.

>>> G = BoxSpec(2, 4)
>>> s1 = sigma(G, (1,))
>>> s1 * s1
s[1,1] + s[2]
>>> integrate(s1 ** 4)
Fraction(2, 1)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Sequence

__all__ = [
    "BoxSpec",
    "Partition",
    "SchubertExpr",
    "sigma",
    "partitions_in_box",
    "dual_partition",
    "pieri",
    "product",
    "integrate",
    "degree_of_grassmannian",
    "hook_length_count",
    "lr_coefficient",
    "lr_product",
    "chern_normal_bundle",
    "segre_classes",
    "total_chern_Q",
    "total_chern_Sdual",
]

Partition = tuple[int, ...]


@dataclass(frozen=True, order=True)
class BoxSpec:
    """The Grassmannian G(k, n); classes live in a k x (n-k) box.

    k = 0 and k = n are allowed and describe a point.
    """

    k: int
    n: int

    def __post_init__(self):
        if not (0 <= self.k <= self.n) or self.n < 0:
            raise ValueError(f"invalid Grassmannian G({self.k},{self.n})")

    @property
    def width(self) -> int:
        return self.n - self.k

    @property
    def dim(self) -> int:
        return self.k * (self.n - self.k)

    def normalize(self, parts: Iterable[int]) -> Partition:
        """Pad with zeros to length k; raise if outside the box."""
        parts = tuple(int(p) for p in parts)
        while len(parts) > self.k and parts[-1] == 0:
            parts = parts[:-1]
        if len(parts) > self.k:
            raise ValueError(f"{parts} has more than {self.k} rows")
        parts = parts + (0,) * (self.k - len(parts))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"{parts} is not weakly decreasing")
        if parts and (parts[0] > self.width or parts[-1] < 0):
            raise ValueError(f"{parts} does not fit in the {self.k}x{self.width} box")
        return parts

    def contains(self, parts: Sequence[int]) -> bool:
        return len(parts) == self.k and all(0 <= p <= self.width for p in parts) and \
            all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))

    @property
    def top(self) -> Partition:
        return (self.width,) * self.k

    def __str__(self):
        return f"G({self.k},{self.n})"


def partitions_in_box(box: BoxSpec) -> list[Partition]:
    """All partitions in the box, lexicographically sorted."""
    out: list[Partition] = []

    def rec(prefix: list[int], bound: int):
        if len(prefix) == box.k:
            out.append(tuple(prefix))
            return
        for p in range(bound + 1):
            rec(prefix + [p], p)

    rec([], box.width)
    return sorted(out)


def dual_partition(lam: Sequence[int], box: BoxSpec) -> Partition:
    lam = box.normalize(lam)
    return tuple(box.width - p for p in reversed(lam))


# ---------------------------------------------------------------------------
# linear combinations


def _fmt(p: Partition) -> str:
    parts = [str(i) for i in p if i]
    return "s[" + ",".join(parts) + "]" if parts else "1"


@dataclass(frozen=True, eq=False)
class SchubertExpr:
    """A rational combination of Schubert classes on ``box``."""

    box: BoxSpec
    coeffs: Mapping[Partition, Fraction]

    def __post_init__(self):
        clean = {}
        for lam, c in self.coeffs.items():
            c = Fraction(c)
            if c:
                lam = self.box.normalize(lam)
                clean[lam] = clean.get(lam, 0) + c
        object.__setattr__(self, "coeffs", {k: v for k, v in clean.items() if v})

    @classmethod
    def zero(cls, box: BoxSpec) -> "SchubertExpr":
        return cls(box, {})

    @classmethod
    def one(cls, box: BoxSpec) -> "SchubertExpr":
        return cls(box, {(0,) * box.k: 1})

    def _check(self, other: "SchubertExpr"):
        if not isinstance(other, SchubertExpr) or other.box != self.box:
            raise ValueError("Schubert classes on different Grassmannians")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return SchubertExpr(self.box, out)

    __radd__ = __add__

    def __neg__(self):
        return SchubertExpr(self.box, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SchubertExpr(self.box, {k: v * other for k, v in self.coeffs.items()})
        return product(self, other)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, m: int):
        out = SchubertExpr.one(self.box)
        for _ in range(m):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, SchubertExpr):
            return NotImplemented
        return self.box == other.box and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.box, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def degree_part(self, d: int) -> "SchubertExpr":
        return SchubertExpr(self.box, {k: v for k, v in self.coeffs.items() if sum(k) == d})

    def __str__(self):
        if not self.coeffs:
            return "0"
        items = sorted(self.coeffs.items(), key=lambda t: (sum(t[0]), t[0]))
        s = ""
        for lam, c in items:
            sign = "-" if c < 0 else "+"
            a = abs(c)
            body = _fmt(lam) if a == 1 else f"{a}*{_fmt(lam)}"
            s += (f" {sign} " if s else ("-" if c < 0 else "")) + body
        return s

    __repr__ = __str__

    def to_json(self) -> dict:
        return {"k": self.box.k, "n": self.box.n,
                "terms": [{"lambda": list(lam), "num": str(c.numerator), "den": str(c.denominator)}
                          for lam, c in sorted(self.coeffs.items())]}

    @classmethod
    def from_json(cls, data: Mapping) -> "SchubertExpr":
        box = BoxSpec(data["k"], data["n"])
        return cls(box, {tuple(t["lambda"]): Fraction(int(t["num"]), int(t["den"]))
                         for t in data["terms"]})


def sigma(box: BoxSpec, parts: Sequence[int] = (), coeff=1) -> SchubertExpr:
    """The class c * sigma_parts (zero if the partition leaves the box)."""
    parts = tuple(parts)
    if any(p < 0 for p in parts):
        raise ValueError("negative part")
    stripped = tuple(p for p in parts if p)
    if len(stripped) > box.k or (stripped and stripped[0] > box.width):
        return SchubertExpr.zero(box)
    return SchubertExpr(box, {box.normalize(stripped): coeff})


# ---------------------------------------------------------------------------
# Pieri and Giambelli


@lru_cache(maxsize=None)
def _pieri_one(k: int, width: int, a: int, lam: Partition) -> tuple[Partition, ...]:
    """Partitions obtained from lam by adding a horizontal strip of size a."""
    out = []

    def rec(i: int, left: int, acc: list[int]):
        if i == k:
            if left == 0:
                out.append(tuple(acc))
            return
        upper = width if i == 0 else lam[i - 1]
        for p in range(lam[i], min(upper, lam[i] + left) + 1):
            rec(i + 1, left - (p - lam[i]), acc + [p])

    rec(0, a, [])
    return tuple(out)


def pieri(a: int, s: SchubertExpr) -> SchubertExpr:
    """sigma_a * s by the Pieri rule."""
    box = s.box
    if not 0 <= a <= box.width:
        raise ValueError(f"special class sigma_{a} is outside 0..{box.width}")
    out: dict[Partition, Fraction] = {}
    for lam, c in s.coeffs.items():
        for nu in _pieri_one(box.k, box.width, a, lam):
            out[nu] = out.get(nu, 0) + c
    return SchubertExpr(box, out)


def _giambelli_terms(mu: Partition) -> list[tuple[int, tuple[int, ...]]]:
    """Expand det(sigma_{mu_i + j - i}) into signed products of special indices."""
    l = len([p for p in mu if p])
    if l == 0:
        return [(1, ())]
    terms = []
    for perm in permutations(range(l)):
        idx = tuple(mu[i] + perm[i] - i for i in range(l))
        if any(j < 0 for j in idx):
            continue
        inv = sum(1 for i in range(l) for j in range(i + 1, l) if perm[i] > perm[j])
        terms.append((-1 if inv % 2 else 1, idx))
    return terms


def _conjugate(lam: Partition, rows: int) -> Partition:
    return tuple(sum(1 for p in lam if p > i) for i in range(rows))


@lru_cache(maxsize=None)
def _basis_product(k: int, n: int, lam: Partition, mu: Partition) -> tuple:
    # Giambelli costs l(mu)! terms; a tall mu is cheaper in the transposed box
    if len([p for p in mu if p]) > (mu[0] if mu else 0):
        w = n - k
        dual = _basis_product(w, n, _conjugate(lam, w), _conjugate(mu, w))
        return tuple(sorted((_conjugate(nu, k), c) for nu, c in dual))
    box = BoxSpec(k, n)
    base = SchubertExpr(box, {lam: 1})
    total: dict[Partition, Fraction] = {}
    for sign, idx in _giambelli_terms(mu):
        if any(j > box.width for j in idx):
            continue
        cur = base
        for j in sorted(idx):
            cur = pieri(j, cur)
            if not cur:
                break
        for nu, c in cur.coeffs.items():
            total[nu] = total.get(nu, 0) + sign * c
    return tuple(sorted((nu, c) for nu, c in total.items() if c))


def product(s: SchubertExpr, t: SchubertExpr) -> SchubertExpr:
    """Cup product in H*(G(k, n))."""
    if s.box != t.box:
        raise ValueError("Schubert classes on different Grassmannians")
    box = s.box
    out: dict[Partition, Fraction] = {}
    for lam, a in s.coeffs.items():
        for mu, b in t.coeffs.items():
            x, y = (lam, mu) if sum(lam) >= sum(mu) else (mu, lam)
            for nu, c in _basis_product(box.k, box.n, x, y):
                out[nu] = out.get(nu, 0) + a * b * c
    return SchubertExpr(box, out)


def integrate(s: SchubertExpr) -> Fraction:
    """Coefficient of the point class."""
    return s.coeffs.get(s.box.top, Fraction(0))


def degree_of_grassmannian(box: BoxSpec) -> int:
    """Degree in the Plucker embedding, computed as the integral of sigma_1^dim."""
    s = SchubertExpr.one(box)
    for _ in range(box.dim):
        s = pieri(1, s)
    return int(integrate(s))


def hook_length_count(rows: int, cols: int) -> int:
    """Standard Young tableaux of a rows x cols rectangle (hook-length formula)."""
    hooks = 1
    for i in range(rows):
        for j in range(cols):
            hooks *= (rows - i - 1) + (cols - j - 1) + 1
    return math.factorial(rows * cols) // hooks


# ---------------------------------------------------------------------------
# Littlewood-Richardson oracle


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Number of LR tableaux of shape nu/lam and content mu."""
    lam = [p for p in lam if p]
    mu = [p for p in mu if p]
    nu = [p for p in nu if p]
    if sum(nu) != sum(lam) + sum(mu) or len(lam) > len(nu):
        return 0
    lam = lam + [0] * (len(nu) - len(lam))
    if any(l > m for l, m in zip(lam, nu)):
        return 0
    # cells in reading order: rows top to bottom, each row right to left
    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, lam[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    count = [0]
    used = [0] * len(mu)

    def rec(pos: int):
        if pos == len(cells):
            count[0] += 1
            return
        r, c = cells[pos]
        for v in range(len(mu)):
            if used[v] >= mu[v]:
                continue
            if v > 0 and used[v] >= used[v - 1]:
                continue  # lattice word condition
            right = filling.get((r, c + 1))
            if right is not None and right < v:
                continue  # rows weakly increase left to right
            above = filling.get((r - 1, c))
            if above is not None and above >= v:
                continue  # columns strictly increase
            filling[(r, c)] = v
            used[v] += 1
            rec(pos + 1)
            used[v] -= 1
            del filling[(r, c)]

    rec(0)
    return count[0]


def lr_product(s: SchubertExpr, t: SchubertExpr) -> SchubertExpr:
    """Cup product computed from LR coefficients, truncated to the box."""
    box = s.box
    out: dict[Partition, Fraction] = {}
    for lam, a in s.coeffs.items():
        for mu, b in t.coeffs.items():
            for nu in partitions_in_box(box):
                if sum(nu) != sum(lam) + sum(mu):
                    continue
                c = lr_coefficient(lam, mu, nu)
                if c:
                    out[nu] = out.get(nu, 0) + a * b * c
    return SchubertExpr(box, out)


# ---------------------------------------------------------------------------
# Chern and Segre classes


def total_chern_Q(box: BoxSpec) -> SchubertExpr:
    """c(Q) = sum_i sigma_i."""
    return sum((sigma(box, (i,)) for i in range(box.width + 1)), SchubertExpr.zero(box))


def total_chern_Sdual(box: BoxSpec) -> SchubertExpr:
    """c(S^dual) = sum_j sigma_{1^j}."""
    return sum((sigma(box, (1,) * j) for j in range(box.k + 1)), SchubertExpr.zero(box))


def _graded(s: SchubertExpr) -> list[SchubertExpr]:
    return [s.degree_part(d) for d in range(s.box.dim + 1)]


def chern_normal_bundle(k: int, n: int, a: int, b: int) -> list[SchubertExpr]:
    """Graded total Chern class of the normal bundle of the Schubert center.

    The center is G(k - a, k + b - a) and its normal bundle is
    Q^{+a} + (S^dual)^{+(n-k-b)}.
    """
    if not (1 <= k < n and 0 <= a <= k and 0 <= b <= n - k):
        raise ValueError(f"invalid center parameters {(k, n, a, b)}")
    if a == 0 and b == n - k:
        raise ValueError("the center is the whole Grassmannian")
    center = BoxSpec(k - a, k + b - a)
    c = total_chern_Q(center) ** a * total_chern_Sdual(center) ** (n - k - b)
    return _graded(c)


def segre_classes(total_chern: Sequence[SchubertExpr]) -> list[SchubertExpr]:
    """Graded inverse of a total Chern class: s * c = 1."""
    if not total_chern:
        raise ValueError("empty Chern class")
    box = total_chern[0].box
    c0 = total_chern[0]
    if c0 != SchubertExpr.one(box):
        raise ValueError("Chern class must start with 1")
    top = len(total_chern) - 1
    s = [SchubertExpr.one(box)]
    for d in range(1, top + 1):
        acc = SchubertExpr.zero(box)
        for i in range(1, d + 1):
            if i < len(total_chern):
                acc = acc + total_chern[i] * s[d - i]
        s.append(-acc)
    return s
