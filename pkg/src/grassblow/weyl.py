"""Permutations, Bruhat order and Hecke products in S_n.

Permutations are stored in one-line notation as tuples ``(w(1), ..., w(n))``.
Products compose right to left, ``(uv)(i) = u(v(i))``, so right
multiplication by ``s_i`` swaps the entries in positions i and i+1.

The parabolic subgroup W_P is generated by all ``s_i`` except ``s_{k-1}``
and ``s_k``.  Its position blocks are ``1..k-1``, ``{k}`` and ``k+1..n``, and
a minimal coset representative of ``w W_P`` is ``w`` with each block sorted.
The curve degree ``d = (d1, d2)`` counts ``d1`` copies of ``e = [X(s_{k-1})]``
and ``d2`` copies of ``ell - e = [X(s_k)]``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

__all__ = [
    "Permutation",
    "ParabolicSpec",
    "CurveDegree",
    "identity",
    "simple",
    "transposition",
    "length",
    "bruhat_leq",
    "bruhat_leq_subword",
    "reduced_word",
    "random_reduced_word",
    "from_word",
    "hecke_mul",
    "hecke_word",
    "z_d",
    "z_d_hecke",
    "z_d_closed",
    "min_coset_rep",
    "min_coset_rep_brute",
    "parabolic_elements",
    "varpi",
    "in_WP",
    "schubert_cells_of_X",
    "curve_nbhd_dim",
    "LenBoundReport",
    "verify_len_bound",
    "deg_q",
]


class Permutation(tuple):
    """A permutation of 1..n in one-line notation."""

    def __new__(cls, one_line: Iterable[int]):
        t = tuple(int(i) for i in one_line)
        if sorted(t) != list(range(1, len(t) + 1)):
            raise ValueError(f"{t} is not a permutation of 1..{len(t)}")
        return super().__new__(cls, t)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(other) != len(self):
            raise ValueError("permutations of different sizes")
        return Permutation(self[j - 1] for j in other)

    def inverse(self) -> "Permutation":
        out = [0] * len(self)
        for i, v in enumerate(self):
            out[v - 1] = i + 1
        return Permutation(out)

    def __repr__(self):
        return "[" + " ".join(map(str, self)) + "]"


@dataclass(frozen=True)
class ParabolicSpec:
    k: int
    n: int

    def __post_init__(self):
        if not 2 <= self.k <= self.n - 1:
            raise ValueError(f"need 2 <= k <= n-1, got k={self.k}, n={self.n}")

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n) if i not in (self.k - 1, self.k))

    @property
    def blocks(self) -> tuple[range, ...]:
        k, n = self.k, self.n
        return tuple(b for b in (range(1, k), range(k, k + 1), range(k + 1, n + 1)) if len(b))


@dataclass(frozen=True)
class CurveDegree:
    d1: int
    d2: int

    def is_effective(self) -> bool:
        return self.d1 >= 0 and self.d2 >= 0

    def __iter__(self):
        return iter((self.d1, self.d2))


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def simple(i: int, n: int) -> Permutation:
    if not 1 <= i < n:
        raise ValueError(f"s_{i} is not a simple reflection of S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return Permutation(w)


def transposition(i: int, j: int, n: int) -> Permutation:
    """t_{i,j}; the identity when i >= j."""
    w = list(range(1, n + 1))
    if i < j:
        w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return Permutation(w)


def length(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def bruhat_leq(u: Sequence[int], w: Sequence[int]) -> bool:
    """Tableau criterion: sorted prefixes of u are dominated by those of w."""
    if len(u) != len(w):
        raise ValueError("permutations of different sizes")
    for i in range(1, len(u)):
        a, b = sorted(u[:i]), sorted(w[:i])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def reduced_word(w: Sequence[int]) -> tuple[int, ...]:
    """A reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}."""
    w = list(w)
    word: list[int] = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                break
        else:
            return tuple(reversed(word))


def random_reduced_word(w: Sequence[int], rng: random.Random) -> tuple[int, ...]:
    w = list(w)
    word: list[int] = []
    while True:
        desc = [i for i in range(len(w) - 1) if w[i] > w[i + 1]]
        if not desc:
            return tuple(reversed(word))
        i = rng.choice(desc)
        w[i], w[i + 1] = w[i + 1], w[i]
        word.append(i + 1)


def from_word(word: Iterable[int], n: int) -> Permutation:
    w = list(range(1, n + 1))
    for i in word:
        w[i - 1], w[i] = w[i], w[i - 1]
    return Permutation(w)


def bruhat_leq_subword(u: Sequence[int], w: Sequence[int]) -> bool:
    """Subword property: u <= w iff u is a subexpression product of a reduced word of w."""
    n = len(w)
    reach = {tuple(range(1, n + 1))}
    for i in reduced_word(w):
        nxt = set(reach)
        for x in reach:
            y = list(x)
            y[i - 1], y[i] = y[i], y[i - 1]
            nxt.add(tuple(y))
        reach = nxt
    return tuple(u) in reach


def hecke_word(w: Sequence[int], word: Iterable[int]) -> Permutation:
    """Right Hecke action of the simple reflections in ``word`` on w."""
    w = list(w)
    for i in word:
        if w[i - 1] < w[i]:
            w[i - 1], w[i] = w[i], w[i - 1]
    return Permutation(w)


def hecke_mul(w: Sequence[int], v: Sequence[int]) -> Permutation:
    return hecke_word(w, reduced_word(v))


def z_d_hecke(d1: int, d2: int, k: int, n: int) -> Permutation:
    """z_d from its definition as a Hecke power of transpositions."""
    if d1 < 0 or d2 < 0:
        raise ValueError("degree must be effective")
    z = identity(n)
    t1n = transposition(1, n, n)
    if d1 >= d2:
        factors = [t1n] * d2 + [transposition(1, k, n)] * (d1 - d2)
    else:
        factors = [t1n] * d1 + [transposition(k, n, n)] * (d2 - d1)
    for t in factors:
        z = hecke_mul(z, t)
    return z


def z_d_closed(d1: int, d2: int, k: int, n: int) -> Permutation:
    """z_d as a group product of transpositions t_{i, N_i}."""
    if d1 < 0 or d2 < 0:
        raise ValueError("degree must be effective")
    pairs: list[tuple[int, int]] = []
    if d1 >= d2:
        m = min(n - d2, k)
        pairs += [(i, n - i + 1) for i in range(1, d2 + 1)]
        pairs += [(i, m + d2 + 1 - i) for i in range(d2 + 1, d1 + 1)]
    else:
        r = max(d1 + 1, k)
        pairs += [(i, n - i + 1) for i in range(1, d1 + 1)]
        pairs += [(i, n - d1 - (i - r)) for i in range(r, r + d2 - d1)]
    z = identity(n)
    for i, j in pairs:
        z = z * transposition(i, j, n)
    return z


def z_d(d: CurveDegree | tuple[int, int], P: ParabolicSpec) -> Permutation:
    """z_d computed both ways; a mismatch raises."""
    d1, d2 = d
    if d1 == 0 and d2 == 0:
        raise ValueError("z_d needs a nonzero degree")
    a = z_d_hecke(d1, d2, P.k, P.n)
    b = z_d_closed(d1, d2, P.k, P.n)
    if a != b:
        raise ArithmeticError(f"Hecke and closed forms of z_d disagree: {a} vs {b}")
    return a


def min_coset_rep(w: Sequence[int], P: ParabolicSpec) -> Permutation:
    """Minimal length element of w W_P: sort entries inside each position block."""
    w = list(w)
    out = []
    for b in P.blocks:
        out += sorted(w[i - 1] for i in b)
    return Permutation(out)


@lru_cache(maxsize=None)
def parabolic_elements(P: ParabolicSpec) -> frozenset[Permutation]:
    """All elements of W_P, by closure under the generators."""
    start = identity(P.n)
    seen = {start}
    frontier = [start]
    gens = [simple(i, P.n) for i in P.generators]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = x * s
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def min_coset_rep_brute(w: Sequence[int], P: ParabolicSpec) -> Permutation:
    w = Permutation(w)
    return min((w * p for p in parabolic_elements(P)), key=lambda x: (length(x), tuple(x)))


def in_WP(w: Sequence[int], P: ParabolicSpec) -> bool:
    """Membership in W^P, the set of minimal coset representatives."""
    return tuple(min_coset_rep(w, P)) == tuple(w)


def varpi(k: int, n: int) -> Permutation:
    """[(n-k+1) ... n 1 ... (n-k)]; its Schubert variety is X_{k,n}."""
    return Permutation(list(range(n - k + 1, n + 1)) + list(range(1, n - k + 1)))


def schubert_cells_of_X(P: ParabolicSpec) -> list[Permutation]:
    """u in W^P with u <= varpi; they index a basis of H*(X_{k,n})."""
    top = varpi(P.k, P.n)
    out = [Permutation(w) for w in permutations(range(1, P.n + 1))
           if in_WP(w, P) and bruhat_leq(w, top)]
    return sorted(out, key=lambda w: (length(w), tuple(w)))


def deg_q(d1: int, d2: int, k: int, n: int) -> int:
    return d1 * (k - 1) + d2 * (n - k + 1)


def curve_nbhd_dim(u: Sequence[int], d: CurveDegree | tuple[int, int], P: ParabolicSpec) -> int:
    """Dimension of the curve neighborhood of Y(u) in the two-step flag variety.

    Computed as the length of the minimal representative of u . z_d^P.  For
    u in W^P with u <= varpi this bounds the neighborhood of X(u) in X_{k,n}.
    """
    if not in_WP(u, P):
        raise ValueError(f"{u} is not a minimal coset representative")
    d1, d2 = d
    if d1 == 0 and d2 == 0:
        return length(u)
    zp = min_coset_rep(z_d((d1, d2), P), P)
    return length(min_coset_rep(hecke_mul(u, zp), P))


@dataclass(frozen=True)
class LenBoundReport:
    d1: int
    d2: int
    k: int
    n: int
    lhs: int
    bound: int
    ok: bool
    exceptionalCase: bool

    @property
    def gap(self) -> int:
        return self.lhs - self.bound


def verify_len_bound(d: CurveDegree | tuple[int, int], k: int, n: int) -> LenBoundReport:
    """Check len(z_d^P) - deg q^d against 0 (exceptional cases) or -1."""
    d1, d2 = d
    if not ((d1 >= 2 and d2 >= 0) or (d1 >= 0 and d2 >= 2)):
        raise ValueError("the bound needs d1 >= 2 or d2 >= 2")
    P = ParabolicSpec(k, n)
    lhs = length(min_coset_rep(z_d((d1, d2), P), P))
    bound = deg_q(d1, d2, k, n)
    exceptional = (d1, d2) == (2, 1) or (d1, d2, k) == (2, 0, 2)
    ok = lhs - bound < (0 if exceptional else -1)
    return LenBoundReport(d1, d2, k, n, lhs, bound, ok, exceptional)
