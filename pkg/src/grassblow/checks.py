"""Named verification checks shared by the CLI and the acceptance suite.

Every check returns a :class:`Check`; a failed check carries the first
counterexample found, so a red result is always reproducible by hand.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable

from .classify import BlowupSpec, all_specs, classify, fibration_number
from . import cohomology as co
from . import gw
from . import mirror
from . import quantum as qh
from . import schubert as sc
from . import weyl

__all__ = ["Check", "suite", "run_check", "CHECKS"]


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def _first_false(report: dict) -> str | None:
    return next((k for k, v in report.items() if v is False), None)


def check_presentation_n3() -> dict | None:
    h, x, q1, q2 = qh._sym()
    want = [h ** 2 - q1 * x, h * x + x ** 2 - q2]
    got = list(qh.presentation(3).reduced_generators())
    return None if got == want else {"got": [str(g) for g in got]}


def check_theorem62(n: int) -> dict | None:
    bad = _first_false(mirror.verify_theorem62(n))
    return {"n": n, "identity": bad} if bad else None


def check_jacobi(n: int, seed: int = 0) -> dict | None:
    r = mirror.jacobi_ideal_isomorphism(n, seed=seed)
    target = (n - 1) ** 2
    if not r["equal"]:
        return {"n": n, "reason": "ideals differ", "certificate": r["certificate"]}
    if r["rank"] != target or any(v != target for v in r["rankOtherOrders"].values()):
        return {"n": n, "rank": r["rank"], "other": r["rankOtherOrders"]}
    if not r["axisFreeGeneric"] or r["axisHits"]:
        return {"n": n, "axisHits": r["axisHits"]}
    return None


def check_critical(n: int) -> dict | None:
    got = mirror.critical_count(n, 1, 1)
    return None if got == (n - 1) ** 2 else {"n": n, "count": got}


def check_f_tor(n: int) -> dict | None:
    r = mirror.f_tor_class(n)
    return None if r["equal"] else {"n": n, "class": r["class"]}


def check_pairing(k: int, n: int) -> dict | None:
    for basis in ("B1", "B2"):
        M = co.pairing_matrix(k, n, basis)
        for i, j in itertools.product(range(len(M)), repeat=2):
            if M[i][j] != (1 if i == j else 0):
                return {"k": k, "n": n, "basis": basis, "entry": [i, j], "value": str(M[i][j])}
    return None


def check_gw_extraction(n: int) -> dict | None:
    keys = co.basis_b2(2, n)
    for d, divisors in (("e", ("E", "Hbar")), ("l-e", ("E", "H"))):
        for a, b in itertools.product(keys, repeat=2):
            A = co.CohomClass(2, n, "B2", {a: 1})
            B = co.CohomClass(2, n, "B2", {b: 1})
            want = gw.two_point(d, A, B)
            for D in divisors:
                got = gw.extract_from_ring(n, d, A, B, divisor=D)
                if got != want:
                    return {"n": n, "degree": d, "divisor": D, "left": str(a), "right": str(b),
                            "ring": str(got), "table": str(want)}
    return None


def check_gw_high_degrees(k: int, n: int, top: int = 4) -> dict | None:
    keys = co.basis_b1(k, n)
    for d1, d2 in itertools.product(range(top + 1), repeat=2):
        if d1 < 2 and d2 < 2:
            continue
        for a, b in itertools.product(keys, repeat=2):
            v = gw.two_point((d1, d2), co.CohomClass(k, n, "B1", {a: 1}),
                             co.CohomClass(k, n, "B1", {b: 1}))
            if v:
                return {"k": k, "n": n, "degree": [d1, d2], "left": str(a), "right": str(b)}
    return None


def check_classify(n: int) -> dict | None:
    for s in all_specs(n, n):
        r = classify(s)
        kleiman = all(v > 0 for v in r.intersections.anticanonical_on_mori().values())
        if not (r.isFano == (r.codim <= s.n) == kleiman):
            return {"spec": [s.k, s.n, s.a, s.b], "isFano": r.isFano, "codim": r.codim}
        point = s.center.dim == 0
        expected = s.k in (1, s.n - 1) or (s.k, s.n) == (2, 4)
        if point and r.isFano != expected:
            return {"spec": [s.k, s.n, s.a, s.b], "pointBlowupFano": r.isFano}
    return None


def check_fibration_examples() -> dict | None:
    got = {"G(2,5) along G(1,3)": fibration_number(BlowupSpec(2, 5, 1, 2)),
           "G(2,4) at a point": fibration_number(BlowupSpec(2, 4, 0, 0))}
    want = {"G(2,5) along G(1,3)": 0, "G(2,4) at a point": 1}
    return None if got == want else {"got": got}


def check_weyl(k: int, n: int, top: int = 5) -> dict | None:
    for d1, d2 in itertools.product(range(top + 1), repeat=2):
        if (d1, d2) == (0, 0):
            continue
        a, b = weyl.z_d_hecke(d1, d2, k, n), weyl.z_d_closed(d1, d2, k, n)
        if a != b:
            return {"k": k, "n": n, "d": [d1, d2], "hecke": list(a), "closed": list(b)}
        if d1 < 2 and d2 < 2:
            continue
        r = weyl.verify_len_bound((d1, d2), k, n)
        exceptional = (d1, d2) == (2, 1) or (d1, d2, k) == (2, 0, 2)
        if not r.ok or r.exceptionalCase != exceptional or (r.gap == -1) != exceptional:
            return {"k": k, "n": n, "d": [d1, d2], "gap": r.gap, "exceptional": r.exceptionalCase}
    return None


def check_schubert(k: int, n: int) -> dict | None:
    box = sc.BoxSpec(k, n)
    parts = sc.partitions_in_box(box)
    for lam, mu in itertools.combinations_with_replacement(parts, 2):
        a, b = sc.sigma(box, lam), sc.sigma(box, mu)
        if sc.product(a, b) != sc.lr_product(a, b):
            return {"k": k, "n": n, "left": list(lam), "right": list(mu)}
    return None


def check_degree(k: int, n: int) -> dict | None:
    box = sc.BoxSpec(k, n)
    got, want = sc.degree_of_grassmannian(box), sc.hook_length_count(k, n - k)
    return None if got == want else {"k": k, "n": n, "degree": got, "hook": want}


def check_qh_lemmas(n: int) -> dict | None:
    for name, fn in (("relations", qh.verify_presentation_relations),
                     ("divisor lemmas", qh.verify_divisor_lemmas),
                     ("phi", qh.verify_phi_consistency)):
        bad = _first_false(fn(n))
        if bad:
            return {"n": n, "family": name, "identity": bad}
    return None


def _b2(n: int, key) -> co.CohomClass:
    return co.CohomClass(2, n, "B2", {key: 1})


def check_classical_limit(n: int) -> dict | None:
    keys = co.basis_b2(2, n)
    for a, b in itertools.product(keys, repeat=2):
        q = qh.qmul(_b2(n, a), _b2(n, b))
        if q.specialize(q1=0, q2=0).classical() != co.b2_mul(_b2(n, a), _b2(n, b)):
            return {"n": n, "left": str(a), "right": str(b)}
    return None


def check_associativity(n: int) -> dict | None:
    """(ab)c = a(bc) on basis triples, expanding through the basis structure constants."""
    keys = co.basis_b2(2, n)
    M = {(a, b): qh.qmul(_b2(n, a), _b2(n, b)) for a, b in itertools.product(keys, repeat=2)}

    def times(X: qh.QClass, c, left: bool) -> qh.QClass:
        out = qh.QClass(n)
        for q, cls in X.terms.items():
            for key, v in cls.coeffs.items():
                out = out + M[(key, c) if left else (c, key)].scale(v, q)
        return out

    for a, b, c in itertools.product(keys, repeat=3):
        if times(M[a, b], c, True) != times(M[b, c], a, False):
            return {"n": n, "triple": [str(a), str(b), str(c)]}
    return None


# name -> (function, args); grouped by acceptance criterion
def suite(max_n: int, seed: int = 0) -> list[tuple[str, Callable, tuple]]:
    items: list[tuple[str, Callable, tuple]] = []
    add = lambda name, fn, *args: items.append((name, fn, args))  # noqa: E731
    if max_n >= 3:
        add("qh.present[n=3]", check_presentation_n3)
    for n in range(4, min(max_n, 10) + 1):
        add(f"mirror.theorem62[n={n}]", check_theorem62, n)
    for n in range(3, min(max_n, 8) + 1):
        add(f"mirror.jacobi[n={n}]", check_jacobi, n, seed)
        add(f"mirror.f_tor[n={n}]", check_f_tor, n)
    for n in range(3, min(max_n, 5) + 1):
        add(f"mirror.critical[n={n}]", check_critical, n)
    for n in range(3, min(max_n, 7) + 1):
        for k in range(2, min(3, n - 1) + 1):
            add(f"xkn.pairing[k={k},n={n}]", check_pairing, k, n)
            add(f"gw.vanishing[k={k},n={n}]", check_gw_high_degrees, k, n)
    for n in range(3, min(max_n, 6) + 1):
        add(f"gw.extraction[n={n}]", check_gw_extraction, n)
    for n in range(2, min(max_n, 12) + 1):
        add(f"classify[n={n}]", check_classify, n)
    if max_n >= 5:
        add("classify.fibration", check_fibration_examples)
    for n in range(4, min(max_n, 10) + 1):
        for k in range(2, n - 1):
            add(f"weyl[k={k},n={n}]", check_weyl, k, n)
    for n in range(2, max_n + 1):
        for k in range(1, n):
            if k * (n - k) <= 12:
                add(f"schubert.lr[k={k},n={n}]", check_schubert, k, n)
            if k * (n - k) <= 16:
                add(f"schubert.degree[k={k},n={n}]", check_degree, k, n)
    for n in range(3, min(max_n, 7) + 1):
        add(f"qh.lemmas[n={n}]", check_qh_lemmas, n)
        add(f"qh.classical[n={n}]", check_classical_limit, n)
    for n in range(3, min(max_n, 5) + 1):
        add(f"qh.associative[n={n}]", check_associativity, n)
    return items


def run_check(name: str, fn: Callable, args: tuple) -> Check:
    t = time.perf_counter()
    try:
        bad = fn(*args)
    except ArithmeticError as exc:
        bad = {"error": f"{type(exc).__name__}: {exc}"}
    return Check(name, bad is None, bad or {}, time.perf_counter() - t)


CHECKS = {fn.__name__: fn for fn in (
    check_presentation_n3, check_theorem62, check_jacobi, check_critical, check_f_tor,
    check_pairing, check_gw_extraction, check_gw_high_degrees, check_classify,
    check_fibration_examples, check_weyl, check_schubert, check_degree, check_qh_lemmas,
    check_classical_limit, check_associativity)}
