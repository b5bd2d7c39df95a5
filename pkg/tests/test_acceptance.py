"""Acceptance criteria; each test prints one PASS/FAIL line."""

import json
import subprocess
import sys
import time

import pytest

from grassblow import checks
from grassblow.mirror import critical_count, jacobi_relations
from grassblow.poly import LaurentPoly, RationalFn
from grassblow.quantum import VARS


@pytest.fixture
def report(capsys):
    def emit(number, title, failures, seconds, limit=None):
        ok = not failures and (limit is None or seconds < limit)
        timing = f"{seconds:.2f}s" + (f" (limit {limit}s)" if limit else "")
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {title} [{timing}]")
            for f in failures[:5]:
                print(f"    {f}")
        assert not failures, failures
        if limit is not None:
            assert seconds < limit
    return emit


def collect(items):
    failures = []
    for name, fn, args in items:
        c = checks.run_check(name, fn, args)
        if not c.ok:
            failures.append(f"{c.name}: {json.dumps(c.detail)}")
    return failures


def test_criterion_1_quantum_presentation_n3(report):
    t = time.perf_counter()
    out = subprocess.run([sys.executable, "-m", "grassblow", "qh", "present", "--n", "3"],
                         capture_output=True, text=True)
    seconds = time.perf_counter() - t
    failures = []
    if out.returncode != 0:
        failures.append(f"exit {out.returncode}: {out.stderr}")
    elif json.loads(out.stdout)["ideal"] != ["h^2 - x*q1", "h*x + x^2 - q2"]:
        failures.append(out.stdout)
    failures += collect([("present", checks.check_presentation_n3, ())])
    report(1, "n=3 ideal is (h^2 - q1 x, hx + x^2 - q2)", failures, seconds, limit=1)


def test_criterion_2_superpotential_partials(report):
    t = time.perf_counter()
    failures = collect([(f"n={n}", checks.check_theorem62, (n,)) for n in range(4, 11)])
    h, x, q1, _ = LaurentPoly.symbols(VARS)
    if -jacobi_relations(4)[0] != RationalFn(h ** 3 - 2 * h * q1 * x - q1 * x ** 2):
        failures.append("R_b(3) at n=4")
    report(2, "both scaled partials match R_b, R_sigma for 4 <= n <= 10", failures,
           time.perf_counter() - t, limit=60)


def test_criterion_3_jacobi_isomorphism(report):
    t = time.perf_counter()
    failures = collect([(f"n={n}", checks.check_jacobi, (n, 0)) for n in range(3, 9)])
    for n in (3, 4, 5):
        if critical_count(n, 1, 1) != (n - 1) ** 2:
            failures.append(f"critical count n={n}")
    report(3, "Jacobi ideal = A-side ideal, rank (n-1)^2 in two orders, n = 3..8", failures,
           time.perf_counter() - t)


def test_criterion_4_f_tor_class(report):
    t = time.perf_counter()
    failures = collect([(f"n={n}", checks.check_f_tor, (n,)) for n in range(3, 9)])
    report(4, "[f_tor] = n h + (n-1) x for n = 3..8", failures, time.perf_counter() - t)


def test_criterion_5_gw_tables(report):
    t = time.perf_counter()
    items = []
    for n in range(3, 8):
        for k in range(2, min(3, n - 1) + 1):
            items.append((f"pairing k={k} n={n}", checks.check_pairing, (k, n)))
            items.append((f"vanishing k={k} n={n}", checks.check_gw_high_degrees, (k, n)))
    items += [(f"extraction n={n}", checks.check_gw_extraction, (n,)) for n in range(3, 7)]
    report(5, "dual pairings are identities; ring extraction = tables; d >= 2 vanishes",
           collect(items), time.perf_counter() - t)


def test_criterion_6_fano_classification(report):
    t = time.perf_counter()
    items = [(f"n={n}", checks.check_classify, (n,)) for n in range(2, 13)]
    items.append(("fibration", checks.check_fibration_examples, ()))
    report(6, "Fano iff codim <= n iff Kleiman; point blowups; fibration numbers",
           collect(items), time.perf_counter() - t)


def test_criterion_7_weyl_bounds(report):
    t = time.perf_counter()
    items = [(f"k={k} n={n}", checks.check_weyl, (k, n, 5))
             for n in range(4, 11) for k in range(2, n - 1)]
    report(7, "z_d two ways and length bounds, d1, d2 <= 5, n <= 10", collect(items),
           time.perf_counter() - t, limit=120)


def test_criterion_8_schubert_oracles(report):
    t = time.perf_counter()
    items = []
    for n in range(2, 18):
        for k in range(1, n):
            if k * (n - k) <= 12:
                items.append((f"lr k={k} n={n}", checks.check_schubert, (k, n)))
            if k * (n - k) <= 16:
                items.append((f"degree k={k} n={n}", checks.check_degree, (k, n)))
    report(8, "Pieri/Giambelli = LR; degree = hook length", collect(items),
           time.perf_counter() - t)


def test_criterion_9_quantum_lemmas(report):
    t = time.perf_counter()
    items = []
    for n in range(3, 8):
        items.append((f"lemmas n={n}", checks.check_qh_lemmas, (n,)))
        items.append((f"classical n={n}", checks.check_classical_limit, (n,)))
    items += [(f"associative n={n}", checks.check_associativity, (n,)) for n in range(3, 6)]
    report(9, "relation families, divisor lemmas, classical limit, associativity",
           collect(items), time.perf_counter() - t)
