import itertools

import pytest

from grassblow.cohomology import CohomClass, b1, b2, basis_b1, basis_b2, convert, degree
from grassblow.gw import (DeferredDegree, admissible, expected_degree_sum, extract_from_ring,
                          table, two_point)
from grassblow.weyl import CurveDegree

SMALL = [(k, n) for n in range(3, 8) for k in (2, 3) if k < n]


def key_class(k, n, key, basis):
    return CohomClass(k, n, basis, {key: 1})


def test_admissible():
    assert admissible((1, 0)) and admissible((0, 1)) and admissible((1, 1))
    assert not admissible((2, 0))
    assert not admissible((-1, 3))
    assert not admissible((0, 0))
    assert admissible(CurveDegree(1, 0))


def test_k3_n6_degree_e():
    a = b1(3, 6, 2, (2, 1, 0))
    assert two_point("e", a, a) == 1
    assert two_point("e", a, b1(3, 6, 2, (2, 2, 0))) == 0


def test_pure_classes_vanish_in_degree_e():
    for lam in [(), (1,), (2, 1), (3, 3)]:
        a = b1(2, 5, 0, lam)
        for key in basis_b1(2, 5):
            assert two_point("e", a, key_class(2, 5, key, "B1")) == 0


def test_higher_degree_vanishes():
    a, b = b1(2, 4, 1, (1,)), b1(2, 4, 1)
    assert two_point((2, 0), a, b) == 0
    assert two_point((0, 3), a, b) == 0


def test_degree_ell_is_deferred():
    a = b1(2, 4, 1)
    with pytest.raises(DeferredDegree):
        two_point("l", a, a)
    with pytest.raises(DeferredDegree):
        list(table(2, 4, "l"))


def test_unknown_degree_name():
    with pytest.raises(ValueError):
        two_point("x", b1(2, 4, 1), b1(2, 4, 1))


def test_general_k_needs_matching_basis():
    with pytest.raises(ValueError):
        two_point("e", b2(3, 6, 3), b2(3, 6, 3))


def test_k2_converts_automatically():
    # on X_{2,4} the partner of E sigma_(1,0) is itself; E alone has the wrong degree
    a = b1(2, 4, 1, (1,))
    assert two_point("e", a, a) == 1
    assert two_point("e", a, b1(2, 4, 1)) == 0
    assert two_point("e", convert(a, "B2"), a) == 1


@pytest.mark.parametrize("k,n", SMALL)
def test_symmetry_and_dimension(k, n):
    for d, keys, basis in [("e", basis_b1(k, n), "B1"), ("l-e", basis_b2(k, n), "B2")]:
        want = expected_degree_sum(d, k, n)
        for x, y in itertools.product(keys, repeat=2):
            a, b = key_class(k, n, x, basis), key_class(k, n, y, basis)
            v = two_point(d, a, b)
            assert v == two_point(d, b, a)
            if v:
                assert degree(x) + degree(y) == want


@pytest.mark.parametrize("k,n", SMALL)
def test_table_matches_two_point(k, n):
    for d, basis in [("e", "B1"), ("l-e", "B2")]:
        rows = list(table(k, n, d))
        assert rows
        for r in rows:
            assert two_point(d, key_class(k, n, r.left, basis), key_class(k, n, r.right, basis)) == 1
        # one partner per element of the top E-power
        top = k - 1 if d == "e" else n - k
        assert len(rows) == sum(1 for key in (basis_b1(k, n) if d == "e" else basis_b2(k, n))
                                if key.power == top)


@pytest.mark.parametrize("k,n", SMALL)
def test_vanishing_sweep(k, n):
    keys = basis_b1(k, n)
    degs = [(d1, d2) for d1 in range(4) for d2 in range(4) if d1 >= 2 or d2 >= 2]
    for x, y in itertools.product(keys[:: max(1, len(keys) // 8)], repeat=2):
        a, b = key_class(k, n, x, "B1"), key_class(k, n, y, "B1")
        assert all(two_point(d, a, b) == 0 for d in degs)


def test_extraction_examples_n4():
    assert extract_from_ring(4, "e", b1(2, 4, 1, (1,)), b1(2, 4, 1, (1,))) == 1
    assert extract_from_ring(4, "e", b1(2, 4, 1, (1,)), b1(2, 4, 1)) == 0
    for j in range(3):
        assert extract_from_ring(4, "l-e", b2(2, 4, 2, (j,)), b2(2, 4, 2, (2 - j,))) == 1
    assert extract_from_ring(4, "e", b1(2, 4, 0, (1,)), b1(2, 4, 1)) == 0


@pytest.mark.parametrize("n", range(3, 7))
def test_extraction_matches_tables(n):
    for d, divisors in [("e", ("E", "Hbar")), ("l-e", ("E", "H"))]:
        for x, y in itertools.product(basis_b2(2, n), repeat=2):
            a, b = key_class(2, n, x, "B2"), key_class(2, n, y, "B2")
            want = two_point(d, a, b)
            for D in divisors:
                assert extract_from_ring(n, d, a, b, D) == want, (d, D, x, y)


def test_extraction_rejects_blind_divisor():
    a = b1(2, 4, 1)
    with pytest.raises(ValueError):
        extract_from_ring(4, "e", a, a, "H")
    with pytest.raises(ValueError):
        extract_from_ring(4, "l-e", a, a, "Hbar")
    with pytest.raises(ValueError):
        extract_from_ring(6, "e", b1(3, 6, 2), b1(3, 6, 2))


def test_entry_json():
    row = next(iter(table(2, 4, "e")))
    data = row.to_json()
    assert data["degree"] == [1, 0] and data["value"] == "1"
