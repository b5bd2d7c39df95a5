import itertools
from fractions import Fraction

import pytest

from grassblow.cohomology import (B1Element, B2Element, CohomClass, E, Hbar, UnsupportedFeature,
                                  b1, b1_mul, b2, b2_mul, basis_b1, basis_b2, convert, degree,
                                  dual, ek_reduce, integrate, one, pair, pairing_matrix)
from grassblow.schubert import BoxSpec


def identity(m):
    return [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]


def test_e_squared_on_x23():
    assert b2_mul(E(2, 3, "B2"), E(2, 3, "B2")) == -(E(2, 3, "B2") * Hbar(3))


def test_hbar_nilpotent():
    for n in range(3, 8):
        assert Hbar(n) ** (n - 1) == CohomClass(2, n, "B2", {})
        assert Hbar(n) ** (n - 2)
    assert Hbar(4) * Hbar(4) * Hbar(4) == CohomClass(2, 4, "B2", {})


def test_unit_multiplication():
    a = b2(2, 5, 2, (1,), 3) + b2(2, 5, 1)
    assert one(2, 5, "B2") * a == a
    c = b1(3, 6, 1, (2, 1)) - b1(3, 6, 0, (1,))
    assert one(3, 6) * c == c


def test_basis_mismatch():
    with pytest.raises(ValueError):
        b2_mul(E(2, 4, "B2"), E(2, 4, "B1"))
    with pytest.raises(ValueError):
        E(2, 4) * E(2, 5)


def test_ek_reduce_k2():
    assert ek_reduce(2, 5, 2) == -b1(2, 5, 0, (1, 1)) + b1(2, 5, 1, (1,))


def test_ek_reduce_k3():
    want = b1(3, 7, 0, (1, 1, 1)) - b1(3, 7, 1, (1, 1)) + b1(3, 7, 2, (1,))
    assert ek_reduce(3, 7, 3) == want
    assert ek_reduce(3, 7, 1) == E(3, 7)


@pytest.mark.parametrize("k,n", [(2, 4), (2, 6), (3, 6), (3, 7), (4, 7)])
def test_ek_reduce_exponents_and_idempotence(k, n):
    for m in range(k + 4):
        r = ek_reduce(k, n, m)
        assert all(key.power < k for key in r.coeffs)
        assert r.degrees() <= {m}
        # E * E^(m-1) agrees with the direct reduction
        if m:
            assert E(k, n) * ek_reduce(k, n, m - 1) == r


def test_convert_examples():
    s1 = b1(2, 5, 0, (1,))
    assert convert(s1, "B2") == Hbar(5) + E(2, 5, "B2")
    assert convert(b1(2, 5, 0, (1, 1)), "B2") == E(2, 5, "B2") * Hbar(5)
    h, e = Hbar(5), E(2, 5, "B2")
    assert convert(b1(2, 5, 0, (2,)), "B2") == h * h + e * h + e * e


@pytest.mark.parametrize("n", range(3, 8))
def test_convert_round_trip(n):
    assert len(basis_b1(2, n)) == len(basis_b2(2, n)) == (n - 1) ** 2
    for key in basis_b1(2, n):
        c = CohomClass(2, n, "B1", {key: 1})
        there = convert(c, "B2")
        assert there.degrees() == {degree(key)}
        assert convert(there, "B1") == c
    for key in basis_b2(2, n):
        c = CohomClass(2, n, "B2", {key: 1})
        assert convert(convert(c, "B1"), "B2") == c


@pytest.mark.parametrize("n", range(3, 7))
def test_convert_is_ring_map(n):
    for x, y in itertools.product(basis_b1(2, n), repeat=2):
        a, b = CohomClass(2, n, "B1", {x: 1}), CohomClass(2, n, "B1", {y: 1})
        assert convert(a * b, "B2") == convert(a, "B2") * convert(b, "B2")


def test_general_k_conversion_limits():
    special = b1(3, 6, 0, (2,))
    assert convert(convert(special, "B2"), "B1") == special
    with pytest.raises(UnsupportedFeature):
        convert(b1(3, 6, 0, (1, 1)), "B2")
    with pytest.raises(UnsupportedFeature):
        convert(b2(3, 6, 0, (1, 1)), "B1")


def test_integration_normalization():
    for n in range(3, 8):
        assert integrate(b2(2, n, n - 2, (n - 2,))) == 1
    for k, n in [(2, 5), (3, 6), (3, 7), (4, 7)]:
        assert integrate(b1(k, n, 0, BoxSpec(k, n).top)) == 1


@pytest.mark.parametrize("k,n", [(k, n) for n in range(3, 8) for k in range(2, min(4, n - 1) + 1)])
def test_b1_pairing_identity(k, n):
    m = pairing_matrix(k, n, "B1")
    assert m == identity(len(m))


@pytest.mark.parametrize("n", range(3, 9))
def test_b2_pairing_identity(n):
    m = pairing_matrix(2, n, "B2")
    assert m == identity(len(m))


def test_b2_pairing_identity_k3():
    m = pairing_matrix(3, 6, "B2")
    assert m == identity(len(m))


@pytest.mark.parametrize("n", range(3, 8))
def test_pairing_routes_agree(n):
    for x, y in itertools.product(basis_b1(2, n), repeat=2):
        a, b = CohomClass(2, n, "B1", {x: 1}), CohomClass(2, n, "B1", {y: 1})
        assert pair(a, b) == pair(convert(a, "B2"), convert(b, "B2"))


def test_dual_examples():
    assert dual(B1Element(0, (2, 1)), 2, 4) == b1(2, 4, 0, (1, 0))
    n = 7
    for a in range(n - 2):
        for b in range(a + 1):
            want = -b1(2, n, 1, (n - 3 - b, n - 3 - a))
            assert dual(B1Element(1, (a, b)), 2, n) == want


def test_dual_of_b2_k2():
    # (E^i Hbar^j) dual = sum_a E^a Hbar^(n-2-i-a) * Hbar^(n-2-j)
    n = 6
    for i in range(n - 1):
        for j in range(n - 1):
            want = CohomClass(2, n, "B2", {})
            for a in range(n - 1 - i):
                want = want + b2(2, n, a, (n - 2 - i - a,)) * Hbar(n) ** (n - 2 - j)
            assert dual(B2Element(i, (j,)), 2, n) == want


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 5), (3, 6)])
def test_b2_commutative_associative(k, n):
    keys = basis_b2(k, n)
    cls = [CohomClass(k, n, "B2", {x: 1}) for x in keys]
    for a, b in itertools.product(cls, repeat=2):
        assert b2_mul(a, b) == b2_mul(b, a)
    for a, b, c in itertools.combinations_with_replacement(cls, 3):
        assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("k,n", [(2, 5), (3, 6)])
def test_b1_commutative_associative(k, n):
    cls = [CohomClass(k, n, "B1", {x: 1}) for x in basis_b1(k, n)]
    for a, b in itertools.product(cls, repeat=2):
        assert b1_mul(a, b) == b1_mul(b, a)
    for a, b, c in itertools.combinations_with_replacement(cls[::2], 3):
        assert (a * b) * c == a * (b * c)


def test_exceptional_kills_edge_partitions():
    # sigma_(3,0) does not live on G(2,4) -> E * sigma_(3) = 0 on X_{2,5}
    assert E(2, 5) * b1(2, 5, 0, (3,)) == CohomClass(2, 5, "B1", {})


def test_invalid_kn():
    with pytest.raises(ValueError):
        basis_b1(1, 4)
    with pytest.raises(ValueError):
        basis_b2(4, 4)


def test_json_round_trip():
    c = b2(2, 5, 1, (2,), Fraction(3, 2)) - Hbar(5)
    data = c.to_json()
    assert data["basis"] == "B2" and data["k"] == 2
    assert CohomClass.from_json(data) == c
    d = b1(3, 6, 2, (1, 1)) * 5
    assert CohomClass.from_json(d.to_json()) == d
