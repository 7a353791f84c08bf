import itertools

import pytest

from crlab.field import Q_LIMIT, field_create, field_from_modulus, is_prime


# golden moduli pinned by the deterministic search
GOLDEN_MODULI = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 1, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 1, 1),
    (7, 1): (4, 1),
}


def test_golden_moduli():
    for (p, m), coeffs in GOLDEN_MODULI.items():
        assert field_create(p, m).modulus == coeffs


def test_gf2_boundary():
    f = field_create(2, 1)
    assert f.alpha == 1 and f.modulus == (1, 1)
    assert f.add(1, 1) == 0 and f.mul(1, 1) == 1


def test_prime_field_smallest_primitive_roots():
    # alpha is the smallest primitive root mod p
    for p, g in [(3, 2), (5, 2), (7, 3), (11, 2), (13, 2), (17, 3), (19, 2)]:
        assert field_create(p, 1).alpha == g


def test_gf4_forced_arithmetic():
    f = field_create(2, 2)
    assert f.mul(2, 2) == 3           # alpha^2 = alpha + 1
    assert f.inv(2) == 3              # alpha * (alpha+1) = 1
    assert f.mul(2, 3) == 1


def test_gf8_alpha_order():
    f = field_create(2, 3)
    assert f.pow(f.alpha, 7) == 1
    assert all(f.pow(f.alpha, i) != 1 for i in range(1, 7))


def test_primitivity_exhaustive():
    for p, m in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1),
                 (5, 2), (7, 1), (2, 5), (2, 6)]:
        f = field_create(p, m)
        assert len(set(f.alpha_powers)) == f.q - 1
        assert f.pow(f.alpha, f.q - 1) == 1


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (3, 1), (3, 2), (5, 1),
                                 (2, 4), (7, 1), (2, 5), (2, 6), (3, 4),
                                 (5, 2), (2, 8), (2, 9), (3, 5), (7, 2)])
def test_field_axioms_exhaustive_small(p, m):
    """Inverses for every nonzero element; axioms on a full triple product
    for tiny fields and on a structured sample for the larger ones."""
    f = field_create(p, m)
    for a in range(1, f.q):
        assert f.mul(a, f.inv(a)) == 1
    if f.q <= 16:
        triples = itertools.product(range(f.q), repeat=3)
    else:
        sample = list(range(0, f.q, max(1, f.q // 11))) + [1, f.alpha, f.q - 1]
        triples = itertools.product(sample, repeat=3)
    for a, b, c in triples:
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))


def test_pow_conventions():
    f = field_create(2, 3)
    assert f.pow(0, 0) == 1
    assert f.pow(0, 5) == 0
    assert f.pow(3, 0) == 1
    with pytest.raises(ValueError):
        f.pow(2, -1)


def test_inv_zero_raises():
    f = field_create(3, 2)
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_trace_gf4():
    f = field_create(2, 2)
    assert f.trace(2) == 1
    assert f.trace(0) == 0


def test_trace_balance_gf8():
    f = field_create(2, 3)
    values = [f.trace(x) for x in range(8)]
    assert values.count(0) == 4 and values.count(1) == 4


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (2, 4), (3, 2), (5, 2),
                                 (2, 8), (3, 4)])
def test_trace_linear_surjective_frobenius(p, m):
    """Exhaustive on the whole field (q <= 256 here): prime-subfield
    values, Frobenius invariance, additivity, surjectivity."""
    f = field_create(p, m)
    imgs = set()
    for a in range(f.q):
        t = f.trace(a)
        assert t < p
        imgs.add(t)
        assert f.trace(f.pow(a, p)) == t
    assert imgs == set(range(p))
    traces = [f.trace(a) for a in range(f.q)]
    for a in range(f.q):
        ta = traces[a]
        for b in range(f.q):
            assert traces[f.add(a, b)] == (ta + traces[b]) % p


def test_element_encoding_roundtrip():
    f = field_create(3, 2)
    for a in range(f.q):
        assert f.from_coeffs(f.coeffs(a)) == a
    assert f.coeffs(5) == (2, 1)      # 5 = 2 + 1*3


def test_field_create_errors():
    with pytest.raises(ValueError):
        field_create(4, 1)            # not prime
    with pytest.raises(ValueError):
        field_create(2, 0)
    with pytest.raises(ValueError):
        field_create(2, 21)           # exceeds Q_LIMIT
    assert Q_LIMIT == 1 << 20


def test_field_from_modulus():
    # x^3 + x^2 + 1 is the other primitive cubic over GF(2)
    f = field_from_modulus(2, 3, (1, 0, 1, 1))
    assert f.modulus == (1, 0, 1, 1)
    assert len(set(f.alpha_powers)) == 7
    # non-primitive (x^4 + x^3 + x^2 + x + 1 has order-5 root)
    with pytest.raises(ValueError):
        field_from_modulus(2, 4, (1, 1, 1, 1, 1))
    with pytest.raises(ValueError):
        field_from_modulus(2, 3, (1, 1, 0, 0))   # not monic


def test_is_prime():
    assert [n for n in range(2, 30) if is_prime(n)] == \
        [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
