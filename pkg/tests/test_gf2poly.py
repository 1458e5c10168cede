import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from revkara.gf2poly import (
    DEG_ZERO,
    ModulusError,
    ModulusSpec,
    Polynomial,
    field_inv,
    field_mul,
    field_mul_many,
    is_irreducible,
    parse_modulus,
    poly_mod,
    poly_mul,
)
from revkara.registry import FIELDS

from reference import convolve, field_product, long_division_remainder

P = Polynomial.from_exponents
polys = st.integers(min_value=0, max_value=(1 << 80) - 1).map(Polynomial)


def test_poly_mul_examples():
    assert poly_mul(P([0, 1]), P([0, 1])) == P([0, 2])
    a = P([5, 3, 0])
    assert poly_mul(a, Polynomial(0)) == Polynomial(0)
    assert poly_mul(a, Polynomial(1)) == a


@given(polys, polys)
def test_poly_mul_matches_convolution(a, b):
    assert poly_mul(a, b).bits == convolve(a.bits, b.bits)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert poly_mul(a, b) == poly_mul(b, a)
    assert poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c))
    assert poly_mul(a, b + c) == poly_mul(a, b) + poly_mul(a, c)


@given(polys, polys)
def test_degree_additive(a, b):
    if a and b:
        assert poly_mul(a, b).degree == a.degree + b.degree
    else:
        assert poly_mul(a, b).degree == DEG_ZERO


def test_zero_degree_sentinel():
    assert Polynomial(0).degree == DEG_ZERO
    assert Polynomial(0).degree < 0 < Polynomial(1).degree + 1


def test_poly_mod_examples():
    assert poly_mod(P([4]), parse_modulus("4,1,0")) == P([1, 0])
    assert poly_mod(P([3, 1]), parse_modulus("4,1,0")) == P([3, 1])
    # x^10 = 1 + x^3 modulo 1 + x^3 + x^10
    assert poly_mod(P([10]), parse_modulus("10,3,0")) == P([3, 0])


@given(st.integers(0, (1 << 400) - 1), st.sampled_from([f.exponents for f in FIELDS[:8]]))
def test_poly_mod_matches_long_division(a, exps):
    assert poly_mod(Polynomial(a), ModulusSpec(exps)).bits == long_division_remainder(a, exps)


def test_field_mul_examples():
    m = parse_modulus("4,1,0")
    assert field_mul(P([3]), P([3]), m) == P([3, 2])
    assert field_mul(P([3, 1]), Polynomial(1), m) == P([3, 1])
    assert field_mul(P([1]), P([1]), parse_modulus("2,1,0")) == P([1, 0])


@given(st.data())
@settings(max_examples=50)
def test_mod_commutes_with_mul(data):
    entry = data.draw(st.sampled_from(FIELDS))
    m = entry.modulus
    a = Polynomial(data.draw(st.integers(0, (1 << (2 * m.n)) - 1)))
    b = Polynomial(data.draw(st.integers(0, (1 << (2 * m.n)) - 1)))
    assert poly_mod(poly_mul(a, b), m) == field_mul(poly_mod(a, m), poly_mod(b, m), m)
    a, b = poly_mod(a, m), poly_mod(b, m)
    assert field_mul(a, b, m).bits == field_product(a.bits, b.bits, m.exponents)


def test_field_mul_rejects_oversized():
    with pytest.raises(ValueError):
        field_mul(P([4]), P([0]), parse_modulus("4,1,0"))


def test_field_inv_examples():
    assert field_inv(Polynomial(1), parse_modulus("4,1,0")) == Polynomial(1)
    assert field_inv(P([1]), parse_modulus("2,1,0")) == P([1, 0])
    with pytest.raises(ZeroDivisionError, match="no inverse"):
        field_inv(Polynomial(0), parse_modulus("4,1,0"))


def test_field_inv_random_163(rng):
    m = parse_modulus("163,7,6,3,0")
    for _ in range(100):
        a = Polynomial(rng.getrandbits(163) or 1)
        assert field_mul(a, field_inv(a, m), m) == Polynomial(1)


@pytest.mark.parametrize("spec", ["2,1,0", "3,1,0", "4,1,0", "5,2,0", "6,1,0", "7,1,0", "8,4,3,1,0"])
def test_field_inv_exhaustive(spec):
    m = parse_modulus(spec)
    one = Polynomial(1)
    for a in range(1, 1 << m.n):
        assert field_mul(Polynomial(a), field_inv(Polynomial(a), m), m) == one


def test_is_irreducible_examples():
    assert is_irreducible(parse_modulus("4,1,0"))
    assert not is_irreducible(parse_modulus("4,2,0"))
    assert is_irreducible(parse_modulus("2,1,0"))


@pytest.mark.parametrize("entry", FIELDS, ids=lambda e: e.key)
def test_registry_moduli_irreducible(entry):
    assert is_irreducible(entry.modulus)


def test_polynomial_choice_moduli_irreducible():
    for spec in ("20,3,0", "20,9,5,3,0", "20,19,4,3,0"):
        assert is_irreducible(parse_modulus(spec))


def _brute_irreducible(bits):
    n = bits.bit_length() - 1
    for d in range(1, n // 2 + 1):
        for cand in range(1 << d, 1 << (d + 1)):
            if long_division_remainder_generic(bits, cand) == 0:
                return False
    return True


def long_division_remainder_generic(a, b):
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def test_is_irreducible_against_trial_division():
    for n in range(2, 11):
        for bits in range((1 << n) | 1, 1 << (n + 1), 2):
            assert is_irreducible(Polynomial(bits)) == _brute_irreducible(bits), bin(bits)


def test_parse_modulus():
    m = parse_modulus("10,3,0")
    assert (m.exponents, m.n, m.weight) == ((10, 3, 0), 10, 3)
    m = parse_modulus("4,1,0")
    assert (m.n, m.weight) == (4, 3)
    assert parse_modulus("[163, 7, 6, 3, 0]").middle == (7, 6, 3)


@pytest.mark.parametrize("text", ["4,0,1", "4,1", "4,1,2", "4,4,0", "x,1,0", "", "1,0"])
def test_parse_modulus_errors(text):
    with pytest.raises(ModulusError):
        parse_modulus(text)


def test_hex_roundtrip():
    a = P([0, 3, 4, 9])
    assert a.hex() == "219"
    assert Polynomial.from_hex("219") == a
    assert Polynomial.from_hex(a.hex()) == a
    assert P([0]).hex() == "1"


def test_field_mul_many_matches_scalar(rng):
    import numpy as np

    m = parse_modulus("12,3,0")
    f = np.array([rng.getrandbits(12) for _ in range(300)], dtype=np.uint64)
    g = np.array([rng.getrandbits(12) for _ in range(300)], dtype=np.uint64)
    got = field_mul_many(f, g, m)
    for a, b, c in zip(f, g, got):
        assert int(c) == field_product(int(a), int(b), m.exponents)
