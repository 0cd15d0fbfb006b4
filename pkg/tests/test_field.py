"""Finite-field construction, arithmetic and enumeration."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from quiverdec import (
    DivisionByZero,
    MixedFields,
    NoDefaultModulus,
    NonPrimeP,
    ReducibleModulus,
    ff_arith,
    ff_enumerate,
    ff_make,
    parse_field_flag,
    parse_field_header,
)
from quiverdec.field import DEFAULT_MODULI, is_prime


def small_fields():
    return [
        ff_make(2, 1),
        ff_make(3, 1),
        ff_make(2, 2),
        ff_make(5, 1),
        ff_make(7, 1),
        ff_make(2, 3),
        ff_make(3, 2),
    ]


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def test_prime_field_defaults():
    spec = ff_make(2, 1)
    assert spec.q == 2
    assert spec.modulus == (0, 1)


def test_gf4_default_modulus():
    spec = ff_make(2, 2)
    assert spec.q == 4
    assert spec.modulus == (1, 1, 1)  # the only irreducible monic quadratic over GF(2)


def test_gf9_custom_modulus_is_valid():
    # oracle: t^2 + 1 has no root mod 3
    for t in range(3):
        assert (t * t + 1) % 3 != 0
    spec = ff_make(3, 2, (1, 0, 1))
    assert spec.q == 9


def test_default_table_entries_all_validate():
    for (p, k), modulus in DEFAULT_MODULI.items():
        spec = ff_make(p, k)
        assert spec.modulus == modulus
        assert spec.q == p**k


def test_non_prime_p_rejected():
    with pytest.raises(NonPrimeP):
        ff_make(4, 1)
    with pytest.raises(NonPrimeP):
        ff_make(1, 1)


def test_reducible_modulus_rejected():
    # t^2 + 2t + 1 = (t + 1)^2 over GF(3)
    with pytest.raises(ReducibleModulus):
        ff_make(3, 2, (1, 2, 1))
    # t^2 over GF(2)
    with pytest.raises(ReducibleModulus):
        ff_make(2, 2, (0, 0, 1))


def test_missing_default_modulus():
    with pytest.raises(NoDefaultModulus):
        ff_make(2, 5)


def test_is_prime_spot_checks():
    primes = {2, 3, 5, 7, 11, 13, 97, 101}
    for n in range(1, 120):
        assert is_prime(n) == (n in primes or all(n % d for d in range(2, n)) and n > 1)


# ---------------------------------------------------------------------------
# arithmetic
# ---------------------------------------------------------------------------

def test_arith_examples():
    gf4 = ff_make(2, 2)
    t = 2  # coeffs (0, 1)
    assert ff_arith(gf4, "mul", t, t) == 3  # t^2 = t + 1

    gf5 = ff_make(5, 1)
    assert ff_arith(gf5, "inv", 2) == 3

    gf9 = ff_make(3, 2, (1, 0, 1))
    t9 = 3  # coeffs (0, 1)
    assert ff_arith(gf9, "mul", t9, t9) == 2  # t^2 = -1 = 2

    assert ff_arith(gf5, "sub", 1, 3) == 3
    assert ff_arith(gf5, "neg", 2) == 3
    assert ff_arith(gf5, "add", 4, 4) == 3


def test_arith_errors():
    gf3 = ff_make(3, 1)
    with pytest.raises(DivisionByZero):
        ff_arith(gf3, "inv", 0)
    with pytest.raises(MixedFields):
        ff_arith(gf3, "add", 1, 5)  # 5 is not an element of GF(3)
    with pytest.raises(MixedFields):
        ff_arith(gf3, "neg", -1)


def test_enumerate_examples():
    assert ff_enumerate(ff_make(2, 1)) == [0, 1]
    assert ff_enumerate(ff_make(3, 1)) == [0, 1, 2]
    gf4 = ff_make(2, 2)
    assert ff_enumerate(gf4) == [0, 1, 2, 3]
    # index formula: element at index sum(c_i p^i)
    assert gf4.coeffs(0) == (0, 0)
    assert gf4.coeffs(1) == (1, 0)
    assert gf4.coeffs(2) == (0, 1)   # t
    assert gf4.coeffs(3) == (1, 1)   # t + 1


def test_enumerate_distinct():
    for spec in small_fields():
        elems = ff_enumerate(spec)
        assert len(elems) == spec.q == len(set(elems))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_field_axioms(data):
    spec = data.draw(st.sampled_from(small_fields()))
    a = data.draw(st.integers(0, spec.q - 1))
    b = data.draw(st.integers(0, spec.q - 1))
    c = data.draw(st.integers(0, spec.q - 1))
    assert spec.add(a, b) == spec.add(b, a)
    assert spec.mul(a, b) == spec.mul(b, a)
    assert spec.add(spec.add(a, b), c) == spec.add(a, spec.add(b, c))
    assert spec.mul(spec.mul(a, b), c) == spec.mul(a, spec.mul(b, c))
    assert spec.mul(a, spec.add(b, c)) == spec.add(spec.mul(a, b), spec.mul(a, c))
    assert spec.add(a, spec.neg(a)) == 0
    if a != 0:
        assert spec.mul(a, spec.inv(a)) == 1
    assert spec.sub(a, b) == spec.add(a, spec.neg(b))


def test_frobenius_exhaustive_small():
    for spec in small_fields():
        if spec.q > 9:
            continue
        for a in ff_enumerate(spec):
            assert spec.pow(a, spec.q) == a


def test_inverse_exhaustive():
    for spec in small_fields():
        for a in range(1, spec.q):
            assert spec.mul(a, spec.inv(a)) == 1


# ---------------------------------------------------------------------------
# text syntax
# ---------------------------------------------------------------------------

def test_element_syntax_round_trip():
    for spec in small_fields():
        for a in ff_enumerate(spec):
            text = spec.format_element(a)
            if spec.k == 1:
                assert ":" not in text
            assert spec.parse_element(text) == a


def test_header_round_trip():
    for spec in small_fields():
        again = parse_field_header(spec.header())
        assert again == spec


def test_header_format():
    assert ff_make(3, 2).header() == "GF(3^2) mod 1,0,1"
    assert ff_make(2, 1).header() == "GF(2^1) mod 0,1"


def test_parse_field_flag_variants():
    assert parse_field_flag("GF(4)") == ff_make(2, 2)
    assert parse_field_flag("GF(2^3)") == ff_make(2, 3)
    assert parse_field_flag("GF(5)") == ff_make(5, 1)
    assert parse_field_flag("GF(3^2):1,0,1") == ff_make(3, 2, (1, 0, 1))


def test_spec_equality_and_hash():
    assert ff_make(2, 2) == ff_make(2, 2)
    assert hash(ff_make(2, 2)) == hash(ff_make(2, 2))
    assert ff_make(2, 1) != ff_make(3, 1)


def test_addition_table_matches_poly_addition():
    gf8 = ff_make(2, 3)
    for a, b in itertools.product(range(8), repeat=2):
        ca, cb = gf8.coeffs(a), gf8.coeffs(b)
        expect = gf8.from_coeffs([(x + y) % 2 for x, y in zip(ca, cb)])
        assert gf8.add(a, b) == expect
