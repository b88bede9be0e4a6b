import itertools

import numpy as np
import pytest

from grassmann_spectra.field import (
    FieldError,
    FieldSpec,
    factor_prime_power,
    field_of_order,
    make_field,
)

SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (13, 1)]


def _poly_mul_mod_p(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return tuple(out)


def reducible_monics(p, m):
    """Every monic degree-m product of two monic factors of degree >= 1."""
    prods = set()
    for d in range(1, m):
        for low_a in itertools.product(range(p), repeat=d):
            for low_b in itertools.product(range(p), repeat=m - d):
                prods.add(_poly_mul_mod_p(low_a + (1,), low_b + (1,), p))
    return prods


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2)])
def test_modulus_is_smallest_irreducible(p, m):
    reducible = reducible_monics(p, m)
    candidates = [low + (1,) for low in itertools.product(range(p), repeat=m)]
    expected = next(c for c in candidates if c not in reducible)
    assert make_field(p, m).modulus == expected


def test_gf4_modulus():
    assert make_field(2, 2).modulus == (1, 1, 1)


def test_prime_fields():
    f = make_field(2, 1)
    assert f.q == 2 and f.add(1, 1) == 0
    assert make_field(3, 1).q == 3


def test_gf4_x_times_x(gf4):
    x = gf4.element((0, 1))
    assert (x * x).coeffs == (1, 1)


def test_gf3_inverse_of_two(gf3):
    assert gf3.element(2).inv() == gf3.element(2)


def test_inverse_of_zero_raises(gf4):
    with pytest.raises(ZeroDivisionError):
        gf4.zero.inv()


@pytest.mark.parametrize("p", [1, 4, 9, 15])
def test_non_prime_rejected(p):
    with pytest.raises(FieldError):
        make_field(p, 1)


def test_order_bound():
    make_field(2, 20)
    with pytest.raises(FieldError):
        make_field(2, 21)


def test_reducible_modulus_rejected():
    with pytest.raises(FieldError):
        FieldSpec(2, 2, (1, 0, 1))


@pytest.mark.parametrize("q,expected", [(2, (2, 1)), (4, (2, 2)), (27, (3, 3)), (49, (7, 2)), (13, (13, 1))])
def test_factor_prime_power(q, expected):
    assert factor_prime_power(q) == expected


@pytest.mark.parametrize("q", [1, 6, 12, 100])
def test_factor_rejects(q):
    with pytest.raises(FieldError):
        factor_prime_power(q)


@pytest.mark.parametrize("p,m", [f for f in SMALL_FIELDS if f[0] ** f[1] <= 16])
def test_field_axioms_exhaustive(p, m):
    F = make_field(p, m)
    els = [F.element(a) for a in range(F.q)]
    zero, one = F.zero, F.one
    for a in els:
        assert a + zero == a and a * one == a and a + (-a) == zero
        for b in els:
            assert a + b == b + a
            assert a * b == b * a
            for c in els:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c
    for a in els[1:]:
        assert a * a.inv() == one
        assert a ** (F.q - 1) == one


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_table_and_polynomial_paths_agree(p, m):
    F = make_field(p, m)
    rng = np.random.default_rng(p * 100 + m)
    for a, b in rng.integers(0, F.q, size=(200, 2)).tolist():
        assert F.mul(a, b) == F._poly_mul_code(a, b)
        if a:
            assert F.mul(a, F.inv(a)) == 1
    if F.has_tables:
        t = F.np_tables
        a, b = rng.integers(0, F.q, size=(2, 50))
        assert [F.mul(x, y) for x, y in zip(a, b)] == t["mul"][a, b].tolist()
        assert [F.sub(x, y) for x, y in zip(a, b)] == t["sub"][a, b].tolist()


def test_large_field_without_tables():
    F = field_of_order(2**10)
    assert not F.has_tables
    a = F.element(777)
    assert a * a.inv() == F.one
    assert a ** (F.q - 1) == F.one


def test_mixing_fields_rejected(gf2, gf3):
    with pytest.raises(FieldError):
        gf2.one + gf3.one


def test_coefficient_roundtrip(gf4):
    for a in range(4):
        assert gf4.from_coeffs(gf4.to_coeffs(a)) == a


def test_ordered_codes_lexicographic():
    F = make_field(3, 2)
    coeffs = [F.to_coeffs(c) for c in F.ordered_codes]
    assert coeffs == sorted(coeffs)
    assert len(set(coeffs)) == 9
