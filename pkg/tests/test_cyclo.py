"""Exact cyclotomic arithmetic: reduction, membership tests, factor split."""

from __future__ import annotations

import cmath
import random
from fractions import Fraction
from math import tau

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedcayley import (
    CycloNum,
    as_eisenstein,
    as_integer,
    as_rational,
    cyclotomic_poly,
    phi3_factors,
    root,
    totient,
)
from mixedcayley.cyclo import Poly, cyclo_poly_mul, poly_to_cyclo


# -- independent polynomial oracle (lists of Fractions, constant term first)

def oracle_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        for j, d in enumerate(b):
            out[i + j] += c * d
    return out


def oracle_divmod(a, b):
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while b and b[-1] == 0:
        b.pop()
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while True:
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        t = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] += t
        for i, c in enumerate(b):
            a[shift + i] -= t * c
    return q, a


def test_root_examples():
    assert root(6, 0) == 1
    assert root(6, 3) == -1
    assert root(6, 1) + root(6, 5) == 1
    with pytest.raises(ValueError):
        root(0, 1)


def test_ring_op_examples():
    assert root(6, 1).conj() == root(6, 5)
    assert root(12, 5) * root(12, 7) == 1
    assert root(3, 1) + root(3, 2) == -1


def test_cyclotomic_poly_small():
    assert cyclotomic_poly(1).coeffs == (-1, 1)
    assert cyclotomic_poly(2).coeffs == (1, 1)
    assert cyclotomic_poly(3).coeffs == (1, 1, 1)


def test_cyclotomic_poly_against_division_oracle():
    # Phi_6 = (x^6 - 1) / ((x - 1)(x + 1)(x^2 + x + 1))
    divisor = oracle_mul(oracle_mul([-1, 1], [1, 1]), [1, 1, 1])
    q, r = oracle_divmod([-1, 0, 0, 0, 0, 0, 1], divisor)
    assert all(c == 0 for c in r)
    assert tuple(q) == cyclotomic_poly(6).coeffs == (1, -1, 1)

    # Phi_12 via the same recursive-division oracle
    divisor = [1]
    for d in (1, 2, 3, 4, 6):
        divisor = oracle_mul(divisor, list(cyclotomic_poly(d).coeffs))
    q, r = oracle_divmod([-1] + [0] * 11 + [1], divisor)
    assert all(c == 0 for c in r)
    assert tuple(q) == cyclotomic_poly(12).coeffs == (1, 0, -1, 0, 1)


def test_cyclotomic_poly_shape():
    for m in range(1, 40):
        p = cyclotomic_poly(m)
        assert p.is_monic()
        assert p.degree == totient(m)
        assert all(isinstance(c, int) for c in p.coeffs)


def test_reduce_examples():
    z = root(6, 3).reduce()
    assert z.coeffs[0] == -1 and all(c == 0 for c in z.coeffs[1:])
    assert root(4, 2) == -1
    # w9^8 reduced via Phi_9 = x^6 + x^3 + 1
    q, r = oracle_divmod([0] * 8 + [1], [1, 0, 0, 1, 0, 0, 1])
    expected = CycloNum(9, tuple(r) + (0,) * (9 - len(r)))
    assert root(9, 8) == expected
    assert root(9, 8).canonical_coeffs() == (0, 0, -1, 0, 0, -1)


def test_as_integer_examples():
    assert as_integer(root(6, 1) + root(6, 5)) == 1
    assert as_integer(root(3, 1)) is None
    z = 2 * root(6, 1) * root(3, 1) + 2 * root(6, 5) * root(3, 2)
    assert as_integer(z) == -4


def test_as_rational_distinguishes():
    half = CycloNum.from_rational(Fraction(1, 2), 6)
    assert as_integer(half) is None
    assert as_rational(half) == Fraction(1, 2)
    assert as_rational(root(3, 1)) is None


def test_as_eisenstein_examples():
    assert as_eisenstein(root(3, 1)) == (0, 1)
    assert as_eisenstein(root(6, 1)) == (1, 1)
    # numeric confirmation of w6 = 1 + w3
    w3 = cmath.exp(1j * tau / 3)
    assert abs((1 + w3) - cmath.exp(1j * tau / 6)) < 1e-12
    assert as_eisenstein(root(12, 1)) is None


def test_as_integer_implies_eisenstein():
    for z in (root(6, 1) + root(6, 5), CycloNum.from_rational(7, 9), root(5, 1) * root(5, 4)):
        n = as_integer(z)
        if n is not None:
            assert as_eisenstein(z) == (n, 0)


def test_phi3_factors_small():
    f1, f2 = phi3_factors(3, 3)
    assert len(f1) == len(f2) == 2
    assert f1[1] == 1 and f2[1] == 1
    assert f1[0] == -root(3, 1) and f2[0] == -root(3, 2)

    f1, f2 = phi3_factors(6, 6)
    assert f1[0] == -root(6, 1) and f2[0] == -root(6, 5)


def test_phi3_factors_product_is_cyclotomic():
    for m in (3, 6, 9, 12, 15, 21):
        f1, f2 = phi3_factors(m, m)
        assert len(f1) == len(f2) == totient(m) // 2 + 1
        assert f1[-1] == 1 and f2[-1] == 1  # monic
        product = cyclo_poly_mul(f1, f2)
        expected = poly_to_cyclo(cyclotomic_poly(m), m)
        assert len(product) == len(expected)
        assert all(p == e for p, e in zip(product, expected))


def test_phi3_factor_coefficients_are_eisenstein():
    for m in (3, 6, 9, 12):
        for factor in phi3_factors(m, m):
            for coeff in factor:
                assert as_eisenstein(coeff) is not None


def test_phi3_factors_rejects_bad_input():
    with pytest.raises(ValueError):
        phi3_factors(4, 12)
    with pytest.raises(ValueError):
        phi3_factors(6, 9)


@st.composite
def cyclo_numbers(draw, orders=None):
    order = draw(st.sampled_from(orders) if orders else st.integers(1, 36))
    support = draw(
        st.lists(st.integers(0, order - 1), min_size=0, max_size=4, unique=True)
    )
    coeffs = [0] * order
    for j in support:
        coeffs[j] = draw(st.integers(-10, 10))
    return CycloNum(order, tuple(coeffs))


@given(cyclo_numbers(), cyclo_numbers())
@settings(max_examples=60, deadline=None)
def test_reduce_respects_multiplication(z, w):
    assert (z * w).reduce() == z.reduce() * w.reduce()


@given(cyclo_numbers())
def test_reduce_idempotent(z):
    r = z.reduce()
    assert r.reduce().coeffs == r.coeffs


@given(cyclo_numbers())
def test_conj_involution_and_norm_real(z):
    assert z.conj().conj() == z
    norm = z * z.conj()
    assert norm == norm.conj()
    assert abs(norm.to_complex().imag) < 1e-9


# third operand's order divides 36 so three-way lcms stay small
@given(cyclo_numbers(), cyclo_numbers(), cyclo_numbers(orders=(1, 2, 3, 4, 6, 9, 12, 18, 36)))
@settings(max_examples=40, deadline=None)
def test_field_axioms_spot_checks(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a + b == b + a
    assert (a - b) + b == a


@given(cyclo_numbers())
def test_conj_fixes_exactly_the_reals(z):
    fixed = (z - z.conj()).is_zero()
    assert fixed == (abs(z.to_complex().imag) < 1e-9)


def test_numerical_consistency_of_reduction():
    rng = random.Random(91125)
    for _ in range(1000):
        order = rng.randint(1, 36)
        coeffs = tuple(rng.randint(-10, 10) for _ in range(order))
        z = CycloNum(order, coeffs)
        direct = sum(
            c * cmath.exp(1j * tau * j / order) for j, c in enumerate(coeffs)
        )
        assert abs(direct - z.reduce().to_complex()) < 1e-9


def test_mixed_order_lifting():
    assert root(3, 1) == root(6, 2)
    assert root(2, 1) == root(6, 3) == -1
    z = root(4, 1) + root(6, 1)
    assert z.order == 12
    assert as_integer(root(4, 1) * root(4, 3)) == 1
