"""Finite field arithmetic."""
import pytest
from hypothesis import given, strategies as st

from sylow_inv.field import (CardinalityCapExceeded, FieldElement, NotPrime, field_of_order,
                             half_unit, make_field, nonsquare_quadratic_param, prime_power,
                             smallest_irreducible, trace_kernel)

from conftest import field_and_elems


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(2) == (2, 1)
    with pytest.raises(NotPrime):
        prime_power(6)


def test_smallest_irreducible_gf4():
    # x^2 + x + 1, lowest degree first
    assert tuple(smallest_irreducible(2, 2)) == (1, 1, 1)


def test_gf9_modulus_is_irreducible_and_smallest():
    f = tuple(smallest_irreducible(3, 2))
    # x^2 + 1 is irreducible over GF(3) and lexicographically smallest
    assert f == (1, 0, 1)


def test_cardinality_cap():
    with pytest.raises(CardinalityCapExceeded):
        make_field(2, 40)


def test_gf4_table():
    F = field_of_order(4)
    t = 2  # the class of x
    assert F.mul(t, t) == F.add(t, 1)
    assert F.mul(t, F.mul(t, t)) == 1


@given(field_and_elems())
def test_ring_axioms(data):
    F, (a, b, c) = data
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1


@given(field_and_elems(k=2))
def test_frobenius_is_automorphism(data):
    F, (a, b) = data
    assert F.frob(F.add(a, b)) == F.add(F.frob(a), F.frob(b))
    assert F.frob(F.mul(a, b)) == F.mul(F.frob(a), F.frob(b))
    assert F.frob(a, F.s) == a


@given(st.sampled_from((4, 9, 25)), st.data())
def test_conjugation_is_involution(r, data):
    F = field_of_order(r)
    a = data.draw(st.integers(0, r - 1))
    assert F.conj(F.conj(a)) == a
    q = F.half
    assert F.conj(a) == F.mul_pow(a, F.p ** q)


@pytest.mark.parametrize("r", [4, 9, 16, 25])
def test_trace_kernel_and_half_unit(r):
    F = field_of_order(r)
    ker = trace_kernel(F)[0]
    q = int(round(r ** 0.5))
    assert len(ker) == q
    assert all(F.add(a, F.conj(a)) == 0 for a in ker)
    h = half_unit(F)
    assert F.add(h, F.conj(h)) == 1


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_nonsquare_param_gives_irreducible_quadratic(q):
    F = field_of_order(q)
    a = nonsquare_quadratic_param(F)
    # X^2 + X + a has no root
    assert all(F.add(F.add(F.mul(x, x), x), a) for x in range(q))


def test_o_minus_param_at_two():
    assert nonsquare_quadratic_param(field_of_order(2)) == 1


def test_field_element_ops():
    F = field_of_order(9)
    a, b = FieldElement(F, 5), FieldElement(F, 7)
    assert (a / b) * b == a
    assert a + (-a) == FieldElement(F, 0)
    assert a ** 8 == FieldElement(F, 1)
    assert F.from_coeffs(F.coeffs(7)) == 7
