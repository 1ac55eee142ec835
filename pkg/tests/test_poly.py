"""Sparse multivariate polynomials and the linear action."""
import pytest
from hypothesis import given, strategies as st

from sylow_inv.field import field_of_order
from sylow_inv.poly import ExponentCapExceeded, MultiPoly, act, grevlex_key
from sylow_inv import linalg as la

from conftest import polys, unitriangular

FIELDS = [field_of_order(r) for r in (2, 3, 4, 9)]


def test_grevlex_order():
    # degree first, then reverse lexicographic with x1 < x2 < ...
    mons = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 0, 0), (1, 1, 0), (0, 0, 2)]
    ordered = sorted(mons, key=grevlex_key)
    assert ordered[:3] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert ordered[-1] == (0, 0, 2)


def test_basic_arithmetic():
    F = field_of_order(3)
    x, y = MultiPoly.gens(F, 2)
    assert (x + y) ** 3 == x ** 3 + y ** 3
    assert (x + y) * (x - y) == x * x - y * y
    assert (x * y).degree() == 2
    assert (x ** 2 * y).degree_in(1) == 2


def test_json_roundtrip():
    F = field_of_order(4)
    x, y = MultiPoly.gens(F, 2)
    f = x * y.scale(2) + y ** 3 + MultiPoly.const(F, 2, 1)
    assert MultiPoly.from_json(f.to_json()) == f


def test_exponent_cap():
    F = field_of_order(2)
    x = MultiPoly.var(F, 1, 1)
    with pytest.raises(ExponentCapExceeded):
        x ** (2 ** 40)


@given(st.sampled_from(FIELDS), st.data())
def test_ring_axioms(F, data):
    f, g, h = (data.draw(polys(F, 3)) for _ in range(3))
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == MultiPoly.zero(F, 3)


@given(st.sampled_from(FIELDS), st.data())
def test_action_is_algebra_map(F, data):
    M = data.draw(unitriangular(F, 3))
    f, g = data.draw(polys(F, 3)), data.draw(polys(F, 3))
    assert act(M, f * g) == act(M, f) * act(M, g)
    assert act(M, f + g) == act(M, f) + act(M, g)


@given(st.sampled_from(FIELDS), st.data())
def test_action_composition(F, data):
    M1, M2 = data.draw(unitriangular(F, 3)), data.draw(unitriangular(F, 3))
    f = data.draw(polys(F, 3))
    assert act(M1, act(M2, f)) == act(la.matmul(F, M2, M1), f)


@given(st.sampled_from(FIELDS), st.data())
def test_frobenius_power(F, data):
    f = data.draw(polys(F, 2, max_exp=2))
    assert f.frobenius_power(1) == f ** F.p
