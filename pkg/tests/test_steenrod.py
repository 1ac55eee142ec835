"""Steenrod operations: unit, instability, Cartan formula, naturality."""
import pytest
from hypothesis import given, strategies as st

from sylow_inv.field import field_of_order
from sylow_inv.poly import MultiPoly, act
from sylow_inv.steenrod import p_bullet, p_bullet_from_components, steenrod_expand, steenrod_op

from conftest import polys, unitriangular

CASES = [(field_of_order(2), 2), (field_of_order(3), 3), (field_of_order(4), 4),
         (field_of_order(4), 2), (field_of_order(9), 9)]


def test_linear_forms():
    F = field_of_order(3)
    x1, x2 = MultiPoly.gens(F, 2)
    f = x1 + x2.scale(2)
    assert steenrod_op(f, 0, 3) == f
    assert steenrod_op(f, 1, 3) == f ** 3
    assert steenrod_op(f, 2, 3) == MultiPoly.zero(F, 2)


def test_r_must_be_power_of_p():
    F = field_of_order(3)
    with pytest.raises(ValueError):
        steenrod_op(MultiPoly.var(F, 1, 1), 1, 2)


@given(st.sampled_from(CASES), st.data())
def test_unit_and_top(case, data):
    F, r = case
    f = data.draw(polys(F, 2, max_terms=3, max_exp=2))
    comps = steenrod_expand(f, r)
    assert comps[0] == f
    if f and f.is_homogeneous():
        # top component: x_i -> x_i^r, coefficients untouched
        assert comps[f.degree()] == f.substitute([x ** r for x in MultiPoly.gens(F, 2)])


@given(st.sampled_from(CASES), st.data())
def test_cartan(case, data):
    F, r = case
    f = data.draw(polys(F, 2, max_terms=3, max_exp=2))
    g = data.draw(polys(F, 2, max_terms=3, max_exp=2))
    k = data.draw(st.integers(0, 3))
    lhs = steenrod_op(f * g, k, r)
    rhs = MultiPoly.zero(F, 2)
    for i in range(k + 1):
        rhs = rhs + steenrod_op(f, i, r) * steenrod_op(g, k - i, r)
    assert lhs == rhs


@given(st.sampled_from(CASES), st.data())
def test_commutes_with_linear_action(case, data):
    F, r = case
    f = data.draw(polys(F, 3, max_terms=3, max_exp=2))
    M = data.draw(unitriangular(F, 3))
    i = data.draw(st.integers(0, 2))
    # naturality needs M over the subfield of order r
    k = 1
    while F.p ** k != r:
        k += 1
    sub = set(F.fixed_field(k))
    M = tuple(tuple(c if c in sub else 0 for c in row) for row in M)
    assert act(M, steenrod_op(f, i, r)) == steenrod_op(act(M, f), i, r)


@given(st.sampled_from(CASES), st.data())
def test_p_bullet_two_routes(case, data):
    F, r = case
    f = data.draw(polys(F, 2, max_terms=3, max_exp=2))
    assert p_bullet(f, r) == p_bullet_from_components(f, r)
