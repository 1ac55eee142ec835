"""Sylow subgroups as explicit unitriangular matrix groups."""
import itertools
import random

import pytest
from hypothesis import given, strategies as st

from sylow_inv import groups as grp
from sylow_inv import linalg as la
from sylow_inv.config import FAMILIES
from sylow_inv.groups import ElementParams, GroupSpec, InconsistentParams
from sylow_inv.poly import MultiPoly, act

SMALL = [GroupSpec(f, m, q) for f in FAMILIES for m in (1, 2) for q in (2, 3)]


def test_shapes():
    assert GroupSpec("gu-even", 2, 2).n == 4
    assert GroupSpec("gu-odd", 2, 2).n == 5
    assert GroupSpec("o-minus", 2, 3).n == 6
    assert GroupSpec("gu-odd", 1, 3).ctx.r == 9


def test_sp_form():
    X = grp.form_matrix(GroupSpec("sp", 2, 3))
    assert X[0][3] == 1 and X[3][0] == 2  # J_1 corner and -J_1
    assert X[1][2] == 1 and X[2][1] == 2  # [[0, 1], [-1, 0]]


def test_o_plus_quadratic_form():
    spec = GroupSpec("o-plus", 2, 2)
    x = MultiPoly.gens(spec.ctx, 4)
    assert grp.quadratic_form(spec) == x[3] * x[0] + x[2] * x[1]


def test_o_minus_param():
    assert grp.minus_a(GroupSpec("o-minus", 2, 2)) == 1


@pytest.mark.parametrize("spec,order", [
    (GroupSpec("gu-even", 2, 2), 64), (GroupSpec("gu-even", 1, 2), 2), (GroupSpec("gu-even", 1, 3), 3),
    (GroupSpec("gu-odd", 1, 2), 8), (GroupSpec("sp", 2, 3), 81), (GroupSpec("o-plus", 2, 3), 9),
    (GroupSpec("o-plus", 3, 2), 128), (GroupSpec("o-minus", 2, 2), 128),
    (GroupSpec("o-odd", 2, 2), 16), (GroupSpec("o-odd", 2, 3), 81)])
def test_enumeration_counts(spec, order):
    els = grp.enumerate_group(spec)
    assert grp.group_order(spec) == order
    assert len(set(els)) == len(els) == order


def test_classical_orders():
    assert grp.classical_order(GroupSpec("gu-even", 2, 2)) == 64 * 3 * 3 * 9 * 15
    assert grp.classical_order(GroupSpec("sp", 2, 3)) == 3 ** 4 * 8 * 80
    assert grp.classical_order(GroupSpec("o-odd", 2, 3)) == 2 * 3 ** 4 * 8 * 80


@pytest.mark.parametrize("spec", SMALL, ids=str)
def test_sylow_property(spec):
    assert grp.group_order(spec) == grp.p_part(grp.classical_order(spec), spec.p)


def test_identity_element():
    spec = GroupSpec("sp", 2, 3)
    assert grp.element(spec, grp.identity_params(spec)) == la.identity(4)


def test_single_s_entry_element():
    spec = GroupSpec("gu-even", 3, 2)
    P = grp.identity_params(spec)
    low = ((0, 0), (2, 0))
    M = grp.element(spec, ElementParams(P.A, P.B, P.F, low, P.S_diag))
    assert grp.preserves_form(spec, M) and grp.is_member(spec, M)


def test_perturbed_d_entry_is_rejected():
    spec = GroupSpec("sp", 2, 3)
    M = [list(r) for r in grp.generators(spec)[0]]
    M[3][1] = spec.ctx.add(M[3][1], 1)  # a D entry
    assert not grp.is_member(spec, tuple(map(tuple, M)))


def test_bad_diagonal_is_rejected():
    spec = GroupSpec("o-plus", 2, 3)
    P = grp.identity_params(spec)
    with pytest.raises(InconsistentParams):
        grp.element(spec, ElementParams(P.A, P.B, P.F, P.S_lower, (1,)))


def test_outer_involution():
    spec = GroupSpec("o-plus", 2, 2)
    L = grp.outer_involution(spec)
    assert grp.is_member(spec, L) and not grp.in_g1(spec, L)
    assert act(L, grp.quadratic_form(spec)) == grp.quadratic_form(spec)
    assert L in grp.generators(spec)
    assert grp.outer_involution(GroupSpec("o-plus", 2, 3)) is None


def test_sp_m1():
    spec = GroupSpec("sp", 1, 3)
    assert grp.group_order(spec) == 3
    assert len(grp.g1_generators(spec)) == 1


@pytest.mark.parametrize("spec", [s for s in SMALL if grp.group_order(s) <= 4096], ids=str)
def test_closure_equals_enumeration(spec):
    assert grp.closure(spec.ctx, grp.generators(spec), n=spec.n) == set(grp.enumerate_group(spec))


def test_even_o_plus_middle_block_is_identity():
    assert grp.allowed_middle(GroupSpec("o-plus", 2, 2)) == [la.identity(2)]


def test_s_counts_closed_forms():
    # F_{q^2}: q^{n(n-1)} q^n ; F_q odd, eps=+: q^{n(n-1)/2}
    F4 = grp.make_field(2, 2)
    assert grp.s_solution_count(F4, 1, ((1,),), ((0, 0),), True) == 2 ** 2 * 2 ** 2
    F3 = grp.make_field(3, 1)
    assert grp.s_solution_count(F3, 1, ((0, 1), (1, 0)), ((0, 0), (0, 0)), False) == 3
    assert grp.s_solution_count(F3, 1, ((2,),), ((1,),), False) == 1


def test_hypothesis_h():
    F2 = grp.make_field(2, 1)
    with pytest.raises(grp.HypothesisHViolated):
        grp.s_solution_count(F2, 1, ((1, 0), (0, 0)), ((1, 0), (0, 0)), False)


@given(st.sampled_from([GroupSpec("gu-even", 3, 2), GroupSpec("sp", 3, 3), GroupSpec("o-minus", 2, 3),
                        GroupSpec("o-odd", 3, 2), GroupSpec("gu-odd", 2, 3)]), st.randoms())
def test_random_elements_preserve_forms(spec, rnd):
    params = list(grp._params_iter(spec)) if grp.g1_order(spec) <= 4096 else None
    if params is not None:
        P = rnd.choice(params)
    else:
        # random product of generators
        M = la.identity(spec.n)
        for _ in range(6):
            M = la.matmul(spec.ctx, M, rnd.choice(grp.generators(spec)))
        assert grp.is_member(spec, M)
        return
    M = grp.element(spec, P)
    assert grp.preserves_form(spec, M) and grp.preserves_quadratic(spec, M)
