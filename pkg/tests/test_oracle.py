"""The linear-algebra oracle for least invariant degrees."""
import pytest

from sylow_inv import families as fam
from sylow_inv import groups as grp
from sylow_inv.field import field_of_order
from sylow_inv.groups import GroupSpec
from sylow_inv.oracle import DimensionCapExceeded, graded_invariant_dims, oracle_min_degree


def test_u2_examples():
    F = field_of_order(2)
    gens = [((1, 0), (1, 1))]
    assert oracle_min_degree(F, gens, 2, 2, 2) == 2
    assert oracle_min_degree(F, gens, 1, 2, 2) == 1
    assert oracle_min_degree(F, gens, 2, 1, 2) is None


def test_swap_hilbert_series():
    F = field_of_order(3)
    assert graded_invariant_dims(F, [((0, 1), (1, 0))], 2, 6) == [1, 1, 2, 2, 3, 3, 4]


@pytest.mark.parametrize("spec", [GroupSpec("gu-even", 2, 2), GroupSpec("sp", 2, 2),
                                  GroupSpec("o-plus", 2, 2), GroupSpec("o-odd", 2, 2)], ids=str)
def test_oracle_matches_bound(spec):
    t, d = fam.h_range_params(spec)
    gens = grp.g1_generators(spec)
    for k in range(1, t + 1):
        j = t + d + k
        D = fam.chain_phi(spec, j).degree()
        assert oracle_min_degree(spec.ctx, gens, j, D, spec.n) == fam.minimal_degree_bound(spec, k)


def test_dimension_cap(monkeypatch):
    monkeypatch.setenv("SYLOW_INV_CAPS", "dim=10")
    F = field_of_order(2)
    with pytest.raises(DimensionCapExceeded):
        oracle_min_degree(F, [((1, 0), (1, 1))], 2, 6, 2)
