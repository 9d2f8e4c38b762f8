import random

import pytest

from milnorcalc.chow import zero
from milnorcalc.engine import milnor_expansion, milnor_product, milnor_telescope
from milnorcalc.identities import (
    RandomInstance,
    check_expansion_identity,
    check_telescope_identity,
    random_instance,
    sweep,
)


def test_instances_are_reproducible():
    a = random_instance(random.Random(5), 4, 3, seed=5)
    b = random_instance(random.Random(5), 4, 3, seed=5)
    assert a == b
    assert a.cfj_list == b.cfj_list


def test_cfj_relation_holds_per_factor():
    inst = random_instance(random.Random(11), 5, 2, seed=11)
    for cfj, csm, m, d in zip(inst.cfj_list, inst.csm_list, inst.m_list, inst.codims):
        sign = 1 if (inst.n - d) % 2 == 0 else -1
        assert cfj - csm == sign * m


def test_expansion_identity_small_cases():
    assert check_expansion_identity(4, 2, trials=100, seed=42).passed
    assert check_expansion_identity(4, 1, trials=50, seed=1).passed
    assert check_expansion_identity(6, 3, trials=100, seed=3).passed


def test_telescope_identity_small_cases():
    assert check_telescope_identity(4, 2, trials=100, seed=42).passed
    assert check_telescope_identity(4, 1, trials=50, seed=1).passed
    assert check_telescope_identity(7, 4, trials=50, seed=9).passed


def test_r1_reduces_to_the_definition():
    inst = random_instance(random.Random(2), 5, 1, seed=2)
    m, csm, cfj, d = inst.m_list[0], inst.csm_list[0], inst.cfj_list[0], inst.codims[0]
    expansion = milnor_expansion([m], [csm], [d], 5)
    telescope = milnor_telescope([m], [csm], [cfj], [d], 5)
    product = milnor_product([cfj], [csm], 5, 5 - d)
    assert expansion == m
    assert telescope == m
    assert product == m


def test_invalid_ranges_rejected():
    with pytest.raises(ValueError):
        check_expansion_identity(4, 0)
    with pytest.raises(ValueError):
        check_telescope_identity(3, 4)
    with pytest.raises(ValueError):
        check_expansion_identity(4, 2, trials=0)


def test_reports_render_deterministically():
    first = check_expansion_identity(5, 2, trials=20, seed=7).render()
    second = check_expansion_identity(5, 2, trials=20, seed=7).render()
    assert first == second
    assert "failures=0" in first


def test_failures_are_detected():
    # sabotage one factor so the tied relation breaks
    inst = random_instance(random.Random(3), 4, 2, seed=3)
    broken = RandomInstance(
        inst.seed, inst.n, inst.r, inst.codims,
        inst.csm_list, (inst.m_list[0] + inst.csm_list[0], inst.m_list[1]),
    )
    lhs = milnor_product(inst.cfj_list, inst.csm_list, inst.n, inst.dim_x)
    rhs = milnor_expansion(broken.m_list, broken.csm_list, broken.codims, inst.n)
    assert lhs != rhs or inst.csm_list[0] == zero(4)


def test_sweep_covers_the_grid():
    reports = list(sweep(n_range=range(2, 4), max_r=2, trials=5, seed=0))
    cells = {(r.n, r.r, r.identity) for r in reports}
    assert len(cells) == len(reports) == 2 * (2 + 2)
    assert all(r.passed for r in reports)
