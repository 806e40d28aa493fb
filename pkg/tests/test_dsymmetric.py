from itertools import combinations

import pytest

from cliffsym.clifford import CliffordElem, ParityConfig, gamma_pair, units_product
from cliffsym.demazure import demazure_apply, is_coherent
from cliffsym.dsymmetric import (
    FlagShape,
    elem,
    lambda_closed_form,
    lambda_coeffs,
    lambda_expand,
    lambda_rank,
    left_recursion_holds,
    odd_specialization_check,
    table_odd,
    verify_all_symmetric,
    verify_flag_kernel,
    verify_lambda_endpoints,
    verify_left_recursion,
    verify_one_step,
)
from cliffsym.errors import UsageError
from cliffsym.polyclifford import PolyCliff, poly_mul
from cliffsym.scalars import QSeries, geometric_inverse, qfactorial

COHERENT = [c for n in (2, 3, 4) for c in ParityConfig.every(n) if is_coherent(c)]


def test_examples():
    odd2 = ParityConfig.all_odd(2)
    c1y1 = poly_mul(PolyCliff.c(1, odd2), PolyCliff.y(1, odd2))
    c2y2 = poly_mul(PolyCliff.c(2, odd2), PolyCliff.y(2, odd2))
    assert elem(2, 1, odd2) == c1y1 - c2y2
    even2, even3 = ParityConfig.all_even(2), ParityConfig.all_even(3)
    assert elem(2, 2, even2) == poly_mul(PolyCliff.y(1, even2), PolyCliff.y(2, even2))
    assert elem(3, 1, even3) == sum((PolyCliff.y(i, even3) for i in (1, 2, 3)), PolyCliff.zero(even3))


def test_odd_table_values():
    table = table_odd(4)
    assert table[2][3] == "x1x2 - x1x3 + x2x3"
    assert table[1][4] == "x1 - x2 + x3 - x4"
    assert table[2][2] == "x1x2"


@pytest.mark.parametrize("n", [2, 3, 4])
def test_even_specialisation_is_classical(n):
    cfg = ParityConfig.all_even(n)
    for m in range(1, n + 1):
        oracle = PolyCliff.zero(cfg)
        for subset in combinations(range(n), m):
            oracle = oracle + PolyCliff.monomial((), [1 if i in subset else 0 for i in range(n)], cfg)
        assert elem(n, m, cfg) == oracle


@pytest.mark.parametrize("cfg", COHERENT, ids=lambda c: c.label())
def test_symmetric_on_coherent_configs(cfg):
    assert verify_all_symmetric(cfg.n, cfg).passed


def test_incoherent_config_breaks_symmetry():
    cfg = ParityConfig((1, 1, 0))
    assert not demazure_apply(2, elem(3, 1, cfg)).is_zero()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_signed_ekl_sum(n):
    assert odd_specialization_check(n).passed


@pytest.mark.parametrize("cfg", ParityConfig.every(2) + ParityConfig.every(3), ids=lambda c: c.label())
def test_lambda_rank_series(cfg):
    n, top = cfg.n, 6
    expected = QSeries.one(top) / qfactorial(n, top) * geometric_inverse(n, top)
    words = len(cfg.words())
    assert [r // words for r in lambda_rank(n, cfg, top)] == [expected[d] for d in range(top + 1)]
    assert all(r % words == 0 for r in lambda_rank(n, cfg, top))


def test_lambda_examples():
    for cfg in ParityConfig.every(3):
        if not left_recursion_holds(cfg):
            continue
        unit = units_product([gamma_pair(2, 1, cfg), gamma_pair(2, 3, cfg)], cfg)
        for m in range(1, 3):
            lam = lambda_coeffs(1, 3, m, cfg)
            assert lam[0] == unit and lam[1] == CliffordElem.one(cfg)
    for n in (2, 3, 4):
        cfg = ParityConfig.all_odd(n)
        for m in range(1, n + 1):
            assert lambda_closed_form(n - 1, n, m, m, cfg) == CliffordElem.one(cfg)


@pytest.mark.parametrize("cfg", ParityConfig.every(3) + [ParityConfig.all_odd(4)], ids=lambda c: c.label())
def test_solved_lambda_reconstructs(cfg):
    n = cfg.n
    for k in range(1, n):
        for m in range(n + 1):
            assert lambda_expand(k, n, m, lambda_coeffs(k, n, m, cfg), cfg) == elem(n, m, cfg)


@pytest.mark.parametrize("cfg", ParityConfig.every(3), ids=lambda c: c.label())
def test_endpoints_and_recursions(cfg):
    if left_recursion_holds(cfg):
        assert verify_left_recursion(3, cfg).passed
        assert verify_lambda_endpoints(3, cfg).passed
    else:
        assert not verify_left_recursion(3, cfg).passed
        assert verify_lambda_endpoints(3, cfg, ks=(2,)).passed
    assert verify_one_step(2, 3, cfg).passed


def test_left_recursion_units_for_all_odd():
    rep = verify_left_recursion(3, ParityConfig.all_odd(3))
    assert rep.data["units"] == {1: "-1", 2: "-c3"}


@pytest.mark.parametrize("cuts", [(0, 1, 3), (0, 2, 3), (0, 1, 2, 3)])
def test_flag_kernels(cuts):
    for cfg in (ParityConfig.all_even(3), ParityConfig.all_odd(3), ParityConfig((1, 0, 1))):
        assert verify_flag_kernel(FlagShape(cuts), cfg, 4).passed


def test_flag_shape_validation():
    assert list(FlagShape((0, 1, 3)).parts) == [1, 2]
    with pytest.raises(UsageError):
        FlagShape((1, 3))
    with pytest.raises(UsageError):
        FlagShape((0, 2, 1))
