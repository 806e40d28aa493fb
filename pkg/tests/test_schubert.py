from fractions import Fraction

import pytest

from cliffsym.clifford import CliffordElem, ParityConfig, cliff_inverse
from cliffsym.demazure import is_coherent
from cliffsym.polyclifford import PolyCliff
from cliffsym.schubert import (
    demazure_perm,
    schubert,
    staircase,
    verify_freeness,
    verify_lambda_equals_kernel,
    verify_rank_series,
    verify_reduced_words,
    verify_schubert_props,
)
from cliffsym.symgroup import Permutation, length


def test_longest_is_staircase():
    for n in (2, 3):
        cfg = ParityConfig.all_odd(n)
        assert schubert(Permutation.longest(n), cfg) == staircase(cfg)


def test_identity_in_two_variables():
    even = ParityConfig.all_even(2)
    # d_1(y_1) = -1 with this sign convention
    assert schubert(Permutation.identity(2), even) == -PolyCliff.one(even)
    odd = ParityConfig.all_odd(2)
    se = schubert(Permutation.identity(2), odd)
    c1c2 = CliffordElem.word((1, 2), odd)
    assert se == PolyCliff.from_clifford(CliffordElem.scalar(-1, odd) - c1c2)
    assert cliff_inverse(se.clifford_part()) == (CliffordElem.scalar(-1, odd) + c1c2) * Fraction(1, 2)


def test_vanishing_example():
    cfg = ParityConfig.all_odd(3)
    v = Permutation.from_word([1, 2], 3)
    w = Permutation.from_word([2, 1], 3)
    assert demazure_perm(v, schubert(w, cfg)).is_zero()


def test_degrees_all_odd_three():
    cfg = ParityConfig.all_odd(3)
    for w in [Permutation.from_word(x, 3) for x in ([], [1], [2], [1, 2], [2, 1], [1, 2, 1])]:
        assert schubert(w, cfg).degrees() == {length(w)}


@pytest.mark.parametrize(
    "cfg",
    [c for n in (2, 3) for c in ParityConfig.every(n) if is_coherent(c)] + [ParityConfig.all_even(4)],
    ids=lambda c: c.label(),
)
def test_schubert_relations(cfg):
    rep = verify_schubert_props(cfg.n, cfg)
    assert rep.passed, rep.failures


@pytest.mark.parametrize("cfg", [ParityConfig.all_even(3), ParityConfig.all_odd(3), ParityConfig((1, 0, 1))], ids=lambda c: c.label())
def test_reduced_words(cfg):
    assert verify_reduced_words(3, cfg).passed


@pytest.mark.parametrize("cfg", ParityConfig.every(2) + ParityConfig.every(3), ids=lambda c: c.label())
def test_freeness(cfg):
    assert verify_freeness(cfg.n, cfg, 4).passed


@pytest.mark.parametrize("cfg", [c for c in ParityConfig.every(3) if is_coherent(c)], ids=lambda c: c.label())
def test_lambda_is_joint_kernel(cfg):
    assert verify_lambda_equals_kernel(3, cfg, 5).passed


def test_kernel_too_small_when_incoherent():
    rep = verify_lambda_equals_kernel(3, ParityConfig((0, 1, 1)), 5)
    assert not rep.passed
    assert rep.data["ranks"][3] == (12, 8)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_rank_series(n):
    assert verify_rank_series(n, 12).passed
