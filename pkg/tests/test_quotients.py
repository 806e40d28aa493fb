import pytest
from hypothesis import given, strategies as st

from cliffsym.clifford import ParityConfig
from cliffsym.complete import complete_poly
from cliffsym.dsymmetric import FlagShape, elem, generator_monomials
from cliffsym.errors import UsageError
from cliffsym.polyclifford import PolyCliff, poly_mul
from cliffsym.quotients import (
    GradedIdeal,
    b_element,
    b_elements,
    bi_relation,
    full_column_claim,
    grassmann_cohomology,
    lambda_ideal,
    molien_series,
    verify_bi_relation,
    verify_cyclotomic_dims,
    verify_flag_dims,
    verify_flag_iso_identity,
    verify_grassmann_dims,
    verify_ideal_equality,
    verify_multiplication_matrix,
    verify_poincare_signed,
    verify_poincare_type_a,
)
from cliffsym.scalars import QSeries

UNIFORM = [ParityConfig.all_even(3), ParityConfig.all_odd(3)]


def test_b_elements():
    for n in (2, 3):
        for cfg in ParityConfig.every(n):
            assert b_element(n, cfg) == PolyCliff.one(cfg)
        even = ParityConfig.all_even(n)
        for k in range(n + 1):
            assert b_element(k, even) == PolyCliff.y(n, even, n - k)
    odd = ParityConfig.all_odd(3)
    assert b_element(2, odd) == PolyCliff.y(3, odd)
    assert len(b_elements(odd)) == 3


@pytest.mark.parametrize("cfg", ParityConfig.every(3), ids=lambda c: c.label())
def test_bi_relation_and_matrix(cfg):
    assert bi_relation(cfg).is_zero()
    assert verify_bi_relation(cfg).passed
    assert verify_multiplication_matrix(cfg).passed


@pytest.mark.parametrize("cfg", UNIFORM, ids=lambda c: c.label())
@pytest.mark.parametrize("m", [1, 2, 3])
def test_ideal_equality(cfg, m):
    rep = verify_ideal_equality(3, m, cfg, 6)
    assert rep.passed, rep.failures


def test_full_first_column_is_too_big():
    # e_1 e_2 lies in the ideal of the whole column but not in (h_2)
    assert full_column_claim(2, 1, ParityConfig.all_even(2), 4) != []


def test_grassmann_example():
    ring = grassmann_cohomology(4, 2, ParityConfig.all_even(4))
    assert ring.dims == [1, 1, 2, 1, 1, 0]
    assert ring.rank_series(5) == QSeries([1, 1, 2, 1, 1], 5)


@pytest.mark.parametrize("cfg", UNIFORM, ids=lambda c: c.label())
def test_cohomology_dimensions(cfg):
    for m in range(4):
        assert verify_grassmann_dims(3, m, cfg).passed
    assert verify_cyclotomic_dims(3, 4, cfg).passed
    for cuts in [(0, 3), (0, 1, 3), (0, 2, 3), (0, 1, 2, 3)]:
        assert verify_flag_dims(FlagShape(cuts), cfg).passed


def test_odd_grassmann_dims():
    rep = verify_grassmann_dims(3, 1, ParityConfig.all_odd(3))
    assert rep.data["dims"] == [8, 8, 8, 0]


def test_two_sided_flag_ideal_is_too_big_when_odd():
    cfg = ParityConfig.all_odd(3)
    assert not verify_flag_dims(FlagShape((0, 1, 3)), cfg, side="two").passed
    assert verify_flag_dims(FlagShape((0, 1, 3)), cfg, side="left").passed


@pytest.mark.parametrize("cfg", UNIFORM, ids=lambda c: c.label())
@pytest.mark.parametrize("k", [1, 2])
def test_flag_grassmann_identity(cfg, k):
    rep = verify_flag_iso_identity(k, 3, cfg)
    assert rep.passed, rep.failures
    # the literal coefficient identity mixes disjoint variables
    assert rep.data["literal_exact"]


def test_poincare_series():
    for cfg in ParityConfig.every(2) + UNIFORM:
        assert verify_poincare_type_a(cfg, 5).passed
    for n in (1, 2, 3, 4):
        assert verify_poincare_signed(n, 16).passed
    assert molien_series("BC", 1, 6) == QSeries([1, 0, 1, 0, 1, 0, 1], 6)


ODD3 = ParityConfig.all_odd(3)
IDEAL = lambda_ideal([complete_poly(3, 2, ODD3)], ODD3, 5)
LAMBDA_GENS = [elem(3, j, ODD3) for j in (1, 2, 3)]
WORDS = [PolyCliff({(m, (0, 0, 0)): 1}, ODD3) for m in ODD3.words()]


@given(
    st.integers(0, 2),
    st.integers(0, len(WORDS) - 1),
    st.integers(0, len(WORDS) - 1),
    st.data(),
)
def test_ideal_is_closed_under_the_ambient(degree, left_word, right_word, data):
    monos = generator_monomials(LAMBDA_GENS, degree) or [PolyCliff.one(ODD3)]
    a = data.draw(st.sampled_from(monos))
    b = data.draw(st.sampled_from(generator_monomials(LAMBDA_GENS, 1)))
    g = complete_poly(3, 2, ODD3)
    f = poly_mul(poly_mul(WORDS[left_word], a), poly_mul(g, poly_mul(b, WORDS[right_word])))
    if max(f.degrees(), default=0) <= 5:
        assert IDEAL.contains(f)


def test_ideal_validation():
    cfg = ParityConfig.all_even(2)
    bad = PolyCliff.y(1, cfg) + PolyCliff.one(cfg)
    with pytest.raises(UsageError):
        GradedIdeal([], [bad], cfg, 3)
