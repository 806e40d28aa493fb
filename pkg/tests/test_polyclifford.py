from hypothesis import given, strategies as st

from cliffsym.clifford import ParityConfig
from cliffsym.polyclifford import (
    PolyCliff,
    basis_keys,
    degree_basis,
    graded_dimension,
    poly_mul,
    rank_of_span,
    sn_act,
    solve_in_span,
)
from cliffsym.scalars import QSeries, geometric_inverse
from cliffsym.symgroup import Permutation

ODD2 = ParityConfig.all_odd(2)
CFG3 = ParityConfig((1, 0, 1))


def polys(cfg, max_deg=2):
    keys = [k for d in range(max_deg + 1) for k in basis_keys(cfg, d)]
    return st.dictionaries(st.sampled_from(keys), st.integers(-3, 3), max_size=4).map(lambda d: PolyCliff(d, cfg))


def test_normal_ordering():
    y1, y2 = PolyCliff.y(1, ODD2), PolyCliff.y(2, ODD2)
    c1, c2 = PolyCliff.c(1, ODD2), PolyCliff.c(2, ODD2)
    assert poly_mul(y1, c1) == -poly_mul(c1, y1)
    assert poly_mul(y1, c2) == poly_mul(c2, y1)
    x1 = poly_mul(c1, y1)
    assert poly_mul(x1, x1) == -PolyCliff.y(1, ODD2, 2)
    assert poly_mul(y1, y2) == poly_mul(y2, y1)


def test_place_permutation():
    s1 = Permutation.simple(1, 2)
    assert sn_act(s1, PolyCliff.y(1, ODD2)) == PolyCliff.y(2, ODD2)
    c1c2 = PolyCliff.monomial((1, 2), (0, 0), ODD2)
    assert sn_act(s1, c1c2) == -c1c2
    assert sn_act(s1, -PolyCliff.one(ODD2) - c1c2) == -PolyCliff.one(ODD2) + c1c2


def test_degree_basis_sizes():
    assert degree_basis(ParityConfig.all_even(1), 2) == [PolyCliff.y(1, ParityConfig.all_even(1), 2)]
    odd1 = ParityConfig.all_odd(1)
    assert set(map(str, degree_basis(odd1, 0))) == {"1", "c1"}
    assert len(degree_basis(ODD2, 1)) == 8


def test_graded_dimension():
    cfg = ParityConfig((1, 1, 0))
    assert graded_dimension(cfg, 10) == geometric_inverse(3, 10) * 4


def test_span_helpers():
    cfg = ParityConfig.all_even(2)
    y1, y2 = PolyCliff.y(1, cfg), PolyCliff.y(2, cfg)
    assert rank_of_span([y1, y1 * 2]) == 1
    assert rank_of_span([y1, y2]) == 2
    assert solve_in_span(y1 + y2, [y1, y2]) == [1, 1]


@given(polys(CFG3), polys(CFG3), polys(CFG3))
def test_product_is_associative(f, g, h):
    assert poly_mul(poly_mul(f, g), h) == poly_mul(f, poly_mul(g, h))
    assert poly_mul(f, g + h) == poly_mul(f, g) + poly_mul(f, h)


@given(polys(ODD2), polys(ODD2))
def test_place_permutation_is_multiplicative(f, g):
    s1 = Permutation.simple(1, 2)
    assert sn_act(s1, poly_mul(f, g)) == poly_mul(sn_act(s1, f), sn_act(s1, g))
    assert sn_act(s1, sn_act(s1, f)) == f


@given(polys(CFG3))
def test_json_round_trip(f):
    assert PolyCliff.from_json(f.to_json()) == f


@given(polys(ODD2, 3))
def test_homogeneous_parts_sum_back(f):
    total = PolyCliff.zero(ODD2)
    for d in f.degrees():
        part = f.homogeneous_part(d)
        assert part.is_homogeneous()
        total = total + part
    assert total == f
