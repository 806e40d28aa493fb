import pytest
from hypothesis import given, strategies as st

from cliffsym.errors import UsageError
from cliffsym.scalars import (
    QSeries,
    default_order,
    geometric_inverse,
    qbinomial,
    qdoublefactorial,
    qfactorial,
    qint,
    qmultinomial,
)

ORDER = 12
series = st.lists(st.integers(-5, 5), min_size=1, max_size=6).map(lambda c: QSeries(c, ORDER))
units = st.lists(st.integers(-5, 5), max_size=5).map(lambda c: QSeries([1] + c, ORDER))


def coeffs(s, top):
    return [s[d] for d in range(top + 1)]


def test_qint_values():
    assert qint(0, ORDER) == QSeries.zero(ORDER)
    assert qint(1, ORDER) == QSeries.one(ORDER)
    assert coeffs(qint(3, ORDER), 3) == [1, 1, 1, 0]


def test_small_products():
    assert coeffs(qfactorial(3, ORDER), 4) == [1, 2, 2, 1, 0]
    assert coeffs(qbinomial(4, 2, ORDER), 5) == [1, 1, 2, 1, 1, 0]
    assert coeffs(qdoublefactorial(2, ORDER), 2) == [1, 1, 0]
    assert coeffs(qdoublefactorial(4, ORDER), 5) == [1, 2, 2, 2, 1, 0]


def test_geometric_inverse():
    assert coeffs(geometric_inverse(1, ORDER), 5) == [1] * 6
    assert coeffs(geometric_inverse(2, ORDER), 4) == [1, 2, 3, 4, 5]
    assert geometric_inverse(3, ORDER) * QSeries([1, -1], ORDER) ** 3 == QSeries.one(ORDER)


def _pascal(n, k, order):
    # q-Pascal: [n, k] = [n-1, k-1] + q^k [n-1, k]
    if k in (0, n):
        return QSeries.one(order)
    return _pascal(n - 1, k - 1, order) + QSeries.q(k, order) * _pascal(n - 1, k, order)


@pytest.mark.parametrize("n", range(0, 8))
def test_qbinomial_matches_pascal(n):
    for k in range(n + 1):
        assert qbinomial(n, k, 30) == _pascal(n, k, 30)


def test_qmultinomial_is_product_of_binomials():
    assert qmultinomial(4, (1, 2, 1), 20) == qbinomial(4, 1, 20) * qbinomial(3, 2, 20)


def test_bad_arguments():
    with pytest.raises(UsageError):
        qdoublefactorial(3)
    with pytest.raises(UsageError):
        qmultinomial(4, (1, 1))
    with pytest.raises(UsageError):
        qbinomial(2, 3)


def test_order_from_environment(monkeypatch):
    monkeypatch.setenv("CLIFFSYM_ORDER", "7")
    assert default_order() == 7
    assert QSeries.one().order == 7
    monkeypatch.setenv("CLIFFSYM_ORDER", "seven")
    with pytest.raises(UsageError):
        default_order()


@given(series, series, series)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == QSeries.zero(ORDER)


@given(series, units)
def test_division_inverts_multiplication(a, u):
    assert (a / u) * u == a
    assert (a * u) / u == a
