from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cliffsym.clifford import (
    CliffordElem,
    ParityConfig,
    cliff_inverse,
    cliff_mul,
    gamma_pair,
    sequence_sign,
)
from cliffsym.errors import NotInvertible, UsageError

ODD3 = ParityConfig.all_odd(3)


def elems(cfg):
    words = cfg.words()
    return st.dictionaries(st.sampled_from(words), st.integers(-3, 3), max_size=4).map(
        lambda d: sum((CliffordElem({m: c}, cfg) for m, c in d.items()), CliffordElem.zero(cfg))
    )


def w(indices, cfg=ODD3, coeff=1):
    return CliffordElem.word(indices, cfg, coeff)


def test_generator_relations():
    c1, c2 = CliffordElem.gen(1, ODD3), CliffordElem.gen(2, ODD3)
    assert cliff_mul(c2, c1) == w((1, 2), coeff=-1)
    assert cliff_mul(c1, c1) == CliffordElem.one(ODD3)
    assert cliff_mul(w((1, 2)), w((1, 2))) == CliffordElem.scalar(-1, ODD3)


def test_dead_generators_vanish():
    cfg = ParityConfig((1, 0))
    assert CliffordElem.gen(2, cfg).is_zero()
    assert not CliffordElem.gen(1, cfg).is_zero()


def test_inverse_examples():
    cfg = ParityConfig.all_odd(2)
    one = CliffordElem.one(cfg)
    assert cliff_inverse(one) == one
    a = CliffordElem.scalar(-1, cfg) - w((1, 2), cfg)
    inv = cliff_inverse(a)
    assert inv == (CliffordElem.scalar(-1, cfg) + w((1, 2), cfg)) * Fraction(1, 2)
    assert cliff_mul(a, inv) == one
    with pytest.raises(NotInvertible):
        cliff_inverse(CliffordElem.zero(cfg))
    # (1 + c_1)(1 - c_1) = 0
    with pytest.raises(NotInvertible):
        cliff_inverse(one + CliffordElem.gen(1, cfg))


def test_gamma_values():
    assert gamma_pair(1, 2, ODD3) == CliffordElem.gen(1, ODD3)
    assert gamma_pair(2, 1, ODD3) == -CliffordElem.gen(2, ODD3)
    mixed = ParityConfig((0, 1, 1))
    assert gamma_pair(1, 2, mixed) == CliffordElem.one(mixed)
    assert gamma_pair(3, 4, ODD3) == CliffordElem.one(ODD3)


def test_parse():
    assert ParityConfig.parse("all-odd", 2).parity == (1, 1)
    assert ParityConfig.parse("odd,even,1", 3).parity == (1, 0, 1)
    with pytest.raises(UsageError):
        ParityConfig.parse("odd,even", 3)
    with pytest.raises(UsageError):
        ParityConfig.parse("weird", 1)


@given(st.permutations(range(1, 6)))
def test_sequence_sign_is_permutation_sign(seq):
    inversions = sum(1 for i in range(5) for j in range(i + 1, 5) if seq[i] > seq[j])
    assert sequence_sign(seq) == (-1) ** inversions


@given(elems(ODD3), elems(ODD3), elems(ODD3))
def test_associative_and_distributive(a, b, c):
    assert cliff_mul(cliff_mul(a, b), c) == cliff_mul(a, cliff_mul(b, c))
    assert cliff_mul(a, b + c) == cliff_mul(a, b) + cliff_mul(a, c)


@given(elems(ParityConfig((1, 0, 1))), elems(ParityConfig((1, 0, 1))))
def test_associative_in_mixed_config(a, b):
    cfg = ParityConfig((1, 0, 1))
    c = CliffordElem.gen(3, cfg)
    assert cliff_mul(cliff_mul(a, b), c) == cliff_mul(a, cliff_mul(b, c))


@given(elems(ODD3))
def test_inverse_when_it_exists(a):
    try:
        inv = cliff_inverse(a)
    except NotInvertible:
        return
    assert cliff_mul(a, inv) == CliffordElem.one(ODD3)
    assert cliff_mul(inv, a) == CliffordElem.one(ODD3)


def test_json_round_trip():
    a = w((1, 3), coeff=Fraction(3, 2)) + CliffordElem.gen(2, ODD3)
    assert CliffordElem.from_json(a.to_json()) == a
