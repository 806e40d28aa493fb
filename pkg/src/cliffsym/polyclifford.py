"""Polynomials in commuting ``y_i`` over a Clifford algebra.

Terms are normal-ordered with the Clifford word on the left: a term is keyed
by ``(mask, exps)`` and stands for ``coeff * c^mask * y^exps``.  The only
interaction between the two halves is ``y_i c_j = (-1)^[i == j] c_j y_i``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from . import linalg
from .clifford import (
    CliffordElem,
    ParityConfig,
    format_terms,
    indices_of,
    mask_of,
    sequence_sign,
    word_key,
    word_sign,
    word_str,
)
from .errors import UsageError
from .scalars import QSeries, Scalar, format_rational, to_rational
from .symgroup import Permutation

Key = tuple  # (mask, exps)


class PolyCliff:
    """An element of the polynomial Clifford algebra in normal form."""

    __slots__ = ("terms", "cfg")

    def __init__(self, terms: dict | None, cfg: ParityConfig, *, clean: bool = True):
        self.cfg = cfg
        if clean:
            alive = cfg.alive_mask
            terms = {k: c for k, c in (terms or {}).items() if c and k[0] & ~alive == 0}
        self.terms: dict = terms if terms is not None else {}

    # construction

    @classmethod
    def zero(cls, cfg: ParityConfig) -> "PolyCliff":
        return cls({}, cfg)

    @classmethod
    def const(cls, value: Scalar, cfg: ParityConfig) -> "PolyCliff":
        return cls({(0, (0,) * cfg.n): to_rational(value)}, cfg)

    @classmethod
    def one(cls, cfg: ParityConfig) -> "PolyCliff":
        return cls.const(1, cfg)

    @classmethod
    def y(cls, i: int, cfg: ParityConfig, power: int = 1) -> "PolyCliff":
        if not 1 <= i <= cfg.n:
            raise UsageError(f"y_{i} out of range for n={cfg.n}")
        exps = [0] * cfg.n
        exps[i - 1] = power
        return cls({(0, tuple(exps)): 1}, cfg)

    @classmethod
    def c(cls, i: int, cfg: ParityConfig) -> "PolyCliff":
        if not 1 <= i <= cfg.n:
            raise UsageError(f"c_{i} out of range for n={cfg.n}")
        return cls({(1 << (i - 1), (0,) * cfg.n): 1}, cfg)

    @classmethod
    def monomial(
        cls, word: Sequence[int], exps: Sequence[int], cfg: ParityConfig, coeff: Scalar = 1
    ) -> "PolyCliff":
        """``coeff * c_{word[0]} c_{word[1]} ... * y^exps`` (the word may be unsorted)."""
        exps = tuple(exps)
        if len(exps) != cfg.n or any(e < 0 for e in exps):
            raise UsageError(f"bad exponent vector {exps} for n={cfg.n}")
        cl = CliffordElem.word(word, cfg, coeff)
        return cls({(m, exps): c for m, c in cl.terms.items()}, cfg)

    @classmethod
    def from_clifford(cls, elem: CliffordElem) -> "PolyCliff":
        zero = (0,) * elem.cfg.n
        return cls({(m, zero): c for m, c in elem.terms.items()}, elem.cfg)

    # arithmetic

    def _check(self, other: "PolyCliff"):
        if other.cfg != self.cfg:
            raise UsageError("polynomials over different configurations")

    def _lift(self, other) -> "PolyCliff":
        if isinstance(other, PolyCliff):
            self._check(other)
            return other
        if isinstance(other, CliffordElem):
            if other.cfg != self.cfg:
                raise UsageError("Clifford element over a different configuration")
            return PolyCliff.from_clifford(other)
        return PolyCliff.const(other, self.cfg)

    def __add__(self, other):
        other = self._lift(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            v = terms.get(k, 0) + c
            if v:
                terms[k] = v
            else:
                terms.pop(k, None)
        return PolyCliff(terms, self.cfg, clean=False)

    __radd__ = __add__

    def __neg__(self):
        return PolyCliff({k: -c for k, c in self.terms.items()}, self.cfg, clean=False)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (PolyCliff, CliffordElem)):
            return poly_mul(self, self._lift(other))
        value = to_rational(other)
        if not value:
            return PolyCliff.zero(self.cfg)
        return PolyCliff({k: c * value for k, c in self.terms.items()}, self.cfg, clean=False)

    def __rmul__(self, other):
        if isinstance(other, CliffordElem):
            return poly_mul(self._lift(other), self)
        return self * other

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise UsageError("negative powers are not polynomials")
        out = PolyCliff.one(self.cfg)
        for _ in range(exponent):
            out = poly_mul(out, self)
        return out

    def __eq__(self, other):
        if isinstance(other, PolyCliff):
            return self.cfg == other.cfg and self.terms == other.terms
        try:
            return self == self._lift(other)
        except UsageError:
            return NotImplemented

    def __hash__(self):
        return hash((self.cfg, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # grading

    def degrees(self) -> set[int]:
        return {sum(e) for _, e in self.terms}

    def degree(self) -> int | None:
        """The polynomial degree of a homogeneous element (``None`` for zero)."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise UsageError("element is not homogeneous")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, d: int) -> "PolyCliff":
        return PolyCliff({k: c for k, c in self.terms.items() if sum(k[1]) == d}, self.cfg, clean=False)

    def clifford_part(self) -> CliffordElem:
        """The degree-zero part as a Clifford element."""
        return CliffordElem({m: c for (m, e), c in self.terms.items() if not any(e)}, self.cfg)

    def with_cfg(self, cfg: ParityConfig) -> "PolyCliff":
        """Reinterpret the same terms over another configuration with the same ``n``."""
        if cfg.n != self.cfg.n:
            raise UsageError("configurations of different size")
        return PolyCliff(dict(self.terms), cfg)

    # output

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: term_key(t[0]))

    def to_json(self) -> dict:
        return {
            "parity": list(self.cfg.parity),
            "terms": [
                {"word": list(indices_of(m)), "exps": list(e), "coeff": format_rational(c)}
                for (m, e), c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict, mode: str = "quotient") -> "PolyCliff":
        try:
            cfg = ParityConfig(tuple(data["parity"]), data.get("mode", mode))
            out = cls.zero(cfg)
            for t in data["terms"]:
                out = out + cls.monomial(t["word"], t["exps"], cfg, to_rational(t["coeff"]))
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed polynomial JSON: {data!r}") from exc
        return out

    def __str__(self):
        return format_terms((mono_str(m, e), c) for (m, e), c in self.sorted_terms())

    def __repr__(self):
        return f"PolyCliff({str(self)!r})"


def term_key(key: Key) -> tuple:
    mask, exps = key
    return (sum(exps), tuple(-e for e in exps), word_key(mask))


def mono_str(mask: int, exps: Sequence[int]) -> str:
    ys = "".join(f"y{i}" if e == 1 else f"y{i}^{e}" for i, e in enumerate(exps, start=1) if e)
    return word_str(mask) + ys


@lru_cache(maxsize=None)
def _exp_sign(exps: tuple, mask: int) -> int:
    total = 0
    for i in indices_of(mask):
        total += exps[i - 1]
    return -1 if total & 1 else 1


def mul_terms(k1: Key, k2: Key) -> tuple[int, Key]:
    """Product of two basis terms as ``(sign, key)``."""
    m1, e1 = k1
    m2, e2 = k2
    sign = word_sign(m1, m2) * _exp_sign(e1, m2)
    return sign, (m1 ^ m2, tuple(a + b for a, b in zip(e1, e2)))


def poly_mul(f: PolyCliff, g: PolyCliff) -> PolyCliff:
    """The product ``f * g`` in normal form."""
    f._check(g)
    terms: dict = {}
    for k1, c1 in f.terms.items():
        for k2, c2 in g.terms.items():
            sign, key = mul_terms(k1, k2)
            v = terms.get(key, 0) + sign * c1 * c2
            if v:
                terms[key] = v
            else:
                terms.pop(key, None)
    return PolyCliff(terms, f.cfg)


def product_of(factors: Iterable, cfg: ParityConfig) -> PolyCliff:
    """Ordered product of polynomials and Clifford elements."""
    out = PolyCliff.one(cfg)
    for f in factors:
        out = out * f
    return out


def relabel_key(w: Permutation, key: Key) -> tuple[int, Key]:
    """Apply ``y_i -> y_w(i)`` and ``c_i -> c_w(i)`` to one term."""
    mask, exps = key
    images = [w(i) for i in indices_of(mask)]
    new_exps = [0] * len(exps)
    for i, e in enumerate(exps, start=1):
        new_exps[w(i) - 1] = e
    return sequence_sign(images), (mask_of(images), tuple(new_exps))


def sn_act(w: Permutation, f: PolyCliff, target: ParityConfig | None = None) -> PolyCliff:
    """Permute the variables and Clifford generators of ``f`` by ``w``.

    In quotient mode the result lives over ``target`` (default: the same
    configuration); generators landing on even indices of ``target`` vanish.
    """
    if w.n != f.cfg.n:
        raise UsageError("permutation size differs from the number of variables")
    terms: dict = {}
    for key, c in f.terms.items():
        sign, new = relabel_key(w, key)
        terms[new] = terms.get(new, 0) + sign * c
    return PolyCliff(terms, target or f.cfg)


def exponent_vectors(n: int, d: int) -> list[tuple[int, ...]]:
    """All ``alpha`` in ``N^n`` with ``|alpha| = d``, lexicographically descending."""
    return list(_exponent_vectors(n, d))


@lru_cache(maxsize=None)
def _exponent_vectors(n: int, d: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),) if d == 0 else ()
    if n == 1:
        return ((d,),)
    out = []
    for first in range(d, -1, -1):
        out.extend((first,) + rest for rest in _exponent_vectors(n - 1, d - first))
    return tuple(out)


def basis_keys(cfg: ParityConfig, d: int) -> list[Key]:
    """Keys of the scalar basis of the degree-``d`` piece, words first then exponents."""
    if d < 0:
        return []
    return [(m, e) for m in cfg.words() for e in _exponent_vectors(cfg.n, d)]


def degree_basis(cfg: ParityConfig, d: int) -> list[PolyCliff]:
    """Scalar basis ``c^beta y^alpha`` with ``|alpha| = d``."""
    return [PolyCliff({k: 1}, cfg, clean=False) for k in basis_keys(cfg, d)]


def graded_dimension(cfg: ParityConfig, order: int | None = None) -> QSeries:
    """``sum_d len(degree_basis(cfg, d)) q^d``."""
    if order is None:
        order = QSeries.zero().order
    return QSeries((len(basis_keys(cfg, d)) for d in range(order + 1)), order)


def _homogeneous_terms(vectors: Sequence[PolyCliff], d: int | None) -> list[dict]:
    out = []
    for v in vectors:
        degs = v.degrees()
        if d is not None and degs and degs != {d}:
            raise UsageError(f"vector is not homogeneous of degree {d}")
        out.append(v.terms)
    return out


def rank_of_span(vectors: Sequence[PolyCliff], d: int | None = None) -> int:
    """Exact rank of the rational span of ``vectors``.

    When ``d`` is given every vector must be homogeneous of that degree.
    """
    return linalg.rank(_homogeneous_terms(vectors, d))


def solve_in_span(target: PolyCliff, vectors: Sequence[PolyCliff]) -> list:
    """Rational coefficients expressing ``target`` through ``vectors``.

    Raises :class:`~cliffsym.errors.NoSolution` if ``target`` is outside the span.
    """
    return linalg.solve(target.terms, [v.terms for v in vectors])


def left_clifford_span(vectors: Iterable[PolyCliff]) -> list[PolyCliff]:
    """All products ``c^beta * v``: a scalar spanning set of the left Clifford span."""
    out = []
    for v in vectors:
        cfg = v.cfg
        for m in cfg.words():
            out.append(poly_mul(PolyCliff({(m, (0,) * cfg.n): 1}, cfg, clean=False), v))
    return out
