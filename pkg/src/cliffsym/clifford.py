"""Clifford algebras on parity-tagged generators.

Generators ``c_1..c_n`` satisfy ``c_i**2 = 1`` and ``c_i c_j = -c_j c_i``.  A
word ``c_{i_1} ... c_{i_k}`` with ``i_1 < ... < i_k`` is stored as the bitmask
with bit ``i - 1`` set for each index.  In ``"quotient"`` mode the generators
of even parity are zero; in ``"full"`` mode every generator is alive.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from . import linalg
from .errors import NoSolution, NotInvertible, UsageError
from .scalars import Scalar, format_rational, to_rational

MODES = ("quotient", "full")


@dataclass(frozen=True)
class ParityConfig:
    """Parities ``0`` (even) or ``1`` (odd) of the indices ``1..n``."""

    parity: tuple[int, ...]
    mode: str = "quotient"

    def __post_init__(self):
        parity = tuple(int(p) for p in self.parity)
        object.__setattr__(self, "parity", parity)
        if any(p not in (0, 1) for p in parity):
            raise UsageError(f"parities must be 0 or 1: {parity}")
        if self.mode not in MODES:
            raise UsageError(f"unknown mode {self.mode!r}")

    @property
    def n(self) -> int:
        return len(self.parity)

    @classmethod
    def all_even(cls, n: int, mode: str = "quotient") -> "ParityConfig":
        return cls((0,) * n, mode)

    @classmethod
    def all_odd(cls, n: int, mode: str = "quotient") -> "ParityConfig":
        return cls((1,) * n, mode)

    @classmethod
    def every(cls, n: int, mode: str = "quotient") -> list["ParityConfig"]:
        """All ``2**n`` configurations, in lexicographic order."""
        return [cls(p, mode) for p in product((0, 1), repeat=n)]

    @classmethod
    def parse(cls, text: str, n: int, mode: str = "quotient") -> "ParityConfig":
        """Read ``all-even``, ``all-odd`` or a comma list of ``even``/``odd``/``0``/``1``."""
        text = text.strip().lower()
        if text in ("all-even", "even"):
            return cls.all_even(n, mode)
        if text in ("all-odd", "odd"):
            return cls.all_odd(n, mode)
        names = {"0": 0, "even": 0, "e": 0, "1": 1, "odd": 1, "o": 1}
        items = [t.strip() for t in text.split(",") if t.strip()]
        try:
            parity = tuple(names[t] for t in items)
        except KeyError as exc:
            raise UsageError(f"cannot parse parity {exc.args[0]!r}") from None
        if len(parity) != n:
            raise UsageError(f"parity list has {len(parity)} entries, expected {n}")
        return cls(parity, mode)

    def with_mode(self, mode: str) -> "ParityConfig":
        return ParityConfig(self.parity, mode)

    def is_odd(self, i: int) -> bool:
        """Parity of index ``i``; indices outside ``1..n`` count as even."""
        return 1 <= i <= self.n and self.parity[i - 1] == 1

    @property
    def odd_mask(self) -> int:
        return sum(1 << (i - 1) for i in range(1, self.n + 1) if self.is_odd(i))

    @property
    def alive_mask(self) -> int:
        """Bitmask of the generators that are nonzero."""
        if self.mode == "full":
            return (1 << self.n) - 1
        return self.odd_mask

    def alive(self, i: int) -> bool:
        return 1 <= i <= self.n and bool(self.alive_mask >> (i - 1) & 1)

    def num_odd(self) -> int:
        return sum(self.parity)

    def words(self) -> list[int]:
        """All nonzero Clifford words, ordered by length then indices."""
        alive = self.alive_mask
        masks = [m for m in range(1 << self.n) if m & ~alive == 0]
        return sorted(masks, key=word_key)

    def label(self) -> str:
        return ",".join("odd" if p else "even" for p in self.parity)


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        if mask >> (i - 1) & 1:
            raise UsageError(f"repeated index {i} in a Clifford word")
        mask |= 1 << (i - 1)
    return mask


@lru_cache(maxsize=None)
def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def word_key(mask: int) -> tuple:
    ids = indices_of(mask)
    return (len(ids), ids)


@lru_cache(maxsize=None)
def word_sign(a: int, b: int) -> int:
    """Sign of reordering ``c^a c^b`` into sorted form; the product word is ``a ^ b``."""
    swaps = 0
    for j in indices_of(b):
        swaps += (a >> j).bit_count()
    return -1 if swaps & 1 else 1


def sequence_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting a sequence of distinct indices."""
    inv = sum(1 for x in range(len(seq)) for y in range(x + 1, len(seq)) if seq[x] > seq[y])
    return -1 if inv & 1 else 1


def word_str(mask: int) -> str:
    return "".join(f"c{i}" for i in indices_of(mask))


class CliffordElem:
    """An exact rational combination of Clifford words."""

    __slots__ = ("terms", "cfg")

    def __init__(self, terms: dict[int, Scalar] | None, cfg: ParityConfig):
        self.cfg = cfg
        alive = cfg.alive_mask
        clean: dict[int, Scalar] = {}
        for mask, coeff in (terms or {}).items():
            if coeff and mask & ~alive == 0:
                clean[mask] = coeff
        self.terms = clean

    @classmethod
    def scalar(cls, value: Scalar, cfg: ParityConfig) -> "CliffordElem":
        return cls({0: to_rational(value)}, cfg)

    @classmethod
    def one(cls, cfg: ParityConfig) -> "CliffordElem":
        return cls({0: 1}, cfg)

    @classmethod
    def zero(cls, cfg: ParityConfig) -> "CliffordElem":
        return cls({}, cfg)

    @classmethod
    def gen(cls, i: int, cfg: ParityConfig) -> "CliffordElem":
        if not 1 <= i <= cfg.n:
            raise UsageError(f"c_{i} out of range for n={cfg.n}")
        return cls({1 << (i - 1): 1}, cfg)

    @classmethod
    def word(cls, indices: Sequence[int], cfg: ParityConfig, coeff: Scalar = 1) -> "CliffordElem":
        """The product ``c_{i_1} c_{i_2} ...`` in the given order."""
        elem = cls.scalar(coeff, cfg)
        for i in indices:
            elem = elem * cls.gen(i, cfg)
        return elem

    def _check(self, other: "CliffordElem"):
        if other.cfg != self.cfg:
            raise UsageError("Clifford elements over different configurations")

    def _lift(self, other) -> "CliffordElem":
        if isinstance(other, CliffordElem):
            self._check(other)
            return other
        return CliffordElem.scalar(other, self.cfg)

    def __add__(self, other):
        other = self._lift(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return CliffordElem(terms, self.cfg)

    __radd__ = __add__

    def __neg__(self):
        return CliffordElem({m: -c for m, c in self.terms.items()}, self.cfg)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CliffordElem):
            value = to_rational(other)
            return CliffordElem({m: c * value for m, c in self.terms.items()}, self.cfg)
        return cliff_mul(self, other)

    def __rmul__(self, other):
        value = to_rational(other)
        return CliffordElem({m: value * c for m, c in self.terms.items()}, self.cfg)

    def __eq__(self, other):
        if isinstance(other, CliffordElem):
            return self.cfg == other.cfg and self.terms == other.terms
        try:
            return self == CliffordElem.scalar(other, self.cfg)
        except UsageError:
            return NotImplemented

    def __hash__(self):
        return hash((self.cfg, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        return len({bin(m).count("1") % 2 for m in self.terms}) <= 1

    def parity(self) -> int | None:
        """``0`` or ``1`` for homogeneous nonzero elements, else ``None``."""
        kinds = {bin(m).count("1") % 2 for m in self.terms}
        return kinds.pop() if len(kinds) == 1 else None

    def inverse(self) -> "CliffordElem":
        return cliff_inverse(self)

    def sorted_terms(self) -> list[tuple[int, Scalar]]:
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]))

    def to_json(self) -> dict:
        return {
            "mode": self.cfg.mode,
            "parity": list(self.cfg.parity),
            "terms": [
                {"word": list(indices_of(m)), "coeff": format_rational(c)}
                for m, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CliffordElem":
        try:
            cfg = ParityConfig(tuple(data["parity"]), data.get("mode", "quotient"))
            terms: dict[int, Scalar] = {}
            for t in data["terms"]:
                elem = cls.word(t["word"], cfg, to_rational(t["coeff"]))
                for m, c in elem.terms.items():
                    terms[m] = terms.get(m, 0) + c
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed Clifford JSON: {data!r}") from exc
        return cls(terms, cfg)

    def __str__(self):
        return format_terms((word_str(m), c) for m, c in self.sorted_terms())

    def __repr__(self):
        return f"CliffordElem({str(self)!r})"


def format_terms(pairs: Iterable[tuple[str, Scalar]]) -> str:
    """Render ``coeff*monomial`` pairs as ``a - 2b + 1/2c``; the empty monomial is ``1``."""
    out = ""
    for mono, coeff in pairs:
        coeff = to_rational(coeff)
        neg = coeff < 0
        mag = -coeff if neg else coeff
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}{mono}" if isinstance(mag, int) else f"({mag}){mono}"
        else:
            body = str(mag)
        if not out:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out or "0"


def cliff_mul(a: CliffordElem, b: CliffordElem) -> CliffordElem:
    """The product ``a * b``."""
    a._check(b)
    terms: dict[int, Scalar] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            m = ma ^ mb
            terms[m] = terms.get(m, 0) + word_sign(ma, mb) * ca * cb
    return CliffordElem(terms, a.cfg)


def cliff_inverse(a: CliffordElem) -> CliffordElem:
    """Two-sided inverse of ``a``, or :class:`NotInvertible`.

    Solves ``a * x = 1`` over the word basis and checks both products.
    """
    cfg = a.cfg
    basis = cfg.words()
    columns = [cliff_mul(a, CliffordElem({w: 1}, cfg)).terms for w in basis]
    try:
        coeffs = linalg.solve({0: 1}, columns)
    except NoSolution:
        raise NotInvertible(f"{a} is not a unit") from None
    x = CliffordElem({w: c for w, c in zip(basis, coeffs)}, cfg)
    one = CliffordElem.one(cfg)
    if cliff_mul(a, x) != one or cliff_mul(x, a) != one:
        raise NotInvertible(f"{a} has a one-sided inverse only")
    return x


def gamma(i: int, direction: int, cfg: ParityConfig) -> CliffordElem:
    """``±c_i`` when ``i`` and ``i±1`` are both odd, else ``1``."""
    if direction not in (1, -1):
        raise UsageError("direction must be +1 or -1")
    if not 1 <= i <= cfg.n:
        raise UsageError(f"gamma index {i} out of range for n={cfg.n}")
    if cfg.is_odd(i) and cfg.is_odd(i + direction):
        return CliffordElem({1 << (i - 1): direction}, cfg)
    return CliffordElem.one(cfg)


def gamma_pair(i: int, j: int, cfg: ParityConfig) -> CliffordElem:
    """``gamma_{i,j}`` for neighbouring ``j = i ± 1``."""
    if abs(i - j) != 1:
        raise UsageError(f"gamma_{{{i},{j}}} needs neighbouring indices")
    return gamma(i, j - i, cfg)


def units_product(factors: Iterable[CliffordElem], cfg: ParityConfig) -> CliffordElem:
    out = CliffordElem.one(cfg)
    for f in factors:
        out = cliff_mul(out, f)
    return out


def iter_words(cfg: ParityConfig) -> Iterator[CliffordElem]:
    for w in cfg.words():
        yield CliffordElem({w: 1}, cfg)
