"""Permutations, reduced words and q-orders of the Coxeter groups A, BC and D."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Sequence

from .errors import ResourceError, UsageError
from .report import Report
from .scalars import QSeries, default_order, qdoublefactorial, qfactorial, qint

# Enumeration bounds for coxeter_qorder.
MAX_A = 7
MAX_BC = 5


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..n}`` stored by its images ``w(1), ..., w(n)``.

    Products compose as functions: ``(w * v)(i) == w(v(i))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise UsageError(f"not a permutation of 1..{len(images)}: {images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        """The transposition ``s_i`` swapping ``i`` and ``i+1``."""
        if not 1 <= i < n:
            raise UsageError(f"s_{i} is not a simple transposition in S_{n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> "Permutation":
        """The product ``s_{word[0]} s_{word[1]} ...``."""
        w = cls.identity(n)
        for i in word:
            w = w * cls.simple(i, n)
        return w

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.n != self.n:
            raise UsageError("permutations of different sizes")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        return length(self)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, start=1))

    def __str__(self):
        return ",".join(str(i) for i in self.images)


def length(w: Permutation) -> int:
    """Number of inversions ``i < j`` with ``w(i) > w(j)``."""
    im = w.images
    return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])


def reduced_word(w: Permutation) -> list[int]:
    """A reduced word for ``w``, found by repeatedly splitting off right descents.

    The returned word is deterministic, but callers should not rely on which
    reduced word they get.
    """
    images = list(w.images)
    letters: list[int] = []
    while True:
        for i in range(len(images) - 1):
            if images[i] > images[i + 1]:
                images[i], images[i + 1] = images[i + 1], images[i]
                letters.append(i + 1)
                break
        else:
            break
    letters.reverse()
    return letters


def all_reduced_words(w: Permutation) -> list[list[int]]:
    """Every reduced word of ``w``, in lexicographic order."""
    return [list(word) for word in _reduced_words(w.images)]


@lru_cache(maxsize=None)
def _reduced_words(images: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    if all(i == j for i, j in enumerate(images, start=1)):
        return ((),)
    words = []
    for i in range(len(images) - 1):
        if images[i] > images[i + 1]:
            swapped = list(images)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            words.extend(prefix + (i + 1,) for prefix in _reduced_words(tuple(swapped)))
    return tuple(sorted(words))


def is_reduced(word: Sequence[int], n: int) -> bool:
    return length(Permutation.from_word(word, n)) == len(word)


def all_permutations(n: int) -> Iterator[Permutation]:
    for images in permutations(range(1, n + 1)):
        yield Permutation(images)


@dataclass(frozen=True)
class SignedPermutation:
    """A permutation of ``{±1..±n}`` with ``w(-k) = -w(k)``, stored on ``1..n``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if sorted(abs(x) for x in images) != list(range(1, len(images) + 1)):
            raise UsageError(f"not a signed permutation: {images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1] if i > 0 else -self.images[-i - 1]

    def negatives(self) -> int:
        return sum(1 for x in self.images if x < 0)

    def is_even(self) -> bool:
        """Membership in the type D subgroup."""
        return self.negatives() % 2 == 0


def length_bc(w: SignedPermutation) -> int:
    """Inversions ``(i, j)`` with ``i < j`` plus ``(-i, j)`` with ``i <= j``."""
    n = w.n
    plain = sum(1 for i in range(1, n + 1) for j in range(i + 1, n + 1) if w(i) > w(j))
    mixed = sum(1 for i in range(1, n + 1) for j in range(i, n + 1) if w(-i) > w(j))
    return plain + mixed


def length_d(w: SignedPermutation) -> int:
    """As :func:`length_bc` but with the strict condition ``i < j`` for ``(-i, j)``."""
    n = w.n
    plain = sum(1 for i in range(1, n + 1) for j in range(i + 1, n + 1) if w(i) > w(j))
    mixed = sum(1 for i in range(1, n + 1) for j in range(i + 1, n + 1) if w(-i) > w(j))
    return plain + mixed


def signed_permutations(n: int, even_only: bool = False) -> Iterator[SignedPermutation]:
    for images in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            w = SignedPermutation(tuple(s * x for s, x in zip(signs, images)))
            if not even_only or w.is_even():
                yield w


def coxeter_qorder(kind: str, n: int, order: int | None = None) -> QSeries:
    """``sum q^length(w)`` over the Coxeter group of the given type, by enumeration.

    Type ``A`` with rank ``n`` enumerates the permutations of ``n`` letters, so
    that its q-order is ``qfactorial(n)``.
    """
    if order is None:
        order = default_order()
    kind = kind.upper()
    if n < 0:
        raise UsageError("n must be nonnegative")
    counts: dict[int, int] = {}
    if kind == "A":
        if n > MAX_A:
            raise ResourceError(f"type A enumeration is limited to n <= {MAX_A}")
        for w in all_permutations(n):
            ell = length(w)
            counts[ell] = counts.get(ell, 0) + 1
    elif kind in ("BC", "B", "C", "D"):
        if n > MAX_BC:
            raise ResourceError(f"type {kind} enumeration is limited to n <= {MAX_BC}")
        is_d = kind == "D"
        if is_d and n < 1:
            raise UsageError("type D needs n >= 1")
        stat = length_d if is_d else length_bc
        for w in signed_permutations(n, even_only=is_d):
            ell = stat(w)
            counts[ell] = counts.get(ell, 0) + 1
    else:
        raise UsageError(f"unknown Coxeter type {kind!r}")
    top = max(counts) if counts else 0
    return QSeries([counts.get(d, 0) for d in range(top + 1)], order)


def qorder_closed_form(kind: str, n: int, order: int | None = None) -> QSeries:
    """``(n+1)_q!`` for ``A_n``, ``(2n)_q!!`` for ``BC_n`` and ``(2n-2)_q!! (n)_q`` for ``D_n``."""
    kind = kind.upper()
    if kind == "A":
        return qfactorial(n + 1, order)
    if kind in ("BC", "B", "C"):
        return qdoublefactorial(2 * n, order)
    if kind == "D":
        if n < 2:
            raise UsageError("type D needs n >= 2")
        return qdoublefactorial(2 * n - 2, order) * qint(n, order)
    raise UsageError(f"unknown Coxeter type {kind!r}")


def verify_coxeter_qorders(max_a: int = 6, max_bc: int = 4, order: int = 20) -> Report:
    """Enumerated q-orders against the closed forms; ``A_n`` is the group of ``n + 1`` letters."""
    rep = Report(f"Coxeter q-orders order={order}")
    for n in range(1, max_a + 1):
        rep.check(coxeter_qorder("A", n + 1, order) == qorder_closed_form("A", n, order), f"A_{n}")
    for n in range(1, max_bc + 1):
        rep.check(coxeter_qorder("BC", n, order) == qorder_closed_form("BC", n, order), f"BC_{n}")
    for n in range(2, max_bc + 1):
        rep.check(coxeter_qorder("D", n, order) == qorder_closed_form("D", n, order), f"D_{n}")
    return rep
