"""Exact incremental row reduction over the rationals on sparse vectors.

Vectors are dicts mapping comparable keys to nonzero rationals.  Each stored
row has its pivot at its smallest key, so reducing a new vector only ever
introduces larger keys and a single left-to-right sweep decides membership.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping

from .errors import NoSolution

Vector = Mapping[Hashable, object]


def _normalize(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


class Echelon:
    """A growing set of linearly independent sparse rows.

    With ``track=True`` every stored row remembers how it was built from the
    vectors passed to :meth:`add`, which is what :meth:`solve` needs.
    """

    def __init__(self, track: bool = False):
        self.rows: dict = {}
        self.combos: dict = {}
        self.track = track
        self._count = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: dict, combo: dict | None):
        while vec:
            key = min(vec)
            row = self.rows.get(key)
            if row is None:
                return key
            factor = vec[key]
            for k, v in row.items():
                nv = vec.get(k, 0) - factor * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
            if combo is not None:
                for k, v in self.combos[key].items():
                    nv = combo.get(k, 0) - factor * v
                    if nv:
                        combo[k] = nv
                    else:
                        combo.pop(k, None)
        return None

    def add(self, vector: Vector) -> bool:
        """Insert ``vector``; return whether it was independent of the rows so far."""
        index = self._count
        self._count += 1
        vec = {k: v for k, v in vector.items() if v}
        combo = {index: 1} if self.track else None
        key = self._reduce(vec, combo)
        if key is None:
            return False
        pivot = vec[key]
        inv = Fraction(1) / pivot
        self.rows[key] = {k: _normalize(v * inv) for k, v in vec.items()}
        if self.track:
            self.combos[key] = {k: _normalize(v * inv) for k, v in combo.items()}
        return True

    def contains(self, vector: Vector) -> bool:
        vec = {k: v for k, v in vector.items() if v}
        return self._reduce(vec, None) is None

    def solve(self, vector: Vector) -> dict[int, object]:
        """Coefficients over the added vectors (by insertion index) reproducing ``vector``."""
        if not self.track:
            raise ValueError("solve needs an Echelon built with track=True")
        vec = {k: v for k, v in vector.items() if v}
        combo: dict = {}
        if self._reduce(vec, combo) is not None:
            raise NoSolution("vector is not in the span")
        return {k: _normalize(-v) for k, v in combo.items()}


def rank(vectors: Iterable[Vector]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def solve(target: Vector, vectors: Iterable[Vector]) -> list:
    """Rational coefficients ``x`` with ``sum x_i vectors[i] == target``.

    Raises :class:`NoSolution` when no combination exists.
    """
    vectors = list(vectors)
    ech = Echelon(track=True)
    for v in vectors:
        ech.add(v)
    combo = ech.solve(target)
    return [combo.get(i, 0) for i in range(len(vectors))]
