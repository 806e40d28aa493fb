"""Exact scalars: rationals and truncated power series in q.

Rationals are :class:`fractions.Fraction`; plain ``int`` values are accepted
wherever a rational is expected, which keeps the common integral case fast.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

from .errors import InconsistencyError, UsageError

Rational = Fraction
Scalar = Union[int, Fraction]

DEFAULT_ORDER = 24
ORDER_ENV = "CLIFFSYM_ORDER"


def default_order() -> int:
    """Truncation order, taken from ``CLIFFSYM_ORDER`` when set."""
    raw = os.environ.get(ORDER_ENV)
    if raw is None or raw == "":
        return DEFAULT_ORDER
    try:
        value = int(raw)
    except ValueError as exc:
        raise UsageError(f"{ORDER_ENV} must be an integer, got {raw!r}") from exc
    if value < 0:
        raise UsageError(f"{ORDER_ENV} must be nonnegative")
    return value


def to_rational(value: Scalar | str) -> Scalar:
    """Parse ``value`` into an exact scalar; integral values come back as ``int``."""
    if isinstance(value, bool):
        raise UsageError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        text = value.strip().replace("−", "-")
        try:
            frac = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"not a rational number: {value!r}") from exc
        return frac.numerator if frac.denominator == 1 else frac
    raise UsageError(f"not an exact scalar: {value!r}")


def format_rational(value: Scalar) -> str:
    value = to_rational(value)
    return str(value)


class QSeries:
    """A power series in q with integer coefficients, truncated after ``q^order``.

    Two series compare equal when they agree up to the smaller of their orders.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[int] = (), order: int | None = None):
        if order is None:
            order = default_order()
        if order < 0:
            raise UsageError("order must be nonnegative")
        data = [int(c) for c in coeffs][: order + 1]
        data.extend([0] * (order + 1 - len(data)))
        self.coeffs: tuple[int, ...] = tuple(data)
        self.order = order

    @classmethod
    def one(cls, order: int | None = None) -> "QSeries":
        return cls([1], order)

    @classmethod
    def zero(cls, order: int | None = None) -> "QSeries":
        return cls([], order)

    @classmethod
    def q(cls, power: int = 1, order: int | None = None) -> "QSeries":
        """The monomial ``q**power``."""
        if power < 0:
            raise UsageError("negative powers of q are not power series")
        return cls([0] * power + [1], order)

    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return QSeries([other], self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        return QSeries((a + b for a, b in zip(self.coeffs, other.coeffs)), order)

    __radd__ = __add__

    def __neg__(self):
        return QSeries((-a for a in self.coeffs), self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a:
                for j, b in enumerate(other.coeffs[: order + 1 - i]):
                    out[i + j] += a * b
        return QSeries(out, order)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            return QSeries.one(self.order) / (self ** (-exponent))
        result = QSeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        v = other.valuation()
        if v is None:
            raise ZeroDivisionError("division by the zero series")
        lead = other.coeffs[v]
        if lead not in (1, -1):
            raise UsageError("divisor is not a unit: lowest coefficient must be 1 or -1")
        if any(self.coeffs[:v]):
            raise UsageError("quotient would not be a power series")
        order = min(self.order, other.order) - v
        num = list(self.coeffs[v : v + order + 1])
        den = other.coeffs[v : v + order + 1]
        out = [0] * (order + 1)
        for i in range(order + 1):
            c = num[i] * lead
            out[i] = c
            if c:
                for j in range(1, order + 1 - i):
                    if j < len(den):
                        num[i + j] -= c * den[j]
        return QSeries(out, order)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        return self.coeffs[: order + 1] == other.coeffs[: order + 1]

    def __hash__(self):
        raise TypeError("QSeries equality depends on truncation and is not hashable")

    def truncate(self, order: int) -> "QSeries":
        return QSeries(self.coeffs, min(order, self.order))

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k <= self.order else 0

    def degree(self) -> int | None:
        """Highest nonzero coefficient index within the truncation."""
        for i in range(self.order, -1, -1):
            if self.coeffs[i]:
                return i
        return None

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "QSeries":
        try:
            return cls(data["coeffs"], int(data["order"]))
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed QSeries JSON: {data!r}") from exc

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"QSeries({str(self)!r}, order={self.order})"


def _poly(coeffs: Sequence[int], order: int | None) -> QSeries:
    return QSeries(coeffs, order)


def _polymul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _polydivmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Exact polynomial long division over the integers; ``den`` must be monic up to sign."""
    den = list(den)
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    lead = den[-1]
    rem = list(num)
    quot = [0] * max(len(rem) - len(den) + 1, 1)
    for shift in range(len(rem) - len(den), -1, -1):
        c = rem[shift + len(den) - 1]
        if c % lead:
            raise InconsistencyError("non-integral quotient in polynomial division")
        c //= lead
        quot[shift] = c
        if c:
            for j, d in enumerate(den):
                rem[shift + j] -= c * d
    return quot, rem


def _qint_poly(n: int) -> list[int]:
    return [1] * n if n > 0 else [0]


def _qfactorial_poly(n: int) -> list[int]:
    out = [1]
    for k in range(1, n + 1):
        out = _polymul(out, _qint_poly(k))
    return out


def qint(n: int, order: int | None = None) -> QSeries:
    """The q-integer ``1 + q + ... + q^(n-1)``; ``qint(0)`` is zero."""
    if n < 0:
        raise UsageError("qint needs n >= 0")
    return _poly(_qint_poly(n), order)


def qfactorial(n: int, order: int | None = None) -> QSeries:
    if n < 0:
        raise UsageError("qfactorial needs n >= 0")
    return _poly(_qfactorial_poly(n), order)


def qdoublefactorial(m: int, order: int | None = None) -> QSeries:
    """``(2n)_q!! = (2n)_q (2n-2)_q ... (2)_q`` for even ``m = 2n``."""
    if m < 0 or m % 2:
        raise UsageError("qdoublefactorial needs an even argument >= 0")
    out = [1]
    for k in range(2, m + 1, 2):
        out = _polymul(out, _qint_poly(k))
    return _poly(out, order)


def qmultinomial(n: int, parts: Sequence[int], order: int | None = None) -> QSeries:
    """``(n)_q! / prod (p)_q!`` by exact polynomial division."""
    if any(p < 0 for p in parts) or sum(parts) != n:
        raise UsageError(f"parts {list(parts)} do not sum to {n}")
    den = [1]
    for p in parts:
        den = _polymul(den, _qfactorial_poly(p))
    quot, rem = _polydivmod(_qfactorial_poly(n), den)
    if any(rem):
        raise InconsistencyError("q-multinomial division left a remainder")
    return _poly(quot, order)


def qbinomial(n: int, k: int, order: int | None = None) -> QSeries:
    if not 0 <= k <= n:
        raise UsageError("qbinomial needs 0 <= k <= n")
    return qmultinomial(n, (k, n - k), order)


def geometric_inverse(n: int, order: int | None = None) -> QSeries:
    """Truncation of ``(1 - q)^(-n)``."""
    if n < 1:
        raise UsageError("geometric_inverse needs n >= 1")
    if order is None:
        order = default_order()
    return QSeries((comb(d + n - 1, n - 1) for d in range(order + 1)), order)
