"""Kappa units, the companion-type matrix ``M_(n)`` and complete 𝔡-symmetric polynomials.

``h^{(n)}_m`` is the top-left entry of ``M_(n)^m``.  A window offset ``k``
builds the same objects on the variables ``y_{k+1}..y_n`` by index shift,
giving ``h^{(k,n)}_m``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement

from .clifford import CliffordElem, ParityConfig, cliff_inverse, cliff_mul, gamma_pair, units_product
from .demazure import demazure_apply
from .dsymmetric import elem
from .errors import UsageError
from .polyclifford import PolyCliff, poly_mul
from .report import Report

Matrix = list[list[PolyCliff]]


# kappa factors


def _check_range(k: int, l: int, cfg: ParityConfig):
    if not 0 <= k <= l <= cfg.n:
        raise UsageError(f"need 0 <= k <= l <= {cfg.n}, got k={k}, l={l}")


def kappa(k: int, l: int, cfg: ParityConfig) -> CliffordElem:
    """``kappa_{k,l} = gamma_{k+1,k} gamma_{k+1,k+2} ... gamma_{l-1,l} gamma_{l,l-1}``; ``kappa_{l,l} = gamma_{l,l+1}``."""
    _check_range(k, l, cfg)
    if k == l:
        if l == 0:
            raise UsageError("kappa_{0,0} is undefined")
        return gamma_pair(l, l + 1, cfg)
    factors = []
    for j in range(k + 1, l):
        factors += [gamma_pair(j, j - 1, cfg), gamma_pair(j, j + 1, cfg)]
    factors.append(gamma_pair(l, l - 1, cfg))
    return units_product(factors, cfg)


def kappa_tilde(k: int, l: int, cfg: ParityConfig) -> CliffordElem:
    """``kappa~_{k,l} = kappa_{k,l} kappa_{l,l}``."""
    if k >= l:
        raise UsageError(f"kappa~ needs k < l, got k={k}, l={l}")
    return cliff_mul(kappa(k, l, cfg), kappa(l, l, cfg))


def kappa_tilde_chain(base: int, count: int, cfg: ParityConfig) -> CliffordElem:
    """``kappa~_{base,base+1} ... kappa~_{base,base+count}``; 1 when ``count <= 0``."""
    out = CliffordElem.one(cfg)
    for j in range(1, count + 1):
        out = cliff_mul(out, kappa_tilde(base, base + j, cfg))
    return out


def verify_kappa(cfg: ParityConfig) -> Report:
    """Splitting ``kappa_{k,l} = kappa~_{k,m} kappa_{m,l}`` and invertibility of every factor."""
    rep = Report(f"kappa factors [{cfg.label()}]")
    n = cfg.n
    for k in range(0, n + 1):
        for l in range(max(k, 1), n + 1):
            if k == 0 and l == 0:
                continue
            value = kappa(k, l, cfg)
            inv = cliff_inverse(value)
            rep.check(cliff_mul(value, inv) == CliffordElem.one(cfg), f"kappa_{k},{l} not a unit")
            if k < l:
                value = kappa_tilde(k, l, cfg)
                inv = cliff_inverse(value)
                rep.check(cliff_mul(value, inv) == CliffordElem.one(cfg), f"kappa~_{k},{l} not a unit")
            for m in range(k + 1, l):
                split = cliff_mul(kappa_tilde(k, m, cfg), kappa(m, l, cfg))
                rep.check(split == kappa(k, l, cfg), f"kappa_{k},{l} != kappa~_{k},{m} kappa_{m},{l}")
    return rep


# the matrix M and its powers


def _zero_matrix(size: int, cfg: ParityConfig) -> Matrix:
    return [[PolyCliff.zero(cfg) for _ in range(size)] for _ in range(size)]


def identity_matrix(size: int, cfg: ParityConfig) -> Matrix:
    out = _zero_matrix(size, cfg)
    for i in range(size):
        out[i][i] = PolyCliff.one(cfg)
    return out


def m_matrix(n: int, cfg: ParityConfig, k: int = 0) -> Matrix:
    """``M_(n)`` on the window ``y_{k+1}..y_n``.

    First column ``(-1)^{l-1} e^{(k,n)}_l``, superdiagonal ``kappa~_{k+1,k+l+1}``.
    """
    if not 0 <= k < n <= cfg.n:
        raise UsageError(f"need 0 <= k < n <= {cfg.n}, got k={k}, n={n}")
    size = n - k
    out = _zero_matrix(size, cfg)
    for l in range(1, size + 1):
        sign = 1 if l % 2 else -1
        out[l - 1][0] = elem(n, l, cfg, k=k) * sign
        if l < size:
            out[l - 1][l] = PolyCliff.from_clifford(kappa_tilde(k + 1, k + l + 1, cfg))
    return out


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Row-by-column product; the row entry multiplies from the left."""
    size = len(a)
    cfg = a[0][0].cfg
    out = _zero_matrix(size, cfg)
    for i in range(size):
        for t in range(size):
            left = a[i][t]
            if left.is_zero():
                continue
            for j in range(size):
                right = b[t][j]
                if not right.is_zero():
                    out[i][j] = out[i][j] + poly_mul(left, right)
    return out


@lru_cache(maxsize=None)
def _power(n: int, m: int, cfg: ParityConfig, k: int) -> tuple[tuple[PolyCliff, ...], ...]:
    if m == 0:
        mat = identity_matrix(n - k, cfg)
    else:
        mat = mat_mul([list(r) for r in _power(n, m - 1, cfg, k)], m_matrix(n, cfg, k))
    return tuple(tuple(r) for r in mat)


def mpower(n: int, m: int, cfg: ParityConfig, k: int = 0) -> Matrix:
    """``M_(n)^m = M_(n)^{m-1} M_(n)`` on the window, memoised."""
    if m < 0:
        raise UsageError(f"negative power {m}")
    return [list(r) for r in _power(n, m, cfg, k)]


def complete_poly(n: int, m: int, cfg: ParityConfig, k: int = 0) -> PolyCliff:
    """``h^{(k,n)}_m``: the top-left entry of ``M^m``; zero for ``m < 0``."""
    if m < 0:
        return PolyCliff.zero(cfg)
    return mpower(n, m, cfg, k)[0][0]


def mpower_top_row(n: int, m: int, cfg: ParityConfig, k: int = 0) -> list[PolyCliff]:
    return mpower(n, m, cfg, k)[0]


def expected_top_row(n: int, m: int, cfg: ParityConfig, k: int = 0) -> list[PolyCliff]:
    """``(h_m, h_{m-1} kappa~_{1,2}, h_{m-2} kappa~_{1,2} kappa~_{1,3}, ...)``, zero past column ``m+1``."""
    row = []
    for j in range(n - k):
        chain = PolyCliff.from_clifford(kappa_tilde_chain(k + 1, j, cfg))
        row.append(poly_mul(complete_poly(n, m - j, cfg, k), chain))
    return row


def verify_top_row(n: int, max_m: int, cfg: ParityConfig, k: int = 0) -> Report:
    rep = Report(f"top row of M^m n={n} k={k} [{cfg.label()}]")
    for m in range(max_m + 1):
        got, want = mpower_top_row(n, m, cfg, k), expected_top_row(n, m, cfg, k)
        for j, (a, b) in enumerate(zip(got, want), start=1):
            rep.check(a == b, f"entry (1,{j}) of M^{m} differs")
    return rep


def verify_associativity(n: int, m: int, cfg: ParityConfig) -> Report:
    """``M^{m-1} M = M M^{m-1}``, a sanity check on the noncommutative products."""
    rep = Report(f"M power association n={n} m={m} [{cfg.label()}]")
    if m < 1:
        return rep
    left = mat_mul(mpower(n, m - 1, cfg), m_matrix(n, cfg))
    right = mat_mul(m_matrix(n, cfg), mpower(n, m - 1, cfg))
    for i in range(n):
        for j in range(n):
            rep.check(left[i][j] == right[i][j], f"entry ({i + 1},{j + 1}) depends on association")
    return rep


# vanishing identities


def vanishing_sums(n: int, m: int, cfg: ParityConfig, k: int = 0) -> tuple[PolyCliff, PolyCliff]:
    """Both alternating sums; ``kappa~_{1,2}...kappa~_{1,l}`` has ``l - 1`` factors.

    ``sum_l (-1)^l h_{m-l} K_l e_l`` and ``sum_l (-1)^l K_l e_l h_{m-l}``.
    """
    first = PolyCliff.zero(cfg)
    second = PolyCliff.zero(cfg)
    for l in range(0, min(m, n - k) + 1):
        chain = PolyCliff.from_clifford(kappa_tilde_chain(k + 1, l - 1, cfg))
        e = elem(n, l, cfg, k=k)
        h = complete_poly(n, m - l, cfg, k)
        sign = -1 if l % 2 else 1
        first = first + poly_mul(poly_mul(h, chain), e) * sign
        second = second + poly_mul(poly_mul(chain, e), h) * sign
    return first, second


def verify_vanishing(n: int, max_m: int, cfg: ParityConfig, k: int = 0) -> Report:
    """Both orderings equal ``delta_{m,0}`` for ``0 <= m <= max_m``."""
    rep = Report(f"vanishing identities n={n} k={k} [{cfg.label()}]")
    for m in range(max_m + 1):
        expected = PolyCliff.one(cfg) if m == 0 else PolyCliff.zero(cfg)
        first, second = vanishing_sums(n, m, cfg, k)
        rep.check(first == expected, f"h-first ordering fails at m={m}")
        rep.check(second == expected, f"e-first ordering fails at m={m}")
    return rep


def verify_complete_symmetric(n: int, max_m: int, cfg: ParityConfig, k: int = 0) -> Report:
    """Every ``h^{(k,n)}_m`` is killed by ``d_j`` for ``k < j < n``."""
    rep = Report(f"complete polynomials symmetric n={n} k={k} [{cfg.label()}]")
    for m in range(max_m + 1):
        h = complete_poly(n, m, cfg, k)
        for j in range(k + 1, n):
            rep.check(demazure_apply(j, h).is_zero(), f"d_{j} h_{m} != 0")
    return rep


def classical_complete(n: int, m: int, cfg: ParityConfig) -> PolyCliff:
    """Sum of ``y_{i_1}...y_{i_m}`` over ``i_1 <= ... <= i_m``; the all-even oracle."""
    out = PolyCliff.zero(cfg)
    for idx in combinations_with_replacement(range(n), m):
        exps = [0] * cfg.n
        for i in idx:
            exps[i] += 1
        out = out + PolyCliff.monomial((), exps, cfg)
    return out
