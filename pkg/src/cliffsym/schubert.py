"""𝔡-Schubert polynomials and the freeness of ``Polℭ`` over the 𝔡-symmetric polynomials.

``s_w = d_{w^{-1} w_0}(y_1^{n-1} ... y_{n-1})``, where ``d_v`` applies the
Demazure operators along a reduced word of ``v`` (last letter first).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Sequence

from .clifford import CliffordElem, ParityConfig, cliff_inverse, cliff_mul
from .demazure import demazure_word, is_coherent, joint_kernel_dim
from .dsymmetric import elem, generator_monomials, lambda_rank
from .errors import NotInvertible, UsageError
from .linalg import Echelon
from .polyclifford import PolyCliff, basis_keys, poly_mul
from .report import Report
from .scalars import QSeries, geometric_inverse, qfactorial
from .symgroup import Permutation, all_permutations, all_reduced_words, length, reduced_word


def staircase(cfg: ParityConfig) -> PolyCliff:
    """``y_1^{n-1} y_2^{n-2} ... y_{n-1}``."""
    n = cfg.n
    return PolyCliff.monomial((), tuple(n - i for i in range(1, n + 1)), cfg)


def demazure_perm(v: Permutation, f: PolyCliff, word: Sequence[int] | None = None) -> PolyCliff:
    """``d_v(f)`` along ``word`` (default: a fixed reduced word of ``v``)."""
    if v.n != f.cfg.n:
        raise UsageError(f"permutation of {v.n} letters on {f.cfg.n} variables")
    return demazure_word(reduced_word(v) if word is None else word, f)


@lru_cache(maxsize=None)
def schubert(w: Permutation, cfg: ParityConfig) -> PolyCliff:
    """``s_w`` along the default reduced word of ``w^{-1} w_0``."""
    if w.n != cfg.n:
        raise UsageError(f"permutation of {w.n} letters for n={cfg.n}")
    w0 = Permutation.longest(cfg.n)
    return demazure_perm(w.inverse() * w0, staircase(cfg))


def schubert_table(cfg: ParityConfig) -> dict[Permutation, PolyCliff]:
    return {w: schubert(w, cfg) for w in all_permutations(cfg.n)}


def constant_part(f: PolyCliff) -> CliffordElem | None:
    """The Clifford element ``f`` if it has polynomial degree 0, else ``None``."""
    if f.is_zero():
        return CliffordElem.zero(f.cfg)
    if f.degrees() != {0}:
        return None
    return f.clifford_part()


def is_unit(f: PolyCliff) -> bool:
    c = constant_part(f)
    if c is None or c.is_zero():
        return False
    try:
        inv = cliff_inverse(c)
    except NotInvertible:
        return False
    return cliff_mul(c, inv) == CliffordElem.one(f.cfg)


def verify_schubert_props(n: int, cfg: ParityConfig) -> Report:
    """Degrees, the action of ``d_v`` on ``s_w`` and invertibility of ``s_e``.

    For all ``(v, w)``: ``d_v s_w = s_{w v^{-1}}`` when ``l(w v^{-1}) = l(w) - l(v)``;
    ``d_w s_w`` is a unit; ``d_v s_w = 0`` when ``l(v) = l(w)``, ``v != w``
    or ``l(v) > l(w)``.  With ``d_v`` read along a reduced word of ``v``, the
    unit case is ``v = w``; ``v = w^{-1}`` belongs to the reversed reading.
    """
    if cfg.n != n:
        raise UsageError(f"configuration has {cfg.n} indices, expected {n}")
    rep = Report(f"schubert properties n={n} [{cfg.label()}]")
    table = schubert_table(cfg)
    for w, s in table.items():
        rep.check(s.degrees() <= {length(w)} and not s.is_zero(), f"s_{w} is not homogeneous of degree l(w)")
    for v, w in product(table, repeat=2):
        lv, lw = length(v), length(w)
        image = demazure_perm(v, table[w])
        if v == w:
            rep.check(is_unit(image), f"d_v s_w is not a unit for v={v}, w={w}")
        elif lv >= lw:
            rep.check(image.is_zero(), f"d_v s_w != 0 for v={v}, w={w}")
        quotient = w * v.inverse()
        if length(quotient) == lw - lv:
            rep.check(image == table[quotient], f"d_v s_w != s_(wv^-1) for v={v}, w={w}")
    se = constant_part(table[Permutation.identity(n)])
    rep.check(se is not None and is_unit(table[Permutation.identity(n)]), "s_e is not a unit")
    if se is not None and not se.is_zero():
        rep.data["s_e"] = str(se)
        rep.data["s_e_inverse"] = str(cliff_inverse(se))
    return rep


def hilbert_monomials(cfg: ParityConfig, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors ``alpha`` with ``alpha_i <= n - i`` and ``|alpha| = d``."""
    n = cfg.n
    out = []
    for alpha in product(*(range(n - i + 1) for i in range(1, n + 1))):
        if sum(alpha) == d:
            out.append(alpha)
    return out


def verify_reduced_words(n: int, cfg: ParityConfig) -> Report:
    """``d_w`` agrees along every reduced word of ``w``, on ``c^beta y^alpha`` with ``alpha`` under the staircase."""
    rep = Report(f"reduced-word independence n={n} [{cfg.label()}]")
    top = n * (n - 1) // 2
    tests = [
        PolyCliff.monomial((), alpha, cfg)
        for d in range(top + 1)
        for alpha in hilbert_monomials(cfg, d)
    ]
    tests = [poly_mul(PolyCliff({(m, (0,) * n): 1}, cfg, clean=False), t) for t in tests for m in cfg.words()]
    for w in all_permutations(n):
        words = all_reduced_words(w)
        if len(words) < 2:
            continue
        for f in tests:
            ref = demazure_word(words[0], f)
            for word in words[1:]:
                rep.check(demazure_word(word, f) == ref, f"d_{w} differs between {words[0]} and {word}")
    return rep


def _word_poly(mask: int, cfg: ParityConfig) -> PolyCliff:
    return PolyCliff({(mask, (0,) * cfg.n): 1}, cfg, clean=False)


def verify_freeness(n: int, cfg: ParityConfig, max_degree: int = 6) -> Report:
    """``word * e-monomial * H-monomial`` is a scalar basis of every degree piece.

    Also checks that the left Clifford span of the Schubert polynomials is the
    span of the ``H`` monomials, degreewise.
    """
    rep = Report(f"freeness n={n} [{cfg.label()}]")
    gens = [elem(n, m, cfg) for m in range(1, n + 1)]
    words = [_word_poly(m, cfg) for m in cfg.words()]
    ranks = []
    for d in range(max_degree + 1):
        ech = Echelon()
        count = 0
        for a in range(d + 1):
            hmonos = [PolyCliff.monomial((), alpha, cfg) for alpha in hilbert_monomials(cfg, d - a)]
            if not hmonos:
                continue
            for mono in generator_monomials(gens, a):
                for h in hmonos:
                    prod = poly_mul(mono, h)
                    for wd in words:
                        ech.add(poly_mul(wd, prod).terms)
                        count += 1
        dim = len(basis_keys(cfg, d))
        ranks.append((ech.rank, count, dim))
        rep.check(ech.rank == count == dim, f"degree {d}: rank {ech.rank}, products {count}, dimension {dim}")
    rep.data["ranks"] = ranks
    table = schubert_table(cfg)
    for d in range(n * (n - 1) // 2 + 1):
        hspan = Echelon()
        for alpha in hilbert_monomials(cfg, d):
            for wd in words:
                hspan.add(poly_mul(wd, PolyCliff.monomial((), alpha, cfg)).terms)
        sspan = Echelon()
        for w, s in table.items():
            if length(w) != d:
                continue
            for wd in words:
                vec = poly_mul(wd, s)
                rep.check(hspan.contains(vec.terms), f"c * s_{w} leaves the H span")
                sspan.add(vec.terms)
        rep.check(sspan.rank == hspan.rank, f"degree {d}: Schubert span rank {sspan.rank} vs H rank {hspan.rank}")
    return rep


def verify_lambda_equals_kernel(n: int, cfg: ParityConfig, max_degree: int = 6) -> Report:
    """Degreewise rank of the ``e``-generated subalgebra equals the dimension of the joint kernel."""
    rep = Report(f"Lambda equals joint kernel n={n} [{cfg.label()}]")
    ranks = lambda_rank(n, cfg, max_degree)
    pairs = []
    for d, r in enumerate(ranks):
        kdim = joint_kernel_dim(cfg, d)
        pairs.append((r, kdim))
        rep.check(r == kdim, f"degree {d}: Lambda rank {r}, kernel dimension {kdim}")
    rep.data["ranks"] = pairs
    rep.data["coherent"] = is_coherent(cfg)
    return rep


# graded ranks


def hilbert_rank(n: int, order: int | None = None) -> QSeries:
    """Graded count of the monomials under the staircase."""
    counts: dict[int, int] = {}
    for alpha in product(*(range(n - i + 1) for i in range(1, n + 1))):
        counts[sum(alpha)] = counts.get(sum(alpha), 0) + 1
    top = max(counts)
    return QSeries((counts.get(d, 0) for d in range(top + 1)), order)


def lambda_rank_series(n: int, order: int | None = None) -> QSeries:
    """Graded count of the ordered monomials ``e_1^{a_1} ... e_n^{a_n}``: ``prod 1/(1-q^i)``."""
    out = QSeries.one(order)
    for i in range(1, n + 1):
        out = out / (QSeries.one(order) - QSeries.q(i, order))
    return out


def verify_rank_series(n: int, order: int = 12) -> Report:
    """``rk H = (n)_q!``, ``rk Lambda = 1/((n)_q! (1-q)^n)`` and ``rk Lambda (n)_q!^2 = (n)_q!/(1-q)^n``."""
    rep = Report(f"graded ranks n={n} order={order}")
    fact = qfactorial(n, order)
    lam = lambda_rank_series(n, order)
    geo = geometric_inverse(n, order)
    rep.check(hilbert_rank(n, order) == fact, "rank of H is not (n)_q!")
    rep.check(lam * fact == geo, "rank of Lambda is not 1/((n)_q! (1-q)^n)")
    rep.check(lam * fact * fact == fact * geo, "End rank does not match the NilHecke rank")
    rep.check(lam * hilbert_rank(n, order) == geo, "Lambda (x) H does not have the rank of Pol")
    return rep
