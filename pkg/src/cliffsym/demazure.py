"""Clifford Demazure operators and the NilHecke Clifford action on polynomials.

``d_i`` is the ``s_i``-twisted derivation with ``d_i(y_i) = -1 - c_i c_{i+1}``,
``d_i(y_{i+1}) = 1 - c_i c_{i+1}``, killing the other ``y_j`` and all ``c_j``.
It is right linear over the Clifford algebra, ``d_i(y^a c^b) = d_i(y^a) c^b``;
on left normal-ordered terms this is the same as ``d_i(c^b y^a) = s_i(c^b) d_i(y^a)``.

In quotient mode an even generator is zero.  When ``i`` and ``i+1`` have
different parities no twist of the Clifford words exists, and the relations
exchanging ``d_i`` with ``c_i``, ``c_{i+1}`` cannot hold (see
:func:`mixed_positions`).  Configurations where a mixed position sits next to
two odd indices also lose the braid relation; see :func:`is_coherent`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .clifford import CliffordElem, ParityConfig, indices_of, word_sign
from .errors import UsageError
from .polyclifford import (
    PolyCliff,
    basis_keys,
    degree_basis,
    poly_mul,
    rank_of_span,
    sn_act,
)
from .report import Report
from .scalars import Scalar, to_rational
from .symgroup import Permutation

HALF = Fraction(1, 2)


def _check_index(i: int, cfg: ParityConfig):
    if not 1 <= i <= cfg.n - 1:
        raise UsageError(f"d_{i} needs 1 <= i <= {cfg.n - 1}")


@lru_cache(maxsize=None)
def _two_variable_table(a: int, b: int) -> tuple:
    """``d_1(y_1^a y_2^b)`` in two variables as ``((flag, a', b', coeff), ...)``.

    ``flag`` marks the factor ``c_1 c_2``.  The expansion follows the fixed
    factorisation ``y_1 * (y_1^(a-1) y_2^b)`` and ``y_2 * y_2^(b-1)``.
    """
    cfg = ParityConfig.all_odd(2, "full")
    if a == 0 and b == 0:
        return ()
    cc = PolyCliff.monomial((1, 2), (0, 0), cfg)
    one = PolyCliff.one(cfg)
    if a > 0:
        head = -one - cc
        rest = PolyCliff.monomial((), (a - 1, b), cfg)
        swapped = PolyCliff.y(2, cfg)
        inner = _table_poly(a - 1, b, cfg)
    else:
        head = one - cc
        rest = PolyCliff.monomial((), (0, b - 1), cfg)
        swapped = PolyCliff.y(1, cfg)
        inner = _table_poly(0, b - 1, cfg)
    total = poly_mul(head, rest) + poly_mul(swapped, inner)
    return tuple(
        (1 if mask else 0, e[0], e[1], c) for (mask, e), c in sorted(total.terms.items())
    )


def _table_poly(a: int, b: int, cfg: ParityConfig) -> PolyCliff:
    terms = {}
    for flag, x, y, c in _two_variable_table(a, b):
        terms[(3 if flag else 0, (x, y))] = c
    return PolyCliff(terms, cfg)


def clifford_twist(i: int, mask: int, cfg: ParityConfig) -> tuple[int, int]:
    """The word ``c^mask`` after applying ``s_i`` to its generators, as ``(sign, mask)``.

    If ``i`` and ``i+1`` have different parities in quotient mode, the word is
    returned unchanged.
    """
    if cfg.mode == "quotient" and cfg.is_odd(i) != cfg.is_odd(i + 1):
        return 1, mask
    lo = mask >> (i - 1) & 1
    hi = mask >> i & 1
    if lo == hi:
        return (-1 if lo else 1), mask
    return 1, mask ^ (0b11 << (i - 1))


def _y_sign(mask: int, exps: Sequence[int]) -> int:
    """Sign of moving ``c^mask`` past ``y^exps``: ``c^mask y^exps = sign * y^exps c^mask``."""
    total = sum(exps[j - 1] for j in indices_of(mask))
    return -1 if total % 2 else 1


@lru_cache(maxsize=1 << 18)
def _demazure_key(i: int, key: tuple, cfg: ParityConfig) -> tuple:
    # right linearity: d_i(y^a c^b) = d_i(y^a) c^b
    mask, exps = key
    sign = _y_sign(mask, exps)
    pair = 0b11 << (i - 1)
    alive = cfg.alive_mask
    out = []
    for flag, x, y, c in _two_variable_table(exps[i - 1], exps[i]):
        new = list(exps)
        new[i - 1], new[i] = x, y
        new = tuple(new)
        s = sign * _y_sign(mask, new)
        m = mask
        if flag:
            if pair & ~alive:
                continue
            s *= word_sign(pair, mask)
            m = pair ^ mask
        out.append(((m, new), s * c))
    return tuple(out)


def demazure_apply(i: int, f: PolyCliff) -> PolyCliff:
    """``d_i(f)``."""
    cfg = f.cfg
    _check_index(i, cfg)
    terms: dict = {}
    for key, c in f.terms.items():
        for k2, c2 in _demazure_key(i, key, cfg):
            v = terms.get(k2, 0) + c * c2
            if v:
                terms[k2] = v
            else:
                terms.pop(k2, None)
    return PolyCliff(terms, cfg)


def demazure_word(word: Sequence[int], f: PolyCliff) -> PolyCliff:
    """``d_{word[0]} d_{word[1]} ... (f)``: the last letter acts first."""
    for i in reversed(word):
        f = demazure_apply(i, f)
    return f


def demazure_along_factorization(i: int, factors: Sequence[PolyCliff]) -> PolyCliff:
    """``d_i`` of the product of ``factors``, expanded by the twisted Leibniz rule.

    Independent of :func:`demazure_apply`; used to certify well-definedness.
    """
    cfg = factors[0].cfg
    if len(factors) == 1:
        return demazure_apply(i, factors[0])
    head, tail = factors[0], factors[1:]
    tail_prod = PolyCliff.one(cfg)
    for t in tail:
        tail_prod = poly_mul(tail_prod, t)
    twisted = simple_reflection(i, head)
    return poly_mul(demazure_apply(i, head), tail_prod) + poly_mul(
        twisted, demazure_along_factorization(i, tail)
    )


def simple_reflection(i: int, f: PolyCliff) -> PolyCliff:
    """``s_i(f)``, swapping ``y_i, y_{i+1}`` and twisting the Clifford words as ``d_i`` does.

    At a mixed-parity position the words stay put on the right of ``y``.
    """
    cfg = f.cfg
    _check_index(i, cfg)
    mixed = i in mixed_positions(cfg)
    terms: dict = {}
    for (mask, exps), c in f.terms.items():
        sign, m = clifford_twist(i, mask, cfg)
        e = list(exps)
        e[i - 1], e[i] = e[i], e[i - 1]
        e = tuple(e)
        if mixed:
            sign = _y_sign(mask, exps) * _y_sign(mask, e)
        key = (m, e)
        terms[key] = terms.get(key, 0) + sign * c
    return PolyCliff(terms, cfg)


# operator words


@dataclass(frozen=True)
class Atom:
    """One letter of an operator word: ``Y``, ``C``, ``D``, ``S`` with an index, or ``Scalar``."""

    kind: str
    arg: object

    def __post_init__(self):
        if self.kind not in ("Y", "C", "D", "S", "Scalar"):
            raise UsageError(f"unknown operator letter {self.kind!r}")
        if self.kind == "Scalar":
            object.__setattr__(self, "arg", to_rational(self.arg))
        elif not isinstance(self.arg, int) or self.arg < 1:
            raise UsageError(f"{self.kind} needs a positive index")

    def __str__(self):
        return f"{self.kind}({self.arg})"


_ATOM_RE = re.compile(r"^\s*(Y|C|D|S|Scalar)\s*\(\s*([^()]+?)\s*\)\s*$")


def parse_atom(text: str) -> Atom:
    m = _ATOM_RE.match(text)
    if not m:
        raise UsageError(f"cannot parse operator letter {text!r}")
    kind, arg = m.groups()
    return Atom(kind, arg if kind == "Scalar" else int(arg))


class OperatorWord:
    """A product of letters acting on polynomials.

    The word is read as an algebra product, so the rightmost letter acts
    first: ``["D(1)", "Y(1)"]`` sends ``f`` to ``d_1(y_1 f)``.
    """

    def __init__(self, letters: Iterable, cfg: ParityConfig):
        self.cfg = cfg
        atoms = []
        for letter in letters:
            atom = letter if isinstance(letter, Atom) else parse_atom(str(letter))
            limit = cfg.n - 1 if atom.kind in ("D", "S") else cfg.n
            if atom.kind != "Scalar" and atom.arg > limit:
                raise UsageError(f"{atom} out of range for n={cfg.n}")
            atoms.append(atom)
        self.letters: tuple[Atom, ...] = tuple(atoms)

    def __mul__(self, other: "OperatorWord") -> "OperatorWord":
        return OperatorWord(self.letters + other.letters, self.cfg)

    def __call__(self, f: PolyCliff) -> PolyCliff:
        return op_apply(self, f)

    def __str__(self):
        return "".join(str(a) for a in self.letters) or "1"

    def __repr__(self):
        return f"OperatorWord({[str(a) for a in self.letters]})"


def apply_atom(atom: Atom, f: PolyCliff) -> PolyCliff:
    cfg = f.cfg
    if atom.kind == "Y":
        return poly_mul(PolyCliff.y(atom.arg, cfg), f)
    if atom.kind == "C":
        return poly_mul(PolyCliff.c(atom.arg, cfg), f)
    if atom.kind == "D":
        return demazure_apply(atom.arg, f)
    if atom.kind == "S":
        return simple_reflection(atom.arg, f)
    return f * atom.arg


def op_apply(word: OperatorWord, f: PolyCliff) -> PolyCliff:
    if word.cfg != f.cfg:
        raise UsageError("operator and polynomial over different configurations")
    for atom in reversed(word.letters):
        f = apply_atom(atom, f)
    return f


def word(letters: Iterable, cfg: ParityConfig) -> OperatorWord:
    return OperatorWord(letters, cfg)


# relation checks

Operator = Callable[[PolyCliff], PolyCliff]


def _left(elem: CliffordElem) -> Operator:
    p = PolyCliff.from_clifford(elem)
    return lambda f: poly_mul(p, f)


def mixed_positions(cfg: ParityConfig) -> list[int]:
    """Positions ``i`` where ``i`` and ``i+1`` differ in parity (quotient mode only)."""
    if cfg.mode == "full":
        return []
    return [i for i in range(1, cfg.n) if cfg.is_odd(i) != cfg.is_odd(i + 1)]


def is_coherent(cfg: ParityConfig) -> bool:
    """No mixed-parity position is adjacent to a position with two odd indices.

    Uniform configurations are coherent.  On incoherent ones the braid
    relation fails and the common kernel of the ``d_i`` is smaller than the
    algebra generated by the elementary polynomials.
    """
    return all(braid_holds(i, cfg) for i in range(1, cfg.n - 1))


def braid_holds(i: int, cfg: ParityConfig) -> bool:
    """Whether ``d_i d_{i+1} d_i = d_{i+1} d_i d_{i+1}`` is expected at ``i``."""
    mixed = set(mixed_positions(cfg))
    both_odd = lambda j: cfg.alive(j) and cfg.alive(j + 1)  # noqa: E731
    if i in mixed and both_odd(i + 1) or i + 1 in mixed and both_odd(i):
        return False
    return True


def nhc_relations(cfg: ParityConfig) -> list[tuple[str, Operator, Operator]]:
    """Every defining relation as a pair of operators ``(name, lhs, rhs)``.

    In quotient mode, relations touching a dead generator ``c_j`` are replaced
    by ``c_j = 0``.  At a mixed-parity position ``i`` (see
    :func:`mixed_positions`) the relations ``d_i c_j = c_{s_i(j)} d_i`` are
    dropped, since ``c_i = 0`` would force ``d_i = 0``.  The braid relation is
    dropped where a mixed position meets a position with two odd indices.
    """
    n = cfg.n
    Y = lambda i: (lambda f: poly_mul(PolyCliff.y(i, cfg), f))  # noqa: E731
    C = lambda i: (lambda f: poly_mul(PolyCliff.c(i, cfg), f))  # noqa: E731
    D = lambda i: (lambda f: demazure_apply(i, f))  # noqa: E731
    zero = lambda f: PolyCliff.zero(cfg)  # noqa: E731
    ident = lambda f: f  # noqa: E731
    comp = lambda *ops: _compose(ops)  # noqa: E731
    scale = lambda k, op: (lambda f: op(f) * k)  # noqa: E731
    alive = cfg.alive
    rels: list[tuple[str, Operator, Operator]] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append((f"y{i}y{j}=y{j}y{i}", comp(Y(i), Y(j)), comp(Y(j), Y(i))))
    for i in range(1, n + 1):
        if not alive(i):
            rels.append((f"c{i}=0", C(i), zero))
            continue
        rels.append((f"c{i}^2=1", comp(C(i), C(i)), ident))
        for j in range(i + 1, n + 1):
            if alive(j):
                rels.append((f"c{i}c{j}=-c{j}c{i}", comp(C(i), C(j)), scale(-1, comp(C(j), C(i)))))
        for j in range(1, n + 1):
            sign = -1 if i == j else 1
            rels.append((f"y{j}c{i}=±c{i}y{j}", comp(Y(j), C(i)), scale(sign, comp(C(i), Y(j)))))
    skip = set(mixed_positions(cfg))
    cc = lambda i: CliffordElem.word((i, i + 1), cfg)  # noqa: E731
    one = CliffordElem.one(cfg)
    for i in range(1, n):
        rels.append((f"d{i}^2=0", comp(D(i), D(i)), zero))
        for j in range(i + 2, n):
            rels.append((f"d{i}d{j}=d{j}d{i}", comp(D(i), D(j)), comp(D(j), D(i))))
        if i + 1 < n and braid_holds(i, cfg):
            rels.append(
                (f"d{i}d{i+1}d{i}=d{i+1}d{i}d{i+1}", comp(D(i), D(i + 1), D(i)), comp(D(i + 1), D(i), D(i + 1)))
            )
        s = Permutation.simple(i, n)
        for j in range(1, n + 1):
            if j == i:
                rhs = _left(-one - cc(i))
            elif j == i + 1:
                rhs = _left(one - cc(i))
            else:
                rhs = zero
            lhs = _sub(comp(D(i), Y(j)), comp(Y(s(j)), D(i)))
            rels.append((f"d{i}y{j}-y{s(j)}d{i}", lhs, rhs))
            if i not in skip:
                rels.append((f"d{i}c{j}=c{s(j)}d{i}", comp(D(i), C(j)), comp(C(s(j)), D(i))))
    return rels


def _compose(ops: Sequence[Operator]) -> Operator:
    def run(f):
        for op in reversed(ops):
            f = op(f)
        return f

    return run


def _sub(a: Operator, b: Operator) -> Operator:
    return lambda f: a(f) - b(f)


def basis_up_to(cfg: ParityConfig, max_degree: int) -> list[PolyCliff]:
    out = []
    for d in range(max_degree + 1):
        out.extend(degree_basis(cfg, d))
    return out


def verify_nhc_relations(cfg: ParityConfig, max_degree: int = 6) -> Report:
    """Check every relation of the NilHecke Clifford algebra on all basis elements."""
    report = Report(f"nhc n={cfg.n} parity={cfg.label()} mode={cfg.mode} deg<={max_degree}")
    basis = basis_up_to(cfg, max_degree)
    for name, lhs, rhs in nhc_relations(cfg):
        for b in basis:
            left, right = lhs(b), rhs(b)
            report.check(left == right, f"{name} on {b}: {left} != {right}")
    for i in mixed_positions(cfg):
        report.skipped.append(f"d{i}c_j=c_(s(j))d{i}: indices {i},{i+1} differ in parity")
    for i in range(1, cfg.n - 1):
        if not braid_holds(i, cfg):
            report.skipped.append(f"braid d{i}d{i+1}d{i}: mixed position next to two odd indices")
    return report


# homotopy and ker = im


def homotopy_apply(i: int, f: PolyCliff) -> PolyCliff:
    """``h(f)`` for homogeneous ``f``, using the degree parity of ``f``."""
    cfg = f.cfg
    _check_index(i, cfg)
    k = f.degree()
    if k is None:
        return PolyCliff.zero(cfg)
    one = PolyCliff.one(cfg)
    cc = PolyCliff.monomial((i, i + 1), (0,) * cfg.n, cfg)
    if k % 2 == 0:
        factor = poly_mul((-one - cc) * HALF, PolyCliff.y(i, cfg))
    else:
        factor = poly_mul((one - cc) * HALF, PolyCliff.y(i + 1, cfg))
    return poly_mul(factor, f)


def homotopy_scalar(i: int, cfg: ParityConfig) -> Scalar:
    """The scalar ``lam`` with ``h d_i + d_i h = lam * id``.

    It is ``1/2 * (1 - (c_i c_{i+1})^2)``: ``1`` when both generators are
    alive and ``1/2`` when the product ``c_i c_{i+1}`` vanishes.
    """
    return 1 if cfg.alive(i) and cfg.alive(i + 1) else HALF


def verify_ker_eq_im(i: int, cfg: ParityConfig, max_degree: int = 6) -> Report:
    """Rank of ``ker d_i`` equals rank of ``im d_i`` in each degree, plus the homotopy identity."""
    _check_index(i, cfg)
    report = Report(f"ker=im d{i} n={cfg.n} parity={cfg.label()} deg<={max_degree}")
    expected = homotopy_scalar(i, cfg)
    scalars = set()
    image_rank = [
        rank_of_span([demazure_apply(i, b) for b in degree_basis(cfg, d)])
        for d in range(max_degree + 2)
    ]
    ranks = {}
    for d in range(max_degree + 1):
        basis = degree_basis(cfg, d)
        kernel_rank = len(basis) - image_rank[d]
        ranks[d] = {"dim": len(basis), "ker": kernel_rank, "im": image_rank[d + 1]}
        report.check(kernel_rank == image_rank[d + 1], f"degree {d}: ker {kernel_rank} != im {image_rank[d + 1]}")
        for b in basis:
            lhs = homotopy_apply(i, demazure_apply(i, b)) + demazure_apply(i, homotopy_apply(i, b))
            scalars.add(_ratio(lhs, b))
            report.check(lhs == b * expected, f"homotopy on {b}: got {lhs}")
    report.data["ranks"] = ranks
    report.data["homotopy_scalar"] = str(expected)
    report.data["observed_scalars"] = sorted(str(s) for s in scalars)
    return report


def _ratio(lhs: PolyCliff, b: PolyCliff):
    if lhs.is_zero():
        return 0
    (key, c), = b.terms.items()
    value = lhs.terms.get(key)
    if value is None or lhs != b * (Fraction(value) / c):
        return "non-scalar"
    v = Fraction(value) / c
    return v.numerator if v.denominator == 1 else v


# properties used by the test-suite


def kernel_basis_rank(i: int, cfg: ParityConfig, d: int) -> int:
    basis = degree_basis(cfg, d)
    return len(basis) - rank_of_span([demazure_apply(i, b) for b in basis])


def joint_kernel(cfg: ParityConfig, d: int, indices: Iterable[int] | None = None) -> list[dict]:
    """A basis (as coordinate dicts) of the common kernel of ``d_j`` for ``j`` in ``indices`` in degree ``d``."""

    keys = basis_keys(cfg, d)
    if indices is None:
        indices = range(1, cfg.n)
    indices = list(indices)
    if not indices:
        return [{k: 1} for k in keys]
    columns = []
    for k in keys:
        f = PolyCliff({k: 1}, cfg, clean=False)
        col = {}
        for j in indices:
            for k2, c in demazure_apply(j, f).terms.items():
                col[(j, k2)] = c
        columns.append(col)
    return _nullspace(columns, keys)


def _nullspace(columns: list[dict], keys: list) -> list[dict]:
    """Null space of the matrix with the given sparse columns, as dicts over ``keys``."""
    from .linalg import Echelon

    ech = Echelon(track=True)
    null = []
    for idx, col in enumerate(columns):
        if not ech.add(col):
            # dependent: solve for the combination of earlier independent columns
            combo = ech.solve(col)
            vec = {keys[idx]: 1}
            for j, c in combo.items():
                if j != idx and c:
                    vec[keys[j]] = vec.get(keys[j], 0) - c
            null.append({k: v for k, v in vec.items() if v})
    return null


def joint_kernel_dim(cfg: ParityConfig, d: int, indices: Iterable[int] | None = None) -> int:
    keys = basis_keys(cfg, d)
    if indices is None:
        indices = range(1, cfg.n)
    indices = list(indices)
    columns = []
    for k in keys:
        f = PolyCliff({k: 1}, cfg, clean=False)
        col = {}
        for j in indices:
            for k2, c in demazure_apply(j, f).terms.items():
                col[(j, k2)] = c
        columns.append(col)
    from .linalg import rank

    return len(keys) - rank(columns)


def in_joint_kernel(f: PolyCliff, indices: Iterable[int] | None = None) -> bool:
    if indices is None:
        indices = range(1, f.cfg.n)
    return all(demazure_apply(j, f).is_zero() for j in indices)


def sn_act_simple(i: int, f: PolyCliff) -> PolyCliff:
    """``s_i`` acting by relabelling in the full algebra (plain :func:`sn_act`)."""
    return sn_act(Permutation.simple(i, f.cfg.n), f)
