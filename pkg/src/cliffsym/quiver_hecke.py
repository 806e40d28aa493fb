"""Super Cartan data and the polynomial action of the quiver Hecke Clifford generators.

A vector of ``PolC(nu)`` is a pair ``(mu, f)`` with ``mu`` a permutation of
``nu`` and ``f`` a :class:`PolyCliff` over the parities of ``mu``; an even
label kills its Clifford generator.  Operators are words in the generators
``y_k``, ``c_k``, ``sigma_k`` and the images ``x_k = iota(x_k)``,
``t_k = iota(tau_k)``; the last letter acts first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from pathlib import Path
from typing import Iterable, Sequence

from .clifford import ParityConfig
from .demazure import demazure_apply
from .errors import UsageError
from .linalg import Echelon
from .polyclifford import PolyCliff, degree_basis, poly_mul, sn_act
from .report import Report
from .symgroup import Permutation, all_permutations, reduced_word

Seq = tuple[int, ...]
Vector = tuple[Seq, PolyCliff]


@dataclass(frozen=True)
class CartanData:
    """A generalised Cartan matrix on the vertices ``1..size`` with parities and an edge orientation.

    ``orientation`` holds one ordered pair ``(i, j)`` per edge, meaning ``i -> j``.
    ``t`` is the scalar matrix of the double-crossing relation (default all 1).
    """

    d: tuple[tuple[int, ...], ...]
    parity: tuple[int, ...]
    orientation: frozenset = frozenset()
    t: tuple[tuple[Fraction, ...], ...] | None = None
    name: str = ""

    def __post_init__(self):
        d = tuple(tuple(int(v) for v in row) for row in self.d)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "parity", tuple(int(p) for p in self.parity))
        object.__setattr__(self, "orientation", frozenset(tuple(e) for e in self.orientation))
        size = len(d)
        if any(len(row) != size for row in d) or len(self.parity) != size:
            raise UsageError("Cartan matrix must be square and match the parity list")
        if any(p not in (0, 1) for p in self.parity):
            raise UsageError("parities must be 0 or 1")
        for i in range(size):
            if d[i][i] != 2:
                raise UsageError(f"d_{i + 1}{i + 1} must be 2")
            for j in range(size):
                if i == j:
                    continue
                if d[i][j] > 0:
                    raise UsageError(f"d_{i + 1}{j + 1} must be <= 0")
                if (d[i][j] == 0) != (d[j][i] == 0):
                    raise UsageError(f"d_{i + 1}{j + 1} and d_{j + 1}{i + 1} must vanish together")
                if self.parity[i] and d[i][j] % 2:
                    raise UsageError(f"d_{i + 1}{j + 1} must be even since {i + 1} is odd")
        for a, b in self.orientation:
            if not (1 <= a <= size and 1 <= b <= size) or a == b or d[a - 1][b - 1] == 0:
                raise UsageError(f"orientation ({a}, {b}) is not an edge")
        for i in range(1, size + 1):
            for j in range(i + 1, size + 1):
                if d[i - 1][j - 1]:
                    count = ((i, j) in self.orientation) + ((j, i) in self.orientation)
                    if count != 1:
                        raise UsageError(f"edge {i}-{j} needs exactly one orientation")
        if self.t is None:
            object.__setattr__(self, "t", tuple((Fraction(1),) * size for _ in range(size)))
        else:
            t = tuple(tuple(Fraction(v) for v in row) for row in self.t)
            if len(t) != size or any(len(row) != size for row in t):
                raise UsageError("t must be a square matrix of the same size")
            object.__setattr__(self, "t", t)

    @property
    def size(self) -> int:
        return len(self.d)

    @property
    def vertices(self) -> range:
        return range(1, self.size + 1)

    def odd(self, i: int) -> bool:
        return self.parity[i - 1] == 1

    def dots(self, i: int, j: int) -> int:
        """``|d_ij|``, the number of dots."""
        return abs(self.d[i - 1][j - 1])

    def connected(self, i: int, j: int) -> bool:
        return i != j and self.d[i - 1][j - 1] != 0

    def arrow(self, i: int, j: int) -> bool:
        return (i, j) in self.orientation

    def scalar_t(self, i: int, j: int) -> Fraction:
        return self.t[i - 1][j - 1]

    def config(self, nu: Sequence[int]) -> ParityConfig:
        return ParityConfig(tuple(self.parity[v - 1] for v in nu))

    def to_json(self) -> dict:
        out = {
            "size": self.size,
            "parity": list(self.parity),
            "d": [list(r) for r in self.d],
            "orientation": sorted([list(e) for e in self.orientation]),
        }
        if any(v != 1 for row in self.t for v in row):
            out["t"] = [[str(v) for v in row] for row in self.t]
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data: dict) -> "CartanData":
        try:
            d = data["d"]
            parity = data["parity"]
        except KeyError as exc:
            raise UsageError(f"Cartan data lacks {exc.args[0]!r}") from None
        if "size" in data and data["size"] != len(d):
            raise UsageError("size does not match the matrix")
        return cls(d, parity, frozenset(tuple(e) for e in data.get("orientation", [])), data.get("t"), data.get("name", ""))

    @classmethod
    def load(cls, path: str | Path) -> "CartanData":
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read Cartan data: {exc}") from None
        return cls.from_json(data)


def battery() -> list[CartanData]:
    """The four standard test data."""
    return [
        CartanData(((2, 0), (0, 2)), (0, 0), name="A1xA1"),
        CartanData(((2, -1), (-1, 2)), (0, 0), frozenset({(1, 2)}), name="A2 even"),
        CartanData(((2, -2), (-2, 2)), (1, 0), frozenset({(1, 2)}), name="A2 one odd"),
        CartanData(((2,),), (1,), name="odd vertex"),
    ]


def sequences(C: CartanData, n: int) -> list[Seq]:
    return list(product(C.vertices, repeat=n))


def orbit(nu: Sequence[int]) -> list[Seq]:
    """Distinct rearrangements of ``nu`` in lexicographic order."""
    return sorted({tuple(nu[w(k) - 1] for k in range(1, len(nu) + 1)) for w in all_permutations(len(nu))})


def swap(nu: Seq, k: int) -> Seq:
    out = list(nu)
    out[k - 1], out[k] = out[k], out[k - 1]
    return tuple(out)


# generators


def dot(k: int, e: int, nu: Seq, C: CartanData) -> PolyCliff:
    """``x_k^e`` with ``x_k = c_k^{|nu_k|} y_k``."""
    cfg = C.config(nu)
    x = PolyCliff.y(k, cfg)
    if C.odd(nu[k - 1]):
        x = poly_mul(PolyCliff.c(k, cfg), x)
    return x ** e


def gamma_iota(i: int, j: int, C: CartanData) -> Fraction:
    """The scalar of ``iota(tau)``: 1 unless both labels are odd, 1/2 if equal, else 1 or -1/2 by order."""
    if not (C.odd(i) and C.odd(j)):
        return Fraction(1)
    if i == j:
        return Fraction(1, 2)
    return Fraction(1) if i < j else Fraction(-1, 2)


def sigma_apply(k: int, nu: Seq, f: PolyCliff, C: CartanData) -> Vector:
    """``sigma_k`` on ``PolC_nu``, landing in ``PolC_{s_k nu}``.

    ``d_k`` for equal labels, the place permutation ``s_k`` when the labels
    are unconnected or ``nu_k <- nu_{k+1}``, and for ``nu_k -> nu_{k+1}``
    the permutation followed by multiplication with
    ``x_k^{|d_ji|} + x_{k+1}^{|d_ij|}`` where ``(j, i)`` are the swapped labels,
    so every strand carries its own row of ``d``.
    """
    n = len(nu)
    if not 1 <= k <= n - 1:
        raise UsageError(f"sigma_{k} needs 1 <= k <= {n - 1}")
    if f.cfg != C.config(nu):
        raise UsageError("polynomial does not live over the sequence's parities")
    i, j = nu[k - 1], nu[k]
    if i == j:
        return nu, demazure_apply(k, f)
    target = swap(nu, k)
    moved = sn_act(Permutation.simple(k, n), f, C.config(target))
    if C.arrow(i, j):
        factor = dot(k, C.dots(j, i), target, C) + dot(k + 1, C.dots(i, j), target, C)
        moved = poly_mul(factor, moved)
    return target, moved


@dataclass(frozen=True)
class Gen:
    """One generator: ``kind`` in ``y``, ``c``, ``sigma``, ``x``, ``tau``, ``mul``.

    ``mul`` multiplies on the left by ``value(nu)``, a :class:`PolyCliff` over the parities of ``nu``.
    """

    kind: str
    k: int = 0
    value: object = None


def apply_gen(g: Gen, vec: Vector, C: CartanData) -> Vector:
    nu, f = vec
    cfg = f.cfg
    if g.kind == "y":
        return nu, poly_mul(PolyCliff.y(g.k, cfg), f)
    if g.kind == "c":
        if not cfg.alive(g.k):
            return nu, PolyCliff.zero(cfg)
        return nu, poly_mul(PolyCliff.c(g.k, cfg), f)
    if g.kind == "sigma":
        return sigma_apply(g.k, nu, f, C)
    if g.kind == "x":
        return nu, poly_mul(dot(g.k, 1, nu, C), f)
    if g.kind == "tau":
        i, j = nu[g.k - 1], nu[g.k]
        target, out = sigma_apply(g.k, nu, f, C)
        tcfg = out.cfg
        if C.odd(i) and C.odd(j):
            out = poly_mul(PolyCliff.c(g.k, tcfg) - PolyCliff.c(g.k + 1, tcfg), out)
        return target, out * gamma_iota(i, j, C)
    if g.kind == "mul":
        return nu, poly_mul(g.value(nu), f)
    raise UsageError(f"unknown generator {g.kind!r}")


def apply_word(word: Sequence[Gen], vec: Vector, C: CartanData) -> Vector:
    for g in reversed(word):
        vec = apply_gen(g, vec, C)
    return vec


Combo = list[tuple[object, list[Gen]]]


def apply_combo(combo: Combo, vec: Vector, C: CartanData) -> dict[Seq, PolyCliff]:
    out: dict[Seq, PolyCliff] = {}
    for coeff, word in combo:
        nu, f = apply_word(word, vec, C)
        f = f * coeff
        out[nu] = out[nu] + f if nu in out else f
    return {nu: f for nu, f in out.items() if not f.is_zero()}


def _Y(k):
    return Gen("y", k)


def _C(k):
    return Gen("c", k)


def _S(k):
    return Gen("sigma", k)


def _X(k):
    return Gen("x", k)


def _T(k):
    return Gen("tau", k)


def _power(kind: str, k: int, e: int) -> list[Gen]:
    return [Gen(kind, k)] * e


def iota_image(kind: str, k: int, nu: Seq, C: CartanData) -> Combo:
    """``iota(x_k)`` or ``iota(tau_k)`` at ``nu`` as a combination of ``y``, ``c`` and ``sigma`` words."""
    if kind == "x":
        return [(1, ([_C(k)] if C.odd(nu[k - 1]) else []) + [_Y(k)])]
    if kind == "tau":
        i, j = nu[k - 1], nu[k]
        g = gamma_iota(i, j, C)
        if C.odd(i) and C.odd(j):
            return [(g, [_C(k), _S(k)]), (-g, [_C(k + 1), _S(k)])]
        return [(g, [_S(k)])]
    raise UsageError(f"iota is defined on x and tau, not {kind!r}")


# relation batteries


def _odd_sign(i: int, C: CartanData, e: int) -> int:
    """``(-1)^{e/2}`` on an odd strand, 1 on an even one."""
    return (-1) ** (e // 2) if C.odd(i) else 1


def hc_relations(nu: Seq, C: CartanData, literal: bool = False) -> list[tuple[str, Combo, Combo]]:
    """Local relations of ``HC_n(C)`` at the sequence ``nu`` as ``(name, lhs, rhs)``.

    ``literal`` replaces the braid defect by the identity.
    """
    n = len(nu)
    rels: list[tuple[str, Combo, Combo]] = []
    for k in range(1, n + 1):
        if C.odd(nu[k - 1]):
            rels.append((f"c_{k}^2 = 1", [(1, [_C(k), _C(k)])], [(1, [])]))
            rels.append((f"c_{k} y_{k} = -y_{k} c_{k}", [(1, [_C(k), _Y(k)])], [(-1, [_Y(k), _C(k)])]))
        for l in range(1, n + 1):
            if l != k:
                rels.append((f"c_{k} y_{l} = y_{l} c_{k}", [(1, [_C(k), _Y(l)])], [(1, [_Y(l), _C(k)])]))
                if l > k:
                    rels.append((f"c_{k} c_{l} = -c_{l} c_{k}", [(1, [_C(k), _C(l)])], [(-1, [_C(l), _C(k)])]))
    for k in range(1, n):
        i, j = nu[k - 1], nu[k]
        same = i == j
        cc = [_C(k), _C(k + 1)]
        rels.append(
            (f"sigma_{k} y_{k + 1} - y_{k} sigma_{k}", [(1, [_S(k), _Y(k + 1)]), (-1, [_Y(k), _S(k)])],
             [(1, []), (-1, cc)] if same else [])
        )
        rels.append(
            (f"sigma_{k} y_{k} - y_{k + 1} sigma_{k}", [(1, [_S(k), _Y(k)]), (-1, [_Y(k + 1), _S(k)])],
             [(-1, []), (-1, cc)] if same else [])
        )
        rels.append((f"sigma_{k} c_{k + 1} = c_{k} sigma_{k}", [(1, [_S(k), _C(k + 1)])], [(1, [_C(k), _S(k)])]))
        rels.append((f"sigma_{k} c_{k} = c_{k + 1} sigma_{k}", [(1, [_S(k), _C(k)])], [(1, [_C(k + 1), _S(k)])]))
        for l in range(1, n + 1):
            if l not in (k, k + 1):
                rels.append((f"sigma_{k} y_{l} = y_{l} sigma_{k}", [(1, [_S(k), _Y(l)])], [(1, [_Y(l), _S(k)])]))
                rels.append((f"sigma_{k} c_{l} = c_{l} sigma_{k}", [(1, [_S(k), _C(l)])], [(1, [_C(l), _S(k)])]))
        if same:
            rhs: Combo = []
        elif not C.connected(i, j):
            rhs = [(1, [])]
        else:
            a, b = C.dots(i, j), C.dots(j, i)
            rhs = [(_odd_sign(i, C, a), _power("y", k, a)), (_odd_sign(j, C, b) * C.scalar_t(j, i), _power("y", k + 1, b))]
        rels.append((f"sigma_{k}^2", [(1, [_S(k), _S(k)])], rhs))
    for k in range(1, n - 1):
        lhs = [(1, [_S(k), _S(k + 1), _S(k)]), (-1, [_S(k + 1), _S(k), _S(k + 1)])]
        rels.append((f"braid at {k}", lhs, braid_defect(nu, k, C, "sigma", literal)))
    return rels


def braid_polynomial(nu: Seq, k: int, C: CartanData) -> PolyCliff:
    """``d_{k,k+2}(eps_i y_k^{|d_ij|})`` at ``nu = (.., i, j, i, ..)`` with ``i - j``.

    ``d_{k,k+2} = s_{k+1} d_k s_{k+1}``, the Demazure operator across the two
    ``i`` strands; it is ``-1`` when ``|d_ij| = 1``.
    """
    i, j = nu[k - 1], nu[k]
    a = C.dots(i, j)
    middle = swap(nu, k + 1)
    f = PolyCliff.y(k, C.config(middle)) ** a * _odd_sign(i, C, a)
    return sn_act(Permutation.simple(k + 1, len(nu)), demazure_apply(k, f), C.config(nu))


def iota_braid_polynomial(nu: Seq, k: int, C: CartanData) -> PolyCliff:
    """The braid defect for the ``iota`` images: ``(c_k - c_{k+2}) / 2`` times the above on an odd ``i``."""
    out = braid_polynomial(nu, k, C)
    if C.odd(nu[k - 1]):
        cfg = out.cfg
        out = poly_mul(PolyCliff.c(k, cfg) - PolyCliff.c(k + 2, cfg), out) * Fraction(1, 2)
    return out


def braid_defect(nu: Seq, k: int, C: CartanData, kind: str, literal: bool = False) -> Combo:
    """Right side of the braid relation at position ``k``; ``kind`` is ``sigma`` or ``tau``.

    Zero unless ``nu_k = nu_{k+2}`` is connected to ``nu_{k+1}``.  ``literal``
    uses the identity there instead of the computed defect.
    """
    i, j, l = nu[k - 1], nu[k], nu[k + 1]
    if i != l or not C.connected(i, j):
        return []
    if literal:
        return [(1, [])]
    poly = braid_polynomial if kind == "sigma" else iota_braid_polynomial
    return [(1, [Gen("mul", k, lambda mu, k=k: poly(mu, k, C))])]


def iota_relations(nu: Seq, C: CartanData, literal: bool = False) -> list[tuple[str, Combo, Combo]]:
    """Relations of the quiver Hecke superalgebra, for the images ``x_k``, ``t_k`` under ``iota``.

    The default form has ``tau_k x_k - s x_{k+1} tau_k = -(-1)^{|i|}`` for equal
    labels ``i`` and an unsigned braid with the computed defect.  ``literal``
    uses ``-1``, the sign ``(-1)^{|i||j|}`` in the braid and the identity as its defect.
    """
    n = len(nu)
    rels: list[tuple[str, Combo, Combo]] = []
    par = [1 if C.odd(v) else 0 for v in nu]
    for k in range(1, n + 1):
        for l in range(k + 1, n + 1):
            s = (-1) ** (par[k - 1] * par[l - 1])
            rels.append((f"x_{k} x_{l}", [(1, [_X(k), _X(l)])], [(s, [_X(l), _X(k)])]))
    for k in range(1, n):
        i, j = nu[k - 1], nu[k]
        s = (-1) ** (par[k - 1] * par[k])
        same = i == j
        rels.append((f"tau_{k} x_{k + 1}", [(1, [_T(k), _X(k + 1)]), (-s, [_X(k), _T(k)])], [(1, [])] if same else []))
        rels.append((f"tau_{k} x_{k}", [(1, [_T(k), _X(k)]), (-s, [_X(k + 1), _T(k)])], [(-1 if literal or not par[k - 1] else 1, [])] if same else []))
        for l in range(1, n + 1):
            if l not in (k, k + 1):
                sl = (-1) ** (par[l - 1] * par[k - 1] * par[k])
                rels.append((f"tau_{k} x_{l}", [(1, [_T(k), _X(l)])], [(sl, [_X(l), _T(k)])]))
        if same:
            rhs: Combo = []
        elif not C.connected(i, j):
            rhs = [(1, [])]
        else:
            rhs = [(1, _power("x", k, C.dots(i, j))), (1, _power("x", k + 1, C.dots(j, i)))]
        rels.append((f"tau_{k}^2", [(1, [_T(k), _T(k)])], rhs))
    for k in range(1, n - 1):
        s = (-1) ** (par[k - 1] * par[k]) if literal else 1
        lhs = [(1, [_T(k), _T(k + 1), _T(k)]), (-s, [_T(k + 1), _T(k), _T(k + 1)])]
        rels.append((f"tau braid at {k}", lhs, braid_defect(nu, k, C, "tau", literal)))
    return rels


def _test_vectors(nu: Seq, C: CartanData, max_degree: int) -> Iterable[Vector]:
    cfg = C.config(nu)
    for d in range(max_degree + 1):
        for f in degree_basis(cfg, d):
            yield nu, f


def _check_relations(rep: Report, rels, nu: Seq, C: CartanData, max_degree: int):
    failed: set[str] = set()
    for name, lhs, rhs in rels:
        for vec in _test_vectors(nu, C, max_degree):
            if not rep.check(apply_combo(lhs, vec, C) == apply_combo(rhs, vec, C), f"{name} fails on nu={nu}, f={vec[1]}"):
                failed.add(name)
    return failed


def verify_hc_relations(C: CartanData, n: int, max_degree: int = 4, literal: bool = False) -> Report:
    """Every local relation at every position and sequence, on all basis elements up to ``max_degree``."""
    rep = Report(f"quiver Hecke Clifford relations {C.name or C.to_json()} n={n}")
    failing: dict = {}
    for nu in sequences(C, n):
        bad = _check_relations(rep, hc_relations(nu, C, literal), nu, C, max_degree)
        if bad:
            failing[str(nu)] = sorted(bad)
    rep.data["failing"] = failing
    return rep


def verify_iota(C: CartanData, n: int, max_degree: int = 4, literal: bool = False) -> Report:
    """The images of ``x_k`` and ``tau_k`` satisfy the quiver Hecke superalgebra relations."""
    rep = Report(f"iota relations {C.name or C.to_json()} n={n}")
    failing: dict = {}
    for nu in sequences(C, n):
        bad = _check_relations(rep, iota_relations(nu, C, literal), nu, C, max_degree)
        if bad:
            failing[str(nu)] = sorted(bad)
    rep.data["failing"] = failing
    return rep


def verify_grading(C: CartanData, n: int, max_degree: int = 3) -> Report:
    """``sigma_k`` has degree -1 on equal labels, ``|d|`` along an arrow and 0 otherwise."""
    rep = Report(f"sigma grading {C.name or C.to_json()} n={n}")
    for nu in sequences(C, n):
        for k in range(1, n):
            i, j = nu[k - 1], nu[k]
            if i == j:
                shift = -1
            elif C.arrow(i, j):
                shift = C.dots(i, j)
                if C.dots(i, j) != C.dots(j, i):
                    continue
            else:
                shift = 0
            for vec in _test_vectors(nu, C, max_degree):
                _, g = sigma_apply(k, vec[0], vec[1], C)
                d = vec[1].degree()
                rep.check(g.is_zero() or g.degrees() == {d + shift}, f"sigma_{k} on nu={nu} is not homogeneous of shift {shift}")
    return rep


# spanning set independence


def _shuffles(mu_target: Seq, mu: Seq) -> list[Permutation]:
    """``w`` with ``mu_{w(k)} = mu'_k``, moving the strand at ``w(k)`` to ``k``."""
    n = len(mu)
    return [w for w in all_permutations(n) if all(mu[w(k) - 1] == mu_target[k - 1] for k in range(1, n + 1))]


def spanning_elements(mu_target: Seq, mu: Seq, C: CartanData, max_alpha_degree: int) -> list[tuple[list[Gen], str]]:
    """Words ``sigma_pi y^alpha c^beta`` from ``PolC_mu`` to ``PolC_mu'``."""
    n = len(mu)
    cfg = C.config(mu)
    out = []
    odd = [k for k in range(1, n + 1) if cfg.alive(k)]
    for w in _shuffles(mu_target, mu):
        word = reduced_word(w.inverse())
        crossing = [_S(k) for k in word]
        for total in range(max_alpha_degree + 1):
            for alpha in product(range(total + 1), repeat=n):
                if sum(alpha) != total:
                    continue
                ys = [g for k in range(1, n + 1) for g in _power("y", k, alpha[k - 1])]
                for beta in product((0, 1), repeat=len(odd)):
                    cs = [_C(k) for k, b in zip(odd, beta) if b]
                    out.append((crossing + ys + cs, f"{w} y^{alpha} c^{beta}"))
    return out


def verify_spanning_independence(C: CartanData, nu: Seq, max_alpha_degree: int = 3, test_degree: int | None = None) -> Report:
    """Evaluation rank of the spanning set equals its size, for each pair in the orbit of ``nu``."""
    nu = tuple(nu)
    n = len(nu)
    if test_degree is None:
        test_degree = max_alpha_degree + n * (n - 1) // 2
    rep = Report(f"spanning set independence {C.name or C.to_json()} nu={nu}")
    counts = {}
    for mu in orbit(nu):
        tests = list(_test_vectors(mu, C, test_degree))
        for mu_target in orbit(nu):
            elems = spanning_elements(mu_target, mu, C, max_alpha_degree)
            ech = Echelon()
            for word, _ in elems:
                row = {}
                for t, vec in enumerate(tests):
                    target, g = apply_word(word, vec, C)
                    if target != mu_target:
                        raise UsageError("spanning element lands in the wrong sequence")
                    for key, c in g.terms.items():
                        row[(t, key)] = c
                ech.add(row)
            counts[f"{mu}->{mu_target}"] = (ech.rank, len(elems))
            rep.check(ech.rank == len(elems), f"{mu} -> {mu_target}: rank {ech.rank} of {len(elems)} elements")
    rep.data["ranks"] = counts
    return rep


def nhc_embedding_check(C: CartanData, i: int, n: int, max_degree: int = 3) -> Report:
    """On the constant sequence ``(i, ..., i)`` with ``i`` odd, ``sigma_k`` is ``d_k``."""
    rep = Report(f"NHC copy at vertex {i} n={n}")
    nu = (i,) * n
    for k in range(1, n):
        for vec in _test_vectors(nu, C, max_degree):
            rep.check(sigma_apply(k, nu, vec[1], C)[1] == demazure_apply(k, vec[1]), f"sigma_{k} != d_{k}")
    return rep
