"""Elementary d-symmetric polynomials and the flag subalgebras they generate.

Polynomials are first built symbolically as sums of factor sequences such as
``[("g", 1, 2), ("y", 1), ("g", 2, 3), ("y", 2)]`` standing for
``gamma_{1,2} y_1 gamma_{2,3} y_2``.  Specialising a sequence to a parity
configuration multiplies the factors in the order written, which matters
because neighbouring gammas may anticommute.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .clifford import CliffordElem, ParityConfig, gamma_pair, units_product
from .demazure import demazure_apply, joint_kernel_dim
from .errors import NoSolution, UsageError
from .linalg import Echelon
from .polyclifford import PolyCliff, poly_mul, solve_in_span
from .report import Report

Factor = tuple  # ("g", a, b) or ("y", k)
Term = tuple  # tuple of factors


@dataclass(frozen=True)
class ElemIndex:
    """``e^{(k,n)}_m``: degree ``m`` in the variables ``y_{k+1}..y_n``."""

    k: int
    n: int
    m: int

    def __post_init__(self):
        if not 0 <= self.k < self.n:
            raise UsageError(f"need 0 <= k < n, got k={self.k}, n={self.n}")
        if not 0 <= self.m <= self.n - self.k:
            raise UsageError(f"degree m={self.m} outside 0..{self.n - self.k}")


@dataclass(frozen=True)
class FlagShape:
    """Cut points ``0 = k_0 <= k_1 <= ... <= k_l = n``."""

    cuts: tuple[int, ...]

    def __post_init__(self):
        cuts = tuple(self.cuts)
        object.__setattr__(self, "cuts", cuts)
        if len(cuts) < 2 or cuts[0] != 0:
            raise UsageError(f"flag shape must start at 0: {cuts}")
        if any(a > b for a, b in zip(cuts, cuts[1:])):
            raise UsageError(f"flag shape must be monotone: {cuts}")

    @property
    def n(self) -> int:
        return self.cuts[-1]

    @property
    def blocks(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in zip(self.cuts, self.cuts[1:]) if a < b]

    @property
    def parts(self) -> list[int]:
        return [b - a for a, b in self.blocks]

    def interior(self) -> list[int]:
        """Indices ``j`` for which ``d_j`` should kill the subalgebra."""
        return [j for a, b in self.blocks for j in range(a + 1, b)]

    @classmethod
    def parse(cls, text: str) -> "FlagShape":
        try:
            return cls(tuple(int(t) for t in text.split(",") if t.strip()))
        except ValueError:
            raise UsageError(f"cannot parse flag shape {text!r}") from None


# symbolic recursion


def _g(a: int, b: int) -> Factor:
    return ("g", a, b)


@lru_cache(maxsize=None)
def elem_terms(n: int, m: int) -> tuple[Term, ...]:
    """Symbolic terms of ``e^{(n)}_m`` built by the right recursion."""
    if m == 0:
        return ((),)
    if not 1 <= m <= n:
        return ()
    if n == 1:
        return ((_g(1, 2), ("y", 1)),)
    if m == n:
        return tuple(t + (_g(n, n + 1), ("y", n)) for t in elem_terms(n - 1, n - 1))
    bridge: list[Factor] = []
    for j in range(m + 1, n):
        bridge += [_g(j, j - 1), _g(j, j + 1)]
    tail = tuple(bridge) + (_g(n, n - 1), ("y", n))
    return elem_terms(n - 1, m) + tuple(t + tail for t in elem_terms(n - 1, m - 1))


def shift_term(term: Term, k: int) -> Term:
    out = []
    for f in term:
        if f[0] == "g":
            out.append(("g", f[1] + k, f[2] + k))
        else:
            out.append(("y", f[1] + k))
    return tuple(out)


def shifted_terms(idx: ElemIndex) -> tuple[Term, ...]:
    return tuple(shift_term(t, idx.k) for t in elem_terms(idx.n - idx.k, idx.m))


def factor_str(f: Factor) -> str:
    if f[0] == "g":
        return f"γ_{{{f[1]},{f[2]}}}"
    return f"y_{f[1]}"


def term_str(term: Term) -> str:
    return " ".join(factor_str(f) for f in term) if term else "1"


def specialize_term(term: Term, cfg: ParityConfig) -> PolyCliff:
    out = PolyCliff.one(cfg)
    for f in term:
        if f[0] == "g":
            out = out * gamma_pair(f[1], f[2], cfg)
        else:
            out = poly_mul(out, PolyCliff.y(f[1], cfg))
    return out


def _ambient(idx: ElemIndex, cfg: ParityConfig):
    if idx.n > cfg.n:
        raise UsageError(f"configuration has {cfg.n} indices, polynomial needs {idx.n}")


@lru_cache(maxsize=None)
def _elem_cached(k: int, n: int, m: int, cfg: ParityConfig) -> PolyCliff:
    out = PolyCliff.zero(cfg)
    for t in shifted_terms(ElemIndex(k, n, m)):
        out = out + specialize_term(t, cfg)
    return out


def elem_poly(idx: ElemIndex, cfg: ParityConfig) -> PolyCliff:
    """``e^{(k,n)}_m`` inside the ambient configuration ``cfg`` (``cfg.n >= n``).

    Gammas reaching past ``cfg.n`` are trivial; embed into a longer
    configuration to make the right boundary odd.
    """
    _ambient(idx, cfg)
    return _elem_cached(idx.k, idx.n, idx.m, cfg)


def elem(n: int, m: int, cfg: ParityConfig, k: int = 0) -> PolyCliff:
    """Shorthand for ``elem_poly(ElemIndex(k, n, m), cfg)``; zero outside ``0..n-k``."""
    if m < 0 or m > n - k:
        return PolyCliff.zero(cfg)
    if m == 0:
        return PolyCliff.one(cfg)
    return elem_poly(ElemIndex(k, n, m), cfg)


def verify_symmetric(idx: ElemIndex, cfg: ParityConfig) -> Report:
    """``d_j e^{(k,n)}_m = 0`` for ``k < j < n``."""
    rep = Report(f"symmetric e^({idx.k},{idx.n})_{idx.m} [{cfg.label()}]")
    f = elem_poly(idx, cfg)
    for j in range(idx.k + 1, idx.n):
        rep.check(demazure_apply(j, f).is_zero(), f"d_{j} does not kill e^({idx.k},{idx.n})_{idx.m}")
    return rep


def verify_all_symmetric(n: int, cfg: ParityConfig) -> Report:
    rep = Report(f"symmetric n={n} [{cfg.label()}]")
    for k in range(n):
        for m in range(1, n - k + 1):
            rep.merge(verify_symmetric(ElemIndex(k, n, m), cfg))
    return rep


# odd specialisation


def x_monomial(indices: Sequence[int], cfg: ParityConfig, coeff=1) -> PolyCliff:
    """``coeff * x_{i_1} ... x_{i_r}`` with ``x_i = c_i y_i``."""
    out = PolyCliff.const(coeff, cfg)
    for i in indices:
        out = poly_mul(out, poly_mul(PolyCliff.c(i, cfg), PolyCliff.y(i, cfg)))
    return out


def ekl_sum(n: int, m: int, cfg: ParityConfig) -> PolyCliff:
    """``sum_{k_1<...<k_m} prod_j (-1)^{k_j-1} x_{k_1} ... x_{k_m}``."""
    out = PolyCliff.zero(cfg)
    for ks in combinations(range(1, n + 1), m):
        sign = (-1) ** sum(k - 1 for k in ks)
        out = out + x_monomial(ks, cfg, sign)
    return out


def odd_ambient(n: int) -> ParityConfig:
    """All-odd configuration with one spare index so that ``gamma_{n,n+1} = c_n``."""
    return ParityConfig.all_odd(n + 1)


def to_x_terms(f: PolyCliff) -> list[tuple[tuple[int, ...], object]] | None:
    """Rewrite ``f`` as a combination of ascending ``x``-monomials, or ``None``.

    Only square-free monomials whose Clifford word matches the variable
    support are representable.
    """
    out = []
    for (mask, exps), c in f.terms.items():
        support = tuple(i + 1 for i, e in enumerate(exps) if e)
        if any(e > 1 for e in exps) or mask != sum(1 << (i - 1) for i in support):
            return None
        base = x_monomial(support, f.cfg)
        ((_, bc),) = base.terms.items()
        out.append((support, c * bc))  # bc is a sign
    out.sort(key=lambda p: (len(p[0]), p[0]))
    return out


def x_terms_str(terms: list[tuple[tuple[int, ...], object]]) -> str:
    parts = []
    for idx, c in terms:
        mono = "".join(f"x{i}" for i in idx) or "1"
        if c == 1:
            parts.append(("+", mono))
        elif c == -1:
            parts.append(("-", mono))
        else:
            parts.append(("+" if c > 0 else "-", f"{abs(c)}{mono}"))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, mono in parts[1:]:
        text += f" {sign} {mono}"
    return text


def odd_specialization_check(n: int) -> Report:
    """Compare ``e^{(n)}_m`` (all odd) with ``(-1)^{m(m-1)/2}`` times the EKL sum."""
    cfg = odd_ambient(n)
    rep = Report(f"odd specialisation n={n}")
    table = {}
    for m in range(1, n + 1):
        f = elem(n, m, cfg)
        sign = (-1) ** (m * (m - 1) // 2)
        rep.check(f == ekl_sum(n, m, cfg) * sign, f"e^({n})_{m} differs from the signed EKL sum")
        terms = to_x_terms(f)
        rep.check(terms is not None, f"e^({n})_{m} is not a combination of x-monomials")
        table[m] = x_terms_str(terms or [])
    rep.data["table"] = table
    return rep


# tables


def table_symbolic(n_max: int = 4) -> dict[int, dict[int, list[str]]]:
    """Rows ``m``, columns ``n`` of the symbolic gamma form."""
    return {
        m: {n: [term_str(t) for t in elem_terms(n, m)] for n in range(m, n_max + 1)}
        for m in range(1, n_max + 1)
    }


def _even_str(f: PolyCliff) -> str:
    parts = []
    for (mask, exps), c in sorted(f.terms.items(), key=lambda kv: tuple(-e for e in kv[0][1])):
        mono = "".join(f"y{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e)
        parts.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(parts) or "0"


def table_even(n_max: int = 4) -> dict[int, dict[int, str]]:
    out: dict[int, dict[int, str]] = {}
    for m in range(1, n_max + 1):
        out[m] = {}
        for n in range(m, n_max + 1):
            out[m][n] = _even_str(elem(n, m, ParityConfig.all_even(n)))
    return out


def table_odd(n_max: int = 4) -> dict[int, dict[int, str]]:
    out: dict[int, dict[int, str]] = {}
    for m in range(1, n_max + 1):
        out[m] = {}
        for n in range(m, n_max + 1):
            out[m][n] = x_terms_str(to_x_terms(elem(n, m, odd_ambient(n))) or [])
    return out


# lambda coefficients


def _word_elem(mask: int, cfg: ParityConfig) -> PolyCliff:
    return PolyCliff({(mask, (0,) * cfg.n): 1}, cfg, clean=False)


def lambda_coeffs(k: int, n: int, m: int, cfg: ParityConfig) -> dict[int, CliffordElem]:
    """Coefficients with ``e^{(n)}_m = sum_l e^{(k)}_l lambda_l e^{(k,n)}_{m-l}``.

    Solved over the rational span of Clifford words; the reconstruction is
    rechecked exactly.  Raises :class:`NoSolution` if no expansion exists.
    """
    if not 1 <= k <= n - 1:
        raise UsageError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    if not 0 <= m <= n:
        raise UsageError(f"degree m={m} outside 0..{n}")
    target = elem(n, m, cfg)
    labels = []
    vectors = []
    for l in range(m + 1):
        left, right = elem(k, l, cfg), elem(n, m - l, cfg, k=k)
        if left.is_zero() or right.is_zero():
            continue
        for w in cfg.words():
            labels.append((l, w))
            vectors.append(poly_mul(poly_mul(left, _word_elem(w, cfg)), right))
    coeffs = solve_in_span(target, vectors)
    out: dict[int, dict] = {}
    for (l, w), c in zip(labels, coeffs):
        if c:
            out.setdefault(l, {})[w] = c
    result = {l: CliffordElem(out.get(l, {}), cfg) for l in range(m + 1)}
    if lambda_expand(k, n, m, result, cfg) != target:
        raise NoSolution("lambda expansion does not reconstruct e")
    return result


def lambda_expand(k: int, n: int, m: int, lam: dict[int, CliffordElem], cfg: ParityConfig) -> PolyCliff:
    out = PolyCliff.zero(cfg)
    for l, coeff in lam.items():
        out = out + poly_mul(poly_mul(elem(k, l, cfg), PolyCliff.from_clifford(coeff)), elem(n, m - l, cfg, k=k))
    return out


def lambda_closed_form(k: int, n: int, m: int, l: int, cfg: ParityConfig) -> CliffordElem | None:
    """The two endpoint cases ``k = 1`` and ``k = n - 1``; ``None`` otherwise.

    For ``k = n - 1`` and ``l = m - 1 < n - 1`` the bridge product carries the
    trailing ``gamma_{n,n-1} gamma_{n,n+1}``, which is 1 unless ``n`` and a
    neighbour are both odd.
    """
    one = CliffordElem.one(cfg)
    zero = CliffordElem.zero(cfg)
    if m == 0:
        return one if l == 0 else zero
    if k == n - 1:
        if l == m:
            return one
        if l == m - 1:
            if m == n:
                return one
            factors = []
            for j in range(m + 1, n + 1):
                factors += [gamma_pair(j, j - 1, cfg), gamma_pair(j, j + 1, cfg)]
            return units_product(factors, cfg)
        return zero
    if k == 1:
        if l == 0:
            return units_product([gamma_pair(2, 1, cfg), gamma_pair(2, 3, cfg)], cfg)
        return one if l == 1 else zero
    return None


def verify_lambda_endpoints(n: int, cfg: ParityConfig, ks: Sequence[int] | None = None) -> Report:
    """The closed forms at ``k`` in ``ks`` (default ``1`` and ``n - 1``) reconstruct ``e^{(n)}_m`` exactly.

    The ``k = 1`` form shares the constant unit of the left recursion and fails where it does.
    """
    rep = Report(f"lambda endpoints n={n} [{cfg.label()}]")
    for k in sorted({1, n - 1} if ks is None else set(ks)):
        for m in range(n + 1):
            lam = {l: lambda_closed_form(k, n, m, l, cfg) for l in range(m + 1)}
            ok = lambda_expand(k, n, m, lam, cfg) == elem(n, m, cfg)
            rep.check(ok, f"closed-form lambda^(0,{k},{n})_{m} fails to reconstruct")
    return rep


# left recursion and one-step inclusions


def verify_left_recursion(n: int, cfg: ParityConfig) -> Report:
    """``e^{(n)}_m = gamma_{1,2} y_1 e^{(1,n)}_{m-1} + gamma_{2,1} gamma_{2,3} e^{(1,n)}_m``.

    The literal identity fails once some ``j >= 2`` has ``j, j+1`` both odd.
    ``data["units"]`` records the solved coefficient of ``e^{(1,n)}_m`` next to
    the constant unit above, or ``None`` where no expansion with Clifford
    coefficients exists (incoherent configurations such as ``(0,0,1,1)``).
    """
    rep = Report(f"left recursion n={n} [{cfg.label()}]")
    if n < 2:
        return rep
    head = PolyCliff.from_clifford(gamma_pair(1, 2, cfg)) * PolyCliff.y(1, cfg)
    unit = units_product([gamma_pair(2, 1, cfg), gamma_pair(2, 3, cfg)], cfg)
    units = {}
    for m in range(1, n + 1):
        rhs = head * elem(n, m - 1, cfg, k=1) + PolyCliff.from_clifford(unit) * elem(n, m, cfg, k=1)
        rep.check(rhs == elem(n, m, cfg), f"left recursion fails at m={m}")
        if m < n:
            try:
                units[m] = str(lambda_coeffs(1, n, m, cfg)[0])
            except NoSolution:
                units[m] = None
    rep.data["unit"] = str(unit)
    rep.data["units"] = units
    return rep


def left_recursion_holds(cfg: ParityConfig) -> bool:
    """Whether the constant-unit left recursion can hold: no odd pair right of index 1."""
    p = cfg.parity
    return not any(p[j - 1] and p[j] for j in range(2, cfg.n))


def one_step_inclusions(k: int, n: int, cfg: ParityConfig) -> tuple[dict, dict]:
    """Images of the generators of ``(0,k,n)`` and ``(0,k+1,n)`` inside ``(0,k,k+1,n)``.

    Each map sends ``(block, m)`` to a pair ``(source, image)`` of polynomials,
    with the image written through the generators of the finer shape.
    """
    if not 0 < k < n:
        raise UsageError(f"need 0 < k < n, got k={k}, n={n}")
    g = lambda a, b: PolyCliff.from_clifford(gamma_pair(a, b, cfg))  # noqa: E731
    y_next = PolyCliff.y(k + 1, cfg)
    first: dict = {}
    for m in range(1, k + 1):
        first[("left", m)] = (elem(k, m, cfg), elem(k, m, cfg))
    for m in range(1, n - k + 1):
        image = g(k + 1, k + 2) * y_next * elem(n, m - 1, cfg, k=k + 1)
        if m < n - k:
            image = image + g(k + 2, k + 1) * g(k + 2, k + 3) * elem(n, m, cfg, k=k + 1)
        first[("right", m)] = (elem(n, m, cfg, k=k), image)
    second: dict = {}
    for m in range(1, k + 2):
        if m == k + 1:
            # top degree: the chain continues with gamma_{k+1,k+2}
            image = elem(k, k, cfg) * g(k + 1, k + 2) * y_next
        else:
            bridge = PolyCliff.one(cfg)
            for j in range(m + 1, k + 1):
                bridge = bridge * g(j, j - 1) * g(j, j + 1)
            image = elem(k, m, cfg) + elem(k, m - 1, cfg) * bridge * g(k + 1, k) * y_next
        second[("left", m)] = (elem(k + 1, m, cfg), image)
    for m in range(1, n - k):
        second[("right", m)] = (elem(n, m, cfg, k=k + 1), elem(n, m, cfg, k=k + 1))
    return first, second


def verify_one_step(k: int, n: int, cfg: ParityConfig) -> Report:
    rep = Report(f"one-step inclusions k={k} n={n} [{cfg.label()}]")
    for name, images in zip(("(0,k,n)", "(0,k+1,n)"), one_step_inclusions(k, n, cfg)):
        for (side, m), (src, img) in images.items():
            rep.check(src == img, f"{name} generator {side} m={m} maps to a different polynomial")
    return rep


# flag subalgebras


def flag_algebra_generators(shape: FlagShape, cfg: ParityConfig) -> list[PolyCliff]:
    gens = []
    for a, b in shape.blocks:
        for m in range(1, b - a + 1):
            gens.append(elem(b, m, cfg, k=a))
    return gens


def generator_monomials(generators: Sequence[PolyCliff], d: int) -> list[PolyCliff]:
    """Ordered products ``g_1^{a_1} ... g_r^{a_r}`` of total degree ``d``."""
    if not generators:
        raise UsageError("need at least one generator")
    cfg = generators[0].cfg
    degs = [g.degree() for g in generators]
    out: list[PolyCliff] = []

    def walk(i: int, rem: int, acc: PolyCliff):
        if i == len(generators):
            if rem == 0:
                out.append(acc)
            return
        power = acc
        while True:
            walk(i + 1, rem, power)
            rem -= degs[i]
            if rem < 0:
                break
            power = poly_mul(power, generators[i])

    walk(0, d, PolyCliff.one(cfg))
    return out


def monomial_spans(generators: Sequence[PolyCliff], cfg: ParityConfig, max_degree: int) -> list[Echelon]:
    """Degreewise echelon bases of ``span{c^w * monomial}`` over ordered generator monomials."""
    words = [_word_elem(w, cfg) for w in cfg.words()]
    spans = []
    for d in range(max_degree + 1):
        ech = Echelon()
        for mono in generator_monomials(generators, d):
            for w in words:
                ech.add(poly_mul(w, mono).terms)
        spans.append(ech)
    return spans


def verify_flag_kernel(shape: FlagShape, cfg: ParityConfig, max_degree: int = 6) -> Report:
    """Generators are killed by the interior ``d_j`` and span the joint kernel degreewise."""
    rep = Report(f"flag kernel {shape.cuts} [{cfg.label()}]")
    interior = shape.interior()
    gens = flag_algebra_generators(shape, cfg)
    for g in gens:
        for j in interior:
            rep.check(demazure_apply(j, g).is_zero(), f"d_{j} does not kill a generator")
    spans = monomial_spans(gens, cfg, max_degree)
    ranks = []
    for d, ech in enumerate(spans):
        kdim = joint_kernel_dim(cfg, d, interior)
        ranks.append((ech.rank, kdim))
        rep.check(ech.rank == kdim, f"degree {d}: span rank {ech.rank} but kernel dimension {kdim}")
    rep.data["ranks"] = ranks
    return rep


def lambda_rank(n: int, cfg: ParityConfig, max_degree: int) -> list[int]:
    """Degreewise dimension of the left Clifford span of ordered ``e``-monomials."""
    gens = [elem(n, m, cfg) for m in range(1, n + 1)]
    return [ech.rank for ech in monomial_spans(gens, cfg, max_degree)]
