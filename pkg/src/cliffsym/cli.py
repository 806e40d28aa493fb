"""Command line entry point: tables, verification suites, graded ranks and cohomology rings.

Exit status: 0 when every requested check passes, 1 when a check fails,
2 on a usage error and 3 when a resource bound is exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from . import complete, demazure, dsymmetric, quiver_hecke, quotients, schubert, symgroup
from .clifford import ParityConfig
from .dsymmetric import FlagShape
from .errors import ResourceError, UsageError
from .report import Report
from .scalars import ORDER_ENV, QSeries, default_order, geometric_inverse, qbinomial, qfactorial, qmultinomial
from .symgroup import Permutation, all_permutations

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
MAX_VERIFY_N = 4


# suites

Item = tuple[Callable[..., Report], tuple]


@dataclass
class Suite:
    name: str
    items: list[Item]
    skipped: list[str]


def _configs(n: int, parities: str | None) -> list[ParityConfig]:
    if parities is None:
        return ParityConfig.every(n)
    return [ParityConfig.parse(parities, n)]


def _uniform(cfg: ParityConfig) -> bool:
    return len(set(cfg.parity)) <= 1


def _coherent_only(cfgs, name: str, skipped: list[str]) -> list[ParityConfig]:
    out = []
    for cfg in cfgs:
        if demazure.is_coherent(cfg):
            out.append(cfg)
        else:
            skipped.append(f"{name} [{cfg.label()}]: incoherent configuration")
    return out


def _uniform_only(cfgs, name: str, skipped: list[str]) -> list[ParityConfig]:
    out = []
    for cfg in cfgs:
        if _uniform(cfg):
            out.append(cfg)
        else:
            skipped.append(f"{name} [{cfg.label()}]: mixed parities")
    return out


def _ker_eq_im_all(cfg: ParityConfig, max_degree: int) -> Report:
    rep = Report(f"ker=im n={cfg.n} [{cfg.label()}]")
    for i in range(1, cfg.n):
        rep.merge(demazure.verify_ker_eq_im(i, cfg, max_degree))
    return rep


def suite_nhc(n, cfgs, max_degree, cartans) -> Suite:
    items: list[Item] = []
    for cfg in cfgs:
        items.append((demazure.verify_nhc_relations, (cfg, max_degree)))
        items.append((_ker_eq_im_all, (cfg, max_degree)))
    return Suite("nhc", items, [])


def suite_symmetric(n, cfgs, max_degree, cartans) -> Suite:
    skipped: list[str] = []
    items: list[Item] = [(dsymmetric.verify_all_symmetric, (n, cfg)) for cfg in _coherent_only(cfgs, "symmetry of e", skipped)]
    if any(cfg.parity == (1,) * n for cfg in cfgs):
        items.append((dsymmetric.odd_specialization_check, (n,)))
    return Suite("symmetric", items, skipped)


def suite_vanishing(n, cfgs, max_degree, cartans) -> Suite:
    skipped: list[str] = []
    items: list[Item] = []
    for cfg in cfgs:
        items.append((complete.verify_kappa, (cfg,)))
        items.append((complete.verify_top_row, (n, max_degree, cfg)))
        items.append((complete.verify_associativity, (n, max_degree, cfg)))
        items.append((complete.verify_vanishing, (n, max_degree, cfg)))
    for cfg in _coherent_only(cfgs, "symmetry of h", skipped):
        items.append((complete.verify_complete_symmetric, (n, max_degree, cfg)))
    return Suite("vanishing", items, skipped)


def suite_schubert(n, cfgs, max_degree, cartans) -> Suite:
    skipped: list[str] = []
    items: list[Item] = []
    for cfg in _coherent_only(cfgs, "Schubert", skipped):
        items.append((schubert.verify_schubert_props, (n, cfg)))
        items.append((schubert.verify_reduced_words, (n, cfg)))
    return Suite("schubert", items, skipped)


def suite_freeness(n, cfgs, max_degree, cartans) -> Suite:
    skipped: list[str] = []
    items: list[Item] = [(schubert.verify_freeness, (n, cfg, max_degree)) for cfg in cfgs]
    for cfg in _coherent_only(cfgs, "Lambda equals kernel", skipped):
        items.append((schubert.verify_lambda_equals_kernel, (n, cfg, max_degree)))
        items.append((quotients.verify_poincare_type_a, (cfg, max_degree)))
    items.append((schubert.verify_rank_series, (n, 12)))
    items.append((symgroup.verify_coxeter_qorders, ()))
    items.append((quotients.verify_poincare_signed, (n, 20)))
    return Suite("freeness", items, skipped)


def suite_cyclotomic(n, cfgs, max_degree, cartans) -> Suite:
    skipped: list[str] = []
    items: list[Item] = []
    for cfg in cfgs:
        items.append((quotients.verify_bi_relation, (cfg,)))
        items.append((quotients.verify_multiplication_matrix, (cfg,)))
        for m in range(1, n + 1):
            items.append((quotients.verify_ideal_equality, (n, m, cfg, max_degree)))
    for cfg in _uniform_only(cfgs, "cohomology dimensions", skipped):
        for m in range(0, n + 1):
            items.append((quotients.verify_grassmann_dims, (n, m, cfg)))
        items.append((quotients.verify_cyclotomic_dims, (n, n + 1, cfg)))
    return Suite("cyclotomic", items, skipped)


def _flag_shapes(n: int) -> list[FlagShape]:
    out = []
    for mask in range(1 << (n - 1)):
        inner = [k for k in range(1, n) if mask >> (k - 1) & 1]
        out.append(FlagShape((0, *inner, n)))
    return out


def _one_step_attainable(k: int, cfg: ParityConfig) -> bool:
    p = cfg.parity
    return not any(p[j - 1] and p[j] for j in range(k + 2, cfg.n))


def suite_flag(n, cfgs, max_degree, cartans) -> Suite:
    skipped: list[str] = []
    items: list[Item] = []
    for cfg in cfgs:
        if dsymmetric.left_recursion_holds(cfg):
            items.append((dsymmetric.verify_lambda_endpoints, (n, cfg)))
            items.append((dsymmetric.verify_left_recursion, (n, cfg)))
        else:
            items.append((dsymmetric.verify_lambda_endpoints, (n, cfg, (n - 1,))))
            skipped.append(f"left recursion and lambda at k=1 [{cfg.label()}]: odd pair right of index 1")
        for k in range(1, n):
            if _one_step_attainable(k, cfg):
                items.append((dsymmetric.verify_one_step, (k, n, cfg)))
            else:
                skipped.append(f"one-step inclusion k={k} [{cfg.label()}]: odd pair right of index {k + 1}")
    for cfg in _coherent_only(cfgs, "flag kernels", skipped):
        for shape in _flag_shapes(n):
            items.append((dsymmetric.verify_flag_kernel, (shape, cfg, max_degree)))
    for cfg in _uniform_only(cfgs, "flag cohomology", skipped):
        for shape in _flag_shapes(n):
            items.append((quotients.verify_flag_dims, (shape, cfg)))
        for k in range(1, n):
            items.append((quotients.verify_flag_iso_identity, (k, n, cfg)))
    return Suite("flag", items, skipped)


def _spanning_sequences(C, n: int) -> list[tuple[int, ...]]:
    """One sequence per orbit over alphabets of at most three letters."""
    seen, out = set(), []
    for nu in quiver_hecke.sequences(C, n):
        key = tuple(sorted(nu))
        if key not in seen:
            seen.add(key)
            out.append(nu)
    return out


def suite_quiver_hecke(n, cfgs, max_degree, cartans) -> Suite:
    items: list[Item] = []
    for C in cartans:
        items.append((quiver_hecke.verify_hc_relations, (C, n, max_degree)))
        items.append((quiver_hecke.verify_iota, (C, n, max_degree)))
        items.append((quiver_hecke.verify_grading, (C, n, min(max_degree, 3))))
        for i in C.vertices:
            if C.odd(i):
                items.append((quiver_hecke.nhc_embedding_check, (C, i, n, min(max_degree, 3))))
        for nu in _spanning_sequences(C, n):
            items.append((quiver_hecke.verify_spanning_independence, (C, nu, 2 if n <= 2 else 1)))
    return Suite("quiver-hecke", items, [])


SUITES: dict[str, Callable[..., Suite]] = {
    "nhc": suite_nhc,
    "symmetric": suite_symmetric,
    "vanishing": suite_vanishing,
    "schubert": suite_schubert,
    "freeness": suite_freeness,
    "cyclotomic": suite_cyclotomic,
    "flag": suite_flag,
    "quiver-hecke": suite_quiver_hecke,
}


def _run_item(item: Item) -> Report:
    func, args = item
    return func(*args)


def run_suites(names, n, cfgs, max_degree, cartans, jobs: int = 1) -> tuple[list[Report], list[str]]:
    suites = [SUITES[name](n, cfgs, max_degree, cartans) for name in names]
    items = [item for s in suites for item in s.items]
    skipped = [f"{s.name}: {msg}" for s in suites for msg in s.skipped]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            reports = list(pool.map(_run_item, items))
    else:
        reports = [_run_item(item) for item in items]
    return reports, skipped


# output helpers


def _emit(args, payload, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def _series_text(s: QSeries, top: int) -> str:
    return " ".join(str(s[d]) for d in range(top + 1))


# commands


def cmd_tables(args) -> int:
    if args.table == "elementary":
        return _tables_elementary(args)
    cfg = ParityConfig.parse(args.parities or "all-even", args.n)
    if args.table == "complete":
        top = args.m if args.m is not None else args.n
        rows = {m: str(complete.complete_poly(args.n, m, cfg)) for m in range(top + 1)}
        text = "\n".join(f"h_{m} = {v}" for m, v in rows.items())
        _emit(args, {"parity": list(cfg.parity), "n": args.n, "complete": rows}, text)
        return EXIT_OK
    table = schubert.schubert_table(cfg)
    rows = {str(w): str(s) for w, s in sorted(table.items(), key=lambda kv: (symgroup.length(kv[0]), str(kv[0])))}
    text = "\n".join(f"s_{w} = {v}" for w, v in rows.items())
    _emit(args, {"parity": list(cfg.parity), "n": args.n, "schubert": rows}, text)
    return EXIT_OK


def _tables_elementary(args) -> int:
    choice = (args.parities or "symbolic").lower()
    if choice in ("symbolic", "all"):
        table = dsymmetric.table_symbolic(args.n)
        text = "\n".join(
            f"e^({n})_{m} = " + " + ".join(terms) for m, row in table.items() for n, terms in row.items()
        )
        _emit(args, {"table": "symbolic", "rows": table}, text)
        return EXIT_OK
    if choice in ("all-even", "even"):
        table, name = dsymmetric.table_even(args.n), "even"
    elif choice in ("all-odd", "odd"):
        table, name = dsymmetric.table_odd(args.n), "odd"
    else:
        cfg = ParityConfig.parse(choice, args.n)
        rows = {m: str(dsymmetric.elem(args.n, m, cfg)) for m in range(1, args.n + 1)}
        text = "\n".join(f"e^({args.n})_{m} = {v}" for m, v in rows.items())
        _emit(args, {"table": cfg.label(), "n": args.n, "rows": rows}, text)
        return EXIT_OK
    text = "\n".join(f"e^({n})_{m} = {v}" for m, row in table.items() for n, v in row.items())
    _emit(args, {"table": name, "rows": table}, text)
    return EXIT_OK


def _cartans(args) -> list:
    if args.cartan:
        return [quiver_hecke.CartanData.load(args.cartan)]
    return quiver_hecke.battery()


def cmd_verify(args) -> int:
    if args.n < 1:
        raise UsageError("n must be positive")
    if args.max_degree < 0:
        raise UsageError("max degree must be nonnegative")
    if args.n > MAX_VERIFY_N:
        raise ResourceError(f"verification suites are limited to n <= {MAX_VERIFY_N}")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    cfgs = _configs(args.n, args.parities)
    start = time.monotonic()
    reports, skipped = run_suites(names, args.n, cfgs, args.max_degree, _cartans(args), args.jobs)
    elapsed = time.monotonic() - start
    passed = all(r.passed for r in reports)
    payload = {
        "suite": args.suite,
        "n": args.n,
        "max_degree": args.max_degree,
        "passed": passed,
        "reports": [r.to_json() for r in reports],
        "skipped": skipped,
    }
    lines = [r.summary() for r in reports]
    for r in reports:
        lines.extend(f"  {msg}" for msg in r.failures)
    lines.extend(f"SKIP {msg}" for msg in skipped)
    lines.append(f"{'PASS' if passed else 'FAIL'} {len(reports)} reports in {elapsed:.1f}s")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if passed else EXIT_FAIL


def cmd_rank(args) -> int:
    order = args.order if args.order is not None else default_order()
    if args.what == "polc":
        series = geometric_inverse(args.n, order)
    elif args.what == "lambda":
        series = QSeries.one(order) / (qfactorial(args.n, order) * QSeries([1, -1], order) ** args.n)
    else:
        if args.k is None:
            raise UsageError("rank cohomology needs --k")
        series = qbinomial(args.n, args.k, order)
    coeffs = [series[d] for d in range(order + 1)]
    _emit(args, {"what": args.what, "n": args.n, "order": order, "coefficients": coeffs}, " ".join(map(str, coeffs)))
    return EXIT_OK


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"expected a comma list of integers, got {text!r}") from None


def cmd_cohomology(args) -> int:
    cfg = ParityConfig.parse(args.parities, args.n)
    order = args.order if args.order is not None else default_order()
    top = max(order, args.n * args.n)
    if args.kind == "grassmann":
        if args.k is None or not 0 <= args.k <= args.n:
            raise UsageError("cohomology grassmann needs 0 <= --k <= --n")
        ring = quotients.grassmann_cohomology(args.n, args.k, cfg)
        expected = qbinomial(args.n, args.k, top)
    else:
        cuts = _parse_ints(args.cuts) if args.cuts else (0, *range(1, args.n), args.n)
        shape = FlagShape(cuts)
        if shape.n != args.n:
            raise UsageError(f"shape {cuts} does not end at n={args.n}")
        ring = quotients.flag_cohomology(shape, cfg)
        expected = qmultinomial(args.n, shape.parts, top)
    scale = len(cfg.words())
    want = [scale * expected[d] for d in range(len(ring.dims))]
    dims = {str(d): v for d, v in enumerate(ring.dims)}
    payload = {
        "ring": ring.name,
        "parity": list(cfg.parity),
        "dims": dims,
        "expected": {"clifford_dim": scale, "qseries": [expected[d] for d in range(order + 1)]},
        "matches": ring.dims == want,
    }
    text = f"{ring.name} [{cfg.label()}]\ndims     {' '.join(map(str, ring.dims))}\nexpected {' '.join(map(str, want))}"
    _emit(args, payload, text)
    return EXIT_OK if ring.dims == want else EXIT_FAIL


def cmd_complete(args) -> int:
    cfg = ParityConfig.parse(args.parities, args.n)
    h = complete.complete_poly(args.n, args.m, cfg)
    _emit(args, h.to_json(), str(h))
    return EXIT_OK


def cmd_schubert(args) -> int:
    cfg = ParityConfig.parse(args.parities, args.n)
    images = _parse_ints(args.w) if args.w else None
    if images is None:
        perms = list(all_permutations(args.n))
    else:
        perms = [Permutation(images)]
    rows = {str(w): schubert.schubert(w, cfg) for w in perms}
    text = "\n".join(f"s_{w} = {s}" for w, s in rows.items())
    _emit(args, {w: s.to_json() for w, s in rows.items()}, text)
    return EXIT_OK


# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliffsym", description="Clifford polynomial superalgebras and d-symmetric polynomials")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", parents=[common], help="elementary, complete or Schubert tables")
    p.add_argument("table", choices=("elementary", "complete", "schubert"))
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--m", type=int)
    p.add_argument("--parities", help="symbolic, all-even, all-odd or a comma list")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=(*SUITES, "all"))
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--parities", help="default: every configuration")
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--cartan", help="Cartan datum JSON file (default: the built-in battery)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rank", parents=[common], help="graded ranks as q-series")
    p.add_argument("what", choices=("polc", "lambda", "cohomology"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--order", type=int)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("cohomology", parents=[common], help="graded dimensions of cohomology quotients")
    p.add_argument("kind", choices=("grassmann", "flag"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--cuts", help="flag shape as comma list, e.g. 0,1,3")
    p.add_argument("--parities", default="all-even")
    p.add_argument("--order", type=int)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("complete", parents=[common], help="one complete d-symmetric polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--parities", default="all-even")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("schubert", parents=[common], help="d-Schubert polynomials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", help="permutation in one-line notation, e.g. 2,3,1")
    p.add_argument("--parities", default="all-even")
    p.set_defaults(func=cmd_schubert)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if ORDER_ENV in os.environ:
            default_order()
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceError, MemoryError, RecursionError) as exc:
        print(f"resource bound exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
