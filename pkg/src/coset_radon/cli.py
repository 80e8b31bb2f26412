"""Command-line surface: build groups, compute transforms and verdicts,
inspect spectra and flows, and run the regression suites.

Exit codes: 0 computed, 1 suite failure, 2 input or validation error,
3 size cap exceeded. JSON output is deterministic apart from elapsed_ms.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from time import perf_counter

from . import flows, geodesics, radon, spectral, verify
from .errors import CosetRadonError, GroupSpecError, SizeLimitError
from .exactla import prime_divisors
from .groups import (
    GroupTable,
    from_cayley_table,
    from_name,
    invariant_factors,
    is_abelian,
    is_cyclic,
    make_semidirect,
)

__all__ = ["load_group", "main"]


def load_group(spec: str) -> GroupTable:
    """Resolve a group expression: name grammar or file:PATH ingestion.

    A file may hold {"table": [[...]]} for a raw Cayley table or
    {"semidirect": {"normal": SPEC, "acting": SPEC, "action": [[...]]}}.
    """
    if spec.startswith("file:"):
        path = spec[len("file:") :]
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise GroupSpecError(f"cannot read {path}: {exc}")
        except json.JSONDecodeError as exc:
            raise GroupSpecError(f"{path} is not valid JSON: {exc}")
        if isinstance(data, dict) and "semidirect" in data:
            sd = data["semidirect"]
            normal = load_group(sd["normal"])
            acting = load_group(sd["acting"])
            return make_semidirect(normal, acting, sd["action"])
        if isinstance(data, dict) and "table" in data:
            table = data["table"]
            if "order" in data and data["order"] != len(table):
                raise GroupSpecError(
                    f"{path} declares order {data['order']} "
                    f"but the table has {len(table)} rows"
                )
            return from_cayley_table(table)
        if isinstance(data, list):
            return from_cayley_table(data)
        raise GroupSpecError(f"{path} holds neither a table nor a semidirect spec")
    return from_name(spec)


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _ms(t0: float) -> float:
    return round((perf_counter() - t0) * 1000, 3)


# ---------------------------------------------------------------------------
# subcommands


def cmd_group(args) -> int:
    t0 = perf_counter()
    g = load_group(args.spec)
    abelian = is_abelian(g)
    payload = {
        "group": g.recipe,
        "order": g.order,
        "abelian": abelian,
        "cyclic": is_cyclic(g),
        "invariant_factors": invariant_factors(g) if abelian else None,
        "elapsed_ms": _ms(t0),
    }
    lines = [
        f"group {g.recipe}: order {g.order}",
        f"  abelian: {abelian}, cyclic: {payload['cyclic']}",
    ]
    if abelian:
        lines.append(f"  invariant factors: {payload['invariant_factors']}")
    _emit(args, payload, lines)
    return 0


def cmd_geodesics(args) -> int:
    t0 = perf_counter()
    g = load_group(args.spec)
    if args.variant == "prime":
        geos = geodesics.prime_geodesics(g)
    else:
        geos = geodesics.maximal_geodesics(g)
    payload = {
        "group": g.recipe,
        "order": g.order,
        "variant": args.variant,
        "count": len(geos),
        "geodesics": [
            {
                "rep": geo.rep,
                "subgroup": list(geo.subgroup.elements),
                "coset": list(geo.coset),
            }
            for geo in geos
        ],
        "elapsed_ms": _ms(t0),
    }
    lines = [f"group {g.recipe}: {len(geos)} {args.variant} geodesics"]
    for geo in geos:
        lines.append(
            f"  rep {geo.rep}: subgroup {list(geo.subgroup.elements)} "
            f"coset {list(geo.coset)}"
        )
    _emit(args, payload, lines)
    return 0


def cmd_radon(args) -> int:
    t0 = perf_counter()
    g = load_group(args.spec)
    verdict = radon.is_injective(
        g, variant=args.variant, exact_confirm=args.exact_confirm == "on"
    )
    sys_ = radon.build_system(g, args.variant)
    payload = {
        "group": g.recipe,
        "variant": verdict.variant,
        "order": verdict.order,
        "rows": verdict.rows,
        "rank": verdict.rank,
        "kernel_dim": verdict.kernel_dim,
        "injective": verdict.injective,
        "frobenius_complement": verdict.frobenius_complement,
        "method": verdict.method,
        "elapsed_ms": _ms(t0),
    }
    lines = [
        f"group {g.recipe} ({args.variant}): "
        f"{'injective' if verdict.injective else 'noninjective'}",
        f"  order {verdict.order}, rows {verdict.rows}, rank {verdict.rank}, "
        f"kernel dim {verdict.kernel_dim} [{verdict.method}]",
    ]
    if verdict.frobenius_complement is not None:
        lines.append(f"  frobenius complement: {verdict.frobenius_complement}")
    if args.matrix_csv:
        with open(args.matrix_csv, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(list(range(sys_.ncols)))
            for row in sys_.matrix:
                writer.writerow(row)
        lines.append(f"  matrix written to {args.matrix_csv}")
    if args.kernel:
        kb = radon.kernel(sys_)
        payload["kernel"] = [[str(v) for v in vec] for vec in kb.vectors]
        lines.append(f"  kernel basis ({kb.dim} vectors):")
        for vec in kb.vectors:
            lines.append("    [" + ", ".join(str(v) for v in vec) + "]")
    _emit(args, payload, lines)
    return 0


def _spectral_abelian_payload(g: GroupTable, tolerance: float) -> tuple[dict, list]:
    ct = spectral.characters(g)
    faithful = spectral.faithful_characters(ct)
    verdict = radon.is_injective(g)
    test_f = [Fraction((7 * x) % 11 - 5, 3) for x in range(g.order)]
    fourier_ok = spectral.fourier_radon_check(g, test_f, tolerance=tolerance, ct=ct)
    plancherel = spectral.plancherel_defect(ct, test_f)
    payload = {
        "group": g.recipe,
        "order": g.order,
        "factors": list(ct.factors),
        "exponent": ct.exponent,
        "characters": [list(c) for c in ct.characters],
        "faithful_count": len(faithful),
        "faithful_indices": faithful,
        "kernel_dim": verdict.kernel_dim,
        "kernel_matches_faithful": verdict.kernel_dim == len(faithful),
        "char_sum_exact": spectral.char_sum_check_characters(ct),
        "fourier_ok": fourier_ok,
        "plancherel_defect": plancherel,
        "tolerance": tolerance,
    }
    lines = [
        f"group {g.recipe}: abelian, factors {list(ct.factors)}, "
        f"exponent {ct.exponent}",
        f"  characters: {len(ct.characters)}, faithful: {len(faithful)}",
        f"  kernel dim {verdict.kernel_dim} "
        f"({'=' if payload['kernel_matches_faithful'] else '!='} faithful count)",
        f"  char-sum identity exact: {payload['char_sum_exact']}",
        f"  fourier identities within {tolerance}: {fourier_ok} "
        f"(plancherel defect {plancherel:.2e})",
    ]
    return payload, lines


def _spectral_rep_payload(g: GroupTable, reps, tolerance: float) -> tuple[dict, list]:
    del tolerance  # rep-based checks are exact
    projections_ok = True
    for rep in reps:
        for p in prime_divisors(g.order):
            for hom in geodesics.homomorphisms_cn(g, p):
                if not spectral.check_projection(g, rep, hom):
                    projections_ok = False
    reports = [spectral.fixed_space_analysis(g, rep) for rep in reps]
    verdict = radon.is_injective(g)
    predicted = sum(r.kernel_dim * rep.dim for r, rep in zip(reports, reps))
    payload = {
        "group": g.recipe,
        "order": g.order,
        "rep_dims": [rep.dim for rep in reps],
        "char_sum_exact": spectral.char_sum_check(g, reps),
        "projections_ok": projections_ok,
        "dichotomies": [
            {
                "dim": r.dim,
                "fixed_span_dim": r.fixed_span_dim,
                "kernel_dim": r.kernel_dim,
                "dichotomy_ok": r.dichotomy_ok,
            }
            for r in reports
        ],
        "kernel_dim": verdict.kernel_dim,
        "predicted_kernel_dim": predicted,
    }
    lines = [
        f"group {g.recipe}: {len(reps)} representations, dims "
        f"{payload['rep_dims']}",
        f"  completeness (char-sum) exact: {payload['char_sum_exact']}",
        f"  projection law exact: {projections_ok}",
        f"  kernel dim {verdict.kernel_dim}, predicted from fixed-point-free "
        f"reps: {predicted}",
    ]
    for r in reports:
        lines.append(
            f"  rep dim {r.dim}: fixed span {r.fixed_span_dim}, "
            f"kernel {r.kernel_dim}, dichotomy {r.dichotomy_ok}"
        )
    return payload, lines


def cmd_spectral(args) -> int:
    t0 = perf_counter()
    g = load_group(args.spec)
    if args.rep is None:
        if not is_abelian(g):
            raise GroupSpecError(
                f"{g.recipe} is not abelian; supply --rep FILE or --rep builtin:q8"
            )
        payload, lines = _spectral_abelian_payload(g, args.tolerance)
    elif args.rep == "builtin:q8":
        reps = spectral.quaternion_rep_set(g)
        payload, lines = _spectral_rep_payload(g, reps, args.tolerance)
    else:
        rep = spectral.load_rep(args.rep, g)
        payload, lines = _spectral_rep_payload(g, [rep], args.tolerance)
    payload["elapsed_ms"] = _ms(t0)
    _emit(args, payload, lines)
    return 0


def _load_flow(spec: str) -> flows.SuccessorFlow:
    if spec.startswith("constant:"):
        return flows.constant_flow(int(spec[len("constant:") :]))
    if spec.startswith("group:"):
        return flows.group_flow(load_group(spec[len("group:") :]))
    if spec.startswith("file:"):
        path = spec[len("file:") :]
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise GroupSpecError(f"cannot read {path}: {exc}")
        except json.JSONDecodeError as exc:
            raise GroupSpecError(f"{path} is not valid JSON: {exc}")
        return flows.validate_flow(data["size"], data["table"], label=f"file:{path}")
    raise GroupSpecError(
        f"cannot parse flow {spec!r}; expected constant:M, group:SPEC or file:PATH"
    )


def cmd_flow(args) -> int:
    t0 = perf_counter()
    flow = _load_flow(args.spec)
    orbs = flows.flow_orbits(flow)
    nonstationary = [o for o in orbs if not o.stationary]
    sys_ = flows.flow_radon_system(flow)
    rank, kernel_dim, method = radon.decide_system(
        sys_, exact_confirm=args.exact_confirm == "on"
    )
    payload = {
        "flow": flow.label,
        "size": flow.size,
        "orbits": len(orbs),
        "stationary": len(orbs) - len(nonstationary),
        "periods": sorted(o.period for o in nonstationary),
        "projections": [list(o.projection()) for o in nonstationary],
        "rows": len(sys_.matrix),
        "rank": rank,
        "kernel_dim": kernel_dim,
        "injective": kernel_dim == 0,
        "method": method,
        "elapsed_ms": _ms(t0),
    }
    lines = [
        f"flow {flow.label} on {flow.size} points: {len(orbs)} orbits "
        f"({payload['stationary']} stationary)",
        f"  system: {payload['rows']} rows, rank {rank}, kernel dim "
        f"{kernel_dim} -> {'injective' if kernel_dim == 0 else 'noninjective'} "
        f"[{method}]",
    ]
    _emit(args, payload, lines)
    return 0


def cmd_verify(args) -> int:
    t0 = perf_counter()
    if args.suite not in verify.SUITES:
        raise GroupSpecError(
            f"unknown suite {args.suite!r}; choose from "
            f"{', '.join(sorted(verify.SUITES))}"
        )
    report = verify.run_suite(args.suite, max_order=args.max_order)
    payload = {
        "suite": report.suite,
        "total": report.total,
        "failed": report.failed,
        "passed": report.passed,
        "cases": [
            {
                "group": c.group,
                "expected": c.expected,
                "computed": c.computed,
                "pass": c.passed,
            }
            for c in report.cases
        ],
        "elapsed_ms": _ms(t0),
    }
    lines = [
        f"suite {report.suite}: {report.total - report.failed}/{report.total} "
        f"cases passed"
    ]
    for c in report.cases:
        if not c.passed:
            lines.append(f"  FAIL {c.group}: expected {c.expected!r}, "
                         f"got {c.computed!r}")
    _emit(args, payload, lines)
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------
# argument wiring


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coset-radon",
        description="Exact injectivity analysis for coset-sum transforms "
        "on finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, variant=True):
        p.add_argument("--json", action="store_true", help="emit JSON")
        if variant:
            p.add_argument(
                "--variant",
                choices=("prime", "maximal"),
                default="prime",
                help="geodesic family (default prime)",
            )

    p_group = sub.add_parser("group", help="build a group and print a summary")
    p_group.add_argument("spec", help="group expression or file:PATH")
    common(p_group, variant=False)
    p_group.set_defaults(func=cmd_group)

    p_geo = sub.add_parser("geodesics", help="list geodesics of a group")
    p_geo.add_argument("spec")
    common(p_geo)
    p_geo.set_defaults(func=cmd_geodesics)

    p_radon = sub.add_parser("radon", help="injectivity verdict for a group")
    p_radon.add_argument("spec")
    common(p_radon)
    p_radon.add_argument(
        "--matrix-csv", metavar="PATH", help="dump the incidence matrix as CSV"
    )
    p_radon.add_argument(
        "--kernel", action="store_true", help="print an exact kernel basis"
    )
    p_radon.add_argument(
        "--exact-confirm",
        choices=("on", "off"),
        default="on",
        help="confirm modular rank deficits by exact elimination (default on)",
    )
    p_radon.set_defaults(func=cmd_radon)

    p_spec = sub.add_parser(
        "spectral", help="character/representation analysis of a group"
    )
    p_spec.add_argument("spec")
    common(p_spec, variant=False)
    p_spec.add_argument(
        "--rep",
        metavar="PATH",
        help="matrix representation JSON, or builtin:q8",
    )
    p_spec.add_argument(
        "--tolerance",
        type=float,
        default=1e-9,
        help="numeric tolerance for Fourier identities (default 1e-9)",
    )
    p_spec.set_defaults(func=cmd_spectral)

    p_flow = sub.add_parser("flow", help="successor-flow orbits and verdict")
    p_flow.add_argument("spec", help="constant:M, group:SPEC, or file:PATH")
    common(p_flow, variant=False)
    p_flow.add_argument(
        "--exact-confirm", choices=("on", "off"), default="on",
        help="confirm modular rank deficits by exact elimination (default on)",
    )
    p_flow.set_defaults(func=cmd_flow)

    p_verify = sub.add_parser("verify", help="run a regression suite")
    p_verify.add_argument("suite", help=", ".join(sorted(verify.SUITES)))
    common(p_verify, variant=False)
    p_verify.add_argument(
        "--max-order",
        type=int,
        default=None,
        help="override the suite's default sweep bound",
    )
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CosetRadonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
