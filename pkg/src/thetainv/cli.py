"""Command-line front end: invariant computation, lattice comparison and the
identity verifier.

Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import get_lattice
from .errors import ResourceLimitError, ThetaInvError
from .lattice import IntegralLattice
from .qseries import QSeries, format_rational
from .theta import (
    InvariantRequest,
    invariant_metadata,
    theta_general,
    theta_pair,
    theta_series,
    theta_triple,
)
from .verify import DEFAULT_BUDGET, DEFAULT_SEED, report_dict, run_verification

CACHE_ENV = "THETAINV_CACHE_DIR"


def _default_cache_dir() -> str:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(
        os.path.expanduser("~"), ".cache")
    return os.path.join(base, "thetainv")


def _resolve_cache(args) -> str | None:
    if getattr(args, "no_cache", False):
        return None
    if getattr(args, "cache_dir", None):
        return args.cache_dir
    return os.environ.get(CACHE_ENV) or _default_cache_dir()


def _parse_degrees(text: str) -> tuple[int, ...]:
    try:
        degrees = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"degrees must be a comma list of integers, got {text!r}")
    if not degrees:
        raise ValueError("at least one degree is required")
    return degrees


def _pick_normalization(degrees: tuple[int, ...], requested: str) -> str:
    if requested != "auto":
        return requested
    if len(degrees) == 2 and degrees[0] == degrees[1]:
        return "pair"
    if degrees == (1, 1, 1):
        return "triple"
    return "general"


def compute_invariant(lattice: IntegralLattice, degrees: tuple[int, ...],
                      order: int, normalization: str, *,
                      cache_dir: str | None = None, threads: int = 1,
                      max_tuples: int = 2_000_000) -> QSeries:
    """Dispatch to the fast pair/triple paths when the normalization allows,
    otherwise to the general orthonormal-basis route."""
    if degrees == (0,):
        return theta_series(lattice, order, cache_dir=cache_dir)
    if normalization == "pair":
        if len(degrees) != 2 or degrees[0] != degrees[1]:
            raise ValueError("pair normalization needs degrees m,m")
        return theta_pair(lattice, degrees[0], order, threads=threads,
                          cache_dir=cache_dir)
    if normalization == "triple":
        if degrees != (1, 1, 1):
            raise ValueError("triple normalization needs degrees 1,1,1")
        return theta_triple(lattice, order, cache_dir=cache_dir)
    request = InvariantRequest(degrees, order, "general", max_tuples)
    return theta_general(lattice, request, cache_dir=cache_dir)


def _render(series: QSeries, lattice: IntegralLattice, degrees, normalization,
            fmt: str, decimal: bool) -> str:
    meta = invariant_metadata(lattice, degrees)
    weight = format_rational(meta["weight"])
    character = meta["character"] or ""
    if fmt == "json":
        doc = series.to_json_dict()
        doc["weight"] = weight
        doc["level"] = meta["level"]
        doc["invariant"] = list(degrees)
        doc["normalization"] = normalization
        doc["lattice"] = lattice.label()
        if meta["character"]:
            doc["character"] = meta["character"]
        if decimal:
            doc["decimal_approx"] = [f"{float(c):.12g}" for c in series.coeffs]
        return json.dumps(doc, indent=2, sort_keys=True)
    if fmt == "csv":
        header = "power,coefficient" + (",decimal_approx" if decimal else "")
        lines = [header]
        for k, c in enumerate(series.coeffs):
            line = f"{k},{format_rational(c)}"
            if decimal:
                line += f",{float(c):.12g}"
            lines.append(line)
        return "\n".join(lines)
    # table
    head = (f"# lattice={lattice.label()} degrees={','.join(map(str, degrees))} "
            f"normalization={normalization} weight={weight} level={meta['level']}")
    if character:
        head += f" character={character}"
    lines = [head]
    for k, c in enumerate(series.coeffs):
        line = f"q^{k}\t{format_rational(c)}"
        if decimal:
            line += f"\t(~{float(c):.12g})"
        lines.append(line)
    return "\n".join(lines)


def cmd_compute(args) -> int:
    lattice = get_lattice(args.lattice)
    degrees = _parse_degrees(args.degrees)
    normalization = _pick_normalization(degrees, args.normalization)
    series = compute_invariant(
        lattice, degrees, args.order, normalization,
        cache_dir=_resolve_cache(args), threads=args.threads,
        max_tuples=args.max_tuples)
    print(_render(series, lattice, degrees, normalization, args.format,
                  args.decimal))
    return 0


def cmd_compare(args) -> int:
    lat_a = get_lattice(args.lattice_a)
    lat_b = get_lattice(args.lattice_b)
    if lat_a.rank != lat_b.rank:
        raise ValueError(
            f"rank mismatch: {lat_a.label()} has rank {lat_a.rank}, "
            f"{lat_b.label()} has rank {lat_b.rank}")
    degree_lists = [_parse_degrees(d) for d in (args.degrees or ["0"])]
    cache = _resolve_cache(args)
    lines = [f"# compare {lat_a.label()} vs {lat_b.label()} order={args.order}"]
    separated = []
    for degrees in degree_lists:
        normalization = _pick_normalization(degrees, args.normalization)
        sa = compute_invariant(lat_a, degrees, args.order, normalization,
                               cache_dir=cache, threads=args.threads,
                               max_tuples=args.max_tuples)
        sb = compute_invariant(lat_b, degrees, args.order, normalization,
                               cache_dir=cache, threads=args.threads,
                               max_tuples=args.max_tuples)
        tag = ",".join(map(str, degrees))
        diff = next((k for k in range(args.order + 1)
                     if sa.coeff(k) != sb.coeff(k)), None)
        if diff is None:
            lines.append(f"degrees=({tag}): equal through q^{args.order}")
        else:
            lines.append(
                f"degrees=({tag}): differ at q^{diff} "
                f"({format_rational(sa.coeff(diff))} vs "
                f"{format_rational(sb.coeff(diff))})")
            separated.append(tag)
    if separated:
        lines.append("separated: yes (degrees " + "; ".join(separated) + ")")
    else:
        lines.append(f"separated: no invariant differs through q^{args.order}")
    print("\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    results = run_verification(budget=args.order_budget, seed=args.seed,
                               threads=args.threads)
    report = report_dict(results, args.order_budget)
    if args.format == "text":
        for r in results:
            status = "SKIP" if r.skipped else ("PASS" if r.passed else "FAIL")
            print(f"[{status}] {r.name}: {r.detail}")
        print("overall:", "pass" if report["passed"] else "fail")
    else:
        print(json.dumps(report, indent=2, sort_keys=True))
    return 0 if report["passed"] else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thetainv",
        description="Exact theta-series invariants of integral lattices.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--order", type=int, default=4,
                       help="truncation order K (coefficients of q^0..q^K)")
        p.add_argument("--normalization", default="auto",
                       choices=("auto", "pair", "triple", "general"))
        p.add_argument("--cache-dir", default=None,
                       help=f"shell cache directory (default ${CACHE_ENV} "
                            f"or ~/.cache/thetainv)")
        p.add_argument("--no-cache", action="store_true",
                       help="recompute shells, do not read or write the cache")
        p.add_argument("--threads", type=int, default=1,
                       help="worker threads for pair statistics")
        p.add_argument("--max-tuples", type=int, default=2_000_000,
                       help="budget for the general invariant tuple count")

    p_compute = sub.add_parser("compute", help="compute one invariant")
    p_compute.add_argument("--lattice", required=True,
                           help="catalog name (z<n>, a2, d4, e8, e8e8, "
                                "d16plus) or JSON file path")
    p_compute.add_argument("--degrees", required=True,
                           help="comma list of invariant degrees, e.g. 4,4")
    p_compute.add_argument("--format", default="table",
                           choices=("table", "json", "csv"))
    p_compute.add_argument("--decimal", action="store_true",
                           help="add clearly-labeled decimal approximations")
    common(p_compute)
    p_compute.set_defaults(func=cmd_compute)

    p_compare = sub.add_parser("compare", help="compare two lattices")
    p_compare.add_argument("--lattice-a", required=True)
    p_compare.add_argument("--lattice-b", required=True)
    p_compare.add_argument("--degrees", action="append",
                           help="invariant degrees; repeat for several "
                                "(default: 0)")
    common(p_compare)
    p_compare.set_defaults(func=cmd_compare)

    p_verify = sub.add_parser("verify", help="replay the identity suite")
    p_verify.add_argument("--order-budget", type=int, default=DEFAULT_BUDGET)
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.add_argument("--threads", type=int, default=1)
    p_verify.add_argument("--format", default="json", choices=("json", "text"))
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ThetaInvError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
