"""Command-line front end.

Subcommands: certify, scan, render, threshold, problem-scan.  Exit codes
are a stable contract: 0 = certified/passed, 1 = not-certified/violated,
2 = usage or hypothesis error.  All numerics live in the library modules;
this file only parses arguments, dispatches, and formats output.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from harmomap import criteria, families, geometry, render
from harmomap.errors import DegenerateThresholdError, HarmomapError
from harmomap.series import AnalyticSeries, HarmonicMapSeries, load_coeffs
from harmomap.specialfn import HypergeometricParams

HYP_FAMILIES = criteria.FAMILY_KEYS

_CRITERION_ALIASES = {
    "b1-zero": False,
    "lemma13": False,
    "b1-free": True,
    "lemma12": True,
}


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from exc


def _parse_floats(text: str) -> tuple:
    return tuple(float(x) for x in text.split(",") if x != "")


def _parse_complexes(text: str) -> tuple:
    return tuple(_parse_complex(x) for x in text.split(",") if x != "")


def _add_source_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--coeffs", help="coefficient file (JSON: {'h': [[re,im],...], 'b': ...})")
    sub.add_argument(
        "--family",
        help="named family: identity, mocanu, mocanu-boundary, figure2, koebe, "
        "limit, suffridge, or one of " + ", ".join(HYP_FAMILIES),
    )
    sub.add_argument("--n", type=int, help="degree parameter for mocanu/suffridge")
    sub.add_argument("--a", type=_parse_complex, help="parameter a (mocanu: real a)")
    sub.add_argument("--b", type=_parse_complex, help="parameter b")
    sub.add_argument("--c", type=float, help="parameter c")
    sub.add_argument("--alpha", type=_parse_complex, help="co-analytic weight alpha")
    sub.add_argument("--truncation", type=int, default=4096, help="series truncation order")
    sub.add_argument("--psi", type=_parse_floats, help="three angles for the limit mapping")
    sub.add_argument("--theta", type=float, default=0.0, help="dilatation angle")
    sub.add_argument("--q-coeffs", type=_parse_complexes, help="Q coefficients, ascending")
    sub.add_argument("--phi", type=float, default=0.0)
    sub.add_argument("--beta", type=float, default=0.0)
    sub.add_argument("--t", type=float, default=0.5)


def _need(args, names) -> None:
    missing = [n for n in names if getattr(args, n.replace("-", "_")) is None]
    if missing:
        raise HarmomapError(f"family {args.family!r} needs --" + ", --".join(missing))


def _hyp_spec(args) -> criteria.FamilySpec:
    _need(args, ["a", "b", "c", "alpha"])
    params = HypergeometricParams.detect(args.a, args.b, args.c)
    return criteria.FamilySpec(args.family, params, args.alpha)


def _build_map(args) -> HarmonicMapSeries:
    if args.coeffs:
        return load_coeffs(args.coeffs)
    fam = args.family
    if fam is None:
        raise HarmomapError("provide a map source: --coeffs FILE or --family NAME")
    if fam == "identity":
        return families.identity_map()
    if fam == "mocanu":
        _need(args, ["n", "a"])
        return families.mocanu_example(args.n, float(args.a.real))
    if fam == "mocanu-boundary":
        _need(args, ["n"])
        return families.mocanu_example(args.n, families.mocanu_class_m_bound(args.n))
    if fam in ("figure2", "nonunivalent"):
        return families.nonunivalent_example()
    if fam == "koebe":
        return families.harmonic_koebe()
    if fam == "limit":
        _need(args, ["psi"])
        return families.limit_mapping(args.psi, args.theta, args.truncation)
    if fam == "suffridge":
        _need(args, ["n", "q_coeffs"])
        q = families.PolynomialSpec(np.array(args.q_coeffs), max(args.n - 2, 0))
        return families.suffridge_family(
            q, families.SuffridgeParams(args.phi, args.beta, args.t, args.n)
        )
    if fam in HYP_FAMILIES:
        return families.hypergeometric_family(_hyp_spec(args), args.truncation)
    raise HarmomapError(f"unknown family {fam!r}")


def _grid_from(args) -> geometry.ScanGrid:
    radii = args.radii if args.radii else geometry.default_grid().radii
    return geometry.ScanGrid(radii=radii, angles=args.angles)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_certify(args) -> int:
    if args.family in HYP_FAMILIES and not args.coeffs:
        spec = _hyp_spec(args)
        cert = criteria.family_k_closed(spec)
        print(criteria.format_certificate(cert))
        if args.series_check:
            result = criteria.family_k_series(spec, truncation=args.series_check)
            print(f"series sum : {result.value:.12g}  (N={result.truncation}, "
                  f"tail <= {result.tail_bound:.3g})")
            gap = abs(cert.sum_value - result.value)
            agree = gap <= result.tail_bound + 1e-8
            print(f"cross-check: |closed - series| = {gap:.3g} "
                  f"{'<=' if agree else '>'} tail + 1e-8")
            if not agree:
                return 2
        return 0 if cert.certified else 1
    f = _build_map(args)
    allow_b1 = _CRITERION_ALIASES[args.criterion]
    cert = criteria.coefficient_margin(f, allow_b1=allow_b1)
    print(criteria.format_certificate(cert))
    return 0 if cert.certified else 1


def _run_scan(args, f: HarmonicMapSeries, grid: geometry.ScanGrid) -> geometry.GridReport:
    name = args.functional
    if name == "ch1":
        return geometry.scan_ch1(f, grid)
    if name == "starlike":
        return geometry.scan_fully_starlike(f, grid)
    if name == "jacobian":
        return geometry.scan_jacobian(f, grid)
    if name == "convexity":
        return geometry.scan_convexity_functional(f.h, grid, lower=args.lower)
    if name == "convexity-upper":
        return geometry.scan_convexity_upper(f.h, grid, upper=args.upper)
    if name == "disk-bound":
        return geometry.starlike_disk_bound_check(f.h, grid)
    raise HarmomapError(f"unknown functional {name!r}")


def cmd_scan(args) -> int:
    f = _build_map(args)
    grid = _grid_from(args)
    report = _run_scan(args, f, grid)
    for key, val in report.to_record().items():
        print(f"{key:>12}: {val}")
    if args.csv:
        rows = _scan_rows_for_csv(args, f, grid)
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(render.scan_values_to_csv(grid, rows))
        print(f"values written to {args.csv}")
    return 0 if report.passed else 1


def _scan_rows_for_csv(args, f: HarmonicMapSeries, grid: geometry.ScanGrid):
    # re-evaluates the functional row by row for the CSV dump
    name = args.functional
    hp, gp = f.h.derivative(), f.g.derivative()
    hpp = hp.derivative()
    rows = []
    for r in grid.radii:
        z = grid.circle(r)
        if name == "ch1":
            rows.append(hp.eval(z).real - np.abs(gp.eval(z)))
        elif name == "starlike":
            df = z * hp.eval(z) - np.conj(z) * np.conj(gp.eval(z))
            rows.append((df / f.eval(z)).real)
        elif name == "jacobian":
            rows.append(np.abs(hp.eval(z)) ** 2 - np.abs(gp.eval(z)) ** 2)
        elif name == "convexity":
            rows.append((1.0 + z * hpp.eval(z) / hp.eval(z)).real - args.lower)
        elif name == "convexity-upper":
            rows.append(args.upper - (1.0 + z * hpp.eval(z) / hp.eval(z)).real)
        elif name == "disk-bound":
            rows.append(2.0 / 3.0 - np.abs(z * hp.eval(z) / f.h.eval(z) - 2.0 / 3.0))
    return rows


_PRESETS = {
    "identity": ((0.2, 0.4, 0.6, 0.8), None),
    "figure1": ((0.2, 0.4, 0.6, 0.8, 0.9, 0.95, 0.995), None),
    "figure2": ((0.2, 0.4, 0.6, 0.8, 0.9, 0.95, 0.995), 0.995),
}


def cmd_render(args) -> int:
    marker_pts = []
    if args.preset:
        radii, marker_r = _PRESETS[args.preset]
        if args.preset == "identity":
            f = families.identity_map()
        elif args.preset == "figure1":
            f = families.mocanu_example(2, 0.3)
        else:
            f = families.nonunivalent_example()
        if marker_r is not None:
            witness = geometry.curve_self_intersection(f, marker_r, 4096)
            if witness is not None:
                marker_pts.append(witness.point)
    else:
        f = _build_map(args)
        radii = args.radii if args.radii else (0.2, 0.4, 0.6, 0.8)
    spec = render.RenderSpec(radii=radii, samples=args.samples, fmt=args.format)
    curves = render.sample_curves(f, spec)
    if args.format == "svg":
        payload = render.curves_to_svg(curves, spec, markers=marker_pts)
    else:
        payload = render.curves_to_csv(curves)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(payload)
    print(f"wrote {args.out}")
    return 0


def cmd_threshold(args) -> int:
    roots = criteria.threshold_c(args.family, args.b, args.alpha)
    print(f"family    : {args.family}")
    print(f"root_plus : {roots.root_plus:.12g}")
    print(f"root_minus: {roots.root_minus:.12g}")
    try:
        cert = criteria.threshold_parent_certificate(
            args.family, args.b, args.alpha, roots.root_plus
        )
    except HarmomapError as exc:
        # alpha = 0 puts the root exactly on the parent admissibility edge
        print(f"equality residual at root_plus: n/a ({exc})")
    else:
        residual = abs(cert.sum_value - cert.bound)
        print(f"equality residual at root_plus: {residual:.3g}")
    return 0


def cmd_problem_scan(args) -> int:
    print("exploratory sweep: witnesses falsify univalence for the sampled")
    print("fixture only; absence of a witness proves nothing")
    print(f"{'alpha':>8} {'beta':>8} {'bound-ok':>8}  witness")
    if args.alphas is not None:
        alphas = args.alphas
    else:
        alphas = tuple(np.arange(args.alpha_start, args.alpha_stop + 1e-12, args.alpha_step))
    grid = geometry.ScanGrid(radii=(0.9, 0.99), angles=512)
    for alpha in alphas:
        beta = (3.0 * alpha - 2.0) / (4.0 - 3.0 * alpha)
        if beta <= 0.0:
            print(f"{alpha:8.4f} {'-':>8} {'-':>8}  fixture degenerates (alpha <= 2/3)")
            continue
        beta = min(beta, 1.0)
        h = AnalyticSeries([0.0, 1.0, -beta / 2.0])
        g = AnalyticSeries([0.0, 0.0, 0.5, -beta / 3.0])
        f = HarmonicMapSeries(h, g)
        bound_ok = geometry.scan_convexity_upper(h, grid, upper=1.5 * alpha).passed
        witness = geometry.curve_self_intersection(f, args.r, args.samples)
        if witness is None:
            print(f"{alpha:8.4f} {beta:8.4f} {str(bound_ok):>8}  none")
        else:
            print(
                f"{alpha:8.4f} {beta:8.4f} {str(bound_ok):>8}  "
                f"crossing near {witness.point:.6g} "
                f"(theta {witness.theta_a:.4f} / {witness.theta_b:.4f})"
            )
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmomap",
        description="certify, construct, scan, and render planar harmonic mappings",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("certify", help="run a coefficient criterion")
    _add_source_args(p)
    p.add_argument(
        "--criterion",
        choices=sorted(_CRITERION_ALIASES),
        default="b1-zero",
        help="coefficient criterion for coefficient-file/constructed sources",
    )
    p.add_argument(
        "--series-check",
        type=int,
        nargs="?",
        const=20000,
        default=None,
        metavar="N",
        help="cross-check the closed form against the series sum to N terms",
    )
    p.set_defaults(func=cmd_certify)

    p = subs.add_parser("scan", help="scan a geometric functional over a disk grid")
    _add_source_args(p)
    p.add_argument(
        "--functional",
        required=True,
        choices=["ch1", "starlike", "jacobian", "convexity", "convexity-upper", "disk-bound"],
    )
    p.add_argument("--radii", type=_parse_floats, help="comma-separated radii")
    p.add_argument("--angles", type=int, default=1024)
    p.add_argument("--lower", type=float, default=-0.5)
    p.add_argument("--upper", type=float, default=1.5)
    p.add_argument("--csv", help="also dump r,theta,value rows to this file")
    p.set_defaults(func=cmd_scan)

    p = subs.add_parser("render", help="write image curves as SVG or CSV")
    _add_source_args(p)
    p.add_argument("--preset", choices=sorted(_PRESETS))
    p.add_argument("--radii", type=_parse_floats)
    p.add_argument("--samples", type=int, default=1024)
    p.add_argument("--format", choices=["svg", "csv"], default="svg")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    p = subs.add_parser("threshold", help="roots of a threshold quadratic in c")
    p.add_argument("--family", required=True, choices=list(criteria.THRESHOLD_KEYS))
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--alpha", type=_parse_complex, required=True)
    p.set_defaults(func=cmd_threshold)

    p = subs.add_parser(
        "problem-scan", help="exploratory non-univalence sweep over an alpha range"
    )
    p.add_argument("--alphas", type=_parse_floats, help="explicit alpha list")
    p.add_argument("--alpha-start", type=float, default=0.7)
    p.add_argument("--alpha-stop", type=float, default=1.0)
    p.add_argument("--alpha-step", type=float, default=0.05)
    p.add_argument("--r", type=float, default=0.995)
    p.add_argument("--samples", type=int, default=4096)
    p.set_defaults(func=cmd_problem_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DegenerateThresholdError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HarmomapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
