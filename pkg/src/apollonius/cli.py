"""Command-line front end.

Subcommands map one-to-one onto library operations:

    classify      regime + quartic coefficients as JSON
    sample        curve samples as CSV, optionally an SVG plot
    euclid-locus  the flat-plane locus as JSON
    fourpoint     cross-ratio existence test, optional witness search
    prob          Monte Carlo estimates, quadrature and ratio calibration
    dioph         integer family generation as CSV

Exit codes: 0 success, 2 invalid arguments, 3 search or calibration
failure, 1 internal error.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import diophantine as dio
from . import probability as prob
from .fourpoint import (
    FourConfig,
    Geometry,
    WitnessSearchError,
    cross_ratio_euclid,
    cross_ratio_hyper,
    exists_euclid,
    exists_hyper,
    find_witness_euclid,
    find_witness_hyper,
    fourpoint_report,
)
from .halfplane import GeometryError
from .locus import (
    AxisCircle,
    TripleConfig,
    classification_report,
    euclidean_locus,
    sample_curve,
    samples_to_csv,
)
from .serialize import render_json
from .svg import render_svg


class ValidationError(Exception):
    """Bad flag values; maps to exit code 2."""


def _positive_desc_triple(args) -> TripleConfig:
    if args.c <= 0:
        raise ValidationError(f"-c must be positive, got {args.c}")
    if args.b <= args.c:
        raise ValidationError(f"-b must exceed -c, got -b {args.b} <= -c {args.c}")
    if args.a <= args.b:
        raise ValidationError(f"-a must exceed -b, got -a {args.a} <= -b {args.b}")
    return TripleConfig(args.a, args.b, args.c)


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_classify(args) -> int:
    cfg = _positive_desc_triple(args)
    _write(render_json(classification_report(cfg, args.eps)), args.output)
    return 0


def _cmd_sample(args) -> int:
    cfg = _positive_desc_triple(args)
    if args.n < 2:
        raise ValidationError(f"-n must be at least 2, got {args.n}")
    samples = sample_curve(cfg, args.n)
    if args.svg is not None:
        _write(render_svg(samples), args.svg)
    _write(samples_to_csv(samples), args.output)
    return 0


def _cmd_euclid_locus(args) -> int:
    cfg = _positive_desc_triple(args)
    locus = euclidean_locus(cfg.a, cfg.b, cfg.c)
    if isinstance(locus, AxisCircle):
        record = {"kind": "circle", "center_y": locus.center_y, "radius": locus.radius}
    else:
        record = {"kind": "line", "height": locus.height}
    _write(render_json(record), args.output)
    return 0


def _cmd_fourpoint(args) -> int:
    if args.geometry == "hyper" and args.d <= 0:
        raise ValidationError(f"-d must be positive in hyperbolic geometry, got {args.d}")
    for lo_name, lo, hi_name, hi in (
        ("-d", args.d, "-c", args.c),
        ("-c", args.c, "-b", args.b),
        ("-b", args.b, "-a", args.a),
    ):
        if hi <= lo:
            raise ValidationError(f"{hi_name} must exceed {lo_name}, got {hi} <= {lo}")
    geometry = Geometry.HYPERBOLIC if args.geometry == "hyper" else Geometry.EUCLIDEAN
    cfg = FourConfig(args.a, args.b, args.c, args.d, geometry)
    if geometry is Geometry.HYPERBOLIC:
        cross_ratio, exists = cross_ratio_hyper(cfg), exists_hyper(cfg)
        witness = find_witness_hyper(cfg) if args.witness else None
    else:
        cross_ratio, exists = cross_ratio_euclid(cfg), exists_euclid(cfg)
        witness = find_witness_euclid(cfg) if args.witness else None
    _write(render_json(fourpoint_report(cfg, witness, exists, cross_ratio)), args.output)
    return 0


def _cmd_prob(args) -> int:
    if args.n < 1:
        raise ValidationError(f"-n must be at least 1, got {args.n}")
    if args.threads < 1:
        raise ValidationError(f"--threads must be at least 1, got {args.threads}")
    qtol = args.quadrature
    if args.kind == "pe":
        if args.calibrate is not None:
            raise ValidationError("--calibrate applies to prob ph only")
        estimate = prob.estimate_pe(args.n, args.seed, threads=args.threads)
        record = {
            "kind": "pe",
            "n": estimate.n,
            "seed": estimate.seed,
            "ratio": None,
            "mean": estimate.mean,
            "stderr": estimate.stderr,
            "closed_form": prob.pe_closed_form(),
            "quadrature": prob.pe_quadrature(qtol),
        }
        _write(render_json(record), args.output)
        return 0
    if args.ratio <= 1.0:
        raise ValidationError(f"--ratio must exceed 1, got {args.ratio}")
    setup = prob.HyperProbSetup(args.ratio)
    if args.calibrate is not None:
        found = prob.calibrate_ratio(args.calibrate, bracket=(1.01, 1000.0))
        record = {
            "kind": "ph-calibration",
            "target": args.calibrate,
            "bracket": [1.01, 1000.0],
            "ratio": found,
        }
        _write(render_json(record), args.output)
        if found is None:
            sys.stderr.write("calibration target not bracketed on (1.01, 1000)\n")
            return 3
        return 0
    estimate = prob.estimate_ph(args.n, args.seed, setup, threads=args.threads)
    record = {
        "kind": "ph",
        "n": estimate.n,
        "seed": estimate.seed,
        "ratio": setup.ratio,
        "mean": estimate.mean,
        "stderr": estimate.stderr,
        "closed_form": prob.ph_reference_constant(),
        "quadrature": prob.ph_quadrature(setup, qtol),
    }
    _write(render_json(record), args.output)
    return 0


_FAMILIES = {
    "quadratic": dio.FamilyKind.QUADRATIC_MEAN,
    "geometric": dio.FamilyKind.GEOMETRIC_MEAN,
    "harmonic": dio.FamilyKind.HARMONIC_QUADRATIC,
}


def _parse_range(text: str, flag: str) -> range:
    try:
        lo_text, hi_text = text.split(":", 1)
        lo, hi = int(lo_text), int(hi_text)
    except ValueError as exc:
        raise ValidationError(f"{flag} expects LO:HI integers, got {text!r}") from exc
    if hi < lo:
        raise ValidationError(f"{flag} range is empty: {text!r}")
    return range(lo, hi + 1)


def _cmd_dioph(args) -> int:
    kind = _FAMILIES[args.family]
    m_range = _parse_range(args.m_range, "--m-range")
    n_range = _parse_range(args.n_range, "--n-range")
    lines = ["m,n,a,b,c,kind,verified"]
    for m in m_range:
        for n in n_range:
            triple = _generate(kind, m, n)
            if triple is None:
                continue
            ok = dio.verify_identity(triple, kind)
            lines.append(
                f"{m},{n},{triple.a},{triple.b},{triple.c},{kind.value},{str(ok).lower()}"
            )
    _write("\n".join(lines) + "\n", args.output)
    return 0


def _generate(kind, m, n):
    if kind is dio.FamilyKind.GEOMETRIC_MEAN:
        if m <= 0 or n <= 0 or m == n:
            return None
        return dio.geometric_family(m, n)
    if (m, n) == (0, 0):
        return None
    if kind is dio.FamilyKind.QUADRATIC_MEAN:
        return dio.pythagorean_family(m, n)
    return dio.quadratic_form_family(m, n)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apollonius",
        description="Equal-angle loci in the hyperbolic half-plane",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="emit JSON (where documented)")
        fmt.add_argument("--csv", action="store_true", help="emit CSV (where documented)")

    def add_triple(p):
        p.add_argument("-a", type=float, required=True, help="largest height")
        p.add_argument("-b", type=float, required=True, help="middle height")
        p.add_argument("-c", type=float, required=True, help="smallest height")
        add_common(p)

    p = sub.add_parser("classify", help="locus regime of a triple")
    add_triple(p)
    p.add_argument("--eps", type=float, default=1e-12, help="boundary tolerance")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("sample", help="sample the locus curve")
    add_triple(p)
    p.add_argument("-n", type=int, required=True, help="number of angle grid points")
    p.add_argument("--svg", default=None, metavar="PATH", help="also write an SVG plot")
    p.set_defaults(handler=_cmd_sample)

    p = sub.add_parser("euclid-locus", help="Euclidean locus of a triple")
    add_triple(p)
    p.set_defaults(handler=_cmd_euclid_locus)

    p = sub.add_parser("fourpoint", help="four-point equal-angle existence test")
    p.add_argument("--geometry", choices=("euclid", "hyper"), required=True)
    p.add_argument("-a", type=float, required=True)
    p.add_argument("-b", type=float, required=True)
    p.add_argument("-c", type=float, required=True)
    p.add_argument("-d", type=float, required=True)
    p.add_argument("--witness", action="store_true", help="search for a witness point")
    add_common(p)
    p.set_defaults(handler=_cmd_fourpoint)

    p = sub.add_parser("prob", help="witness-existence probability")
    p.add_argument("kind", choices=("pe", "ph"))
    p.add_argument("-n", type=int, default=1_000_000, help="Monte Carlo sample count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ratio", type=float, default=2.0, help="endpoint ratio a/d (ph only)")
    p.add_argument("--quadrature", type=float, default=1e-10, metavar="TOL")
    p.add_argument("--calibrate", type=float, default=None, metavar="TARGET",
                   help="find the ratio whose probability equals TARGET (ph only)")
    p.add_argument("--threads", type=int, default=1)
    add_common(p)
    p.set_defaults(handler=_cmd_prob)

    p = sub.add_parser("dioph", help="integer families for the boundary shapes")
    p.add_argument("--family", choices=sorted(_FAMILIES), required=True)
    p.add_argument("--m-range", default="-5:5", metavar="LO:HI")
    p.add_argument("--n-range", default="-5:5", metavar="LO:HI")
    add_common(p)
    p.set_defaults(handler=_cmd_dioph)

    return parser


# each subcommand has exactly one documented tabular format; the format
# selectors exist so scripts can be explicit, not to add new formats
_JSON_COMMANDS = frozenset({"classify", "euclid-locus", "fourpoint", "prob"})


def _check_format_flags(args) -> None:
    if getattr(args, "csv", False) and args.command in _JSON_COMMANDS:
        raise ValidationError(f"--csv is not available: {args.command} output is JSON")
    if getattr(args, "json", False) and args.command not in _JSON_COMMANDS:
        raise ValidationError(f"--json is not available: {args.command} output is CSV")


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        _check_format_flags(args)
        for name in ("a", "b", "c", "d", "eps", "ratio", "quadrature"):
            value = getattr(args, name, None)
            if value is not None and not math.isfinite(value):
                raise ValidationError(f"-{name if len(name) == 1 else '-' + name} must be finite")
        return args.handler(args)
    except (ValidationError, GeometryError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except WitnessSearchError as exc:
        sys.stderr.write(f"search failure: {exc}\n")
        return 3
    except Exception as exc:  # pragma: no cover - defensive
        sys.stderr.write(f"internal error: {exc}\n")
        return 1


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
