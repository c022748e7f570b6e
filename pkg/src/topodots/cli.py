"""Command-line surface: betti, barcode, classify, plot, generate.

Exit codes: 0 success, 2 unreadable input or output, 3 parse failure
(messages name the offending file and line), 4 invalid parameters.
"""
from __future__ import annotations

import argparse
import sys

from .analysis import (
    LabeledSignature,
    auto_profile,
    generate,
    group_by_signature,
    profile,
    signature_at,
)
from .filtration import build_cech, build_rips
from .io import (
    ParseError,
    barcode_csv,
    barcode_json,
    betti_csv,
    betti_json,
    groups_json,
    points_csv,
    read_points_csv,
    write_text,
)
from .persistence import compute_persistence

EXIT_OK = 0
EXIT_IO = 2
EXIT_PARSE = 3
EXIT_USAGE = 4


class _Parser(argparse.ArgumentParser):
    """argparse reports usage errors with code 2; we reserve 2 for I/O."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _radii_list(text):
    try:
        return tuple(float(f) for f in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad radii list: {text!r}") from None


def _xy(text):
    try:
        x, y = text.split(",")
        return (float(x), float(y))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad coordinate pair: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="topodots", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats=("csv", "json")):
        p.add_argument("--mode", choices=("cech", "rips"), default="cech")
        p.add_argument("--rmax", type=float, default=None, help="largest disc radius tracked")
        if formats:
            p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("betti", help="pieces/holes table across radii")
    p.add_argument("input")
    p.add_argument("--radii", type=_radii_list, default=None,
                   help="comma-separated radii (default: between-change midpoints)")
    common(p)
    p.add_argument("--figure", default=None, help="also render the table as a PNG")

    p = sub.add_parser("barcode", help="persistence pairs")
    p.add_argument("input")
    common(p)
    p.add_argument("--include-zero-length", action="store_true")
    p.add_argument("--figure", default=None, help="also render the barcode as a PNG")

    p = sub.add_parser("classify", help="group dot files by signature at one radius")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--radius", type=float, required=True)
    common(p, formats=("json",))

    p = sub.add_parser("plot", help="barcode or diagram SVG, or a disc-union bitmap")
    p.add_argument("input")
    p.add_argument("--view", choices=("barcode", "diagram", "discs"), default="barcode")
    common(p, formats=())
    p.add_argument("--include-zero-length", action="store_true")
    p.add_argument("--radius", type=float, default=None, help="disc radius (discs view)")
    p.add_argument("--resolution", type=float, default=None,
                   help="pixel size for the discs view (default radius/32)")

    p = sub.add_parser("generate", help="write a synthetic dot file")
    p.add_argument("shape", choices=("circle", "annulus", "figure_eight", "grid"))
    p.add_argument("-n", "--count", type=int, default=60)
    p.add_argument("--radius", type=float, default=10.0)
    p.add_argument("--inner", type=float, default=5.0)
    p.add_argument("--outer", type=float, default=10.0)
    p.add_argument("--rows", type=int, default=5)
    p.add_argument("--cols", type=int, default=5)
    p.add_argument("--spacing", type=float, default=1.0)
    p.add_argument("--noise", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--center", type=_xy, default=(0.0, 0.0))
    p.add_argument("--out", default=None)
    return parser


def _cmd_betti(args) -> int:
    if args.radii is not None and args.rmax is not None and max(args.radii) > args.rmax:
        raise ValueError(f"--radii exceed --rmax {args.rmax}")
    cloud = read_points_csv(args.input)
    if args.radii is None:
        prof = auto_profile(cloud, mode=args.mode, r_max=args.rmax)
    else:
        prof = profile(cloud, list(args.radii), mode=args.mode, r_max=args.rmax)
    text = betti_csv(prof) if args.format == "csv" else betti_json(prof)
    write_text(text, args.out)
    if args.figure:
        from .figures import save_profile_png

        save_profile_png(prof, args.figure)
    return EXIT_OK


def _build_barcode(args):
    cloud = read_points_csv(args.input)
    build = build_cech if args.mode == "cech" else build_rips
    return compute_persistence(build(cloud, args.rmax))


def _cmd_barcode(args) -> int:
    bc = _build_barcode(args)
    if args.format == "csv":
        text = barcode_csv(bc, args.include_zero_length)
    else:
        text = barcode_json(bc, args.include_zero_length)
    write_text(text, args.out)
    if args.figure:
        from .figures import save_barcode_png

        save_barcode_png(bc, args.figure, args.include_zero_length)
    return EXIT_OK


def _cmd_classify(args) -> int:
    if args.radius < 0:
        raise ValueError(f"radius must be non-negative, got {args.radius}")
    labeled = []
    failures = []
    for name in args.inputs:
        try:
            cloud = read_points_csv(name)
            labeled.append(LabeledSignature(name, signature_at(cloud, args.radius, args.mode)))
        except (OSError, ParseError) as exc:
            failures.append((name, exc))
            print(f"{name}: {exc}", file=sys.stderr)
    write_text(groups_json(group_by_signature(labeled)), args.out)
    return EXIT_PARSE if failures else EXIT_OK


def _cmd_plot(args) -> int:
    if args.view == "discs":
        if args.radius is None:
            raise ValueError("the discs view needs --radius")
        if args.resolution is not None and args.radius > 0 and args.resolution > args.radius / 16:
            raise ValueError(
                f"--resolution {args.resolution} is coarser than radius/16"
            )
        from .oracle import rasterize, write_pbm

        cloud = read_points_csv(args.input)
        resolution = args.resolution if args.resolution is not None else args.radius / 32
        write_text(write_pbm(rasterize(cloud, args.radius, resolution)), args.out)
        return EXIT_OK
    if args.radius is not None or args.resolution is not None:
        raise ValueError("--radius/--resolution apply to the discs view only")
    from .svgplot import barcode_svg, diagram_svg

    bc = _build_barcode(args)
    render = barcode_svg if args.view == "barcode" else diagram_svg
    write_text(render(bc, args.include_zero_length), args.out)
    return EXIT_OK


def _cmd_generate(args) -> int:
    cloud = generate(
        args.shape,
        n=args.count,
        seed=args.seed,
        noise=args.noise,
        radius=args.radius,
        inner=args.inner,
        outer=args.outer,
        rows=args.rows,
        cols=args.cols,
        spacing=args.spacing,
        center=args.center,
    )
    write_text(points_csv(cloud), args.out)
    return EXIT_OK


_COMMANDS = {
    "betti": _cmd_betti,
    "barcode": _cmd_barcode,
    "classify": _cmd_classify,
    "plot": _cmd_plot,
    "generate": _cmd_generate,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
