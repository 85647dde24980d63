"""Command-line entry point: one subcommand per experiment."""

from __future__ import annotations

import argparse
import json
import logging
import sys
import warnings

from . import __version__
from ._kernels import BACKEND
from .activation import ACTIVATIONS
from .energy import ENGINE_MODES
from .experiments import EXPERIMENTS, ExperimentConfig, run
from .output import _jsonable


def _positive_int(minimum: int):
    def conv(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if v < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {v}")
        return v
    return conv


def _positive_float(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not v > 0.0:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def _pairs(text):
    try:
        pairs = tuple(tuple(int(v) for v in chunk.split(",")) for chunk in text.split(";") if chunk.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"pairs look like '1,2;1,3', got {text!r}") from None
    if not pairs or any(len(p) != 2 or min(p) < 1 for p in pairs):
        raise argparse.ArgumentTypeError(f"pairs look like '1,2;1,3' with 1-based indices, got {text!r}")
    return pairs


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("global options")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--width", type=_positive_int(1), default=50)
    g.add_argument("--grid-points", type=_positive_int(2), default=250)
    g.add_argument("--epochs", type=_positive_int(1), default=5000)
    g.add_argument("--lr", type=_positive_float, default=None, help="default 1e-3 (5e-3 for fd-vs-ad)")
    g.add_argument("--activation", choices=sorted(ACTIVATIONS), default=None)
    g.add_argument("--engine", choices=ENGINE_MODES, default=None)
    g.add_argument("--fd-step", type=_positive_float, default=1e-3)
    g.add_argument("--frequency", type=_positive_int(1), default=None,
                   help="k in b(x) = 100 sin(k pi x); default 3 (4 for provocation-hf)")
    g.add_argument("--snapshot-every", type=_positive_int(0), default=0)
    g.add_argument("--out-dir", default=None, help="default runs/<subcommand>")
    g.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="ritzrelu", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in EXPERIMENTS:
        sp = sub.add_parser(name, parents=[common])
        if name == "landscape":
            sp.add_argument("--pairs", type=_pairs, default=None, help="e.g. '1,2;1,3;2,3'")
            sp.add_argument("--resolution", type=_positive_int(3), default=51)
            sp.add_argument("--half-width", type=_positive_float, default=0.5)
            sp.add_argument("--hessian-step", type=_positive_float, default=1e-3)
        if name == "check-gradients":
            sp.add_argument("--draws", type=_positive_int(1), default=20)
    return parser


def parse_args(argv=None) -> ExperimentConfig:
    args = build_parser().parse_args(argv)
    kw = dict(
        name=args.command,
        seed=args.seed,
        width=args.width,
        grid_points=args.grid_points,
        epochs=args.epochs,
        lr=args.lr,
        activation=args.activation,
        engine=args.engine,
        fd_step=args.fd_step,
        frequency=args.frequency,
        snapshot_every=args.snapshot_every,
        out_dir=args.out_dir or f"runs/{args.command}",
    )
    if args.command == "landscape":
        if args.pairs is not None:
            kw["pairs"] = args.pairs
        kw.update(resolution=args.resolution, half_width=args.half_width, hessian_step=args.hessian_step)
    if args.command == "check-gradients":
        kw["draws"] = args.draws
    cfg = ExperimentConfig(**kw)
    cfg.verbose = args.verbose
    return cfg


def _print_table(rows):
    print(f"{'draw':>4}  {'activation':<10} {'check':<22} {'value':>12} {'bound':>12}  result")
    for d, act, check, value, bound, ok in rows:
        print(f"{d:>4}  {act:<10} {check:<22} {value:>12.4e} {bound:>12.4e}  {'pass' if ok else 'FAIL'}")


def main(argv=None) -> int:
    cfg = parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if getattr(cfg, "verbose", False) else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    with warnings.catch_warnings():
        warnings.simplefilter("always")
        try:
            cfg = cfg.resolved()
        except ValueError as exc:
            print(f"ritzrelu: error: {exc}", file=sys.stderr)
            return 2
        result = run(cfg)
    if cfg.name == "check-gradients":
        _print_table(result.rows)
    print(json.dumps(_jsonable(result.metrics), indent=2, sort_keys=True))
    print(f"wrote {cfg.out_dir}/manifest.json", file=sys.stderr)
    if cfg.name == "check-gradients" and not result.metrics["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
