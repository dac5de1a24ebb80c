"""
Command line interface.

    ratcat enumerate M N [--limit K]
    ratcat stats M N --path SHAPE [--cells]
    ratcat genfun M N [--var b=1] [--format text|json|latex]
    ratcat verify M N [--checks all|name,name,...]
    ratcat triple A D S
    ratcat swap 3 N --path SHAPE

Exit status: 0 success, 1 a verification check failed, 2 usage or
validation error, 3 the work bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import serialize
from .harness import CHECKS, genfun_parallel, run_checks
from .lattice import CoprimePair, DyckPath, enumerate_paths, format_path
from .polynomial import BqtPolynomial, WorkBoundExceeded, catalan_C
from .rankword import format_word, to_path
from .statistics import cell_partition
from .three_n import DyckTriple, construct_word, swap_bijection, triple_of_path

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3
DEFAULT_WORK_BOUND = 10**7


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    work_bound: int = DEFAULT_WORK_BOUND
    output_format: str = "text"
    cache_dir: Path | None = None
    parallelism: int = 1

    def __post_init__(self):
        if self.work_bound < 1:
            raise UsageError("work bound must be at least 1")
        if self.parallelism < 1:
            raise UsageError("parallelism must be at least 1")
        if self.output_format not in ("text", "json", "latex"):
            raise UsageError(f"unknown format {self.output_format!r}")

    @classmethod
    def resolve(cls, args, environ=os.environ) -> "RunConfig":
        """Flags override RATCAT_* environment variables, which override defaults."""

        def pick(flag, var, default, convert):
            if flag is not None:
                return flag
            if environ.get(var):
                try:
                    return convert(environ[var])
                except ValueError:
                    raise UsageError(f"{var}={environ[var]!r} is not valid") from None
            return default

        return cls(
            work_bound=pick(args.work_bound, "RATCAT_WORK_BOUND", DEFAULT_WORK_BOUND, int),
            output_format=args.format or "text",
            cache_dir=pick(args.cache_dir, "RATCAT_CACHE_DIR", None, Path),
            parallelism=pick(args.parallelism, "RATCAT_PARALLELISM", os.cpu_count() or 1, int),
        )


def _pair(m, n) -> CoprimePair:
    try:
        return CoprimePair(m, n)
    except (ValueError, OverflowError) as exc:
        raise UsageError(str(exc)) from None


def _path(pair: CoprimePair, text: str) -> DyckPath:
    try:
        shape = tuple(int(x) for x in text.split(","))
        return DyckPath(pair, shape)
    except ValueError as exc:
        raise UsageError(f"invalid path {text!r}: {exc}") from None


def _bound(pair: CoprimePair, cfg: RunConfig, work: int | None = None):
    work = pair.catalan_number if work is None else work
    if work > cfg.work_bound:
        raise WorkBoundExceeded(
            f"({pair}) needs {work} paths, above the work bound {cfg.work_bound}"
        )


def _emit(out, obj):
    out.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def cmd_enumerate(args, cfg, out, err):
    pair = _pair(args.m, args.n)
    if args.limit is not None and args.limit < 0:
        raise UsageError("--limit must be non-negative")
    total = pair.catalan_number
    shown = total if args.limit is None else min(args.limit, total)
    _bound(pair, cfg, shown)
    rows = []
    for i, path in enumerate(enumerate_paths(pair)):
        if i == shown:
            break
        area, dinv, skips = (len(s) for s in cell_partition(path))
        rows.append((path, area, dinv, skips))
    if cfg.output_format == "json":
        _emit(out, {
            "m": pair.m, "n": pair.n, "total": total, "shown": shown,
            "paths": [
                {"path": format_path(p), "area": a, "dinv": d, "skips": s}
                for p, a, d, s in rows
            ],
        })
    else:
        for p, a, d, s in rows:
            out.write(f"{format_path(p)} area={a} dinv={d} skips={s}\n")
    if shown < total:
        err.write(f"# truncated: showed {shown} of {total} paths\n")
    return EXIT_OK


def _cells_text(cells) -> str:
    return " ".join(f"({u},{v})" for u, v in sorted(cells, key=lambda c: (-c.v, c.u))) or "-"


def cmd_stats(args, cfg, out, err):
    pair = _pair(args.m, args.n)
    path = _path(pair, args.path)
    part = cell_partition(path)
    area, dinv, skips = (len(s) for s in part)
    if cfg.output_format == "json":
        obj = {"path": format_path(path), "area": area, "dinv": dinv, "skips": skips}
        if args.cells:
            obj["cells"] = {
                name: sorted([list(c) for c in cells], key=lambda c: (-c[1], c[0]))
                for name, cells in zip(("area", "dinv", "skips"), part)
            }
        _emit(out, obj)
    else:
        out.write(f"area={area} dinv={dinv} skips={skips}\n")
        if args.cells:
            for name, cells in zip(("area", "dinv", "skips"), part):
                out.write(f"{name}_cells: {_cells_text(cells)}\n")
    return EXIT_OK


def _parse_vars(specs) -> set:
    names = set()
    for spec in specs or ():
        name, _, value = spec.partition("=")
        if name not in ("b", "q", "t") or value != "1":
            raise UsageError(f"--var expects b=1, q=1 or t=1, got {spec!r}")
        names.add(name)
    return names


def cached_genfun(pair: CoprimePair, cfg: RunConfig) -> BqtPolynomial:
    if cfg.cache_dir is None:
        return genfun_parallel(pair, cfg.parallelism)
    path = Path(cfg.cache_dir) / f"W_{pair.m}_{pair.n}.json"
    if path.exists():
        return BqtPolynomial.from_json(path.read_text())
    poly = genfun_parallel(pair, cfg.parallelism)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(poly.to_json() + "\n")
    return poly


def cmd_genfun(args, cfg, out, err):
    pair = _pair(args.m, args.n)
    subs = _parse_vars(args.var)
    _bound(pair, cfg)
    if subs == {"b"}:
        poly = catalan_C(pair)
    else:
        poly = cached_genfun(pair, cfg)
        for name in sorted(subs):
            poly = poly.substitute(name)
    if cfg.output_format == "json":
        _emit(out, poly.to_json_obj())
    elif cfg.output_format == "latex":
        out.write(poly.to_latex() + "\n")
    else:
        out.write(poly.to_text() + "\n")
    return EXIT_OK


def cmd_verify(args, cfg, out, err):
    pair = _pair(args.m, args.n)
    names = CHECKS if args.checks == "all" else [c.strip() for c in args.checks.split(",")]
    unknown = sorted(set(names) - set(CHECKS))
    if unknown:
        raise UsageError(f"unknown check(s): {', '.join(unknown)}; choose from {', '.join(CHECKS)}")
    _bound(pair, cfg)
    results = run_checks(pair, names, cfg.parallelism)
    if cfg.output_format == "json":
        _emit(out, [r.to_obj() for r in results])
    else:
        for r in results:
            out.write(r.line() + "\n")
    ok = all(r.passed for r in results if r.binding)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_triple(args, cfg, out, err):
    try:
        triple = DyckTriple(args.a, args.d, args.s)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    word = construct_word(triple)
    path = to_path(word)
    if cfg.output_format == "json":
        _emit(out, {
            "triple": serialize.to_obj(triple),
            "word": serialize.to_obj(word),
            "path": serialize.to_obj(path),
        })
    else:
        out.write(f"word: {format_word(word)}\n")
        out.write(f"path: {format_path(path)}\n")
    return EXIT_OK


def cmd_swap(args, cfg, out, err):
    pair = _pair(args.m, args.n)
    if pair.m != 3:
        raise UsageError("swap is defined for m = 3 only")
    path = _path(pair, args.path)
    image = swap_bijection(path)
    before, after = triple_of_path(path), triple_of_path(image)
    if cfg.output_format == "json":
        _emit(out, {
            "path": serialize.to_obj(path),
            "triple": serialize.to_obj(before),
            "image": serialize.to_obj(image),
            "image_triple": serialize.to_obj(after),
        })
    else:
        out.write(f"path:  {format_path(path)} triple={before}\n")
        out.write(f"image: {format_path(image)} triple={after}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"))
    common.add_argument("--work-bound", type=int, help="maximum number of paths to enumerate")
    common.add_argument("--cache-dir", type=Path, help="directory for memoized W polynomials")
    common.add_argument("--parallelism", type=int, help="worker processes")

    parser = argparse.ArgumentParser(
        prog="ratcat", description="Rational Dyck paths, rank words and q,t-Catalan polynomials."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list every (m,n)-Dyck path")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("stats", parents=[common], help="area, dinv and skips of one path")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--path", required=True, help="row lengths above the path, top row first")
    p.add_argument("--cells", action="store_true")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("genfun", parents=[common], help="W_{m,n}(b,q,t) or C_{m,n}(q,t)")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--var", action="append", help="substitute a variable by 1, e.g. b=1")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("verify", parents=[common], help="run the exhaustive checks")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--checks", default="all", help=f"'all' or a comma list of: {', '.join(CHECKS)}")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("triple", parents=[common], help="rank word of a Dyck triple")
    p.add_argument("a", type=int)
    p.add_argument("d", type=int)
    p.add_argument("s", type=int)
    p.set_defaults(func=cmd_triple)

    p = sub.add_parser("swap", parents=[common], help="exchange area and dinv of a (3,n)-path")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--path", required=True)
    p.set_defaults(func=cmd_swap)
    return parser


def main(argv=None, out=None, err=None, environ=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig.resolve(args, os.environ if environ is None else environ)
        if cfg.output_format == "latex" and args.command != "genfun":
            raise UsageError("--format latex is only available for genfun")
        return args.func(args, cfg, out, err)
    except UsageError as exc:
        err.write(f"ratcat: error: {exc}\n")
        return EXIT_USAGE
    except WorkBoundExceeded as exc:
        err.write(f"ratcat: error: {exc}\n")
        return EXIT_BOUND


if __name__ == "__main__":
    sys.exit(main())
