"""Command-line interface.

Commands::

    htschur index     --group sl2 --order 8 [--matter-file V.json] [--matter-sign plus|minus]
    htschur character --group sl2 --order 4 [--matter-file V.json]
    htschur junction  --group psl2 --l1 O --l2 Omega --order 8 [--half-shift]
    htschur verify    --suite all --order 8

``--order`` is the largest power of q^(1/2) kept.  Exit status is 0 on
success, 1 when a verification check fails and 2 for configuration errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from . import verify
from .indices import IntegralityError, TheorySpec, schur_index, vacuum_character
from .junctions import junction_index, parse_line
from .qlaurent import QSeries
from .rootdata import RepSpec, RootDatum, builtin_group, load_group
from .seriesio import series_to_dict, series_to_text

log = logging.getLogger("htschur")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    group: RootDatum | None
    matter: RepSpec | None
    order: int
    matter_sign: int
    half_shift: bool
    fmt: str
    out: Path | None
    l1: str = "O"
    l2: str = "O"
    suite: str = "all"


def _load_json(path: str, what: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read {what} {path!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{what} {path!r} is not valid JSON: {exc}") from None


def _resolve_group(args, default: str | None) -> RootDatum | None:
    if args.group and args.group_file:
        raise ConfigError("give --group or --group-file, not both")
    if args.group_file:
        try:
            return load_group(args.group_file)
        except OSError as exc:
            raise ConfigError(f"cannot read group file {args.group_file!r}: {exc.strerror}") from None
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"bad group file {args.group_file!r}: {exc}") from None
    name = args.group or default
    if name is None:
        return None
    try:
        return builtin_group(name)
    except KeyError as exc:
        raise ConfigError(exc.args[0]) from None


def _resolve_matter(path: str | None) -> RepSpec | None:
    if not path:
        return None
    data = _load_json(path, "matter file")
    if isinstance(data, list):
        data = {"weights": data}
    try:
        return RepSpec.from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad matter file {path!r}: {exc!r}") from None


def build_config(args) -> RunConfig:
    if getattr(args, "order", 0) < 0:
        raise ConfigError("--order must be nonnegative")
    command = args.command
    default = "psl2" if command == "junction" else None
    group = None if command == "verify" else _resolve_group(args, default)
    if command in ("index", "character") and group is None:
        raise ConfigError(f"{command} needs --group or --group-file")
    matter = _resolve_matter(getattr(args, "matter_file", None))
    if matter is not None and matter.dimension and matter.rank != group.rank:
        raise ConfigError(f"matter weights have rank {matter.rank} but {group.name} has rank {group.rank}")
    return RunConfig(
        command=command,
        group=group,
        matter=matter,
        order=args.order,
        matter_sign=1 if getattr(args, "matter_sign", "minus") == "plus" else -1,
        half_shift=getattr(args, "half_shift", False),
        fmt=args.format,
        out=Path(args.out) if args.out else None,
        l1=getattr(args, "l1", "O"),
        l2=getattr(args, "l2", "O"),
        suite=getattr(args, "suite", "all"),
    )


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.out is None:
        print(text)
    else:
        cfg.out.write_text(text + "\n")
        log.info("wrote %s", cfg.out)


def _emit_series(s: QSeries, cfg: RunConfig, meta: dict) -> None:
    if cfg.fmt == "json":
        _emit(json.dumps({**meta, "series": series_to_dict(s)}, indent=2), cfg)
    else:
        _emit(series_to_text(s), cfg)


def _theory(cfg: RunConfig) -> TheorySpec:
    return TheorySpec(cfg.group, cfg.matter, cfg.matter_sign)


def cmd_index(cfg: RunConfig) -> int:
    s = schur_index(_theory(cfg), cfg.order)
    meta = {"command": "index", "group": cfg.group.name, "order": cfg.order}
    if cfg.matter is not None:
        meta["matter_sign"] = cfg.matter_sign
    _emit_series(s, cfg, meta)
    return EXIT_OK


def cmd_character(cfg: RunConfig) -> int:
    s = vacuum_character(_theory(cfg), cfg.order)
    _emit_series(s, cfg, {"command": "character", "group": cfg.group.name, "order": cfg.order})
    return EXIT_OK


def cmd_junction(cfg: RunConfig) -> int:
    try:
        l1, l2 = parse_line(cfg.l1), parse_line(cfg.l2)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    s = junction_index(l1, l2, cfg.order, half_shift=cfg.half_shift, group=cfg.group)
    meta = {"command": "junction", "group": cfg.group.name, "l1": str(l1), "l2": str(l2),
            "order": cfg.order, "half_shift": cfg.half_shift}
    _emit_series(s, cfg, meta)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    checks = verify.run_suite(cfg.suite, cfg.order)
    if cfg.fmt == "json":
        _emit(json.dumps(verify.report_dict(cfg.suite, cfg.order, checks), indent=2), cfg)
    else:
        _emit(verify.report_text(checks), cfg)
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAILED


COMMANDS = {"index": cmd_index, "character": cmd_character, "junction": cmd_junction, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="htschur", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=8, help="largest power of q^(1/2) kept (default 8)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")

    theory = argparse.ArgumentParser(add_help=False)
    theory.add_argument("--group", help="built-in group: trivial, u1, sl2, psl2")
    theory.add_argument("--group-file", help="JSON root datum {name, rank, roots, weyl_order}")

    matter = argparse.ArgumentParser(add_help=False)
    matter.add_argument("--matter-file", help='JSON {"weights": [[w], {"weight": [w], "multiplicity": m}, ...]}')
    matter.add_argument("--matter-sign", choices=("plus", "minus"), default="minus",
                        help="sign c in the hypermultiplet factor 1/(c q^(1/2) s^b; q) (default minus)")

    sub.add_parser("index", parents=[common, theory, matter], help="Schur index")
    sub.add_parser("character", parents=[common, theory, matter], help="character before Weyl integration")
    j = sub.add_parser("junction", parents=[common, theory], help="junction index between two lines")
    j.add_argument("--l1", default="O", help="1, O or Omega (default O)")
    j.add_argument("--l2", default="O", help="1, O or Omega (default O)")
    j.add_argument("--half-shift", action="store_true", help="multiply by q^(1/2)")
    v = sub.add_parser("verify", parents=[common], help="run the cross-check suites")
    v.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(name)s: %(message)s")
    try:
        cfg = build_config(args)
        return COMMANDS[cfg.command](cfg)
    except ConfigError as exc:
        print(f"htschur: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except IntegralityError as exc:
        print(f"htschur: integrality check failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except ValueError as exc:
        # inadmissible line pairs and rank mismatches surface here
        print(f"htschur: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
