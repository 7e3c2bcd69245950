"""Command line front end: WoS exports in, Pajek networks and a report out.

Example::

    fracnet --input savedrecs.txt --level country --schemes eq2,eq3 --outdir out/
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, Sequence

from .counting import consistency_report, cooccurrence
from .entities import AggregationLevel, Level, Mode, count_unmapped_addresses
from .occurrence import build_occurrence
from .pajek import PajekWriteOptions, write_pajek
from .schemes import DiagonalPolicy, Scheme
from .wos import WosParseError, read_wos_file

log = logging.getLogger("fracnet")

LEVEL_PROMPT = "(a)author, (i)nstitution or (c)ountry"
OUTDIR_ENV = "FRACNET_OUTDIR"

FRACTIONAL = (Scheme.EQ1, Scheme.EQ2, Scheme.EQ3)
OUTPUT_NAMES = {
    Scheme.FULL: "mtrx.net",
    Scheme.EQ1: "fmtrx1.net",
    Scheme.EQ2: "fmtrx2.net",
    Scheme.EQ3: "fmtrx3.net",
}

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNREADABLE = 3
EXIT_MALFORMED = 4
EXIT_UNWRITABLE = 5


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    inputs: list[Path]
    level: Level
    mode: Mode = Mode.VALUED
    schemes: tuple[Scheme, ...] = FRACTIONAL
    outdir: Path = Path(".")
    diagonal: bool = True
    loops: bool = False
    decimals: int = 6
    quiet: bool = False
    jobs: int = 1

    @property
    def aggregation(self) -> AggregationLevel:
        return AggregationLevel(self.level, self.mode)


def parse_schemes(text: str) -> tuple[Scheme, ...]:
    """Fractional schemes named in a comma list, in canonical order.

    ``full`` is accepted but implied: the whole-number matrix is always
    written. A list naming no fractional scheme falls back to Eq3.
    """
    chosen = {Scheme.parse(part) for part in text.split(",") if part.strip()}
    picked = tuple(s for s in FRACTIONAL if s in chosen)
    return picked or (Scheme.EQ3,)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fracnet",
        description="Build full and fractionally counted co-occurrence networks "
                    "from Web of Science plain-text exports.",
    )
    p.add_argument("--input", "-i", nargs="+", required=True, metavar="PATH",
                   help="one or more WoS plain-text export files")
    p.add_argument("--level", "-l", metavar="LEVEL",
                   help="author|institution|country (or a|i|c)")
    p.add_argument("--binary", action="store_true",
                   help="count each institution/country once per publication")
    p.add_argument("--schemes", "--scheme", dest="schemes", metavar="LIST",
                   help="comma list from eq1,eq2,eq3 (default: all three)")
    p.add_argument("--outdir", "-o", metavar="DIR",
                   help=f"output directory (default: ${OUTDIR_ENV} or .)")
    p.add_argument("--loops", action="store_true",
                   help="write diagonal values as loops")
    p.add_argument("--no-diagonal", action="store_true",
                   help="drop self-relations from full, eq2 and eq3 matrices")
    p.add_argument("--decimals", type=int, default=6, metavar="N",
                   help="digits after the decimal point for weights (1-12)")
    p.add_argument("--jobs", "-j", type=int, default=1, metavar="N",
                   help="parse input files with N threads")
    p.add_argument("--quiet", "-q", action="store_true")
    return p


def load_config(
    args: Sequence[str],
    env: Optional[dict] = None,
    interactive: Optional[bool] = None,
    ask: Callable[[str], str] = input,
) -> RunConfig:
    """Turn command line arguments (and ``env``) into a :class:`RunConfig`.

    When no level is given and the session is interactive, the user is
    asked for one.

    Raises
    ------
    ConfigError
        Missing level in a non-interactive session, or an invalid value.
    SystemExit
        For unknown flags, via argparse.
    """
    env = os.environ if env is None else env
    ns = build_parser().parse_args(list(args))
    if interactive is None:
        interactive = sys.stdin.isatty()

    level_text = ns.level
    if level_text is None:
        if not interactive:
            raise ConfigError("no aggregation level given; pass --level author|institution|country")
        level_text = ask(f"Level of aggregation: {LEVEL_PROMPT}? ")
    try:
        level = Level.parse(level_text)
        schemes = parse_schemes(ns.schemes) if ns.schemes else FRACTIONAL
        opts_ok = PajekWriteOptions(weight_decimals=ns.decimals)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    if ns.jobs < 1:
        raise ConfigError("--jobs must be at least 1")

    outdir = ns.outdir or env.get(OUTDIR_ENV) or "."
    return RunConfig(
        inputs=[Path(p) for p in ns.input],
        level=level,
        mode=Mode.BINARY if ns.binary else Mode.VALUED,
        schemes=schemes,
        outdir=Path(outdir),
        diagonal=not ns.no_diagonal,
        loops=ns.loops,
        decimals=opts_ok.weight_decimals,
        quiet=ns.quiet,
        jobs=ns.jobs,
    )


class RunError(Exception):
    def __init__(self, message, status):
        super().__init__(message)
        self.status = status


def _read_all(paths, jobs):
    def read_one(path):
        try:
            return read_wos_file(path)
        except OSError as exc:
            raise RunError(f"cannot read input {path}: {exc.strerror or exc}", EXIT_UNREADABLE)
        except WosParseError as exc:
            raise RunError(f"malformed record in {path}: {exc}", EXIT_MALFORMED)

    if jobs > 1 and len(paths) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            per_file = list(pool.map(read_one, paths))
    else:
        per_file = [read_one(p) for p in paths]

    records = [rec for recs in per_file for rec in recs]
    for seq, rec in enumerate(records):
        rec.seq_id = seq
    return records


def execute(config: RunConfig) -> dict:
    """Run the pipeline and write the output files; returns the report."""
    records = _read_all(config.inputs, config.jobs)
    agg = config.aggregation
    catalog, A = build_occurrence(records, agg)

    warnings = []
    if not records:
        warnings.append("no records parsed; networks are empty")
    if A.empty_columns:
        warnings.append(f"{A.empty_columns} record(s) yield no {agg.level.value} entity")
    unmapped = count_unmapped_addresses(records, agg)
    if unmapped:
        warnings.append(f"{unmapped} address(es) could not be mapped to a {agg.level.value}")

    policy = DiagonalPolicy.INCLUDE if config.diagonal else DiagonalPolicy.EXCLUDE
    opts = PajekWriteOptions(weight_decimals=config.decimals, emit_loops=config.loops)

    outputs = {}
    schemes_report = {}
    for scheme in (Scheme.FULL,) + tuple(config.schemes):
        U = cooccurrence(A, scheme, policy)
        outputs[OUTPUT_NAMES[scheme]] = write_pajek(catalog, U, opts)
        rep = consistency_report(A, U)
        schemes_report[scheme.value] = rep.as_dict() | {
            "file": OUTPUT_NAMES[scheme],
            "diagonal": U.diagonal_policy.value,
            "edges": len(U.edges()),
        }

    try:
        config.outdir.mkdir(parents=True, exist_ok=True)
        for name, text in outputs.items():
            with open(config.outdir / name, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
    except OSError as exc:
        raise RunError(f"cannot write to output directory {config.outdir}: "
                       f"{exc.strerror or exc}", EXIT_UNWRITABLE)

    report = {
        "inputs": [str(p) for p in config.inputs],
        "level": agg.level.value,
        "mode": agg.mode.value,
        "records": len(records),
        "records_without_entities": A.empty_columns,
        "unmapped_addresses": unmapped,
        "entities": A.num_entities,
        "publications": A.num_publications,
        "schemes": schemes_report,
        "warnings": warnings,
    }
    try:
        with open(config.outdir / "report.json", "w", encoding="utf-8", newline="\n") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
    except OSError as exc:
        raise RunError(f"cannot write report: {exc.strerror or exc}", EXIT_UNWRITABLE)
    return report


def format_report(report: dict) -> str:
    lines = [
        f"records parsed:            {report['records']}",
        f"records without entities:  {report['records_without_entities']}",
        f"entities (E):              {report['entities']}",
        f"publications (N):          {report['publications']}",
        f"level / mode:              {report['level']} / {report['mode']}",
        "",
        f"{'scheme':<6} {'file':<11} {'total':>14} {'off-diag':>14}  consistency",
    ]
    for name, rep in report["schemes"].items():
        if rep["matches"] is None:
            check = "n/a"
        else:
            check = ("ok" if rep["matches"] else "MISMATCH") + \
                f" (expected {rep['analytic_expectation']:.6f})"
        lines.append(
            f"{name:<6} {rep['file']:<11} {rep['grand_total_with_diagonal']:>14.6f} "
            f"{rep['grand_total_off_diagonal']:>14.6f}  {check}"
        )
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def run(config: RunConfig, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        report = execute(config)
    except RunError as exc:
        print(f"fracnet: error: {exc}", file=sys.stderr)
        return exc.status
    if config.quiet:
        for w in report["warnings"]:
            print(f"warning: {w}", file=sys.stderr)
    else:
        print(format_report(report), file=out)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        config = load_config(argv)
    except ConfigError as exc:
        print(f"fracnet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EOFError:
        print("fracnet: error: no aggregation level given", file=sys.stderr)
        return EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
