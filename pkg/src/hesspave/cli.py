"""Command-line front end: ``hesspave`` / ``python -m hesspave``.

Exit codes: 0 success, 2 bad input, 3 Weyl-group guard exceeded,
4 oracle discrepancy under ``--verify``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from hesspave.hess import HessenbergError, enumerate_all, parse_hessenberg
from hesspave.paving import ElementSpec, ElementSpecError, PavingReport, paving_report
from hesspave.rootsys import RootSystemError, build_root_system
from hesspave.weyl import WeylGuardError

EXIT_OK, EXIT_INPUT, EXIT_GUARD, EXIT_VERIFY = 0, 2, 3, 4

ELEMENTS = ("regular-nilpotent", "nilpotent-levi", "semisimple", "regular", "general")
CSV_HEADER = ("hessenberg", "word", "length", "y_word", "v_word", "nonempty", "dim")


class ConfigError(ValueError):
    pass


def parse_levi(text: str | None) -> frozenset:
    """``"1,3"`` -> {1, 3}; empty string or None -> empty set."""
    if text is None or not text.strip():
        return frozenset()
    try:
        return frozenset(int(x) for x in text.split(","))
    except ValueError:
        raise ConfigError(f"levi indices must be comma-separated integers, got {text!r}") from None


@dataclass(frozen=True)
class RunConfig:
    type_label: str
    rank: int
    element: str = "regular-nilpotent"
    levi: frozenset = frozenset()
    levi_n: frozenset = frozenset()
    hessenberg: str = "borel"
    output: str = "json"
    sweep: bool = False
    verify: bool = False
    max_weyl: int | None = None

    def spec(self) -> ElementSpec:
        if self.element not in ELEMENTS:
            raise ConfigError(f"unknown element {self.element!r}")
        kind = self.element.replace("-", "_")
        return ElementSpec(kind, self.levi, self.levi_n)

    def echo(self) -> dict:
        return {
            "type": self.type_label,
            "rank": self.rank,
            "element": self.element,
            "levi": sorted(self.levi),
            "levi_n": sorted(self.levi_n),
            "hessenberg": self.hessenberg,
        }


def report_dict(report: PavingReport, config: RunConfig, verified) -> dict:
    cells = [
        {
            "word": list(c.w.word),
            "length": c.w.length,
            "y_word": list(c.y.word),
            "v_word": list(c.v.word),
            "nonempty": c.nonempty,
            "dim": c.dimension,
        }
        for c in report.cells
    ]
    echo = config.echo()
    echo["psi"] = report.hessenberg.describe()
    return {
        "input": echo,
        "cells": cells,
        "betti": list(report.betti),
        "poincare": report.poincare_string(),
        "euler": report.euler,
        "verified": verified,
    }


def _word(word) -> str:
    return " ".join(str(i) for i in word)


def render_csv(reports: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rep in reports:
        psi = rep["input"]["psi"]
        for c in rep["cells"]:
            writer.writerow([psi, _word(c["word"]), c["length"], _word(c["y_word"]), _word(c["v_word"]),
                             str(c["nonempty"]).lower(), "" if c["dim"] is None else c["dim"]])
    return buf.getvalue()


def render_table(reports: list[dict]) -> str:
    lines = []
    for rep in reports:
        inp = rep["input"]
        lines.append(f"{inp['type']}{inp['rank']} {inp['element']} levi={inp['levi']} levi_n={inp['levi_n']} "
                     f"H={inp['psi']}")
        lines.append(f"{'w':<24} {'len':>3} {'y':<16} {'v':<24} {'dim':>4}")
        for c in rep["cells"]:
            dim = "-" if c["dim"] is None else str(c["dim"])
            lines.append(f"{_word(c['word']) or 'e':<24} {c['length']:>3} {_word(c['y_word']) or 'e':<16} "
                         f"{_word(c['v_word']) or 'e':<24} {dim:>4}")
        lines.append(f"betti {rep['betti']}  poincare {rep['poincare']}  euler {rep['euler']}"
                     + ("" if rep["verified"] is None else f"  verified {str(rep['verified']).lower()}"))
        lines.append("")
    return "\n".join(lines)


def run(config: RunConfig, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        rs = build_root_system(config.type_label, config.rank)
        spec = config.spec().validate(rs)
        spaces = enumerate_all(rs) if config.sweep else [parse_hessenberg(rs, config.hessenberg)]
        reports = []
        failed = False
        for H in spaces:
            rep = paving_report(rs, spec, H, max_order=config.max_weyl)
            verified = None
            if config.verify:
                from hesspave.oracle import verify_report

                bad = verify_report(rs, spec, H, rep)
                for d in bad:
                    print(f"discrepancy ({H.describe()}): {d}", file=err)
                verified = not bad
                failed = failed or bool(bad)
            reports.append(report_dict(rep, config, verified))
    except WeylGuardError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_GUARD
    except (ConfigError, ElementSpecError, HessenbergError, RootSystemError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT

    if config.output == "json":
        data = reports if config.sweep else reports[0]
        out.write(json.dumps(data, indent=2) + "\n")
    elif config.output == "csv":
        out.write(render_csv(reports))
    else:
        out.write(render_table(reports))
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hesspave", description="Affine-paving cell data for Hessenberg varieties.")
    p.add_argument("--type", required=True, dest="type_label", help="Cartan type A-G")
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--element", choices=ELEMENTS, default="regular-nilpotent")
    p.add_argument("--levi", default="", help="comma-separated simple indices (Bourbaki numbering)")
    p.add_argument("--levi-n", default="", help="Levi of m where N is regular (general elements)")
    p.add_argument("--hessenberg", default="borel",
                   help="full | borel | peterson | function:h1,...,hn | negroots:r1,r2,...")
    p.add_argument("--output", choices=("json", "csv", "table"), default="json")
    p.add_argument("--sweep-hessenberg", action="store_true", help="run every Hessenberg space (rank <= 4)")
    p.add_argument("--verify", action="store_true", help="cross-check every cell with the oracle")
    p.add_argument("--max-weyl", type=int, default=None, help="Weyl group size guard (default 10**6)")
    return p


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        type_label=args.type_label.upper(),
        rank=args.rank,
        element=args.element,
        levi=parse_levi(args.levi),
        levi_n=parse_levi(args.levi_n),
        hessenberg=args.hessenberg,
        output=args.output,
        sweep=args.sweep_hessenberg,
        verify=args.verify,
        max_weyl=args.max_weyl,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
