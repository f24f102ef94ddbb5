"""Batch command-line interface.

Subcommands: extquot, psi, norm-level, bc-gl1, bc-gl2, kmap, finiteness.
Every subcommand takes --format {text|json} and --output FILE; JSON
output carries a top-level schema_version, exact rationals are rendered
as "p/q" strings, and ordering is deterministic everywhere so output is
diffable.

Exit codes: 0 success, 2 invalid input, 3 out-of-scope mathematics,
4 finiteness window failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .extquot import extended_quotient
from .finiteness import WindowTooSmall, finiteness_certificate
from .gl1 import TemperedDualGL1, bc_gl1, circle_map
from .gl2 import (
    AdmissiblePair,
    EvenDegree,
    NotUnramified,
    OutOfScope,
    bc_gl2,
)
from .ktheory import CircleSpace, ProperCircleMap, induced_map
from .localfield import (
    ExtensionData,
    NotInPsiImage,
    RamificationFiltration,
    UnsupportedExtension,
    norm_level_image,
    phi,
    psi,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_OUT_OF_SCOPE = 3
EXIT_WINDOW = 4

SCOPE_ERRORS = (UnsupportedExtension, OutOfScope, NotUnramified, EvenDegree)


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def format_rational_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def _load_json_arg(value: str) -> dict:
    """Accept inline JSON or a path to a JSON file."""
    value = value.strip()
    if value.startswith("{"):
        return json.loads(value)
    return json.loads(Path(value).read_text())


def _parse_orders(text: str) -> RamificationFiltration:
    text = text.strip()
    if not text:
        return RamificationFiltration()
    return RamificationFiltration(int(part) for part in text.split(","))


def _emit(args, payload: dict, text: str) -> None:
    rendered = (
        json.dumps(payload, indent=2, sort_keys=False) if args.format == "json" else text
    )
    if args.output:
        Path(args.output).write_text(rendered + "\n")
    else:
        print(rendered)


# -- subcommand implementations -----------------------------------------


def cmd_extquot(args) -> int:
    eq = extended_quotient(args.n)
    lines = []
    for comp in eq.components:
        lines.append(f"{'+'.join(str(p) for p in comp.partition)}: {comp.describe()}")
    payload = {"schema_version": SCHEMA_VERSION, **eq.to_json()}
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_psi(args) -> int:
    filt = _parse_orders(args.orders)
    rows = []
    lines = [f"orders: {list(filt.orders)}", "x | psi(x) | phi(x)"]
    for text_x in args.x:
        x = parse_rational(text_x)
        psi_x, phi_x = psi(filt, x), phi(filt, x)
        rows.append(
            {
                "x": format_rational(x),
                "psi": format_rational(psi_x),
                "phi": format_rational(phi_x),
            }
        )
        lines.append(
            f"{format_rational_text(x)} | {format_rational_text(psi_x)} | {format_rational_text(phi_x)}"
        )
    payload = {
        "schema_version": SCHEMA_VERSION,
        "orders": list(filt.orders),
        "rows": rows,
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_norm_level(args) -> int:
    ext, filt = ExtensionData.from_json(_load_json_arg(args.extension))
    level_f = norm_level_image(ext, filt, args.level)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "level_E": args.level,
        "level_F": level_f,
    }
    _emit(args, payload, f"N(U_E^{args.level}) = U_F^{level_f}")
    return EXIT_OK


def cmd_bc_gl1(args) -> int:
    ext, filt = ExtensionData.from_json(_load_json_arg(args.extension))
    dual = TemperedDualGL1.enumerate(ext.base.q, args.max_conductor)
    bc = bc_gl1(ext, filt, dual)
    k0, k1 = induced_map(circle_map(bc))
    lines = [f"degree: {bc.f}"]
    lines.append(
        "conductor map: "
        + ", ".join(f"{c} -> {v}" for c, v in sorted(bc.conductor_map.items()))
    )
    for src, tgt, degree in bc.pairs:
        lines.append(f"({src.conductor},{src.index}) -> ({tgt.conductor},{tgt.index}) degree {degree}")
    payload = {
        "schema_version": SCHEMA_VERSION,
        "extension": ext.to_json(filt),
        "degree": bc.f,
        "dual": dual.to_json(),
        "map": bc.to_json(),
        "k0": k0.to_json(),
        "k1": k1.to_json(),
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_bc_gl2(args) -> int:
    pair = AdmissiblePair.from_json(_load_json_arg(args.pair))
    lift, _ = ExtensionData.from_json(_load_json_arg(args.lift))
    result = bc_gl2(pair, lift)
    source = CircleSpace((f"T(E/F,c{pair.xi.conductor}.{pair.xi.label.index})",))
    target = CircleSpace(
        (f"T(EL/L,c{result.conductor}.{result.target_pair.xi.label.index})",)
    )
    k0, k1 = induced_map(
        ProperCircleMap(
            source,
            target,
            ((source.components[0], target.components[0], result.degree),),
        )
    )
    lines = [
        f"degree: {result.degree}",
        f"conductor: {result.conductor}",
        f"EL/L: e={result.target_pair.quad.e} f={result.target_pair.quad.f}",
        f"EL/E: e={result.compositum.el_over_e.e} f={result.compositum.el_over_e.f}",
        f"torsion: {result.torsion}",
        f"K1 entry: {result.degree}",
        "K0 entry: 1",
    ]
    payload = {
        "schema_version": SCHEMA_VERSION,
        "result": result.to_json(),
        "k0": k0.to_json(),
        "k1": k1.to_json(),
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_kmap(args) -> int:
    desc = _load_json_arg(args.map)
    source = CircleSpace(tuple(desc["source"]))
    target = CircleSpace(tuple(desc["target"]))
    matches = tuple(
        (m["from"], m["to"], int(m["degree"])) for m in desc.get("matches", [])
    )
    k0, k1 = induced_map(ProperCircleMap(source, target, matches))
    lines = ["K0:"]
    lines += ["  " + " ".join(str(v) for v in row) for row in k0.entries]
    lines.append("K1:")
    lines += ["  " + " ".join(str(v) for v in row) for row in k1.entries]
    payload = {
        "schema_version": SCHEMA_VERSION,
        "k0": k0.to_json(),
        "k1": k1.to_json(),
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_finiteness(args) -> int:
    window = args.window if args.window is not None else 2 * args.f + 2
    cert = finiteness_certificate(args.r, args.f, window)
    verified = cert.verify() if args.verify else None
    summary = {
        "r": cert.r,
        "f": cert.f,
        "window": cert.window,
        "coefficient_window": cert.coefficient_window,
        "generator_count": len(cert.generators),
        "reduction_count": len(cert.reductions),
        "max_coefficient_exponent": cert.max_coefficient_exponent(),
    }
    if verified is not None:
        summary["verified"] = verified
    lines = [
        f"generators ({len(cert.generators)}): "
        + ", ".join(str(list(g)) for g in cert.generators),
        f"reductions: {len(cert.reductions)} monomial classes within window {cert.window}",
        f"max coefficient exponent: {summary['max_coefficient_exponent']}"
        f" (allowed {cert.coefficient_window})",
    ]
    if verified is not None:
        lines.append(f"verified by expansion: {verified}")
    payload = {
        "schema_version": SCHEMA_VERSION,
        "summary": summary,
        "certificate": cert.to_json(),
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


# -- parser -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    common.add_argument("--output", metavar="FILE", help="write output to FILE")

    parser = argparse.ArgumentParser(
        prog="basechange",
        description="Exact base-change computations: extended quotients, "
        "Hasse-Herbrand transitions, GL(1)/GL(2) circle maps, K-theory matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extquot", parents=[common], help="components of (C^x)^n // S_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_extquot)

    p = sub.add_parser("psi", parents=[common], help="transition function table")
    p.add_argument("--orders", default="", help="comma-separated ramification orders, e.g. 3,3")
    p.add_argument("--x", action="append", required=True, help="rational point, e.g. 7/2 (repeatable)")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("norm-level", parents=[common], help="norm transport of a unit-filtration level")
    p.add_argument("--extension", required=True, help="extension JSON (inline or file path)")
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(func=cmd_norm_level)

    p = sub.add_parser("bc-gl1", parents=[common], help="base change on the GL(1) tempered dual")
    p.add_argument("--extension", required=True, help="extension JSON (inline or file path)")
    p.add_argument("--max-conductor", type=int, default=4)
    p.set_defaults(func=cmd_bc_gl1)

    p = sub.add_parser("bc-gl2", parents=[common], help="base change of a cuspidal GL(2) circle")
    p.add_argument("--pair", required=True, help="admissible pair JSON (inline or file path)")
    p.add_argument("--lift", required=True, help="unramified extension JSON (inline or file path)")
    p.set_defaults(func=cmd_bc_gl2)

    p = sub.add_parser("kmap", parents=[common], help="induced K-theory matrices of a circle map")
    p.add_argument("--map", required=True, help="map JSON (inline or file path)")
    p.set_defaults(func=cmd_kmap)

    p = sub.add_parser("finiteness", parents=[common], help="finiteness certificate for the pullback")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--window", type=int, default=None, help="exponent window (default 2f+2)")
    p.add_argument("--verify", action="store_true", help="re-expand every reduction")
    p.set_defaults(func=cmd_finiteness)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WindowTooSmall as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WINDOW
    except SCOPE_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_OUT_OF_SCOPE
    except NotInPsiImage as exc:
        print(f"error: NotInPsiImage: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
