"""Command-line surface: tree spectra, combines, oracles and union bounds.

Output formats: "poly" (human polynomial, the default), "json" (the stable
machine contract) and "csv".  JSON output is byte-identical across identical
invocations; wall-clock timing therefore goes to stderr.

Exit codes: 0 success, 2 usage or parse problems, 3 resource budget exceeded.
The default size guard (4096 coordinates) can be overridden per invocation
with --max-length or globally with the PLOTKIN_WEF_MAX_LENGTH environment
variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from .bounds import ChannelPoint, truncated_union_bound
from .codetree import (
    Branch,
    ensemble_wef,
    generator_matrix,
    rm_tree,
    tree_from_json_dict,
    tree_to_json_dict,
)
from .enumerator import WeightEnumerator, format_poly
from .errors import BudgetError
from .oracle import BinaryMatrix, ensemble_wef_exhaustive, ensemble_wef_montecarlo
from .plotkin import combine, combine_single_weight

DEFAULT_MAX_LENGTH = 4096
MAX_LENGTH_ENV = "PLOTKIN_WEF_MAX_LENGTH"


def _max_length_default() -> int:
    raw = os.environ.get(MAX_LENGTH_ENV)
    if raw is None:
        return DEFAULT_MAX_LENGTH
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{MAX_LENGTH_ENV}={raw!r} is not an integer") from None


def _check_length(length: int, max_length: int) -> None:
    if length > max_length:
        raise BudgetError(
            f"length {length} exceeds the guard ({max_length});"
            f" raise --max-length or {MAX_LENGTH_ENV} if intended"
        )


def _load_json(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _load_spectrum(path: str) -> WeightEnumerator:
    obj = _load_json(path)
    if isinstance(obj, dict) and "spectrum" in obj:
        obj = obj["spectrum"]
    return WeightEnumerator.from_json_dict(obj)


def _load_matrix(path: str) -> BinaryMatrix:
    return BinaryMatrix.from_json_dict(_load_json(path))


def _dimension_from_mass(mass: Fraction) -> int | None:
    if mass.denominator != 1:
        return None
    m = mass.numerator
    if m > 0 and m & (m - 1) == 0:
        return m.bit_length() - 1
    return None


def _spectrum_json(length: int, items) -> dict:
    return {"n": length, "coeffs": {str(w): str(c) for w, c in items if c}}


def _record(command: str, input_echo, length: int, dimension, spectrum_items, partial):
    items = list(spectrum_items)
    min_pos = next((w for w, c in items if w > 0 and c), None)
    return {
        "command": command,
        "input": input_echo,
        "length": length,
        "dimension": dimension,
        "min_positive_weight": min_pos,
        "partial": partial,
        "spectrum": _spectrum_json(length, items),
    }


def _full_items(enum: WeightEnumerator):
    return list(enumerate(enum.coeffs))


def _partial_items(u_enum, v_enum, upto: int):
    return [(w, combine_single_weight(u_enum, v_enum, w)) for w in range(upto + 1)]


def _parse_rate(text: str) -> float:
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad rate {text!r}: use a float or p/q") from None


def _cmd_rm(args) -> tuple[dict, list[str]]:
    length = 1 << args.m
    _check_length(length, args.max_length)
    tree = rm_tree(args.r, args.m)
    echo = {"rm": {"r": args.r, "m": args.m}}
    if args.partial is not None:
        if not 0 <= args.partial <= length:
            raise ValueError(f"--partial {args.partial} outside 0..{length}")
        if isinstance(tree, Branch):
            items = _partial_items(
                ensemble_wef(tree.left), ensemble_wef(tree.right), args.partial
            )
        else:
            items = _full_items(ensemble_wef(tree))[: args.partial + 1]
        record = _record("rm", echo, length, tree.dimension, items, args.partial)
    else:
        record = _record(
            "rm", echo, length, tree.dimension, _full_items(ensemble_wef(tree)), None
        )
    return record, [_poly_line(record)]


def _cmd_tree(args) -> tuple[dict, list[str]]:
    tree = tree_from_json_dict(_load_json(args.tree_file))
    _check_length(tree.length, args.max_length)
    enum = ensemble_wef(tree)
    record = _record(
        "tree",
        tree_to_json_dict(tree),
        tree.length,
        tree.dimension,
        _full_items(enum),
        None,
    )
    lines = [_poly_line(record)]
    if args.emit_generator:
        gen = generator_matrix(tree)
        record["generator"] = gen.to_json_dict()
        lines.extend(gen.to_strings())
    return record, lines


def _cmd_combine(args) -> tuple[dict, list[str]]:
    u_enum = _load_spectrum(args.u_file)
    v_enum = _load_spectrum(args.v_file)
    if u_enum.length != v_enum.length:
        raise ValueError(
            f"component lengths differ: {u_enum.length} vs {v_enum.length}"
        )
    length = 2 * u_enum.length
    _check_length(length, args.max_length)
    echo = {"u": u_enum.to_json_dict(), "v": v_enum.to_json_dict()}
    if args.partial is not None:
        if not 0 <= args.partial <= length:
            raise ValueError(f"--partial {args.partial} outside 0..{length}")
        items = _partial_items(u_enum, v_enum, args.partial)
        record = _record("combine", echo, length, None, items, args.partial)
    else:
        out = combine(u_enum, v_enum)
        record = _record(
            "combine",
            echo,
            length,
            _dimension_from_mass(out.total_mass()),
            _full_items(out),
            None,
        )
    return record, [_poly_line(record)]


def _cmd_oracle(args) -> tuple[dict, list[str]]:
    G0 = _load_matrix(args.g0_file)
    G1 = _load_matrix(args.g1_file)
    echo = {"g0": G0.to_json_dict(), "g1": G1.to_json_dict(), "mode": args.mode}
    if args.mode == "exhaustive":
        enum = ensemble_wef_exhaustive(G0, G1)
        record = _record(
            "oracle",
            echo,
            enum.length,
            _dimension_from_mass(enum.total_mass()),
            _full_items(enum),
            None,
        )
        return record, [_poly_line(record)]
    echo["samples"] = args.samples
    echo["seed"] = args.seed
    enum, stderrs = ensemble_wef_montecarlo(G0, G1, args.samples, args.seed)
    record = _record(
        "oracle",
        echo,
        enum.length,
        _dimension_from_mass(enum.total_mass()),
        _full_items(enum),
        None,
    )
    record["stderr"] = {
        str(w): stderrs[w] for w, c in enumerate(enum.coeffs) if c or stderrs[w]
    }
    return record, [_poly_line(record)]


def _cmd_bound(args) -> tuple[dict, list[str]]:
    enum = _load_spectrum(args.spectrum_file)
    channel = ChannelPoint(rate=_parse_rate(args.rate), ebn0_db=args.ebn0)
    value = truncated_union_bound(enum, args.truncate, channel)
    record = _record(
        "bound",
        {"spectrum": enum.to_json_dict()},
        enum.length,
        _dimension_from_mass(enum.total_mass()),
        _full_items(enum),
        None,
    )
    record["bound"] = {
        "rate": channel.rate,
        "ebn0_db": channel.ebn0_db,
        "truncate": args.truncate,
        "value": value,
    }
    return record, [repr(value)]


def _poly_line(record: dict) -> str:
    n = record["spectrum"]["n"]
    coeffs = record["spectrum"]["coeffs"]
    enum = WeightEnumerator.from_json_dict({"n": n, "coeffs": coeffs})
    return format_poly(enum)


def _print_csv(record: dict, out) -> None:
    stderrs = record.get("stderr")
    header = "weight,coefficient,stderr" if stderrs is not None else "weight,coefficient"
    print(header, file=out)
    coeffs = record["spectrum"]["coeffs"]
    for w in sorted(int(k) for k in coeffs):
        if stderrs is not None:
            print(f"{w},{coeffs[str(w)]},{stderrs.get(str(w), 0.0)!r}", file=out)
        else:
            print(f"{w},{coeffs[str(w)]}", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plotkin-wef",
        description="Exact ensemble weight enumerators for Plotkin-style constructions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_max_length=True):
        p.add_argument(
            "--format",
            choices=("poly", "json", "csv"),
            default="poly",
            help="output format (default: poly)",
        )
        if with_max_length:
            p.add_argument(
                "--max-length",
                type=int,
                default=None,
                help=f"size guard (default {DEFAULT_MAX_LENGTH}, env {MAX_LENGTH_ENV})",
            )

    p_rm = sub.add_parser("rm", help="spectrum of the order-r depth-m tree ensemble")
    p_rm.add_argument("r", type=int)
    p_rm.add_argument("m", type=int)
    p_rm.add_argument("--partial", type=int, default=None, metavar="W",
                      help="emit only weights <= W")
    add_common(p_rm)
    p_rm.set_defaults(handler=_cmd_rm)

    p_tree = sub.add_parser("tree", help="spectrum of a tree given as JSON")
    p_tree.add_argument("tree_file")
    p_tree.add_argument("--emit-generator", action="store_true",
                        help="also emit the identity-permutation generator matrix")
    add_common(p_tree)
    p_tree.set_defaults(handler=_cmd_tree)

    p_comb = sub.add_parser("combine", help="combine two component spectra")
    p_comb.add_argument("u_file", help="spectrum JSON of the code supplying u")
    p_comb.add_argument("v_file", help="spectrum JSON of the code supplying v")
    p_comb.add_argument("--partial", type=int, default=None, metavar="W",
                        help="emit only weights <= W")
    add_common(p_comb)
    p_comb.set_defaults(handler=_cmd_combine)

    p_or = sub.add_parser("oracle", help="ground-truth spectra from generator matrices")
    p_or.add_argument("g0_file", help="generator JSON of the code supplying u")
    p_or.add_argument("g1_file", help="generator JSON of the code supplying v")
    p_or.add_argument("--mode", choices=("exhaustive", "montecarlo"),
                      default="exhaustive")
    p_or.add_argument("--samples", type=int, default=1000)
    p_or.add_argument("--seed", type=int, default=0)
    add_common(p_or, with_max_length=False)
    p_or.set_defaults(handler=_cmd_oracle)

    p_bound = sub.add_parser("bound", help="truncated union bound from a spectrum")
    p_bound.add_argument("spectrum_file")
    p_bound.add_argument("--rate", required=True, help="code rate, float or p/q")
    p_bound.add_argument("--ebn0", type=float, required=True, help="Eb/N0 in dB")
    p_bound.add_argument("--truncate", type=int, required=True, metavar="W")
    add_common(p_bound, with_max_length=False)
    p_bound.set_defaults(handler=_cmd_bound)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        if getattr(args, "max_length", -1) is None:
            args.max_length = _max_length_default()
        record, human_lines = args.handler(args)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, TypeError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(record, indent=2))
    elif args.format == "csv":
        _print_csv(record, sys.stdout)
    else:
        for line in human_lines:
            print(line)
    print(f"# elapsed {time.perf_counter() - started:.6f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
