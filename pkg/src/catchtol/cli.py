"""Command-line front end.

One command per process; structures, representations, and certificates all
travel as JSON with exact fraction strings.  Exit codes: 0 for yes/ok, 1
for no/mismatch, 2 for unknown (budget exhausted), 3 for input errors.
Output is byte-stable for fixed inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .catalog import instance, list_instances
from .conditions import CONDITION_KINDS, check_condition, check_optimized
from .core import (
    BinaryMatrix,
    Digraph,
    InputError,
    Structure,
    augmented_adjacency,
    check_c1p_rows,
    structure_from_edgelist,
    structure_from_json,
    structure_to_edgelist,
)
from .rational import parse_rational
from .recognize import (
    SearchLimits,
    check_mptg_matrix_pattern,
    common_neighborhood_obstruction,
    exhaustive_recognize,
    find_ordering,
    is_proper_interval,
    tournament_block_form,
    validate_block_form,
)
from .reps import realize, representation_from_json, representation_to_json, verify
from .transforms import (
    cmptg_to_umtg,
    pcmptg_to_50mtg,
    pcmptg_to_ucmptg,
    umtg_to_cmptg,
)

EXIT_YES = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_INPUT = 3

CLASSIFY_CLASSES = (
    "mptg",
    "icd",
    "cmptg",
    "cicd",
    "fifty_mtg",
    "proper_interval",
    "tournament_icd",
)

CONVERT_TARGETS = ("unit_max_tolerance", "cmptg", "unit_cmptg", "fifty_mtg")


def _emit(data: dict) -> None:
    sys.stdout.write(json.dumps(data, indent=2, sort_keys=True) + "\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _read_json(path: str) -> dict:
    text = _read_text(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc


def _read_structure(path: str, directed: Optional[bool] = None) -> Structure:
    text = _read_text(path)
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
        return structure_from_json(data)
    return structure_from_edgelist(text, directed=bool(directed))


def _read_representation(path: str):
    data = _read_json(path)
    if isinstance(data, dict) and "representation" in data and "kind" not in data:
        data = data["representation"]
    return representation_from_json(data)


def _parse_ordering_flag(text: str):
    try:
        return tuple(int(part) for part in text.split(",") if part != "")
    except ValueError as exc:
        raise InputError(f"--ordering expects comma-separated integers, got {text!r}") from exc


def _parse_labels_flag(text: str):
    try:
        return tuple(parse_rational(part.strip()) for part in text.split(","))
    except ValueError as exc:
        raise InputError(f"--labels: {exc}") from exc


def _limits(args) -> SearchLimits:
    return SearchLimits(
        max_n=args.max_n, max_branches=args.max_branches, budget_ms=args.budget_ms
    )


def _verdict_exit(status: str) -> int:
    return {"yes": EXIT_YES, "no": EXIT_NO, "unknown": EXIT_UNKNOWN}[status]


def _cmd_classify(args) -> int:
    structure = _read_structure(args.input, directed=args.directed)
    cls = args.cls
    limits = _limits(args)
    if cls == "mptg":
        verdict = find_ordering(structure, "mptg_4point", limits)
    elif cls == "icd":
        verdict = find_ordering(structure, "icd_order", limits)
    elif cls == "proper_interval":
        verdict = is_proper_interval(structure)
    elif cls == "tournament_icd":
        verdict = tournament_block_form(structure, limits)
    else:
        verdict = exhaustive_recognize(structure, cls, limits)
    data = verdict.to_json()
    data["class"] = cls
    _emit(data)
    return _verdict_exit(verdict.status)


def _cmd_realize(args) -> int:
    rep = _read_representation(args.representation)
    structure = realize(rep, rule=args.rule)
    if args.format == "edgelist":
        sys.stdout.write(structure_to_edgelist(structure))
    else:
        _emit(structure.to_json())
    return EXIT_YES


def _cmd_verify(args) -> int:
    rep = _read_representation(args.representation)
    target = _read_structure(args.target, directed=args.directed)
    result = verify(rep, target, rule=args.rule)
    _emit(result.to_json())
    return EXIT_YES if result.ok else EXIT_NO


def _cmd_convert(args) -> int:
    rep = _read_representation(args.representation)
    target = args.to
    if target == "unit_max_tolerance":
        converted = cmptg_to_umtg(rep)
    elif target == "cmptg":
        converted = umtg_to_cmptg(rep)
    elif target == "unit_cmptg":
        converted = pcmptg_to_ucmptg(rep)
    else:
        converted = pcmptg_to_50mtg(rep)
    _emit(representation_to_json(converted))
    return EXIT_YES


def _cmd_check(args) -> int:
    structure = _read_structure(args.input, directed=args.directed)
    if args.obstruction:
        certificate = common_neighborhood_obstruction(structure)
        _emit(certificate.to_json())
        return EXIT_YES if certificate.variant == "none" else EXIT_NO
    if args.condition == "optimized":
        if args.labels is None:
            raise InputError("--condition optimized needs --labels")
        result = check_optimized(structure, _parse_labels_flag(args.labels))
    else:
        if args.condition is None:
            raise InputError("check needs --condition or --obstruction")
        if args.ordering is None:
            raise InputError(f"--condition {args.condition} needs --ordering")
        ordering = _parse_ordering_flag(args.ordering)
        result = check_condition(structure, ordering, args.condition)
    data = result.to_json()
    data["condition"] = args.condition
    _emit(data)
    return EXIT_YES if result.ok else EXIT_NO


def _cmd_catalog(args) -> int:
    if args.list:
        _emit({"instances": list_instances()})
        return EXIT_YES
    if not args.name:
        raise InputError("catalog needs an instance name or --list")
    alpha = parse_rational(args.alpha) if args.alpha is not None else None
    built = instance(args.name, n=args.n, alpha=alpha)
    _emit(built.to_json())
    return EXIT_YES


def _looks_like_matrix(text: str) -> bool:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    return bool(lines) and all(set(ln) <= {"0", "1"} for ln in lines)


def _cmd_matrix(args) -> int:
    text = _read_text(args.input)
    structure = None
    if _looks_like_matrix(text):
        matrix = BinaryMatrix.from_strings(text.splitlines())
        if args.ordering is not None:
            raise InputError("--ordering applies to structure input, not raw matrices")
    else:
        stripped = text.lstrip()
        if stripped.startswith("{"):
            structure = structure_from_json(json.loads(text))
        else:
            structure = structure_from_edgelist(text, directed=bool(args.directed))
        ordering = (
            _parse_ordering_flag(args.ordering)
            if args.ordering is not None
            else tuple(range(structure.n))
        )
        matrix = augmented_adjacency(structure, ordering)
    if args.check == "emit":
        _emit({"rows": matrix.to_strings()})
        return EXIT_YES
    if args.check == "c1p_rows":
        ok = check_c1p_rows(matrix)
        _emit({"check": "c1p_rows", "ok": ok, "rows": matrix.to_strings()})
        return EXIT_YES if ok else EXIT_NO
    if args.check == "mptg_pattern":
        ok = check_mptg_matrix_pattern(matrix)
        _emit({"check": "mptg_pattern", "ok": ok, "rows": matrix.to_strings()})
        return EXIT_YES if ok else EXIT_NO
    # block_form needs the digraph itself.
    if structure is None or not isinstance(structure, Digraph):
        raise InputError("--check block_form needs a digraph input")
    if args.split is not None:
        split = "pure_N" if args.split == "pure_N" else int(args.split)
        ordering = (
            _parse_ordering_flag(args.ordering)
            if args.ordering is not None
            else tuple(range(structure.n))
        )
        ok = validate_block_form(structure, ordering, split)
        _emit({"check": "block_form", "ok": ok, "ordering": list(ordering), "split": split})
        return EXIT_YES if ok else EXIT_NO
    verdict = tournament_block_form(structure, _limits(args))
    data = verdict.to_json()
    data["check"] = "block_form"
    _emit(data)
    return _verdict_exit(verdict.status)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catchtol",
        description=(
            "Exact toolkit for pointed/central/tolerance interval graph classes "
            "and interval catch digraphs"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_limit_flags(p):
        p.add_argument("--max-n", type=int, default=None, dest="max_n")
        p.add_argument("--max-branches", type=int, default=None, dest="max_branches")
        p.add_argument("--budget-ms", type=int, default=None, dest="budget_ms")

    p = sub.add_parser("classify", help="class membership verdict with certificate")
    p.add_argument("input", help="structure JSON/edge-list file, or - for stdin")
    p.add_argument("--class", dest="cls", required=True, choices=CLASSIFY_CLASSES)
    p.add_argument("--directed", action="store_true", help="treat edge-list input as arcs")
    add_limit_flags(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("realize", help="realize a representation into a graph/digraph")
    p.add_argument("representation", help="representation JSON file, or -")
    p.add_argument("--rule", choices=("mptg", "icd", "interval", "max_tolerance"), default=None)
    p.add_argument("--format", choices=("json", "edgelist"), default="json")
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("verify", help="compare a realization against a target structure")
    p.add_argument("representation", help="representation JSON file, or -")
    p.add_argument("target", help="target structure file, or -")
    p.add_argument("--rule", choices=("mptg", "icd", "interval", "max_tolerance"), default=None)
    p.add_argument("--directed", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("convert", help="transform a representation between kinds")
    p.add_argument("representation", help="representation JSON file, or -")
    p.add_argument("--to", required=True, choices=CONVERT_TARGETS)
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("check", help="ordering/labeling condition checks")
    p.add_argument("input", help="structure file, or -")
    p.add_argument(
        "--condition", choices=CONDITION_KINDS + ("optimized",), default=None
    )
    p.add_argument("--ordering", default=None, help="comma-separated positions, e.g. 0,2,1")
    p.add_argument("--labels", default=None, help="comma-separated rationals")
    p.add_argument("--obstruction", action="store_true", help="search non-adjacent pairs")
    p.add_argument("--directed", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("catalog", help="emit a named instance")
    p.add_argument("name", nargs="?", default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--alpha", default=None)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("matrix", help="augmented-matrix checks and block forms")
    p.add_argument("input", help="structure file, raw 0/1 matrix file, or -")
    p.add_argument(
        "--check",
        choices=("emit", "c1p_rows", "mptg_pattern", "block_form"),
        default="emit",
    )
    p.add_argument("--ordering", default=None)
    p.add_argument("--split", default=None, help="block split index or pure_N (validate)")
    p.add_argument("--directed", action="store_true")
    add_limit_flags(p)
    p.set_defaults(func=_cmd_matrix)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except InputError as exc:
        _emit({"error": str(exc)})
        return EXIT_INPUT
    except (ValueError, KeyError) as exc:
        _emit({"error": str(exc)})
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main())
