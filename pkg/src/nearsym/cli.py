"""Command-line interface.

Subcommands: partitions, apply, relate, region, cycles, export, verify.
Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 domain error (wrong genus, invalid chord for the genus, and similar).
"""

from __future__ import annotations

import argparse
import json
import sys

from .chord import NOTE_NAMES_FLAT, NOTE_NAMES_SHARP, genus, parse_chord
from .errors import (
    ChordParseError,
    GenusMismatchError,
    NotAMemberError,
    TokenParseError,
    UnsupportedCardinalityError,
)
from .pcset import set_class
from .region import (
    RegionKind,
    arthropod_regions,
    bridge_regions,
    enumerate_smooth_cycles,
    export_graph,
    region_of,
    region_to_dict,
)
from .symmetry import symmetric_partition
from .transform import apply as apply_transformation
from .transform import transformation, transformation_between
from .verify import run_checks
from .voiceleading import vl_relation

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def _note_names(args) -> tuple[str, ...]:
    return NOTE_NAMES_FLAT if args.accidentals == "flats" else NOTE_NAMES_SHARP


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def cmd_partitions(args) -> int:
    cells = symmetric_partition(args.n)
    if args.format == "json":
        _emit_json([sorted(cell) for cell in cells])
        return EXIT_OK
    names = _note_names(args)
    for cell in cells:
        print("{" + ", ".join(names[p] for p in sorted(cell)) + "}")
    return EXIT_OK


def _parse_sequence(text: str, g) -> list:
    return [transformation(token, g) for token in text.split(",") if token.strip()]


def cmd_apply(args) -> int:
    g = genus(args.genus)
    chord = parse_chord(args.chord, g)
    sequence = _parse_sequence(args.seq, g)
    flats = args.accidentals == "flats"
    steps = []
    current = chord
    for t in sequence:
        nxt = apply_transformation(t, current)
        steps.append((current, t, nxt, vl_relation(current, nxt)))
        current = nxt
    if args.format == "json":
        _emit_json(
            {
                "start": chord.name(flats),
                "steps": [
                    {
                        "transform": t.token,
                        "result": nxt.name(flats),
                        "relation": list(rel) if rel else None,
                    }
                    for _, t, nxt, rel in steps
                ],
                "result": current.name(flats),
            }
        )
        return EXIT_OK
    if args.trace:
        for prev, t, nxt, rel in steps:
            label = rel.label if rel else "none"
            print(f"{prev.name(flats)} -{t.token}-> {nxt.name(flats)} [{label}]")
    print(current.name(flats))
    return EXIT_OK


def cmd_relate(args) -> int:
    g = genus(args.genus)
    a = parse_chord(args.chord_a, g)
    b = parse_chord(args.chord_b, g)
    flats = args.accidentals == "flats"
    relation = vl_relation(a, b)
    disjoint = not (a.pitch_classes() & b.pitch_classes())
    t = transformation_between(a, b)
    if args.format == "json":
        _emit_json(
            {
                "a": a.name(flats),
                "b": b.name(flats),
                "relation": list(relation) if relation else None,
                "disjoint": disjoint,
                "transform": t.token if t else None,
            }
        )
        return EXIT_OK
    relation_text = "disjoint" if disjoint else (relation.label if relation else "none")
    connection = "identity" if a == b else (t.token if t else "none")
    print(f"{relation_text} {connection}")
    return EXIT_OK


def _selected_regions(args, g):
    kind = RegionKind(args.kind)
    if args.containing:
        chord = parse_chord(args.containing, g)
        return kind, [region_of(chord, kind)]
    regions = arthropod_regions(g) if kind is RegionKind.ARTHROPOD else bridge_regions(g)
    return kind, list(regions)


def _region_header(region, flats: bool) -> str:
    alias = f" ({region.alias})" if region.alias else ""
    members = " ".join(m.name(flats) for m in region.members)
    return f"{region.family} {region.id}{alias}: {members}"


def cmd_region(args) -> int:
    g = genus(args.genus)
    _, regions = _selected_regions(args, g)
    flats = args.accidentals == "flats"
    if args.format == "json":
        _emit_json([region_to_dict(r, flats) for r in regions])
        return EXIT_OK
    for r in regions:
        print(_region_header(r, flats))
    return EXIT_OK


def _format_union(union, names) -> str:
    sc = set_class(union)
    label = sc.forte_name or "(" + ",".join(str(v) for v in sc.prime_form) + ")"
    return " ".join(names[p] for p in sorted(union)) + f" = {label}"


def cmd_cycles(args) -> int:
    g = genus(args.genus)
    chord = parse_chord(args.containing, g)
    region = region_of(chord, RegionKind.BRIDGE)
    max_len = args.max_len if args.max_len is not None else 2 * g.n
    if not 4 <= args.min_len <= max_len <= 2 * g.n:
        return _usage_error(
            f"cycle lengths must satisfy 4 <= min <= max <= {2 * g.n}"
        )
    cycles = enumerate_smooth_cycles(region, args.min_len, max_len)
    flats = args.accidentals == "flats"
    names = _note_names(args)
    if args.format == "json":
        _emit_json(
            {
                "kind": "bridge",
                "genus": g.n,
                "id": str(region.id),
                "min_len": args.min_len,
                "max_len": max_len,
                "cycles": [
                    {
                        "chords": [c.name(flats) for c in cyc.chords],
                        "length": len(cyc),
                        "pitch_union": sorted(cyc.pitch_union),
                        "set_class": set_class(cyc.pitch_union).forte_name,
                    }
                    for cyc in cycles
                ],
                "count": len(cycles),
            }
        )
        return EXIT_OK
    for cyc in cycles:
        chords = " ".join(c.name(flats) for c in cyc.chords)
        print(f"{chords} | union {_format_union(cyc.pitch_union, names)}")
    print(f"total: {len(cycles)}")
    return EXIT_OK


def cmd_export(args) -> int:
    if args.format not in ("dot", "json"):
        return _usage_error(f"export format must be 'dot' or 'json', not {args.format!r}")
    g = genus(args.genus)
    _, regions = _selected_regions(args, g)
    flats = args.accidentals == "flats"
    sys.stdout.write("".join(export_graph(r, args.format, flats) for r in regions))
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_checks(args.genus)
    failures = [r for r in results if not r.passed]
    if args.format == "json":
        _emit_json(
            {
                "checks": [
                    {
                        "name": r.name,
                        "genus": r.genus,
                        "passed": r.passed,
                        "detail": r.detail,
                    }
                    for r in results
                ],
                "total": len(results),
                "failed": len(failures),
                "passed": not failures,
            }
        )
    else:
        for r in results:
            print(r.line())
        print(f"{len(results)} checks, {len(results) - len(failures)} passed, {len(failures)} failed")
    return EXIT_VERIFY_FAILED if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=["text", "json", "dot"], default="text")
    output.add_argument("--accidentals", choices=["sharps", "flats"], default="sharps")

    with_genus = argparse.ArgumentParser(add_help=False)
    with_genus.add_argument("--genus", type=int, choices=[3, 4, 6], required=True)

    parser = argparse.ArgumentParser(
        prog="nearsym",
        description="Parsimonious voice-leading for nearly symmetric chords",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", parents=[output], help="symmetric octave partitions")
    p.add_argument("--n", type=int, choices=[3, 4, 6], required=True)
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("apply", parents=[with_genus, output], help="apply a transformation sequence")
    p.add_argument("--chord", required=True)
    p.add_argument("--seq", required=True, help="comma-separated transformation tokens")
    p.add_argument("--trace", action="store_true", help="print each intermediate chord")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("relate", parents=[with_genus, output], help="voice-leading relation between two chords")
    p.add_argument("chord_a")
    p.add_argument("chord_b")
    p.set_defaults(func=cmd_relate)

    p = sub.add_parser("region", parents=[with_genus, output], help="list voice-leading regions")
    p.add_argument("--kind", choices=["arthropod", "bridge"], required=True)
    p.add_argument("--containing", help="restrict to the region containing this chord")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("cycles", parents=[with_genus, output], help="maximally smooth cycles of a bridge region")
    p.add_argument("--containing", required=True)
    p.add_argument("--min-len", type=int, default=4)
    p.add_argument("--max-len", type=int, default=None)
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("export", parents=[with_genus, output], help="export a region graph")
    p.add_argument("--kind", choices=["arthropod", "bridge"], required=True)
    p.add_argument("--containing", required=True)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify", parents=[output], help="run the structural verification suite")
    p.add_argument("--genus", type=int, choices=[3, 4, 6], default=None)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ChordParseError, TokenParseError) as exc:
        return _usage_error(str(exc))
    except (UnsupportedCardinalityError, GenusMismatchError, NotAMemberError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
