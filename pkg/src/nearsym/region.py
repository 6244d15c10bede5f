"""Voice-leading regions as labeled graphs, plus smooth-cycle enumeration.

An arthropod region collects the 2n perturbations of one symmetric cell; its
graph is complete bipartite across modalities (one relative edge and n-1
slide edges per chord).  A bridge region collects both modalities over one
cell of roots; its graph is complete bipartite minus the polar pairs, which
share no pitch classes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import cache
from typing import NamedTuple

from .chord import Chord, Genus, Modality, arthropod_collection
from .errors import InvariantViolationError
from .pcset import PcSet, set_class
from .symmetry import symmetric_partition
from .transform import (
    Kind,
    Transformation,
    bridge_members,
    catalog,
    transformation_between,
)
from .voiceleading import VoiceLeading, vl_relation


class RegionKind(Enum):
    ARTHROPOD = "arthropod"
    BRIDGE = "bridge"


ARTHROPOD_FAMILIES = {3: "waterbug", 4: "spider", 6: "centipede"}
BRIDGE_FAMILIES = {3: "hexatonic", 4: "octatonic", 6: "dodecatonic"}

# Compass aliases attach to the four hexatonic regions only, keyed by the
# region id (smallest root); C+ sits in the Northern region.
HEXATONIC_ALIASES = {0: "Northern", 1: "Eastern", 2: "Southern", 3: "Western"}


class Edge(NamedTuple):
    a: Chord
    b: Chord
    transformation: Transformation
    relation: VoiceLeading


@dataclass(frozen=True)
class Region:
    kind: RegionKind
    genus: Genus
    id: int
    members: tuple[Chord, ...]
    edges: tuple[Edge, ...]
    pitch_union: PcSet

    @property
    def family(self) -> str:
        families = ARTHROPOD_FAMILIES if self.kind is RegionKind.ARTHROPOD else BRIDGE_FAMILIES
        return families[self.genus.n]

    @property
    def alias(self) -> str | None:
        if self.kind is RegionKind.BRIDGE and self.genus.n == 3:
            return HEXATONIC_ALIASES[self.id]
        return None

    def __repr__(self) -> str:
        return f"Region({self.family}_{self.id}, {len(self.members)} chords)"


def _labeled_edges(members: tuple[Chord, ...], allowed: frozenset[Kind]) -> tuple[Edge, ...]:
    plus = [m for m in members if m.modality is Modality.PLUS]
    minus = [m for m in members if m.modality is Modality.MINUS]
    edges = []
    for x in plus:
        for y in minus:
            t = transformation_between(x, y)
            if t is None or t.kind not in allowed:
                if t is not None and t.kind is Kind.POLAR:
                    continue  # polar pairs carry no edge in bridge graphs
                raise InvariantViolationError(f"no catalog edge between {x} and {y}")
            relation = vl_relation(x, y)
            assert relation is not None
            a, b = sorted((x, y), key=lambda c: c.sort_key)
            edges.append(Edge(a, b, t, relation))
    edges.sort(key=lambda e: (e.a.sort_key, e.b.sort_key))
    return tuple(edges)


def _pitch_union(members: tuple[Chord, ...]) -> PcSet:
    union: frozenset[int] = frozenset()
    for m in members:
        union |= m.pitch_classes()
    return union


@cache
def arthropod_regions(g: Genus) -> tuple[Region, ...]:
    """One region per symmetric cell: 4 waterbugs, 3 spiders, or 2 centipedes."""
    allowed = frozenset({Kind.RELATIVE, Kind.ARTHROPOD_SLIDE})
    regions = []
    for cell in symmetric_partition(g.n):
        members = arthropod_collection(cell)
        regions.append(
            Region(
                RegionKind.ARTHROPOD,
                g,
                min(cell),
                members,
                _labeled_edges(members, allowed),
                _pitch_union(members),
            )
        )
    return tuple(regions)


@cache
def bridge_regions(g: Genus) -> tuple[Region, ...]:
    """One region per root cell: 4 hexatonic, 3 octatonic, or 2 dodecatonic."""
    allowed = frozenset({Kind.BRIDGE_SLIDE})
    regions = []
    for cell in symmetric_partition(g.n):
        members = bridge_members(Chord(g, min(cell), Modality.PLUS))
        regions.append(
            Region(
                RegionKind.BRIDGE,
                g,
                min(cell),
                members,
                _labeled_edges(members, allowed),
                _pitch_union(members),
            )
        )
    return tuple(regions)


def region_of(c: Chord, kind: RegionKind) -> Region:
    """The unique region of the given kind containing c."""
    regions = arthropod_regions(c.genus) if kind is RegionKind.ARTHROPOD else bridge_regions(c.genus)
    for r in regions:
        if c in r.members:
            return r
    raise InvariantViolationError(f"{c} missing from all {kind.value} regions")


def polar(c: Chord) -> Chord:
    """The opposite-modality member of c's bridge region disjoint from c."""
    r = region_of(c, RegionKind.BRIDGE)
    pcs = c.pitch_classes()
    hits = [
        m for m in r.members if m.modality is not c.modality and not (m.pitch_classes() & pcs)
    ]
    if len(hits) != 1:
        raise InvariantViolationError(f"{c} has {len(hits)} poles instead of one")
    return hits[0]


@dataclass(frozen=True)
class SmoothCycle:
    """A simple closed path in a bridge-region graph; the edge from the last
    chord back to the first is implied."""

    chords: tuple[Chord, ...]

    def __len__(self) -> int:
        return len(self.chords)

    @property
    def pitch_union(self) -> PcSet:
        return _pitch_union(self.chords)


def _canonical_cycle(cycle: tuple[Chord, ...]) -> tuple[Chord, ...]:
    # Rotate the smallest chord to the front in both directions, keep the
    # lexicographically smaller reading.
    variants = []
    for seq in (cycle, tuple(reversed(cycle))):
        i = min(range(len(seq)), key=lambda j: seq[j].sort_key)
        variants.append(seq[i:] + seq[:i])
    return min(variants, key=lambda v: tuple(c.sort_key for c in v))


def enumerate_smooth_cycles(
    region: Region, min_len: int = 4, max_len: int | None = None
) -> tuple[SmoothCycle, ...]:
    """All simple cycles of the region graph with length (chord count) in
    [min_len, max_len], deduplicated up to rotation and reflection.

    Defined for bridge regions only; the hexatonic graph has exactly one
    cycle, the hexagon itself.
    """
    if region.kind is not RegionKind.BRIDGE:
        raise ValueError("smooth cycles are defined only on bridge regions")
    size = len(region.members)
    if max_len is None:
        max_len = size
    if not 4 <= min_len <= max_len <= size:
        raise ValueError(f"cycle length bounds must satisfy 4 <= min <= max <= {size}")

    adjacency: dict[Chord, set[Chord]] = {m: set() for m in region.members}
    for e in region.edges:
        adjacency[e.a].add(e.b)
        adjacency[e.b].add(e.a)
    order = {m: i for i, m in enumerate(sorted(region.members, key=lambda c: c.sort_key))}

    found: set[tuple[Chord, ...]] = set()

    def extend(path: list[Chord], on_path: set[Chord]) -> None:
        start, last = path[0], path[-1]
        for nxt in adjacency[last]:
            if nxt == start and min_len <= len(path) <= max_len:
                found.add(_canonical_cycle(tuple(path)))
            elif nxt not in on_path and order[nxt] > order[start] and len(path) < max_len:
                path.append(nxt)
                on_path.add(nxt)
                extend(path, on_path)
                path.pop()
                on_path.remove(nxt)

    for s in region.members:
        extend([s], {s})

    cycles = [SmoothCycle(c) for c in found]
    cycles.sort(key=lambda cyc: (len(cyc), tuple(c.sort_key for c in cyc.chords)))
    return tuple(cycles)


class Complementarity(NamedTuple):
    pairs: tuple[tuple[str, str], ...]
    unpaired: tuple[str, ...]


def complementarity_pairs(g: Genus) -> Complementarity:
    """Arthropod slides matched to the bridge slide with held and moved
    parts swapped, e.g. S3(4) with S4 = S4(3)."""
    arthropod = [t for t in catalog(g) if t.kind is Kind.ARTHROPOD_SLIDE]
    bridge = [t for t in catalog(g) if t.kind is Kind.BRIDGE_SLIDE]
    by_parts = {(t.invariant, t.moved): t for t in bridge}
    pairs = []
    unpaired = []
    matched = set()
    for t in arthropod:
        partner = by_parts.get((t.moved, t.invariant))
        if partner is None:
            unpaired.append(t.token)
        else:
            pairs.append((t.token, partner.token))
            matched.add(partner.token)
    unpaired.extend(t.token for t in bridge if t.token not in matched)
    return Complementarity(tuple(pairs), tuple(unpaired))


def region_to_dict(region: Region, flats: bool = False) -> dict:
    """The documented JSON form of a region."""
    return {
        "kind": region.kind.value,
        "genus": region.genus.n,
        "id": str(region.id),
        "members": [m.name(flats) for m in region.members],
        "pitch_union": sorted(region.pitch_union),
        "set_class": set_class(region.pitch_union).forte_name,
        "edges": [
            {
                "a": e.a.name(flats),
                "b": e.b.name(flats),
                "transform": e.transformation.token,
                "relation": [e.relation.semitones, e.relation.whole_tones],
            }
            for e in region.edges
        ],
    }


def export_graph(region: Region, format: str = "dot", flats: bool = False) -> str:
    """Serialize a region graph as DOT or as the documented JSON schema."""
    if format == "json":
        return json.dumps(region_to_dict(region, flats), indent=2) + "\n"
    if format == "dot":
        lines = [f"graph {region.family}_{region.id} {{"]
        for m in region.members:
            lines.append(f'  "{m.name(flats)}";')
        for e in region.edges:
            label = f"{e.transformation.token} {e.relation.label}"
            lines.append(f'  "{e.a.name(flats)}" -- "{e.b.name(flats)}" [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown export format: {format!r} (expected 'dot' or 'json')")
