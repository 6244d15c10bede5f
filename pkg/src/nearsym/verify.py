"""Executable verification of the library's structural claims.

Every check enumerates its claim directly over the full 24-chord universe of
a genus (or over all pitch-class sets, for the global checks) and reports
pass or fail.  The voice-leading and cycle checks compare the library
implementations to naive re-derivations kept deliberately separate from the
code paths they confirm.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import gcd

from .chord import (
    Chord,
    Modality,
    all_chords,
    genus,
    parent_symmetric_cell,
    perturb,
)
from .pcset import (
    CHROMATIC,
    FORTE_NAMES,
    interval_class_vector,
    invert,
    prime_form,
    set_class,
    transpose,
)
from .region import (
    Region,
    RegionKind,
    arthropod_regions,
    bridge_regions,
    complementarity_pairs,
    enumerate_smooth_cycles,
    polar,
    region_of,
)
from .symmetry import cycle_from_generator, generators_of_z12, symmetric_partition
from .transform import (
    Kind,
    TETRAD_CLASSES,
    apply,
    catalog,
    transformation_between,
)
from .voiceleading import VoiceLeading, vl_relation

# Simple-cycle counts of the bridge graphs, keyed by cycle length.  Fixed by
# an independent enumeration of complete-bipartite-minus-matching graphs run
# before this module existed; the n=4 figures equal the known cube-graph
# counts.
EXPECTED_CYCLE_COUNTS: dict[int, dict[int, int]] = {
    3: {6: 1},
    4: {4: 6, 6: 16, 8: 6},
    6: {4: 90, 6: 680, 8: 3330, 10: 7776, 12: 4800},
}

EXPECTED_REGION_COUNTS = {3: 4, 4: 3, 6: 2}
EXPECTED_BRIDGE_SET_CLASSES = {3: "6-20", 4: "8-28", 6: "12-1"}


@dataclass(frozen=True)
class CheckResult:
    name: str
    genus: int | None
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        scope = f" [n={self.genus}]" if self.genus is not None else ""
        suffix = f": {self.detail}" if (self.detail and not self.passed) else ""
        return f"{status} {self.name}{scope}{suffix}"


def _naive_vl(x: Chord, y: Chord) -> VoiceLeading | None:
    """Reference voice-leading search: scan every bijection outright."""
    src = sorted(x.pitch_classes())
    best = None
    for image in permutations(sorted(y.pitch_classes())):
        semis = wholes = 0
        for a, b in zip(src, image):
            d = (a - b) % 12
            d = min(d, 12 - d)
            if d > 2:
                break
            semis += d == 1
            wholes += d == 2
        else:
            key = (semis + 2 * wholes, wholes)
            if best is None or key < best[0]:
                best = (key, VoiceLeading(semis, wholes))
    return best[1] if best else None


def _adjacency(region: Region) -> dict[Chord, set[Chord]]:
    adj: dict[Chord, set[Chord]] = {m: set() for m in region.members}
    for e in region.edges:
        adj[e.a].add(e.b)
        adj[e.b].add(e.a)
    return adj


def _cube_adjacency() -> dict[tuple[int, int, int], set[tuple[int, int, int]]]:
    verts = [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]
    return {
        u: {v for v in verts if sum(x != y for x, y in zip(u, v)) == 1} for u in verts
    }


def find_isomorphism(adj_a: dict, adj_b: dict) -> dict | None:
    """Backtracking vertex matching between two small graphs."""
    nodes_a = sorted(adj_a, key=str)
    nodes_b = sorted(adj_b, key=str)
    if len(nodes_a) != len(nodes_b):
        return None
    if sorted(len(adj_a[v]) for v in nodes_a) != sorted(len(adj_b[v]) for v in nodes_b):
        return None

    mapping: dict = {}
    used: set = set()

    def extend(i: int) -> bool:
        if i == len(nodes_a):
            return True
        u = nodes_a[i]
        for v in nodes_b:
            if v in used or len(adj_b[v]) != len(adj_a[u]):
                continue
            if any((mapping[w] in adj_b[v]) != (w in adj_a[u]) for w in mapping):
                continue
            mapping[u] = v
            used.add(v)
            if extend(i + 1):
                return True
            del mapping[u]
            used.remove(v)
        return False

    return dict(mapping) if extend(0) else None


def _slide_partition_ok(t, c: Chord, result: Chord) -> bool:
    """Some partition of c matches t's held/moved parts and shifts onto result."""
    pcs = c.pitch_classes()
    target = result.pitch_classes()
    moved_size = {None: 1, "W": 4, "A": 4, "F": 4}.get(t.moved, 2)
    for moved in combinations(sorted(pcs), moved_size):
        held = pcs - set(moved)
        if isinstance(t.moved, int) and prime_form(moved) != (0, t.moved):
            continue
        if isinstance(t.moved, str) and prime_form(moved) != TETRAD_CLASSES[t.moved]:
            continue
        if isinstance(t.invariant, int) and prime_form(held) != (0, t.invariant):
            continue
        if isinstance(t.invariant, str) and prime_form(held) != TETRAD_CLASSES[t.invariant]:
            continue
        for delta in (1, -1):
            if held | {(p + delta) % 12 for p in moved} == target:
                return True
    return False


def _global_checks(results: list[CheckResult]) -> None:
    gens = generators_of_z12()
    ok = gens == {g for g in range(1, 12) if gcd(g, 12) == 1} == {1, 5, 7, 11}
    for g in gens:
        for start in range(12):
            ok = ok and sorted(cycle_from_generator(g, start)) == list(range(12))
    for g in (0, 2, 3, 4, 6, 8, 9, 10):
        try:
            cycle_from_generator(g)
            ok = False
        except ValueError:
            pass
    results.append(CheckResult("z12-generators", None, ok))

    # T_1 and I_0 generate every transposition/inversion, so invariance under
    # those two implies invariance under all 24 operations.
    ok = True
    for bits in range(1, 4096):
        s = frozenset(i for i in range(12) if bits >> i & 1)
        p = prime_form(s)
        ok = ok and p == prime_form(transpose(s, 1)) == prime_form(invert(s))
        ok = ok and interval_class_vector(s) == interval_class_vector(transpose(s, 1))
        ok = ok and interval_class_vector(s) == interval_class_vector(invert(s))
        if not ok:
            break
    results.append(CheckResult("prime-form-invariance", None, ok))

    ok = all(prime_form(p) == p for p in FORTE_NAMES)
    results.append(CheckResult("forte-table", None, ok))


def _genus_checks(n: int, results: list[CheckResult]) -> None:
    g = genus(n)
    chords = all_chords(g)
    cells = symmetric_partition(n)

    def add(name: str, passed: bool, detail: str = "") -> None:
        results.append(CheckResult(name, n, passed, detail))

    step = 12 // n
    ok = len(cells) == step
    union: frozenset[int] = frozenset()
    for cell in cells:
        ok = ok and len(cell) == n and transpose(cell, step) == cell
        ok = ok and not (union & cell)
        union |= cell
    add("partition-structure", ok and union == CHROMATIC)

    pcs_sets = {c.pitch_classes() for c in chords}
    ok = len(chords) == 24 and len(pcs_sets) == 24
    ok = ok and all(len(s) == n for s in pcs_sets)
    if n == 6:
        # exactly one semitone pair per chord, rooted on its lower note
        for c in chords:
            s = c.pitch_classes()
            dyads = [p for p in s if (p + 1) % 12 in s]
            ok = ok and dyads == [c.root]
    add("chord-universe", ok)

    ok = True
    for cell in cells:
        for note in cell:
            for direction in ("down", "up"):
                c = perturb(cell, note, direction)
                parent = parent_symmetric_cell(c)
                ok = ok and parent.cell == cell and parent.note == note
                ok = ok and parent.direction.value == direction
                ok = ok and (c.modality is Modality.PLUS) == (direction == "down")
    ok = ok and all(perturb(*parent_symmetric_cell(c)) == c for c in chords)
    add("perturbation-roundtrip", ok)

    ok = True
    for cell in cells:
        for note in cell:
            down = perturb(cell, note, "down").pitch_classes()
            up = perturb(cell, note, "up").pitch_classes()
            ok = ok and any(invert(down, axis) == up for axis in range(12))
    add("inversional-pairing", ok)

    add("vl-identity", all(vl_relation(c, c) == VoiceLeading(0, 0) for c in chords))
    add(
        "vl-symmetry",
        all(vl_relation(x, y) == vl_relation(y, x) for x in chords for y in chords),
    )
    add(
        "vl-oracle-agreement",
        all(vl_relation(x, y) == _naive_vl(x, y) for x in chords for y in chords),
    )

    for kind, builder in ((RegionKind.ARTHROPOD, arthropod_regions), (RegionKind.BRIDGE, bridge_regions)):
        regions = builder(g)
        ok = len(regions) == EXPECTED_REGION_COUNTS[n]
        seen: set[Chord] = set()
        for r in regions:
            ok = ok and len(r.members) == 2 * n and not (seen & set(r.members))
            ok = ok and sum(m.modality is Modality.PLUS for m in r.members) == n
            seen |= set(r.members)
        ok = ok and seen == set(chords)
        ok = ok and all(region_of(c, kind) in regions for c in chords)
        add(f"{kind.value}-partition", ok)

    ok = True
    for r in arthropod_regions(g):
        for c in r.members:
            others = [m for m in r.members if m.modality is not c.modality]
            relations = [vl_relation(c, m) for m in others]
            ok = ok and relations.count(VoiceLeading(0, 1)) == 1
            ok = ok and relations.count(VoiceLeading(2, 0)) == n - 1
    add("arthropod-counting", ok)

    ok = True
    for r in bridge_regions(g):
        for c in r.members:
            others = [m for m in r.members if m.modality is not c.modality]
            slides = sum(vl_relation(c, m) == VoiceLeading(n - 2, 0) for m in others)
            poles = sum(not (c.pitch_classes() & m.pitch_classes()) for m in others)
            ok = ok and slides == n - 1 and poles == 1
    add("bridge-counting", ok)

    cat = catalog(g)
    add("involution", all(apply(t, apply(t, c)) == c for t in cat for c in chords))
    add("modality-swap", all(apply(t, c).modality is not c.modality for t in cat for c in chords))

    ok = True
    for t in cat:
        for c in chords:
            image = apply(t, c)
            if t.kind is Kind.RELATIVE:
                ok = ok and vl_relation(c, image) == VoiceLeading(0, 1)
            elif t.kind is Kind.ARTHROPOD_SLIDE:
                ok = ok and vl_relation(c, image) == VoiceLeading(2, 0)
            elif t.kind is Kind.BRIDGE_SLIDE:
                ok = ok and vl_relation(c, image) == VoiceLeading(n - 2, 0)
            else:
                ok = ok and not (c.pitch_classes() & image.pitch_classes())
                if n == 3:
                    ok = ok and vl_relation(c, image) == VoiceLeading(3, 0)
    add("relation-conformance", ok)

    ok = True
    for t in cat:
        for c in chords:
            image = apply(t, c)
            if t.kind in (Kind.RELATIVE, Kind.ARTHROPOD_SLIDE):
                ok = ok and parent_symmetric_cell(image).cell == parent_symmetric_cell(c).cell
            else:
                ok = ok and (image.root - c.root) % step == 0
    add("region-closure", ok)

    ok = True
    for t in cat:
        if t.kind not in (Kind.ARTHROPOD_SLIDE, Kind.BRIDGE_SLIDE):
            continue
        for c in chords:
            ok = ok and _slide_partition_ok(t, c, apply(t, c))
    add("slide-labels", ok)

    ok = True
    for c in chords:
        images = [apply(t, c) for t in cat]
        expected = {
            m
            for r in (region_of(c, RegionKind.ARTHROPOD), region_of(c, RegionKind.BRIDGE))
            for m in r.members
            if m.modality is not c.modality
        }
        ok = ok and len(images) == len(set(images)) == len(expected) == 2 * n
        ok = ok and set(images) == expected
        ok = ok and all(transformation_between(c, img) == t for t, img in zip(cat, images))
    add("catalog-coverage", ok)

    unions = [set_class(r.pitch_union) for r in bridge_regions(g)]
    ok = all(sc.forte_name == EXPECTED_BRIDGE_SET_CLASSES[n] for sc in unions)
    # hexatonic and octatonic unions are distinct transpositions; both
    # dodecatonic regions exhaust the chromatic, so theirs coincide
    distinct = len({tuple(sorted(r.pitch_union)) for r in bridge_regions(g)})
    ok = ok and distinct == (1 if n == 6 else len(unions))
    add("bridge-pitch-unions", ok)

    ok = True
    for r in arthropod_regions(g):
        adj = _adjacency(r)
        ok = ok and len(r.edges) == n * n
        ok = ok and all(len(adj[m]) == n for m in r.members)
        for m in r.members:
            relative_edges = sum(
                e.transformation.kind is Kind.RELATIVE for e in r.edges if m in (e.a, e.b)
            )
            ok = ok and relative_edges == 1
    for r in bridge_regions(g):
        adj = _adjacency(r)
        ok = ok and len(r.edges) == n * n - n
        ok = ok and all(len(adj[m]) == n - 1 for m in r.members)
    add("region-degrees", ok)

    ok = True
    for r in bridge_regions(g):
        adj = _adjacency(r)
        if n == 3:
            # 2-regular and connected on 6 vertices: a single hexagon
            walk = [r.members[0]]
            while True:
                options = [m for m in adj[walk[-1]] if len(walk) < 2 or m != walk[-2]]
                nxt = min(options, key=lambda c: c.sort_key)
                if nxt == walk[0]:
                    break
                walk.append(nxt)
            ok = ok and len(walk) == 6
        elif n == 4:
            ok = ok and find_isomorphism(adj, _cube_adjacency()) is not None
        else:
            # complete bipartite minus a perfect matching: the non-neighbors
            # across modalities pair everyone off exactly once
            for m in r.members:
                non = [
                    o
                    for o in r.members
                    if o.modality is not m.modality and o not in adj[m]
                ]
                ok = ok and len(adj[m]) == 5 and len(non) == 1
    add("graph-shape", ok)

    ok = True
    for r in bridge_regions(g):
        cycles = enumerate_smooth_cycles(r)
        histogram: dict[int, int] = {}
        for cyc in cycles:
            histogram[len(cyc)] = histogram.get(len(cyc), 0) + 1
        ok = ok and histogram == EXPECTED_CYCLE_COUNTS[n]
    add("cycle-counts", ok, f"expected {EXPECTED_CYCLE_COUNTS[n]}")

    ok = True
    for r in bridge_regions(g):
        adj = _adjacency(r)
        cycles = enumerate_smooth_cycles(r)
        full = [cyc for cyc in cycles if len(cyc) == 2 * n]
        ok = ok and bool(full)
        for cyc in cycles:
            ring = cyc.chords
            ok = ok and len(set(ring)) == len(ring)
            for i, c in enumerate(ring):
                nxt = ring[(i + 1) % len(ring)]
                ok = ok and nxt in adj[c] and nxt.modality is not c.modality
        for cyc in full:
            ok = ok and cyc.pitch_union == r.pitch_union
    add("cycle-structure", ok)

    comp = complementarity_pairs(g)
    slides = {t.token for t in cat if t.kind in (Kind.ARTHROPOD_SLIDE, Kind.BRIDGE_SLIDE)}
    ok = not comp.unpaired and {tok for pair in comp.pairs for tok in pair} == slides
    expected_pairs = {3: ("S", "P"), 4: ("S3(4)", "S4"), 6: ("SA(3)", "S3(A)")}[n]
    ok = ok and expected_pairs in comp.pairs
    add("complementarity", ok)

    pole_token = {3: "H", 4: "O", 6: "Z"}[n]
    pole = next(t for t in cat if t.token == pole_token)
    ok = True
    for c in chords:
        p = polar(c)
        ok = ok and p == apply(pole, c)
        ok = ok and not (c.pitch_classes() & p.pitch_classes())
        ok = ok and polar(p) == c
    add("polar-disjointness", ok)


def run_checks(genus_filter: int | None = None) -> list[CheckResult]:
    """Run every structural check, optionally restricted to one genus."""
    results: list[CheckResult] = []
    if genus_filter is None:
        _global_checks(results)
        for n in (3, 4, 6):
            _genus_checks(n, results)
    else:
        _genus_checks(genus(genus_filter).n, results)
    return results
