"""The named voice-leading involutions: relatives, slides, and poles.

Every transformation swaps modality and is its own inverse.  Four kinds:

* relative (R, R*, R**): the one chord of the opposite modality in the same
  arthropod region reached by moving a single voice a whole tone.
* arthropod slide: hold the part named by ``invariant``, slide the named
  dyad a semitone in parallel; lands in the same arthropod region.
* bridge slide: hold the named dyad, slide the remaining n-2 voices a
  semitone in parallel; stays among the chords built over the same root
  cell.
* polar (H, O, Z): the opposite-modality chord in the same bridge region
  sharing no pitch classes.

Slide parts are named by what is held and what moves: an interval class
(1..6) for a dyad, or W / A / F for the three tetrad classes found inside
hexachords (whole-tone tetramirror [0,2,4,6], augmented seventh [0,2,4,8],
French sixth [0,2,6,8]).  ``None`` marks the lone leftover note in triad
slides.  The slide direction is never a parameter: exactly one of up or down
produces a chord of the genus, which the catalog checks demand.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from functools import cache
from itertools import combinations

from .chord import (
    Chord,
    GENERA,
    Genus,
    Modality,
    arthropod_collection,
    find_chord,
    parent_symmetric_cell,
)
from .errors import GenusMismatchError, InvariantViolationError, TokenParseError
from .pcset import prime_form
from .voiceleading import VoiceLeading, vl_relation

SlidePart = int | str | None

TETRAD_CLASSES: dict[str, tuple[int, ...]] = {
    "W": (0, 2, 4, 6),
    "A": (0, 2, 4, 8),
    "F": (0, 2, 6, 8),
}


class Kind(Enum):
    RELATIVE = "relative"
    ARTHROPOD_SLIDE = "arthropod-slide"
    BRIDGE_SLIDE = "bridge-slide"
    POLAR = "polar"


@dataclass(frozen=True)
class Transformation:
    genus: Genus
    token: str
    kind: Kind
    invariant: SlidePart = None
    moved: SlidePart = None

    def __str__(self) -> str:
        return self.token


# Abbreviated tokens whose moved part is forced (only one complementary
# partition exists) keep the full spelling as an input alias.
_FULL_FORM_ALIASES = {
    "S6(5)": "S6",
    "S2(3)": "S2",
    "S4(3)": "S4",
    "S5(6)": "S5",
    "SF(5)": "SF",
    "S1(W)": "S1",
}

_ROWS: dict[int, tuple[tuple[str, Kind, SlidePart, SlidePart], ...]] = {
    3: (
        ("R", Kind.RELATIVE, None, None),
        ("S", Kind.ARTHROPOD_SLIDE, None, 5),
        ("N", Kind.ARTHROPOD_SLIDE, None, 3),
        ("P", Kind.BRIDGE_SLIDE, 5, None),
        ("L", Kind.BRIDGE_SLIDE, 3, None),
        ("H", Kind.POLAR, None, None),
    ),
    4: (
        ("R*", Kind.RELATIVE, None, None),
        ("S3(4)", Kind.ARTHROPOD_SLIDE, 3, 4),
        ("S3(2)", Kind.ARTHROPOD_SLIDE, 3, 2),
        ("S6", Kind.ARTHROPOD_SLIDE, 6, 5),
        ("S2", Kind.BRIDGE_SLIDE, 2, 3),
        ("S4", Kind.BRIDGE_SLIDE, 4, 3),
        ("S5", Kind.BRIDGE_SLIDE, 5, 6),
        ("O", Kind.POLAR, None, None),
    ),
    6: (
        ("R**", Kind.RELATIVE, None, None),
        ("SA(3)", Kind.ARTHROPOD_SLIDE, "A", 3),
        ("SA(5)", Kind.ARTHROPOD_SLIDE, "A", 5),
        ("SF", Kind.ARTHROPOD_SLIDE, "F", 5),
        ("SW(1)", Kind.ARTHROPOD_SLIDE, "W", 1),
        ("SW(3)", Kind.ARTHROPOD_SLIDE, "W", 3),
        ("S1", Kind.BRIDGE_SLIDE, 1, "W"),
        ("S3(A)", Kind.BRIDGE_SLIDE, 3, "A"),
        ("S3(W)", Kind.BRIDGE_SLIDE, 3, "W"),
        ("S5(A)", Kind.BRIDGE_SLIDE, 5, "A"),
        ("S5(F)", Kind.BRIDGE_SLIDE, 5, "F"),
        ("Z", Kind.POLAR, None, None),
    ),
}


@cache
def catalog(g: Genus) -> tuple[Transformation, ...]:
    """The closed transformation list for a genus: relative, arthropod
    slides, bridge slides, pole."""
    return tuple(Transformation(g, *row) for row in _ROWS[g.n])


def _normalize_token(text: str) -> str:
    cleaned = "".join(ch for ch in text.strip() if ch not in "^{}").upper()
    return _FULL_FORM_ALIASES.get(cleaned, cleaned)


def transformation(token: str, g: Genus) -> Transformation:
    """Look up a catalog member by token.

    Accepts the flat ASCII spelling (``S3(4)``), the superscript spelling
    (``S^{3(4)}``), and fully spelled abbreviations (``S6(5)`` for ``S6``).
    """
    normalized = _normalize_token(token)
    for t in catalog(g):
        if t.token == normalized:
            return t
    for other in GENERA.values():
        if other != g and any(t.token == normalized for t in catalog(other)):
            raise GenusMismatchError(
                f"transformation {normalized!r} belongs to the n={other.n} genus, not n={g.n}"
            )
    raise TokenParseError(f"unknown transformation token: {token!r}")


def arthropod_members(c: Chord) -> tuple[Chord, ...]:
    """The 2n chords generated from c's parent symmetric cell."""
    return arthropod_collection(parent_symmetric_cell(c).cell)


def bridge_members(c: Chord) -> tuple[Chord, ...]:
    """Both-modality chords whose roots share c's root cell, (+) block first."""
    step = 12 // c.genus.n
    roots = [c.root % step + k * step for k in range(c.genus.n)]
    return tuple(
        Chord(c.genus, root, modality) for modality in Modality for root in roots
    )


def same_arthropod(a: Chord, b: Chord) -> bool:
    return parent_symmetric_cell(a).cell == parent_symmetric_cell(b).cell


def same_bridge(a: Chord, b: Chord) -> bool:
    return (a.root - b.root) % (12 // a.genus.n) == 0


def _part_prime(part: SlidePart) -> tuple[int, ...] | None:
    if part is None:
        return None
    if isinstance(part, str):
        return TETRAD_CLASSES[part]
    return (0, part)


def _part_size(part: SlidePart) -> int:
    if part is None:
        return 1
    if isinstance(part, str):
        return 4
    return 2


def _slide_images(t: Transformation, c: Chord) -> list[Chord]:
    """All chords reachable by t's partition-and-shift reading of c."""
    pcs = c.pitch_classes()
    moved_size = _part_size(t.moved)
    held_prime = _part_prime(t.invariant)
    moved_prime = _part_prime(t.moved)
    in_region = same_arthropod if t.kind is Kind.ARTHROPOD_SLIDE else same_bridge
    images = []
    for moved in combinations(sorted(pcs), moved_size):
        held = pcs - set(moved)
        if moved_prime is not None and prime_form(moved) != moved_prime:
            continue
        if held_prime is not None and prime_form(held) != held_prime:
            continue
        for delta in (1, -1):
            shifted = {(p + delta) % 12 for p in moved}
            if shifted & held:
                continue
            image = find_chord(held | shifted, c.genus)
            if image is not None and image.modality is not c.modality and in_region(c, image):
                images.append(image)
    return images


@cache
def apply(t: Transformation, c: Chord) -> Chord:
    """Transform c by the named involution."""
    if t.genus != c.genus:
        raise GenusMismatchError(
            f"cannot apply {t.token} (n={t.genus.n}) to {c} (n={c.genus.n})"
        )
    if t.kind is Kind.RELATIVE:
        candidates = [
            m
            for m in arthropod_members(c)
            if m.modality is not c.modality and vl_relation(c, m) == VoiceLeading(0, 1)
        ]
    elif t.kind is Kind.POLAR:
        pcs = c.pitch_classes()
        candidates = [
            m
            for m in bridge_members(c)
            if m.modality is not c.modality and not (m.pitch_classes() & pcs)
        ]
    else:
        candidates = _slide_images(t, c)
    distinct = set(candidates)
    if len(distinct) != 1:
        raise InvariantViolationError(
            f"{t.token} on {c} produced {len(distinct)} results instead of one"
        )
    return distinct.pop()


def transformation_between(x: Chord, y: Chord) -> Transformation | None:
    """The unique catalog transformation sending x to y, if any exists."""
    if x.genus != y.genus:
        raise GenusMismatchError(f"cannot compare {x} (n={x.genus.n}) with {y} (n={y.genus.n})")
    hits = [t for t in catalog(x.genus) if apply(t, x) == y]
    if len(hits) > 1:
        raise InvariantViolationError(
            f"{len(hits)} transformations connect {x} to {y}: {[t.token for t in hits]}"
        )
    return hits[0] if hits else None


def apply_sequence(c: Chord, transformations: Iterable[Transformation]) -> Chord:
    """Left-to-right composition of apply()."""
    for t in transformations:
        c = apply(t, c)
    return c
