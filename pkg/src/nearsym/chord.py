"""Nearly symmetric chords: genus templates, naming, and perturbation.

A chord here is one single-semitone displacement away from a symmetric
partition cell.  Displacing a cell note downward produces the (+) species of
its genus, displacing upward the (-) species:

    n=3:  augmented triad      -> major triad (+)        / minor triad (-)
    n=4:  diminished seventh   -> dominant seventh (+)   / half-diminished (-)
    n=6:  whole-tone scale     -> Wozzeck chord (+)      / mystic chord (-)
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from functools import cache
from typing import NamedTuple

from .errors import (
    ChordParseError,
    InvariantViolationError,
    NotAMemberError,
    UnsupportedCardinalityError,
)
from .pcset import PcSet, pcset
from .symmetry import is_symmetric_cell

NOTE_NAMES_SHARP = ("C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B")
NOTE_NAMES_FLAT = ("C", "Db", "D", "Eb", "E", "F", "Gb", "G", "Ab", "A", "Bb", "B")

_NATURALS = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}


class Modality(Enum):
    """Which way the parent cell was displaced: (+) downward, (-) upward."""

    PLUS = "+"
    MINUS = "-"

    @property
    def opposite(self) -> "Modality":
        return Modality.MINUS if self is Modality.PLUS else Modality.PLUS

    def __str__(self) -> str:
        return self.value


class Direction(Enum):
    DOWN = "down"
    UP = "up"


@dataclass(frozen=True)
class Genus:
    """One species column: cardinality plus both templates (intervals above
    the root)."""

    n: int
    plus_name: str
    minus_name: str
    plus_template: tuple[int, ...]
    minus_template: tuple[int, ...]

    def template(self, modality: Modality) -> tuple[int, ...]:
        return self.plus_template if modality is Modality.PLUS else self.minus_template

    def __repr__(self) -> str:
        return f"Genus(n={self.n})"


TRIADS = Genus(3, "major triad", "minor triad", (0, 4, 7), (0, 3, 7))
TETRADS = Genus(
    4, "dominant seventh", "half-diminished seventh", (0, 4, 7, 10), (0, 3, 6, 10)
)
# For hexachords the minor second sits at template positions 0 and 1, so the
# root is the lower note of the chord's unique semitone pair.
HEXACHORDS = Genus(6, "Wozzeck chord", "mystic chord", (0, 1, 4, 6, 8, 10), (0, 1, 3, 5, 7, 9))

GENERA: dict[int, Genus] = {3: TRIADS, 4: TETRADS, 6: HEXACHORDS}


def genus(n: int) -> Genus:
    """The genus of cardinality n (3, 4, or 6)."""
    try:
        return GENERA[n]
    except KeyError:
        raise UnsupportedCardinalityError(
            f"no genus of cardinality {n}; expected 3, 4, or 6"
        ) from None


@dataclass(frozen=True)
class Chord:
    """A concrete chord, identified by (genus, root, modality).

    The pitch-class set is derived from the genus template, never stored.
    """

    genus: Genus
    root: int
    modality: Modality

    def __post_init__(self) -> None:
        object.__setattr__(self, "root", self.root % 12)

    def pitch_classes(self) -> PcSet:
        return frozenset((self.root + i) % 12 for i in self.genus.template(self.modality))

    @property
    def sort_key(self) -> tuple[int, str]:
        return (self.root, self.modality.value)

    def name(self, flats: bool = False) -> str:
        names = NOTE_NAMES_FLAT if flats else NOTE_NAMES_SHARP
        return names[self.root] + self.modality.value

    def __str__(self) -> str:
        return self.name()

    def __repr__(self) -> str:
        return f"Chord({self.name()!r}, n={self.genus.n})"


class Perturbation(NamedTuple):
    """A cell, the note displaced, and the direction it moved."""

    cell: PcSet
    note: int
    direction: Direction


def parse_note(text: str) -> int:
    """Parse a note name (letter plus optional accidentals) to a pitch class."""
    s = text.strip().replace("♯", "#").replace("♭", "b")
    if not s or s[0].upper() not in _NATURALS:
        raise ChordParseError(f"unknown note name: {text!r}")
    value = _NATURALS[s[0].upper()]
    for ch in s[1:]:
        if ch == "#":
            value += 1
        elif ch == "b":
            value -= 1
        else:
            raise ChordParseError(f"unknown accidental {ch!r} in {text!r}")
    return value % 12


def parse_chord(text: str, g: Genus) -> Chord:
    """Parse chord text ``<root><modality>``, e.g. ``C+``, ``F#-``, ``Bb+``."""
    s = text.strip()
    if len(s) < 2 or s[-1] not in ("+", "-"):
        raise ChordParseError(f"chord text must end in '+' or '-': {text!r}")
    return Chord(g, parse_note(s[:-1]), Modality(s[-1]))


@cache
def _chords_by_pitch_classes(g: Genus) -> dict[PcSet, Chord]:
    table: dict[PcSet, Chord] = {}
    for root in range(12):
        for modality in Modality:
            c = Chord(g, root, modality)
            table[c.pitch_classes()] = c
    return table


def all_chords(g: Genus) -> tuple[Chord, ...]:
    """All 24 chords of a genus, roots ascending, (+) before (-)."""
    return tuple(
        Chord(g, root, modality) for root in range(12) for modality in Modality
    )


def find_chord(s: Iterable[int], g: Genus) -> Chord | None:
    """The chord of genus g whose pitch classes are s, or None."""
    return _chords_by_pitch_classes(g).get(pcset(s))


def name_of(s: Iterable[int], g: Genus) -> Chord:
    """Identify the chord whose pitch classes are s.

    Template matching recovers the conventional root for triads and
    sevenths and, for hexachords, the lower note of the unique semitone
    pair.
    """
    c = find_chord(s, g)
    if c is None:
        raise NotAMemberError(
            f"{sorted(pcset(s))} is not a {g.plus_name} or {g.minus_name}"
        )
    return c


def perturb(cell: Iterable[int], note: int, direction: Direction | str) -> Chord:
    """Displace one note of a symmetric cell by a semitone and name the result.

    Downward displacement yields the (+) chord, upward the (-) chord.
    """
    members = pcset(cell)
    if not is_symmetric_cell(members):
        raise ValueError(f"{sorted(members)} is not a symmetric partition cell")
    note %= 12
    if note not in members:
        raise ValueError(f"pitch class {note} is not in the cell {sorted(members)}")
    direction = Direction(direction)
    delta = -1 if direction is Direction.DOWN else 1
    displaced = (members - {note}) | {(note + delta) % 12}
    return name_of(displaced, genus(len(members)))


def arthropod_collection(cell: Iterable[int]) -> tuple[Chord, ...]:
    """All 2n chords from perturbing each note of the cell both ways.

    These are the members of the cell's arthropod region (Weitzmann
    waterbug, Boretz spider, or centipede), ordered by note then
    down-before-up.
    """
    members = pcset(cell)
    if not is_symmetric_cell(members):
        raise ValueError(f"{sorted(members)} is not a symmetric partition cell")
    chords = []
    for note in sorted(members):
        chords.append(perturb(members, note, Direction.DOWN))
        chords.append(perturb(members, note, Direction.UP))
    return tuple(chords)


@cache
def parent_symmetric_cell(c: Chord) -> Perturbation:
    """The unique cell, note, and direction whose perturbation reproduces c."""
    s = c.pitch_classes()
    found = []
    for displaced in s:
        # A down-perturbed note sits one semitone above its image, an
        # up-perturbed note one below.
        for delta, direction in ((1, Direction.DOWN), (-1, Direction.UP)):
            note = (displaced + delta) % 12
            candidate = (s - {displaced}) | {note}
            if len(candidate) == len(s) and is_symmetric_cell(frozenset(candidate)):
                found.append(Perturbation(frozenset(candidate), note, direction))
    if len(found) != 1:
        raise InvariantViolationError(
            f"{c} should arise from exactly one perturbation, found {len(found)}"
        )
    return found[0]
