"""Cyclic orderings of the 12 pitch classes and symmetric octave partitions."""

from __future__ import annotations

from .errors import UnsupportedCardinalityError
from .pcset import PcSet, pcset, transpose

Z12_GENERATORS = frozenset({1, 5, 7, 11})

# n = 1, 2, 12 divide the octave too but their chord classes are excluded
# from the whole transformation catalog, so they are rejected everywhere.
SUPPORTED_CARDINALITIES = (3, 4, 6)


def generators_of_z12() -> frozenset[int]:
    """The four residues whose repeated addition visits all 12 pitch classes."""
    return Z12_GENERATORS


def cycle_from_generator(g: int, start: int = 0) -> tuple[int, ...]:
    """The order in which repeatedly adding g walks the 12 pitch classes.

    g=1 traces the chromatic circle, g=7 the circle of fifths, g=5 the
    circle of fourths, g=11 the descending chromatic circle.
    """
    if g % 12 not in Z12_GENERATORS:
        raise ValueError(f"{g} does not generate the pitch classes (needs gcd(g, 12) = 1)")
    return tuple((start + k * g) % 12 for k in range(12))


def symmetric_partition(n: int) -> tuple[PcSet, ...]:
    """Split the octave into 12/n disjoint cells, each spaced by 12/n semitones.

    n=3 yields the four augmented triads, n=4 the three fully diminished
    sevenths, n=6 the two whole-tone scales.  Cells are ordered by their
    smallest member.
    """
    if n not in SUPPORTED_CARDINALITIES:
        raise UnsupportedCardinalityError(
            f"unsupported cardinality {n}; expected one of {SUPPORTED_CARDINALITIES}"
        )
    step = 12 // n
    return tuple(frozenset(range(p, 12, step)) for p in range(step))


def is_symmetric_cell(s: PcSet) -> bool:
    """True when s is a cell of one of the supported symmetric partitions."""
    members = pcset(s)
    n = len(members)
    return n in SUPPORTED_CARDINALITIES and transpose(members, 12 // n) == members
