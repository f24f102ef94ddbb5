"""The tempered dual of GL(1) and base change on it.

The tempered dual of GL(1, F) is a countable disjoint union of circles,
one per smooth character of the unit group; a character is recorded
here only through its conductor and an opaque enumeration index, since
that is all base change transports.  The circle coordinate is the value
of a character at a fixed uniformiser, an exact Gaussian rational for
us, and base change to a degree-(e, f) extension acts by

    z -> z^f          on each circle coordinate,
    c -> psi(c)       on conductors (the convex transition function),
    (c, j) -> (psi(c), j)   on labels.

Formal Weil degrees make the exponent identity testable: a Weil element
of E-side degree m has F-side degree f*m, so an unramified
quasicharacter with parameter z pulls back to the one with parameter
z^f.  Angles are exact rational turns (fractions of a full revolution),
which keeps arc preimages exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .gaussian import GaussianRational
from .ktheory import CircleSpace, ProperCircleMap
from .localfield import (
    ExtensionData,
    RamificationClass,
    RamificationFiltration,
    UnsupportedExtension,
    classify,
    conductor_transport,
    unit_quotient_order,
    validate_extension_filtration,
)

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class FormalWeilDegree:
    """The integer degree of an abstract Weil element, tagged by field side."""

    m: int
    side: str = "E"


def include_weil(degree: FormalWeilDegree, f: int) -> FormalWeilDegree:
    """Degree of the same element seen on the base side: m -> f*m."""
    if f < 1:
        raise ValueError("residue degree f must be >= 1")
    return FormalWeilDegree(f * degree.m, side="F")


@dataclass(frozen=True)
class UnramifiedQuasicharacter:
    """w -> z^(degree of w), determined by the nonzero parameter z."""

    z: GaussianRational

    def __post_init__(self):
        if self.z.is_zero():
            raise ValueError("the parameter of a quasicharacter is nonzero")

    def evaluate(self, degree: Union[int, FormalWeilDegree]) -> GaussianRational:
        m = degree.m if isinstance(degree, FormalWeilDegree) else int(degree)
        return self.z ** m

    @property
    def tempered(self) -> bool:
        return self.z.on_unit_circle()


def bc_unramified_quasichar(
    chi: UnramifiedQuasicharacter, f: int
) -> UnramifiedQuasicharacter:
    """Base change of an unramified quasicharacter: parameter z -> z^f."""
    if f < 1:
        raise ValueError("residue degree f must be >= 1")
    return UnramifiedQuasicharacter(chi.z ** f)


@dataclass(frozen=True, order=True)
class CharacterLabel:
    """Opaque name (conductor, index) for a unit-group character.

    conductor 0 is the unramified family; the index enumerates the
    finitely many characters of each conductor and carries no structure.
    """

    conductor: int
    index: int

    def __post_init__(self):
        if self.conductor < 0 or self.index < 0:
            raise ValueError("conductor and index are nonnegative")

    def __str__(self) -> str:
        return f"c{self.conductor}.{self.index}"

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "index": self.index}


def labels_with_conductor(q: int, c: int) -> int:
    """How many unit-group characters have conductor exactly c.

    Differences of the unit-quotient orders: 1 for c = 0, q - 2 for
    c = 1, (q-1)^2 * q^(c-2) beyond.
    """
    if c < 0:
        raise ValueError("conductors are nonnegative")
    if c == 0:
        return 1
    if c == 1:
        return unit_quotient_order(q, 1) - 1
    return unit_quotient_order(q, c) - unit_quotient_order(q, c - 1)


@dataclass(frozen=True)
class TemperedDualGL1:
    """Truncation of the GL(1) tempered dual: circles for conductor <= bound.

    The default enumeration lists, for each conductor, exactly the
    number of characters the unit-quotient orders allow; any explicit
    circle list respecting the same bounds is also accepted.
    """

    q: int
    bound: int
    circles: tuple[CharacterLabel, ...]

    @staticmethod
    def enumerate(q: int, bound: int) -> "TemperedDualGL1":
        if bound < 0:
            raise ValueError("the truncation bound is nonnegative")
        circles = tuple(
            CharacterLabel(c, j)
            for c in range(bound + 1)
            for j in range(labels_with_conductor(q, c))
        )
        return TemperedDualGL1(q, bound, circles)

    def __post_init__(self):
        unit_quotient_order(self.q, 1)  # validates q is a prime power
        seen = set()
        for label in self.circles:
            if label in seen:
                raise ValueError(f"duplicate circle label {label}")
            seen.add(label)
            if label.conductor > self.bound:
                raise ValueError(f"label {label} exceeds the truncation bound")
        for c in sorted({lbl.conductor for lbl in self.circles}):
            upto = sum(1 for lbl in self.circles if lbl.conductor <= c)
            if upto > unit_quotient_order(self.q, max(c, 1)):
                raise ValueError(
                    f"more labels with conductor <= {c} than characters exist"
                )

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "M": self.bound,
            "circles": [label.to_json() for label in self.circles],
        }


@dataclass(frozen=True)
class Gl1BaseChange:
    """Component-matched description of base change on a truncated dual.

    pairs lists (source label, target label, circle degree f); the
    conductor map is the transition function restricted to the occurring
    conductors.  Target labels not hit by any source (passed in
    explicitly) are retained so induced K-theory matrices show their
    zero columns.
    """

    f: int
    pairs: tuple[tuple[CharacterLabel, CharacterLabel, int], ...]
    conductor_map: dict[int, int]
    extra_targets: tuple[CharacterLabel, ...] = ()

    @property
    def source_labels(self) -> tuple[CharacterLabel, ...]:
        return tuple(src for src, _, _ in self.pairs)

    @property
    def target_labels(self) -> tuple[CharacterLabel, ...]:
        seen: list[CharacterLabel] = []
        for _, tgt, _ in self.pairs:
            if tgt not in seen:
                seen.append(tgt)
        for tgt in self.extra_targets:
            if tgt not in seen:
                seen.append(tgt)
        return tuple(seen)

    def to_json(self) -> dict:
        return {
            "pairs": [
                {"from": s.to_json(), "to": t.to_json(), "degree": d}
                for s, t, d in self.pairs
            ],
            "conductor_map": {str(c): v for c, v in sorted(self.conductor_map.items())},
        }


SUPPORTED_CLASSES = (
    RamificationClass.TRIVIAL,
    RamificationClass.UNRAMIFIED,
    RamificationClass.TAME_TOTALLY_RAMIFIED,
    RamificationClass.TAME_MIXED,
)


def check_gl1_scope(ext: ExtensionData) -> None:
    """Raise UnsupportedExtension unless the base-change hypotheses hold.

    Allowed: unramified, tamely ramified (any), or totally ramified
    Galois cyclic (the wild totally ramified case needs both flags).
    """
    if classify(ext) in SUPPORTED_CLASSES:
        return
    if ext.is_totally_ramified and ext.galois and ext.cyclic:
        return
    raise UnsupportedExtension(
        "base change on the GL(1) dual needs an unramified, tamely ramified, "
        "or cyclic Galois totally ramified extension"
    )


def bc_gl1(
    ext: ExtensionData,
    filt: RamificationFiltration,
    dual_f: TemperedDualGL1,
    collisions: Optional[dict[CharacterLabel, CharacterLabel]] = None,
    extra_targets: Sequence[CharacterLabel] = (),
) -> Gl1BaseChange:
    """Transport every circle of the truncated dual through base change.

    Each source label (c, j) goes to (psi(c), j) with circle degree
    ext.f.  The default target assignment is injective; a collision
    table may identify target labels explicitly, since nothing in the
    invariant model decides whether distinct characters pull back to the
    same one.
    """
    check_gl1_scope(ext)
    validate_extension_filtration(ext, filt)
    if dual_f.q != ext.base.q:
        raise ValueError("the dual is for a different residue field")
    collisions = collisions or {}
    pairs = []
    cmap: dict[int, int] = {}
    for label in dual_f.circles:
        target_c = conductor_transport(filt, label.conductor)
        cmap[label.conductor] = target_c
        target = collisions.get(label, CharacterLabel(target_c, label.index))
        if target.conductor != target_c:
            raise ValueError(
                f"collision table sends conductor {label.conductor} to "
                f"{target.conductor}, but the transition function gives {target_c}"
            )
        pairs.append((label, target, ext.f))
    return Gl1BaseChange(
        f=ext.f,
        pairs=tuple(pairs),
        conductor_map=cmap,
        extra_targets=tuple(extra_targets),
    )


def circle_map(bc: Gl1BaseChange) -> "ProperCircleMap":
    """The base-change description as a proper circle map for K-theory.

    Source components follow the dual's circle order; target components
    appear in first-hit order followed by any explicit extra targets, so
    unmatched targets contribute visible zero columns.
    """
    source = CircleSpace(bc.source_labels)
    target = CircleSpace(bc.target_labels)
    return ProperCircleMap(source, target, bc.pairs)


@dataclass(frozen=True)
class Arc:
    """Closed arc on a circle, endpoints in exact rational turns."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.hi < self.lo:
            raise ValueError("empty arc: the upper endpoint is below the lower one")

    @property
    def length(self) -> Fraction:
        return min(self.hi - self.lo, Fraction(1))

    @property
    def is_full_circle(self) -> bool:
        return self.hi - self.lo >= 1


def arc_preimage(f: int, arc: Arc) -> tuple[Arc, ...]:
    """Preimage of a closed arc under z -> z^f, as exact turn intervals.

    The f components are [lo/f + k/f, hi/f + k/f]; a full-circle arc
    pulls back to the full circle.  Finitely many closed components is
    the properness witness on truncations.
    """
    if f < 1:
        raise ValueError("degree must be >= 1")
    if arc.is_full_circle:
        return (Arc(Fraction(0), Fraction(1)),)
    return tuple(
        Arc((arc.lo + k) / f, (arc.hi + k) / f) for k in range(f)
    )


def properness_check(
    bc: Gl1BaseChange, target: CharacterLabel, arc: Arc
) -> dict[CharacterLabel, tuple[Arc, ...]]:
    """Preimage arcs of a closed arc in one target circle, per source circle."""
    out: dict[CharacterLabel, tuple[Arc, ...]] = {}
    for src, tgt, degree in bc.pairs:
        if tgt == target:
            out[src] = arc_preimage(degree, arc)
    return out
