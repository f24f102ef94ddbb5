"""Cuspidal circles of GL(2) via admissible pairs, and unramified base change.

A cuspidal representation of GL(2) with unitary central character sits
on a circle of unramified twists labeled by an admissible pair: a
quadratic extension E/F together with a character xi of the top field
that does not factor through the norm (and whose level-one restriction
may factor only when E/F is unramified).  Whether xi factors through
the norm is not decidable from numerical invariants, so both conditions
enter as certified flags and validation checks their consistency with
the extension data.

The base-change results implemented here concern totally ramified
quadratic pairs over a characteristic-zero base with odd residue
characteristic, lifted along an unramified extension L/F of odd degree:
the compositum EL/L is again totally ramified quadratic, EL/E is
unramified of degree f(L/F), the transported character keeps its
conductor (the transition function of an unramified extension is the
identity), and on circles base change is z -> z^{f(L/F)}.  The torsion
number (order of the unramified twist stabiliser) stays 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .localfield import (
    ExtensionData,
    RamificationFiltration,
    classify,
    compose_tower,
    conductor_transport,
    validate_extension_filtration,
)
from .gl1 import CharacterLabel


class NotUnramified(ValueError):
    """The lifting extension L/F must be unramified."""


class EvenDegree(ValueError):
    """The lifting extension L/F must have odd degree."""


class OutOfScope(ValueError):
    """Outside the supported scope (char 0, p != 2, totally ramified pair)."""


@dataclass(frozen=True)
class UnitCharacter:
    """A character label together with its unitarity flag."""

    label: CharacterLabel
    unitary: bool = True

    @property
    def conductor(self) -> int:
        return self.label.conductor

    def to_json(self) -> dict:
        out = self.label.to_json()
        out["unitary"] = self.unitary
        return out


@dataclass(frozen=True)
class AdmissiblePair:
    """Quadratic extension plus character, with certified admissibility flags.

    not_norm_factor certifies that xi does not factor through the norm
    map; level_one_norm_factor records whether the restriction of xi to
    the first unit subgroup does.
    """

    quad: ExtensionData
    quad_filtration: RamificationFiltration
    xi: UnitCharacter
    not_norm_factor: bool
    level_one_norm_factor: bool

    def __post_init__(self):
        if self.quad.n != 2:
            raise ValueError("an admissible pair needs a quadratic extension")
        validate_extension_filtration(self.quad, self.quad_filtration)

    def to_json(self) -> dict:
        return {
            "quad": self.quad.to_json(self.quad_filtration),
            "xi": self.xi.to_json(),
            "flags": {
                "not_norm_factor": self.not_norm_factor,
                "level_one_norm_factor": self.level_one_norm_factor,
            },
        }

    @staticmethod
    def from_json(obj: dict) -> "AdmissiblePair":
        ext, filt = ExtensionData.from_json(obj["quad"])
        xi = obj["xi"]
        flags = obj.get("flags", {})
        return AdmissiblePair(
            quad=ext,
            quad_filtration=filt,
            xi=UnitCharacter(
                CharacterLabel(int(xi["conductor"]), int(xi.get("index", 0))),
                unitary=bool(xi.get("unitary", True)),
            ),
            not_norm_factor=bool(flags.get("not_norm_factor", False)),
            level_one_norm_factor=bool(flags.get("level_one_norm_factor", False)),
        )


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the admissibility and scope checks, condition by condition."""

    condition1_ok: bool  # xi does not factor through the norm
    condition2_ok: bool  # level-one norm factoring forces an unramified extension
    scope_failures: tuple[str, ...]

    @property
    def admissible(self) -> bool:
        return self.condition1_ok and self.condition2_ok

    @property
    def in_scope(self) -> bool:
        return not self.scope_failures

    @property
    def valid(self) -> bool:
        return self.admissible and self.in_scope

    def failures(self) -> list[str]:
        out = []
        if not self.condition1_ok:
            out.append("condition (1): the character factors through the norm map")
        if not self.condition2_ok:
            out.append(
                "condition (2): the level-one restriction factors through the norm "
                "but the extension is not unramified"
            )
        out.extend(self.scope_failures)
        return out


def validate_admissible(pair: AdmissiblePair) -> ValidationReport:
    """Check conditions (1) and (2) plus the totally-ramified scope."""
    cond1 = pair.not_norm_factor
    cond2 = (not pair.level_one_norm_factor) or pair.quad.is_unramified
    scope = []
    if not pair.quad.is_totally_ramified:
        scope.append("scope: the quadratic extension must be totally ramified")
    if not pair.xi.unitary:
        scope.append("scope: the character must be unitary")
    if not pair.quad.base.char_zero:
        scope.append("scope: the base field must have characteristic 0")
    if pair.quad.base.p == 2:
        scope.append("scope: the residue characteristic must be odd")
    return ValidationReport(cond1, cond2, tuple(scope))


@dataclass(frozen=True)
class CuspidalCircle:
    """One circle of unramified twists, labeled by a selected admissible pair."""

    pair: AdmissiblePair
    torsion: int = 1

    def __post_init__(self):
        report = validate_admissible(self.pair)
        if report.in_scope and self.torsion != 1:
            raise ValueError("totally ramified pairs have torsion number 1")


@dataclass(frozen=True)
class CompositumInvariants:
    el_over_l: ExtensionData
    el_over_e: ExtensionData

    def to_json(self) -> dict:
        return {"EL/L": self.el_over_l.to_json(), "EL/E": self.el_over_e.to_json()}


def _check_lift(quad: ExtensionData, lift: ExtensionData) -> None:
    if not lift.is_unramified:
        raise NotUnramified("the lifting extension must be unramified (e = 1)")
    if lift.base != quad.base:
        raise OutOfScope("the pair and the lifting extension have different base fields")


def compositum_invariants(quad: ExtensionData, lift: ExtensionData) -> CompositumInvariants:
    """Invariants of EL/L and EL/E for totally ramified quadratic E/F
    and unramified L/F.

    EL/E is unramified of degree f(L/F); EL/L is quadratic totally
    ramified, forced by multiplicativity of e and f along both routes
    F -> L -> EL and F -> E -> EL.
    """
    if quad.n != 2 or not quad.is_totally_ramified:
        raise OutOfScope("need a totally ramified quadratic extension")
    _check_lift(quad, lift)
    el_over_e = ExtensionData(
        base=quad.top_field, e=1, f=lift.f, galois=True, cyclic=True
    )
    el_over_l = ExtensionData(
        base=lift.top_field, e=2, f=1, galois=True, cyclic=True
    )
    lower_route = compose_tower(lift, el_over_l)
    upper_route = compose_tower(quad, el_over_e)
    assert (lower_route.e, lower_route.f) == (upper_route.e, upper_route.f)
    return CompositumInvariants(el_over_l=el_over_l, el_over_e=el_over_e)


@dataclass(frozen=True)
class Gl2BaseChange:
    """Result of base change along an unramified odd-degree lift."""

    target_pair: AdmissiblePair
    degree: int
    conductor: int
    compositum: CompositumInvariants
    torsion: int = 1

    def to_json(self) -> dict:
        return {
            "target_pair": self.target_pair.to_json(),
            "degree": self.degree,
            "conductor": self.conductor,
            "compositum": self.compositum.to_json(),
            "torsion": self.torsion,
        }


def bc_gl2(pair: AdmissiblePair, lift: ExtensionData) -> Gl2BaseChange:
    """Base change of a cuspidal circle along unramified odd-degree L/F.

    Returns the target pair (EL/L, xi composed with the EL/E norm), the
    circle degree f(L/F), and the conductor, which is preserved because
    the conductor transition of the unramified extension EL/E is the
    identity.
    """
    report = validate_admissible(pair)
    if not report.admissible:
        raise OutOfScope("; ".join(report.failures()))
    if not report.in_scope:
        raise OutOfScope("; ".join(report.scope_failures))
    _check_lift(pair.quad, lift)
    if lift.f % 2 == 0:
        raise EvenDegree("the lifting extension must have odd degree")

    comp = compositum_invariants(pair.quad, lift)
    # conductor transport along the unramified EL/E: the empty filtration
    unramified_filt = RamificationFiltration()
    new_conductor = conductor_transport(unramified_filt, pair.xi.conductor)
    assert new_conductor == pair.xi.conductor
    target_pair = AdmissiblePair(
        quad=comp.el_over_l,
        quad_filtration=RamificationFiltration.tame_default(2),
        xi=UnitCharacter(
            CharacterLabel(new_conductor, pair.xi.label.index),
            unitary=pair.xi.unitary,
        ),
        not_norm_factor=True,  # the transported pair is again admissible
        level_one_norm_factor=False,
    )
    return Gl2BaseChange(
        target_pair=target_pair,
        degree=lift.f,
        conductor=new_conductor,
        compositum=comp,
        torsion=1,
    )
