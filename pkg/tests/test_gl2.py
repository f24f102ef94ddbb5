import pytest
from hypothesis import given
from hypothesis import strategies as st

from basechange.gl1 import CharacterLabel
from basechange.gl2 import (
    AdmissiblePair,
    CuspidalCircle,
    EvenDegree,
    NotUnramified,
    OutOfScope,
    UnitCharacter,
    bc_gl2,
    compositum_invariants,
    validate_admissible,
)
from basechange.localfield import (
    ExtensionData,
    LocalFieldData,
    RamificationFiltration,
    compose_tower,
)


def base_field(q=5, p=5, char_zero=True):
    return LocalFieldData(q, p, char_zero)


def ramified_quadratic(base=None):
    return ExtensionData(base or base_field(), e=2, f=1, galois=True, cyclic=True)


def make_pair(conductor=2, base=None, not_norm=True, level_one=False, unitary=True):
    return AdmissiblePair(
        quad=ramified_quadratic(base),
        quad_filtration=RamificationFiltration((2,)),
        xi=UnitCharacter(CharacterLabel(conductor, 0), unitary=unitary),
        not_norm_factor=not_norm,
        level_one_norm_factor=level_one,
    )


def unramified_lift(f, base=None):
    return ExtensionData(base or base_field(), e=1, f=f, galois=True, cyclic=True)


# -- admissibility -----------------------------------------------------------


def test_validate_admissible_examples():
    assert validate_admissible(make_pair()).valid

    report = validate_admissible(make_pair(not_norm=False))
    assert not report.valid
    assert "condition (1)" in report.failures()[0]

    report = validate_admissible(make_pair(level_one=True))
    assert not report.valid
    assert any("condition (2)" in msg for msg in report.failures())


def test_level_one_factoring_is_fine_for_unramified_pairs():
    pair = AdmissiblePair(
        quad=ExtensionData(base_field(), e=1, f=2, galois=True, cyclic=True),
        quad_filtration=RamificationFiltration(),
        xi=UnitCharacter(CharacterLabel(1, 0)),
        not_norm_factor=True,
        level_one_norm_factor=True,
    )
    report = validate_admissible(pair)
    assert report.admissible
    assert not report.in_scope  # unramified pairs are outside the ramified scope


def test_scope_failures_reported():
    report = validate_admissible(make_pair(unitary=False))
    assert any("unitary" in msg for msg in report.failures())
    report = validate_admissible(make_pair(base=base_field(2, 2)))
    assert any("odd" in msg for msg in report.failures())
    report = validate_admissible(make_pair(base=base_field(5, 5, char_zero=False)))
    assert any("characteristic 0" in msg for msg in report.failures())


def test_cuspidal_circle_torsion():
    circle = CuspidalCircle(make_pair())
    assert circle.torsion == 1
    with pytest.raises(ValueError):
        CuspidalCircle(make_pair(), torsion=2)


# -- compositum invariants ------------------------------------------------------


def test_compositum_invariants_example():
    comp = compositum_invariants(ramified_quadratic(), unramified_lift(3))
    assert (comp.el_over_l.e, comp.el_over_l.f) == (2, 1)
    assert (comp.el_over_e.e, comp.el_over_e.f) == (1, 3)


def test_compositum_trivial_lift():
    comp = compositum_invariants(ramified_quadratic(), unramified_lift(1))
    assert (comp.el_over_e.e, comp.el_over_e.f) == (1, 1)
    assert comp.el_over_l == ramified_quadratic(base_field())


@given(st.integers(1, 6))
def test_compositum_multiplicativity_both_routes(f):
    quad = ramified_quadratic()
    lift = unramified_lift(f)
    comp = compositum_invariants(quad, lift)
    via_l = compose_tower(lift, comp.el_over_l)
    via_e = compose_tower(quad, comp.el_over_e)
    assert (via_l.e, via_l.f) == (via_e.e, via_e.f) == (2, f)


# -- base change ------------------------------------------------------------------


def test_bc_gl2_example():
    result = bc_gl2(make_pair(conductor=2), unramified_lift(3))
    assert result.degree == 3
    assert result.conductor == 2
    assert result.target_pair.quad.e == 2
    assert result.target_pair.quad.f == 1
    assert result.compositum.el_over_e.f == 3
    assert result.torsion == 1
    assert validate_admissible(result.target_pair).valid


def test_bc_gl2_identity_lift():
    pair = make_pair(conductor=1)
    result = bc_gl2(pair, unramified_lift(1))
    assert result.degree == 1
    assert result.conductor == 1
    assert result.target_pair.quad == pair.quad
    assert result.target_pair.xi == pair.xi


def test_bc_gl2_degree_five():
    # conductor transport along the unramified compositum is the identity,
    # independently: psi of the empty filtration fixes 1
    from basechange.localfield import psi

    assert psi(RamificationFiltration(), 1) == 1
    result = bc_gl2(make_pair(conductor=1), unramified_lift(5))
    assert result.degree == 5
    assert result.conductor == 1


def test_bc_gl2_errors():
    with pytest.raises(NotUnramified):
        bc_gl2(make_pair(), ExtensionData(base_field(), e=3, f=1, galois=True, cyclic=True))
    with pytest.raises(EvenDegree):
        bc_gl2(make_pair(), unramified_lift(2))
    with pytest.raises(OutOfScope):
        bc_gl2(make_pair(not_norm=False), unramified_lift(3))
    with pytest.raises(OutOfScope):
        bc_gl2(make_pair(base=base_field(2, 2)), unramified_lift(3, base=base_field(2, 2)))
    with pytest.raises(OutOfScope):
        fn_field = base_field(5, 5, char_zero=False)
        bc_gl2(make_pair(base=fn_field), unramified_lift(3, base=fn_field))
    with pytest.raises(OutOfScope):
        bc_gl2(make_pair(), unramified_lift(3, base=base_field(7, 7)))


def test_bc_gl2_unitarity_preserved():
    result = bc_gl2(make_pair(), unramified_lift(3))
    assert result.target_pair.xi.unitary


@given(st.sampled_from([1, 3, 5]), st.sampled_from([1, 3, 5]))
def test_bc_gl2_tower_coherence(f1, f2):
    pair = make_pair(conductor=3)
    first = bc_gl2(pair, unramified_lift(f1))
    lift2 = ExtensionData(
        unramified_lift(f1).top_field, e=1, f=f2, galois=True, cyclic=True
    )
    second = bc_gl2(first.target_pair, lift2)
    direct = bc_gl2(pair, unramified_lift(f1 * f2))
    assert second.degree * first.degree == direct.degree == f1 * f2
    assert second.conductor == direct.conductor == 3
    assert second.target_pair.quad.base == direct.target_pair.quad.base


def test_json_round_trip():
    pair = make_pair(conductor=2)
    again = AdmissiblePair.from_json(pair.to_json())
    assert again == pair
