from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from basechange.extquot import (
    OrbitComponent,
    TorusPoint,
    base_change_point,
    extended_quotient,
    fixed_component,
    partitions_of,
    pullback_invariant,
    satake_bc,
    steinberg_curve_bc,
)
from basechange.gaussian import GaussianRational, I
from basechange.laurent import InvariantLaurentPoly, sort_class


def partition_count(n):
    """Independent oracle: Euler's pentagonal-number recurrence."""
    table = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = 1 if k % 2 == 1 else -1
            if g1 <= m:
                total += sign * table[m - g1]
            if g2 <= m:
                total += sign * table[m - g2]
            k += 1
        table[m] = total
    return table[n]


def gaussian(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


nonzero_gaussians = st.builds(
    GaussianRational,
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
).filter(bool)


# -- partitions and components ------------------------------------------------


def test_partition_order_for_four():
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partition_count_oracle_values():
    assert [partition_count(n) for n in range(1, 8)] == [1, 2, 3, 5, 7, 11, 15]


def test_extended_quotient_gl4():
    eq = extended_quotient(4)
    assert [c.sym_powers for c in eq.components] == [(1,), (1, 1), (2,), (1, 2), (4,)]
    assert [c.describe() for c in eq.components] == [
        "Sym^1",
        "Sym^1 x Sym^1",
        "Sym^2",
        "Sym^1 x Sym^2",
        "Sym^4",
    ]


def test_extended_quotient_small_and_bounds():
    assert len(extended_quotient(1).components) == 1
    assert len(extended_quotient(5).components) == partition_count(5) == 7
    with pytest.raises(ValueError):
        extended_quotient(0)
    with pytest.raises(ValueError):
        extended_quotient(31)


@settings(deadline=None)
@given(st.integers(1, 30))
def test_component_count_matches_pentagonal_oracle(n):
    assert len(extended_quotient(n).components) == partition_count(n)


@given(st.integers(1, 12))
def test_component_weights_and_dimensions(n):
    for comp in extended_quotient(n).components:
        assert sum(size * mult for size, mult in comp.distinct_parts) == n
        assert comp.dimension == len(comp.partition)


def test_fixed_component_examples():
    assert fixed_component(4, (1, 1, 1, 1)).sym_powers == (4,)
    assert fixed_component(4, (4,)).sym_powers == (1,)
    assert fixed_component(4, (2, 2)).sym_powers == (2,)
    with pytest.raises(ValueError):
        fixed_component(4, (3, 2))
    with pytest.raises(ValueError):
        fixed_component(4, (1, 3))


# -- points and base change ----------------------------------------------------


def test_torus_point_validation():
    comp = fixed_component(4, (2, 1, 1))  # Sym^1 x Sym^2
    good = TorusPoint.make([[gaussian(2)], [gaussian(3), gaussian(1, 1)]])
    assert good.lies_on(comp)
    assert not TorusPoint.make([[gaussian(2)]]).lies_on(comp)
    with pytest.raises(ValueError):
        TorusPoint.make([[gaussian(0)]])


def test_base_change_point_examples():
    sym1 = fixed_component(1, (1,))
    assert base_change_point(sym1, TorusPoint.make([[I]]), 2) == TorusPoint.make(
        [[gaussian(-1)]]
    )
    sym2 = fixed_component(2, (1, 1))
    point = TorusPoint.make([[gaussian(3), gaussian(Fraction(1, 3))]])
    # oracle: direct exact exponentiation of each coordinate
    assert base_change_point(sym2, point, 2) == TorusPoint.make(
        [[gaussian(9), gaussian(Fraction(1, 9))]]
    )
    assert base_change_point(sym2, point, 1) == point


@given(st.lists(nonzero_gaussians, min_size=2, max_size=2), st.permutations([0, 1]), st.integers(1, 4))
def test_base_change_multiset_invariance(coords, perm, f):
    comp = fixed_component(2, (1, 1))
    a = TorusPoint.make([coords])
    b = TorusPoint.make([[coords[i] for i in perm]])
    assert a == b
    assert base_change_point(comp, a, f) == base_change_point(comp, b, f)


@given(nonzero_gaussians, st.integers(1, 3), st.integers(1, 3))
def test_base_change_tower_compatibility(z, f, g):
    comp = fixed_component(1, (1,))
    point = TorusPoint.make([[z]])
    once = base_change_point(comp, base_change_point(comp, point, f), g)
    assert once == base_change_point(comp, point, f * g)


def test_unit_circle_preserved():
    z = GaussianRational(Fraction(3, 5), Fraction(4, 5))
    point = TorusPoint.make([[z, z.conjugate()]])
    assert point.on_unit_torus()
    image = base_change_point(fixed_component(2, (1, 1)), point, 3)
    assert image.on_unit_torus()


def test_steinberg_examples():
    assert steinberg_curve_bc(gaussian(2), 3) == gaussian(8)
    assert steinberg_curve_bc(I, 4) == gaussian(1)
    # oracle: (1+i)^2 = 1 + 2i + i^2 = 2i by direct multiplication
    assert gaussian(1, 1) * gaussian(1, 1) == gaussian(0, 2)
    assert steinberg_curve_bc(gaussian(1, 1), 2) == gaussian(0, 2)


def test_steinberg_matches_base_change_point():
    z = gaussian(2, -1)
    via_point = base_change_point(
        fixed_component(1, (1,)), TorusPoint.make([[z]]), 5
    )
    assert via_point == TorusPoint.make([[steinberg_curve_bc(z, 5)]])


def test_satake_examples():
    point = TorusPoint.make([[gaussian(1), I, gaussian(2)]])
    assert satake_bc(point, 1) == point
    fourth_roots = TorusPoint.make([[I, gaussian(-1), gaussian(0, -1)]])
    assert satake_bc(fourth_roots, 4) == TorusPoint.make(
        [[gaussian(1), gaussian(1), gaussian(1)]]
    )
    generic = TorusPoint.make([[gaussian(3), gaussian(Fraction(1, 3))]])
    assert satake_bc(generic, 2) == TorusPoint.make(
        [[gaussian(9), gaussian(Fraction(1, 9))]]
    )
    with pytest.raises(ValueError):
        satake_bc(TorusPoint.make([[gaussian(1)], [gaussian(2)]]), 2)


# -- pullback on invariant rings -------------------------------------------------


def test_pullback_examples():
    t = InvariantLaurentPoly.orbit_sum((1,))
    assert pullback_invariant(1, 2, t) == InvariantLaurentPoly.orbit_sum((2,))
    e1 = InvariantLaurentPoly.orbit_sum((1, 0))
    # oracle: expand and symmetrise t1^3 + t2^3 directly
    expected = InvariantLaurentPoly.orbit_sum((3, 0))
    assert pullback_invariant(2, 3, e1) == expected
    one = InvariantLaurentPoly.one(2)
    assert pullback_invariant(2, 5, one) == one


def invariant_polys(r):
    coeffs = st.fractions(min_value=-4, max_value=4, max_denominator=4).filter(bool)
    classes = st.tuples(*([st.integers(-6, 6)] * r)).map(sort_class)
    return st.lists(st.tuples(classes, coeffs), max_size=3).map(
        lambda ts: InvariantLaurentPoly(r, {e: c for e, c in ts})
    )


@given(invariant_polys(2), invariant_polys(2), st.integers(1, 4))
def test_pullback_is_ring_homomorphism(a, b, f):
    assert pullback_invariant(2, f, a + b) == pullback_invariant(2, f, a) + pullback_invariant(2, f, b)
    assert pullback_invariant(2, f, a * b) == pullback_invariant(2, f, a) * pullback_invariant(2, f, b)
    assert pullback_invariant(2, f, InvariantLaurentPoly.one(2)) == InvariantLaurentPoly.one(2)
