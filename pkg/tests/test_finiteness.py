from fractions import Fraction

import pytest

from basechange.finiteness import (
    WindowTooSmall,
    candidate_generators,
    constructive_reduction,
    expand_expression,
    finiteness_certificate,
    linear_reduction,
    sorted_tuples,
)
from basechange.laurent import InvariantLaurentPoly


def test_sorted_tuples_enumeration():
    assert list(sorted_tuples(2, 0, 1)) == [(1, 1), (1, 0), (0, 0)]
    assert list(sorted_tuples(2, -1, 1, total=0)) == [(1, -1), (0, 0)]
    assert all(sum(t) == 3 for t in sorted_tuples(3, -2, 4, total=3))


def test_candidates_include_remainder_classes_and_inverse_product():
    cands = candidate_generators(2, 2)
    for cls in [(0, 0), (1, 0), (1, 1), (-2, -2)]:
        assert cls in cands
    # staircase extension beyond the remainder box
    assert (2, 1) in cands and (3, 1) in cands


def test_constructive_reduction_is_exact():
    for lam in [(3, 0), (4, 1), (6, -5), (0, -3), (5, 2, -1), (2, 2, 2)]:
        f = 2
        expr = constructive_reduction(lam, f)
        assert expand_expression(len(lam), expr) == InvariantLaurentPoly.orbit_sum(lam)
        for coeff in expr.values():
            assert all(x % f == 0 for cls in coeff.terms for x in cls)


def test_univariate_certificates_match_hand_computation():
    cert = finiteness_certificate(1, 2, 4)
    assert cert.generators == [(0,), (1,)]
    # t^3 = (t^2) * t
    assert cert.reductions[(3,)] == {
        (1,): InvariantLaurentPoly(1, {(2,): Fraction(1)})
    }
    assert cert.verify()

    cert = finiteness_certificate(1, 3, 6)
    assert cert.generators == [(0,), (1,), (2,)]
    assert set(cert.reductions) == {(k,) for k in range(-6, 7)}
    assert cert.verify()


def test_window_too_small_univariate():
    with pytest.raises(WindowTooSmall) as err:
        finiteness_certificate(1, 3, 1)
    assert err.value.suggested_window > 1


def test_r2_f2_certificate_has_at_most_four_generators():
    cert = finiteness_certificate(2, 2, 4)
    assert len(cert.generators) <= 4
    assert cert.verify()
    # the parity-obstructed class is a generator, not a reducible target
    assert (2, 1) in cert.generators


def test_pruned_candidates_carry_valid_expressions():
    cert = finiteness_certificate(2, 2, 6)
    assert cert.pruned, "some candidate must be redundant"
    for gamma, expr in cert.pruned.items():
        assert expand_expression(2, expr) == InvariantLaurentPoly.orbit_sum(gamma)
        assert set(expr) <= set(cert.generators)
    # the inverse product class reduces into the subring itself
    assert (-2, -2) in cert.pruned


def test_linear_reduction_finds_known_identity():
    # m_(3,0) = (t1^2 + t2^2) * m_(1,0) - m_(2,1)
    expr = linear_reduction((3, 0), [(0, 0), (1, 0), (1, 1), (2, 1)], 2, 6)
    assert expr is not None
    assert expand_expression(2, expr) == InvariantLaurentPoly.orbit_sum((3, 0))


def test_linear_reduction_respects_parity_obstruction():
    assert linear_reduction((2, 1), [(0, 0), (1, 0), (1, 1)], 2, 10) is None


def test_coefficient_window_is_respected():
    cert = finiteness_certificate(2, 3, 8)
    assert cert.max_coefficient_exponent() <= cert.coefficient_window
    for expr in cert.reductions.values():
        for coeff in expr.values():
            assert coeff.max_abs_exponent() <= cert.coefficient_window


def test_certificate_json_shape():
    cert = finiteness_certificate(2, 2, 4)
    payload = cert.to_json()
    assert payload["generators"][0] == [0, 0]
    assert payload["inverse_product"] == [-2, -2]
    some = payload["reductions"][0]["terms"]
    assert all("/" in term["coefficient"][0]["value"] for term in some if term["coefficient"])


def test_parameter_validation():
    with pytest.raises(ValueError):
        finiteness_certificate(4, 2, 4)
    with pytest.raises(ValueError):
        finiteness_certificate(2, 5, 4)
    with pytest.raises(ValueError):
        finiteness_certificate(2, 2, 0)
