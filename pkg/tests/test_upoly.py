import random

import pytest

from eisenflat.algebra.fields import fq_make
from eisenflat.algebra.upoly import UPoly, frobenius_twist, polys_from
from eisenflat.errors import FieldMismatchError, ParameterError


def _random_poly(rng, field, e, max_degree):
    coeffs = {d: field.element([rng.randrange(field.p) for _ in range(field.f)]) for d in range(max_degree)}
    return UPoly.from_coeffs(field, e, coeffs)


def test_twist_of_u_and_truncation():
    field = fq_make(3, 1)
    assert frobenius_twist(UPoly.monomial(field, 2, 1)) == UPoly.monomial(field, 2, 3)
    assert frobenius_twist(UPoly.monomial(field, 2, 2)).is_zero()


def test_twist_applies_frobenius_to_coefficients():
    field = fq_make(3, 2)
    c = field.element([1, 1])
    twisted = frobenius_twist(UPoly.monomial(field, 2, 1, c))
    assert twisted == UPoly.monomial(field, 2, 3, c ** 3)


@pytest.mark.parametrize("p,f,e", [(3, 1, 2), (3, 2, 4), (5, 1, 3), (5, 2, 2), (7, 1, 4)])
def test_twist_is_a_ring_map(p, f, e):
    rng = random.Random(1000 * p + 10 * f + e)
    field = fq_make(p, f)
    for _ in range(25):
        a = _random_poly(rng, field, e, e)
        b = _random_poly(rng, field, e, e)
        assert frobenius_twist(a * b) == frobenius_twist(a) * frobenius_twist(b)
        assert frobenius_twist(a + b) == frobenius_twist(a) + frobenius_twist(b)


@pytest.mark.parametrize("p,e", [(3, 2), (3, 5), (5, 4), (7, 6)])
def test_division_lift_is_invisible_after_twist(p, e):
    rng = random.Random(p * e)
    field = fq_make(p, 1)
    n = e * p
    for r in range(e + 1):
        f = _random_poly(rng, field, e, n).shift(r)
        quotient = f.div_u_power(r)
        top = UPoly.from_coeffs(field, e, {d: rng.randrange(p) for d in range(n - r, n)})
        assert (quotient + top).frobenius_twist() == quotient.frobenius_twist()
        assert quotient.shift(r) == f


def test_div_u_power_rejects_elements_outside_the_ideal():
    field = fq_make(3, 1)
    with pytest.raises(ParameterError):
        UPoly.monomial(field, 2, 1).div_u_power(2)
    with pytest.raises(ParameterError):
        UPoly.monomial(field, 2, 4).div_u_power(3)


def test_inspection_helpers():
    field = fq_make(5, 1)
    f = UPoly.from_coeffs(field, 3, {2: 1, 7: 4})
    assert f.valuation() == 2
    assert list(f.support()) == [2, 7]
    assert f.in_ideal(2) and not f.in_ideal(3)
    assert not f.is_unit()
    assert UPoly.zero(field, 3).valuation() is None
    assert str(f) == "u^2 + 4u^7"


def test_rejects_wild_ramification_and_mixed_fields():
    with pytest.raises(ParameterError):
        UPoly.zero(fq_make(3, 1), 3)
    with pytest.raises(FieldMismatchError):
        UPoly.zero(fq_make(3, 1), 2) + UPoly.zero(fq_make(5, 1), 2)


def test_polys_from_decodes_coefficient_major_vectors():
    field = fq_make(3, 2)
    vec = [0] * 12
    vec[2 * 3] = 1  # u^3 coefficient, first coordinate
    vec[2 * 3 + 1] = 2
    (poly,) = polys_from(field, 2, [vec])
    assert poly == UPoly.monomial(field, 2, 3, field.element([1, 2]))
