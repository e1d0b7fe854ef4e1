import pytest
from sympy import primerange

from eisenflat.algebra.fields import fq_make
from eisenflat.breuil import (
    RankOneModule,
    descends_to_qp,
    modules_for_character,
    self_ext_dimensions,
    theoremZ_check,
)
from eisenflat.breuil.descent import exceptional_exponents
from eisenflat.errors import ParameterError


def test_descent_character_exponents():
    info = descends_to_qp(RankOneModule.of(fq_make(7, 1), 8, 4))
    assert info.character_exponents == (2, 5)
    assert (info.r, info.a) == (4, 1)


def test_odd_r_has_no_descent():
    assert descends_to_qp(RankOneModule.of(fq_make(7, 1), 8, 3)) is None


def test_scalar_outside_the_prime_field_has_no_descent():
    field = fq_make(7, 2)
    assert descends_to_qp(RankOneModule.of(field, 8, 4, field.gen())) is None


def test_descent_needs_e_equal_p_plus_one():
    with pytest.raises(ParameterError):
        descends_to_qp(RankOneModule.of(fq_make(7, 1), 6, 4))


@pytest.mark.parametrize("p,k,modules", [(7, 2, ((4, 1),)), (11, 3, ((6, 1),)), (7, 0, ((2, 1), (8, 1))), (7, 1, ((0, 1), (6, 1)))])
def test_modules_for_character_examples(p, k, modules):
    found = modules_for_character(p, k)
    assert found.modules == modules
    assert found.unique == (len(modules) == 1)


def test_uniqueness_exactly_off_the_exceptional_set():
    for p in primerange(3, 32):
        for k in range(p - 1):
            assert modules_for_character(p, k).unique == (k not in exceptional_exponents(p)), (p, k)


def test_character_range():
    with pytest.raises(ParameterError):
        modules_for_character(7, 6)


def test_self_ext_dimensions():
    assert self_ext_dimensions(RankOneModule.of(fq_make(7, 1), 8, 0)).plain == 1
    dims = self_ext_dimensions(RankOneModule.of(fq_make(7, 1), 8, 4), descent=True)
    assert dims.plain == 5
    assert dims.with_descent == 1
    assert dims.with_descent_quoted
    assert self_ext_dimensions(RankOneModule.of(fq_make(5, 1), 6, 4)).plain == 3


def test_self_ext_with_descent_needs_descent_data():
    with pytest.raises(ParameterError):
        self_ext_dimensions(RankOneModule.of(fq_make(7, 1), 8, 3), descent=True)
    dims = self_ext_dimensions(RankOneModule.of(fq_make(7, 1), 4, 2))
    assert dims.with_descent is None


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_no_self_extension_fails_to_be_killed_by_p(p):
    for k in range(p - 1):
        if k not in exceptional_exponents(p):
            assert theoremZ_check(p, k)


def test_exceptional_character_is_rejected():
    with pytest.raises(ParameterError):
        theoremZ_check(7, 0)
